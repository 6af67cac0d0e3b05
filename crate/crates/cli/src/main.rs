use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rootdata::cartan::{cartan_of_types, fundamental_group, parse_type, standard_cartan, validate_cartan, CartanMatrix};
use rootdata::generic_group::{
    dual_complete, ennola, from_isogeny, group_order, order_polynomial, parse_twisted_type, standard_complete,
    table_check, toric_order, type_label, CompleteRootDatum, Method, OrderPolynomial,
};
use rootdata::isogeny::{
    classify_isogeny, exceptional_catalog, regular_embedding_build, regular_embedding_check, validate_isogeny,
    ExceptionalType, IsogenyClass, MorphismCheckReport,
};
use rootdata::rootdatum::{
    center_is_connected, datum_from_lattice, direct_product, dual_datum, enumerate_isogeny_classes, format_word,
    isomorphic, parse_word, x_mod_zr_invariants, IsoVerdict, RootDatum, WeylGroup, DEFAULT_WEYL_CAP,
};
use rootdata::{Error, IntMat, QuadNum};
use rootdata_cli::format::{datum_arg, mat_to_json, parse_json, JInt};
use rootdata_cli::{CompleteFile, DatumFile, IsogenyFile, MorphismFile};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "rootdata", version, about = "Root data, p-isogenies and order polynomials")]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Largest Weyl group to enumerate
    #[arg(long, global = true, env = "ROOTDATA_WEYL_CAP")]
    cap: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Cartan(CartanCmd),
    #[command(subcommand)]
    Datum(DatumCmd),
    #[command(subcommand)]
    Isogeny(IsogenyCmd),
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Order polynomial of a complete root datum
    Order(OrderArgs),
    /// Ennola dual (φ₀ ↦ −φ₀)
    Ennola(CompleteSrc),
    /// Dual complete root datum
    Dualc(CompleteSrc),
    /// Order of the maximal torus of type w
    Toric {
        #[command(flatten)]
        src: CompleteSrc,
        /// Word in the generators, e.g. 121
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand)]
enum CartanCmd {
    /// Type labels and fundamental group
    Classify {
        /// JSON file holding a matrix, or {"cartan": matrix}
        file: Option<PathBuf>,
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DatumCmd {
    /// Validate a datum (file, catalog name, sc:TYPE or ad:TYPE) and emit its file
    Build {
        spec: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Summary: type, roots, X/ℤR
    Show { spec: String },
    Dual { spec: String },
    Product { a: String, b: String },
    /// Isomorphism verdict with witness (P, P°)
    Iso { a: String, b: String },
    /// X/ℤR and connectedness of the center
    Center {
        spec: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// One datum per subgroup of the fundamental group
    Classes {
        /// Cartan type such as D4 or A1xB2
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Subcommand)]
enum IsogenyCmd {
    /// Validate an isogeny file and classify it
    Check { file: PathBuf },
    /// Emit an exceptional isogeny (C2, G2, F4, BnCn)
    Catalog {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Rank for BnCn
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Subcommand)]
enum EmbedCmd {
    /// Regular-embedding conditions for a morphism file
    Check { file: PathBuf },
    /// Construct a regular embedding of a semisimple datum
    Build {
        spec: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args)]
struct CompleteSrc {
    /// Complete-datum file, or an isogeny file of Steinberg type
    file: Option<PathBuf>,
    /// Table type such as 2B2, or a family letter with --rank
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Use the simply connected datum (default adjoint)
    #[arg(long)]
    sc: bool,
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    src: CompleteSrc,
    /// Evaluate at q = p^a/b
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    factored: bool,
    #[arg(long, conflicts_with_all = ["bn", "both"])]
    molien: bool,
    #[arg(long, conflicts_with = "both")]
    bn: bool,
    #[arg(long)]
    both: bool,
    /// Compare with the built-in table of simple types
    #[arg(long)]
    table_check: bool,
}

/// A failed check that is not an error of the library.
struct Rejected(String);

enum Fail {
    Lib(Error),
    Rejected(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<Rejected> for Fail {
    fn from(r: Rejected) -> Self {
        Fail::Rejected(r.0)
    }
}

type Out = Result<(), Fail>;

struct Ctx {
    json: bool,
    cap: usize,
}

impl Ctx {
    /// Prints the JSON value with --json, the text otherwise.
    fn emit(&self, v: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        } else {
            println!("{}", text());
        }
    }
}

fn int(x: &BigInt) -> Value {
    serde_json::to_value(JInt(x.clone())).unwrap()
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn file_json<T: serde::Serialize>(t: &T) -> String {
    serde_json::to_string_pretty(t).unwrap()
}

fn type_string(c: &CartanMatrix) -> String {
    let labels: Vec<String> = c.classify().iter().map(|l| l.name()).collect();
    if labels.is_empty() {
        "T".into()
    } else {
        labels.join("x")
    }
}

fn quotient_string(free: usize, tors: &[BigInt]) -> String {
    let mut parts = Vec::new();
    if free > 0 {
        parts.push(format!("Z^{free}"));
    }
    parts.extend(tors.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn type_with_rank(ty: &str, rank: Option<usize>) -> String {
    match rank {
        Some(n) if !ty.chars().last().is_some_and(|c| c.is_ascii_digit()) => format!("{ty}{n}"),
        _ => ty.to_string(),
    }
}

fn cartan_of(ty: &str) -> Result<CartanMatrix, Error> {
    let types = ty.split(['x', '*']).map(parse_type).collect::<Result<Vec<_>, _>>()?;
    cartan_of_types(&types)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// The complete datum and, for isogeny files, the q it comes with.
fn complete_of(src: &CompleteSrc) -> Result<(CompleteRootDatum, Option<QuadNum>), Error> {
    if let Some(path) = &src.file {
        let text = read(path)?;
        let what = path.display().to_string();
        let v: Value = parse_json(&text, &what)?;
        if v.get("phi0_num").is_some() {
            let f: CompleteFile = parse_json(&text, &what)?;
            return Ok((f.resolve()?, None));
        }
        let f: IsogenyFile = parse_json(&text, &what)?;
        let (s, t, p, pc) = f.resolve()?;
        let iso = validate_isogeny(&s, &t, f.p, &p, &pc)?;
        let (crd, q) = from_isogeny(&iso)?;
        return Ok((crd, Some(q)));
    }
    let ty = src.ty.as_deref().ok_or_else(|| Error::Parse("give a file or --type".into()))?;
    let key = parse_twisted_type(&type_with_rank(ty, src.rank))?;
    Ok((standard_complete(key, src.sc)?, None))
}

fn cartan_cmd(ctx: &Ctx, cmd: CartanCmd) -> Out {
    let CartanCmd::Classify { file, ty, rank } = cmd;
    let c = match (file, ty) {
        (Some(path), _) => {
            let v: Value = parse_json(&read(&path)?, &path.display().to_string())?;
            let m = v.get("cartan").cloned().unwrap_or(v);
            let rows: Vec<Vec<JInt>> =
                serde_json::from_value(m).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let n = rows.len();
            validate_cartan(&rootdata_cli::format::mat_from_json(&rows, n, "cartan")?)?
        }
        (None, Some(t)) => match rank {
            Some(_) => {
                let (f, n) = parse_type(&type_with_rank(&t, rank))?;
                standard_cartan(f, n)?
            }
            None => cartan_of(&t)?,
        },
        (None, None) => return Err(Error::Parse("give a file or --type".into()).into()),
    };
    let labels: Vec<String> = c.classify().iter().map(|l| l.name()).collect();
    let fg = fundamental_group(&c);
    ctx.emit(json!({"types": labels, "fundamental_group": ints(&fg), "size": c.size()}), || {
        let fgs: Vec<String> = fg.iter().map(|d| d.to_string()).collect();
        format!("type: {}\nfundamental group: [{}]", type_string(&c), fgs.join(","))
    });
    Ok(())
}

fn datum_summary(d: &RootDatum) -> (Value, String) {
    let (free, tors) = x_mod_zr_invariants(d);
    let v = json!({
        "type": type_string(d.cartan()),
        "rank": d.rank(),
        "base_size": d.base_size(),
        "num_roots": d.num_roots(),
        "roots": d.roots().iter().map(|r| ints(r)).collect::<Vec<_>>(),
        "coroots": d.coroots().iter().map(|r| ints(r)).collect::<Vec<_>>(),
        "x_mod_zr": {"free_rank": free, "torsion": ints(&tors)},
    });
    let text = format!(
        "type: {}\nrank: {}  semisimple rank: {}\nroots: {}\nX/ZR: {}",
        type_string(d.cartan()),
        d.rank(),
        d.base_size(),
        d.num_roots(),
        quotient_string(free, &tors)
    );
    (v, text)
}

fn verdict_json(v: &IsoVerdict) -> Value {
    match v {
        IsoVerdict::Isomorphic { p, pcirc } => json!({"verdict": "isomorphic", "P": mat_to_json(p), "Pcirc": mat_to_json(pcirc)}),
        IsoVerdict::NotIsomorphic => json!({"verdict": "not isomorphic"}),
        IsoVerdict::Indeterminate => json!({"verdict": "indeterminate"}),
    }
}

fn datum_cmd(ctx: &Ctx, cmd: DatumCmd) -> Out {
    match cmd {
        DatumCmd::Build { spec, name } => {
            let d = datum_arg(&spec)?;
            println!("{}", file_json(&DatumFile::from_datum(&d, name)));
        }
        DatumCmd::Show { spec } => {
            let (v, t) = datum_summary(&datum_arg(&spec)?);
            ctx.emit(v, || t);
        }
        DatumCmd::Dual { spec } => {
            println!("{}", file_json(&DatumFile::from_datum(&dual_datum(&datum_arg(&spec)?), None)));
        }
        DatumCmd::Product { a, b } => {
            let d = direct_product(&datum_arg(&a)?, &datum_arg(&b)?);
            println!("{}", file_json(&DatumFile::from_datum(&d, None)));
        }
        DatumCmd::Iso { a, b } => {
            let v = isomorphic(&datum_arg(&a)?, &datum_arg(&b)?);
            ctx.emit(verdict_json(&v), || match &v {
                IsoVerdict::Isomorphic { p, pcirc } => {
                    format!("isomorphic\nP (X2 -> X1):\n{}\nPcirc:\n{}", mat_text(p), mat_text(pcirc))
                }
                IsoVerdict::NotIsomorphic => "not isomorphic".into(),
                IsoVerdict::Indeterminate => "indeterminate (search bound reached)".into(),
            });
        }
        DatumCmd::Center { spec, p } => {
            let d = datum_arg(&spec)?;
            let (free, tors) = x_mod_zr_invariants(&d);
            let connected = center_is_connected(&d, p.unwrap_or(1));
            ctx.emit(json!({"free_rank": free, "torsion": ints(&tors), "p": p, "center_connected": connected}), || {
                let what = match p {
                    Some(p) => format!("no {p}'-torsion in X/ZR"),
                    None => "X/ZR torsion-free".into(),
                };
                format!("X/ZR: {}\n{what}: {connected}", quotient_string(free, &tors))
            });
        }
        DatumCmd::Classes { ty, rank } => {
            let c = cartan_of(&type_with_rank(&ty, rank))?;
            let mut out = Vec::new();
            let mut lines = Vec::new();
            for (spec, sub) in enumerate_isogeny_classes(&c) {
                let d = datum_from_lattice(&spec)?;
                let (_, tors) = x_mod_zr_invariants(&d);
                lines.push(format!(
                    "subgroup of order {}: X/ZR = {}",
                    sub.iter().fold(BigInt::from(1), |a, b| a * b),
                    quotient_string(0, &tors)
                ));
                out.push(json!({"subgroup": ints(&sub), "x_mod_zr": ints(&tors), "datum": DatumFile::from_datum(&d, None)}));
            }
            ctx.emit(Value::Array(out), || lines.join("\n"));
        }
    }
    Ok(())
}

fn mat_text(m: &IntMat) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| format!("{x:>4}")).collect::<Vec<_>>().join(""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn class_json(c: &IsogenyClass) -> Value {
    let endo = c.endo.as_ref().map(|e| {
        json!({
            "frobenius": e.frobenius,
            "steinberg": e.steinberg.map(|(d, m)| json!({"d": d, "m": m})),
            "q": e.q.as_ref().map(q_string),
            "twist": e.twist.to_string(),
            "ordinary": e.ordinary,
        })
    });
    json!({"central": c.central, "isomorphism": c.isomorphism, "endo": endo})
}

fn q_string(q: &QuadNum) -> String {
    q.to_power_string().unwrap_or_else(|| q.to_string())
}

fn isogeny_cmd(ctx: &Ctx, cmd: IsogenyCmd) -> Out {
    match cmd {
        IsogenyCmd::Check { file } => {
            let f: IsogenyFile = parse_json(&read(&file)?, &file.display().to_string())?;
            let (s, t, p, pc) = f.resolve()?;
            let iso = validate_isogeny(&s, &t, f.p, &p, &pc)?;
            let c = classify_isogeny(&iso);
            let mut v = class_json(&c);
            v["valid"] = json!(true);
            v["q_simple"] = ints(iso.q_simple());
            v["dagger"] = json!(iso.dagger().iter().map(|s| s + 1).collect::<Vec<_>>());
            ctx.emit(v, || {
                let mut out = vec!["valid p-isogeny".to_string()];
                let q: Vec<String> = iso.q_simple().iter().map(|x| x.to_string()).collect();
                out.push(format!("q on simple roots: [{}]", q.join(",")));
                out.push(format!("central: {}  isomorphism: {}", c.central, c.isomorphism));
                if let Some(e) = &c.endo {
                    match e.frobenius {
                        Some(m) => out.push(format!("frobenius: p^{m}")),
                        None => out.push("frobenius: no".into()),
                    }
                    match e.steinberg {
                        Some((d, m)) => out.push(format!("steinberg: P^{d} = p^{m}")),
                        None => out.push("steinberg: no".into()),
                    }
                    if let Some(q) = &e.q {
                        out.push(format!("q = {}", q_string(q)));
                    }
                    out.push(format!("{}, ordinary: {}", e.twist, e.ordinary));
                }
                out.join("\n")
            });
        }
        IsogenyCmd::Catalog { ty, m, rank } => {
            let kind = ExceptionalType::parse(&ty, rank)?;
            println!("{}", file_json(&IsogenyFile::from_isogeny(&exceptional_catalog(kind, m)?)));
        }
    }
    Ok(())
}

fn report_json(r: &MorphismCheckReport) -> Value {
    json!({
        "is_hom_of_root_data": r.is_hom_of_root_data,
        "is_surjective": r.is_surjective,
        "cokernel_invariants": ints(&r.cokernel_invariants),
        "cokernel_free_rank": r.cokernel_free_rank,
        "no_p_prime_torsion": r.no_p_prime_torsion,
    })
}

fn embed_cmd(ctx: &Ctx, cmd: EmbedCmd) -> Out {
    match cmd {
        EmbedCmd::Check { file } => {
            let f: MorphismFile = parse_json(&read(&file)?, &file.display().to_string())?;
            let (s, t, p) = f.resolve()?;
            let (ok, rep) = regular_embedding_check(&s, &t, &p, f.p);
            let mut v = report_json(&rep);
            v["regular_embedding"] = json!(ok);
            ctx.emit(v, || {
                format!(
                    "homomorphism of root data: {}\nsurjective: {}\nno p'-torsion in X'/ZR': {}\nregular embedding: {ok}",
                    rep.is_hom_of_root_data, rep.is_surjective, rep.no_p_prime_torsion
                )
            });
            if !ok {
                return Err(Rejected("not a regular embedding".into()).into());
            }
        }
        EmbedCmd::Build { spec, p } => {
            let d = datum_arg(&spec)?;
            let (d2, incl) = regular_embedding_build(&d, p)?;
            let f = MorphismFile {
                p,
                pmat: mat_to_json(&incl),
                source: rootdata_cli::DatumRef::Inline(DatumFile::from_datum(&d2, None)),
                target: rootdata_cli::DatumRef::Inline(DatumFile::from_datum(&d, None)),
            };
            println!("{}", file_json(&f));
        }
    }
    Ok(())
}

fn factored_string(o: &OrderPolynomial) -> String {
    o.factored.to_string()
}

fn order_cmd(ctx: &Ctx, a: OrderArgs) -> Out {
    let (crd, q_default) = complete_of(&a.src)?;
    if a.table_check {
        let method = if a.molien { Method::Molien } else { Method::Bn };
        let r = table_check(&crd, method, ctx.cap)?;
        ctx.emit(
            json!({"label": r.label, "matches": r.matches, "expected": r.expected.to_string(),
                   "computed": r.computed.poly.to_string(), "diff": r.diff().to_string(),
                   "table_sourced": r.computed.table_sourced}),
            || {
                if r.matches {
                    format!("{}: match\n{}", r.label, r.expected)
                } else {
                    format!("{}: MISMATCH\nexpected {}\ncomputed {}\ndiff {}", r.label, r.expected, r.computed, r.diff())
                }
            },
        );
        return if r.matches { Ok(()) } else { Err(Rejected("table mismatch".into()).into()) };
    }
    let methods: Vec<Method> = if a.both {
        vec![Method::Bn, Method::Molien]
    } else if a.molien {
        vec![Method::Molien]
    } else {
        vec![Method::Bn]
    };
    let results = methods.iter().map(|&m| order_polynomial(&crd, m, ctx.cap)).collect::<Result<Vec<_>, _>>()?;
    let o = &results[0];
    let agree = results.iter().all(|r| r.poly == o.poly);
    let q = a.q.as_deref().map(QuadNum::parse_power).transpose()?.or(q_default);
    let value = match &q {
        Some(q) => Some(group_order(&crd, o, q)?),
        None => None,
    };
    let mut v = json!({
        "polynomial": o.poly.to_string(),
        "coefficients": o.poly.int_coeffs().map(|c| ints(&c)),
        "table_sourced": o.table_sourced,
        "type": label_of(&crd),
    });
    if a.factored {
        v["factored"] = json!(factored_string(o));
    }
    if a.both {
        v["bn_equals_molien"] = json!(agree);
    }
    if let (Some(q), Some(x)) = (&q, &value) {
        v["q"] = json!(q_string(q));
        v["value"] = int(x);
    }
    ctx.emit(v, || {
        let mut out = Vec::new();
        match &value {
            Some(x) if a.factored => out.extend([factored_string(o), x.to_string()]),
            Some(x) => out.push(x.to_string()),
            None if a.factored => out.push(factored_string(o)),
            None => out.push(o.poly.to_string()),
        }
        if o.table_sourced {
            out.push("(from the table; raise --cap to recompute)".into());
        }
        if a.both {
            out.push(format!("bn = molien: {agree}"));
        }
        out.join("\n")
    });
    if !agree {
        return Err(Rejected("bn and Molien disagree".into()).into());
    }
    Ok(())
}

fn toric_cmd(ctx: &Ctx, src: CompleteSrc, w: String) -> Out {
    let (crd, _) = complete_of(&src)?;
    let word = parse_word(&w)?;
    let wg = WeylGroup::new(crd.datum(), ctx.cap)?;
    let e = wg.element_of_word(&word)?;
    let t = toric_order(&crd, &word)?;
    let reduced = format_word(&wg.word(e));
    ctx.emit(json!({"word": reduced, "length": wg.length(e), "torus_order": t.to_string()}), || {
        format!("w = {reduced}\n{t}")
    });
    Ok(())
}

fn run(cli: Cli) -> Out {
    let ctx = Ctx { json: cli.json, cap: cli.cap.unwrap_or(DEFAULT_WEYL_CAP) };
    match cli.cmd {
        Cmd::Cartan(c) => cartan_cmd(&ctx, c),
        Cmd::Datum(c) => datum_cmd(&ctx, c),
        Cmd::Isogeny(c) => isogeny_cmd(&ctx, c),
        Cmd::Embed(c) => embed_cmd(&ctx, c),
        Cmd::Order(a) => order_cmd(&ctx, a),
        Cmd::Ennola(src) => {
            let (crd, _) = complete_of(&src)?;
            println!("{}", file_json(&CompleteFile::from_complete(&ennola(&crd)?)));
            Ok(())
        }
        Cmd::Dualc(src) => {
            let (crd, _) = complete_of(&src)?;
            println!("{}", file_json(&CompleteFile::from_complete(&dual_complete(&crd)?)));
            Ok(())
        }
        Cmd::Toric { src, w } => toric_cmd(&ctx, src, w),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Rejected(msg)) => {
            eprintln!("rootdata: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Lib(e)) => {
            if json {
                println!("{}", json!({"error": e.to_string(), "exit_code": exit_code(&e)}));
            }
            eprintln!("rootdata: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn label_of(crd: &CompleteRootDatum) -> Option<String> {
    rootdata::generic_group::table_key(crd).ok().map(type_label)
}
