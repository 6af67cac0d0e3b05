//! JSON documents for data, isogenies and complete data.
//!
//! Integers whose magnitude exceeds 2^53 are written as decimal strings so
//! that any JSON reader keeps them exact; both forms are accepted on input.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rootdata::cartan::{cartan_of_types, parse_type, Family};
use rootdata::generic_group::CompleteRootDatum;
use rootdata::isogeny::PIsogeny;
use rootdata::rootdatum::{adjoint_datum, build_datum, catalog_by_name, sc_datum, RootDatum};
use rootdata::{Error, IntMat, QuadMat, QuadNum, Result};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const SAFE: i64 = 1 << 53;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JInt(pub BigInt);

impl Serialize for JInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.abs() <= SAFE => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JInt, E> {
                Ok(JInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JInt, E> {
                Ok(JInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JInt, E> {
                v.trim().parse::<BigInt>().map(JInt).map_err(|_| E::custom(format!("bad integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

pub type JMat = Vec<Vec<JInt>>;

pub fn mat_to_json(m: &IntMat) -> JMat {
    m.to_rows().into_iter().map(|r| r.into_iter().map(JInt).collect()).collect()
}

pub fn mat_from_json(rows: &JMat, cols: usize, what: &str) -> Result<IntMat> {
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("{what}: every row must have {cols} entries")));
    }
    IntMat::from_rows(rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect(), cols)
}

fn width(rows: &JMat) -> usize {
    rows.first().map_or(0, |r| r.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub base_size: usize,
    #[serde(rename = "A")]
    pub a: JMat,
    #[serde(rename = "Acheck")]
    pub acheck: JMat,
}

impl DatumFile {
    pub fn from_datum(d: &RootDatum, name: Option<String>) -> Self {
        DatumFile { name, rank: d.rank(), base_size: d.base_size(), a: mat_to_json(d.a()), acheck: mat_to_json(d.acheck()) }
    }

    pub fn to_datum(&self) -> Result<RootDatum> {
        if self.a.len() != self.base_size || self.acheck.len() != self.base_size {
            return Err(Error::Parse(format!("A and Acheck must have base_size = {} rows", self.base_size)));
        }
        let a = mat_from_json(&self.a, self.rank, "A")?;
        let ach = mat_from_json(&self.acheck, self.rank, "Acheck")?;
        build_datum(&a, &ach)
    }
}

/// Either an inline datum or a name: "GL(3)", "Sp(4)", "sc:G2", "ad:A1xB2".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumRef {
    Named(String),
    Inline(DatumFile),
}

/// Resolves "sc:TYPE", "ad:TYPE" or a catalog name.
pub fn named_datum(s: &str) -> Result<RootDatum> {
    let s = s.trim();
    if let Some((form, ty)) = s.split_once(':') {
        let types: Vec<(Family, usize)> = ty.split(['x', '*']).map(parse_type).collect::<Result<_>>()?;
        let c = cartan_of_types(&types)?;
        return match form.to_ascii_lowercase().as_str() {
            "sc" => Ok(sc_datum(&c)),
            "ad" => Ok(adjoint_datum(&c)),
            _ => Err(Error::Parse(format!("expected sc: or ad: before the type, got {form:?}"))),
        };
    }
    catalog_by_name(s)
}

impl DatumRef {
    pub fn resolve(&self) -> Result<RootDatum> {
        match self {
            DatumRef::Named(s) => named_datum(s),
            DatumRef::Inline(f) => f.to_datum(),
        }
    }
}

/// A datum named on the command line: a file path, or a name as in [`DatumRef`].
pub fn datum_arg(s: &str) -> Result<RootDatum> {
    if Path::new(s).is_file() {
        let text = std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        let r: DatumRef = parse_json(&text, s)?;
        return r.resolve();
    }
    named_datum(s)
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// P: X′ → X together with P° for a p-isogeny.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyFile {
    pub p: u64,
    #[serde(rename = "P")]
    pub pmat: JMat,
    #[serde(rename = "Pcirc")]
    pub pcirc: JMat,
    pub source: DatumRef,
    pub target: DatumRef,
}

impl IsogenyFile {
    pub fn from_isogeny(f: &PIsogeny) -> Self {
        IsogenyFile {
            p: f.p(),
            pmat: mat_to_json(f.matrix()),
            pcirc: mat_to_json(f.pcirc()),
            source: DatumRef::Inline(DatumFile::from_datum(f.source(), None)),
            target: DatumRef::Inline(DatumFile::from_datum(f.target(), None)),
        }
    }

    pub fn resolve(&self) -> Result<(RootDatum, RootDatum, IntMat, IntMat)> {
        let (s, t) = (self.source.resolve()?, self.target.resolve()?);
        let p = mat_from_json(&self.pmat, width(&self.pmat), "P")?;
        let pc = mat_from_json(&self.pcirc, width(&self.pcirc), "Pcirc")?;
        Ok((s, t, p, pc))
    }
}

/// A lattice map X′ → X for the regular-embedding check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismFile {
    pub p: u64,
    #[serde(rename = "P")]
    pub pmat: JMat,
    pub source: DatumRef,
    pub target: DatumRef,
}

impl MorphismFile {
    pub fn resolve(&self) -> Result<(RootDatum, RootDatum, IntMat)> {
        let (s, t) = (self.source.resolve()?, self.target.resolve()?);
        let cols = if self.pmat.is_empty() { s.rank() } else { width(&self.pmat) };
        Ok((s, t, mat_from_json(&self.pmat, cols, "P")?))
    }
}

/// φ₀ with entries (num + sqrt·√rad)/den.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteFile {
    pub datum: DatumRef,
    pub phi0_num: JMat,
    pub phi0_rad: u64,
    pub phi0_den: JInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi0_sqrt: Option<JMat>,
}

impl CompleteFile {
    pub fn from_complete(crd: &CompleteRootDatum) -> Self {
        let phi = crd.phi0();
        let den = phi.data().iter().fold(BigInt::one(), |acc, x| num_integer_lcm(&acc, x.den()));
        let rad = phi.data().iter().map(|x| x.radicand()).find(|&r| r != 0).unwrap_or(0);
        let scaled = |part: fn(&QuadNum) -> &BigInt| -> JMat {
            (0..phi.rows())
                .map(|i| (0..phi.cols()).map(|j| {
                    let x = phi.get(i, j);
                    JInt(part(x) * (&den / x.den()))
                }).collect())
                .collect()
        };
        let sqrt = scaled(QuadNum::b);
        let has_sqrt = sqrt.iter().flatten().any(|x| !x.0.is_zero());
        CompleteFile {
            datum: DatumRef::Inline(DatumFile::from_datum(crd.datum(), None)),
            phi0_num: scaled(QuadNum::a),
            phi0_rad: if has_sqrt { rad } else { 0 },
            phi0_den: JInt(den),
            phi0_sqrt: has_sqrt.then_some(sqrt),
        }
    }

    pub fn phi0(&self, n: usize) -> Result<QuadMat> {
        if !self.phi0_den.0.is_positive() {
            return Err(Error::Parse("phi0_den must be positive".into()));
        }
        let num = mat_from_json(&self.phi0_num, n, "phi0_num")?;
        let sq = match &self.phi0_sqrt {
            Some(m) => mat_from_json(m, n, "phi0_sqrt")?,
            None => IntMat::zeros(n, n),
        };
        if num.rows() != n || sq.rows() != n {
            return Err(Error::Parse(format!("phi0 must be {n}x{n}")));
        }
        let mut q = QuadMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = QuadNum::new(num.get(i, j).clone(), sq.get(i, j).clone(), self.phi0_rad, self.phi0_den.0.clone())?;
                q.set(i, j, v);
            }
        }
        Ok(q)
    }

    pub fn resolve(&self) -> Result<CompleteRootDatum> {
        let d = self.datum.resolve()?;
        let phi = self.phi0(d.rank())?;
        rootdata::generic_group::make_complete(&d, &phi)
    }
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}
