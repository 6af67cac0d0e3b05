//! Complete root data: a root datum with a coset φ₀W of a finite-order map
//! normalizing W, and the order polynomials |𝔾| they define.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cartan::{diagram_automorphisms, standard_cartan, Family};
use crate::error::{Error, Result};
use crate::exact_linalg::{common_radicand, cyclotomic_factor, CyclotomicFactorization, IntMat, QPoly, QuadMat, QuadNum};
use crate::isogeny::{classify_endo, exceptional_catalog, ExceptionalType, PIsogeny, ORDER_BOUND};
use crate::rootdatum::{adjoint_datum, dual_datum, sc_datum, RootDatum, WeylGroup};

/// Which q can be used with the stored φ₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PCase {
    /// All entries of Q° are 1: every prime power.
    I,
    /// Q° involves powers of this prime.
    II(u64),
}

#[derive(Clone, Debug)]
pub struct CompleteRootDatum {
    datum: RootDatum,
    phi0: QuadMat,
    phi0_inv: QuadMat,
    case: PCase,
    base_perm: Vec<usize>,
    qcirc: QuadMat,
    order: u32,
    /// φ₀(α_i) is a positive multiple of α_{root_map[i]}.
    root_map: Vec<usize>,
    root_map_inv: Vec<usize>,
}

impl PartialEq for CompleteRootDatum {
    fn eq(&self, o: &Self) -> bool {
        self.datum == o.datum && self.phi0 == o.phi0
    }
}

fn normalized(v: &[QuadNum]) -> Option<(Vec<QuadNum>, QuadNum)> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    let inv = lead.inv()?;
    Some((v.iter().map(|x| x * &inv).collect(), lead))
}

/// For each root α_i, the root α_j with φ(α_i) ∈ ℝ_{>0}·α_j.
fn root_lines(d: &RootDatum, q: &QuadMat) -> Result<Vec<usize>> {
    let mut lines: HashMap<Vec<QuadNum>, usize> = HashMap::new();
    for i in 0..d.num_positive() {
        let v: Vec<QuadNum> = d.roots()[i].iter().map(|x| QuadNum::from_int(x.clone())).collect();
        lines.insert(normalized(&v).unwrap().0, i);
    }
    let mut map = Vec::with_capacity(d.num_roots());
    let mut hit = vec![false; d.num_roots()];
    for x in d.roots() {
        let v: Vec<QuadNum> = x.iter().map(|c| QuadNum::from_int(c.clone())).collect();
        let img = q.mul_vec(&v);
        let (key, lead) = normalized(&img).ok_or(Error::Singular)?;
        let j = *lines
            .get(&key)
            .ok_or_else(|| Error::DoesNotNormalizeW("a root is not sent to a multiple of a root".into()))?;
        // compare signs of the leading coordinates
        let root_lead = d.roots()[j].iter().find(|c| !c.is_zero()).unwrap();
        let j = if lead.is_positive() == (*root_lead > BigInt::zero()) { j } else { d.neg_index(j) };
        if std::mem::replace(&mut hit[j], true) {
            return Err(Error::DoesNotNormalizeW("map on root lines is not injective".into()));
        }
        map.push(j);
    }
    Ok(map)
}

fn quad(m: &IntMat) -> QuadMat {
    m.to_quad()
}

/// Checks Q and composes it with the element of W making it preserve the base.
pub fn make_complete(d: &RootDatum, q: &QuadMat) -> Result<CompleteRootDatum> {
    let n = d.rank();
    if q.rows() != n || q.cols() != n {
        return Err(Error::Dimension(format!("phi0 must be {n}x{n}")));
    }
    q.radicand()?;
    q.inverse().ok_or(Error::Singular)?;
    let mut phi0 = q.clone();
    let mut map = root_lines(d, &phi0)?;
    // positive system P₀ = {α : φ₀(α) positive}; find w with w(R⁺) = P₀
    let npos = d.num_positive();
    let mut in_p0: Vec<bool> = map.iter().map(|&j| j < npos).collect();
    let mut word = Vec::new();
    while let Some(s) = (0..d.base_size()).find(|&s| !in_p0[d.base_indices()[s]]) {
        let perm = d.gen_perm(s);
        let mut next = vec![false; in_p0.len()];
        for (i, &b) in in_p0.iter().enumerate() {
            if b {
                next[perm[i]] = true;
            }
        }
        in_p0 = next;
        word.push(s);
        if word.len() > npos {
            return Err(Error::ConsistencyFailure("base normalization did not terminate".into()));
        }
    }
    if !word.is_empty() {
        let mw = word.iter().fold(IntMat::identity(n), |acc, &s| &acc * &d.weyl_gens()[s]);
        phi0 = &phi0 * &quad(&mw);
        map = root_lines(d, &phi0)?;
    }
    let phi0_inv = phi0.inverse().ok_or(Error::Singular)?;
    let r = d.base_size();
    let base = d.base_indices();
    let mut base_perm = vec![usize::MAX; r];
    let mut qcirc = QuadMat::zeros(r, r);
    for t in 0..r {
        let j = map[base[t]];
        let s = base.iter().position(|&b| b == j).ok_or_else(|| Error::ConsistencyFailure("base not preserved".into()))?;
        base_perm[s] = t;
        // φ₀(α_t) = c·α_s
        let a_t: Vec<QuadNum> = d.a().row(t).iter().map(|x| QuadNum::from_int(x.clone())).collect();
        let img = phi0.mul_vec(&a_t);
        let k = d.a().row(s).iter().position(|x| !x.is_zero()).unwrap();
        let c = &img[k] * &QuadNum::from_int(d.a().get(s, k).clone()).inv().unwrap();
        qcirc.set(s, t, c);
    }
    for s in 0..r {
        let conj = &(&phi0_inv * &quad(&d.weyl_gens()[s])) * &phi0;
        if conj != quad(&d.weyl_gens()[base_perm[s]]) {
            return Err(Error::DoesNotNormalizeW(format!("phi0⁻¹·M_{}·phi0 is not a simple reflection", s + 1)));
        }
    }
    let order = phi0.finite_order(ORDER_BOUND).ok_or(Error::NotFiniteOrder { bound: ORDER_BOUND })?;
    if &qcirc * &quad(d.acheck()) != &quad(d.acheck()) * &phi0 {
        return Err(Error::DoesNotNormalizeW("Q°·Ǎ ≠ Ǎ·phi0".into()));
    }
    let mut prime = None;
    for s in 0..r {
        let c = qcirc.get(s, base_perm[s]);
        match c.as_prime_half_power() {
            Some((1, 0)) => {}
            Some((p, _)) if prime.is_none_or(|x| x == p) => prime = Some(p),
            _ => return Err(Error::UnsupportedCoset(format!("Q° entry {c} is not a power of one prime"))),
        }
    }
    let case = match prime {
        None => PCase::I,
        Some(p) => {
            common_radicand(phi0.radicand()?, p)?;
            PCase::II(p)
        }
    };
    let mut root_map_inv = vec![0; map.len()];
    for (i, &j) in map.iter().enumerate() {
        root_map_inv[j] = i;
    }
    Ok(CompleteRootDatum {
        datum: d.clone(),
        phi0,
        phi0_inv,
        case,
        base_perm,
        qcirc,
        order,
        root_map: map,
        root_map_inv,
    })
}

impl CompleteRootDatum {
    /// φ₀ = id.
    pub fn untwisted(d: &RootDatum) -> Self {
        make_complete(d, &QuadMat::identity(d.rank())).expect("identity is a valid coset")
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn phi0(&self) -> &QuadMat {
        &self.phi0
    }

    pub fn phi0_inv(&self) -> &QuadMat {
        &self.phi0_inv
    }

    pub fn case(&self) -> PCase {
        self.case
    }

    /// s ↦ s†
    pub fn base_perm(&self) -> &[usize] {
        &self.base_perm
    }

    pub fn qcirc(&self) -> &QuadMat {
        &self.qcirc
    }

    /// Order of φ₀.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the permutation s ↦ s†.
    pub fn twist_order(&self) -> u32 {
        let mut k = 1;
        let mut cur: Vec<usize> = self.base_perm.clone();
        while cur.iter().enumerate().any(|(s, &t)| s != t) {
            cur = cur.iter().map(|&t| self.base_perm[t]).collect();
            k += 1;
        }
        k
    }

    /// σ(w) = φ₀⁻¹wφ₀ on elements of W.
    pub fn sigma(&self, w: &WeylGroup, i: usize) -> usize {
        let perm = w.perm(i);
        let key: Vec<u16> = w
            .simple_roots()
            .iter()
            .map(|&b| self.root_map_inv[perm[self.root_map[b]] as usize] as u16)
            .collect();
        w.index_of_key(&key).expect("sigma maps W to itself")
    }

    /// The matrix w·φ₀⁻¹.
    pub fn twisted_matrix(&self, w: &WeylGroup, i: usize) -> QuadMat {
        &quad(&w.matrix(i)) * &self.phi0_inv
    }
}

/// The complete datum of a Steinberg endo-isogeny: φ₀ = q⁻¹P.
pub fn from_isogeny(f: &PIsogeny) -> Result<(CompleteRootDatum, QuadNum)> {
    let e = classify_endo(f)?;
    if e.steinberg.is_none() {
        return Err(Error::NotSteinberg);
    }
    let q = e.q.ok_or(Error::NotSteinberg)?;
    let phi0 = f.matrix().to_quad().scale(&q.inv().unwrap());
    let crd = make_complete(f.source(), &phi0)?;
    Ok((crd, q))
}

/// An order polynomial with its factorization y^k·∏Φ_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPolynomial {
    pub poly: QPoly,
    pub factored: CyclotomicFactorization,
    /// Served from the built-in table instead of being computed.
    pub table_sourced: bool,
}

impl OrderPolynomial {
    pub fn new(poly: QPoly) -> Result<Self> {
        if !poly.is_integral() {
            return Err(Error::ConsistencyFailure(format!("order polynomial {poly} has non-integer coefficients")));
        }
        let factored = cyclotomic_factor(&poly)?;
        Ok(Self { poly, factored, table_sourced: false })
    }

    /// Checks leading coefficient 1, degree |R| + rank and y-power |R|/2.
    pub fn check_shape(&self, nroots: usize, rank: usize) -> bool {
        self.poly.leading().is_some_and(|c| c.is_one())
            && self.poly.degree() == Some(nroots + rank)
            && self.factored.y_power as usize == nroots / 2
            && self.factored.remainder.is_none()
            && self.factored.scalar.is_one()
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// y^{|R|/2}·det(y − φ₀⁻¹)·Σ_{w ∈ W^σ} y^{l(w)}.
pub fn order_polynomial_bn(crd: &CompleteRootDatum, cap: usize) -> Result<OrderPolynomial> {
    let w = crd.datum.weyl_group(cap)?;
    order_polynomial_bn_with(crd, &w)
}

pub fn order_polynomial_bn_with(crd: &CompleteRootDatum, w: &WeylGroup) -> Result<OrderPolynomial> {
    let mut counts: Vec<i64> = Vec::new();
    for i in 0..w.len() {
        if crd.sigma(w, i) == i {
            let l = w.length(i) as usize;
            if counts.len() <= l {
                counts.resize(l + 1, 0);
            }
            counts[l] += 1;
        }
    }
    let poincare = QPoly::from_i64(&counts);
    let torus = crd.phi0_inv.char_poly();
    let poly = (&torus * &poincare).shift(crd.datum.num_positive());
    OrderPolynomial::new(poly)
}

/// Classes of w ~ s·w·σ(s); det(y − wφ₀⁻¹) is constant on them.
pub fn twisted_classes(crd: &CompleteRootDatum, w: &WeylGroup) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for i in 0..n {
        for s in 0..w.rank() {
            let j = w.mul_gen(w.gen_mul(s, i), crd.base_perm[s]);
            let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j as u32));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut sizes: Vec<usize> = vec![0; n];
    for i in 0..n {
        let r = find(&mut parent, i as u32);
        sizes[r as usize] += 1;
    }
    (0..n).filter(|&i| sizes[i] > 0).map(|i| (i, sizes[i])).collect()
}

/// From y^{|R|}/|𝔾| = (1/|W|)·Σ_w 1/det(y − wφ₀⁻¹).
pub fn order_polynomial_molien(crd: &CompleteRootDatum, cap: usize) -> Result<OrderPolynomial> {
    let w = crd.datum.weyl_group(cap)?;
    order_polynomial_molien_with(crd, &w)
}

pub fn order_polynomial_molien_with(crd: &CompleteRootDatum, w: &WeylGroup) -> Result<OrderPolynomial> {
    // group identical denominators
    let mut denoms: Vec<(QPoly, usize)> = Vec::new();
    for (rep, size) in twisted_classes(crd, w) {
        let f = crd.twisted_matrix(w, rep).char_poly();
        match denoms.iter_mut().find(|(g, _)| *g == f) {
            Some(e) => e.1 += size,
            None => denoms.push((f, size)),
        }
    }
    let l = denoms.iter().fold(QPoly::one(), |acc, (f, _)| acc.lcm(f));
    let mut num = QPoly::zero();
    for (f, size) in &denoms {
        let part = l.div_exact(f).ok_or_else(|| Error::ConsistencyFailure("lcm not divisible".into()))?;
        num = &num + &part.scale(&QuadNum::from_int(*size as u64));
    }
    let top = l.shift(crd.datum.num_roots()).scale(&QuadNum::from_int(w.len() as u64));
    let poly = top.div_exact(&num).ok_or_else(|| Error::ConsistencyFailure("Molien sum does not invert to a polynomial".into()))?;
    OrderPolynomial::new(poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bn,
    Molien,
}

/// Order polynomial by the chosen method; on CapExceeded a simple datum
/// with a table row gets the table polynomial, flagged as table-sourced.
pub fn order_polynomial(crd: &CompleteRootDatum, method: Method, cap: usize) -> Result<OrderPolynomial> {
    let res = match method {
        Method::Bn => order_polynomial_bn(crd, cap),
        Method::Molien => order_polynomial_molien(crd, cap),
    };
    match res {
        Err(Error::CapExceeded { cap }) => {
            let row = table_row_for(crd).ok_or(Error::CapExceeded { cap })?;
            let mut op = OrderPolynomial::new(row.1)?;
            op.table_sourced = true;
            Ok(op)
        }
        r => r,
    }
}

/// det(y − w·φ₀⁻¹) for w given as a word in the generators.
pub fn toric_order(crd: &CompleteRootDatum, word: &[usize]) -> Result<QPoly> {
    let d = &crd.datum;
    let n = d.rank();
    let mut m = IntMat::identity(n);
    for &s in word {
        if s >= d.base_size() {
            return Err(Error::BadParams(format!("generator {} out of range", s + 1)));
        }
        m = &m * &d.weyl_gens()[s];
    }
    Ok((&quad(&m) * &crd.phi0_inv).char_poly())
}

/// φ₀ ↦ −φ₀, re-normalized.
pub fn ennola(crd: &CompleteRootDatum) -> Result<CompleteRootDatum> {
    make_complete(&crd.datum, &-&crd.phi0)
}

/// (Y, R∨, X, R) with φ₀ᵗʳ.
pub fn dual_complete(crd: &CompleteRootDatum) -> Result<CompleteRootDatum> {
    make_complete(&dual_datum(&crd.datum), &crd.phi0.transpose())
}

/// q·φ₀ block-diagonal products.
pub fn complete_product(a: &CompleteRootDatum, b: &CompleteRootDatum) -> Result<CompleteRootDatum> {
    let d = crate::rootdatum::direct_product(&a.datum, &b.datum);
    make_complete(&d, &QuadMat::block_diag(&a.phi0, &b.phi0))
}

/// Is q·φ₀ a p-isogeny for some prime p (the set 𝒫)?
pub fn p_set_contains(crd: &CompleteRootDatum, q: &QuadNum) -> Result<bool> {
    if !q.is_positive() {
        return Err(Error::BadParams("q must be positive".into()));
    }
    common_radicand(q.radicand(), crd.phi0.radicand()?)?;
    let Some((p, k)) = q.as_prime_half_power() else { return Ok(false) };
    if p == 1 || k < 1 {
        return Ok(false);
    }
    if let PCase::II(p2) = crd.case {
        if p2 != p {
            return Ok(false);
        }
    }
    if crd.phi0.scale(q).to_int().is_none() {
        return Ok(false);
    }
    for s in 0..crd.base_perm.len() {
        let e = q * crd.qcirc.get(s, crd.base_perm[s]);
        match e.as_prime_half_power() {
            Some((1, 0)) => {}
            Some((p2, j)) if p2 == p && j % 2 == 0 && j > 0 => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// |𝔾|(q) as an exact integer.
pub fn group_order(crd: &CompleteRootDatum, poly: &OrderPolynomial, q: &QuadNum) -> Result<BigInt> {
    if !p_set_contains(crd, q)? {
        return Err(Error::QNotInP(q.to_string()));
    }
    poly.poly
        .eval(q)?
        .to_integer()
        .ok_or_else(|| Error::ConsistencyFailure(format!("|G|({q}) is not an integer")))
}

/// Key of a table row: family, rank, order of s ↦ s†.
pub type TableKey = (Family, usize, u32);

fn prod_binomials(terms: &[(usize, i64)]) -> QPoly {
    terms.iter().fold(QPoly::one(), |acc, &(k, s)| &acc * &QPoly::binomial(k, s))
}

/// Row of the table of orders of finite simple groups of Lie type.
pub fn table_row(family: Family, rank: usize, twist: u32) -> Option<QPoly> {
    let n = rank;
    let (ypow, terms): (usize, Vec<(usize, i64)>) = match (family, twist) {
        (Family::A, 1) => (n * (n + 1) / 2, (2..=n + 1).map(|i| (i, 1)).collect()),
        (Family::A, 2) if n >= 2 => {
            (n * (n + 1) / 2, (2..=n + 1).map(|i| (i, if i % 2 == 0 { 1 } else { -1 })).collect())
        }
        (Family::B | Family::C, 1) => (n * n, (1..=n).map(|i| (2 * i, 1)).collect()),
        (Family::D, 1) | (Family::D, 2) => {
            let mut t: Vec<(usize, i64)> = (1..n).map(|i| (2 * i, 1)).collect();
            t.push((n, if twist == 1 { 1 } else { -1 }));
            (n * n - n, t)
        }
        (Family::D, 3) if n == 4 => {
            let f = &prod_binomials(&[(2, 1), (6, 1)]) * &QPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
            return Some(f.shift(12));
        }
        (Family::G, 1) => (6, vec![(2, 1), (6, 1)]),
        (Family::F, 1) => (24, vec![(2, 1), (6, 1), (8, 1), (12, 1)]),
        (Family::E, 1) if n == 6 => (36, vec![(2, 1), (5, 1), (6, 1), (8, 1), (9, 1), (12, 1)]),
        (Family::E, 1) if n == 7 => (63, vec![(2, 1), (6, 1), (8, 1), (10, 1), (12, 1), (14, 1), (18, 1)]),
        (Family::E, 1) if n == 8 => {
            (120, vec![(2, 1), (8, 1), (12, 1), (14, 1), (18, 1), (20, 1), (24, 1), (30, 1)])
        }
        (Family::E, 2) if n == 6 => (36, vec![(2, 1), (5, -1), (6, 1), (8, 1), (9, -1), (12, 1)]),
        (Family::B | Family::C, 2) if n == 2 => (4, vec![(2, 1), (4, -1)]),
        (Family::G, 2) => (6, vec![(2, 1), (6, -1)]),
        (Family::F, 2) => (24, vec![(2, 1), (6, -1), (8, 1), (12, -1)]),
        _ => return None,
    };
    // binomial(k, s) is y^k − s, so s = −1 gives y^k + 1
    Some(prod_binomials(&terms).shift(ypow))
}

/// Every row of the table, keyed and labelled ("2A3", "E6", ...).
pub fn table_rows() -> Vec<(TableKey, String)> {
    let mut rows = Vec::new();
    for n in 1..=8 {
        rows.push(((Family::A, n, 1), format!("A{n}")));
    }
    for n in 2..=8 {
        rows.push(((Family::B, n, 1), format!("B{n}")));
    }
    for n in 3..=8 {
        rows.push(((Family::C, n, 1), format!("C{n}")));
    }
    for n in 4..=8 {
        rows.push(((Family::D, n, 1), format!("D{n}")));
    }
    rows.push(((Family::G, 2, 1), "G2".into()));
    rows.push(((Family::F, 4, 1), "F4".into()));
    for n in 6..=8 {
        rows.push(((Family::E, n, 1), format!("E{n}")));
    }
    for n in 2..=8 {
        rows.push(((Family::A, n, 2), format!("2A{n}")));
    }
    for n in 4..=8 {
        rows.push(((Family::D, n, 2), format!("2D{n}")));
    }
    rows.push(((Family::D, 4, 3), "3D4".into()));
    rows.push(((Family::E, 6, 2), "2E6".into()));
    rows.push(((Family::C, 2, 2), "2B2".into()));
    rows.push(((Family::G, 2, 2), "2G2".into()));
    rows.push(((Family::F, 4, 2), "2F4".into()));
    rows
}

/// "2B2", "3D4", "E6", "A1" → key.
pub fn parse_twisted_type(s: &str) -> Result<TableKey> {
    let s = s.trim();
    let (twist, rest) = match s.chars().next() {
        Some(c @ ('2' | '3')) => (c.to_digit(10).unwrap(), &s[1..]),
        _ => (1, s),
    };
    let (f, n) = crate::cartan::parse_type(rest)?;
    if !f.rank_ok(n) && !(f == Family::B && n == 2 && twist == 2) {
        return Err(Error::BadRank { family: f.letter(), rank: n });
    }
    let f = if f == Family::B && n == 2 && twist == 2 { Family::C } else { f };
    Ok((f, n, twist))
}

pub fn type_label(key: TableKey) -> String {
    let (f, n, t) = key;
    if t == 1 {
        format!("{}{n}", f.letter())
    } else if t == 2 && f == Family::C && n == 2 {
        "2B2".into()
    } else {
        format!("{t}{}{n}", f.letter())
    }
}

/// The standard complete datum for a table row. Twisted rows use the
/// diagram automorphism; very twisted rows use the exceptional isogeny
/// with m = 0 (on the adjoint datum, whatever `sc` says).
pub fn standard_complete(key: TableKey, sc: bool) -> Result<CompleteRootDatum> {
    let (f, n, twist) = key;
    let very = matches!((f, n, twist), (Family::B | Family::C, 2, 2) | (Family::G, 2, 2) | (Family::F, 4, 2));
    if very {
        let kind = match f {
            Family::G => ExceptionalType::G2,
            Family::F => ExceptionalType::F4,
            _ => ExceptionalType::C2,
        };
        return Ok(from_isogeny(&exceptional_catalog(kind, 0)?)?.0);
    }
    let c = standard_cartan(f, n)?;
    let d = if sc { sc_datum(&c) } else { adjoint_datum(&c) };
    if twist == 1 {
        return Ok(CompleteRootDatum::untwisted(&d));
    }
    let pi = diagram_automorphisms(&c)
        .into_iter()
        .find(|pi| perm_order(pi) == twist)
        .ok_or_else(|| Error::BadType(format!("{} has no diagram automorphism of order {twist}", type_label(key))))?;
    // φ₀ sends basis vector t to basis vector π(t) (simple roots for ad,
    // fundamental weights for sc)
    let mut phi = QuadMat::zeros(n, n);
    for (t, &s) in pi.iter().enumerate() {
        phi.set(s, t, QuadNum::one());
    }
    make_complete(&d, &phi)
}

fn perm_order(pi: &[usize]) -> u32 {
    let mut k = 1;
    let mut cur = pi.to_vec();
    while cur.iter().enumerate().any(|(s, &t)| s != t) {
        cur = cur.iter().map(|&t| pi[t]).collect();
        k += 1;
    }
    k
}

/// The table key of a simple semisimple complete datum.
pub fn table_key(crd: &CompleteRootDatum) -> Result<TableKey> {
    let labels = crd.datum.cartan().classify();
    if labels.len() != 1 || !crd.datum.is_semisimple() {
        return Err(Error::NotSimple);
    }
    let l = &labels[0];
    let twist = crd.twist_order();
    let f = match (l.family, l.rank, twist) {
        (Family::B, 2, 2) => Family::C,
        (f, _, _) => f,
    };
    Ok((f, l.rank, twist))
}

fn table_row_for(crd: &CompleteRootDatum) -> Option<(TableKey, QPoly)> {
    let key = table_key(crd).ok()?;
    table_row(key.0, key.1, key.2).map(|r| (key, r))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub label: String,
    pub expected: QPoly,
    pub computed: OrderPolynomial,
    pub matches: bool,
}

impl TableReport {
    /// Coefficient-wise difference computed − expected.
    pub fn diff(&self) -> QPoly {
        &self.computed.poly - &self.expected
    }
}

/// Compares the computed order polynomial with the table row.
pub fn table_check(crd: &CompleteRootDatum, method: Method, cap: usize) -> Result<TableReport> {
    let (key, expected) = match table_row_for(crd) {
        Some(x) => x,
        None => {
            table_key(crd)?;
            return Err(Error::BadType("no table row for this datum".into()));
        }
    };
    let computed = order_polynomial(crd, method, cap)?;
    let matches = computed.poly == expected;
    Ok(TableReport { label: type_label(key), expected, computed, matches })
}

/// Number of F-stable maximal tori identity, cross-multiplied:
/// y^{|R|}·|W| = Σ_w |𝔾| / det(y − wφ₀⁻¹).
pub fn tori_count_identity(crd: &CompleteRootDatum, w: &WeylGroup, order: &OrderPolynomial) -> Result<bool> {
    let mut sum = QPoly::zero();
    for (rep, size) in twisted_classes(crd, w) {
        let f = crd.twisted_matrix(w, rep).char_poly();
        let q = order.poly.div_exact(&f).ok_or_else(|| Error::ConsistencyFailure("torus order does not divide".into()))?;
        sum = &sum + &q.scale(&QuadNum::from_int(size as u64));
    }
    Ok(sum == QPoly::monomial(QuadNum::from_int(w.len() as u64), crd.datum.num_roots()))
}

/// Order polynomial of a product read off the factors (for tests).
pub fn product_order(a: &OrderPolynomial, b: &OrderPolynomial) -> Result<OrderPolynomial> {
    OrderPolynomial::new(&a.poly * &b.poly)
}
