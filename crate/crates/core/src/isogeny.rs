//! p-isogenies of root data as matrix pairs (P, P°), and morphisms of
//! root data more generally.
//!
//! P maps X′ (the source) to X (the target); P° is monomial with
//! p_{s,s†} = q_s, so that φ(α′_{s†}) = q_s·α_s.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cartan::{standard_cartan, Family};
use crate::error::{Error, Result};
use crate::exact_linalg::{cokernel_invariants, is_prime, prime_power, smith_normal_form, IntMat, QuadNum};
use crate::rootdatum::{adjoint_datum, build_datum, center_is_connected, dual_datum, sc_datum, x_mod_zr_invariants, RootDatum};

/// Bound on the finite orders searched for.
pub const ORDER_BOUND: u32 = 240;

#[derive(Clone, Debug)]
pub struct PIsogeny {
    source: RootDatum,
    target: RootDatum,
    p: u64,
    pmat: IntMat,
    pcirc: IntMat,
    dagger: Vec<usize>,
    q_simple: Vec<BigInt>,
    root_dagger: Vec<usize>,
    q_roots: Vec<BigInt>,
}

impl PartialEq for PIsogeny {
    fn eq(&self, o: &Self) -> bool {
        self.source == o.source && self.target == o.target && self.p == o.p && self.pmat == o.pmat && self.pcirc == o.pcirc
    }
}

/// Exponent k with x = p^k, k ≥ 0.
fn p_exponent(x: &BigInt, p: u64) -> Option<u32> {
    if x.is_one() {
        return Some(0);
    }
    match prime_power(x) {
        Some((q, k)) if q == p => Some(k as u32),
        _ => None,
    }
}

pub fn validate_isogeny(source: &RootDatum, target: &RootDatum, p: u64, pmat: &IntMat, pcirc: &IntMat) -> Result<PIsogeny> {
    let (n, r) = (target.rank(), target.base_size());
    if source.rank() != n || source.base_size() != r {
        return Err(Error::Dimension("source and target must have the same rank and base size".into()));
    }
    if pmat.rows() != n || pmat.cols() != n || pcirc.rows() != r || pcirc.cols() != r {
        return Err(Error::Dimension(format!("expected P of size {n}x{n} and Pcirc of size {r}x{r}")));
    }
    if p != 1 && !is_prime(p) {
        return Err(Error::BadParams(format!("p = {p} is neither 1 nor a prime")));
    }
    // (MI1)
    let support = pcirc.monomial_support().ok_or_else(|| Error::MI1Violation("Pcirc is not monomial".into()))?;
    let mut q_simple = Vec::with_capacity(r);
    for (s, &t) in support.iter().enumerate() {
        let e = pcirc.get(s, t);
        if !e.is_positive() || p_exponent(e, p).is_none() {
            return Err(Error::MI1Violation(format!("entry {e} of Pcirc is not a power of {p}")));
        }
        q_simple.push(e.clone());
    }
    // (MI2)
    if pmat.det().is_zero() {
        return Err(Error::MI2Violation("det P = 0".into()));
    }
    let (a, ach, b, bch) = (target.a(), target.acheck(), source.a(), source.acheck());
    if pmat * &b.transpose() != &a.transpose() * pcirc {
        return Err(Error::MI2Violation("P·Bᵀ ≠ Aᵀ·P°".into()));
    }
    if pcirc * bch != ach * pmat {
        return Err(Error::MI2Violation("P°·B̌ ≠ Ǎ·P".into()));
    }
    let (c, c2) = (target.cartan().entries(), source.cartan().entries());
    if c * pcirc != pcirc * c2 {
        return Err(Error::ConsistencyFailure("C·P° ≠ P°·C′".into()));
    }
    for s in 0..r {
        for t in 0..r {
            if &q_simple[t] * c.get(s, t) != &q_simple[s] * c2.get(support[s], support[t]) {
                return Err(Error::ConsistencyFailure("q_t·c_st ≠ q_s·c_{s†t†}".into()));
            }
        }
    }
    // transport along the recorded words: α = w(α_s) gives α† = σ(w)(α′_{s†})
    let mut root_dagger = Vec::with_capacity(target.num_roots());
    let mut q_roots = Vec::with_capacity(target.num_roots());
    for i in 0..target.num_roots() {
        let (s, word) = target.origin(i);
        let mut v = b.row(support[s]).to_vec();
        for &t in word.iter().rev() {
            v = source.reflect(support[t], &v);
        }
        let j = source.root_index(&v).ok_or_else(|| Error::ConsistencyFailure("transported root is not a root".into()))?;
        let img = pmat.mul_vec(&v);
        let want: Vec<BigInt> = target.roots()[i].iter().map(|x| x * &q_simple[s]).collect();
        if img != want {
            return Err(Error::ConsistencyFailure(format!("φ(α†) ≠ q_α·α for root {i}")));
        }
        root_dagger.push(j);
        q_roots.push(q_simple[s].clone());
    }
    let mut seen = vec![false; source.num_roots()];
    for &j in &root_dagger {
        if std::mem::replace(&mut seen[j], true) {
            return Err(Error::ConsistencyFailure("α ↦ α† is not injective".into()));
        }
    }
    Ok(PIsogeny {
        source: source.clone(),
        target: target.clone(),
        p,
        pmat: pmat.clone(),
        pcirc: pcirc.clone(),
        dagger: support,
        q_simple,
        root_dagger,
        q_roots,
    })
}

impl PIsogeny {
    /// λ ↦ p^m·λ on D.
    pub fn scalar(d: &RootDatum, p: u64, m: u32) -> Result<Self> {
        let k = BigInt::from(p).pow(m);
        validate_isogeny(d, d, p, &IntMat::identity(d.rank()).scale(&k), &IntMat::identity(d.base_size()).scale(&k))
    }

    pub fn identity(d: &RootDatum) -> Self {
        Self::scalar(d, 1, 0).expect("identity is an isogeny")
    }

    pub fn source(&self) -> &RootDatum {
        &self.source
    }

    pub fn target(&self) -> &RootDatum {
        &self.target
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn matrix(&self) -> &IntMat {
        &self.pmat
    }

    pub fn pcirc(&self) -> &IntMat {
        &self.pcirc
    }

    /// s ↦ s†
    pub fn dagger(&self) -> &[usize] {
        &self.dagger
    }

    pub fn q_simple(&self) -> &[BigInt] {
        &self.q_simple
    }

    /// q_α indexed by target root.
    pub fn q_roots(&self) -> &[BigInt] {
        &self.q_roots
    }

    /// α ↦ α†, target root index to source root index.
    pub fn root_dagger(&self) -> &[usize] {
        &self.root_dagger
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }
}

/// σ(w_s) = w′_{s†}; checks P·M′_{s†} = M_s·P for each generator.
pub fn induced_sigma(f: &PIsogeny) -> Result<Vec<usize>> {
    for (s, &t) in f.dagger.iter().enumerate() {
        if &f.pmat * &f.source.weyl_gens()[t] != &f.target.weyl_gens()[s] * &f.pmat {
            return Err(Error::ConsistencyFailure(format!("φ∘σ(w_s) ≠ w_s∘φ for s = {}", s + 1)));
        }
    }
    Ok(f.dagger.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Untwisted,
    Twisted,
    VeryTwisted,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Untwisted => "untwisted",
            Twist::Twisted => "twisted",
            Twist::VeryTwisted => "very-twisted",
        })
    }
}

/// Fields that make sense only when source = target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoClass {
    pub frobenius: Option<u32>,
    pub steinberg: Option<(u32, u32)>,
    pub q: Option<QuadNum>,
    pub twist: Twist,
    pub ordinary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyClass {
    pub central: bool,
    pub isomorphism: bool,
    pub endo: Option<EndoClass>,
}

pub fn classify_isogeny(f: &PIsogeny) -> IsogenyClass {
    let central = f.q_simple.iter().all(|q| q.is_one());
    IsogenyClass { central, isomorphism: central && f.pmat.is_unimodular(), endo: classify_endo(f).ok() }
}

/// Orbits of s ↦ s†.
pub fn dagger_orbits(dagger: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; dagger.len()];
    let mut out = Vec::new();
    for s in 0..dagger.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![];
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            orbit.push(t);
            t = dagger[t];
        }
        out.push(orbit);
    }
    out
}

/// Ordinary: distinct s, t in one orbit have m_st ∈ {2, 3}.
pub fn twist_of(d: &RootDatum, dagger: &[usize]) -> (Twist, bool) {
    let ordinary = dagger_orbits(dagger).iter().all(|o| {
        o.iter().all(|&s| o.iter().all(|&t| s == t || matches!(d.cartan().coxeter_m(s, t), 2 | 3)))
    });
    let twist = if dagger.iter().enumerate().all(|(s, &t)| s == t) {
        Twist::Untwisted
    } else if ordinary {
        Twist::Twisted
    } else {
        Twist::VeryTwisted
    };
    (twist, ordinary)
}

/// q = |det P|^{1/n}, cross-checked against q^{|S_i|} = ∏_{s∈S_i} q_s.
fn q_of(f: &PIsogeny) -> Option<QuadNum> {
    let n = f.pmat.rows() as u32;
    if n == 0 {
        return None;
    }
    let q = QuadNum::prime_power_root(&f.pmat.det().abs(), n)?;
    for orbit in dagger_orbits(&f.dagger) {
        let prod = orbit.iter().fold(BigInt::one(), |acc, &s| acc * &f.q_simple[s]);
        if q.pow(orbit.len() as u32) != QuadNum::from_int(prod) {
            return None;
        }
    }
    Some(q)
}

fn scalar_power_of(m: &IntMat, p: u64) -> Option<u32> {
    let x = m.get(0, 0);
    if !x.is_positive() || *m != IntMat::identity(m.rows()).scale(x) {
        return None;
    }
    p_exponent(x, p)
}

pub fn classify_endo(f: &PIsogeny) -> Result<EndoClass> {
    if !f.is_endo() {
        return Err(Error::NotEndo);
    }
    let (twist, ordinary) = twist_of(&f.target, &f.dagger);
    let q = q_of(f);
    let mut steinberg = None;
    if f.p > 1 && f.pmat.rows() > 0 {
        let mut pw = f.pmat.clone();
        for d in 1..=ORDER_BOUND {
            if let Some(m) = scalar_power_of(&pw, f.p).filter(|&m| m >= 1) {
                steinberg = Some((d, m));
                break;
            }
            pw = &pw * &f.pmat;
        }
    }
    let frobenius = frobenius_exponent(f);
    Ok(EndoClass { frobenius, steinberg, q, twist, ordinary })
}

fn frobenius_exponent(f: &PIsogeny) -> Option<u32> {
    if f.p == 1 {
        return None;
    }
    let q0 = f.q_simple.first().cloned().unwrap_or_else(|| {
        // torus: P itself must be p^m times a finite-order matrix
        let g = f.pmat.data().iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut k = BigInt::one();
        while (&g % (&k * f.p)).is_zero() {
            k *= f.p;
        }
        k
    });
    if f.q_simple.iter().any(|q| *q != q0) {
        return None;
    }
    let m = p_exponent(&q0, f.p).filter(|&m| m >= 1)?;
    let phi0 = f.pmat.to_quad().scale(&QuadNum::rational(1, q0.clone())).to_int()?;
    phi0.to_quad().finite_order(ORDER_BOUND)?;
    let d = &f.target;
    let roots_ok = d.roots().iter().all(|x| d.root_index(&phi0.mul_vec(x)).is_some());
    let t = phi0.transpose();
    let coroots_ok = d.coroots().iter().all(|y| d.coroot_index(&t.mul_vec(y)).is_some());
    (roots_ok && coroots_ok).then_some(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheckReport {
    pub is_hom_of_root_data: bool,
    pub is_surjective: bool,
    /// Torsion of coker(P).
    pub cokernel_invariants: Vec<BigInt>,
    pub cokernel_free_rank: usize,
    pub no_p_prime_torsion: bool,
}

impl MorphismCheckReport {
    pub fn all_hold(&self) -> bool {
        self.is_hom_of_root_data && self.is_surjective && self.no_p_prime_torsion
    }
}

/// Is φ = P: X′ → X a homomorphism of root data (R′ → R bijective with
/// multipliers 1, compatible with φᵗʳ on coroots)? Also reports
/// surjectivity and whether X′/ℤR′ has p′-torsion.
pub fn morphism_check(source: &RootDatum, target: &RootDatum, pmat: &IntMat, p: u64) -> MorphismCheckReport {
    let shape_ok = pmat.rows() == target.rank() && pmat.cols() == source.rank();
    let is_hom = shape_ok && source.num_roots() == target.num_roots() && {
        let pt = pmat.transpose();
        let mut hit = vec![false; target.num_roots()];
        source.roots().iter().zip(source.coroots()).all(|(x, xc)| match target.root_index(&pmat.mul_vec(x)) {
            Some(j) if !std::mem::replace(&mut hit[j], true) => pt.mul_vec(&target.coroots()[j]) == *xc,
            _ => false,
        })
    };
    let (free, tors) = if shape_ok && pmat.rows() > 0 { cokernel_invariants(pmat) } else { (pmat.rows(), vec![]) };
    MorphismCheckReport {
        is_hom_of_root_data: is_hom,
        is_surjective: shape_ok && free == 0 && tors.is_empty(),
        cokernel_invariants: tors,
        cokernel_free_rank: free,
        no_p_prime_torsion: center_is_connected(source, p),
    }
}

/// Conditions for G → G′ to be a regular embedding, read on X′ → X.
pub fn regular_embedding_check(source: &RootDatum, target: &RootDatum, pmat: &IntMat, p: u64) -> (bool, MorphismCheckReport) {
    let rep = morphism_check(source, target, pmat, p);
    (rep.all_hold(), rep)
}

/// The p′-part of n.
fn p_prime_part(n: &BigInt, p: u64) -> BigInt {
    let mut n = n.clone();
    if p > 1 {
        while (&n % p).is_zero() {
            n /= p;
        }
    }
    n
}

/// D′ with X′ = {(λ, μ) ∈ X ⊕ X : λ − μ ∈ L_p}, where L_p ⊇ ℤR is the
/// preimage of the p-primary part of X/ℤR, and the restriction map
/// (λ, μ) ↦ λ as a matrix X′ → X.
pub fn regular_embedding_build(d: &RootDatum, p: u64) -> Result<(RootDatum, IntMat)> {
    if !d.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let n = d.rank();
    let sf = smith_normal_form(&d.a().transpose());
    let uinv = sf.u.inverse_integral().expect("unimodular");
    let diag = sf.diagonal();
    // basis of X′ as columns in X ⊕ X: (e_i, e_i), then (ℓ_j, 0)
    let mut basis = IntMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        basis.set(i, i, BigInt::one());
        basis.set(n + i, i, BigInt::one());
        let scale = p_prime_part(&diag[i], p);
        for k in 0..n {
            basis.set(k, n + i, uinv.get(k, i) * &scale);
        }
    }
    let binv = basis.inverse_rational().ok_or(Error::Singular)?;
    let bt = basis.transpose();
    let mut a = Vec::new();
    let mut ach = Vec::new();
    for s in 0..d.base_size() {
        let mut x = d.a().row(s).to_vec();
        x.resize(2 * n, BigInt::zero());
        let coords = binv.mul_vec(&x.iter().map(|v| QuadNum::from_int(v.clone())).collect::<Vec<_>>());
        let coords: Option<Vec<BigInt>> = coords.iter().map(|c| c.to_integer()).collect();
        a.push(coords.ok_or_else(|| Error::ConsistencyFailure("root not in X′".into()))?);
        let mut y = d.acheck().row(s).to_vec();
        y.resize(2 * n, BigInt::zero());
        ach.push(bt.mul_vec(&y));
    }
    let a = IntMat::from_rows(a, 2 * n)?;
    let ach = IntMat::from_rows(ach, 2 * n)?;
    let d2 = build_datum(&a, &ach)?;
    let mut incl = IntMat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..2 * n {
            incl.set(i, j, basis.get(i, j).clone());
        }
    }
    Ok((d2, incl))
}

/// Q = Pᵗʳ, Q° = P°ᵗʳ between the dual data, with source and target swapped.
pub fn dual_morphism(f: &PIsogeny) -> Result<PIsogeny> {
    validate_isogeny(&dual_datum(&f.target), &dual_datum(&f.source), f.p, &f.pmat.transpose(), &f.pcirc.transpose())
}

/// The exceptional isogenies in characteristic 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalType {
    C2,
    G2,
    F4,
    /// sc(B_n) → sc(C_n), n ≥ 2.
    BnCn(usize),
}

impl ExceptionalType {
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C2" | "B2" => Ok(Self::C2),
            "G2" => Ok(Self::G2),
            "F4" => Ok(Self::F4),
            "BNCN" | "BC" => match n {
                Some(n) if n >= 2 => Ok(Self::BnCn(n)),
                _ => Err(Error::BadType("BnCn needs a rank n >= 2".into())),
            },
            _ => Err(Error::BadType(format!("{s} has no exceptional isogeny"))),
        }
    }
}

pub fn exceptional_catalog(kind: ExceptionalType, m: u32) -> Result<PIsogeny> {
    let pw = |p: u64, e: u32| BigInt::from(p).pow(e);
    let antidiag = |vals: &[BigInt]| {
        let k = vals.len();
        let mut x = IntMat::zeros(k, k);
        for (i, v) in vals.iter().enumerate() {
            x.set(i, k - 1 - i, v.clone());
        }
        x
    };
    let (fam, rank, p, pm) = match kind {
        ExceptionalType::C2 => (Family::C, 2, 2, antidiag(&[pw(2, m), pw(2, m + 1)])),
        ExceptionalType::G2 => (Family::G, 2, 3, antidiag(&[pw(3, m), pw(3, m + 1)])),
        ExceptionalType::F4 => (Family::F, 4, 2, antidiag(&[pw(2, m), pw(2, m), pw(2, m + 1), pw(2, m + 1)])),
        ExceptionalType::BnCn(n) => {
            if m != 0 {
                return Err(Error::BadParams("BnCn takes no exponent".into()));
            }
            let mut diag = vec![BigInt::from(2); n];
            diag[0] = BigInt::one();
            let pm = IntMat::diag(&diag);
            let src = sc_datum(&standard_cartan(Family::B, n)?);
            let tgt = sc_datum(&standard_cartan(Family::C, n)?);
            return validate_isogeny(&src, &tgt, 2, &pm, &pm);
        }
    };
    let d = adjoint_datum(&standard_cartan(fam, rank)?);
    let f = validate_isogeny(&d, &d, p, &pm, &pm)?;
    if &pm * &pm != IntMat::identity(rank).scale(&pw(p, 2 * m + 1)) {
        return Err(Error::ConsistencyFailure("P² ≠ p^{2m+1}·I".into()));
    }
    Ok(f)
}

/// On sc(A₁) × ad(A₁), p = 2, m ≥ 1: P = [[0,2^m],[2^m,0]],
/// P° = [[0,2^{m−1}],[2^{m+1},0]]. Steinberg but not Frobenius.
pub fn strange_isogeny(m: u32) -> Result<PIsogeny> {
    if m == 0 {
        return Err(Error::BadParams("m must be at least 1".into()));
    }
    let d = crate::rootdatum::direct_product(
        &sc_datum(&standard_cartan(Family::A, 1)?),
        &adjoint_datum(&standard_cartan(Family::A, 1)?),
    );
    let two = |e: u32| BigInt::from(2).pow(e);
    let z = BigInt::zero();
    let pm = IntMat::from_rows(vec![vec![z.clone(), two(m)], vec![two(m), z.clone()]], 2)?;
    let pc = IntMat::from_rows(vec![vec![z.clone(), two(m - 1)], vec![two(m + 1), z]], 2)?;
    validate_isogeny(&d, &d, 2, &pm, &pc)
}

/// The order-2 automorphism of the GL_n datum: P = −J_n, P° = J_{n−1}.
pub fn gl_unitary_automorphism(n: usize) -> Result<PIsogeny> {
    let d = crate::rootdatum::gl_datum(n)?;
    let j = |k: usize| {
        let mut x = IntMat::zeros(k, k);
        for i in 0..k {
            x.set(i, k - 1 - i, BigInt::one());
        }
        x
    };
    validate_isogeny(&d, &d, 1, &-&j(n), &j(n - 1))
}

/// X/ℤR as a short string, e.g. "Z^1 + Z/2".
pub fn describe_quotient(d: &RootDatum) -> String {
    let (free, tors) = x_mod_zr_invariants(d);
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
