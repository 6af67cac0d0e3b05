//! Root data C = Ǎ·Aᵀ: roots by reflection closure, duality, products,
//! lattices between ℤC and Ω, centers and isomorphism tests.

mod catalog;
mod weyl;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cartan::{cartan_isomorphisms, validate_cartan, CartanMatrix};
use crate::error::{Error, Result};
use crate::exact_linalg::{cokernel_invariants, lattice_basis, prime_power, smith_normal_form, solve_integer, IntMat};

pub use catalog::{catalog, catalog_by_name, gl_datum, CATALOG_NAMES};
pub use weyl::{format_word, parse_word, weyl_order, WeylGroup, DEFAULT_WEYL_CAP};

pub(crate) fn dot(x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn axpy(x: &[BigInt], k: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    // x − k·y
    x.iter().zip(y).map(|(a, b)| a - k * b).collect()
}

/// A root datum given by the simple roots (rows of A, in X) and simple
/// coroots (rows of Ǎ, in Y). Everything else is derived at construction.
#[derive(Clone, Debug)]
pub struct RootDatum {
    a: IntMat,
    acheck: IntMat,
    cartan: CartanMatrix,
    roots: Vec<Vec<BigInt>>,
    coroots: Vec<Vec<BigInt>>,
    base_coords: Vec<Vec<BigInt>>,
    origins: Vec<(usize, Vec<usize>)>,
    base_indices: Vec<usize>,
    weyl_gens: Vec<IntMat>,
    gen_perms: Vec<Vec<usize>>,
    root_index: HashMap<Vec<BigInt>, usize>,
    coroot_index: HashMap<Vec<BigInt>, usize>,
}

impl PartialEq for RootDatum {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.acheck == o.acheck
    }
}

impl Eq for RootDatum {}

struct Found {
    root: Vec<BigInt>,
    coroot: Vec<BigInt>,
    coords: Vec<BigInt>,
    origin: (usize, Vec<usize>),
}

pub fn build_datum(a: &IntMat, acheck: &IntMat) -> Result<RootDatum> {
    if a.rows() != acheck.rows() || a.cols() != acheck.cols() {
        return Err(Error::Dimension(format!(
            "A is {}x{} but Acheck is {}x{}",
            a.rows(),
            a.cols(),
            acheck.rows(),
            acheck.cols()
        )));
    }
    let (r, n) = (a.rows(), a.cols());
    let cartan = if r == 0 { CartanMatrix::empty() } else { validate_cartan(&(acheck * &a.transpose()))? };

    let bound = 10 * r * r + 16;
    let mut found: Vec<Found> = Vec::new();
    let mut seen: HashMap<Vec<BigInt>, usize> = HashMap::new();
    for s in 0..r {
        let mut coords = vec![BigInt::zero(); r];
        coords[s] = BigInt::one();
        seen.insert(a.row(s).to_vec(), found.len());
        found.push(Found { root: a.row(s).to_vec(), coroot: acheck.row(s).to_vec(), coords, origin: (s, vec![]) });
    }
    let mut head = 0;
    while head < found.len() {
        for s in 0..r {
            let cur = &found[head];
            let k = dot(&cur.root, acheck.row(s));
            let root = axpy(&cur.root, &k, a.row(s));
            let kc = dot(a.row(s), &cur.coroot);
            let coroot = axpy(&cur.coroot, &kc, acheck.row(s));
            if let Some(&j) = seen.get(&root) {
                if found[j].coroot != coroot {
                    return Err(Error::ConsistencyFailure("coroot of a root is not well defined".into()));
                }
                continue;
            }
            if found.len() >= bound {
                return Err(Error::ClosureBudgetExceeded { bound });
            }
            let mut coords = cur.coords.clone();
            coords[s] -= &k;
            let mut word = vec![s];
            word.extend_from_slice(&cur.origin.1);
            let origin = (cur.origin.0, word);
            seen.insert(root.clone(), found.len());
            found.push(Found { root, coroot, coords, origin });
        }
        head += 1;
    }

    // positives sorted by base coordinates, then their negatives in the same order
    let mut pos: Vec<usize> = Vec::new();
    for (i, f) in found.iter().enumerate() {
        let nonneg = f.coords.iter().all(|c| !c.is_negative());
        let nonpos = f.coords.iter().all(|c| !c.is_positive());
        match (nonneg, nonpos) {
            (true, false) => pos.push(i),
            (false, true) => {}
            _ => return Err(Error::ConsistencyFailure("root with mixed-sign base coordinates".into())),
        }
    }
    if 2 * pos.len() != found.len() {
        return Err(Error::ConsistencyFailure("roots are not symmetric under negation".into()));
    }
    pos.sort_by(|&i, &j| found[i].coords.cmp(&found[j].coords));
    let mut order = pos.clone();
    for &i in &pos {
        let neg: Vec<BigInt> = found[i].root.iter().map(|x| -x).collect();
        let j = *seen
            .get(&neg)
            .ok_or_else(|| Error::ConsistencyFailure("negative of a root is missing".into()))?;
        order.push(j);
    }
    let mut slots: Vec<Option<Found>> = found.into_iter().map(Some).collect();
    let mut roots = Vec::with_capacity(order.len());
    let mut coroots = Vec::with_capacity(order.len());
    let mut base_coords = Vec::with_capacity(order.len());
    let mut origins = Vec::with_capacity(order.len());
    for &i in &order {
        let f = slots[i].take().unwrap();
        roots.push(f.root);
        coroots.push(f.coroot);
        base_coords.push(f.coords);
        origins.push(f.origin);
    }
    let root_index: HashMap<Vec<BigInt>, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let coroot_index: HashMap<Vec<BigInt>, usize> =
        coroots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let base_indices: Vec<usize> = (0..r).map(|s| root_index[a.row(s)]).collect();

    let weyl_gens: Vec<IntMat> = (0..r)
        .map(|s| {
            let mut m = IntMat::identity(n);
            for i in 0..n {
                for j in 0..n {
                    let v = m.get(i, j) - a.get(s, i) * acheck.get(s, j);
                    m.set(i, j, v);
                }
            }
            m
        })
        .collect();
    let gen_perms: Vec<Vec<usize>> = (0..r)
        .map(|s| {
            roots
                .iter()
                .map(|x| {
                    let k = dot(x, acheck.row(s));
                    root_index[&axpy(x, &k, a.row(s))]
                })
                .collect()
        })
        .collect();

    Ok(RootDatum {
        a: a.clone(),
        acheck: acheck.clone(),
        cartan,
        roots,
        coroots,
        base_coords,
        origins,
        base_indices,
        weyl_gens,
        gen_perms,
        root_index,
        coroot_index,
    })
}

impl RootDatum {
    /// |S|
    pub fn base_size(&self) -> usize {
        self.a.rows()
    }

    /// Rank of X.
    pub fn rank(&self) -> usize {
        self.a.cols()
    }

    pub fn a(&self) -> &IntMat {
        &self.a
    }

    pub fn acheck(&self) -> &IntMat {
        &self.acheck
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<BigInt>] {
        &self.coroots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of −α_i.
    pub fn neg_index(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    /// Coordinates of root i in the base {α_s}.
    pub fn base_coords(&self, i: usize) -> &[BigInt] {
        &self.base_coords[i]
    }

    /// Root i equals s_{w[0]}⋯s_{w[k]}(α_s) for the returned (s, w).
    pub fn origin(&self, i: usize) -> (usize, &[usize]) {
        (self.origins[i].0, &self.origins[i].1)
    }

    pub fn base_indices(&self) -> &[usize] {
        &self.base_indices
    }

    /// M_s = I − a_s·ǎ_sᵀ acting on column vectors of X.
    pub fn weyl_gens(&self) -> &[IntMat] {
        &self.weyl_gens
    }

    /// Root permutation of the simple reflection s.
    pub fn gen_perm(&self, s: usize) -> &[usize] {
        &self.gen_perms[s]
    }

    pub fn root_index(&self, v: &[BigInt]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn coroot_index(&self, v: &[BigInt]) -> Option<usize> {
        self.coroot_index.get(v).copied()
    }

    /// ⟨λ, ν⟩ for λ ∈ X and ν ∈ Y.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        dot(x, y)
    }

    /// w_s(λ) = λ − ⟨λ, α_s∨⟩α_s.
    pub fn reflect(&self, s: usize, x: &[BigInt]) -> Vec<BigInt> {
        axpy(x, &dot(x, self.acheck.row(s)), self.a.row(s))
    }

    /// δ(w_s)(ν) = ν − ⟨α_s, ν⟩α_s∨.
    pub fn coreflect(&self, s: usize, y: &[BigInt]) -> Vec<BigInt> {
        axpy(y, &dot(self.a.row(s), y), self.acheck.row(s))
    }

    pub fn is_semisimple(&self) -> bool {
        self.base_size() == self.rank()
    }

    pub fn weyl_group(&self, cap: usize) -> Result<WeylGroup> {
        WeylGroup::new(self, cap)
    }
}

pub fn weyl_group(d: &RootDatum, cap: usize) -> Result<WeylGroup> {
    WeylGroup::new(d, cap)
}

/// A = I, Ǎ = C.
pub fn adjoint_datum(c: &CartanMatrix) -> RootDatum {
    build_datum(&IntMat::identity(c.size()), c.entries()).expect("valid Cartan matrix")
}

/// Ǎ = I, A = Cᵀ.
pub fn sc_datum(c: &CartanMatrix) -> RootDatum {
    build_datum(&c.entries().transpose(), &IntMat::identity(c.size())).expect("valid Cartan matrix")
}

/// The datum of an n-dimensional torus (no roots).
pub fn toric_datum(n: usize) -> RootDatum {
    build_datum(&IntMat::zeros(0, n), &IntMat::zeros(0, n)).unwrap()
}

pub fn dual_datum(d: &RootDatum) -> RootDatum {
    build_datum(&d.acheck, &d.a).expect("dual of a valid datum")
}

pub fn direct_product(d1: &RootDatum, d2: &RootDatum) -> RootDatum {
    build_datum(&IntMat::block_diag(&d1.a, &d2.a), &IntMat::block_diag(&d1.acheck, &d2.acheck))
        .expect("product of valid data")
}

/// A lattice ℤC ⊆ L ⊆ Ω; the columns of `basis` are a basis of L in the
/// ω-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub cartan: CartanMatrix,
    pub basis: IntMat,
}

/// Ǎ = basis, Aᵀ = basis⁻¹·C.
pub fn datum_from_lattice(l: &LatticeSpec) -> Result<RootDatum> {
    let r = l.cartan.size();
    if l.basis.rows() != r || l.basis.cols() != r {
        return Err(Error::Dimension(format!("lattice basis must be {r}x{r}")));
    }
    let inv = l.basis.inverse_rational().ok_or(Error::LatticeNotAboveZC)?;
    let at = (&inv * &l.cartan.entries().to_quad()).to_int().ok_or(Error::LatticeNotAboveZC)?;
    build_datum(&at.transpose(), &l.basis)
}

/// One lattice per subgroup of Ω/ℤC, with the invariants of L/ℤC.
/// Ordered by subgroup size; ℤC first and Ω last.
pub fn enumerate_isogeny_classes(c: &CartanMatrix) -> Vec<(LatticeSpec, Vec<BigInt>)> {
    let r = c.size();
    let sf = smith_normal_form(c.entries());
    let diag = sf.diagonal();
    let tors: Vec<usize> = (0..r).filter(|&i| !diag[i].is_one()).collect();
    let mods: Vec<u64> = tors.iter().map(|&i| diag[i].to_u64().expect("small fundamental group")).collect();
    let uinv = sf.u.inverse_integral().expect("unimodular");

    type Elem = Vec<u64>;
    let add = |x: &Elem, y: &Elem| -> Elem { x.iter().zip(y).zip(&mods).map(|((a, b), m)| (a + b) % m).collect() };
    let mut elements: Vec<Elem> = vec![vec![]];
    for &m in &mods {
        elements = elements
            .into_iter()
            .flat_map(|e| {
                (0..m).map(move |k| {
                    let mut e2 = e.clone();
                    e2.push(k);
                    e2
                })
            })
            .collect();
    }
    let zero: Elem = vec![0; mods.len()];
    let span = |h: &BTreeSet<Elem>, g: &Elem| -> BTreeSet<Elem> {
        let mut multiples = vec![zero.clone()];
        let mut x = g.clone();
        while x != zero {
            multiples.push(x.clone());
            x = add(&x, g);
        }
        h.iter().flat_map(|a| multiples.iter().map(move |m| add(a, m))).collect()
    };
    let mut subgroups: Vec<BTreeSet<Elem>> = vec![BTreeSet::from([zero.clone()])];
    let mut known: BTreeSet<Vec<Elem>> = BTreeSet::from([vec![zero.clone()]]);
    let mut head = 0;
    while head < subgroups.len() {
        for g in &elements {
            if subgroups[head].contains(g) {
                continue;
            }
            let h2 = span(&subgroups[head], g);
            let key: Vec<Elem> = h2.iter().cloned().collect();
            if known.insert(key) {
                subgroups.push(h2);
            }
        }
        head += 1;
    }
    subgroups.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.iter().cmp(y.iter())));
    let total = elements.len();
    subgroups
        .iter()
        .map(|h| {
            let basis = if h.len() == 1 {
                c.entries().clone()
            } else if h.len() == total {
                IntMat::identity(r)
            } else {
                let mut cols: Vec<Vec<BigInt>> = (0..r).map(|j| c.entries().col(j)).collect();
                for e in h {
                    let mut y = vec![BigInt::zero(); r];
                    for (k, &i) in tors.iter().enumerate() {
                        y[i] = BigInt::from(e[k]);
                    }
                    cols.push(uinv.mul_vec(&y));
                }
                let gens = IntMat::from_rows(cols, r).unwrap().transpose();
                lattice_basis(&gens)
            };
            let l = LatticeSpec { cartan: c.clone(), basis };
            let at = (&l.basis.inverse_rational().unwrap() * &c.entries().to_quad()).to_int().unwrap();
            let inv = cokernel_invariants(&at).1;
            (l, inv)
        })
        .collect()
}

/// (free rank, torsion invariants) of X/ℤR.
pub fn x_mod_zr_invariants(d: &RootDatum) -> (usize, Vec<BigInt>) {
    if d.base_size() == 0 {
        return (d.rank(), vec![]);
    }
    cokernel_invariants(&d.a.transpose())
}

/// True iff X/ℤR has no p′-torsion (p = 1: no torsion at all).
pub fn center_is_connected(d: &RootDatum, p: u64) -> bool {
    x_mod_zr_invariants(d).1.iter().all(|t| p > 1 && matches!(prime_power(t), Some((q, _)) if q == p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// P: X₂ → X₁ and P° with P·Bᵀ = Aᵀ·P° and P°·B̌ = Ǎ·P.
    Isomorphic { p: IntMat, pcirc: IntMat },
    NotIsomorphic,
    /// The bounded search over a positive-dimensional solution set found nothing.
    Indeterminate,
}

impl IsoVerdict {
    pub fn witness(&self) -> Option<(&IntMat, &IntMat)> {
        match self {
            IsoVerdict::Isomorphic { p, pcirc } => Some((p, pcirc)),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

fn perm_matrix(pi: &[usize]) -> IntMat {
    let mut m = IntMat::zeros(pi.len(), pi.len());
    for (s, &t) in pi.iter().enumerate() {
        m.set(s, t, BigInt::one());
    }
    m
}

fn unit_det(p: &IntMat) -> bool {
    p.det().abs().is_one()
}

/// Searches for an isomorphism D₂ → D₁ (data given as A, Ǎ and B, B̌).
///
/// For each Cartan isomorphism π the conditions on P are a linear system.
/// A unique solution is accepted if unimodular; a one-parameter family is
/// solved exactly when det is affine in the parameter; larger families
/// are searched in a small box.
pub fn isomorphic(d1: &RootDatum, d2: &RootDatum) -> IsoVerdict {
    let (r, n) = (d1.base_size(), d1.rank());
    if d2.base_size() != r || d2.rank() != n {
        return IsoVerdict::NotIsomorphic;
    }
    let (a, ach, b, bch) = (&d1.a, &d1.acheck, &d2.a, &d2.acheck);
    let mut indeterminate = false;
    for pi in cartan_isomorphisms(d1.cartan(), d2.cartan()) {
        let mut inv = vec![0; r];
        for (s, &t) in pi.iter().enumerate() {
            inv[t] = s;
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut rhs: Vec<BigInt> = Vec::new();
        for i in 0..n {
            for j in 0..r {
                let mut row = vec![BigInt::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] = b.get(j, k).clone();
                }
                rows.push(row);
                rhs.push(a.get(inv[j], i).clone());
            }
        }
        for s in 0..r {
            for j in 0..n {
                let mut row = vec![BigInt::zero(); n * n];
                for k in 0..n {
                    row[k * n + j] = ach.get(s, k).clone();
                }
                rows.push(row);
                rhs.push(bch.get(pi[s], j).clone());
            }
        }
        let sys = IntMat::from_rows(rows, n * n).unwrap();
        let Some((z, kernel)) = solve_integer(&sys, &rhs) else { continue };
        let mat = |v: &[BigInt]| IntMat::from_vec(n, n, v.to_vec());
        let at = |t: &[BigInt]| {
            let mut v = z.clone();
            for (tk, kv) in t.iter().zip(&kernel) {
                for (x, y) in v.iter_mut().zip(kv) {
                    *x += tk * y;
                }
            }
            mat(&v)
        };
        let found = match kernel.len() {
            0 => Some(mat(&z)).filter(unit_det),
            1 => solve_one_parameter(&at),
            k => {
                let radius: i64 = match k {
                    2 => 8,
                    3 => 3,
                    4 => 2,
                    5..=8 => 1,
                    _ => 0,
                };
                let f = box_search(k, radius, &at);
                if f.is_none() {
                    indeterminate = true;
                }
                f
            }
        };
        if let Some(p) = found {
            return IsoVerdict::Isomorphic { p, pcirc: perm_matrix(&pi) };
        }
        if kernel.len() == 1 && !is_affine(&at) {
            indeterminate = true;
        }
    }
    if indeterminate {
        IsoVerdict::Indeterminate
    } else {
        IsoVerdict::NotIsomorphic
    }
}

fn det_at(at: &dyn Fn(&[BigInt]) -> IntMat, t: i64) -> BigInt {
    at(&[BigInt::from(t)]).det()
}

fn is_affine(at: &dyn Fn(&[BigInt]) -> IntMat) -> bool {
    let f: Vec<BigInt> = (-1..=2).map(|t| det_at(at, t)).collect();
    f.windows(3).all(|w| &w[2] - &w[1] == &w[1] - &w[0])
}

fn solve_one_parameter(at: &dyn Fn(&[BigInt]) -> IntMat) -> Option<IntMat> {
    if is_affine(at) {
        let f0 = det_at(at, 0);
        let slope = det_at(at, 1) - &f0;
        if slope.is_zero() {
            return f0.abs().is_one().then(|| at(&[BigInt::zero()]));
        }
        for target in [BigInt::one(), -BigInt::one()] {
            let (t, rem) = (&target - &f0).div_rem(&slope);
            if rem.is_zero() {
                let p = at(&[t]);
                if unit_det(&p) {
                    return Some(p);
                }
            }
        }
        return None;
    }
    (0..=64i64).flat_map(|t| [t, -t]).map(|t| at(&[BigInt::from(t)])).find(unit_det)
}

fn box_search(k: usize, radius: i64, at: &dyn Fn(&[BigInt]) -> IntMat) -> Option<IntMat> {
    let side = (2 * radius + 1) as usize;
    let total = side.checked_pow(k as u32)?;
    (0..total).find_map(|mut code| {
        let t: Vec<BigInt> = (0..k)
            .map(|_| {
                let d = (code % side) as i64 - radius;
                code /= side;
                BigInt::from(d)
            })
            .collect();
        Some(at(&t)).filter(unit_det)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank1Kind {
    SL2Like,
    PGL2Like,
    GL2Like,
}

/// For a datum of type A₁: which of the factors of ⟨α, α∨⟩ = 2 lies in the
/// content of the root and which in the coroot.
pub fn rank1_classify(d: &RootDatum) -> Result<Rank1Kind> {
    if d.base_size() != 1 {
        return Err(Error::WrongType(format!("base of size {} is not of type A1", d.base_size())));
    }
    let content = |v: &[BigInt]| v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    match (content(d.a.row(0)).to_u32(), content(d.acheck.row(0)).to_u32()) {
        (Some(2), Some(1)) => Ok(Rank1Kind::SL2Like),
        (Some(1), Some(2)) => Ok(Rank1Kind::PGL2Like),
        (Some(1), Some(1)) => Ok(Rank1Kind::GL2Like),
        _ => Err(Error::ConsistencyFailure("unexpected contents of a rank-1 datum".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{standard_cartan, Family};

    fn m(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_i64(rows)
    }

    #[test]
    fn gl2_roots() {
        let a = m(&[vec![1, -1]]);
        let d = build_datum(&a, &a).unwrap();
        assert_eq!(d.num_roots(), 2);
        assert_eq!(d.roots()[0], vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn root_counts() {
        let b2 = standard_cartan(Family::B, 2).unwrap();
        assert_eq!(sc_datum(&b2).num_roots(), 8);
        let g2 = standard_cartan(Family::G, 2).unwrap();
        assert_eq!(adjoint_datum(&g2).num_roots(), 12);
        let e8 = standard_cartan(Family::E, 8).unwrap();
        assert_eq!(adjoint_datum(&e8).num_roots(), 240);
    }

    #[test]
    fn positives_first() {
        let d = adjoint_datum(&standard_cartan(Family::A, 2).unwrap());
        assert_eq!(d.num_positive(), 3);
        for i in 0..3 {
            let neg: Vec<BigInt> = d.roots()[i].iter().map(|x| -x).collect();
            assert_eq!(d.roots()[i + 3], neg);
        }
    }

    #[test]
    fn a3_lattices() {
        let c = standard_cartan(Family::A, 3).unwrap();
        let cl = enumerate_isogeny_classes(&c);
        assert_eq!(cl.len(), 3);
        assert_eq!(datum_from_lattice(&cl[0].0).unwrap(), adjoint_datum(&c));
        assert_eq!(datum_from_lattice(&cl[2].0).unwrap(), sc_datum(&c));
    }

    #[test]
    fn rank_one() {
        let d = build_datum(&m(&[vec![2, 0]]), &m(&[vec![1, 0]])).unwrap();
        assert_eq!(rank1_classify(&d).unwrap(), Rank1Kind::SL2Like);
        let d = build_datum(&m(&[vec![1, 1]]), &m(&[vec![1, 1]])).unwrap();
        assert_eq!(rank1_classify(&d).unwrap(), Rank1Kind::GL2Like);
    }
}
