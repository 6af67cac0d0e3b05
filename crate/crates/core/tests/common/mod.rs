//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use rootdata::cartan::{cartan_of_types, parse_type, standard_cartan, CartanMatrix, Family};
use rootdata::rootdatum::{adjoint_datum, catalog_by_name, sc_datum, RootDatum};

pub fn cartan(spec: &str) -> CartanMatrix {
    let types: Vec<(Family, usize)> = spec.split('x').map(|t| parse_type(t).unwrap()).collect();
    cartan_of_types(&types).unwrap()
}

/// Every Cartan type of rank ≤ 3, products included.
pub const SMALL_TYPES: &[&str] =
    &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1"];

/// Sampled types of rank 4 to 6.
pub const MEDIUM_TYPES: &[&str] = &["A4", "B4", "C4", "D4", "F4", "A5", "D5", "B5", "A6", "D6", "E6", "A2xG2"];

/// sc and ad data of the given types.
pub fn data_for(types: &[&str]) -> Vec<(String, RootDatum)> {
    let mut out = Vec::new();
    for t in types {
        let c = cartan(t);
        out.push((format!("sc {t}"), sc_datum(&c)));
        out.push((format!("ad {t}"), adjoint_datum(&c)));
    }
    out
}

/// Catalog groups whose character lattice has rank ≤ 4.
pub const CATALOG_RANK4: &[&str] = &[
    "GL(1)", "GL(2)", "GL(3)", "GL(4)", "SL(2)", "SL(3)", "SL(4)", "SL(5)", "PGL(2)", "PGL(3)", "PGL(4)", "PGL(5)",
    "Sp(2)", "Sp(4)", "Sp(6)", "Sp(8)", "Spin(3)", "Spin(5)", "Spin(6)", "Spin(7)", "Spin(8)", "Spin(9)", "SO(3)",
    "SO(4)", "SO(5)", "SO(6)", "SO(7)", "SO(8)", "SO(9)", "HSpin(8)",
];

pub fn catalog_rank4() -> Vec<(String, RootDatum)> {
    CATALOG_RANK4.iter().map(|n| (n.to_string(), catalog_by_name(n).unwrap())).collect()
}

/// Indecomposable types up to the given rank, without the duplicates C2 = B2 and D3 = A3.
pub fn indecomposable_up_to(rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for n in 1..=rank {
            if f.rank_ok(n) && !(f == Family::C && n == 2) && !(f == Family::D && n == 3) {
                out.push((f, n));
            }
        }
    }
    out
}

pub fn std(f: Family, n: usize) -> CartanMatrix {
    standard_cartan(f, n).unwrap()
}

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rootdata::exact_linalg::solve_integer;
use rootdata::generic_group::{order_polynomial_bn_with, tori_count_identity, CompleteRootDatum};
use rootdata::isogeny::{dual_morphism, PIsogeny};
use rootdata::rootdatum::{dual_datum, WeylGroup};

fn unit(n: usize, j: usize) -> Vec<BigInt> {
    (0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }).collect()
}

/// Every simple reflection maps R to R and R∨ to R∨.
pub fn root_closure(d: &RootDatum) -> bool {
    (0..d.base_size()).all(|s| {
        d.roots().iter().all(|x| d.root_index(&d.reflect(s, x)).is_some())
            && d.coroots().iter().all(|y| d.coroot_index(&d.coreflect(s, y)).is_some())
    })
}

/// ⟨α, α∨⟩ = 2, and the pairing is W-invariant on basis vectors.
pub fn pairing_ok(d: &RootDatum) -> bool {
    let n = d.rank();
    let two = BigInt::from(2);
    d.roots().iter().zip(d.coroots()).all(|(x, y)| d.pairing(x, y) == two)
        && (0..d.base_size()).all(|s| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let (x, y) = (unit(n, i), unit(n, j));
                    d.pairing(&d.reflect(s, &x), &d.coreflect(s, &y)) == d.pairing(&x, &y)
                })
            })
        })
}

/// No root is twice or half another root.
pub fn reduced(d: &RootDatum) -> bool {
    d.roots().iter().all(|x| {
        let doubled: Vec<BigInt> = x.iter().map(|v| v * 2).collect();
        let halved = x.iter().all(|v| (v % 2u32).is_zero()) && {
            let h: Vec<BigInt> = x.iter().map(|v| v / 2).collect();
            d.root_index(&h).is_some()
        };
        d.root_index(&doubled).is_none() && !halved
    })
}

/// λ − w(λ) ∈ ℤR for basis vectors λ and the listed elements of W.
pub fn weyl_moves_into_root_lattice(d: &RootDatum, w: &WeylGroup, elems: &[usize]) -> bool {
    let n = d.rank();
    if d.base_size() == 0 {
        return true;
    }
    let at = d.a().transpose();
    elems.iter().all(|&e| {
        let m = w.matrix(e);
        (0..n).all(|j| {
            let lam = unit(n, j);
            let wl = m.mul_vec(&lam);
            let diff: Vec<BigInt> = lam.iter().zip(&wl).map(|(a, b)| a - b).collect();
            solve_integer(&at, &diff).is_some()
        })
    })
}

/// Up to `k` elements spread through W.
pub fn sample(w: &WeylGroup, k: usize) -> Vec<usize> {
    let stride = (w.len() / k).max(1);
    (0..w.len()).step_by(stride).chain([w.len() - 1]).collect()
}

/// q_α recomputed from P alone: P·β = c·α with c > 0 for every source root
/// β, and c constant on W-orbits of the target.
pub fn q_orbit_constant(f: &PIsogeny) -> bool {
    let (src, tgt) = (f.source(), f.target());
    let mut q = vec![None::<BigInt>; tgt.num_roots()];
    for b in src.roots() {
        let v = f.matrix().mul_vec(b);
        let g = v.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        let hit = tgt.roots().iter().enumerate().find_map(|(i, a)| {
            let ga = a.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
            let c = &g / &ga;
            let cand: Vec<BigInt> = a.iter().map(|x| x * &c).collect();
            (cand == v).then_some((i, c))
        });
        match hit {
            Some((i, c)) if q[i].is_none() => q[i] = Some(c),
            _ => return false,
        }
    }
    let q: Vec<BigInt> = match q.into_iter().collect() {
        Some(q) => q,
        None => return false,
    };
    (0..tgt.base_size()).all(|s| (0..tgt.num_roots()).all(|i| q[tgt.gen_perm(s)[i]] == q[i])) && q == f.q_roots()
}

/// C·P° = P°·C′ with C of the target.
pub fn cartan_intertwined(f: &PIsogeny) -> bool {
    f.target().cartan().entries() * f.pcirc() == f.pcirc() * f.source().cartan().entries()
}

pub fn duality_involution(d: &RootDatum) -> bool {
    dual_datum(&dual_datum(d)) == *d && dual_datum(d).cartan().entries() == &d.cartan().entries().transpose()
}

pub fn dual_morphism_involution(f: &PIsogeny) -> bool {
    match dual_morphism(f).and_then(|g| dual_morphism(&g)) {
        Ok(g) => g == *f,
        Err(_) => false,
    }
}

pub fn tori_identity(crd: &CompleteRootDatum, w: &WeylGroup) -> bool {
    order_polynomial_bn_with(crd, w).and_then(|o| tori_count_identity(crd, w, &o)).unwrap_or(false)
}

/// Order table rows transcribed factor by factor: q-power, then (k, ε)
/// for each factor q^k − ε. ³D₄ carries q^8 + q^4 + 1 separately.
pub fn transcribed_row(label: &str) -> Option<rootdata::QPoly> {
    use rootdata::QPoly;
    let a = |n: usize, tw: bool| -> (usize, Vec<(usize, i64)>) {
        let n = n + 1;
        (n * (n - 1) / 2, (2..=n).map(|i| (i, if tw && i % 2 == 1 { -1 } else { 1 })).collect())
    };
    let bc = |n: usize| (n * n, (1..=n).map(|i| (2 * i, 1)).collect());
    let d = |n: usize, eps: i64| {
        let mut f: Vec<(usize, i64)> = (1..n).map(|i| (2 * i, 1)).collect();
        f.push((n, eps));
        (n * n - n, f)
    };
    let split = label.find(|c: char| c.is_ascii_alphabetic())?;
    let (prefix, rest) = label.split_at(split);
    let n: usize = rest[1..].parse().ok()?;
    let (pw, fac): (usize, Vec<(usize, i64)>) = match (prefix, &rest[..1]) {
        ("", "A") => a(n, false),
        ("", "B") | ("", "C") => bc(n),
        ("", "D") => d(n, 1),
        ("", "G") => (6, vec![(2, 1), (6, 1)]),
        ("", "F") => (24, vec![(2, 1), (6, 1), (8, 1), (12, 1)]),
        ("", "E") if n == 6 => (36, vec![(2, 1), (5, 1), (6, 1), (8, 1), (9, 1), (12, 1)]),
        ("2", "A") => a(n, true),
        ("2", "D") => d(n, -1),
        ("3", "D") => {
            let f = &(&QPoly::binomial(2, 1) * &QPoly::binomial(6, 1)) * &QPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
            return Some(f.shift(12));
        }
        ("2", "E") => (36, vec![(2, 1), (5, -1), (6, 1), (8, 1), (9, -1), (12, 1)]),
        ("2", "B") => (4, vec![(2, 1), (4, -1)]),
        ("2", "G") => (6, vec![(2, 1), (6, -1)]),
        ("2", "F") => (24, vec![(2, 1), (6, -1), (8, 1), (12, -1)]),
        _ => return None,
    };
    Some(fac.iter().fold(QPoly::one(), |acc, &(k, e)| &acc * &QPoly::binomial(k, e)).shift(pw))
}
