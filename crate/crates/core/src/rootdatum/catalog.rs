//! Classical groups by name.

use num_bigint::BigInt;
use num_traits::One;

use super::{adjoint_datum, build_datum, datum_from_lattice, sc_datum, LatticeSpec, RootDatum};
use crate::cartan::{standard_cartan, Family};
use crate::error::{Error, Result};
use crate::exact_linalg::{lattice_basis, IntMat};

pub const CATALOG_NAMES: &[&str] = &["GL", "SL", "PGL", "Sp", "Spin", "SO", "HSpin"];

/// A = Ǎ = the (n−1)×n matrix with rows e_i − e_{i+1}.
pub fn gl_datum(n: usize) -> Result<RootDatum> {
    if n == 0 {
        return Err(Error::BadParams("GL(0)".into()));
    }
    let mut a = IntMat::zeros(n - 1, n);
    for i in 0..n - 1 {
        a.set(i, i, BigInt::one());
        a.set(i, i + 1, -BigInt::one());
    }
    build_datum(&a, &a)
}

fn so_even(n: usize) -> Result<RootDatum> {
    // rows e1+e2, −e1+e2, −e_{k−1}+e_k for k = 3..n
    let mut a = IntMat::zeros(n, n);
    a.set(0, 0, BigInt::one());
    a.set(0, 1, BigInt::one());
    a.set(1, 0, -BigInt::one());
    a.set(1, 1, BigInt::one());
    for k in 2..n {
        a.set(k, k - 1, -BigInt::one());
        a.set(k, k, BigInt::one());
    }
    build_datum(&a, &a)
}

fn hspin(n: usize) -> Result<RootDatum> {
    let c = standard_cartan(Family::D, n)?;
    let mut gens = IntMat::zeros(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            gens.set(i, j, c.entries().get(i, j).clone());
        }
    }
    gens.set(0, n, BigInt::one());
    datum_from_lattice(&LatticeSpec { cartan: c.clone(), basis: lattice_basis(&gens) })
}

fn typed(f: Family, n: usize, sc: bool) -> Result<RootDatum> {
    let c = standard_cartan(f, n)?;
    Ok(if sc { sc_datum(&c) } else { adjoint_datum(&c) })
}

/// `name` is one of [`CATALOG_NAMES`]; `n` is the parameter in
/// parentheses (so Sp(4) is `catalog("Sp", 4)`).
pub fn catalog(name: &str, n: usize) -> Result<RootDatum> {
    let bad = || Error::BadParams(format!("{name}({n}) is not in the catalog"));
    match name.to_ascii_uppercase().as_str() {
        "GL" => gl_datum(n),
        "SL" if n >= 2 => typed(Family::A, n - 1, true),
        "PGL" if n >= 2 => typed(Family::A, n - 1, false),
        "SP" if n == 2 => typed(Family::A, 1, true),
        "SP" if n >= 4 && n % 2 == 0 => typed(Family::C, n / 2, true),
        "SPIN" if n == 3 => typed(Family::A, 1, true),
        "SPIN" if n >= 5 && n % 2 == 1 => typed(Family::B, n / 2, true),
        "SPIN" if n >= 6 && n % 2 == 0 => typed(Family::D, n / 2, true),
        "SO" if n == 3 => typed(Family::A, 1, false),
        "SO" if n >= 5 && n % 2 == 1 => typed(Family::B, n / 2, false),
        "SO" if n >= 4 && n % 2 == 0 => so_even(n / 2),
        "HSPIN" if n >= 8 && n % 4 == 0 => hspin(n / 2),
        _ => Err(bad()),
    }
}

/// Parses "GL(3)", "Sp(4)", "SO8".
pub fn catalog_by_name(s: &str) -> Result<RootDatum> {
    let s = s.trim();
    let split = s.find(|c: char| c.is_ascii_digit() || c == '(').ok_or_else(|| Error::Parse(format!("bad group name {s:?}")))?;
    let (name, rest) = s.split_at(split);
    let num = rest.trim_start_matches('(').trim_end_matches(')');
    let n: usize = num.parse().map_err(|_| Error::Parse(format!("bad parameter in {s:?}")))?;
    catalog(name, n)
}
