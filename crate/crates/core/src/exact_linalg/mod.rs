//! Exact arithmetic over ℤ, ℚ and ℚ(√p): matrices, Smith normal form,
//! polynomials and cyclotomic factorization.

mod matrix;
mod poly;
mod quad;
mod smith;

pub use matrix::{IntMat, Mat, QuadMat, Ring};
pub use poly::{cyclotomic, cyclotomic_factor, CyclotomicFactorization, QPoly};
pub use quad::{common_radicand, is_prime, prime_power, QuadNum};
pub use smith::{cokernel_invariants, lattice_basis, smith_normal_form, solve_integer, SmithForm};

/// det(y·I − M).
pub fn char_poly(m: &QuadMat) -> QPoly {
    m.char_poly()
}

/// Exact Horner evaluation f(x).
pub fn poly_eval(f: &QPoly, x: &QuadNum) -> crate::Result<QuadNum> {
    f.eval(x)
}
