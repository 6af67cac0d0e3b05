//! Univariate polynomials over ℚ(√p) and cyclotomic factorization.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::quad::{common_radicand, QuadNum};
use crate::error::{Error, Result};

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<QuadNum>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<QuadNum>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(QuadNum::one())
    }

    pub fn constant(c: QuadNum) -> Self {
        Self::new(vec![c])
    }

    /// c·y^k
    pub fn monomial(c: QuadNum, k: usize) -> Self {
        let mut v = vec![QuadNum::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| QuadNum::from_int(x)).collect())
    }

    pub fn from_ints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| QuadNum::from_int(x.clone())).collect())
    }

    /// y^k − s, the table building block (s = ±1).
    pub fn binomial(k: usize, s: i64) -> Self {
        let mut v = vec![QuadNum::zero(); k + 1];
        v[0] = QuadNum::from_int(-s);
        v[k] = v[k].clone() + QuadNum::one();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[QuadNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadNum {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadNum::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QuadNum> {
        self.coeffs.last()
    }

    /// Common radicand of the coefficients (0 when all are rational).
    pub fn radicand(&self) -> Result<u64> {
        self.coeffs.iter().try_fold(0, |p, c| common_radicand(p, c.radicand()))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    pub fn scale(&self, c: &QuadNum) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => Self::zero(),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![QuadNum::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &QuadNum) -> Result<QuadNum> {
        let mut acc = QuadNum::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(c)?;
        }
        Ok(acc)
    }

    /// f(−y).
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// f(y^r).
    pub fn compose_power(&self, r: usize) -> Self {
        assert!(r >= 1);
        let mut v = vec![QuadNum::zero(); self.coeffs.len().saturating_sub(1) * r + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * r] = c.clone();
        }
        Self::new(v)
    }

    /// Euclidean division over the field.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![QuadNum::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient, or `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(o);
        (self * &o.div_exact(&g).unwrap()).monic()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![QuadNum::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        QPoly::new(v)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_rational() && c.signum() < 0;
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "y".to_string(),
                (_, true) => format!("y^{k}"),
                (1, false) => format!("{}*y", wrap(&mag)),
                (_, false) => format!("{}*y^{k}", wrap(&mag)),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn wrap(c: &QuadNum) -> String {
    if c.is_rational() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Integer-coefficient helper: exact division by a monic integer polynomial.
fn int_div_monic(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    if f.len() <= dd {
        return None;
    }
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            r[k + j] -= &c * dc;
        }
        q[k] = c;
    }
    r[..dd].iter().all(|x| x.is_zero()).then_some(q)
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclotomic_ints(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    if let Some(v) = phi_cache().lock().unwrap().get(&d) {
        return v.clone();
    }
    // Φ_d = (y^d − 1) / ∏_{e | d, e < d} Φ_e
    let mut f = vec![BigInt::zero(); d as usize + 1];
    f[0] = -BigInt::one();
    f[d as usize] = BigInt::one();
    for e in 1..d {
        if d % e == 0 {
            f = int_div_monic(&f, &cyclotomic_ints(e)).expect("Φ_e divides y^d − 1");
        }
    }
    phi_cache().lock().unwrap().insert(d, f.clone());
    f
}

/// The d-th cyclotomic polynomial Φ_d.
pub fn cyclotomic(d: u32) -> QPoly {
    QPoly::from_ints(&cyclotomic_ints(d))
}

/// f = scalar · y^y_power · ∏ Φ_d^k · remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub y_power: u32,
    /// d ↦ multiplicity of Φ_d
    pub factors: BTreeMap<u32, u32>,
    pub scalar: BigInt,
    /// Non-cyclotomic part, `None` when the factorization is complete.
    pub remainder: Option<QPoly>,
}

impl CyclotomicFactorization {
    /// Multiplies the factors back together.
    pub fn expand(&self) -> QPoly {
        let mut f = QPoly::monomial(QuadNum::from_int(self.scalar.clone()), self.y_power as usize);
        for (&d, &k) in &self.factors {
            f = &f * &cyclotomic(d).pow(k);
        }
        if let Some(r) = &self.remainder {
            f = &f * r;
        }
        f
    }

    /// Multiset of indices, sorted, with repetition.
    pub fn indices(&self) -> Vec<u32> {
        self.factors.iter().flat_map(|(&d, &k)| std::iter::repeat_n(d, k as usize)).collect()
    }
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_one() {
            parts.push(self.scalar.to_string());
        }
        match self.y_power {
            0 => {}
            1 => parts.push("y".into()),
            k => parts.push(format!("y^{k}")),
        }
        for (&d, &k) in &self.factors {
            parts.push(if k == 1 { format!("Phi{d}") } else { format!("Phi{d}^{k}") });
        }
        if let Some(r) = &self.remainder {
            parts.push(format!("({r})"));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Factors an integer polynomial as y-power times cyclotomic polynomials,
/// trying Φ_d for d ≤ 5·deg(f) + 30 (enough for d/φ(d) ≤ 5, true below 2310).
pub fn cyclotomic_factor(f: &QPoly) -> Result<CyclotomicFactorization> {
    let mut c = f
        .int_coeffs()
        .ok_or_else(|| Error::NonIntegral("cyclotomic_factor needs integer coefficients".into()))?;
    if c.is_empty() {
        return Err(Error::BadParams("cyclotomic_factor of the zero polynomial".into()));
    }
    let y_power = c.iter().position(|x| !x.is_zero()).unwrap();
    c.drain(..y_power);
    let bound = 5 * (c.len() - 1) as u32 + 30;
    let mut factors = BTreeMap::new();
    for d in 1..=bound {
        if c.len() == 1 {
            break;
        }
        let phi = cyclotomic_ints(d);
        if phi.len() > c.len() {
            continue;
        }
        while c.len() >= phi.len() {
            match int_div_monic(&c, &phi) {
                Some(q) => {
                    c = q;
                    *factors.entry(d).or_insert(0) += 1;
                }
                None => break,
            }
        }
    }
    let (scalar, remainder) = if c.len() == 1 {
        (c[0].clone(), None)
    } else {
        (BigInt::one(), Some(QPoly::from_ints(&c)))
    };
    Ok(CyclotomicFactorization { y_power: y_power as u32, factors, scalar, remainder })
}
