//! Numbers (a + b√p)/d with a single prime radicand p.
//!
//! Values with b = 0 are stored with p = 0, so the normal form is unique and
//! two numbers are compatible whenever one of them is rational or both share
//! the same radicand. The arithmetic operators panic on incompatible
//! radicands; the `checked_*` methods report them as errors.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: BigInt,
    b: BigInt,
    p: u64,
    d: BigInt,
}

/// Trial-division primality test, enough for radicands.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Returns the radicand shared by `p` and `q`, treating 0 as "rational".
pub fn common_radicand(p: u64, q: u64) -> Result<u64> {
    match (p, q) {
        (0, x) | (x, 0) => Ok(x),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(Error::MixedRadicand(x, y)),
    }
}

impl QuadNum {
    /// Builds (a + b√p)/d. `p` must be 0 or prime when b ≠ 0.
    pub fn new(a: BigInt, b: BigInt, p: u64, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::BadParams("zero denominator".into()));
        }
        if !b.is_zero() && !is_prime(p) {
            return Err(Error::BadParams(format!("radicand {p} is not prime")));
        }
        Ok(Self { a, b, p, d }.normalized())
    }

    fn raw(a: BigInt, b: BigInt, p: u64, d: BigInt) -> Self {
        Self { a, b, p, d }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.d.is_negative() {
            self.a = -self.a;
            self.b = -self.b;
            self.d = -self.d;
        }
        if self.b.is_zero() {
            self.p = 0;
        }
        let g = self.a.gcd(&self.b).gcd(&self.d);
        if !g.is_one() && !g.is_zero() {
            self.a /= &g;
            self.b /= &g;
            self.d /= &g;
        }
        self
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Self { a: n.into(), b: BigInt::zero(), p: 0, d: BigInt::one() }
    }

    /// The rational number num/den.
    pub fn rational<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Self {
        let d = den.into();
        assert!(!d.is_zero(), "zero denominator");
        Self::raw(num.into(), BigInt::zero(), 0, d)
    }

    /// √p for a prime p.
    pub fn sqrt_prime(p: u64) -> Result<Self> {
        Self::new(BigInt::zero(), BigInt::one(), p, BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn den(&self) -> &BigInt {
        &self.d
    }
    /// 0 for rational values.
    pub fn radicand(&self) -> u64 {
        self.p
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.d.is_one()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.clone())
    }

    /// (numerator, denominator) when the value is rational.
    pub fn to_rational(&self) -> Option<(BigInt, BigInt)> {
        self.is_rational().then(|| (self.a.clone(), self.d.clone()))
    }

    /// Sign of the real number (a + b√p)/d.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let pb2 = &self.b * &self.b * BigInt::from(self.p);
        if a2 > pb2 {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let p = common_radicand(self.p, o.p)?;
        Ok(Self::raw(
            &self.a * &o.d + &o.a * &self.d,
            &self.b * &o.d + &o.b * &self.d,
            p,
            &self.d * &o.d,
        ))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o.clone())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let p = common_radicand(self.p, o.p)?;
        let pb = BigInt::from(p);
        Ok(Self::raw(
            &self.a * &o.a + &self.b * &o.b * pb,
            &self.a * &o.b + &self.b * &o.a,
            p,
            &self.d * &o.d,
        ))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/((a + b√p)/d) = d(a − b√p)/(a² − p b²); the norm is nonzero as p is prime.
        let norm = &self.a * &self.a - &self.b * &self.b * BigInt::from(self.p);
        Some(Self::raw(&self.d * &self.a, -(&self.d * &self.b), self.p, norm))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        let inv = o.inv().ok_or(Error::Singular)?;
        self.checked_mul(&inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// p^(e/2) for a prime p (or 1 when e = 0); e may be negative.
    pub fn prime_half_power(p: u64, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let pb = BigInt::from(p);
        let k = e.unsigned_abs();
        let int_part = num_traits::pow(pb, (k / 2) as usize);
        let pos = if k % 2 == 0 {
            Self::from_int(int_part)
        } else {
            Self::raw(BigInt::zero(), int_part, p, BigInt::one())
        };
        if e > 0 {
            pos
        } else {
            pos.inv().expect("nonzero")
        }
    }

    /// Recognizes a value p^(e/2) with p prime and returns (p, e). Returns
    /// `Some((1, 0))` for 1 and `None` for anything else.
    pub fn as_prime_half_power(&self) -> Option<(u64, i64)> {
        if !self.is_positive() {
            return None;
        }
        if self.is_one() {
            return Some((1, 0));
        }
        if self.is_rational() {
            let (n, d) = (&self.a, &self.d);
            if d.is_one() {
                let (p, k) = prime_power(n)?;
                Some((p, 2 * k as i64))
            } else if n.is_one() {
                let (p, k) = prime_power(d)?;
                Some((p, -2 * k as i64))
            } else {
                None
            }
        } else {
            if !self.a.is_zero() {
                return None;
            }
            // (b√p)/d = p^(e/2) with e odd: b/d must be a power of p itself.
            let p = self.p;
            let ratio = Self::rational(self.b.clone(), self.d.clone());
            let (q, k) = ratio.as_prime_half_power()?;
            if q != 1 && q != p {
                return None;
            }
            Some((p, k + 1))
        }
    }

    /// The positive n-th root of a positive integer `value`, provided it has the
    /// form p^(e/2). Used for q = |det P|^(1/n).
    pub fn prime_power_root(value: &BigInt, n: u32) -> Option<Self> {
        if !value.is_positive() || n == 0 {
            return None;
        }
        if value.is_one() {
            return Some(Self::one());
        }
        let (p, k) = prime_power(value)?;
        let twice = 2 * k;
        if twice % n as u64 != 0 {
            return None;
        }
        Some(Self::prime_half_power(p, (twice / n as u64) as i64))
    }

    /// Parses "p^a/b" (b ∈ {1, 2}), "p^a" or a plain integer.
    pub fn parse_power(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected p^a/b with b in {{1,2}}, got {s:?}"));
        let (base, exp) = match s.split_once('^') {
            Some((b, e)) => (b, e),
            None => (s, "1"),
        };
        let base: u64 = base.trim().parse().map_err(|_| bad())?;
        let (num, den) = match exp.split_once('/') {
            Some((n, d)) => (n, d),
            None => (exp, "1"),
        };
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den != 1 && den != 2 {
            return Err(bad());
        }
        if den == 2 && num % 2 != 0 {
            if !is_prime(base) {
                return Err(Error::Parse(format!("radicand {base} is not prime")));
            }
            return Ok(Self::prime_half_power(base, num));
        }
        let e = if den == 2 { num / 2 } else { num };
        let b = BigInt::from(base);
        Ok(if e >= 0 {
            Self::from_int(num_traits::pow(b, e as usize))
        } else {
            Self::rational(1, num_traits::pow(b, (-e) as usize))
        })
    }

    /// "p^a/b" form when the value is a prime half-power.
    pub fn to_power_string(&self) -> Option<String> {
        let (p, e) = self.as_prime_half_power()?;
        if p == 1 {
            return Some("1".into());
        }
        Some(if e % 2 == 0 { format!("{p}^{}", e / 2) } else { format!("{p}^{e}/2") })
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (a + b * (self.p as f64).sqrt()) / d
    }
}

fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Writes n = p^k with p prime, k ≥ 1, when possible.
pub fn prime_power(n: &BigInt) -> Option<(u64, u64)> {
    if n <= &BigInt::one() {
        return None;
    }
    let mut p = None;
    let mut k = 2u64;
    while k < 1_000_000 {
        let kb = BigInt::from(k);
        if &kb * &kb > *n {
            break;
        }
        if (n % &kb).is_zero() {
            p = Some(k);
            break;
        }
        k += 1;
    }
    let p = match p {
        Some(p) => p,
        // no small factor: `n` is prime only if it still fits the radicand type
        None => return n.to_u64().map(|v| (v, 1)),
    };
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut e = 0;
    while (&m % &pb).is_zero() {
        m /= &pb;
        e += 1;
    }
    m.is_one().then_some((p, e))
}

impl Zero for QuadNum {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadNum {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for QuadNum {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $m(self, o: &QuadNum) -> QuadNum {
                self.$checked(o).expect("QuadNum arithmetic")
            }
        }
        impl $tr for QuadNum {
            type Output = QuadNum;
            fn $m(self, o: QuadNum) -> QuadNum {
                (&self).$m(&o)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a, b: -self.b, p: self.p, d: self.d }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -self.clone()
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        let diff = self.checked_sub(o).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.b.is_zero() {
            self.a.to_string()
        } else {
            let rad = if self.b.is_one() {
                format!("sqrt({})", self.p)
            } else if self.b == -BigInt::one() {
                format!("-sqrt({})", self.p)
            } else {
                format!("{}*sqrt({})", self.b, self.p)
            };
            if self.a.is_zero() {
                rad
            } else if self.b.is_positive() {
                format!("{}+{}", self.a, rad)
            } else {
                format!("{}{}", self.a, rad)
            }
        };
        if self.d.is_one() {
            write!(f, "{num}")
        } else if self.b.is_zero() || self.a.is_zero() {
            write!(f, "{num}/{}", self.d)
        } else {
            write!(f, "({num})/{}", self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, p: u64, d: i64) -> QuadNum {
        QuadNum::new(a.into(), b.into(), p, d.into()).unwrap()
    }

    #[test]
    fn normal_form() {
        assert_eq!(q(2, 4, 2, 6), q(1, 2, 2, 3));
        assert_eq!(q(3, 0, 5, -6), QuadNum::rational(-1, 2));
        assert_eq!(q(2, 0, 7, 1).radicand(), 0);
    }

    #[test]
    fn sqrt_two_squared() {
        let r = QuadNum::sqrt_prime(2).unwrap();
        assert_eq!(&r * &r, QuadNum::from_int(2));
        assert_eq!(r.inv().unwrap(), q(0, 1, 2, 2));
    }

    #[test]
    fn mixed_radicands_rejected() {
        let r2 = QuadNum::sqrt_prime(2).unwrap();
        let r3 = QuadNum::sqrt_prime(3).unwrap();
        assert_eq!(r2.checked_add(&r3), Err(Error::MixedRadicand(2, 3)));
    }

    #[test]
    fn signs() {
        assert_eq!(q(3, -2, 2, 1).signum(), 1); // 3 - 2.83
        assert_eq!(q(2, -2, 2, 1).signum(), -1);
        assert_eq!(q(-1, 1, 3, 1).signum(), 1);
    }

    #[test]
    fn half_powers() {
        let x = QuadNum::parse_power("2^3/2").unwrap();
        assert_eq!(x, q(0, 2, 2, 1));
        assert_eq!(x.as_prime_half_power(), Some((2, 3)));
        assert_eq!(x.to_power_string().unwrap(), "2^3/2");
        assert_eq!(QuadNum::parse_power("5^1").unwrap(), QuadNum::from_int(5));
        assert_eq!(QuadNum::parse_power("3^4/2").unwrap(), QuadNum::from_int(9));
        assert_eq!(q(0, 1, 2, 2).as_prime_half_power(), Some((2, -1)));
        assert_eq!(QuadNum::from_int(6).as_prime_half_power(), None);
        assert!(QuadNum::parse_power("2^1/3").is_err());
    }

    #[test]
    fn prime_power_roots() {
        assert_eq!(QuadNum::prime_power_root(&BigInt::from(4), 2), Some(QuadNum::from_int(2)));
        assert_eq!(QuadNum::prime_power_root(&BigInt::from(2), 2), Some(QuadNum::sqrt_prime(2).unwrap()));
        assert_eq!(QuadNum::prime_power_root(&BigInt::from(6), 1), None);
        assert_eq!(QuadNum::prime_power_root(&BigInt::from(8), 2), Some(q(0, 2, 2, 1)));
    }
}
