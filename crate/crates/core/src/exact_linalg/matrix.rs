//! Dense row-major matrices over the integers and over ℚ(√p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::quad::{common_radicand, QuadNum};
use crate::error::{Error, Result};

/// Entry types usable in [`Mat`].
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Mat<BigInt>;
pub type QuadMat = Mat<QuadNum>;

impl<T: Ring> Mat<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries must number rows*cols");
        Self { rows, cols, data }
    }

    /// Builds from rows; `cols` is needed only when there are no rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let c = rows.first().map_or(cols, |r| r.len());
        if rows.iter().any(|r| r.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: n, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        m
    }

    /// Sub-matrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + j, i * self.cols + k);
        }
    }

    /// Entries nonzero in exactly one position per row and per column.
    pub fn is_monomial(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| self.row(i).iter().filter(|x| !x.is_zero()).count() == 1)
            && (0..self.cols).all(|j| (0..self.rows).filter(|&i| !self.get(i, j).is_zero()).count() == 1)
    }

    /// For a monomial matrix, the column index of the nonzero entry in each row.
    pub fn monomial_support(&self) -> Option<Vec<usize>> {
        if !self.is_monomial() {
            return None;
        }
        Some((0..self.rows).map(|i| self.row(i).iter().position(|x| !x.is_zero()).unwrap()).collect())
    }
}

impl<T: Ring> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, o: &Mat<T>) -> Mat<T> {
        self.checked_mul(o).expect("matrix dimensions")
    }
}

impl<T: Ring> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, o: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Ring> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, o: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Ring> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMat {
    /// Convenience constructor from small literals.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
            .expect("rectangular literal")
    }

    pub fn diag(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&pivot * m.get(i, j) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = pivot;
        }
        sign * m.get(n - 1, n - 1)
    }

    pub fn to_quad(&self) -> QuadMat {
        self.map(|x| QuadNum::from_int(x.clone()))
    }

    pub fn rank(&self) -> usize {
        self.to_quad().rank()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Inverse over ℚ, if it exists.
    pub fn inverse_rational(&self) -> Option<QuadMat> {
        self.to_quad().inverse()
    }

    /// Inverse over ℤ, if it exists.
    pub fn inverse_integral(&self) -> Option<IntMat> {
        self.inverse_rational()?.to_int()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

impl QuadMat {
    /// Common radicand of all entries.
    pub fn radicand(&self) -> Result<u64> {
        self.data.iter().try_fold(0, |p, x| common_radicand(p, x.radicand()))
    }

    /// The integer matrix with these entries, if all are integers.
    pub fn to_int(&self) -> Option<IntMat> {
        let data: Option<Vec<BigInt>> = self.data.iter().map(|x| x.to_integer()).collect();
        Some(Mat::from_vec(self.rows, self.cols, data?))
    }

    /// Row echelon form over the field; returns (echelon matrix, pivot columns, swap parity).
    fn echelon(&self) -> (QuadMat, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                m.swap_rows(p, r);
                odd = !odd;
            }
            let inv = m.get(r, c).inv().unwrap();
            for i in r + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn det(&self) -> QuadNum {
        assert!(self.is_square(), "det of a non-square matrix");
        let (m, pivots, odd) = self.echelon();
        if pivots.len() < self.rows {
            return QuadNum::zero();
        }
        let mut d = QuadNum::one();
        for i in 0..self.rows {
            d = &d * m.get(i, i);
        }
        if odd {
            -d
        } else {
            d
        }
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Option<QuadMat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QuadMat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pinv = a.get(c, c).inv().unwrap();
            for j in 0..n {
                a.set(c, j, a.get(c, j) * &pinv);
                inv.set(c, j, inv.get(c, j) * &pinv);
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j) - &(&f * a.get(c, j)));
                    inv.set(i, j, inv.get(i, j) - &(&f * inv.get(c, j)));
                }
            }
        }
        Some(inv)
    }

    /// det(y·I − M), via reduction to upper Hessenberg form.
    pub fn char_poly(&self) -> QPoly {
        assert!(self.is_square(), "char_poly of a non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else { continue };
            if piv != j + 1 {
                h.swap_rows(piv, j + 1);
                h.swap_cols(piv, j + 1);
            }
            let inv = h.get(j + 1, j).inv().unwrap();
            for k in j + 2..n {
                if h.get(k, j).is_zero() {
                    continue;
                }
                let u = h.get(k, j) * &inv;
                for c in 0..n {
                    let v = h.get(k, c) - &(&u * h.get(j + 1, c));
                    h.set(k, c, v);
                }
                for r in 0..n {
                    let v = h.get(r, j + 1) + &(&u * h.get(r, k));
                    h.set(r, j + 1, v);
                }
            }
        }
        // p[m] = char poly of the leading m×m block.
        let y = QPoly::monomial(QuadNum::one(), 1);
        let mut p: Vec<QPoly> = vec![QPoly::one()];
        for m in 0..n {
            let mut next = &(&y - &QPoly::constant(h.get(m, m).clone())) * &p[m];
            let mut prod = QuadNum::one();
            for i in (0..m).rev() {
                prod = &prod * h.get(i + 1, i);
                let c = &prod * h.get(i, m);
                if !c.is_zero() {
                    next = &next - &p[i].scale(&c);
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Smallest d ≤ bound with M^d = I.
    pub fn finite_order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for d in 1..=bound {
            if acc.is_identity() {
                return Some(d);
            }
            acc = &acc * self;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_field_det() {
        let m = IntMat::from_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.det(), BigInt::from(4));
        assert_eq!(m.to_quad().det(), QuadNum::from_int(4));
        let z = IntMat::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(z.det(), BigInt::from(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        let c = IntMat::from_i64(&[vec![2, -1], vec![-3, 2]]);
        let inv = c.inverse_integral().unwrap();
        assert!((&c * &inv).is_identity());
        let a2 = IntMat::from_i64(&[vec![2, -1], vec![-1, 2]]);
        assert!(a2.inverse_integral().is_none());
    }

    #[test]
    fn char_poly_small() {
        let r2 = QuadNum::sqrt_prime(2).unwrap();
        let m = QuadMat::from_vec(2, 2, vec![QuadNum::zero(), r2.inv().unwrap(), r2, QuadNum::zero()]);
        assert_eq!(m.char_poly(), QPoly::from_i64(&[-1, 0, 1]));
        let i2 = QuadMat::identity(2);
        assert_eq!(i2.char_poly(), QPoly::from_i64(&[1, -2, 1]));
        let neg = QuadMat::from_vec(1, 1, vec![QuadNum::from_int(-1)]);
        assert_eq!(neg.char_poly(), QPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn monomial() {
        let p = IntMat::from_i64(&[vec![0, 2], vec![4, 0]]);
        assert_eq!(p.monomial_support(), Some(vec![1, 0]));
        assert!(!IntMat::from_i64(&[vec![1, 1], vec![0, 1]]).is_monomial());
    }
}
