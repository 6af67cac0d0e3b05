//! Smith normal form and the lattice computations built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMat;

/// U·M·V = S with U, V unimodular and S diagonal with d₁ | d₂ | ….
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Diagonal entries d₁, …, d_min(m,n), zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero invariant factors, units included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    /// Torsion part of coker(M): the invariant factors greater than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors().into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Free rank of coker(M) = rows − rank.
    pub fn cokernel_free_rank(&self) -> usize {
        self.s.rows() - self.rank()
    }
}

fn row_axpy(m: &mut IntMat, dst: usize, src: usize, q: &BigInt) {
    // row_dst -= q·row_src
    for j in 0..m.cols() {
        let v = m.get(dst, j) - q * m.get(src, j);
        m.set(dst, j, v);
    }
}

fn col_axpy(m: &mut IntMat, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let v = m.get(i, dst) - q * m.get(i, src);
        m.set(i, dst, v);
    }
}

pub fn smith_normal_form(m: &IntMat) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&p);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&p);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot is left; move it into place
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a.get(i, t).is_zero() && a.get(i, t).abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a.get(t, j).is_zero() && a.get(t, j).abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    a.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let neg_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &neg_one);
                    row_axpy(&mut u, t, i, &neg_one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            for j in 0..cols {
                let x = -a.get(t, j).clone();
                a.set(t, j, x);
            }
            for j in 0..rows {
                let x = -u.get(t, j).clone();
                u.set(t, j, x);
            }
        }
    }
    SmithForm { s: a, u, v }
}

/// (free rank, torsion invariants > 1) of ℤ^rows / (column span of M).
pub fn cokernel_invariants(m: &IntMat) -> (usize, Vec<BigInt>) {
    let sf = smith_normal_form(m);
    (sf.cokernel_free_rank(), sf.torsion())
}

/// A basis (as columns) of the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMat) -> IntMat {
    let sf = smith_normal_form(gens);
    let r = sf.rank();
    let uinv = sf.u.inverse_integral().expect("U is unimodular");
    // columns of U⁻¹·S span the same lattice as the columns of M
    let mut b = IntMat::zeros(gens.rows(), r);
    for j in 0..r {
        let d = sf.s.get(j, j);
        for i in 0..gens.rows() {
            b.set(i, j, uinv.get(i, j) * d);
        }
    }
    b
}

/// Integer solutions of M·z = b: a particular solution and a kernel basis.
pub fn solve_integer(m: &IntMat, b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    assert_eq!(b.len(), m.rows());
    let sf = smith_normal_form(m);
    let ub = sf.u.mul_vec(b);
    let r = sf.rank();
    let n = m.cols();
    let mut y = vec![BigInt::zero(); n];
    for i in 0..m.rows() {
        if i < r {
            let (q, rem) = ub[i].div_rem(sf.s.get(i, i));
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    let z = sf.v.mul_vec(&y);
    let kernel = (r..n).map(|j| sf.v.col(j)).collect();
    Some((z, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) -> SmithForm {
        let sf = smith_normal_form(m);
        assert_eq!(&(&sf.u * m) * &sf.v, sf.s);
        assert!(sf.u.is_unimodular() && sf.v.is_unimodular());
        assert!(sf.s.is_diagonal());
        let d = sf.diagonal();
        for w in d.windows(2) {
            assert!(w[1].is_zero() || (w[0] != BigInt::zero() && w[1].is_multiple_of(&w[0])));
        }
        sf
    }

    #[test]
    fn one_by_one() {
        assert_eq!(check(&IntMat::from_i64(&[vec![2]])).diagonal(), vec![BigInt::from(2)]);
    }

    #[test]
    fn cartan_a2_and_d4() {
        let a2 = IntMat::from_i64(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(check(&a2).diagonal(), vec![1.into(), 3.into()]);
        let d4 = IntMat::from_i64(&[
            vec![2, 0, -1, 0],
            vec![0, 2, -1, 0],
            vec![-1, -1, 2, -1],
            vec![0, 0, -1, 2],
        ]);
        let big: Vec<BigInt> = [1, 1, 2, 2].iter().map(|&x| x.into()).collect();
        assert_eq!(check(&d4).diagonal(), big);
    }

    #[test]
    fn divisibility_fixup() {
        let m = IntMat::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(check(&m).diagonal(), vec![1.into(), 6.into()]);
        let r = IntMat::from_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let sf = check(&r);
        assert_eq!(sf.cokernel_free_rank(), 0);
        let (free, tors) = cokernel_invariants(&r.transpose());
        assert_eq!((free, tors.len()), (1, 0));
    }

    #[test]
    fn solve_and_basis() {
        let m = IntMat::from_i64(&[vec![2, 4], vec![0, 6]]);
        let b = lattice_basis(&m);
        assert_eq!(b.det().abs(), BigInt::from(12));
        let (z, k) = solve_integer(&IntMat::from_i64(&[vec![2, 4]]), &[BigInt::from(6)]).unwrap();
        assert_eq!(&z[0] * 2 + &z[1] * 4, BigInt::from(6));
        assert_eq!(k.len(), 1);
        assert!(solve_integer(&IntMat::from_i64(&[vec![2, 4]]), &[BigInt::from(3)]).is_none());
    }
}
