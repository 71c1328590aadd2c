//! 2x2 matrices over [`MPoly`] and generic traceless matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{CycNum, MPoly, Var};
use crate::error::{Error, Result};

/// A 2x2 matrix `[[m11, m12], [m21, m22]]` over polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m: [MPoly; 4],
}

impl Mat2 {
    pub fn new(m11: MPoly, m12: MPoly, m21: MPoly, m22: MPoly) -> Mat2 {
        let n = m11.conductor();
        for p in [&m12, &m21, &m22] {
            assert_eq!(p.conductor(), n, "conductor mismatch in matrix entries");
        }
        Mat2 { m: [m11, m12, m21, m22] }
    }

    pub fn zero(n: u32) -> Mat2 {
        Mat2::new(MPoly::zero(n), MPoly::zero(n), MPoly::zero(n), MPoly::zero(n))
    }

    pub fn identity(n: u32) -> Mat2 {
        Mat2::new(MPoly::one(n), MPoly::zero(n), MPoly::zero(n), MPoly::one(n))
    }

    /// A matrix with constant entries.
    pub fn constant(c: [[CycNum; 2]; 2]) -> Mat2 {
        let [[p, q], [r, s]] = c;
        Mat2::new(MPoly::constant(p), MPoly::constant(q), MPoly::constant(r), MPoly::constant(s))
    }

    /// The matrix unit `e_ij` (1-based indices).
    pub fn unit(n: u32, i: usize, j: usize) -> Mat2 {
        let mut m = Mat2::zero(n);
        m.m[(i - 1) * 2 + (j - 1)] = MPoly::one(n);
        m
    }

    pub fn conductor(&self) -> u32 {
        self.m[0].conductor()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MPoly {
        &self.m[(i - 1) * 2 + (j - 1)]
    }

    pub fn trace(&self) -> MPoly {
        &self.m[0] + &self.m[3]
    }

    pub fn scale(&self, c: &CycNum) -> Mat2 {
        Mat2 { m: self.m.clone().map(|p| p.scale(c)) }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(MPoly::is_zero)
    }

    pub fn galois(&self, k: i64) -> Mat2 {
        Mat2 { m: self.m.clone().map(|p| p.galois(k)) }
    }
}

impl<'a> Add<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 { m: std::array::from_fn(|k| &self.m[k] + &rhs.m[k]) }
    }
}

impl<'a> Sub<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 { m: std::array::from_fn(|k| &self.m[k] - &rhs.m[k]) }
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &'a Mat2) -> Mat2 {
        let (x, y) = (&self.m, &rhs.m);
        let entry = |i: usize, j: usize| {
            let l = &x[i * 2] * &y[j];
            let r = &x[i * 2 + 1] * &y[2 + j];
            &l + &r
        };
        Mat2 { m: [entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)] }
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 { m: self.m.clone().map(|p| -p) }
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        &self + &rhs
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        &self - &rhs
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r, s] = &self.m;
        write!(f, "[[{p}, {q}], [{r}, {s}]]")
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The generic traceless matrix `[[a_i, b_i], [c_i, -a_i]]` over `Q(zeta_n)`.
pub fn generic_matrix(i: u32, n: u32) -> Mat2 {
    assert!(i >= 1, "variable indices start at 1");
    SL2Coords {
        a: MPoly::var(n, Var::a(i)),
        b: MPoly::var(n, Var::b(i)),
        c: MPoly::var(n, Var::c(i)),
    }
    .to_mat2()
}

/// `xy - yx`.
pub fn commutator(x: &Mat2, y: &Mat2) -> Mat2 {
    &(x * y) - &(y * x)
}

pub fn is_zero_mat(x: &Mat2) -> bool {
    x.is_zero()
}

/// Coordinates of a traceless matrix in the basis `v1 = e11 - e22`,
/// `v2 = e12`, `v3 = e21`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SL2Coords {
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
}

impl SL2Coords {
    pub fn to_mat2(&self) -> Mat2 {
        Mat2::new(self.a.clone(), self.b.clone(), self.c.clone(), -&self.a)
    }

    pub fn from_mat2(m: &Mat2) -> Result<SL2Coords> {
        if !m.trace().is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(SL2Coords { a: m.m[0].clone(), b: m.m[1].clone(), c: m.m[2].clone() })
    }

    pub fn as_array(&self) -> [&MPoly; 3] {
        [&self.a, &self.b, &self.c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Mat2 {
        generic_matrix(i, 1)
    }

    #[test]
    fn generic_matrix_shape() {
        let m = x(7);
        assert_eq!(m.to_string(), "[[a7, b7], [c7, -a7]]");
        assert!(x(3).trace().is_zero());
    }

    #[test]
    fn products() {
        assert_eq!(&x(1) * &Mat2::identity(1), x(1));
        assert_eq!(&Mat2::unit(1, 1, 2) * &Mat2::unit(1, 2, 1), Mat2::unit(1, 1, 1));
        let sq = &x(1) * &x(1);
        let s = &(&MPoly::var(1, Var::a(1)) * &MPoly::var(1, Var::a(1)))
            + &(&MPoly::var(1, Var::b(1)) * &MPoly::var(1, Var::c(1)));
        assert_eq!(sq, Mat2::new(s.clone(), MPoly::zero(1), MPoly::zero(1), s));
    }

    #[test]
    fn commutators() {
        assert!(is_zero_mat(&commutator(&x(1), &x(1))));
        let h = &Mat2::unit(1, 1, 1) - &Mat2::unit(1, 2, 2);
        assert_eq!(commutator(&Mat2::unit(1, 1, 2), &Mat2::unit(1, 2, 1)), h);
        assert!(commutator(&x(1), &x(2)).trace().is_zero());
        let l = commutator(&x(1), &x(2));
        let r = commutator(&x(2), &x(1));
        assert_eq!(l, -&r);
    }

    #[test]
    fn zero_tests() {
        assert!(is_zero_mat(&Mat2::zero(1)));
        assert!(!is_zero_mat(&x(1)));
        let a = &(&x(1) * &x(2)) * &x(1);
        let b = &x(1) * &(&x(2) * &x(1));
        assert!(is_zero_mat(&(&a - &b)));
    }

    #[test]
    fn coords_roundtrip() {
        let m = x(2);
        let c = SL2Coords::from_mat2(&m).unwrap();
        assert_eq!(c.to_mat2(), m);
        assert_eq!(SL2Coords::from_mat2(&Mat2::identity(1)), Err(Error::NotTraceless));
    }
}
