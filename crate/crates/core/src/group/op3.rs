use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{linalg, CycNum, MPoly, Rat};
use crate::error::{Error, Result};
use crate::pair::{Mat2, SL2Coords};

/// A linear operator on `sl2`, written as a 3x3 matrix acting on the
/// coordinate column `(a, b, c)` in the basis `v1 = e11 - e22`, `v2 = e12`,
/// `v3 = e21`. Composition is matrix product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Op3 {
    pub m: [[CycNum; 3]; 3],
}

impl Op3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> CycNum) -> Op3 {
        Op3 { m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn zero(n: u32) -> Op3 {
        Op3::from_fn(|_, _| CycNum::zero(n))
    }

    pub fn identity(n: u32) -> Op3 {
        Op3::from_fn(|i, j| if i == j { CycNum::one(n) } else { CycNum::zero(n) })
    }

    pub fn diag(d: [CycNum; 3]) -> Op3 {
        let n = d[0].conductor();
        Op3::from_fn(|i, j| if i == j { d[i].clone() } else { CycNum::zero(n) })
    }

    /// The matrix unit `E_ij` (1-based): sends `v_j` to `v_i`.
    pub fn unit(n: u32, i: usize, j: usize) -> Op3 {
        Op3::from_fn(|r, c| if r + 1 == i && c + 1 == j { CycNum::one(n) } else { CycNum::zero(n) })
    }

    pub fn from_ints(n: u32, rows: [[i64; 3]; 3]) -> Op3 {
        Op3::from_fn(|i, j| CycNum::from_int(n, rows[i][j]))
    }

    pub fn conductor(&self) -> u32 {
        self.m[0][0].conductor()
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.m[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(CycNum::is_zero)
    }

    pub fn scale(&self, c: &CycNum) -> Op3 {
        Op3::from_fn(|i, j| &self.m[i][j] * c)
    }

    pub fn scale_rat(&self, r: &Rat) -> Op3 {
        Op3::from_fn(|i, j| self.m[i][j].scale(r))
    }

    pub fn pow(&self, k: u32) -> Op3 {
        (0..k).fold(Op3::identity(self.conductor()), |acc, _| &acc * self)
    }

    pub fn inverse(&self) -> Result<Op3> {
        let rows: Vec<Vec<CycNum>> = self.m.iter().map(|r| r.to_vec()).collect();
        let inv = linalg::inverse(&rows)?;
        Ok(Op3::from_fn(|i, j| inv[i][j].clone()))
    }

    /// Row-major flattening, used for span computations.
    pub fn flatten(&self) -> Vec<CycNum> {
        self.m.iter().flatten().cloned().collect()
    }

    pub fn galois(&self, k: i64) -> Op3 {
        Op3::from_fn(|i, j| self.m[i][j].galois(k))
    }

    pub fn apply(&self, x: &SL2Coords) -> SL2Coords {
        let src = x.as_array();
        let row = |i: usize| {
            let mut acc = MPoly::zero(self.conductor());
            for (j, p) in src.iter().enumerate() {
                if !self.m[i][j].is_zero() {
                    acc = &acc + &p.scale(&self.m[i][j]);
                }
            }
            acc
        };
        SL2Coords { a: row(0), b: row(1), c: row(2) }
    }

    /// Apply to a traceless matrix.
    pub fn apply_mat2(&self, x: &Mat2) -> Result<Mat2> {
        Ok(self.apply(&SL2Coords::from_mat2(x)?).to_mat2())
    }

    /// The operator `X -> B X B^-1` on `sl2` for an invertible constant
    /// matrix `B = [[p, q], [r, s]]`.
    pub fn adjoint(b: &[[CycNum; 2]; 2]) -> Result<Op3> {
        let n = b[0][0].conductor();
        let det = &(&b[0][0] * &b[1][1]) - &(&b[0][1] * &b[1][0]);
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let di = det.inv()?;
        let binv = [
            [&b[1][1] * &di, -&(&b[0][1] * &di)],
            [-&(&b[1][0] * &di), &b[0][0] * &di],
        ];
        let mul = |x: &[[CycNum; 2]; 2], y: &[[CycNum; 2]; 2]| -> [[CycNum; 2]; 2] {
            std::array::from_fn(|i| std::array::from_fn(|j| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j])))
        };
        let (one, zero) = (CycNum::one(n), CycNum::zero(n));
        let basis = [
            [[one.clone(), zero.clone()], [zero.clone(), -&one]],
            [[zero.clone(), one.clone()], [zero.clone(), zero.clone()]],
            [[zero.clone(), zero.clone()], [one.clone(), zero.clone()]],
        ];
        let cols: Vec<[CycNum; 3]> = basis
            .iter()
            .map(|v| {
                let img = mul(&mul(b, v), &binv);
                [img[0][0].clone(), img[0][1].clone(), img[1][0].clone()]
            })
            .collect();
        Ok(Op3::from_fn(|i, k| cols[k][i].clone()))
    }
}

impl<'a> Mul<&'a Op3> for &'a Op3 {
    type Output = Op3;
    fn mul(self, rhs: &'a Op3) -> Op3 {
        let n = self.conductor();
        Op3::from_fn(|i, j| {
            (0..3).fold(CycNum::zero(n), |acc, k| {
                if self.m[i][k].is_zero() || rhs.m[k][j].is_zero() {
                    acc
                } else {
                    &acc + &(&self.m[i][k] * &rhs.m[k][j])
                }
            })
        })
    }
}

impl<'a> Add<&'a Op3> for &'a Op3 {
    type Output = Op3;
    fn add(self, rhs: &'a Op3) -> Op3 {
        Op3::from_fn(|i, j| &self.m[i][j] + &rhs.m[i][j])
    }
}

impl<'a> Sub<&'a Op3> for &'a Op3 {
    type Output = Op3;
    fn sub(self, rhs: &'a Op3) -> Op3 {
        Op3::from_fn(|i, j| &self.m[i][j] - &rhs.m[i][j])
    }
}

impl Neg for &Op3 {
    type Output = Op3;
    fn neg(self) -> Op3 {
        Op3::from_fn(|i, j| -&self.m[i][j])
    }
}

impl Mul for Op3 {
    type Output = Op3;
    fn mul(self, rhs: Op3) -> Op3 {
        &self * &rhs
    }
}

impl Add for Op3 {
    type Output = Op3;
    fn add(self, rhs: Op3) -> Op3 {
        &self + &rhs
    }
}

impl Sub for Op3 {
    type Output = Op3;
    fn sub(self, rhs: Op3) -> Op3 {
        &self - &rhs
    }
}

impl fmt::Display for Op3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Op3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: u32, k: i64) -> CycNum {
        CycNum::from_int(n, k)
    }

    #[test]
    fn adjoint_examples() {
        let n = 1;
        let grading = [[c(n, 1), c(n, 0)], [c(n, 0), c(n, -1)]];
        assert_eq!(Op3::adjoint(&grading).unwrap(), Op3::from_ints(n, [[1, 0, 0], [0, -1, 0], [0, 0, -1]]));
        let swap = [[c(n, 0), c(n, 1)], [c(n, 1), c(n, 0)]];
        assert_eq!(Op3::adjoint(&swap).unwrap(), Op3::from_ints(n, [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]));
        let id = [[c(n, 1), c(n, 0)], [c(n, 0), c(n, 1)]];
        assert_eq!(Op3::adjoint(&id).unwrap(), Op3::identity(n));
        let sing = [[c(n, 1), c(n, 2)], [c(n, 2), c(n, 4)]];
        assert_eq!(Op3::adjoint(&sing), Err(Error::Singular));
    }

    #[test]
    fn matrix_units_multiply() {
        let n = 1;
        for (i, j, k, l) in index_quadruples() {
            let lhs = &Op3::unit(n, i, j) * &Op3::unit(n, k, l);
            let rhs = if j == k { Op3::unit(n, i, l) } else { Op3::zero(n) };
            assert_eq!(lhs, rhs);
        }
    }

    fn index_quadruples() -> Vec<(usize, usize, usize, usize)> {
        let mut v = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    for l in 1..=3 {
                        v.push((i, j, k, l));
                    }
                }
            }
        }
        v
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Op3::from_ints(1, [[1, 2, 0], [0, 1, 0], [3, 0, 1]]);
        assert_eq!(&a * &a.inverse().unwrap(), Op3::identity(1));
    }
}
