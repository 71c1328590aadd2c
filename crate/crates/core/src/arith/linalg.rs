//! Dense exact linear algebra over `Q(zeta_N)`.

use super::CycNum;
use crate::error::{Error, Result};

/// Rank by fraction-free (Bareiss) elimination.
///
/// `rows` may be ragged only if empty; all rows share the conductor `n`.
pub fn rank(rows: &[Vec<CycNum>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let n = rows[0][0].conductor();
    let mut m: Vec<Vec<CycNum>> = rows.to_vec();
    let (nr, nc) = (m.len(), m[0].len());
    let mut prev = CycNum::one(n);
    let mut r = 0;
    for col in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let prev_inv = prev.inv().expect("pivot is non-zero");
        for i in r + 1..nr {
            for j in col + 1..nc {
                let t = &(&m[r][col] * &m[i][j]) - &(&m[i][col] * &m[r][j]);
                m[i][j] = &t * &prev_inv;
            }
            m[i][col] = CycNum::zero(n);
        }
        prev = m[r][col].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form; returns the non-zero rows and pivot columns.
pub fn rref(rows: &[Vec<CycNum>]) -> (Vec<Vec<CycNum>>, Vec<usize>) {
    if rows.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let mut m: Vec<Vec<CycNum>> = rows.to_vec();
    let (nr, nc) = (m.len(), m[0].len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv().expect("pivot is non-zero");
        m[r] = m[r].iter().map(|x| x * &inv).collect();
        for i in 0..nr {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(p * &f);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// A basis of `{ v : rows * v = 0 }`, with `ncols` unknowns.
pub fn nullspace(rows: &[Vec<CycNum>], ncols: usize, n: u32) -> Vec<Vec<CycNum>> {
    let (red, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![CycNum::zero(n); ncols];
        v[free] = CycNum::one(n);
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix by Gauss-Jordan elimination.
pub fn inverse(m: &[Vec<CycNum>]) -> Result<Vec<Vec<CycNum>>> {
    let k = m.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let n = m[0][0].conductor();
    let aug: Vec<Vec<CycNum>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { CycNum::one(n) } else { CycNum::zero(n) }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < k || pivots[k - 1] >= k {
        return Err(Error::Singular);
    }
    Ok(red.into_iter().map(|r| r[k..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn m(n: u32, v: &[&[i64]]) -> Vec<Vec<CycNum>> {
        v.iter().map(|r| r.iter().map(|&x| CycNum::from_int(n, x)).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(1, &[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(1, &[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&m(3, &[&[1, 0], &[0, 1]])), 2);
        let w = CycNum::zeta(3);
        let rows = vec![
            vec![CycNum::one(3), w.clone()],
            vec![w.clone(), &w * &w],
        ];
        assert_eq!(rank(&rows), 1);
    }

    #[test]
    fn rank_agrees_with_rref() {
        let rows = m(1, &[&[2, 4, 6, 8], &[1, 3, 5, 7], &[3, 7, 11, 15], &[0, 1, 2, 3]]);
        assert_eq!(rank(&rows), rref(&rows).1.len());
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = m(1, &[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&rows, 3, 1);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let s = r.iter().zip(v).fold(CycNum::zero(1), |acc, (a, b)| &acc + &(a * b));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(1, &[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(1, &[&[1, -1], &[-1, 2]]));
        assert_eq!(inverse(&m(1, &[&[1, 2], &[2, 4]])), Err(Error::Singular));
        let h = vec![vec![CycNum::from_rat(1, Rat::new(1, 2))]];
        assert_eq!(inverse(&h).unwrap(), m(1, &[&[2]]));
    }
}
