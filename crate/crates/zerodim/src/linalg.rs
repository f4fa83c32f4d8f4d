//! Small exact linear algebra: rational inverses and integer Smith normal form.

use num_traits::{One, Zero};

use crate::rat::{qi, Q};

pub type QMat = Vec<Vec<Q>>;

pub fn to_qmat(m: &[Vec<i64>]) -> QMat {
    m.iter().map(|row| row.iter().map(|&x| qi(x)).collect()).collect()
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m.clone();
    let mut inv: QMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &QMat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Smith normal form of an integer matrix `a` (rows x cols).
///
/// Returns `(u, diag)` with `u` unimodular (rows x rows) such that
/// `u * a * v = diag(d_1, d_2, ...)` for some unimodular `v`. The quotient
/// `Z^rows / (column span of a)` is then `prod Z/d_i` (with `d_i = 0` meaning
/// a free factor), and `x -> (u x)_i mod d_i` is a canonical coordinate map.
pub fn smith_left(a: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<i128>) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        let mut done = true;
        let p = m[t][t];
        for i in t + 1..rows {
            let f = m[i][t] / p;
            if f != 0 {
                for j in 0..cols {
                    m[i][j] -= f * m[t][j];
                }
                for j in 0..rows {
                    u[i][j] -= f * u[t][j];
                }
            }
            if m[i][t] != 0 {
                done = false;
            }
        }
        for j in t + 1..cols {
            let f = m[t][j] / p;
            if f != 0 {
                for r in m.iter_mut() {
                    r[j] -= f * r[t];
                }
            }
            if m[t][j] != 0 {
                done = false;
            }
        }
        if !done {
            continue;
        }
        // divisibility condition on the rest of the block
        let mut fixed = true;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if m[i][j] % p != 0 {
                    for k in 0..cols {
                        m[t][k] += m[i][k];
                    }
                    for k in 0..rows {
                        u[t][k] += u[i][k];
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if fixed {
            if m[t][t] < 0 {
                for k in 0..cols {
                    m[t][k] = -m[t][k];
                }
                for k in 0..rows {
                    u[t][k] = -u[t][k];
                }
            }
            t += 1;
        }
    }
    let diag = (0..rows)
        .map(|i| if i < cols { m[i][i] } else { 0 })
        .collect();
    (u, diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a3_cartan() {
        let a = to_qmat(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let inv = inverse(&a).unwrap();
        // det = 4, inverse has denominators dividing 4
        assert_eq!(inv[0][0], crate::rat::q(3, 4));
        assert_eq!(inv[1][1], qi(1));
    }

    #[test]
    fn smith_of_cyclic_group() {
        // columns (2,-1,0),(-1,2,-1),(0,-1,2): quotient Z/4
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let (_, d) = smith_left(&a);
        let mut d: Vec<i128> = d.into_iter().collect();
        d.sort();
        assert_eq!(d, vec![1, 1, 4]);
    }
}
