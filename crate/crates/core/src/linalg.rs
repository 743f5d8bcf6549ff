//! Small dense linear algebra over any [`Field`].
//!
//! Sizes here are tiny (at most a handful of rows), so everything is plain
//! `Vec`-backed Gaussian elimination with magnitude pivoting. In exact mode
//! pivoting by magnitude only keeps intermediate rationals small.

use crate::scalar::Field;

pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn sub<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn add<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn scale<T: Field>(a: &[T], s: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * s.clone()).collect()
}

/// `a + t * d`
pub fn axpy<T: Field>(a: &[T], t: &T, d: &[T]) -> Vec<T> {
    a.iter()
        .zip(d)
        .map(|(x, y)| x.clone() + t.clone() * y.clone())
        .collect()
}

pub fn max_magnitude<T: Field>(a: &[T]) -> f64 {
    a.iter().map(Field::magnitude).fold(0.0, f64::max)
}

pub fn norm2<T: Field>(a: &[T]) -> f64 {
    a.iter().map(|x| x.magnitude().powi(2)).sum::<f64>().sqrt()
}

pub fn cross3<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn det2<T: Field>(a: &T, b: &T, c: &T, d: &T) -> T {
    a.clone() * d.clone() - b.clone() * c.clone()
}

/// Determinant of a square matrix given as rows.
pub fn det<T: Field>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    if n == 0 {
        return T::one();
    }
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut result = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].magnitude().total_cmp(&m[j][col].magnitude()))
            .expect("non-empty range");
        if m[pivot][col].is_zero() {
            return T::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            result = -result;
        }
        let p = m[col][col].clone();
        result = result * p.clone();
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone() / p.clone();
            for k in col..n {
                let v = m[col][k].clone();
                m[row][k] = m[row][k].clone() - factor.clone() * v;
            }
        }
    }
    result
}

/// Solves `m x = rhs`; `None` when the matrix is singular beyond `scale`.
pub fn solve<T: Field>(rows: &[Vec<T>], rhs: &[T], scale: f64) -> Option<Vec<T>> {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot =
            (col..n).max_by(|&i, &j| m[i][col].magnitude().total_cmp(&m[j][col].magnitude()))?;
        if m[pivot][col].negligible(scale) {
            return None;
        }
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for row in 0..n {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone() / p.clone();
            for k in col..=n {
                let v = m[col][k].clone();
                m[row][k] = m[row][k].clone() - factor.clone() * v;
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone() / m[i][i].clone()).collect())
}

pub fn mat_vec<T: Field>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul<T: Field>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).fold(T::zero(), |acc, (x, brow)| {
                        acc + x.clone() * brow[j].clone()
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Field>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn identity<T: Field>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular beyond `scale`.
pub fn inverse<T: Field>(m: &[Vec<T>], scale: f64) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let id = identity::<T>(n);
    let columns: Option<Vec<Vec<T>>> = (0..n)
        .map(|j| {
            let e: Vec<T> = id.iter().map(|row| row[j].clone()).collect();
            solve(m, &e, scale)
        })
        .collect();
    columns.map(|cols| transpose(&cols))
}

/// Normal of the hyperplane through `points` (n points in n-space), via
/// cofactor expansion of the difference matrix. Zero when degenerate.
pub fn hyperplane_normal<T: Field>(points: &[&[T]]) -> Vec<T> {
    let n = points[0].len();
    let diffs: Vec<Vec<T>> = points[1..].iter().map(|p| sub(p, points[0])).collect();
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<T>> = diffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Rank of a set of vectors, with float entries compared at `FLOAT_TOL`
/// relative to the largest entry.
pub fn rank<T: Field>(vectors: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = vectors.to_vec();
    let scale = m.iter().map(|v| max_magnitude(v)).fold(0.0, f64::max);
    if m.is_empty() || scale == 0.0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for col in 0..cols {
        if r == m.len() {
            break;
        }
        let pivot = (r..m.len())
            .max_by(|&i, &j| m[i][col].magnitude().total_cmp(&m[j][col].magnitude()))
            .expect("non-empty range");
        if m[pivot][col].negligible(scale) {
            continue;
        }
        m.swap(pivot, r);
        let p = m[r][col].clone();
        for row in r + 1..m.len() {
            let factor = m[row][col].clone() / p.clone();
            for k in col..cols {
                let v = m[r][k].clone();
                m[row][k] = m[row][k].clone() - factor.clone() * v;
            }
        }
        r += 1;
    }
    r
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn determinant_and_inverse_agree() {
        let m = vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 3.0, 1.0],
            vec![0.0, 1.0, 4.0],
        ];
        assert!((det(&m) - 18.0).abs() < 1e-12);
        let inv = inverse(&m, 1.0).unwrap();
        let prod = mat_mul(&m, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((v - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exact_solve() {
        let r = |n, d| Rational::from_ratio(n, d);
        let m = vec![vec![r(1, 2), r(1, 3)], vec![r(1, 5), r(1, 7)]];
        let x = solve(&m, &[r(1, 1), r(2, 1)], 1.0).unwrap();
        assert_eq!(mat_vec(&m, &x), vec![r(1, 1), r(2, 1)]);
    }

    #[test]
    fn combinations_enumerate_all() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(5, 3).len(), 10);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn hyperplane_normals() {
        let a = [0.0, 0.0, 1.0];
        let b = [1.0, 0.0, 1.0];
        let c = [0.0, 1.0, 1.0];
        let n = hyperplane_normal(&[&a, &b, &c]);
        assert_eq!(n, vec![0.0, 0.0, 1.0]);
        let p = [3.0];
        assert_eq!(hyperplane_normal(&[&p]), vec![1.0]);
    }

    #[test]
    fn rank_detects_dependence() {
        let v = vec![
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 6.0],
            vec![0.0, 1.0, 0.0],
        ];
        assert_eq!(rank(&v), 2);
    }
}
