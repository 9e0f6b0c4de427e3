//! Exact dense linear algebra over `ℤ` and `ℚ`.
//!
//! Determinants use Bareiss fraction-free elimination. Echelon forms are
//! computed over the integers with row-content normalization; pivots are the
//! leftmost nonzero column of each row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix with rows of equal length.
pub type Matrix<T> = Vec<Vec<T>>;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_bareiss(m: &Matrix<BigInt>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn common_denominator(rows: &Matrix<BigRational>) -> BigInt {
    rows.iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Determinant of a square rational matrix: denominators are cleared and the
/// integer determinant rescaled.
pub fn det_rational(m: &Matrix<BigRational>) -> BigRational {
    let n = m.len();
    let l = common_denominator(m);
    let ints: Matrix<BigInt> = m
        .iter()
        .map(|r| r.iter().map(|q| (q * &l).to_integer()).collect())
        .collect();
    BigRational::new(det_bareiss(&ints), l.pow(n as u32))
}

/// Integer matrix whose rows are positive multiples of the rational rows.
pub fn clear_denominators(m: &Matrix<BigRational>) -> Matrix<BigInt> {
    m.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            r.iter().map(|q| (q * &l).to_integer()).collect()
        })
        .collect()
}

fn normalize_row(r: &mut [BigInt]) {
    let g = r.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in r.iter_mut() {
            *x /= &g;
        }
    }
    if let Some(lead) = r.iter().find(|x| !x.is_zero()) {
        if lead.is_negative() {
            for x in r.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// Reduced echelon form over `ℤ`: each pivot column is zero outside its pivot
/// row. Returns the nonzero rows and their pivot columns.
pub fn integer_rref(m: &Matrix<BigInt>) -> (Matrix<BigInt>, Vec<usize>) {
    let mut a: Matrix<BigInt> = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        normalize_row(&mut a[r]);
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let (piv, f) = (a[r][c].clone(), a[i][c].clone());
            let pivot_row = a[r].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x = &*x * &piv - &f * y;
            }
            normalize_row(&mut a[i]);
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &Matrix<BigRational>) -> usize {
    integer_rref(&clear_denominators(m)).1.len()
}

/// Kernel basis of a rational matrix.
///
/// One vector per free column, in increasing column order; the free column's
/// entry is 1 and the other free entries are 0.
pub fn kernel(m: &Matrix<BigRational>, cols: usize) -> Vec<Vec<BigRational>> {
    let (e, pivots) = integer_rref(&clear_denominators(m));
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &pc) in e.iter().zip(&pivots) {
                v[pc] = -BigRational::new(row[free].clone(), row[pc].clone());
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(t·I - A)` as coefficients, lowest degree first.
///
/// Reduces to upper Hessenberg form by similarity, then runs the standard
/// Hessenberg recurrence.
pub fn char_poly(m: &Matrix<BigRational>) -> Vec<BigRational> {
    let n = m.len();
    let mut h = m.clone();
    for k in 1..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&i| !h[i][k - 1].is_zero()) else {
            continue;
        };
        if p != k {
            h.swap(p, k);
            for row in h.iter_mut() {
                row.swap(p, k);
            }
        }
        for i in k + 1..n {
            if h[i][k - 1].is_zero() {
                continue;
            }
            let f = &h[i][k - 1] / &h[k][k - 1];
            for j in 0..n {
                let v = &f * &h[k][j];
                h[i][j] -= v;
            }
            for row in h.iter_mut() {
                let v = &f * &row[i];
                row[k] += v;
            }
        }
    }
    // p_k(t) = char poly of leading k×k block
    let mut polys: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for k in 0..n {
        let mut next = vec![BigRational::zero(); k + 2];
        for (d, c) in polys[k].iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &h[k][k];
        }
        let mut prod = BigRational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let coef = &prod * &h[i][k];
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(rows: &[&[i64]]) -> Matrix<BigInt> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn q(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect()
    }

    /// Laplace expansion, for cross-checking small determinants.
    fn det_laplace(m: &Matrix<BigInt>) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        (0..m.len())
            .map(|j| {
                let minor: Matrix<BigInt> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = &m[0][j] * det_laplace(&minor);
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_laplace() {
        let m = zi(&[&[2, -1, 0, 3], &[0, 0, 4, 1], &[5, 2, -2, 0], &[1, 1, 1, 1]]);
        assert_eq!(det_bareiss(&m), det_laplace(&m));
        let singular = zi(&[&[1, 2], &[2, 4]]);
        assert!(det_bareiss(&singular).is_zero());
        let needs_swap = zi(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&needs_swap), BigInt::from(-1));
    }

    #[test]
    fn rational_determinant() {
        let mut m = q(&[&[1, 2], &[3, 4]]);
        m[0][0] = BigRational::new(1.into(), 2.into());
        // 1/2*4 - 2*3
        assert_eq!(det_rational(&m), BigRational::from_integer((-4).into()));
    }

    #[test]
    fn kernel_and_rank() {
        let m = q(&[&[1, 0, -1, 0], &[0, 2, 0, -2]]);
        assert_eq!(rank(&m), 2);
        let k = kernel(&m, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: BigRational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn char_poly_matches_determinant() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let p = char_poly(&m);
        // constant term is (-1)^n det
        assert_eq!(p[0], -det_rational(&m));
        assert!(p[3].is_one());
        // trace
        assert_eq!(p[2], BigRational::from_integer((-9).into()));
        let z = q(&[&[0, 0], &[0, 0]]);
        assert_eq!(char_poly(&z)[2], BigRational::one());
    }
}
