//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::weight::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;
pub type IntMatrix = Vec<Vec<i64>>;

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
}

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mul_int(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

/// Gauss-Jordan inverse. `None` when singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m.clone();
    let mut inv: RatMatrix =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Inverse of a unimodular integer matrix.
pub fn inverse_int(m: &IntMatrix) -> Option<IntMatrix> {
    let inv = inverse(&to_rational(m))?;
    inv.into_iter()
        .map(|row| row.into_iter().map(|x| if x.is_integer() { Some(x.to_integer()) } else { None }).collect())
        .collect()
}

pub fn determinant_int(m: &IntMatrix) -> Rational {
    let n = m.len();
    let mut a = to_rational(m);
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if !f.is_zero() {
                for j in col..n {
                    let x = a[col][j];
                    a[r][j] -= f * x;
                }
            }
        }
    }
    det
}
