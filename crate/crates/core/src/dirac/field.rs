//! The number field `Q(sqrt 2, i)` with exact rational coordinates.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::weight::Rational;

/// `a + b sqrt2 + c i + d i sqrt2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Q2i {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

/// Element `u + v sqrt2` of `Q(sqrt 2)`.
type Q2 = (Rational, Rational);

fn q2_mul(x: Q2, y: Q2) -> Q2 {
    (x.0 * y.0 + Rational::from_integer(2) * x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

fn q2_inv(x: Q2) -> Q2 {
    let n = x.0 * x.0 - Rational::from_integer(2) * x.1 * x.1;
    (x.0 / n, -x.1 / n)
}

impl Q2i {
    pub const ZERO: Q2i = Q2i { a: Rational::ZERO, b: Rational::ZERO, c: Rational::ZERO, d: Rational::ZERO };

    pub fn rational(r: Rational) -> Self {
        Q2i { a: r, ..Self::ZERO }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    pub fn sqrt2() -> Self {
        Q2i { b: Rational::one(), ..Self::ZERO }
    }

    pub fn i() -> Self {
        Q2i { c: Rational::one(), ..Self::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(self.a)
    }

    fn split(&self) -> (Q2, Q2) {
        ((self.a, self.b), (self.c, self.d))
    }

    fn join(p: Q2, q: Q2) -> Self {
        Q2i { a: p.0, b: p.1, c: q.0, d: q.1 }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (p + iq)^-1 = (p - iq) / (p^2 + q^2)
        let (p, q) = self.split();
        let n = q2_mul(p, p);
        let m = q2_mul(q, q);
        let ninv = q2_inv((n.0 + m.0, n.1 + m.1));
        let re = q2_mul(p, ninv);
        let im = q2_mul(q, ninv);
        Some(Self::join(re, (-im.0, -im.1)))
    }
}

impl Add for Q2i {
    type Output = Q2i;
    fn add(self, o: Q2i) -> Q2i {
        Q2i { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }
}

impl Sub for Q2i {
    type Output = Q2i;
    fn sub(self, o: Q2i) -> Q2i {
        self + (-o)
    }
}

impl Neg for Q2i {
    type Output = Q2i;
    fn neg(self) -> Q2i {
        Q2i { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl Mul for Q2i {
    type Output = Q2i;
    fn mul(self, o: Q2i) -> Q2i {
        let (p, q) = self.split();
        let (r, s) = o.split();
        let pr = q2_mul(p, r);
        let qs = q2_mul(q, s);
        let ps = q2_mul(p, s);
        let qr = q2_mul(q, r);
        Q2i::join((pr.0 - qs.0, pr.1 - qs.1), (ps.0 + qr.0, ps.1 + qr.1))
    }
}

pub type Matrix = Vec<Vec<Q2i>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Q2i::ZERO; cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q2i::int(1);
    }
    m
}

pub fn matmul(x: &Matrix, y: &Matrix) -> Matrix {
    let (n, k, m) = (x.len(), y.len(), y.first().map_or(0, Vec::len));
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if x[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j] + x[i][l] * y[l][j];
            }
        }
    }
    out
}

pub fn add(x: &Matrix, y: &Matrix) -> Matrix {
    x.iter().zip(y).map(|(r, s)| r.iter().zip(s).map(|(&a, &b)| a + b).collect()).collect()
}

pub fn scale(x: &Matrix, k: Q2i) -> Matrix {
    x.iter().map(|r| r.iter().map(|&a| a * k).collect()).collect()
}

pub fn kron(x: &Matrix, y: &Matrix) -> Matrix {
    let (xr, xc) = (x.len(), x.first().map_or(0, Vec::len));
    let (yr, yc) = (y.len(), y.first().map_or(0, Vec::len));
    let mut out = zeros(xr * yr, xc * yc);
    for i in 0..xr {
        for j in 0..xc {
            for k in 0..yr {
                for l in 0..yc {
                    out[i * yr + k][j * yc + l] = x[i][j] * y[k][l];
                }
            }
        }
    }
    out
}

/// Rank by Gaussian elimination over the field.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c] * inv;
                for j in c..cols {
                    let x = a[r][j];
                    a[i][j] = a[i][j] - f * x;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

impl Zero for Q2i {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        Q2i::is_zero(self)
    }
}
