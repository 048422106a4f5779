//! Explicit matrix model of the Dirac operator for `sl(2)` over its Cartan
//! subalgebra.
//!
//! `s = span(e, f)` carries the trace form `B(e, f) = 1`. With the
//! orthonormal basis `Z1 = (e + f)/sqrt2`, `Z2 = i(e - f)/sqrt2` the operator
//! `D = Z1 ⊗ Z1 + Z2 ⊗ Z2` acts on `V_n ⊗ S`, where the Clifford algebra obeys
//! `uu' + u'u = -2B(u, u')`. The cubic term vanishes since `[s, s] ⊂ h`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::{self, Matrix, Q2i};
use super::{dsquared_spectrum, kostant_hd};
use crate::error::{Error, Result};
use crate::rootsys::{RootSubsystem, RootSystem};
use crate::weight::{rational_string, Rational, Weight};

pub const MAX_ORACLE_N: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelVector {
    pub weight: Weight,
    pub parity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenEntry {
    pub weight: Weight,
    #[serde(with = "rational_string")]
    pub eigenvalue: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1OracleReport {
    pub n: usize,
    pub dimension: usize,
    pub clifford_relations: bool,
    pub d_commutes_with_cartan: bool,
    pub d_squared_diagonal: bool,
    /// `D^2` eigenvalue on each basis vector, in basis order.
    pub eigenvalues: Vec<EigenEntry>,
    pub eigenvalues_match_spectrum: bool,
    pub kernel_dimension: usize,
    pub kernel: Vec<KernelVector>,
    pub kernel_matches_kostant: bool,
}

impl Rank1OracleReport {
    pub fn passed(&self) -> bool {
        self.clifford_relations
            && self.d_commutes_with_cartan
            && self.d_squared_diagonal
            && self.eigenvalues_match_spectrum
            && self.kernel_dimension == 2
            && self.kernel_matches_kostant
    }
}

/// Element `x e + y f` of `s`.
#[derive(Clone, Copy)]
struct SElem {
    e: Q2i,
    f: Q2i,
}

impl SElem {
    fn bracket_with_h(self) -> SElem {
        SElem { e: self.e * Q2i::int(2), f: self.f * Q2i::int(-2) }
    }

    fn act(self, e_mat: &Matrix, f_mat: &Matrix) -> Matrix {
        field::add(&field::scale(e_mat, self.e), &field::scale(f_mat, self.f))
    }
}

/// `e, f, h` on `V_n` in the basis `v_k` of weight `n - 2k`:
/// `f v_k = v_{k+1}`, `e v_k = k(n - k + 1) v_{k-1}`.
fn sl2_module(n: usize) -> (Matrix, Matrix, Matrix) {
    let dim = n + 1;
    let mut e = field::zeros(dim, dim);
    let mut f = field::zeros(dim, dim);
    let mut h = field::zeros(dim, dim);
    for k in 0..dim {
        h[k][k] = Q2i::int(n as i64 - 2 * k as i64);
        if k + 1 < dim {
            f[k + 1][k] = Q2i::int(1);
        }
        if k > 0 {
            e[k - 1][k] = Q2i::int((k * (n - k + 1)) as i64);
        }
    }
    (e, f, h)
}

/// Clifford action of `e, f` on `S = span(s0, s1)`: `f s0 = 0`, `e s0 = s1`,
/// `e s1 = 0`, `f s1 = -2 s0`.
fn spin_module() -> (Matrix, Matrix) {
    let mut e = field::zeros(2, 2);
    let mut f = field::zeros(2, 2);
    e[1][0] = Q2i::int(1);
    f[0][1] = Q2i::int(-2);
    (e, f)
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    field::add(&field::matmul(a, b), &field::scale(&field::matmul(b, a), Q2i::int(-1)))
}

fn anticommutator(a: &Matrix, b: &Matrix) -> Matrix {
    field::add(&field::matmul(a, b), &field::matmul(b, a))
}

fn is_diagonal(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Builds `D` on `V_n ⊗ S` and compares its kernel and `D^2` with the
/// character-level computations for `(A1, Cartan)`.
pub fn rank1_matrix_oracle(n: usize) -> Result<Rank1OracleReport> {
    if n > MAX_ORACLE_N {
        return Err(Error::Resource(format!("oracle supports n <= {MAX_ORACLE_N}, got {n}")));
    }
    let inv_sqrt2 = Q2i::sqrt2() * Q2i::rational(Rational::new(1, 2));
    let z1 = SElem { e: inv_sqrt2, f: inv_sqrt2 };
    let z2 = SElem { e: Q2i::i() * inv_sqrt2, f: -(Q2i::i() * inv_sqrt2) };
    let basis = [z1, z2];

    let (ve, vf, vh) = sl2_module(n);
    let (se, sf) = spin_module();
    let gamma: Vec<Matrix> = basis.iter().map(|z| z.act(&se, &sf)).collect();

    let mut clifford_relations = true;
    for (i, gi) in gamma.iter().enumerate() {
        for (j, gj) in gamma.iter().enumerate() {
            let expected = if i == j { field::scale(&field::identity(2), Q2i::int(-2)) } else { field::zeros(2, 2) };
            clifford_relations &= anticommutator(gi, gj) == expected;
        }
    }

    // alpha(h) = -1/4 sum_j [h, Z_j] Z_j in the Clifford algebra
    let mut alpha_h = field::zeros(2, 2);
    for (z, g) in basis.iter().zip(&gamma) {
        alpha_h = field::add(&alpha_h, &field::matmul(&z.bracket_with_h().act(&se, &sf), g));
    }
    let alpha_h = field::scale(&alpha_h, Q2i::rational(Rational::new(-1, 4)));
    if !is_diagonal(&alpha_h) {
        return Err(Error::internal("alpha(h) is not diagonal on the spin basis"));
    }
    let spin_weights: Vec<Rational> = (0..2)
        .map(|i| alpha_h[i][i].as_rational().ok_or_else(|| Error::internal("spin weight is not rational")))
        .collect::<Result<_>>()?;
    // S+ is the line of highest weight rho_n
    let rho_n = spin_weights.iter().copied().max().expect("two spin weights");
    let parity: Vec<i64> = spin_weights.iter().map(|&w| if w == rho_n { 1 } else { -1 }).collect();

    let mut d = field::zeros(2 * (n + 1), 2 * (n + 1));
    for (z, g) in basis.iter().zip(&gamma) {
        d = field::add(&d, &field::kron(&z.act(&ve, &vf), g));
    }
    let h_diag = field::add(&field::kron(&vh, &field::identity(2)), &field::kron(&field::identity(n + 1), &alpha_h));
    let d_commutes_with_cartan = commutator(&d, &h_diag) == field::zeros(d.len(), d.len());
    let weights: Vec<Rational> = (0..d.len())
        .map(|i| h_diag[i][i].as_rational().ok_or_else(|| Error::internal("non-rational weight")))
        .collect::<Result<_>>()?;

    let d2 = field::matmul(&d, &d);
    let d_squared_diagonal = is_diagonal(&d2);
    let eigenvalues: Vec<EigenEntry> = (0..d2.len())
        .map(|i| {
            let ev = d2[i][i].as_rational().ok_or_else(|| Error::internal("non-rational D^2 eigenvalue"))?;
            Ok(EigenEntry { weight: Weight::new(vec![weights[i]]), eigenvalue: ev })
        })
        .collect::<Result<_>>()?;

    let g = RootSystem::new(&"A1".parse().expect("valid type"))?;
    let torus = RootSubsystem::validate(&g, &[])?;
    let lam = Weight::from_ints([n as i64]);
    let spectrum = dsquared_spectrum(&g, &torus, &lam)?;
    let mut by_weight: BTreeMap<&Weight, (i64, Vec<Rational>)> = BTreeMap::new();
    for e in &eigenvalues {
        let slot = by_weight.entry(&e.weight).or_default();
        slot.0 += 1;
        slot.1.push(e.eigenvalue);
    }
    let eigenvalues_match_spectrum = by_weight.len() == spectrum.len()
        && spectrum.iter().all(|s| {
            by_weight
                .get(&s.mu)
                .is_some_and(|(count, evs)| *count == s.mult && evs.iter().all(|&ev| ev == s.eigenvalue))
        });

    let kernel_dimension = d.len() - field::rank(&d);

    // D is odd, so its kernel splits by weight and parity.
    let mut kernel = Vec::new();
    let mut distinct: Vec<Rational> = weights.clone();
    distinct.sort();
    distinct.dedup();
    for &wt in distinct.iter().rev() {
        for p in [1i64, -1] {
            let cols: Vec<usize> = (0..d.len()).filter(|&i| weights[i] == wt && parity[i % 2] == p).collect();
            if cols.is_empty() {
                continue;
            }
            let block: Matrix = d.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
            let nullity = cols.len() - field::rank(&block);
            for _ in 0..nullity {
                kernel.push(KernelVector { weight: Weight::new(vec![wt]), parity: p });
            }
        }
    }

    let mut expected: Vec<(Weight, i64)> =
        kostant_hd(&g, &torus, &lam)?.into_iter().map(|c| (c.mu, c.parity)).collect();
    expected.sort();
    let mut got: Vec<(Weight, i64)> = kernel.iter().map(|k| (k.weight.clone(), k.parity)).collect();
    got.sort();

    Ok(Rank1OracleReport {
        n,
        dimension: d.len(),
        clifford_relations,
        d_commutes_with_cartan,
        d_squared_diagonal,
        eigenvalues,
        eigenvalues_match_spectrum,
        kernel_dimension,
        kernel_matches_kostant: got == expected && kernel.len() == kernel_dimension,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_module() {
        let r = rank1_matrix_oracle(0).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.kernel_dimension, 2);
        let ws: Vec<Weight> = r.kernel.iter().map(|k| k.weight.clone()).collect();
        assert_eq!(ws, vec![Weight::from_ints([1]), Weight::from_ints([-1])]);
    }

    #[test]
    fn standard_module_eigenvalues() {
        let r = rank1_matrix_oracle(1).unwrap();
        assert!(r.passed());
        let mut evs: Vec<Rational> = r.eigenvalues.iter().map(|e| e.eigenvalue).collect();
        evs.sort();
        let two = Rational::from_integer(2);
        assert_eq!(evs, vec![-two, -two, Rational::from_integer(0), Rational::from_integer(0)]);
    }

    #[test]
    fn kernel_weights_n3() {
        let r = rank1_matrix_oracle(3).unwrap();
        assert!(r.passed());
        let ws: Vec<Weight> = r.kernel.iter().map(|k| k.weight.clone()).collect();
        assert_eq!(ws, vec![Weight::from_ints([4]), Weight::from_ints([-4])]);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(rank1_matrix_oracle(51), Err(Error::Resource(_))));
    }
}
