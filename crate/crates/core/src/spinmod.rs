//! Spin-module characters of `s = g / r` and the transfer factor
//! `ch S+ - ch S-`.

use serde::{Deserialize, Serialize};

use crate::charring::FormalCharacter;
use crate::error::{Error, Result};
use crate::rootsys::{RootSubsystem, RootSystem, WeylSystem};
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinPair {
    pub s_plus: FormalCharacter,
    pub s_minus: FormalCharacter,
    /// Half sum of the positive roots of `g` outside `r`.
    pub rho_n: Weight,
    pub pos_noncompact: Vec<Weight>,
}

impl SpinPair {
    pub fn transfer_factor(&self) -> FormalCharacter {
        &self.s_plus - &self.s_minus
    }

    pub fn total(&self) -> FormalCharacter {
        &self.s_plus + &self.s_minus
    }
}

/// Positive roots of `g` that are not roots of `sub`.
pub fn noncompact_positive_roots(rs: &RootSystem, sub: &RootSubsystem) -> Vec<Weight> {
    rs.positive_roots().iter().filter(|a| !sub.contains_root(a)).cloned().collect()
}

/// `prod (e^{a/2} + sign e^{-a/2})` over `roots`, built one factor at a time.
pub fn binomial_product(roots: &[Weight], sign: i64, rank: usize, max_terms: usize) -> Result<FormalCharacter> {
    let mut acc = FormalCharacter::monomial(Weight::zero(rank));
    for a in roots {
        let half = a.half();
        let factor = FormalCharacter::from_terms([(-&half, sign), (half, 1)]);
        acc = acc.multiply_capped(&factor, max_terms)?;
    }
    Ok(acc)
}

/// Characters of the even and odd halves of the spin module of `s`.
///
/// The weights are `rho_n` minus subset sums of noncompact positive roots;
/// the empty subset (weight `rho_n`) is even.
pub fn spin_characters(rs: &RootSystem, sub: &RootSubsystem) -> Result<SpinPair> {
    let roots = noncompact_positive_roots(rs, sub);
    let n = rs.rank();
    let max_terms = rs.limits().max_terms;
    let sum = binomial_product(&roots, 1, n, max_terms)?;
    let diff = binomial_product(&roots, -1, n, max_terms)?;
    let s_plus = (&sum + &diff).div_exact(2)?;
    let s_minus = (&sum - &diff).div_exact(2)?;

    let rho_n = rs.rho() - sub.rho();
    let mut half_sum = Weight::zero(n);
    for a in &roots {
        half_sum += a;
    }
    if half_sum.half() != rho_n {
        return Err(Error::internal("rho - rho_r differs from the half sum of noncompact positive roots"));
    }
    Ok(SpinPair { s_plus, s_minus, rho_n, pos_noncompact: roots })
}

/// `ch S+ - ch S-`, i.e. `prod_{a in Delta+(s)} (e^{a/2} - e^{-a/2})`.
pub fn transfer_factor(rs: &RootSystem, sub: &RootSubsystem) -> Result<FormalCharacter> {
    let roots = noncompact_positive_roots(rs, sub);
    binomial_product(&roots, -1, rs.rank(), rs.limits().max_terms)
}
