//! Endoscopic data inside one root system and lifting of discrete-series
//! Harish-Chandra parameters.
//!
//! Identities are checked in division-free form: the Harish-Chandra
//! numerator on the compact side equals the signed sum of numerators on
//! `k ∩ h` over the coset representatives `W_K^1`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::charring::{weyl_numerator, FormalCharacter, VirtualDecomposition};
use crate::dirac::dirac_index;
use crate::error::{Error, Result};
use crate::rootsys::{coset_representatives, CartanType, Limits, RootSubsystem, RootSystem, WeylSystem};
use crate::weight::{Rational, Weight};

/// Compact subsystem `k`, endoscopic subsystem `h` and their intersection,
/// all sharing the Cartan subalgebra of `g`.
///
/// `k` must be closed in `g`; `h` and `k ∩ h` only need to be stable under
/// their own reflections.
#[derive(Clone, Debug)]
pub struct EndoscopicDatum {
    pub g: RootSystem,
    pub k: RootSubsystem,
    pub h: RootSubsystem,
    pub kh: RootSubsystem,
    /// Stands in for the real-form sign; scales both sides of every identity.
    pub sign_q: i64,
}

impl EndoscopicDatum {
    /// Positive roots of `g` outside `k`.
    pub fn noncompact_positive_roots(&self) -> Vec<&Weight> {
        self.g.positive_roots().iter().filter(|a| !self.k.contains_root(a)).collect()
    }

    /// First positive root of `k` orthogonal to `lam`.
    pub fn compact_singular_root(&self, lam: &Weight) -> Option<&Weight> {
        self.k.singular_root(lam)
    }
}

pub fn build_endoscopic_datum(
    cartan_type: &CartanType,
    k_simple: &[Vec<i64>],
    h_simple: &[Vec<i64>],
    sign_q: Option<i64>,
    limits: Limits,
) -> Result<EndoscopicDatum> {
    let sign_q = sign_q.unwrap_or(1);
    if sign_q != 1 && sign_q != -1 {
        return Err(Error::validation(format!("sign_q must be +1 or -1, got {sign_q}")));
    }
    let g = RootSystem::with_limits(cartan_type, limits)?;
    let k = RootSubsystem::validate(&g, k_simple)?;
    let h = RootSubsystem::validate_reflection_closed(&g, h_simple)?;
    let common: Vec<Vec<i64>> = k
        .positive_root_coords()
        .iter()
        .filter(|c| h.positive_root_coords().contains(c))
        .cloned()
        .collect();
    let kh = RootSubsystem::from_positive_roots(&g, &common)
        .map_err(|e| Error::internal(format!("intersection of root subsystems failed to validate: {e}")))?;
    for a in g.positive_roots() {
        if kh.contains_root(a) != (k.contains_root(a) && h.contains_root(a)) {
            return Err(Error::internal(format!("intersection mismatch at root {a}")));
        }
    }
    Ok(EndoscopicDatum { g, k, h, kh, sign_q })
}

/// A Harish-Chandra parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HCParameter(pub Weight);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftTerm {
    pub sign: i64,
    pub parameter: Weight,
}

fn check_rank(datum: &EndoscopicDatum, lam: &Weight) -> Result<()> {
    if lam.rank() != datum.g.rank() {
        return Err(Error::validation(format!(
            "parameter {lam} has {} coordinates, expected {}",
            lam.rank(),
            datum.g.rank()
        )));
    }
    Ok(())
}

/// Signed parameters `(det w, w lam)` for `w` in `W_K^1`, sorted by parameter.
pub fn lift_discrete_series(datum: &EndoscopicDatum, param: &HCParameter) -> Result<Vec<LiftTerm>> {
    let lam = &param.0;
    check_rank(datum, lam)?;
    if let Some(root) = datum.compact_singular_root(lam) {
        let coords = datum.g.weight_to_root_coords(root).unwrap_or_default();
        return Err(Error::validation(format!(
            "parameter {lam} is singular for the compact root {coords:?} (pairing vanishes)"
        )));
    }
    let mut terms: Vec<LiftTerm> = coset_representatives(&datum.k, &datum.kh)?
        .into_iter()
        .map(|w| LiftTerm { sign: w.sign(), parameter: w.apply(lam) })
        .collect();
    terms.sort_by(|a, b| a.parameter.cmp(&b.parameter));
    if terms.windows(2).any(|p| p[0].parameter == p[1].parameter) {
        return Err(Error::internal(format!("lifted parameters of {lam} are not distinct")));
    }
    Ok(terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftIdentityReport {
    pub parameter: Weight,
    pub compact_regular: bool,
    /// Positive noncompact roots orthogonal to the parameter.
    pub noncompact_walls: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub holds: bool,
    pub sign_q: i64,
}

/// Checks `Num_k(lam) = sum_{w in W_K^1} det(w) Num_{k∩h}(w lam)` exactly.
/// Singular parameters are allowed; both sides then vanish.
pub fn verify_lift_identity(datum: &EndoscopicDatum, param: &HCParameter) -> Result<LiftIdentityReport> {
    let lam = &param.0;
    check_rank(datum, lam)?;
    let lhs = weyl_numerator(&datum.k, lam)?;
    let mut rhs = FormalCharacter::zero();
    for w in coset_representatives(&datum.k, &datum.kh)? {
        rhs = &rhs + &weyl_numerator(&datum.kh, &w.apply(lam))?.scale(w.sign());
    }
    Ok(LiftIdentityReport {
        parameter: lam.clone(),
        compact_regular: datum.compact_singular_root(lam).is_none(),
        noncompact_walls: datum.noncompact_positive_roots().iter().filter(|a| datum.g.form(lam, a) == Rational::from_integer(0)).count(),
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        holds: lhs == rhs,
        sign_q: datum.sign_q,
    })
}

/// The lift of a finite-dimensional character: its Dirac index over `sub`.
pub fn finite_dim_lift(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight) -> Result<VirtualDecomposition> {
    Ok(dirac_index(rs, sub, lam)?.decomposition)
}

fn random_weight<R: Rng + ?Sized>(rank: usize, rng: &mut R) -> Weight {
    Weight::new((0..rank).map(|_| Rational::new(rng.gen_range(-12..=12), rng.gen_range(1..=6))).collect())
}

/// A random rational parameter, regular for the compact roots.
pub fn random_regular_parameter<R: Rng + ?Sized>(datum: &EndoscopicDatum, rng: &mut R) -> Result<HCParameter> {
    for _ in 0..10_000 {
        let lam = random_weight(datum.g.rank(), rng);
        if datum.compact_singular_root(&lam).is_none() {
            return Ok(HCParameter(lam));
        }
    }
    Err(Error::internal("no compact-regular parameter found"))
}

/// A random parameter regular for the compact roots and orthogonal to
/// exactly one positive noncompact root (a limit of discrete series).
pub fn random_limit_parameter<R: Rng + ?Sized>(datum: &EndoscopicDatum, rng: &mut R) -> Result<HCParameter> {
    let walls = datum.noncompact_positive_roots();
    if walls.is_empty() {
        return Err(Error::validation("datum has no noncompact roots; limits of discrete series do not arise"));
    }
    for _ in 0..10_000 {
        let wall = walls[rng.gen_range(0..walls.len())];
        let lam = random_weight(datum.g.rank(), rng);
        let lam = &lam - &wall.scale(datum.g.coroot_pairing(&lam, wall) / Rational::from_integer(2));
        let on_walls = walls.iter().filter(|a| datum.g.form(&lam, a) == Rational::from_integer(0)).count();
        if on_walls == 1 && datum.compact_singular_root(&lam).is_none() {
            return Ok(HCParameter(lam));
        }
    }
    Err(Error::internal("no limit parameter found"))
}
