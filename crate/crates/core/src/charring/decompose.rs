use serde::{Deserialize, Serialize};

use super::{irreducible_character, FormalCharacter};
use crate::error::{Error, Result};
use crate::rootsys::WeylSystem;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub highest_weight: Weight,
    pub coefficient: i64,
}

/// A virtual character written as a signed sum of irreducible characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VirtualDecomposition {
    pub components: Vec<Component>,
}

impl VirtualDecomposition {
    pub fn from_pairs<I: IntoIterator<Item = (Weight, i64)>>(pairs: I) -> Self {
        VirtualDecomposition {
            components: pairs
                .into_iter()
                .map(|(highest_weight, coefficient)| Component { highest_weight, coefficient })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn pairs(&self) -> Vec<(Weight, i64)> {
        self.components.iter().map(|c| (c.highest_weight.clone(), c.coefficient)).collect()
    }

    /// Components sorted by highest weight, for multiset comparison.
    pub fn sorted(&self) -> Vec<(Weight, i64)> {
        let mut p = self.pairs();
        p.sort();
        p
    }

    pub fn coefficient(&self, hw: &Weight) -> i64 {
        self.components.iter().filter(|c| &c.highest_weight == hw).map(|c| c.coefficient).sum()
    }

    /// `sum coefficient * ch E_hw` over `sys`.
    pub fn reconstruct<S: WeylSystem + ?Sized>(&self, sys: &S) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero();
        for c in &self.components {
            out = &out + &irreducible_character(sys, &c.highest_weight)?.scale(c.coefficient);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.components
            .iter()
            .map(|c| format!("{:+} · E{}", c.coefficient, c.highest_weight))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Writes a `W_sys`-invariant character as an integer combination of
/// irreducible characters of `sys`.
///
/// Peels off the support weight with the largest `B(mu + rho, mu + rho)`
/// (ties broken by the lexicographically largest coordinates), which is
/// necessarily dominant for an invariant character.
pub fn decompose<S: WeylSystem + ?Sized>(chi: &FormalCharacter, sys: &S) -> Result<VirtualDecomposition> {
    let order = sys.weyl_order().max(1) as usize;
    let cap = chi.len().saturating_mul(order).max(1);
    let rho = sys.rho();
    let mut rest = chi.clone();
    let mut components = Vec::new();
    let mut steps = 0usize;
    while !rest.is_zero() {
        steps += 1;
        if steps > cap {
            return Err(Error::validation(format!(
                "decomposition over {} did not terminate within {cap} steps; input is not a virtual character",
                sys.label()
            )));
        }
        let (mu, coeff) = rest
            .iter()
            .map(|(w, m)| (sys.norm2(&(w + rho)), w, m))
            .max_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)))
            .map(|(_, w, m)| (w.clone(), m))
            .expect("non-empty character");
        if !sys.is_dominant_integral(&mu) {
            return Err(Error::validation(format!(
                "extreme weight {mu} is not dominant integral for {}; input is not a virtual character",
                sys.label()
            )));
        }
        let ch = irreducible_character(sys, &mu)?;
        rest = &rest - &ch.scale(coeff);
        components.push(Component { highest_weight: mu, coefficient: coeff });
    }
    Ok(VirtualDecomposition { components })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSubsystem, RootSystem};

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c.iter().copied())
    }

    #[test]
    fn torus_decomposition_is_identity_on_terms() {
        let a1 = RootSystem::new(&"A1".parse().unwrap()).unwrap();
        let t = RootSubsystem::validate(&a1, &[]).unwrap();
        let chi = FormalCharacter::from_terms([(w(&[1]), 1), (w(&[-1]), 1)]);
        let d = decompose(&chi, &t).unwrap();
        assert_eq!(d.sorted(), vec![(w(&[-1]), 1), (w(&[1]), 1)]);
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = RootSystem::new(&"A1".parse().unwrap()).unwrap();
        let v = irreducible_character(&a1, &w(&[1])).unwrap();
        let d = decompose(&v.multiply(&v), &a1).unwrap();
        assert_eq!(d.pairs(), vec![(w(&[2]), 1), (w(&[0]), 1)]);
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let a1 = RootSystem::new(&"A1".parse().unwrap()).unwrap();
        let chi = FormalCharacter::monomial(w(&[-2]));
        assert!(matches!(decompose(&chi, &a1), Err(Error::Validation(_))));
    }
}
