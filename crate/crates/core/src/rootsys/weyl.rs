use std::collections::HashSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::system::{RootSubsystem, WeylSystem};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::weight::{Rational, Weight};

/// An element of a Weyl group acting on weight coordinates.
///
/// `word = [i1, ..., ik]` stands for `s_i1 s_i2 ... s_ik`, indices into the
/// simple roots of the system the element was produced from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub length: usize,
    pub det: i8,
    pub matrix: IntMatrix,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { word: Vec::new(), length: 0, det: 1, matrix: linalg::identity_int(rank) }
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(x.coords()).map(|(&m, c)| c * m).sum::<Rational>())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity_int(self.matrix.len())
    }

    pub fn sign(&self) -> i64 {
        i64::from(self.det)
    }

    /// Inverse element; the word is reversed.
    pub fn inverse(&self) -> WeylElement {
        let matrix = linalg::inverse_int(&self.matrix).expect("Weyl group matrices are unimodular");
        WeylElement { word: self.word.iter().rev().copied().collect(), length: self.length, det: self.det, matrix }
    }

    /// Product `self * other` as linear maps; the word is the concatenation
    /// and need not be reduced.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend(&other.word);
        WeylElement {
            length: word.len(),
            word,
            det: self.det * other.det,
            matrix: linalg::mul_int(&self.matrix, &other.matrix),
        }
    }
}

/// Every element of the Weyl group, sorted by length then reduced word.
///
/// Breadth-first closure under right multiplication by simple reflections,
/// deduplicated by the image of the (regular) Weyl vector. Processing each
/// level in lexicographic order makes the first word found for an element its
/// lexicographically smallest reduced word.
pub fn enumerate_weyl<S: WeylSystem + ?Sized>(sys: &S) -> Result<Vec<WeylElement>> {
    let cap = sys.limits().max_weyl_order;
    if sys.weyl_order() > cap {
        return Err(Error::Resource(format!(
            "Weyl group of {} has order {}, above the configured maximum {cap}",
            sys.label(),
            sys.weyl_order()
        )));
    }
    let rank = sys.ambient_rank();
    let rho = sys.rho();
    let gens: Vec<IntMatrix> = (0..sys.simple_roots().len()).map(|i| sys.simple_reflection_matrix(i)).collect();

    let id = WeylElement::identity(rank);
    let mut seen: HashSet<Weight> = HashSet::from([rho.clone()]);
    let mut all = vec![id.clone()];
    let mut level = vec![id];
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for (i, s) in gens.iter().enumerate() {
                let matrix = linalg::mul_int(&w.matrix, s);
                let cand = WeylElement { word: Vec::new(), length: w.length + 1, det: -w.det, matrix };
                if seen.insert(cand.apply(rho)) {
                    let mut word = w.word.clone();
                    word.push(i);
                    next.push(WeylElement { word, ..cand });
                }
            }
        }
        all.extend(next.iter().cloned());
        if all.len() as u64 > cap {
            return Err(Error::Resource(format!("Weyl group of {} exceeds the configured cap {cap}", sys.label())));
        }
        level = next;
    }
    if all.len() as u64 != sys.weyl_order() {
        return Err(Error::internal(format!(
            "enumerated {} elements of W({}), expected {}",
            all.len(),
            sys.label(),
            sys.weyl_order()
        )));
    }
    Ok(all)
}

/// Minimal coset representatives `W^1 = { w : w(rho) is dominant for sub }`
/// of `W_sub \ W_ambient`.
pub fn coset_representatives<S: WeylSystem + ?Sized>(ambient: &S, sub: &RootSubsystem) -> Result<Vec<WeylElement>> {
    if let Some(b) = sub.positive_roots().iter().find(|b| !ambient.contains_root(b)) {
        return Err(Error::validation(format!("subsystem root {b} is not a root of {}", ambient.label())));
    }
    let elements = enumerate_weyl(ambient)?;
    let mut reps = Vec::new();
    for w in elements {
        let image = w.apply(ambient.rho());
        let pairings = sub.simple_pairings(&image);
        if pairings.iter().any(Zero::is_zero) {
            return Err(Error::internal(format!(
                "w(rho) = {image} is singular for {}; rho should be regular in the equal-rank case",
                sub.label()
            )));
        }
        if pairings.iter().all(Signed::is_positive) {
            reps.push(w);
        }
    }
    if reps.len() as u64 * sub.weyl_order() != ambient.weyl_order() {
        return Err(Error::internal(format!(
            "|W^1| * |W_sub| = {} * {} differs from |W| = {}",
            reps.len(),
            sub.weyl_order(),
            ambient.weyl_order()
        )));
    }
    Ok(reps)
}

/// Returns `(mu+, w)` with `mu+` dominant and `w(mu) = mu+`.
///
/// Reflects at the lowest-index simple root with negative pairing until
/// none remains.
pub fn dominant_conjugate<S: WeylSystem + ?Sized>(sys: &S, mu: &Weight) -> (Weight, WeylElement) {
    let rank = sys.ambient_rank();
    let mut x = mu.clone();
    let mut steps = Vec::new();
    let mut matrix = linalg::identity_int(rank);
    loop {
        let next = sys.simple_coroots().iter().position(|c| x.dot(c).is_negative());
        let Some(i) = next else { break };
        x = sys.reflect_simple(&x, i);
        matrix = linalg::mul_int(&sys.simple_reflection_matrix(i), &matrix);
        steps.push(i);
    }
    steps.reverse();
    let length = steps.len();
    let det = if length % 2 == 0 { 1 } else { -1 };
    (x, WeylElement { word: steps, length, det, matrix })
}

/// Dominant conjugate only, without tracking the group element.
pub(crate) fn dominant_weight<S: WeylSystem + ?Sized>(sys: &S, mu: &Weight) -> Weight {
    let mut x = mu.clone();
    while let Some(i) = sys.simple_coroots().iter().position(|c| x.dot(c).is_negative()) {
        x = sys.reflect_simple(&x, i);
    }
    x
}
