use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// A finitely supported integer combination of formal exponentials `e^mu`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^mu`.
    pub fn monomial(mu: Weight) -> Self {
        Self::term(mu, 1)
    }

    pub fn term(mu: Weight, mult: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(mu, mult);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, mu: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(mu) {
            btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn mult(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        FormalCharacter { terms: self.terms.iter().map(|(w, &m)| (w.clone(), m * k)).collect() }
    }

    /// Applies `f` to every weight, merging collisions.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, &m)| (f(w), m)))
    }

    /// `e^mu -> e^{-mu}`.
    pub fn dual(&self) -> Self {
        self.map_weights(|w| -w)
    }

    /// `e^mu -> e^{mu + shift}`.
    pub fn shift(&self, by: &Weight) -> Self {
        self.map_weights(|w| w + by)
    }

    /// Convolution product, `e^mu e^nu = e^{mu + nu}`.
    pub fn multiply(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for (a, &m) in &self.terms {
            for (b, &n) in &other.terms {
                out.add_term(a + b, m * n);
            }
        }
        out
    }

    /// As [`multiply`](Self::multiply), failing once the support grows past `max_terms`.
    pub fn multiply_capped(&self, other: &FormalCharacter, max_terms: usize) -> Result<FormalCharacter> {
        let out = self.multiply(other);
        if out.len() > max_terms {
            return Err(Error::Resource(format!(
                "character product has {} terms, above the configured maximum {max_terms}",
                out.len()
            )));
        }
        Ok(out)
    }

    /// Exact division by an integer; fails if some multiplicity is not divisible.
    pub fn div_exact(&self, k: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (w, &m) in &self.terms {
            if m % k != 0 {
                return Err(Error::internal(format!("multiplicity {m} at {w} not divisible by {k}")));
            }
            terms.insert(w.clone(), m / k);
        }
        Ok(FormalCharacter { terms })
    }

    /// Renders as `m · e^[w] + ...` in weight order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, m)) in self.iter().enumerate() {
            match (i, m < 0) {
                (0, false) => {}
                (0, true) => s.push('-'),
                (_, false) => s.push_str(" + "),
                (_, true) => s.push_str(" - "),
            }
            s.push_str(&format!("{} · e^{}", m.abs(), w));
        }
        s
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &m) in &rhs.terms {
            out.add_term(w.clone(), m);
        }
        out
    }
}

impl Sub<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, &m) in &rhs.terms {
            out.add_term(w.clone(), -m);
        }
        out
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scale(-1)
    }
}

impl Mul<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn mul(self, rhs: &FormalCharacter) -> FormalCharacter {
        self.multiply(rhs)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    weight: Weight,
    mult: i64,
}

impl Serialize for FormalCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self.iter().map(|(w, m)| TermRepr { weight: w.clone(), mult: m }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut c = FormalCharacter::zero();
        for t in terms {
            if t.mult == 0 {
                return Err(D::Error::custom("zero multiplicity in character term"));
            }
            if c.terms.insert(t.weight, t.mult).is_some() {
                return Err(D::Error::custom("repeated weight in character"));
            }
        }
        Ok(c)
    }
}
