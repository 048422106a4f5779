use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use super::FormalCharacter;
use crate::error::{Error, Result};
use crate::rootsys::{dominant_weight, enumerate_weyl, system_key, weyl_orbit, WeylSystem};
use crate::weight::{Rational, Weight};

type CacheKey = (Vec<Weight>, Vec<Weight>, Weight);

static CHARACTER_CACHE: Lazy<Mutex<HashMap<CacheKey, FormalCharacter>>> = Lazy::new(Default::default);

fn check_dominant_integral<S: WeylSystem + ?Sized>(sys: &S, lam: &Weight) -> Result<()> {
    if lam.rank() != sys.ambient_rank() {
        return Err(Error::validation(format!(
            "weight {lam} has {} coordinates, {} expects {}",
            lam.rank(),
            sys.label(),
            sys.ambient_rank()
        )));
    }
    if !sys.is_dominant_integral(lam) {
        return Err(Error::validation(format!("{lam} is not dominant integral for {}", sys.label())));
    }
    Ok(())
}

/// Character of the irreducible module with highest weight `lam`.
///
/// Freudenthal's recursion over the dominant weights below `lam`, then
/// expansion along Weyl orbits. `lam` only needs integral non-negative
/// pairings with the simple coroots of `sys`; components orthogonal to the
/// roots of `sys` ride along unchanged.
pub fn irreducible_character<S: WeylSystem + ?Sized>(sys: &S, lam: &Weight) -> Result<FormalCharacter> {
    check_dominant_integral(sys, lam)?;
    let (simple, gram) = system_key(sys);
    let key = (simple, gram, lam.clone());
    if let Some(hit) = CHARACTER_CACHE.lock().get(&key) {
        return Ok(hit.clone());
    }

    let mults = dominant_multiplicities(sys, lam)?;
    let cap = sys.limits().max_terms as u64;
    let mut ch = FormalCharacter::zero();
    for (mu, m) in &mults {
        for nu in weyl_orbit(sys, mu, cap)? {
            ch.add_term(nu, *m);
        }
        if ch.len() > sys.limits().max_terms {
            return Err(Error::Resource(format!(
                "character of {lam} for {} exceeds {} terms",
                sys.label(),
                sys.limits().max_terms
            )));
        }
    }
    CHARACTER_CACHE.lock().insert(key, ch.clone());
    Ok(ch)
}

/// Multiplicities of the dominant weights of the irreducible module `V(lam)`.
pub fn dominant_multiplicities<S: WeylSystem + ?Sized>(sys: &S, lam: &Weight) -> Result<BTreeMap<Weight, i64>> {
    check_dominant_integral(sys, lam)?;
    let positive = sys.positive_roots();

    // The dominance order on dominant weights is generated by subtracting
    // positive roots, so this reaches every dominant weight below lam.
    let mut dominant: HashSet<Weight> = HashSet::from([lam.clone()]);
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(mu) = queue.pop_front() {
        for a in positive {
            let nu = &mu - a;
            if sys.is_dominant(&nu) && dominant.insert(nu.clone()) {
                if dominant.len() > sys.limits().max_terms {
                    return Err(Error::Resource(format!("too many dominant weights below {lam}")));
                }
                queue.push_back(nu);
            }
        }
    }

    let rho = sys.rho();
    let norm = |x: &Weight| sys.norm2(&(x + rho));
    let top = norm(lam);
    let mut order: Vec<(Rational, Weight)> = dominant.into_iter().map(|mu| (norm(&mu), mu)).collect();
    order.sort_by(|a, b| b.cmp(a));

    let two = Rational::from_integer(2);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    for (mu_norm, mu) in order {
        if mu == *lam {
            mult.insert(mu, 1);
            continue;
        }
        let mut acc = Rational::zero();
        for a in positive {
            let mut nu = &mu + a;
            while let Some(&m) = mult.get(&dominant_weight(sys, &nu)) {
                if m != 0 {
                    acc += sys.form(&nu, a) * Rational::from_integer(m);
                }
                nu += a;
            }
        }
        let denom = top - mu_norm;
        if denom <= Rational::zero() {
            return Err(Error::internal(format!("Freudenthal denominator vanishes at {mu}")));
        }
        let m = two * acc / denom;
        if !m.is_integer() {
            return Err(Error::internal(format!("non-integral multiplicity {m} at {mu}")));
        }
        mult.insert(mu, m.to_integer());
    }
    Ok(mult.into_iter().filter(|(_, m)| *m != 0).collect())
}

/// Weyl's dimension formula `prod B(lam + rho, a) / B(rho, a)`.
pub fn weyl_dimension<S: WeylSystem + ?Sized>(sys: &S, lam: &Weight) -> Result<u64> {
    check_dominant_integral(sys, lam)?;
    let shifted = lam + sys.rho();
    let mut d = Rational::one();
    for a in sys.positive_roots() {
        d *= sys.form(&shifted, a) / sys.form(sys.rho(), a);
    }
    if !d.is_integer() || d <= Rational::zero() {
        return Err(Error::internal(format!("Weyl dimension {d} of {lam} is not a positive integer")));
    }
    Ok(d.to_integer() as u64)
}

/// Alternating sum `sum_w det(w) e^{w lam}` over the Weyl group of `sys`.
pub fn weyl_numerator<S: WeylSystem + ?Sized>(sys: &S, lam: &Weight) -> Result<FormalCharacter> {
    let mut ch = FormalCharacter::zero();
    for w in enumerate_weyl(sys)? {
        ch.add_term(w.apply(lam), w.sign());
    }
    Ok(ch)
}
