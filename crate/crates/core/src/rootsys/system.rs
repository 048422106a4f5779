use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cartan::CartanType;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, RatMatrix};
use crate::weight::{Rational, Weight};

/// Resource caps. The defaults keep every E6 computation in reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Limits {
    pub max_rank: usize,
    pub max_weyl_order: u64,
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rank: 6, max_weyl_order: 200_000, max_terms: 1_000_000 }
    }
}

/// Common interface of a full root system and an equal-rank subsystem.
///
/// Both act on the same ambient space of weights in fundamental-weight
/// coordinates of `g`, and share the invariant form of `g`.
pub trait WeylSystem {
    fn ambient_rank(&self) -> usize;
    /// Gram matrix of the invariant form on fundamental-weight coordinates.
    fn gram(&self) -> &RatMatrix;
    fn simple_roots(&self) -> &[Weight];
    /// Dual vectors `c` with `<x, beta^vee> = x . c` for each simple root.
    fn simple_coroots(&self) -> &[Vec<Rational>];
    fn positive_roots(&self) -> &[Weight];
    fn rho(&self) -> &Weight;
    fn weyl_order(&self) -> u64;
    fn limits(&self) -> &Limits;
    fn label(&self) -> String;

    fn form(&self, x: &Weight, y: &Weight) -> Rational {
        let g = self.gram();
        let mut acc = Rational::zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                acc += xi * g[i][j] * yj;
            }
        }
        acc
    }

    fn norm2(&self, x: &Weight) -> Rational {
        self.form(x, x)
    }

    /// `<x, beta^vee> = 2 B(x, beta) / B(beta, beta)` for any root `beta`.
    fn coroot_pairing(&self, x: &Weight, root: &Weight) -> Rational {
        Rational::from_integer(2) * self.form(x, root) / self.form(root, root)
    }

    fn simple_pairings(&self, x: &Weight) -> Vec<Rational> {
        self.simple_coroots().iter().map(|c| x.dot(c)).collect()
    }

    fn is_dominant(&self, x: &Weight) -> bool {
        self.simple_coroots().iter().all(|c| !x.dot(c).is_negative())
    }

    fn is_dominant_integral(&self, x: &Weight) -> bool {
        self.simple_coroots().iter().all(|c| {
            let p = x.dot(c);
            p.is_integer() && !p.is_negative()
        })
    }

    /// First positive root orthogonal to `x`, if any.
    fn singular_root(&self, x: &Weight) -> Option<&Weight> {
        self.positive_roots().iter().find(|a| self.form(x, a).is_zero())
    }

    fn is_regular(&self, x: &Weight) -> bool {
        self.singular_root(x).is_none()
    }

    fn reflect_simple(&self, x: &Weight, i: usize) -> Weight {
        let p = x.dot(&self.simple_coroots()[i]);
        if p.is_zero() {
            return x.clone();
        }
        x - &self.simple_roots()[i].scale(p)
    }

    fn contains_root(&self, root: &Weight) -> bool {
        let neg = -root;
        self.positive_roots().iter().any(|a| a == root || *a == neg)
    }

    /// Integer matrix of the `i`-th simple reflection on weight coordinates.
    fn simple_reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.ambient_rank();
        let root = &self.simple_roots()[i];
        let cv = &self.simple_coroots()[i];
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let x = Rational::from_integer(i64::from(r == c)) - root[r] * cv[c];
                        debug_assert!(x.is_integer());
                        x.to_integer()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Cache key identifying a system up to equality of its data.
pub(crate) fn system_key<S: WeylSystem + ?Sized>(sys: &S) -> (Vec<Weight>, Vec<Weight>) {
    let gram = sys.gram().iter().map(|row| Weight::new(row.clone())).collect();
    (sys.simple_roots().to_vec(), gram)
}

/// A root system built from a Cartan type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: IntMatrix,
    root_lengths: Vec<Rational>,
    gram: RatMatrix,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Vec<Rational>>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    coord_index: HashMap<Vec<i64>, usize>,
    rho: Weight,
    weyl_order: u64,
    limits: Limits,
}

impl RootSystem {
    pub fn new(cartan_type: &CartanType) -> Result<Self> {
        Self::with_limits(cartan_type, Limits::default())
    }

    pub fn with_limits(cartan_type: &CartanType, limits: Limits) -> Result<Self> {
        let n = cartan_type.rank();
        if n > limits.max_rank {
            return Err(Error::Resource(format!(
                "type {cartan_type} has rank {n}, above the configured maximum {}",
                limits.max_rank
            )));
        }
        let cartan = cartan_type.cartan_matrix();
        let root_lengths = cartan_type.root_lengths();
        let cinv = linalg::inverse(&linalg::to_rational(&cartan))
            .ok_or_else(|| Error::internal("Cartan matrix is singular"))?;
        // G C = diag(d), i.e. B(omega_k, alpha_j) = d_j delta_kj
        let gram: RatMatrix = (0..n).map(|i| (0..n).map(|j| root_lengths[i] * cinv[i][j]).collect()).collect();
        let simple_roots: Vec<Weight> = (0..n).map(|j| Weight::from_ints((0..n).map(|i| cartan[i][j]))).collect();
        let simple_coroots: Vec<Vec<Rational>> =
            (0..n).map(|i| Weight::one_hot(n, i).coords().to_vec()).collect();

        let positive_root_coords = generate_positive_roots(&cartan);
        let positive_roots: Vec<Weight> =
            positive_root_coords.iter().map(|c| root_coords_to_weight(&cartan, c)).collect();
        let coord_index = positive_root_coords.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let rho = Weight::from_ints(std::iter::repeat_n(1, n));
        let order = cartan_type.weyl_order();

        let rs = RootSystem {
            cartan_type: cartan_type.clone(),
            cartan,
            root_lengths,
            gram,
            simple_roots,
            simple_coroots,
            positive_roots,
            positive_root_coords,
            coord_index,
            rho,
            weyl_order: u64::try_from(order).unwrap_or(u64::MAX),
            limits,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        if self.positive_roots.len() != self.cartan_type.positive_root_count() {
            return Err(Error::internal(format!(
                "{}: generated {} positive roots, expected {}",
                self.cartan_type,
                self.positive_roots.len(),
                self.cartan_type.positive_root_count()
            )));
        }
        let mut half_sum = Weight::zero(self.rank());
        for a in &self.positive_roots {
            half_sum += a;
        }
        if half_sum.half() != self.rho {
            return Err(Error::internal("half sum of positive roots differs from the sum of fundamental weights"));
        }
        let two = Rational::from_integer(2);
        for a in &self.positive_roots {
            if self.norm2(a) > two {
                return Err(Error::internal(format!("root {a} longer than the long-root normalisation")));
            }
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn root_lengths(&self) -> &[Rational] {
        &self.root_lengths
    }

    /// Positive roots in simple-root coordinates, same order as `positive_roots`.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    /// Converts simple-root coordinates to a weight.
    pub fn root_to_weight(&self, coords: &[i64]) -> Weight {
        root_coords_to_weight(&self.cartan, coords)
    }

    /// Is `coords` (simple-root coordinates) a root, and is it positive?
    pub fn classify_root(&self, coords: &[i64]) -> Option<bool> {
        if self.coord_index.contains_key(coords) {
            return Some(true);
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.coord_index.contains_key(&neg).then_some(false)
    }

    /// Simple-root coordinates of a root given as a weight.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        if let Some(i) = self.positive_roots.iter().position(|a| a == w) {
            return Some(self.positive_root_coords[i].clone());
        }
        let neg = -w;
        self.positive_roots
            .iter()
            .position(|a| *a == neg)
            .map(|i| self.positive_root_coords[i].iter().map(|c| -c).collect())
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| Weight::one_hot(self.rank(), i)).collect()
    }

    /// The highest root (highest weight of the adjoint representation for a
    /// simple type).
    pub fn highest_root(&self) -> &Weight {
        let ht = |c: &Vec<i64>| c.iter().sum::<i64>();
        let (i, _) = self
            .positive_root_coords
            .iter()
            .enumerate()
            .max_by_key(|(_, c)| ht(c))
            .expect("a root system has at least one root");
        &self.positive_roots[i]
    }
}

impl WeylSystem for RootSystem {
    fn ambient_rank(&self) -> usize {
        self.rank()
    }
    fn gram(&self) -> &RatMatrix {
        &self.gram
    }
    fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }
    fn simple_coroots(&self) -> &[Vec<Rational>] {
        &self.simple_coroots
    }
    fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }
    fn rho(&self) -> &Weight {
        &self.rho
    }
    fn weyl_order(&self) -> u64 {
        self.weyl_order
    }
    fn limits(&self) -> &Limits {
        &self.limits
    }
    fn label(&self) -> String {
        self.cartan_type.to_string()
    }
}

fn root_coords_to_weight(cartan: &IntMatrix, coords: &[i64]) -> Weight {
    let n = cartan.len();
    Weight::from_ints((0..n).map(|i| (0..n).map(|j| cartan[i][j] * coords[j]).sum()))
}

/// Positive roots in simple-root coordinates by the root-string algorithm,
/// sorted by height then lexicographically. `cartan[i][j] = <beta_j, beta_i^vee>`.
fn generate_positive_roots(cartan: &IntMatrix) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far down the alpha_i string through beta goes
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| (a.iter().sum::<i64>(), a).cmp(&(b.iter().sum::<i64>(), b)));
    roots
}

/// An equal-rank closed root subsystem `Delta(r)` of `Delta(g)`.
#[derive(Clone, Debug)]
pub struct RootSubsystem {
    ambient_label: String,
    gram: RatMatrix,
    simple_root_coords: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Vec<Rational>>,
    positive_root_coords: Vec<Vec<i64>>,
    positive_roots: Vec<Weight>,
    rho: Weight,
    weyl_order: u64,
    limits: Limits,
}

impl RootSubsystem {
    /// Validates simple roots (simple-root coordinates of `g`) of an
    /// equal-rank closed subsystem.
    pub fn validate(rs: &RootSystem, simple: &[Vec<i64>]) -> Result<Self> {
        Self::validate_with(rs, simple, true)
    }

    /// As [`validate`](Self::validate) but only requires the root set to be
    /// stable under its own reflections, not closed under addition in `g`.
    /// Endoscopic subsystems need not be subalgebras (e.g. the short roots
    /// `±e1 ± e2` of `C2`).
    pub fn validate_reflection_closed(rs: &RootSystem, simple: &[Vec<i64>]) -> Result<Self> {
        Self::validate_with(rs, simple, false)
    }

    fn validate_with(rs: &RootSystem, simple: &[Vec<i64>], require_closed: bool) -> Result<Self> {
        let n = rs.rank();
        let show = |c: &[i64]| format!("{c:?}");
        let mut seen = HashSet::new();
        for c in simple {
            if c.len() != n {
                return Err(Error::validation(format!(
                    "root {} has {} coordinates, {} expects {n}",
                    show(c),
                    c.len(),
                    rs.label()
                )));
            }
            match rs.classify_root(c) {
                None => return Err(Error::validation(format!("{} is not a root of {}", show(c), rs.label()))),
                Some(false) => {
                    return Err(Error::validation(format!(
                        "{} is a negative root; subsystem simple roots must be positive roots of {}",
                        show(c),
                        rs.label()
                    )))
                }
                Some(true) => {}
            }
            if !seen.insert(c.clone()) {
                return Err(Error::validation(format!("root {} repeated", show(c))));
            }
        }

        let simple_roots: Vec<Weight> = simple.iter().map(|c| rs.root_to_weight(c)).collect();
        let k = simple.len();
        // sub-Cartan matrix a[i][j] = <beta_j, beta_i^vee>
        let mut sub_cartan = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                let p = rs.coroot_pairing(&simple_roots[j], &simple_roots[i]);
                if !p.is_integer() {
                    return Err(Error::internal("non-integral pairing between roots"));
                }
                if i != j && p.is_positive() {
                    return Err(Error::validation(format!(
                        "{} and {} are not simple for the subsystem they generate (positive pairing)",
                        show(&simple[i]),
                        show(&simple[j])
                    )));
                }
                sub_cartan[i][j] = p.to_integer();
            }
        }

        let mut positive_root_coords = Vec::new();
        let mut positive_roots = Vec::new();
        for b in generate_positive_roots(&sub_cartan) {
            let coords: Vec<i64> = (0..n).map(|m| (0..k).map(|j| b[j] * simple[j][m]).sum()).collect();
            if rs.classify_root(&coords) != Some(true) {
                return Err(Error::internal(format!("subsystem root {} is not a positive root of g", show(&coords))));
            }
            positive_roots.push(rs.root_to_weight(&coords));
            positive_root_coords.push(coords);
        }

        if require_closed {
            // additive closure in Delta(g); ordered so the reported pair is stable
            let full: BTreeSet<Vec<i64>> = positive_root_coords
                .iter()
                .flat_map(|c| [c.clone(), c.iter().map(|x| -x).collect()])
                .collect();
            for a in &full {
                for b in &full {
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if rs.classify_root(&s).is_some() && !full.contains(&s) {
                        return Err(Error::validation(format!(
                            "subsystem generated by {:?} is not closed: {} + {} = {} is a root of {} outside it",
                            simple,
                            show(a),
                            show(b),
                            show(&s),
                            rs.label()
                        )));
                    }
                }
            }
        }

        let mut rho = Weight::zero(n);
        for a in &positive_roots {
            rho += a;
        }
        let rho = rho.half();
        let simple_coroots = simple_roots
            .iter()
            .map(|b| {
                let scale = Rational::from_integer(2) / rs.norm2(b);
                (0..n).map(|i| (0..n).map(|j| rs.gram()[i][j] * b[j]).sum::<Rational>() * scale).collect()
            })
            .collect();

        let mut sub = RootSubsystem {
            ambient_label: rs.label(),
            gram: rs.gram().clone(),
            simple_root_coords: simple.to_vec(),
            simple_roots,
            simple_coroots,
            positive_root_coords,
            positive_roots,
            rho,
            weyl_order: 1,
            limits: *rs.limits(),
        };
        sub.weyl_order = orbit_size(&sub, &sub.rho.clone(), rs.limits().max_weyl_order)?;
        Ok(sub)
    }

    /// Builds the subsystem whose positive roots are exactly `positive`
    /// (simple-root coordinates of `g`): its simple roots are the
    /// indecomposable elements. Additive closure in `g` is not required.
    pub fn from_positive_roots(rs: &RootSystem, positive: &[Vec<i64>]) -> Result<Self> {
        let set: HashSet<&Vec<i64>> = positive.iter().collect();
        let mut simple: Vec<Vec<i64>> = positive
            .iter()
            .filter(|c| {
                !positive.iter().any(|a| {
                    let rest: Vec<i64> = c.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                    set.contains(&rest)
                })
            })
            .cloned()
            .collect();
        simple.sort();
        let sub = RootSubsystem::validate_reflection_closed(rs, &simple)?;
        let got: HashSet<&Vec<i64>> = sub.positive_root_coords.iter().collect();
        if got != set {
            return Err(Error::validation(format!(
                "roots {positive:?} do not form the positive system of a closed subsystem"
            )));
        }
        Ok(sub)
    }

    /// Simple roots in simple-root coordinates of `g`.
    pub fn simple_root_coords(&self) -> &[Vec<i64>] {
        &self.simple_root_coords
    }

    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn is_cartan(&self) -> bool {
        self.simple_roots.is_empty()
    }
}

impl PartialEq for RootSubsystem {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
            && self.simple_roots == other.simple_roots
            && self.positive_roots == other.positive_roots
    }
}

impl WeylSystem for RootSubsystem {
    fn ambient_rank(&self) -> usize {
        self.rho.rank()
    }
    fn gram(&self) -> &RatMatrix {
        &self.gram
    }
    fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }
    fn simple_coroots(&self) -> &[Vec<Rational>] {
        &self.simple_coroots
    }
    fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }
    fn rho(&self) -> &Weight {
        &self.rho
    }
    fn weyl_order(&self) -> u64 {
        self.weyl_order
    }
    fn limits(&self) -> &Limits {
        &self.limits
    }
    fn label(&self) -> String {
        format!("{}{{{}}}", self.ambient_label, self.simple_root_coords.iter().map(|c| format!("{c:?}")).collect::<Vec<_>>().join(","))
    }
}

/// Size of the W-orbit of `x` under simple reflections, failing past `cap`.
pub(crate) fn orbit_size<S: WeylSystem + ?Sized>(sys: &S, x: &Weight, cap: u64) -> Result<u64> {
    Ok(weyl_orbit(sys, x, cap)?.len() as u64)
}

/// The W-orbit of `x`, breadth first from `x`.
pub(crate) fn weyl_orbit<S: WeylSystem + ?Sized>(sys: &S, x: &Weight, cap: u64) -> Result<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = vec![x.clone()];
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(v) = queue.pop_front() {
        for i in 0..sys.simple_roots().len() {
            let y = sys.reflect_simple(&v, i);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::Resource(format!(
                        "Weyl orbit in {} exceeds the configured cap {cap}",
                        sys.label()
                    )));
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_and_a2_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[Weight::from_ints([2])]);
        assert_eq!(a1.rho(), &Weight::from_ints([1]));
        let a2 = rs("A2");
        assert_eq!(a2.positive_root_coords(), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn g2_long_roots() {
        // |Delta+| = (dim g - rank)/2 = (14 - 2)/2
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), (14 - 2) / 2);
        let two = Rational::from_integer(2);
        let mut long: Vec<Vec<i64>> = g2
            .positive_root_coords()
            .iter()
            .zip(g2.positive_roots())
            .filter(|(_, w)| g2.norm2(w) == two)
            .map(|(c, _)| c.clone())
            .collect();
        long.sort();
        assert_eq!(long, vec![vec![0, 1], vec![3, 1], vec![3, 2]]);
    }

    #[test]
    fn positive_root_counts_for_all_series() {
        for s in ["A1", "A5", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "A1xA1xA1", "B2xG2"] {
            let r = rs(s);
            assert_eq!(r.positive_roots().len(), r.cartan_type().positive_root_count(), "{s}");
        }
    }

    #[test]
    fn rank_cap_is_enforced() {
        let e = RootSystem::with_limits(&"A7".parse().unwrap(), Limits::default());
        assert!(matches!(e, Err(Error::Resource(_))));
        let ok = RootSystem::with_limits(&"A7".parse().unwrap(), Limits { max_rank: 7, ..Limits::default() });
        assert!(ok.is_ok());
    }

    #[test]
    fn pairing_is_consistent_with_cartan_matrix() {
        let g = rs("F4");
        for (j, a) in g.simple_roots().iter().enumerate() {
            for (i, b) in g.simple_roots().iter().enumerate() {
                assert_eq!(g.coroot_pairing(a, b), Rational::from_integer(g.cartan_matrix()[i][j]));
            }
        }
    }

    #[test]
    fn subsystem_examples() {
        let a2 = rs("A2");
        let s = RootSubsystem::validate(&a2, &[vec![1, 0]]).unwrap();
        assert_eq!(s.positive_roots().len(), 1);
        assert_eq!(s.weyl_order(), 2);

        let g2 = rs("G2");
        let s = RootSubsystem::validate(&g2, &[vec![0, 1], vec![3, 1]]).unwrap();
        assert_eq!(s.positive_roots().len(), 3);
        assert!(s.positive_root_coords().contains(&vec![3, 2]));
        assert_eq!(s.weyl_order(), 6);

        let b2 = rs("B2");
        let s = RootSubsystem::validate(&b2, &[vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(b2.form(&s.simple_roots()[0], &s.simple_roots()[1]), Rational::zero());
        assert_eq!(s.weyl_order(), 4);

        let cartan = RootSubsystem::validate(&a2, &[]).unwrap();
        assert!(cartan.is_cartan());
        assert_eq!(cartan.weyl_order(), 1);
        assert!(cartan.rho().is_zero());
    }

    #[test]
    fn subsystem_errors() {
        let a2 = rs("A2");
        assert!(matches!(RootSubsystem::validate(&a2, &[vec![2, 0]]), Err(Error::Validation(_))));
        assert!(matches!(RootSubsystem::validate(&a2, &[vec![1, 0], vec![1, 0]]), Err(Error::Validation(_))));
        assert!(matches!(RootSubsystem::validate(&a2, &[vec![1, 0], vec![1, 1]]), Err(Error::Validation(_))));
        assert!(matches!(RootSubsystem::validate(&a2, &[vec![-1, 0]]), Err(Error::Validation(_))));
        // short roots e1, e2 of B2 are orthogonal but e1 + e2 is a root
        let b2 = rs("B2");
        let err = RootSubsystem::validate(&b2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("not closed"), "{err}");
        let short = RootSubsystem::validate_reflection_closed(&b2, &[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(short.weyl_order(), 4);
    }

    #[test]
    fn validation_is_idempotent() {
        let g2 = rs("G2");
        let s = RootSubsystem::validate(&g2, &[vec![0, 1], vec![3, 1]]).unwrap();
        let again = RootSubsystem::validate(&g2, s.simple_root_coords()).unwrap();
        assert_eq!(s, again);
        let from_pos = RootSubsystem::from_positive_roots(&g2, s.positive_root_coords()).unwrap();
        assert_eq!(s, from_pos);
    }
}
