//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.
//!
//! Expected values come from small oracles written here against the Cartan
//! matrix rather than from the library's own enumeration code.

use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dirac_core::catalog::default_catalog;
use dirac_core::charring::{decompose, irreducible_character, weyl_dimension, weyl_numerator};
use dirac_core::dirac::{dirac_report, dsquared_spectrum, rank1_matrix_oracle};
use dirac_core::lifting::{lift_discrete_series, random_limit_parameter, random_regular_parameter, verify_lift_identity};
use dirac_core::rootsys::coset_representatives;
use dirac_core::spinmod::transfer_factor;
use dirac_core::verify::random_virtual;
use dirac_core::{FormalCharacter, Rational, RootSubsystem, RootSystem, Weight, WeylSystem};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn zero() -> Rational {
    Rational::from_integer(0)
}

/// `s_i x = x - x_i alpha_i`, with `alpha_i` the i-th column of the Cartan matrix.
fn reflect(rs: &RootSystem, x: &Weight, i: usize) -> Weight {
    let c = rs.cartan_matrix();
    let xi = x[i];
    Weight::new((0..rs.rank()).map(|k| x[k] - xi * Rational::from_integer(c[k][i])).collect())
}

/// W-orbit of a regular weight with the BFS distance of each point, which is
/// the length of the unique element carrying `x` there.
fn regular_orbit(rs: &RootSystem, x: &Weight) -> BTreeMap<Weight, usize> {
    let mut dist = BTreeMap::from([(x.clone(), 0)]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        let d = dist[&y];
        for i in 0..rs.rank() {
            let z = reflect(rs, &y, i);
            if !dist.contains_key(&z) {
                dist.insert(z.clone(), d + 1);
                queue.push_back(z);
            }
        }
    }
    dist
}

/// `prod_{a > 0} (e^{a/2} - e^{-a/2})`, expanded term by term.
fn weyl_denominator(roots: &[Weight], rank: usize) -> BTreeMap<Weight, i64> {
    let mut acc = BTreeMap::from([(Weight::zero(rank), 1i64)]);
    for a in roots {
        let half = a.half();
        let mut next = BTreeMap::new();
        for (w, m) in &acc {
            *next.entry(w + &half).or_insert(0) += m;
            *next.entry(w - &half).or_insert(0) -= m;
        }
        next.retain(|_, m| *m != 0);
        acc = next;
    }
    acc
}

fn as_map(ch: &FormalCharacter) -> BTreeMap<Weight, i64> {
    ch.iter().map(|(w, m)| (w.clone(), m)).collect()
}

fn samples(rs: &RootSystem) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rs.rank())];
    out.extend(rs.fundamental_weights());
    out.push(rs.rho().clone());
    out
}

fn pairs() -> Vec<(RootSystem, RootSubsystem)> {
    default_catalog().expect("catalog loads").pairs.into_iter().map(|p| (p.g, p.r)).collect()
}

fn denominator_quotient() -> Outcome {
    let mut n = 0;
    for (g, r) in pairs() {
        let lhs = transfer_factor(&g, &r).map_err(|e| e.to_string())?.multiply(&weyl_numerator(&r, r.rho()).unwrap());
        let oracle = weyl_denominator(g.positive_roots(), g.rank());
        if as_map(&lhs) != oracle || lhs != weyl_numerator(&g, g.rho()).unwrap() {
            return Err(format!("{}: quotient identity fails", r.label()));
        }
        n += 1;
    }
    Ok(format!("{n} pairs"))
}

fn index_equals_kostant() -> Outcome {
    let mut n = 0;
    for (g, r) in pairs() {
        for lam in samples(&g) {
            let shifted = &lam + g.rho();
            let mut expected: Vec<(Weight, i64)> = regular_orbit(&g, &shifted)
                .into_iter()
                .filter(|(x, _)| r.positive_roots().iter().all(|b| r.form(x, b) > zero()))
                .map(|(x, len)| (&x - r.rho(), if len % 2 == 0 { 1 } else { -1 }))
                .collect();
            expected.sort();
            let report = dirac_report(&g, &r, &lam).map_err(|e| e.to_string())?;
            if report.index.decomposition.sorted() != expected || !report.agreements.index_equals_kostant {
                return Err(format!("{} at {lam}", r.label()));
            }
            n += 1;
        }
    }
    Ok(format!("{n} samples"))
}

fn kernel_agreement() -> Outcome {
    let (mut n, mut multiplicity_one) = (0, 0);
    for (g, r) in pairs() {
        for lam in samples(&g) {
            let report = dirac_report(&g, &r, &lam).map_err(|e| e.to_string())?;
            let kernel: Vec<&Weight> = report.kernel.iter().map(|e| &e.mu).collect();
            let kostant_inside = report.kostant.iter().all(|c| kernel.contains(&&c.mu));
            let index_inside = report.index.decomposition.components.iter().all(|c| kernel.contains(&&c.highest_weight));
            if !(kostant_inside && index_inside && report.agreements.required()) {
                return Err(format!("{} at {lam}", r.label()));
            }
            n += 1;
            multiplicity_one += report.agreements.multiplicity_one as usize;
        }
    }
    Ok(format!("{n} samples, multiplicity one on {multiplicity_one}/{n}"))
}

fn infinitesimal_characters() -> Outcome {
    let mut witnesses = 0;
    for (g, r) in pairs() {
        for lam in samples(&g) {
            let report = dirac_report(&g, &r, &lam).map_err(|e| e.to_string())?;
            let inf = &report.infinitesimal_characters;
            if !inf.failures.is_empty() || inf.witnesses.len() != report.kernel.len() {
                return Err(format!("{} at {lam}: {:?}", r.label(), inf.failures));
            }
            let target = &lam + g.rho();
            for wit in &inf.witnesses {
                if wit.witness.apply(&target) != &wit.mu + r.rho() {
                    return Err(format!("{} at {lam}: bad witness for {}", r.label(), wit.mu));
                }
                witnesses += 1;
            }
        }
    }
    Ok(format!("{witnesses} witnesses checked"))
}

fn coset_counts() -> Outcome {
    let expected: [(&str, &[[i64; 2]], usize); 6] = [
        ("A1", &[], 2),
        ("A2", &[], 6),
        ("A2", &[[1, 0]], 3),
        ("B2", &[[1, 0], [1, 2]], 2),
        ("G2", &[[0, 1], [3, 1]], 2),
        ("G2", &[[1, 0], [3, 2]], 3),
    ];
    for (t, sub, count) in expected {
        let g = RootSystem::new(&t.parse().unwrap()).unwrap();
        let sub: Vec<Vec<i64>> = sub.iter().map(|c| c[..g.rank()].to_vec()).collect();
        let r = RootSubsystem::validate(&g, &sub).map_err(|e| e.to_string())?;
        let reps = coset_representatives(&g, &r).map_err(|e| e.to_string())?;
        let quotient = regular_orbit(&g, g.rho()).len() as u64 / r.weyl_order();
        if reps.len() != count || quotient != count as u64 {
            return Err(format!("{}: {} representatives, expected {count}", r.label(), reps.len()));
        }
    }
    Ok("6 pairs".into())
}

fn lifting_identity() -> Outcome {
    let catalog = default_catalog().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut regular, mut limits) = (0, 0);
    for d in &catalog.endoscopy {
        let cosets = (d.k.weyl_order() / d.kh.weyl_order()) as usize;
        for trial in 0..110 {
            let p = if trial < 100 { random_regular_parameter(d, &mut rng) } else { random_limit_parameter(d, &mut rng) };
            let p = p.map_err(|e| e.to_string())?;
            let rep = verify_lift_identity(d, &p).map_err(|e| e.to_string())?;
            let terms = lift_discrete_series(d, &p).map_err(|e| e.to_string())?;
            let shape = if trial < 100 { rep.compact_regular } else { rep.compact_regular && rep.noncompact_walls == 1 };
            // A compact-regular parameter has a free W_K orbit.
            if !(rep.holds && shape && terms.len() == cosets && rep.lhs_terms as u64 == d.k.weyl_order()) {
                return Err(format!("{} parameter {}", d.k.label(), p.0));
            }
            if trial < 100 {
                regular += 1;
            } else {
                limits += 1;
            }
        }
    }
    Ok(format!("{regular} regular, {limits} limit parameters"))
}

fn rank1_oracle() -> Outcome {
    let g = RootSystem::new(&"A1".parse().unwrap()).unwrap();
    let torus = RootSubsystem::validate(&g, &[]).unwrap();
    let mut saw_negative = false;
    for n in 0..=5i64 {
        let rep = rank1_matrix_oracle(n as usize).map_err(|e| e.to_string())?;
        let mut kernel: Vec<Weight> = rep.kernel.iter().map(|k| k.weight.clone()).collect();
        kernel.sort();
        if !rep.passed() || rep.kernel_dimension != 2 || kernel != vec![Weight::from_ints([-n - 1]), Weight::from_ints([n + 1])] {
            return Err(format!("n = {n}: kernel {kernel:?}"));
        }
        // (mu^2 - (n+1)^2) / 2 with B(omega, omega) = 1/2.
        for e in &rep.eigenvalues {
            let m = e.weight[0];
            let want = (m * m - Rational::from_integer((n + 1) * (n + 1))) / Rational::from_integer(2);
            if e.eigenvalue != want {
                return Err(format!("n = {n}: eigenvalue {} at {}", e.eigenvalue, e.weight));
            }
        }
        let spectrum = dsquared_spectrum(&g, &torus, &Weight::from_ints([n])).unwrap();
        for s in &spectrum {
            if !rep.eigenvalues.iter().any(|e| e.weight == s.mu && e.eigenvalue == s.eigenvalue) {
                return Err(format!("n = {n}: spectrum entry {} missing from the matrix", s.mu));
            }
            if n == 1 && s.mu == Weight::from_ints([0]) {
                saw_negative = s.eigenvalue == Rational::from_integer(-2);
            }
        }
    }
    if !saw_negative {
        return Err("missing eigenvalue -2 at n = 1, mu = 0".into());
    }
    Ok("n = 0..5".into())
}

fn character_ring() -> Outcome {
    let mut systems: Vec<RootSystem> = Vec::new();
    for (g, _) in pairs() {
        if !systems.iter().any(|s| s.cartan_type() == g.cartan_type()) {
            systems.push(g);
        }
    }
    for g in &systems {
        let num_rho = weyl_numerator(g, g.rho()).unwrap();
        for lam in samples(g) {
            let ch = irreducible_character(g, &lam).map_err(|e| e.to_string())?;
            if ch.multiply(&num_rho) != weyl_numerator(g, &(&lam + g.rho())).unwrap() {
                return Err(format!("{}: Weyl formula at {lam}", g.label()));
            }
            if ch.mass() as u64 != weyl_dimension(g, &lam).unwrap() {
                return Err(format!("{}: dimension at {lam}", g.label()));
            }
        }
    }
    for (t, dim) in [("A2", 8), ("B2", 10), ("G2", 14)] {
        let g = RootSystem::new(&t.parse().unwrap()).unwrap();
        let mass = irreducible_character(&g, g.highest_root()).unwrap().mass();
        if mass != dim {
            return Err(format!("{t} adjoint has dimension {mass}"));
        }
    }
    let all = pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let (g, r) = &all[trial % all.len()];
        let sys: &dyn WeylSystem = if trial % 2 == 0 { g } else { r };
        let v = random_virtual(sys, &mut rng);
        let back = decompose(&v.reconstruct(sys).unwrap(), sys).map_err(|e| e.to_string())?;
        if back.sorted() != v.sorted() {
            return Err(format!("round trip {trial} on {}", sys.label()));
        }
    }
    Ok(format!("{} systems, 50 round trips", systems.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("denominator quotient", denominator_quotient),
        ("index equals Kostant list", index_equals_kostant),
        ("kernel agreement", kernel_agreement),
        ("infinitesimal characters", infinitesimal_characters),
        ("coset counts", coset_counts),
        ("lifting identity", lifting_identity),
        ("rank-1 matrix oracle", rank1_oracle),
        ("character ring", character_ring),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(note) => println!("criterion {} {name}: PASS ({note}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}; {ms} ms)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
