//! Dirac index, Kostant's Dirac cohomology of finite-dimensional modules,
//! the spectrum of `D^2` on `V ⊗ S`, and infinitesimal-character checks.

mod field;
mod oracle;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charring::{decompose, irreducible_character, VirtualDecomposition};
use crate::error::{Error, Result};
use crate::rootsys::{coset_representatives, dominant_conjugate, RootSubsystem, RootSystem, WeylElement, WeylSystem};
use crate::spinmod::spin_characters;
use crate::weight::{rational_string, Rational, Weight};

pub use field::Q2i;
pub use oracle::{rank1_matrix_oracle, KernelVector, Rank1OracleReport};

/// One member `E_{w(lam + rho) - rho_r}` of Kostant's multiplet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantComponent {
    pub w: WeylElement,
    pub mu: Weight,
    pub parity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub mu: Weight,
    pub mult: i64,
    #[serde(with = "rational_string")]
    pub eigenvalue: Rational,
}

/// `V ⊗ S+ - V ⊗ S-` as a virtual `r`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiracIndex {
    pub decomposition: VirtualDecomposition,
}

fn check_g_dominant(rs: &RootSystem, lam: &Weight) -> Result<()> {
    if lam.rank() != rs.rank() || !rs.is_dominant_integral(lam) {
        return Err(Error::validation(format!("{lam} is not dominant integral for {}", rs.label())));
    }
    Ok(())
}

/// Decomposes `ch V_lam · (ch S+ - ch S-)` over `sub`.
pub fn dirac_index(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight) -> Result<DiracIndex> {
    check_g_dominant(rs, lam)?;
    let v = irreducible_character(rs, lam)?;
    let spin = spin_characters(rs, sub)?;
    let chi = v.multiply_capped(&spin.transfer_factor(), rs.limits().max_terms)?;
    Ok(DiracIndex { decomposition: decompose(&chi, sub)? })
}

/// Kostant's closed form: one `r`-type `w(lam + rho) - rho_r` per `w` in `W^1`,
/// with parity `det w`.
pub fn kostant_hd(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight) -> Result<Vec<KostantComponent>> {
    check_g_dominant(rs, lam)?;
    let shifted = lam + rs.rho();
    let comps: Vec<KostantComponent> = coset_representatives(rs, sub)?
        .into_iter()
        .map(|w| {
            let mu = &w.apply(&shifted) - sub.rho();
            let parity = w.sign();
            KostantComponent { w, mu, parity }
        })
        .collect();
    for c in &comps {
        if !sub.is_dominant_integral(&c.mu) {
            return Err(Error::internal(format!("Kostant weight {} is not dominant for the subsystem", c.mu)));
        }
    }
    Ok(comps)
}

/// `r`-types of `V_lam ⊗ S` with the scalar by which `D^2` acts,
/// `B(mu + rho_r, mu + rho_r) - B(lam + rho, lam + rho)`. Sorted by `mu`.
pub fn dsquared_spectrum(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight) -> Result<Vec<SpectrumEntry>> {
    check_g_dominant(rs, lam)?;
    let v = irreducible_character(rs, lam)?;
    let spin = spin_characters(rs, sub)?;
    let chi = v.multiply_capped(&spin.total(), rs.limits().max_terms)?;
    let dec = decompose(&chi, sub)?;
    let casimir_g = rs.norm2(&(lam + rs.rho()));
    let mut entries = Vec::with_capacity(dec.len());
    for (mu, mult) in dec.sorted() {
        if mult <= 0 {
            return Err(Error::internal(format!("V ⊗ S has negative multiplicity {mult} at {mu}")));
        }
        let eigenvalue = sub.norm2(&(&mu + sub.rho())) - casimir_g;
        entries.push(SpectrumEntry { mu, mult, eigenvalue });
    }
    Ok(entries)
}

/// Spectrum entries on which `D^2` vanishes.
pub fn kernel_entries(spectrum: &[SpectrumEntry]) -> Vec<SpectrumEntry> {
    spectrum.iter().filter(|e| e.eigenvalue.is_zero()).cloned().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyWitness {
    pub mu: Weight,
    /// `w` with `w(lam + rho) = mu + rho_r`.
    pub witness: WeylElement,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfCharReport {
    pub witnesses: Vec<ConjugacyWitness>,
    pub failures: Vec<Weight>,
}

impl InfCharReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `mu + rho_r ∈ W·(lam + rho)` for every `mu`, recording a witness.
pub fn check_infinitesimal_character<'a, I>(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight, mus: I) -> InfCharReport
where
    I: IntoIterator<Item = &'a Weight>,
{
    let target = lam + rs.rho();
    let mut report = InfCharReport::default();
    for mu in mus {
        let x = mu + sub.rho();
        let (dom, v) = dominant_conjugate(rs, &x);
        if dom == target {
            let witness = v.inverse();
            debug_assert_eq!(witness.apply(&target), x);
            report.witnesses.push(ConjugacyWitness { mu: mu.clone(), witness });
        } else {
            report.failures.push(mu.clone());
        }
    }
    report
}

/// Agreement flags for one `(g, r, lam)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreements {
    /// Index decomposition equals the signed Kostant list.
    pub index_equals_kostant: bool,
    /// Every Kostant type has `D^2` eigenvalue zero.
    pub kostant_in_kernel: bool,
    /// Every index component lies in the eigenvalue-zero set.
    pub index_in_kernel: bool,
    /// Eigenvalue-zero set equals the Kostant list.
    pub kernel_equals_kostant: bool,
    /// Every eigenvalue-zero type has infinitesimal character in `W·(lam + rho)`.
    pub kernel_infinitesimal_characters: bool,
    /// The `w(lam + rho)` are pairwise distinct.
    pub distinct_infinitesimal_characters: bool,
    /// Each Kostant type occurs once in `V ⊗ S`. Recorded, not required.
    pub multiplicity_one: bool,
}

impl Agreements {
    /// Everything except the multiplicity-one observation.
    pub fn required(&self) -> bool {
        self.index_equals_kostant
            && self.kostant_in_kernel
            && self.index_in_kernel
            && self.kernel_equals_kostant
            && self.kernel_infinitesimal_characters
            && self.distinct_infinitesimal_characters
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiracReport {
    pub pair: String,
    pub lambda: Weight,
    pub index: DiracIndex,
    pub kostant: Vec<KostantComponent>,
    pub kernel: Vec<SpectrumEntry>,
    pub infinitesimal_characters: InfCharReport,
    pub agreements: Agreements,
}

/// Computes the Dirac cohomology of `V_lam` two ways and cross-checks them.
pub fn dirac_report(rs: &RootSystem, sub: &RootSubsystem, lam: &Weight) -> Result<DiracReport> {
    let index = dirac_index(rs, sub, lam)?;
    let kostant = kostant_hd(rs, sub, lam)?;
    let spectrum = dsquared_spectrum(rs, sub, lam)?;
    let kernel = kernel_entries(&spectrum);

    let mut signed: Vec<(Weight, i64)> = kostant.iter().map(|c| (c.mu.clone(), c.parity)).collect();
    signed.sort();
    let kernel_mult: BTreeMap<&Weight, i64> = kernel.iter().map(|e| (&e.mu, e.mult)).collect();
    let mut kostant_mus: Vec<&Weight> = kostant.iter().map(|c| &c.mu).collect();
    kostant_mus.sort();
    let kernel_mus: Vec<&Weight> = kernel_mult.keys().copied().collect();
    let shifted = lam + rs.rho();
    let mut inf: Vec<Weight> = kostant.iter().map(|c| c.w.apply(&shifted)).collect();
    inf.sort();
    inf.dedup();
    let infchar = check_infinitesimal_character(rs, sub, lam, kernel.iter().map(|e| &e.mu));

    let agreements = Agreements {
        index_equals_kostant: index.decomposition.sorted() == signed,
        kostant_in_kernel: kostant.iter().all(|c| kernel_mult.contains_key(&c.mu)),
        index_in_kernel: index.decomposition.components.iter().all(|c| kernel_mult.contains_key(&c.highest_weight)),
        kernel_equals_kostant: kernel_mus == kostant_mus,
        kernel_infinitesimal_characters: infchar.passed(),
        distinct_infinitesimal_characters: inf.len() == kostant.len(),
        multiplicity_one: kostant.iter().all(|c| kernel_mult.get(&c.mu) == Some(&1)),
    };
    Ok(DiracReport {
        pair: sub.label(),
        lambda: lam.clone(),
        index,
        kostant,
        kernel,
        infinitesimal_characters: infchar,
        agreements,
    })
}
