//! Command-line front end for `dirac-core`.
//!
//! Every command writes a single deterministic payload to stdout. Errors go
//! to stderr and select the exit status (see [`dirac_core::Error::exit_code`]).

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use dirac_core::catalog::CatalogFile;
use dirac_core::charring::irreducible_character;
use dirac_core::dirac::{dirac_index, dsquared_spectrum, kostant_hd};
use dirac_core::lifting::{build_endoscopic_datum, lift_discrete_series, HCParameter};
use dirac_core::rootsys::{coset_representatives, enumerate_weyl};
use dirac_core::spinmod::spin_characters;
use dirac_core::verify::{self, RunReport, Suite};
use dirac_core::weight::rational_string;
use dirac_core::{CartanType, Error, Limits, Rational, Result, RootSubsystem, RootSystem, Weight, WeylSystem};

pub const EXIT_IDENTITY_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "dirac", version, about = "Exact Dirac cohomology and endoscopic lifting on formal characters")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    pub text: bool,
    #[arg(long, global = true, value_name = "N")]
    pub max_rank: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    pub max_weyl_order: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_terms: Option<usize>,
    /// Seed for randomized suites; overrides the catalog seed.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Also write a run report, including wall time, to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

impl GlobalOpts {
    fn limits_over(&self, base: Limits) -> Limits {
        Limits {
            max_rank: self.max_rank.unwrap_or(base.max_rank),
            max_weyl_order: self.max_weyl_order.unwrap_or(base.max_weyl_order),
            max_terms: self.max_terms.unwrap_or(base.max_terms),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, Cartan matrix and rho of a Cartan type.
    Roots { r#type: String },
    /// Weyl group elements, or coset representatives W^1 with --cosets.
    Weyl {
        r#type: String,
        /// Subsystem simple roots, e.g. "1,0;1,2" ("" for the Cartan subalgebra).
        #[arg(long, value_name = "SUB", allow_hyphen_values = true)]
        cosets: Option<String>,
    },
    /// Character of an irreducible module, over g or over a subsystem.
    Char {
        r#type: String,
        /// Highest weight in fundamental-weight coordinates, e.g. "1,1".
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_name = "SUB", allow_hyphen_values = true)]
        sub: Option<String>,
    },
    /// Characters of the two half-spin modules of g/r.
    Spin {
        r#type: String,
        #[arg(allow_hyphen_values = true)]
        sub: String,
    },
    /// Dirac index of V_lambda as a virtual r-module.
    Index(PairArgs),
    /// Kostant's description of the Dirac cohomology of V_lambda.
    Hd(PairArgs),
    /// r-types of V_lambda ⊗ S with their D^2 eigenvalues.
    Spectrum(PairArgs),
    /// Lift a Harish-Chandra parameter from k ∩ h to k.
    Lift {
        r#type: String,
        /// Simple roots of the compact subsystem k.
        #[arg(allow_hyphen_values = true)]
        k: String,
        /// Simple roots of the endoscopic subsystem h.
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        parameter: String,
        #[arg(long, allow_hyphen_values = true)]
        sign_q: Option<i64>,
    },
    /// Run verification suites over a catalog file.
    Verify {
        catalog: PathBuf,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub r#type: String,
    /// Subsystem simple roots, e.g. "1,0;1,2" ("" for the Cartan subalgebra).
    #[arg(allow_hyphen_values = true)]
    pub sub: String,
    /// Highest weight in fundamental-weight coordinates.
    #[arg(allow_hyphen_values = true)]
    pub weight: String,
}

/// Parses `"1,0;1,2"` into root coordinate vectors; blank means none.
pub fn parse_roots(s: &str) -> Result<Vec<Vec<i64>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|root| {
            root.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| Error::Parse(format!("not an integer root coordinate: `{c}` in `{s}`"))))
                .collect()
        })
        .collect()
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight> {
    let w = Weight::parse(s)?;
    if w.rank() != rank {
        return Err(Error::Validation(format!("weight `{s}` has {} coordinates, expected {rank}", w.rank())));
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootEntry {
    /// Simple-root coordinates.
    pub coords: Vec<i64>,
    /// Fundamental-weight coordinates.
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsPayload {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots.
    pub root_lengths: Vec<RationalString>,
    pub positive_roots: Vec<RootEntry>,
    pub rho: Weight,
    pub weyl_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalString(#[serde(with = "rational_string")] pub Rational);

/// Output of one command: stdout text plus exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

struct Ctx<'a> {
    opts: &'a GlobalOpts,
    limits: Limits,
}

impl Ctx<'_> {
    fn system(&self, t: &str) -> Result<RootSystem> {
        RootSystem::with_limits(&t.parse()?, self.limits)
    }

    fn pair(&self, t: &str, sub: &str) -> Result<(RootSystem, RootSubsystem)> {
        let rs = self.system(t)?;
        let sub = RootSubsystem::validate(&rs, &parse_roots(sub)?)?;
        Ok((rs, sub))
    }

    fn emit<T: Serialize>(&self, payload: &T, text: impl FnOnce() -> String) -> String {
        if self.opts.text {
            let mut t = text();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        } else {
            let mut s = serde_json::to_string_pretty(payload).expect("payload serializes");
            s.push('\n');
            s
        }
    }
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().collect::<Vec<_>>().join("\n")
}

fn fmt_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

/// Runs a parsed command line. `argv` is echoed into the run report.
pub fn execute(cli: &Cli, argv: Vec<String>) -> Result<Outcome> {
    let start = Instant::now();
    let ctx = Ctx { opts: &cli.global, limits: cli.global.limits_over(Limits::default()) };
    let mut report = RunReport::new(argv.clone(), None);

    let stdout = match &cli.command {
        Command::Roots { r#type } => {
            let rs = ctx.system(r#type)?;
            let payload = RootsPayload {
                cartan_type: rs.cartan_type().clone(),
                rank: rs.rank(),
                cartan_matrix: rs.cartan_matrix().clone(),
                root_lengths: rs.root_lengths().iter().map(|r| RationalString(*r)).collect(),
                positive_roots: rs
                    .positive_root_coords()
                    .iter()
                    .zip(rs.positive_roots())
                    .map(|(c, w)| RootEntry { coords: c.clone(), weight: w.clone() })
                    .collect(),
                rho: rs.rho().clone(),
                weyl_order: rs.weyl_order(),
            };
            report.count("weyl_order", rs.weyl_order());
            ctx.emit(&payload, || {
                let mut out = vec![
                    format!("type {}  rank {}  |W| = {}", payload.cartan_type, payload.rank, payload.weyl_order),
                    format!("rho {}", payload.rho),
                ];
                out.extend(payload.positive_roots.iter().map(|r| format!("{:?}  {}", r.coords, r.weight)));
                lines(out)
            })
        }
        Command::Weyl { r#type, cosets } => {
            let rs = ctx.system(r#type)?;
            let elements = match cosets {
                Some(sub) => {
                    let sub = RootSubsystem::validate(&rs, &parse_roots(sub)?)?;
                    coset_representatives(&rs, &sub)?
                }
                None => enumerate_weyl(&rs)?,
            };
            report.count("weyl_order", rs.weyl_order());
            report.count("elements", elements.len() as u64);
            ctx.emit(&elements, || {
                lines(elements.iter().map(|w| format!("{:>2}  {:+}  {}", w.length, w.det, fmt_word(&w.word))))
            })
        }
        Command::Char { r#type, weight, sub } => {
            let rs = ctx.system(r#type)?;
            let lam = parse_weight(weight, rs.rank())?;
            let ch = match sub {
                Some(sub) => irreducible_character(&RootSubsystem::validate(&rs, &parse_roots(sub)?)?, &lam)?,
                None => irreducible_character(&rs, &lam)?,
            };
            report.count("terms", ch.len() as u64);
            ctx.emit(&ch, || ch.to_text())
        }
        Command::Spin { r#type, sub } => {
            let (rs, sub) = ctx.pair(r#type, sub)?;
            let spin = spin_characters(&rs, &sub)?;
            report.count("terms", (spin.s_plus.len() + spin.s_minus.len()) as u64);
            ctx.emit(&spin, || {
                lines([
                    format!("rho_n {}", spin.rho_n),
                    format!("S+ = {}", spin.s_plus.to_text()),
                    format!("S- = {}", spin.s_minus.to_text()),
                ])
            })
        }
        Command::Index(p) => {
            let (rs, sub) = ctx.pair(&p.r#type, &p.sub)?;
            let lam = parse_weight(&p.weight, rs.rank())?;
            let idx = dirac_index(&rs, &sub, &lam)?;
            report.count("terms", idx.decomposition.len() as u64);
            ctx.emit(&idx, || idx.decomposition.to_text())
        }
        Command::Hd(p) => {
            let (rs, sub) = ctx.pair(&p.r#type, &p.sub)?;
            let lam = parse_weight(&p.weight, rs.rank())?;
            let hd = kostant_hd(&rs, &sub, &lam)?;
            report.count("terms", hd.len() as u64);
            ctx.emit(&hd, || {
                lines(hd.iter().map(|c| format!("{:+}  E_{}  w = {}", c.parity, c.mu, fmt_word(&c.w.word))))
            })
        }
        Command::Spectrum(p) => {
            let (rs, sub) = ctx.pair(&p.r#type, &p.sub)?;
            let lam = parse_weight(&p.weight, rs.rank())?;
            let entries = dsquared_spectrum(&rs, &sub, &lam)?;
            report.count("terms", entries.len() as u64);
            ctx.emit(&entries, || {
                lines(entries.iter().map(|e| format!("{} x E_{}  D^2 = {}", e.mult, e.mu, e.eigenvalue)))
            })
        }
        Command::Lift { r#type, k, h, parameter, sign_q } => {
            let t: CartanType = r#type.parse()?;
            let datum = build_endoscopic_datum(&t, &parse_roots(k)?, &parse_roots(h)?, *sign_q, ctx.limits)?;
            let lam = parse_weight(parameter, datum.g.rank())?;
            let terms = lift_discrete_series(&datum, &HCParameter(lam))?;
            report.count("terms", terms.len() as u64);
            ctx.emit(&terms, || lines(terms.iter().map(|t| format!("{:+}  {}", t.sign, t.parameter))))
        }
        Command::Verify { catalog, suite } => {
            let file = CatalogFile::read(catalog)?;
            let limits = cli.global.limits_over(file.caps.unwrap_or_default());
            let loaded = file.load(Some(limits))?;
            let seed = cli.global.seed.or(loaded.seed).unwrap_or(0);
            report = verify::run(&loaded, *suite, seed, argv)?;
            let out = if cli.global.text {
                let mut out: Vec<String> = report
                    .checks
                    .iter()
                    .map(|c| {
                        let tag = match (c.passed, c.required) {
                            (true, _) => "PASS",
                            (false, true) => "FAIL",
                            (false, false) => "NOTE",
                        };
                        format!("{tag} {} {}", c.name, c.input)
                    })
                    .collect();
                let failed = report.failures().count();
                out.push(format!("{} checks, {failed} failed", report.checks.len()));
                lines(out) + "\n"
            } else {
                report.to_json() + "\n"
            };
            for c in report.failures() {
                eprintln!("failed: {} {}", c.name, c.input);
            }
            out
        }
    };

    let code = if report.passed { 0 } else { EXIT_IDENTITY_FAILED };
    if let Some(path) = &cli.global.report {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Error::Validation(format!("cannot write report {}: {e}", path.display())))?;
    }
    Ok(Outcome { stdout, code })
}
