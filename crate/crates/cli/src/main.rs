//! `mihailova`: command-line front end for the Mihailova subgroup toolkit.
//!
//! Exit codes: 0 on success (including an `unknown` search result), 1 when a
//! verification fails, 2 on usage or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mihailova_core::autf3::orbit_undecidable_subgroup;
use mihailova_core::identities::{reduce_to_empty, ReductionBudget, ReductionOutcome};
use mihailova_core::mihailova::{in_kernel_of_pi, in_m, pi, relator_family};
use mihailova_core::presentation::Evidence;
use mihailova_core::{Budget, MixedWord, PairWord, Presentation, Verdict};

#[derive(Parser)]
#[command(
    name = "mihailova",
    version,
    about = "Mihailova subgroups, identities among relations and Aut(F3)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Node expansions for the normal-closure search.
    #[arg(long, default_value_t = 10_000)]
    budget_steps: usize,
    /// Length of extra conjugators wrapped around spliced relators.
    #[arg(long, default_value_t = 0)]
    max_conjugator_len: usize,
    /// Longest intermediate cyclic word kept.
    #[arg(long, default_value_t = 32)]
    max_word_len: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation and print its concise refinement.
    Check { file: PathBuf },
    /// Enumerate the relators of the recursive presentation of M(H).
    Relators {
        file: PathBuf,
        /// Longest d-word conjugator.
        #[arg(long, default_value_t = 2)]
        max_d_len: usize,
        /// Check that every relator lies in ker(pi).
        #[arg(long)]
        verify: bool,
    },
    /// Decide membership of a pair `(w1 , w2)` in M(H).
    Membership {
        file: PathBuf,
        pair: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Image of a word over d1..dn, t1..tm in F_n x F_n.
    Pi { file: PathBuf, word: String },
    /// Reduce the identity associated to a word of ker(pi) to the empty one.
    ReduceIdentity {
        file: PathBuf,
        word: String,
        /// Node expansions.
        #[arg(long, default_value_t = 10_000)]
        budget_steps: usize,
        /// Peiffer insertions allowed along a path.
        #[arg(long, default_value_t = 0)]
        budget_insertions: usize,
        /// Frontier size limit.
        #[arg(long, default_value_t = 200_000)]
        max_frontier: usize,
    },
    /// Print the automorphisms of F3 generating the orbit undecidable subgroup.
    EmbedAut { file: PathBuf },
}

/// Result of a command that parsed its inputs.
struct Report {
    text: String,
    verified: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            verified: true,
        }
    }
}

fn load(path: &Path) -> Result<Presentation> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Presentation::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn check(p: &Presentation) -> Report {
    let mut out = String::new();
    let valid = match p.validate() {
        Ok(()) => "yes".to_string(),
        Err(e) => format!("no ({e})"),
    };
    let warnings = p.check_strengthened_conciseness();
    let concise = if p.is_concise() { "yes" } else { "no" };
    let _ = writeln!(out, "valid: {valid}");
    if warnings.is_empty() {
        let _ = writeln!(out, "concise: {concise}; warnings: none");
    } else {
        let _ = writeln!(out, "concise: {concise}; warnings: {}", warnings.len());
        for w in &warnings {
            let _ = writeln!(out, "warning: {w}");
        }
    }
    let _ = writeln!(out, "# concise refinement");
    let _ = write!(out, "{}", p.concise_refinement());
    Report::ok(out)
}

fn relators(p: &Presentation, max_d_len: usize, verify: bool) -> Result<Report> {
    let family = relator_family(p, max_d_len)?;
    let mut out = String::new();
    let mut failures = 0;
    for r in &family {
        let _ = writeln!(out, "{r}");
        if verify && !in_kernel_of_pi(p, r)? {
            failures += 1;
            let _ = writeln!(out, "# not in ker(pi): {r}");
        }
    }
    if verify {
        if failures == 0 {
            let _ = writeln!(out, "{} relators, all in ker(pi)", family.len());
        } else {
            let _ = writeln!(out, "{} relators, {failures} not in ker(pi)", family.len());
        }
    }
    Ok(Report {
        text: out,
        verified: failures == 0,
    })
}

fn membership(p: &Presentation, pair: &str, search: &SearchArgs) -> Result<Report> {
    let pair = PairWord::parse(pair, p.rank())?;
    let budget = Budget {
        max_steps: search.budget_steps,
        max_conjugator_len: search.max_conjugator_len,
        max_word_len: search.max_word_len,
    };
    let verdict = in_m(p, &pair, &budget)?;
    let mut out = String::new();
    let label = match verdict.outcome {
        Verdict::EqualInH => "equal-in-H",
        Verdict::NotEqualInH => "not-equal-in-H",
        Verdict::Unknown => "unknown",
    };
    let _ = writeln!(out, "{label}");
    match &verdict.evidence {
        Evidence::Factors(factors) => {
            let _ = writeln!(
                out,
                "# w1 w2^-1 = product of conjugator * r_i^sign * conjugator^-1"
            );
            for f in factors {
                let _ = writeln!(out, "factor ({}) r{}^{}", f.conjugator, f.relator, f.sign);
            }
        }
        Evidence::Obstruction(v) => {
            let v: Vec<String> = v.iter().map(i64::to_string).collect();
            let _ = writeln!(
                out,
                "obstruction: exponent sums ({}) outside the relator lattice",
                v.join(", ")
            );
        }
        Evidence::Exhausted { steps } => {
            let _ = writeln!(out, "search exhausted after {steps} steps");
        }
        Evidence::None => {}
    }
    let w = &pair.left * &pair.right.inverse();
    Ok(Report {
        text: out,
        verified: verdict.verify(p, &w),
    })
}

fn reduce_identity(p: &Presentation, word: &str, budget: &ReductionBudget) -> Result<Report> {
    let w = MixedWord::parse(word, p.rank(), p.relator_count())?;
    match reduce_to_empty(p, &w, budget)? {
        ReductionOutcome::Reduced(certificate) => {
            let verified = certificate.check(p).is_ok();
            Ok(Report {
                text: certificate.to_string(),
                verified,
            })
        }
        ReductionOutcome::Unknown {
            expansions,
            frontier,
        } => Ok(Report::ok(format!(
            "unknown\n# {expansions} expansions, {frontier} nodes left in the frontier\n"
        ))),
    }
}

fn embed_aut(p: &Presentation) -> Result<Report> {
    let autos = orbit_undecidable_subgroup(p)?;
    let blocks: Vec<String> = autos.iter().map(ToString::to_string).collect();
    Ok(Report::ok(blocks.join("\n")))
}

fn run(cli: &Cli) -> Result<Report> {
    let Format::Text = cli.format;
    match &cli.command {
        Command::Check { file } => Ok(check(&load(file)?)),
        Command::Relators {
            file,
            max_d_len,
            verify,
        } => relators(&load(file)?, *max_d_len, *verify),
        Command::Membership { file, pair, search } => membership(&load(file)?, pair, search),
        Command::Pi { file, word } => {
            let p = load(file)?;
            let w = MixedWord::parse(word, p.rank(), p.relator_count())?;
            let image = pi(&p, &w)?;
            Ok(Report::ok(format!("{image}\n")))
        }
        Command::ReduceIdentity {
            file,
            word,
            budget_steps,
            budget_insertions,
            max_frontier,
        } => {
            let budget = ReductionBudget {
                max_moves: *budget_steps,
                max_insertions: *budget_insertions,
                max_frontier: *max_frontier,
                ..ReductionBudget::default()
            };
            reduce_identity(&load(file)?, word, &budget)
        }
        Command::EmbedAut { file } => embed_aut(&load(file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.text);
            if report.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
