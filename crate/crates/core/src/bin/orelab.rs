use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use orelab::analysis::Analysis;
use orelab::corpus::{corpus_regen, corpus_run, CorpusManifest};
use orelab::criteria::{fourth_criterion, run_criterion, CriterionId};
use orelab::ore::{classify_mult_set, localize};
use orelab::report::{run_analysis, Phase};
use orelab::ring::io::parse_ring_input;
use orelab::{Bounds, ElementSet, Error, FiniteRing};

/// Left Ore sets, localizations and semisimplicity criteria for finite rings.
#[derive(Parser)]
#[command(name = "orelab", version)]
struct Cli {
    #[command(flatten)]
    bounds: BoundArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundArgs {
    /// Largest order for exhaustive subset enumeration.
    #[arg(long, global = true)]
    oracle_bound: Option<usize>,
    #[arg(long, global = true)]
    profile_bound: Option<usize>,
    #[arg(long, global = true)]
    iso_bound: Option<usize>,
    /// Worker threads for corpus runs (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        let mut b = Bounds::from_env();
        b.oracle = self.oracle_bound.unwrap_or(b.oracle);
        b.profile = self.profile_bound.unwrap_or(b.profile);
        b.iso = self.iso_bound.unwrap_or(b.iso);
        b.clamped()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report: classification, spectrum, profile, criteria, theorems.
    Analyze {
        /// Constructor expression, ring file, or inline JSON.
        ring: String,
        /// Comma-separated subset of classify,spectrum,profile,criteria,theorems.
        #[arg(long, value_delimiter = ',')]
        phases: Vec<String>,
    },
    /// Maximal left denominator sets and the derived sets.
    Maxden { ring: String },
    /// Classify a multiplicative set and localize at it.
    Localize {
        ring: String,
        /// Elements, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Criterion verdicts with evidence.
    Criteria {
        ring: String,
        /// Comma-separated subset of goldie,first,second,third,fourth,ll_quotient,product.
        #[arg(long, value_delimiter = ',')]
        which: Vec<String>,
        /// A set for the fourth criterion, elements comma separated; repeatable.
        #[arg(long = "fourth-set")]
        fourth_sets: Vec<String>,
    },
    /// Invariant battery.
    VerifyTheorems { ring: String },
    /// Bundled corpus with golden reports.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Compare every ring against its golden report.
    Run {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Rewrite every golden report.
    Regen {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

fn default_manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/manifest.toml")
}

fn print<T: Serialize>(v: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn input_error(msg: String) -> Error {
    Error::Parse { offset: 0, message: msg }
}

fn elements(ring: &FiniteRing, text: &str) -> Result<ElementSet, Error> {
    let xs = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| input_error(format!("bad element {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    ring.set_of(xs)
}

fn run(cli: Cli) -> Result<i32, Error> {
    let bounds = cli.bounds.bounds();
    let jobs = cli.bounds.jobs;
    match cli.command {
        Command::Analyze { ring, phases } => {
            let phases = if phases.is_empty() {
                Phase::ALL.to_vec()
            } else {
                phases
                    .iter()
                    .map(|p| Phase::parse(p).ok_or_else(|| input_error(format!("unknown phase {p:?}"))))
                    .collect::<Result<_, _>>()?
            };
            let report = run_analysis(parse_ring_input(&ring, &bounds)?, bounds, &phases)?;
            print(&report)?;
            let bad = report.mismatches();
            for m in &bad {
                eprintln!("mismatch: {m}");
            }
            Ok(if bad.is_empty() { 0 } else { 1 })
        }
        Command::Maxden { ring } => {
            let a = Analysis::new(parse_ring_input(&ring, &bounds)?, bounds);
            let p = a.profile()?;
            print(&serde_json::json!({
                "ring": a.ring().name(),
                "max_den_sets": p.max_den_sets,
                "ll": p.ll.members,
                "localizable": p.localizable,
                "non_localizable": p.non_localizable,
                "completely_localizable": p.completely_localizable,
                "oracle": p.oracle,
                "candidate_sweep_only": p.candidate_sweep_only,
            }))?;
            Ok(0)
        }
        Command::Localize { ring, set } => {
            let r = parse_ring_input(&ring, &bounds)?;
            let rec = classify_mult_set(&r, &r.set_of(set)?)?;
            if !rec.is_left_denominator {
                print(&rec)?;
                return Err(Error::NotDenominator);
            }
            let loc = localize(&r, &rec)?;
            print(&serde_json::json!({
                "set": rec.members(),
                "ass": rec.ass,
                "core": rec.core,
                "target_order": loc.target.order(),
                "target_hash": loc.target.content_hash(),
                "projection": loc.projection.image,
                "inverses": loc.inverses,
                "note": loc.note,
            }))?;
            Ok(0)
        }
        Command::Criteria {
            ring,
            which,
            fourth_sets,
        } => {
            let a = Analysis::new(parse_ring_input(&ring, &bounds)?, bounds);
            let ids: Vec<CriterionId> = if which.is_empty() {
                CriterionId::ALL.to_vec()
            } else {
                which
                    .iter()
                    .map(|w| CriterionId::parse(w).ok_or_else(|| input_error(format!("unknown criterion {w:?}"))))
                    .collect::<Result<_, _>>()?
            };
            let mut out = Vec::new();
            for id in ids {
                let v = if id == CriterionId::Fourth && !fourth_sets.is_empty() {
                    let sets = fourth_sets.iter().map(|s| elements(a.ring(), s)).collect::<Result<Vec<_>, _>>()?;
                    Some(fourth_criterion(&a, Some(&sets))?)
                } else {
                    run_criterion(&a, id)?
                };
                out.extend(v);
            }
            print(&out)?;
            Ok(if out.iter().all(|v| v.consequents_hold()) { 0 } else { 1 })
        }
        Command::VerifyTheorems { ring } => {
            let a = Analysis::new(parse_ring_input(&ring, &bounds)?, bounds);
            let r = orelab::theorems::verify_theorems(&a)?;
            print(&r)?;
            Ok(if r.all_hold { 0 } else { 1 })
        }
        Command::Corpus { action } => {
            let (path, regen) = match action {
                CorpusAction::Run { manifest } => (manifest, false),
                CorpusAction::Regen { manifest } => (manifest, true),
            };
            let m = CorpusManifest::load(&path.unwrap_or_else(default_manifest))?;
            let s = if regen { corpus_regen(&m, jobs)? } else { corpus_run(&m, jobs)? };
            print(&s)?;
            Ok(s.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
