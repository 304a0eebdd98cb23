//! Run the bundled corpus against its golden reports.
//!
//! cargo run --release --example corpus_report
use orelab::corpus::{corpus_run, CorpusManifest, EntryStatus};

fn main() -> orelab::Result<()> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/manifest.toml");
    let m = CorpusManifest::load(&path)?;
    let s = corpus_run(&m, 0)?;
    for e in &s.entries {
        let status = match &e.status {
            EntryStatus::Pass => "pass".to_string(),
            EntryStatus::Regenerated => "regenerated".to_string(),
            EntryStatus::Mismatch { diffs } => format!("MISMATCH ({} fields)", diffs.len()),
            EntryStatus::Failed { message, .. } => format!("FAILED {message}"),
        };
        println!("{:<20} {status}", e.name);
    }
    println!("{} passed, {} failed", s.passed, s.failed);
    std::process::exit(s.exit_code());
}
