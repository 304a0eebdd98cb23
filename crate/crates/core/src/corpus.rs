//! Bundled ring corpus: a TOML manifest of ring specs with golden reports.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::report::{run_analysis, Phase};
use crate::ring::build_ring;

/// Report keys skipped by the golden comparison.
pub const IGNORED_KEYS: [&str; 1] = ["timing_ms"];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub spec: String,
    /// Golden report path, relative to the manifest.
    pub expected: PathBuf,
    #[serde(default)]
    pub regenerate: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusManifest {
    #[serde(default)]
    pub config: Bounds,
    #[serde(rename = "ring")]
    pub rings: Vec<ManifestEntry>,
    #[serde(skip)]
    pub root: PathBuf,
}

impl CorpusManifest {
    pub fn parse(text: &str, root: impl Into<PathBuf>) -> Result<Self> {
        let mut m: CorpusManifest = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        m.root = root.into();
        m.config = m.config.clamped();
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }

    pub fn golden_path(&self, e: &ManifestEntry) -> PathBuf {
        self.root.join(&e.expected)
    }

    /// Every spec parses and every golden file exists unless marked for
    /// regeneration.
    pub fn validate(&self) -> Result<()> {
        for e in &self.rings {
            parse_spec(e, &self.config)?;
            if !e.regenerate && !self.golden_path(e).exists() {
                return Err(Error::Manifest(format!(
                    "{}: missing golden file {}",
                    e.name,
                    self.golden_path(e).display()
                )));
            }
        }
        Ok(())
    }
}

fn parse_spec(e: &ManifestEntry, bounds: &Bounds) -> Result<crate::ring::FiniteRing> {
    build_ring(&e.spec, bounds).map_err(|err| Error::Manifest(format!("{}: {err}", e.name)))
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EntryStatus {
    Pass,
    Regenerated,
    Mismatch { diffs: Vec<String> },
    Failed { message: String, exit_code: i32 },
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryResult {
    pub name: String,
    #[serde(flatten)]
    pub status: EntryStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub entries: Vec<EntryResult>,
    pub passed: usize,
    pub failed: usize,
}

impl CorpusSummary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// 0 on success, 3 if any entry hit an internal inconsistency, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else if self
            .entries
            .iter()
            .any(|e| matches!(e.status, EntryStatus::Failed { exit_code: 3, .. }))
        {
            3
        } else {
            1
        }
    }
}

/// Report for one entry as JSON with ignored keys removed.
pub fn entry_report(e: &ManifestEntry, bounds: &Bounds) -> Result<Value> {
    let ring = parse_spec(e, bounds)?;
    let mut v = run_analysis(ring, *bounds, &Phase::ALL)?.to_json()?;
    strip_ignored(&mut v);
    Ok(v)
}

fn strip_ignored(v: &mut Value) {
    match v {
        Value::Object(m) => {
            for k in IGNORED_KEYS {
                m.remove(k);
            }
            m.values_mut().for_each(strip_ignored);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_ignored),
        _ => {}
    }
}

/// Field-by-field differences, one line each, with JSON-pointer paths.
pub fn structural_diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_into("", expected, actual, &mut out);
    out
}

fn diff_into(path: &str, expected: &Value, actual: &Value, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                if IGNORED_KEYS.contains(&k.as_str()) {
                    continue;
                }
                let p = format!("{path}/{k}");
                match a.get(k) {
                    Some(av) => diff_into(&p, ev, av, out),
                    None => out.push(format!("{p}: missing")),
                }
            }
            for k in a.keys().filter(|k| !e.contains_key(*k) && !IGNORED_KEYS.contains(&k.as_str())) {
                out.push(format!("{path}/{k}: unexpected"));
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                diff_into(&format!("{path}/{i}"), ev, av, out);
            }
        }
        _ if expected == actual => {}
        _ => out.push(format!("{path}: expected {expected}, found {actual}")),
    }
}

fn write_golden(path: &Path, v: &Value) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn run_entry(m: &CorpusManifest, e: &ManifestEntry, regen_all: bool) -> EntryStatus {
    let outcome = (|| -> Result<EntryStatus> {
        let actual = entry_report(e, &m.config)?;
        let path = m.golden_path(e);
        if regen_all || e.regenerate {
            write_golden(&path, &actual)?;
            return Ok(EntryStatus::Regenerated);
        }
        let expected: Value = serde_json::from_str(&fs::read_to_string(&path)?)?;
        let diffs = structural_diff(&expected, &actual);
        Ok(if diffs.is_empty() {
            EntryStatus::Pass
        } else {
            EntryStatus::Mismatch { diffs }
        })
    })();
    outcome.unwrap_or_else(|err| EntryStatus::Failed {
        exit_code: err.exit_code(),
        message: err.to_string(),
    })
}

fn run_all(m: &CorpusManifest, jobs: usize, regen_all: bool) -> Result<CorpusSummary> {
    if !regen_all {
        m.validate()?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Manifest(format!("thread pool: {e}")))?;
    let entries: Vec<EntryResult> = pool.install(|| {
        m.rings
            .par_iter()
            .map(|e| EntryResult {
                name: e.name.clone(),
                status: run_entry(m, e, regen_all),
            })
            .collect()
    });
    let failed = entries
        .iter()
        .filter(|e| matches!(e.status, EntryStatus::Mismatch { .. } | EntryStatus::Failed { .. }))
        .count();
    Ok(CorpusSummary {
        passed: entries.len() - failed,
        failed,
        entries,
    })
}

/// Compares every entry against its golden report; entries marked
/// `regenerate` are rewritten instead. `jobs = 0` uses all cores.
pub fn corpus_run(m: &CorpusManifest, jobs: usize) -> Result<CorpusSummary> {
    run_all(m, jobs, false)
}

/// Rewrites every golden report.
pub fn corpus_regen(m: &CorpusManifest, jobs: usize) -> Result<CorpusSummary> {
    run_all(m, jobs, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    const MANIFEST: &str = r#"
[config]
oracle = 12

[[ring]]
name = "Z/2"
spec = "Z/2"
expected = "golden/z2.json"
regenerate = true
"#;

    #[test]
    fn regen_then_run() {
        let dir = tempfile::tempdir().unwrap();
        let mut m = CorpusManifest::parse(MANIFEST, dir.path()).unwrap();
        assert_eq!(corpus_run(&m, 1).unwrap().exit_code(), 0);
        m.rings[0].regenerate = false;
        let s = corpus_run(&m, 1).unwrap();
        assert!(s.all_pass(), "{s:?}");
    }

    #[test]
    fn altered_golden_fails_with_diff() {
        let dir = tempfile::tempdir().unwrap();
        let mut m = CorpusManifest::parse(MANIFEST, dir.path()).unwrap();
        corpus_regen(&m, 1).unwrap();
        let path = m.golden_path(&m.rings[0]);
        let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        v["profile"]["max_den_count"] = json!(7);
        fs::write(&path, v.to_string()).unwrap();
        m.rings[0].regenerate = false;
        let s = corpus_run(&m, 1).unwrap();
        assert_eq!(s.exit_code(), 1);
        match &s.entries[0].status {
            EntryStatus::Mismatch { diffs } => assert_eq!(diffs, &vec!["/profile/max_den_count: expected 7, found 1".to_string()]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_golden_is_a_manifest_error() {
        let dir = tempfile::tempdir().unwrap();
        let mut m = CorpusManifest::parse(MANIFEST, dir.path()).unwrap();
        m.rings[0].regenerate = false;
        assert!(matches!(corpus_run(&m, 1), Err(Error::Manifest(_))));
    }

    #[test]
    fn diff_ignores_timing() {
        let a = json!({ "x": 1, "timing_ms": { "a": 3 } });
        let b = json!({ "x": 1, "timing_ms": { "a": 9 } });
        assert!(structural_diff(&a, &b).is_empty());
        assert_eq!(structural_diff(&json!([1, 2]), &json!([1])).len(), 1);
    }
}
