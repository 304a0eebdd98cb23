//! JSON ring files and the "path or expression" input rule.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::Bounds;
use crate::error::{Error, Result};

use super::{build_ring, FiniteRing};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl RingFile {
    pub fn from_ring(r: &FiniteRing) -> Self {
        RingFile {
            name: r.name().to_string(),
            order: r.order(),
            zero: r.zero(),
            one: r.one(),
            add: r.add_rows(),
            mul: r.mul_rows(),
        }
    }

    pub fn into_ring(self, provenance: &str) -> Result<FiniteRing> {
        if self.add.len() != self.order {
            return Err(Error::RingFile(format!(
                "order is {} but add has {} rows",
                self.order,
                self.add.len()
            )));
        }
        FiniteRing::from_tables(self.name, provenance, self.zero, self.one, &self.add, &self.mul)
    }
}

pub fn parse_ring_json(text: &str, provenance: &str) -> Result<FiniteRing> {
    let file: RingFile =
        serde_json::from_str(text).map_err(|e| Error::RingFile(e.to_string()))?;
    file.into_ring(provenance)
}

pub fn read_ring_file(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path)?;
    parse_ring_json(&text, &format!("file:{}", path.display()))
}

pub fn write_ring_file(r: &FiniteRing, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&RingFile::from_ring(r))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// An existing file path is read as a ring file, text starting with `{`
/// as inline JSON, anything else as a constructor expression.
pub fn parse_ring_input(input: &str, bounds: &Bounds) -> Result<FiniteRing> {
    let trimmed = input.trim();
    let ring = if trimmed.starts_with('{') {
        parse_ring_json(trimmed, "inline")?
    } else if Path::new(trimmed).is_file() {
        read_ring_file(Path::new(trimmed))?
    } else {
        return build_ring(trimmed, bounds);
    };
    if ring.order() > bounds.profile {
        return Err(Error::OrderBound {
            which: "profile",
            order: ring.order(),
            bound: bounds.profile,
        });
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_file() {
        let r = build_ring("tri(2,F2)", &Bounds::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        write_ring_file(&r, &p).unwrap();
        let back = parse_ring_input(p.to_str().unwrap(), &Bounds::default()).unwrap();
        assert!(back.tables_equal(&r));
        assert_eq!(back.name(), "tri(2,F2)");
    }

    #[test]
    fn inconsistent_table_names_triple() {
        let text = r#"{"name":"bad","order":2,"zero":0,"one":1,
            "add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]}"#;
        match parse_ring_input(text, &Bounds::default()) {
            Err(Error::AxiomViolation { axiom, .. }) => assert_eq!(axiom, "multiplicative identity"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn expressions_pass_through() {
        assert_eq!(parse_ring_input("Z/6", &Bounds::default()).unwrap().order(), 6);
    }
}
