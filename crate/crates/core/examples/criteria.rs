//! Goldie and the four criteria, side by side.
//!
//! cargo run --example criteria -- Z/4 Z/6 "mat(2,F2)"
use orelab::analysis::Analysis;
use orelab::criteria::{cross_validate, run_criterion, CriterionId};
use orelab::Bounds;

fn main() -> orelab::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        vec!["Z/4".into(), "Z/6".into(), "tri(2,F2)".into(), "mat(2,F2)".into()]
    } else {
        specs
    };
    for spec in specs {
        let a = Analysis::from_spec(&spec, Bounds::default())?;
        println!("{spec}  semisimple {}", a.class()?.semisimple);
        for id in CriterionId::ALL {
            let Some(v) = run_criterion(&a, id)? else { continue };
            let failed: Vec<&str> = v.conditions.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
            println!(
                "  {:<12} {:<5} consequents {}/{} {}",
                id.name(),
                v.verdict,
                v.consequents.iter().filter(|c| c.holds).count(),
                v.consequents.len(),
                if failed.is_empty() { String::new() } else { format!("fails: {}", failed.join(", ")) }
            );
        }
        let cv = cross_validate(&a)?;
        if let Some(nl) = cv.non_localizable {
            println!("  NL {}  additively closed {}", nl.non_localizable, nl.additively_closed);
        }
    }
    Ok(())
}
