//! maxDen, the localization radical ll and the localizable elements.
//!
//! cargo run --example max_denominators -- Z/12
use orelab::analysis::Analysis;
use orelab::ore::is_localization_maximal;
use orelab::Bounds;

fn main() -> orelab::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        vec!["Z/6".into(), "tri(2,F2)".into(), "opp(tri(2,F2))".into(), "mat(2,F2)".into()]
    } else {
        specs
    };
    for spec in specs {
        let a = Analysis::from_spec(&spec, Bounds::default())?;
        let p = a.profile()?;
        println!("{spec}");
        for r in &p.max_den_sets {
            println!("  max set {}  ass {}  core {}", r.members(), r.ass, r.core);
        }
        println!("  ll {}", p.ll.members);
        println!("  L {}  NL {}  C {}", p.localizable, p.non_localizable, p.completely_localizable);
        match &p.oracle {
            Some(o) => println!("  oracle: {} denominator sets, agrees {}", o.denominator_set_count, o.agrees),
            None => println!("  oracle skipped; candidate sweep only"),
        }
        let m = is_localization_maximal(a.ring(), a.bounds())?;
        println!("  localization maximal: {}", m.verdict);
    }
    Ok(())
}
