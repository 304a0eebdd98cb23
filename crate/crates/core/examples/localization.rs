//! Localize at a denominator set, its core, and lift through a quotient.
//!
//! cargo run --example localization
use orelab::ore::{classify_mult_set, core_analysis, lift_denominator_set, localize};
use orelab::{build_ring, Bounds};

fn main() -> orelab::Result<()> {
    let b = Bounds::default();
    let z6 = build_ring("Z/6", &b)?;
    let rec = classify_mult_set(&z6, &z6.set_of([1, 2, 4, 5])?)?;
    let loc = localize(&z6, &rec)?;
    println!("S = {}  ass {}", rec.members(), rec.ass);
    println!("S^-1 R has order {}; projection {:?}", loc.target.order(), loc.projection.image);
    for (s, inv) in &loc.inverses {
        println!("  {s} -> inverse {inv}");
    }

    let c = core_analysis(&z6, &rec)?;
    println!(
        "core {}  denominator {}  same localization {}",
        c.core, c.core_is_denominator, c.localization_table_identical
    );

    // tri(2,F2): upper-right entry ideal N = {0,2}, quotient F2 x F2.
    let t = build_ring("tri(2,F2)", &b)?;
    let n = t.set_of([0, 2])?;
    let lift = lift_denominator_set(&t, &n, &orelab::ElementSet::from_elements(4, [1, 3]))?;
    println!(
        "lift of {{1,3}} from tri/N: {}  denominator {}  ass {}",
        lift.lifted.members(),
        lift.lifted.is_left_denominator,
        lift.lifted.ass
    );
    Ok(())
}
