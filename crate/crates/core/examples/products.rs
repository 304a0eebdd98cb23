//! Direct products: maxDen splits factorwise.
//!
//! cargo run --example products
use orelab::criteria::product_maxden_check;
use orelab::ore::{localization_profile, product_support};
use orelab::{build_ring, Bounds};

fn main() -> orelab::Result<()> {
    let b = Bounds::default();
    let factors = vec![build_ring("F2", &b)?, build_ring("Z/6", &b)?];
    let v = product_maxden_check(&factors, &b)?;
    for c in &v.conditions {
        println!("{:<24} {}", c.name, c.holds);
    }

    let r = build_ring("prod(F2,Z/6)", &b)?;
    let p = localization_profile(&r, &b)?;
    println!("F2 x Z/6 has {} maximal denominator sets", p.max_den_sets.len());
    for s in &p.max_den_sets {
        let sup = product_support(&r, s.members())?;
        println!("  {}  support {:?}", s.members(), sup.support);
    }
    Ok(())
}
