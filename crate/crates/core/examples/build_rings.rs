//! Build rings from constructor expressions and check isomorphisms.
//!
//! cargo run --example build_rings
use orelab::ring::{ring_isomorphic, IsoOutcome};
use orelab::{build_ring, Bounds};

fn main() -> orelab::Result<()> {
    let b = Bounds::default();
    for spec in ["Z/6", "F4", "tri(2,F2)", "mat(2,F2)", "quot(poly(F2,[0,0,0,1]),[4])", "opp(tri(2,F2))"] {
        let r = build_ring(spec, &b)?;
        println!(
            "{:<32} order {:>3}  char {}  units {:>2}  commutative {}",
            r.provenance(),
            r.order(),
            r.characteristic(),
            r.units().len(),
            r.is_commutative()
        );
    }

    let z6 = build_ring("Z/6", &b)?;
    let crt = build_ring("prod(Z/2,Z/3)", &b)?;
    match ring_isomorphic(&z6, &crt, b.iso)? {
        IsoOutcome::Isomorphic(m) => println!("Z/6 ~ Z/2 x Z/3 via {:?}", m.image),
        IsoOutcome::Mismatch(why) => println!("not isomorphic: {why}"),
    }
    let z4 = build_ring("Z/4", &b)?;
    let dual = build_ring("quot(poly(F2,[0,0,0,1]),[4])", &b)?;
    if let IsoOutcome::Mismatch(why) = ring_isomorphic(&z4, &dual, b.iso)? {
        println!("Z/4 vs F2[x]/(x^2): {why}");
    }

    // Parse errors carry an offset.
    if let Err(e) = build_ring("mat(2;F2)", &b) {
        println!("{e}");
    }
    Ok(())
}
