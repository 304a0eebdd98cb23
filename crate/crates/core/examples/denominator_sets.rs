//! Classify multiplicative sets and enumerate every denominator set.
//!
//! cargo run --example denominator_sets
use orelab::ore::{all_denominator_sets, all_multiplicative_sets, classify_mult_set, multiplicative_closure};
use orelab::{build_ring, Bounds};

fn main() -> orelab::Result<()> {
    let b = Bounds::default();
    let z6 = build_ring("Z/6", &b)?;
    for gens in [vec![5], vec![3], vec![2], vec![2, 3]] {
        let seed = z6.set_of(gens.clone())?;
        match multiplicative_closure(&z6, &seed) {
            Ok(s) => {
                let rec = classify_mult_set(&z6, s.members())?;
                println!(
                    "<{gens:?}> = {}  ore {}  denominator {}  ass {}  core {}",
                    s.members(),
                    rec.is_left_ore,
                    rec.is_left_denominator,
                    rec.ass,
                    rec.core
                );
            }
            Err(e) => println!("<{gens:?}>: {e}"),
        }
    }

    // First failures of each kind in tri(2,F2), with witnesses.
    let t = build_ring("tri(2,F2)", &b)?;
    let recs = all_multiplicative_sets(&t, b.oracle)?
        .into_iter()
        .map(|s| classify_mult_set(&t, &s))
        .collect::<orelab::Result<Vec<_>>>()?;
    if let Some(r) = recs.iter().find(|r| !r.is_left_ore) {
        println!("tri(2,F2) {} is not left Ore: (r, s) = {:?}", r.members(), r.ore_witness.unwrap());
    }
    if let Some(r) = recs.iter().find(|r| r.is_left_ore && !r.left_reversible) {
        println!("tri(2,F2) {} is left Ore but not reversible: {:?}", r.members(), r.reversibility_witness.unwrap());
    }

    let all = all_denominator_sets(&z6, b.oracle)?;
    println!("Z/6 has {} denominator sets:", all.len());
    for r in &all {
        println!("  {}  ass {}", r.members(), r.ass);
    }
    Ok(())
}
