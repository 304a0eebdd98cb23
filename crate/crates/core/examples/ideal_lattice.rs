//! Two-sided ideals, primes, radicals and Goldie witnesses.
//!
//! cargo run --example ideal_lattice -- "tri(2,F2)"
use orelab::analysis::Analysis;
use orelab::Bounds;

fn main() -> orelab::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "tri(2,F2)".into());
    let a = Analysis::from_spec(&spec, Bounds::default())?;
    let sp = a.spectrum()?;
    println!("{spec}: {} ideals", sp.all_ideals.len());
    for i in &sp.all_ideals {
        let tag = if sp.is_minimal_prime(&i.members) {
            "minimal prime"
        } else if i.prime == Some(true) {
            "prime"
        } else {
            ""
        };
        println!("  {:<24} gens {:?} {tag}", i.members.to_string(), i.generators);
    }
    println!("prime radical {}", sp.prime_radical.members);
    println!("semiprime {}", sp.semiprime);
    let g = a.goldie()?;
    println!(
        "left annihilators {}, longest chain {}, uniform dimension {:?}",
        g.left_annihilators.len(),
        g.longest_annihilator_chain,
        g.uniform_dimension.value()
    );
    println!("{:?}", a.class()?);
    Ok(())
}
