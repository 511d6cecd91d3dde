//! Classify a JN2 group given only its scrambled Cayley table, and check the
//! isomorphism certificate onto the standard model.

use braidquot::jn2::{classify, materialize};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> braidquot::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for name in [
        "I(2,1)",
        "II(2,1)",
        "I(3^2,1)",
        "II(5,1)",
        "II(2^2,2)",
        "I(3,2)",
    ] {
        let model = materialize(name.parse()?)?;
        let (table, _) = model.group.random_relabel(&mut rng);
        let (spec, map) = classify(&table)?;
        let target = materialize(spec)?;
        println!(
            "{name:<10} -> {spec:<10} certificate verified: {}",
            map.is_isomorphism(&table, &target.group)
        );
    }
    Ok(())
}
