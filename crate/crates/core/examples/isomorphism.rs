//! Isomorphism testing with an explicit certificate.

use braidquot::fingroup::{dicyclic, dihedral};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> braidquot::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d8 = dihedral(8)?;
    let (scrambled, hidden) = d8.random_relabel(&mut rng);

    let map = d8
        .is_isomorphic(&scrambled)?
        .expect("a relabeling is an isomorphism");
    assert!(map.is_isomorphism(&d8, &scrambled));
    println!("D8 -> relabeled D8: {:?}", map.images());
    println!("relabeling used:    {:?}", hidden.images());

    // Same order, same number of involutions in the center, different groups.
    let q8 = dicyclic(8)?;
    println!("D8 order profile {:?}", d8.order_profile());
    println!("Q8 order profile {:?}", q8.order_profile());
    println!("D8 ~ Q8: {}", d8.is_isomorphic(&q8)?.is_some());
    Ok(())
}
