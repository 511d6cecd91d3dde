//! Central products add up the rank `m`: gluing `I(3,1)` to `II(3,1)` along
//! their centers gives a JN2 group of class `(3, 2)`.

use braidquot::jn2::{central_product, classify, cyclic_center_iso, materialize};

fn main() -> braidquot::Result<()> {
    let left = materialize("I(3,1)".parse()?)?;
    let right = materialize("II(3,1)".parse()?)?;
    let phi = cyclic_center_iso(&left.group, left.z, &right.group, right.z)?;
    let product = central_product(&left.group, &right.group, &phi)?;
    println!("|G ⊙ H| = {}", product.group.order());

    let (spec, _) = classify(&product.group)?;
    println!("classified as {spec}");

    let twice = central_product(
        &left.group,
        &left.group,
        &cyclic_center_iso(&left.group, left.z, &left.group, left.z)?,
    )?;
    println!(
        "I(3,1) ⊙ I(3,1) classified as {}",
        classify(&twice.group)?.0
    );
    Ok(())
}
