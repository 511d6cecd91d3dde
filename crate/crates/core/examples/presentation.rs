//! Print the surface braid group presentation and the reduced relations.

use braidquot::braid::{bellingeri_presentation, reduced_relations};

fn main() -> braidquot::Result<()> {
    let (n, g) = (4, 2);
    let full = bellingeri_presentation(n, g)?;
    println!(
        "B_{n}(S_{g}): {} generators, {} relators",
        full.generators().len(),
        full.relators.len()
    );
    for r in &full.relators {
        println!("  {:<13} {}", format!("{:?}", r.family), r.word);
    }

    let reduced = reduced_relations(n, g)?;
    println!("\nreduced relations:");
    for r in &reduced.relators {
        println!("  {:<13} {}", format!("{:?}", r.family), r.word);
    }
    Ok(())
}
