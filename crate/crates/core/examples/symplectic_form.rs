//! The alternating form on `G/ZG` and the map `ν` for `II(3,2)`, before and
//! after normalizing the basis.

use braidquot::jn2::{materialize, normalize_basis, symplectic_data};

fn main() -> braidquot::Result<()> {
    let g = materialize("II(3,2)".parse()?)?;
    let data = symplectic_data(&g.group, g.z)?;
    println!("greedy coset basis {:?}", data.coset_basis);
    print_matrix("Gram matrix", &data.gram);
    println!("nu on the basis {:?}", data.nu);

    let normal = normalize_basis(&g.group, &data)?;
    print_matrix("normalized Gram matrix", &normal.gram);
    println!("nu on the normalized basis {:?}", normal.nu);
    println!("basis type {:?}", normal.basis_type);
    Ok(())
}

fn print_matrix(title: &str, m: &[Vec<u64>]) {
    println!("{title}:");
    for row in m {
        println!("  {row:?}");
    }
}
