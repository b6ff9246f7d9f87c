//! All self-orthogonal codes: per-component choices and their product.
//!
//! Run with `cargo run --example self_orthogonal`.

use metacyclic::code::{CodeSpace, Slot};
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = System::new(14, 3, 9)?;
    let space = CodeSpace::new(&sys);
    for slot in space.self_orthogonal_slots()? {
        match slot {
            Slot::Single { i, options } => {
                let terms: Vec<String> = options.iter().map(|&a| space.catalogs()[i][a].term()).collect();
                println!("component {i}: {} choices: {}", terms.len(), terms.join(" "));
            }
            Slot::Pair { i, j, options } => println!("components {i} and {j}: {} joint choices", options.len()),
        }
    }
    println!("exponents for component 2: {:?}", space.solve_case_iii(2));
    println!("total self-orthogonal codes: {}", space.count_self_orthogonal()?);

    let (mut n, mut max_dim) = (0, 0);
    for idx in space.enumerate_self_orthogonal()? {
        let code = space.assemble(&space.choices_at(&idx))?;
        assert!(code.is_self_orthogonal());
        max_dim = max_dim.max(code.dimension);
        n += 1;
    }
    println!("checked G·Gᵀ = 0 on all {n}; largest dimension {max_dim}");
    Ok(())
}
