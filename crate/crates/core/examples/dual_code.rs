//! Euclidean duals from the component tables, checked against Gaussian elimination.
//!
//! Run with `cargo run --example dual_code`.

use metacyclic::cli::parse_tuple;
use metacyclic::code::CodeSpace;
use metacyclic::linalg::{self, PrimeField};
use metacyclic::oracle;
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = System::new(14, 3, 9)?;
    let space = CodeSpace::new(&sys);
    let f = PrimeField::new(3);
    for tuple in ["2:dim1@7", "0:comm@1,2:dim2@30,3:dim1@5", "0:full,1:comm@0,3:full"] {
        let code = space.assemble(&parse_tuple(&sys, tuple)?)?;
        let dual = space.dual(&code)?;
        let null = oracle::null_space_dual(3, &code.generator, code.length);
        println!("{}", code.tuple_string());
        println!("  dual {}", dual.tuple_string());
        println!(
            "  dimensions {} + {} = {}, equals null space: {}",
            code.dimension,
            dual.dimension,
            code.length,
            linalg::row_space(&f, &dual.generator) == null
        );
    }
    Ok(())
}
