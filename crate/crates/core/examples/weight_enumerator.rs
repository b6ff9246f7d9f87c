//! Weight enumerators of the self-orthogonal codes living in component 2 alone.
//!
//! Run with `cargo run --release --example weight_enumerator`.

use std::collections::BTreeMap;

use metacyclic::cli::parse_tuple;
use metacyclic::code::{CodeSpace, DEFAULT_WEIGHT_CAP};
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = System::new(14, 3, 9)?;
    let space = CodeSpace::new(&sys);
    let mut classes: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for k in space.solve_case_iii(2) {
        let code = space.assemble(&parse_tuple(&sys, &format!("2:dim1@{k}"))?)?;
        let w = code.weight_enumerator(DEFAULT_WEIGHT_CAP)?;
        let key = format!("[{}, {}, {}] W = {w}", code.length, code.dimension, w.min_distance().unwrap_or(0));
        classes.entry(key).or_default().push(k);
    }
    for (class, ks) in classes {
        println!("{class}");
        println!("  dim1@k for k in {ks:?}");
    }
    Ok(())
}
