//! Brute-force confirmation of the ideal catalogue, the duals and the
//! self-orthogonal stream on `G_(7,3,2)` over F_2.
//!
//! Run with `cargo run --release --example oracle_check`.

use metacyclic::cli::verify;
use metacyclic::code::CodeSpace;
use metacyclic::oracle;
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = System::new(7, 2, 2)?;
    for c in &sys.components {
        let brute = oracle::brute_skew_ideals(c)?;
        println!(
            "component {}: {} shift-stable subspaces of K^3 (|K| = {})",
            c.index,
            brute.len(),
            c.field.cardinality()
        );
    }
    let space = CodeSpace::new(&sys);
    let brute = oracle::brute_self_orthogonal_filter(&space)?;
    println!("self-orthogonal by exhaustive G·Gᵀ filter: {brute}, by the tables: {}", space.count_self_orthogonal()?);

    let report = verify(&sys, false, &mut |msg| eprintln!("{msg}"))?;
    for check in report["checks"].as_array().into_iter().flatten() {
        println!(
            "{:>8}  {}: {}",
            check["status"].as_str().unwrap_or("?"),
            check["name"].as_str().unwrap_or("?"),
            check["detail"].as_str().unwrap_or("")
        );
    }
    Ok(())
}
