//! The left ideals of one skew component and how they nest.
//!
//! Run with `cargo run --example skew_ideals`.

use metacyclic::skew::{self, IdealTag};
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = System::new(14, 3, 9)?;
    let c = sys.component(2);
    let cat = skew::enumerate_ideals(c);
    println!("component 2 has {} left ideals (closed form {})", cat.len(), skew::ideal_count(c));

    for d in cat.iter().take(4).chain(cat.iter().filter(|d| matches!(d.tag, IdealTag::Dim1 { k: 7, .. }))) {
        let g: Vec<String> = skew::generator_poly(c, d)
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| match j {
                0 => format!("({a})"),
                1 => format!("({a})y"),
                _ => format!("({a})y^{j}"),
            })
            .collect();
        println!("{:<10} dim {}  generator {}", d.term(), d.dim(), g.join(" + "));
        if let Ok(rows) = skew::generator_matrix(c, d) {
            for row in rows {
                let row: Vec<String> = row.iter().map(|a| a.to_string()).collect();
                println!("    [{}]", row.join(", "));
            }
        }
    }

    let beta = c.norm_element(7);
    let above = skew::dim2_containing(c, &beta)?;
    let exps: Vec<u64> = above.iter().filter_map(|a| c.norm_exponent(a)).collect();
    println!("dim1@7 lies in {} two-dimensional ideals: dim2@{exps:?}", above.len());
    let alpha = c.norm_element(exps[0]);
    let below = skew::dim1_contained(c, &alpha)?;
    let exps: Vec<u64> = below.iter().filter_map(|b| c.norm_exponent(b)).collect();
    println!("dim2@{} contains dim1@{exps:?}", c.norm_exponent(&alpha).unwrap_or_default());
    Ok(())
}
