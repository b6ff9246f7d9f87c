//! Count every left metacyclic code and stream the first few.
//!
//! Run with `cargo run --release --example enumerate_codes`.

use metacyclic::code::CodeSpace;
use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, q, r) in [(7, 2, 2), (14, 3, 9), (13, 3, 3)] {
        let sys = System::new(m, q, r)?;
        let space = CodeSpace::new(&sys);
        let sizes: Vec<usize> = space.catalogs().iter().map(Vec::len).collect();
        println!("({m},{q},{r}): {} codes, ideals per component {sizes:?}", space.count_codes());
    }

    let sys = System::new(14, 3, 9)?;
    let space = CodeSpace::new(&sys);
    for idx in space.enumerate().skip(180).take(5) {
        let code = space.assemble(&space.choices_at(&idx))?;
        println!("{}  [{}, {}]", code.tuple_string(), code.length, code.dimension);
    }
    let streamed = space.enumerate().count();
    println!("streamed {streamed} tuples");
    Ok(())
}
