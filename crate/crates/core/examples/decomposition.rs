//! Cosets, factors, idempotents and component fields of one group algebra.
//!
//! Run with `cargo run --example decomposition -- 14 3 9`; the arguments are
//! `m q r` and default to the worked example.

use metacyclic::structure::System;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m, q, r) = match args[..] {
        [m, q, r] => (m as usize, q as u32, r as usize),
        _ => (14, 3, 9),
    };
    let sys = System::new(m, q, r)?;
    let p = sys.params;
    println!("G_({m},3,{r}) over F_{q}: r = q^{} mod m, splitting degree {}", p.eps, p.splitting_degree());
    let part = sys.table.partition;
    println!("s = {}, t = {}, (s1, s2, t1, t2) = ({}, {}, {}, {})", part.s, part.t, part.s1, part.s2, part.t1, part.t2);

    for c in &sys.components {
        println!();
        println!(
            "component {}: coset {:?}, d = {}, condition {:?}, mu = {}",
            c.index,
            c.coset,
            c.d,
            c.cond,
            sys.mu(c.index)
        );
        println!("  f   = {:?}", c.f.residues());
        println!("  eps = {:?}", c.eps);
        println!("  theta = {}", c.theta.name());
        if let Some(rho) = &c.rho {
            println!("  norm group generated by {rho}, order {}", c.norm_group.len());
        }
        if let Some(omega) = &c.omega {
            println!("  primitive cube root of unity {omega}");
        }
    }
    Ok(())
}
