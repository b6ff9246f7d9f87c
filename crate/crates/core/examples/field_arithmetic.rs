//! Arithmetic in the component field `K_2 = F_3[x]/<1 + x + ... + x^6>`.
//!
//! Run with `cargo run --example field_arithmetic`.

use metacyclic::field::FieldCtx;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldCtx::extension(3, &[1, 1, 1, 1, 1, 1, 1])?;
    println!("K = F_3[x]/<1+x+...+x^6>, |K| = {}", k.cardinality());

    let rho = k.element(&[1, 1]);
    println!("rho = {rho}");
    println!("rho^-1 = {}", k.inv(&rho)?);
    println!("order of rho = {}", k.mult_order(&rho)?);
    // θ(a) = a^9 on this field, so θ²(ρ) = ρ^81
    println!("rho^9 = {}", k.frob_power(&rho, 2));
    println!("rho^81 = {}", k.frob_power(&rho, 4));

    let g = k.primitive_element();
    println!("first primitive element: {g} (order {})", k.mult_order(&g)?);
    println!("x * x^5 = {}", k.mul(&k.x(), &k.pow(&k.x(), 5)));

    match FieldCtx::extension(3, &[1, 0, 1]) {
        Ok(_) => println!("x^2 + 1 is irreducible over F_3"),
        Err(e) => println!("x^2 + 1 rejected: {e}"),
    }
    match FieldCtx::extension(3, &[2, 0, 1]) {
        Ok(_) => println!("x^2 + 2 is irreducible over F_3"),
        Err(e) => println!("x^2 + 2 rejected: {e}"),
    }
    Ok(())
}
