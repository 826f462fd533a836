//! Multiplication and integration in H*(G(2,m)).
//!
//! `cargo run --example schubert_ring -- 6`

use schubert_fano::schubert::{grassmannian_hilbert_function, plucker_degree};
use schubert_fano::{CohomologyElement, SchubertClass};

fn main() -> schubert_fano::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let classes = SchubertClass::all(m);
    println!("G(2,{m}): dimension {}, {} Schubert classes", 2 * (m - 2), classes.len());

    println!("\nproducts of basis classes:");
    for x in &classes {
        for y in classes.iter().filter(|y| y >= &x && x.codim() + y.codim() <= 2 * (m - 2)) {
            let p = CohomologyElement::basis(m, *x)?.mul(&CohomologyElement::basis(m, *y)?)?;
            if !p.is_zero() {
                println!("  {x} * {y} = {p}");
            }
        }
    }

    let sigma1 = CohomologyElement::basis(m, SchubertClass::new(1, 0).unwrap())?;
    let top = sigma1.pow(2 * (m - 2))?;
    println!("\nσ(1,0)^{} = {top}", 2 * (m - 2));
    println!("Plücker degree: {}", plucker_degree(m)?);
    let hf: Vec<String> = (0..6)
        .map(|t| grassmannian_hilbert_function(m, t).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("Hilbert function, t = 0..5: {}", hf.join(", "));
    Ok(())
}
