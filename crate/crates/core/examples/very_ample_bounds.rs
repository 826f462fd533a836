//! Degree and section lower bounds for k-very ample line bundles.
//!
//! `cargo run --example very_ample_bounds`

use num_bigint::BigInt;
use schubert_fano::bounds::{self, box_product_order, min_degree, min_sections, nefvalue_bound};
use schubert_fano::PolarizedInvariants;

fn main() -> schubert_fano::Result<()> {
    println!("minimum L^n / h0(L):");
    print!("{:>6}", "n\\k");
    for k in 2..=6 {
        print!("{k:>10}");
    }
    println!();
    for n in 1..=5 {
        print!("{n:>6}");
        for k in 2..=6 {
            print!("{:>10}", format!("{}/{}", min_degree(n, k)?, min_sections(n, k)?));
        }
        println!();
    }

    println!("\nnefvalue bound (n+1)/k:");
    for (n, k) in [(3, 2), (3, 4), (3, 5), (4, 2), (5, 2), (6, 2)] {
        println!("  n = {n}, k = {k}: {}", nefvalue_bound(n, k)?);
    }

    println!("\nchecks:");
    for (n, k, deg, h0) in [(3, 2, 7, None), (3, 2, 16, Some(11)), (3, 2, 8, Some(7)), (3, 4, 64, Some(35))] {
        let inv = PolarizedInvariants::new(n, k, deg, h0.map(BigInt::from))?;
        let v = bounds::check(&inv)?;
        let status = if v.passed() { "ok".to_string() } else { v.failures.join("; ") };
        println!("  n = {n}, k = {k}, L^n = {deg}, h0 = {h0:?}: {status}");
    }

    println!("\nbox products: (2,3) -> {}, (4,2) -> {}", box_product_order(2, 3), box_product_order(4, 2));
    Ok(())
}
