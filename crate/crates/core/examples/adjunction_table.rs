//! Which adjunction outcomes survive a given (n, k).
//!
//! `cargo run --example adjunction_table`

use schubert_fano::catalog::{adjoint_ampleness_exceptions, adjunction_cases};

fn main() -> schubert_fano::Result<()> {
    for n in 3..=6 {
        for k in 2..=5 {
            let cases: Vec<String> = adjunction_cases(n, k)?.into_iter().map(|c| c.case_id).collect();
            print!("n = {n}, k = {k}: cases [{}]", cases.join(", "));
            // the adjoint ampleness statement only covers n >= 4
            if n >= 4 {
                let exc: Vec<String> = adjoint_ampleness_exceptions(n, k)?.into_iter().map(|c| c.case_id).collect();
                print!(", adjoint exceptions [{}]", exc.join(", "));
            }
            println!();
        }
    }
    println!();
    for c in adjunction_cases(3, 2)? {
        println!("{:>17}  {:<28} {}", c.case_id, c.constraints, c.description);
    }
    Ok(())
}
