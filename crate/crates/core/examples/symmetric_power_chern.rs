//! Top Chern class of Sym^d of a rank-2 bundle, three ways.
//!
//! `cargo run --example symmetric_power_chern`

use schubert_fano::chern::{sym_top_chern, sym_top_chern_oracle, sym_top_chern_paper};

fn main() -> schubert_fano::Result<()> {
    for d in 1..=6 {
        let closed = sym_top_chern(d)?;
        let roots = sym_top_chern_oracle(d)?;
        let printed = sym_top_chern_paper(d)?;
        println!("d = {d}");
        println!("  closed form:      {closed}");
        println!("  from Chern roots: {roots}");
        println!("  with (d+1)^2 boundary coefficient: {printed}");
        assert_eq!(closed, roots);
    }
    Ok(())
}
