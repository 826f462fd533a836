//! Walk the built-in catalog and re-verify it.
//!
//! `cargo run --example catalog_tour`

use schubert_fano::catalog::{builtin, verify_all};

fn main() {
    for e in builtin() {
        let jet = e.k_jet.map_or("-".to_string(), |k| k.to_string());
        println!(
            "{:<9} n={} k_jet={} k_va={} L^n={:<3} h0={:<3} {} on {}",
            e.id, e.dim, jet, e.k_very_ample, e.degree, e.h0, e.polarization, e.ambient
        );
        println!("          {}", e.description);
        for flag in &e.flags {
            println!("          flag: {flag}");
        }
    }
    let report = verify_all();
    println!("\nverified {} entries, {} failures", report.entries_checked, report.failures.len());
    for f in &report.failures {
        println!("  {}: {}", f.id, f.message);
    }
}
