//! Jet order of -K_X for Fano complete intersections.
//!
//! `cargo run --example fano_embedding_order`

use schubert_fano::fano_ci::{analyze, h0_of_twist};
use schubert_fano::CompleteIntersection;

fn main() -> schubert_fano::Result<()> {
    println!("{:<22} {:>4} {:>4} {:>8} {:>6}  lines", "X", "dim", "k", "(-K)^n", "h0");
    for (n, degs) in [
        (1, vec![]),
        (2, vec![]),
        (3, vec![]),
        (2, vec![2]),
        (3, vec![2]),
        (4, vec![2]),
        (4, vec![3]),
        (5, vec![2, 2]),
        (5, vec![2]),
        (6, vec![2, 3]),
        (4, vec![5]),
    ] {
        let ci = CompleteIntersection::new(n, degs)?;
        let r = analyze(&ci)?;
        let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        println!(
            "{:<22} {:>4} {:>4} {:>8} {:>6}  {}",
            ci.to_string(),
            r.dim,
            show(r.jet_order.map(|k| k.to_string())),
            show(r.anticanonical_degree.as_ref().map(ToString::to_string)),
            show(r.anticanonical_sections.as_ref().map(ToString::to_string)),
            r.line_family,
        );
        if r.curve_exception {
            println!("  conic: -K is O(1) on P1, so the order is not read off the index");
        }
    }

    let cubic = CompleteIntersection::new(4, vec![3])?;
    let twists: Vec<String> = (0..5).map(|t| h0_of_twist(&cubic, t).to_string()).collect();
    println!("\nh0(O(t)) on the cubic threefold, t = 0..4: {}", twists.join(", "));
    Ok(())
}
