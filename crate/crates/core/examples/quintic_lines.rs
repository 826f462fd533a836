//! Lines on generic hypersurfaces and complete intersections.
//!
//! `cargo run --example quintic_lines`

use schubert_fano::lines::{count_lines, line_family_through_point, lines_class};
use schubert_fano::CompleteIntersection;

fn main() -> schubert_fano::Result<()> {
    for (n, degs) in [
        (3, vec![3]),
        (4, vec![5]),
        (4, vec![2, 2]),
        (5, vec![3, 3]),
        (6, vec![2, 2, 3]),
        (4, vec![3]),
        (4, vec![6]),
    ] {
        let ci = CompleteIntersection::new(n, degs)?;
        let class = lines_class(&ci)?;
        println!("{ci}");
        println!("  expected dimension of F(X): {}", ci.expected_line_dim());
        println!("  class in H*(G(2,{})): {class}", n + 1);
        println!("  lines: {}", count_lines(&ci)?);
        if let Some(dim) = line_family_through_point(&ci)? {
            println!("  lines through a general point: {dim}-dimensional");
        }
    }
    Ok(())
}
