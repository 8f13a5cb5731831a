// Matrix entries as signed counts of weak walks, by exhaustive search.

use hyperbox::core::generators::chorded_square;
use hyperbox::random::matrix_corpus;
use hyperbox::spectral::{verify_weak_walk_theorem, OrientedHypergraph, WeakWalkReport};

pub fn run_example() -> hyperbox::Result<Vec<WeakWalkReport>> {
    let mut reports = vec![verify_weak_walk_theorem(&OrientedHypergraph::extroverted(&chorded_square()), 4)?];
    for g in matrix_corpus(7, 3) {
        reports.push(verify_weak_walk_theorem(&g, 2)?);
    }
    Ok(reports)
}

fn main() -> hyperbox::Result<()> {
    for (j, r) in run_example()?.iter().enumerate() {
        println!("object {j}:");
        for c in &r.checks {
            println!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        }
        for s in &r.signs {
            println!("  k={}: signed walks {}, literal sign rule {}", s.k, s.signed_walks_hold, s.literal_holds);
        }
    }
    Ok(())
}
