// Laplacian exponentials of half-paths: sizes match walk counts.

use hyperbox::core::generators::{chorded_square, parallel_incidences, path_r};
use hyperbox::exponentials::{exp_laplacian, Exponential};
use hyperbox::spectral::laplacian_exponential_census;

/// `(name, k, |V|, |E|, census passed)` rows.
pub fn run_example() -> hyperbox::Result<Vec<(&'static str, usize, usize, usize, bool)>> {
    let x = exp_laplacian(&path_r(1), &path_r(2));
    println!("[P1/2, P1]_L has counts {:?}", x.carrier().counts());
    let mut rows = Vec::new();
    for (name, g) in [("chorded square", chorded_square()), ("parallel incidences", parallel_incidences())] {
        for k in 1..=2 {
            let c = laplacian_exponential_census(&g, k)?;
            rows.push((name, k, c.vertices, c.edges, c.passed()));
        }
    }
    Ok(rows)
}

fn main() -> hyperbox::Result<()> {
    for (name, k, v, e, ok) in run_example()? {
        println!("{name}, k={k}: {v} vertices, {e} edges, census {}", if ok { "ok" } else { "FAILED" });
    }
    Ok(())
}
