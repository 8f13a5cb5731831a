// Incidence, degree, adjacency and Laplacian matrices of oriented hypergraphs.

use hyperbox::core::generators::{chorded_square, parallel_incidences};
use hyperbox::spectral::{IntMatrix, OrientedHypergraph};

pub struct Summary {
    pub chorded_h: IntMatrix,
    pub parallel_h: IntMatrix,
    pub chorded_l: IntMatrix,
    pub parallel_d: IntMatrix,
    pub parallel_a: IntMatrix,
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let g = OrientedHypergraph::extroverted(&chorded_square());
    let p = OrientedHypergraph::extroverted(&parallel_incidences());
    let l = g.laplacian_matrix()?;
    assert_eq!(l, g.degree_matrix()?.sub(&g.adjacency_matrix()?)?);
    assert_eq!(g.dual().incidence_matrix(), g.incidence_matrix().transpose());
    Ok(Summary {
        chorded_h: g.incidence_matrix(),
        parallel_h: p.incidence_matrix(),
        chorded_l: l,
        parallel_d: p.degree_matrix()?,
        parallel_a: p.adjacency_matrix()?,
    })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("chorded square H:\n{}L = D - A:\n{}", s.chorded_h, s.chorded_l);
    println!("parallel incidences H:\n{}D:\n{}A:\n{}", s.parallel_h, s.parallel_d, s.parallel_a);
    Ok(())
}
