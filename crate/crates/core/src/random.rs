//! Seeded generators for small random objects.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::core::{IncidenceHypergraph, Orientation, Quiver, SetSystemHypergraph};
use crate::elem::Elem;
use crate::spectral::OrientedHypergraph;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn labels(prefix: &str, n: usize) -> Vec<Elem> {
    (0..n).map(|j| Elem::atom(format!("{prefix}{j}"))).collect()
}

/// Bounds on the size of a random object.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub vertices: usize,
    pub edges: usize,
    pub incidences: usize,
}

impl Bounds {
    pub const fn new(vertices: usize, edges: usize, incidences: usize) -> Self {
        Bounds { vertices, edges, incidences }
    }
}

/// At least one vertex; incidences only when there is an edge.
pub fn incidence_hypergraph(rng: &mut SeededRng, b: Bounds) -> IncidenceHypergraph {
    let nv = rng.gen_range(1..=b.vertices.max(1));
    let ne = rng.gen_range(0..=b.edges);
    let ni = if ne == 0 { 0 } else { rng.gen_range(0..=b.incidences) };
    let (vs, es) = (labels("v", nv), labels("e", ne));
    let incs = labels("i", ni)
        .into_iter()
        .map(|i| (i, vs.choose(rng).unwrap().clone(), es.choose(rng).unwrap().clone()))
        .collect();
    IncidenceHypergraph::build(vs, es, incs, "random incidence hypergraph")
}

pub fn orientation(rng: &mut SeededRng, g: &IncidenceHypergraph) -> Orientation {
    let signs = (0..g.incidences().len()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    Orientation::from_signs(g, signs).expect("one sign per incidence")
}

pub fn oriented(rng: &mut SeededRng, b: Bounds) -> OrientedHypergraph {
    let g = incidence_hypergraph(rng, b);
    let o = orientation(rng, &g);
    OrientedHypergraph::new(g, o).expect("orientation matches")
}

pub fn quiver(rng: &mut SeededRng, max_vertices: usize, max_edges: usize) -> Quiver {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let ne = rng.gen_range(0..=max_edges);
    let vs = labels("v", nv);
    let edges = labels("e", ne)
        .into_iter()
        .map(|e| (e, vs.choose(rng).unwrap().clone(), vs.choose(rng).unwrap().clone()))
        .collect();
    Quiver::build(vs, edges, "random quiver")
}

/// Edges have between `1` and `max_size` endpoints.
pub fn hypergraph(rng: &mut SeededRng, max_vertices: usize, max_edges: usize, max_size: usize) -> SetSystemHypergraph {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let ne = rng.gen_range(0..=max_edges);
    let vs = labels("v", nv);
    let edges = labels("e", ne)
        .into_iter()
        .map(|e| {
            let k = rng.gen_range(1..=max_size.clamp(1, nv));
            (e, vs.choose_multiple(rng, k).cloned().collect())
        })
        .collect();
    SetSystemHypergraph::build(vs, edges, "random hypergraph")
}

pub fn multigraph(rng: &mut SeededRng, max_vertices: usize, max_edges: usize) -> SetSystemHypergraph {
    hypergraph(rng, max_vertices, max_edges, 2)
}

/// The matrix corpus: oriented objects with at most 6 vertices, 6 edges
/// and 12 incidences.
pub fn matrix_corpus(seed: u64, n: usize) -> Vec<OrientedHypergraph> {
    let mut r = rng(seed);
    (0..n).map(|_| oriented(&mut r, Bounds::new(6, 6, 12))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_objects() {
        assert_eq!(matrix_corpus(7, 5), matrix_corpus(7, 5));
        assert_ne!(matrix_corpus(7, 5), matrix_corpus(8, 5));
        for g in matrix_corpus(1, 30) {
            let (v, e, i) = g.graph().counts();
            assert!(v <= 6 && e <= 6 && i <= 12);
        }
    }

    #[test]
    fn multigraphs_are_multigraphs() {
        let mut r = rng(3);
        for _ in 0..20 {
            assert!(multigraph(&mut r, 4, 4).is_multigraph());
        }
    }
}
