//! Matrices of oriented hypergraphs and the weak-walk correspondence.
//!
//! Rows and columns follow the sort order of the carrier: vertices, then
//! (for the complete matrices) edges.

mod matrix;
mod walks;

pub use matrix::IntMatrix;
pub use walks::{
    laplacian_exponential_census, verify_weak_walk_theorem, weak_walk_count, weak_walks, CensusReport, Check, Node,
    SignRow, WeakWalkReport,
};

use crate::core::generators::path_r;
use crate::core::{IncidenceHypergraph, Orientation, Violation};
use crate::elem::Elem;
use crate::error::Result;
use crate::homsearch::{enumerate_homs, Anchors};

/// An incidence hypergraph with a sign on every incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedHypergraph {
    graph: IncidenceHypergraph,
    orientation: Orientation,
}

impl OrientedHypergraph {
    pub fn new(graph: IncidenceHypergraph, orientation: Orientation) -> Result<Self> {
        if orientation.len() != graph.incidences().len() {
            return Err(Violation::new(
                "orientation not total",
                format!("{} signs for {} incidences", orientation.len(), graph.incidences().len()),
            )
            .into());
        }
        Ok(OrientedHypergraph { graph, orientation })
    }

    /// Every incidence signed `+1`.
    pub fn extroverted(graph: &IncidenceHypergraph) -> Self {
        OrientedHypergraph { orientation: Orientation::all_plus(graph), graph: graph.clone() }
    }

    pub fn graph(&self) -> &IncidenceHypergraph {
        &self.graph
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn negated(&self) -> Self {
        OrientedHypergraph { graph: self.graph.clone(), orientation: self.orientation.negated() }
    }

    /// `G#` with the same signs.
    pub fn dual(&self) -> Self {
        OrientedHypergraph { graph: self.graph.dual(), orientation: self.orientation.clone() }
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        self.graph.vertices().iter().map(Elem::to_string).collect()
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.graph.edges().iter().map(Elem::to_string).collect()
    }

    /// Vertices then edges, the index order of the complete matrices.
    pub fn node_labels(&self) -> Vec<String> {
        let mut l = self.vertex_labels();
        l.extend(self.edge_labels());
        l
    }

    /// `H(v,e) = Σ σ(i)` over incidences from `v` to `e`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let g = &self.graph;
        let mut m = IntMatrix::zeros(g.vertices().len(), g.edges().len());
        for i in 0..g.incidences().len() {
            let (v, e) = (g.port(i), g.attachment(i));
            m.set(v, e, m.get(v, e) + self.orientation.sign(i));
        }
        m
    }

    /// Length-one weak walks `u -> w`, split into backsteps and the rest.
    fn length_one(&self, u: &Elem, w: &Elem) -> Result<(i64, i64)> {
        let anchors = Anchors::new().vertex("v0", u.clone()).vertex("v1", w.clone());
        let (mut backsteps, mut adjacency) = (0, 0);
        for q in enumerate_homs(&path_r(2), &self.graph, &anchors)? {
            if q.is_incidence_monic() {
                adjacency += walks::sign(&self.orientation, &q, 2);
            } else {
                backsteps += 1;
            }
        }
        Ok((backsteps, adjacency))
    }

    fn vertex_square(&self, f: impl Fn((i64, i64)) -> i64) -> Result<IntMatrix> {
        let vs = self.graph.vertices();
        let mut m = IntMatrix::zeros(vs.len(), vs.len());
        for (r, u) in vs.iter().enumerate() {
            for (c, w) in vs.iter().enumerate() {
                m.set(r, c, f(self.length_one(u, w)?));
            }
        }
        Ok(m)
    }

    /// `A(u,w)`: signed sum over incidence-monic maps of `P̌₁` from `u` to `w`.
    pub fn adjacency_matrix(&self) -> Result<IntMatrix> {
        self.vertex_square(|(_, a)| a)
    }

    /// `D(v,v)`: the number of backsteps at `v`.
    pub fn degree_matrix(&self) -> Result<IntMatrix> {
        self.vertex_square(|(d, _)| d)
    }

    /// `L = H Hᵀ`.
    pub fn laplacian_matrix(&self) -> Result<IntMatrix> {
        let h = self.incidence_matrix();
        h.mul(&h.transpose())
    }

    /// `H̄ = [0 H; Hᵀ 0]`.
    pub fn complete_incidence(&self) -> Result<IntMatrix> {
        let h = self.incidence_matrix();
        let (nv, ne) = (h.rows(), h.cols());
        IntMatrix::blocks(&IntMatrix::zeros(nv, nv), &h, &h.transpose(), &IntMatrix::zeros(ne, ne))
    }

    /// `L̄ = H̄²`.
    pub fn complete_laplacian(&self) -> Result<IntMatrix> {
        let hb = self.complete_incidence()?;
        hb.mul(&hb)
    }
}

pub fn incidence_matrix(g: &OrientedHypergraph) -> IntMatrix {
    g.incidence_matrix()
}

pub fn matrix_power(m: &IntMatrix, k: u32) -> Result<IntMatrix> {
    m.pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{chorded_square, parallel_incidences};

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
    }

    #[test]
    fn chorded_square_matrices() {
        let g = OrientedHypergraph::extroverted(&chorded_square());
        let h = g.incidence_matrix();
        assert_eq!(rows(&h), vec![vec![1, 0, 0, 1, 1], vec![1, 1, 0, 0, 0], vec![0, 1, 1, 0, 1], vec![0, 0, 1, 1, 0]]);
        assert_eq!(g.dual().incidence_matrix(), h.transpose());
        let d = g.degree_matrix().unwrap();
        assert_eq!((0..4).map(|v| d.get(v, v)).collect::<Vec<_>>(), vec![3, 2, 3, 2]);
        let l = g.laplacian_matrix().unwrap();
        assert_eq!(l.get(0, 1), 1);
        assert_eq!(l, d.sub(&g.adjacency_matrix().unwrap()).unwrap());
    }

    #[test]
    fn parallel_incidence_split() {
        let g = OrientedHypergraph::extroverted(&parallel_incidences());
        assert_eq!(rows(&g.incidence_matrix()), vec![vec![1, 2], vec![1, 1], vec![1, 0]]);
        let (d, a, l) = (g.degree_matrix().unwrap(), g.adjacency_matrix().unwrap(), g.laplacian_matrix().unwrap());
        assert_eq!((l.get(0, 0), d.get(0, 0), a.get(0, 0)), (5, 3, -2));
    }

    #[test]
    fn complete_laplacian_is_block_diagonal() {
        let g = OrientedHypergraph::extroverted(&chorded_square());
        let lb = g.complete_laplacian().unwrap();
        assert_eq!(lb.submatrix(0, 0, 4, 4), g.laplacian_matrix().unwrap());
        assert_eq!(lb.submatrix(4, 4, 5, 5), g.dual().laplacian_matrix().unwrap());
        assert!(lb.submatrix(0, 4, 4, 5).is_zero());
        assert_eq!(g.complete_incidence().unwrap().pow(0).unwrap(), IntMatrix::identity(9));
    }

    #[test]
    fn global_flip_keeps_l_d_a() {
        let g = OrientedHypergraph::new(chorded_square(), Orientation::from_signs(&chorded_square(), vec![1, -1, 1, 1, -1, -1, 1, 1, -1, 1]).unwrap()).unwrap();
        let n = g.negated();
        assert_eq!(g.laplacian_matrix().unwrap(), n.laplacian_matrix().unwrap());
        assert_eq!(g.adjacency_matrix().unwrap(), n.adjacency_matrix().unwrap());
        assert_eq!(g.degree_matrix().unwrap(), n.degree_matrix().unwrap());
    }
}
