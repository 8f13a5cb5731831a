use std::fmt;
use std::sync::Arc;

use super::sort::{check_range, compose_maps, invert, is_injective, map_elem, resolve, Sort, SortKind, Violation};
use crate::elem::Elem;
use crate::error::{Error, Result};

/// A set-system hypergraph: every edge carries a subset of the vertices.
#[derive(Clone)]
pub struct SetSystemHypergraph(Arc<Data>);

#[derive(PartialEq, Eq)]
struct Data {
    vertices: Sort,
    edges: Sort,
    // sorted, deduplicated vertex indices
    endpoints: Vec<Vec<usize>>,
}

impl SetSystemHypergraph {
    /// Each edge is `(label, endpoint labels)`; repeated endpoints collapse.
    pub fn new(
        vertices: impl IntoIterator<Item = Elem>,
        edges: impl IntoIterator<Item = (Elem, Vec<Elem>)>,
    ) -> Result<Self, Violation> {
        let vertices = Sort::new(SortKind::Vertex, vertices)?;
        let raw: Vec<(Elem, Vec<Elem>)> = edges.into_iter().collect();
        let edges = Sort::new(SortKind::Edge, raw.iter().map(|r| r.0.clone()))?;
        let mut endpoints = vec![Vec::new(); raw.len()];
        for (e, ends) in &raw {
            let mut ix: Vec<usize> = ends
                .iter()
                .map(|v| {
                    vertices
                        .get(v)
                        .ok_or_else(|| Violation::new("endpoint out of range", format!("edge `{e}` has endpoint `{v}`")))
                })
                .collect::<Result<_, _>>()?;
            ix.sort_unstable();
            ix.dedup();
            endpoints[edges.get(e).unwrap()] = ix;
        }
        Ok(SetSystemHypergraph(Arc::new(Data { vertices, edges, endpoints })))
    }

    pub fn from_labels(vertices: &[&str], edges: &[(&str, &[&str])]) -> Result<Self, Violation> {
        Self::new(
            vertices.iter().map(|s| Elem::atom(s)),
            edges.iter().map(|(e, ends)| (Elem::atom(e), ends.iter().map(|v| Elem::atom(v)).collect())),
        )
    }

    pub(crate) fn build(vertices: Vec<Elem>, edges: Vec<(Elem, Vec<Elem>)>, what: &str) -> Self {
        Self::new(vertices, edges).unwrap_or_else(|v| panic!("internal error: {what} is malformed: {v}"))
    }

    pub fn vertices(&self) -> &Sort {
        &self.0.vertices
    }

    pub fn edges(&self) -> &Sort {
        &self.0.edges
    }

    pub fn sort(&self, kind: SortKind) -> &Sort {
        match kind {
            SortKind::Edge => self.edges(),
            _ => self.vertices(),
        }
    }

    /// Sorted endpoint indices of edge `e`.
    pub fn endpoints(&self, e: usize) -> &[usize] {
        &self.0.endpoints[e]
    }

    pub fn all_endpoints(&self) -> &[Vec<usize>] {
        &self.0.endpoints
    }

    pub fn endpoints_of(&self, e: &Elem) -> Option<Vec<&Elem>> {
        let ix = self.edges().get(e)?;
        Some(self.endpoints(ix).iter().map(|&v| self.vertices().elem(v)).collect())
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.vertices().len(), self.edges().len())
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Every endpoint set has one or two elements.
    pub fn is_multigraph(&self) -> bool {
        self.0.endpoints.iter().all(|s| matches!(s.len(), 1 | 2))
    }

    /// First edge whose size rules out a multigraph.
    pub fn non_multigraph_edge(&self) -> Option<(&Elem, usize)> {
        self.0
            .endpoints
            .iter()
            .enumerate()
            .find(|(_, s)| !matches!(s.len(), 1 | 2))
            .map(|(e, s)| (self.edges().elem(e), s.len()))
    }

    pub fn require_multigraph(&self) -> Result<()> {
        match self.non_multigraph_edge() {
            Some((e, n)) => Err(Error::NotMultigraph(e.to_string(), n)),
            None => Ok(()),
        }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.0.endpoints.len() != self.edges().len() {
            return Err(Violation::new("map not total", "endpoint map does not cover every edge"));
        }
        for (e, s) in self.0.endpoints.iter().enumerate() {
            if s.iter().any(|&v| v >= self.vertices().len()) {
                return Err(Violation::new("endpoint out of range", format!("edge `{}`", self.edges().elem(e))));
            }
        }
        Ok(())
    }

    /// Number of edges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices().len()];
        for s in &self.0.endpoints {
            for &v in s {
                d[v] += 1;
            }
        }
        d
    }
}

impl PartialEq for SetSystemHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0 == other.0
    }
}

impl Eq for SetSystemHypergraph {}

impl fmt::Debug for SetSystemHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = (0..self.edges().len())
            .map(|e| {
                let ends: Vec<String> = self.endpoints(e).iter().map(|&v| self.vertices().elem(v).to_string()).collect();
                format!("{}:{{{}}}", self.edges().elem(e), ends.join(","))
            })
            .collect();
        f.debug_struct("SetSystemHypergraph")
            .field("vertices", &self.vertices().elems())
            .field("edges", &edges)
            .finish()
    }
}

#[derive(Clone)]
pub struct HypergraphMorphism {
    dom: SetSystemHypergraph,
    cod: SetSystemHypergraph,
    vertex: Vec<usize>,
    edge: Vec<usize>,
}

impl HypergraphMorphism {
    pub fn from_indices(
        dom: &SetSystemHypergraph,
        cod: &SetSystemHypergraph,
        vertex: Vec<usize>,
        edge: Vec<usize>,
    ) -> Result<Self, Violation> {
        let m = Self::unchecked(dom, cod, vertex, edge);
        m.validate()?;
        Ok(m)
    }

    pub fn from_fns<FV, FE>(dom: &SetSystemHypergraph, cod: &SetSystemHypergraph, fv: FV, fe: FE) -> Result<Self, Violation>
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
    {
        let vertex = resolve(dom.vertices(), cod.vertices(), SortKind::Vertex, fv)?;
        let edge = resolve(dom.edges(), cod.edges(), SortKind::Edge, fe)?;
        Self::from_indices(dom, cod, vertex, edge)
    }

    pub(crate) fn build<FV, FE>(dom: &SetSystemHypergraph, cod: &SetSystemHypergraph, fv: FV, fe: FE, what: &str) -> Self
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
    {
        Self::from_fns(dom, cod, fv, fe).unwrap_or_else(|v| panic!("internal error: {what} is not a morphism: {v}"))
    }

    pub(crate) fn unchecked(dom: &SetSystemHypergraph, cod: &SetSystemHypergraph, vertex: Vec<usize>, edge: Vec<usize>) -> Self {
        HypergraphMorphism { dom: dom.clone(), cod: cod.clone(), vertex, edge }
    }

    pub fn identity(g: &SetSystemHypergraph) -> Self {
        let (nv, ne) = g.counts();
        Self::unchecked(g, g, (0..nv).collect(), (0..ne).collect())
    }

    pub fn domain(&self) -> &SetSystemHypergraph {
        &self.dom
    }

    pub fn codomain(&self) -> &SetSystemHypergraph {
        &self.cod
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex
    }

    pub fn edge_map(&self) -> &[usize] {
        &self.edge
    }

    pub fn vertex_image(&self, x: &Elem) -> Option<Elem> {
        let ix = self.dom.vertices().get(x)?;
        Some(self.cod.vertices().elem(self.vertex[ix]).clone())
    }

    pub fn edge_image(&self, x: &Elem) -> Option<Elem> {
        let ix = self.dom.edges().get(x)?;
        Some(self.cod.edges().elem(self.edge[ix]).clone())
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let (d, c) = (&self.dom, &self.cod);
        check_range(&self.vertex, d.vertices(), c.vertices(), SortKind::Vertex)?;
        check_range(&self.edge, d.edges(), c.edges(), SortKind::Edge)?;
        for (e, &f) in self.edge.iter().enumerate() {
            let mut image: Vec<usize> = d.endpoints(e).iter().map(|&v| self.vertex[v]).collect();
            image.sort_unstable();
            image.dedup();
            if image != c.endpoints(f) {
                return Err(Violation::new(
                    "direct image condition",
                    format!("endpoints of `{}` do not map onto those of `{}`", d.edges().elem(e), c.edges().elem(f)),
                ));
            }
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &HypergraphMorphism) -> Result<Self> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("codomain of the inner morphism is not the domain of the outer".into()));
        }
        Ok(Self::unchecked(&f.dom, &self.cod, compose_maps(&self.vertex, &f.vertex), compose_maps(&self.edge, &f.edge)))
    }

    pub fn is_iso(&self) -> bool {
        let (nv, ne) = self.cod.counts();
        self.vertex.len() == nv && self.edge.len() == ne && is_injective(&self.vertex, nv) && is_injective(&self.edge, ne)
    }

    pub fn inverse(&self) -> Option<Self> {
        let (nv, ne) = self.cod.counts();
        let m = Self::unchecked(&self.cod, &self.dom, invert(&self.vertex, nv)?, invert(&self.edge, ne)?);
        m.validate().ok()?;
        Some(m)
    }

    pub fn to_elem(&self) -> Elem {
        let (d, c) = (&self.dom, &self.cod);
        Elem::tuple([map_elem(&self.vertex, d.vertices(), c.vertices()), map_elem(&self.edge, d.edges(), c.edges())])
    }

    pub(crate) fn key(&self) -> (&[usize], &[usize]) {
        (&self.vertex, &self.edge)
    }
}

impl PartialEq for HypergraphMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex == other.vertex && self.edge == other.edge && self.dom == other.dom && self.cod == other.cod
    }
}

impl Eq for HypergraphMorphism {}

impl fmt::Debug for HypergraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HypergraphMorphism({})", self.to_elem())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapsing_a_two_edge_breaks_direct_image() {
        let two = SetSystemHypergraph::from_labels(&["a", "b"], &[("e", &["a", "b"])]).unwrap();
        let err = HypergraphMorphism::from_indices(&two, &two, vec![0, 0], vec![0]).unwrap_err();
        assert_eq!(err.rule, "direct image condition");
    }

    #[test]
    fn multigraph_predicate() {
        let three = SetSystemHypergraph::from_labels(&["a", "b", "c"], &[("e", &["a", "b", "c"])]).unwrap();
        assert!(!three.is_multigraph());
        assert!(three.require_multigraph().is_err());
        let lp = SetSystemHypergraph::from_labels(&["a"], &[("e", &["a", "a"])]).unwrap();
        assert!(lp.is_multigraph());
        assert_eq!(lp.endpoints(0), &[0]);
    }
}
