use std::fmt;
use std::sync::Arc;

use super::sort::{check_range, compose_maps, invert, is_injective, map_elem, resolve, Sort, SortKind, Violation};
use crate::elem::Elem;
use crate::error::{Error, Result};

/// A directed multigraph: vertices, edges, and source/target maps.
#[derive(Clone)]
pub struct Quiver(Arc<Data>);

#[derive(PartialEq, Eq)]
struct Data {
    vertices: Sort,
    edges: Sort,
    source: Vec<usize>,
    target: Vec<usize>,
}

impl Quiver {
    /// Each edge is `(label, source, target)`.
    pub fn new(
        vertices: impl IntoIterator<Item = Elem>,
        edges: impl IntoIterator<Item = (Elem, Elem, Elem)>,
    ) -> Result<Self, Violation> {
        let vertices = Sort::new(SortKind::Vertex, vertices)?;
        let raw: Vec<(Elem, Elem, Elem)> = edges.into_iter().collect();
        let edges = Sort::new(SortKind::Edge, raw.iter().map(|r| r.0.clone()))?;
        let mut source = vec![0; raw.len()];
        let mut target = vec![0; raw.len()];
        for (e, s, t) in &raw {
            let ix = edges.get(e).unwrap();
            source[ix] = vertices
                .get(s)
                .ok_or_else(|| Violation::new("source out of range", format!("edge `{e}` has source `{s}`")))?;
            target[ix] = vertices
                .get(t)
                .ok_or_else(|| Violation::new("target out of range", format!("edge `{e}` has target `{t}`")))?;
        }
        Ok(Quiver(Arc::new(Data { vertices, edges, source, target })))
    }

    pub fn from_labels(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, Violation> {
        Self::new(
            vertices.iter().map(|s| Elem::atom(s)),
            edges.iter().map(|(e, s, t)| (Elem::atom(e), Elem::atom(s), Elem::atom(t))),
        )
    }

    pub(crate) fn build(vertices: Vec<Elem>, edges: Vec<(Elem, Elem, Elem)>, what: &str) -> Self {
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

    pub fn source(&self, e: usize) -> usize {
        self.0.source[e]
    }

    pub fn target(&self, e: usize) -> usize {
        self.0.target[e]
    }

    pub fn sources(&self) -> &[usize] {
        &self.0.source
    }

    pub fn targets(&self) -> &[usize] {
        &self.0.target
    }

    pub fn source_of(&self, e: &Elem) -> Option<&Elem> {
        self.edges().get(e).map(|ix| self.vertices().elem(self.source(ix)))
    }

    pub fn target_of(&self, e: &Elem) -> Option<&Elem> {
        self.edges().get(e).map(|ix| self.vertices().elem(self.target(ix)))
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.vertices().len(), self.edges().len())
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn validate(&self) -> Result<(), Violation> {
        check_range(self.sources(), self.edges(), self.vertices(), SortKind::Vertex)
            .map_err(|v| Violation::new("source out of range", v.detail))?;
        check_range(self.targets(), self.edges(), self.vertices(), SortKind::Vertex)
            .map_err(|v| Violation::new("target out of range", v.detail))
    }

    /// (out-degree, in-degree) of every vertex.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut d = vec![(0, 0); self.vertices().len()];
        for e in 0..self.edges().len() {
            d[self.source(e)].0 += 1;
            d[self.target(e)].1 += 1;
        }
        d
    }
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0 == other.0
    }
}

impl Eq for Quiver {}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = (0..self.edges().len())
            .map(|e| {
                format!(
                    "{}:{}->{}",
                    self.edges().elem(e),
                    self.vertices().elem(self.source(e)),
                    self.vertices().elem(self.target(e))
                )
            })
            .collect();
        f.debug_struct("Quiver")
            .field("vertices", &self.vertices().elems())
            .field("edges", &edges)
            .finish()
    }
}

#[derive(Clone)]
pub struct QuiverMorphism {
    dom: Quiver,
    cod: Quiver,
    vertex: Vec<usize>,
    edge: Vec<usize>,
}

impl QuiverMorphism {
    pub fn from_indices(dom: &Quiver, cod: &Quiver, vertex: Vec<usize>, edge: Vec<usize>) -> Result<Self, Violation> {
        let m = Self::unchecked(dom, cod, vertex, edge);
        m.validate()?;
        Ok(m)
    }

    pub fn from_fns<FV, FE>(dom: &Quiver, cod: &Quiver, fv: FV, fe: FE) -> Result<Self, Violation>
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
    {
        let vertex = resolve(dom.vertices(), cod.vertices(), SortKind::Vertex, fv)?;
        let edge = resolve(dom.edges(), cod.edges(), SortKind::Edge, fe)?;
        Self::from_indices(dom, cod, vertex, edge)
    }

    pub(crate) fn build<FV, FE>(dom: &Quiver, cod: &Quiver, fv: FV, fe: FE, what: &str) -> Self
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
    {
        Self::from_fns(dom, cod, fv, fe).unwrap_or_else(|v| panic!("internal error: {what} is not a morphism: {v}"))
    }

    pub(crate) fn unchecked(dom: &Quiver, cod: &Quiver, vertex: Vec<usize>, edge: Vec<usize>) -> Self {
        QuiverMorphism { dom: dom.clone(), cod: cod.clone(), vertex, edge }
    }

    pub fn identity(q: &Quiver) -> Self {
        let (nv, ne) = q.counts();
        Self::unchecked(q, q, (0..nv).collect(), (0..ne).collect())
    }

    pub fn domain(&self) -> &Quiver {
        &self.dom
    }

    pub fn codomain(&self) -> &Quiver {
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
            if self.vertex[d.source(e)] != c.source(f) {
                return Err(Violation::new(
                    "source not preserved",
                    format!("edge `{}` maps to `{}`", d.edges().elem(e), c.edges().elem(f)),
                ));
            }
            if self.vertex[d.target(e)] != c.target(f) {
                return Err(Violation::new(
                    "target not preserved",
                    format!("edge `{}` maps to `{}`", d.edges().elem(e), c.edges().elem(f)),
                ));
            }
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &QuiverMorphism) -> Result<Self> {
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

impl PartialEq for QuiverMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex == other.vertex && self.edge == other.edge && self.dom == other.dom && self.cod == other.cod
    }
}

impl Eq for QuiverMorphism {}

impl fmt::Debug for QuiverMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuiverMorphism({})", self.to_elem())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn source_must_exist() {
        let err = Quiver::from_labels(&["a"], &[("e", "b", "a")]).unwrap_err();
        assert_eq!(err.rule, "source out of range");
    }

    #[test]
    fn morphism_must_preserve_direction() {
        let arc = Quiver::from_labels(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let err = QuiverMorphism::from_indices(&arc, &arc, vec![1, 0], vec![0]).unwrap_err();
        assert_eq!(err.rule, "source not preserved");
        let id = QuiverMorphism::identity(&arc);
        assert_eq!(id.compose(&id).unwrap(), id);
    }
}
