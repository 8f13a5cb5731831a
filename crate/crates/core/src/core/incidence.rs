use std::fmt;
use std::sync::Arc;

use super::sort::{check_range, compose_maps, invert, is_injective, map_elem, resolve, Sort, SortKind, Violation};
use crate::elem::Elem;
use crate::error::{Error, Result};

/// Vertices, edges and incidences, each incidence attached to one vertex
/// (its port) and one edge (its attachment).
///
/// Cloning is cheap; the data is shared and immutable.
#[derive(Clone)]
pub struct IncidenceHypergraph(Arc<Data>);

#[derive(PartialEq, Eq)]
struct Data {
    vertices: Sort,
    edges: Sort,
    incidences: Sort,
    port: Vec<usize>,
    attachment: Vec<usize>,
}

impl IncidenceHypergraph {
    /// Builds an object from labels; each incidence is `(label, port, attachment)`.
    pub fn new(
        vertices: impl IntoIterator<Item = Elem>,
        edges: impl IntoIterator<Item = Elem>,
        incidences: impl IntoIterator<Item = (Elem, Elem, Elem)>,
    ) -> Result<Self, Violation> {
        let vertices = Sort::new(SortKind::Vertex, vertices)?;
        let edges = Sort::new(SortKind::Edge, edges)?;
        let raw: Vec<(Elem, Elem, Elem)> = incidences.into_iter().collect();
        let incidences = Sort::new(SortKind::Incidence, raw.iter().map(|r| r.0.clone()))?;
        let mut port = vec![0; raw.len()];
        let mut attachment = vec![0; raw.len()];
        for (i, v, e) in &raw {
            let ix = incidences.get(i).unwrap();
            port[ix] = vertices
                .get(v)
                .ok_or_else(|| Violation::new("port out of range", format!("incidence `{i}` has port `{v}`")))?;
            attachment[ix] = edges.get(e).ok_or_else(|| {
                Violation::new("attachment out of range", format!("incidence `{i}` has attachment `{e}`"))
            })?;
        }
        Ok(IncidenceHypergraph(Arc::new(Data { vertices, edges, incidences, port, attachment })))
    }

    /// Convenience constructor from string labels.
    pub fn from_labels(vertices: &[&str], edges: &[&str], incidences: &[(&str, &str, &str)]) -> Result<Self, Violation> {
        Self::new(
            vertices.iter().map(|s| Elem::atom(s)),
            edges.iter().map(|s| Elem::atom(s)),
            incidences.iter().map(|(i, v, e)| (Elem::atom(i), Elem::atom(v), Elem::atom(e))),
        )
    }

    pub(crate) fn build(
        vertices: Vec<Elem>,
        edges: Vec<Elem>,
        incidences: Vec<(Elem, Elem, Elem)>,
        what: &str,
    ) -> Self {
        Self::new(vertices, edges, incidences).unwrap_or_else(|v| panic!("internal error: {what} is malformed: {v}"))
    }

    /// From sorts in canonical order and index-valued structure maps.
    pub(crate) fn from_parts(vertices: Sort, edges: Sort, incidences: Sort, port: Vec<usize>, attachment: Vec<usize>) -> Self {
        let g = IncidenceHypergraph(Arc::new(Data { vertices, edges, incidences, port, attachment }));
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn empty() -> Self {
        Self::build(vec![], vec![], vec![], "empty object")
    }

    pub fn vertices(&self) -> &Sort {
        &self.0.vertices
    }

    pub fn edges(&self) -> &Sort {
        &self.0.edges
    }

    pub fn incidences(&self) -> &Sort {
        &self.0.incidences
    }

    pub fn sort(&self, kind: SortKind) -> &Sort {
        match kind {
            SortKind::Vertex => self.vertices(),
            SortKind::Edge => self.edges(),
            SortKind::Incidence => self.incidences(),
        }
    }

    /// Port index of incidence `i`.
    pub fn port(&self, i: usize) -> usize {
        self.0.port[i]
    }

    pub fn attachment(&self, i: usize) -> usize {
        self.0.attachment[i]
    }

    pub fn ports(&self) -> &[usize] {
        &self.0.port
    }

    pub fn attachments(&self) -> &[usize] {
        &self.0.attachment
    }

    pub fn port_of(&self, i: &Elem) -> Option<&Elem> {
        self.incidences().get(i).map(|ix| self.vertices().elem(self.port(ix)))
    }

    pub fn attachment_of(&self, i: &Elem) -> Option<&Elem> {
        self.incidences().get(i).map(|ix| self.edges().elem(self.attachment(ix)))
    }

    /// Incidence indices grouped by port.
    pub fn incidences_at_vertices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices().len()];
        for (i, &v) in self.ports().iter().enumerate() {
            out[v].push(i);
        }
        out
    }

    pub fn incidences_at_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.edges().len()];
        for (i, &e) in self.attachments().iter().enumerate() {
            out[e].push(i);
        }
        out
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices().len(), self.edges().len(), self.incidences().len())
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Re-checks the structural invariants.
    pub fn validate(&self) -> Result<(), Violation> {
        check_range(self.ports(), self.incidences(), self.vertices(), SortKind::Vertex)
            .map_err(|v| Violation::new("port out of range", v.detail))?;
        check_range(self.attachments(), self.incidences(), self.edges(), SortKind::Edge)
            .map_err(|v| Violation::new("attachment out of range", v.detail))
    }

    /// Incidence duality: vertices and edges swap, and so do port and attachment.
    pub fn dual(&self) -> Self {
        IncidenceHypergraph(Arc::new(Data {
            vertices: self.0.edges.clone(),
            edges: self.0.vertices.clone(),
            incidences: self.0.incidences.clone(),
            port: self.0.attachment.clone(),
            attachment: self.0.port.clone(),
        }))
    }
}

impl PartialEq for IncidenceHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0 == other.0
    }
}

impl Eq for IncidenceHypergraph {}

impl fmt::Debug for IncidenceHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let incs: Vec<String> = (0..self.incidences().len())
            .map(|i| {
                format!(
                    "{}:{}-{}",
                    self.incidences().elem(i),
                    self.vertices().elem(self.port(i)),
                    self.edges().elem(self.attachment(i))
                )
            })
            .collect();
        f.debug_struct("IncidenceHypergraph")
            .field("vertices", &self.vertices().elems())
            .field("edges", &self.edges().elems())
            .field("incidences", &incs)
            .finish()
    }
}

/// A homomorphism of incidence hypergraphs.
#[derive(Clone)]
pub struct IncidenceMorphism {
    dom: IncidenceHypergraph,
    cod: IncidenceHypergraph,
    vertex: Vec<usize>,
    edge: Vec<usize>,
    incidence: Vec<usize>,
}

impl IncidenceMorphism {
    pub fn from_indices(
        dom: &IncidenceHypergraph,
        cod: &IncidenceHypergraph,
        vertex: Vec<usize>,
        edge: Vec<usize>,
        incidence: Vec<usize>,
    ) -> Result<Self, Violation> {
        let m = Self::unchecked(dom, cod, vertex, edge, incidence);
        m.validate()?;
        Ok(m)
    }

    /// Builds a morphism from label-level component functions.
    pub fn from_fns<FV, FE, FI>(
        dom: &IncidenceHypergraph,
        cod: &IncidenceHypergraph,
        fv: FV,
        fe: FE,
        fi: FI,
    ) -> Result<Self, Violation>
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
        FI: Fn(&Elem) -> Option<Elem>,
    {
        let vertex = resolve(dom.vertices(), cod.vertices(), SortKind::Vertex, fv)?;
        let edge = resolve(dom.edges(), cod.edges(), SortKind::Edge, fe)?;
        let incidence = resolve(dom.incidences(), cod.incidences(), SortKind::Incidence, fi)?;
        Self::from_indices(dom, cod, vertex, edge, incidence)
    }

    pub(crate) fn build<FV, FE, FI>(
        dom: &IncidenceHypergraph,
        cod: &IncidenceHypergraph,
        fv: FV,
        fe: FE,
        fi: FI,
        what: &str,
    ) -> Self
    where
        FV: Fn(&Elem) -> Option<Elem>,
        FE: Fn(&Elem) -> Option<Elem>,
        FI: Fn(&Elem) -> Option<Elem>,
    {
        Self::from_fns(dom, cod, fv, fe, fi).unwrap_or_else(|v| panic!("internal error: {what} is not a morphism: {v}"))
    }

    pub(crate) fn unchecked(
        dom: &IncidenceHypergraph,
        cod: &IncidenceHypergraph,
        vertex: Vec<usize>,
        edge: Vec<usize>,
        incidence: Vec<usize>,
    ) -> Self {
        IncidenceMorphism { dom: dom.clone(), cod: cod.clone(), vertex, edge, incidence }
    }

    pub fn identity(g: &IncidenceHypergraph) -> Self {
        let (nv, ne, ni) = g.counts();
        Self::unchecked(g, g, (0..nv).collect(), (0..ne).collect(), (0..ni).collect())
    }

    pub fn domain(&self) -> &IncidenceHypergraph {
        &self.dom
    }

    pub fn codomain(&self) -> &IncidenceHypergraph {
        &self.cod
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex
    }

    pub fn edge_map(&self) -> &[usize] {
        &self.edge
    }

    pub fn incidence_map(&self) -> &[usize] {
        &self.incidence
    }

    pub fn map(&self, kind: SortKind) -> &[usize] {
        match kind {
            SortKind::Vertex => &self.vertex,
            SortKind::Edge => &self.edge,
            SortKind::Incidence => &self.incidence,
        }
    }

    /// Image of a label of sort `kind`.
    pub fn image(&self, kind: SortKind, x: &Elem) -> Option<&Elem> {
        let ix = self.dom.sort(kind).get(x)?;
        Some(self.cod.sort(kind).elem(self.map(kind)[ix]))
    }

    pub fn vertex_image(&self, x: &Elem) -> Option<Elem> {
        self.image(SortKind::Vertex, x).cloned()
    }

    pub fn edge_image(&self, x: &Elem) -> Option<Elem> {
        self.image(SortKind::Edge, x).cloned()
    }

    pub fn incidence_image(&self, x: &Elem) -> Option<Elem> {
        self.image(SortKind::Incidence, x).cloned()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let (d, c) = (&self.dom, &self.cod);
        check_range(&self.vertex, d.vertices(), c.vertices(), SortKind::Vertex)?;
        check_range(&self.edge, d.edges(), c.edges(), SortKind::Edge)?;
        check_range(&self.incidence, d.incidences(), c.incidences(), SortKind::Incidence)?;
        for (i, &j) in self.incidence.iter().enumerate() {
            if self.vertex[d.port(i)] != c.port(j) {
                return Err(Violation::new(
                    "port not preserved",
                    format!("incidence `{}` maps to `{}`", d.incidences().elem(i), c.incidences().elem(j)),
                ));
            }
            if self.edge[d.attachment(i)] != c.attachment(j) {
                return Err(Violation::new(
                    "attachment not preserved",
                    format!("incidence `{}` maps to `{}`", d.incidences().elem(i), c.incidences().elem(j)),
                ));
            }
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &IncidenceMorphism) -> Result<Self> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("codomain of the inner morphism is not the domain of the outer".into()));
        }
        Ok(Self::unchecked(
            &f.dom,
            &self.cod,
            compose_maps(&self.vertex, &f.vertex),
            compose_maps(&self.edge, &f.edge),
            compose_maps(&self.incidence, &f.incidence),
        ))
    }

    pub fn is_iso(&self) -> bool {
        let (nv, ne, ni) = self.cod.counts();
        self.vertex.len() == nv
            && self.edge.len() == ne
            && self.incidence.len() == ni
            && is_injective(&self.vertex, nv)
            && is_injective(&self.edge, ne)
            && is_injective(&self.incidence, ni)
    }

    pub fn is_incidence_monic(&self) -> bool {
        is_injective(&self.incidence, self.cod.incidences().len())
    }

    pub fn is_vertex_monic(&self) -> bool {
        is_injective(&self.vertex, self.cod.vertices().len())
    }

    pub fn inverse(&self) -> Option<Self> {
        let (nv, ne, ni) = self.cod.counts();
        let m = Self::unchecked(
            &self.cod,
            &self.dom,
            invert(&self.vertex, nv)?,
            invert(&self.edge, ne)?,
            invert(&self.incidence, ni)?,
        );
        m.validate().ok()?;
        Some(m)
    }

    /// Incidence duality on morphisms: the vertex and edge maps swap.
    pub fn dual(&self) -> Self {
        Self::unchecked(&self.dom.dual(), &self.cod.dual(), self.edge.clone(), self.vertex.clone(), self.incidence.clone())
    }

    /// Canonical label `{vertex map}:{edge map}:{incidence map}`.
    pub fn to_elem(&self) -> Elem {
        let (d, c) = (&self.dom, &self.cod);
        Elem::tuple([
            map_elem(&self.vertex, d.vertices(), c.vertices()),
            map_elem(&self.edge, d.edges(), c.edges()),
            map_elem(&self.incidence, d.incidences(), c.incidences()),
        ])
    }

    pub(crate) fn key(&self) -> (&[usize], &[usize], &[usize]) {
        (&self.vertex, &self.edge, &self.incidence)
    }
}

impl PartialEq for IncidenceMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.vertex == other.vertex
            && self.edge == other.edge
            && self.incidence == other.incidence
            && self.dom == other.dom
            && self.cod == other.cod
    }
}

impl Eq for IncidenceMorphism {}

impl fmt::Debug for IncidenceMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncidenceMorphism({})", self.to_elem())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> IncidenceHypergraph {
        IncidenceHypergraph::from_labels(&["v0", "v1"], &["e0"], &[("i0", "v0", "e0"), ("i1", "v1", "e0")]).unwrap()
    }

    #[test]
    fn rejects_port_out_of_range() {
        let err = IncidenceHypergraph::from_labels(&["v0"], &["e0"], &[("i0", "v9", "e0")]).unwrap_err();
        assert_eq!(err.rule, "port out of range");
        assert!(err.detail.contains("v9"));
    }

    #[test]
    fn rejects_attachment_out_of_range_and_duplicates() {
        let err = IncidenceHypergraph::from_labels(&["v0"], &["e0"], &[("i0", "v0", "e7")]).unwrap_err();
        assert_eq!(err.rule, "attachment out of range");
        let err = IncidenceHypergraph::from_labels(&["v0", "v0"], &[], &[]).unwrap_err();
        assert_eq!(err.rule, "duplicate label");
    }

    #[test]
    fn swap_is_an_involution() {
        let g = p1();
        let swap = IncidenceMorphism::from_indices(&g, &g, vec![1, 0], vec![0], vec![1, 0]).unwrap();
        assert_eq!(swap.compose(&swap).unwrap(), IncidenceMorphism::identity(&g));
        assert!(swap.is_iso());
        assert_eq!(swap.inverse().unwrap(), swap);
    }

    #[test]
    fn detects_broken_port_square() {
        let g = p1();
        let err = IncidenceMorphism::from_indices(&g, &g, vec![0, 0], vec![0], vec![1, 0]).unwrap_err();
        assert_eq!(err.rule, "port not preserved");
    }

    #[test]
    fn compose_checks_endpoints() {
        let g = p1();
        let h = g.dual();
        let id_g = IncidenceMorphism::identity(&g);
        let id_h = IncidenceMorphism::identity(&h);
        assert!(id_h.compose(&id_g).is_err());
    }

    #[test]
    fn dual_swaps_sorts() {
        let g = p1();
        let d = g.dual();
        assert_eq!(d.counts(), (1, 2, 2));
        assert_eq!(d.dual(), g);
    }
}
