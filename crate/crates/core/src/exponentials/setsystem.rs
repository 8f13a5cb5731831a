use super::{index_of, labelled, wrong_domain, Exponential};
use crate::core::{HypergraphMorphism, SetSystemHypergraph, SortKind};
use crate::elem::Elem;
use crate::error::{Error, Result};
use crate::homsearch::all_homs;
use crate::products::{box_h, box_h_mor};

/// Largest hom-set whose subsets `exp_box_h` will enumerate.
pub const DEFAULT_SIZE_GUARD: u64 = 16;

/// The cap in effect: `HYPERBOX_SIZE_GUARD` if set and numeric, else the default.
pub fn size_guard() -> u64 {
    std::env::var("HYPERBOX_SIZE_GUARD").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_GUARD)
}

/// `[G,H]_β`, or its multigraph part `Del[G,H]_β`.
///
/// Edges are pairs `(A, g)` labelled `(set of hom labels, map V(G) -> E(H))`.
#[derive(Clone, Debug)]
pub struct HypergraphExponential {
    base: SetSystemHypergraph,
    target: SetSystemHypergraph,
    carrier: SetSystemHypergraph,
    vertex_homs: Vec<HypergraphMorphism>,
    eval: HypergraphMorphism,
    multigraph: bool,
}

pub fn exp_box_h(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> Result<HypergraphExponential> {
    exp_box_h_capped(g, h, size_guard())
}

pub fn exp_box_h_capped(g: &SetSystemHypergraph, h: &SetSystemHypergraph, cap: u64) -> Result<HypergraphExponential> {
    build(g, h, Some(cap))
}

/// `Del[G,H]_β`, the exponential of multigraphs. Only subsets of size one
/// and two are enumerated, so no size guard applies.
pub fn exp_box_m(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> Result<HypergraphExponential> {
    g.require_multigraph()?;
    h.require_multigraph()?;
    build(g, h, None)
}

fn subsets(n: usize, multigraph: bool) -> Vec<Vec<usize>> {
    if multigraph {
        let singles = (0..n).map(|a| vec![a]);
        let doubles = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b]));
        return singles.chain(doubles).collect();
    }
    (0u64..1 << n).map(|mask| (0..n).filter(|&a| mask >> a & 1 == 1).collect()).collect()
}

fn build(g: &SetSystemHypergraph, h: &SetSystemHypergraph, cap: Option<u64>) -> Result<HypergraphExponential> {
    let (vlabels, vertex_homs) = labelled(all_homs(g, h));
    if let Some(cap) = cap {
        if vertex_homs.len() as u64 > cap {
            return Err(Error::SizeGuard { what: "set-system exponential hom-set", needed: vertex_homs.len() as u64, cap });
        }
    }
    let multigraph = cap.is_none();
    let gv = g.vertices();
    // edges of H by endpoint set
    let mut by_ends: std::collections::HashMap<&[usize], Vec<usize>> = Default::default();
    for f in 0..h.edges().len() {
        by_ends.entry(h.endpoints(f)).or_default().push(f);
    }
    let mut edges = Vec::new();
    for a in subsets(vertex_homs.len(), multigraph) {
        let mut choices = Vec::with_capacity(gv.len());
        for v in 0..gv.len() {
            let mut image: Vec<usize> = a.iter().map(|&p| vertex_homs[p].vertex_map()[v]).collect();
            image.sort_unstable();
            image.dedup();
            choices.push(by_ends.get(&image[..]).map(Vec::as_slice).unwrap_or(&[]));
        }
        let aset: Vec<Elem> = a.iter().map(|&p| vlabels[p].clone()).collect();
        for g_fn in product(&choices) {
            let map = Elem::map(g_fn.iter().enumerate().map(|(v, &f)| (gv.elem(v).clone(), h.edges().elem(f).clone())));
            edges.push((Elem::pair(Elem::set(aset.clone()), map), aset.clone()));
        }
    }
    let carrier = SetSystemHypergraph::build(vlabels, edges, "set-system exponential");
    let dom = box_h(g, &carrier);
    let eval = HypergraphMorphism::build(
        &dom,
        h,
        |x| {
            let (v, phi) = x.as_pair()?;
            vertex_homs[carrier.vertices().get(phi)?].vertex_image(v)
        },
        |x| match x.as_tagged()? {
            (1, e, phi) => vertex_homs[carrier.vertices().get(phi)?].edge_image(e),
            (2, v, ag) => ag.as_pair()?.1.apply(v).cloned(),
            _ => None,
        },
        "set-system evaluation",
    );
    Ok(HypergraphExponential { base: g.clone(), target: h.clone(), carrier, vertex_homs, eval, multigraph })
}

/// All tuples picking one entry from each list.
fn product(choices: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out.into_iter().flat_map(|t| c.iter().map(move |&x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

impl HypergraphExponential {
    pub fn vertex_index(&self, v: usize) -> &HypergraphMorphism {
        &self.vertex_homs[v]
    }

    /// `(A, g)` behind edge `e`, as hom indices and a map into `E(H)`.
    pub fn edge_index(&self, e: usize) -> (Vec<usize>, Vec<usize>) {
        let (a, g) = self.carrier.edges().elem(e).as_pair().expect("edge labels are pairs");
        let a = a.as_set().unwrap().iter().map(|p| self.carrier.vertices().get(p).unwrap()).collect();
        let g = g.as_map().unwrap().iter().map(|(_, f)| self.target.edges().get(f).unwrap()).collect();
        (a, g)
    }

    pub fn is_multigraph_part(&self) -> bool {
        self.multigraph
    }
}

impl Exponential for HypergraphExponential {
    type Object = SetSystemHypergraph;
    type Arrow = HypergraphMorphism;

    fn base(&self) -> &SetSystemHypergraph {
        &self.base
    }

    fn target(&self) -> &SetSystemHypergraph {
        &self.target
    }

    fn carrier(&self) -> &SetSystemHypergraph {
        &self.carrier
    }

    fn eval(&self) -> &HypergraphMorphism {
        &self.eval
    }

    fn product(&self, k: &SetSystemHypergraph) -> SetSystemHypergraph {
        box_h(&self.base, k)
    }

    fn product_right(&self, psi: &HypergraphMorphism) -> HypergraphMorphism {
        box_h_mor(&HypergraphMorphism::identity(&self.base), psi)
    }

    fn curry(&self, phi: &HypergraphMorphism, k: &SetSystemHypergraph) -> Result<HypergraphMorphism> {
        if *phi.domain() != self.product(k) || *phi.codomain() != self.target {
            return Err(wrong_domain("set-system box"));
        }
        if self.multigraph {
            k.require_multigraph()?;
        }
        let (g, c) = (&self.base, &self.carrier);
        let mut vlabels = Vec::with_capacity(k.vertices().len());
        for w in k.vertices().iter() {
            let m = HypergraphMorphism::from_fns(
                g,
                &self.target,
                |v| phi.vertex_image(&Elem::pair(v.clone(), w.clone())),
                |e| phi.edge_image(&Elem::tagged(1, e.clone(), w.clone())),
            )?;
            vlabels.push(m.to_elem());
        }
        let vertex: Vec<usize> =
            vlabels.iter().map(|l| index_of(c.vertices(), SortKind::Vertex, l)).collect::<Result<_>>()?;
        let mut edge = Vec::with_capacity(k.edges().len());
        for (f, fl) in k.edges().iter().enumerate() {
            let a = Elem::set(k.endpoints(f).iter().map(|&w| vlabels[w].clone()));
            let map = Elem::map(g.vertices().iter().map(|v| {
                let x = Elem::tagged(2, v.clone(), fl.clone());
                (v.clone(), phi.edge_image(&x).expect("φ is total"))
            }));
            edge.push(index_of(c.edges(), SortKind::Edge, &Elem::pair(a, map))?);
        }
        HypergraphMorphism::from_indices(k, c, vertex, edge).map_err(Error::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::{cycle_h, path_h, vertex_unit_h};
    use crate::exponentials::check_adjunction;
    use crate::functors::del;

    fn sizes(x: &HypergraphExponential) -> [usize; 5] {
        let mut s = [0; 5];
        for e in x.carrier().all_endpoints() {
            s[e.len().min(4)] += 1;
        }
        s
    }

    #[test]
    fn path_into_digon() {
        let x = exp_box_h(&path_h(1), &cycle_h(2)).unwrap();
        assert_eq!(x.carrier().counts(), (4, 36));
        assert_eq!(sizes(&x), [0, 0, 16, 16, 4]);
        let m = exp_box_m(&path_h(1), &cycle_h(2)).unwrap();
        assert_eq!(m.carrier(), &del(x.carrier()));
    }

    #[test]
    fn guard_rejects_large_hom_sets() {
        let err = exp_box_h_capped(&path_h(1), &cycle_h(2), 3).unwrap_err();
        assert!(matches!(err, Error::SizeGuard { needed: 4, cap: 3, .. }));
    }

    #[test]
    fn point_exponent() {
        let h = cycle_h(3);
        let x = exp_box_h(&vertex_unit_h(), &h).unwrap();
        assert_eq!(x.carrier().counts().0, 3);
        for (e, ends) in x.carrier().all_endpoints().iter().enumerate() {
            assert_eq!(x.edge_index(e).0, *ends);
        }
    }

    #[test]
    fn adjunctions() {
        let x = exp_box_h(&path_h(1), &cycle_h(2)).unwrap();
        let m = exp_box_m(&path_h(1), &cycle_h(2)).unwrap();
        for k in [path_h(1), cycle_h(1)] {
            assert!(check_adjunction(&x, &k).unwrap().holds());
            assert!(check_adjunction(&m, &k).unwrap().holds());
        }
    }
}
