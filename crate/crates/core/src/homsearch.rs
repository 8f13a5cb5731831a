//! Exhaustive homomorphism search.
//!
//! Structural elements (incidences, or edges for quivers and set systems) are
//! assigned first because their images force the images of their ends; the
//! remaining isolated elements are assigned last, or multiplied out when only
//! a count is needed. Results come back sorted by their component maps.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::core::{
    HypergraphMorphism, IncidenceHypergraph, IncidenceMorphism, Quiver, QuiverMorphism, SetSystemHypergraph,
    SortKind,
};
use crate::elem::Elem;
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// Required images `(sort, domain element, codomain element)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Anchors(Vec<(SortKind, Elem, Elem)>);

impl Anchors {
    pub fn new() -> Self {
        Anchors::default()
    }

    pub fn with(mut self, kind: SortKind, x: impl Into<Elem>, y: impl Into<Elem>) -> Self {
        self.0.push((kind, x.into(), y.into()));
        self
    }

    pub fn vertex(self, x: impl Into<Elem>, y: impl Into<Elem>) -> Self {
        self.with(SortKind::Vertex, x, y)
    }

    pub fn edge(self, x: impl Into<Elem>, y: impl Into<Elem>) -> Self {
        self.with(SortKind::Edge, x, y)
    }

    pub fn incidence(self, x: impl Into<Elem>, y: impl Into<Elem>) -> Self {
        self.with(SortKind::Incidence, x, y)
    }

    pub fn push(&mut self, kind: SortKind, x: Elem, y: Elem) {
        self.0.push((kind, x, y));
    }

    pub fn iter(&self) -> impl Iterator<Item = &(SortKind, Elem, Elem)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Anchors plus optional injectivity per sort.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub anchors: Anchors,
    pub injective_vertices: bool,
    pub injective_edges: bool,
    pub injective_incidences: bool,
    degree_match: bool,
}

impl SearchOptions {
    pub fn anchored(anchors: Anchors) -> Self {
        SearchOptions { anchors, ..Default::default() }
    }

    pub fn injective(mut self, kind: SortKind) -> Self {
        match kind {
            SortKind::Vertex => self.injective_vertices = true,
            SortKind::Edge => self.injective_edges = true,
            SortKind::Incidence => self.injective_incidences = true,
        }
        self
    }

    fn bijective() -> Self {
        SearchOptions {
            injective_vertices: true,
            injective_edges: true,
            injective_incidences: true,
            degree_match: true,
            ..Default::default()
        }
    }

    fn inj(&self, kind: SortKind) -> bool {
        match kind {
            SortKind::Vertex => self.injective_vertices,
            SortKind::Edge => self.injective_edges,
            SortKind::Incidence => self.injective_incidences,
        }
    }
}

/// Objects whose hom-sets can be searched.
pub trait HomSearch: Sized {
    type Morphism: Clone;

    fn homs_with(&self, cod: &Self, opts: &SearchOptions) -> Result<Vec<Self::Morphism>>;
    fn count_with(&self, cod: &Self, opts: &SearchOptions) -> Result<u64>;
    fn find_isomorphism(&self, other: &Self) -> Option<Self::Morphism>;
}

/// Every morphism `dom -> cod` meeting the anchors, in canonical order.
pub fn enumerate_homs<O: HomSearch>(dom: &O, cod: &O, anchors: &Anchors) -> Result<Vec<O::Morphism>> {
    dom.homs_with(cod, &SearchOptions::anchored(anchors.clone()))
}

/// `enumerate_homs(..).len()` without materializing the morphisms.
pub fn count_homs<O: HomSearch>(dom: &O, cod: &O, anchors: &Anchors) -> Result<u64> {
    dom.count_with(cod, &SearchOptions::anchored(anchors.clone()))
}

pub fn all_homs<O: HomSearch>(dom: &O, cod: &O) -> Vec<O::Morphism> {
    dom.homs_with(cod, &SearchOptions::default()).expect("unanchored search cannot fail")
}

/// An isomorphism `a -> b`, if one exists.
pub fn find_isomorphism<O: HomSearch>(a: &O, b: &O) -> Option<O::Morphism> {
    a.find_isomorphism(b)
}

pub fn is_isomorphic<O: HomSearch>(a: &O, b: &O) -> bool {
    a.find_isomorphism(b).is_some()
}

fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("hom count"))
}

fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("hom count"))
}

/// Number of ways to place `free` elements into `avail` slots.
fn placements(avail: usize, free: usize, injective: bool) -> Result<u64> {
    let mut n = 1u64;
    for k in 0..free {
        let slots = if injective { avail.saturating_sub(k) } else { avail };
        n = checked_mul(n, slots as u64)?;
    }
    Ok(n)
}

/// One sort's partial assignment.
struct Slot {
    map: Vec<usize>,
    used: Vec<bool>,
    injective: bool,
    dom_deg: Vec<usize>,
    cod_deg: Vec<usize>,
    degree_match: bool,
}

impl Slot {
    fn new(dom_len: usize, cod_len: usize, injective: bool) -> Self {
        Slot {
            map: vec![UNSET; dom_len],
            used: vec![false; cod_len],
            injective,
            dom_deg: Vec::new(),
            cod_deg: Vec::new(),
            degree_match: false,
        }
    }

    fn with_degrees(mut self, dom_deg: Vec<usize>, cod_deg: Vec<usize>, on: bool) -> Self {
        self.dom_deg = dom_deg;
        self.cod_deg = cod_deg;
        self.degree_match = on;
        self
    }

    /// Tries `x -> y`; returns `Some(true)` if newly set, `Some(false)` if
    /// already consistent, `None` on conflict.
    fn set(&mut self, x: usize, y: usize) -> Option<bool> {
        let cur = self.map[x];
        if cur == y {
            return Some(false);
        }
        if cur != UNSET {
            return None;
        }
        if self.injective && self.used[y] {
            return None;
        }
        if self.degree_match && self.dom_deg[x] != self.cod_deg[y] {
            return None;
        }
        self.map[x] = y;
        self.used[y] = true;
        Some(true)
    }

    fn unset(&mut self, x: usize) {
        let y = std::mem::replace(&mut self.map[x], UNSET);
        self.used[y] = false;
    }

    fn used_count(&self) -> usize {
        self.used.iter().filter(|&&u| u).count()
    }

    fn is_set(&self, x: usize) -> bool {
        self.map[x] != UNSET
    }
}

fn resolve_anchor(sort: &crate::core::Sort, kind: SortKind, x: &Elem) -> Result<usize> {
    sort.get(x).ok_or_else(|| Error::UnknownElement { sort: kind.name(), label: x.to_string() })
}

/// Connectivity-first order: each next structural element shares an end with
/// an earlier one whenever possible.
fn connected_order(n: usize, ends: impl Fn(usize) -> Vec<(u8, usize)>) -> Vec<usize> {
    let mut by_end: HashMap<(u8, usize), Vec<usize>> = HashMap::new();
    for x in 0..n {
        for k in ends(x) {
            by_end.entry(k).or_default().push(x);
        }
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for k in ends(x) {
                for &y in &by_end[&k] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Incidence hypergraphs

struct RSearch<'a> {
    d: &'a IncidenceHypergraph,
    c: &'a IncidenceHypergraph,
    v: Slot,
    e: Slot,
    i: Slot,
    order: Vec<usize>,
    free_v: Vec<usize>,
    free_e: Vec<usize>,
    by_ve: HashMap<(usize, usize), Vec<usize>>,
    at_v: Vec<Vec<usize>>,
    at_e: Vec<Vec<usize>>,
    all: Vec<usize>,
}

impl<'a> RSearch<'a> {
    /// `None` when the anchors are contradictory (no homs).
    fn new(d: &'a IncidenceHypergraph, c: &'a IncidenceHypergraph, opts: &SearchOptions) -> Result<Option<Self>> {
        let deg = |g: &IncidenceHypergraph| {
            (
                g.incidences_at_vertices().iter().map(Vec::len).collect::<Vec<_>>(),
                g.incidences_at_edges().iter().map(Vec::len).collect::<Vec<_>>(),
            )
        };
        let (dv, de) = deg(d);
        let (cv, ce) = deg(c);
        let mut s = RSearch {
            d,
            c,
            v: Slot::new(d.vertices().len(), c.vertices().len(), opts.inj(SortKind::Vertex))
                .with_degrees(dv, cv, opts.degree_match),
            e: Slot::new(d.edges().len(), c.edges().len(), opts.inj(SortKind::Edge))
                .with_degrees(de, ce, opts.degree_match),
            i: Slot::new(d.incidences().len(), c.incidences().len(), opts.inj(SortKind::Incidence)),
            order: Vec::new(),
            free_v: Vec::new(),
            free_e: Vec::new(),
            by_ve: HashMap::new(),
            at_v: c.incidences_at_vertices(),
            at_e: c.incidences_at_edges(),
            all: (0..c.incidences().len()).collect(),
        };
        for j in 0..c.incidences().len() {
            s.by_ve.entry((c.port(j), c.attachment(j))).or_default().push(j);
        }
        let mut ok = true;
        for (kind, x, y) in opts.anchors.iter() {
            let xs = resolve_anchor(d.sort(*kind), *kind, x)?;
            let ys = resolve_anchor(c.sort(*kind), *kind, y)?;
            ok &= match kind {
                SortKind::Vertex => s.v.set(xs, ys).is_some(),
                SortKind::Edge => s.e.set(xs, ys).is_some(),
                SortKind::Incidence => {
                    s.i.set(xs, ys).is_some()
                        && s.v.set(d.port(xs), c.port(ys)).is_some()
                        && s.e.set(d.attachment(xs), c.attachment(ys)).is_some()
                }
            };
        }
        if !ok {
            return Ok(None);
        }
        let order = connected_order(d.incidences().len(), |i| vec![(0, d.port(i)), (1, d.attachment(i))]);
        s.order = order.into_iter().filter(|&i| !s.i.is_set(i)).collect();
        let at_v = d.incidences_at_vertices();
        let at_e = d.incidences_at_edges();
        s.free_v = (0..d.vertices().len()).filter(|&x| at_v[x].is_empty() && !s.v.is_set(x)).collect();
        s.free_e = (0..d.edges().len()).filter(|&x| at_e[x].is_empty() && !s.e.is_set(x)).collect();
        Ok(Some(s))
    }

    fn candidates(&self, i: usize) -> &[usize] {
        let (pv, pe) = (self.v.map[self.d.port(i)], self.e.map[self.d.attachment(i)]);
        match (pv != UNSET, pe != UNSET) {
            (true, true) => self.by_ve.get(&(pv, pe)).map_or(&[], |v| v.as_slice()),
            (true, false) => &self.at_v[pv],
            (false, true) => &self.at_e[pe],
            (false, false) => &self.all,
        }
    }

    fn structural(&mut self, depth: usize, leaf: &mut dyn FnMut(&mut Self) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&i) = self.order.get(depth) else {
            return leaf(self);
        };
        let cands = self.candidates(i).to_vec();
        let (dv, de) = (self.d.port(i), self.d.attachment(i));
        for j in cands {
            let Some(ni) = self.i.set(i, j) else { continue };
            let mut flow = ControlFlow::Continue(());
            if let Some(nv) = self.v.set(dv, self.c.port(j)) {
                if let Some(ne) = self.e.set(de, self.c.attachment(j)) {
                    flow = self.structural(depth + 1, leaf);
                    if ne {
                        self.e.unset(de);
                    }
                }
                if nv {
                    self.v.unset(dv);
                }
            }
            if ni {
                self.i.unset(i);
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn count(&mut self) -> Result<u64> {
        let mut total = 0u64;
        let mut err = None;
        let fv = self.free_v.len();
        let fe = self.free_e.len();
        let _ = self.structural(0, &mut |s| {
            let r = placements(s.c.vertices().len() - if s.v.injective { s.v.used_count() } else { 0 }, fv, s.v.injective)
                .and_then(|a| {
                    let b = placements(
                        s.c.edges().len() - if s.e.injective { s.e.used_count() } else { 0 },
                        fe,
                        s.e.injective,
                    )?;
                    checked_mul(a, b)
                })
                .and_then(|n| checked_add(total, n));
            match r {
                Ok(t) => {
                    total = t;
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(total),
        }
    }

    fn free(
        &mut self,
        k: usize,
        out: &mut dyn FnMut(&Self) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let (nfv, nfe) = (self.free_v.len(), self.free_e.len());
        if k == nfv + nfe {
            return out(self);
        }
        let (slot_is_v, x, n) = if k < nfv {
            (true, self.free_v[k], self.c.vertices().len())
        } else {
            (false, self.free_e[k - nfv], self.c.edges().len())
        };
        for y in 0..n {
            let slot = if slot_is_v { &mut self.v } else { &mut self.e };
            if slot.set(x, y).is_none() {
                continue;
            }
            let flow = self.free(k + 1, out);
            let slot = if slot_is_v { &mut self.v } else { &mut self.e };
            slot.unset(x);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run(&mut self, mut out: impl FnMut(&Self) -> ControlFlow<()>) {
        let _ = self.structural(0, &mut |s| s.free(0, &mut out));
    }

    fn morphism(&self) -> IncidenceMorphism {
        IncidenceMorphism::unchecked(self.d, self.c, self.v.map.clone(), self.e.map.clone(), self.i.map.clone())
    }
}

impl HomSearch for IncidenceHypergraph {
    type Morphism = IncidenceMorphism;

    fn homs_with(&self, cod: &Self, opts: &SearchOptions) -> Result<Vec<IncidenceMorphism>> {
        let Some(mut s) = RSearch::new(self, cod, opts)? else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        s.run(|s| {
            out.push(s.morphism());
            ControlFlow::Continue(())
        });
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        Ok(out)
    }

    fn count_with(&self, cod: &Self, opts: &SearchOptions) -> Result<u64> {
        match RSearch::new(self, cod, opts)? {
            Some(mut s) => s.count(),
            None => Ok(0),
        }
    }

    fn find_isomorphism(&self, other: &Self) -> Option<IncidenceMorphism> {
        if self.counts() != other.counts() || !same_degrees_r(self, other) {
            return None;
        }
        let mut s = RSearch::new(self, other, &SearchOptions::bijective()).ok()??;
        let mut found = None;
        s.run(|s| {
            found = Some(s.morphism());
            ControlFlow::Break(())
        });
        found
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn same_degrees_r(a: &IncidenceHypergraph, b: &IncidenceHypergraph) -> bool {
    let dv = |g: &IncidenceHypergraph| sorted(g.incidences_at_vertices().iter().map(Vec::len).collect());
    let de = |g: &IncidenceHypergraph| sorted(g.incidences_at_edges().iter().map(Vec::len).collect());
    dv(a) == dv(b) && de(a) == de(b)
}

// ---------------------------------------------------------------------------
// Quivers

struct QSearch<'a> {
    d: &'a Quiver,
    c: &'a Quiver,
    v: Slot,
    e: Slot,
    order: Vec<usize>,
    free_v: Vec<usize>,
    by_st: HashMap<(usize, usize), Vec<usize>>,
    by_s: Vec<Vec<usize>>,
    by_t: Vec<Vec<usize>>,
    all: Vec<usize>,
}

impl<'a> QSearch<'a> {
    fn new(d: &'a Quiver, c: &'a Quiver, opts: &SearchOptions) -> Result<Option<Self>> {
        let deg = |q: &Quiver| q.degrees().into_iter().map(|(o, i)| o * 1_000_003 + i).collect::<Vec<_>>();
        let mut s = QSearch {
            d,
            c,
            v: Slot::new(d.vertices().len(), c.vertices().len(), opts.inj(SortKind::Vertex))
                .with_degrees(deg(d), deg(c), opts.degree_match),
            e: Slot::new(d.edges().len(), c.edges().len(), opts.inj(SortKind::Edge)),
            order: Vec::new(),
            free_v: Vec::new(),
            by_st: HashMap::new(),
            by_s: vec![Vec::new(); c.vertices().len()],
            by_t: vec![Vec::new(); c.vertices().len()],
            all: (0..c.edges().len()).collect(),
        };
        for f in 0..c.edges().len() {
            s.by_st.entry((c.source(f), c.target(f))).or_default().push(f);
            s.by_s[c.source(f)].push(f);
            s.by_t[c.target(f)].push(f);
        }
        let mut ok = true;
        for (kind, x, y) in opts.anchors.iter() {
            let kind = if *kind == SortKind::Incidence {
                return Err(Error::Input("quivers have no incidences to anchor".into()));
            } else {
                *kind
            };
            let xs = resolve_anchor(d.sort(kind), kind, x)?;
            let ys = resolve_anchor(c.sort(kind), kind, y)?;
            ok &= match kind {
                SortKind::Vertex => s.v.set(xs, ys).is_some(),
                _ => {
                    s.e.set(xs, ys).is_some()
                        && s.v.set(d.source(xs), c.source(ys)).is_some()
                        && s.v.set(d.target(xs), c.target(ys)).is_some()
                }
            };
        }
        if !ok {
            return Ok(None);
        }
        let order = connected_order(d.edges().len(), |e| vec![(0, d.source(e)), (0, d.target(e))]);
        s.order = order.into_iter().filter(|&e| !s.e.is_set(e)).collect();
        let deg = d.degrees();
        s.free_v = (0..d.vertices().len()).filter(|&x| deg[x] == (0, 0) && !s.v.is_set(x)).collect();
        Ok(Some(s))
    }

    fn candidates(&self, e: usize) -> &[usize] {
        let (ps, pt) = (self.v.map[self.d.source(e)], self.v.map[self.d.target(e)]);
        match (ps != UNSET, pt != UNSET) {
            (true, true) => self.by_st.get(&(ps, pt)).map_or(&[], |v| v.as_slice()),
            (true, false) => &self.by_s[ps],
            (false, true) => &self.by_t[pt],
            (false, false) => &self.all,
        }
    }

    fn structural(&mut self, depth: usize, leaf: &mut dyn FnMut(&mut Self) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&e) = self.order.get(depth) else {
            return leaf(self);
        };
        let cands = self.candidates(e).to_vec();
        let (ds, dt) = (self.d.source(e), self.d.target(e));
        for f in cands {
            let Some(ne) = self.e.set(e, f) else { continue };
            let mut flow = ControlFlow::Continue(());
            if let Some(ns) = self.v.set(ds, self.c.source(f)) {
                if let Some(nt) = self.v.set(dt, self.c.target(f)) {
                    flow = self.structural(depth + 1, leaf);
                    if nt {
                        self.v.unset(dt);
                    }
                }
                if ns {
                    self.v.unset(ds);
                }
            }
            if ne {
                self.e.unset(e);
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn free(&mut self, k: usize, out: &mut dyn FnMut(&Self) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&x) = self.free_v.get(k) else {
            return out(self);
        };
        for y in 0..self.c.vertices().len() {
            if self.v.set(x, y).is_none() {
                continue;
            }
            let flow = self.free(k + 1, out);
            self.v.unset(x);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run(&mut self, mut out: impl FnMut(&Self) -> ControlFlow<()>) {
        let _ = self.structural(0, &mut |s| s.free(0, &mut out));
    }

    fn count(&mut self) -> Result<u64> {
        let mut total = 0u64;
        let mut err = None;
        let fv = self.free_v.len();
        let _ = self.structural(0, &mut |s| {
            let avail = s.c.vertices().len() - if s.v.injective { s.v.used_count() } else { 0 };
            match placements(avail, fv, s.v.injective).and_then(|n| checked_add(total, n)) {
                Ok(t) => {
                    total = t;
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        err.map_or(Ok(total), Err)
    }

    fn morphism(&self) -> QuiverMorphism {
        QuiverMorphism::unchecked(self.d, self.c, self.v.map.clone(), self.e.map.clone())
    }
}

impl HomSearch for Quiver {
    type Morphism = QuiverMorphism;

    fn homs_with(&self, cod: &Self, opts: &SearchOptions) -> Result<Vec<QuiverMorphism>> {
        let Some(mut s) = QSearch::new(self, cod, opts)? else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        s.run(|s| {
            out.push(s.morphism());
            ControlFlow::Continue(())
        });
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        Ok(out)
    }

    fn count_with(&self, cod: &Self, opts: &SearchOptions) -> Result<u64> {
        match QSearch::new(self, cod, opts)? {
            Some(mut s) => s.count(),
            None => Ok(0),
        }
    }

    fn find_isomorphism(&self, other: &Self) -> Option<QuiverMorphism> {
        if self.counts() != other.counts() || sorted(self.degrees()) != sorted(other.degrees()) {
            return None;
        }
        let mut s = QSearch::new(self, other, &SearchOptions::bijective()).ok()??;
        let mut found = None;
        s.run(|s| {
            found = Some(s.morphism());
            ControlFlow::Break(())
        });
        found
    }
}

// ---------------------------------------------------------------------------
// Set-system hypergraphs

struct HSearch<'a> {
    d: &'a SetSystemHypergraph,
    c: &'a SetSystemHypergraph,
    v: Slot,
    e: Slot,
    order: Vec<usize>,
    free_v: Vec<usize>,
    by_size: HashMap<usize, Vec<usize>>,
}

impl<'a> HSearch<'a> {
    fn new(d: &'a SetSystemHypergraph, c: &'a SetSystemHypergraph, opts: &SearchOptions) -> Result<Option<Self>> {
        let esize = |g: &SetSystemHypergraph| g.all_endpoints().iter().map(Vec::len).collect::<Vec<_>>();
        let mut s = HSearch {
            d,
            c,
            v: Slot::new(d.vertices().len(), c.vertices().len(), opts.inj(SortKind::Vertex))
                .with_degrees(d.degrees(), c.degrees(), opts.degree_match),
            e: Slot::new(d.edges().len(), c.edges().len(), opts.inj(SortKind::Edge))
                .with_degrees(esize(d), esize(c), opts.degree_match),
            order: Vec::new(),
            free_v: Vec::new(),
            by_size: HashMap::new(),
        };
        for f in 0..c.edges().len() {
            s.by_size.entry(c.endpoints(f).len()).or_default().push(f);
        }
        for (kind, x, y) in opts.anchors.iter() {
            if *kind == SortKind::Incidence {
                return Err(Error::Input("set-system hypergraphs have no incidences to anchor".into()));
            }
            let xs = resolve_anchor(d.sort(*kind), *kind, x)?;
            let ys = resolve_anchor(c.sort(*kind), *kind, y)?;
            let slot = if *kind == SortKind::Vertex { &mut s.v } else { &mut s.e };
            if slot.set(xs, ys).is_none() {
                return Ok(None);
            }
        }
        // An anchored edge constrains its endpoints; the search re-checks it
        // like any other edge.
        s.order = connected_order(d.edges().len(), |e| d.endpoints(e).iter().map(|&v| (0, v)).collect());
        let deg = d.degrees();
        s.free_v = (0..d.vertices().len()).filter(|&x| deg[x] == 0 && !s.v.is_set(x)).collect();
        Ok(Some(s))
    }

    fn structural(&mut self, depth: usize, leaf: &mut dyn FnMut(&mut Self) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&e) = self.order.get(depth) else {
            return leaf(self);
        };
        let ends = self.d.endpoints(e);
        let cands: Vec<usize> = if self.e.is_set(e) {
            vec![self.e.map[e]]
        } else {
            let n = ends.len();
            (0..self.c.edges().len())
                .filter(|&f| {
                    let m = self.c.endpoints(f).len();
                    m <= n && (m > 0 || n == 0)
                })
                .collect()
        };
        for f in cands {
            let Some(ne) = self.e.set(e, f) else { continue };
            let target = self.c.endpoints(f);
            let consistent = ends
                .iter()
                .all(|&v| !self.v.is_set(v) || target.binary_search(&self.v.map[v]).is_ok());
            let flow = if consistent {
                let unset: Vec<usize> = ends.iter().copied().filter(|&v| !self.v.is_set(v)).collect();
                self.endpoints(e, f, &unset, 0, depth, leaf)
            } else {
                ControlFlow::Continue(())
            };
            if ne {
                self.e.unset(e);
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn endpoints(
        &mut self,
        e: usize,
        f: usize,
        unset: &[usize],
        k: usize,
        depth: usize,
        leaf: &mut dyn FnMut(&mut Self) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let Some(&x) = unset.get(k) else {
            let mut image: Vec<usize> = self.d.endpoints(e).iter().map(|&v| self.v.map[v]).collect();
            image.sort_unstable();
            image.dedup();
            if image != self.c.endpoints(f) {
                return ControlFlow::Continue(());
            }
            return self.structural(depth + 1, leaf);
        };
        let target = self.c.endpoints(f).to_vec();
        for y in target {
            if self.v.set(x, y).is_none() {
                continue;
            }
            let flow = self.endpoints(e, f, unset, k + 1, depth, leaf);
            self.v.unset(x);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn free(&mut self, k: usize, out: &mut dyn FnMut(&Self) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(&x) = self.free_v.get(k) else {
            return out(self);
        };
        for y in 0..self.c.vertices().len() {
            if self.v.set(x, y).is_none() {
                continue;
            }
            let flow = self.free(k + 1, out);
            self.v.unset(x);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run(&mut self, mut out: impl FnMut(&Self) -> ControlFlow<()>) {
        let _ = self.structural(0, &mut |s| s.free(0, &mut out));
    }

    fn count(&mut self) -> Result<u64> {
        let mut total = 0u64;
        let mut err = None;
        let fv = self.free_v.len();
        let _ = self.structural(0, &mut |s| {
            let avail = s.c.vertices().len() - if s.v.injective { s.v.used_count() } else { 0 };
            match placements(avail, fv, s.v.injective).and_then(|n| checked_add(total, n)) {
                Ok(t) => {
                    total = t;
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        err.map_or(Ok(total), Err)
    }

    fn morphism(&self) -> HypergraphMorphism {
        HypergraphMorphism::unchecked(self.d, self.c, self.v.map.clone(), self.e.map.clone())
    }
}

impl HomSearch for SetSystemHypergraph {
    type Morphism = HypergraphMorphism;

    fn homs_with(&self, cod: &Self, opts: &SearchOptions) -> Result<Vec<HypergraphMorphism>> {
        let Some(mut s) = HSearch::new(self, cod, opts)? else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        s.run(|s| {
            out.push(s.morphism());
            ControlFlow::Continue(())
        });
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        Ok(out)
    }

    fn count_with(&self, cod: &Self, opts: &SearchOptions) -> Result<u64> {
        match HSearch::new(self, cod, opts)? {
            Some(mut s) => s.count(),
            None => Ok(0),
        }
    }

    fn find_isomorphism(&self, other: &Self) -> Option<HypergraphMorphism> {
        let sizes = |g: &SetSystemHypergraph| sorted(g.all_endpoints().iter().map(Vec::len).collect());
        if self.counts() != other.counts()
            || sorted(self.degrees()) != sorted(other.degrees())
            || sizes(self) != sizes(other)
        {
            return None;
        }
        let mut s = HSearch::new(self, other, &SearchOptions::bijective()).ok()??;
        let mut found = None;
        s.run(|s| {
            found = Some(s.morphism());
            ControlFlow::Break(())
        });
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::generators::*;

    #[test]
    fn point_homs_pick_a_vertex() {
        assert_eq!(all_homs(&vertex_unit_r(), &path_r(2)).len(), 2);
        assert_eq!(count_homs(&incidence_unit_r(), &path_r(5), &Anchors::new()).unwrap(), 5);
        assert_eq!(count_homs(&edge_unit_r(), &path_r(5), &Anchors::new()).unwrap(), 3);
    }

    #[test]
    fn count_matches_enumeration_with_free_elements() {
        let g = IncidenceHypergraph::from_labels(&["a", "b", "z"], &["e", "f"], &[("i", "a", "e")]).unwrap();
        let h = path_r(3);
        let n = all_homs(&g, &h).len() as u64;
        assert_eq!(count_homs(&g, &h, &Anchors::new()).unwrap(), n);
        let opts = SearchOptions::default().injective(SortKind::Vertex);
        assert_eq!(g.count_with(&h, &opts).unwrap(), g.homs_with(&h, &opts).unwrap().len() as u64);
    }

    #[test]
    fn conflicting_anchors_give_nothing() {
        let a = Anchors::new().vertex("v0", "v0").incidence("i0", "i1");
        assert_eq!(count_homs(&path_r(2), &path_r(2), &a).unwrap(), 0);
        let bad = Anchors::new().vertex("nope", "v0");
        assert!(matches!(count_homs(&path_r(2), &path_r(2), &bad), Err(Error::UnknownElement { .. })));
    }

    #[test]
    fn isomorphism_checks() {
        assert!(is_isomorphic(&path_r(1), &path_r(1).dual()));
        assert!(!is_isomorphic(&path_r(2), &path_r(2).dual()));
        assert!(is_isomorphic(&path_r(3), &path_r(3).dual()));
        assert!(is_isomorphic(&cycle_q(3), &cycle_q(3)));
        assert!(!is_isomorphic(&path_q(2), &cycle_q(3)));
        assert!(is_isomorphic(&cycle_h(4), &cycle_h(4)));
    }

    #[test]
    fn direct_image_hom_count() {
        // P1 -> C2: bijective vertex maps times edge choices.
        assert_eq!(all_homs(&path_h(1), &cycle_h(2)).len(), 4);
        // P1 -> loop: both endpoints collapse onto the loop vertex.
        assert_eq!(all_homs(&path_h(1), &cycle_h(1)).len(), 1);
        assert_eq!(all_homs(&cycle_h(1), &path_h(1)).len(), 0);
    }

    #[test]
    fn quiver_counts() {
        assert_eq!(all_homs(&path_q(1), &cycle_q(2)).len(), 2);
        assert_eq!(count_homs(&path_q(2), &cycle_q(2), &Anchors::new()).unwrap(), 2);
        assert_eq!(count_homs(&vertex_unit_q(), &cycle_q(5), &Anchors::new()).unwrap(), 5);
    }
}
