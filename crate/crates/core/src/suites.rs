//! Verification suites behind `hyperbox verify` and the acceptance run.
//!
//! Every suite is deterministic for a given seed; reports print one line
//! per case.

use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::core::generators::{path_h, path_r};
use crate::core::{IncidenceHypergraph, Morphism, Quiver, SetSystemHypergraph};
use crate::error::Result;
use crate::exponentials::{
    check_adjunction, exp_box_h, exp_box_m, exp_box_q, exp_box_r, exp_laplacian, size_guard, Exponential,
};
use crate::functors::*;
use crate::homsearch::{all_homs, is_isomorphic};
use crate::products::*;
use crate::random::{self, Bounds, SeededRng};
use crate::spectral::{laplacian_exponential_census, verify_weak_walk_theorem, OrientedHypergraph};

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteReport { suite: suite.into(), seed, cases: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(Case { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {} seed {}\n", self.suite, self.seed);
        for c in &self.cases {
            let _ = write!(s, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
            if !c.detail.is_empty() {
                let _ = write!(s, ": {}", c.detail);
            }
            s.push('\n');
        }
        let bad = self.failures().count();
        let _ = writeln!(s, "{} cases, {} failed", self.cases.len(), bad);
        s
    }
}

fn tiny_incidence(r: &mut SeededRng) -> IncidenceHypergraph {
    random::incidence_hypergraph(r, Bounds::new(2, 2, 2))
}

// -- coherence ---------------------------------------------------------------

fn laws<M: Monoidal>(rep: &mut SuiteReport, trial: usize, a: &M::Object, b: &M::Object, c: &M::Object) -> Result<()> {
    let name = |law: &str| format!("{} {law} #{trial}", M::NAME);
    rep.push(name("pentagon"), pentagon::<M>(a, b, c, a)?, "");
    rep.push(name("triangle"), triangle::<M>(a, b)?, "");
    rep.push(name("hexagon"), hexagon::<M>(a, b, c)?, "");
    rep.push(name("symmetry"), symmetry::<M>(a, b)?, "");
    Ok(())
}

/// Pentagon, triangle, hexagon and symmetry for every product, plus the
/// duality cells, on `trials` random triples.
pub fn coherence(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("coherence", seed);
    let mut r = random::rng(seed);
    for t in 0..trials {
        let q: Vec<Quiver> = (0..3).map(|_| random::quiver(&mut r, 2, 2)).collect();
        laws::<QuiverBox>(&mut rep, t, &q[0], &q[1], &q[2])?;
        let h: Vec<SetSystemHypergraph> = (0..3).map(|_| random::hypergraph(&mut r, 2, 2, 2)).collect();
        laws::<HypergraphBox>(&mut rep, t, &h[0], &h[1], &h[2])?;
        let m: Vec<SetSystemHypergraph> = (0..3).map(|_| random::multigraph(&mut r, 2, 2)).collect();
        let mname = format!("multigraph box #{t}");
        rep.push(
            format!("{mname} closed"),
            m.iter().all(SetSystemHypergraph::is_multigraph) && box_h(&box_h(&m[0], &m[1]), &m[2]).is_multigraph(),
            "",
        );
        rep.push(format!("{mname} pentagon"), pentagon::<HypergraphBox>(&m[0], &m[1], &m[2], &m[0])?, "");
        rep.push(format!("{mname} hexagon"), hexagon::<HypergraphBox>(&m[0], &m[1], &m[2])?, "");
        let g: Vec<IncidenceHypergraph> = (0..3).map(|_| tiny_incidence(&mut r)).collect();
        laws::<IncidenceBox>(&mut rep, t, &g[0], &g[1], &g[2])?;
        laws::<LaplacianBox>(&mut rep, t, &g[0], &g[1], &g[2])?;
        let tf = triforce(&g[0], &g[1])?;
        rep.push(format!("duality triangle #{t}"), tf.anti_unitor_triangle, "");
        rep.push(format!("duality cells #{t}"), tf.top && tf.left && tf.bottom && tf.hexagon, "");
        rep.push(format!("duality composite #{t}"), tf.composite, "");
    }
    Ok(rep)
}

// -- adjunction --------------------------------------------------------------

fn adjoint<X: Exponential>(rep: &mut SuiteReport, name: &str, x: &X, k: &X::Object) -> Result<()> {
    let c = check_adjunction(x, k)?;
    let detail = format!(
        "|hom(G⊠K,H)| = {}, |hom(K,[G,H])| = {}, round trips {}, unique {}",
        c.product_homs, c.curried_homs, c.round_trips, c.unique_factorization
    );
    rep.push(name, c.holds(), detail);
    Ok(())
}

/// The currying bijection for all five exponentials on `trials` random triples each.
pub fn adjunction(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("adjunction", seed);
    let mut r = random::rng(seed);
    for t in 0..trials {
        let (g, k, h) = (random::quiver(&mut r, 2, 2), random::quiver(&mut r, 2, 2), random::quiver(&mut r, 3, 3));
        adjoint(&mut rep, &format!("quiver #{t}"), &exp_box_q(&g, &h), &k)?;

        let cap = size_guard();
        let (g, k, h) = loop {
            let g = random::hypergraph(&mut r, 2, 2, 2);
            let h = random::hypergraph(&mut r, 2, 2, 2);
            if (all_homs(&g, &h).len() as u64) <= cap.min(6) {
                break (g, random::hypergraph(&mut r, 2, 1, 2), h);
            }
        };
        adjoint(&mut rep, &format!("set-system #{t}"), &exp_box_h(&g, &h)?, &k)?;

        let (g, k, h) = (random::multigraph(&mut r, 2, 2), random::multigraph(&mut r, 2, 2), random::multigraph(&mut r, 3, 3));
        adjoint(&mut rep, &format!("multigraph #{t}"), &exp_box_m(&g, &h)?, &k)?;

        let (g, k) = (tiny_incidence(&mut r), tiny_incidence(&mut r));
        let h = random::incidence_hypergraph(&mut r, Bounds::new(2, 2, 3));
        adjoint(&mut rep, &format!("incidence box #{t}"), &exp_box_r(&g, &h)?, &k)?;
        let l = exp_laplacian(&g, &h);
        adjoint(&mut rep, &format!("Laplacian #{t}"), &l, &k)?;
        rep.push(format!("Laplacian attachments #{t}"), l.check_attachments(), "");
        let d = l.carrier().dual();
        let dual_ok = is_isomorphic(&d, exp_laplacian(&g, &h.dual()).carrier())
            && is_isomorphic(&d, exp_laplacian(&g.dual(), &h).carrier());
        rep.push(format!("Laplacian duality #{t}"), dual_ok, "");
    }
    Ok(rep)
}

// -- functors ---------------------------------------------------------------

/// Strict monoidality of `U`, `N`, `Del`; the comparison isomorphisms; the
/// path-doubling of `UΥ⋄`; and the failure of `Υ⋄` to be monoidal.
pub fn functors(seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("functors", seed);
    let mut r = random::rng(seed);
    for t in 0..trials {
        let (a, b) = (random::quiver(&mut r, 3, 3), random::quiver(&mut r, 3, 3));
        rep.push(format!("U strict #{t}"), undirect(&box_q(&a, &b)) == box_h(&undirect(&a), &undirect(&b)), "");
        let (m, n) = (random::multigraph(&mut r, 3, 3), random::multigraph(&mut r, 3, 3));
        rep.push(format!("N strict #{t}"), inclusion_n(&box_h(&m, &n))? == box_h(&inclusion_n(&m)?, &inclusion_n(&n)?), "");
        let (h, k) = (random::hypergraph(&mut r, 3, 3, 3), random::hypergraph(&mut r, 3, 3, 3));
        rep.push(format!("Del strict #{t}"), del(&box_h(&h, &k)) == box_h(&del(&h), &del(&k)), "");
        rep.push(format!("ψ iso #{t}"), psi_digraph(&m, &n)?.is_iso(), "");
        rep.push(format!("Φ iso #{t}"), phi_incidence(&h, &k).is_iso(), "");
        let (g, g2) = (tiny_incidence(&mut r), tiny_incidence(&mut r));
        let psi = psi_bipartite(&g, &g2);
        rep.push(format!("Ψ iso #{t}"), psi.is_iso(), "");
        // naturality of Ψ along enumerated endomorphisms
        let mut natural = true;
        for f in all_homs(&g, &g).iter().take(4) {
            for f2 in all_homs(&g2, &g2).iter().take(4) {
                let lhs = u_bipartite_mor(&laplacian_mor(f, f2)).compose(&psi)?;
                let rhs = psi.compose(&box_h_mor(&u_bipartite_mor(f), &u_bipartite_mor(f2)))?;
                natural &= lhs == rhs;
            }
        }
        rep.push(format!("Ψ natural #{t}"), natural, "");
        let mut functorial = true;
        for f in all_homs(&a, &a).iter().take(4) {
            for f2 in all_homs(&a, &a).iter().take(4) {
                let c = f.compose(f2)?;
                functorial &= undirect_mor(&c) == undirect_mor(f).compose(&undirect_mor(f2))?;
            }
        }
        functorial &= undirect_mor(&Morphism::identity(&a)) == Morphism::identity(&undirect(&a));
        rep.push(format!("U functorial #{t}"), functorial, "");
    }
    for n in 1..=6 {
        rep.push(format!("UΥ⋄ doubles the path of {n} incidences"), is_isomorphic(&u_bipartite(&path_r(n)), &path_h(n)), "");
    }
    let one = crate::core::generators::incidence_unit_r();
    let lhs = bipartite_incidence(&laplacian_product(&one, &one));
    let rhs = box_q(&bipartite_incidence(&one), &bipartite_incidence(&one));
    rep.push("Υ⋄ does not preserve the product of 1-edges", !is_isomorphic(&lhs, &rhs), "");
    rep.push("UΥ⋄ does preserve it", is_isomorphic(&undirect(&lhs), &undirect(&rhs)), "");
    rep.push("Ψ• and ψ• are isomorphisms", psi_bipartite_unit().is_iso() && psi_digraph_unit().is_iso(), "");
    Ok(rep)
}

// -- matrices ----------------------------------------------------------------

/// The weak-walk theorem on each object up to `k_max`.
pub fn weakwalk(objects: &[(String, OrientedHypergraph)], k_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("weakwalk", 0);
    for (name, g) in objects {
        let w = verify_weak_walk_theorem(g, k_max)?;
        for c in &w.checks {
            rep.push(format!("{name}: {}", c.name), c.passed, c.mismatches.join("; "));
        }
        for s in &w.signs {
            rep.push(
                format!("{name}: signed walks = (-1)^⌊k/2⌋ L̄^(k/2) at k={}", s.k),
                s.signed_walks_hold,
                format!("literal H̄ᵏ = (-1)^⌊k/2⌋ L̄^(k/2): {}", s.literal_holds),
            );
        }
    }
    Ok(rep)
}

/// Sizes of `[P̌_{k/2}, G]_L` for `k = 1..=k_max`.
pub fn census(objects: &[(String, IncidenceHypergraph)], k_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("census", 0);
    for (name, g) in objects {
        for k in 1..=k_max {
            let c = laplacian_exponential_census(g, k)?;
            let detail = if c.passed() {
                format!("{} vertices, {} edges confirmed; {} incidences = prism maps", c.vertices, c.edges, c.incidences)
            } else {
                format!(
                    "{} vertices vs walk sum {}, {} edges vs walk sum {}, {} incidences vs {} prism maps",
                    c.vertices, c.vertex_rooted_walks, c.edges, c.edge_rooted_walks, c.incidences, c.prism_maps
                )
            };
            rep.push(format!("{name} k={k}"), c.passed(), detail);
        }
    }
    Ok(rep)
}

/// `n` seeded objects from the matrix corpus, named by position.
pub fn named_corpus(seed: u64, n: usize) -> Vec<(String, OrientedHypergraph)> {
    random::matrix_corpus(seed, n).into_iter().enumerate().map(|(j, g)| (format!("random #{j}"), g)).collect()
}

pub fn random_seed_stream(seed: u64) -> impl Iterator<Item = u64> {
    let mut r = random::rng(seed);
    std::iter::repeat_with(move || r.gen())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_repeat() {
        let a = coherence(0, 2).unwrap();
        assert!(a.passed(), "{}", a.to_text());
        assert_eq!(a.to_text(), coherence(0, 2).unwrap().to_text());
        let f = functors(0, 2).unwrap();
        assert!(f.passed(), "{}", f.to_text());
    }

    #[test]
    fn adjunction_suite_passes() {
        let a = adjunction(1, 1).unwrap();
        assert!(a.passed(), "{}", a.to_text());
    }
}
