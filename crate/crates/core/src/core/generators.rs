//! Standard objects: unit generators, paths, cycles, single edges.
//!
//! Labels follow fixed schemes (`v0`, `e0`, `i0`, ...) so outputs are
//! reproducible; the unit generators use the label `1` throughout.

use super::hypergraph::SetSystemHypergraph;
use super::incidence::IncidenceHypergraph;
use super::quiver::Quiver;
use crate::elem::Elem;

fn v(j: usize) -> Elem {
    Elem::atom(format!("v{j}"))
}

fn e(j: usize) -> Elem {
    Elem::atom(format!("e{j}"))
}

fn i(j: usize) -> Elem {
    Elem::atom(format!("i{j}"))
}

/// Isolated vertex `1`.
pub fn vertex_unit_q() -> Quiver {
    Quiver::build(vec![Elem::one()], vec![], "vertex unit")
}

/// Single arc `1` from `(0,1)` to `(1,1)`.
pub fn edge_unit_q() -> Quiver {
    let tail = edge_unit_tail();
    let head = edge_unit_head();
    Quiver::build(vec![tail.clone(), head.clone()], vec![(Elem::one(), tail, head)], "edge unit")
}

pub(crate) fn edge_unit_tail() -> Elem {
    Elem::pair(Elem::atom("0"), Elem::one())
}

pub(crate) fn edge_unit_head() -> Elem {
    Elem::pair(Elem::one(), Elem::one())
}

pub fn vertex_unit_h() -> SetSystemHypergraph {
    SetSystemHypergraph::build(vec![Elem::one()], vec![], "vertex unit")
}

pub fn vertex_unit_r() -> IncidenceHypergraph {
    IncidenceHypergraph::build(vec![Elem::one()], vec![], vec![], "vertex unit")
}

pub fn edge_unit_r() -> IncidenceHypergraph {
    IncidenceHypergraph::build(vec![], vec![Elem::one()], vec![], "edge unit")
}

/// The 1-edge: one vertex, one edge, one incidence, all labelled `1`.
pub fn incidence_unit_r() -> IncidenceHypergraph {
    IncidenceHypergraph::build(
        vec![Elem::one()],
        vec![Elem::one()],
        vec![(Elem::one(), Elem::one(), Elem::one())],
        "incidence unit",
    )
}

/// Directed path `v0 -> v1 -> ... -> vn`.
pub fn path_q(n: usize) -> Quiver {
    Quiver::build((0..=n).map(v).collect(), (0..n).map(|j| (e(j), v(j), v(j + 1))).collect(), "directed path")
}

/// Directed cycle on `n >= 1` vertices.
pub fn cycle_q(n: usize) -> Quiver {
    assert!(n >= 1, "a cycle needs at least one vertex");
    Quiver::build((0..n).map(v).collect(), (0..n).map(|j| (e(j), v(j), v((j + 1) % n))).collect(), "directed cycle")
}

/// Graph path with `n` edges.
pub fn path_h(n: usize) -> SetSystemHypergraph {
    SetSystemHypergraph::build(
        (0..=n).map(v).collect(),
        (0..n).map(|j| (e(j), vec![v(j), v(j + 1)])).collect(),
        "path",
    )
}

/// Graph cycle on `n >= 1` vertices; `n = 1` is a loop, `n = 2` a digon.
pub fn cycle_h(n: usize) -> SetSystemHypergraph {
    assert!(n >= 1, "a cycle needs at least one vertex");
    SetSystemHypergraph::build(
        (0..n).map(v).collect(),
        (0..n).map(|j| (e(j), vec![v(j), v((j + 1) % n)])).collect(),
        "cycle",
    )
}

/// A single edge with `n` endpoints.
pub fn n_edge_h(n: usize) -> SetSystemHypergraph {
    SetSystemHypergraph::build((0..n).map(v).collect(), vec![(e(0), (0..n).map(v).collect())], "n-edge")
}

/// A single edge with `n` incidences to distinct vertices.
pub fn n_edge_r(n: usize) -> IncidenceHypergraph {
    IncidenceHypergraph::build(
        (0..n).map(v).collect(),
        vec![e(0)],
        (0..n).map(|j| (i(j), v(j), e(0))).collect(),
        "n-edge",
    )
}

/// Position `j` of the alternating sequence `a0, a1, ...`: vertices at even
/// positions, edges at odd ones.
pub fn path_r_element(j: usize) -> Elem {
    if j % 2 == 0 {
        v(j / 2)
    } else {
        e(j / 2)
    }
}

/// Incidence path with `k` incidences (length `k/2`), starting at vertex
/// `v0`. Incidence `i{j}` joins positions `j` and `j+1`.
pub fn path_r(k: usize) -> IncidenceHypergraph {
    let nv = k / 2 + 1;
    let ne = (k + 1) / 2;
    let incs = (0..k)
        .map(|j| {
            let (vx, ex) = if j % 2 == 0 { (j / 2, j / 2) } else { ((j + 1) / 2, j / 2) };
            (i(j), v(vx), e(ex))
        })
        .collect();
    IncidenceHypergraph::build((0..nv).map(v).collect(), (0..ne).map(e).collect(), incs, "incidence path")
}

/// Tail and head of [`path_r`] as (is_vertex, label).
pub fn path_r_ends(k: usize) -> ((bool, Elem), (bool, Elem)) {
    ((true, path_r_element(0)), (k % 2 == 0, path_r_element(k)))
}

/// Closed incidence path on `k >= 1` vertices and `k` edges: `v_j` meets
/// `e_j` through `i{2j}` and `e_j` meets `v_{j+1 mod k}` through `i{2j+1}`.
pub fn cycle_r(k: usize) -> IncidenceHypergraph {
    assert!(k >= 1, "a cycle needs at least one vertex");
    let incs = (0..k)
        .flat_map(|j| [(i(2 * j), v(j), e(j)), (i(2 * j + 1), v((j + 1) % k), e(j))])
        .collect();
    IncidenceHypergraph::build((0..k).map(v).collect(), (0..k).map(e).collect(), incs, "incidence cycle")
}

/// Builds an object from incidence-matrix rows: entry `(r, c)` is the number
/// of parallel incidences between `v{r+1}` and `e{c+1}`, numbered `i1, i2, ...`
/// in row-major order.
pub fn from_incidence_rows(rows: &[&[usize]]) -> IncidenceHypergraph {
    let ne = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut incs = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, &n) in row.iter().enumerate() {
            for _ in 0..n {
                let ix = incs.len() + 1;
                incs.push((i(ix), v(r + 1), e(c + 1)));
            }
        }
    }
    IncidenceHypergraph::build((1..=rows.len()).map(v).collect(), (1..=ne).map(e).collect(), incs, "matrix object")
}

/// The 4-cycle `v1 e1 v2 e2 v3 e3 v4 e4` with chord `e5 = {v1, v3}`.
pub fn chorded_square() -> IncidenceHypergraph {
    from_incidence_rows(&[&[1, 0, 0, 1, 1], &[1, 1, 0, 0, 0], &[0, 1, 1, 0, 1], &[0, 0, 1, 1, 0]])
}

/// Three vertices and two edges, with a doubled incidence between `v1` and `e2`.
pub fn parallel_incidences() -> IncidenceHypergraph {
    from_incidence_rows(&[&[1, 2], &[1, 1], &[1, 0]])
}

/// Named generator lookup, as used by the command line.
pub fn generator(name: &str) -> Option<Object> {
    let (base, arg) = match name.split_once('(') {
        Some((b, rest)) => (b, Some(rest.strip_suffix(')')?.trim().parse::<usize>().ok()?)),
        None => (name, None),
    };
    Some(match (base, arg) {
        ("vertex_unit_q", None) => Object::Quiver(vertex_unit_q()),
        ("edge_unit_q", None) => Object::Quiver(edge_unit_q()),
        ("vertex_unit_h", None) => Object::Hypergraph(vertex_unit_h()),
        ("vertex_unit_r", None) => Object::Incidence(vertex_unit_r()),
        ("edge_unit_r", None) => Object::Incidence(edge_unit_r()),
        ("incidence_unit_r", None) => Object::Incidence(incidence_unit_r()),
        ("path_q", Some(n)) => Object::Quiver(path_q(n)),
        ("cycle_q", Some(n)) if n >= 1 => Object::Quiver(cycle_q(n)),
        ("path_h", Some(n)) => Object::Hypergraph(path_h(n)),
        ("cycle_h", Some(n)) if n >= 1 => Object::Hypergraph(cycle_h(n)),
        ("n_edge_h", Some(n)) => Object::Hypergraph(n_edge_h(n)),
        ("n_edge_r", Some(n)) => Object::Incidence(n_edge_r(n)),
        ("path_r", Some(k)) => Object::Incidence(path_r(k)),
        ("cycle_r", Some(k)) if k >= 1 => Object::Incidence(cycle_r(k)),
        ("chorded_square", None) => Object::Incidence(chorded_square()),
        ("parallel_incidences", None) => Object::Incidence(parallel_incidences()),
        _ => return None,
    })
}

/// An object of any of the three categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Quiver(Quiver),
    Hypergraph(SetSystemHypergraph),
    Incidence(IncidenceHypergraph),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_path_sizes() {
        assert_eq!(path_r(0).counts(), (1, 0, 0));
        assert_eq!(path_r(1).counts(), (1, 1, 1));
        assert_eq!(path_r(2).counts(), (2, 1, 2));
        assert_eq!(path_r(4).counts(), (3, 2, 4));
        assert_eq!(path_r(1), incidence_unit_r_relabelled());
        assert!(path_r(3).validate().is_ok());
    }

    fn incidence_unit_r_relabelled() -> IncidenceHypergraph {
        IncidenceHypergraph::from_labels(&["v0"], &["e0"], &[("i0", "v0", "e0")]).unwrap()
    }

    #[test]
    fn path_ends_alternate() {
        let g = path_r(3);
        assert_eq!(g.port_of(&"i2".into()), Some(&Elem::atom("v1")));
        assert_eq!(g.attachment_of(&"i2".into()), Some(&Elem::atom("e1")));
        assert_eq!(path_r_ends(3).1, (false, Elem::atom("e1")));
        assert_eq!(path_r_ends(4).1, (true, Elem::atom("v2")));
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_r(3).counts(), (3, 3, 6));
        assert_eq!(cycle_h(2).all_endpoints(), &[vec![0, 1], vec![0, 1]]);
        assert_eq!(cycle_h(1).all_endpoints(), &[vec![0]]);
        assert_eq!(cycle_q(2).counts(), (2, 2));
    }

    #[test]
    fn named_lookup() {
        assert!(matches!(generator("path_r(2)"), Some(Object::Incidence(_))));
        assert!(generator("cycle_r(0)").is_none());
        assert!(generator("path_r(-1)").is_none());
        assert!(generator("bogus").is_none());
    }
}
