// Graphviz renderings of the standard figures, built from `data/inputs`.
//
// `cargo run --example figures -- --write` refreshes `data/figures`; without
// the flag each rendering is compared to its committed copy.

use std::path::PathBuf;

use hyperbox::core::generators::Object;
use hyperbox::document::{read_document, to_dot};
use hyperbox::exponentials::{exp_box_h, exp_box_q, exp_box_r, exp_laplacian, Exponential};
use hyperbox::functors::{bipartite_incidence, u_bipartite};
use hyperbox::products::{box_h, box_q, box_r, dual, laplacian_product};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn input(name: &str) -> hyperbox::Result<Object> {
    Ok(read_document(&data_dir().join("inputs").join(format!("{name}.json")))?.object)
}

fn q(name: &str) -> hyperbox::Result<hyperbox::core::Quiver> {
    match input(name)? {
        Object::Quiver(x) => Ok(x),
        _ => Err(hyperbox::Error::Input(format!("{name} is not a quiver"))),
    }
}

fn h(name: &str) -> hyperbox::Result<hyperbox::core::SetSystemHypergraph> {
    match input(name)? {
        Object::Hypergraph(x) => Ok(x),
        _ => Err(hyperbox::Error::Input(format!("{name} is not a hypergraph"))),
    }
}

fn r(name: &str) -> hyperbox::Result<hyperbox::core::IncidenceHypergraph> {
    match input(name)? {
        Object::Incidence(x) => Ok(x),
        _ => Err(hyperbox::Error::Input(format!("{name} is not an incidence hypergraph"))),
    }
}

/// `(file stem, DOT text)` for every figure, in a fixed order.
pub fn run_example() -> hyperbox::Result<Vec<(String, String)>> {
    use Object::{Hypergraph as H, Incidence as R, Quiver as Q};
    let (one, p1, half) = (r("one_edge")?, r("p1")?, r("p_half")?);
    let objects = vec![
        ("edge_box_edge", H(box_h(&h("edge")?, &h("edge")?))),
        ("triangle_prism", H(box_h(&h("triangle")?, &h("edge")?))),
        ("ladder", H(box_h(&h("path_two")?, &h("edge")?))),
        ("chorded_square", R(r("chorded_square")?)),
        ("chorded_square_bipartite", H(u_bipartite(&r("chorded_square")?))),
        ("parallel_incidences", R(r("parallel_incidences")?)),
        ("arc_box_arc", Q(box_q(&q("arc")?, &q("arc")?))),
        ("exp_arc_directed_digon", Q(exp_box_q(&q("arc")?, &q("directed_digon")?).carrier().clone())),
        ("edge_box_three_edge", H(box_h(&h("edge")?, &h("three_edge")?))),
        ("exp_edge_digon", H(exp_box_h(&h("edge")?, &h("digon")?)?.carrier().clone())),
        ("incidence_edge_box_three_edge", R(box_r(&p1, &r("three_edge_r")?))),
        ("exp_one_edge_p1", R(exp_box_r(&one, &p1)?.carrier().clone())),
        ("dual_p1", R(dual(&p1))),
        ("laplacian_p1_p1", R(laplacian_product(&p1, &p1))),
        ("laplacian_p1_half", R(laplacian_product(&p1, &half))),
        ("laplacian_exp_half_p1", R(exp_laplacian(&half, &p1).carrier().clone())),
        ("upsilon_box_r_one_one", Q(bipartite_incidence(&box_r(&one, &one)))),
        ("upsilon_laplacian_one_one", Q(bipartite_incidence(&laplacian_product(&one, &one)))),
        ("upsilon_one_box_upsilon_one", Q(box_q(&bipartite_incidence(&one), &bipartite_incidence(&one)))),
        ("box_r_p1_p1", R(box_r(&p1, &p1))),
        ("box_r_p1_p1_bipartite", H(u_bipartite(&box_r(&p1, &p1)))),
        ("laplacian_p1_p1_bipartite", H(u_bipartite(&laplacian_product(&p1, &p1)))),
    ];
    Ok(objects.into_iter().map(|(n, o)| (n.to_string(), to_dot(&o, n))).collect())
}

fn main() -> hyperbox::Result<()> {
    let write = std::env::args().any(|a| a == "--write");
    let dir = data_dir().join("figures");
    let mut stale = 0;
    for (name, dot) in run_example()? {
        let path = dir.join(format!("{name}.dot"));
        if write {
            std::fs::write(&path, &dot).map_err(|e| hyperbox::Error::Input(e.to_string()))?;
            println!("wrote {}", path.display());
        } else if std::fs::read_to_string(&path).ok().as_deref() != Some(dot.as_str()) {
            println!("differs: {name}");
            stale += 1;
        }
    }
    if stale > 0 {
        std::process::exit(1);
    }
    Ok(())
}
