// Set-system box product, box exponential, and its multigraph part.

use std::collections::BTreeMap;

use hyperbox::core::generators::{cycle_h, n_edge_h, path_h};
use hyperbox::exponentials::{exp_box_h, exp_box_m, Exponential};
use hyperbox::functors::del;
use hyperbox::products::box_h;

pub struct Summary {
    pub product: (usize, usize),
    pub vertices: usize,
    /// edge count by endpoint-set size
    pub by_size: BTreeMap<usize, usize>,
    pub after_del: usize,
    pub multigraph_edges: usize,
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let product = box_h(&n_edge_h(2), &n_edge_h(3)).counts();
    let x = exp_box_h(&path_h(1), &cycle_h(2))?;
    let c = x.carrier();
    let mut by_size = BTreeMap::new();
    for s in c.all_endpoints() {
        *by_size.entry(s.len()).or_insert(0) += 1;
    }
    Ok(Summary {
        product,
        vertices: c.vertices().len(),
        by_size,
        after_del: del(c).edges().len(),
        multigraph_edges: exp_box_m(&path_h(1), &cycle_h(2))?.carrier().edges().len(),
    })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("2-edge box 3-edge: {} vertices, {} edges", s.product.0, s.product.1);
    println!("[P1, C2]: {} vertices, edges by size {:?}", s.vertices, s.by_size);
    println!("after Del: {} edges; multigraph exponential: {} edges", s.after_del, s.multigraph_edges);
    Ok(())
}
