// Incidence box product, its exponential, and incidence duality.

use hyperbox::core::generators::{incidence_unit_r, n_edge_r, path_r};
use hyperbox::exponentials::{exp_box_r, Exponential};
use hyperbox::homsearch::is_isomorphic;
use hyperbox::products::{box_r, dual};

pub struct Summary {
    pub product: (usize, usize, usize),
    pub exponential: (usize, usize, usize),
    pub dual_is_involution: bool,
    pub dual_counts: (usize, usize, usize),
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let p1 = path_r(2);
    let x = exp_box_r(&incidence_unit_r(), &p1)?;
    for e in 0..x.carrier().edges().len() {
        println!("edge {} is the function {}", x.carrier().edges().elem(e), x.edge_index(e));
    }
    let d = dual(&p1);
    Ok(Summary {
        product: box_r(&n_edge_r(2), &n_edge_r(3)).counts(),
        exponential: x.carrier().counts(),
        dual_is_involution: dual(&d) == p1 && is_isomorphic(&d.dual(), &p1),
        dual_counts: d.counts(),
    })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("2-edge box 3-edge: {:?} (vertices, edges, incidences)", s.product);
    println!("[1-edge, P1]_V: {:?}", s.exponential);
    println!("dual of P1: {:?}, involution: {}", s.dual_counts, s.dual_is_involution);
    Ok(())
}
