// Box product and box exponential of quivers.

use hyperbox::core::generators::{cycle_q, path_q};
use hyperbox::exponentials::{exp_box_q, Exponential};
use hyperbox::products::box_q;

/// (|V|, |E|) of the arc squared and of `[arc, directed digon]`.
pub fn run_example() -> ((usize, usize), (usize, usize)) {
    let arc = path_q(1);
    let square = box_q(&arc, &arc);
    let x = exp_box_q(&arc, &cycle_q(2));
    let c = x.carrier();
    for e in 0..c.edges().len() {
        println!("edge {} runs {} -> {}", c.edges().elem(e), c.vertices().elem(c.source(e)), c.vertices().elem(c.target(e)));
    }
    (square.counts(), x.carrier().counts())
}

fn main() {
    let (sq, x) = run_example();
    println!("arc box arc: {} vertices, {} edges", sq.0, sq.1);
    println!("[arc, digon]: {} vertices, {} edges", x.0, x.1);
}
