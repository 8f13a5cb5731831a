// The Laplacian product and the duality isomorphisms it carries.

use hyperbox::core::generators::path_r;
use hyperbox::products::{laplacian_product, triforce};

pub struct Summary {
    pub two_by_two: (usize, usize, usize),
    pub two_by_one: (usize, usize, usize),
    pub half_by_half: (usize, usize, usize),
    pub triforce: bool,
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let (p1, half) = (path_r(2), path_r(1));
    let ladder = laplacian_product(&p1, &half);
    for i in ladder.incidences().iter() {
        println!("{i}: {} -- {}", ladder.port_of(i).unwrap(), ladder.attachment_of(i).unwrap());
    }
    Ok(Summary {
        two_by_two: laplacian_product(&p1, &p1).counts(),
        two_by_one: ladder.counts(),
        half_by_half: laplacian_product(&half, &half).counts(),
        triforce: triforce(&p1, &half)?.holds(),
    })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("P1 ■ P1: {:?}", s.two_by_two);
    println!("P1 ■ P1/2: {:?}", s.two_by_one);
    println!("P1/2 ■ P1/2: {:?}", s.half_by_half);
    println!("duality cells commute: {}", s.triforce);
    Ok(())
}
