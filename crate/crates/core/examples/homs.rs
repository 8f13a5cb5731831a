// Anchored hom enumeration and the currying bijection.

use hyperbox::core::generators::{chorded_square, path_h, path_r};
use hyperbox::core::SortKind;
use hyperbox::exponentials::{check_adjunction, exp_box_h};
use hyperbox::homsearch::{count_homs, enumerate_homs, Anchors, HomSearch, SearchOptions};

pub struct Summary {
    pub anchored: usize,
    pub monic: u64,
    pub adjunction: bool,
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let (p, g) = (path_r(2), chorded_square());
    let anchors = Anchors::new().vertex("v0", "v1");
    let maps = enumerate_homs(&p, &g, &anchors)?;
    for m in &maps {
        println!("{}", m.to_elem());
    }
    assert_eq!(count_homs(&p, &g, &anchors)?, maps.len() as u64);
    let monic = p.count_with(&g, &SearchOptions::anchored(anchors).injective(SortKind::Incidence))?;
    let x = exp_box_h(&path_h(1), &path_h(1))?;
    Ok(Summary { anchored: maps.len(), monic, adjunction: check_adjunction(&x, &path_h(1))?.holds() })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("{} walks of length one from v1, {} incidence-monic", s.anchored, s.monic);
    println!("currying is a bijection: {}", s.adjunction);
    Ok(())
}
