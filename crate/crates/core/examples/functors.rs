// Functors between the categories and the comparison maps that make them monoidal.

use hyperbox::core::generators::{incidence_unit_r, path_h, path_q, path_r};
use hyperbox::functors::{bipartite_incidence, psi_bipartite, psi_digraph, u_bipartite, undirect};
use hyperbox::homsearch::is_isomorphic;
use hyperbox::products::{box_h, box_q, laplacian_product};

pub struct Summary {
    pub undirect_strict: bool,
    pub comparisons_iso: bool,
    pub doubled_paths: bool,
    pub upsilon_not_monoidal: bool,
    pub undirected_images_agree: bool,
}

pub fn run_example() -> hyperbox::Result<Summary> {
    let arc = path_q(1);
    let one = incidence_unit_r();
    let lhs = bipartite_incidence(&laplacian_product(&one, &one));
    let rhs = box_q(&bipartite_incidence(&one), &bipartite_incidence(&one));
    Ok(Summary {
        undirect_strict: undirect(&box_q(&arc, &arc)) == box_h(&undirect(&arc), &undirect(&arc)),
        comparisons_iso: psi_digraph(&path_h(1), &path_h(2))?.is_iso()
            && psi_bipartite(&path_r(2), &path_r(1)).is_iso(),
        doubled_paths: (1..=6).all(|n| is_isomorphic(&u_bipartite(&path_r(n)), &path_h(n))),
        upsilon_not_monoidal: !is_isomorphic(&lhs, &rhs),
        undirected_images_agree: is_isomorphic(&undirect(&lhs), &undirect(&rhs)),
    })
}

fn main() -> hyperbox::Result<()> {
    let s = run_example()?;
    println!("U is strict on the arc: {}", s.undirect_strict);
    println!("comparison maps are isomorphisms: {}", s.comparisons_iso);
    println!("bipartite graph of an incidence path is a path: {}", s.doubled_paths);
    println!("bipartite quiver breaks the product: {}", s.upsilon_not_monoidal);
    println!("after undirecting it agrees: {}", s.undirected_images_agree);
    Ok(())
}
