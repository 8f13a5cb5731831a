// Each runnable example, checked against its expected output.

macro_rules! example {
    ($m:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $m {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(documents, "documents.rs");
example!(quiver_box, "quiver_box.rs");
example!(set_system_box, "set_system_box.rs");
example!(incidence_box, "incidence_box.rs");
example!(laplacian_product, "laplacian_product.rs");
example!(laplacian_exponential, "laplacian_exponential.rs");
example!(matrices, "matrices.rs");
example!(weak_walks, "weak_walks.rs");
example!(functors, "functors.rs");
example!(homs, "homs.rs");
example!(coherence, "coherence.rs");

use hyperbox::spectral::IntMatrix;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn documents_round_trip() {
    let text = documents::run_example().unwrap();
    assert!(text.starts_with("{\n  \"schema\": \"hyperbox/1\""));
}

#[test]
fn quiver_box_counts() {
    assert_eq!(quiver_box::run_example(), ((4, 4), (2, 2)));
}

#[test]
fn set_system_box_counts() {
    let s = set_system_box::run_example().unwrap();
    assert_eq!(s.product, (6, 5));
    assert_eq!(s.vertices, 4);
    // 9 admissible vertex subsets A of [P1,C2] times 4 edge maps
    assert_eq!(s.by_size.values().sum::<usize>(), 36);
    assert_eq!(s.by_size.get(&2), Some(&16));
    assert_eq!(s.after_del, 16);
    assert_eq!(s.multigraph_edges, s.after_del);
}

#[test]
fn incidence_box_counts() {
    let s = incidence_box::run_example().unwrap();
    assert_eq!(s.product, (6, 5, 12));
    assert_eq!(s.exponential, (2, 1, 2));
    assert_eq!(s.dual_counts, (1, 2, 2));
    assert!(s.dual_is_involution);
}

#[test]
fn laplacian_product_counts() {
    let s = laplacian_product::run_example().unwrap();
    assert_eq!(s.half_by_half, (2, 2, 4));
    assert_eq!(s.two_by_one, (3, 3, 7));
    assert_eq!(s.two_by_two, (5, 4, 12));
    assert!(s.triforce);
}

#[test]
fn laplacian_exponential_census() {
    let rows = laplacian_exponential::run_example().unwrap();
    assert!(rows.iter().all(|r| r.4));
    assert!(rows.contains(&("chorded square", 1, 10, 10, true)));
    assert!(rows.contains(&("parallel incidences", 1, 6, 6, true)));
}

#[test]
fn matrices_match_displays() {
    let s = matrices::run_example().unwrap();
    assert_eq!(s.chorded_h, m(&[&[1, 0, 0, 1, 1], &[1, 1, 0, 0, 0], &[0, 1, 1, 0, 1], &[0, 0, 1, 1, 0]]));
    assert_eq!(s.parallel_h, m(&[&[1, 2], &[1, 1], &[1, 0]]));
    assert_eq!((0..4).map(|j| s.chorded_l.get(j, j)).collect::<Vec<_>>(), [3, 2, 3, 2]);
    assert_eq!(s.parallel_d.get(0, 0), 3);
    // five incidences at v1, three of them in e2 through the doubled incidence
    assert_eq!(s.parallel_a.get(0, 0), -2);
}

#[test]
fn weak_walks_hold() {
    for r in weak_walks::run_example().unwrap() {
        assert!(r.passed(), "{:?}", r.checks);
        assert!(r.signs.iter().all(|s| s.signed_walks_hold));
    }
}

#[test]
fn functor_facts() {
    let s = functors::run_example().unwrap();
    assert!(s.undirect_strict && s.comparisons_iso && s.doubled_paths);
    assert!(s.upsilon_not_monoidal && s.undirected_images_agree);
}

#[test]
fn anchored_homs() {
    let s = homs::run_example().unwrap();
    // D(v1,v1) + degree-one walks to the neighbours: 3 backsteps, 3 monic
    assert_eq!((s.anchored, s.monic), (6, 3));
    assert!(s.adjunction);
}

#[test]
fn coherence_holds() {
    assert!(coherence::run_example().unwrap());
}
