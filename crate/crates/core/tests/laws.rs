use proptest::prelude::*;

use hyperbox::core::generators::Object;
use hyperbox::core::{IncidenceHypergraph, Orientation};
use hyperbox::document::{parse_document, to_json};
use hyperbox::functors::{u_bipartite, undirect};
use hyperbox::homsearch::{all_homs, count_homs, is_isomorphic, Anchors};
use hyperbox::products::{box_h, box_q, box_r, dual, laplacian_product};
use hyperbox::random::{self, Bounds};
use hyperbox::spectral::OrientedHypergraph;

fn small(seed: u64) -> IncidenceHypergraph {
    random::incidence_hypergraph(&mut random::rng(seed), Bounds::new(3, 3, 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(seed in any::<u64>()) {
        let g = small(seed);
        prop_assert_eq!(dual(&dual(&g)), g);
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let g = random::incidence_hypergraph(&mut r, Bounds::new(4, 4, 6));
        let o = random::orientation(&mut r, &g);
        let doc = parse_document(&to_json(&Object::Incidence(g.clone()), Some(&o))).unwrap();
        prop_assert_eq!(doc.object, Object::Incidence(g));
        prop_assert_eq!(doc.orientation, Some(o));
        let q = random::quiver(&mut r, 3, 4);
        prop_assert_eq!(parse_document(&to_json(&Object::Quiver(q.clone()), None)).unwrap().object, Object::Quiver(q));
    }

    #[test]
    fn product_sizes_multiply(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (small(a), small(b));
        let ((gv, ge, gi), (hv, he, hi)) = (g.counts(), h.counts());
        prop_assert_eq!(box_r(&g, &h).counts(), (gv * hv, ge * hv + gv * he, gi * hv + gv * hi));
        prop_assert_eq!(
            laplacian_product(&g, &h).counts(),
            (gv * hv + ge * he, ge * hv + gv * he, gi * hv + ge * hi + gi * he + gv * hi)
        );
    }

    #[test]
    fn products_commute_up_to_iso(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (small(a), small(b));
        prop_assert!(is_isomorphic(&laplacian_product(&g, &h), &laplacian_product(&h, &g)));
        let mut r = random::rng(a ^ b);
        let (p, q) = (random::quiver(&mut r, 2, 2), random::quiver(&mut r, 2, 2));
        prop_assert!(is_isomorphic(&box_q(&p, &q), &box_q(&q, &p)));
    }

    #[test]
    fn dual_moves_across_the_laplacian_product(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (small(a), small(b));
        let d = dual(&laplacian_product(&g, &h));
        prop_assert!(is_isomorphic(&d, &laplacian_product(&dual(&g), &h)));
        prop_assert!(is_isomorphic(&d, &laplacian_product(&g, &dual(&h))));
    }

    #[test]
    fn bipartite_graph_carries_laplacian_to_box(a in any::<u64>(), b in any::<u64>()) {
        let g = random::incidence_hypergraph(&mut random::rng(a), Bounds::new(2, 2, 3));
        let h = random::incidence_hypergraph(&mut random::rng(b), Bounds::new(2, 2, 3));
        prop_assert!(is_isomorphic(&u_bipartite(&laplacian_product(&g, &h)), &box_h(&u_bipartite(&g), &u_bipartite(&h))));
    }

    #[test]
    fn undirecting_is_strict(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let (p, q) = (random::quiver(&mut r, 3, 3), random::quiver(&mut r, 3, 3));
        prop_assert_eq!(undirect(&box_q(&p, &q)), box_h(&undirect(&p), &undirect(&q)));
    }

    #[test]
    fn laplacian_identity(seed in any::<u64>()) {
        let g = random::oriented(&mut random::rng(seed), Bounds::new(6, 6, 12));
        let h = g.incidence_matrix();
        let l = g.laplacian_matrix().unwrap();
        prop_assert_eq!(&l, &h.mul(&h.transpose()).unwrap());
        prop_assert_eq!(&l, &g.degree_matrix().unwrap().sub(&g.adjacency_matrix().unwrap()).unwrap());
        prop_assert_eq!(g.dual().incidence_matrix(), h.transpose());
        prop_assert_eq!(g.negated().laplacian_matrix().unwrap(), l);
    }

    #[test]
    fn anchors_partition_homs(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (small(a), small(b));
        prop_assume!(!g.vertices().is_empty());
        let x = g.vertices().elem(0).clone();
        let total = all_homs(&g, &h).len() as u64;
        let split: u64 = h.vertices().iter()
            .map(|y| count_homs(&g, &h, &Anchors::new().vertex(x.clone(), y.clone())).unwrap())
            .sum();
        prop_assert_eq!(split, total);
    }

    #[test]
    fn extroverted_is_all_plus(seed in any::<u64>()) {
        let g = small(seed);
        let plain = OrientedHypergraph::new(g.clone(), Orientation::all_plus(&g)).unwrap();
        prop_assert_eq!(plain.incidence_matrix(), OrientedHypergraph::extroverted(&g).incidence_matrix());
    }
}
