//! End-to-end runs through the public API, from lattice roots to rods.

use std::collections::BTreeSet;

use e8chain::{e8, helicoid, minsurf, polyhedra, polytope4d, torus};

#[test]
fn roots_to_cross_polytope() {
    let subsets = e8::decompose_240().unwrap();
    let union: BTreeSet<_> = subsets.iter().flatten().map(|p| p.to_vec8().unwrap()).collect();
    let shell: BTreeSet<_> = e8::enumerate_shell(2).unwrap().into_iter().map(|r| r.v).collect();
    assert_eq!(union, shell);
    let images: Vec<_> = e8::hopf_images(&subsets).unwrap().into_iter().map(Option::unwrap).collect();
    assert!(e8::is_cross_polytope(&images));
}

#[test]
fn heawood_map_to_240_cover() {
    let map = torus::build_torus_map(2, 1).unwrap();
    assert!(torus::incidence_check(&map, 2).unwrap());
    let cut = torus::handle_cut(&map).unwrap();
    let dual = torus::dualize(&torus::hexagon_refine(&cut.map).unwrap());
    assert_eq!(torus::counts(&dual), (24, 36, 14));

    let level0 = polyhedra::build_level(0).unwrap();
    assert!(dual.is_isomorphic_map(&level0.map));
    let (cover, _) = polytope4d::lift_cover(&level0, 10).unwrap();
    assert_eq!((cover.n_vertices, cover.edges.len()), (240, 480));
    assert!(cover.is_regular(4) && cover.is_connected());
}

#[test]
fn level_sequence_lifts() {
    for n in 0..2u8 {
        let (next, report) = polyhedra::next_in_sequence(n).unwrap();
        assert_eq!(next.n_vertices(), 24 << (n + 1));
        assert!(report.euler_holds && report.q_matching_holds);
    }
}

#[test]
fn geometric_and_combinatorial_240_differ() {
    let g = polytope4d::build_240_geometric().unwrap();
    let (cover, _) = polytope4d::lift_cover(&polyhedra::build_level(0).unwrap(), 10).unwrap();
    assert_eq!(g.polytope.n_vertices, cover.n_vertices);
    assert_eq!(g.polytope.girth(), Some(6));
    assert_eq!(cover.girth(), Some(4));
}

#[test]
fn gosset_axes_drive_rods() {
    for g in helicoid::reference_gosset() {
        let axis = helicoid::screw_from_gosset(g).axis;
        let rod = helicoid::generate_rod(axis, 1.0, None, 1, axis.l as usize + 1).unwrap();
        let pts = &rod.strands[0].points;
        // After L steps the strand has made d full turns.
        let (a, b) = (pts[0], pts[axis.l as usize]);
        assert!((a[0] - b[0]).abs() < 1e-9 && (a[1] - b[1]).abs() < 1e-9);
    }
}

#[test]
fn t0_links_bifurcation_and_band() {
    let t0 = minsurf::t0();
    let below = minsurf::catenoid_band_mesh(0.9 * t0, 64).unwrap();
    let above = minsurf::catenoid_band_mesh(1.5 * t0, 64).unwrap();
    assert!(minsurf::gauss_band_check(&below, t0).pass);
    assert!(!minsurf::gauss_band_check(&above, t0).pass);
    let crit = minsurf::critical_ratio();
    assert_eq!(minsurf::catenoid_solutions(1.0, 0.99 * crit).unwrap().len(), 2);
    assert!(minsurf::catenoid_solutions(1.0, 1.01 * crit).unwrap().is_empty());
}
