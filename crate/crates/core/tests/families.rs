//! Closed-form parameters of every family checked over parameter grids.

use std::collections::BTreeSet;

use golfnet::bounds::moore_ratio;
use golfnet::constructions::{
    kg8, kkg8, multiple_star_product, psi_permutations, star_product, Permutation, StarSpec,
};
use golfnet::edgelist::{emit_edge_list, parse_edge_list};
use golfnet::generators::{complete, cycle, de_bruijn_undirected, Family};
use golfnet::planner::{plan, realize_and_certify};
use golfnet::Diameter;
use num_rational::Ratio;

fn grid() -> Vec<Family> {
    let mut out = vec![Family::Petersen];
    out.extend((1..=10).map(|n| Family::Hypercube { n }));
    for m in 3..=7 {
        out.extend((1..=3).map(|n| Family::Torus { m, n }));
    }
    for t in 2..=5u32 {
        for n in 2..=5 {
            if t.pow(n) <= 1024 {
                out.push(Family::DeBruijn { t, n });
            }
        }
    }
    out.extend((2..=12).map(|n| Family::Complete { n }));
    out.extend((3..=15).map(|n| Family::Cycle { n }));
    out
}

#[test]
fn generators_match_closed_forms() {
    for family in grid() {
        let p = family.params();
        let g = family.build().unwrap();
        let m = g.metrics();
        assert_eq!(m.order, p.predicted_order, "{family:?}");
        assert!(m.is_connected, "{family:?}");
        let diam = m.diameter.unwrap();
        match family {
            Family::DeBruijn { n, .. } => {
                assert!(m.max_degree <= p.predicted_max_degree, "{family:?}");
                if n >= 3 {
                    assert_eq!(m.max_degree, p.predicted_max_degree, "{family:?}");
                }
                assert!(diam <= p.predicted_diameter, "{family:?}");
            }
            _ => {
                assert_eq!(m.max_degree, p.predicted_max_degree, "{family:?}");
                assert_eq!(diam, p.predicted_diameter, "{family:?}");
            }
        }
    }
}

#[test]
fn generators_are_deterministic() {
    for family in grid() {
        let a: Vec<_> = family.build().unwrap().edges().collect();
        let b: Vec<_> = family.build().unwrap().edges().collect();
        assert_eq!(a, b);
    }
}

#[test]
fn de_bruijn_large_instances() {
    let g = de_bruijn_undirected(10, 2).unwrap();
    assert_eq!(g.order(), 100);
    assert_eq!(g.diameter().unwrap(), Diameter::Finite(2));
    let g = de_bruijn_undirected(4, 8).unwrap();
    assert_eq!((g.order(), g.degree_stats().max), (65_536, 8));
}

#[test]
fn kg8_family() {
    for n in 1..=10u32 {
        let g = kg8(n).unwrap();
        let s = g.degree_stats();
        assert_eq!(g.order(), 8 * n as usize);
        assert!(s.is_regular && s.max == n as usize + 2, "n={n}");
        let d = g.diameter().unwrap();
        if n >= 3 {
            assert_eq!(d, Diameter::Finite(2), "n={n}");
        } else {
            // measured: G_8 itself has diameter 2, K_2 * G_8 needs 3 hops
            assert_eq!(d, Diameter::Finite(n + 1), "n={n}");
        }
    }
}

#[test]
fn kkg8_grid_and_degree_law() {
    for a in 2..=5u32 {
        for b in 3..=9u32 {
            let g = kkg8(a, b).unwrap();
            let s = g.degree_stats();
            assert_eq!(g.order(), (8 * a * b) as usize);
            assert!(
                s.is_regular && s.max == (4 * a + b - 2) as usize,
                "({a},{b})"
            );
            assert_eq!(g.diameter().unwrap(), Diameter::Finite(2), "({a},{b})");
        }
    }
    for b in 3..=6 {
        assert_eq!(kkg8(1, b).unwrap(), kg8(b).unwrap());
    }
}

#[test]
fn generic_products_reproduce_named_constructions() {
    let spec = golfnet::constructions::kg8_spec(4).unwrap();
    assert_eq!(
        star_product(&spec, &golfnet::constructions::g8()).unwrap(),
        kg8(4).unwrap()
    );
    let spec = golfnet::constructions::kkg8_spec(4, 8).unwrap();
    assert_eq!(
        multiple_star_product(&spec, &kg8(8).unwrap()).unwrap(),
        kkg8(4, 8).unwrap()
    );
    // single-level multiple product is the ordinary one
    let single =
        StarSpec::uniform(complete(3).unwrap(), vec![psi_permutations()[2].clone()]).unwrap();
    let g8 = golfnet::constructions::g8();
    assert_eq!(
        multiple_star_product(&single, &g8).unwrap(),
        star_product(&single, &g8).unwrap()
    );
}

#[test]
fn star_degree_law_on_cycle_fibres() {
    // arc-independent tables with distinct images per level
    let shifts: Vec<_> = (1..=3)
        .map(|s| Permutation::new((0..7).map(|v| (v + s) % 7).collect()).unwrap())
        .collect();
    let base = cycle(4).unwrap();
    let spec = StarSpec::uniform(base.clone(), shifts).unwrap();
    let fibre = cycle(7).unwrap();
    let g = multiple_star_product(&spec, &fibre).unwrap();
    for v in 0..g.order() {
        let (u, x) = (v / 7, v % 7);
        assert_eq!(g.degree(v), fibre.degree(x) + 3 * base.degree(u));
    }
}

#[test]
fn moore_ratio_inequality_grid() {
    for a in 2..=6u64 {
        for b in 3..=12u64 {
            let order = 8 * a * b;
            let delta = 4 * a + b - 2;
            let lhs = moore_ratio::<u64>(order, delta as u32, 2).unwrap();
            assert_eq!(lhs, Ratio::new(order, delta * delta + 1));
            let rhs = Ratio::new(8 * a * b, 8 * a * b + 16 * a * a + b * b);
            assert!(lhs >= rhs, "({a},{b})");
            if b == 4 * a {
                assert!(lhs > Ratio::new(1, 2), "({a},{b})");
            }
        }
    }
}

#[test]
fn every_plan_certifies() {
    let mut seen = BTreeSet::new();
    for order in (2..=512u64).step_by(3).chain([100, 256, 381, 32, 48]) {
        for delta in [2u64, 3, 5, 8, 12, 16, 22, 30] {
            for p in plan(order, delta).unwrap() {
                assert_eq!(p.predicted_order, order);
                assert!(p.predicted_max_degree <= delta);
                if seen.insert(p.family) {
                    let cert = realize_and_certify(&p).unwrap();
                    assert!(cert.verdict.pass(), "{p}: {:?}", cert.metrics);
                }
            }
        }
    }
    assert!(seen.len() > 50);
}

#[test]
fn regular_certified_graphs_meet_aspl_bound() {
    use golfnet::bounds::aspl_lower_bound;
    for p in plan(256, 22).unwrap().iter().chain(&plan(64, 10).unwrap()) {
        let cert = realize_and_certify(p).unwrap();
        let m = &cert.metrics;
        if m.is_regular && m.diameter == Some(2) {
            let bound = aspl_lower_bound::<u64>(m.order as u64, m.max_degree as u64).unwrap();
            assert_eq!(m.aspl().unwrap().ratio(), bound, "{p}");
        }
    }
}

#[test]
fn emitted_constructions_are_byte_stable() {
    for g in [
        kg8(5).unwrap(),
        kkg8(2, 3).unwrap(),
        golfnet::constructions::brown_ring(6).unwrap(),
    ] {
        let text = emit_edge_list(&g);
        let again = emit_edge_list(&parse_edge_list(&text, None).unwrap());
        assert_eq!(text, again);
    }
}
