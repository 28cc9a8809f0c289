//! Metrics checked against independent brute-force routes.

use golfnet::constructions::{brown_field, g8_adjacent, kg8, kkg8, phi, psi, G8_VERTICES};
use golfnet::generators::{hypercube, petersen, torus_grid};
use golfnet::graph::ORACLE_CAP;
use golfnet::{Diameter, Graph};
use num_rational::Ratio;

/// Shortest cycle by exhaustive simple-path search.
fn brute_force_girth(g: &Graph, limit: usize) -> Option<usize> {
    fn extend(g: &Graph, path: &mut Vec<usize>, limit: usize, best: &mut Option<usize>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            } else if w > start && !path.contains(&w) && path.len() < limit {
                path.push(w);
                extend(g, path, limit, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in 0..g.order() {
        extend(g, &mut vec![s], limit, &mut best);
    }
    best
}

#[test]
fn petersen_layers() {
    let g = petersen();
    let d = g.bfs_distances(0).unwrap();
    let count = |k| d.iter().filter(|&&x| x == Some(k)).count();
    assert_eq!((count(0), count(1), count(2)), (1, 3, 6));
    assert_eq!(g.aspl().unwrap().ratio(), Ratio::new(5, 3));
    assert_eq!(brute_force_girth(&g, 10), Some(5));
    assert_eq!(g.girth(), Some(5));
}

#[test]
fn hypercube_aspl_from_hamming_distance() {
    for n in 1..=6u32 {
        let g = hypercube(n).unwrap();
        let order = 1u64 << n;
        let total: u64 = (0..order)
            .flat_map(|u| (0..order).map(move |v| u64::from((u ^ v).count_ones())))
            .sum();
        let expected = Ratio::new(total, order * (order - 1));
        assert_eq!(g.aspl().unwrap().ratio(), expected, "n={n}");
    }
    assert_eq!(
        hypercube(3).unwrap().aspl().unwrap().ratio(),
        Ratio::new(12, 7)
    );
}

#[test]
fn torus_distances_from_coordinates() {
    let (m, n) = (5u32, 3u32);
    let g = torus_grid(m, n).unwrap();
    let coords = |v: usize| -> Vec<i64> {
        (0..n)
            .map(|i| ((v / (m as usize).pow(i)) % m as usize) as i64)
            .collect()
    };
    for src in [0usize, 17, 93] {
        let d = g.bfs_distances(src).unwrap();
        for (v, dv) in d.iter().enumerate() {
            let expect: i64 = coords(src)
                .iter()
                .zip(coords(v))
                .map(|(a, b)| {
                    let diff = (a - b).abs();
                    diff.min(i64::from(m) - diff)
                })
                .sum();
            assert_eq!(*dv, Some(expect as u32));
        }
    }
}

#[test]
fn brute_force_girth_agrees_on_small_graphs() {
    for g in [
        kg8(3).unwrap(),
        brown_field(3).unwrap(),
        torus_grid(4, 2).unwrap(),
    ] {
        assert_eq!(g.girth(), brute_force_girth(&g, 6));
    }
}

/// kg8 built straight from the product rule on `(k, (i, j))` labels.
fn kg8_by_rule(n: usize) -> Graph {
    Graph::from_predicate(8 * n, |x, y| {
        let (k1, u) = (x / 8, G8_VERTICES[x % 8]);
        let (k2, v) = (y / 8, G8_VERTICES[y % 8]);
        (k1 == k2 && g8_adjacent(u, v)) || (k1 < k2 && v == phi(u)) || (k2 < k1 && u == phi(v))
    })
    .unwrap()
}

fn kkg8_by_rule(a: usize, b: usize) -> Graph {
    let inner = kg8_by_rule(b);
    let width = 8 * b;
    Graph::from_predicate(a * width, |x, y| {
        let (l1, r1) = (x / width, x % width);
        let (l2, r2) = (y / width, y % width);
        if l1 == l2 {
            return inner.has_edge(r1, r2);
        }
        let ((r_lo, g_lo), (r_hi, g_hi)) = if l1 < l2 {
            ((r1 / 8, r1 % 8), (r2 / 8, r2 % 8))
        } else {
            ((r2 / 8, r2 % 8), (r1 / 8, r1 % 8))
        };
        r_lo == r_hi && (0..4).any(|l| psi(l, G8_VERTICES[g_lo]) == G8_VERTICES[g_hi])
    })
    .unwrap()
}

#[test]
fn products_match_their_defining_rule() {
    for n in 1..=6 {
        assert_eq!(kg8(n as u32).unwrap(), kg8_by_rule(n), "n={n}");
    }
    for (a, b) in [(2, 3), (3, 4), (4, 8)] {
        assert_eq!(
            kkg8(a as u32, b as u32).unwrap(),
            kkg8_by_rule(a, b),
            "({a},{b})"
        );
    }
}

#[test]
fn oracle_matches_bfs_on_constructions() {
    for g in [
        petersen(),
        kg8(4).unwrap(),
        brown_field(5).unwrap(),
        kkg8(2, 4).unwrap(),
    ] {
        let oracle = g.oracle_all_pairs(ORACLE_CAP).unwrap();
        for (s, row) in oracle.iter().enumerate() {
            assert_eq!(&g.bfs_distances(s).unwrap(), row);
        }
        let max = oracle.iter().flatten().flatten().max().copied().unwrap();
        assert_eq!(g.diameter().unwrap(), Diameter::Finite(max));
        let sum: u64 = oracle
            .iter()
            .flatten()
            .flatten()
            .map(|&d| u64::from(d))
            .sum();
        assert_eq!(g.aspl().unwrap().numerator, sum);
    }
    let kg = kg8(4).unwrap().oracle_all_pairs(ORACLE_CAP).unwrap();
    assert_eq!(kg.iter().flatten().flatten().max(), Some(&2));
}

#[test]
fn brown_low_degree_vertices_are_isotropic() {
    use golfnet::algebra::{Coordinates, FiniteField};
    for q in [3u32, 4, 5, 7, 8, 9] {
        let f = FiniteField::new(q).unwrap();
        let pts = f.projective_points();
        let g = brown_field(q).unwrap();
        for (v, p) in pts.iter().enumerate() {
            let isotropic = f.dot3(p, p).unwrap() == 0;
            let expect = if isotropic { q } else { q + 1 };
            assert_eq!(g.degree(v), expect as usize, "q={q} v={v}");
        }
    }
}
