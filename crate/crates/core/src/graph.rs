//! Immutable simple undirected graphs and exact hop-count metrics.
//!
//! Vertices are the contiguous ids `0..order`. Every metric is computed
//! exactly: distances are hop counts and the average shortest path length
//! is kept as a (sum, pair-count) rational.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{input, Error, Result};
use crate::scalar;

/// Largest order accepted by [`Graph::oracle_all_pairs`] unless a cap is given.
pub const ORACLE_CAP: usize = 512;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.num_edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate pairs (in
    /// either orientation) collapse to one edge.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return input("graph order must be at least 1");
        }
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return input(format!("edge ({u}, {v}) out of range for order {order}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds a graph on `order` vertices joining every pair `u < v` for
    /// which `adjacent(u, v)` holds. The predicate is only asked about
    /// unordered pairs once.
    pub fn from_predicate<F>(order: usize, adjacent: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        if order == 0 {
            return input("graph order must be at least 1");
        }
        let upper: Vec<Vec<usize>> = (0..order)
            .into_par_iter()
            .map(|u| ((u + 1)..order).filter(|&v| adjacent(u, v)).collect())
            .collect();
        let mut adj = vec![Vec::new(); order];
        for (u, list) in upper.into_iter().enumerate() {
            for v in list {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return input("relabeling must cover every vertex");
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return input("relabeling is not a permutation");
            }
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        if source >= self.order() {
            return input(format!(
                "source {source} out of range for order {}",
                self.order()
            ));
        }
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = Vec::with_capacity(self.order());
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(dist
            .into_iter()
            .map(|d| (d != u32::MAX).then_some(d))
            .collect())
    }

    fn bfs_into(&self, source: usize, dist: &mut [u32], queue: &mut Vec<usize>) {
        dist.fill(u32::MAX);
        queue.clear();
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push(w);
                }
            }
        }
    }

    /// Per-source eccentricity and distance sum, or `None` when some vertex
    /// is unreachable from that source.
    fn source_summaries(&self) -> Vec<Option<(u32, u64)>> {
        let n = self.order();
        (0..n)
            .into_par_iter()
            .map_init(
                || (vec![u32::MAX; n], Vec::with_capacity(n)),
                |(dist, queue), s| {
                    self.bfs_into(s, dist, queue);
                    if queue.len() < n {
                        return None;
                    }
                    let ecc = dist.iter().copied().max().unwrap_or(0);
                    let sum = dist.iter().map(|&d| u64::from(d)).sum();
                    Some((ecc, sum))
                },
            )
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = Vec::new();
        self.bfs_into(0, &mut dist, &mut queue);
        queue.len() == self.order()
    }

    /// Largest hop distance over all pairs.
    pub fn diameter(&self) -> Result<Diameter> {
        if self.order() < 2 {
            return input("diameter needs at least two vertices");
        }
        let mut diam = 0;
        for summary in self.source_summaries() {
            match summary {
                Some((ecc, _)) => diam = diam.max(ecc),
                None => return Ok(Diameter::Disconnected),
            }
        }
        Ok(Diameter::Finite(diam))
    }

    /// Exact average shortest path length over ordered pairs.
    pub fn aspl(&self) -> Result<Aspl> {
        let n = self.order();
        if n < 2 {
            return input("ASPL needs at least two vertices");
        }
        let mut total = 0u64;
        for summary in self.source_summaries() {
            match summary {
                Some((_, sum)) => total += sum,
                None => return Err(Error::Disconnected),
            }
        }
        Ok(Aspl::new(total, (n as u64) * (n as u64 - 1)))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut histogram = BTreeMap::new();
        for list in &self.adj {
            *histogram.entry(list.len()).or_insert(0) += 1;
        }
        let min = histogram.keys().next().copied().unwrap_or(0);
        let max = histogram.keys().next_back().copied().unwrap_or(0);
        DegreeStats {
            min,
            max,
            is_regular: min == max,
            histogram,
        }
    }

    /// Length of the shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        (0..n)
            .into_par_iter()
            .map_init(
                || {
                    (
                        vec![u32::MAX; n],
                        vec![usize::MAX; n],
                        Vec::with_capacity(n),
                    )
                },
                |(dist, parent, queue), root| {
                    dist.fill(u32::MAX);
                    queue.clear();
                    dist[root] = 0;
                    parent[root] = usize::MAX;
                    queue.push(root);
                    let mut best = u32::MAX;
                    let mut head = 0;
                    while head < queue.len() {
                        let u = queue[head];
                        head += 1;
                        // no shorter cycle through root can be found past this layer
                        if 2 * dist[u] >= best {
                            break;
                        }
                        for &w in &self.adj[u] {
                            if dist[w] == u32::MAX {
                                dist[w] = dist[u] + 1;
                                parent[w] = u;
                                queue.push(w);
                            } else if parent[u] != w {
                                best = best.min(dist[u] + dist[w] + 1);
                            }
                        }
                    }
                    best
                },
            )
            .min()
            .filter(|&g| g != u32::MAX)
            .map(|g| g as usize)
    }

    /// All-pairs distances by Floyd–Warshall relaxation. Independent of the
    /// BFS path and only meant for small verification instances.
    pub fn oracle_all_pairs(&self, cap: usize) -> Result<Vec<Vec<Option<u32>>>> {
        let n = self.order();
        if n > cap {
            return Err(Error::OracleCap { order: n, cap });
        }
        const INF: u32 = u32::MAX / 2;
        let mut d = vec![vec![INF; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
            for &v in &self.adj[u] {
                row[v] = 1;
            }
        }
        for k in 0..n {
            let via = d[k].clone();
            for row in d.iter_mut() {
                let dik = row[k];
                if dik == INF {
                    continue;
                }
                for (dij, &dkj) in row.iter_mut().zip(&via) {
                    let cand = dik + dkj;
                    if cand < *dij {
                        *dij = cand;
                    }
                }
            }
        }
        Ok(d.into_iter()
            .map(|row| row.into_iter().map(|x| (x < INF).then_some(x)).collect())
            .collect())
    }

    /// Full metric report. Diameter and ASPL are absent when the graph is
    /// disconnected or has a single vertex.
    pub fn metrics(&self) -> MetricsReport {
        let n = self.order();
        let stats = self.degree_stats();
        let summaries = if n >= 2 {
            self.source_summaries()
        } else {
            Vec::new()
        };
        let connected = summaries.iter().all(Option::is_some);
        let (diameter, total) = if n >= 2 && connected {
            let diam = summaries.iter().flatten().map(|s| s.0).max().unwrap_or(0);
            let total = summaries.iter().flatten().map(|s| s.1).sum();
            (Some(diam), total)
        } else {
            (None, 0)
        };
        MetricsReport {
            order: n,
            min_degree: stats.min,
            max_degree: stats.max,
            is_regular: stats.is_regular,
            is_connected: connected,
            diameter,
            aspl_numerator: total,
            aspl_denominator: (n as u64) * (n as u64).saturating_sub(1),
            girth: self.girth(),
        }
    }
}

/// Outcome of a diameter computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

impl Diameter {
    pub fn hops(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

/// Average shortest path length as the raw ordered-pair distance sum over
/// the pair count `N(N-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aspl {
    pub numerator: u64,
    pub denominator: u64,
}

impl Aspl {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        Aspl {
            numerator,
            denominator,
        }
    }

    /// Reduced fraction.
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    /// Decimal rendering with `digits` significant digits, rounded half up.
    pub fn to_decimal(&self, digits: usize) -> String {
        scalar::render_significant(&self.numerator, &self.denominator, digits)
    }
}

impl fmt::Display for Aspl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.ratio();
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub is_regular: bool,
    /// degree -> number of vertices with that degree
    pub histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsReport {
    pub order: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_connected: bool,
    pub diameter: Option<u32>,
    pub aspl_numerator: u64,
    pub aspl_denominator: u64,
    pub girth: Option<usize>,
}

impl MetricsReport {
    pub fn aspl(&self) -> Option<Aspl> {
        self.diameter
            .map(|_| Aspl::new(self.aspl_numerator, self.aspl_denominator))
    }
}
