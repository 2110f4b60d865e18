//! A pseudo n-metric on connected n-uniform hypergraphs.
//!
//! An edge subset `P` is a connected component when any two of its edges
//! are linked by a chain of pairwise-intersecting edges; it connects a
//! vertex set `W` when `W` is contained in the union of its edges. The
//! distance of an n-tuple of vertices is zero on repeats and otherwise
//! the minimum cardinality of a connected component connecting the tuple.
//!
//! The minimum connected edge cover is found by exact search (iterative
//! deepening over the cardinality, connected subsets grown edge by edge
//! from the edges touching the tuple). That search is Steiner-hard, so a
//! capacity guard rejects more than 24 edges unless forced.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::axioms::MetricEvaluator;
use crate::error::{Error, Result};
use crate::linalg::Rng;

/// Edge-count capacity guard for the exact search.
pub const EDGE_CAPACITY: usize = 24;

/// An n-uniform hypergraph over string-labelled vertices.
///
/// Vertices are mapped to dense indices at construction; all output is in
/// the original labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    labels: Vec<String>,
    /// sorted vertex indices, one entry per edge; no duplicate edges
    edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    vertices: Vec<String>,
    edges: Vec<Vec<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, vertices: Vec<String>, edge_labels: &[Vec<String>]) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("hyperedge size must be at least 2"));
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::usage(format!("duplicate vertex label '{v}'")));
            }
        }
        let index_of = |label: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::usage(format!("unknown vertex '{label}'")))
        };
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(edge_labels.len());
        for e in edge_labels {
            let mut idx = BTreeSet::new();
            for label in e {
                idx.insert(index_of(label)?);
            }
            if idx.len() != n || e.len() != n {
                return Err(Error::usage(format!(
                    "edge {e:?} must contain exactly {n} distinct vertices"
                )));
            }
            let edge: Vec<usize> = idx.into_iter().collect();
            if edges.contains(&edge) {
                return Err(Error::usage(format!("duplicate edge {e:?}")));
            }
            edges.push(edge);
        }
        Ok(Hypergraph {
            n,
            labels: vertices,
            edges,
        })
    }

    /// The worked example: vertices 1..4 with edges {1,2,4}, {2,3,4},
    /// {1,3,4}.
    pub fn example_k4_minus_one_face() -> Hypergraph {
        let vs: Vec<String> = (1..=4).map(|v| v.to_string()).collect();
        let edges = vec![
            vec!["1".into(), "2".into(), "4".into()],
            vec!["2".into(), "3".into(), "4".into()],
            vec!["1".into(), "3".into(), "4".into()],
        ];
        Hypergraph::new(3, vs, &edges).expect("static example")
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::usage(format!("unknown vertex '{label}'")))
    }

    fn edges_intersect(&self, a: usize, b: usize) -> bool {
        // sorted-merge intersection test
        let (ea, eb) = (&self.edges[a], &self.edges[b]);
        let (mut i, mut j) = (0, 0);
        while i < ea.len() && j < eb.len() {
            match ea[i].cmp(&eb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Whether the edge subset `P` is a connected component: every pair of
    /// its edges is linked by a chain of pairwise-intersecting edges
    /// inside `P`. Checked by union-find over the intersection graph.
    pub fn is_connected_component(&self, p: &[usize]) -> Result<bool> {
        if p.is_empty() {
            return Err(Error::usage("edge subset must be nonempty"));
        }
        if p.iter().any(|&e| e >= self.edges.len()) {
            return Err(Error::usage("edge index out of range"));
        }
        let mut parent: Vec<usize> = (0..p.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if self.edges_intersect(p[i], p[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        Ok((1..p.len()).all(|i| find(&mut parent, i) == root))
    }

    /// Whether the whole edge set is one connected component covering
    /// every vertex.
    pub fn is_connected(&self) -> bool {
        if self.edges.is_empty() {
            return self.labels.is_empty();
        }
        let all: Vec<usize> = (0..self.edges.len()).collect();
        let component = self
            .is_connected_component(&all)
            .expect("nonempty by construction");
        let covered: BTreeSet<usize> = self.edges.iter().flatten().copied().collect();
        component && covered.len() == self.labels.len()
    }

    /// The hypergraph distance of an n-tuple of vertex labels, with the
    /// default edge-capacity guard.
    pub fn distance(&self, tuple: &[&str]) -> Result<u32> {
        if self.edges.len() > EDGE_CAPACITY {
            return Err(Error::Capacity(format!(
                "exact search is guarded at {EDGE_CAPACITY} edges (got {}); use the forced variant",
                self.edges.len()
            )));
        }
        self.distance_forced(tuple)
    }

    /// The hypergraph distance without the capacity guard.
    pub fn distance_forced(&self, tuple: &[&str]) -> Result<u32> {
        if tuple.len() != self.n {
            return Err(Error::usage(format!(
                "tuple must have {} vertices, got {}",
                self.n,
                tuple.len()
            )));
        }
        let indices: Vec<usize> = tuple
            .iter()
            .map(|l| self.vertex_index(l))
            .collect::<Result<_>>()?;
        self.distance_by_indices(&indices)
    }

    pub(crate) fn distance_by_indices(&self, indices: &[usize]) -> Result<u32> {
        let targets: BTreeSet<usize> = indices.iter().copied().collect();
        if targets.len() < indices.len() {
            return Ok(0); // repeated vertex
        }
        if !self.is_connected() {
            return Err(Error::DisconnectedHypergraph);
        }
        Ok(self.min_connected_cover(&targets))
    }

    /// Iterative deepening: smallest `p` admitting a connected subset of
    /// `p` edges whose union contains `targets`.
    fn min_connected_cover(&self, targets: &BTreeSet<usize>) -> u32 {
        let edge_count = self.edges.len();
        let target_list: Vec<usize> = targets.iter().copied().collect();
        let covers: Vec<u64> = (0..edge_count)
            .map(|e| {
                let mut mask = 0u64;
                for (t, &v) in target_list.iter().enumerate() {
                    if self.edges[e].binary_search(&v).is_ok() {
                        mask |= 1 << t;
                    }
                }
                mask
            })
            .collect();
        let full: u64 = (1 << target_list.len()) - 1;
        let adjacency: Vec<Vec<usize>> = (0..edge_count)
            .map(|a| {
                (0..edge_count)
                    .filter(|&b| b != a && self.edges_intersect(a, b))
                    .collect()
            })
            .collect();
        // every cover must contain an edge through the first target vertex
        let roots: Vec<usize> = (0..edge_count).filter(|&e| covers[e] & 1 != 0).collect();

        for limit in 1..=edge_count {
            let mut forbidden = vec![false; edge_count];
            for &root in &roots {
                let mut in_set = vec![false; edge_count];
                in_set[root] = true;
                if self.grow(
                    root,
                    covers[root],
                    1,
                    limit,
                    full,
                    &covers,
                    &adjacency,
                    &mut in_set,
                    &forbidden,
                ) {
                    return limit as u32;
                }
                forbidden[root] = true;
            }
        }
        // connected hypergraph: E itself always connects the tuple
        unreachable!("connected hypergraph must admit a cover");
    }

    /// Depth-first growth of connected edge subsets. Each subset is
    /// enumerated exactly once: candidates are tried in order and become
    /// forbidden for the remainder of their parent's subtree.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        _last: usize,
        covered: u64,
        size: usize,
        limit: usize,
        full: u64,
        covers: &[u64],
        adjacency: &[Vec<usize>],
        in_set: &mut Vec<bool>,
        forbidden: &[bool],
    ) -> bool {
        if covered == full {
            return true;
        }
        let uncovered = (full & !covered).count_ones() as usize;
        // each further edge adds at most n target vertices
        if size + uncovered.div_ceil(self.n) > limit {
            return false;
        }
        if size == limit {
            return false;
        }
        // candidates: edges adjacent to the current subset
        let mut candidates: Vec<usize> = Vec::new();
        for (e, &inside) in in_set.iter().enumerate() {
            if inside {
                for &nb in &adjacency[e] {
                    if !in_set[nb] && !forbidden[nb] && !candidates.contains(&nb) {
                        candidates.push(nb);
                    }
                }
            }
        }
        candidates.sort_unstable();
        let mut local_forbidden = forbidden.to_vec();
        for &c in &candidates {
            in_set[c] = true;
            if self.grow(
                c,
                covered | covers[c],
                size + 1,
                limit,
                full,
                covers,
                adjacency,
                in_set,
                &local_forbidden,
            ) {
                in_set[c] = false;
                return true;
            }
            in_set[c] = false;
            local_forbidden[c] = true;
        }
        false
    }

    /// Brute-force oracle: minimum over all nonempty edge subsets that are
    /// connected components covering the tuple. Exponential; guarded at 16
    /// edges. Used to validate the search.
    pub fn distance_brute_force(&self, tuple: &[&str]) -> Result<u32> {
        if self.edges.len() > 16 {
            return Err(Error::Capacity(
                "brute force enumerates all edge subsets; guarded at 16 edges".into(),
            ));
        }
        if tuple.len() != self.n {
            return Err(Error::usage(format!("tuple must have {} vertices", self.n)));
        }
        let indices: Vec<usize> = tuple
            .iter()
            .map(|l| self.vertex_index(l))
            .collect::<Result<_>>()?;
        let targets: BTreeSet<usize> = indices.iter().copied().collect();
        if targets.len() < indices.len() {
            return Ok(0);
        }
        if !self.is_connected() {
            return Err(Error::DisconnectedHypergraph);
        }
        let e = self.edges.len();
        let mut best = u32::MAX;
        for mask in 1u32..(1 << e) {
            let subset: Vec<usize> = (0..e).filter(|&i| mask & (1 << i) != 0).collect();
            if subset.len() as u32 >= best {
                continue;
            }
            let union: BTreeSet<usize> = subset
                .iter()
                .flat_map(|&i| self.edges[i].iter().copied())
                .collect();
            if targets.is_subset(&union) && self.is_connected_component(&subset)? {
                best = subset.len() as u32;
            }
        }
        Ok(best)
    }

    /// Margin of the sharper inequality
    /// `d(x) <= max_{i<j} (d(x with y at i) + d(x with y at j))`;
    /// nonnegative when it holds.
    pub fn sharper_inequality_margin(&self, tuple: &[&str], y: &str) -> Result<i64> {
        if tuple.len() != self.n {
            return Err(Error::usage(format!("tuple must have {} vertices", self.n)));
        }
        let base = self.distance(tuple)? as i64;
        let mut subs = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut t = tuple.to_vec();
            t[i] = y;
            subs.push(self.distance(&t)? as i64);
        }
        let mut best_pair = i64::MIN;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                best_pair = best_pair.max(subs[i] + subs[j]);
            }
        }
        Ok(best_pair - base)
    }
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;
    fn try_from(j: HypergraphJson) -> Result<Self> {
        Hypergraph::new(j.n, j.vertices, &j.edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> HypergraphJson {
        HypergraphJson {
            n: h.n,
            vertices: h.labels.clone(),
            edges: h
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| h.labels[v].clone()).collect())
                .collect(),
        }
    }
}

/// [`MetricEvaluator`] over vertex labels, for the generic harness and the
/// CLI.
#[derive(Debug, Clone)]
pub struct HypergraphMetric {
    graph: Hypergraph,
    label: String,
}

impl HypergraphMetric {
    pub fn new(graph: Hypergraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::DisconnectedHypergraph);
        }
        let label = format!(
            "hypergraph(n={}, |V|={}, |E|={})",
            graph.arity(),
            graph.vertex_count(),
            graph.edge_count()
        );
        Ok(HypergraphMetric { graph, label })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }
}

impl MetricEvaluator for HypergraphMetric {
    type Point = String;

    fn arity(&self) -> usize {
        self.graph.arity()
    }

    fn evaluate(&self, tuple: &[String]) -> Result<f64> {
        let refs: Vec<&str> = tuple.iter().map(|s| s.as_str()).collect();
        Ok(self.graph.distance(&refs)? as f64)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// Outcome of the exhaustive axiom verification on one hypergraph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypergraphAxiomReport {
    pub vertices: usize,
    pub edges: usize,
    pub tuples_checked: u64,
    pub simplicial_checked: u64,
    pub passed: bool,
    pub first_violation: Option<String>,
}

/// Exhaustively verifies the three axioms over every tuple in `V^n` and
/// every substitution point `y`. Distances are memoized per vertex set, so
/// this is feasible for the small random instances used in verification.
pub fn verify_axioms_exhaustive(graph: &Hypergraph) -> Result<HypergraphAxiomReport> {
    if !graph.is_connected() {
        return Err(Error::DisconnectedHypergraph);
    }
    let n = graph.arity();
    let v = graph.vertex_count();
    let mut memo: std::collections::HashMap<Vec<usize>, u32> = std::collections::HashMap::new();
    let mut eval = |indices: &[usize]| -> Result<u32> {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        if set.len() < indices.len() {
            return Ok(0);
        }
        let key: Vec<usize> = set.into_iter().collect();
        if let Some(&d) = memo.get(&key) {
            return Ok(d);
        }
        let d = graph.distance_by_indices(indices)?;
        memo.insert(key, d);
        Ok(d)
    };

    let mut tuples_checked = 0u64;
    let mut simplicial_checked = 0u64;
    let mut first_violation = None;

    let mut tuple = vec![0usize; n];
    'outer: loop {
        tuples_checked += 1;
        let d = eval(&tuple)?;
        // (i) semidefiniteness
        let distinct: BTreeSet<usize> = tuple.iter().copied().collect();
        if distinct.len() < n && d != 0 {
            first_violation = Some(format!("semidefiniteness failed on {tuple:?}"));
            break 'outer;
        }
        if d >= 1 && distinct.len() == n {
            // d >= 1 for distinct tuples; d == 1 iff the set is an edge
            let key: Vec<usize> = distinct.iter().copied().collect();
            let is_edge = graph.edges.contains(&key);
            if (d == 1) != is_edge {
                first_violation = Some(format!(
                    "d = {d} but edge membership = {is_edge} on {tuple:?}"
                ));
                break 'outer;
            }
        }
        // (ii) symmetry: the distance factors through the vertex set, so
        // check one nontrivial permutation (rotation) explicitly
        let mut rotated = tuple.clone();
        rotated.rotate_left(1);
        if eval(&rotated)? != d {
            first_violation = Some(format!("symmetry failed on {tuple:?}"));
            break 'outer;
        }
        // (iii) simplicial inequality against every y
        for y in 0..v {
            let mut rhs = 0u64;
            for i in 0..n {
                let saved = std::mem::replace(&mut tuple[i], y);
                rhs += eval(&tuple)? as u64;
                tuple[i] = saved;
            }
            simplicial_checked += 1;
            if (d as u64) > rhs {
                first_violation = Some(format!(
                    "simplicial failed on {tuple:?} with y = {y}: {d} > {rhs}"
                ));
                break 'outer;
            }
        }
        // odometer over V^n
        let mut pos = 0;
        loop {
            if pos == n {
                break 'outer;
            }
            tuple[pos] += 1;
            if tuple[pos] < v {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }

    Ok(HypergraphAxiomReport {
        vertices: v,
        edges: graph.edge_count(),
        tuples_checked,
        simplicial_checked,
        passed: first_violation.is_none(),
        first_violation,
    })
}

/// Draws a random connected n-uniform hypergraph: a covering chain of
/// edges first (each new edge reuses one covered vertex), then extra
/// random distinct edges.
pub fn random_connected(
    rng: &mut Rng,
    n: usize,
    num_vertices: usize,
    extra_edges: usize,
) -> Result<Hypergraph> {
    if num_vertices < n {
        return Err(Error::usage("need at least n vertices"));
    }
    let labels: Vec<String> = (1..=num_vertices).map(|v| v.to_string()).collect();
    let mut order: Vec<usize> = rng.next_permutation(num_vertices);
    let mut covered: Vec<usize> = order.drain(..n).collect();
    let mut edges: Vec<Vec<usize>> = vec![{
        let mut e = covered.clone();
        e.sort_unstable();
        e
    }];
    while !order.is_empty() {
        let take = (n - 1).min(order.len());
        let mut e: Vec<usize> = order.drain(..take).collect();
        // link to the covered part through one old vertex, pad if short
        while e.len() < n {
            let pick = covered[rng.next_below(covered.len() as u64) as usize];
            if !e.contains(&pick) {
                e.push(pick);
            }
        }
        let fresh: Vec<usize> = e.iter().copied().filter(|v| !covered.contains(v)).collect();
        covered.extend(fresh);
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let target = edges.len() + extra_edges;
    let mut attempts = 0;
    while edges.len() < target && attempts < 200 {
        attempts += 1;
        let perm = rng.next_permutation(num_vertices);
        let mut e: Vec<usize> = perm[..n].to_vec();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let edge_labels: Vec<Vec<String>> = edges
        .iter()
        .map(|e| e.iter().map(|&v| labels[v].clone()).collect())
        .collect();
    Hypergraph::new(n, labels, &edge_labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_distances_match_worked_values() {
        let h = Hypergraph::example_k4_minus_one_face();
        assert!(h.is_connected());
        assert_eq!(h.distance(&["1", "2", "4"]).unwrap(), 1);
        assert_eq!(h.distance(&["2", "3", "4"]).unwrap(), 1);
        assert_eq!(h.distance(&["1", "3", "4"]).unwrap(), 1);
        assert_eq!(h.distance(&["1", "2", "3"]).unwrap(), 2);
    }

    #[test]
    fn duplicate_vertices_give_zero() {
        let h = Hypergraph::example_k4_minus_one_face();
        assert_eq!(h.distance(&["2", "2", "3"]).unwrap(), 0);
    }

    #[test]
    fn unknown_vertex_is_usage_error() {
        let h = Hypergraph::example_k4_minus_one_face();
        assert!(matches!(h.distance(&["1", "2", "9"]), Err(Error::Usage(_))));
    }

    #[test]
    fn single_edge_is_connected_component() {
        let h = Hypergraph::example_k4_minus_one_face();
        assert!(h.is_connected_component(&[0]).unwrap());
        assert!(h.is_connected_component(&[0, 1]).unwrap());
        assert!(h.is_connected_component(&[]).is_err());
    }

    #[test]
    fn disjoint_edges_are_not_connected() {
        let labels: Vec<String> = (1..=6).map(|v| v.to_string()).collect();
        let edges = vec![
            vec!["1".to_string(), "2".into(), "3".into()],
            vec!["4".to_string(), "5".into(), "6".into()],
        ];
        let h = Hypergraph::new(3, labels, &edges).unwrap();
        assert!(!h.is_connected_component(&[0, 1]).unwrap());
        assert!(!h.is_connected());
        assert!(matches!(
            h.distance(&["1", "2", "4"]),
            Err(Error::DisconnectedHypergraph)
        ));
    }

    #[test]
    fn isolated_vertex_breaks_connectivity() {
        let labels: Vec<String> = (1..=5).map(|v| v.to_string()).collect();
        let edges = vec![
            vec!["1".to_string(), "2".into(), "3".into()],
            vec!["2".to_string(), "3".into(), "4".into()],
        ];
        let h = Hypergraph::new(3, labels, &edges).unwrap();
        assert!(!h.is_connected());
    }

    #[test]
    fn empty_edge_set_with_vertices_is_disconnected() {
        let h = Hypergraph::new(3, vec!["1".into(), "2".into(), "3".into()], &[]).unwrap();
        assert!(!h.is_connected());
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        let labels: Vec<String> = (1..=4).map(|v| v.to_string()).collect();
        // wrong size
        assert!(Hypergraph::new(3, labels.clone(), &[vec!["1".into(), "2".into()]]).is_err());
        // repeated vertex inside an edge
        assert!(Hypergraph::new(
            3,
            labels.clone(),
            &[vec!["1".into(), "1".into(), "2".into()]]
        )
        .is_err());
        // duplicate edge (as a set)
        assert!(Hypergraph::new(
            3,
            labels,
            &[
                vec!["1".into(), "2".into(), "3".into()],
                vec!["3".into(), "2".into(), "1".into()]
            ]
        )
        .is_err());
    }

    #[test]
    fn search_agrees_with_brute_force() {
        let mut rng = Rng::new(101);
        for trial in 0..60 {
            let nv = 5 + rng.next_below(4) as usize;
            let extra = rng.next_below(5) as usize;
            let h = random_connected(&mut rng, 3, nv, extra).unwrap();
            if h.edge_count() > 10 {
                continue;
            }
            for _ in 0..10 {
                let tuple: Vec<String> = (0..3)
                    .map(|_| h.labels()[rng.next_below(nv as u64) as usize].clone())
                    .collect();
                let refs: Vec<&str> = tuple.iter().map(|s| s.as_str()).collect();
                let fast = h.distance(&refs).unwrap();
                let slow = h.distance_brute_force(&refs).unwrap();
                assert_eq!(fast, slow, "trial {trial}, tuple {tuple:?}");
            }
        }
    }

    #[test]
    fn adding_an_edge_never_increases_distance() {
        let mut rng = Rng::new(103);
        for _ in 0..30 {
            let h = random_connected(&mut rng, 3, 7, 2).unwrap();
            // add one more random (distinct) edge
            let json: serde_json::Value = serde_json::to_value(&h).unwrap();
            let mut edges: Vec<Vec<String>> =
                serde_json::from_value(json["edges"].clone()).unwrap();
            let perm = rng.next_permutation(7);
            let mut extra: Vec<String> = perm[..3].iter().map(|&v| (v + 1).to_string()).collect();
            extra.sort();
            let already = edges.iter().any(|e| {
                let mut s = e.clone();
                s.sort();
                s == extra
            });
            if already {
                continue;
            }
            edges.push(extra);
            let bigger = Hypergraph::new(3, h.labels().to_vec(), &edges).unwrap();
            for _ in 0..8 {
                let tuple: Vec<String> = (0..3)
                    .map(|_| h.labels()[rng.next_below(7) as usize].clone())
                    .collect();
                let refs: Vec<&str> = tuple.iter().map(|s| s.as_str()).collect();
                assert!(bigger.distance(&refs).unwrap() <= h.distance(&refs).unwrap());
            }
        }
    }

    #[test]
    fn sharper_inequality_on_example() {
        let h = Hypergraph::example_k4_minus_one_face();
        // d(4,2,3) + d(1,4,3) = 1 + 1 = 2 >= d(1,2,3) = 2
        let margin = h.sharper_inequality_margin(&["1", "2", "3"], "4").unwrap();
        assert_eq!(margin, 0);
    }

    #[test]
    fn sharper_inequality_with_y_in_tuple() {
        // y = x_1: the pair (1, i) reproduces d(tuple) + 0 and every other
        // pair is 0 + 0, so the max-pair bound is attained exactly.
        let h = Hypergraph::example_k4_minus_one_face();
        let tuple = ["1", "2", "3"];
        let margin = h.sharper_inequality_margin(&tuple, "1").unwrap();
        assert_eq!(margin, 0);
    }

    #[test]
    fn sharper_inequality_exhaustive_small_instances() {
        let mut rng = Rng::new(107);
        for _ in 0..10 {
            let h = random_connected(&mut rng, 3, 6, 2).unwrap();
            let v = h.vertex_count();
            for a in 0..v {
                for b in 0..v {
                    for c in 0..v {
                        for y in 0..v {
                            let tuple = [
                                h.labels()[a].as_str(),
                                h.labels()[b].as_str(),
                                h.labels()[c].as_str(),
                            ];
                            let margin = h
                                .sharper_inequality_margin(&tuple, h.labels()[y].as_str())
                                .unwrap();
                            assert!(margin >= 0, "margin {margin} on {tuple:?}, y={y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_axiom_verification_on_random_instances() {
        let mut rng = Rng::new(109);
        for _ in 0..20 {
            let nv = 4 + rng.next_below(5) as usize;
            let h = random_connected(&mut rng, 3, nv, 3).unwrap();
            assert!(
                h.edge_count() <= 12,
                "generator overshot: {}",
                h.edge_count()
            );
            let report = verify_axioms_exhaustive(&h).unwrap();
            assert!(report.passed, "{:?}", report.first_violation);
        }
    }

    #[test]
    fn json_round_trip_preserves_example() {
        let h = Hypergraph::example_k4_minus_one_face();
        let s = serde_json::to_string(&h).unwrap();
        let back: Hypergraph = serde_json::from_str(&s).unwrap();
        assert_eq!(h, back);
        assert_eq!(back.distance(&["1", "2", "3"]).unwrap(), 2);
    }

    #[test]
    fn capacity_guard_trips_above_24_edges() {
        let mut rng = Rng::new(113);
        let h = loop {
            let candidate = random_connected(&mut rng, 3, 12, 30).unwrap();
            if candidate.edge_count() > EDGE_CAPACITY {
                break candidate;
            }
        };
        assert!(matches!(
            h.distance(&["1", "2", "3"]),
            Err(Error::Capacity(_))
        ));
        assert!(h.distance_forced(&["1", "2", "3"]).is_ok());
    }
}
