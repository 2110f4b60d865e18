//! The Hausdorff-style n-distance on finite subsets, and the proof that it
//! is not a pseudo n-metric.
//!
//! Given a pseudo n-metric on a finite point set, the n-ary Hausdorff
//! candidate on nonempty subsets is built inf-sup style:
//!
//! ```text
//! dist(x_1; A_2..A_n) = min { d(x_1..x_n) : x_j in A_j }
//! dist(A_1; A_2..A_n) = max { dist(x_1; A_2..A_n) : x_1 in A_1 }
//! d_H(A_1..A_n)       = max_j dist(A_j; the others)
//! ```
//!
//! For n = 2 this is the classical Hausdorff distance and satisfies the
//! triangle inequality. For n >= 3 it does not: there is a finite
//! pseudo 3-metric (verified exhaustively here) on which
//! `d_H(A_1,A_2,A_3) = 1` while every substitution of a fourth set gives
//! `0`, so the simplicial inequality fails by a margin of exactly 1.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exhaustive table of pseudo n-metric values on a finite labelled
/// point set. Values are stored for sorted index tuples only; lookups
/// sort, so permutation symmetry holds by construction, and tuples with a
/// repeated entry are zero by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TableJson", into = "TableJson")]
pub struct FiniteMetricTable {
    labels: Vec<String>,
    arity: usize,
    values: HashMap<Vec<usize>, f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TableJson {
    points: Vec<String>,
    n: usize,
    values: Vec<TableEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TableEntry {
    tuple: Vec<String>,
    value: f64,
}

impl FiniteMetricTable {
    pub fn new(labels: Vec<String>, arity: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        if labels.is_empty() {
            return Err(Error::usage("need at least one point"));
        }
        let mut seen = std::collections::BTreeSet::new();
        if labels.iter().any(|l| !seen.insert(l.clone())) {
            return Err(Error::usage("duplicate point labels"));
        }
        Ok(FiniteMetricTable {
            labels,
            arity,
            values: HashMap::new(),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::usage(format!("unknown point '{label}'")))
    }

    /// Sets the value on the (distinct) tuple; indices are sorted to the
    /// canonical form. Nonnegative finite values only.
    pub fn set(&mut self, indices: &[usize], value: f64) -> Result<()> {
        if indices.len() != self.arity {
            return Err(Error::usage(format!(
                "tuple must have {} entries",
                self.arity
            )));
        }
        if indices.iter().any(|&i| i >= self.labels.len()) {
            return Err(Error::usage("point index out of range"));
        }
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::usage("metric values must be finite and nonnegative"));
        }
        let mut key = indices.to_vec();
        key.sort_unstable();
        key.dedup();
        if key.len() != self.arity {
            return Err(Error::usage(
                "values on tuples with repeats are fixed at zero and cannot be set",
            ));
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        self.values.insert(sorted, value);
        Ok(())
    }

    /// Value on an arbitrary index tuple: zero on repeats, otherwise the
    /// stored value of the sorted tuple. Missing entries mean the table is
    /// not total for its point set.
    pub fn value(&self, indices: &[usize]) -> Result<f64> {
        if indices.len() != self.arity {
            return Err(Error::usage(format!(
                "tuple must have {} entries",
                self.arity
            )));
        }
        if indices.iter().any(|&i| i >= self.labels.len()) {
            return Err(Error::usage("point index out of range"));
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(0.0);
        }
        self.values.get(&sorted).copied().ok_or_else(|| {
            Error::ConstructionBug(format!("table has no value for tuple {indices:?}"))
        })
    }

    /// Whether every sorted distinct tuple has a value.
    pub fn is_total(&self) -> bool {
        let n = self.labels.len();
        let k = self.arity;
        if k > n {
            return true;
        }
        // count C(n, k)
        let mut expected = 1u64;
        for i in 0..k {
            expected = expected * (n - i) as u64 / (i + 1) as u64;
        }
        self.values.len() as u64 == expected
    }

    /// Exhaustively verifies the three pseudo n-metric axioms over the
    /// whole point set (all tuples, all substitution points). Exact
    /// comparisons; the table values are expected to be small integers.
    pub fn verify_pseudo_metric(&self) -> Result<MetricTableReport> {
        if !self.is_total() {
            return Err(Error::ConstructionBug("table is not total".into()));
        }
        let n = self.labels.len();
        let k = self.arity;
        let mut tuples = 0u64;
        let mut simplicial = 0u64;
        let mut tuple = vec![0usize; k];
        loop {
            tuples += 1;
            let d = self.value(&tuple)?;
            let mut sorted = tuple.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) && d != 0.0 {
                return Err(Error::ConstructionBug(format!(
                    "semidefiniteness fails on {tuple:?}"
                )));
            }
            // symmetry: compare against the canonical (sorted) ordering
            if d != self.value(&sorted)? {
                return Err(Error::ConstructionBug(format!(
                    "symmetry fails on {tuple:?}"
                )));
            }
            for y in 0..n {
                let mut rhs = 0.0;
                for i in 0..k {
                    let saved = std::mem::replace(&mut tuple[i], y);
                    rhs += self.value(&tuple)?;
                    tuple[i] = saved;
                }
                simplicial += 1;
                if d > rhs {
                    return Err(Error::ConstructionBug(format!(
                        "simplicial inequality fails on {tuple:?} with y = {y}: {d} > {rhs}"
                    )));
                }
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return Ok(MetricTableReport {
                        points: n,
                        tuples_checked: tuples,
                        simplicial_checked: simplicial,
                    });
                }
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Statistics of an exhaustive axiom verification over a value table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricTableReport {
    pub points: usize,
    pub tuples_checked: u64,
    pub simplicial_checked: u64,
}

impl TryFrom<TableJson> for FiniteMetricTable {
    type Error = Error;
    fn try_from(j: TableJson) -> Result<Self> {
        let mut table = FiniteMetricTable::new(j.points, j.n)?;
        for entry in &j.values {
            let indices: Vec<usize> = entry
                .tuple
                .iter()
                .map(|l| table.index_of(l))
                .collect::<Result<_>>()?;
            table.set(&indices, entry.value)?;
        }
        Ok(table)
    }
}

impl From<FiniteMetricTable> for TableJson {
    fn from(t: FiniteMetricTable) -> TableJson {
        let mut keys: Vec<&Vec<usize>> = t.values.keys().collect();
        keys.sort();
        TableJson {
            points: t.labels.clone(),
            n: t.arity,
            values: keys
                .into_iter()
                .map(|k| TableEntry {
                    tuple: k.iter().map(|&i| t.labels[i].clone()).collect(),
                    value: t.values[k],
                })
                .collect(),
        }
    }
}

fn check_family(table: &FiniteMetricTable, subsets: &[Vec<usize>]) -> Result<()> {
    if subsets.len() != table.arity() {
        return Err(Error::usage(format!(
            "need {} subsets, got {}",
            table.arity(),
            subsets.len()
        )));
    }
    for a in subsets {
        if a.is_empty() {
            return Err(Error::usage("subsets must be nonempty"));
        }
        if a.iter().any(|&i| i >= table.len()) {
            return Err(Error::usage("subset contains an out-of-range point"));
        }
    }
    Ok(())
}

/// `dist(x_1; A_2..A_n) = min over the product of the remaining subsets`.
pub fn dist_point(table: &FiniteMetricTable, x1: usize, rest: &[Vec<usize>]) -> Result<f64> {
    if rest.len() != table.arity() - 1 {
        return Err(Error::usage(format!(
            "need {} remaining subsets",
            table.arity() - 1
        )));
    }
    for a in rest {
        if a.is_empty() {
            return Err(Error::usage("subsets must be nonempty"));
        }
    }
    let mut indices = vec![x1; table.arity()];
    let mut choice = vec![0usize; rest.len()];
    let mut best = f64::INFINITY;
    loop {
        for (slot, &c) in choice.iter().enumerate() {
            indices[slot + 1] = rest[slot][c];
        }
        best = best.min(table.value(&indices)?);
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(best);
            }
            choice[pos] += 1;
            if choice[pos] < rest[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `dist(A_1; A_2..A_n) = max over x_1 in A_1 of dist(x_1; A_2..A_n)`.
pub fn dist_set(table: &FiniteMetricTable, a1: &[usize], rest: &[Vec<usize>]) -> Result<f64> {
    if a1.is_empty() {
        return Err(Error::usage("subsets must be nonempty"));
    }
    let mut worst = f64::NEG_INFINITY;
    for &x1 in a1 {
        worst = worst.max(dist_point(table, x1, rest)?);
    }
    Ok(worst)
}

/// The n-ary Hausdorff candidate `max_j dist(A_j; the other subsets)`.
pub fn d_hausdorff_n(table: &FiniteMetricTable, subsets: &[Vec<usize>]) -> Result<f64> {
    check_family(table, subsets)?;
    let mut value = f64::NEG_INFINITY;
    for j in 0..subsets.len() {
        let rest: Vec<Vec<usize>> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, a)| a.clone())
            .collect();
        value = value.max(dist_set(table, &subsets[j], &rest)?);
    }
    Ok(value)
}

/// Which of the four construction sets a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    W,
    X,
    Y,
    Z,
}

/// The counterexample table: `X = {w_1} | {x_1..x_N} | {y_1..y_N} |
/// {z_1..z_N}` with 0/1 values chosen so that the table is a genuine
/// pseudo 3-metric while its Hausdorff lift violates the simplicial
/// inequality.
///
/// Returns the table and the four subsets `A_1 = {w}, A_2 = {x_*},
/// A_3 = {y_*}, A_4 = {z_*}` as index sets.
pub fn build_counterexample(n_per_set: usize) -> Result<(FiniteMetricTable, [Vec<usize>; 4])> {
    if n_per_set < 2 {
        return Err(Error::usage("the construction needs N >= 2 points per set"));
    }
    let n = n_per_set;
    let mut labels = vec!["w1".to_string()];
    for j in 1..=n {
        labels.push(format!("x{j}"));
    }
    for k in 1..=n {
        labels.push(format!("y{k}"));
    }
    for l in 1..=n {
        labels.push(format!("z{l}"));
    }
    let mut table = FiniteMetricTable::new(labels, 3)?;

    // block and within-set index (1-based) of a point index
    let classify = |idx: usize| -> (Block, usize) {
        if idx == 0 {
            (Block::W, 1)
        } else if idx <= n {
            (Block::X, idx)
        } else if idx <= 2 * n {
            (Block::Y, idx - n)
        } else {
            (Block::Z, idx - 2 * n)
        }
    };

    let total = 1 + 3 * n;
    for a in 0..total {
        for b in (a + 1)..total {
            for c in (b + 1)..total {
                let (sa, ia) = classify(a);
                let (sb, ib) = classify(b);
                let (sc, ic) = classify(c);
                // sorted by index, so the block sequence is nondecreasing
                let value = match (sa, sb, sc) {
                    // all three in one set
                    (Block::X, Block::X, Block::X)
                    | (Block::Y, Block::Y, Block::Y)
                    | (Block::Z, Block::Z, Block::Z) => 0.0,
                    // w with a pair from one set
                    (Block::W, Block::X, Block::X)
                    | (Block::W, Block::Y, Block::Y)
                    | (Block::W, Block::Z, Block::Z) => 0.0,
                    // one point from each of three sets
                    (Block::W, Block::X, Block::Y) => 1.0,
                    (Block::W, Block::X, Block::Z) => bool_val(ib == ic),
                    (Block::W, Block::Y, Block::Z) => bool_val(ib == ic),
                    (Block::X, Block::Y, Block::Z) => bool_val(!(ia == ib && ib == ic)),
                    // two from one set, one from another
                    (Block::X, Block::X, Block::Y) => 1.0,
                    (Block::X, Block::X, Block::Z) => bool_val(ia == ic || ib == ic),
                    (Block::X, Block::Y, Block::Y) => 1.0,
                    (Block::X, Block::Z, Block::Z) => bool_val(ia == ib || ia == ic),
                    (Block::Y, Block::Y, Block::Z) => bool_val(ia == ic || ib == ic),
                    (Block::Y, Block::Z, Block::Z) => bool_val(ia == ib || ia == ic),
                    other => {
                        return Err(Error::ConstructionBug(format!(
                            "unexpected block combination {other:?}"
                        )))
                    }
                };
                table.set(&[a, b, c], value)?;
            }
        }
    }

    let a1 = vec![0usize];
    let a2: Vec<usize> = (1..=n).collect();
    let a3: Vec<usize> = (n + 1..=2 * n).collect();
    let a4: Vec<usize> = (2 * n + 1..=3 * n).collect();
    Ok((table, [a1, a2, a3, a4]))
}

fn bool_val(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

/// Result of [`verify_counterexample`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub n_per_set: usize,
    pub points: usize,
    /// exhaustive axiom statistics for the underlying table
    pub table_report: MetricTableReport,
    /// `d_H(A_1, A_2, A_3)` (expected 1)
    pub hausdorff_base: f64,
    /// the three values with `A_4` substituted (expected all 0)
    pub substituted: [f64; 3],
    /// `sum(substituted) - hausdorff_base` (expected exactly -1)
    pub violation_margin: f64,
}

/// Builds the counterexample for `N in [2, 4]`, exhaustively verifies that
/// the table is a pseudo 3-metric, and confirms that its Hausdorff lift
/// violates the simplicial inequality with margin exactly -1.
pub fn verify_counterexample(n_per_set: usize) -> Result<CounterexampleReport> {
    if !(2..=4).contains(&n_per_set) {
        return Err(Error::usage(
            "exhaustive verification is guarded to N in [2, 4]",
        ));
    }
    let (table, [a1, a2, a3, a4]) = build_counterexample(n_per_set)?;
    let table_report = table.verify_pseudo_metric()?;

    let base = d_hausdorff_n(&table, &[a1.clone(), a2.clone(), a3.clone()])?;
    let substituted = [
        d_hausdorff_n(&table, &[a4.clone(), a2.clone(), a3.clone()])?,
        d_hausdorff_n(&table, &[a1.clone(), a4.clone(), a3.clone()])?,
        d_hausdorff_n(&table, &[a1, a2, a4])?,
    ];
    if base != 1.0 {
        return Err(Error::ConstructionBug(format!(
            "d_H(A1,A2,A3) = {base}, expected 1"
        )));
    }
    if substituted.iter().any(|&v| v != 0.0) {
        return Err(Error::ConstructionBug(format!(
            "substituted values {substituted:?}, expected all 0"
        )));
    }
    Ok(CounterexampleReport {
        n_per_set,
        points: table.len(),
        table_report,
        hausdorff_base: base,
        substituted,
        violation_margin: substituted.iter().sum::<f64>() - base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rng;

    /// Shortest-path completion of random weights: a genuine finite
    /// 2-metric for triangle-inequality tests of the classical Hausdorff
    /// distance.
    fn random_metric_2(rng: &mut Rng, points: usize) -> FiniteMetricTable {
        let labels: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
        let mut w = vec![vec![0.0; points]; points];
        for i in 0..points {
            for j in (i + 1)..points {
                let v = 0.1 + rng.next_f64();
                w[i][j] = v;
                w[j][i] = v;
            }
        }
        for k in 0..points {
            for i in 0..points {
                for j in 0..points {
                    if w[i][k] + w[k][j] < w[i][j] {
                        w[i][j] = w[i][k] + w[k][j];
                    }
                }
            }
        }
        let mut table = FiniteMetricTable::new(labels, 2).unwrap();
        for i in 0..points {
            for j in (i + 1)..points {
                table.set(&[i, j], w[i][j]).unwrap();
            }
        }
        table
    }

    #[test]
    fn value_is_zero_on_repeats_and_symmetric() {
        let mut t = FiniteMetricTable::new(vec!["a".into(), "b".into(), "c".into()], 3).unwrap();
        t.set(&[2, 0, 1], 5.0).unwrap();
        assert_eq!(t.value(&[0, 1, 2]).unwrap(), 5.0);
        assert_eq!(t.value(&[2, 1, 0]).unwrap(), 5.0);
        assert_eq!(t.value(&[1, 1, 2]).unwrap(), 0.0);
    }

    #[test]
    fn set_rejects_repeated_indices() {
        let mut t = FiniteMetricTable::new(vec!["a".into(), "b".into(), "c".into()], 3).unwrap();
        assert!(t.set(&[0, 0, 1], 1.0).is_err());
    }

    #[test]
    fn dist_point_zero_when_x1_reachable_in_rest() {
        let (table, [_, a2, a3, _]) = build_counterexample(2).unwrap();
        // x1 in A2: picking x1 from A2 forces a repeat, so the min is 0
        let x1 = a2[0];
        let d = dist_point(&table, x1, &[a2.clone(), a3]).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn dist_point_counterexample_row() {
        // dist(w1; A2, A4) = min over j,l of d(w,x_j,z_l) = 0 (pick j != l)
        let (table, [a1, a2, _, a4]) = build_counterexample(2).unwrap();
        let d = dist_point(&table, a1[0], &[a2, a4]).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn dist_set_counterexample_value() {
        // dist(A2; A1, A3) = max_j min_{i,k} d(w_i, x_j, y_k) = 1
        let (table, [a1, a2, a3, _]) = build_counterexample(2).unwrap();
        let d = dist_set(&table, &a2, &[a1, a3]).unwrap();
        assert_eq!(d, 1.0);
    }

    #[test]
    fn dist_singletons_reduce_to_table_value() {
        let (table, [a1, a2, a3, _]) = build_counterexample(2).unwrap();
        let d = dist_point(&table, a1[0], &[vec![a2[0]], vec![a3[0]]]).unwrap();
        assert_eq!(d, table.value(&[a1[0], a2[0], a3[0]]).unwrap());
    }

    #[test]
    fn hausdorff_identical_sets_are_zero() {
        let (table, [_, a2, _, _]) = build_counterexample(2).unwrap();
        let d = d_hausdorff_n(&table, &[a2.clone(), a2.clone(), a2]).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn hausdorff_is_symmetric_in_subsets() {
        let (table, [a1, a2, a3, a4]) = build_counterexample(3).unwrap();
        let families = [
            [a1.clone(), a2.clone(), a3.clone()],
            [a3.clone(), a1.clone(), a2.clone()],
            [a2.clone(), a3.clone(), a1.clone()],
        ];
        let base = d_hausdorff_n(&table, &families[0]).unwrap();
        for fam in &families[1..] {
            assert_eq!(d_hausdorff_n(&table, fam).unwrap(), base);
        }
        let with4 = [a4.clone(), a2.clone(), a3.clone()];
        let with4_perm = [a2, a4, a3];
        assert_eq!(
            d_hausdorff_n(&table, &with4).unwrap(),
            d_hausdorff_n(&table, &with4_perm).unwrap()
        );
    }

    #[test]
    fn hausdorff_n2_is_classical_and_triangular() {
        let mut rng = Rng::new(211);
        for _ in 0..5 {
            let points = 4 + rng.next_below(4) as usize; // up to 7
            let table = random_metric_2(&mut rng, points);
            // collect all nonempty subsets
            let mut subsets: Vec<Vec<usize>> = Vec::new();
            for mask in 1u32..(1 << points) {
                subsets.push((0..points).filter(|&i| mask & (1 << i) != 0).collect());
            }
            // precompute pairwise d_H
            let count = subsets.len();
            let mut dh = vec![vec![0.0; count]; count];
            for a in 0..count {
                for b in 0..count {
                    dh[a][b] =
                        d_hausdorff_n(&table, &[subsets[a].clone(), subsets[b].clone()]).unwrap();
                }
            }
            for a in 0..count {
                for b in 0..count {
                    // classical formula: max of the two semidistances
                    let forward = dist_set(&table, &subsets[a], &[subsets[b].clone()]).unwrap();
                    let backward = dist_set(&table, &subsets[b], &[subsets[a].clone()]).unwrap();
                    assert_eq!(dh[a][b], forward.max(backward));
                    for c in 0..count {
                        assert!(
                            dh[a][c] <= dh[a][b] + dh[b][c] + 1e-12,
                            "triangle violated on subsets {a},{b},{c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn counterexample_table_values_match_worked_cases() {
        let (table, _) = build_counterexample(2).unwrap();
        let idx = |l: &str| table.index_of(l).unwrap();
        // d(w1, x1, y1) = 1
        assert_eq!(
            table.value(&[idx("w1"), idx("x1"), idx("y1")]).unwrap(),
            1.0
        );
        // d(x1, y1, z1) = 0 (j = k = l)
        assert_eq!(
            table.value(&[idx("x1"), idx("y1"), idx("z1")]).unwrap(),
            0.0
        );
        // d(x1, y2, z1) = 1
        assert_eq!(
            table.value(&[idx("x1"), idx("y2"), idx("z1")]).unwrap(),
            1.0
        );
        // d(x1, x2, y1) = 1
        assert_eq!(
            table.value(&[idx("x1"), idx("x2"), idx("y1")]).unwrap(),
            1.0
        );
        // d(w1, x2, z2) = 1 (j = l), d(w1, x1, z2) = 0
        assert_eq!(
            table.value(&[idx("w1"), idx("x2"), idx("z2")]).unwrap(),
            1.0
        );
        assert_eq!(
            table.value(&[idx("w1"), idx("x1"), idx("z2")]).unwrap(),
            0.0
        );
        // d(w1, y2, z2) = 1 (k = l)
        assert_eq!(
            table.value(&[idx("w1"), idx("y2"), idx("z2")]).unwrap(),
            1.0
        );
        // d(x1, x2, z2) = 1 (iota = l); d(x1, x2, z1) = 1 (j = l)
        assert_eq!(
            table.value(&[idx("x1"), idx("x2"), idx("z2")]).unwrap(),
            1.0
        );
        assert_eq!(
            table.value(&[idx("x1"), idx("x2"), idx("z1")]).unwrap(),
            1.0
        );
        // d(w1, x1, x2) = 0; d(x1, y1, y2) = 1
        assert_eq!(
            table.value(&[idx("w1"), idx("x1"), idx("x2")]).unwrap(),
            0.0
        );
        assert_eq!(
            table.value(&[idx("x1"), idx("y1"), idx("y2")]).unwrap(),
            1.0
        );
        // d(y1, z1, z2) = 1 (k = l); d(y2, z1, z3) = 0 for N >= 3
        assert_eq!(
            table.value(&[idx("y1"), idx("z1"), idx("z2")]).unwrap(),
            1.0
        );
    }

    #[test]
    fn counterexample_verifies_for_n2_through_n4() {
        for n in 2..=4 {
            let report = verify_counterexample(n).unwrap();
            assert_eq!(report.hausdorff_base, 1.0);
            assert_eq!(report.substituted, [0.0, 0.0, 0.0]);
            assert_eq!(report.violation_margin, -1.0);
            assert_eq!(report.points, 1 + 3 * n);
        }
    }

    #[test]
    fn counterexample_rejects_out_of_range_n() {
        assert!(build_counterexample(1).is_err());
        assert!(verify_counterexample(1).is_err());
        assert!(verify_counterexample(5).is_err());
    }

    #[test]
    fn table_json_round_trip() {
        let (table, _) = build_counterexample(2).unwrap();
        let s = serde_json::to_string(&table).unwrap();
        let back: FiniteMetricTable = serde_json::from_str(&s).unwrap();
        assert_eq!(table, back);
    }
}
