//! Metric-agnostic verification of the pseudo n-metric axioms.
//!
//! A pseudo n-metric assigns a real value to an n-tuple of points and must
//! be (i) zero whenever two tuple entries coincide, (ii) invariant under
//! permutations of the tuple, and (iii) bounded by the sum of the n values
//! obtained by substituting an arbitrary point `y` into each slot (the
//! simplicial inequality, the n-ary analogue of the triangle inequality).
//!
//! The checkers here work against the [`MetricEvaluator`] trait, so the same
//! code fuzzes complex Vandermonde products, Gram-determinant volumes,
//! manifold metrics and hypergraph distances. All comparisons are
//! scale-aware: an inequality `lhs <= rhs` passes when
//! `rhs - lhs >= -tol * max(1, |lhs|, |rhs|)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rng;

/// An n-ary metric candidate under test.
///
/// `evaluate` must be deterministic (same tuple, bit-identical result) and
/// must not return NaN for valid points.
pub trait MetricEvaluator {
    type Point: Clone;

    /// Number of arguments `n >= 2`.
    fn arity(&self) -> usize;

    /// Value of the candidate on an n-tuple.
    fn evaluate(&self, tuple: &[Self::Point]) -> Result<f64>;

    /// Short identifier used in reports.
    fn label(&self) -> &str;
}

/// Deterministic point source for fuzzing: `sample(seed, index)` is a pure
/// function of its arguments.
pub trait PointSampler {
    type Point: Clone;

    fn sample(&self, seed: u64, index: u64) -> Self::Point;

    fn description(&self) -> String;
}

/// Which axiom a [`CheckResult`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Semidefinite,
    Symmetry,
    Simplicial,
}

/// Offending inputs of a failed check, kept in full precision so the case
/// can be replayed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness<P> {
    pub tuple: Vec<P>,
    pub y: Option<P>,
}

/// Outcome of a single axiom check.
///
/// `margin = rhs - lhs` is reported raw (unscaled); `passed` applies the
/// scale-aware tolerance `margin >= -tol * max(1, |lhs|, |rhs|)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult<P> {
    pub kind: CheckKind,
    pub passed: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default = "none_witness")]
    pub witness: Option<Witness<P>>,
}

fn none_witness<P>() -> Option<Witness<P>> {
    None
}

fn scaled_pass(lhs: f64, rhs: f64, tol: f64) -> bool {
    rhs - lhs >= -tol * 1.0_f64.max(lhs.abs()).max(rhs.abs())
}

impl<P: Clone> CheckResult<P> {
    fn finish(kind: CheckKind, lhs: f64, rhs: f64, tol: f64, tuple: &[P], y: Option<&P>) -> Self {
        let passed = scaled_pass(lhs, rhs, tol);
        CheckResult {
            kind,
            passed,
            lhs,
            rhs,
            margin: rhs - lhs,
            witness: if passed {
                None
            } else {
                Some(Witness {
                    tuple: tuple.to_vec(),
                    y: y.cloned(),
                })
            },
        }
    }
}

fn expect_arity<M: MetricEvaluator>(metric: &M, tuple: &[M::Point]) -> Result<()> {
    if tuple.len() != metric.arity() {
        return Err(Error::usage(format!(
            "metric '{}' has arity {}, got a {}-tuple",
            metric.label(),
            metric.arity(),
            tuple.len()
        )));
    }
    Ok(())
}

/// Axiom (i): the value on a tuple with a repeated entry must vanish.
///
/// `tuple` must already contain a duplicate pair; that is the caller's
/// choice of which pair to force.
pub fn check_semidefinite<M: MetricEvaluator>(
    metric: &M,
    tuple: &[M::Point],
    tol: f64,
) -> Result<CheckResult<M::Point>> {
    expect_arity(metric, tuple)?;
    let value = metric.evaluate(tuple)?;
    // lhs = |d|, rhs = 0: margin is -|d|
    Ok(CheckResult::finish(
        CheckKind::Semidefinite,
        value.abs(),
        0.0,
        tol,
        tuple,
        None,
    ))
}

/// Axiom (ii): the value must be invariant under any permutation of the
/// tuple. `permutation` maps new slot `i` to old slot `permutation[i]` and
/// must be a bijection of `{0, .., n-1}`.
pub fn check_symmetry<M: MetricEvaluator>(
    metric: &M,
    tuple: &[M::Point],
    permutation: &[usize],
    tol: f64,
) -> Result<CheckResult<M::Point>> {
    expect_arity(metric, tuple)?;
    let n = metric.arity();
    let mut seen = vec![false; n];
    if permutation.len() != n
        || permutation
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::usage(format!(
            "permutation {permutation:?} is not a bijection of 0..{n}"
        )));
    }
    let d1 = metric.evaluate(tuple)?;
    let permuted: Vec<M::Point> = permutation.iter().map(|&p| tuple[p].clone()).collect();
    let d2 = metric.evaluate(&permuted)?;
    // lhs = |d1 - d2|, rhs = 0, scaled by the values themselves
    let lhs = (d1 - d2).abs();
    let passed = lhs <= tol * 1.0_f64.max(d1.abs()).max(d2.abs());
    Ok(CheckResult {
        kind: CheckKind::Symmetry,
        passed,
        lhs,
        rhs: 0.0,
        margin: -lhs,
        witness: if passed {
            None
        } else {
            Some(Witness {
                tuple: tuple.to_vec(),
                y: None,
            })
        },
    })
}

/// Axiom (iii): `d(x_1..x_n) <= sum_i d(x_1..x_{i-1}, y, x_{i+1}..x_n)`.
pub fn check_simplicial<M: MetricEvaluator>(
    metric: &M,
    tuple: &[M::Point],
    y: &M::Point,
    tol: f64,
) -> Result<CheckResult<M::Point>> {
    expect_arity(metric, tuple)?;
    let lhs = metric.evaluate(tuple)?;
    let mut rhs = 0.0;
    let mut substituted = tuple.to_vec();
    for i in 0..tuple.len() {
        let saved = std::mem::replace(&mut substituted[i], y.clone());
        rhs += metric.evaluate(&substituted)?;
        substituted[i] = saved;
    }
    Ok(CheckResult::finish(
        CheckKind::Simplicial,
        lhs,
        rhs,
        tol,
        tuple,
        Some(y),
    ))
}

/// A failed check together with the trial index that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation<P> {
    pub trial: u64,
    pub result: CheckResult<P>,
}

/// Aggregate outcome of [`fuzz_metric`].
///
/// Two runs with equal `(seed, trials, tol)` produce identical reports;
/// violations are ordered by trial index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport<P> {
    pub metric_label: String,
    pub trials: u64,
    pub violations: Vec<Violation<P>>,
    /// Most negative margin seen over all checks (positive if everything
    /// passed with room to spare).
    pub worst_margin: f64,
    pub seed: u64,
    pub tol: f64,
}

impl<P> FuzzReport<P> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs all three axiom checks on `trials` independently sampled tuples.
///
/// Trial `t` derives a sub-seed from `(seed, t)` and samples an
/// `(n+1)`-tuple: `n` tuple points plus the substitution point `y`. The
/// semidefiniteness check duplicates a uniformly chosen index pair, the
/// symmetry check applies a uniformly chosen permutation. Reports are a
/// pure function of `(metric, sampler, trials, seed, tol)`.
pub fn fuzz_metric<M, S>(
    metric: &M,
    sampler: &S,
    trials: u64,
    seed: u64,
    tol: f64,
) -> Result<FuzzReport<M::Point>>
where
    M: MetricEvaluator,
    S: PointSampler<Point = M::Point>,
{
    if trials == 0 {
        return Err(Error::usage("fuzzing needs at least one trial"));
    }
    let n = metric.arity();
    let root = Rng::new(seed);
    let mut violations = Vec::new();
    let mut worst = f64::INFINITY;
    for trial in 0..trials {
        let mut rng = root.split(trial);
        let sub_seed = rng.next_u64();
        let points: Vec<M::Point> = (0..=n as u64)
            .map(|i| sampler.sample(sub_seed, i))
            .collect();
        let (tuple, y) = (&points[..n], &points[n]);

        // (i) with a forced duplicate at a uniformly chosen index pair
        let i = rng.next_below(n as u64) as usize;
        let j = {
            let shift = 1 + rng.next_below(n as u64 - 1) as usize;
            (i + shift) % n
        };
        let mut dup = tuple.to_vec();
        dup[j] = dup[i].clone();
        let semi = check_semidefinite(metric, &dup, tol)?;

        let perm = rng.next_permutation(n);
        let sym = check_symmetry(metric, tuple, &perm, tol)?;

        let tri = check_simplicial(metric, tuple, y, tol)?;

        for result in [semi, sym, tri] {
            worst = worst.min(result.margin);
            if !result.passed {
                violations.push(Violation { trial, result });
            }
        }
    }
    Ok(FuzzReport {
        metric_label: metric.label().to_string(),
        trials,
        violations,
        worst_margin: worst,
        seed,
        tol,
    })
}
