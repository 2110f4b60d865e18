//! The Vandermonde n-metric on the complex plane and its lifts.
//!
//! The base construction is `d_V(z_1, .., z_n) = prod_{i<j} |z_i - z_j|`,
//! the modulus of the Vandermonde determinant. It is a definite n-metric
//! on the complex numbers (and by restriction on the reals). Lifts provide
//! pseudo n-metrics on `R^k` (componentwise values under a monotone norm)
//! and on discrete function spaces (weighted L^p sums).
//!
//! The naive generalization to higher dimensions, the product of norms
//! `prod_{i<j} ||x_i - x_j||`, is *not* a pseudo n-metric in dimension 3
//! and up: the regular-tetrahedron configuration violates the simplicial
//! inequality. Both the false candidate and the exact counterexample live
//! here so the failure can be reproduced, alongside the symmetric-tensor
//! construction (see [`tensor`]) that does generalize.

mod tensor;

pub use tensor::{
    d_generalized, expansion_rhs, generalized_vandermonde, sum_equality_margin, tensor_apply,
    GeneralizedVandermondeMetric, SymmetricTensorMap,
};

use serde::{Deserialize, Serialize};

use crate::axioms::{MetricEvaluator, PointSampler};
use crate::error::{Error, Result};
use crate::linalg::{Complex, Rng};

/// Product over `i < j` of `(z_i - z_j)`: the Vandermonde determinant of
/// the tuple.
pub fn vandermonde_value(z: &[Complex]) -> Result<Complex> {
    if z.len() < 2 {
        return Err(Error::usage("Vandermonde needs at least two points"));
    }
    let mut prod = Complex::ONE;
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            prod = prod * (z[i] - z[j]);
        }
    }
    Ok(prod)
}

/// The Vandermonde n-metric `|prod_{i<j} (z_i - z_j)|`.
///
/// Definite: the value is zero exactly when two entries coincide.
pub fn d_vandermonde(z: &[Complex]) -> Result<f64> {
    Ok(vandermonde_value(z)?.abs())
}

/// Parameters of the two-parameter family on which the simplicial
/// inequality for `d_V` (n = 3) is an equality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EqualityFamilyParams {
    pub q: f64,
    pub s: f64,
}

/// The normalized equality family for the n = 3 Vandermonde metric:
///
/// ```text
/// y = 0,  z1 = 1,
/// z2 = (-1 + i sqrt(q(1+s))) / s,
/// z3 = (-1 - i sqrt((1+s)/q)) / s,       q, s > 0.
/// ```
///
/// Every quadruple with `d_V(z1,z2,z3) = d_V(y,z2,z3) + d_V(z1,y,z3) +
/// d_V(z1,z2,y)` and pairwise distinct entries is of this form up to
/// shift, complex scaling and permutation. At `(q, s) = (1, 2)` the points
/// `z1, z2, z3` are the third roots of unity.
pub fn equality_family(p: EqualityFamilyParams) -> Result<(Complex, Complex, Complex, Complex)> {
    if p.q.is_nan() || p.s.is_nan() || p.q <= 0.0 || p.s <= 0.0 {
        return Err(Error::usage(format!(
            "equality family needs q > 0 and s > 0, got q={}, s={}",
            p.q, p.s
        )));
    }
    let y = Complex::ZERO;
    let z1 = Complex::ONE;
    let z2 = Complex::new(-1.0, (p.q * (1.0 + p.s)).sqrt()).scale(1.0 / p.s);
    let z3 = Complex::new(-1.0, -((1.0 + p.s) / p.q).sqrt()).scale(1.0 / p.s);
    Ok((y, z1, z2, z3))
}

/// Relative residual of the n = 3 simplicial equality
/// `d_V(z1,z2,z3) = d_V(y,z2,z3) + d_V(z1,y,z3) + d_V(z1,z2,y)`.
pub fn simplicial_equality_residual(y: Complex, z1: Complex, z2: Complex, z3: Complex) -> f64 {
    let lhs = d_vandermonde(&[z1, z2, z3]).expect("arity 3");
    let rhs = d_vandermonde(&[y, z2, z3]).expect("arity 3")
        + d_vandermonde(&[z1, y, z3]).expect("arity 3")
        + d_vandermonde(&[z1, z2, y]).expect("arity 3");
    (lhs - rhs).abs() / 1.0_f64.max(lhs.abs()).max(rhs.abs())
}

/// Margin of the weighted simplicial inequality
/// `|y|^k d_V(z) <= sum_i |z_i|^k d_V(z_1..z_{i-1}, y, z_{i+1}..z_n)`
/// for `0 <= k <= n-1`; returns `rhs - lhs` (nonnegative when it holds).
pub fn weighted_simplicial_margin(z: &[Complex], y: Complex, k: u32) -> Result<f64> {
    let n = z.len();
    if n < 2 {
        return Err(Error::usage("needs at least two points"));
    }
    if k as usize > n - 1 {
        return Err(Error::usage(format!(
            "weight exponent k={k} out of range 0..={}",
            n - 1
        )));
    }
    let lhs = y.abs().powi(k as i32) * d_vandermonde(z)?;
    let mut rhs = 0.0;
    let mut sub = z.to_vec();
    for i in 0..n {
        let saved = std::mem::replace(&mut sub[i], y);
        rhs += z[i].abs().powi(k as i32) * d_vandermonde(&sub)?;
        sub[i] = saved;
    }
    Ok(rhs - lhs)
}

/// `||v||_p` for `p >= 1` or `p = +inf`. These are exactly the monotone
/// norms the lift constructions are certified for.
pub fn p_norm(values: &[f64], p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::usage(format!(
            "p-norm needs p >= 1 (or +inf), got {p}"
        )));
    }
    if p.is_infinite() {
        return Ok(values.iter().fold(0.0, |acc, v| acc.max(v.abs())));
    }
    if p == 1.0 {
        return Ok(values.iter().map(|v| v.abs()).sum());
    }
    if p == 2.0 {
        return Ok(values.iter().map(|v| v * v).sum::<f64>().sqrt());
    }
    Ok(values
        .iter()
        .map(|v| v.abs().powf(p))
        .sum::<f64>()
        .powf(1.0 / p))
}

/// Componentwise lift of `d_V` to `R^k`: apply the real Vandermonde metric
/// in each coordinate and combine the k values with a p-norm.
///
/// A pseudo n-metric for every `p >= 1` (definiteness is lost for
/// `k >= 2`: tuples may collide in one coordinate only).
#[derive(Debug, Clone)]
pub struct ComponentwiseLift {
    n: usize,
    k: usize,
    p: f64,
    label: String,
}

/// Builds the componentwise lift; rejects `p < 1` (the norm must be
/// monotone for the lift theorem to apply).
pub fn lift_componentwise(n: usize, k: usize, p: f64) -> Result<ComponentwiseLift> {
    if n < 2 {
        return Err(Error::usage("arity must be at least 2"));
    }
    if k < 1 {
        return Err(Error::usage("component count must be at least 1"));
    }
    if p.is_nan() || p < 1.0 {
        return Err(Error::usage(format!(
            "lift requires a monotone p-norm, p >= 1 (got {p})"
        )));
    }
    Ok(ComponentwiseLift {
        n,
        k,
        p,
        label: format!("vandermonde-lift(n={n}, k={k}, p={p})"),
    })
}

impl MetricEvaluator for ComponentwiseLift {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        if tuple.iter().any(|x| x.len() != self.k) {
            return Err(Error::usage(format!(
                "lift expects points of dimension {}",
                self.k
            )));
        }
        let mut comps = Vec::with_capacity(self.k);
        for c in 0..self.k {
            let column: Vec<Complex> = tuple.iter().map(|x| Complex::from_re(x[c])).collect();
            comps.push(d_vandermonde(&column)?);
        }
        p_norm(&comps, self.p)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// A finite measure space given by atom weights `mu_1, .., mu_J > 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteMeasureSpace {
    weights: Vec<f64>,
}

impl DiscreteMeasureSpace {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::usage("measure space needs at least one atom"));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::usage("atom weights must be finite and positive"));
        }
        Ok(DiscreteMeasureSpace { weights })
    }

    pub fn atoms(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Weighted L^p Vandermonde metric on functions over a discrete measure
/// space: `( sum_j mu_j * prod_{i<l} |f_i(j) - f_l(j)|^p )^{1/p}`.
///
/// Functions are given by their value vectors on the atoms. The
/// integrability constraint of the continuous setting (`2r >= n(n-1)p`) is
/// vacuous here: every function on finitely many atoms is integrable.
pub fn d_lp_discrete(samples: &[Vec<f64>], space: &DiscreteMeasureSpace, p: f64) -> Result<f64> {
    if samples.len() < 2 {
        return Err(Error::usage("needs at least two functions"));
    }
    if p.is_nan() || !p.is_finite() || p < 1.0 {
        return Err(Error::usage(format!(
            "needs a finite exponent p >= 1, got {p}"
        )));
    }
    let atoms = space.atoms();
    if samples.iter().any(|f| f.len() != atoms) {
        return Err(Error::usage(format!(
            "every sample vector must have {atoms} entries"
        )));
    }
    let n = samples.len();
    let mut sum = 0.0;
    for (j, &mu) in space.weights().iter().enumerate() {
        let mut prod = 1.0;
        for i in 0..n {
            for l in (i + 1)..n {
                prod *= (samples[i][j] - samples[l][j]).abs().powf(p);
            }
        }
        sum += mu * prod;
    }
    Ok(sum.powf(1.0 / p))
}

/// [`MetricEvaluator`] wrapper for the complex Vandermonde metric.
#[derive(Debug, Clone)]
pub struct VandermondeMetric {
    n: usize,
    label: String,
}

impl VandermondeMetric {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        Ok(VandermondeMetric {
            n,
            label: format!("vandermonde(n={n})"),
        })
    }
}

impl MetricEvaluator for VandermondeMetric {
    type Point = Complex;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Complex]) -> Result<f64> {
        d_vandermonde(tuple)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// [`MetricEvaluator`] wrapper for the discrete L^p lift.
#[derive(Debug, Clone)]
pub struct LpDiscreteMetric {
    n: usize,
    space: DiscreteMeasureSpace,
    p: f64,
    label: String,
}

impl LpDiscreteMetric {
    pub fn new(n: usize, space: DiscreteMeasureSpace, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        if p.is_nan() || !p.is_finite() || p < 1.0 {
            return Err(Error::usage("needs a finite exponent p >= 1"));
        }
        let label = format!("lp-discrete(n={n}, atoms={}, p={p})", space.atoms());
        Ok(LpDiscreteMetric { n, space, p, label })
    }
}

impl MetricEvaluator for LpDiscreteMetric {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        d_lp_discrete(tuple, &self.space, self.p)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// The false candidate `prod_{i<j} ||x_i - x_j||_2` on `R^dim`.
///
/// Semidefinite and symmetric, but the simplicial inequality fails for
/// `dim >= 3`; see [`tetrahedron_counterexample`]. Shipped for fuzzing
/// demonstrations, not as a metric.
#[derive(Debug, Clone)]
pub struct NormProductCandidate {
    n: usize,
    dim: usize,
    label: String,
}

impl NormProductCandidate {
    pub fn new(n: usize, dim: usize) -> Result<Self> {
        if n < 2 || dim < 1 {
            return Err(Error::usage("needs n >= 2 and dim >= 1"));
        }
        Ok(NormProductCandidate {
            n,
            dim,
            label: format!("norm-product(n={n}, dim={dim})"),
        })
    }
}

impl MetricEvaluator for NormProductCandidate {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        if tuple.iter().any(|x| x.len() != self.dim) {
            return Err(Error::usage(format!(
                "points must have dimension {}",
                self.dim
            )));
        }
        let mut prod = 1.0;
        for i in 0..tuple.len() {
            for j in (i + 1)..tuple.len() {
                let dist = tuple[i]
                    .iter()
                    .zip(&tuple[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                prod *= dist;
            }
        }
        Ok(prod)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// Exact reproduction of the regular-tetrahedron counterexample showing
/// that the product of norms violates the simplicial inequality in `R^3`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TetrahedronReport {
    /// `d(x_1..x_4) = (8/3)^3`
    pub lhs: f64,
    /// `sum_i d(.., y, ..) = 4 (8/3)^{3/2}` with `y = 0`
    pub rhs: f64,
    /// `rhs - lhs < 0`: the violation
    pub margin: f64,
    pub vertices: Vec<Vec<f64>>,
    pub y: Vec<f64>,
}

/// Evaluates the product-of-norms candidate on the vertices of a regular
/// tetrahedron inscribed in the unit sphere, with `y` at the origin. The
/// simplicial inequality would require `(8/3)^3 <= 4 (8/3)^{3/2}`, i.e.
/// `2^5 <= 3^3`, which is false.
pub fn tetrahedron_counterexample() -> TetrahedronReport {
    let s2 = 2.0_f64.sqrt();
    let s6 = 6.0_f64.sqrt();
    let vertices = vec![
        vec![1.0, 0.0, 0.0],
        vec![-1.0 / 3.0, 2.0 * s2 / 3.0, 0.0],
        vec![-1.0 / 3.0, -s2 / 3.0, s6 / 3.0],
        vec![-1.0 / 3.0, -s2 / 3.0, -s6 / 3.0],
    ];
    let y = vec![0.0, 0.0, 0.0];
    let candidate = NormProductCandidate::new(4, 3).expect("static parameters");
    let lhs = candidate.evaluate(&vertices).expect("valid tuple");
    let mut rhs = 0.0;
    for i in 0..4 {
        let mut sub = vertices.clone();
        sub[i] = y.clone();
        rhs += candidate.evaluate(&sub).expect("valid tuple");
    }
    TetrahedronReport {
        lhs,
        rhs,
        margin: rhs - lhs,
        vertices,
        y,
    }
}

/// Gaussian sampler in the complex plane (re and im standard normal).
#[derive(Debug, Clone)]
pub struct ComplexGaussianSampler {
    pub scale: f64,
}

impl Default for ComplexGaussianSampler {
    fn default() -> Self {
        ComplexGaussianSampler { scale: 1.0 }
    }
}

impl PointSampler for ComplexGaussianSampler {
    type Point = Complex;

    fn sample(&self, seed: u64, index: u64) -> Complex {
        let mut rng = Rng::new(seed).split(index);
        Complex::new(
            rng.next_normal() * self.scale,
            rng.next_normal() * self.scale,
        )
    }

    fn description(&self) -> String {
        format!("complex Gaussian, scale {}", self.scale)
    }
}

/// Gaussian sampler in `R^dim`.
#[derive(Debug, Clone)]
pub struct GaussianVectorSampler {
    pub dim: usize,
    pub scale: f64,
}

impl GaussianVectorSampler {
    pub fn new(dim: usize) -> Self {
        GaussianVectorSampler { dim, scale: 1.0 }
    }
}

impl PointSampler for GaussianVectorSampler {
    type Point = Vec<f64>;

    fn sample(&self, seed: u64, index: u64) -> Vec<f64> {
        let mut rng = Rng::new(seed).split(index);
        (0..self.dim)
            .map(|_| rng.next_normal() * self.scale)
            .collect()
    }

    fn description(&self) -> String {
        format!("Gaussian in R^{}, scale {}", self.dim, self.scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn vandermonde_value_pair() {
        // z1 - z2 = 0 - 1 = -1
        let v = vandermonde_value(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(v, c(-1.0, 0.0));
    }

    #[test]
    fn vandermonde_value_triple_hand_product() {
        // (0-1)(0-3)(1-3) = -6
        let v = vandermonde_value(&[c(0.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert_eq!(v, c(-6.0, 0.0));
    }

    #[test]
    fn vandermonde_zero_on_repeats() {
        let v = vandermonde_value(&[c(5.0, 0.0), c(5.0, 0.0), c(7.0, 0.0)]).unwrap();
        assert_eq!(v, Complex::ZERO);
        assert_eq!(
            d_vandermonde(&[c(5.0, 0.0), c(5.0, 0.0), c(7.0, 0.0)]).unwrap(),
            0.0
        );
    }

    #[test]
    fn d_vandermonde_unit_triangle() {
        // |0-1| * |0-i| * |1-i| = sqrt 2
        let d = d_vandermonde(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!((d - 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn d_vandermonde_equilateral_roots_of_unity() {
        use std::f64::consts::TAU;
        let z = [
            Complex::unit(0.0),
            Complex::unit(TAU / 3.0),
            Complex::unit(2.0 * TAU / 3.0),
        ];
        // three sides of length sqrt(3)
        let d = d_vandermonde(&z).unwrap();
        assert!((d - 27.0_f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn squared_metric_is_product_over_ordered_pairs() {
        let mut rng = Rng::new(99);
        for _ in 0..50 {
            let z: Vec<Complex> = (0..4)
                .map(|_| c(rng.next_normal(), rng.next_normal()))
                .collect();
            let d = d_vandermonde(&z).unwrap();
            let mut prod = 1.0;
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        prod *= (z[i] - z[j]).abs();
                    }
                }
            }
            assert!((d * d - prod).abs() <= 1e-12 * prod.max(1.0));
        }
    }

    #[test]
    fn equality_family_roots_of_unity_at_q1_s2() {
        let (y, z1, z2, z3) = equality_family(EqualityFamilyParams { q: 1.0, s: 2.0 }).unwrap();
        assert_eq!(y, Complex::ZERO);
        assert_eq!(z1, Complex::ONE);
        let r3 = 3.0_f64.sqrt();
        assert!((z2.re + 0.5).abs() < 1e-15 && (z2.im - r3 / 2.0).abs() < 1e-15);
        assert!((z3.re + 0.5).abs() < 1e-15 && (z3.im + r3 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn equality_family_satisfies_equality() {
        // direct-substitution oracle over a parameter grid
        for q in [0.5, 1.0, 2.0] {
            for s in [0.5, 1.0, 2.0] {
                let (y, z1, z2, z3) = equality_family(EqualityFamilyParams { q, s }).unwrap();
                let res = simplicial_equality_residual(y, z1, z2, z3);
                assert!(res <= 1e-12, "residual {res} at q={q}, s={s}");
            }
        }
    }

    #[test]
    fn equality_family_pinned_points() {
        let (_, _, z2, z3) = equality_family(EqualityFamilyParams { q: 1.0, s: 1.0 }).unwrap();
        assert!((z2 - c(-1.0, 2.0_f64.sqrt())).abs() < 1e-15);
        assert!((z3 - c(-1.0, -(2.0_f64.sqrt()))).abs() < 1e-15);
        let (_, _, z2, z3) = equality_family(EqualityFamilyParams { q: 2.0, s: 1.0 }).unwrap();
        assert!((z2 - c(-1.0, 2.0)).abs() < 1e-15);
        assert!((z3 - c(-1.0, -1.0)).abs() < 1e-15);
    }

    #[test]
    fn equality_family_rejects_bad_params() {
        assert!(equality_family(EqualityFamilyParams { q: -1.0, s: 1.0 }).is_err());
        assert!(equality_family(EqualityFamilyParams { q: 1.0, s: 0.0 }).is_err());
    }

    #[test]
    fn weighted_margin_k0_matches_plain_simplicial() {
        let z = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        let y = c(0.0, 0.0);
        let m = weighted_simplicial_margin(&z, y, 0).unwrap();
        let lhs = d_vandermonde(&z).unwrap();
        let mut rhs = 0.0;
        for i in 0..3 {
            let mut sub = z;
            sub[i] = y;
            rhs += d_vandermonde(&sub).unwrap();
        }
        assert!((m - (rhs - lhs)).abs() < 1e-14);
        assert!(m >= 0.0);
    }

    #[test]
    fn weighted_margin_nonnegative_examples() {
        let z = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert!(weighted_simplicial_margin(&z, c(0.0, 0.0), 2).unwrap() >= 0.0);
        let z = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)];
        assert!(weighted_simplicial_margin(&z, c(2.0, 0.0), 1).unwrap() >= 0.0);
    }

    #[test]
    fn weighted_margin_rejects_out_of_range_k() {
        let z = [c(1.0, 0.0), c(2.0, 0.0)];
        assert!(weighted_simplicial_margin(&z, Complex::ZERO, 2).is_err());
    }

    #[test]
    fn lift_max_norm_hand_example() {
        // points (0,0), (1,1), (2,3): component values |{-1,-2,-1}| -> 2
        // and |{-1,-3,-2}| -> 6, max is 6
        let lift = lift_componentwise(3, 2, f64::INFINITY).unwrap();
        let d = lift
            .evaluate(&[vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 3.0]])
            .unwrap();
        assert!((d - 6.0).abs() < 1e-14);
    }

    #[test]
    fn lift_single_component_is_real_vandermonde() {
        let lift = lift_componentwise(3, 1, 2.0).unwrap();
        let d = lift.evaluate(&[vec![0.0], vec![1.0], vec![3.0]]).unwrap();
        assert!((d - 6.0).abs() < 1e-14);
    }

    #[test]
    fn lift_zero_on_duplicate_points() {
        let lift = lift_componentwise(3, 2, 1.0).unwrap();
        let d = lift
            .evaluate(&[vec![1.0, 2.0], vec![1.0, 2.0], vec![4.0, 5.0]])
            .unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn lift_rejects_p_below_one() {
        assert!(lift_componentwise(3, 2, 0.5).is_err());
    }

    #[test]
    fn lp_discrete_hand_sum() {
        // n=2, atoms (1,1), f=(0,0), g=(1,2), p=1: |0-1| + |0-2| = 3
        let space = DiscreteMeasureSpace::new(vec![1.0, 1.0]).unwrap();
        let d = d_lp_discrete(&[vec![0.0, 0.0], vec![1.0, 2.0]], &space, 1.0).unwrap();
        assert!((d - 3.0).abs() < 1e-14);
    }

    #[test]
    fn lp_discrete_zero_on_equal_functions() {
        let space = DiscreteMeasureSpace::new(vec![0.5, 2.0]).unwrap();
        let f = vec![1.0, -1.0];
        assert_eq!(
            d_lp_discrete(&[f.clone(), f.clone(), f], &space, 2.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn lp_discrete_single_atom_collapses_to_vandermonde() {
        // one atom of weight 1, p=1, n=3: value = prod |f_i - f_l|
        let space = DiscreteMeasureSpace::new(vec![1.0]).unwrap();
        let d = d_lp_discrete(&[vec![0.0], vec![1.0], vec![3.0]], &space, 1.0).unwrap();
        assert!((d - 6.0).abs() < 1e-14);
    }

    #[test]
    fn lp_discrete_rejects_length_mismatch() {
        let space = DiscreteMeasureSpace::new(vec![1.0, 1.0]).unwrap();
        assert!(d_lp_discrete(&[vec![0.0], vec![1.0, 2.0]], &space, 1.0).is_err());
    }

    #[test]
    fn tetrahedron_violation_matches_closed_form() {
        let report = tetrahedron_counterexample();
        let base: f64 = 8.0 / 3.0;
        assert!((report.lhs - base.powi(3)).abs() < 1e-9);
        assert!((report.rhs - 4.0 * base.powf(1.5)).abs() < 1e-9);
        assert!(report.margin < 0.0);
    }

    #[test]
    fn unit_circle_triangles_product_at_most_sum() {
        // sides a, b, c of a triangle inscribed in the unit circle satisfy
        // abc <= a + b + c (simplicial inequality with y = 0)
        let mut rng = Rng::new(2024);
        for _ in 0..1000 {
            let z: Vec<Complex> = (0..3)
                .map(|_| Complex::unit(rng.next_f64() * std::f64::consts::TAU))
                .collect();
            let mut sides = Vec::new();
            for i in 0..3 {
                for j in (i + 1)..3 {
                    sides.push((z[i] - z[j]).abs());
                }
            }
            let prod: f64 = sides.iter().product();
            let sum: f64 = sides.iter().sum();
            assert!(prod <= sum + 1e-12, "prod {prod} > sum {sum}");
        }
    }

    #[test]
    fn equilateral_triangle_attains_simplicial_equality() {
        // z at the third roots of unity, y at the center: lhs = rhs = 3*sqrt(3)
        use crate::axioms::check_simplicial;
        use std::f64::consts::TAU;
        let metric = VandermondeMetric::new(3).unwrap();
        let z = [
            Complex::unit(0.0),
            Complex::unit(TAU / 3.0),
            Complex::unit(2.0 * TAU / 3.0),
        ];
        let r = check_simplicial(&metric, &z, &Complex::ZERO, 1e-12).unwrap();
        assert!(r.passed);
        assert!((r.lhs - 27.0_f64.sqrt()).abs() <= 1e-12);
        assert!(r.margin.abs() <= 1e-12 * r.lhs);
    }
}
