//! Generalized Vandermonde pseudo n-metrics via symmetric multilinear maps.
//!
//! For an `M_n`-linear symmetric map `A : X^{M_n} -> Y` with
//! `M_n = n(n-1)/2`, the quantity `V(x_1..x_n) = A(prod_{j<i} (x_i - x_j))`
//! satisfies two purely algebraic identities:
//!
//! * the expansion `V(x) = sum_pi sign(pi) A(prod_j x_j^{pi(j)-1})`, where
//!   powers are argument repetition counts, and
//! * the substitution identity `V(x) = sum_i V(x_1..x_{i-1}, xi, x_{i+1}..x_n)`
//!   for every point `xi`.
//!
//! Taking any norm of `V` therefore yields a pseudo n-metric; real and
//! complex multiplication recover the classical Vandermonde metric.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::axioms::MetricEvaluator;
use crate::error::{Error, Result};
use crate::linalg::Rng;
use crate::vandermonde::p_norm;

/// A symmetric `M_n`-linear map `A : (R^dx)^{M_n} -> R^dy`, stored by one
/// coefficient per multiset of input indices.
///
/// Symmetry holds by construction: a coefficient indexed by the multiset
/// `{i_1, .., i_M}` applies to every argument-slot assignment with those
/// indices, so permuting arguments cannot change the value. Storage is
/// sparse; missing multisets are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TensorJson", into = "TensorJson")]
pub struct SymmetricTensorMap {
    n: usize,
    order: usize,
    dim_in: usize,
    dim_out: usize,
    /// sorted 0-based index multisets -> dy coefficients
    coeffs: BTreeMap<Vec<usize>, Vec<f64>>,
}

/// Wire format: multiset indices and output index are 1-based, one entry
/// per (output, multiset) pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TensorJson {
    n: usize,
    dx: usize,
    dy: usize,
    coeffs: Vec<CoeffJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoeffJson {
    out: usize,
    multiset: Vec<usize>,
    value: f64,
}

impl SymmetricTensorMap {
    /// Order of the map for metric arity `n`.
    pub fn order_for_arity(n: usize) -> usize {
        n * (n - 1) / 2
    }

    /// Creates an all-zero map for arity `n` on `R^dx -> R^dy`.
    pub fn zero(n: usize, dim_in: usize, dim_out: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("metric arity must be at least 2"));
        }
        if dim_in < 1 || dim_out < 1 {
            return Err(Error::usage("dimensions must be at least 1"));
        }
        Ok(SymmetricTensorMap {
            n,
            order: Self::order_for_arity(n),
            dim_in,
            dim_out,
            coeffs: BTreeMap::new(),
        })
    }

    /// Sets the coefficient for `(out, multiset)`; the multiset uses
    /// 0-based input indices and is sorted internally.
    pub fn set_coefficient(&mut self, out: usize, multiset: &[usize], value: f64) -> Result<()> {
        if out >= self.dim_out {
            return Err(Error::usage(format!(
                "output index {out} out of range 0..{}",
                self.dim_out
            )));
        }
        if multiset.len() != self.order {
            return Err(Error::usage(format!(
                "multiset must have {} entries, got {}",
                self.order,
                multiset.len()
            )));
        }
        if multiset.iter().any(|&i| i >= self.dim_in) {
            return Err(Error::usage(format!(
                "multiset indices must lie in 0..{}",
                self.dim_in
            )));
        }
        if !value.is_finite() {
            return Err(Error::usage("coefficient must be finite"));
        }
        let mut key = multiset.to_vec();
        key.sort_unstable();
        let entry = self
            .coeffs
            .entry(key)
            .or_insert_with(|| vec![0.0; self.dim_out]);
        entry[out] = value;
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// The multiplication map on `R`: `A(t_1, .., t_M) = t_1 * .. * t_M`.
    /// Through [`d_generalized`] this recovers the real Vandermonde metric.
    pub fn real_product(n: usize) -> Self {
        let mut map = Self::zero(n, 1, 1).expect("static parameters");
        let order = map.order;
        map.set_coefficient(0, &vec![0; order], 1.0)
            .expect("valid coefficient");
        map
    }

    /// Complex multiplication of `M_n` factors, encoded on `R^2`: argument
    /// `(a, b)` stands for `a + ib`. Index 0 is the real part, index 1 the
    /// imaginary part; a multiset with `b` imaginary picks contributes
    /// `i^b`, whence the 4-periodic coefficient tables.
    pub fn complex_multiplication(n: usize) -> Self {
        let mut map = Self::zero(n, 2, 2).expect("static parameters");
        let order = map.order;
        let re_table = [1.0, 0.0, -1.0, 0.0];
        let im_table = [0.0, 1.0, 0.0, -1.0];
        for ones in 0..=order {
            let mut ms = vec![0usize; order - ones];
            ms.extend(std::iter::repeat_n(1, ones));
            if re_table[ones % 4] != 0.0 {
                map.set_coefficient(0, &ms, re_table[ones % 4]).unwrap();
            }
            if im_table[ones % 4] != 0.0 {
                map.set_coefficient(1, &ms, im_table[ones % 4]).unwrap();
            }
        }
        map
    }

    /// Identity map on `R^dx` (only meaningful for `n = 2`, where the map
    /// is 1-linear).
    pub fn identity_linear(dim: usize) -> Result<Self> {
        let mut map = Self::zero(2, dim, dim)?;
        for c in 0..dim {
            map.set_coefficient(c, &[c], 1.0)?;
        }
        Ok(map)
    }

    /// Dense random map with standard-normal coefficients on every
    /// multiset; deterministic in the generator state.
    pub fn random(n: usize, dim_in: usize, dim_out: usize, rng: &mut Rng) -> Result<Self> {
        let mut map = Self::zero(n, dim_in, dim_out)?;
        let order = map.order;
        for ms in multisets(dim_in, order) {
            for out in 0..dim_out {
                map.set_coefficient(out, &ms, rng.next_normal())?;
            }
        }
        Ok(map)
    }
}

/// All sorted multisets of length `len` over `0..dim`, in lexicographic
/// order.
fn multisets(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; len];
    loop {
        out.push(current.clone());
        // increment as a nondecreasing odometer
        let mut pos = len;
        while pos > 0 {
            pos -= 1;
            if current[pos] + 1 < dim {
                let v = current[pos] + 1;
                for slot in current.iter_mut().skip(pos) {
                    *slot = v;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if len == 0 {
            return out;
        }
    }
}

impl TryFrom<TensorJson> for SymmetricTensorMap {
    type Error = Error;

    fn try_from(j: TensorJson) -> Result<Self> {
        let mut map = SymmetricTensorMap::zero(j.n, j.dx, j.dy)?;
        for c in &j.coeffs {
            if c.out == 0 || c.multiset.contains(&0) {
                return Err(Error::usage("tensor JSON uses 1-based indices; found a 0"));
            }
            let ms: Vec<usize> = c.multiset.iter().map(|&i| i - 1).collect();
            map.set_coefficient(c.out - 1, &ms, c.value)?;
        }
        Ok(map)
    }
}

impl From<SymmetricTensorMap> for TensorJson {
    fn from(map: SymmetricTensorMap) -> TensorJson {
        let mut coeffs = Vec::new();
        for (ms, values) in &map.coeffs {
            for (out, &value) in values.iter().enumerate() {
                if value != 0.0 {
                    coeffs.push(CoeffJson {
                        out: out + 1,
                        multiset: ms.iter().map(|&i| i + 1).collect(),
                        value,
                    });
                }
            }
        }
        TensorJson {
            n: map.n,
            dx: map.dim_in,
            dy: map.dim_out,
            coeffs,
        }
    }
}

/// Evaluates the symmetric multilinear map on `M_n` argument vectors by
/// iterated contraction: each argument turns the coefficient table of
/// order `r` into one of order `r - 1` via
/// `B_nu = sum_c A_{nu + c} * v[c]`.
pub fn tensor_apply(map: &SymmetricTensorMap, args: &[Vec<f64>]) -> Result<Vec<f64>> {
    if args.len() != map.order {
        return Err(Error::usage(format!(
            "map of order {} got {} arguments",
            map.order,
            args.len()
        )));
    }
    if args.iter().any(|v| v.len() != map.dim_in) {
        return Err(Error::usage(format!(
            "arguments must have dimension {}",
            map.dim_in
        )));
    }
    let mut current = map.coeffs.clone();
    for arg in args {
        let mut next: BTreeMap<Vec<usize>, Vec<f64>> = BTreeMap::new();
        for (ms, values) in &current {
            let mut pos = 0;
            while pos < ms.len() {
                let c = ms[pos];
                // skip over repeats so each distinct index is used once
                let mut end = pos;
                while end < ms.len() && ms[end] == c {
                    end += 1;
                }
                if arg[c] != 0.0 {
                    let mut reduced = ms.clone();
                    reduced.remove(pos);
                    let slot = next
                        .entry(reduced)
                        .or_insert_with(|| vec![0.0; map.dim_out]);
                    for (s, v) in slot.iter_mut().zip(values) {
                        *s += v * arg[c];
                    }
                }
                pos = end;
            }
        }
        current = next;
    }
    Ok(current
        .into_iter()
        .next()
        .map(|(_, v)| v)
        .unwrap_or_else(|| vec![0.0; map.dim_out]))
}

/// `V(x_1..x_n) = A(prod_{1 <= j < i <= n} (x_i - x_j))`: the map applied
/// to the `M_n` pairwise differences.
pub fn generalized_vandermonde(map: &SymmetricTensorMap, x: &[Vec<f64>]) -> Result<Vec<f64>> {
    if x.len() != map.n {
        return Err(Error::usage(format!(
            "expected {} points, got {}",
            map.n,
            x.len()
        )));
    }
    if x.iter().any(|v| v.len() != map.dim_in) {
        return Err(Error::usage(format!(
            "points must have dimension {}",
            map.dim_in
        )));
    }
    let mut diffs = Vec::with_capacity(map.order);
    for i in 0..x.len() {
        for j in 0..i {
            let d: Vec<f64> = x[i].iter().zip(&x[j]).map(|(a, b)| a - b).collect();
            diffs.push(d);
        }
    }
    tensor_apply(map, &diffs)
}

/// Advances `perm` to the next lexicographic permutation, returning the
/// number of transpositions performed (`None` when `perm` was the last).
fn next_permutation(perm: &mut [usize]) -> Option<usize> {
    let n = perm.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    Some(1 + (n - i) / 2)
}

/// The permutation-sum side of the expansion identity:
/// `sum_pi sign(pi) A(prod_j x_j^{pi(j)-1})`, powers meaning repetition
/// counts. Equals [`generalized_vandermonde`] exactly; kept as the
/// independent route for cross-checking. Guarded at `n <= 8` (factorial
/// cost).
pub fn expansion_rhs(map: &SymmetricTensorMap, x: &[Vec<f64>]) -> Result<Vec<f64>> {
    if x.len() != map.n {
        return Err(Error::usage(format!(
            "expected {} points, got {}",
            map.n,
            x.len()
        )));
    }
    if map.n > 8 {
        return Err(Error::Capacity(format!(
            "expansion enumerates n! permutations; n = {} exceeds the n <= 8 guard",
            map.n
        )));
    }
    let n = map.n;
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut sign = 1.0;
    let mut total = vec![0.0; map.dim_out];
    loop {
        let mut args: Vec<Vec<f64>> = Vec::with_capacity(map.order);
        for (j, &power) in perm.iter().enumerate() {
            for _ in 0..(power - 1) {
                args.push(x[j].clone());
            }
        }
        let term = tensor_apply(map, &args)?;
        for (t, v) in total.iter_mut().zip(&term) {
            *t += sign * v;
        }
        match next_permutation(&mut perm) {
            Some(transpositions) => {
                if transpositions % 2 == 1 {
                    sign = -sign;
                }
            }
            None => break,
        }
    }
    Ok(total)
}

/// Euclidean norm of `V(x) - sum_i V(x_1..x_{i-1}, xi, x_{i+1}..x_n)`.
/// The identity says this is zero; the returned value is the numerical
/// residual.
pub fn sum_equality_margin(map: &SymmetricTensorMap, x: &[Vec<f64>], xi: &[f64]) -> Result<f64> {
    let v = generalized_vandermonde(map, x)?;
    let mut sum = vec![0.0; map.dim_out];
    let mut sub = x.to_vec();
    for i in 0..x.len() {
        let saved = std::mem::replace(&mut sub[i], xi.to_vec());
        let term = generalized_vandermonde(map, &sub)?;
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        sub[i] = saved;
    }
    Ok(v.iter()
        .zip(&sum)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

/// The generalized Vandermonde pseudo n-metric: `|| V(x_1..x_n) ||_p`.
pub fn d_generalized(map: &SymmetricTensorMap, p: f64, x: &[Vec<f64>]) -> Result<f64> {
    p_norm(&generalized_vandermonde(map, x)?, p)
}

/// [`MetricEvaluator`] wrapper around [`d_generalized`].
#[derive(Debug, Clone)]
pub struct GeneralizedVandermondeMetric {
    map: SymmetricTensorMap,
    p: f64,
    label: String,
}

impl GeneralizedVandermondeMetric {
    pub fn new(map: SymmetricTensorMap, p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::usage("needs a norm exponent p >= 1 (or +inf)"));
        }
        let label = format!(
            "generalized-vandermonde(n={}, dx={}, dy={}, p={p})",
            map.arity(),
            map.dim_in(),
            map.dim_out()
        );
        Ok(GeneralizedVandermondeMetric { map, p, label })
    }

    pub fn map(&self) -> &SymmetricTensorMap {
        &self.map
    }
}

impl MetricEvaluator for GeneralizedVandermondeMetric {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.map.arity()
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        d_generalized(&self.map, self.p, tuple)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex;
    use crate::vandermonde::d_vandermonde;

    #[test]
    fn real_product_applies_as_plain_product() {
        let a = SymmetricTensorMap::real_product(3); // order 3
        let out = tensor_apply(&a, &[vec![2.0], vec![3.0], vec![5.0]]).unwrap();
        assert_eq!(out, vec![30.0]);
    }

    #[test]
    fn zero_argument_kills_the_value() {
        let mut rng = Rng::new(1);
        let a = SymmetricTensorMap::random(3, 2, 2, &mut rng).unwrap();
        let args = vec![vec![1.0, 2.0], vec![0.0, 0.0], vec![3.0, -1.0]];
        let out = tensor_apply(&a, &args).unwrap();
        assert_eq!(out, vec![0.0, 0.0]);
    }

    #[test]
    fn apply_is_symmetric_under_argument_swaps() {
        let mut rng = Rng::new(2);
        let a = SymmetricTensorMap::random(3, 3, 2, &mut rng).unwrap();
        let args = vec![
            vec![1.0, 2.0, 3.0],
            vec![-1.0, 0.5, 2.0],
            vec![0.25, -2.0, 1.0],
        ];
        let base = tensor_apply(&a, &args).unwrap();
        let close = |lhs: &[f64], rhs: &[f64]| {
            lhs.iter()
                .zip(rhs)
                .all(|(a, b)| (a - b).abs() <= 1e-12 * a.abs().max(1.0))
        };
        // symmetric by construction, up to summation-order roundoff
        let mut swapped = args.clone();
        swapped.swap(0, 2);
        assert!(close(&tensor_apply(&a, &swapped).unwrap(), &base));
        let mut swapped = args;
        swapped.swap(1, 2);
        assert!(close(&tensor_apply(&a, &swapped).unwrap(), &base));
    }

    #[test]
    fn apply_is_multilinear_in_first_slot() {
        let mut rng = Rng::new(3);
        let a = SymmetricTensorMap::random(3, 2, 1, &mut rng).unwrap();
        let u = vec![1.0, -2.0];
        let v = vec![0.5, 4.0];
        let rest = [vec![2.0, 1.0], vec![-1.0, 3.0]];
        let combo: Vec<f64> = u.iter().zip(&v).map(|(a, b)| 2.0 * a + 3.0 * b).collect();
        let lhs = tensor_apply(&a, &[combo, rest[0].clone(), rest[1].clone()]).unwrap()[0];
        let fu = tensor_apply(&a, &[u, rest[0].clone(), rest[1].clone()]).unwrap()[0];
        let fv = tensor_apply(&a, &[v, rest[0].clone(), rest[1].clone()]).unwrap()[0];
        assert!((lhs - (2.0 * fu + 3.0 * fv)).abs() < 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn generalized_vandermonde_real_product_hand_value() {
        let a = SymmetricTensorMap::real_product(3);
        let out = generalized_vandermonde(&a, &[vec![0.0], vec![1.0], vec![3.0]]).unwrap();
        // (1-0)(3-0)(3-1) = 6
        assert_eq!(out, vec![6.0]);
    }

    #[test]
    fn generalized_vandermonde_zero_on_repeats() {
        let mut rng = Rng::new(4);
        let a = SymmetricTensorMap::random(3, 2, 2, &mut rng).unwrap();
        let p = vec![1.5, -0.5];
        let out = generalized_vandermonde(&a, &[p.clone(), p, vec![3.0, 2.0]]).unwrap();
        assert_eq!(out, vec![0.0, 0.0]);
    }

    #[test]
    fn identity_map_arity_two_is_difference() {
        let a = SymmetricTensorMap::identity_linear(3).unwrap();
        let x1 = vec![1.0, 2.0, 3.0];
        let x2 = vec![5.0, 5.0, 5.0];
        let out = generalized_vandermonde(&a, &[x1.clone(), x2.clone()]).unwrap();
        let expect: Vec<f64> = x2.iter().zip(&x1).map(|(a, b)| a - b).collect();
        assert_eq!(out, expect);
    }

    #[test]
    fn expansion_rhs_matches_for_n2_identity() {
        let a = SymmetricTensorMap::identity_linear(2).unwrap();
        let x = [vec![1.0, -1.0], vec![4.0, 2.5]];
        assert_eq!(
            expansion_rhs(&a, &x).unwrap(),
            generalized_vandermonde(&a, &x).unwrap()
        );
    }

    #[test]
    fn expansion_rhs_matches_on_random_instances() {
        let mut rng = Rng::new(5);
        for n in [2usize, 3, 4] {
            for _ in 0..20 {
                let dx = 1 + rng.next_below(3) as usize;
                let dy = 1 + rng.next_below(2) as usize;
                let a = SymmetricTensorMap::random(n, dx, dy, &mut rng).unwrap();
                let x: Vec<Vec<f64>> = (0..n)
                    .map(|_| (0..dx).map(|_| rng.next_normal()).collect())
                    .collect();
                let lhs = generalized_vandermonde(&a, &x).unwrap();
                let rhs = expansion_rhs(&a, &x).unwrap();
                let scale = lhs.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
                for (l, r) in lhs.iter().zip(&rhs) {
                    assert!((l - r).abs() <= 1e-10 * scale, "{l} vs {r}");
                }
            }
        }
    }

    #[test]
    fn sum_equality_hand_case() {
        let a = SymmetricTensorMap::real_product(3);
        let x = [vec![0.0], vec![1.0], vec![3.0]];
        let margin = sum_equality_margin(&a, &x, &[2.0]).unwrap();
        // V = 6; substituted: (2,1,3) -> (1-2)(3-2)(3-1) = -2, (0,2,3) -> 6,
        // (0,1,2) -> 2; sum = 6
        assert!(margin <= 1e-12);
    }

    #[test]
    fn sum_equality_xi_equal_to_point() {
        let mut rng = Rng::new(6);
        let a = SymmetricTensorMap::random(3, 2, 1, &mut rng).unwrap();
        let x = [vec![1.0, 0.0], vec![0.0, 1.0], vec![2.0, 2.0]];
        // xi = x_1: every substituted term but the first has a repeat
        let margin = sum_equality_margin(&a, &x, &x[0]).unwrap();
        assert!(margin <= 1e-12);
    }

    #[test]
    fn sum_equality_random_instances() {
        let mut rng = Rng::new(7);
        for _ in 0..50 {
            let a = SymmetricTensorMap::random(3, 2, 2, &mut rng).unwrap();
            let x: Vec<Vec<f64>> = (0..3)
                .map(|_| vec![rng.next_normal(), rng.next_normal()])
                .collect();
            let xi = vec![rng.next_normal(), rng.next_normal()];
            let v = generalized_vandermonde(&a, &x).unwrap();
            let scale = v.iter().fold(1.0_f64, |m, t| m.max(t.abs()));
            assert!(sum_equality_margin(&a, &x, &xi).unwrap() <= 1e-10 * scale);
        }
    }

    #[test]
    fn complex_tensor_reproduces_vandermonde_metric() {
        let a = SymmetricTensorMap::complex_multiplication(3);
        let mut rng = Rng::new(8);
        for _ in 0..50 {
            let z: Vec<Complex> = (0..3)
                .map(|_| Complex::new(rng.next_normal(), rng.next_normal()))
                .collect();
            let x: Vec<Vec<f64>> = z.iter().map(|w| vec![w.re, w.im]).collect();
            let dv = d_vandermonde(&z).unwrap();
            let dg = d_generalized(&a, 2.0, &x).unwrap();
            assert!((dv - dg).abs() <= 1e-12 * dv.max(1.0), "{dv} vs {dg}");
        }
    }

    #[test]
    fn expansion_guard_rejects_large_arity() {
        let a = SymmetricTensorMap::real_product(9);
        let x: Vec<Vec<f64>> = (0..9).map(|i| vec![i as f64]).collect();
        assert!(matches!(expansion_rhs(&a, &x), Err(Error::Capacity(_))));
    }

    #[test]
    fn tensor_json_round_trip() {
        let mut rng = Rng::new(9);
        let a = SymmetricTensorMap::random(3, 2, 2, &mut rng).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let back: SymmetricTensorMap = serde_json::from_str(&s).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn tensor_json_uses_one_based_indices() {
        let a = SymmetricTensorMap::real_product(2); // order 1, single coeff
        let v: serde_json::Value = serde_json::to_value(&a).unwrap();
        assert_eq!(v["coeffs"][0]["multiset"], serde_json::json!([1]));
        assert_eq!(v["coeffs"][0]["out"], serde_json::json!(1));
    }

    #[test]
    fn multiset_enumeration_counts() {
        // C(dx + len - 1, len)
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(2, 3).len(), 4);
        assert_eq!(multisets(1, 5).len(), 1);
    }
}
