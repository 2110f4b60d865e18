//! Cross-module property tests: the randomized invariants that back the
//! kernel and the metric constructions.

use proptest::prelude::*;

use nmetric::axioms::fuzz_metric;
use nmetric::exterior::{gram_matrix, hadamard_margin, wedge_norm, EuclideanTuple};
use nmetric::linalg::{gram_det_sqrt, svd_small, Complex, Matrix, Rng};
use nmetric::manifolds::{GrassmannQuotientMetric, StiefelSampler};
use nmetric::vandermonde::{d_vandermonde, p_norm, vandermonde_value};

fn random_matrix(rng: &mut Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| rng.next_normal()).collect(),
    )
    .unwrap()
}

#[test]
fn det_is_multiplicative() {
    let mut rng = Rng::new(2001);
    for _ in 0..1000 {
        let n = 1 + rng.next_below(6) as usize;
        let a = random_matrix(&mut rng, n, n);
        let b = random_matrix(&mut rng, n, n);
        let ab = a.matmul(&b).unwrap();
        let lhs = ab.det().unwrap();
        let rhs = a.det().unwrap() * b.det().unwrap();
        assert!(
            (lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0),
            "det(AB) = {lhs} vs det(A)det(B) = {rhs}"
        );
    }
}

#[test]
fn svd_reconstructs_its_input() {
    let mut rng = Rng::new(2003);
    for _ in 0..1000 {
        let rows = 1 + rng.next_below(8) as usize;
        let cols = 1 + rng.next_below(8) as usize;
        let m = random_matrix(&mut rng, rows, cols);
        let svd = svd_small(&m).unwrap();
        let err = svd.reconstruct().max_abs_diff(&m);
        assert!(err <= 1e-12 * m.max_abs().max(1.0), "residual {err}");
        for w in svd.singular_values.windows(2) {
            assert!(w[0] >= w[1]);
        }
        let k = svd.singular_values.len();
        let ugram = svd
            .left_factors
            .transpose()
            .matmul(&svd.left_factors)
            .unwrap();
        let vgram = svd
            .right_factors
            .transpose()
            .matmul(&svd.right_factors)
            .unwrap();
        assert!(ugram.max_abs_diff(&Matrix::identity(k)) <= 1e-12);
        assert!(vgram.max_abs_diff(&Matrix::identity(k)) <= 1e-12);
    }
}

#[test]
fn gram_det_sqrt_agrees_with_plain_determinant() {
    let mut rng = Rng::new(2005);
    for _ in 0..1000 {
        let k = 1 + rng.next_below(4) as usize;
        let m = k + rng.next_below(4) as usize;
        let t = EuclideanTuple::new(
            m,
            (0..k)
                .map(|_| (0..m).map(|_| rng.next_normal()).collect())
                .collect(),
        )
        .unwrap();
        let g = gram_matrix(&t);
        let via_pivots = gram_det_sqrt(&g).unwrap();
        let via_det = g.det().unwrap().max(0.0).sqrt();
        assert!(
            (via_pivots - via_det).abs() <= 1e-9 * via_det.max(1.0),
            "{via_pivots} vs {via_det}"
        );
    }
}

#[test]
fn quotient_metric_triangle_inequality() {
    // 10^4 random frame triples, tol 1e-7 (SVD-backed)
    let metric = GrassmannQuotientMetric::new(2, 4);
    let sampler = StiefelSampler { k: 2, m: 4 };
    let report = fuzz_metric(&metric, &sampler, 10_000, 23, 1e-7).unwrap();
    assert!(
        report.passed(),
        "worst margin {} with {} violations",
        report.worst_margin,
        report.violations.len()
    );
}

#[test]
fn vandermonde_definite_on_separated_tuples() {
    let mut rng = Rng::new(2007);
    let mut accepted = 0u32;
    while accepted < 10_000 {
        let z: Vec<Complex> = (0..4)
            .map(|_| Complex::new(rng.next_normal(), rng.next_normal()))
            .collect();
        let mut separated = true;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if (z[i] - z[j]).abs() < 1e-3 {
                    separated = false;
                }
            }
        }
        if !separated {
            continue;
        }
        accepted += 1;
        assert!(d_vandermonde(&z).unwrap() > 0.0);
    }
}

proptest! {
    #[test]
    fn vandermonde_symmetric_up_to_sign(values in prop::collection::vec(-10.0..10.0f64, 8)) {
        let z: Vec<Complex> = values.chunks(2).map(|c| Complex::new(c[0], c[1])).collect();
        let base = vandermonde_value(&z).unwrap();
        // swapping two entries flips the sign of the determinant but not
        // the metric
        let mut swapped = z.clone();
        swapped.swap(0, 2);
        let other = vandermonde_value(&swapped).unwrap();
        prop_assert!((base.abs() - other.abs()).abs() <= 1e-9 * base.abs().max(1.0));
        prop_assert!(((base + other).abs()) <= 1e-9 * base.abs().max(1.0));
    }

    #[test]
    fn p_norms_are_monotone(
        a in prop::collection::vec(-5.0..5.0f64, 4),
        bump in prop::collection::vec(0.0..5.0f64, 4),
        p in 1.0..6.0f64,
    ) {
        // coordinatewise domination of absolute values implies norm
        // domination: the property the lift construction needs
        let dominated: Vec<f64> = a.iter().zip(&bump).map(|(x, b)| x.abs() + b).collect();
        for exponent in [p, f64::INFINITY] {
            prop_assert!(
                p_norm(&a, exponent).unwrap() <= p_norm(&dominated, exponent).unwrap() + 1e-12
            );
        }
    }

    #[test]
    fn wedge_norm_vanishes_on_planted_dependence(
        coeffs in prop::collection::vec(-3.0..3.0f64, 2),
        vs in prop::collection::vec(prop::collection::vec(-3.0..3.0f64, 4), 2),
    ) {
        // plant v3 = c1 v1 + c2 v2: the triple must have (numerically)
        // zero volume; the Gram-determinant route has a sqrt(eps) noise
        // floor, hence the 1e-7 relative threshold
        let v3: Vec<f64> = (0..4)
            .map(|i| coeffs[0] * vs[0][i] + coeffs[1] * vs[1][i])
            .collect();
        let t = EuclideanTuple::new(4, vec![vs[0].clone(), vs[1].clone(), v3]).unwrap();
        let scale: f64 = t
            .vectors()
            .iter()
            .map(|v| v.iter().map(|x| x * x).sum::<f64>().sqrt())
            .product();
        prop_assert!(wedge_norm(&t).unwrap() <= 1e-7 * scale.max(1e-6));
    }

    #[test]
    fn hadamard_margin_never_negative(
        vs in prop::collection::vec(prop::collection::vec(-3.0..3.0f64, 5), 4),
        j in 1usize..4,
    ) {
        let t = EuclideanTuple::new(5, vs).unwrap();
        let margin = hadamard_margin(&t, j).unwrap();
        let scale = t
            .vectors()
            .iter()
            .map(|v| v.iter().map(|x| x * x).sum::<f64>().sqrt())
            .product::<f64>();
        prop_assert!(margin >= -1e-10 * scale.max(1.0), "margin {margin}");
    }
}
