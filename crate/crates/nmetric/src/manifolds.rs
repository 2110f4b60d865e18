//! Pseudo n-metrics on the unit sphere, the Stiefel manifold and the
//! Grassmannian.
//!
//! For unit vectors the Gram-determinant volume of the tuple itself (no
//! base-point differences) already satisfies the simplicial inequality:
//! `d(x_1..x_n) = det(<x_i, x_j>)^{1/2}`. Applied to the unit sphere of
//! the Hilbert-Schmidt space of `m x k` matrices this gives a pseudo
//! n-metric on Stiefel frames; applied to rank-k orthogonal projections
//! (scaled so `||P|| = 1`) it descends to the Grassmannian, since the
//! projection is an invariant of the frame's equivalence class.
//!
//! Subspaces are always represented by frames; projections are derived
//! values. Principal angles come from the singular values of `A_1^T A_2`
//! and give closed forms for the n = 2 cases, including the quotient
//! 2-metric `min_{Q in O(k)} d(A_1, A_2 Q) = (1 - k^{-2} (sum_j s_j)^2)^{1/2}`.

use serde::{Deserialize, Serialize};

use crate::axioms::{MetricEvaluator, PointSampler};
use crate::error::{Error, Result};
use crate::exterior::{dot, norm, wedge_norm, EuclideanTuple};
use crate::linalg::{gram_det_sqrt, sample_stiefel, sample_unit_vector, svd_small, Matrix, Rng};

/// Admission tolerance for unit norms and orthonormal frames. Inputs
/// beyond this are rejected rather than silently renormalized.
pub const FRAME_TOL: f64 = 1e-10;

/// An ordered tuple of unit vectors in `R^m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitVectorTuple {
    dim: usize,
    vectors: Vec<Vec<f64>>,
}

impl UnitVectorTuple {
    /// Validates `| ||x_i|| - 1 | <= 1e-10` for every vector.
    pub fn new(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::usage("tuple needs at least one vector"));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::usage(format!(
                    "vector {i} does not have dimension {dim}"
                )));
            }
            let n = norm(v);
            if (n - 1.0).abs() > FRAME_TOL {
                return Err(Error::usage(format!(
                    "vector {i} has norm {n}, not a unit vector (use renormalize)"
                )));
            }
        }
        Ok(UnitVectorTuple { dim, vectors })
    }

    /// Explicitly rescales the vectors to unit norm, then admits them.
    pub fn renormalize(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        let mut out = Vec::with_capacity(vectors.len());
        for v in vectors {
            let n = norm(&v);
            if n == 0.0 {
                return Err(Error::usage("cannot renormalize a zero vector"));
            }
            out.push(v.iter().map(|x| x / n).collect());
        }
        UnitVectorTuple::new(dim, out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }
}

/// The sphere pseudo n-metric `det(<x_i, x_j>)^{1/2}` on unit vectors.
///
/// For `n > m` the tuple is dependent and the value is zero.
pub fn d_sphere(t: &UnitVectorTuple) -> Result<f64> {
    let n = t.len();
    if n > t.dim() {
        return Ok(0.0);
    }
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = dot(&t.vectors[i], &t.vectors[j]);
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    gram_det_sqrt(&g)
}

/// Polar sine of `n` nonzero vectors seen from the origin:
/// `||x_1 ^ .. ^ x_n|| / prod ||x_i||`. Coincides with [`d_sphere`] on
/// unit vectors and is invariant under positive rescaling of any vector.
pub fn polar_sine(t: &EuclideanTuple) -> Result<f64> {
    let mut denom = 1.0;
    for (i, v) in t.vectors().iter().enumerate() {
        let n = norm(v);
        if n == 0.0 {
            return Err(Error::usage(format!(
                "vector {i} is zero; polar sine undefined"
            )));
        }
        denom *= n;
    }
    Ok(wedge_norm(t)? / denom)
}

/// The n-dimensional sine:
/// `||x_1 ^ .. ^ x_n||^{n-1} / prod_i ||x_1 ^ .. x_{i-1} ^ x_{i+1} .. ^ x_n||`.
///
/// Every (n-1)-subtuple must be independent; otherwise the input is
/// degenerate for this quantity.
pub fn n_sine(t: &EuclideanTuple) -> Result<f64> {
    let n = t.len();
    if n < 2 {
        return Err(Error::usage("n-sine needs at least two vectors"));
    }
    let full = wedge_norm(t)?;
    let mut denom = 1.0;
    for i in 0..n {
        let sub: Vec<Vec<f64>> = t
            .vectors()
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let w = wedge_norm(&EuclideanTuple::new(t.dim(), sub)?)?;
        if w == 0.0 {
            return Err(Error::DegenerateInput(format!(
                "subtuple without vector {i} is linearly dependent"
            )));
        }
        denom *= w;
    }
    Ok(full.powi(n as i32 - 1) / denom)
}

/// Scaled Hilbert-Schmidt inner product `(1/k) tr(A^T B)`.
///
/// The `1/k` factor makes an orthonormal `m x k` frame a unit vector of
/// the matrix space; for `m x m` projections of rank `k` the same scaling
/// is used (sum over all `m` basis columns).
pub fn hs_inner(a: &Matrix, b: &Matrix, scale_k: usize) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::usage(format!(
            "shape mismatch: {}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if scale_k == 0 {
        return Err(Error::usage("scale must be positive"));
    }
    let mut sum = 0.0;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            sum += a.get(i, j) * b.get(i, j);
        }
    }
    Ok(sum / scale_k as f64)
}

/// An element of the Stiefel manifold `St(k, m)`: an `m x k` matrix with
/// orthonormal columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FrameJson", into = "FrameJson")]
pub struct StiefelFrame {
    k: usize,
    m: usize,
    matrix: Matrix,
}

/// Wire format: the `k` columns of the frame, each of length `m`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct FrameJson {
    k: usize,
    m: usize,
    columns: Vec<Vec<f64>>,
}

impl StiefelFrame {
    /// Validates `||A^T A - I||_max <= 1e-10`.
    pub fn new(matrix: Matrix) -> Result<Self> {
        let (m, k) = (matrix.rows(), matrix.cols());
        if k > m {
            return Err(Error::usage(format!(
                "frame needs k <= m, got k={k}, m={m}"
            )));
        }
        let gram = matrix.transpose().matmul(&matrix)?;
        let residual = gram.max_abs_diff(&Matrix::identity(k));
        if residual > FRAME_TOL {
            return Err(Error::usage(format!(
                "columns are not orthonormal: ||A^T A - I||_max = {residual:e}"
            )));
        }
        Ok(StiefelFrame { k, m, matrix })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Frame from explicit columns.
    pub fn from_columns(m: usize, columns: &[Vec<f64>]) -> Result<Self> {
        let k = columns.len();
        if k == 0 {
            return Err(Error::usage("frame needs at least one column"));
        }
        if columns.iter().any(|c| c.len() != m) {
            return Err(Error::usage(format!("all columns must have length {m}")));
        }
        let mut a = Matrix::zeros(m, k);
        for (j, col) in columns.iter().enumerate() {
            for i in 0..m {
                a.set(i, j, col[i]);
            }
        }
        StiefelFrame::new(a)
    }

    /// Right-multiplies by a `k x k` matrix (gauge change when `q` is
    /// orthogonal).
    pub fn rotate(&self, q: &Matrix) -> Result<StiefelFrame> {
        StiefelFrame::new(self.matrix.matmul(q)?)
    }
}

impl TryFrom<FrameJson> for StiefelFrame {
    type Error = Error;
    fn try_from(j: FrameJson) -> Result<Self> {
        if j.columns.len() != j.k {
            return Err(Error::usage(format!(
                "expected {} columns, got {}",
                j.k,
                j.columns.len()
            )));
        }
        StiefelFrame::from_columns(j.m, &j.columns)
    }
}

impl From<StiefelFrame> for FrameJson {
    fn from(f: StiefelFrame) -> FrameJson {
        FrameJson {
            k: f.k,
            m: f.m,
            columns: (0..f.k).map(|j| f.matrix.column(j)).collect(),
        }
    }
}

/// Rank-k orthogonal projection `P = A A^T` in `R^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMatrix {
    m: usize,
    rank: usize,
    matrix: Matrix,
}

impl ProjectionMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// The orthogonal projection onto the range of a frame, `P = A A^T`.
///
/// Idempotency, symmetry and `trace(P) = k` hold by construction up to
/// roundoff; the scaled Hilbert-Schmidt norm of the result is 1.
pub fn projection_from_frame(frame: &StiefelFrame) -> ProjectionMatrix {
    let a = frame.matrix();
    let p = a.matmul(&a.transpose()).expect("m x k times k x m");
    ProjectionMatrix {
        m: frame.m(),
        rank: frame.k(),
        matrix: p,
    }
}

fn common_shape(frames: &[StiefelFrame]) -> Result<(usize, usize)> {
    let first = frames
        .first()
        .ok_or_else(|| Error::usage("need at least one frame"))?;
    let (k, m) = (first.k(), first.m());
    if frames.iter().any(|f| f.k() != k || f.m() != m) {
        return Err(Error::usage("frames must share a common (k, m)"));
    }
    Ok((k, m))
}

/// Stiefel pseudo n-metric: Gram-determinant volume of the frames under
/// the scaled Hilbert-Schmidt inner product,
/// `det((1/k) tr(A_i^T A_j))^{1/2}`.
pub fn d_stiefel(frames: &[StiefelFrame]) -> Result<f64> {
    let (k, _) = common_shape(frames)?;
    let n = frames.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = hs_inner(frames[i].matrix(), frames[j].matrix(), k)?;
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    gram_det_sqrt(&g)
}

/// Grassmann pseudo n-metric through projections:
/// `det(<P_i, P_j>_{k,H})^{1/2}` with `P_i = A_i A_i^T`. Invariant under
/// right-multiplication of any frame by an orthogonal `k x k` matrix.
pub fn d_grassmann_proj(frames: &[StiefelFrame]) -> Result<f64> {
    let (k, _) = common_shape(frames)?;
    let n = frames.len();
    let projections: Vec<ProjectionMatrix> = frames.iter().map(projection_from_frame).collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = hs_inner(projections[i].matrix(), projections[j].matrix(), k)?;
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    gram_det_sqrt(&g)
}

/// Principal angles between two k-dimensional subspaces: the cosines are
/// the singular values of `A_1^T A_2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrincipalAngles {
    /// Nonincreasing cosines `sigma_1 >= .. >= sigma_k` in `[0, 1]`.
    pub sigmas: Vec<f64>,
    /// Nondecreasing angles `theta_j = arccos(sigma_j)` in `[0, pi/2]`.
    pub thetas: Vec<f64>,
}

/// Singular values of `A_1^T A_2`, clamped to `[0, 1]`; values beyond
/// `1 + 1e-8` indicate a broken input or kernel and raise a numerical
/// failure instead of being silently clamped.
pub fn principal_angles(a1: &StiefelFrame, a2: &StiefelFrame) -> Result<PrincipalAngles> {
    if a1.k() != a2.k() || a1.m() != a2.m() {
        return Err(Error::usage("frames must share a common (k, m)"));
    }
    let product = a1.matrix().transpose().matmul(a2.matrix())?;
    let svd = svd_small(&product)?;
    let mut sigmas = Vec::with_capacity(svd.singular_values.len());
    for &s in &svd.singular_values {
        if s > 1.0 + 1e-8 {
            return Err(Error::NumericalFailure(format!(
                "cosine of a principal angle exceeded 1: {s}"
            )));
        }
        sigmas.push(s.clamp(0.0, 1.0));
    }
    let thetas = sigmas.iter().map(|s| s.acos()).collect();
    Ok(PrincipalAngles { sigmas, thetas })
}

/// The quotient 2-metric on the Grassmannian,
/// `min_{Q in O(k)} d_stiefel(A_1, A_2 Q) = (1 - k^{-2} (sum_j sigma_j)^2)^{1/2}`.
pub fn d_grassmann_quotient(a1: &StiefelFrame, a2: &StiefelFrame) -> Result<f64> {
    let angles = principal_angles(a1, a2)?;
    let k = a1.k() as f64;
    let s: f64 = angles.sigmas.iter().sum();
    Ok((1.0 - (s / k).powi(2)).max(0.0).sqrt())
}

/// The orthogonal matrix `Q = Z Y^T` (from the SVD `A_1^T A_2 = Y S Z^T`)
/// that attains the minimum in the quotient metric.
pub fn quotient_aligning_rotation(a1: &StiefelFrame, a2: &StiefelFrame) -> Result<Matrix> {
    let product = a1.matrix().transpose().matmul(a2.matrix())?;
    let svd = svd_small(&product)?;
    svd.right_factors.matmul(&svd.left_factors.transpose())
}

/// The classical 2-metric `sin(theta_k)` (largest principal angle),
/// equal to the spectral norm of `P_1 - P_2`. Provided for comparison
/// with the determinant-based constructions, which it differs from.
pub fn d_classical_grassmann_2(a1: &StiefelFrame, a2: &StiefelFrame) -> Result<f64> {
    let angles = principal_angles(a1, a2)?;
    let smallest_cosine = *angles
        .sigmas
        .last()
        .ok_or_else(|| Error::usage("empty frame"))?;
    Ok((1.0 - smallest_cosine * smallest_cosine).max(0.0).sqrt())
}

// ── MetricEvaluator wrappers ────────────────────────────────────────────

/// Sphere metric on raw coordinate vectors (validated to be unit).
#[derive(Debug, Clone)]
pub struct SphereMetric {
    n: usize,
    dim: usize,
    label: String,
}

impl SphereMetric {
    pub fn new(n: usize, dim: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        Ok(SphereMetric {
            n,
            dim,
            label: format!("sphere(n={n}, m={dim})"),
        })
    }
}

impl MetricEvaluator for SphereMetric {
    type Point = Vec<f64>;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[Vec<f64>]) -> Result<f64> {
        d_sphere(&UnitVectorTuple::new(self.dim, tuple.to_vec())?)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// Stiefel pseudo n-metric as an evaluator over frames.
#[derive(Debug, Clone)]
pub struct StiefelMetric {
    n: usize,
    label: String,
}

impl StiefelMetric {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        Ok(StiefelMetric {
            n,
            label: format!("stiefel(n={n}, k={k}, m={m})"),
        })
    }
}

impl MetricEvaluator for StiefelMetric {
    type Point = StiefelFrame;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[StiefelFrame]) -> Result<f64> {
        d_stiefel(tuple)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// Grassmann projection pseudo n-metric as an evaluator over frames.
#[derive(Debug, Clone)]
pub struct GrassmannProjectionMetric {
    n: usize,
    label: String,
}

impl GrassmannProjectionMetric {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        Ok(GrassmannProjectionMetric {
            n,
            label: format!("grassmann-proj(n={n}, k={k}, m={m})"),
        })
    }
}

impl MetricEvaluator for GrassmannProjectionMetric {
    type Point = StiefelFrame;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[StiefelFrame]) -> Result<f64> {
        d_grassmann_proj(tuple)
    }

    fn label(&self) -> &str {
        &self.label
    }
}

/// The quotient 2-metric as an evaluator (arity fixed at 2); the fuzz
/// harness then checks the ordinary triangle inequality.
#[derive(Debug, Clone)]
pub struct GrassmannQuotientMetric {
    label: String,
}

impl GrassmannQuotientMetric {
    pub fn new(k: usize, m: usize) -> Self {
        GrassmannQuotientMetric {
            label: format!("grassmann-quotient(k={k}, m={m})"),
        }
    }
}

impl MetricEvaluator for GrassmannQuotientMetric {
    type Point = StiefelFrame;

    fn arity(&self) -> usize {
        2
    }

    fn evaluate(&self, tuple: &[StiefelFrame]) -> Result<f64> {
        d_grassmann_quotient(&tuple[0], &tuple[1])
    }

    fn label(&self) -> &str {
        &self.label
    }
}

// ── Samplers ────────────────────────────────────────────────────────────

/// Uniform points on the unit sphere of `R^dim`.
#[derive(Debug, Clone)]
pub struct UnitSphereSampler {
    pub dim: usize,
}

impl PointSampler for UnitSphereSampler {
    type Point = Vec<f64>;

    fn sample(&self, seed: u64, index: u64) -> Vec<f64> {
        let mut rng = Rng::new(seed).split(index);
        sample_unit_vector(&mut rng, self.dim)
    }

    fn description(&self) -> String {
        format!("uniform on the unit sphere of R^{}", self.dim)
    }
}

/// Random orthonormal frames in `St(k, m)`.
#[derive(Debug, Clone)]
pub struct StiefelSampler {
    pub k: usize,
    pub m: usize,
}

impl PointSampler for StiefelSampler {
    type Point = StiefelFrame;

    fn sample(&self, seed: u64, index: u64) -> StiefelFrame {
        let mut rng = Rng::new(seed).split(index);
        let a = sample_stiefel(&mut rng, self.k, self.m)
            .expect("Gaussian frames are full rank almost surely");
        StiefelFrame::new(a).expect("orthonormalized sample")
    }

    fn description(&self) -> String {
        format!("Haar-ish frames in St({}, {})", self.k, self.m)
    }
}

// ── Experimental quantities (surfaced through the CLI only) ────────────

/// Grid over `O(k)` used by the experimental n >= 3 quotient search and
/// the n = 2 cross-check: `rotations` angles, each with and without a
/// reflection. Only `k <= 2` is supported.
pub fn orthogonal_group_grid(k: usize, rotations: usize) -> Result<Vec<Matrix>> {
    match k {
        1 => Ok(vec![
            Matrix::from_rows(&[vec![1.0]]).expect("1x1"),
            Matrix::from_rows(&[vec![-1.0]]).expect("1x1"),
        ]),
        2 => {
            let mut grid = Vec::with_capacity(rotations * 2);
            for r in 0..rotations {
                let theta = std::f64::consts::TAU * r as f64 / rotations as f64;
                let (s, c) = theta.sin_cos();
                grid.push(Matrix::from_rows(&[vec![c, -s], vec![s, c]]).expect("2x2"));
                // reflection: rotation composed with diag(1, -1)
                grid.push(Matrix::from_rows(&[vec![c, s], vec![s, -c]]).expect("2x2"));
            }
            Ok(grid)
        }
        _ => Err(Error::Capacity(format!(
            "O(k) grid search is limited to k <= 2, got k={k}"
        ))),
    }
}

/// Coarse grid evaluation of the n-ary quotient candidate
/// `min_{Q_j} d_stiefel(A_1 Q_1, .., A_n Q_n)` (with `Q_1 = I`, which
/// loses nothing for n = 2 and is the standard reduction). Exact only in
/// the limit of an infinite grid; used to search for simplicial-inequality
/// violations of the conjectured-false n >= 3 extension.
pub fn quotient_candidate_grid(frames: &[StiefelFrame], grid: &[Matrix]) -> Result<f64> {
    let (_, _) = common_shape(frames)?;
    let n = frames.len();
    if n < 2 {
        return Err(Error::usage("need at least two frames"));
    }
    let mut assignment = vec![0usize; n - 1];
    let mut rotated = frames.to_vec();
    let mut best = f64::INFINITY;
    loop {
        for (idx, &g) in assignment.iter().enumerate() {
            rotated[idx + 1] = frames[idx + 1].rotate(&grid[g])?;
        }
        best = best.min(d_stiefel(&rotated)?);
        // odometer over grid assignments
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                return Ok(best);
            }
            assignment[pos] += 1;
            if assignment[pos] < grid.len() {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Experimental alternative wedge norm on projections: the exterior
/// n-form `(P_1 ^ .. ^ P_n)(F_1, .., F_n) = det(tr(P_i^T F_j))` maximized
/// over sampled argument matrices normalized in the spectral norm (or its
/// dual, the nuclear norm). No simplicial inequality is known for this
/// quantity; the sampled maximizer makes it a deterministic evaluator
/// that can at least be fuzzed.
#[derive(Debug, Clone)]
pub struct WedgeSpectralCandidate {
    n: usize,
    m: usize,
    samples: u64,
    seed: u64,
    /// false: spectral norm; true: its dual (sum of singular values)
    pub dual_norm: bool,
    label: String,
}

impl WedgeSpectralCandidate {
    pub fn new(
        n: usize,
        k: usize,
        m: usize,
        samples: u64,
        seed: u64,
        dual_norm: bool,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("arity must be at least 2"));
        }
        if samples == 0 {
            return Err(Error::usage("needs at least one sample"));
        }
        Ok(WedgeSpectralCandidate {
            n,
            m,
            samples,
            seed,
            dual_norm,
            label: format!(
                "wedge-spectral-experimental(n={n}, k={k}, m={m}, samples={samples}, dual={dual_norm})"
            ),
        })
    }
}

impl MetricEvaluator for WedgeSpectralCandidate {
    type Point = StiefelFrame;

    fn arity(&self) -> usize {
        self.n
    }

    fn evaluate(&self, tuple: &[StiefelFrame]) -> Result<f64> {
        let (_, m) = common_shape(tuple)?;
        if m != self.m {
            return Err(Error::usage(format!("frames must live in R^{}", self.m)));
        }
        let projections: Vec<ProjectionMatrix> = tuple.iter().map(projection_from_frame).collect();
        let n = self.n;
        let root = Rng::new(self.seed);
        let mut best = 0.0_f64;
        for trial in 0..self.samples {
            let mut rng = root.split(trial);
            let mut fs = Vec::with_capacity(n);
            let mut norm_prod = 1.0;
            for _ in 0..n {
                let f = Matrix::new(m, m, (0..m * m).map(|_| rng.next_normal()).collect())
                    .expect("finite Gaussians");
                let svd = svd_small(&f)?;
                let star = if self.dual_norm {
                    svd.singular_values.iter().sum::<f64>()
                } else {
                    svd.singular_values[0]
                };
                norm_prod *= star;
                fs.push(f);
            }
            let mut pairing = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    // tr(P_i^T F_j) as the duality pairing
                    pairing.set(i, j, hs_inner(projections[i].matrix(), &fs[j], 1)?);
                }
            }
            best = best.max(pairing.det()?.abs() / norm_prod);
        }
        Ok(best)
    }

    fn label(&self) -> &str {
        &self.label
    }
}
