//! Floating-point analysis of the linear wave operator `Γ^μ p_μ`: spectra,
//! plane-wave eigenspaces, cross currents and finite Lorentz covariance.
//!
//! Index contraction uses signature (+, −, −, −):
//! `Γ^μ p_μ = Γ⁰ p₀ − Γ¹ p₁ − Γ² p₂ − Γ³ p₃`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rep::Representation;
use crate::report::VerificationReport;
use crate::spinor::GeneratorName;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigenvalue and eigenvector residuals, relative to `‖D‖`.
    pub spectral: f64,
    /// Entry-wise deviation of `S Γ^μ S⁻¹` from the 4-vector law.
    pub covariance: f64,
    /// `|(p − p′)_μ j^μ|` relative to `(‖p‖ + ‖p′‖)·‖j‖`.
    pub current: f64,
    /// `‖g (Γ^μ)† g − Γ^μ‖` for the float matrices.
    pub pseudo_hermitian: f64,
    /// Largest accepted condition number of the eigenvector matrix.
    pub max_condition: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { spectral: 1e-9, covariance: 1e-8, current: 1e-9, pseudo_hermitian: 1e-12, max_condition: 1e12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl FourMomentum {
    pub fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        FourMomentum { p0, p1, p2, p3 }
    }

    pub fn at_rest(mass: f64) -> Self {
        FourMomentum::new(mass, 0.0, 0.0, 0.0)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.p1, self.p2, self.p3]
    }

    /// `s = p₀² − p₁² − p₂² − p₃²`.
    pub fn mass_squared(&self) -> f64 {
        self.p0 * self.p0 - self.p1 * self.p1 - self.p2 * self.p2 - self.p3 * self.p3
    }

    pub fn is_timelike(&self) -> bool {
        self.mass_squared() > 0.0
    }

    /// Euclidean length of the four components.
    pub fn norm(&self) -> f64 {
        self.components().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Rescales a timelike momentum to the given invariant mass.
    pub fn with_mass(&self, mass: f64) -> Self {
        let k = mass / self.mass_squared().sqrt();
        FourMomentum::new(self.p0 * k, self.p1 * k, self.p2 * k, self.p3 * k)
    }
}

impl FromStr for FourMomentum {
    type Err = Error;

    /// Parses `"p0,p1,p2,p3"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|x| x.trim().parse::<f64>().map_err(|e| Error::Parse(format!("momentum component {x:?}: {e}"))))
            .collect::<Result<_>>()?;
        match parts.as_slice() {
            [a, b, c, d] if parts.iter().all(|x| x.is_finite()) => Ok(FourMomentum::new(*a, *b, *c, *d)),
            _ => Err(Error::Parse(format!("expected four finite comma-separated numbers, got {s:?}"))),
        }
    }
}

impl fmt::Display for FourMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.p0, self.p1, self.p2, self.p3)
    }
}

/// Float matrices of `Γ^μ` and the spinor metric for one representation.
#[derive(Clone, Debug)]
pub struct FloatRepresentation {
    pub gammas: [CMatrix; 4],
    pub rotations: [CMatrix; 3],
    pub boosts: [CMatrix; 3],
    pub metric: CMatrix,
    /// `γ` label of each basis state, in basis order.
    pub gamma_labels: Vec<f64>,
}

impl FloatRepresentation {
    pub fn new(rep: &Representation) -> Self {
        let f = |g: GeneratorName| rep.matrix(g).to_complex();
        FloatRepresentation {
            gammas: [0, 1, 2, 3].map(|mu| f(GeneratorName::gamma(mu))),
            rotations: [0, 1, 2].map(|k| f(GeneratorName::rotation(k))),
            boosts: [0, 1, 2].map(|k| f(GeneratorName::boost(k))),
            metric: rep.metric().to_matrix().to_complex(),
            gamma_labels: rep.basis().labels().map(|l| l.gamma.to_f64()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.metric.nrows()
    }
}

/// `Γ⁰ p₀ − Γ·p`.
pub fn slash(rep: &FloatRepresentation, p: &FourMomentum) -> CMatrix {
    let c = p.components();
    let mut d = &rep.gammas[0] * Complex64::from(c[0]);
    for (g, x) in rep.gammas.iter().zip(c).skip(1) {
        d -= g * Complex64::from(x);
    }
    d
}

fn spectral_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.max()
}

#[derive(Clone, Debug)]
pub struct SpectrumResult {
    /// Sorted by descending real part, then descending imaginary part.
    pub eigenvalues: Vec<Complex64>,
    /// Unit eigenvectors as columns, aligned with `eigenvalues`.
    pub eigenvectors: CMatrix,
    /// `max_k ‖D v_k − λ_k v_k‖ / ‖D‖`.
    pub residual: f64,
    /// Condition number of the eigenvector matrix.
    pub condition: f64,
    pub operator_norm: f64,
}

impl SpectrumResult {
    pub fn eigenvector(&self, k: usize) -> CVector {
        self.eigenvectors.column(k).into_owned()
    }

    /// Indices of eigenvalues within `tol` of `lambda`.
    pub fn modes_near(&self, lambda: Complex64, tol: f64) -> Vec<usize> {
        self.eigenvalues.iter().enumerate().filter(|(_, l)| (*l - lambda).norm() <= tol).map(|(i, _)| i).collect()
    }
}

fn complex_pair<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

#[derive(Serialize)]
struct Pair(#[serde(serialize_with = "complex_pair")] Complex64);

impl Serialize for SpectrumResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            eigenvalues: Vec<Pair>,
            eigenvectors: Vec<Vec<Pair>>,
            residual: f64,
            condition: f64,
        }
        let n = self.eigenvectors.nrows();
        Out {
            eigenvalues: self.eigenvalues.iter().map(|z| Pair(*z)).collect(),
            eigenvectors: (0..n).map(|i| (0..n).map(|j| Pair(self.eigenvectors[(i, j)])).collect()).collect(),
            residual: self.residual,
            condition: self.condition,
        }
        .serialize(serializer)
    }
}

/// Full eigendecomposition of `D = Γ^μ p_μ`.
///
/// Eigenvalues come from a complex Schur form and are grouped into clusters;
/// each cluster's eigenspace is the span of the right singular vectors of
/// `D − λ I` belonging to its smallest singular values. A cluster whose
/// eigenspace is smaller than its multiplicity is defective.
pub fn spectrum(rep: &FloatRepresentation, p: &FourMomentum, tol: &Tolerances) -> Result<SpectrumResult> {
    let d = slash(rep, p);
    let n = d.nrows();
    let norm = spectral_norm(&d);
    if n == 0 || norm == 0.0 {
        return Ok(SpectrumResult {
            eigenvalues: vec![Complex64::new(0.0, 0.0); n],
            eigenvectors: CMatrix::identity(n, n),
            residual: 0.0,
            condition: 1.0,
            operator_norm: norm,
        });
    }
    let schur = nalgebra::Schur::try_new(d.clone(), f64::EPSILON, 10_000)
        .ok_or(Error::IllConditioned(f64::INFINITY))?;
    let (_, t) = schur.unpack();
    let mut raw: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    raw.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));

    // Degenerate eigenvalues of a non-normal matrix split by O(√ε·‖D‖).
    let cluster_tol = 1e-5 * norm;
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for z in raw {
        match clusters.last_mut() {
            Some(c) if (c[0] - z).norm() <= cluster_tol => c.push(z),
            _ => clusters.push(vec![z]),
        }
    }

    let null_tol = 1e3 * tol.spectral * norm;
    let mut eigenvalues = Vec::with_capacity(n);
    let mut columns: Vec<CVector> = Vec::with_capacity(n);
    for c in clusters {
        let k = c.len();
        let lambda = c.iter().sum::<Complex64>() / k as f64;
        let shifted = &d - CMatrix::identity(n, n) * lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t.expect("requested right singular vectors");
        let sv = &svd.singular_values;
        // singular values are sorted descending
        for i in (n - k)..n {
            if sv[i] > null_tol {
                return Err(Error::IllConditioned(f64::INFINITY));
            }
            eigenvalues.push(lambda);
            columns.push(v_t.row(i).adjoint());
        }
    }
    let vectors = CMatrix::from_columns(&columns);
    let svals = vectors.clone().svd(false, false).singular_values;
    let condition = svals.max() / svals.min();
    if condition.is_nan() || condition > tol.max_condition {
        return Err(Error::IllConditioned(condition));
    }
    let residual = (0..n)
        .map(|k| (&d * vectors.column(k) - vectors.column(k) * eigenvalues[k]).norm() / norm)
        .fold(0.0, f64::max);
    Ok(SpectrumResult { eigenvalues, eigenvectors: vectors, residual, condition, operator_norm: norm })
}

/// Eigenvalues expected for timelike `p`: `γ·√s` for every basis label γ,
/// in descending order.
pub fn expected_spectrum(rep: &FloatRepresentation, p: &FourMomentum) -> Vec<f64> {
    let m = p.mass_squared().sqrt();
    let mut v: Vec<f64> = rep.gamma_labels.iter().map(|g| g * m).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// `max_k |λ_k − γ_k √s| / ‖D‖` after sorting both sides.
pub fn spectral_deviation(rep: &FloatRepresentation, p: &FourMomentum, result: &SpectrumResult) -> f64 {
    let expected = expected_spectrum(rep, p);
    if result.operator_norm == 0.0 {
        return result.eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
    }
    result
        .eigenvalues
        .iter()
        .zip(&expected)
        .map(|(z, e)| (z - Complex64::from(*e)).norm() / result.operator_norm)
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurrentVector {
    #[serde(serialize_with = "complex_pair")]
    pub j0: Complex64,
    #[serde(serialize_with = "complex_pair")]
    pub j1: Complex64,
    #[serde(serialize_with = "complex_pair")]
    pub j2: Complex64,
    #[serde(serialize_with = "complex_pair")]
    pub j3: Complex64,
}

impl CurrentVector {
    pub fn components(&self) -> [Complex64; 4] {
        [self.j0, self.j1, self.j2, self.j3]
    }

    pub fn norm(&self) -> f64 {
        self.components().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|(p − p′)_μ j^μ|` with signature (+, −, −, −).
    pub fn conservation_residual(&self, p: &FourMomentum, p_prime: &FourMomentum) -> f64 {
        let (a, b) = (p.components(), p_prime.components());
        let j = self.components();
        let mut s = j[0] * (a[0] - b[0]);
        for k in 1..4 {
            s -= j[k] * (a[k] - b[k]);
        }
        s.norm()
    }

    /// Largest `|Im j^μ|` relative to `‖j‖`.
    pub fn imaginary_fraction(&self) -> f64 {
        let n = self.norm();
        if n == 0.0 {
            return 0.0;
        }
        self.components().iter().map(|z| z.im.abs()).fold(0.0, f64::max) / n
    }
}

/// Rayleigh quotient `u† D u / u† u`.
fn rayleigh(d: &CMatrix, u: &CVector) -> Complex64 {
    (u.adjoint() * d * u)[(0, 0)] / u.norm_squared()
}

/// Cross current `j^μ = u′† g Γ^μ u` between a mode `u` at `p` and a mode
/// `u′` at `p′` with the same eigenvalue.
pub fn plane_wave_current(
    rep: &FloatRepresentation,
    p: &FourMomentum,
    u: &CVector,
    p_prime: &FourMomentum,
    u_prime: &CVector,
    tol: &Tolerances,
) -> Result<CurrentVector> {
    if u.len() != rep.dim() || u_prime.len() != rep.dim() {
        return Err(Error::DimensionMismatch(rep.dim(), u.len().max(u_prime.len())));
    }
    let lambda = rayleigh(&slash(rep, p), u);
    let lambda_prime = rayleigh(&slash(rep, p_prime), u_prime);
    if (lambda - lambda_prime).norm() > tol.spectral {
        return Err(Error::EigenvalueMismatch(lambda.re, lambda_prime.re));
    }
    let left = u_prime.adjoint() * &rep.metric;
    let j = rep.gammas.each_ref().map(|g| (&left * g * u)[(0, 0)]);
    Ok(CurrentVector { j0: j[0], j1: j[1], j2: j[2], j3: j[3] })
}

/// Matrix exponential (scaling and squaring with a Padé approximant).
pub fn expm(a: &CMatrix) -> CMatrix {
    a.exp()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Rotation,
    Boost,
}

/// A finite rotation (angle) or boost (rapidity) about a unit axis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Transformation {
    pub kind: TransformKind,
    pub axis: [f64; 3],
    pub parameter: f64,
}

impl Transformation {
    /// Normalizes `axis`.
    pub fn new(kind: TransformKind, axis: [f64; 3], parameter: f64) -> Result<Self> {
        let n = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n.is_nan() || n == 0.0 || !parameter.is_finite() {
            return Err(Error::Parse("transformation needs a nonzero axis and a finite parameter".into()));
        }
        Ok(Transformation { kind, axis: axis.map(|x| x / n), parameter })
    }

    /// Parses `"x,angle"` style shorthands (`x`, `y`, `z`) or `"nx,ny,nz,angle"`.
    pub fn parse(kind: TransformKind, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let num = |x: &str| x.parse::<f64>().map_err(|e| Error::Parse(format!("{x:?}: {e}")));
        let (axis, value) = match parts.as_slice() {
            [a, v] => {
                let axis = match *a {
                    "x" => [1.0, 0.0, 0.0],
                    "y" => [0.0, 1.0, 0.0],
                    "z" => [0.0, 0.0, 1.0],
                    other => return Err(Error::Parse(format!("unknown axis {other:?}"))),
                };
                (axis, num(v)?)
            }
            [x, y, z, v] => ([num(x)?, num(y)?, num(z)?], num(v)?),
            _ => return Err(Error::Parse(format!("expected \"axis,value\" or \"nx,ny,nz,value\", got {s:?}"))),
        };
        Transformation::new(kind, axis, value)
    }

    fn generators<'a>(&self, rep: &'a FloatRepresentation) -> &'a [CMatrix; 3] {
        match self.kind {
            TransformKind::Rotation => &rep.rotations,
            TransformKind::Boost => &rep.boosts,
        }
    }

    /// `i·parameter·(n·G)` with G the rotation or boost generators.
    pub fn algebra_element(&self, rep: &FloatRepresentation) -> CMatrix {
        let g = self.generators(rep);
        let mut a = CMatrix::zeros(rep.dim(), rep.dim());
        for k in 0..3 {
            a += &g[k] * Complex64::new(0.0, self.parameter * self.axis[k]);
        }
        a
    }

    /// `S = exp(i·parameter·n·G)`.
    pub fn group_element(&self, rep: &FloatRepresentation) -> CMatrix {
        expm(&self.algebra_element(rep))
    }

    /// First-order product formula `(Π_k exp(i·parameter·n_k G_k / steps))^steps`.
    pub fn split_group_element(&self, rep: &FloatRepresentation, steps: u32) -> CMatrix {
        let g = self.generators(rep);
        let h = self.parameter / steps as f64;
        let mut step = CMatrix::identity(rep.dim(), rep.dim());
        for k in 0..3 {
            step *= expm(&(&g[k] * Complex64::new(0.0, h * self.axis[k])));
        }
        let mut s = CMatrix::identity(rep.dim(), rep.dim());
        for _ in 0..steps {
            s = &s * &step;
        }
        s
    }

    /// 4×4 matrix `L` with `S Γ^μ S⁻¹ = Σ_ν L[μ][ν] Γ^ν`.
    ///
    /// Rotation: `Γ⁰` is fixed and `Γ ↦ cos θ Γ + sin θ (n × Γ) + (1 − cos θ) n (n·Γ)`.
    /// Boost: `Γ⁰ ↦ cosh η Γ⁰ − sinh η n·Γ` and
    /// `Γ ↦ Γ + (cosh η − 1) n (n·Γ) − sinh η n Γ⁰`.
    pub fn vector_matrix(&self) -> [[f64; 4]; 4] {
        let n = self.axis;
        let mut l = [[0.0; 4]; 4];
        match self.kind {
            TransformKind::Rotation => {
                let (s, c) = self.parameter.sin_cos();
                l[0][0] = 1.0;
                for j in 0..3 {
                    for m in 0..3 {
                        let mut cross = 0.0;
                        for k in 0..3 {
                            cross += levi_civita(j, k, m) * n[k];
                        }
                        let delta = if j == m { 1.0 } else { 0.0 };
                        l[j + 1][m + 1] = c * delta + s * cross + (1.0 - c) * n[j] * n[m];
                    }
                }
            }
            TransformKind::Boost => {
                let (ch, sh) = (self.parameter.cosh(), self.parameter.sinh());
                l[0][0] = ch;
                for j in 0..3 {
                    l[0][j + 1] = -sh * n[j];
                    l[j + 1][0] = -sh * n[j];
                    for m in 0..3 {
                        let delta = if j == m { 1.0 } else { 0.0 };
                        l[j + 1][m + 1] = delta + (ch - 1.0) * n[j] * n[m];
                    }
                }
            }
        }
        l
    }
}

fn levi_civita(j: usize, k: usize, m: usize) -> f64 {
    match (j, k, m) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entry of `S Γ^μ S⁻¹ − Σ_ν L[μ][ν] Γ^ν` over μ, for a given `S`.
pub fn covariance_deviation_with(rep: &FloatRepresentation, t: &Transformation, s: &CMatrix) -> f64 {
    let inverse = expm(&(-t.algebra_element(rep)));
    let l = t.vector_matrix();
    let mut worst: f64 = 0.0;
    for mu in 0..4 {
        let lhs = s * &rep.gammas[mu] * &inverse;
        let mut rhs = CMatrix::zeros(rep.dim(), rep.dim());
        for nu in 0..4 {
            rhs += &rep.gammas[nu] * Complex64::from(l[mu][nu]);
        }
        worst = worst.max(max_abs(&(lhs - rhs)));
    }
    worst
}

pub fn covariance_deviation(rep: &FloatRepresentation, t: &Transformation) -> f64 {
    covariance_deviation_with(rep, t, &t.group_element(rep))
}

pub fn covariance_check(rep: &FloatRepresentation, t: &Transformation, tol: &Tolerances) -> VerificationReport {
    let mut report = VerificationReport::new(None);
    let kind = match t.kind {
        TransformKind::Rotation => "rotation",
        TransformKind::Boost => "boost",
    };
    report.float(
        format!("covariance.{kind}"),
        covariance_deviation(rep, t),
        tol.covariance,
        format!("axis ({:.6}, {:.6}, {:.6}), parameter {}", t.axis[0], t.axis[1], t.axis[2], t.parameter),
    );
    report
}

/// Deviations of the split exponential for `steps` = 1, 2, 4.
pub fn product_formula_deviations(rep: &FloatRepresentation, t: &Transformation) -> [f64; 3] {
    [1, 2, 4].map(|k| covariance_deviation_with(rep, t, &t.split_group_element(rep, k)))
}

/// `‖g (Γ^μ)† g − Γ^μ‖` (largest entry) over μ.
pub fn pseudo_hermitian_deviation(rep: &FloatRepresentation) -> f64 {
    rep.gammas.iter().map(|g| max_abs(&(&rep.metric * g.adjoint() * &rep.metric - g))).fold(0.0, f64::max)
}

/// Results of one dispersion run.
#[derive(Clone, Debug, Serialize)]
pub struct DispersionAnalysis {
    pub momentum: FourMomentum,
    pub mass_squared: f64,
    /// Absent when `Γ^μ p_μ` is not diagonalizable (lightlike `p`).
    pub spectrum: Option<SpectrumResult>,
    pub expected_eigenvalues: Option<Vec<f64>>,
    pub current: Option<CrossCurrent>,
    pub warnings: Vec<String>,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCurrent {
    pub p_prime: FourMomentum,
    #[serde(serialize_with = "complex_pair")]
    pub eigenvalue: Complex64,
    pub current: CurrentVector,
    pub residual: f64,
}

#[derive(Clone, Debug, Default)]
pub struct DispersionRequest {
    pub p: Option<FourMomentum>,
    /// Second momentum for the cross current; rescaled to the mass of `p`.
    pub p_prime: Option<FourMomentum>,
    pub rotation: Option<Transformation>,
    pub boost: Option<Transformation>,
    pub tolerances: Tolerances,
}

/// Spectrum of `Γ^μ p_μ`, optional cross current with a second momentum,
/// and optional covariance checks.
///
/// A defective operator is a hard failure for timelike `p` and a warning
/// otherwise.
pub fn analyze(rep: &FloatRepresentation, lambda: crate::half::HalfInteger, req: &DispersionRequest) -> Result<DispersionAnalysis> {
    let tol = &req.tolerances;
    let p = req.p.unwrap_or(FourMomentum::at_rest(1.0));
    let mut report = VerificationReport::new(Some(lambda));
    let mut warnings = Vec::new();
    report.float(
        "pseudo_hermitian.float",
        pseudo_hermitian_deviation(rep),
        tol.pseudo_hermitian,
        "g (Γ^μ)† g = Γ^μ in floating point",
    );
    let spec = match spectrum(rep, &p, tol) {
        Ok(s) => Some(s),
        Err(e @ Error::IllConditioned(_)) if !p.is_timelike() => {
            warnings.push(format!("p = {p} is not timelike: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let mut expected = None;
    if let Some(spec) = &spec {
        report.float("spectrum.residual", spec.residual, tol.spectral, format!("condition number {:.3e}", spec.condition));
        if p.is_timelike() {
            let dev = spectral_deviation(rep, &p, spec);
            report.float("spectrum.covariance", dev, tol.spectral, format!("eigenvalues γ·√s with s = {}", p.mass_squared()));
            expected = Some(expected_spectrum(rep, &p));
        }
    }

    let mut current = None;
    if let Some(pp) = req.p_prime {
        match &spec {
            Some(spec) if p.is_timelike() && pp.is_timelike() && rep.dim() > 0 => {
                let pp = pp.with_mass(p.mass_squared().sqrt());
                let spec_prime = spectrum(rep, &pp, tol)?;
                // highest eigenvalue mode at each momentum
                let lambda_top = spec.eigenvalues[0];
                let u = spec.eigenvector(0);
                let idx = spec_prime
                    .modes_near(lambda_top, 1e3 * tol.spectral * spec_prime.operator_norm.max(1.0))
                    .first()
                    .copied()
                    .ok_or(Error::EigenvalueMismatch(lambda_top.re, spec_prime.eigenvalues[0].re))?;
                let u_prime = spec_prime.eigenvector(idx);
                let j = plane_wave_current(rep, &p, &u, &pp, &u_prime, tol)?;
                let residual = j.conservation_residual(&p, &pp);
                let scale = (p.norm() + pp.norm()) * j.norm();
                let relative = if scale > 0.0 { residual / scale } else { residual };
                report.float("current.conservation", relative, tol.current, format!("|(p − p′)·j| = {residual:.3e}"));
                current = Some(CrossCurrent { p_prime: pp, eigenvalue: lambda_top, current: j, residual });
            }
            _ => warnings.push("cross current needs timelike p and p′ and a nontrivial representation".into()),
        }
    }

    for t in [req.rotation, req.boost].into_iter().flatten() {
        report.extend(covariance_check(rep, &t, tol));
    }

    Ok(DispersionAnalysis {
        momentum: p,
        mass_squared: p.mass_squared(),
        spectrum: spec,
        expected_eigenvalues: expected,
        current,
        warnings,
        report,
    })
}
