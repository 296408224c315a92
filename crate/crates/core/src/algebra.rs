//! The abstract ten-generator algebra: commutator table, structure constants,
//! ladder-form relations, Casimir, group metric and bar symmetry, checked
//! exactly against generated matrices.

use serde::{Deserialize, Serialize};

use crate::half::HalfInteger;
use crate::matrix::{commutator, ExactMatrix};
use crate::rep::Representation;
use crate::report::VerificationReport;
use crate::scalar::{ComplexScalar, Rational};
use crate::spinor::{Charge, GeneratorName};

/// Basis index order: J₁ J₂ J₃ K₁ K₂ K₃ Γ⁰ Γ¹ Γ² Γ³.
pub const BASIS: [GeneratorName; 10] = GeneratorName::BASIS;

const J: usize = 0;
const K: usize = 3;
const G0: usize = 6;
const G: usize = 6;

fn int(n: i64) -> ComplexScalar {
    ComplexScalar::from_integer(n)
}

fn i_times(n: i64) -> ComplexScalar {
    ComplexScalar::imag(crate::scalar::RadicalScalar::from_integer(n))
}

fn epsilon(j: usize, k: usize, m: usize) -> i64 {
    match (j, k, m) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `[J_j, J_k] = iε J`, `[J_j, K_k] = iε K`, `[K_j, K_k] = −iε J`,
/// `[Γ⁰, Γ^k] = i K_k`, `[Γ⁰, J_k] = 0`, `[Γ⁰, K_k] = −i Γ^k`,
/// `[Γ^j, Γ^k] = −iε J`, `[Γ^j, J_k] = iε Γ`, `[Γ^j, K_k] = −i δ Γ⁰`.
/// Returns `None` when the ordered pair is only given with reversed order.
fn table_entry(a: usize, b: usize) -> Option<Vec<(ComplexScalar, usize)>> {
    let eps = |j: usize, k: usize, scale: i64, base: usize| -> Vec<(ComplexScalar, usize)> {
        (0..3).filter(|&m| epsilon(j, k, m) != 0).map(|m| (i_times(scale * epsilon(j, k, m)), base + m)).collect()
    };
    let kind = |x: usize| match x {
        0..=2 => 'J',
        3..=5 => 'K',
        6 => '0',
        _ => 'G',
    };
    let (ka, kb) = (kind(a), kind(b));
    let ja = if a >= 7 { a - 7 } else { a % 3 };
    let jb = if b >= 7 { b - 7 } else { b % 3 };
    Some(match (ka, kb) {
        ('J', 'J') => eps(ja, jb, 1, J),
        ('J', 'K') => eps(ja, jb, 1, K),
        ('K', 'K') => eps(ja, jb, -1, J),
        ('0', 'G') => vec![(i_times(1), K + jb)],
        ('0', 'J') => vec![],
        ('0', 'K') => vec![(i_times(-1), G + 1 + jb)],
        ('0', '0') => vec![],
        ('G', 'G') => eps(ja, jb, -1, J),
        ('G', 'J') => eps(ja, jb, 1, G + 1),
        ('G', 'K') => {
            if ja == jb {
                vec![(i_times(-1), G0)]
            } else {
                vec![]
            }
        }
        _ => return None,
    })
}

/// `f[a][b][c]` with `[G_a, G_b] = Σ_c f[a][b][c] G_c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub f: Vec<Vec<Vec<ComplexScalar>>>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize, c: usize) -> &ComplexScalar {
        &self.f[a][b][c]
    }

    /// Bracket of two linear combinations of the basis.
    pub fn bracket(&self, x: &[ComplexScalar], y: &[ComplexScalar]) -> Vec<ComplexScalar> {
        let mut out = vec![ComplexScalar::zero(); 10];
        for a in 0..10 {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..10 {
                if y[b].is_zero() {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for (c, o) in out.iter_mut().enumerate() {
                    if !self.f[a][b][c].is_zero() {
                        *o += &(&xy * &self.f[a][b][c]);
                    }
                }
            }
        }
        out
    }

    /// Largest violation of `Σ_d f[a][b][d] f[d][c][e] + cyclic = 0`.
    pub fn jacobi_deviation(&self) -> ComplexScalar {
        let mut worst = ComplexScalar::zero();
        let unit = |i: usize| {
            let mut v = vec![ComplexScalar::zero(); 10];
            v[i] = int(1);
            v
        };
        for a in 0..10 {
            for b in 0..10 {
                for c in 0..10 {
                    let (ua, ub, uc) = (unit(a), unit(b), unit(c));
                    let t1 = self.bracket(&self.bracket(&ua, &ub), &uc);
                    let t2 = self.bracket(&self.bracket(&ub, &uc), &ua);
                    let t3 = self.bracket(&self.bracket(&uc, &ua), &ub);
                    for e in 0..10 {
                        let s = &(&t1[e] + &t2[e]) + &t3[e];
                        if !s.is_zero() {
                            worst = s;
                        }
                    }
                }
            }
        }
        worst
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..10).all(|a| (0..10).all(|b| (0..10).all(|c| self.f[a][b][c] == -&self.f[b][a][c])))
    }
}

pub fn structure_constants() -> StructureConstants {
    let mut f = vec![vec![vec![ComplexScalar::zero(); 10]; 10]; 10];
    for a in 0..10 {
        for b in 0..10 {
            if let Some(rhs) = table_entry(a, b) {
                for (c, idx) in rhs {
                    f[b][a][idx] = -&c;
                    f[a][b][idx] = c;
                }
            }
        }
    }
    StructureConstants { f }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommutatorRule {
    pub lhs: (GeneratorName, GeneratorName),
    pub rhs: Vec<(ComplexScalar, GeneratorName)>,
}

impl CommutatorRule {
    pub fn name(&self) -> String {
        format!("[{},{}]", self.lhs.0, self.lhs.1)
    }

    fn rhs_matrix(&self, rep: &Representation) -> ExactMatrix {
        self.rhs.iter().fold(ExactMatrix::zeros(rep.dim()), |acc, (c, g)| acc.add(&rep.matrix(*g).scale(c)))
    }

    /// `[A, B] − rhs` as a matrix.
    pub fn residual(&self, rep: &Representation) -> ExactMatrix {
        let lhs = commutator(rep.matrix(self.lhs.0), rep.matrix(self.lhs.1)).expect("same representation");
        lhs.sub(&self.rhs_matrix(rep))
    }
}

/// The 45 unordered pairs of basis generators, in basis order.
pub fn commutator_rules() -> Vec<CommutatorRule> {
    let f = structure_constants();
    let mut out = Vec::new();
    for a in 0..10 {
        for b in (a + 1)..10 {
            let rhs = (0..10).filter(|&c| !f.f[a][b][c].is_zero()).map(|c| (f.f[a][b][c].clone(), BASIS[c])).collect();
            out.push(CommutatorRule { lhs: (BASIS[a], BASIS[b]), rhs });
        }
    }
    out
}

/// One instance of a ladder-form relation, tagged with its family number
/// (1..=16, in the order the families are usually listed).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderRelation {
    pub family: usize,
    pub rule: CommutatorRule,
}

/// All instances of the sixteen ladder-form relation families.
pub fn ladder_relations() -> Vec<LadderRelation> {
    use GeneratorName as Gn;
    let mut out = Vec::new();
    let mut push = |family: usize, a: Gn, b: Gn, rhs: Vec<(ComplexScalar, Gn)>| {
        out.push(LadderRelation { family, rule: CommutatorRule { lhs: (a, b), rhs } });
    };
    let charges = [Charge::Plus, Charge::Minus];
    let signs = [1i64, -1];
    let all_deltas = || {
        charges.iter().flat_map(|&t| {
            [Gn::delta_z(t), Gn::delta_ladder(1, t), Gn::delta_ladder(-1, t)].into_iter().map(move |d| (t, d))
        })
    };

    // 1. [Γ⁰, J_k] = 0
    for k in 0..3 {
        push(1, Gn::Gamma0, Gn::rotation(k), vec![]);
    }
    // 2. [Γ⁰, Δ_k^{(t)}] = t Δ_k^{(t)}
    for (t, d) in all_deltas() {
        push(2, Gn::Gamma0, d, vec![(int(t.sign()), d)]);
    }
    // 3. [J_z, J_s] = s J_s
    for s in signs {
        push(3, Gn::Jz, Gn::j_ladder(s), vec![(int(s), Gn::j_ladder(s))]);
    }
    // 4. [J_+, J_-] = 2 J_z
    push(4, Gn::JPlus, Gn::JMinus, vec![(int(2), Gn::Jz)]);
    for t in charges {
        // 5. [J_z, Δ_z^{(t)}] = 0
        push(5, Gn::Jz, Gn::delta_z(t), vec![]);
        for s in signs {
            // 6. [J_z, Δ_s^{(t)}] = s Δ_s^{(t)}
            push(6, Gn::Jz, Gn::delta_ladder(s, t), vec![(int(s), Gn::delta_ladder(s, t))]);
            // 7. [J_s, Δ_s^{(t)}] = 0
            push(7, Gn::j_ladder(s), Gn::delta_ladder(s, t), vec![]);
            // 8. [J_s, Δ_{−s}^{(t)}] = 2s Δ_z^{(t)}
            push(8, Gn::j_ladder(s), Gn::delta_ladder(-s, t), vec![(int(2 * s), Gn::delta_z(t))]);
            // 9. [J_s, Δ_z^{(t)}] = −s Δ_s^{(t)}
            push(9, Gn::j_ladder(s), Gn::delta_z(t), vec![(int(-s), Gn::delta_ladder(s, t))]);
        }
    }
    // 10. [Δ_z⁺, Δ_z⁻] = −2 Γ⁰
    push(10, Gn::DeltaZPlus, Gn::DeltaZMinus, vec![(int(-2), Gn::Gamma0)]);
    for t in charges {
        for s in signs {
            // 11. [Δ_z^{(t)}, Δ_s^{(t)}] = 0
            push(11, Gn::delta_z(t), Gn::delta_ladder(s, t), vec![]);
            // 12, 13. [Δ_z^{(t)}, Δ_s^{(−t)}] = −2s J_s
            let family = if t == Charge::Plus { 12 } else { 13 };
            push(family, Gn::delta_z(t), Gn::delta_ladder(s, t.flip()), vec![(int(-2 * s), Gn::j_ladder(s))]);
        }
        // 14. [Δ_+^{(t)}, Δ_-^{(t)}] = 0
        push(14, Gn::delta_ladder(1, t), Gn::delta_ladder(-1, t), vec![]);
    }
    // 15. [Δ_s⁺, Δ_s⁻] = 0
    for s in signs {
        push(15, Gn::delta_ladder(s, Charge::Plus), Gn::delta_ladder(s, Charge::Minus), vec![]);
    }
    // 16. [Δ_+^{(t)}, Δ_-^{(−t)}] = −4 (J_z + t Γ⁰)
    for t in charges {
        push(
            16,
            Gn::delta_ladder(1, t),
            Gn::delta_ladder(-1, t.flip()),
            vec![(int(-4), Gn::Jz), (int(-4 * t.sign()), Gn::Gamma0)],
        );
    }
    out
}

/// Coordinates of a linear generator in [`BASIS`]; `None` for the quadratic
/// ones (`Δ_J`, `C`, `J²`).
pub fn basis_expansion(g: GeneratorName) -> Option<Vec<ComplexScalar>> {
    use GeneratorName as Gn;
    let mut v = vec![ComplexScalar::zero(); 10];
    let i = ComplexScalar::i();
    let delta = |v: &mut Vec<ComplexScalar>, k: usize, t: i64, c: &ComplexScalar| {
        // Δ_k^{(t)} = Γ^k + t i K_k
        v[G + 1 + k] += c;
        v[K + k] += &(&(c * &i) * &int(t));
    };
    match g {
        Gn::Jx | Gn::Jy | Gn::Jz | Gn::K1 | Gn::K2 | Gn::K3 | Gn::Gamma0 | Gn::Gamma1 | Gn::Gamma2 | Gn::Gamma3 => {
            v[BASIS.iter().position(|&b| b == g).unwrap()] = int(1);
        }
        Gn::JPlus | Gn::JMinus => {
            let s = if g == Gn::JPlus { 1 } else { -1 };
            v[J] = int(1);
            v[J + 1] = &i * &int(s);
        }
        Gn::DeltaZPlus | Gn::DeltaZMinus => {
            let t = if g == Gn::DeltaZPlus { 1 } else { -1 };
            delta(&mut v, 2, t, &int(1));
        }
        Gn::DeltaPlusPlus | Gn::DeltaPlusMinus | Gn::DeltaMinusPlus | Gn::DeltaMinusMinus => {
            let s = if matches!(g, Gn::DeltaPlusPlus | Gn::DeltaPlusMinus) { 1 } else { -1 };
            let t = if matches!(g, Gn::DeltaPlusPlus | Gn::DeltaMinusPlus) { 1 } else { -1 };
            // Δ_s = Δ_x + s i Δ_y
            delta(&mut v, 0, t, &int(1));
            delta(&mut v, 1, t, &(&i * &int(s)));
        }
        Gn::DeltaJPlus | Gn::DeltaJMinus | Gn::Casimir | Gn::JSquared => return None,
    }
    Some(v)
}

fn combination(rhs: &[(ComplexScalar, GeneratorName)]) -> Vec<ComplexScalar> {
    let mut out = vec![ComplexScalar::zero(); 10];
    for (c, g) in rhs {
        let e = basis_expansion(*g).expect("ladder relations involve linear generators only");
        for (o, x) in out.iter_mut().zip(e) {
            *o += &(c * &x);
        }
    }
    out
}

/// Checks every ladder-form relation symbolically in the abstract algebra,
/// after expanding `Δ_k^{(±)} = Γ^k ± i K_k` and `J_± = J_x ± i J_y`.
pub fn ladder_table_consistency() -> VerificationReport {
    let f = structure_constants();
    let mut report = VerificationReport::new(None);
    for rel in ladder_relations() {
        let a = basis_expansion(rel.rule.lhs.0).unwrap();
        let b = basis_expansion(rel.rule.lhs.1).unwrap();
        let lhs = f.bracket(&a, &b);
        let rhs = combination(&rel.rule.rhs);
        let dev = lhs.iter().zip(&rhs).map(|(x, y)| x - y).find(|d| !d.is_zero()).unwrap_or_default();
        report.exact(format!("ladder_symbolic.{}.{}", rel.family, rel.rule.name()), dev, "follows from the J/K/Γ table");
    }
    report
}

/// All 45 basis commutators and every ladder-form relation as exact matrix
/// identities.
pub fn check_commutator_tables(rep: &Representation) -> VerificationReport {
    let mut report = VerificationReport::new(Some(rep.lambda()));
    for rule in commutator_rules() {
        report.matrix_zero(format!("commutator.{}", rule.name()), &rule.residual(rep), rhs_text(&rule.rhs));
    }
    for rel in ladder_relations() {
        report.matrix_zero(
            format!("ladder.{}.{}", rel.family, rel.rule.name()),
            &rel.rule.residual(rep),
            rhs_text(&rel.rule.rhs),
        );
    }
    report
}

fn rhs_text(rhs: &[(ComplexScalar, GeneratorName)]) -> String {
    if rhs.is_empty() {
        return "= 0".into();
    }
    let terms: Vec<String> = rhs.iter().map(|(c, g)| format!("({c})·{g}")).collect();
    format!("= {}", terms.join(" + "))
}

/// `C = J·J − K·K + Γ⁰Γ⁰ − Γ·Γ` built from matrices.
pub fn casimir_matrix(rep: &Representation) -> ExactMatrix {
    use GeneratorName as Gn;
    let sq = |g: Gn| rep.matrix(g).mul(rep.matrix(g));
    let mut c = sq(Gn::Gamma0);
    for k in 0..3 {
        c = c.add(&sq(Gn::rotation(k))).sub(&sq(Gn::boost(k))).sub(&sq(Gn::gamma(k + 1)));
    }
    c
}

pub fn casimir_check(rep: &Representation) -> VerificationReport {
    let lambda = rep.lambda();
    let mut report = VerificationReport::new(Some(lambda));
    let c = casimir_matrix(rep);
    let value = &(&Rational::from_integer(2) * &lambda.to_rational()) * &(lambda + HalfInteger::from_int(2)).to_rational();
    let expected = ExactMatrix::identity(rep.dim()).scale(&ComplexScalar::from_rational(value.clone()));
    report.matrix_zero("casimir.value", &c.sub(&expected), format!("C = {value}·1"));
    report.matrix_zero(
        "casimir.operator_matrix",
        &c.sub(rep.matrix(GeneratorName::Casimir)),
        "matrix product form equals the operator's matrix",
    );
    for g in BASIS {
        report.matrix_zero(format!("casimir.commutes.{g}"), &commutator(&c, rep.matrix(g)).unwrap(), "[C, G] = 0");
    }
    report
}

/// Adjoint matrices `(g_a)[r][s] = i f[r][a][s]`, so that
/// `[G_r, G_s] = −i (g_s)_r^m G_m`.
pub fn adjoint_matrices() -> Vec<ExactMatrix> {
    let f = structure_constants();
    let i = ComplexScalar::i();
    (0..10).map(|a| ExactMatrix::from_fn(10, |r, s| &i * &f.f[r][a][s])).collect()
}

/// `η_ab = tr(g_a g_b)`.
pub fn group_metric() -> ExactMatrix {
    let g = adjoint_matrices();
    ExactMatrix::from_fn(10, |a, b| g[a].mul(&g[b]).trace())
}

/// Target values: `−6` on J, `+6` on K, `+6·diag(1, −1, −1, −1)` on Γ, zero
/// elsewhere.
pub fn expected_group_metric() -> ExactMatrix {
    let d = [-6, -6, -6, 6, 6, 6, 6, -6, -6, -6];
    ExactMatrix::diagonal(d.iter().map(|&x| int(x)).collect())
}

fn block(m: &ExactMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> ExactMatrix {
    let n = rows.len();
    assert_eq!(n, cols.len());
    ExactMatrix::from_fn(n, |i, j| m.get(rows.start + i, cols.start + j).clone())
}

fn diag(v: &[i64]) -> ExactMatrix {
    ExactMatrix::diagonal(v.iter().map(|&x| int(x)).collect())
}

/// Structure constants and the group metric.
///
/// The J and K blocks, the zero cross blocks and the Minkowski shape of the
/// Γ block are hard checks. The overall sign of the Γ block against
/// [`expected_group_metric`] is soft: with the commutator table above,
/// `ad(Γ⁰)²` has the same spectrum as `ad(J_z)²`, which forces
/// `η(Γ⁰, Γ⁰) = η(J_z, J_z)`.
pub fn group_metric_check() -> VerificationReport {
    let mut report = VerificationReport::new(None);
    let f = structure_constants();
    report.condition("structure.antisymmetric", f.is_antisymmetric(), "f[a][b] = −f[b][a]");
    report.exact("structure.jacobi", f.jacobi_deviation(), "Jacobi identity over all triples");
    let eta = group_metric();
    report.matrix_zero("group_metric.symmetric", &eta.sub(&ExactMatrix::from_fn(10, |a, b| eta.get(b, a).clone())), "η = ηᵀ");
    report.matrix_zero("group_metric.J", &block(&eta, 0..3, 0..3).sub(&diag(&[-6, -6, -6])), "η_JJ = −6δ");
    report.matrix_zero("group_metric.K", &block(&eta, 3..6, 3..6).sub(&diag(&[6, 6, 6])), "η_KK = +6δ");
    let mut off = eta.clone();
    for i in 0..10 {
        off.set(i, i, ComplexScalar::zero());
    }
    report.matrix_zero("group_metric.cross_blocks", &off, "no J–K, J–Γ or K–Γ mixing");
    let gamma = block(&eta, 6..10, 6..10);
    let minkowski = diag(&[1, -1, -1, -1]);
    let c = gamma.get(0, 0).clone();
    let magnitude_ok = c == int(6) || c == int(-6);
    report.condition(
        "group_metric.Gamma.minkowski_shape",
        magnitude_ok && gamma == minkowski.scale(&c),
        format!("η_ΓΓ = ({c})·diag(1,−1,−1,−1)"),
    );
    report.exact_with(
        "group_metric.Gamma.sign",
        &c - &int(6),
        crate::report::Severity::Soft,
        format!("η_ΓΓ = ({c})·diag(1,−1,−1,−1), target +6; η(Γ⁰,Γ⁰) equals η(J_z,J_z) = {}", eta.get(2, 2)),
    );
    report
}

/// `P² = 1`, `P J P = J`, `P K P = K`, `P Γ^μ P = −Γ^μ`, and the Γ⁰ spectrum
/// is symmetric under negation.
pub fn bar_symmetry_check(rep: &Representation) -> VerificationReport {
    let mut report = VerificationReport::new(Some(rep.lambda()));
    let p = rep.bar_matrix();
    report.matrix_zero("bar.involution", &p.mul(p).sub(&ExactMatrix::identity(rep.dim())), "P² = 1");
    for g in BASIS {
        let conj = p.mul(rep.matrix(g)).mul(p);
        let is_gamma = matches!(g, GeneratorName::Gamma0 | GeneratorName::Gamma1 | GeneratorName::Gamma2 | GeneratorName::Gamma3);
        if is_gamma {
            report.matrix_zero(format!("bar.odd.{g}"), &conj.add(rep.matrix(g)), "P G P = −G");
        } else {
            report.matrix_zero(format!("bar.even.{g}"), &conj.sub(rep.matrix(g)), "P G P = G");
        }
    }
    let mut gammas: Vec<HalfInteger> = rep.basis().labels().map(|l| l.gamma).collect();
    let mut negated: Vec<HalfInteger> = gammas.iter().map(|&g| -g).collect();
    gammas.sort();
    negated.sort();
    report.condition("bar.gamma_spectrum_symmetric", gammas == negated, "multiset of γ equals that of −γ");
    report
}
