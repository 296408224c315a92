//! Polynomials in the four commuting spinor variables and the generators of the
//! extended Lorentz algebra acting on them as first-order differential operators.
//!
//! Variable slots, written `χ_s^{(t)}` with `s` the `J_z` weight sign and `t`
//! the `Γ⁰` charge:
//!
//! | slot | variable   |
//! |------|------------|
//! | 0    | `χ_+^{(+)}` |
//! | 1    | `χ_-^{(+)}` |
//! | 2    | `χ_+^{(-)}` |
//! | 3    | `χ_-^{(-)}` |

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::HalfInteger;
use crate::scalar::{ComplexScalar, Rational};

/// `χ_+^{(+)}`
pub const CHI_PP: usize = 0;
/// `χ_-^{(+)}`
pub const CHI_MP: usize = 1;
/// `χ_+^{(-)}`
pub const CHI_PM: usize = 2;
/// `χ_-^{(-)}`
pub const CHI_MM: usize = 3;

/// Default upper limit on Λ for basis construction.
pub const DEFAULT_LAMBDA_CAP: HalfInteger = HalfInteger::from_int(6);

/// Exponents `(a, b, c, d)` of `χ_+^{(+)a} χ_-^{(+)b} χ_+^{(-)c} χ_-^{(-)d}`.
///
/// Ordered graded-lexicographically: total degree first, then `(a, b, c, d)`
/// lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Monomial produced by `χ_to ∂_from`, together with the exponent brought
    /// down by the derivative. `None` if the derivative annihilates it.
    fn shift(&self, to: usize, from: usize) -> Option<(Monomial, u32)> {
        let e = self.0[from];
        if e == 0 {
            return None;
        }
        let mut out = self.0;
        out[from] -= 1;
        out[to] += 1;
        Some((Monomial(out), e))
    }

    /// Relabeling `χ_±^{(±)} ↔ χ_±^{(∓)}`: `(a, b, c, d) → (c, d, a, b)`.
    pub fn bar(&self) -> Monomial {
        let [a, b, c, d] = self.0;
        Monomial([c, d, a, b])
    }

    /// Self inner product `a! b! c! d! / (a+b+c+d)!`.
    pub fn norm_squared(&self) -> Rational {
        let fact = |n: u32| -> num_bigint::BigInt { (1..=n).map(num_bigint::BigInt::from).product() };
        let num: num_bigint::BigInt = self.0.iter().map(|&e| fact(e)).product();
        Rational::from_bigints(num, fact(self.degree())).expect("factorial is nonzero")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["χ₊⁺", "χ₋⁺", "χ₊⁻", "χ₋⁻"];
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, &e) in NAMES.iter().zip(self.0.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree 2Λ, greatest (graded-lex) first.
pub fn monomial_basis(lambda: HalfInteger) -> Result<Vec<Monomial>> {
    monomial_basis_capped(lambda, DEFAULT_LAMBDA_CAP)
}

pub fn monomial_basis_capped(lambda: HalfInteger, cap: HalfInteger) -> Result<Vec<Monomial>> {
    if lambda.is_negative() {
        return Err(Error::InvalidLambda(lambda.to_string()));
    }
    if lambda > cap {
        return Err(Error::LambdaTooLarge { lambda, cap });
    }
    let deg = lambda.twice() as u32;
    let mut out = Vec::new();
    for a in (0..=deg).rev() {
        for b in (0..=deg - a).rev() {
            for c in (0..=deg - a - b).rev() {
                out.push(Monomial([a, b, c, deg - a - b - c]));
            }
        }
    }
    Ok(out)
}

/// Sparse polynomial with exact complex coefficients; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpinorPolynomial {
    terms: BTreeMap<Monomial, ComplexScalar>,
}

impl SpinorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, coeff: ComplexScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ComplexScalar)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: &ComplexScalar) {
        if coeff.is_zero() {
            return;
        }
        let merged = match self.terms.get(&m) {
            Some(c) => c + coeff,
            None => coeff.clone(),
        };
        if merged.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ComplexScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ComplexScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Greatest monomial and its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &ComplexScalar)> {
        self.terms.iter().next_back()
    }

    /// Common degree of all terms; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &ComplexScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, &(v * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                let mut e = m.0;
                for k in 0..4 {
                    e[k] += n.0[k];
                }
                out.add_term(Monomial(e), &(a * b));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::monomial(Monomial::default(), ComplexScalar::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.bar(), c.clone())).collect() }
    }

    pub fn apply(&self, gen: GeneratorName) -> Self {
        apply_generator(gen, self)
    }

    fn apply_primitive(&self, prim: Primitive) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for &(num, den, to, from) in prim.shifts() {
                if let Some((target, e)) = m.shift(to, from) {
                    let factor = Rational::new(num * e as i64, den);
                    out.add_term(target, &c.scale(&factor));
                }
            }
        }
        out
    }
}

impl fmt::Display for SpinorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]·{m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: Monomial,
    coeff: ComplexScalar,
}

/// JSON form: `[{monomial: [a,b,c,d], coeff}]`, greatest monomial first.
impl Serialize for SpinorPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson { monomial: *m, coeff: c.clone() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinorPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        Ok(SpinorPolynomial::from_terms(terms.into_iter().map(|t| (t.monomial, t.coeff))))
    }
}

/// Sesquilinear product, conjugate-linear in `p`. Monomials are orthogonal
/// with `⟨m|m⟩ = a!b!c!d!/(a+b+c+d)!`.
pub fn inner_product(p: &SpinorPolynomial, q: &SpinorPolynomial) -> Result<ComplexScalar> {
    if let (Some(dp), Some(dq)) = (p.terms.keys().next(), q.terms.keys().next()) {
        if dp.degree() != dq.degree() {
            return Err(Error::DegreeMismatch { left: dp.degree(), right: dq.degree() });
        }
    }
    let (small, large, flip) = if p.len() <= q.len() { (p, q, false) } else { (q, p, true) };
    let mut acc = ComplexScalar::zero();
    for (m, a) in &small.terms {
        if let Some(b) = large.terms.get(m) {
            let prod = if flip { &b.conj() * a } else { &a.conj() * b };
            acc += &prod.scale(&m.norm_squared());
        }
    }
    Ok(acc)
}

/// `⟨p|p⟩`, always real and non-negative.
pub fn norm_squared(p: &SpinorPolynomial) -> ComplexScalar {
    inner_product(p, p).expect("a polynomial has a single degree against itself")
}

/// Primitive generators given directly as sums of `χ ∂` terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Primitive {
    Jz,
    JPlus,
    JMinus,
    Gamma0,
    DeltaZ(Charge),
    DeltaPlus(Charge),
    DeltaMinus(Charge),
}

/// Superscript `(±)` of a Δ operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Charge {
    Plus,
    Minus,
}

impl Charge {
    pub fn sign(self) -> i64 {
        match self {
            Charge::Plus => 1,
            Charge::Minus => -1,
        }
    }

    pub fn flip(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Minus => Charge::Plus,
        }
    }
}

impl Primitive {
    /// `(num, den, to, from)`: each entry is `(num/den) χ_to ∂_from`.
    fn shifts(self) -> &'static [(i64, i64, usize, usize)] {
        match self {
            Primitive::Jz => &[(1, 2, CHI_PP, CHI_PP), (1, 2, CHI_PM, CHI_PM), (-1, 2, CHI_MP, CHI_MP), (-1, 2, CHI_MM, CHI_MM)],
            Primitive::JPlus => &[(1, 1, CHI_PP, CHI_MP), (1, 1, CHI_PM, CHI_MM)],
            Primitive::JMinus => &[(1, 1, CHI_MP, CHI_PP), (1, 1, CHI_MM, CHI_PM)],
            Primitive::Gamma0 => &[(1, 2, CHI_PP, CHI_PP), (-1, 2, CHI_PM, CHI_PM), (1, 2, CHI_MP, CHI_MP), (-1, 2, CHI_MM, CHI_MM)],
            Primitive::DeltaZ(Charge::Plus) => &[(1, 1, CHI_PP, CHI_PM), (-1, 1, CHI_MP, CHI_MM)],
            Primitive::DeltaZ(Charge::Minus) => &[(-1, 1, CHI_PM, CHI_PP), (1, 1, CHI_MM, CHI_MP)],
            Primitive::DeltaPlus(Charge::Plus) => &[(2, 1, CHI_PP, CHI_MM)],
            Primitive::DeltaPlus(Charge::Minus) => &[(-2, 1, CHI_PM, CHI_MP)],
            Primitive::DeltaMinus(Charge::Plus) => &[(2, 1, CHI_MP, CHI_PM)],
            Primitive::DeltaMinus(Charge::Minus) => &[(-2, 1, CHI_MM, CHI_PP)],
        }
    }
}

/// Named generators. The ten ladder-form operators are primitive; the rest
/// are linear or bilinear combinations of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorName {
    Jz,
    #[serde(rename = "Jplus")]
    JPlus,
    #[serde(rename = "Jminus")]
    JMinus,
    Jx,
    Jy,
    Gamma0,
    #[serde(rename = "DeltaZ+")]
    DeltaZPlus,
    #[serde(rename = "DeltaZ-")]
    DeltaZMinus,
    #[serde(rename = "DeltaPlus+")]
    DeltaPlusPlus,
    #[serde(rename = "DeltaPlus-")]
    DeltaPlusMinus,
    #[serde(rename = "DeltaMinus+")]
    DeltaMinusPlus,
    #[serde(rename = "DeltaMinus-")]
    DeltaMinusMinus,
    Gamma1,
    Gamma2,
    Gamma3,
    K1,
    K2,
    K3,
    #[serde(rename = "DeltaJ+")]
    DeltaJPlus,
    #[serde(rename = "DeltaJ-")]
    DeltaJMinus,
    Casimir,
    /// `J·J`
    #[serde(rename = "Jsquared")]
    JSquared,
}

impl GeneratorName {
    pub const ALL: [GeneratorName; 22] = [
        GeneratorName::Jz,
        GeneratorName::JPlus,
        GeneratorName::JMinus,
        GeneratorName::Jx,
        GeneratorName::Jy,
        GeneratorName::Gamma0,
        GeneratorName::DeltaZPlus,
        GeneratorName::DeltaZMinus,
        GeneratorName::DeltaPlusPlus,
        GeneratorName::DeltaPlusMinus,
        GeneratorName::DeltaMinusPlus,
        GeneratorName::DeltaMinusMinus,
        GeneratorName::Gamma1,
        GeneratorName::Gamma2,
        GeneratorName::Gamma3,
        GeneratorName::K1,
        GeneratorName::K2,
        GeneratorName::K3,
        GeneratorName::DeltaJPlus,
        GeneratorName::DeltaJMinus,
        GeneratorName::Casimir,
        GeneratorName::JSquared,
    ];

    /// The ten basis elements `J₁..₃, K₁..₃, Γ⁰..³` in adjoint index order.
    pub const BASIS: [GeneratorName; 10] = [
        GeneratorName::Jx,
        GeneratorName::Jy,
        GeneratorName::Jz,
        GeneratorName::K1,
        GeneratorName::K2,
        GeneratorName::K3,
        GeneratorName::Gamma0,
        GeneratorName::Gamma1,
        GeneratorName::Gamma2,
        GeneratorName::Gamma3,
    ];

    pub fn rotation(k: usize) -> GeneratorName {
        [GeneratorName::Jx, GeneratorName::Jy, GeneratorName::Jz][k]
    }

    pub fn boost(k: usize) -> GeneratorName {
        [GeneratorName::K1, GeneratorName::K2, GeneratorName::K3][k]
    }

    /// `Γ^μ` for μ = 0..3.
    pub fn gamma(mu: usize) -> GeneratorName {
        [GeneratorName::Gamma0, GeneratorName::Gamma1, GeneratorName::Gamma2, GeneratorName::Gamma3][mu]
    }

    pub fn delta_z(t: Charge) -> GeneratorName {
        match t {
            Charge::Plus => GeneratorName::DeltaZPlus,
            Charge::Minus => GeneratorName::DeltaZMinus,
        }
    }

    /// `Δ_s^{(t)}` with subscript sign `s = ±1`.
    pub fn delta_ladder(s: i64, t: Charge) -> GeneratorName {
        match (s > 0, t) {
            (true, Charge::Plus) => GeneratorName::DeltaPlusPlus,
            (true, Charge::Minus) => GeneratorName::DeltaPlusMinus,
            (false, Charge::Plus) => GeneratorName::DeltaMinusPlus,
            (false, Charge::Minus) => GeneratorName::DeltaMinusMinus,
        }
    }

    pub fn j_ladder(s: i64) -> GeneratorName {
        if s > 0 {
            GeneratorName::JPlus
        } else {
            GeneratorName::JMinus
        }
    }

    pub fn delta_j(t: Charge) -> GeneratorName {
        match t {
            Charge::Plus => GeneratorName::DeltaJPlus,
            Charge::Minus => GeneratorName::DeltaJMinus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorName::Jz => "Jz",
            GeneratorName::JPlus => "Jplus",
            GeneratorName::JMinus => "Jminus",
            GeneratorName::Jx => "Jx",
            GeneratorName::Jy => "Jy",
            GeneratorName::Gamma0 => "Gamma0",
            GeneratorName::DeltaZPlus => "DeltaZ+",
            GeneratorName::DeltaZMinus => "DeltaZ-",
            GeneratorName::DeltaPlusPlus => "DeltaPlus+",
            GeneratorName::DeltaPlusMinus => "DeltaPlus-",
            GeneratorName::DeltaMinusPlus => "DeltaMinus+",
            GeneratorName::DeltaMinusMinus => "DeltaMinus-",
            GeneratorName::Gamma1 => "Gamma1",
            GeneratorName::Gamma2 => "Gamma2",
            GeneratorName::Gamma3 => "Gamma3",
            GeneratorName::K1 => "K1",
            GeneratorName::K2 => "K2",
            GeneratorName::K3 => "K3",
            GeneratorName::DeltaJPlus => "DeltaJ+",
            GeneratorName::DeltaJMinus => "DeltaJ-",
            GeneratorName::Casimir => "Casimir",
            GeneratorName::JSquared => "Jsquared",
        }
    }

    fn expansion(self) -> Expansion {
        use GeneratorName as G;
        let half = ComplexScalar::from_fraction(1, 2);
        let minus_half_i = ComplexScalar::imag(crate::RadicalScalar::from_fraction(-1, 2));
        match self {
            G::Jz => Expansion::prim(Primitive::Jz),
            G::JPlus => Expansion::prim(Primitive::JPlus),
            G::JMinus => Expansion::prim(Primitive::JMinus),
            G::Gamma0 => Expansion::prim(Primitive::Gamma0),
            G::DeltaZPlus => Expansion::prim(Primitive::DeltaZ(Charge::Plus)),
            G::DeltaZMinus => Expansion::prim(Primitive::DeltaZ(Charge::Minus)),
            G::DeltaPlusPlus => Expansion::prim(Primitive::DeltaPlus(Charge::Plus)),
            G::DeltaPlusMinus => Expansion::prim(Primitive::DeltaPlus(Charge::Minus)),
            G::DeltaMinusPlus => Expansion::prim(Primitive::DeltaMinus(Charge::Plus)),
            G::DeltaMinusMinus => Expansion::prim(Primitive::DeltaMinus(Charge::Minus)),
            // J_± = J_x ± iJ_y
            G::Jx => Expansion::cartesian_x(G::JPlus, G::JMinus),
            G::Jy => Expansion::cartesian_y(G::JPlus, G::JMinus),
            // Γ^k = (Δ_k^{(+)} + Δ_k^{(−)})/2
            G::Gamma1 | G::Gamma2 | G::Gamma3 => {
                let k = self.spatial_index();
                delta_cartesian(k, Charge::Plus).plus(&delta_cartesian(k, Charge::Minus)).times(&half)
            }
            // K_k = (Δ_k^{(+)} − Δ_k^{(−)})/(2i)
            G::K1 | G::K2 | G::K3 => {
                let k = self.spatial_index();
                delta_cartesian(k, Charge::Plus).minus(&delta_cartesian(k, Charge::Minus)).times(&minus_half_i)
            }
            // Δ_J^{(±)} = J·Δ^{(±)}
            G::DeltaJPlus | G::DeltaJMinus => {
                let t = if self == G::DeltaJPlus { Charge::Plus } else { Charge::Minus };
                (0..3).fold(Expansion::default(), |acc, k| {
                    acc.plus(&G::rotation(k).expansion().compose(&delta_cartesian(k, t)))
                })
            }
            G::JSquared => dot(G::rotation),
            // C = J·J − K·K + Γ⁰Γ⁰ − Γ·Γ
            G::Casimir => {
                let g0 = G::Gamma0.expansion();
                dot(G::rotation)
                    .minus(&dot(G::boost))
                    .plus(&g0.compose(&g0))
                    .minus(&dot(|k| G::gamma(k + 1)))
            }
        }
    }

    fn spatial_index(self) -> usize {
        match self {
            GeneratorName::Gamma1 | GeneratorName::K1 | GeneratorName::Jx => 0,
            GeneratorName::Gamma2 | GeneratorName::K2 | GeneratorName::Jy => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GeneratorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorName::ALL
            .iter()
            .copied()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

fn delta_cartesian(k: usize, t: Charge) -> Expansion {
    let plus = GeneratorName::delta_ladder(1, t);
    let minus = GeneratorName::delta_ladder(-1, t);
    match k {
        0 => Expansion::cartesian_x(plus, minus),
        1 => Expansion::cartesian_y(plus, minus),
        _ => GeneratorName::delta_z(t).expansion(),
    }
}

fn dot(component: impl Fn(usize) -> GeneratorName) -> Expansion {
    (0..3).fold(Expansion::default(), |acc, k| {
        let e = component(k).expansion();
        acc.plus(&e.compose(&e))
    })
}

/// Linear combination of words in primitives; a word applies right to left.
#[derive(Clone, Debug, Default)]
struct Expansion {
    words: BTreeMap<Vec<Primitive>, ComplexScalar>,
}

impl Expansion {
    fn prim(p: Primitive) -> Self {
        let mut words = BTreeMap::new();
        words.insert(vec![p], ComplexScalar::one());
        Expansion { words }
    }

    /// `(V_+ + V_-)/2`
    fn cartesian_x(plus: GeneratorName, minus: GeneratorName) -> Self {
        plus.expansion().plus(&minus.expansion()).times(&ComplexScalar::from_fraction(1, 2))
    }

    /// `(V_+ − V_-)/(2i)`
    fn cartesian_y(plus: GeneratorName, minus: GeneratorName) -> Self {
        let c = ComplexScalar::imag(crate::RadicalScalar::from_fraction(-1, 2));
        plus.expansion().minus(&minus.expansion()).times(&c)
    }

    fn add_word(&mut self, word: Vec<Primitive>, c: &ComplexScalar) {
        let merged = match self.words.get(&word) {
            Some(v) => v + c,
            None => c.clone(),
        };
        if merged.is_zero() {
            self.words.remove(&word);
        } else {
            self.words.insert(word, merged);
        }
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.words {
            out.add_word(w.clone(), c);
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.times(&ComplexScalar::from_integer(-1)))
    }

    fn times(&self, c: &ComplexScalar) -> Self {
        let mut out = Expansion::default();
        for (w, v) in &self.words {
            out.add_word(w.clone(), &(v * c));
        }
        out
    }

    /// Operator product `self ∘ other`.
    fn compose(&self, other: &Self) -> Self {
        let mut out = Expansion::default();
        for (a, x) in &self.words {
            for (b, y) in &other.words {
                let mut word = a.clone();
                word.extend_from_slice(b);
                out.add_word(word, &(x * y));
            }
        }
        out
    }

    fn apply(&self, p: &SpinorPolynomial) -> SpinorPolynomial {
        let mut out = SpinorPolynomial::zero();
        for (word, c) in &self.words {
            let mut v = p.clone();
            for prim in word.iter().rev() {
                if v.is_zero() {
                    break;
                }
                v = v.apply_primitive(*prim);
            }
            out = out.add(&v.scale(c));
        }
        out
    }
}

/// Exact action of a named generator on a polynomial.
pub fn apply_generator(gen: GeneratorName, p: &SpinorPolynomial) -> SpinorPolynomial {
    gen.expansion().apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RadicalScalar;

    fn mono(e: [u32; 4]) -> SpinorPolynomial {
        SpinorPolynomial::monomial(Monomial(e), ComplexScalar::one())
    }

    fn int(n: i64) -> ComplexScalar {
        ComplexScalar::from_integer(n)
    }

    #[test]
    fn jz_on_mixed_weights_vanishes() {
        assert!(mono([1, 0, 0, 1]).apply(GeneratorName::Jz).is_zero());
    }

    #[test]
    fn delta_z_plus_on_chi_mm_squared() {
        let out = mono([0, 0, 0, 2]).apply(GeneratorName::DeltaZPlus);
        assert_eq!(out, SpinorPolynomial::monomial(Monomial([0, 1, 0, 1]), int(-2)));
    }

    #[test]
    fn j_plus_on_chi_mm_squared() {
        let out = mono([0, 0, 0, 2]).apply(GeneratorName::JPlus);
        assert_eq!(out, SpinorPolynomial::monomial(Monomial([0, 0, 1, 1]), int(2)));
    }

    #[test]
    fn gamma0_on_opposite_charges_vanishes() {
        assert!(mono([1, 0, 1, 0]).apply(GeneratorName::Gamma0).is_zero());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(HalfInteger::ZERO).unwrap(), vec![Monomial([0, 0, 0, 0])]);
        assert_eq!(monomial_basis(HalfInteger::HALF).unwrap().len(), 4);
        assert_eq!(monomial_basis(HalfInteger::ONE).unwrap().len(), 10);
        for twice in 0..=12 {
            let n = twice as usize;
            let expected = (n + 1) * (n + 2) * (n + 3) / 6;
            assert_eq!(monomial_basis(HalfInteger::from_twice(twice)).unwrap().len(), expected);
        }
        assert!(matches!(
            monomial_basis(HalfInteger::from_twice(13)),
            Err(Error::LambdaTooLarge { .. })
        ));
        assert!(matches!(monomial_basis(HalfInteger::from_twice(-1)), Err(Error::InvalidLambda(_))));
    }

    #[test]
    fn basis_is_descending_graded_lex() {
        let b = monomial_basis(HalfInteger::ONE).unwrap();
        assert!(b.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(b[0], Monomial([2, 0, 0, 0]));
        assert_eq!(*b.last().unwrap(), Monomial([0, 0, 0, 2]));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&mono([2, 0, 0, 0]), &mono([2, 0, 0, 0])).unwrap(), int(1));
        assert_eq!(
            inner_product(&mono([1, 0, 0, 1]), &mono([1, 0, 0, 1])).unwrap(),
            ComplexScalar::from_fraction(1, 2)
        );
        assert!(inner_product(&mono([2, 0, 0, 0]), &mono([1, 1, 0, 0])).unwrap().is_zero());
        assert_eq!(
            inner_product(&mono([1, 0, 0, 0]), &mono([1, 1, 0, 0])),
            Err(Error::DegreeMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_left() {
        let i = ComplexScalar::i();
        let p = mono([1, 0, 0, 0]).scale(&i);
        let q = mono([1, 0, 0, 0]);
        assert_eq!(inner_product(&p, &q).unwrap(), -&i);
        assert_eq!(inner_product(&q, &p).unwrap(), i);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(mono([1, 0, 0, 0]).bar(), mono([0, 0, 1, 0]));
        assert_eq!(mono([0, 0, 0, 2]).bar(), mono([0, 2, 0, 0]));
    }

    #[test]
    fn composite_generators_on_spin_half() {
        // Γ¹ on χ_-^{(-)} picks up the σ_x entry: (1/2)·χ_+^{(+)}
        let out = mono([0, 0, 0, 1]).apply(GeneratorName::Gamma1);
        assert_eq!(out, SpinorPolynomial::monomial(Monomial([1, 0, 0, 0]), ComplexScalar::from_fraction(1, 2)));
        // Casimir eigenvalue 2Λ(Λ+2) = 5/2 at Λ = 1/2
        let p = mono([0, 1, 0, 0]);
        assert_eq!(p.apply(GeneratorName::Casimir), p.scale(&ComplexScalar::from_fraction(5, 2)));
    }

    #[test]
    fn delta_j_on_seed() {
        // J·Δ⁺ χ_-^{(-)2} = 4 χ_-^{(+)} χ_-^{(-)}
        let out = mono([0, 0, 0, 2]).apply(GeneratorName::DeltaJPlus);
        assert_eq!(out, SpinorPolynomial::monomial(Monomial([0, 1, 0, 1]), int(4)));
    }

    #[test]
    fn json_form() {
        let p = SpinorPolynomial::from_terms([
            (Monomial([0, 1, 1, 0]), int(-1)),
            (Monomial([1, 0, 0, 1]), ComplexScalar::real(RadicalScalar::sqrt(&Rational::from_integer(2)).unwrap())),
        ]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"monomial":[1,0,0,1],"coeff":{"re":[[2,1,1]],"im":[]}},{"monomial":[0,1,1,0],"coeff":{"re":[[1,-1,1]],"im":[]}}]"#
        );
        let back: SpinorPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn generator_names_round_trip() {
        for g in GeneratorName::ALL {
            assert_eq!(g.as_str().parse::<GeneratorName>().unwrap(), g);
            let json = serde_json::to_string(&g).unwrap();
            assert_eq!(json, format!("\"{}\"", g.as_str()));
        }
    }
}
