//! Exact scalars: reduced rationals, finite sums `Σ qᵢ√nᵢ` over squarefree
//! radicands, and complex pairs of those.
//!
//! Every value is kept in canonical form, so structural equality is numeric
//! equality. The radical ring is closed under `+`, `×` and the square root of
//! a non-negative rational; division is only supported for single-term values.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Deserializer;
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest radicand the trial-division factorizer accepts by default.
pub const DEFAULT_RADICAND_BOUND: u64 = 1 << 31;

/// Reduced fraction with positive denominator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Splits `n = s² · r` with `r` squarefree. Returns `(s, r)`.
pub fn squarefree_decompose(mut n: u64) -> (u64, u64) {
    debug_assert!(n > 0);
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= p;
        }
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * n)
}

pub fn is_squarefree(n: u64) -> bool {
    n > 0 && squarefree_decompose(n).0 == 1
}

fn bigint_within(n: &BigInt, bound: u64) -> Result<u64> {
    match n.to_u64() {
        Some(v) if v <= bound => Ok(v),
        _ => Err(Error::RadicandOverflow { radicand: n.to_string(), bound }),
    }
}

/// Exact real number `Σ qᵢ √nᵢ`, radicands squarefree and strictly increasing,
/// coefficients nonzero. The empty sum is zero; radicand 1 is the rational part.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RadicalScalar {
    terms: Vec<(u64, Rational)>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        RadicalScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            RadicalScalar { terms: vec![(1, q)] }
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    /// `q · √n` for any positive `n`; square factors of `n` are pulled out.
    pub fn term(q: Rational, radicand: u64) -> Result<Self> {
        Self::from_terms([(radicand, q)])
    }

    /// Canonicalizes an arbitrary list of `(radicand, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, Rational)>) -> Result<Self> {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (n, q) in terms {
            if n == 0 {
                return Err(Error::Parse("radicand 0".into()));
            }
            if n > DEFAULT_RADICAND_BOUND {
                return Err(Error::RadicandOverflow { radicand: n.to_string(), bound: DEFAULT_RADICAND_BOUND });
            }
            let (s, r) = squarefree_decompose(n);
            let q = q * Rational::from_integer(s as i64);
            let slot = acc.entry(r).or_insert_with(Rational::zero);
            *slot = &*slot + &q;
        }
        Ok(Self::from_map(acc))
    }

    fn from_map(acc: BTreeMap<u64, Rational>) -> Self {
        RadicalScalar { terms: acc.into_iter().filter(|(_, q)| !q.is_zero()).collect() }
    }

    /// `√q` for `q ≥ 0`, as `(1/b)√(ab)` reduced to squarefree form.
    pub fn sqrt(q: &Rational) -> Result<Self> {
        Self::sqrt_bounded(q, DEFAULT_RADICAND_BOUND)
    }

    pub fn sqrt_bounded(q: &Rational, bound: u64) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let a = bigint_within(q.numer(), bound)?;
        let b = bigint_within(q.denom(), bound)?;
        let (sa, ra) = squarefree_decompose(a);
        let (sb, rb) = squarefree_decompose(b);
        // gcd(a, b) = 1, so ra·rb is squarefree.
        let radicand = ra as u128 * rb as u128;
        if radicand > bound as u128 {
            return Err(Error::RadicandOverflow { radicand: radicand.to_string(), bound });
        }
        let coeff = Rational::from_bigints(BigInt::from(sa), BigInt::from(sb) * BigInt::from(rb))?;
        Ok(RadicalScalar { terms: vec![(radicand as u64, coeff)] })
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalScalar { terms: self.terms.iter().map(|(n, c)| (*n, c * q)).collect() }
    }

    pub fn checked_mul(&self, rhs: &Self, bound: u64) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (m, p) in &self.terms {
            for (n, q) in &rhs.terms {
                // √m·√n = g·√((m/g)(n/g)), and (m/g)(n/g) is squarefree.
                let g = m.gcd(n);
                let radicand = (*m / g) as u128 * (*n / g) as u128;
                if radicand > bound as u128 {
                    return Err(Error::RadicandOverflow { radicand: radicand.to_string(), bound });
                }
                let c = &(p * q) * &Rational::from_integer(g as i64);
                let slot = acc.entry(radicand as u64).or_insert_with(Rational::zero);
                *slot = &*slot + &c;
            }
        }
        Ok(Self::from_map(acc))
    }

    /// Inverse of a single-term value `q√n`: `(1/(qn))√n`.
    pub fn invert(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(n, q)] => {
                let c = (q * &Rational::from_integer(*n as i64)).recip()?;
                Ok(RadicalScalar { terms: vec![(*n, c)] })
            }
            _ => Err(Error::MultiTermInverse(self.to_string())),
        }
    }

    /// Exact for up to two terms; larger sums are decided in floating point.
    pub fn signum(&self) -> i32 {
        match self.terms.as_slice() {
            [] => 0,
            [(_, q)] => q.signum(),
            [(m, p), (n, q)] => {
                let (sp, sq) = (p.signum(), q.signum());
                if sp == sq {
                    return sp;
                }
                let lhs = &(p * p) * &Rational::from_integer(*m as i64);
                let rhs = &(q * q) * &Rational::from_integer(*n as i64);
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Greater => sp,
                    std::cmp::Ordering::Less => sq,
                    std::cmp::Ordering::Equal => 0,
                }
            }
            _ => {
                let v = self.to_f64();
                if v > 0.0 {
                    1
                } else if v < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(n, q)| q.to_f64() * (*n as f64).sqrt()).sum()
    }

    pub fn to_triples(&self) -> Result<Vec<(u64, i128, i128)>> {
        self.terms
            .iter()
            .map(|(n, q)| {
                let num = q.numer().to_i128();
                let den = q.denom().to_i128();
                match (num, den) {
                    (Some(a), Some(b)) => Ok((*n, a, b)),
                    _ => Err(Error::Parse(format!("coefficient {q} does not fit in 128 bits"))),
                }
            })
            .collect()
    }

    pub fn from_triples(triples: &[(u64, i128, i128)]) -> Result<Self> {
        let terms = triples
            .iter()
            .map(|&(n, a, b)| Ok((n, Rational::from_bigints(BigInt::from(a), BigInt::from(b))?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(terms)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (n, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match (*n, mag.is_one()) {
                (1, _) => write!(f, "{mag}")?,
                (n, true) => write!(f, "√{n}")?,
                (n, false) => write!(f, "({mag})√{n}")?,
            }
        }
        Ok(())
    }
}

impl Add<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j >= rhs.terms.len() || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i >= self.terms.len() || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                out.push(rhs.terms[j].clone());
                j += 1;
            } else {
                let c = &self.terms[i].1 + &rhs.terms[j].1;
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        RadicalScalar { terms: out }
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar { terms: self.terms.iter().map(|(n, q)| (*n, -q)).collect() }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl Sub<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        self + &(-rhs)
    }
}

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    /// Panics if a product radicand exceeds [`DEFAULT_RADICAND_BOUND`];
    /// use [`RadicalScalar::checked_mul`] to handle that case.
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        self.checked_mul(rhs, DEFAULT_RADICAND_BOUND).expect("radicand bound exceeded")
    }
}

macro_rules! forward_owned {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(RadicalScalar, Add, add);
forward_owned!(RadicalScalar, Sub, sub);
forward_owned!(RadicalScalar, Mul, mul);

impl Serialize for RadicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_triples().map_err(S::Error::custom)?.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadicalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(u64, i128, i128)>::deserialize(deserializer)?;
        RadicalScalar::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}

/// `re + i·im` with both parts exact radical sums.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct ComplexScalar {
    pub re: RadicalScalar,
    pub im: RadicalScalar,
}

impl ComplexScalar {
    pub fn new(re: RadicalScalar, im: RadicalScalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(RadicalScalar::one())
    }

    pub fn i() -> Self {
        ComplexScalar { re: RadicalScalar::zero(), im: RadicalScalar::one() }
    }

    pub fn real(re: RadicalScalar) -> Self {
        ComplexScalar { re, im: RadicalScalar::zero() }
    }

    pub fn imag(im: RadicalScalar) -> Self {
        ComplexScalar { re: RadicalScalar::zero(), im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(RadicalScalar::from_integer(n))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::real(RadicalScalar::from_fraction(num, den))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::real(RadicalScalar::from_rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexScalar { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ComplexScalar { re: self.re.scale(q), im: self.im.scale(q) }
    }

    pub fn mul_real(&self, r: &RadicalScalar) -> Self {
        ComplexScalar { re: &self.re * r, im: &self.im * r }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        ComplexScalar { re: -&self.im, im: self.re.clone() }
    }

    pub fn checked_mul(&self, rhs: &Self, bound: u64) -> Result<Self> {
        let rr = self.re.checked_mul(&rhs.re, bound)?;
        let ii = self.im.checked_mul(&rhs.im, bound)?;
        let ri = self.re.checked_mul(&rhs.im, bound)?;
        let ir = self.im.checked_mul(&rhs.re, bound)?;
        Ok(ComplexScalar { re: &rr - &ii, im: &ri + &ir })
    }

    /// Inverse of a purely real or purely imaginary single-term value.
    pub fn invert(&self) -> Result<Self> {
        if self.im.is_zero() {
            Ok(Self::real(self.re.invert()?))
        } else if self.re.is_zero() {
            // 1/(ib) = -i/b
            Ok(Self::imag(-self.im.invert()?))
        } else {
            Err(Error::MultiTermInverse(self.to_string()))
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Decimal rendering with 15 significant digits.
    pub fn to_decimal_string(&self) -> String {
        let z = self.to_complex64();
        let fmt = |x: f64| -> String {
            if x == 0.0 {
                "0".to_string()
            } else {
                let s = format!("{:.*e}", 14, x);
                let v: f64 = s.parse().unwrap_or(x);
                format!("{v}")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt(z.re),
            (true, false) => format!("{}i", fmt(z.im)),
            (false, false) => {
                let sign = if z.im < 0.0 { "-" } else { "+" };
                format!("{} {} {}i", fmt(z.re), sign, fmt(z.im.abs()))
            }
        }
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.terms().len() == 1 {
                    write!(f, "{}i", self.im)
                } else {
                    write!(f, "({})i", self.im)
                }
            }
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

impl From<RadicalScalar> for ComplexScalar {
    fn from(re: RadicalScalar) -> Self {
        ComplexScalar::real(re)
    }
}

impl Add<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&ComplexScalar> for &ComplexScalar {
    type Output = ComplexScalar;
    /// Panics if a product radicand exceeds [`DEFAULT_RADICAND_BOUND`].
    fn mul(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.checked_mul(rhs, DEFAULT_RADICAND_BOUND).expect("radicand bound exceeded")
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        -&self
    }
}

forward_owned!(ComplexScalar, Add, add);
forward_owned!(ComplexScalar, Sub, sub);
forward_owned!(ComplexScalar, Mul, mul);

impl AddAssign<&ComplexScalar> for ComplexScalar {
    fn add_assign(&mut self, rhs: &ComplexScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ComplexScalar> for ComplexScalar {
    fn sub_assign(&mut self, rhs: &ComplexScalar) {
        *self = &*self - rhs;
    }
}

impl Sum for ComplexScalar {
    fn sum<I: Iterator<Item = ComplexScalar>>(iter: I) -> Self {
        iter.fold(ComplexScalar::zero(), |a, b| &a + &b)
    }
}
