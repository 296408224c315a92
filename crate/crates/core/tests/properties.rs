use proptest::prelude::*;

use xlorentz::algebra::{basis_expansion, commutator_rules, BASIS};
use xlorentz::spinor::GeneratorName::{self, *};
use xlorentz::{
    apply_generator, inner_product, monomial_basis, ComplexScalar, ExactMatrix, HalfInteger, Monomial, RadicalScalar,
    Rational, Representation, SpinorPolynomial,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Rational::new(n, d))
}

fn radical_with(max_radicand: u64, max_terms: usize) -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec((1..=max_radicand, rational()), 0..=max_terms)
        .prop_map(|terms| RadicalScalar::from_terms(terms).unwrap())
}

fn radical() -> impl Strategy<Value = RadicalScalar> {
    radical_with(30, 3)
}

fn single_term() -> impl Strategy<Value = RadicalScalar> {
    (1u64..=30, rational()).prop_filter_map("nonzero", |(n, q)| {
        (!q.is_zero()).then(|| RadicalScalar::term(q, n).unwrap())
    })
}

fn magnitude(a: &RadicalScalar) -> f64 {
    a.terms().iter().map(|(n, q)| q.to_f64().abs() * (*n as f64).sqrt()).sum()
}

fn complex() -> impl Strategy<Value = ComplexScalar> {
    (radical_with(12, 2), radical_with(12, 2)).prop_map(|(re, im)| ComplexScalar::new(re, im))
}

fn monomial(degree: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..4usize, degree as usize).prop_map(|slots| {
        let mut e = [0u32; 4];
        for s in slots {
            e[s] += 1;
        }
        Monomial(e)
    })
}

fn polynomial(degree: u32) -> impl Strategy<Value = SpinorPolynomial> {
    prop::collection::vec((monomial(degree), complex()), 1..4).prop_map(SpinorPolynomial::from_terms)
}

fn generator() -> impl Strategy<Value = GeneratorName> {
    prop::sample::select(GeneratorName::ALL.to_vec())
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(a in radical()) {
        let again = RadicalScalar::from_terms(a.terms().iter().cloned()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn radical_ring_axioms(a in radical(), b in radical(), c in radical()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RadicalScalar::zero());
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
    }

    #[test]
    fn single_terms_invert(a in single_term()) {
        prop_assert_eq!(&a * &a.invert().unwrap(), RadicalScalar::one());
    }

    #[test]
    fn float_image_is_a_ring_homomorphism(a in radical_with(10_000, 8), b in radical_with(10_000, 8)) {
        let (x, y) = (a.to_f64(), b.to_f64());
        // rounding error is proportional to Σ|qᵢ|√nᵢ, not to the (possibly cancelled) value
        let (sa, sb) = (magnitude(&a), magnitude(&b));
        prop_assert!(((&a + &b).to_f64() - (x + y)).abs() <= 1e-12 * (1.0 + sa + sb));
        let product = a.checked_mul(&b, u64::MAX).unwrap();
        prop_assert!((product.to_f64() - x * y).abs() <= 1e-12 * (1.0 + sa * sb));
    }

    #[test]
    fn complex_field_axioms(a in complex(), b in complex(), c in complex()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn generators_are_linear(g in generator(), p in polynomial(3), q in polynomial(3), a in complex(), b in complex()) {
        let lhs = apply_generator(g, &p.scale(&a).add(&q.scale(&b)));
        let rhs = apply_generator(g, &p).scale(&a).add(&apply_generator(g, &q).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_preserve_degree(g in generator(), p in polynomial(4)) {
        let image = apply_generator(g, &p);
        prop_assert!(image.is_homogeneous());
        prop_assert!(image.is_zero() || image.degree() == Some(4));
    }

    #[test]
    fn bar_is_an_involution(p in polynomial(3)) {
        prop_assert_eq!(p.bar().bar(), p.clone());
        let jz = |x: &SpinorPolynomial| apply_generator(Jz, x);
        let g0 = |x: &SpinorPolynomial| apply_generator(Gamma0, x);
        prop_assert_eq!(jz(&p.bar()).bar(), jz(&p));
        prop_assert_eq!(g0(&p.bar()).bar(), g0(&p).scale(&ComplexScalar::from_integer(-1)));
    }

    #[test]
    fn exact_values_round_trip_through_json(a in complex()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ComplexScalar>(&text).unwrap(), a);
    }

    #[test]
    fn polynomials_round_trip_through_json(p in polynomial(3)) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<SpinorPolynomial>(&text).unwrap(), p);
    }
}

fn lambdas() -> impl Iterator<Item = HalfInteger> {
    (0..=4).map(HalfInteger::from_twice)
}

fn adjoint_deviation(a: GeneratorName, b: GeneratorName, sign: i64, basis: &[Monomial]) -> bool {
    let s = ComplexScalar::from_integer(sign);
    basis.iter().all(|m| {
        basis.iter().all(|n| {
            let p = SpinorPolynomial::monomial(*m, ComplexScalar::one());
            let q = SpinorPolynomial::monomial(*n, ComplexScalar::one());
            let lhs = inner_product(&p, &apply_generator(a, &q)).unwrap();
            let rhs = inner_product(&apply_generator(b, &p), &q).unwrap();
            lhs == &s * &rhs
        })
    })
}

#[test]
fn adjoint_pairs_on_monomials() {
    let pairs = [
        (Jz, Jz, 1),
        (Gamma0, Gamma0, 1),
        (JPlus, JMinus, 1),
        (DeltaZPlus, DeltaZMinus, -1),
        (DeltaPlusPlus, DeltaMinusMinus, -1),
        (DeltaMinusPlus, DeltaPlusMinus, -1),
    ];
    for lambda in lambdas() {
        let basis = monomial_basis(lambda).unwrap();
        for (a, b, sign) in pairs {
            assert!(adjoint_deviation(a, b, sign, &basis), "({a})† vs {b} at Λ = {lambda}");
        }
    }
}

fn apply_combination(terms: &[(ComplexScalar, GeneratorName)], p: &SpinorPolynomial) -> SpinorPolynomial {
    terms.iter().fold(SpinorPolynomial::zero(), |acc, (c, g)| acc.add(&apply_generator(*g, p).scale(c)))
}

#[test]
fn commutators_close_on_monomials() {
    let rules = commutator_rules();
    assert_eq!(rules.len(), 45);
    for lambda in lambdas() {
        for m in monomial_basis(lambda).unwrap() {
            let p = SpinorPolynomial::monomial(m, ComplexScalar::one());
            for rule in &rules {
                let (a, b) = rule.lhs;
                let ab = apply_generator(a, &apply_generator(b, &p));
                let ba = apply_generator(b, &apply_generator(a, &p));
                assert_eq!(ab.sub(&ba), apply_combination(&rule.rhs, &p), "{} on {m}", rule.name());
            }
        }
    }
}

#[test]
fn basis_generators_expand_to_themselves() {
    for (k, g) in BASIS.into_iter().enumerate() {
        let e = basis_expansion(g).unwrap();
        for (j, c) in e.iter().enumerate() {
            assert_eq!(c.is_zero(), j != k);
        }
    }
}

#[test]
fn matrices_round_trip_through_json() {
    let rep = Representation::build(HalfInteger::ONE).unwrap();
    for g in BASIS {
        let text = serde_json::to_string(rep.matrix(g)).unwrap();
        assert_eq!(&serde_json::from_str::<ExactMatrix>(&text).unwrap(), rep.matrix(g));
    }
}
