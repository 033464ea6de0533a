//! Exact arithmetic in `Q[q^±1, t^±1]` and its fraction field.

mod fraction;
mod gcd;
mod laurent;
mod parse;

use thiserror::Error;

pub use fraction::QTFraction;
pub use laurent::{exact_div, pi_factorial, poly_mul, q_factorial, q_integer, Exponent, QTLaurent};
pub use parse::{parse_fraction, parse_laurent};

pub(crate) use laurent::rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator vanishes identically")]
    ZeroDenominator,
    #[error("not divisible in the Laurent polynomial ring")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Replace `q` and `t` in `f` by the given fractions.
pub fn substitute(
    f: &QTLaurent,
    q_image: &QTFraction,
    t_image: &QTFraction,
) -> Result<QTFraction, ExactError> {
    let mut acc = QTFraction::zero();
    let mut qpows = std::collections::HashMap::new();
    let mut tpows = std::collections::HashMap::new();
    for (&(eq, et), c) in f.terms() {
        if let std::collections::hash_map::Entry::Vacant(e) = qpows.entry(eq) {
            e.insert(q_image.pow(eq)?);
        }
        if let std::collections::hash_map::Entry::Vacant(e) = tpows.entry(et) {
            e.insert(t_image.pow(et)?);
        }
        let term = &(&qpows[&eq] * &tpows[&et]) * &QTFraction::from(QTLaurent::constant(c.clone()));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// [`substitute`] applied to numerator and denominator of a fraction.
pub fn substitute_fraction(
    f: &QTFraction,
    q_image: &QTFraction,
    t_image: &QTFraction,
) -> Result<QTFraction, ExactError> {
    let n = substitute(f.num(), q_image, t_image)?;
    let d = substitute(f.den(), q_image, t_image)?;
    n.checked_div(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> QTLaurent {
        parse_laurent(s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(poly_mul(&p("1 + q"), &p("1 + q + q^2")), p("1 + 2*q + 2*q^2 + q^3"));
        assert_eq!(poly_mul(&p("q^-1"), &p("q")), QTLaurent::one());
        assert_eq!(poly_mul(&p("1 - q*t"), &QTLaurent::one()), p("1 - q*t"));
    }

    #[test]
    fn substitution_examples() {
        let f = p("1 - q*t");
        let r = substitute(&f, &QTLaurent::t().into(), &QTLaurent::q_pow(-1).into()).unwrap();
        assert_eq!(r, p("1 - t*q^-1"));
        let r = substitute(&p("q - 1"), &QTFraction::one(), &QTLaurent::t().into()).unwrap();
        assert!(r.is_zero());
        let r = substitute(&p("1 + q + t"), &QTLaurent::q().into(), &QTFraction::zero()).unwrap();
        assert_eq!(r, p("1 + q"));
    }

    #[test]
    fn negative_power_of_zero_image() {
        let r = substitute(&p("q^-1 + 1"), &QTFraction::zero(), &QTLaurent::t().into());
        assert_eq!(r, Err(ExactError::ZeroDenominator));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(exact_div(&p("1 - t^2"), &p("1 - t")).unwrap(), p("1 + t"));
        assert_eq!(exact_div(&p("1 + q"), &p("1 + q")).unwrap(), QTLaurent::one());
        assert_eq!(exact_div(&p("q + t"), &p("1 - t")), Err(ExactError::NotDivisible));
        assert_eq!(exact_div(&p("q^-2*t + q^-1"), &p("q^-1")).unwrap(), p("q^-1*t + 1"));
    }

    #[test]
    fn q_analogs() {
        assert_eq!(q_integer(2), p("1 + q"));
        assert_eq!(q_factorial(3).eval_q(2).unwrap(), rat(21));
        assert_eq!(pi_factorial(&[2, 1]), p("1 + q"));
        assert_eq!(q_factorial(0), QTLaurent::one());
    }

    #[test]
    fn printing_order_and_grammar() {
        assert_eq!(p("1 - 2*q + q^2*t").to_string(), "q^2*t - 2*q + 1");
        assert_eq!(p("q^-1").to_string(), "q^-1");
        assert_eq!(p("-t + 3/2").to_string(), "-t + 3/2");
        let f = parse_fraction("q/(1+q)").unwrap();
        assert_eq!(f.to_string(), "(q)/(q + 1)");
        assert_eq!(QTLaurent::zero().to_string(), "0");
    }

    #[test]
    fn fractions_reduce() {
        let f = parse_fraction("(1 - t^2)/(1 - t)").unwrap();
        assert_eq!(f.as_laurent(), Some(p("1 + t")));
        let g = parse_fraction("(q^2 - q)/(q^3 - q)").unwrap();
        assert_eq!(g.to_string(), "(1)/(q + 1)");
        assert!(QTFraction::new(QTLaurent::one(), QTLaurent::zero()).is_err());
    }

    fn arb_laurent() -> impl Strategy<Value = QTLaurent> {
        prop::collection::vec(((-2i32..3, -2i32..3), -4i64..5), 0..5)
            .prop_map(|v| QTLaurent::from_terms(v.into_iter().map(|(e, c)| (e, rat(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_laurent(), g in arb_laurent(), h in arb_laurent()) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        }

        #[test]
        fn division_inverts_product(f in arb_laurent(), g in arb_laurent()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(exact_div(&poly_mul(&f, &g), &g).unwrap(), f);
        }

        #[test]
        fn identity_substitution(f in arb_laurent()) {
            let r = substitute(&f, &QTLaurent::q().into(), &QTLaurent::t().into()).unwrap();
            prop_assert_eq!(r, QTFraction::from(f));
        }

        #[test]
        fn print_parse_round_trip(f in arb_laurent(), g in arb_laurent()) {
            prop_assert_eq!(parse_laurent(&f.to_string()).unwrap(), f.clone());
            if !g.is_zero() {
                let x = QTFraction::new(f, g).unwrap();
                prop_assert_eq!(parse_fraction(&x.to_string()).unwrap(), x);
            }
        }

        #[test]
        fn fraction_field_laws(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let x = QTFraction::new(a.clone(), b.clone()).unwrap();
            let y = QTFraction::new(c.clone(), b).unwrap();
            let z = QTFraction::new(a, c).unwrap();
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&(&x - &x), &QTFraction::zero());
        }
    }
}
