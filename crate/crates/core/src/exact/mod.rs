//! Exact arithmetic: the cyclotomic field Q(z) with `z^8 = 1` primitive,
//! rational functions in the family parameter `l`, and polynomials and
//! rational functions in the curve parameter `t`.

mod cyclo8;
mod field;
mod parse;
mod poly;
mod scalar;

pub use cyclo8::Cyclo8;
pub use field::Field;
pub use parse::{parse_rational, parse_scalar, parse_tpoly, ParseError};
pub use poly::{Order, Poly, RatFunc};
pub use scalar::{display_t, t, t_const, LambdaRational, Scalar, TPoly, TRational};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn cyclo() -> impl Strategy<Value = Cyclo8> {
        prop::array::uniform4(-6i64..=6).prop_map(Cyclo8::from_ints)
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (cyclo(), cyclo(), 0u8..3).prop_map(|(a, b, k)| {
            let a = Scalar::Const(a);
            let b = Scalar::Const(b);
            match k {
                0 => a,
                1 => a.add(&b.mul(&Scalar::lambda())),
                _ => a.div(&Scalar::lambda().add(&b)).unwrap_or_else(Scalar::one),
            }
        })
    }

    fn trational() -> impl Strategy<Value = TRational> {
        (
            prop::collection::vec(scalar(), 0..3),
            prop::collection::vec(scalar(), 1..3),
        )
            .prop_map(|(n, d)| {
                let num = Poly::new(n);
                let den = Poly::new(d);
                RatFunc::new(num, den).unwrap_or_else(TRational::one)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cyclo_field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if let Some(ai) = a.inv() {
                prop_assert!(a.mul(&ai).is_one());
            } else {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&b).add(&b), a.clone());
            if let Some(ai) = a.inv() {
                prop_assert!(a.mul(&ai).is_one());
            }
        }

        #[test]
        fn cyclo_display_roundtrip(a in cyclo()) {
            prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), Scalar::Const(a));
        }

        #[test]
        fn scalar_display_roundtrip(a in scalar()) {
            prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn trational_display_roundtrip(r in trational()) {
            prop_assert_eq!(parse_rational(&display_t(&r)).unwrap(), r);
        }
    }
}
