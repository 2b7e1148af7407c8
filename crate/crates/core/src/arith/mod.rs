//! Exact scalars: rationals, polynomials over the rationals and sparse
//! rational matrices with rank computations over `Q` and `F_p`.

mod matrix;
mod modular;
mod poly;

pub use matrix::ExactMatrix;
pub use modular::{is_prime, random_prime, two_prime_rank, ModularRank};
pub use poly::Polynomial;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or `p` (optional leading sign, surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        text: text.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// `v^k` for a non-negative exponent.
pub fn rational_pow(v: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= v;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert_eq!(parse_rational(" 2/-4 ").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = parse_rational("0/7").unwrap();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(format_rational(&z), "0");
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
    }

    proptest! {
        #[test]
        fn reciprocal_product_is_one(a in -1000i64..1000, b in 1i64..1000) {
            prop_assume!(a != 0);
            let x = ratio(a, b);
            let y = ratio(b, a);
            prop_assert_eq!(x * y, Rational::one());
        }

        #[test]
        fn format_parse_round_trip(a in -10_000i64..10_000, b in 1i64..10_000) {
            let x = ratio(a, b);
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
