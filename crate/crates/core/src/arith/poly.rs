use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals in the indeterminate `x`.
///
/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are never stored,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at `v`.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Parses the text form, e.g. `3/2*x^2 - x + 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "polynomial",
            text: text.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            // a sign starts a new term unless it follows '/' or '^' (e.g. "2/-3")
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'/' | b'^' | b'*')
            {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = Polynomial::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coeff, power) = match body.find('x') {
                None => (parse_rational(body).map_err(|_| err())?, 0),
                Some(pos) => {
                    let coeff = match &body[..pos] {
                        "" => Rational::one(),
                        c => parse_rational(c.strip_suffix('*').ok_or_else(err)?)
                            .map_err(|_| err())?,
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        p => p
                            .strip_prefix('^')
                            .and_then(|k| k.parse::<usize>().ok())
                            .ok_or_else(err)?,
                    };
                    (coeff, power)
                }
            };
            let coeff = if negative { -coeff } else { coeff };
            acc = acc + Polynomial::monomial(coeff, power);
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Polynomial::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn eval_examples() {
        // x^2 - 1 at 2
        assert_eq!(poly(&[-1, 0, 1]).eval(&rat(2)), rat(3));
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), rat(0));
        // x at 2n with n = 3
        assert_eq!(Polynomial::x().eval(&rat(6)), rat(6));
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[1, 1]) - poly(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn text_form() {
        let p = Polynomial::from_coeffs(vec![rat(1), rat(-1), ratio(3, 2)]);
        assert_eq!(p.to_string(), "3/2*x^2 - x + 1");
        assert_eq!(Polynomial::parse("3/2*x^2 - x + 1").unwrap(), p);
        assert_eq!(Polynomial::parse("-x").unwrap().to_string(), "-x");
        assert_eq!(Polynomial::parse("-1/2").unwrap(), Polynomial::constant(ratio(-1, 2)));
        assert_eq!(Polynomial::parse("x^3 + x^3").unwrap().to_string(), "2*x^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!(Polynomial::parse("x^").is_err());
        assert!(Polynomial::parse("2x").is_err());
        assert!(Polynomial::parse("").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..5).prop_map(|cs| {
            Polynomial::from_coeffs(cs.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(p in arb_poly(), q in arb_poly(), n in -9i64..9, d in 1i64..9) {
            let v = ratio(n, d);
            prop_assert_eq!((&p * &q).eval(&v), p.eval(&v) * q.eval(&v));
        }

        #[test]
        fn text_round_trip(p in arb_poly()) {
            prop_assert_eq!(Polynomial::parse(&p.to_string()).unwrap(), p);
        }
    }
}
