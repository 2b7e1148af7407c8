use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::product::multiply_diagrams;
use crate::arith::{Polynomial, Rational};
use crate::diagram::MarkedDiagram;
use crate::error::{Error, Result};

/// Finite linear combination of marked diagrams with coefficients in `Q[x]`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    r: usize,
    terms: BTreeMap<MarkedDiagram, Polynomial>,
}

/// One `{coeff, diagram}` record of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementTerm {
    pub coeff: Polynomial,
    pub diagram: MarkedDiagram,
}

impl AlgebraElement {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(r: usize) -> Self {
        Self::from(MarkedDiagram::identity(r))
    }

    pub fn term(coeff: Polynomial, d: MarkedDiagram) -> Self {
        let mut e = Self::zero(d.r());
        e.add_term(coeff, d);
        e
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Polynomial, MarkedDiagram)>) -> Result<Self> {
        let mut e = Self::zero(r);
        for (c, d) in terms {
            if d.r() != r {
                return Err(Error::MismatchedRank { left: r, right: d.r() });
            }
            e.add_term(c, d);
        }
        Ok(e)
    }

    pub fn r(&self) -> usize {
        self.r
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

    pub fn terms(&self) -> impl Iterator<Item = (&MarkedDiagram, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &MarkedDiagram) -> Polynomial {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, coeff: Polynomial, d: MarkedDiagram) {
        debug_assert_eq!(d.r(), self.r);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(d);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut e = Self::zero(self.r);
        for (d, p) in &self.terms {
            e.add_term(p.scale(c), d.clone());
        }
        e
    }

    pub fn scale_poly(&self, c: &Polynomial) -> Self {
        let mut e = Self::zero(self.r);
        for (d, p) in &self.terms {
            e.add_term(p * c, d.clone());
        }
        e
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut e = self.clone();
        for (d, p) in &other.terms {
            e.add_term(p.clone(), d.clone());
        }
        Ok(e)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }

    /// Bilinear extension of the diagram product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut e = Self::zero(self.r);
        for (dx, px) in &self.terms {
            for (dy, py) in &other.terms {
                let prod = multiply_diagrams(dx, dy)?;
                if prod.is_zero() {
                    continue;
                }
                e.add_term(&(px * py) * &prod.coeff(), prod.diagram);
            }
        }
        Ok(e)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.r), |acc, _| &acc * self)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            Err(Error::MismatchedRank {
                left: self.r,
                right: other.r,
            })
        } else {
            Ok(())
        }
    }

    pub fn to_records(&self) -> Vec<ElementTerm> {
        self.terms
            .iter()
            .map(|(d, c)| ElementTerm {
                coeff: c.clone(),
                diagram: d.clone(),
            })
            .collect()
    }

    pub fn from_records(r: usize, records: Vec<ElementTerm>) -> Result<Self> {
        Self::from_terms(r, records.into_iter().map(|t| (t.coeff, t.diagram)))
    }
}

pub fn multiply_elements(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.try_mul(b)
}

impl From<MarkedDiagram> for AlgebraElement {
    fn from(d: MarkedDiagram) -> Self {
        Self::term(Polynomial::one(), d)
    }
}

// Operator sugar for same-rank operands; rank mismatches are programming
// errors here, use the `try_*` methods on untrusted input.
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("same r")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("same r")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("same r")
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            r: self.r,
            terms: self.terms.into_iter().map(|(d, p)| (d, -p)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.coeffs().iter().filter(|a| !num_traits::Zero::is_zero(*a)).count() > 1 {
                write!(f, "({c})*{d}")?;
            } else {
                write!(f, "{c}*{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement(r={}, {self})", self.r)
    }
}
