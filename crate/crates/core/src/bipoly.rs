//! Sparse polynomials in `x, y` (and univariate slices) with exact
//! nonnegative big-integer coefficients.
//!
//! Both types are canonical: zero coefficients are never stored and terms
//! iterate in increasing exponent order (`x` first, then `y`).

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("shifting y^{exp} by {shift} gives a negative exponent")]
    NegativeExponent { exp: u32, shift: i64 },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("degree of the zero polynomial")]
    Zero,
}

/// Variable letter of a [`UniPoly`]. Presentation only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn letter(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
        }
    }
}

/// `Σ c_{a,b} x^a y^b`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::monomial(1u32, 0, 0)
    }

    pub fn monomial(c: impl Into<BigUint>, a: u32, b: u32) -> BiPoly {
        BiPoly::from_terms([(a, b, c.into())])
    }

    /// Sums repeated monomials and drops zero coefficients.
    pub fn from_terms<I, C>(terms: I) -> BiPoly
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigUint>,
    {
        let mut p = BiPoly::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c.into());
        }
        p
    }

    /// Adds `c x^a y^b` in place.
    pub fn add_term(&mut self, a: u32, b: u32, c: BigUint) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => *e.get_mut() += c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(a, b, c)` for each `c x^a y^b`, sorted by `(a, b)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigUint)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigUint {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigUint) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiplies by `y^d`; `d` may be negative as long as every exponent
    /// stays nonnegative.
    pub fn shift_y(&self, d: i64) -> Result<BiPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let nb = i64::from(b) + d;
            if nb < 0 {
                return Err(PolyError::NegativeExponent { exp: b, shift: d });
            }
            let nb = u32::try_from(nb).map_err(|_| PolyError::ExponentOverflow)?;
            terms.insert((a, nb), c.clone());
        }
        Ok(BiPoly { terms })
    }

    /// `[x^k] p` as a polynomial in `y`.
    pub fn slice_x(&self, k: u32) -> UniPoly {
        UniPoly {
            var: Var::Y,
            terms: self
                .terms
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, b), c)| (b, c.clone()))
                .collect(),
        }
    }

    /// `[y^l] p` as a polynomial in `x`.
    pub fn slice_y(&self, l: u32) -> UniPoly {
        UniPoly {
            var: Var::X,
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b == l)
                .map(|(&(a, _), c)| (a, c.clone()))
                .collect(),
        }
    }

    /// `p(x, 1)`.
    pub fn substitute_y_one(&self) -> UniPoly {
        UniPoly::from_terms(Var::X, self.terms().map(|(a, _, c)| (a, c.clone())))
    }

    /// `p(1, y)`.
    pub fn substitute_x_one(&self) -> UniPoly {
        UniPoly::from_terms(Var::Y, self.terms().map(|(_, b, c)| (b, c.clone())))
    }

    /// Largest power of `x`.
    pub fn x_degree(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .next_back()
            .map(|&(a, _)| a)
            .ok_or(PolyError::Zero)
    }

    /// Largest power of `y`.
    pub fn y_degree(&self) -> Result<u32, PolyError> {
        self.terms.keys().map(|&(_, b)| b).max().ok_or(PolyError::Zero)
    }

    /// Removes `x^a y^b` and returns its coefficient.
    pub fn remove_term(&mut self, a: u32, b: u32) -> BigUint {
        self.terms.remove(&(a, b)).unwrap_or_default()
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Canonical text, e.g. `2xy + x^2y^3`.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{self}");
        s
    }
}

fn checked_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b).expect("polynomial exponent overflow")
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(checked_exp(a1, a2), checked_exp(b1, b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigUint, powers: &[(char, u32)]) -> fmt::Result {
    let constant = powers.iter().all(|&(_, e)| e == 0);
    if !c.is_one() || constant {
        write!(f, "{c}")?;
    }
    for &(v, e) in powers {
        match e {
            0 => {}
            1 => write!(f, "{v}")?,
            _ => write!(f, "{v}^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, b, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_monomial(f, c, &[('x', a), ('y', b)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// `Σ c_e v^e` in a single variable `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    var: Var,
    terms: BTreeMap<u32, BigUint>,
}

impl UniPoly {
    pub fn zero(var: Var) -> UniPoly {
        UniPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(var: Var, terms: I) -> UniPoly
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigUint>,
    {
        let mut p = UniPoly::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: u32, c: BigUint) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => *o.get_mut() += c,
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients under another variable letter.
    #[must_use]
    pub fn renamed(mut self, var: Var) -> UniPoly {
        self.var = var;
        self
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigUint)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: u32) -> BigUint {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at 1.
    pub fn coefficient_sum(&self) -> BigUint {
        self.terms.values().sum()
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_monomial(f, c, &[(self.var.letter(), e)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(terms: &[(u32, u32, u32)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(a, b, c)| (a, b, c)))
    }

    #[test]
    fn add_and_mul() {
        let xy = p(&[(1, 1, 1)]);
        assert_eq!(&xy + &xy, p(&[(1, 1, 2)]));
        let q = p(&[(0, 0, 1), (1, 2, 1)]);
        assert_eq!(&q * &q, p(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
        assert_eq!(&q * &BiPoly::zero(), BiPoly::zero());
        assert_eq!(q.scale(&BigUint::from(3u32)), p(&[(0, 0, 3), (1, 2, 3)]));
        assert!(q.scale(&BigUint::zero()).is_zero());
    }

    #[test]
    fn shift() {
        let q = p(&[(1, 1, 2), (2, 3, 1)]);
        assert_eq!(q.shift_y(-1).unwrap(), p(&[(1, 0, 2), (2, 2, 1)]));
        assert_eq!(q.shift_y(2).unwrap(), p(&[(1, 3, 2), (2, 5, 1)]));
        assert_eq!(
            q.shift_y(-2),
            Err(PolyError::NegativeExponent { exp: 1, shift: -2 })
        );
    }

    #[test]
    fn slices_and_substitution() {
        let q = p(&[(1, 1, 2), (2, 3, 1), (2, 1, 4)]);
        assert_eq!(
            q.substitute_y_one(),
            UniPoly::from_terms(Var::X, [(1, 2u32), (2, 5)])
        );
        assert_eq!(
            q.substitute_x_one(),
            UniPoly::from_terms(Var::Y, [(1, 6u32), (3, 1)])
        );
        assert_eq!(q.slice_x(2), UniPoly::from_terms(Var::Y, [(1, 4u32), (3, 1)]));
        assert_eq!(q.slice_y(1), UniPoly::from_terms(Var::X, [(1, 2u32), (2, 4)]));
        assert!(q.slice_x(7).is_zero());
        assert_eq!(q.coeff(2, 3), BigUint::one());
        assert_eq!(q.coeff(5, 5), BigUint::zero());
        assert_eq!(q.x_degree(), Ok(2));
        assert_eq!(BiPoly::zero().x_degree(), Err(PolyError::Zero));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p(&[(2, 3, 1), (1, 1, 2)]).to_string(), "2xy + x^2y^3");
        assert_eq!(p(&[(0, 0, 1)]).to_string(), "1");
        assert_eq!(p(&[(0, 2, 5), (3, 0, 1)]).to_string(), "5y^2 + x^3");
        assert_eq!(BiPoly::zero().to_string(), "0");
        let a = UniPoly::from_terms(Var::Y, [(1, 3u32), (3, 3), (5, 1)]);
        assert_eq!(a.to_string(), "3y + 3y^3 + y^5");
        assert_eq!(UniPoly::zero(Var::X).to_string(), "0");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let q = BiPoly::from_terms([(1u32, 1u32, 0u32), (2, 2, 1)]);
        assert_eq!(q.len(), 1);
        let mut u = UniPoly::zero(Var::X);
        u.add_term(3, BigUint::zero());
        assert!(u.is_zero());
    }
}
