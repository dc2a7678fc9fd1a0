//! Dense univariate polynomials over an exact commutative coefficient ring.
//!
//! The two-level tower used throughout the crate is
//! `AlphaScalar = Poly<Rational>` (polynomials in the order parameter `a`) and
//! `BiPoly = Poly<AlphaScalar>` (polynomials in `x` whose coefficients are
//! polynomials in `a`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exact commutative ring with unit, embedding the rationals.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    /// Binary exponentiation; `pow(0) = 1` for every element, including zero.
    fn pow(&self, mut exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// Multiplication by an embedded rational.
    fn scale_rational(&self, q: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(q))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn pow(&self, exp: u32) -> Self {
        Rational::pow(self, exp)
    }
    fn scale_rational(&self, q: &Rational) -> Self {
        self * q
    }
}

/// Dense polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in the order parameter `a` with rational coefficients.
pub type AlphaScalar = Poly<Rational>;

/// Polynomial in `x` whose coefficients are [`AlphaScalar`]s, i.e. an element of Q[a][x].
pub type BiPoly = Poly<AlphaScalar>;

/// Polynomial in `x` with rational coefficients.
pub type RatPoly = Poly<Rational>;

impl<C: Ring> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * v^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The main variable itself.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `v + c`.
    pub fn linear(c: C) -> Self {
        Self::from_coeffs(vec![c, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `v^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.coeffs.len() {
            0 => Some(C::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg_ref(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn scale_by(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale_rational(q)).collect())
    }

    /// Binary exponentiation; `power(p, 0) = 1` even for `p = 0`.
    pub fn power(&self, exp: u32) -> Self {
        Ring::pow(self, exp)
    }

    /// `p(v + c)`, expanded exactly.
    pub fn shift(&self, c: &C) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        // Horner on the linear polynomial v + c.
        let lin = Self::linear(c.clone());
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(a.clone()));
        }
        acc
    }

    /// `D^k p`.
    pub fn derive(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| {
                // i (i-1) ... (i-k+1)
                let falling: BigInt = ((i - k + 1)..=i).map(BigInt::from).product();
                self.coeffs[i].scale_rational(&Rational::from(falling))
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Forward difference `p(v + 1) - p(v)`.
    pub fn delta(&self) -> Self {
        self.shift(&C::one()).sub(self)
    }

    /// Horner evaluation, with `0^0 = 1`.
    pub fn eval(&self, v: &C) -> C {
        let mut acc = C::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul_ref(v).add_ref(a);
        }
        acc
    }

    /// `p(q(v))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Self::constant(a.clone()));
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg_ref(&self) -> Self {
        Poly::neg(self)
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(C::from_rational(q))
    }
    fn scale_rational(&self, q: &Rational) -> Self {
        self.scale_by(q)
    }
}

impl<C: Ring> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<'a, C: Ring> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        Poly::add(self, rhs)
    }
}

impl<'a, C: Ring> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        Poly::sub(self, rhs)
    }
}

impl<'a, C: Ring> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

impl AlphaScalar {
    /// The symbol `a` itself.
    pub fn alpha() -> Self {
        Self::var()
    }

    /// Substitutes `a -> a + offset`.
    pub fn shift_alpha(&self, offset: &Rational) -> Self {
        self.shift(offset)
    }
}

impl BiPoly {
    /// Lifts a rational polynomial in `x` into Q[a][x].
    pub fn from_rat_poly(p: &RatPoly) -> Self {
        p.map_coeffs(|c| AlphaScalar::constant(c.clone()))
    }

    /// Specializes `a` to a rational value, leaving a polynomial in `x`.
    pub fn eval_alpha(&self, a: &Rational) -> RatPoly {
        self.map_coeffs(|c| c.eval(a))
    }

    /// Specializes `x` to a rational value, leaving a polynomial in `a`.
    pub fn eval_x(&self, x: &Rational) -> AlphaScalar {
        self.eval(&AlphaScalar::constant(x.clone()))
    }

    /// Specializes both variables.
    pub fn eval_both(&self, x: &Rational, a: &Rational) -> Rational {
        self.eval_alpha(a).eval(x)
    }

    /// Substitutes `a -> a + offset` in every coefficient.
    pub fn shift_alpha(&self, offset: &Rational) -> Self {
        self.map_coeffs(|c| c.shift(offset))
    }

    /// `x`-shift by a rational amount.
    pub fn shift_x(&self, c: &Rational) -> Self {
        self.shift(&AlphaScalar::constant(c.clone()))
    }

    /// Largest power of `a` occurring in any coefficient.
    pub fn alpha_degree(&self) -> Option<usize> {
        self.coeffs().iter().filter_map(Poly::degree).max()
    }
}

/// `C(n, k)`; zero when `k < 0` or `k > n`. Negative `n` is a usage error.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Usage(format!("binomial with negative n = {n}")));
    }
    Ok(binomial_big(n as u64, k))
}

fn binomial_big(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as a rational; `n` must be non-negative.
pub(crate) fn binom(n: i64, k: i64) -> Rational {
    assert!(n >= 0, "binomial with negative n = {n}");
    Rational::from(binomial_big(n as u64, k))
}
