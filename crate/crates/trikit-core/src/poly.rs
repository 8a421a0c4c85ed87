//! Exact polynomials in one variable $q$ and two variables $q, t$.
//!
//! Coefficients are arbitrary-precision integers. Univariate polynomials
//! are dense; bivariate ones are sparse maps from exponent pairs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial in $q$ with integer coefficients, stored densely.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds from coefficients in increasing degree, trimming zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial $c \, q^k$.
    pub fn monomial(c: BigInt, k: u32) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[k as usize] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of $q^k$.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients in increasing degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplies by $q^k$.
    pub fn shifted(&self, k: u32) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Value at $q = 1$: the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// The $q$-integer $[n]_q = 1 + q + \dots + q^{n-1}$.
pub fn qint(n: u32) -> Polynomial {
    Polynomial {
        coeffs: vec![BigInt::one(); n as usize],
    }
}

/// The Gaussian binomial coefficient $\binom{n}{k}_q$.
pub fn qbinom(n: u32, k: u32) -> Polynomial {
    if k > n {
        return Polynomial::zero();
    }
    // Pascal recursion [m, j] = [m-1, j-1] + q^j [m-1, j].
    let mut row: Vec<Polynomial> = vec![Polynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        next.push(Polynomial::one());
        for j in 1..m as usize {
            let mut entry = row[j].shifted(j as u32);
            entry += &row[j - 1];
            next.push(entry);
        }
        next.push(Polynomial::one());
        row = next;
    }
    row.swap_remove(k as usize)
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (mono, coeff)) in terms.iter().enumerate() {
        let abs = coeff.abs();
        if idx == 0 {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}{mono}")?;
        }
    }
    Ok(())
}

fn power_string(var: &str, k: u32) -> String {
    use alloc::format;
    match k {
        0 => String::new(),
        1 => String::from(var),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (power_string("q", k as u32), c.clone()))
            .collect();
        write_terms(f, &terms)
    }
}

/// A polynomial in $q$ and $t$ with integer coefficients, stored sparsely.
///
/// Keys are exponent pairs $(a, b)$ for $q^a t^b$; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// The monomial $c \, q^a t^b$.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds $c \, q^a t^b$.
    pub fn add_term(&mut self, a: u32, b: u32, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Coefficient of $q^a t^b$.
    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exponent pairs and coefficients in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// The lexicographically largest exponent pair, if nonzero.
    pub fn leading_term(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&k, v)| (k, v))
    }

    /// Whether swapping $q$ and $t$ leaves the polynomial unchanged.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| self.terms.get(&(b, a)) == Some(c))
    }

    /// The polynomial with $q$ and $t$ exchanged.
    pub fn swapped(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            terms.insert((b, a), c.clone());
        }
        BivariatePolynomial { terms }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// The homogeneous component of top total degree.
    pub fn top_component(&self) -> Self {
        let Some(d) = self.total_degree() else {
            return Self::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(&(a, b), _)| a + b == d)
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        BivariatePolynomial { terms }
    }

    /// Sets $t = 1$, collapsing onto a polynomial in $q$.
    pub fn specialize_t_one(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&(a, _), c) in &self.terms {
            out += &Polynomial::monomial(c.clone(), a);
        }
        out
    }

    /// Value at $q = t = 1$.
    pub fn eval_one_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sets $t = q^{-1}$ and multiplies by $q^{\text{shift}}$.
    ///
    /// Each term $q^a t^b$ becomes $q^{a - b + \text{shift}}$; fails if any
    /// exponent would drop below zero.
    pub fn specialize_t_qinv(&self, shift: u32) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (&(a, b), c) in &self.terms {
            let e = a as i64 - b as i64 + shift as i64;
            if e < 0 {
                return Err(Error::ExponentUnderflow);
            }
            out += &Polynomial::monomial(c.clone(), e as u32);
        }
        Ok(out)
    }
}

impl AddAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn add_assign(&mut self, rhs: &BivariatePolynomial) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl SubAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn sub_assign(&mut self, rhs: &BivariatePolynomial) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, -c.clone());
        }
    }
}

impl Add<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::format;
        let terms: Vec<(String, BigInt)> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                (
                    format!("{}{}", power_string("q", a), power_string("t", b)),
                    c.clone(),
                )
            })
            .collect();
        write_terms(f, &terms)
    }
}
