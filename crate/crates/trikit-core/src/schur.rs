//! Schur expansions of two-variable path enumerators.
//!
//! In two variables only Schur functions of shapes with at most two rows
//! survive, and $s_{(a,b)}(q,t) = \sum_{i=b}^{a} q^i t^{a+b-i}$. Symmetric
//! polynomials expand uniquely in these by a greedy peel of the leading
//! monomial. Hook-indexed coefficients of the full Schur expansion are
//! governed by a product generating function over subset sums.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::geometry::is_triangular;
use crate::partition::Partition;
use crate::poly::BivariatePolynomial;
use crate::{Error, Result};

/// The two-row Schur polynomial $s_{(a,b)}(q, t)$, requiring $a \ge b$.
pub fn two_row_schur(a: u32, b: u32) -> Result<BivariatePolynomial> {
    if b > a {
        return Err(Error::InvalidShape);
    }
    let mut out = BivariatePolynomial::zero();
    for i in b..=a {
        out.add_term(i, a + b - i, 1);
    }
    Ok(out)
}

/// A finite expansion $\sum c_{(a,b)} s_{(a,b)}(q,t)$ over two-row
/// shapes, keyed by $(a, b)$ with $a \ge b$.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl SchurExpansion {
    /// Shape/coefficient pairs in ascending shape order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// The smallest shape carrying a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<((u32, u32), BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(&k, c)| (k, c.clone()))
    }

    /// Re-assembles the polynomial $\sum c_{(a,b)} s_{(a,b)}$.
    pub fn to_polynomial(&self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            let s = two_row_schur(a, b).expect("stored shapes are valid");
            for (&(qe, te), sc) in s.terms() {
                out.add_term(qe, te, c * sc);
            }
        }
        out
    }
}

/// Expands a symmetric polynomial in two-row Schur polynomials by
/// repeatedly peeling the lexicographically leading monomial.
///
/// Fails with [`Error::NotSymmetric`] if a leading monomial $q^a t^b$
/// ever has $a < b$, which cannot happen for symmetric input.
pub fn expand_schur(poly: &BivariatePolynomial) -> Result<SchurExpansion> {
    let mut rest = poly.clone();
    let mut terms = BTreeMap::new();
    while let Some(((a, b), c)) = rest.leading_term() {
        if a < b {
            return Err(Error::NotSymmetric);
        }
        let c = c.clone();
        let s = two_row_schur(a, b)?;
        for (&(qe, te), sc) in s.terms() {
            rest.add_term(qe, te, -(&c * sc));
        }
        terms.insert((a, b), c);
    }
    Ok(SchurExpansion { terms })
}

/// The smaller of row and column count: the bound on hook legs.
pub fn rho(p: &Partition) -> u32 {
    (p.len() as u32).min(p.first_part())
}

/// Coefficients of hook Schur functions, keyed by $(a, b)$ for the hook
/// with arm $a$ and leg $b$, the shape $(a + 1, 1^b)$.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HookExpansion {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl HookExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The hook coefficients of a triangular partition's path enumerator,
/// from the product formula
/// $\sum_{a,b} c_{(a|b)} u^a v^b = u^{|\tau| - 1} \prod_{i=1}^{\rho - 1}
/// (1 + v / u^{i+1})$:
/// $c_{(a|k)}$ counts $k$-subsets of $\{2, \dots, \rho\}$ with sum
/// $|\tau| - 1 - a$.
pub fn hook_generating_function(p: &Partition) -> Result<HookExpansion> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    if p.is_empty() {
        return Ok(HookExpansion::default());
    }
    let n = p.size();
    let r = rho(p);
    // Subset-sum table over {2..=rho}: count[k][s] = k-subsets with sum s.
    let mut count: Vec<BTreeMap<u64, BigInt>> = vec![BTreeMap::new(); r as usize];
    count[0].insert(0, BigInt::one());
    for item in 2..=r as u64 {
        for k in (1..count.len()).rev() {
            let lower = count[k - 1].clone();
            for (s, c) in lower {
                *count[k].entry(s + item).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    let mut coeffs = BTreeMap::new();
    for (k, sums) in count.iter().enumerate() {
        for (s, c) in sums {
            if *s < n {
                let a = (n - 1 - s) as u32;
                coeffs.insert((a, k as u32), c.clone());
            }
        }
    }
    Ok(HookExpansion { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::qt_enumerator;
    use crate::partition::partition;

    #[test]
    fn test_two_row_schur() {
        let s21 = two_row_schur(2, 1).unwrap();
        let mut expected = BivariatePolynomial::zero();
        expected.add_term(2, 1, 1);
        expected.add_term(1, 2, 1);
        assert_eq!(s21, expected);
        assert!(s21.is_symmetric());

        assert_eq!(two_row_schur(0, 0).unwrap(), BivariatePolynomial::one());
        assert_eq!(two_row_schur(1, 2), Err(Error::InvalidShape));

        let s3 = two_row_schur(3, 0).unwrap();
        assert_eq!(s3.terms().count(), 4);
    }

    #[test]
    fn test_expand_hook_enumerator() {
        // A_{2,1}(q,t) = s_{(3)} + s_{(1,1)}.
        let a = qt_enumerator(&partition(&[2, 1])).unwrap();
        let e = expand_schur(&a).unwrap();
        assert_eq!(e.coeff(3, 0), BigInt::one());
        assert_eq!(e.coeff(1, 1), BigInt::one());
        assert_eq!(e.len(), 2);
        assert!(e.is_positive());
        assert_eq!(e.to_polynomial(), a);
    }

    #[test]
    fn test_expansion_table() {
        // Shapes are (a, b) pairs; all coefficients are one.
        let cases: Vec<(Partition, Vec<(u32, u32)>)> = vec![
            (Partition::empty(), vec![(0, 0)]),
            (partition(&[1]), vec![(1, 0)]),
            (partition(&[2]), vec![(2, 0)]),
            (partition(&[3, 1]), vec![(2, 1), (4, 0)]),
            (partition(&[3, 2]), vec![(3, 1), (5, 0)]),
            (partition(&[4, 1]), vec![(3, 1), (5, 0)]),
            (partition(&[3, 2, 1]), vec![(3, 1), (4, 1), (6, 0)]),
            (partition(&[4, 2]), vec![(2, 2), (4, 1), (6, 0)]),
            (partition(&[5, 1]), vec![(4, 1), (6, 0)]),
            (partition(&[4, 2, 1]), vec![(3, 2), (4, 1), (5, 1), (7, 0)]),
            (partition(&[5, 2]), vec![(3, 2), (5, 1), (7, 0)]),
            (partition(&[4, 3, 1]), vec![(4, 2), (5, 1), (6, 1), (8, 0)]),
            (partition(&[5, 3]), vec![(4, 2), (6, 1), (8, 0)]),
            (partition(&[6, 2]), vec![(4, 2), (6, 1), (8, 0)]),
            (partition(&[7, 1]), vec![(6, 1), (8, 0)]),
        ];
        for (tau, shapes) in cases {
            let e = expand_schur(&qt_enumerator(&tau).unwrap()).unwrap();
            assert_eq!(e.len(), shapes.len(), "terms of {tau}");
            for (a, b) in shapes {
                assert_eq!(e.coeff(a, b), BigInt::one(), "{tau}: s({a},{b})");
            }
        }
    }

    #[test]
    fn test_expand_rejects_asymmetric_leaders() {
        let p = BivariatePolynomial::monomial(1, 0, 1);
        assert_eq!(expand_schur(&p), Err(Error::NotSymmetric));
    }

    #[test]
    fn test_expand_round_trip_with_negatives() {
        // s_{(2,0)} - 3 s_{(1,1)} round-trips even with a negative term.
        let mut p = BivariatePolynomial::zero();
        for (&(a, b), c) in two_row_schur(2, 0).unwrap().terms() {
            p.add_term(a, b, c.clone());
        }
        for (&(a, b), c) in two_row_schur(1, 1).unwrap().terms() {
            p.add_term(a, b, c * BigInt::from(-3));
        }
        let e = expand_schur(&p).unwrap();
        assert!(!e.is_positive());
        assert_eq!(e.first_negative(), Some(((1, 1), BigInt::from(-3))));
        assert_eq!(e.to_polynomial(), p);
    }

    #[test]
    fn test_two_row_family() {
        // A_{(n-k,k)} = sum_j s_{(n-2j, j)} for j = 0..=k, valid as soon
        // as n > 3k - 1.
        for (n, k) in [(5u32, 1u32), (7, 2), (9, 3), (10, 3)] {
            let tau = partition(&[n - k, k]);
            let e = expand_schur(&qt_enumerator(&tau).unwrap()).unwrap();
            assert_eq!(e.len() as u32, k + 1, "terms of {tau}");
            for j in 0..=k {
                assert_eq!(e.coeff(n - 2 * j, j), BigInt::one(), "{tau}: j = {j}");
            }
        }

        // On the boundary n = 3k - 1 the enumerator collapses onto the
        // neighboring shape instead.
        for k in [2u32, 3] {
            let left = qt_enumerator(&partition(&[2 * k - 1, k])).unwrap();
            let right = qt_enumerator(&partition(&[2 * k, k - 1])).unwrap();
            assert_eq!(left, right, "k = {k}");
        }
    }

    #[test]
    fn test_hook_generating_function() {
        let h = hook_generating_function(&partition(&[3, 2, 1])).unwrap();
        assert_eq!(h.coeff(5, 0), BigInt::one());
        assert_eq!(h.coeff(3, 1), BigInt::one());
        assert_eq!(h.coeff(2, 1), BigInt::one());
        assert_eq!(h.coeff(0, 2), BigInt::one());
        assert_eq!(h.terms().count(), 4);

        // 5,4,3,2,1 has two hooks with arm 7 and leg 2: subsets {2,5}
        // and {3,4} of {2..5} sum to 7 = 15 - 1 - 7.
        let h = hook_generating_function(&Partition::staircase(5)).unwrap();
        assert_eq!(h.coeff(7, 2), BigInt::from(2));

        assert!(hook_generating_function(&Partition::empty())
            .unwrap()
            .is_empty());
        assert_eq!(
            hook_generating_function(&partition(&[2, 2])),
            Err(Error::NotTriangular)
        );
    }

    #[test]
    fn test_hook_gf_matches_expansion_hooks() {
        // For two-row triangular shapes the hooks of the expansion are
        // the (a, 0) and (a, 1) terms, which the product formula must
        // reproduce.
        for tau in [partition(&[4, 2]), partition(&[5, 2]), partition(&[6, 2])] {
            let e = expand_schur(&qt_enumerator(&tau).unwrap()).unwrap();
            let h = hook_generating_function(&tau).unwrap();
            for (&(a, b), c) in e.terms() {
                if b <= 1 {
                    // Shape (a, b) as a hook has arm a - 1 and leg b.
                    assert_eq!(h.coeff(a - 1, b), *c, "{tau}: s({a},{b})");
                }
            }
        }
    }

    #[test]
    fn test_rho() {
        assert_eq!(rho(&partition(&[3, 2, 1])), 3);
        assert_eq!(rho(&partition(&[5, 1])), 2);
        assert_eq!(rho(&Partition::empty()), 0);
        assert_eq!(rho(&partition(&[1, 1, 1])), 1);
    }
}
