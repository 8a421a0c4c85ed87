//! Parking functions bounded by a triangular partition.
//!
//! A height-$n$ parking function below $\tau$ is a standard filling of
//! the skew shape $(\alpha + 1^n)/\alpha$ for some $\alpha \subseteq
//! \tau$; that shape is a disjoint union of columns, so its Schur
//! function is a product of elementary symmetric functions indexed by
//! the column sizes. Everything here tracks enumerators in the
//! elementary basis with $q$-polynomial coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyck::{threeway_decompositions, SubpartitionIter};
use crate::geometry::is_triangular;
use crate::partition::Partition;
use crate::poly::Polynomial;
use crate::poset::{diagonal, interior};
use crate::{Error, Result};

/// An integer-coefficient vector in the elementary basis at $q = 1$:
/// monomial $e_{\mu}$ keyed by $\mu$ sorted decreasingly.
pub type EVector = BTreeMap<Vec<u32>, BigInt>;

/// A vector of $q$-polynomials in the elementary basis: each key is a
/// decreasing list of positive indices $\mu$ standing for
/// $e_{\mu_1} e_{\mu_2} \cdots$.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EPolynomialVector {
    terms: BTreeMap<Vec<u32>, Polynomial>,
}

fn canonical_index(mut index: Vec<u32>) -> Vec<u32> {
    index.retain(|&i| i > 0);
    index.sort_unstable_by(|a, b| b.cmp(a));
    index
}

impl EPolynomialVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant vector $1$ (the empty product of elementaries).
    pub fn one() -> Self {
        Self::monomial(Vec::new(), Polynomial::one())
    }

    /// A single term $c(q) \, e_\mu$; zero indices are dropped and the
    /// index is sorted.
    pub fn monomial(index: Vec<u32>, coeff: Polynomial) -> Self {
        let mut v = Self::default();
        v.add_term(index, &coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds $c(q) \, e_\mu$ to the vector.
    pub fn add_term(&mut self, index: Vec<u32>, coeff: &Polynomial) {
        if coeff.is_zero() {
            return;
        }
        let key = canonical_index(index);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Index/coefficient pairs in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &[u32]) -> Polynomial {
        self.terms
            .get(&canonical_index(index.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Multiplies every coefficient by $q^k$.
    pub fn shifted(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (i.clone(), c.shifted(k)))
            .collect();
        EPolynomialVector { terms }
    }

    /// Product: indices concatenate as multisets, coefficients multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (i1, c1) in &self.terms {
            for (i2, c2) in &other.terms {
                let mut index = i1.clone();
                index.extend_from_slice(i2);
                out.add_term(index, &(c1 * c2));
            }
        }
        out
    }

    /// Evaluates every coefficient at $q = 1$.
    pub fn specialize_q_one(&self) -> EVector {
        self.terms
            .iter()
            .map(|(i, c)| (i.clone(), c.eval_one()))
            .collect()
    }
}

impl core::ops::AddAssign<&EPolynomialVector> for EPolynomialVector {
    fn add_assign(&mut self, rhs: &EPolynomialVector) {
        for (i, c) in &rhs.terms {
            self.add_term(i.clone(), c);
        }
    }
}

/// The multiset of column sizes of $(\alpha + 1^n)/\alpha$: run lengths
/// of equal values in $\alpha$ padded with zeros to $n$ rows, sorted
/// decreasingly. Requires $n \ge \ell(\alpha)$.
pub fn column_profile(alpha: &Partition, n: u32) -> Result<Vec<u32>> {
    if (n as usize) < alpha.len() {
        return Err(Error::HeightTooSmall);
    }
    let mut runs = Vec::new();
    let mut j = 0usize;
    while j < n as usize {
        let value = alpha.part(j);
        let mut len = 1u32;
        while j + (len as usize) < n as usize && alpha.part(j + len as usize) == value {
            len += 1;
        }
        runs.push(len);
        j += len as usize;
    }
    runs.sort_unstable_by(|a, b| b.cmp(a));
    Ok(runs)
}

fn check_height(tau: &Partition, n: u32) -> Result<()> {
    if !is_triangular(tau) {
        return Err(Error::NotTriangular);
    }
    if !tau.is_empty() && (n as usize) <= tau.len() {
        return Err(Error::HeightTooSmall);
    }
    Ok(())
}

/// The parking enumerator by its definition: $E_{(\tau,n)}(q; x) =
/// \sum_{\alpha \subseteq \tau} q^{|\tau| - |\alpha|}
/// e_{\mu(\alpha)}$, with $\mu(\alpha)$ the column profile at height
/// $n$. Requires $n > \ell(\tau)$ for nonempty $\tau$.
pub fn parking_enumerator_by_definition(tau: &Partition, n: u32) -> Result<EPolynomialVector> {
    check_height(tau, n)?;
    let total = tau.size();
    let mut out = EPolynomialVector::zero();
    for alpha in SubpartitionIter::new(tau) {
        let profile = column_profile(&alpha, n)?;
        let area = (total - alpha.size()) as u32;
        out.add_term(profile, &Polynomial::monomial(BigInt::one(), area));
    }
    Ok(out)
}

fn e_rec(
    tau: &Partition,
    n: u32,
    cache: &mut BTreeMap<(Partition, u32), EPolynomialVector>,
) -> EPolynomialVector {
    if tau.is_empty() {
        return EPolynomialVector::monomial(vec![n], Polynomial::one());
    }
    let key = (tau.clone(), n);
    if let Some(hit) = cache.get(&key) {
        return hit.clone();
    }
    let diag = diagonal(tau).expect("recursion preserves triangularity");
    let inner = interior(tau).expect("recursion preserves triangularity");
    let mut acc = e_rec(&inner, n, cache).shifted(diag.len() as u32);
    for d in threeway_decompositions(tau).expect("recursion preserves triangularity") {
        // First return at the corner's row splits the height.
        let k = d.corner.j + 1;
        let left = e_rec(&d.alpha_minus_diag, n - k, cache);
        let right = e_rec(&d.beta, k, cache);
        acc += &left.mul(&right).shifted(d.alpha_cap_diag);
    }
    cache.insert(key, acc.clone());
    acc
}

/// The parking enumerator by the first-return recurrence:
/// $E_{(\tau,n)} = q^{|\partial\tau|} E_{(\tau^\circ, n)} + \sum
/// q^{|\alpha \cap \partial\tau|} E_{(\alpha \setminus \partial\tau,
/// n-k)} E_{(\beta, k)}$ over diagonal corners, where $k$ is one more
/// than the corner's row.
pub fn parking_enumerator(tau: &Partition, n: u32) -> Result<EPolynomialVector> {
    check_height(tau, n)?;
    Ok(e_rec(tau, n, &mut BTreeMap::new()))
}

fn factorials(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let prev = out.last().expect("seeded").clone();
        out.push(prev * BigInt::from(i));
    }
    out
}

/// The number of height-$n$ parking functions below `tau`: each
/// $\alpha \subseteq \tau$ contributes the multinomial
/// $n! / \prod_i c_i!$ over its column profile.
pub fn parking_count(tau: &Partition, n: u32) -> Result<BigInt> {
    check_height(tau, n)?;
    let fact = factorials(n as u64);
    let mut total = BigInt::zero();
    for alpha in SubpartitionIter::new(tau) {
        let mut ways = fact[n as usize].clone();
        for c in column_profile(&alpha, n)? {
            ways /= &fact[c as usize];
        }
        total += ways;
    }
    Ok(total)
}

/// Counts height-$n$ parking functions below the integer line through
/// $(m, 0)$ and $(0, n)$ by the cycle-splitting sum: with $d = \gcd$
/// and $(a, b) = (m/d, n/d)$,
/// $\sum_{\mu \vdash d} \frac{n!}{z_\mu} \prod_{j \in \mu}
/// \frac{(ja)^{jb}}{a \, (jb)!}$.
pub fn parking_bizley_count(m: u32, n: u32) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("line endpoints must be positive"));
    }
    let d = m.gcd(&n);
    let (a, b) = ((m / d) as u64, (n / d) as u64);
    let fact = factorials(n as u64);
    let mut total = BigRational::zero();
    for mu in Partition::all_of_size(d) {
        let mut term = BigRational::new(fact[n as usize].clone(), symmetry_factor(&mu));
        for &j in mu.parts() {
            let j = j as u64;
            let numer = BigInt::from(j * a).pow((j * b) as u32);
            let denom = BigInt::from(a) * &fact[(j * b) as usize];
            term *= BigRational::new(numer, denom);
        }
        total += term;
    }
    debug_assert!(total.is_integer(), "parking count must be an integer");
    Ok(total.to_integer())
}

/// A superficially similar sum with multinomial weights,
/// $\sum_{\lambda \vdash d} \frac{1}{z_\lambda}
/// \binom{n}{\lambda} \prod_{k \in \lambda} \frac{(ka)^{kb-1}}{a}$,
/// which does **not** count parking functions: at $m = n = 2$ it gives
/// 2 where the true count is 3. Exposed so the mismatch can be
/// detected and reported rather than silently trusted.
pub fn parking_bizley_variant(m: u32, n: u32) -> Result<BigRational> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("line endpoints must be positive"));
    }
    let d = m.gcd(&n);
    let (a, b) = ((m / d) as u64, (n / d) as u64);
    let fact = factorials(n as u64);
    let mut total = BigRational::zero();
    for lambda in Partition::all_of_size(d) {
        // binom(n, lambda) = n! / (lambda_1! ... lambda_k! (n - d)!).
        let mut multinomial = BigRational::from(fact[n as usize].clone());
        for &part in lambda.parts() {
            multinomial /= BigRational::from(fact[part as usize].clone());
        }
        multinomial /= BigRational::from(fact[(n - d) as usize].clone());
        let mut term = multinomial / BigRational::from(symmetry_factor(&lambda));
        for &k in lambda.parts() {
            let k = k as u64;
            let e = (k * b) as u32;
            let numer = if e == 0 {
                // (ka)^{-1} for kb = 0 cannot arise: b >= 1.
                unreachable!("kb is positive")
            } else {
                BigInt::from(k * a).pow(e - 1)
            };
            term *= BigRational::new(numer, BigInt::from(a));
        }
        total += term;
    }
    Ok(total)
}

fn symmetry_factor(mu: &Partition) -> BigInt {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &part in mu.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (i, c) in mult {
        for _ in 0..c {
            z *= BigInt::from(i);
        }
        for f in 1..=c {
            z *= BigInt::from(f);
        }
    }
    z
}

type RationalEVector = BTreeMap<Vec<u32>, BigRational>;

/// Degree-sliced coefficients of $(\sum_i e_i z^i)^m$ up to $z^{cap}$.
fn elementary_power(m: u64, cap: usize) -> Vec<EVector> {
    let mut acc: Vec<EVector> = vec![EVector::new(); cap + 1];
    acc[0].insert(Vec::new(), BigInt::one());
    for _ in 0..m {
        let mut next: Vec<EVector> = vec![EVector::new(); cap + 1];
        for (deg, slice) in acc.iter().enumerate() {
            for (index, c) in slice {
                for i in 0..=(cap - deg) as u32 {
                    let mut key = index.clone();
                    if i > 0 {
                        key.push(i);
                    }
                    let key = canonical_index(key);
                    *next[deg + i as usize]
                        .entry(key)
                        .or_insert_with(BigInt::zero) += c;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Coefficients $G_0, \dots, G_{\text{terms}}$ of
/// $\exp\bigl(\sum_{k \ge 1} \tfrac{1}{a} e_{kb}[ka \cdot x]
/// \tfrac{z^k}{k}\bigr)$ for coprime $a, b$: the symmetric-function
/// series whose $z^d$ coefficient is the $q = 1$ parking enumerator of
/// the line $(da, db)$ at height $db$.
pub fn parking_bizley_series(a: u32, b: u32, terms: usize) -> Result<Vec<EVector>> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("ray direction must be positive"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NonCoprime);
    }
    let (a, b) = (a as u64, b as u64);
    // f_k = e_{kb}[ka x] / (a k): plethysm = degree-kb slice of E(z)^{ka}.
    let mut f: Vec<RationalEVector> = Vec::with_capacity(terms + 1);
    f.push(RationalEVector::new());
    for k in 1..=terms as u64 {
        let cap = (k * b) as usize;
        let slice = elementary_power(k * a, cap).swap_remove(cap);
        let scale = BigRational::new(BigInt::one(), BigInt::from(a * k));
        f.push(
            slice
                .into_iter()
                .map(|(i, c)| (i, BigRational::from(c) * &scale))
                .collect(),
        );
    }
    // g = exp(f) via n g_n = sum_k (k f_k) g_{n-k}.
    let mut g: Vec<RationalEVector> = Vec::with_capacity(terms + 1);
    let mut g0 = RationalEVector::new();
    g0.insert(Vec::new(), BigRational::one());
    g.push(g0);
    for n in 1..=terms {
        let mut acc = RationalEVector::new();
        for k in 1..=n {
            let kf = BigRational::from(BigInt::from(k));
            for (i1, c1) in &f[k] {
                for (i2, c2) in &g[n - k] {
                    let mut index = i1.clone();
                    index.extend_from_slice(i2);
                    let index = canonical_index(index);
                    let contrib = &kf * c1 * c2;
                    let slot = acc.entry(index).or_insert_with(BigRational::zero);
                    *slot += contrib;
                }
            }
        }
        let inv_n = BigRational::new(BigInt::one(), BigInt::from(n as u64));
        for c in acc.values_mut() {
            *c *= &inv_n;
        }
        acc.retain(|_, c| !c.is_zero());
        g.push(acc);
    }
    let mut out = Vec::with_capacity(terms + 1);
    for gn in g {
        let mut slice = EVector::new();
        for (i, c) in gn {
            debug_assert!(c.is_integer(), "series coefficients must be integers");
            slice.insert(i, c.to_integer());
        }
        out.push(slice);
    }
    Ok(out)
}
