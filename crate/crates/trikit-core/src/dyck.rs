//! Lattice paths below a triangular partition and their enumerators.
//!
//! The paths weakly below the boundary of $\tau$ correspond to the
//! subpartitions $\alpha \subseteq \tau$. This module provides the
//! bounding-word encoding and its concatenation product, an iterator over
//! subpartitions, the first-return decomposition indexed by corners on the
//! diagonal, the $q$-area and $(q,t)$ enumerators, Bizley-style counting
//! formulas for integer lines, and the descent-restricted two-variable
//! sums attached to square staircases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::geometry::{integral_partition, is_triangular, sim};
use crate::partition::{Cell, Partition};
use crate::poly::{BivariatePolynomial, Polynomial};
use crate::poset::{diagonal, interior};
use crate::{Error, Result};

/// The boundary word of a partition: `0` steps east, `1` steps south,
/// read from $(0, \ell(\mu))$ down to $(\mu_1, 0)$.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundingWord {
    bits: Vec<bool>,
}

impl BoundingWord {
    /// Encodes a partition: for each row from the last to the first,
    /// emit east steps for the part increment, then one south step.
    pub fn from_partition(p: &Partition) -> Self {
        let mut bits = Vec::with_capacity(p.first_part() as usize + p.len());
        for j in (0..p.len()).rev() {
            let run = p.parts()[j] - p.part(j + 1);
            bits.extend(core::iter::repeat_n(false, run as usize));
            bits.push(true);
        }
        BoundingWord { bits }
    }

    /// The raw steps: `false` is east, `true` is south.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Reads a partition back: every south step records the current
    /// easting; the records, reversed and stripped of zeros, are the
    /// parts. Any 0/1 word decodes to some partition.
    pub fn decode(&self) -> Partition {
        let mut x = 0u32;
        let mut pushed = Vec::new();
        for &bit in &self.bits {
            if bit {
                pushed.push(x);
            } else {
                x += 1;
            }
        }
        pushed.reverse();
        Partition::new(pushed).expect("south records are weakly increasing")
    }

    /// Word concatenation.
    pub fn concat(&self, other: &BoundingWord) -> BoundingWord {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BoundingWord { bits }
    }
}

impl fmt::Display for BoundingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            write!(f, "{}", if bit { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for BoundingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::OutOfRange("bounding word must use 0 and 1")),
            }
        }
        Ok(BoundingWord { bits })
    }
}

/// The concatenation product on partitions: concatenate boundary words,
/// then decode. Associative, with the empty partition as unit.
pub fn odot(a: &Partition, b: &Partition) -> Partition {
    BoundingWord::from_partition(a)
        .concat(&BoundingWord::from_partition(b))
        .decode()
}

/// Iterates over all subpartitions of a fixed partition.
///
/// Starts at the partition itself and ends at the empty partition. To
/// advance, the first row that strictly exceeds the next row is
/// decremented and every earlier row is reset to its upper bound.
pub struct SubpartitionIter {
    tau: Vec<u32>,
    state: Option<Vec<u32>>,
}

impl SubpartitionIter {
    pub fn new(tau: &Partition) -> Self {
        let tau = tau.parts().to_vec();
        SubpartitionIter {
            state: Some(tau.clone()),
            tau,
        }
    }
}

impl Iterator for SubpartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.state.take()?;
        let result = Partition::new(current.clone()).expect("state is a partition");
        let rows = current.len();
        let mut next = current;
        for p in 0..rows {
            let following = if p + 1 < rows { next[p + 1] } else { 0 };
            if next[p] > following {
                next[p] -= 1;
                next[..p].copy_from_slice(&self.tau[..p]);
                self.state = Some(next);
                return Some(result);
            }
        }
        // All rows are zero: the empty partition was the last element.
        Some(result)
    }
}

/// One first-return split of a triangular partition, attached to a
/// diagonal corner cell.
///
/// `alpha` collects the rows strictly above the corner, `beta` the
/// columns strictly right of it; `alpha_cap_diag` counts diagonal cells
/// inside `alpha`, and `alpha_minus_diag` is `alpha` with those cells
/// removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWayDecomposition {
    pub corner: Cell,
    pub alpha: Partition,
    pub beta: Partition,
    pub alpha_cap_diag: u32,
    pub alpha_minus_diag: Partition,
}

/// All first-return splits of a triangular partition: one for each
/// east-then-south turn of the boundary word whose corner cell lies on
/// the diagonal.
pub fn threeway_decompositions(p: &Partition) -> Result<Vec<ThreeWayDecomposition>> {
    let diag = diagonal(p)?;
    let word = BoundingWord::from_partition(p);
    let bits = word.bits();
    let mut out = Vec::new();
    let mut x = 0u32;
    let mut y = p.len() as u32;
    for idx in 0..bits.len() {
        if !bits[idx] && idx + 1 < bits.len() && bits[idx + 1] {
            let corner = Cell::new(x, y - 1);
            if diag.contains(&corner) {
                out.push(build_decomposition(p, &diag, corner));
            }
        }
        if bits[idx] {
            y -= 1;
        } else {
            x += 1;
        }
    }
    Ok(out)
}

fn build_decomposition(p: &Partition, diag: &[Cell], corner: Cell) -> ThreeWayDecomposition {
    let j0 = corner.j as usize;
    debug_assert_eq!(corner.i + 1, p.part(j0), "corner ends its row");
    let alpha = Partition::new(p.parts()[j0 + 1..].to_vec()).expect("suffix of a partition");
    let cut = corner.i + 1;
    let beta_parts: Vec<u32> = p.parts()[..=j0].iter().map(|&r| r - cut).collect();
    let beta = Partition::new(beta_parts).expect("shifted prefix of a partition");
    let mut alpha_parts = alpha.parts().to_vec();
    let mut cap = 0u32;
    for c in diag {
        if c.j as usize > j0 {
            cap += 1;
            alpha_parts[c.j as usize - j0 - 1] -= 1;
        }
    }
    let alpha_minus_diag = Partition::new(alpha_parts).expect("diagonal cells end their rows");
    ThreeWayDecomposition {
        corner,
        alpha,
        beta,
        alpha_cap_diag: cap,
        alpha_minus_diag,
    }
}

fn q_rec(p: &Partition, cache: &mut BTreeMap<Partition, Polynomial>) -> Polynomial {
    if p.is_empty() {
        return Polynomial::one();
    }
    if let Some(hit) = cache.get(p) {
        return hit.clone();
    }
    let diag = diagonal(p).expect("recursion preserves triangularity");
    let inner = interior(p).expect("recursion preserves triangularity");
    let mut acc = q_rec(&inner, cache).shifted(diag.len() as u32);
    for d in threeway_decompositions(p).expect("recursion preserves triangularity") {
        let left = q_rec(&d.alpha_minus_diag, cache);
        let right = q_rec(&d.beta, cache);
        acc += &(&left * &right).shifted(d.alpha_cap_diag);
    }
    cache.insert(p.clone(), acc.clone());
    acc
}

/// The $q$-area enumerator $A_\tau(q) = \sum_{\alpha \subseteq \tau}
/// q^{|\tau| - |\alpha|}$, computed by the first-return recurrence.
pub fn q_area_enumerator(p: &Partition) -> Result<Polynomial> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    Ok(q_rec(p, &mut BTreeMap::new()))
}

fn count_rec(p: &Partition, cache: &mut BTreeMap<Partition, BigInt>) -> BigInt {
    if p.is_empty() {
        return BigInt::one();
    }
    if let Some(hit) = cache.get(p) {
        return hit.clone();
    }
    let inner = interior(p).expect("recursion preserves triangularity");
    let mut acc = count_rec(&inner, cache);
    for d in threeway_decompositions(p).expect("recursion preserves triangularity") {
        acc += count_rec(&d.alpha_minus_diag, cache) * count_rec(&d.beta, cache);
    }
    cache.insert(p.clone(), acc.clone());
    acc
}

/// The number of paths weakly below the partition: $A_\tau(1)$, via the
/// integer form of the first-return recurrence.
pub fn count_dyck(p: &Partition) -> Result<BigInt> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    Ok(count_rec(p, &mut BTreeMap::new()))
}

/// The two-variable enumerator $A_\tau(q, t) = \sum_{\alpha \subseteq
/// \tau} q^{|\tau| - |\alpha|} t^{\mathrm{sim}_\tau(\alpha)}$.
pub fn qt_enumerator(p: &Partition) -> Result<BivariatePolynomial> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    let total = p.size();
    let mut out = BivariatePolynomial::zero();
    for alpha in SubpartitionIter::new(p) {
        let area = (total - alpha.size()) as u32;
        let s = sim(p, &alpha)?;
        out.add_term(area, s, 1);
    }
    Ok(out)
}

/// Exact binomial coefficient.
pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The symmetry factor $z_\alpha = \prod_i i^{c_i} c_i!$ of a partition
/// with $c_i$ parts equal to $i$.
fn symmetry_factor(alpha: &Partition) -> BigInt {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &part in alpha.parts() {
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

/// Counts the paths weakly below the line from $(0, n)$ to $(m, 0)$ by
/// the cycle-splitting formula: with $d = \gcd(m, n)$ and $(a, b) =
/// (m/d, n/d)$,
/// $\sum_{\alpha \vdash d} z_\alpha^{-1} \prod_{k \in \alpha}
/// \tfrac{1}{a+b}\binom{k(a+b)}{ka}$.
pub fn bizley_count(m: u32, n: u32) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("line endpoints must be positive"));
    }
    let d = m.gcd(&n);
    let (a, b) = ((m / d) as u64, (n / d) as u64);
    let mut total = BigRational::zero();
    for alpha in Partition::all_of_size(d) {
        let mut term = BigRational::new(BigInt::one(), symmetry_factor(&alpha));
        for &k in alpha.parts() {
            let k = k as u64;
            term *= BigRational::new(big_binomial(k * (a + b), k * a), BigInt::from(a + b));
        }
        total += term;
    }
    debug_assert!(total.is_integer(), "path count must be an integer");
    Ok(total.to_integer())
}

/// Coefficients $g_0, \dots, g_{\text{terms}}$ of
/// $\exp\bigl(\sum_{k \ge 1} \tfrac{1}{a+b}\binom{k(a+b)}{ka}
/// \tfrac{z^k}{k}\bigr)$ for coprime $a, b$: the generating series of the
/// counts along the ray of slope $b/a$.
pub fn bizley_series(a: u32, b: u32, terms: usize) -> Result<Vec<BigInt>> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange("ray direction must be positive"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NonCoprime);
    }
    let (a, b) = (a as u64, b as u64);
    // g' = f' g for g = exp(f): n g_n = sum_k (k f_k) g_{n-k}.
    let mut f = Vec::with_capacity(terms + 1);
    f.push(BigRational::zero());
    for k in 1..=terms as u64 {
        f.push(BigRational::new(
            big_binomial(k * (a + b), k * a),
            BigInt::from(k * (a + b)),
        ));
    }
    let mut g = Vec::with_capacity(terms + 1);
    g.push(BigRational::one());
    for n in 1..=terms {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            acc += &f[k] * BigRational::from(BigInt::from(k)) * &g[n - k];
        }
        g.push(acc / BigRational::from(BigInt::from(n)));
    }
    let mut out = Vec::with_capacity(terms + 1);
    for gn in g {
        debug_assert!(gn.is_integer(), "series coefficients must be integers");
        out.push(gn.to_integer());
    }
    Ok(out)
}

/// The descent-restricted sum over paths below the square staircase
/// $\tau_{n,n}$, padded to $n$ rows:
/// $\sum_{\alpha \subseteq \tau} t^{\mathrm{sim}_\tau(\alpha)}
/// \sum_{J} q^{\sum_{i \in J} (\tau_i - \alpha_i)}$,
/// where $J$ runs over $k$-subsets of $\{1, \dots, n-1\}$ containing the
/// descent set of $\alpha$.
pub fn delta_enumerator(n: u32, k: u32) -> Result<BivariatePolynomial> {
    if n == 0 || n > 16 {
        return Err(Error::OutOfRange("staircase side must be in 1..=16"));
    }
    if k + 1 > n {
        return Err(Error::OutOfRange("subset size must be below the side"));
    }
    let tau = integral_partition(n, n);
    let positions = (n - 1) as usize;
    let mut out = BivariatePolynomial::zero();
    for alpha in SubpartitionIter::new(&tau) {
        let s = sim(&tau, &alpha)?;
        let mut descents = 0u32;
        for i in 0..positions {
            if alpha.part(i) > alpha.part(i + 1) {
                descents |= 1 << i;
            }
        }
        for mask in 0u32..(1 << positions) {
            if mask.count_ones() != k || mask & descents != descents {
                continue;
            }
            let mut area = 0u32;
            for i in 0..positions {
                if mask & (1 << i) != 0 {
                    area += tau.part(i) - alpha.part(i);
                }
            }
            out.add_term(area, s, 1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition;
    use crate::poset::TriangularCensus;
    use alloc::string::ToString;
    use alloc::vec;

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn test_bounding_word_round_trip() {
        let p = partition(&[2, 1]);
        let w = BoundingWord::from_partition(&p);
        assert_eq!(w.to_string(), "0101");
        assert_eq!(w.decode(), p);

        let e = BoundingWord::from_partition(&Partition::empty());
        assert_eq!(e.to_string(), "");
        assert_eq!(e.decode(), Partition::empty());

        for p in [partition(&[4, 2]), partition(&[3, 3, 1]), partition(&[5])] {
            assert_eq!(BoundingWord::from_partition(&p).decode(), p);
        }

        // Arbitrary words decode too.
        let w: BoundingWord = "110100".parse().unwrap();
        assert_eq!(w.decode(), partition(&[1]));
        assert!("01x".parse::<BoundingWord>().is_err());
    }

    #[test]
    fn test_odot() {
        let one = partition(&[1]);
        assert_eq!(odot(&one, &one), partition(&[2, 1]));
        assert_eq!(odot(&one, &Partition::empty()), one);
        assert_eq!(odot(&Partition::empty(), &one), one);

        // Associativity on a sample triple.
        let a = partition(&[2, 1]);
        let b = partition(&[3]);
        let c = partition(&[1, 1]);
        assert_eq!(odot(&odot(&a, &b), &c), odot(&a, &odot(&b, &c)));
    }

    #[test]
    fn test_subpartition_order() {
        let got: Vec<Partition> = SubpartitionIter::new(&partition(&[2, 1])).collect();
        assert_eq!(
            got,
            vec![
                partition(&[2, 1]),
                partition(&[1, 1]),
                partition(&[2]),
                partition(&[1]),
                Partition::empty(),
            ]
        );
    }

    #[test]
    fn test_subpartitions_match_containment_filter() {
        for tau in [
            partition(&[3, 2, 1]),
            partition(&[2, 2]),
            partition(&[4, 1]),
            Partition::empty(),
        ] {
            let mut got: Vec<Partition> = SubpartitionIter::new(&tau).collect();
            let count = got.len();
            got.sort();
            got.dedup();
            assert_eq!(got.len(), count, "no duplicates for {tau}");
            let mut expected = Vec::new();
            for s in 0..=tau.size() as u32 {
                for p in Partition::all_of_size(s) {
                    if tau.contains(&p) {
                        expected.push(p);
                    }
                }
            }
            expected.sort();
            assert_eq!(got, expected, "subpartitions of {tau}");
        }
    }

    #[test]
    fn test_threeway_decompositions_of_hook() {
        let splits = threeway_decompositions(&partition(&[2, 1])).unwrap();
        assert_eq!(splits.len(), 2);

        let top = &splits[0];
        assert_eq!(top.corner, Cell::new(0, 1));
        assert_eq!(top.alpha, Partition::empty());
        assert_eq!(top.beta, partition(&[1]));
        assert_eq!(top.alpha_cap_diag, 0);

        let bottom = &splits[1];
        assert_eq!(bottom.corner, Cell::new(1, 0));
        assert_eq!(bottom.alpha, partition(&[1]));
        assert_eq!(bottom.beta, Partition::empty());
        assert_eq!(bottom.alpha_cap_diag, 1);
        assert_eq!(bottom.alpha_minus_diag, Partition::empty());
    }

    #[test]
    fn test_threeway_skips_corners_off_the_diagonal() {
        // 2,2,1 has diagonal {(1,1)} but two east-south turns.
        let splits = threeway_decompositions(&partition(&[2, 2, 1])).unwrap();
        assert_eq!(splits.len(), 1);
        assert_eq!(splits[0].corner, Cell::new(1, 1));
        assert_eq!(splits[0].alpha, partition(&[1]));
        assert_eq!(splits[0].beta, Partition::empty());
        assert_eq!(splits[0].alpha_cap_diag, 0);
    }

    #[test]
    fn test_q_enumerator_fixed_values() {
        let cases: Vec<(Partition, Polynomial)> = vec![
            (Partition::empty(), poly(&[1])),
            (partition(&[1]), poly(&[1, 1])),
            (partition(&[2]), poly(&[1, 1, 1])),
            (partition(&[2, 1]), poly(&[1, 2, 1, 1])),
            (partition(&[3]), poly(&[1, 1, 1, 1])),
            (partition(&[3, 1]), poly(&[1, 2, 2, 1, 1])),
            (partition(&[4]), poly(&[1, 1, 1, 1, 1])),
            (partition(&[3, 2]), poly(&[1, 2, 2, 2, 1, 1])),
            (partition(&[4, 1]), poly(&[1, 2, 2, 2, 1, 1])),
            (partition(&[5]), poly(&[1, 1, 1, 1, 1, 1])),
            (partition(&[3, 2, 1]), poly(&[1, 3, 3, 3, 2, 1, 1])),
            (partition(&[4, 2]), poly(&[1, 2, 3, 2, 2, 1, 1])),
            (partition(&[5, 1]), poly(&[1, 2, 2, 2, 2, 1, 1])),
            (partition(&[6]), poly(&[1, 1, 1, 1, 1, 1, 1])),
        ];
        for (tau, expected) in cases {
            assert_eq!(q_area_enumerator(&tau).unwrap(), expected, "A_{tau}");
        }
        assert_eq!(
            q_area_enumerator(&partition(&[2, 2])),
            Err(Error::NotTriangular)
        );
    }

    #[test]
    fn test_recurrence_matches_enumeration() {
        let mut census = TriangularCensus::new();
        for tau in census.up_to(10) {
            let mut brute = Polynomial::zero();
            let total = tau.size();
            for alpha in SubpartitionIter::new(&tau) {
                brute += &Polynomial::monomial(BigInt::one(), (total - alpha.size()) as u32);
            }
            assert_eq!(q_area_enumerator(&tau).unwrap(), brute, "A_{tau}");
        }
    }

    #[test]
    fn test_count_dyck() {
        assert_eq!(
            count_dyck(&partition(&[3, 2, 1])).unwrap(),
            BigInt::from(14)
        );
        assert_eq!(count_dyck(&Partition::empty()).unwrap(), BigInt::one());
        // Side counts from the enumerator at q = 1.
        let mut census = TriangularCensus::new();
        for tau in census.up_to(9) {
            assert_eq!(
                count_dyck(&tau).unwrap(),
                q_area_enumerator(&tau).unwrap().eval_one(),
                "count of {tau}"
            );
        }
        // Fixed counts of size nine.
        for (parts, expected) in [
            (vec![3u32, 2, 2, 1, 1], 30i64),
            (vec![3, 3, 2, 1], 28),
            (vec![4, 3, 2], 28),
            (vec![5, 3, 1], 30),
            (vec![9], 10),
        ] {
            let tau = Partition::new(parts).unwrap();
            assert_eq!(count_dyck(&tau).unwrap(), BigInt::from(expected), "{tau}");
        }
    }

    #[test]
    fn test_qt_enumerator_hook() {
        let a = qt_enumerator(&partition(&[2, 1])).unwrap();
        let mut expected = BivariatePolynomial::zero();
        for (qe, te) in [(3, 0), (2, 1), (1, 2), (0, 3), (1, 1)] {
            expected.add_term(qe, te, 1);
        }
        assert_eq!(a, expected);
        assert!(a.is_symmetric());
        assert_eq!(a.specialize_t_one(), poly(&[1, 2, 1, 1]));
    }

    #[test]
    fn test_qt_symmetry_and_top_degree() {
        let mut census = TriangularCensus::new();
        for tau in census.up_to(8) {
            let a = qt_enumerator(&tau).unwrap();
            assert!(a.is_symmetric(), "A_{tau}(q,t) symmetric");
            // Conjugation invariance.
            assert_eq!(a, qt_enumerator(&tau.conjugate()).unwrap());
            // Top component is the full degree-|tau| staircase monomial sum.
            let n = tau.size() as u32;
            let mut top = BivariatePolynomial::zero();
            for i in 0..=n {
                top.add_term(i, n - i, 1);
            }
            assert_eq!(a.top_component(), top, "top of {tau}");
            // q-specialization agrees with the recurrence.
            assert_eq!(a.specialize_t_one(), q_area_enumerator(&tau).unwrap());
        }
    }

    #[test]
    fn test_bizley_count() {
        assert_eq!(bizley_count(2, 2).unwrap(), BigInt::from(2));
        assert_eq!(bizley_count(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(bizley_count(9, 3).unwrap(), BigInt::from(22));
        assert_eq!(bizley_count(1, 1).unwrap(), BigInt::one());
        assert_eq!(bizley_count(3, 2).unwrap(), BigInt::from(2));
        assert!(bizley_count(0, 3).is_err());
    }

    #[test]
    fn test_bizley_matches_path_count() {
        for m in 1..=5u32 {
            for n in 1..=5u32 {
                let tau = integral_partition(m, n);
                assert_eq!(
                    bizley_count(m, n).unwrap(),
                    count_dyck(&tau).unwrap(),
                    "line ({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn test_bizley_series() {
        let g = bizley_series(1, 1, 4).unwrap();
        let expected: Vec<BigInt> = [1, 1, 2, 5, 14].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(g, expected);

        let g = bizley_series(1, 2, 3).unwrap();
        for (d, gd) in g.iter().enumerate().skip(1) {
            assert_eq!(
                *gd,
                bizley_count(d as u32, 2 * d as u32).unwrap(),
                "degree {d}"
            );
        }

        assert_eq!(bizley_series(2, 4, 3), Err(Error::NonCoprime));
    }

    #[test]
    fn test_delta_enumerator() {
        let d = delta_enumerator(2, 1).unwrap();
        let mut expected = BivariatePolynomial::zero();
        expected.add_term(1, 0, 1);
        expected.add_term(0, 1, 1);
        assert_eq!(d, expected);

        // Full subsets recover the two-variable enumerator of the square
        // staircase.
        for n in 1..=4u32 {
            assert_eq!(
                delta_enumerator(n, n - 1).unwrap(),
                qt_enumerator(&integral_partition(n, n)).unwrap(),
                "side {n}"
            );
        }

        assert!(delta_enumerator(3, 3).is_err());
        assert!(delta_enumerator(0, 0).is_err());
    }

    #[test]
    fn test_big_binomial() {
        assert_eq!(big_binomial(4, 2), BigInt::from(6));
        assert_eq!(big_binomial(16, 8), BigInt::from(12870));
        assert_eq!(big_binomial(3, 7), BigInt::zero());
        assert_eq!(big_binomial(60, 30) % BigInt::from(2), BigInt::zero());
    }
}
