//! Cutting-line geometry: which partitions are triangular, and why.
//!
//! A partition is triangular when its cells are exactly the lattice cells
//! $(i, j)$ with $(i+1)/r + (j+1)/s \le 1$ for some line with positive
//! intercepts $r, s$. Writing every admissible line direction as
//! $(t, 1-t)$, the admissible $t$ form an open interval $(t^-, t^+)$
//! computable from hook lengths, and the partition is triangular exactly
//! when that interval is nonempty.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partition::{Cell, Partition};
use crate::{Error, Result};

/// An exact fraction with nonnegative numerator, compared by cross
/// multiplication. Internal workhorse for slope arithmetic.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: u128,
    den: u128,
}

impl Frac {
    fn new(num: u128, den: u128) -> Self {
        debug_assert!(den > 0);
        Frac { num, den }
    }

    fn le(self, other: Frac) -> bool {
        self.num * other.den <= other.num * self.den
    }

    fn lt(self, other: Frac) -> bool {
        self.num * other.den < other.num * self.den
    }

    fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

/// Slope bounds of a partition together with the triangularity verdict.
///
/// `t_minus` is the largest $\ell(c)/h(c)$ over cells, `t_plus` the
/// smallest $(\ell(c)+1)/h(c)$; the partition is triangular exactly when
/// `t_minus < t_plus`. The empty partition gets the interval $(0, 1)$.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularityCertificate {
    pub t_minus: BigRational,
    pub t_plus: BigRational,
    pub is_triangular: bool,
}

/// Leg and hook length of every cell, via one conjugate pass.
fn leg_hook_cells(p: &Partition) -> Vec<(u32, u32)> {
    let conj = p.conjugate();
    let mut out = Vec::with_capacity(p.size() as usize);
    for (j, &row) in p.parts().iter().enumerate() {
        for i in 0..row {
            let arm = row - 1 - i;
            let leg = conj.part(i as usize) - 1 - j as u32;
            out.push((leg, arm + leg + 1));
        }
    }
    out
}

fn slope_bounds_frac(p: &Partition) -> (Frac, Frac) {
    let mut lo = Frac::new(0, 1);
    let mut hi = Frac::new(1, 1);
    for (leg, hook) in leg_hook_cells(p) {
        let below = Frac::new(leg as u128, hook as u128);
        let above = Frac::new(leg as u128 + 1, hook as u128);
        if lo.lt(below) {
            lo = below;
        }
        if above.lt(hi) {
            hi = above;
        }
    }
    (lo, hi)
}

/// Computes the slope interval $(t^-, t^+)$ and whether it is nonempty.
pub fn slope_bounds(p: &Partition) -> TriangularityCertificate {
    let (lo, hi) = slope_bounds_frac(p);
    TriangularityCertificate {
        is_triangular: lo.lt(hi),
        t_minus: lo.to_rational(),
        t_plus: hi.to_rational(),
    }
}

/// Whether the partition is triangular: some line $x/r + y/s = 1$ cuts
/// out exactly its cells.
pub fn is_triangular(p: &Partition) -> bool {
    let (lo, hi) = slope_bounds_frac(p);
    lo.lt(hi)
}

/// The midpoint $t_\tau = (t^- + t^+)/2$ of the slope interval, as an
/// internal fraction. Fails on non-triangular input.
fn tau_frac(p: &Partition) -> Result<Frac> {
    let (lo, hi) = slope_bounds_frac(p);
    if !lo.lt(hi) {
        return Err(Error::NotTriangular);
    }
    Ok(Frac::new(
        lo.num * hi.den + hi.num * lo.den,
        2 * lo.den * hi.den,
    ))
}

/// The canonical slope parameter $t_\tau = (t^- + t^+)/2$ of a
/// triangular partition.
pub fn tau_midpoint(p: &Partition) -> Result<BigRational> {
    Ok(tau_frac(p)?.to_rational())
}

/// A line $x/r + y/s = 1$ with positive intercepts.
#[derive(Clone, Debug, PartialEq)]
pub struct CuttingLine {
    pub r: BigRational,
    pub s: BigRational,
}

impl CuttingLine {
    pub fn new(r: BigRational, s: BigRational) -> Result<Self> {
        if r.is_positive() && s.is_positive() {
            Ok(CuttingLine { r, s })
        } else {
            Err(Error::NonPositiveLine)
        }
    }
}

/// The partition cut out by a line: all cells $(i, j)$ with
/// $(i+1)/r + (j+1)/s \le 1$, boundary included.
pub fn partition_from_line(line: &CuttingLine) -> Result<Partition> {
    let mut parts = Vec::new();
    let one = BigRational::one();
    for j in 0u32.. {
        let frac_left = &one - BigRational::from(BigInt::from(j + 1)) / &line.s;
        let limit = (&line.r * frac_left).floor().to_integer();
        if limit < BigInt::one() {
            break;
        }
        let part = limit.to_u32().ok_or(Error::PartTooLarge)?;
        parts.push(part);
    }
    Partition::new(parts)
}

/// A witness line for a triangular partition, built from $t_\tau$ by
/// separating the cells from the frontier.
pub fn recover_line(p: &Partition) -> Result<CuttingLine> {
    let t = tau_midpoint(p)?;
    let one_minus_t = BigRational::one() - &t;
    let key = |i: u32, j: u32| {
        &t * BigRational::from(BigInt::from(i + 1))
            + &one_minus_t * BigRational::from(BigInt::from(j + 1))
    };
    // Largest key inside the partition; zero if empty.
    let mut inner_max = BigRational::zero();
    for c in p.cells() {
        let k = key(c.i, c.j);
        if k > inner_max {
            inner_max = k;
        }
    }
    // Smallest key on the frontier: first cell outside each row.
    let mut frontier_min: Option<BigRational> = None;
    for j in 0..=p.len() as u32 {
        let k = key(p.part(j as usize), j);
        if frontier_min.as_ref().is_none_or(|m| k < *m) {
            frontier_min = Some(k);
        }
    }
    let c = (inner_max + frontier_min.expect("frontier is nonempty"))
        / BigRational::from(BigInt::from(2));
    CuttingLine::new(&c / &t, &c / &one_minus_t)
}

/// The partition cut by the integer line through $(k, 0)$ and $(0, n)$:
/// the $m$-th part is $\lfloor k(n-m)/n \rfloor$ for $m = 1, \dots, n$.
pub fn integral_partition(k: u32, n: u32) -> Partition {
    let mut parts = Vec::new();
    for m in 1..=n as u64 {
        let part = (k as u64 * (n as u64 - m)) / n as u64;
        if part == 0 {
            break;
        }
        parts.push(part as u32);
    }
    Partition::new(parts).expect("floor parts are weakly decreasing")
}

/// Searches for integers $(k, n)$ whose line cuts out exactly `p`.
///
/// A match forces $k$ and $n$ to be commensurate with the largest part
/// and the number of parts, so a bounded sweep is exhaustive.
pub fn is_integral(p: &Partition) -> Option<(u32, u32)> {
    let k_max = 2 * (p.first_part() + 1) + 2;
    let n_max = 2 * (p.len() as u32 + 1) + 2;
    for n in 1..=n_max {
        for k in 1..=k_max {
            // Cheap reject on the first part before building the rest.
            let first = (k as u64 * (n as u64 - 1)) / n as u64;
            if first != p.first_part() as u64 {
                continue;
            }
            if integral_partition(k, n) == *p {
                return Some((k, n));
            }
        }
    }
    None
}

/// The cells $c$ of `alpha` whose slope window in `alpha` straddles
/// $t_\tau$: $\ell_\alpha(c)/h_\alpha(c) \le t_\tau < (\ell_\alpha(c)+1)/h_\alpha(c)$.
///
/// `alpha` must be contained in the triangular partition `tau`.
pub fn sim_cells(tau: &Partition, alpha: &Partition) -> Result<Vec<Cell>> {
    if !tau.contains(alpha) {
        return Err(Error::NotContained);
    }
    let t = tau_frac(tau)?;
    let conj = alpha.conjugate();
    let mut out = Vec::new();
    for (j, &row) in alpha.parts().iter().enumerate() {
        for i in 0..row {
            let arm = row - 1 - i;
            let leg = conj.part(i as usize) - 1 - j as u32;
            let hook = (arm + leg + 1) as u128;
            let below = Frac::new(leg as u128, hook);
            let above = Frac::new(leg as u128 + 1, hook);
            if below.le(t) && t.lt(above) {
                out.push(Cell::new(i, j as u32));
            }
        }
    }
    Ok(out)
}

/// The number of cells counted by [`sim_cells`].
pub fn sim(tau: &Partition, alpha: &Partition) -> Result<u32> {
    Ok(sim_cells(tau, alpha)?.len() as u32)
}
