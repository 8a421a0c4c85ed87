//! The poset of triangular partitions under containment.
//!
//! Triangular partitions ordered by inclusion form a lattice whose covers
//! add a single cell. This module enumerates them by size, computes covers,
//! diagonals and interiors, meets and joins, dominance order within a size,
//! rays of prefix partitions, and the shape of each partition's region in
//! the space of cutting lines.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::geometry::{is_triangular, tau_midpoint};
use crate::partition::{Cell, Partition};
use crate::{Error, Result};

/// Triangular partitions enumerated size by size, cached incrementally.
///
/// Size $n+1$ partitions are generated by adding one cell to size $n$
/// ones: every nonempty triangular partition has a triangular lower cover,
/// so the sweep is exhaustive.
#[derive(Clone, Debug, Default)]
pub struct TriangularCensus {
    by_size: Vec<Vec<Partition>>,
}

impl TriangularCensus {
    pub fn new() -> Self {
        TriangularCensus {
            by_size: vec![vec![Partition::empty()]],
        }
    }

    /// Ensures sizes up to `n` are enumerated.
    pub fn extend_to(&mut self, n: usize) {
        if self.by_size.is_empty() {
            self.by_size.push(vec![Partition::empty()]);
        }
        while self.by_size.len() <= n {
            let last = self.by_size.last().expect("seeded with size zero");
            let mut next = BTreeSet::new();
            for p in last {
                for c in p.addable_corners() {
                    let q = p.with_cell_added(c).expect("addable corner");
                    if is_triangular(&q) {
                        next.insert(q);
                    }
                }
            }
            self.by_size.push(next.into_iter().collect());
        }
    }

    /// All triangular partitions of size `n`, ascending lexicographically
    /// (which on a fixed size is ascending dominance).
    pub fn of_size(&mut self, n: usize) -> &[Partition] {
        self.extend_to(n);
        &self.by_size[n]
    }

    /// Counts by size for sizes `0..=n`.
    pub fn counts(&mut self, n: usize) -> Vec<usize> {
        self.extend_to(n);
        self.by_size[..=n].iter().map(Vec::len).collect()
    }

    /// All triangular partitions of size at most `n`, smallest size first.
    pub fn up_to(&mut self, n: usize) -> Vec<Partition> {
        self.extend_to(n);
        self.by_size[..=n].iter().flatten().cloned().collect()
    }
}

/// All triangular partitions of size `n`.
pub fn enumerate_triangular(n: u32) -> Vec<Partition> {
    TriangularCensus::new().of_size(n as usize).to_vec()
}

/// Cells whose removal keeps the partition triangular. Empty partitions
/// have none; nonempty triangular partitions have one or two.
pub fn removable_cells(p: &Partition) -> Result<Vec<Cell>> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    Ok(p.removable_corners()
        .into_iter()
        .filter(|&c| {
            let q = p.with_cell_removed(c).expect("removable corner");
            is_triangular(&q)
        })
        .collect())
}

/// Cells whose addition keeps the partition triangular; always one or two.
pub fn addable_cells(p: &Partition) -> Result<Vec<Cell>> {
    if !is_triangular(p) {
        return Err(Error::NotTriangular);
    }
    Ok(p.addable_corners()
        .into_iter()
        .filter(|&c| {
            let q = p.with_cell_added(c).expect("addable corner");
            is_triangular(&q)
        })
        .collect())
}

/// The triangular partitions covered by `p`: remove one removable cell.
pub fn lower_covers(p: &Partition) -> Result<Vec<Partition>> {
    Ok(removable_cells(p)?
        .into_iter()
        .map(|c| p.with_cell_removed(c).expect("removable cell"))
        .collect())
}

/// The triangular partitions covering `p`: add one addable cell.
pub fn upper_covers(p: &Partition) -> Result<Vec<Partition>> {
    Ok(addable_cells(p)?
        .into_iter()
        .map(|c| p.with_cell_added(c).expect("addable cell"))
        .collect())
}

/// The diagonal: cells of `p` lying on the closed segment joining its
/// removable cells. A single removable cell is its own diagonal; the
/// empty partition has an empty diagonal.
pub fn diagonal(p: &Partition) -> Result<Vec<Cell>> {
    let rem = removable_cells(p)?;
    match rem.len() {
        0 => Ok(Vec::new()),
        1 => Ok(rem),
        2 => {
            let (a, b) = (rem[0], rem[1]);
            let di = b.i as i64 - a.i as i64;
            let dj = b.j as i64 - a.j as i64;
            let g = gcd64(di.unsigned_abs(), dj.unsigned_abs());
            let (si, sj) = (di / g as i64, dj / g as i64);
            let mut out = Vec::with_capacity(g as usize + 1);
            for k in 0..=g as i64 {
                let c = Cell::new((a.i as i64 + k * si) as u32, (a.j as i64 + k * sj) as u32);
                assert!(p.has_cell(c), "diagonal point escapes the partition");
                out.push(c);
            }
            Ok(out)
        }
        n => unreachable!("triangular partition with {n} removable cells"),
    }
}

fn gcd64(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// The interior: `p` with its diagonal removed. Always triangular.
pub fn interior(p: &Partition) -> Result<Partition> {
    let diag = diagonal(p)?;
    let mut parts: Vec<u32> = p.parts().to_vec();
    for c in diag {
        parts[c.j as usize] -= 1;
    }
    Partition::new(parts)
}

fn pointwise_max(a: &Partition, b: &Partition) -> Partition {
    let rows = a.len().max(b.len());
    let parts = (0..rows).map(|j| a.part(j).max(b.part(j))).collect();
    Partition::new(parts).expect("pointwise max is weakly decreasing")
}

fn pointwise_min(a: &Partition, b: &Partition) -> Partition {
    let rows = a.len().min(b.len());
    let parts = (0..rows).map(|j| a.part(j).min(b.part(j))).collect();
    Partition::new(parts).expect("pointwise min is weakly decreasing")
}

/// The join: the smallest triangular partition containing both arguments.
///
/// Scans sizes upward from the pointwise union; the lattice property
/// makes the smallest hit unique, which is asserted.
pub fn join_in(census: &mut TriangularCensus, a: &Partition, b: &Partition) -> Result<Partition> {
    if !is_triangular(a) || !is_triangular(b) {
        return Err(Error::NotTriangular);
    }
    let base = pointwise_max(a, b);
    // The staircase with m = largest part + number of parts contains base.
    let m = base.first_part() as u64 + base.len() as u64;
    let bound = (m * (m + 1) / 2) as usize;
    for s in base.size() as usize..=bound {
        let hits: Vec<&Partition> = census
            .of_size(s)
            .iter()
            .filter(|t| t.contains(&base))
            .collect();
        match hits.len() {
            0 => continue,
            1 => return Ok(hits[0].clone()),
            n => panic!("join candidate at minimal size is not unique ({n} found)"),
        }
    }
    unreachable!("a staircase above the union was missed")
}

/// The meet: the largest triangular partition contained in both arguments.
pub fn meet_in(census: &mut TriangularCensus, a: &Partition, b: &Partition) -> Result<Partition> {
    if !is_triangular(a) || !is_triangular(b) {
        return Err(Error::NotTriangular);
    }
    let base = pointwise_min(a, b);
    for s in (0..=base.size() as usize).rev() {
        let hits: Vec<&Partition> = census
            .of_size(s)
            .iter()
            .filter(|t| base.contains(t))
            .collect();
        match hits.len() {
            0 => continue,
            1 => return Ok(hits[0].clone()),
            n => panic!("meet candidate at maximal size is not unique ({n} found)"),
        }
    }
    unreachable!("the empty partition is contained in everything")
}

/// [`join_in`] with a throwaway census.
pub fn join(a: &Partition, b: &Partition) -> Result<Partition> {
    join_in(&mut TriangularCensus::new(), a, b)
}

/// [`meet_in`] with a throwaway census.
pub fn meet(a: &Partition, b: &Partition) -> Result<Partition> {
    meet_in(&mut TriangularCensus::new(), a, b)
}

/// Sorts a family of partitions ascending lexicographically by parts.
///
/// For equal-size triangular partitions this is ascending dominance:
/// dominance restricts to a total order there, and part-list order is a
/// linear extension of dominance on any fixed size.
pub fn dominance_sorted(ps: &[Partition]) -> Vec<Partition> {
    let mut v = ps.to_vec();
    v.sort();
    v
}

/// A ray direction $(t, 1-t)$ with an infinitesimal tilt that breaks
/// ties among cells of equal projection.
#[derive(Clone, Debug, PartialEq)]
pub struct Ray {
    t: BigRational,
    plus_epsilon: bool,
}

impl Ray {
    /// Requires $0 < t < 1$.
    pub fn new(t: BigRational, plus_epsilon: bool) -> Result<Self> {
        if t <= BigRational::zero() || t >= BigRational::one() {
            return Err(Error::OutOfRange("ray slope must lie strictly in (0, 1)"));
        }
        Ok(Ray { t, plus_epsilon })
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn plus_epsilon(&self) -> bool {
        self.plus_epsilon
    }

    /// The first `count + 1` partitions along the ray, sizes 0 through
    /// `count`: sort cells by $i t + j (1 - t)$, tilt-broken, and take
    /// prefixes. Every prefix is a partition because the key is strictly
    /// increasing in each coordinate.
    pub fn prefixes(&self, count: usize) -> Vec<Partition> {
        let mut out = Vec::with_capacity(count + 1);
        out.push(Partition::empty());
        if count == 0 {
            return out;
        }
        let one_minus_t = BigRational::one() - &self.t;
        let mut cells: Vec<(BigRational, i64, u32, u32)> = Vec::with_capacity(count * count);
        for i in 0..count as u32 {
            for j in 0..count as u32 {
                let key = &self.t * BigRational::from(BigInt::from(i))
                    + &one_minus_t * BigRational::from(BigInt::from(j));
                let tilt = if self.plus_epsilon {
                    i as i64 - j as i64
                } else {
                    j as i64 - i as i64
                };
                cells.push((key, tilt, i, j));
            }
        }
        cells.sort();
        let mut rows = vec![0u32; count];
        for (_, _, i, j) in cells.into_iter().take(count) {
            debug_assert!(i == rows[j as usize], "prefix is not left-justified");
            rows[j as usize] = i + 1;
            out.push(Partition::new(rows.clone()).expect("ray prefix is a partition"));
        }
        out
    }
}

/// The prefixes of the canonical ray of a triangular partition: direction
/// $t_\tau$ tilted positively, truncated at size $|\tau|$. The last
/// prefix is the partition itself.
pub fn ray_prefixes(tau: &Partition) -> Result<Vec<Partition>> {
    let ray = Ray::new(tau_midpoint(tau)?, true)?;
    Ok(ray.prefixes(tau.size() as usize))
}

/// The shape of a triangular partition's region in the space of cutting
/// lines $(r, s)$.
///
/// The region is unbounded exactly for the empty partition, one-row, and
/// one-column shapes; otherwise it is a triangle or quadrilateral with
/// one side per removable or addable cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionProfile {
    pub removable: Vec<Cell>,
    pub addable: Vec<Cell>,
    pub bounded: bool,
    pub sides: Option<usize>,
}

/// Computes the [`RegionProfile`] of a triangular partition.
pub fn region_profile(p: &Partition) -> Result<RegionProfile> {
    let removable = removable_cells(p)?;
    let addable = addable_cells(p)?;
    let bounded = !(p.is_empty() || p.len() == 1 || p.first_part() == 1);
    let sides = bounded.then(|| removable.len() + addable.len());
    Ok(RegionProfile {
        removable,
        addable,
        bounded,
        sides,
    })
}

/// A node of the Hasse diagram with exact layout coordinates
/// $|\tau| \cdot (t_\tau, 1 - t_\tau)$.
#[derive(Clone, Debug, PartialEq)]
pub struct HasseNode {
    pub partition: Partition,
    pub x: BigRational,
    pub y: BigRational,
}

/// The Hasse diagram of triangular partitions up to a size bound.
///
/// Nodes are sorted by size then lexicographically; edges point from the
/// smaller partition to the one covering it.
#[derive(Clone, Debug, PartialEq)]
pub struct HasseGraph {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<(usize, usize)>,
}

/// Builds the Hasse diagram of all triangular partitions of size at most
/// `max_size`.
pub fn hasse_graph(max_size: u32) -> HasseGraph {
    let mut census = TriangularCensus::new();
    let all = census.up_to(max_size as usize);
    let index: BTreeMap<&Partition, usize> = all.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut nodes = Vec::with_capacity(all.len());
    for p in &all {
        let t = tau_midpoint(p).expect("census members are triangular");
        let n = BigRational::from(BigInt::from(p.size()));
        let x = &n * &t;
        let y = &n * (BigRational::one() - &t);
        nodes.push(HasseNode {
            partition: p.clone(),
            x,
            y,
        });
    }
    let mut edges = Vec::new();
    for (upper_idx, p) in all.iter().enumerate() {
        if p.is_empty() {
            continue;
        }
        for low in lower_covers(p).expect("census members are triangular") {
            edges.push((index[&low], upper_idx));
        }
    }
    edges.sort_unstable();
    HasseGraph { nodes, edges }
}
