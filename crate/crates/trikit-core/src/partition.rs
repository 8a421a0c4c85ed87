//! Integer partitions, their cells, and basic structural operations.
//!
//! A partition is stored as its weakly decreasing list of positive parts.
//! Cells use matrix-free coordinates: cell $(i, j)$ sits in column $i$ and
//! row $j$, both 0-based, so $(i, j)$ belongs to the partition exactly when
//! $i$ is less than the $(j+1)$-st part.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A lattice cell $(i, j)$: column $i$, row $j$, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub i: u32,
    pub j: u32,
}

impl Cell {
    pub fn new(i: u32, j: u32) -> Self {
        Cell { i, j }
    }

    /// North-east corner of the cell, the lattice point $(i+1, j+1)$.
    pub fn ne_corner(self) -> (u32, u32) {
        (self.i + 1, self.j + 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Outcome of a dominance comparison between equal-size partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// Strictly dominated by the other partition.
    Less,
    Equal,
    /// Strictly dominates the other partition.
    Greater,
    Incomparable,
}

/// An integer partition with weakly decreasing positive parts.
///
/// The derived order compares part lists lexicographically; on partitions
/// of equal size this is a linear extension of dominance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing part list; trailing
    /// zeros are stripped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonMonotonicParts);
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase $(k, k-1, \dots, 1)$.
    pub fn staircase(k: u32) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The parts as a slice.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The $(j+1)$-st part, or 0 past the end.
    pub fn part(&self, j: usize) -> u32 {
        self.parts.get(j).copied().unwrap_or(0)
    }

    /// The largest part, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.part(0)
    }

    /// All cells in row-major order: row 0 first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (j, &p) in self.parts.iter().enumerate() {
            for i in 0..p {
                out.push(Cell::new(i, j as u32));
            }
        }
        out
    }

    /// Whether the cell lies inside the partition.
    pub fn has_cell(&self, c: Cell) -> bool {
        (c.j as usize) < self.parts.len() && c.i < self.parts[c.j as usize]
    }

    /// The conjugate partition, reflecting cells across the diagonal.
    pub fn conjugate(&self) -> Self {
        let cols = self.first_part() as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p > i as u32).count() as u32);
        }
        Partition { parts }
    }

    /// Whether every cell of `other` is a cell of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(j, &p)| self.part(j) >= p)
    }

    /// Arm length: cells strictly right of `c` in its row.
    pub fn arm(&self, c: Cell) -> Result<u32> {
        if !self.has_cell(c) {
            return Err(Error::CellNotInPartition);
        }
        Ok(self.parts[c.j as usize] - 1 - c.i)
    }

    /// Leg length: cells strictly above `c` in its column.
    pub fn leg(&self, c: Cell) -> Result<u32> {
        if !self.has_cell(c) {
            return Err(Error::CellNotInPartition);
        }
        let mut count = 0;
        for j in (c.j as usize + 1)..self.parts.len() {
            if self.parts[j] > c.i {
                count += 1;
            } else {
                break;
            }
        }
        Ok(count)
    }

    /// Hook length: arm + leg + 1.
    pub fn hook(&self, c: Cell) -> Result<u32> {
        Ok(self.arm(c)? + self.leg(c)? + 1)
    }

    /// Compares by dominance: prefix sums of `self` against `other`.
    ///
    /// Defined only for partitions of equal size.
    pub fn dominance_compare(&self, other: &Partition) -> Result<Dominance> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch);
        }
        let rows = self.len().max(other.len());
        let mut sum_a = 0u64;
        let mut sum_b = 0u64;
        let mut seen_less = false;
        let mut seen_greater = false;
        for j in 0..rows {
            sum_a += self.part(j) as u64;
            sum_b += other.part(j) as u64;
            match sum_a.cmp(&sum_b) {
                Ordering::Less => seen_less = true,
                Ordering::Greater => seen_greater = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (seen_less, seen_greater) {
            (false, false) => Dominance::Equal,
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            (true, true) => Dominance::Incomparable,
        })
    }

    /// The result of adding one cell, if the cell is addable.
    ///
    /// A cell $(i, j)$ is addable when $i$ equals the $(j+1)$-st part and
    /// the new part still fits under the previous row.
    pub fn with_cell_added(&self, c: Cell) -> Option<Partition> {
        let j = c.j as usize;
        if j > self.parts.len() || c.i != self.part(j) {
            return None;
        }
        if j > 0 && self.part(j - 1) < self.part(j) + 1 {
            return None;
        }
        let mut parts = self.parts.clone();
        if j == parts.len() {
            parts.push(1);
        } else {
            parts[j] += 1;
        }
        Some(Partition { parts })
    }

    /// The result of removing one cell, if the cell is removable.
    pub fn with_cell_removed(&self, c: Cell) -> Option<Partition> {
        let j = c.j as usize;
        if j >= self.parts.len() || c.i + 1 != self.parts[j] {
            return None;
        }
        if self.parts[j] - 1 < self.part(j + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[j] -= 1;
        if parts[j] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Removable corner cells: last cell of each row that may be deleted.
    pub fn removable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..self.parts.len() {
            if self.parts[j] > self.part(j + 1) {
                out.push(Cell::new(self.parts[j] - 1, j as u32));
            }
        }
        out
    }

    /// Addable corner positions: cells whose addition keeps a partition.
    pub fn addable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..=self.parts.len() {
            if j == 0 || self.part(j - 1) > self.part(j) {
                out.push(Cell::new(self.part(j), j as u32));
            }
        }
        out
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece.trim().parse().map_err(|_| Error::InvalidPart)?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Convenience constructor for literals in tests and examples.
pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing parts")
}
