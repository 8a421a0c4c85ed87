//! Independent brute-force checks used to validate the fast paths.
//!
//! The routines here deliberately avoid the hook-ratio machinery in
//! [`crate::geometry`]: they decide triangularity by sweeping explicit
//! rational directions and testing strict separation with integer
//! arithmetic only.

use crate::partition::Partition;
use num_integer::Integer;

/// Integer sort key of cell $(i, j)$ under direction $t = a/b$,
/// scaled by $b$: $a(i+1) + (b-a)(j+1)$.
fn key(a: u64, b: u64, i: u64, j: u64) -> u64 {
    a * (i + 1) + (b - a) * (j + 1)
}

/// Searches for a rational direction $t = a/b$ with $1 \le a < b \le
/// 2(|p| + 1)$ whose sweep order lists every cell of `p` strictly
/// before every cell outside it. Such a direction exists exactly when
/// `p` is triangular: the admissible directions form an open interval
/// whose endpoints have denominators at most $|p|$, so the mediant of
/// the endpoints is a witness within the bound.
pub fn slope_sweep_witness(p: &Partition) -> Option<(u32, u32)> {
    if p.is_empty() {
        return Some((1, 2));
    }
    let inner: alloc::vec::Vec<(u64, u64)> = p
        .cells()
        .into_iter()
        .map(|c| (c.i as u64, c.j as u64))
        .collect();
    // Minimal cells of the complement: one per row index 0..=len.
    let frontier: alloc::vec::Vec<(u64, u64)> = (0..=p.len())
        .map(|j| (p.part(j) as u64, j as u64))
        .collect();
    let bound = 2 * (p.size() + 1);
    for b in 2..=bound {
        for a in 1..b {
            if a.gcd(&b) != 1 {
                continue;
            }
            let max_inner = inner
                .iter()
                .map(|&(i, j)| key(a, b, i, j))
                .max()
                .expect("nonempty");
            let min_outer = frontier
                .iter()
                .map(|&(i, j)| key(a, b, i, j))
                .min()
                .expect("nonempty");
            if max_inner < min_outer {
                return Some((a as u32, b as u32));
            }
        }
    }
    None
}

/// Whether `p` is cut out by some line, decided by exhaustive
/// direction sweep.
pub fn slope_sweep_triangular(p: &Partition) -> bool {
    slope_sweep_witness(p).is_some()
}
