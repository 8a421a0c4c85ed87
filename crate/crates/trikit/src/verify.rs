//! Oracle cross-checks behind `trikit verify`.
//!
//! Each numbered criterion runs a batch of exact comparisons between
//! independent implementations: closed formulas against exhaustive
//! enumeration, recurrences against definitions, and computed values
//! against embedded reference tables. A criterion reports hard `errors`
//! (implementation bugs), `findings` (observations classified as
//! `bug`, `paper-discrepancy`, or `conjecture-counterexample`), a case
//! count, and wall time. Known reference-table discrepancies are
//! expected findings: the criterion fails unless they appear exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use trikit_core::{
    addable_cells, bizley_count, bizley_series, count_dyck, delta_enumerator, dominance_sorted,
    expand_schur, hasse_graph, hook_generating_function, integral_partition, is_integral,
    is_triangular, join_in, lower_covers, meet_in, parking_bizley_count, parking_bizley_series,
    parking_bizley_variant, parking_count, parking_enumerator, parking_enumerator_by_definition,
    q_area_enumerator, qbinom, qint, qt_enumerator, ray_prefixes, region_profile, removable_cells,
    rho, sim, slope_bounds, BivariatePolynomial, Dominance, Partition, Polynomial,
    SubpartitionIter, TriangularCensus,
};

/// How a finding is classified in the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// An implementation defect: two routes that must agree do not.
    Bug,
    /// A reference-table value that disagrees with the verified route.
    PaperDiscrepancy,
    /// A counterexample to a checked conjecture (e.g. Schur positivity).
    ConjectureCounterexample,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Bug => "bug",
            Classification::PaperDiscrepancy => "paper-discrepancy",
            Classification::ConjectureCounterexample => "conjecture-counterexample",
        }
    }
}

/// One observation worth reporting: what was compared, on which input,
/// and how the two sides differed.
#[derive(Clone, Debug)]
pub struct Finding {
    pub operation: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub classification: Classification,
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u32,
    pub name: &'static str,
    pub cases: u64,
    pub elapsed_ms: u128,
    pub errors: Vec<String>,
    pub findings: Vec<Finding>,
    pub details: String,
}

impl CriterionResult {
    /// A criterion passes when nothing is broken and no conjecture fell.
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && !self.has_counterexample()
    }

    pub fn has_counterexample(&self) -> bool {
        self.findings
            .iter()
            .any(|f| f.classification == Classification::ConjectureCounterexample)
    }

    /// Human-readable report block: one verdict line plus indented
    /// errors and findings.
    pub fn render(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut out = format!(
            "criterion {} ({}): {} ({} cases, {} ms{})",
            self.number,
            self.name,
            verdict,
            self.cases,
            self.elapsed_ms,
            if self.details.is_empty() {
                String::new()
            } else {
                format!("; {}", self.details)
            }
        );
        for e in &self.errors {
            out.push_str(&format!("\n  error: {e}"));
        }
        for f in &self.findings {
            out.push_str(&format!(
                "\n  finding[{}] {}({}): expected {}, got {}",
                f.classification.as_str(),
                f.operation,
                f.input,
                f.expected,
                f.actual
            ));
        }
        out
    }
}

const MAX_ERRORS: usize = 32;

/// Accumulator threaded through a criterion body.
struct Ctx {
    cases: u64,
    errors: Vec<String>,
    findings: Vec<Finding>,
    details: String,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            cases: 0,
            errors: Vec::new(),
            findings: Vec::new(),
            details: String::new(),
        }
    }

    /// Records one checked case; on failure keeps at most
    /// [`MAX_ERRORS`] messages so a systematic break stays readable.
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            match self.errors.len().cmp(&MAX_ERRORS) {
                std::cmp::Ordering::Less => self.errors.push(msg()),
                std::cmp::Ordering::Equal => self.errors.push("further failures suppressed".into()),
                std::cmp::Ordering::Greater => {}
            }
        }
    }

    fn finding(
        &mut self,
        classification: Classification,
        operation: &str,
        input: impl ToString,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.findings.push(Finding {
            operation: operation.into(),
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            classification,
        });
    }

    fn note(&mut self, s: impl AsRef<str>) {
        if !self.details.is_empty() {
            self.details.push_str(", ");
        }
        self.details.push_str(s.as_ref());
    }
}

fn run_body(number: u32, name: &'static str, body: impl FnOnce(&mut Ctx)) -> CriterionResult {
    let start = Instant::now();
    let mut ctx = Ctx::new();
    body(&mut ctx);
    CriterionResult {
        number,
        name,
        cases: ctx.cases,
        elapsed_ms: start.elapsed().as_millis(),
        errors: ctx.errors,
        findings: ctx.findings,
        details: ctx.details,
    }
}

/// Suite layout: which criteria each `verify` subcommand suite runs.
pub const SUITES: [(&str, &[u32]); 5] = [
    ("geometry", &[1, 2, 3]),
    ("poset", &[9, 10, 11]),
    ("dyck", &[4, 5, 7, 8, 13]),
    ("schur", &[6, 12]),
    ("park", &[14, 15]),
];

/// The criteria of a named suite; `all` yields 1..=15.
pub fn suite_criteria(name: &str) -> Option<Vec<u32>> {
    if name == "all" {
        return Some((1..=15).collect());
    }
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, cs)| cs.to_vec())
}

/// Runs one criterion; `max_size` overrides its headline sweep bound.
pub fn run_criterion(number: u32, max_size: Option<u32>) -> CriterionResult {
    match number {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(max_size),
        6 => criterion_6(max_size),
        7 => criterion_7(),
        8 => criterion_8(max_size),
        9 => criterion_9(max_size),
        10 => criterion_10(max_size),
        11 => criterion_11(max_size),
        12 => criterion_12(max_size),
        13 => criterion_13(),
        14 => criterion_14(max_size),
        15 => criterion_15(),
        _ => panic!("criterion number out of range: {number}"),
    }
}

/// Runs a whole suite (`all` or one of [`SUITES`]).
pub fn run_suite(name: &str, max_size: Option<u32>) -> Option<Vec<CriterionResult>> {
    let criteria = suite_criteria(name)?;
    Some(
        criteria
            .into_iter()
            .map(|n| run_criterion(n, max_size))
            .collect(),
    )
}

/// Process exit code for a batch of results: 2 for any hard failure,
/// else 3 for any conjecture counterexample, else 0.
pub fn exit_code(results: &[CriterionResult]) -> u8 {
    if results.iter().any(|r| !r.errors.is_empty()) {
        2
    } else if results.iter().any(CriterionResult::has_counterexample) {
        3
    } else {
        0
    }
}

/// Machine-readable report; counts match the human rendering. The
/// timestamp lives only here, in report metadata.
pub fn report_json(suite: &str, results: &[CriterionResult], extended: Option<&str>) -> Value {
    let criteria: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "number": r.number,
                "name": r.name,
                "passed": r.passed(),
                "cases": r.cases,
                "elapsed_ms": r.elapsed_ms as u64,
                "errors": r.errors,
                "findings": r.findings.iter().map(|f| json!({
                    "operation": f.operation,
                    "input": f.input,
                    "expected": f.expected,
                    "actual": f.actual,
                    "classification": f.classification.as_str(),
                })).collect::<Vec<_>>(),
                "details": r.details,
            })
        })
        .collect();
    let generated = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({
        "schema": crate::json::SCHEMA,
        "suite": suite,
        "criteria": criteria,
        "exit_code": exit_code(results),
        "extended": extended,
        "generated_unix_secs": generated,
    })
}

fn pt(s: &str) -> Partition {
    s.parse().expect("fixture partition")
}

fn gcd64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Criterion 1: triangular census counts for sizes 0..=15.
fn criterion_1() -> CriterionResult {
    run_body(1, "census-counts", |ctx| {
        let counts = TriangularCensus::new().counts(15);
        for (n, (&got, &want)) in counts.iter().zip(CENSUS_COUNTS.iter()).enumerate() {
            ctx.check(got == want, || {
                format!("census count at size {n}: computed {got}, reference {want}")
            });
        }
        ctx.note("sizes 0..=15");
    })
}

/// Criterion 2: the full census lists for sizes 0..=6, in order.
fn criterion_2() -> CriterionResult {
    run_body(2, "table-1", |ctx| {
        let mut census = TriangularCensus::new();
        for (n, want) in TABLE_1.iter().enumerate() {
            let got: Vec<String> = census.of_size(n).iter().map(Partition::to_string).collect();
            ctx.check(got == *want, || {
                format!("census of size {n}: computed {got:?}, reference {want:?}")
            });
        }
        ctx.note("sizes 0..=6 verbatim");
    })
}

/// Criterion 3: non-integral sublists for sizes 1..=10, in order
/// (empty through size 4).
fn criterion_3() -> CriterionResult {
    run_body(3, "non-integral", |ctx| {
        let mut census = TriangularCensus::new();
        for &(n, want) in NON_INTEGRAL.iter() {
            let got: Vec<String> = census
                .of_size(n as usize)
                .iter()
                .filter(|p| is_integral(p).is_none())
                .map(Partition::to_string)
                .collect();
            ctx.check(got == want, || {
                format!("non-integral of size {n}: computed {got:?}, reference {want:?}")
            });
        }
        ctx.note("sizes 1..=10");
    })
}

/// Criterion 4: path counts for every tabulated partition (sizes 1..=9),
/// and the table covers each census level completely.
fn criterion_4() -> CriterionResult {
    run_body(4, "table-2", |ctx| {
        let mut census = TriangularCensus::new();
        let mut by_size: BTreeMap<u64, usize> = BTreeMap::new();
        for &(s, want) in TABLE_2.iter() {
            let tau = pt(s);
            *by_size.entry(tau.size()).or_insert(0) += 1;
            let got = count_dyck(&tau).expect("triangular");
            ctx.check(got == BigInt::from(want), || {
                format!("path count of {tau}: computed {got}, reference {want}")
            });
        }
        for n in 1..=9u64 {
            let level = census.of_size(n as usize).len();
            let tabulated = by_size.get(&n).copied().unwrap_or(0);
            ctx.check(level == tabulated, || {
                format!("table covers size {n}: census has {level}, table has {tabulated}")
            });
        }
        ctx.note("53 tabulated counts");
    })
}

/// Criterion 5: the first-return recurrence matches the listed
/// area polynomials and, exhaustively, the brute-force area sum.
fn criterion_5(max_size: Option<u32>) -> CriterionResult {
    run_body(5, "q-recurrence", |ctx| {
        for &(s, coeffs) in Q_POLYS.iter() {
            let tau = pt(s);
            let want = Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect());
            let got = q_area_enumerator(&tau).expect("triangular");
            ctx.check(got == want, || {
                format!("area polynomial of {tau}: computed {got}, reference {want}")
            });
        }
        let bound = max_size.unwrap_or(14) as usize;
        let mut census = TriangularCensus::new();
        for tau in census.up_to(bound) {
            let brute = brute_area_poly(&tau);
            let rec = q_area_enumerator(&tau).expect("triangular");
            ctx.check(rec == brute, || {
                format!("recurrence vs enumeration at {tau}: {rec} vs {brute}")
            });
        }
        ctx.note(format!("recurrence exhaustive to size {bound}"));
    })
}

/// Criterion 6: symmetry, conjugation invariance, and the full top
/// antidiagonal of the (q,t)-enumerator; two-row Schur expansions match
/// the size <= 8 reference table and stay positive throughout.
fn criterion_6(max_size: Option<u32>) -> CriterionResult {
    run_body(6, "qt-schur", |ctx| {
        let table: BTreeMap<Partition, &[(u32, u32)]> =
            TABLE_4.iter().map(|&(s, shapes)| (pt(s), shapes)).collect();
        let bound = max_size.unwrap_or(12) as usize;
        let mut census = TriangularCensus::new();
        for tau in census.up_to(bound) {
            let poly = qt_enumerator(&tau).expect("triangular");
            ctx.check(poly.is_symmetric(), || {
                format!("(q,t)-enumerator of {tau} is not symmetric")
            });
            let conj = qt_enumerator(&tau.conjugate()).expect("triangular");
            ctx.check(poly == conj, || {
                format!("(q,t)-enumerator of {tau} differs from its conjugate")
            });
            let n = tau.size() as u32;
            let mut block = BivariatePolynomial::zero();
            for i in 0..=n {
                block.add_term(i, n - i, 1);
            }
            ctx.check(poly.top_component() == block, || {
                format!("top component of {tau} is not the full antidiagonal")
            });
            let exp = expand_schur(&poly).expect("symmetric");
            if let Some(((a, b), c)) = exp.first_negative() {
                ctx.finding(
                    Classification::ConjectureCounterexample,
                    "schur_positivity",
                    &tau,
                    "no negative coefficient",
                    format!("coefficient {c} at shape ({a},{b})"),
                );
            }
            ctx.cases += 1;
            if tau.size() <= 8 {
                let want: BTreeMap<(u32, u32), BigInt> = table
                    .get(&tau)
                    .or_else(|| table.get(&tau.conjugate()))
                    .expect("table covers sizes <= 8")
                    .iter()
                    .map(|&(a, b)| ((a, b), BigInt::one()))
                    .collect();
                let got: BTreeMap<(u32, u32), BigInt> =
                    exp.terms().map(|(&k, c)| (k, c.clone())).collect();
                ctx.check(got == want, || {
                    format!("Schur expansion of {tau}: computed {got:?}, reference {want:?}")
                });
            }
        }
        ctx.note(format!("positivity and symmetry to size {bound}"));
    })
}

/// Criterion 7: the cycle-index path-count formula equals brute-force
/// enumeration on every grid up to 8x8, pinned small values, and the
/// exponential generating series along three rays.
fn criterion_7() -> CriterionResult {
    run_body(7, "bizley", |ctx| {
        for m in 1..=8u32 {
            for n in 1..=8u32 {
                let tau = integral_partition(m, n);
                let brute = BigInt::from(SubpartitionIter::new(&tau).count());
                let formula = bizley_count(m, n).expect("positive grid");
                ctx.check(formula == brute, || {
                    format!("grid ({m},{n}): formula {formula}, enumeration {brute}")
                });
            }
        }
        for (m, n, want) in [(2u32, 2u32, 2i64), (3, 3, 5), (5, 3, 7), (9, 3, 22)] {
            let got = bizley_count(m, n).expect("positive grid");
            ctx.check(got == BigInt::from(want), || {
                format!("pinned count ({m},{n}): computed {got}, reference {want}")
            });
        }
        for (a, b) in [(1u32, 1u32), (1, 2), (2, 3)] {
            let series = bizley_series(a, b, 4).expect("coprime ray");
            for d in 1..=4u32 {
                let direct = bizley_count(a * d, b * d).expect("positive grid");
                ctx.check(series[d as usize] == direct, || {
                    format!(
                        "series ({a},{b}) at z^{d}: coefficient {}, direct {direct}",
                        series[d as usize]
                    )
                });
            }
        }
        ctx.note("grids to 8x8, three rays to z^4");
    })
}

/// Criterion 8: the t = 1/q specializations. The coprime product
/// identity is asserted; two-row identity mismatches are reported as
/// findings rather than failures.
fn criterion_8(max_size: Option<u32>) -> CriterionResult {
    run_body(8, "qt-specialization", |ctx| {
        for a in 1..=9u32 {
            for b in 1..=9u32 {
                if a + b > 10 || gcd64(a as u64, b as u64) != 1 {
                    continue;
                }
                let tau = integral_partition(a, b);
                let poly = qt_enumerator(&tau).expect("triangular");
                let spec = poly
                    .specialize_t_qinv(tau.size() as u32)
                    .expect("degree bounded by size");
                let lhs = &spec * &qint(a + b);
                let rhs = qbinom(a + b, a);
                ctx.check(lhs == rhs, || {
                    format!("coprime identity at ({a},{b}): {lhs} vs {rhs}")
                });
            }
        }
        let kmax = max_size.unwrap_or(12);
        let mut mismatches = 0u32;
        for k in 1..=kmax {
            for j in 1..=k {
                let Ok(tau) = Partition::new(vec![k, j]) else {
                    continue;
                };
                if !is_triangular(&tau) {
                    continue;
                }
                let poly = qt_enumerator(&tau).expect("triangular");
                let spec = poly
                    .specialize_t_qinv(tau.size() as u32)
                    .expect("degree bounded by size");
                let lhs = &(&spec * &qint(3)) * &qint(2);
                let rhs = &qint(2 * k - j + 2) * &qint(3 * (j + 1));
                ctx.cases += 1;
                if lhs != rhs {
                    mismatches += 1;
                    ctx.finding(
                        Classification::PaperDiscrepancy,
                        "two_row_product_identity",
                        &tau,
                        rhs,
                        lhs,
                    );
                }
            }
        }
        ctx.note(format!(
            "two-row identity to first part {kmax}: {mismatches} mismatches"
        ));
    })
}

/// Criterion 9: order structure. Covers are exactly one-cell
/// containments (exhaustive), removable/addable cells stay within
/// bounds, join/meet are the unique extremal bounds pairwise (with the
/// pinned non-distributivity witness), and dominance is a total order
/// per size characterized by the slope intervals.
fn criterion_9(max_size: Option<u32>) -> CriterionResult {
    run_body(9, "lattice", |ctx| {
        let cover_bound = max_size.unwrap_or(14) as usize;
        let mut census = TriangularCensus::new();
        let levels: Vec<Vec<Partition>> = (0..=cover_bound)
            .map(|n| census.of_size(n).to_vec())
            .collect();

        // Covers are one-cell steps: the level below intersected with
        // subsets equals the library's cover list, and every deeper
        // containment factors through the intermediate level.
        for n in 1..=cover_bound {
            for v in &levels[n] {
                let by_def: BTreeSet<Partition> = levels[n - 1]
                    .iter()
                    .filter(|u| v.contains(u))
                    .cloned()
                    .collect();
                let from_lib: BTreeSet<Partition> =
                    lower_covers(v).expect("triangular").into_iter().collect();
                ctx.check(by_def == from_lib, || {
                    format!("covers of {v}: one-cell {by_def:?} vs library {from_lib:?}")
                });
            }
        }
        for n in 2..=cover_bound {
            for v in &levels[n] {
                for m in 0..n - 1 {
                    for u in &levels[m] {
                        if !v.contains(u) {
                            continue;
                        }
                        let linked = levels[m + 1].iter().any(|w| v.contains(w) && w.contains(u));
                        ctx.check(linked, || {
                            format!(
                                "containment {u} < {v} has no intermediate at size {}",
                                m + 1
                            )
                        });
                    }
                }
            }
        }

        // Removable and addable cell counts stay within bounds.
        let mut wide = TriangularCensus::new();
        for tau in wide.up_to(20) {
            let rem = removable_cells(&tau).expect("triangular").len();
            let add = addable_cells(&tau).expect("triangular").len();
            ctx.check(rem <= 2, || format!("{tau} has {rem} removable cells"));
            ctx.check((1..=2).contains(&add), || {
                format!("{tau} has {add} addable cells")
            });
        }

        // Pairwise join/meet are the unique extremal bounds among all
        // triangular partitions of size <= 12.
        let elems = census.up_to(12);
        let mut lattice = TriangularCensus::new();
        for i in 0..elems.len() {
            for j in i..elems.len() {
                let (a, b) = (&elems[i], &elems[j]);
                let jn = join_in(&mut lattice, a, b).expect("triangular");
                let mt = meet_in(&mut lattice, a, b).expect("triangular");
                ctx.check(jn.contains(a) && jn.contains(b), || {
                    format!("join({a}, {b}) = {jn} is not an upper bound")
                });
                ctx.check(a.contains(&mt) && b.contains(&mt), || {
                    format!("meet({a}, {b}) = {mt} is not a lower bound")
                });
                let mut ok_join = true;
                let mut ok_meet = true;
                for w in &elems {
                    if w.contains(a) && w.contains(b) && !w.contains(&jn) {
                        ok_join = false;
                    }
                    if a.contains(w) && b.contains(w) && !mt.contains(w) {
                        ok_meet = false;
                    }
                }
                ctx.check(ok_join, || {
                    format!("join({a}, {b}) = {jn} is not below every upper bound")
                });
                ctx.check(ok_meet, || {
                    format!("meet({a}, {b}) = {mt} is not above every lower bound")
                });
            }
        }

        // Non-distributivity witness.
        let (p221, p32, p211) = (pt("2,2,1"), pt("3,2"), pt("2,1,1"));
        let inner_join = join_in(&mut lattice, &p32, &p211).expect("triangular");
        let lhs = meet_in(&mut lattice, &p221, &inner_join).expect("triangular");
        let left_meet = meet_in(&mut lattice, &p221, &p32).expect("triangular");
        let right_meet = meet_in(&mut lattice, &p221, &p211).expect("triangular");
        let rhs = join_in(&mut lattice, &left_meet, &right_meet).expect("triangular");
        ctx.check(lhs == p221, || format!("witness meet side: {lhs}"));
        ctx.check(rhs == pt("2,1,1"), || format!("witness join side: {rhs}"));
        ctx.check(lhs != rhs, || {
            "lattice looked distributive on the witness".into()
        });

        // Dominance is a total order per size, characterized by the
        // slope intervals, which tile (0, 1) along the sorted list.
        for n in 0..=12usize {
            let level = census.of_size(n).to_vec();
            let certs: Vec<_> = level.iter().map(slope_bounds).collect();
            for (i, x) in level.iter().enumerate() {
                for (j, y) in level.iter().enumerate() {
                    let cmp = x.dominance_compare(y).expect("equal sizes");
                    ctx.check(cmp != Dominance::Incomparable, || {
                        format!("{x} and {y} are dominance-incomparable")
                    });
                    let less = certs[j].t_plus <= certs[i].t_minus;
                    let greater = certs[i].t_plus <= certs[j].t_minus;
                    let want = if x == y {
                        Dominance::Equal
                    } else if less {
                        Dominance::Less
                    } else if greater {
                        Dominance::Greater
                    } else {
                        Dominance::Incomparable
                    };
                    ctx.check(cmp == want, || {
                        format!("dominance({x}, {y}) = {cmp:?} but slope intervals say {want:?}")
                    });
                }
            }
            ctx.check(dominance_sorted(&level) == level, || {
                format!("census order at size {n} is not dominance-sorted")
            });
            for pair in level.windows(2) {
                let (lo, hi) = (slope_bounds(&pair[0]), slope_bounds(&pair[1]));
                ctx.check(lo.t_minus == hi.t_plus, || {
                    format!(
                        "adjacent intervals of {} and {} do not share an endpoint",
                        pair[0], pair[1]
                    )
                });
            }
            if let (Some(first), Some(last)) = (level.first(), level.last()) {
                let (fc, lc) = (slope_bounds(first), slope_bounds(last));
                ctx.check(fc.t_plus == BigRational::one(), || {
                    format!("least element {first} does not reach t = 1")
                });
                ctx.check(lc.t_minus == BigRational::zero(), || {
                    format!("greatest element {last} does not reach t = 0")
                });
            }
        }
        ctx.note(format!(
            "covers to size {cover_bound}, bounds to 20, lattice and dominance to 12"
        ));
    })
}

/// Criterion 10: the subpartitions with maximal area + sim are exactly
/// the ray prefixes, exhaustively per partition.
fn criterion_10(max_size: Option<u32>) -> CriterionResult {
    run_body(10, "ray-prefixes", |ctx| {
        let bound = max_size.unwrap_or(12) as usize;
        let mut census = TriangularCensus::new();
        for tau in census.up_to(bound) {
            let size = tau.size() as u32;
            let brute: BTreeSet<Partition> = SubpartitionIter::new(&tau)
                .filter(|alpha| {
                    let s = sim(&tau, alpha).expect("subpartition");
                    (size - alpha.size() as u32) + s == size
                })
                .collect();
            let prefixes: BTreeSet<Partition> = ray_prefixes(&tau)
                .expect("triangular")
                .into_iter()
                .collect();
            ctx.check(brute == prefixes, || {
                format!("maximizers of area+sim at {tau}: enumeration {brute:?}, ray {prefixes:?}")
            });
        }
        ctx.note(format!("exhaustive to size {bound}"));
    })
}

/// Criterion 11: bounded slope-cone regions are 3- or 4-sided;
/// quadrilaterals have parallel corner lines and triangles have exactly
/// two positive lattice points on the repeated-corner line.
fn criterion_11(max_size: Option<u32>) -> CriterionResult {
    run_body(11, "region-geometry", |ctx| {
        let bound = max_size.unwrap_or(12) as usize;
        let mut census = TriangularCensus::new();
        for tau in census.up_to(bound) {
            if tau.is_empty() {
                continue;
            }
            let profile = region_profile(&tau).expect("triangular");
            if !profile.bounded {
                continue;
            }
            let sides = profile.sides.expect("bounded");
            ctx.check((3..=4).contains(&sides), || {
                format!("{tau} has a {sides}-sided region")
            });
            let rem: Vec<(i64, i64)> = profile
                .removable
                .iter()
                .map(|c| {
                    let (x, y) = c.ne_corner();
                    (x as i64, y as i64)
                })
                .collect();
            let add: Vec<(i64, i64)> = profile
                .addable
                .iter()
                .map(|c| {
                    let (x, y) = c.ne_corner();
                    (x as i64, y as i64)
                })
                .collect();
            match (rem.len(), add.len()) {
                (2, 2) => {
                    let r = (rem[1].0 - rem[0].0, rem[1].1 - rem[0].1);
                    let a = (add[1].0 - add[0].0, add[1].1 - add[0].1);
                    ctx.check(r.0 * a.1 - r.1 * a.0 == 0, || {
                        format!("corner lines of {tau} are not parallel: {r:?} vs {a:?}")
                    });
                }
                (2, 1) => {
                    let count = positive_lattice_points(rem[0], rem[1]);
                    ctx.check(count == Some(2), || {
                        format!("removable line of {tau} has {count:?} positive points")
                    });
                }
                (1, 2) => {
                    let count = positive_lattice_points(add[0], add[1]);
                    ctx.check(count == Some(2), || {
                        format!("addable line of {tau} has {count:?} positive points")
                    });
                }
                other => {
                    ctx.check(false, || {
                        format!("{tau} has corner signature {other:?} on a bounded region")
                    });
                }
            }
        }
        ctx.note(format!("bounded regions to size {bound}"));
    })
}

/// Criterion 12: hook coefficients. The product formula reproduces the
/// hook terms of every embedded expansion except the four known
/// reference discrepancies (reported), and the one-variable skewing
/// identity holds for every realized (size, rho).
fn criterion_12(max_size: Option<u32>) -> CriterionResult {
    run_body(12, "hook-delta", |ctx| {
        let expected: BTreeSet<(String, (u32, u32))> = EXPECTED_HOOK_DISCREPANCIES
            .iter()
            .map(|&(s, a, b, _, _)| (s.to_string(), (a, b)))
            .collect();
        let mut observed: BTreeSet<(String, (u32, u32))> = BTreeSet::new();
        for &(tau_s, fixture) in SCHUR_FIXTURES.iter() {
            let tau = pt(tau_s);
            let gf = hook_generating_function(&tau).expect("triangular");
            let mut fixture_hooks: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
            for &(shape_s, coeff) in fixture {
                let shape = pt(shape_s);
                if let Some(hook) = as_hook(shape.parts()) {
                    fixture_hooks.insert(hook, BigInt::from(coeff));
                }
            }
            let gf_hooks: BTreeMap<(u32, u32), BigInt> =
                gf.terms().map(|(&k, c)| (k, c.clone())).collect();
            let keys: BTreeSet<(u32, u32)> = fixture_hooks
                .keys()
                .chain(gf_hooks.keys())
                .copied()
                .collect();
            for key in keys {
                let f = fixture_hooks
                    .get(&key)
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                let g = gf_hooks.get(&key).cloned().unwrap_or_else(BigInt::zero);
                ctx.cases += 1;
                if f == g {
                    continue;
                }
                let slot = (tau_s.to_string(), key);
                if expected.contains(&slot) {
                    observed.insert(slot);
                    ctx.finding(
                        Classification::PaperDiscrepancy,
                        "hook_coefficient",
                        format!("{tau_s} at hook ({}|{})", key.0, key.1),
                        format!("{g} from the product formula"),
                        format!("{f} in the reference expansion"),
                    );
                } else {
                    ctx.check(false, || {
                        format!(
                            "hook ({}|{}) of {tau_s}: reference {f}, product formula {g}",
                            key.0, key.1
                        )
                    });
                }
            }
        }
        ctx.check(observed.len() == EXPECTED_HOOK_DISCREPANCIES.len(), || {
            format!(
                "expected {} known hook discrepancies, observed {}",
                EXPECTED_HOOK_DISCREPANCIES.len(),
                observed.len()
            )
        });

        // The doubled hook in the largest staircase expansion.
        let gf = hook_generating_function(&pt("5,4,3,2,1")).expect("triangular");
        ctx.check(gf.coeff(7, 2) == BigInt::from(2), || {
            format!("hook (7|2) of the 15-cell staircase: {}", gf.coeff(7, 2))
        });

        // Two-row terms of the embedded expansions against the
        // independently computed Schur expansion.
        for &(tau_s, fixture) in SCHUR_FIXTURES.iter() {
            let tau = pt(tau_s);
            let exp = expand_schur(&qt_enumerator(&tau).expect("triangular")).expect("symmetric");
            let mut fixture_two: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
            for &(shape_s, coeff) in fixture {
                let shape = pt(shape_s);
                if shape.len() <= 2 {
                    let key = (shape.first_part(), shape.part(1));
                    fixture_two.insert(key, BigInt::from(coeff));
                }
            }
            let got: BTreeMap<(u32, u32), BigInt> =
                exp.terms().map(|(&k, c)| (k, c.clone())).collect();
            ctx.check(got == fixture_two, || {
                format!("two-row terms of {tau_s}: computed {got:?}, reference {fixture_two:?}")
            });
        }

        // The two equal expansions in the reference data coincide.
        let f532: BTreeMap<&str, i64> = fixture_of("5,3,2").iter().copied().collect();
        let f631: BTreeMap<&str, i64> = fixture_of("6,3,1").iter().copied().collect();
        ctx.check(f532 == f631, || {
            "expansions of 5,3,2 and 6,3,1 differ".into()
        });

        // One-variable skewing identity over all realized (size, rho).
        let bound = max_size.unwrap_or(15) as usize;
        let mut census = TriangularCensus::new();
        let mut seen: BTreeSet<(u64, u32)> = BTreeSet::new();
        for tau in census.up_to(bound) {
            if tau.is_empty() {
                continue;
            }
            let r = rho(&tau);
            if !seen.insert((tau.size(), r)) {
                continue;
            }
            let gf = hook_generating_function(&tau).expect("triangular");
            for k in 1..r {
                let mut coeffs = vec![BigInt::zero(); tau.size() as usize + 2];
                for (&(a, b), c) in gf.terms() {
                    if b == k {
                        coeffs[a as usize + 1] += c;
                    }
                    if b + 1 == k {
                        coeffs[a as usize] += c;
                    }
                }
                let lhs = Polynomial::new(coeffs);
                let shift = tau.size() as u32 - k * (k + 1) / 2 - k * (r - k);
                let rhs = qbinom(r, k).shifted(shift);
                ctx.check(lhs == rhs, || {
                    format!(
                        "skewing identity at size {} rho {r} k {k}: {lhs} vs {rhs}",
                        tau.size()
                    )
                });
            }
        }
        ctx.note(format!(
            "9 expansions, identity to size {bound}, {} known discrepancies",
            EXPECTED_HOOK_DISCREPANCIES.len()
        ));
    })
}

/// Criterion 13: the descent-sum enumerator is q,t-symmetric, and at
/// k = n-1 equals the (q,t)-enumerator of the staircase line.
fn criterion_13() -> CriterionResult {
    run_body(13, "delta-sum", |ctx| {
        for n in 1..=5u32 {
            for k in 0..n {
                let d = delta_enumerator(n, k).expect("in range");
                ctx.check(d == d.swapped(), || {
                    format!("descent sum ({n},{k}) is not symmetric")
                });
                if k + 1 == n {
                    let qt = qt_enumerator(&integral_partition(n, n)).expect("triangular");
                    ctx.check(d == qt, || {
                        format!("descent sum ({n},{k}) differs from the enumerator: {d} vs {qt}")
                    });
                }
            }
        }
        ctx.note("n <= 5, all k");
    })
}

/// Criterion 14: parking functions. Coprime totals, the counting
/// formula against brute force, the known variant discrepancy at
/// (2,2), and the recurrence against the definition at three heights.
fn criterion_14(max_size: Option<u32>) -> CriterionResult {
    run_body(14, "parking", |ctx| {
        for m in 1..=7u32 {
            for n in 1..=5u32 {
                if gcd64(m as u64, n as u64) != 1 {
                    continue;
                }
                let tau = integral_partition(m, n);
                let got = parking_count(&tau, n).expect("height exceeds parts");
                let want = BigInt::from(m).pow(n - 1);
                ctx.check(got == want, || {
                    format!("coprime total ({m},{n}): computed {got}, closed form {want}")
                });
            }
        }
        for m in 1..=6u32 {
            for n in 1..=6u32 {
                let brute = parking_count(&integral_partition(m, n), n).expect("height ok");
                let formula = parking_bizley_count(m, n).expect("positive grid");
                ctx.check(formula == brute, || {
                    format!("parking count ({m},{n}): formula {formula}, enumeration {brute}")
                });
            }
        }

        // The alternative printed normalization disagrees at (2,2):
        // detecting that disagreement is part of the contract.
        let brute22 = parking_count(&integral_partition(2, 2), 2).expect("height ok");
        let variant22 = parking_bizley_variant(2, 2).expect("positive grid");
        ctx.check(brute22 == BigInt::from(3), || {
            format!("parking count (2,2): {brute22}")
        });
        ctx.check(variant22 == BigRational::from_integer(2.into()), || {
            format!("variant normalization at (2,2): {variant22}")
        });
        ctx.check(
            variant22 != BigRational::from_integer(brute22.clone()),
            || "variant normalization unexpectedly agrees at (2,2)".into(),
        );
        ctx.finding(
            Classification::PaperDiscrepancy,
            "parking_series_normalization",
            "(2,2)",
            format!("{brute22} by enumeration"),
            format!("{variant22} from the alternative normalization"),
        );
        let mut disagreements = 0u32;
        for m in 1..=6u32 {
            for n in 1..=6u32 {
                let count = parking_bizley_count(m, n).expect("positive grid");
                let variant = parking_bizley_variant(m, n).expect("positive grid");
                ctx.cases += 1;
                if variant != BigRational::from_integer(count) {
                    disagreements += 1;
                }
            }
        }

        let bound = max_size.unwrap_or(9) as usize;
        let mut census = TriangularCensus::new();
        for tau in census.up_to(bound) {
            let l = tau.len() as u32;
            for n in l + 1..=l + 3 {
                let rec = parking_enumerator(&tau, n).expect("height exceeds parts");
                let def = parking_enumerator_by_definition(&tau, n).expect("height ok");
                ctx.check(rec == def, || {
                    format!("parking recurrence at {tau}, height {n}: {rec:?} vs {def:?}")
                });
            }
        }
        ctx.note(format!(
            "recurrence to size {bound}, variant disagrees on {disagreements}/36 grids"
        ));
    })
}

/// Criterion 15: the symmetric-function series matches the q = 1
/// parking enumerator along the first two rays.
fn criterion_15() -> CriterionResult {
    run_body(15, "parking-series", |ctx| {
        for (a, b) in [(1u32, 1u32), (1, 2)] {
            let series = parking_bizley_series(a, b, 3).expect("coprime ray");
            for d in 1..=3u32 {
                let tau = integral_partition(a * d, b * d);
                let direct = parking_enumerator(&tau, b * d)
                    .expect("height exceeds parts")
                    .specialize_q_one();
                ctx.check(series[d as usize] == direct, || {
                    format!(
                        "series ({a},{b}) at z^{d}: {:?} vs {direct:?}",
                        series[d as usize]
                    )
                });
            }
        }
        ctx.note("rays (1,1) and (1,2) to z^3");
    })
}

/// Non-gating large-scale statistics: the non-integral fraction among
/// sizes <= 55 and the node/edge tallies of the size-45 diagram.
pub fn extended_checks() -> (bool, String) {
    let mut census = TriangularCensus::new();
    let all = census.up_to(55);
    let sized = all.len() - 1;
    let non_integral = all
        .iter()
        .filter(|p| !p.is_empty() && is_integral(p).is_none())
        .count();
    let fraction = non_integral as f64 / sized as f64;
    let frac_ok = fraction > 0.875;
    let g = hasse_graph(45);
    let count_sum: usize = census.counts(45).iter().sum();
    let graph_ok = g.nodes.len() == count_sum;
    let summary = format!(
        "non-integral {non_integral}/{sized} = {:.4} (> 0.875: {frac_ok}); \
         diagram to size 45: {} nodes, {} edges (census agreement: {graph_ok})",
        fraction,
        g.nodes.len(),
        g.edges.len()
    );
    (frac_ok && graph_ok, summary)
}

fn brute_area_poly(tau: &Partition) -> Polynomial {
    let size = tau.size() as usize;
    let mut coeffs = vec![BigInt::zero(); size + 1];
    for alpha in SubpartitionIter::new(tau) {
        coeffs[size - alpha.size() as usize] += 1;
    }
    Polynomial::new(coeffs)
}

/// The hook coordinates (arm | leg) of a shape, when it is a hook.
fn as_hook(parts: &[u32]) -> Option<(u32, u32)> {
    match parts {
        [] => None,
        [first, rest @ ..] if rest.iter().all(|&x| x == 1) => Some((first - 1, rest.len() as u32)),
        _ => None,
    }
}

/// Lattice points of the line through two distinct points that lie in
/// the quadrant x, y >= 1; `None` for axis-parallel lines, which carry
/// infinitely many.
fn positive_lattice_points(p1: (i64, i64), p2: (i64, i64)) -> Option<u64> {
    let (dx, dy) = (p2.0 - p1.0, p2.1 - p1.1);
    if dx == 0 || dy == 0 {
        return None;
    }
    let g = gcd64(dx.unsigned_abs(), dy.unsigned_abs()) as i64;
    let (sx, sy) = (dx / g, dy / g);
    let mut count = 0u64;
    let mut q = p1;
    while q.0 >= 1 && q.1 >= 1 {
        count += 1;
        q = (q.0 + sx, q.1 + sy);
    }
    q = (p1.0 - sx, p1.1 - sy);
    while q.0 >= 1 && q.1 >= 1 {
        count += 1;
        q = (q.0 - sx, q.1 - sy);
    }
    Some(count)
}

fn fixture_of(tau: &str) -> &'static [(&'static str, i64)] {
    SCHUR_FIXTURES
        .iter()
        .find(|(s, _)| *s == tau)
        .map(|(_, f)| *f)
        .expect("fixture present")
}

/// Census counts for sizes 0..=15.
const CENSUS_COUNTS: [usize; 16] = [1, 1, 2, 3, 4, 6, 7, 8, 10, 12, 13, 16, 16, 18, 20, 23];

/// Full census lists for sizes 0..=6, ascending.
const TABLE_1: [&[&str]; 7] = [
    &["-"],
    &["1"],
    &["1,1", "2"],
    &["1,1,1", "2,1", "3"],
    &["1,1,1,1", "2,1,1", "3,1", "4"],
    &["1,1,1,1,1", "2,1,1,1", "2,2,1", "3,2", "4,1", "5"],
    &[
        "1,1,1,1,1,1",
        "2,1,1,1,1",
        "2,2,1,1",
        "3,2,1",
        "4,2",
        "5,1",
        "6",
    ],
];

/// Non-integral triangular partitions for sizes 1..=10, ascending.
const NON_INTEGRAL: [(u32, &[&str]); 10] = [
    (1, &[]),
    (2, &[]),
    (3, &[]),
    (4, &[]),
    (5, &["2,1,1,1", "2,2,1", "3,2", "4,1"]),
    (6, &["2,1,1,1,1", "5,1"]),
    (7, &["2,1,1,1,1,1", "3,2,1,1", "4,2,1", "6,1"]),
    (
        8,
        &[
            "2,1,1,1,1,1,1",
            "2,2,1,1,1,1",
            "2,2,2,1,1",
            "5,3",
            "6,2",
            "7,1",
        ],
    ),
    (
        9,
        &[
            "2,1,1,1,1,1,1,1",
            "2,2,1,1,1,1,1",
            "3,3,2,1",
            "4,3,2",
            "7,2",
            "8,1",
        ],
    ),
    (
        10,
        &[
            "2,1,1,1,1,1,1,1,1",
            "2,2,1,1,1,1,1,1",
            "3,2,2,1,1,1",
            "3,3,2,1,1",
            "5,3,2",
            "6,3,1",
            "8,2",
            "9,1",
        ],
    ),
];

/// Path counts for every triangular partition of size 1..=9.
const TABLE_2: [(&str, u64); 53] = [
    ("1", 2),
    ("1,1", 3),
    ("2", 3),
    ("1,1,1", 4),
    ("2,1", 5),
    ("3", 4),
    ("1,1,1,1", 5),
    ("2,1,1", 7),
    ("3,1", 7),
    ("4", 5),
    ("1,1,1,1,1", 6),
    ("2,1,1,1", 9),
    ("2,2,1", 9),
    ("3,2", 9),
    ("4,1", 9),
    ("5", 6),
    ("1,1,1,1,1,1", 7),
    ("2,1,1,1,1", 11),
    ("2,2,1,1", 12),
    ("3,2,1", 14),
    ("4,2", 12),
    ("5,1", 11),
    ("6", 7),
    ("1,1,1,1,1,1,1", 8),
    ("2,1,1,1,1,1", 13),
    ("2,2,1,1,1", 15),
    ("3,2,1,1", 19),
    ("4,2,1", 19),
    ("5,2", 15),
    ("6,1", 13),
    ("7", 8),
    ("1,1,1,1,1,1,1,1", 9),
    ("2,1,1,1,1,1,1", 15),
    ("2,2,1,1,1,1", 18),
    ("2,2,2,1,1", 18),
    ("3,2,2,1", 23),
    ("4,3,1", 23),
    ("5,3", 18),
    ("6,2", 18),
    ("7,1", 15),
    ("8", 9),
    ("1,1,1,1,1,1,1,1,1", 10),
    ("2,1,1,1,1,1,1,1", 17),
    ("2,2,1,1,1,1,1", 21),
    ("2,2,2,1,1,1", 22),
    ("3,2,2,1,1", 30),
    ("3,3,2,1", 28),
    ("4,3,2", 28),
    ("5,3,1", 30),
    ("6,3", 22),
    ("7,2", 21),
    ("8,1", 17),
    ("9", 10),
];

/// Area polynomials, coefficients in increasing degree.
const Q_POLYS: [(&str, &[i64]); 13] = [
    ("1", &[1, 1]),
    ("2", &[1, 1, 1]),
    ("2,1", &[1, 2, 1, 1]),
    ("3", &[1, 1, 1, 1]),
    ("3,1", &[1, 2, 2, 1, 1]),
    ("4", &[1, 1, 1, 1, 1]),
    ("3,2", &[1, 2, 2, 2, 1, 1]),
    ("4,1", &[1, 2, 2, 2, 1, 1]),
    ("5", &[1, 1, 1, 1, 1, 1]),
    ("3,2,1", &[1, 3, 3, 3, 2, 1, 1]),
    ("4,2", &[1, 2, 3, 2, 2, 1, 1]),
    ("5,1", &[1, 2, 2, 2, 2, 1, 1]),
    ("6", &[1, 1, 1, 1, 1, 1, 1]),
];

/// Two-row Schur expansions for sizes 0..=8, one entry per conjugate
/// pair; all coefficients are 1 in this range. Shapes are (a, b).
const TABLE_4: [(&str, &[(u32, u32)]); 23] = [
    ("-", &[(0, 0)]),
    ("1", &[(1, 0)]),
    ("2", &[(2, 0)]),
    ("2,1", &[(1, 1), (3, 0)]),
    ("3", &[(3, 0)]),
    ("3,1", &[(2, 1), (4, 0)]),
    ("4", &[(4, 0)]),
    ("3,2", &[(3, 1), (5, 0)]),
    ("4,1", &[(3, 1), (5, 0)]),
    ("5", &[(5, 0)]),
    ("3,2,1", &[(3, 1), (4, 1), (6, 0)]),
    ("4,2", &[(2, 2), (4, 1), (6, 0)]),
    ("5,1", &[(4, 1), (6, 0)]),
    ("6", &[(6, 0)]),
    ("4,2,1", &[(3, 2), (4, 1), (5, 1), (7, 0)]),
    ("5,2", &[(3, 2), (5, 1), (7, 0)]),
    ("6,1", &[(5, 1), (7, 0)]),
    ("7", &[(7, 0)]),
    ("4,3,1", &[(4, 2), (5, 1), (6, 1), (8, 0)]),
    ("5,3", &[(4, 2), (6, 1), (8, 0)]),
    ("6,2", &[(4, 2), (6, 1), (8, 0)]),
    ("7,1", &[(6, 1), (8, 0)]),
    ("8", &[(8, 0)]),
];

/// Schur expansions of nine larger enumerators; shapes as part strings.
const SCHUR_FIXTURES: [(&str, &[(&str, i64)]); 9] = [
    ("3,2,1", &[("1,1,1", 1), ("3,1", 1), ("4,1", 1), ("6", 1)]),
    (
        "4,2,1",
        &[("2,1,1", 1), ("3,2", 1), ("4,1", 1), ("5,1", 1), ("7", 1)],
    ),
    (
        "4,3,1",
        &[("3,1,1", 1), ("4,2", 1), ("5,1", 1), ("6,1", 1), ("8", 1)],
    ),
    (
        "4,3,2",
        &[
            ("4,1,1", 1),
            ("3,3", 1),
            ("5,2", 1),
            ("6,1", 1),
            ("7,1", 1),
            ("9", 1),
        ],
    ),
    (
        "5,3,1",
        &[
            ("2,2,1", 1),
            ("4,1,1", 1),
            ("4,2", 1),
            ("5,2", 1),
            ("6,1", 1),
            ("7,1", 1),
            ("9", 1),
        ],
    ),
    (
        "5,3,2",
        &[
            ("3,1,1", 1),
            ("5,2,1", 1),
            ("4,3", 1),
            ("5,2", 1),
            ("6,2", 1),
            ("7,1", 1),
            ("8,1", 1),
            ("10", 1),
        ],
    ),
    (
        "6,3,1",
        &[
            ("3,1,1", 1),
            ("5,2,1", 1),
            ("4,3", 1),
            ("5,2", 1),
            ("6,2", 1),
            ("7,1", 1),
            ("8,1", 1),
            ("10", 1),
        ],
    ),
    (
        "4,3,2,1",
        &[
            ("1,1,1,1", 1),
            ("3,1,1", 1),
            ("4,1,1", 1),
            ("5,1,1", 1),
            ("4,2", 1),
            ("4,3", 1),
            ("6,1", 1),
            ("6,2", 1),
            ("7,1", 1),
            ("8,1", 1),
            ("10", 1),
        ],
    ),
    (
        "5,4,3,2,1",
        &[
            ("1,1,1,1,1", 1),
            ("3,1,1,1", 1),
            ("4,1,1,1", 1),
            ("5,1,1,1", 1),
            ("6,1,1,1", 1),
            ("6,1,1", 1),
            ("7,1,1", 1),
            ("8,1,1", 2),
            ("9,1,1", 1),
            ("10,1,1", 1),
            ("4,2,1", 1),
            ("5,2,1", 1),
            ("6,2,1", 1),
            ("7,2,1", 1),
            ("8,2,1", 1),
            ("4,3,1", 1),
            ("5,3,1", 1),
            ("6,3,1", 1),
            ("4,4,1", 1),
            ("4,4", 1),
            ("6,4", 1),
            ("7,4", 1),
            ("6,3", 1),
            ("7,3", 1),
            ("8,3", 1),
            ("9,3", 1),
            ("7,2", 1),
            ("8,2", 1),
            ("9,2", 1),
            ("10,2", 1),
            ("10,1", 1),
            ("11,1", 1),
            ("11,2", 1),
            ("12,1", 1),
            ("13,1", 1),
            ("15", 1),
        ],
    ),
];

/// The four known hook-coefficient discrepancies between the embedded
/// expansions and the product formula: the expansions of 5,3,2 and
/// 6,3,1 carry the hook (2|2) where the formula (supported by the
/// skewing identity and the two-row cross-check) puts (4|2).
const EXPECTED_HOOK_DISCREPANCIES: [(&str, u32, u32, i64, i64); 4] = [
    ("5,3,2", 2, 2, 1, 0),
    ("5,3,2", 4, 2, 0, 1),
    ("6,3,1", 2, 2, 1, 0),
    ("6,3,1", 4, 2, 0, 1),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_fixture_partitions_parse() {
        for level in TABLE_1 {
            for s in level {
                pt(s);
            }
        }
        for (s, _) in TABLE_2 {
            pt(s);
        }
        for (s, fixture) in SCHUR_FIXTURES {
            let tau = pt(s);
            assert!(is_triangular(&tau));
            for (shape, coeff) in fixture.iter() {
                pt(shape);
                assert!(*coeff > 0);
            }
        }
    }

    #[test]
    fn test_fixture_sizes_consistent() {
        for (n, level) in TABLE_1.iter().enumerate() {
            for s in *level {
                assert_eq!(pt(s).size(), n as u64);
            }
        }
        for (n, list) in NON_INTEGRAL {
            for s in list {
                assert_eq!(pt(s).size(), n as u64);
            }
        }
    }

    #[test]
    fn test_as_hook() {
        assert_eq!(as_hook(&[6]), Some((5, 0)));
        assert_eq!(as_hook(&[3, 1, 1]), Some((2, 2)));
        assert_eq!(as_hook(&[1, 1, 1]), Some((0, 2)));
        assert_eq!(as_hook(&[4, 3]), None);
        assert_eq!(as_hook(&[5, 2, 1]), None);
        assert_eq!(as_hook(&[]), None);
    }

    #[test]
    fn test_positive_lattice_points() {
        assert_eq!(positive_lattice_points((3, 1), (1, 4)), Some(2));
        assert_eq!(positive_lattice_points((3, 1), (1, 3)), Some(3));
        assert_eq!(positive_lattice_points((2, 2), (2, 5)), None);
    }

    #[test]
    fn test_exit_codes() {
        let clean = CriterionResult {
            number: 1,
            name: "x",
            cases: 1,
            elapsed_ms: 0,
            errors: vec![],
            findings: vec![],
            details: String::new(),
        };
        let mut discrepancy = clean.clone();
        discrepancy.findings.push(Finding {
            operation: "op".into(),
            input: "i".into(),
            expected: "e".into(),
            actual: "a".into(),
            classification: Classification::PaperDiscrepancy,
        });
        let mut fallen = clean.clone();
        fallen.findings.push(Finding {
            classification: Classification::ConjectureCounterexample,
            ..discrepancy.findings[0].clone()
        });
        let mut broken = clean.clone();
        broken.errors.push("boom".into());
        assert_eq!(exit_code(std::slice::from_ref(&clean)), 0);
        assert_eq!(exit_code(std::slice::from_ref(&discrepancy)), 0);
        assert!(discrepancy.passed());
        assert_eq!(exit_code(std::slice::from_ref(&fallen)), 3);
        assert!(!fallen.passed());
        assert_eq!(exit_code(&[clean, fallen, broken]), 2);
    }

    #[test]
    fn test_suite_layout() {
        let mut all: Vec<u32> = SUITES
            .iter()
            .flat_map(|(_, cs)| cs.iter().copied())
            .collect();
        all.sort_unstable();
        assert_eq!(all, (1..=15).collect::<Vec<_>>());
        assert_eq!(suite_criteria("all").unwrap().len(), 15);
        assert!(suite_criteria("nonsense").is_none());
    }
}
