//! Counting and enumerating nowhere-zero Z_q-flows: a flow assigns a
//! residue to every facet so that the boundary matrix maps it to zero
//! mod q; nowhere-zero means every residue is nonzero.
//!
//! Three independent routes are implemented: direct enumeration (the
//! ground truth), inclusion-exclusion over facet subsets with kernel
//! counts from the Smith normal form (exact for every modulus), and
//! the signed Tutte-polynomial evaluation (certified at primes above
//! the subdeterminant bound).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::boundary::boundary_matrix;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology;
use crate::linalg::{self, ExactMatrix};
use crate::matroid::{ColumnMatroid, DEFAULT_GROUND_LIMIT};
use crate::poly::IntPolynomial;

/// Caps on the search effort. `work_limit` bounds the number of states
/// any single scan may visit (candidate vectors, kernel cosets, or
/// facet subsets); exceeding it is a hard error, never a truncation.
#[derive(Debug, Clone)]
pub struct Limits {
    pub work_limit: u64,
    pub threads: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { work_limit: 1 << 24, threads: 1 }
    }
}

/// Counting route, as reported by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "ie")]
    InclusionExclusion,
    #[serde(rename = "tutte")]
    Tutte,
}

/// A flow count for one modulus, tagged with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowCount {
    pub q: u64,
    pub count: BigInt,
    pub method: Method,
}

/// Residue assignment to the facets, in facet-label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowVector {
    pub q: u64,
    pub values: Vec<u64>,
}

impl FlowVector {
    pub fn csv(&self) -> String {
        self.values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Outcome of verifying a candidate flow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowReport {
    pub valid: bool,
    /// Facet labels whose residue is zero mod q.
    pub zero_entries: Vec<String>,
    /// Ridge labels whose boundary sum is nonzero mod q.
    pub unbalanced_ridges: Vec<String>,
}

/// Checks that `values` (one residue per facet, label order) is a
/// nowhere-zero flow mod q, reporting every violation.
pub fn verify_flow(c: &SimplicialComplex, q: u64, values: &[u64]) -> Result<FlowReport> {
    assert!(q >= 2, "modulus must be at least 2");
    let bm = boundary_matrix(c);
    if values.len() != bm.n_cols() {
        return Err(Error::IndexMismatch { expected: bm.n_cols(), got: values.len() });
    }
    let mut zero_entries = Vec::new();
    for (j, &v) in values.iter().enumerate() {
        if v % q == 0 {
            zero_entries.push(bm.col_labels()[j].label());
        }
    }
    let mut unbalanced_ridges = Vec::new();
    for i in 0..bm.n_rows() {
        let mut sum: i128 = 0;
        for (j, &v) in values.iter().enumerate() {
            sum += bm.entry(i, j) as i128 * (v % q) as i128;
        }
        if sum.rem_euclid(q as i128) != 0 {
            unbalanced_ridges.push(bm.row_labels()[i].label());
        }
    }
    Ok(FlowReport {
        valid: zero_entries.is_empty() && unbalanced_ridges.is_empty(),
        zero_entries,
        unbalanced_ridges,
    })
}

fn pow_u128(q: u64, n: usize) -> Option<u128> {
    u32::try_from(n).ok().and_then(|n| (q as u128).checked_pow(n))
}

fn boundary_exact(c: &SimplicialComplex) -> ExactMatrix {
    ExactMatrix::from_i64_rows(&boundary_matrix(c).row_vectors())
}

// ---------------------------------------------------------------------------
// Direct enumeration.

/// Counts nowhere-zero flows by exhaustive enumeration. When the full
/// residue space fits the work limit, every vector with nonzero
/// entries is scanned; otherwise the kernel subgroup mod q (from the
/// Smith normal form with its column transform) is enumerated and
/// filtered, which is exact for composite moduli too.
pub fn brute_force_count(c: &SimplicialComplex, q: u64, limits: &Limits) -> Result<FlowCount> {
    assert!(q >= 2, "modulus must be at least 2");
    let rows = boundary_matrix(c).row_vectors();
    let n = c.facets().len();
    let count = if pow_u128(q, n).is_some_and(|t| t <= limits.work_limit as u128) {
        BigInt::from(full_scan_count(&rows, n, q, limits.threads))
    } else {
        let mut count = 0u64;
        kernel_subgroup_scan(&boundary_exact(c), n, q, limits.work_limit, |x| {
            if x.iter().all(|&v| v != 0) {
                count += 1;
            }
        })?;
        BigInt::from(count)
    };
    Ok(FlowCount { q, count, method: Method::Brute })
}

/// All nowhere-zero flows, lexicographically ordered by residue vector.
pub fn enumerate_flows(
    c: &SimplicialComplex,
    q: u64,
    limits: &Limits,
) -> Result<Vec<FlowVector>> {
    assert!(q >= 2, "modulus must be at least 2");
    let rows = boundary_matrix(c).row_vectors();
    let n = c.facets().len();
    let mut out: Vec<Vec<u64>> = Vec::new();
    if pow_u128(q, n).is_some_and(|t| t <= limits.work_limit as u128) {
        scan_nonzero_vectors(&rows, n, q, 0, u64::MAX, &mut |x| out.push(x.to_vec()));
    } else {
        kernel_subgroup_scan(&boundary_exact(c), n, q, limits.work_limit, |x| {
            if x.iter().all(|&v| v != 0) {
                out.push(x.to_vec());
            }
        })?;
        out.sort();
    }
    Ok(out.into_iter().map(|values| FlowVector { q, values }).collect())
}

/// All Z_q-flows (zero entries allowed), lexicographically ordered:
/// the kernel of the boundary matrix mod q as an explicit list.
pub fn enumerate_kernel(
    c: &SimplicialComplex,
    q: u64,
    limits: &Limits,
) -> Result<Vec<Vec<u64>>> {
    assert!(q >= 2, "modulus must be at least 2");
    let n = c.facets().len();
    let mut out = Vec::new();
    kernel_subgroup_scan(&boundary_exact(c), n, q, limits.work_limit, |x| {
        out.push(x.to_vec());
    })?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Odometer over nonzero residue vectors with a mod-q row check;
/// only vectors whose leading digit lies in [lo, hi] are visited.
fn scan_nonzero_vectors(
    rows: &[Vec<i64>],
    n: usize,
    q: u64,
    lo: u64,
    hi: u64,
    visit: &mut impl FnMut(&[u64]),
) {
    let lo = lo.max(1);
    let hi = hi.min(q - 1);
    if n == 0 {
        // The empty vector is vacuously nowhere-zero; it is a flow.
        visit(&[]);
        return;
    }
    if lo > hi {
        return;
    }
    let mut x = vec![1u64; n];
    x[0] = lo;
    loop {
        let ok = rows.iter().all(|row| {
            let s: i128 = row.iter().zip(&x).map(|(&a, &b)| a as i128 * b as i128).sum();
            s.rem_euclid(q as i128) == 0
        });
        if ok {
            visit(&x);
        }
        // Increment, last digit fastest, digits range over 1..=q-1.
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            let cap = if pos == 0 { hi } else { q - 1 };
            if x[pos] < cap {
                x[pos] += 1;
                break;
            }
            x[pos] = 1;
            if pos == 0 {
                return;
            }
        }
    }
}

fn full_scan_count(rows: &[Vec<i64>], n: usize, q: u64, threads: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let threads = threads.max(1).min((q - 1) as usize).max(1);
    if threads == 1 {
        let mut count = 0u64;
        scan_nonzero_vectors(rows, n, q, 1, q - 1, &mut |_| count += 1);
        return count;
    }
    // Partition the leading digit range; partial counts add up.
    let mut totals = vec![0u64; threads];
    std::thread::scope(|scope| {
        for (t, slot) in totals.iter_mut().enumerate() {
            let rows = &rows;
            scope.spawn(move || {
                let span = (q - 1) as usize;
                let per = span.div_ceil(threads);
                let lo = 1 + (t * per) as u64;
                let hi = ((t + 1) * per).min(span) as u64;
                let mut count = 0u64;
                if lo <= hi {
                    scan_nonzero_vectors(rows, n, q, lo, hi, &mut |_| count += 1);
                }
                *slot = count;
            });
        }
    });
    totals.iter().sum()
}

/// Enumerates the solution subgroup of `m x = 0 mod q` through the
/// Smith normal form: with invariant factors d_i and column transform
/// V, solutions are exactly `V z mod q` where `z_i` runs over the
/// gcd(d_i, q) multiples of q/gcd(d_i, q) and freely past the rank.
fn kernel_subgroup_scan(
    m: &ExactMatrix,
    n: usize,
    q: u64,
    work_limit: u64,
    mut visit: impl FnMut(&[u64]),
) -> Result<()> {
    let (snf, v) = linalg::smith_with_kernel_transform(m);
    let r = snf.diagonal.len();
    let qq = BigInt::from(q);
    let mut radices: Vec<u64> = snf
        .diagonal
        .iter()
        .map(|d| d.gcd(&qq).to_u64().expect("gcd divides the u64 modulus"))
        .collect();
    radices.extend(std::iter::repeat(q).take(n - r));
    let total: u128 = radices.iter().map(|&g| g as u128).product();
    if total > work_limit as u128 {
        return Err(Error::WorkLimitExceeded { needed: total, limit: work_limit });
    }
    // V reduced mod q, row-major.
    let vmod: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| v.get(i, j).mod_floor(&qq).to_u64().expect("residue fits"))
                .collect()
        })
        .collect();
    let mut digits = vec![0u64; n];
    let mut x = vec![0u64; n];
    loop {
        for (i, xi) in x.iter_mut().enumerate() {
            let mut acc: u128 = 0;
            for (k, &d) in digits.iter().enumerate() {
                let z = if k < r { d * (q / radices[k]) } else { d };
                acc += vmod[i][k] as u128 * z as u128;
            }
            *xi = (acc % q as u128) as u64;
        }
        visit(&x);
        // Odometer over the radices.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = 0;
            if pos == 0 {
                return Ok(());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion.

/// Per-subset kernel data for the inclusion-exclusion count. Building
/// the oracle performs one Smith reduction per facet subset; evaluating
/// it at any modulus is then cheap, so one oracle serves a whole
/// sampling sweep.
pub struct IeOracle {
    n_cols: usize,
    profiles: Vec<SubsetProfile>,
}

struct SubsetProfile {
    size: u8,
    rank: u8,
    /// Invariant factors greater than one; almost always empty.
    torsion: Vec<BigInt>,
}

impl IeOracle {
    pub fn new(c: &SimplicialComplex, limits: &Limits) -> Result<IeOracle> {
        Self::from_rows(&boundary_matrix(c).row_vectors(), c.facets().len(), limits)
    }

    /// Oracle for an arbitrary integer matrix given by rows.
    pub fn from_rows(rows: &[Vec<i64>], n_cols: usize, limits: &Limits) -> Result<IeOracle> {
        let total = pow_u128(2, n_cols)
            .filter(|&t| t <= limits.work_limit as u128)
            .ok_or(Error::WorkLimitExceeded {
                needed: pow_u128(2, n_cols).unwrap_or(u128::MAX),
                limit: limits.work_limit,
            })?;
        let mut profiles = Vec::with_capacity(total as usize);
        let mut cols = Vec::with_capacity(n_cols);
        for mask in 0u64..total as u64 {
            cols.clear();
            cols.extend((0..n_cols).filter(|&j| mask & (1 << j) != 0));
            let diag = linalg::smith_diagonal_from_rows(rows, &cols);
            profiles.push(SubsetProfile {
                size: cols.len() as u8,
                rank: diag.len() as u8,
                torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
            });
        }
        Ok(IeOracle { n_cols, profiles })
    }

    /// Number of nowhere-zero flows mod q, by alternating over facet
    /// subsets: vectors supported inside S and lying in the kernel are
    /// counted by the subset's Smith data, and inclusion-exclusion
    /// sieves out the ones with empty coordinates.
    pub fn count(&self, q: u64) -> BigInt {
        assert!(q >= 2, "modulus must be at least 2");
        let qq = BigInt::from(q);
        let mut powers = Vec::with_capacity(self.n_cols + 1);
        let mut p = BigInt::one();
        for _ in 0..=self.n_cols {
            powers.push(p.clone());
            p *= &qq;
        }
        let mut acc = BigInt::zero();
        for profile in &self.profiles {
            let mut term = powers[(profile.size - profile.rank) as usize].clone();
            for d in &profile.torsion {
                term *= d.gcd(&qq);
            }
            if (self.n_cols - profile.size as usize) % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        debug_assert!(!acc.is_negative());
        acc
    }
}

/// Inclusion-exclusion count for a single modulus; exact for every q,
/// prime or composite.
pub fn inclusion_exclusion_count(
    c: &SimplicialComplex,
    q: u64,
    limits: &Limits,
) -> Result<FlowCount> {
    let oracle = IeOracle::new(c, limits)?;
    Ok(FlowCount { q, count: oracle.count(q), method: Method::InclusionExclusion })
}

// ---------------------------------------------------------------------------
// The flow polynomial via the Tutte polynomial.

/// The flow-counting polynomial `(-1)^(|E|-r) T(0, 1-q)` together with
/// the prime threshold above which it is certified to equal the true
/// count.
#[derive(Debug, Clone)]
pub struct FlowPolynomial {
    pub poly: IntPolynomial,
    /// Primes strictly above this bound see the same column matroid as
    /// the rationals, so the polynomial counts exactly there.
    pub safe_prime_threshold: BigInt,
    pub n_elements: usize,
    pub rank: usize,
}

impl FlowPolynomial {
    pub fn evaluate(&self, q: u64) -> BigInt {
        self.poly.evaluate(&BigInt::from(q))
    }

    pub fn certified_at(&self, q: u64) -> bool {
        linalg::is_prime(q) && BigInt::from(q) > self.safe_prime_threshold
    }
}

pub fn flow_polynomial(c: &SimplicialComplex) -> Result<FlowPolynomial> {
    flow_polynomial_with_limit(c, DEFAULT_GROUND_LIMIT)
}

pub fn flow_polynomial_with_limit(
    c: &SimplicialComplex,
    ground_limit: usize,
) -> Result<FlowPolynomial> {
    let m = boundary_exact(c);
    let matroid = ColumnMatroid::new(m.clone(), c.facet_labels())?;
    let tutte = matroid.tutte_with_limit(ground_limit)?;
    let n = matroid.n_elements();
    let r = matroid.rank();
    // Substitute x = 0, y = 1 - q and apply the sign making the value
    // a count: only pure-y monomials survive at x = 0.
    let one_minus_q = IntPolynomial::from_i64(&[1, -1]);
    let mut poly = IntPolynomial::zero();
    for (x_deg, y_deg, coeff) in tutte.records() {
        if x_deg != 0 {
            continue;
        }
        poly = poly.add(&one_minus_q.pow(y_deg).scale(&coeff));
    }
    if (n - r) % 2 == 1 {
        poly = poly.scale(&BigInt::from(-1));
    }
    Ok(FlowPolynomial {
        poly,
        safe_prime_threshold: linalg::hadamard_bound(&m),
        n_elements: n,
        rank: r,
    })
}

/// Flow count by evaluating the flow polynomial; certified only at
/// primes above the polynomial's threshold.
pub fn tutte_count(c: &SimplicialComplex, q: u64, ground_limit: usize) -> Result<FlowCount> {
    let fp = flow_polynomial_with_limit(c, ground_limit)?;
    Ok(FlowCount { q, count: fp.evaluate(q), method: Method::Tutte })
}

// ---------------------------------------------------------------------------
// Degree check and the all-methods comparison.

/// Degree of the flow polynomial against the top Betti number. The
/// zero polynomial pairs with Betti number zero by convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub poly_degree: Option<usize>,
    pub betti_top: usize,
    pub equal: bool,
}

pub fn degree_check(c: &SimplicialComplex, ground_limit: usize) -> Result<DegreeCheck> {
    let fp = flow_polynomial_with_limit(c, ground_limit)?;
    let betti = homology::betti_top(c);
    let equal = match fp.poly.degree() {
        None => betti == 0,
        Some(d) => d == betti,
    };
    Ok(DegreeCheck { poly_degree: fp.poly.degree(), betti_top: betti, equal })
}

/// One method's result in an all-methods run. `certified` marks counts
/// that are exact for this modulus; only those enter the agreement gate.
#[derive(Debug, Clone)]
pub struct MethodCount {
    pub method: Method,
    pub count: BigInt,
    pub certified: bool,
}

/// Runs every applicable counting method. Methods whose work limits
/// are exceeded are skipped; the Tutte evaluation always reports but is
/// certified only at primes above the subdeterminant bound. An error is
/// returned if certified methods disagree, or nothing could run.
pub fn count_all_methods(
    c: &SimplicialComplex,
    q: u64,
    limits: &Limits,
    ground_limit: usize,
) -> Result<Vec<MethodCount>> {
    let mut out = Vec::new();
    match brute_force_count(c, q, limits) {
        Ok(fc) => out.push(MethodCount { method: Method::Brute, count: fc.count, certified: true }),
        Err(Error::WorkLimitExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    match inclusion_exclusion_count(c, q, limits) {
        Ok(fc) => out.push(MethodCount {
            method: Method::InclusionExclusion,
            count: fc.count,
            certified: true,
        }),
        Err(Error::WorkLimitExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    match flow_polynomial_with_limit(c, ground_limit) {
        Ok(fp) => out.push(MethodCount {
            method: Method::Tutte,
            count: fp.evaluate(q),
            certified: fp.certified_at(q),
        }),
        Err(Error::GroundSetTooLarge { .. }) => {}
        Err(e) => return Err(e),
    }
    if out.is_empty() {
        return Err(Error::WorkLimitExceeded { needed: u128::MAX, limit: limits.work_limit });
    }
    let certified: Vec<&MethodCount> = out.iter().filter(|m| m.certified).collect();
    if let Some(first) = certified.first() {
        if certified.iter().any(|m| m.count != first.count) {
            let detail = certified
                .iter()
                .map(|m| format!("{:?}={}", m.method, m.count))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::MethodDisagreement(format!("q={q}: {detail}")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = "1 2 4\n1 3 4\n2 3 4\n1 2 3\n";
    const BIPYRAMID: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

    fn parse(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    #[test]
    fn verify_paper_flows() {
        let tetra = parse(TETRA);
        for q in 2u64..=9 {
            let v = vec![1, q - 1, 1, q - 1]; // facets 123, 124, 134, 234
            let rep = verify_flow(&tetra, q, &v).unwrap();
            assert!(rep.valid, "q={q}: {rep:?}");
        }
        let bi = parse(BIPYRAMID);
        let rep = verify_flow(&bi, 5, &[1, 4, 1, 1, 3, 2, 3]).unwrap();
        assert!(rep.valid);
    }

    #[test]
    fn verify_rejects_zero_vector() {
        let tetra = parse(TETRA);
        let rep = verify_flow(&tetra, 3, &[0, 0, 0, 0]).unwrap();
        assert!(!rep.valid);
        assert_eq!(rep.zero_entries.len(), 4);
        assert!(rep.unbalanced_ridges.is_empty());
        assert!(matches!(
            verify_flow(&tetra, 3, &[1, 2]),
            Err(Error::IndexMismatch { expected: 4, got: 2 })
        ));
    }

    #[test]
    fn verify_reports_unbalanced_ridges() {
        let tetra = parse(TETRA);
        let rep = verify_flow(&tetra, 5, &[1, 1, 1, 1]).unwrap();
        assert!(!rep.valid);
        assert!(rep.zero_entries.is_empty());
        assert!(!rep.unbalanced_ridges.is_empty());
    }

    #[test]
    fn brute_force_examples() {
        let limits = Limits::default();
        assert_eq!(
            brute_force_count(&parse(BIPYRAMID), 3, &limits).unwrap().count,
            BigInt::from(2)
        );
        assert_eq!(brute_force_count(&parse(TETRA), 2, &limits).unwrap().count, BigInt::from(1));
        assert_eq!(brute_force_count(&parse(TETRA), 5, &limits).unwrap().count, BigInt::from(4));
        for q in 2u64..=6 {
            assert_eq!(
                brute_force_count(&parse("0 1 2"), q, &limits).unwrap().count,
                BigInt::zero(),
                "q={q}"
            );
        }
    }

    #[test]
    fn kernel_path_matches_full_scan() {
        // Force the subgroup path with a tiny work limit and compare
        // against the unrestricted scan.
        let full = Limits::default();
        for text in [TETRA, BIPYRAMID] {
            let c = parse(text);
            for q in [2u64, 3, 4, 5, 6, 7] {
                let a = brute_force_count(&c, q, &full).unwrap().count;
                let tight = Limits { work_limit: 4000, ..Limits::default() };
                let b = brute_force_count(&c, q, &tight).unwrap().count;
                assert_eq!(a, b, "{text} q={q}");
            }
        }
    }

    #[test]
    fn work_limit_is_a_hard_error() {
        let c = parse(BIPYRAMID);
        // Subgroup at q=5 has 25 cosets; a limit of 10 must refuse.
        let limits = Limits { work_limit: 10, ..Limits::default() };
        assert!(matches!(
            brute_force_count(&c, 5, &limits),
            Err(Error::WorkLimitExceeded { .. })
        ));
    }

    #[test]
    fn threaded_scan_agrees() {
        let c = parse(BIPYRAMID);
        for q in [3u64, 5, 7] {
            let single = Limits { threads: 1, ..Limits::default() };
            let multi = Limits { threads: 4, ..Limits::default() };
            assert_eq!(
                brute_force_count(&c, q, &single).unwrap().count,
                brute_force_count(&c, q, &multi).unwrap().count
            );
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let limits = Limits::default();
        assert_eq!(
            inclusion_exclusion_count(&parse(BIPYRAMID), 4, &limits).unwrap().count,
            BigInt::from(6)
        );
        // One zero column: the loop factor q - 1.
        for q in 2u64..=7 {
            let oracle = IeOracle::from_rows(&[vec![0i64]], 1, &limits).unwrap();
            assert_eq!(oracle.count(q), BigInt::from(q - 1));
        }
    }

    #[test]
    fn three_way_agreement_on_fixtures() {
        let limits = Limits::default();
        for text in [TETRA, BIPYRAMID, "0 1 2", "0 1\n1 2\n0 2"] {
            let c = parse(text);
            let fp = flow_polynomial(&c).unwrap();
            for q in 2u64..=7 {
                let brute = brute_force_count(&c, q, &limits).unwrap().count;
                let ie = inclusion_exclusion_count(&c, q, &limits).unwrap().count;
                assert_eq!(brute, ie, "{text} q={q}");
                if fp.certified_at(q) {
                    assert_eq!(fp.evaluate(q), brute, "{text} q={q} (tutte)");
                }
            }
        }
    }

    #[test]
    fn flow_polynomial_examples() {
        let bi = flow_polynomial(&parse(BIPYRAMID)).unwrap();
        assert_eq!(bi.poly, IntPolynomial::from_i64(&[2, -3, 1]));
        assert_eq!(bi.safe_prime_threshold, BigInt::from(16));

        let tetra = flow_polynomial(&parse(TETRA)).unwrap();
        assert_eq!(tetra.poly, IntPolynomial::from_i64(&[-1, 1]));

        let cone = flow_polynomial(&parse("0 1 2")).unwrap();
        assert!(cone.poly.is_zero());
    }

    #[test]
    fn degree_check_examples() {
        let d = degree_check(&parse(BIPYRAMID), 24).unwrap();
        assert_eq!((d.poly_degree, d.betti_top, d.equal), (Some(2), 2, true));
        let d = degree_check(&parse(TETRA), 24).unwrap();
        assert_eq!((d.poly_degree, d.betti_top, d.equal), (Some(1), 1, true));
        let d = degree_check(&parse("0 1 2"), 24).unwrap();
        assert_eq!((d.poly_degree, d.betti_top, d.equal), (None, 0, true));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let c = parse(BIPYRAMID);
        let limits = Limits::default();
        let flows = enumerate_flows(&c, 5, &limits).unwrap();
        assert_eq!(flows.len(), 12);
        for w in flows.windows(2) {
            assert!(w[0].values < w[1].values);
        }
        for f in &flows {
            assert!(verify_flow(&c, 5, &f.values).unwrap().valid);
        }
        // Kernel-path enumeration agrees with the scan.
        let tight = Limits { work_limit: 4000, ..Limits::default() };
        assert_eq!(enumerate_flows(&c, 5, &tight).unwrap(), flows);
    }

    #[test]
    fn scaling_and_negation_closure() {
        let c = parse(BIPYRAMID);
        let limits = Limits::default();
        for q in [5u64, 6, 7] {
            let flows = enumerate_flows(&c, q, &limits).unwrap();
            let set: std::collections::BTreeSet<Vec<u64>> =
                flows.iter().map(|f| f.values.clone()).collect();
            for f in &flows {
                let neg: Vec<u64> = f.values.iter().map(|&v| (q - v) % q).collect();
                assert!(set.contains(&neg), "negation closure q={q}");
                for u in 1..q {
                    if num_integer::gcd(u, q) == 1 {
                        let scaled: Vec<u64> =
                            f.values.iter().map(|&v| (v * u) % q).collect();
                        assert!(set.contains(&scaled), "scaling by {u} mod {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn cones_kill_flows() {
        let limits = Limits::default();
        for text in [TETRA, BIPYRAMID, "0 1\n1 2\n0 2"] {
            let coned = parse(text).cone();
            for q in 2u64..=5 {
                assert_eq!(
                    brute_force_count(&coned, q, &limits).unwrap().count,
                    BigInt::zero(),
                    "{text} q={q}"
                );
            }
        }
    }

    #[test]
    fn boundary_ridge_kills_flows() {
        // Any complex with a ridge in exactly one facet has no flows.
        let strip = parse("0 1 2\n1 2 3");
        let limits = Limits::default();
        for q in 2u64..=7 {
            assert_eq!(brute_force_count(&strip, q, &limits).unwrap().count, BigInt::zero());
        }
    }

    // Full-support kernel counts on raw matrices, for the
    // deletion-contraction recurrence of the counting function.
    fn full_support_count(m: &ExactMatrix, q: u64) -> u64 {
        let n = m.n_cols();
        let rows: Vec<Vec<i64>> = (0..m.n_rows())
            .map(|i| {
                (0..n)
                    .map(|j| m.get(i, j).to_i64().expect("small test entries"))
                    .collect()
            })
            .collect();
        let mut count = 0;
        scan_nonzero_vectors(&rows, n, q, 1, q - 1, &mut |_| count += 1);
        count
    }

    #[test]
    fn count_recursion_under_deletion_contraction() {
        // g(M) = g(M/e) - g(M-e) for e neither loop nor coloop, at a
        // prime above the subdeterminant bound.
        let c = parse(TETRA);
        let m = boundary_exact(&c);
        let matroid = ColumnMatroid::from_matrix(m.clone());
        let q = 7; // hadamard bound of the tetrahedron boundary is 6
        for e in 0..matroid.n_elements() {
            if matroid.is_loop(e).unwrap() || matroid.is_coloop(e).unwrap() {
                continue;
            }
            let g = full_support_count(&m, q);
            let g_del = full_support_count(matroid.delete(e).unwrap().matrix(), q);
            let g_con = full_support_count(matroid.contract(e).unwrap().matrix(), q);
            assert_eq!(g as i128, g_con as i128 - g_del as i128, "element {e}");
        }
    }

    #[test]
    fn loop_factor_multiplies_count() {
        // Appending a zero column multiplies the count by q - 1.
        let rows = vec![vec![1i64, -1, 0], vec![0, 1, 0]];
        let with_loop = ExactMatrix::from_i64_rows(&rows);
        let without = with_loop.column_submatrix(&[0, 1]);
        for q in 2u64..=7 {
            assert_eq!(
                full_support_count(&with_loop, q),
                (q - 1) * full_support_count(&without, q)
            );
        }
    }

    #[test]
    fn all_methods_agree_and_flag_certification() {
        let c = parse(BIPYRAMID);
        let limits = Limits::default();
        let res = count_all_methods(&c, 5, &limits, 24).unwrap();
        assert_eq!(res.len(), 3);
        assert!(res.iter().all(|m| m.count == BigInt::from(12)));
        // q = 5 is below the threshold 16, so the Tutte value is not
        // certified even though it happens to agree.
        let tutte = res.iter().find(|m| m.method == Method::Tutte).unwrap();
        assert!(!tutte.certified);
        let res = count_all_methods(&c, 17, &limits, 24).unwrap();
        let tutte = res.iter().find(|m| m.method == Method::Tutte).unwrap();
        assert!(tutte.certified);
        assert!(res.iter().all(|m| m.count == BigInt::from(16 * 15)));
    }
}
