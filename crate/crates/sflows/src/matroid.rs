//! The column matroid of an integer matrix: exact rank oracle,
//! deletion and contraction, and the Tutte polynomial with its
//! weighted (Tutte-Grothendieck) evaluations.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank_rational, rref, ExactMatrix};

/// Default cap on the ground-set size for deletion-contraction.
pub const DEFAULT_GROUND_LIMIT: usize = 24;

/// Integer-coefficient polynomial in two variables; the Tutte
/// polynomial carrier. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(x_deg: u32, y_deg: u32, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert((x_deg, y_deg), coeff);
        }
        BivariatePolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x_deg: u32, y_deg: u32) -> BigInt {
        self.coeffs.get(&(x_deg, y_deg)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (&k, v) in &other.coeffs {
            let e = out.entry(k).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                out.remove(&k);
            }
        }
        BivariatePolynomial { coeffs: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(ax, ay), av) in &self.coeffs {
            for (&(bx, by), bv) in &other.coeffs {
                let e = out.entry((ax + bx, ay + by)).or_insert_with(BigInt::zero);
                *e += av * bv;
            }
        }
        out.retain(|_, v| !v.is_zero());
        BivariatePolynomial { coeffs: out }
    }

    pub fn mul_monomial(&self, x_deg: u32, y_deg: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(x, y), v)| ((x + x_deg, y + y_deg), v.clone()))
            .collect();
        BivariatePolynomial { coeffs }
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(dx, dy), c) in &self.coeffs {
            let mut term = BigRational::from(c.clone());
            for _ in 0..dx {
                term *= x;
            }
            for _ in 0..dy {
                term *= y;
            }
            acc += term;
        }
        acc
    }

    /// Records `(x_deg, y_deg, coefficient)` sorted by total degree,
    /// then x-degree; the serialization order of the CLI.
    pub fn records(&self) -> Vec<(u32, u32, BigInt)> {
        let mut recs: Vec<(u32, u32, BigInt)> =
            self.coeffs.iter().map(|(&(x, y), c)| (x, y, c.clone())).collect();
        recs.sort_by_key(|&(x, y, _)| (x + y, x));
        recs
    }
}

/// Linear matroid realized by the columns of an integer matrix.
pub struct ColumnMatroid {
    labels: Vec<String>,
    matrix: ExactMatrix,
    rank_cache: Mutex<HashMap<u64, usize>>,
}

impl ColumnMatroid {
    /// Wraps a matrix as a matroid; one label per column.
    pub fn new(matrix: ExactMatrix, labels: Vec<String>) -> Result<Self> {
        if labels.len() != matrix.n_cols() {
            return Err(Error::LabelMismatch { expected: matrix.n_cols(), got: labels.len() });
        }
        Ok(ColumnMatroid { labels, matrix, rank_cache: Mutex::new(HashMap::new()) })
    }

    /// Matroid with synthetic labels `0..n`.
    pub fn from_matrix(matrix: ExactMatrix) -> Self {
        let labels = (0..matrix.n_cols()).map(|i| i.to_string()).collect();
        Self::new(matrix, labels).expect("labels match by construction")
    }

    pub fn n_elements(&self) -> usize {
        self.matrix.n_cols()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e < self.n_elements() {
            Ok(())
        } else {
            Err(Error::UnknownElement(e))
        }
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.rank_of_all(&(0..self.n_elements()).collect::<Vec<_>>())
    }

    fn rank_of_all(&self, elements: &[usize]) -> usize {
        if self.n_elements() <= 64 {
            let mask: u64 = elements.iter().fold(0, |m, &e| m | (1 << e));
            if let Some(&r) = self.rank_cache.lock().unwrap().get(&mask) {
                return r;
            }
            let r = rank_rational(&self.matrix.column_submatrix(elements));
            self.rank_cache.lock().unwrap().insert(mask, r);
            r
        } else {
            rank_rational(&self.matrix.column_submatrix(elements))
        }
    }

    /// Rank of a subset of elements.
    pub fn rank_of(&self, elements: &[usize]) -> Result<usize> {
        for &e in elements {
            self.check_element(e)?;
        }
        Ok(self.rank_of_all(elements))
    }

    /// A loop is a zero column.
    pub fn is_loop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        Ok((0..self.matrix.n_rows()).all(|i| self.matrix.get(i, e).is_zero()))
    }

    /// A coloop is an element whose removal drops the rank.
    pub fn is_coloop(&self, e: usize) -> Result<bool> {
        self.check_element(e)?;
        let rest: Vec<usize> = (0..self.n_elements()).filter(|&i| i != e).collect();
        Ok(self.rank_of_all(&rest) + 1 == self.rank())
    }

    /// The matroid with column `e` removed.
    pub fn delete(&self, e: usize) -> Result<ColumnMatroid> {
        self.check_element(e)?;
        let keep: Vec<usize> = (0..self.n_elements()).filter(|&i| i != e).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        ColumnMatroid::new(self.matrix.column_submatrix(&keep), labels)
    }

    /// The matroid contracted by a non-loop element: columns are
    /// projected to the quotient by column `e`.
    pub fn contract(&self, e: usize) -> Result<ColumnMatroid> {
        self.check_element(e)?;
        if self.is_loop(e)? {
            return Err(Error::LoopContraction(e));
        }
        let cols: Vec<Vec<BigInt>> = (0..self.n_elements())
            .map(|j| (0..self.matrix.n_rows()).map(|i| self.matrix.get(i, j).clone()).collect())
            .collect();
        let quotient = contract_columns(&cols, e);
        let n_rows = self.matrix.n_rows() - 1;
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); n_rows];
        for col in &quotient {
            for (i, v) in col.iter().enumerate() {
                rows[i].push(v.clone());
            }
        }
        if n_rows == 0 {
            // All columns become empty vectors: a matroid of loops.
            let m = ExactMatrix::zero(0, quotient.len());
            let labels: Vec<String> = (0..self.n_elements())
                .filter(|&i| i != e)
                .map(|i| self.labels[i].clone())
                .collect();
            return ColumnMatroid::new(m, labels);
        }
        let labels: Vec<String> = (0..self.n_elements())
            .filter(|&i| i != e)
            .map(|i| self.labels[i].clone())
            .collect();
        ColumnMatroid::new(ExactMatrix::from_bigint_rows(rows), labels)
    }

    /// The Tutte polynomial via deletion-contraction with loops and
    /// coloops factored eagerly and a memo keyed on the canonical
    /// echelon form of the remaining columns.
    pub fn tutte(&self) -> Result<BivariatePolynomial> {
        self.tutte_with_limit(DEFAULT_GROUND_LIMIT)
    }

    pub fn tutte_with_limit(&self, limit: usize) -> Result<BivariatePolynomial> {
        if self.n_elements() > limit {
            return Err(Error::GroundSetTooLarge { size: self.n_elements(), limit });
        }
        let cols: Vec<Vec<BigInt>> = (0..self.n_elements())
            .map(|j| {
                normalize_column(
                    (0..self.matrix.n_rows()).map(|i| self.matrix.get(i, j).clone()).collect(),
                )
            })
            .collect();
        let mut memo = HashMap::new();
        Ok(tutte_rec(cols, self.matrix.n_rows(), &mut memo))
    }

    /// The weighted deletion-contraction invariant: the unique function
    /// with single-coloop value `x`, single-loop value `y`, and
    /// recursion weights `sigma` (deletion) and `tau` (contraction),
    /// given by `sigma^(|E|-r) tau^r T(x/tau, y/sigma)`.
    pub fn tg_evaluate(
        &self,
        sigma: &BigRational,
        tau: &BigRational,
        x: &BigRational,
        y: &BigRational,
    ) -> Result<BigRational> {
        if sigma.is_zero() || tau.is_zero() {
            return Err(Error::ZeroSigmaTau);
        }
        let t = self.tutte()?;
        let r = self.rank();
        let n = self.n_elements();
        let value = t.evaluate(&(x / tau), &(y / sigma));
        let mut scale = BigRational::one();
        for _ in 0..(n - r) {
            scale *= sigma;
        }
        for _ in 0..r {
            scale *= tau;
        }
        Ok(scale * value)
    }
}

/// Projects every column except `e` to the quotient by column `e`,
/// scaling uniformly to stay over the integers: with pivot row `i`,
/// `c' = e_i * c - c_i * e`, then row `i` is dropped.
fn contract_columns(cols: &[Vec<BigInt>], e: usize) -> Vec<Vec<BigInt>> {
    let pivot_col = &cols[e];
    let pi = pivot_col
        .iter()
        .position(|v| !v.is_zero())
        .expect("contracted element is not a loop");
    let pv = &pivot_col[pi];
    let mut out = Vec::with_capacity(cols.len() - 1);
    for (j, col) in cols.iter().enumerate() {
        if j == e {
            continue;
        }
        let head = &col[pi];
        let mut new_col = Vec::with_capacity(col.len() - 1);
        for (i, v) in col.iter().enumerate() {
            if i == pi {
                continue;
            }
            new_col.push(pv * v - head * &pivot_col[i]);
        }
        out.push(normalize_column(new_col));
    }
    out
}

/// Divides by the content and makes the leading nonzero entry
/// positive; rescaling a column preserves the matroid.
fn normalize_column(mut col: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut g = BigInt::zero();
    for v in &col {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return col;
    }
    if col.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        g = -g;
    }
    for v in &mut col {
        *v = &*v / &g;
    }
    col
}

struct ColAnalysis {
    key: String,
    loops: Vec<usize>,
    coloops: Vec<usize>,
}

fn analyze(cols: &[Vec<BigInt>], n_rows: usize) -> ColAnalysis {
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::with_capacity(cols.len()); n_rows];
    for col in cols {
        for (i, v) in col.iter().enumerate() {
            rows[i].push(v.clone());
        }
    }
    let form = rref(&ExactMatrix::from_bigint_rows(rows));
    let mut key = format!("{}x{};", form.rows.len(), cols.len());
    for row in &form.rows {
        for v in row {
            key.push_str(&v.to_string());
            key.push(',');
        }
        key.push(';');
    }
    // Loops: columns that are zero in the echelon form (hence zero in
    // the original matrix). Coloops: pivot columns whose echelon row
    // vanishes on every free column, so no kernel vector touches them.
    let mut is_pivot = vec![false; cols.len()];
    for &pc in &form.pivot_cols {
        is_pivot[pc] = true;
    }
    let mut loops = Vec::new();
    for j in 0..cols.len() {
        if !is_pivot[j] && form.rows.iter().all(|r| r[j].is_zero()) {
            loops.push(j);
        }
    }
    let mut coloops = Vec::new();
    for (r, &pc) in form.pivot_cols.iter().enumerate() {
        let touches_free = (0..cols.len())
            .any(|j| !is_pivot[j] && !form.rows[r][j].is_zero());
        if !touches_free {
            coloops.push(pc);
        }
    }
    ColAnalysis { key, loops, coloops }
}

fn tutte_rec(
    cols: Vec<Vec<BigInt>>,
    n_rows: usize,
    memo: &mut HashMap<String, BivariatePolynomial>,
) -> BivariatePolynomial {
    if cols.is_empty() {
        return BivariatePolynomial::one();
    }
    let analysis = analyze(&cols, n_rows);
    if let Some(hit) = memo.get(&analysis.key) {
        return hit.clone();
    }
    let n_loops = analysis.loops.len() as u32;
    let n_coloops = analysis.coloops.len() as u32;
    let result = if (n_loops + n_coloops) as usize == cols.len() {
        BivariatePolynomial::monomial(n_coloops, n_loops, BigInt::one())
    } else if n_loops + n_coloops > 0 {
        let mut drop = vec![false; cols.len()];
        for &j in analysis.loops.iter().chain(&analysis.coloops) {
            drop[j] = true;
        }
        let rest: Vec<Vec<BigInt>> = cols
            .iter()
            .enumerate()
            .filter(|(j, _)| !drop[*j])
            .map(|(_, c)| c.clone())
            .collect();
        tutte_rec(rest, n_rows, memo).mul_monomial(n_coloops, n_loops)
    } else {
        // First element in ground order; it is neither loop nor coloop.
        let deleted: Vec<Vec<BigInt>> = cols[1..].to_vec();
        let contracted = contract_columns(&cols, 0);
        let t_del = tutte_rec(deleted, n_rows, memo);
        let t_con = tutte_rec(contracted, n_rows.saturating_sub(1), memo);
        t_del.add(&t_con)
    };
    memo.insert(analysis.key, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_matrix;
    use crate::complex::SimplicialComplex;
    use proptest::prelude::*;

    const TETRA: &str = "1 2 4\n1 3 4\n2 3 4\n1 2 3\n";
    const BIPYRAMID: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

    fn boundary_matroid(text: &str) -> ColumnMatroid {
        let c = SimplicialComplex::parse(text).unwrap();
        let bm = boundary_matrix(&c);
        let m = ExactMatrix::from_i64_rows(&bm.row_vectors());
        let labels = c.facet_labels();
        ColumnMatroid::new(m, labels).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    // Direct corank-nullity sum over all subsets; the brute oracle.
    fn tutte_subset_sum(m: &ColumnMatroid) -> BivariatePolynomial {
        let n = m.n_elements();
        assert!(n <= 12);
        let r_full = m.rank();
        let x_minus_1 = BivariatePolynomial::monomial(1, 0, BigInt::one())
            .add(&BivariatePolynomial::monomial(0, 0, BigInt::from(-1)));
        let y_minus_1 = BivariatePolynomial::monomial(0, 1, BigInt::one())
            .add(&BivariatePolynomial::monomial(0, 0, BigInt::from(-1)));
        let mut acc = BivariatePolynomial::zero();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let r_s = m.rank_of(&subset).unwrap();
            let mut term = BivariatePolynomial::one();
            for _ in 0..(r_full - r_s) {
                term = term.mul(&x_minus_1);
            }
            for _ in 0..(subset.len() - r_s) {
                term = term.mul(&y_minus_1);
            }
            acc = acc.add(&term);
        }
        acc
    }

    #[test]
    fn construction_and_rank() {
        let m = boundary_matroid(BIPYRAMID);
        assert_eq!(m.n_elements(), 7);
        assert_eq!(m.rank(), 5);
        let zero = ColumnMatroid::from_matrix(ExactMatrix::zero(2, 1));
        assert_eq!(zero.rank(), 0);
        assert!(zero.is_loop(0).unwrap());
        let id = ColumnMatroid::from_matrix(ExactMatrix::identity(2));
        assert_eq!(id.rank(), 2);
        assert!(id.is_coloop(0).unwrap());
        assert!(id.is_coloop(1).unwrap());
        assert!(matches!(
            ColumnMatroid::new(ExactMatrix::identity(2), vec!["a".into()]),
            Err(Error::LabelMismatch { .. })
        ));
    }

    #[test]
    fn tetrahedron_columns_neither_loop_nor_coloop() {
        let m = boundary_matroid(TETRA);
        for e in 0..4 {
            assert!(!m.is_loop(e).unwrap());
            assert!(!m.is_coloop(e).unwrap());
        }
        assert!(matches!(m.is_loop(4), Err(Error::UnknownElement(4))));
    }

    #[test]
    fn delete_preserves_subset_ranks() {
        let m = boundary_matroid(TETRA);
        let d = m.delete(3).unwrap();
        assert_eq!(d.n_elements(), 3);
        assert_eq!(d.rank(), 3);
        for mask in 0u32..8 {
            let subset: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            assert_eq!(d.rank_of(&subset).unwrap(), m.rank_of(&subset).unwrap());
        }
    }

    #[test]
    fn contract_rank_identity() {
        let m = boundary_matroid(BIPYRAMID);
        for e in 0..m.n_elements() {
            if m.is_loop(e).unwrap() {
                continue;
            }
            let c = m.contract(e).unwrap();
            assert_eq!(c.rank() + 1, m.rank(), "element {e}");
            // r_{M/e}(S) = r_M(S u {e}) - 1 spot check on singletons.
            for s in 0..c.n_elements() {
                let orig = if s < e { s } else { s + 1 };
                assert_eq!(
                    c.rank_of(&[s]).unwrap() + 1,
                    m.rank_of(&[orig, e]).unwrap(),
                    "contract {e}, subset {{{s}}}"
                );
            }
        }
    }

    #[test]
    fn contract_coloop_of_identity() {
        let id = ColumnMatroid::from_matrix(ExactMatrix::identity(2));
        let c = id.contract(0).unwrap();
        assert_eq!(c.n_elements(), 1);
        assert!(c.is_coloop(0).unwrap());
        let zero = ColumnMatroid::from_matrix(ExactMatrix::zero(2, 1));
        assert!(matches!(zero.contract(0), Err(Error::LoopContraction(0))));
    }

    #[test]
    fn tutte_base_cases() {
        let coloop = ColumnMatroid::from_matrix(ExactMatrix::identity(1));
        assert_eq!(coloop.tutte().unwrap(), BivariatePolynomial::monomial(1, 0, BigInt::one()));
        let lp = ColumnMatroid::from_matrix(ExactMatrix::zero(1, 1));
        assert_eq!(lp.tutte().unwrap(), BivariatePolynomial::monomial(0, 1, BigInt::one()));
        // Deleting the only element of a loop leaves the empty matroid.
        let empty = lp.delete(0).unwrap();
        assert_eq!(empty.tutte().unwrap(), BivariatePolynomial::one());
    }

    #[test]
    fn tutte_matches_subset_sum_on_fixtures() {
        for text in [TETRA, BIPYRAMID, "0 1 2", "0 1\n1 2\n0 2"] {
            let m = boundary_matroid(text);
            assert_eq!(m.tutte().unwrap(), tutte_subset_sum(&m), "{text}");
        }
    }

    #[test]
    fn bipyramid_signed_evaluation() {
        let m = boundary_matroid(BIPYRAMID);
        let t = m.tutte().unwrap();
        // T(0, 1-k) at k = 2..9 must match k^2 - 3k + 2.
        for k in 2i64..=9 {
            let v = t.evaluate(&rat(0), &rat(1 - k));
            assert_eq!(v, rat(k * k - 3 * k + 2));
        }
    }

    #[test]
    fn tg_evaluate_examples() {
        let m = boundary_matroid(BIPYRAMID);
        // sigma = tau = 1 is the plain Tutte evaluation.
        let t = m.tutte().unwrap();
        assert_eq!(
            m.tg_evaluate(&rat(1), &rat(1), &rat(2), &rat(2)).unwrap(),
            t.evaluate(&rat(2), &rat(2))
        );
        // Weighted evaluation at (0, q-1) counts nowhere-zero kernel
        // vectors at valid primes: (5-1)(5-2) = 12.
        assert_eq!(
            m.tg_evaluate(&rat(-1), &rat(1), &rat(0), &rat(4)).unwrap(),
            rat(12)
        );
        // A single coloop admits none.
        let coloop = ColumnMatroid::from_matrix(ExactMatrix::identity(1));
        assert_eq!(
            coloop.tg_evaluate(&rat(-1), &rat(1), &rat(0), &rat(4)).unwrap(),
            rat(0)
        );
        assert!(matches!(
            m.tg_evaluate(&rat(0), &rat(1), &rat(0), &rat(4)),
            Err(Error::ZeroSigmaTau)
        ));
    }

    #[test]
    fn tutte_independent_of_column_order() {
        let m = boundary_matroid(BIPYRAMID);
        let t = m.tutte().unwrap();
        for perm in [
            vec![6, 5, 4, 3, 2, 1, 0],
            vec![3, 1, 4, 0, 6, 2, 5],
            vec![2, 6, 0, 5, 1, 4, 3],
        ] {
            let shuffled = m.matrix().column_submatrix(&perm);
            let pm = ColumnMatroid::from_matrix(shuffled);
            assert_eq!(pm.tutte().unwrap(), t);
        }
    }

    #[test]
    fn ground_set_cap() {
        let m = ColumnMatroid::from_matrix(ExactMatrix::zero(1, 30));
        assert!(matches!(m.tutte(), Err(Error::GroundSetTooLarge { size: 30, limit: 24 })));
        assert!(m.tutte_with_limit(30).is_ok());
    }

    #[test]
    fn rank_monotone_and_submodular_spot_checks() {
        let m = boundary_matroid(BIPYRAMID);
        let n = m.n_elements();
        assert_eq!(m.rank_of(&[]).unwrap(), 0);
        for a in 0..n {
            for b in (a + 1)..n {
                let ra = m.rank_of(&[a]).unwrap();
                let rb = m.rank_of(&[b]).unwrap();
                let rab = m.rank_of(&[a, b]).unwrap();
                assert!(rab >= ra && rab >= rb);
                assert!(rab + 0 <= ra + rb); // submodularity with empty meet
            }
        }
    }

    #[test]
    fn records_are_sorted_by_total_then_x_degree() {
        let m = boundary_matroid(TETRA);
        let recs = m.tutte().unwrap().records();
        for w in recs.windows(2) {
            let (x0, y0, _) = w[0];
            let (x1, y1, _) = w[1];
            assert!((x0 + y0, x0) < (x1 + y1, x1));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        // T(1,1) counts bases, T(2,2) = 2^|E|; both against brute force.
        #[test]
        fn prop_tutte_counting_evaluations(
            n_rows in 1usize..=3,
            n_cols in 1usize..=6,
            seed in proptest::collection::vec(-2i64..=2, 18),
        ) {
            let rows: Vec<Vec<i64>> = (0..n_rows)
                .map(|i| (0..n_cols).map(|j| seed[i * 6 + j]).collect())
                .collect();
            let m = ColumnMatroid::from_matrix(ExactMatrix::from_i64_rows(&rows));
            let t = m.tutte().unwrap();
            let r = m.rank();
            let mut bases = 0u64;
            for mask in 0u32..(1 << n_cols) {
                let subset: Vec<usize> =
                    (0..n_cols).filter(|i| mask & (1 << i) != 0).collect();
                if subset.len() == r && m.rank_of(&subset).unwrap() == r {
                    bases += 1;
                }
            }
            prop_assert_eq!(t.evaluate(&rat(1), &rat(1)), BigRational::from(BigInt::from(bases)));
            prop_assert_eq!(
                t.evaluate(&rat(2), &rat(2)),
                BigRational::from(BigInt::from(1u64 << n_cols))
            );
        }

        #[test]
        fn prop_tutte_matches_subset_sum(
            n_rows in 1usize..=3,
            n_cols in 1usize..=5,
            seed in proptest::collection::vec(-2i64..=2, 15),
        ) {
            let rows: Vec<Vec<i64>> = (0..n_rows)
                .map(|i| (0..n_cols).map(|j| seed[i * 5 + j]).collect())
                .collect();
            let m = ColumnMatroid::from_matrix(ExactMatrix::from_i64_rows(&rows));
            prop_assert_eq!(m.tutte().unwrap(), tutte_subset_sum(&m));
        }
    }
}
