//! Exact linear algebra over the rationals, prime fields, and the
//! integers. No floating point anywhere: elimination is fraction-free,
//! kernel counting goes through the Smith normal form.
//!
//! The elimination routines are generic over an integer entry type and
//! run on `i128` with checked arithmetic first, falling back to
//! arbitrary precision only when an intermediate value overflows.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Entry abstraction for the generic elimination kernels.

pub(crate) trait Entry: Clone + Eq + std::fmt::Debug {
    fn zero_val() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    /// Floor quotient; divisor is nonzero.
    fn checked_div_floor(&self, o: &Self) -> Option<Self>;
    /// Exact quotient; the caller guarantees divisibility.
    fn checked_div_exact(&self, o: &Self) -> Option<Self>;
    fn checked_gcd(&self, o: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Entry for i128 {
    fn zero_val() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn checked_div_floor(&self, o: &Self) -> Option<Self> {
        if *o == -1 {
            return self.checked_neg();
        }
        Some(self.div_mod_floor(o).0)
    }
    fn checked_div_exact(&self, o: &Self) -> Option<Self> {
        if *o == -1 {
            return self.checked_neg();
        }
        let (q, r) = self.div_rem(o);
        debug_assert_eq!(r, 0);
        Some(q)
    }
    fn checked_gcd(&self, o: &Self) -> Option<Self> {
        let mut a = self.unsigned_abs();
        let mut b = o.unsigned_abs();
        while b != 0 {
            (a, b) = (b, a % b);
        }
        i128::try_from(a).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero_val() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_div_floor(&self, o: &Self) -> Option<Self> {
        Some(self.div_floor(o))
    }
    fn checked_div_exact(&self, o: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r));
        Some(q)
    }
    fn checked_gcd(&self, o: &Self) -> Option<Self> {
        Some(Integer::gcd(self, o))
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

// ---------------------------------------------------------------------------
// Matrix container.

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<BigInt>, // row-major
}

impl ExactMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        ExactMatrix { n_rows, n_cols, data: vec![BigInt::zero(); n_rows * n_cols] }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            data.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        ExactMatrix { n_rows, n_cols, data }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            data.extend(r);
        }
        ExactMatrix { n_rows, n_cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n_cols + j] = v;
    }

    /// The submatrix keeping the listed columns, in the given order.
    pub fn column_submatrix(&self, cols: &[usize]) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.n_rows * cols.len());
        for i in 0..self.n_rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { n_rows: self.n_rows, n_cols: cols.len(), data }
    }

    fn bigint_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    fn i128_rows(&self) -> Option<Vec<Vec<i128>>> {
        let mut out = Vec::with_capacity(self.n_rows);
        for i in 0..self.n_rows {
            let mut row = Vec::with_capacity(self.n_cols);
            for j in 0..self.n_cols {
                row.push(self.get(i, j).to_i128()?);
            }
            out.push(row);
        }
        Some(out)
    }
}

// ---------------------------------------------------------------------------
// Rank over the rationals (Bareiss fraction-free elimination).

fn bareiss_rank<T: Entry>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut prev = None::<T>; // previous pivot; None on the first step
    let mut rank = 0;
    let mut col = 0;
    while rank < n_rows && col < n_cols {
        // Pivot search: first nonzero in this column at or below `rank`.
        let Some(pi) = (rank..n_rows).find(|&i| !m[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, pi);
        let pivot = m[rank][col].clone();
        for i in rank + 1..n_rows {
            let head = m[i][col].clone();
            for j in col..n_cols {
                let t = pivot.checked_mul(&m[i][j])?;
                let u = head.checked_mul(&m[rank][j])?;
                let mut v = t.checked_sub(&u)?;
                if let Some(p) = &prev {
                    v = v.checked_div_exact(p)?;
                }
                m[i][j] = v;
            }
        }
        prev = Some(pivot);
        rank += 1;
        col += 1;
    }
    Some(rank)
}

/// Rank of `m` over the rationals via fraction-free elimination.
pub fn rank_rational(m: &ExactMatrix) -> usize {
    if let Some(rows) = m.i128_rows() {
        if let Some(r) = bareiss_rank(rows) {
            return r;
        }
    }
    bareiss_rank(m.bigint_rows()).expect("bigint elimination cannot overflow")
}

// ---------------------------------------------------------------------------
// Reduced row echelon form over Q, scaled to primitive integer rows.

/// Canonical echelon form of the row space: reduced row echelon form
/// over Q with each row scaled to a primitive integer vector with
/// positive pivot, zero rows dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefForm {
    pub rows: Vec<Vec<BigInt>>,
    pub pivot_cols: Vec<usize>,
    pub n_cols: usize,
}

fn normalize_row_primitive<T: Entry>(row: &mut [T]) -> Option<()> {
    let mut g = T::zero_val();
    for v in row.iter() {
        g = g.checked_gcd(v)?;
    }
    if g.is_zero() {
        return Some(());
    }
    let lead_negative = row.iter().find(|v| !v.is_zero()).is_some_and(Entry::is_negative);
    for v in row.iter_mut() {
        *v = v.checked_div_exact(&g)?;
        if lead_negative {
            *v = v.checked_neg()?;
        }
    }
    Some(())
}

fn rref_generic<T: Entry>(mut m: Vec<Vec<T>>) -> Option<(Vec<Vec<T>>, Vec<usize>)> {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pi) = (rank..n_rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pi);
        normalize_row_primitive(&mut m[rank])?;
        let pivot = m[rank][col].clone();
        for i in 0..n_rows {
            if i == rank || m[i][col].is_zero() {
                continue;
            }
            let head = m[i][col].clone();
            for j in 0..n_cols {
                let t = pivot.checked_mul(&m[i][j])?;
                let u = head.checked_mul(&m[rank][j])?;
                m[i][j] = t.checked_sub(&u)?;
            }
            normalize_row_primitive(&mut m[i])?;
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    m.truncate(rank);
    for row in &mut m {
        normalize_row_primitive(row)?;
    }
    Some((m, pivot_cols))
}

pub fn rref(m: &ExactMatrix) -> RrefForm {
    let n_cols = m.n_cols();
    if let Some(rows) = m.i128_rows() {
        if let Some((rows, pivot_cols)) = rref_generic(rows) {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| BigInt::from(v)).collect())
                .collect();
            return RrefForm { rows, pivot_cols, n_cols };
        }
    }
    let (rows, pivot_cols) =
        rref_generic(m.bigint_rows()).expect("bigint elimination cannot overflow");
    RrefForm { rows, pivot_cols, n_cols }
}

// ---------------------------------------------------------------------------
// Smith normal form.

/// Invariant factors of an integer matrix: a divisibility chain
/// d1 | d2 | ... | dr of positive integers, with r the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct SnfState<T> {
    m: Vec<Vec<T>>,
    /// Right transform, accumulated column operations on the identity.
    v: Option<Vec<Vec<T>>>,
}

impl<T: Entry> SnfState<T> {
    fn n_rows(&self) -> usize {
        self.m.len()
    }
    fn n_cols(&self) -> usize {
        self.m.first().map_or(0, Vec::len)
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.m {
            row.swap(a, b);
        }
        if let Some(v) = &mut self.v {
            for row in v {
                row.swap(a, b);
            }
        }
    }
    /// col_b -= q * col_a
    fn sub_col(&mut self, b: usize, q: &T, a: usize) -> Option<()> {
        for row in &mut self.m {
            let t = q.checked_mul(&row[a])?;
            row[b] = row[b].checked_sub(&t)?;
        }
        if let Some(v) = &mut self.v {
            for row in v {
                let t = q.checked_mul(&row[a])?;
                row[b] = row[b].checked_sub(&t)?;
            }
        }
        Some(())
    }
    fn negate_row(&mut self, i: usize) -> Option<()> {
        for x in &mut self.m[i] {
            *x = x.checked_neg()?;
        }
        Some(())
    }
    /// row_b -= q * row_a
    fn sub_row(&mut self, b: usize, q: &T, a: usize) -> Option<()> {
        let n = self.n_cols();
        for j in 0..n {
            let t = q.checked_mul(&self.m[a][j])?;
            self.m[b][j] = self.m[b][j].checked_sub(&t)?;
        }
        Some(())
    }
    fn add_row(&mut self, b: usize, a: usize) -> Option<()> {
        let n = self.n_cols();
        for j in 0..n {
            self.m[b][j] = self.m[b][j].checked_add(&self.m[a][j].clone())?;
        }
        Some(())
    }
}

/// Reduces to diagonal form with the divisibility chain; pivot choice
/// is the smallest nonzero absolute value, ties row-major.
fn snf_diagonal<T: Entry>(state: &mut SnfState<T>) -> Option<Vec<T>> {
    let n_rows = state.n_rows();
    let n_cols = state.n_cols();
    let steps = n_rows.min(n_cols);
    let mut diag = Vec::new();
    for k in 0..steps {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        let mut best: Option<(usize, usize)> = None;
        for i in k..n_rows {
            for j in k..n_cols {
                if state.m[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if state.m[i][j].abs_cmp(&state.m[bi][bj]) == Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        state.m.swap(k, pi);
        state.swap_cols(k, pj);
        if state.m[k][k].is_negative() {
            state.negate_row(k)?;
        }
        loop {
            // Clear the pivot column with row operations; a nonzero
            // remainder becomes the new, strictly smaller pivot.
            let mut dirty = false;
            for i in k + 1..n_rows {
                if state.m[i][k].is_zero() {
                    continue;
                }
                let q = state.m[i][k].checked_div_floor(&state.m[k][k])?;
                state.sub_row(i, &q, k)?;
                if !state.m[i][k].is_zero() {
                    state.m.swap(i, k);
                    if state.m[k][k].is_negative() {
                        state.negate_row(k)?;
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in k + 1..n_cols {
                if state.m[k][j].is_zero() {
                    continue;
                }
                let q = state.m[k][j].checked_div_floor(&state.m[k][k])?;
                state.sub_col(j, &q, k)?;
                if !state.m[k][j].is_zero() {
                    state.swap_cols(j, k);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce that the pivot divides
            // the rest of the trailing submatrix.
            let mut fixed = false;
            'sweep: for i in k + 1..n_rows {
                for j in k + 1..n_cols {
                    if state.m[i][j].is_zero() {
                        continue;
                    }
                    let q = state.m[i][j].checked_div_floor(&state.m[k][k])?;
                    let back = q.checked_mul(&state.m[k][k])?;
                    if state.m[i][j].checked_sub(&back)?.is_zero() {
                        continue;
                    }
                    state.add_row(k, i)?;
                    fixed = true;
                    break 'sweep;
                }
            }
            if !fixed {
                break;
            }
        }
        diag.push(state.m[k][k].clone());
    }
    Some(diag)
}

/// Smith normal form of `m`: the invariant-factor chain.
pub fn smith_normal_form(m: &ExactMatrix) -> SmithForm {
    if let Some(rows) = m.i128_rows() {
        let mut state = SnfState { m: rows, v: None };
        if let Some(diag) = snf_diagonal(&mut state) {
            return SmithForm { diagonal: diag.iter().map(Entry::to_bigint).collect() };
        }
    }
    let mut state = SnfState { m: m.bigint_rows(), v: None };
    let diag = snf_diagonal(&mut state).expect("bigint elimination cannot overflow");
    SmithForm { diagonal: diag }
}

/// Smith normal form together with the right (column) transform `V`:
/// an invertible integer matrix such that solutions of `m x = 0 mod q`
/// are exactly `x = V z mod q` with `d_i z_i = 0 mod q` for the
/// invariant factors and `z` free past the rank.
pub fn smith_with_kernel_transform(m: &ExactMatrix) -> (SmithForm, ExactMatrix) {
    fn identity_rows<T: Entry + From<i64>>(n: usize) -> Vec<Vec<T>> {
        (0..n)
            .map(|i| (0..n).map(|j| T::from(if i == j { 1 } else { 0 })).collect())
            .collect()
    }
    if let Some(rows) = m.i128_rows() {
        let mut state = SnfState { m: rows, v: Some(identity_rows::<i128>(m.n_cols())) };
        if let Some(diag) = snf_diagonal(&mut state) {
            let v = state.v.unwrap();
            let v_rows: Vec<Vec<BigInt>> =
                v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            return (
                SmithForm { diagonal: diag.iter().map(Entry::to_bigint).collect() },
                ExactMatrix::from_bigint_rows(v_rows),
            );
        }
    }
    let mut state =
        SnfState { m: m.bigint_rows(), v: Some(identity_rows::<BigInt>(m.n_cols())) };
    let diag = snf_diagonal(&mut state).expect("bigint elimination cannot overflow");
    (SmithForm { diagonal: diag }, ExactMatrix::from_bigint_rows(state.v.unwrap()))
}

/// Invariant factors straight from signed machine-integer rows; the
/// hot path for per-subset kernel counting.
pub(crate) fn smith_diagonal_from_rows(rows: &[Vec<i64>], cols: &[usize]) -> Vec<BigInt> {
    let mut sub: Vec<Vec<i128>> = Vec::new();
    for row in rows {
        if cols.iter().any(|&j| row[j] != 0) {
            sub.push(cols.iter().map(|&j| row[j] as i128).collect());
        }
    }
    let mut state = SnfState { m: sub, v: None };
    if let Some(diag) = snf_diagonal(&mut state) {
        return diag.iter().map(Entry::to_bigint).collect();
    }
    let mut big: Vec<Vec<BigInt>> = Vec::new();
    for row in rows {
        if cols.iter().any(|&j| row[j] != 0) {
            big.push(cols.iter().map(|&j| BigInt::from(row[j])).collect());
        }
    }
    let mut state = SnfState { m: big, v: None };
    let diag = snf_diagonal(&mut state).expect("bigint elimination cannot overflow");
    diag
}

/// Number of solutions of `m x = 0` over `Z_q`:
/// `q^(cols - r) * prod_i gcd(d_i, q)` for the invariant factors `d_i`.
pub fn kernel_count_mod_q(m: &ExactMatrix, q: u64) -> BigInt {
    assert!(q >= 2, "modulus must be at least 2");
    let snf = smith_normal_form(m);
    kernel_count_from_diagonal(&snf.diagonal, m.n_cols(), q)
}

pub(crate) fn kernel_count_from_diagonal(diag: &[BigInt], n_cols: usize, q: u64) -> BigInt {
    let qq = BigInt::from(q);
    let mut count = qq.pow((n_cols - diag.len()) as u32);
    for d in diag {
        count *= d.gcd(&qq);
    }
    count
}

// ---------------------------------------------------------------------------
// Prime-field elimination.

/// Deterministic primality check by trial division; intended for the
/// small moduli this crate works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 7u64;
    while d.saturating_mul(d) <= n {
        for off in [0, 4] {
            let f = d + off;
            if n % f == 0 {
                return false;
            }
        }
        d += 6;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime and a nonzero mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

fn reduce_mod(m: &ExactMatrix, p: u64) -> Vec<Vec<u64>> {
    let pp = BigInt::from(p);
    (0..m.n_rows())
        .map(|i| {
            (0..m.n_cols())
                .map(|j| m.get(i, j).mod_floor(&pp).to_u64().expect("residue fits"))
                .collect()
        })
        .collect()
}

fn rref_mod_p(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    for col in 0..n_cols {
        let Some(pi) = (rank..n_rows).find(|&i| m[i][col] % p != 0) else {
            continue;
        };
        m.swap(rank, pi);
        let inv = mod_inverse(m[rank][col] % p, p);
        for j in col..n_cols {
            m[rank][j] = mul(m[rank][j] % p, inv);
        }
        for i in 0..n_rows {
            if i == rank || m[i][col] % p == 0 {
                continue;
            }
            let factor = m[i][col] % p;
            for j in col..n_cols {
                let t = mul(factor, m[rank][j]);
                m[i][j] = (m[i][j] % p + p - t) % p;
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    pivot_cols
}

/// Rank of `m` over the prime field `F_p`.
pub fn rank_mod_p(m: &ExactMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rows = reduce_mod(m, p);
    Ok(rref_mod_p(&mut rows, p).len())
}

/// A basis of the kernel of `m` over `F_p`, in the reduced echelon
/// parameterization: one vector per free column, with unit in the free
/// coordinate and the pivot coordinates solved from the echelon form.
pub fn kernel_basis_mod_p(m: &ExactMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n_cols = m.n_cols();
    let mut rows = reduce_mod(m, p);
    let pivot_cols = rref_mod_p(&mut rows, p);
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..n_cols {
        if next_pivot < pivot_cols.len() && pivot_cols[next_pivot] == free {
            next_pivot += 1;
            continue;
        }
        let mut vec = vec![0u64; n_cols];
        vec[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let coef = rows[r][free] % p;
            if coef != 0 {
                vec[pc] = p - coef;
            }
        }
        basis.push(vec);
    }
    Ok(basis)
}

// ---------------------------------------------------------------------------
// Subdeterminant bounds.

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &(&s * &s) < n {
        s + 1
    } else {
        s
    }
}

/// Upper bound on the absolute value of any nonsingular subdeterminant
/// of `m`, from column norms: the product of the `rank` largest squared
/// column norms, square-rooted and rounded up. Primes above this bound
/// see the same linear dependencies as the rationals.
pub fn hadamard_bound(m: &ExactMatrix) -> BigInt {
    let rank = rank_rational(m);
    if rank == 0 {
        return BigInt::one();
    }
    let mut sq_norms: Vec<BigInt> = (0..m.n_cols())
        .map(|j| (0..m.n_rows()).map(|i| m.get(i, j) * m.get(i, j)).sum())
        .collect();
    sq_norms.sort();
    sq_norms.reverse();
    let prod: BigInt = sq_norms.iter().take(rank).product();
    ceil_sqrt(&prod)
}

/// The coarser, dimension-only subdeterminant bound
/// `(d+1)^((d+1)/2)` for a boundary matrix of a d-dimensional complex,
/// rounded up to an integer.
pub fn dimension_only_bound(dim: usize) -> BigInt {
    let base = BigInt::from(dim as u64 + 1);
    ceil_sqrt(&base.pow(dim as u32 + 1))
}
