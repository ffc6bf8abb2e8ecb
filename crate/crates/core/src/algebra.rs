//! Exact rank over a prime field and dense symmetric eigenvalues.

use std::collections::BinaryHeap;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::graph::Graph;

/// `2^31 - 1`, the default modulus for randomized rank tests.
pub const MERSENNE_31: u64 = (1 << 31) - 1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("eigenvalue index {k} out of range 1..={order}")]
    IndexOutOfRange { k: usize, order: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Arithmetic modulo a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: MERSENNE_31 }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        if self.p == MERSENNE_31 {
            let x = (x & MERSENNE_31) + (x >> 31);
            let x = (x & MERSENNE_31) + (x >> 31);
            if x >= MERSENNE_31 {
                x - MERSENNE_31
            } else {
                x
            }
        } else {
            x % self.p
        }
    }

    /// Residue of a signed integer.
    pub fn from_i64(self, x: i64) -> u64 {
        let r = x.rem_euclid(self.p as i64);
        r as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base = self.reduce(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue by Fermat's little theorem.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix of residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        PrimeFieldMatrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    /// Reduces signed integer rows into the field.
    pub fn from_integers(rows: &[Vec<i64>], field: PrimeField) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = self.field.reduce(v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }
}

/// Exact rank over the matrix's prime field by Gaussian elimination.
pub fn rank_mod_p(m: &PrimeFieldMatrix) -> usize {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in col..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv(a[rank * cols + col]);
        for j in col..cols {
            a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for r in 0..rows - rank - 1 {
            let row = &mut tail[r * cols..(r + 1) * cols];
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                if pivot_row[j] != 0 {
                    row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Incremental row echelon form over a prime field for sparse rows.
///
/// Each stored basis row is normalised so that its largest nonzero column
/// (its pivot) carries a 1. A new row is reduced from its largest column
/// downwards; rows whose support only reaches back to earlier columns stay
/// short, which keeps rigidity matrices of vertex-ordered constructions
/// near-linear to process.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: PrimeField,
    pivots: Vec<Option<Vec<(usize, u64)>>>,
    scratch: Vec<u64>,
    touched: Vec<usize>,
    rank: usize,
}

impl SparseEchelon {
    pub fn new(cols: usize, field: PrimeField) -> Self {
        SparseEchelon {
            field,
            pivots: vec![None; cols],
            scratch: vec![0; cols],
            touched: Vec::new(),
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a row given as `(column, residue)` pairs. Returns `true` when the
    /// row was independent of the rows inserted so far.
    pub fn insert(&mut self, entries: &[(usize, u64)]) -> bool {
        let f = self.field;
        let mut heap = BinaryHeap::with_capacity(entries.len() * 4);
        for &(c, v) in entries {
            let v = f.reduce(v);
            if v == 0 {
                continue;
            }
            if self.scratch[c] == 0 {
                heap.push(c);
                self.touched.push(c);
            }
            self.scratch[c] = f.add(self.scratch[c], v);
        }
        let independent = loop {
            let Some(c) = heap.pop() else { break false };
            let lead = self.scratch[c];
            if lead == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(basis) => {
                    for &(cc, vv) in basis {
                        let before = self.scratch[cc];
                        let after = f.sub(before, f.mul(lead, vv));
                        self.scratch[cc] = after;
                        if before == 0 && after != 0 {
                            heap.push(cc);
                            self.touched.push(cc);
                        }
                    }
                }
                None => {
                    let inv = f.inv(lead);
                    let mut cols = heap.into_vec();
                    cols.push(c);
                    cols.sort_unstable();
                    cols.dedup();
                    let row = cols
                        .into_iter()
                        .filter(|&cc| self.scratch[cc] != 0)
                        .map(|cc| (cc, f.mul(self.scratch[cc], inv)))
                        .collect();
                    self.pivots[c] = Some(row);
                    self.rank += 1;
                    break true;
                }
            }
        };
        for c in self.touched.drain(..) {
            self.scratch[c] = 0;
        }
        independent
    }
}

/// Dense symmetric real matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    /// Builds from a full row-major buffer, rejecting asymmetric input.
    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self, AlgebraError> {
        if data.len() != order * order {
            return Err(AlgebraError::Dimension(format!(
                "expected {} entries, got {}",
                order * order,
                data.len()
            )));
        }
        for i in 0..order {
            for j in 0..i {
                if data[i * order + j] != data[j * order + i] {
                    return Err(AlgebraError::Dimension(format!(
                        "entries ({i}, {j}) and ({j}, {i}) differ"
                    )));
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Graph Laplacian `D - A`.
    pub fn laplacian(g: &Graph) -> Self {
        let mut m = Self::zeros(g.n());
        for &(u, v) in g.edges() {
            m.add_to(u, v, -1.0);
            m.add_to(u, u, 1.0);
            m.add_to(v, v, 1.0);
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = Self::zeros(g.n());
        for &(u, v) in g.edges() {
            m.set(u, v, 1.0);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    /// Adds `v` to `(i, j)` and, off the diagonal, to `(j, i)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] += v;
        if i != j {
            self.data[j * self.order + i] += v;
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.order, other.order);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

/// Eigenvalues in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `λ_k`, counted from the smallest starting at 1.
    pub fn kth_smallest(&self, k: usize) -> Result<f64, AlgebraError> {
        if k == 0 || k > self.values.len() {
            return Err(AlgebraError::IndexOutOfRange {
                k,
                order: self.values.len(),
            });
        }
        Ok(self.values[k - 1])
    }
}

pub fn kth_smallest(s: &Spectrum, k: usize) -> Result<f64, AlgebraError> {
    s.kth_smallest(k)
}

/// All eigenvalues of a symmetric matrix, ascending, via Householder
/// tridiagonalisation and implicit QR (nalgebra).
pub fn eigenvalues_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum, AlgebraError> {
    if !(tol > 0.0) {
        return Err(AlgebraError::InvalidTolerance(tol));
    }
    let n = m.order;
    if let Some(idx) = m.data.iter().position(|x| !x.is_finite()) {
        return Err(AlgebraError::NonFinite {
            row: idx / n.max(1),
            col: idx % n.max(1),
        });
    }
    let mut values: Vec<f64> = if n == 0 {
        Vec::new()
    } else {
        DMatrix::from_row_slice(n, n, &m.data)
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect()
    };
    values.sort_by(f64::total_cmp);
    Ok(Spectrum {
        values,
        tolerance: tol,
    })
}

#[cfg(test)]
#[path = "../tests/common/exact.rs"]
mod exact_oracle;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use super::exact_oracle as exact;

    const TOL: f64 = 1e-9;

    #[test]
    fn rank_examples() {
        let f = PrimeField::default();
        let id = PrimeFieldMatrix::from_integers(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], f);
        assert_eq!(rank_mod_p(&id), 3);
        assert_eq!(rank_mod_p(&PrimeFieldMatrix::zeros(2, 3, f)), 0);
        let dep = PrimeFieldMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6]], f);
        assert_eq!(rank_mod_p(&dep), 1);
    }

    #[test]
    fn small_prime_loses_rank() {
        let f = PrimeField::new(5).unwrap();
        let m = PrimeFieldMatrix::from_integers(&[vec![1, 2], vec![3, 1]], f);
        // det = -5
        assert_eq!(rank_mod_p(&m), 1);
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn eigen_examples() {
        let s = eigenvalues_sym(&SymMatrix::diagonal(&[2.0, 0.0]), TOL).unwrap();
        assert_eq!(s.values, vec![0.0, 2.0]);

        // Circulant Laplacian of C_4: 2 - 2cos(2πk/4).
        let expected: Vec<f64> = {
            let mut v: Vec<f64> = (0..4)
                .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 4.0).cos())
                .collect();
            v.sort_by(f64::total_cmp);
            v
        };
        let c4 = eigenvalues_sym(&SymMatrix::laplacian(&Graph::cycle(4)), TOL).unwrap();
        for (a, b) in c4.values.iter().zip(&expected) {
            assert!((a - b).abs() <= TOL * (1.0 + b.abs()), "{a} vs {b}");
        }

        let k2 = eigenvalues_sym(&SymMatrix::laplacian(&Graph::complete(2)), TOL).unwrap();
        assert!((k2.values[0]).abs() < TOL && (k2.values[1] - 2.0).abs() < TOL);
    }

    #[test]
    fn eigen_errors() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, f64::NAN);
        assert!(matches!(eigenvalues_sym(&m, TOL), Err(AlgebraError::NonFinite { .. })));
        assert!(matches!(
            eigenvalues_sym(&SymMatrix::zeros(1), 0.0),
            Err(AlgebraError::InvalidTolerance(_))
        ));
    }

    #[test]
    fn kth_examples() {
        let s = Spectrum {
            values: vec![0.0, 2.0, 2.0, 4.0],
            tolerance: TOL,
        };
        assert_eq!(kth_smallest(&s, 2), Ok(2.0));
        assert_eq!(kth_smallest(&s, 4), Ok(4.0));
        assert!(matches!(
            kth_smallest(&s, 5),
            Err(AlgebraError::IndexOutOfRange { k: 5, order: 4 })
        ));
        assert!(kth_smallest(&s, 0).is_err());
        let one = Spectrum {
            values: vec![0.0],
            tolerance: TOL,
        };
        assert_eq!(kth_smallest(&one, 1), Ok(0.0));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-10i64..=10, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_invariant_under_row_ops(rows in small_matrix(), seed in any::<u64>()) {
            let f = PrimeField::default();
            let m = PrimeFieldMatrix::from_integers(&rows, f);
            let base = rank_mod_p(&m);
            prop_assert_eq!(rank_mod_p(&m.transpose()), base);

            let mut swapped = rows.clone();
            let last = swapped.len() - 1;
            swapped.swap(0, last);
            let mut scaled = PrimeFieldMatrix::from_integers(&swapped, f);
            let factor = 1 + seed % (MERSENNE_31 - 1);
            for j in 0..scaled.cols() {
                let v = f.mul(scaled.get(0, j), factor);
                scaled.set(0, j, v);
            }
            prop_assert_eq!(rank_mod_p(&scaled), base);
        }

        #[test]
        fn field_rank_bounded_by_rational_rank(rows in small_matrix()) {
            let m = PrimeFieldMatrix::from_integers(&rows, PrimeField::default());
            prop_assert!(rank_mod_p(&m) <= exact::integer_rank(&rows));
        }

        #[test]
        fn sparse_echelon_matches_dense(rows in small_matrix()) {
            let f = PrimeField::default();
            let m = PrimeFieldMatrix::from_integers(&rows, f);
            let mut e = SparseEchelon::new(m.cols(), f);
            for i in 0..m.rows() {
                let entries: Vec<_> = m.row(i).iter().copied().enumerate().filter(|e| e.1 != 0).collect();
                e.insert(&entries);
            }
            prop_assert_eq!(e.rank(), rank_mod_p(&m));
        }

        #[test]
        fn trace_and_psd(rows in small_matrix()) {
            let n = rows.len();
            let mut gram = SymMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    let dot: i64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum();
                    gram.set(i, j, dot as f64);
                }
            }
            let s = eigenvalues_sym(&gram, TOL).unwrap();
            let scale = gram.max_abs().max(1.0);
            let sum: f64 = s.values.iter().sum();
            prop_assert!((sum - gram.trace()).abs() <= n as f64 * TOL * scale);
            prop_assert!(s.values[0] >= -TOL * n as f64 * scale);
            prop_assert!(s.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
