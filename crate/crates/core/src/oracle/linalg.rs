//! Exact linear algebra: kernels over Q, inversion and inertia over Q(i).

// Elimination loops read clearer with explicit indices.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::matrix::{is_zero, ExactMatrix, Q, Qi};

type SparseRow = BTreeMap<usize, Q>;

/// Incremental row echelon form over Q with sparse rows. Each stored row
/// is normalized to a leading 1 at its key column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0;
        loop {
            let hit = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((c, factor)) = hit else { break };
            for (k, v) in &self.pivots[&c] {
                let e = row.entry(*k).or_insert_with(Q::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            cursor = c + 1;
        }
        row
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn push(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = Q::one() / lv;
        let row = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// A basis of the kernel, one vector per free column.
    pub fn kernel(mut self) -> Vec<Vec<Q>> {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let prow = self.pivots[&c].clone();
            for (_, r) in self.pivots.range_mut(..c) {
                if let Some(f) = r.get(&c).cloned() {
                    for (k, v) in &prow {
                        let e = r.entry(*k).or_insert_with(Q::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            r.remove(k);
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = vec![Q::zero(); self.ncols];
            v[free] = Q::one();
            for (c, r) in &self.pivots {
                if let Some(x) = r.get(&free) {
                    v[*c] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Builds the system whose `k`-th column is the flattened image of the
/// `k`-th input, feeding sparser rows first.
fn echelon_of_columns(columns: &[Vec<(usize, Q)>]) -> Echelon {
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (k, col) in columns.iter().enumerate() {
        for (r, v) in col {
            rows.entry(*r).or_default().insert(k, v.clone());
        }
    }
    let mut rows: Vec<SparseRow> = rows.into_values().collect();
    rows.sort_by_key(|r| r.len());
    let mut ech = Echelon::new(columns.len());
    for r in rows {
        ech.push(r);
        if ech.rank() == columns.len() {
            break;
        }
    }
    ech
}

/// Real coordinates of a list of matrices, as sparse `(index, value)` pairs.
pub fn flatten(ms: &[ExactMatrix]) -> Vec<(usize, Q)> {
    let mut out = Vec::new();
    let mut base = 0;
    for m in ms {
        for (e, z) in m.entries().iter().enumerate() {
            if !z.re.is_zero() {
                out.push((base + 2 * e, z.re.clone()));
            }
            if !z.im.is_zero() {
                out.push((base + 2 * e + 1, z.im.clone()));
            }
        }
        base += 2 * m.entries().len();
    }
    out
}

/// Real basis of the `size x size` matrices: `E_ij`, and also `i E_ij` when `complex`.
pub fn unit_basis(size: usize, complex: bool) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for a in 0..size {
        for b in 0..size {
            let mut m = ExactMatrix::zeros(size, size);
            m.set(a, b, Qi::one());
            if complex {
                let mut mi = ExactMatrix::zeros(size, size);
                mi.set(a, b, Qi::i());
                out.push(m);
                out.push(mi);
            } else {
                out.push(m);
            }
        }
    }
    out
}

/// Real span of `basis` cut out by the real-linear map `constraints`;
/// returns a basis of the solution space.
pub fn solve_in_span(basis: &[ExactMatrix], constraints: impl Fn(&ExactMatrix) -> Vec<ExactMatrix>) -> Vec<ExactMatrix> {
    combine(basis, &kernel_coeffs(basis, constraints))
}

/// Real dimension of the solution space of [`solve_in_span`].
pub fn solution_dim(basis: &[ExactMatrix], constraints: impl Fn(&ExactMatrix) -> Vec<ExactMatrix>) -> usize {
    let cols: Vec<_> = basis.iter().map(|b| flatten(&constraints(b))).collect();
    echelon_of_columns(&cols).nullity()
}

fn kernel_coeffs(basis: &[ExactMatrix], constraints: impl Fn(&ExactMatrix) -> Vec<ExactMatrix>) -> Vec<Vec<Q>> {
    let cols: Vec<_> = basis.iter().map(|b| flatten(&constraints(b))).collect();
    echelon_of_columns(&cols).kernel()
}

/// `sum_k c_k basis_k` for each coefficient vector.
pub fn combine(basis: &[ExactMatrix], coeffs: &[Vec<Q>]) -> Vec<ExactMatrix> {
    coeffs
        .iter()
        .map(|c| {
            let (r, k) = (basis[0].rows(), basis[0].cols());
            let mut acc = ExactMatrix::zeros(r, k);
            for (ck, b) in c.iter().zip(basis) {
                if !ck.is_zero() {
                    acc = &acc + &b.scale(&Qi::new(ck.clone(), Q::zero()));
                }
            }
            acc
        })
        .collect()
}

/// Rank over Q(i) of a matrix.
pub fn rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<Qi>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(p) = (r..a.len()).find(|&i| !is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = Qi::one() / &a[r][c];
        for i in r + 1..a.len() {
            if is_zero(&a[i][c]) {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..m.cols() {
                let t = &f * &a[r][j];
                a[i][j] = &a[i][j] - t;
            }
        }
        r += 1;
    }
    r
}

/// Inverse over Q(i), or `None` when singular.
pub fn inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    assert!(m.is_square());
    let n = m.rows();
    let mut a: Vec<Vec<Qi>> = (0..n)
        .map(|i| {
            let mut row: Vec<Qi> = (0..n).map(|j| m.get(i, j).clone()).collect();
            row.extend((0..n).map(|j| if i == j { Qi::one() } else { Qi::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !is_zero(&a[i][c]))?;
        a.swap(c, p);
        let inv = Qi::one() / &a[c][c];
        for v in a[c].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i == c || is_zero(&a[i][c]) {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..2 * n {
                let t = &f * &a[c][j];
                a[i][j] = &a[i][j] - t;
            }
        }
    }
    Some(ExactMatrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
}

/// Numbers of positive, negative and zero eigenvalues of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }
}

/// Inertia by repeated Schur complements; `m` must be Hermitian.
pub fn inertia(m: &ExactMatrix) -> Inertia {
    assert!(m.is_square() && *m == m.adjoint(), "inertia needs a Hermitian matrix");
    let mut a: Vec<Vec<Qi>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut out = Inertia { pos: 0, neg: 0, zero: 0 };
    while !a.is_empty() {
        let n = a.len();
        let k = match (0..n).find(|&i| !is_zero(&a[i][i])) {
            Some(k) => k,
            None => {
                let Some((k, l)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !is_zero(&a[i][j])) else {
                    out.zero += n;
                    break;
                };
                // Congruence by I + c E_lk with c = conj(a_kl) makes a_kk = 2|a_kl|^2.
                let c = a[k][l].conj();
                let cc = c.conj();
                for row in a.iter_mut() {
                    let t = &c * &row[l];
                    row[k] = &row[k] + t;
                }
                let lrow = a[l].clone();
                for (j, v) in a[k].iter_mut().enumerate() {
                    *v = &*v + &cc * &lrow[j];
                }
                k
            }
        };
        let d = a[k][k].re.clone();
        if d.is_positive() {
            out.pos += 1;
        } else {
            out.neg += 1;
        }
        let col: Vec<Qi> = (0..n).map(|i| a[i][k].clone()).collect();
        let inv = Qi::new(Q::one() / &d, Q::zero());
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let mut row = Vec::with_capacity(n - 1);
            for j in (0..n).filter(|&j| j != k) {
                let t = &col[i] * &col[j].conj() * &inv;
                row.push(&a[i][j] - t);
            }
            next.push(row);
        }
        a = next;
    }
    out
}

/// Positive definiteness of a real symmetric matrix by pivots without exchanges.
pub fn is_positive_definite(m: &[Vec<Q>]) -> bool {
    let mut a = m.to_vec();
    let n = a.len();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}
