//! Dense matrices over Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rationals.
pub type Q = BigRational;
/// Exact Gaussian rationals.
pub type Qi = Complex<BigRational>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn re(n: i64) -> Qi {
    Qi::new(q(n), Q::zero())
}

pub fn qi(a: Q, b: Q) -> Qi {
    Qi::new(a, b)
}

/// The imaginary unit.
pub fn i_unit() -> Qi {
    Qi::new(Q::zero(), Q::one())
}

pub fn is_zero(z: &Qi) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Qi>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Qi::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Qi::one() } else { Qi::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Qi) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Integer entries, row major.
    pub fn from_ints(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| re(v[i * cols + j]))
    }

    /// `diag(1,..,1,-1,..,-1)` with `p` ones and `q` minus ones.
    pub fn signature_diag(p: usize, qn: usize) -> Self {
        Self::from_fn(p + qn, p + qn, |i, j| match (i == j, i < p) {
            (true, true) => re(1),
            (true, false) => re(-1),
            _ => Qi::zero(),
        })
    }

    /// The standard alternating matrix `[[0, I], [-I, 0]]` of size `2r`.
    pub fn standard_alternating(r: usize) -> Self {
        Self::from_fn(2 * r, 2 * r, |i, j| {
            if j == i + r && i < r {
                re(1)
            } else if i == j + r && j < r {
                re(-1)
            } else {
                Qi::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Qi {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Qi) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Qi] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(is_zero)
    }

    /// True when every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im.is_zero())
    }

    pub fn map(&self, f: impl Fn(&Qi) -> Qi) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Qi) -> Self {
        self.map(|z| z * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Qi {
        (0..self.rows.min(self.cols)).fold(Qi::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product; `a.kron(b)` has blocks `a_ij * b`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (other.rows, other.cols);
        let mut out = Self::zeros(self.rows * r, self.cols * c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if is_zero(a) {
                    continue;
                }
                for k in 0..r {
                    for l in 0..c {
                        let b = other.get(k, l);
                        if !is_zero(b) {
                            out.set(i * r + k, j * c + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[ExactMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `[[a, b], [c, d]]`.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let mut out = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        out.paste(0, 0, a);
        out.paste(0, a.cols, b);
        out.paste(a.rows, 0, c);
        out.paste(a.rows, a.cols, d);
        out
    }

    fn paste(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| fmt_qi(self.get(i, j))).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn fmt_qi(z: &Qi) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        _ => format!("{}+{}i", z.re, z.im),
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;

    /// Skips zero entries on both sides; models are sparse.
    fn mul(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !is_zero(b) {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        self.map(|z| -z.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_kron() {
        let a = ExactMatrix::from_ints(2, 2, &[1, 2, 3, 4]);
        let b = ExactMatrix::from_ints(2, 2, &[0, 1, 1, 0]);
        assert_eq!(&a * &b, ExactMatrix::from_ints(2, 2, &[2, 1, 4, 3]));
        let k = ExactMatrix::identity(2).kron(&b);
        assert_eq!(k, ExactMatrix::block_diag(&[b.clone(), b.clone()]));
        assert_eq!(a.commutator(&a), ExactMatrix::zeros(2, 2));
        assert_eq!(a.trace(), re(5));
    }

    #[test]
    fn adjoint_conjugates() {
        let m = ExactMatrix::from_fn(1, 2, |_, j| if j == 0 { i_unit() } else { re(2) });
        let a = m.adjoint();
        assert_eq!(a.get(0, 0), &(-i_unit()));
        assert_eq!(a.get(1, 0), &re(2));
    }
}
