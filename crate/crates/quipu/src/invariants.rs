//! Exact-integer derived invariants used to cross-examine claimed
//! equivalences: Kupisch series, Cartan matrices, and Coxeter
//! polynomials.
//!
//! The Coxeter matrix convention is fixed globally as
//! `phi = -(C^-1)^T * C`, and the Coxeter polynomial is the monic
//! characteristic polynomial `det(x*I - phi)`, computed over
//! arbitrary-precision integers. Equal polynomials are necessary but
//! not sufficient for derived equivalence; unequal polynomials refute
//! it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::presentations::{MarkedQuipuQuiver, NakayamaPresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("matrix determinant is {det}, not +1 or -1; no integral Coxeter matrix exists")]
    NonUnimodular { det: BigInt },
}

/// Dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.dim + col]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<BigInt> = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let Some(pivot) = (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, pivot * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }

    /// Exact inverse, available when the matrix is invertible over the
    /// integers.
    pub fn inverse(&self) -> Option<IntMatrix> {
        let n = self.dim;
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            BigRational::from(self.get(i, j).clone())
                        } else if j - n == i {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot_row);
            let pivot = aug[col][col].clone();
            for entry in &mut aug[col] {
                *entry /= &pivot;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let factor = row[col].clone();
                    for (entry, pivot_entry) in row.iter_mut().zip(&pivot_row) {
                        *entry -= &factor * pivot_entry;
                    }
                }
            }
        }
        let mut out = Self::zeros(n);
        for (i, row) in aug.iter().enumerate() {
            for j in 0..n {
                let value = &row[n + j];
                if !value.denom().is_one() {
                    return None;
                }
                *out.get_mut(i, j) = value.numer().clone();
            }
        }
        Some(out)
    }
}

/// Integer-coefficient polynomial, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (power, coeff) in self.coeffs.iter().enumerate() {
            if power > 0 {
                write!(f, " + ")?;
            }
            match power {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*x")?,
                _ => write!(f, "{coeff}*x^{power}")?,
            }
        }
        Ok(())
    }
}

/// Dimensions of the indecomposable projectives: entry `i` (1-based) is
/// the number of vertices reachable from `i` before the first relation
/// that fits inside the walk.
pub fn kupisch(p: &NakayamaPresentation) -> Vec<usize> {
    let n = p.vertices();
    (1..=n)
        .map(|i| {
            let cut = p
                .relations()
                .iter()
                .filter(|r| r.start >= i)
                .map(|r| r.end())
                .min()
                .unwrap_or(n + 1);
            cut - i
        })
        .collect()
}

/// Cartan matrix of a presentation: row `i` has ones exactly on the
/// columns of the vertices its projective reaches.
pub fn cartan_nakayama(p: &NakayamaPresentation) -> IntMatrix {
    let n = p.vertices();
    let series = kupisch(p);
    let mut c = IntMatrix::zeros(n);
    for (i, &len) in series.iter().enumerate() {
        for j in i..i + len {
            *c.get_mut(i, j) = BigInt::one();
        }
    }
    c
}

/// Cartan matrix of a marked quipu quiver. Vertices are enumerated main
/// string first, then cords in ascending position, each root to tip;
/// entry `(i, j)` is 1 when the unique path from `i` to `j` exists and
/// contains no full relation.
pub fn cartan_marked(quiver: &MarkedQuipuQuiver) -> IntMatrix {
    let s = quiver.main_len();
    let total = quiver.total_vertices();
    let mut c = IntMatrix::zeros(total);

    // First relation cut visible from each main vertex.
    let cut: Vec<usize> = (1..=s)
        .map(|i| {
            quiver
                .relations()
                .iter()
                .filter(|r| r.start >= i)
                .map(|r| r.end())
                .min()
                .unwrap_or(usize::MAX)
        })
        .collect();

    let mut cord_offsets = Vec::new();
    let mut next = s;
    for (&position, &length) in quiver.cords() {
        cord_offsets.push((position, next, length));
        next += length;
    }

    for i in 1..=s {
        for j in i..=s {
            if j < cut[i - 1] {
                *c.get_mut(i - 1, j - 1) = BigInt::one();
            }
        }
        for &(position, offset, length) in &cord_offsets {
            if position >= i && position < cut[i - 1] {
                for d in 0..length {
                    *c.get_mut(i - 1, offset + d) = BigInt::one();
                }
            }
        }
    }
    for &(_, offset, length) in &cord_offsets {
        for d1 in 0..length {
            for d2 in d1..length {
                *c.get_mut(offset + d1, offset + d2) = BigInt::one();
            }
        }
    }
    c
}

/// The Coxeter matrix `-(C^-1)^T * C` of a unimodular Cartan matrix.
pub fn coxeter_matrix(cartan: &IntMatrix) -> Result<IntMatrix, InvariantError> {
    let det = cartan.determinant();
    if det.abs() != BigInt::one() {
        return Err(InvariantError::NonUnimodular { det });
    }
    let inverse = cartan
        .inverse()
        .expect("unimodular matrices have integral inverses");
    Ok(inverse.transpose().mul(cartan).neg())
}

// Same trace recursion over machine integers; bails out on overflow.
fn characteristic_polynomial_i128(entries: &[i128], n: usize) -> Option<Vec<i128>> {
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    if n == 0 {
        return Some(coeffs);
    }
    let trace = |m: &[i128]| -> Option<i128> {
        let mut t = 0i128;
        for i in 0..n {
            t = t.checked_add(m[i * n + i])?;
        }
        Some(t)
    };
    let mul = |a: &[i128], b: &[i128]| -> Option<Vec<i128>> {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[k * n + j];
                    if y != 0 {
                        let cell = &mut out[i * n + j];
                        *cell = cell.checked_add(x.checked_mul(y)?)?;
                    }
                }
            }
        }
        Some(out)
    };
    let mut m = entries.to_vec();
    coeffs[n - 1] = trace(&m)?.checked_neg()?;
    for k in 2..=n {
        let diag = coeffs[n - k + 1];
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(diag)?;
        }
        m = mul(entries, &m)?;
        let t = trace(&m)?;
        debug_assert_eq!(t % k as i128, 0, "trace recursion divides exactly");
        coeffs[n - k] = (t / k as i128).checked_neg()?;
    }
    Some(coeffs)
}

/// Monic characteristic polynomial by the trace recursion over
/// arbitrary-precision integers; all divisions are exact.
fn characteristic_polynomial_bigint(matrix: &IntMatrix) -> IntPolynomial {
    let n = matrix.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return IntPolynomial::new(coeffs);
    }
    let mut m = matrix.clone();
    coeffs[n - 1] = -m.trace();
    for k in 2..=n {
        let mut shifted = m;
        let diag = coeffs[n - k + 1].clone();
        for i in 0..n {
            *shifted.get_mut(i, i) += &diag;
        }
        m = matrix.mul(&shifted);
        let trace = m.trace();
        let divisor = BigInt::from(k);
        debug_assert!(
            (&trace % &divisor).is_zero(),
            "trace recursion divides exactly"
        );
        coeffs[n - k] = -(&trace / &divisor);
    }
    IntPolynomial::new(coeffs)
}

/// Monic characteristic polynomial, exact over the integers. Small
/// matrices run on machine integers with checked arithmetic and fall
/// back to arbitrary precision on any overflow.
pub fn characteristic_polynomial(matrix: &IntMatrix) -> IntPolynomial {
    let n = matrix.dim();
    let small: Option<Vec<i128>> = matrix
        .entries
        .iter()
        .map(|e| i128::try_from(e).ok())
        .collect();
    if let Some(entries) = small {
        if let Some(coeffs) = characteristic_polynomial_i128(&entries, n) {
            return IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect());
        }
    }
    characteristic_polynomial_bigint(matrix)
}

/// Coxeter polynomial of a unimodular Cartan matrix under the global
/// convention.
pub fn coxeter_polynomial(cartan: &IntMatrix) -> Result<IntPolynomial, InvariantError> {
    Ok(characteristic_polynomial(&coxeter_matrix(cartan)?))
}

/// Coxeter polynomial of a presentation's bound quiver algebra.
pub fn coxeter_of_nakayama(p: &NakayamaPresentation) -> IntPolynomial {
    coxeter_polynomial(&cartan_nakayama(p))
        .expect("Cartan matrices of presentations are unimodular")
}

/// Coxeter polynomial of a marked quipu quiver's bound quiver algebra.
pub fn coxeter_of_marked(quiver: &MarkedQuipuQuiver) -> IntPolynomial {
    coxeter_polynomial(&cartan_marked(quiver))
        .expect("Cartan matrices of marked quivers are unimodular")
}

/// Either kind of bound quiver algebra the oracle can evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundAlgebra {
    Nakayama(NakayamaPresentation),
    Marked(MarkedQuipuQuiver),
}

impl BoundAlgebra {
    pub fn coxeter(&self) -> IntPolynomial {
        match self {
            BoundAlgebra::Nakayama(p) => coxeter_of_nakayama(p),
            BoundAlgebra::Marked(q) => coxeter_of_marked(q),
        }
    }
}

/// Outcome of comparing two Coxeter polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub left: IntPolynomial,
    pub right: IntPolynomial,
    pub consistent: bool,
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "left:  {}", self.left)?;
        writeln!(f, "right: {}", self.right)?;
        if self.consistent {
            write!(
                f,
                "verdict: consistent (equal Coxeter polynomials; necessary, not sufficient)"
            )
        } else {
            write!(
                f,
                "verdict: refuted (Coxeter polynomials differ, no derived equivalence)"
            )
        }
    }
}

/// Compares Coxeter polynomials. Unequal polynomials disprove derived
/// equivalence; equal polynomials are consistent with it but do not
/// certify it.
pub fn verify_equivalence(a: &BoundAlgebra, b: &BoundAlgebra) -> EquivalenceReport {
    let left = a.coxeter();
    let right = b.coxeter();
    let consistent = left == right;
    EquivalenceReport {
        left,
        right,
        consistent,
    }
}
