use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Tolerance on Hermiticity and unit trace when a matrix is accepted as a
/// density matrix.
pub const DENSITY_TOL: f64 = 1e-12;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

/// Dense row-major complex matrix.
///
/// Every object in the crate (kets, operators, density matrices) lives in
/// one of these; dimensions never exceed 16 so nothing here tries to be
/// clever about cache blocking.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols} = {} entries", rows * cols),
                actual: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows. Panics on ragged input; intended for
    /// literals.
    pub fn from_rows<R: AsRef<[Complex]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let m = rows[0].as_ref().len();
        let mut data = Vec::with_capacity(n * m);
        for r in rows {
            assert_eq!(r.as_ref().len(), m, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self::from_vec(n, m, data).expect("non-empty literal")
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex::new(v, 0.0);
        }
        m
    }

    /// Column vector from amplitudes.
    pub fn column(amplitudes: &[Complex]) -> Self {
        Self::from_vec(amplitudes.len(), 1, amplitudes.to_vec()).expect("non-empty column")
    }

    /// `|v><w|`
    pub fn outer(v: &[Complex], w: &[Complex]) -> Self {
        let mut m = Self::zeros(v.len(), w.len());
        for (i, a) in v.iter().enumerate() {
            for (j, b) in w.iter().enumerate() {
                m[(i, j)] = a * b.conj();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: Complex) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in comparison"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.max_abs_diff(other) <= tol
    }

    pub fn hermiticity_error(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// `(h + h†)/2`
    pub fn hermitian_part(&self) -> Self {
        (self + &self.dagger()).scale_real(0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Validates and symmetrizes a density matrix: square, Hermitian within
    /// [`DENSITY_TOL`], unit trace within [`DENSITY_TOL`].
    pub fn into_density(self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: "square matrix".into(),
                actual: format!("{}x{}", self.rows, self.cols),
            });
        }
        if !self.is_finite() {
            return Err(Error::InvalidInput("matrix has non-finite entries".into()));
        }
        let deviation = self.hermiticity_error();
        if deviation > DENSITY_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = self.trace();
        if (tr - ONE).norm() > DENSITY_TOL {
            return Err(Error::InvalidInput(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        Ok(self.hermitian_part())
    }

    pub(crate) fn require_shape(&self, rows: usize, cols: usize) -> Result<()> {
        if self.rows == rows && self.cols == cols {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols}"),
                actual: format!("{}x{}", self.rows, self.cols),
            })
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Complex]) -> Vec<Complex> {
        assert_eq!(
            self.cols,
            v.len(),
            "vector length differs from column count"
        );
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Rows as nested `[re, im]` pairs, the layout used by the JSON dumps.
    pub fn to_pairs(&self) -> Vec<Vec<[f64; 2]>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let z = self[(i, j)];
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:>10.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a[(i, j)];
            if aij == ZERO {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    out[(i * b.rows + k, j * b.cols + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Kronecker product of several factors, left to right.
pub fn tensor_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, m| tensor(&acc, m))
}
