use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::rational::Rational;
use super::subspace::Subspace;

/// Dense matrix over the rationals, row-major.
///
/// Matrices act on column vectors: `m.mul_vec(v)` is `m·v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect(),
        )
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        QMatrix { rows, cols, data }
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

    /// Row-major entries.
    pub fn as_flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self·rhs - rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip().expect("nonzero pivot");
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(i, j)] - &(&f * &self[(r, j)]);
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// The null space `{v : self·v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[(r, f)];
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.cols, basis)
    }

    /// One exact solution of `self·x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_spanning(self.rows, (0..self.cols).map(|j| self.column(j)).collect())
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &'a QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert_eq!(QMatrix::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let k = QMatrix::zeros(2, 2).kernel();
        assert_eq!(k.dim(), 2);
        assert_eq!(k, Subspace::full(2));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let rhs = vec![q(3), Rational::new(-1, 2), q(7)];
        assert_eq!(QMatrix::identity(3).solve(&rhs), Some(rhs));
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs_is_inconsistent() {
        assert_eq!(QMatrix::zeros(2, 2).solve(&[q(1), q(0)]), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = QMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(3));
        assert!(QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c)
                .prop_map(move |v| QMatrix::from_flat(r, c, v.into_iter().map(q).collect()))
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
            for v in k.basis() {
                prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
            }
        }

        #[test]
        fn solutions_satisfy_system(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let x0: Vec<Rational> = seed.iter().take(m.cols()).map(|&s| q(s)).collect();
            let rhs = m.mul_vec(&x0);
            let x = m.solve(&rhs).expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x), rhs);
        }
    }
}
