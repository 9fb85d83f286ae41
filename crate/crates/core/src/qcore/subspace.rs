use super::rational::Rational;

/// A subspace of `Q^n` stored as the rows of its reduced row-echelon basis.
///
/// The echelon form is canonical (leading ones, zeros above and below every
/// pivot, rows ordered by pivot), so two subspaces are equal exactly when
/// their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let mut e = EchelonBasis::new(ambient_dim);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        residual.iter().all(Rational::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut e = EchelonBasis::from_subspace(self.clone());
        for v in &other.basis {
            e.insert(v.clone());
        }
        e.into_subspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve a·B1 = b·B2 via the kernel of [B1; -B2]^T.
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let mut cols: Vec<Vec<Rational>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let m = super::matrix::QMatrix::from_columns(self.ambient_dim, &cols);
        let k = m.kernel();
        let vectors = k
            .basis()
            .iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (coef, row) in c[..d1].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += coef * y;
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient_dim, vectors)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Incremental reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    inner: Subspace,
}

impl EchelonBasis {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBasis { inner: Subspace::zero(ambient_dim) }
    }

    pub fn from_subspace(s: Subspace) -> Self {
        EchelonBasis { inner: s }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.inner.contains(v)
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        let s = &mut self.inner;
        assert_eq!(v.len(), s.ambient_dim, "vector length mismatch");
        for (row, &p) in s.basis.iter().zip(&s.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].recip().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in s.basis.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let c = row[lead].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        let at = s.pivots.partition_point(|&p| p < lead);
        s.pivots.insert(at, lead);
        s.basis.insert(at, v);
        true
    }

    pub fn subspace(&self) -> &Subspace {
        &self.inner
    }

    pub fn into_subspace(self) -> Subspace {
        self.inner
    }
}
