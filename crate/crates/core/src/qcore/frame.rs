use super::matrix::QMatrix;
use super::rational::Rational;
use super::subspace::Subspace;

/// An ordered, linearly independent list of vectors with exact coordinate
/// lookup.
#[derive(Clone, Debug)]
pub struct Frame {
    vectors: Vec<Vec<Rational>>,
    rows: Vec<usize>,
    solver: QMatrix,
}

impl Frame {
    /// `None` when the vectors are dependent.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Option<Frame> {
        let k = vectors.len();
        assert!(vectors.iter().all(|v| v.len() == ambient_dim), "vector length mismatch");
        if k == 0 {
            return Some(Frame { vectors, rows: Vec::new(), solver: QMatrix::zeros(0, 0) });
        }
        let mut t = QMatrix::from_rows(vectors.clone());
        let rows = t.rref_in_place();
        if rows.len() < k {
            return None;
        }
        let square = QMatrix::from_rows(
            rows.iter().map(|&r| vectors.iter().map(|v| v[r].clone()).collect()).collect(),
        );
        let solver = square.inverse()?;
        Some(Frame { vectors, rows, solver })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let n = self.vectors.first().map_or(0, Vec::len);
        let mut out = vec![Rational::zero(); n];
        for (c, v) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if self.vectors.is_empty() {
            return v.iter().all(Rational::is_zero).then(Vec::new);
        }
        let picked: Vec<Rational> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let coords = self.solver.mul_vec(&picked);
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn span(&self) -> Subspace {
        let n = self.vectors.first().map_or(0, Vec::len);
        Subspace::from_spanning(n, self.vectors.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn coordinates_round_trip() {
        let f = Frame::new(3, vec![q(&[1, 2, 0]), q(&[0, 1, 1])]).unwrap();
        let v = q(&[2, 1, -3]);
        assert_eq!(f.coordinates(&v), Some(q(&[2, -3])));
        assert_eq!(f.coordinates(&q(&[1, 0, 0])), None);
    }

    #[test]
    fn dependent_vectors_rejected() {
        assert!(Frame::new(2, vec![q(&[1, 2]), q(&[2, 4])]).is_none());
    }
}
