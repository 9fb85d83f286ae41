//! Exact rational scalars, dense matrices and canonical subspaces.

mod frame;
mod matrix;
mod rational;
mod subspace;

pub use frame::Frame;
pub use matrix::QMatrix;
pub use rational::{ParseRationalError, Rational};
pub use subspace::{unit_vector, EchelonBasis, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QcoreError {
    #[error("dimension mismatch: expected {expected}x{expected}, found {rows}x{cols}")]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
}

/// The commutator bracket `[a, b] = ab - ba`.
pub fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.commutator(b)
}

/// Smallest subspace of `n×n` matrices (flattened row-major) that contains
/// `seed` and is closed under `bracket`.
///
/// Brackets of every new basis element against all elements collected so far
/// (itself included) are added until no new direction appears.
pub fn bracket_closure<F>(seed: &[QMatrix], bracket: F) -> Result<Subspace, QcoreError>
where
    F: Fn(&QMatrix, &QMatrix) -> QMatrix,
{
    bracket_closure_elements(seed, bracket).map(|(_, span)| span)
}

/// Like [`bracket_closure`], but also returns matrices spanning the closure
/// (seed elements first, in the order they were found to be new).
pub fn bracket_closure_elements<F>(
    seed: &[QMatrix],
    bracket: F,
) -> Result<(Vec<QMatrix>, Subspace), QcoreError>
where
    F: Fn(&QMatrix, &QMatrix) -> QMatrix,
{
    bracket_closure_traced(seed, bracket).map(|(els, _, span)| (els, span))
}

/// How an element of a traced closure arose.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Index into the seed list.
    Seed(usize),
    /// Bracket of two earlier elements.
    Bracket(usize, usize),
}

/// Like [`bracket_closure_elements`], recording for each element whether it is
/// a seed or the bracket of two earlier elements.
pub fn bracket_closure_traced<F>(
    seed: &[QMatrix],
    bracket: F,
) -> Result<(Vec<QMatrix>, Vec<Origin>, Subspace), QcoreError>
where
    F: Fn(&QMatrix, &QMatrix) -> QMatrix,
{
    let n = seed.first().map_or(0, QMatrix::rows);
    for m in seed {
        if m.rows() != n || m.cols() != n {
            return Err(QcoreError::DimensionMismatch { expected: n, rows: m.rows(), cols: m.cols() });
        }
    }
    let mut span = EchelonBasis::new(n * n);
    let mut elements: Vec<QMatrix> = Vec::new();
    let mut origins = Vec::new();
    for (i, m) in seed.iter().enumerate() {
        if span.insert(m.as_flat().to_vec()) {
            elements.push(m.clone());
            origins.push(Origin::Seed(i));
        }
    }
    let mut next = 0;
    while next < elements.len() {
        for j in 0..=next {
            let b = bracket(&elements[next], &elements[j]);
            if span.insert(b.as_flat().to_vec()) {
                elements.push(b);
                origins.push(Origin::Bracket(next, j));
            }
        }
        next += 1;
    }
    Ok((elements, origins, span.into_subspace()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_matrix_closes_to_line() {
        let m = QMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let s = bracket_closure(&[m], commutator).unwrap();
        assert_eq!(s.dim(), 1);
    }

    /// Brute-force oracle: span of all commutator words of length <= 4 in
    /// the two seeds.
    fn iterated_commutator_span(a: &QMatrix, b: &QMatrix) -> Subspace {
        let mut level = vec![a.clone(), b.clone()];
        let mut all = level.clone();
        for _ in 0..3 {
            let mut nxt = Vec::new();
            for x in &level {
                for y in [a, b] {
                    nxt.push(x.commutator(y));
                }
            }
            all.extend(nxt.iter().cloned());
            level = nxt;
        }
        Subspace::from_spanning(4, all.iter().map(|m| m.as_flat().to_vec()).collect())
    }

    #[test]
    fn two_generic_matrices_generate_gl2() {
        let a = QMatrix::from_i64_rows(&[&[1, 2], &[0, 3]]);
        let b = QMatrix::from_i64_rows(&[&[0, 1], &[5, -2]]);
        let s = bracket_closure(&[a.clone(), b.clone()], commutator).unwrap();
        let oracle = iterated_commutator_span(&a, &b);
        assert_eq!(oracle.dim(), 4);
        assert_eq!(s, oracle);
    }

    #[test]
    fn rejects_mismatched_sizes() {
        let a = QMatrix::identity(2);
        let b = QMatrix::identity(3);
        assert!(matches!(
            bracket_closure(&[a, b], commutator),
            Err(QcoreError::DimensionMismatch { expected: 2, .. })
        ));
    }

    #[test]
    fn closure_is_bracket_closed() {
        let a = QMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = QMatrix::from_i64_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let (elems, s) = bracket_closure_elements(&[a, b], commutator).unwrap();
        assert_eq!(s.dim(), 3);
        for x in &elems {
            for y in &elems {
                assert!(s.contains(x.commutator(y).as_flat()));
            }
        }
    }
}
