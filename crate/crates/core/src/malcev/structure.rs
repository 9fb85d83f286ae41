use super::MalcevError;
use crate::qcore::{Frame, QMatrix, Rational, Subspace};
use serde::{Deserialize, Serialize};

/// Bilinear product on `Q^dim` given on basis pairs: `eᵢ·eⱼ = Σ c[i][j][k] eₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
    anticommutative: bool,
}

impl StructureConstants {
    pub fn zero(dim: usize, anticommutative: bool) -> Self {
        StructureConstants { dim, table: vec![Vec::new(); dim * dim], anticommutative }
    }

    /// Table from dense basis products `f(i, j)`.
    pub fn from_fn<F>(dim: usize, anticommutative: bool, f: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<Rational>,
    {
        let mut sc = Self::zero(dim, anticommutative);
        for i in 0..dim {
            for j in 0..dim {
                sc.table[i * dim + j] = sparse(&f(i, j));
            }
        }
        sc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_anticommutative(&self) -> bool {
        self.anticommutative
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j).iter().find(|(l, _)| *l == k).map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Sets `c[i][j][k]`; for brackets also sets `c[j][i][k] = -value`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.set_one(i, j, k, value.clone());
        if self.anticommutative && i != j {
            self.set_one(j, i, k, -value);
        }
    }

    fn set_one(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let entry = &mut self.table[i * self.dim + j];
        entry.retain(|(l, _)| *l != k);
        if !value.is_zero() {
            entry.push((k, value));
            entry.sort_by_key(|(l, _)| *l);
        }
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        crate::qcore::unit_vector(self.dim, i)
    }

    /// First basis pair with `eᵢeⱼ ≠ -eⱼeᵢ`.
    pub fn anticommutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).find(|&(i, j)| {
            let a = self.mul(&self.basis_vector(i), &self.basis_vector(j));
            let b = self.mul(&self.basis_vector(j), &self.basis_vector(i));
            a.iter().zip(&b).any(|(x, y)| !(x + y).is_zero())
        })
    }

    pub fn jacobian(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let a = self.mul(&self.mul(x, y), z);
        let b = self.mul(&self.mul(y, z), x);
        let c = self.mul(&self.mul(z, x), y);
        add3(&a, &b, &c)
    }

    /// First basis triple with nonzero Jacobian.
    pub fn jacobi_witness(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |t| self.basis_vector(t);
                    if self.jacobian(&e(i), &e(j), &e(k)).iter().any(|c| !c.is_zero()) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn associator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let a = self.mul(&self.mul(x, y), z);
        let b = self.mul(x, &self.mul(y, z));
        a.iter().zip(&b).map(|(p, q)| p - q).collect()
    }

    /// The commutator bracket `xy - yx`.
    pub fn commutator_algebra(&self) -> StructureConstants {
        StructureConstants::from_fn(self.dim, true, |i, j| {
            let (a, b) = (self.basis_vector(i), self.basis_vector(j));
            let p = self.mul(&a, &b);
            let q = self.mul(&b, &a);
            p.iter().zip(&q).map(|(x, y)| x - y).collect()
        })
    }

    /// The product restricted to `sub`, in the coordinates of its stored basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<StructureConstants, MalcevError> {
        let basis = sub.basis();
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for u in basis {
            for v in basis {
                let p = self.mul(u, v);
                table.push(sub.coordinates(&p).ok_or(MalcevError::NotClosed)?);
            }
        }
        let d = basis.len();
        Ok(StructureConstants::from_fn(d, self.anticommutative, |i, j| table[i * d + j].clone()))
    }

    /// The product carried to the coordinates of `frame`.
    pub fn in_frame<F>(frame: &Frame, anticommutative: bool, mul: F) -> Result<StructureConstants, MalcevError>
    where
        F: Fn(&[Rational], &[Rational]) -> Vec<Rational>,
    {
        let vs = frame.vectors();
        let d = vs.len();
        let mut table = Vec::with_capacity(d * d);
        for u in vs {
            for v in vs {
                table.push(frame.coordinates(&mul(u, v)).ok_or(MalcevError::NotClosed)?);
            }
        }
        Ok(StructureConstants::from_fn(d, anticommutative, |i, j| table[i * d + j].clone()))
    }

    /// Left multiplication `y ↦ x·y` as a matrix.
    pub fn left_mult(&self, x: &[Rational]) -> QMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        QMatrix::from_columns(self.dim, &cols)
    }

    /// Right multiplication `y ↦ y·x` as a matrix.
    pub fn right_mult(&self, x: &[Rational]) -> QMatrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        QMatrix::from_columns(self.dim, &cols)
    }

    /// Direct sum; the second summand's basis follows the first.
    pub fn direct_sum(&self, other: &StructureConstants) -> StructureConstants {
        let (m, n) = (self.dim, other.dim);
        let mut sc = StructureConstants::zero(m + n, self.anticommutative && other.anticommutative);
        for i in 0..m {
            for j in 0..m {
                sc.table[i * (m + n) + j] = self.basis_product(i, j).to_vec();
            }
        }
        for i in 0..n {
            for j in 0..n {
                sc.table[(m + i) * (m + n) + m + j] =
                    other.basis_product(i, j).iter().map(|(k, c)| (m + k, c.clone())).collect();
            }
        }
        sc
    }

    /// Whether `m` preserves the product: `m(xy) = m(x)m(y)` on basis pairs.
    pub fn automorphism_witness(&self, m: &QMatrix) -> Option<(usize, usize)> {
        let n = self.dim;
        let images: Vec<Vec<Rational>> = (0..n).map(|i| m.column(i)).collect();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
            let lhs = m.mul_vec(&self.mul(&self.basis_vector(i), &self.basis_vector(j)));
            lhs != self.mul(&images[i], &images[j])
        })
    }

    pub fn from_json(text: &str) -> Result<StructureConstants, MalcevError> {
        let raw: ScJson = serde_json::from_str(text).map_err(|e| MalcevError::Json(e.to_string()))?;
        raw.into_constants()
    }

    pub fn to_json_value(&self) -> ScJson {
        let mut entries = Vec::new();
        for i in 0..self.dim {
            let start = if self.anticommutative { i + 1 } else { 0 };
            for j in start..self.dim {
                let p = self.basis_product(i, j);
                if !p.is_empty() {
                    entries.push((i + 1, j + 1, p.iter().map(|(k, c)| (k + 1, c.clone())).collect()));
                }
            }
        }
        if self.anticommutative {
            ScJson { dim: self.dim, bracket: Some(entries), product: None }
        } else {
            ScJson { dim: self.dim, bracket: None, product: Some(entries) }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

type Entry = (usize, usize, Vec<(usize, Rational)>);

/// Structure constants as JSON, indices 1-based. A `bracket` table lists
/// pairs `i < j` and is completed by anticommutativity; a `product` table
/// lists every nonzero pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<Entry>>,
}

impl ScJson {
    pub fn into_constants(self) -> Result<StructureConstants, MalcevError> {
        let (entries, anti) = match (self.bracket, self.product) {
            (Some(b), None) => (b, true),
            (None, Some(p)) => (p, false),
            _ => return Err(MalcevError::Json("exactly one of \"bracket\" or \"product\" is required".into())),
        };
        let n = self.dim;
        let mut sc = StructureConstants::zero(n, anti);
        let check = |x: usize| {
            if x == 0 || x > n {
                Err(MalcevError::Json(format!("index {x} out of range 1..={n}")))
            } else {
                Ok(x - 1)
            }
        };
        for (i, j, terms) in entries {
            let (i, j) = (check(i)?, check(j)?);
            if anti && i == j && terms.iter().any(|(_, c)| !c.is_zero()) {
                return Err(MalcevError::Json(format!("bracket [e{0}, e{0}] must vanish", i + 1)));
            }
            for (k, c) in terms {
                let k = check(k)?;
                let prev = sc.coefficient(i, j, k);
                sc.set(i, j, k, prev + c);
            }
        }
        Ok(sc)
    }
}

fn sparse(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

fn add3(a: &[Rational], b: &[Rational], c: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).zip(c).map(|((x, y), z)| x + y + z.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::lie::sl2;

    #[test]
    fn json_round_trip() {
        let s = sl2();
        let back = StructureConstants::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_completes_anticommutativity() {
        let text = r#"{"dim": 3, "bracket": [[1, 2, [[3, "1"]]], [3, 1, [[1, 2]]], [3, 2, [[2, "-2"]]]]}"#;
        let s = StructureConstants::from_json(text).unwrap();
        assert_eq!(s, sl2());
        assert_eq!(s.coefficient(1, 0, 2), Rational::from_integer(-1));
    }

    #[test]
    fn json_rejects_bad_index() {
        let text = r#"{"dim": 2, "bracket": [[1, 3, [[1, "1"]]]]}"#;
        assert!(matches!(StructureConstants::from_json(text), Err(MalcevError::Json(_))));
    }

    #[test]
    fn sl2_is_lie() {
        let s = sl2();
        assert_eq!(s.anticommutativity_witness(), None);
        assert_eq!(s.jacobi_witness(), None);
    }
}
