use super::cayley::CayleyAlgebra;
use super::lie::LieWithTriality;
use super::structure::StructureConstants;
use super::MalcevError;
use crate::qcore::{Frame, QMatrix, Rational, Subspace};
use serde::Serialize;

/// `o(O, n) = Der(O) ⊕ L(O₀) ⊕ R(O₀)` with a basis ordered as derivations,
/// then `L_a`, then `R_a` over the basis of `O₀`.
#[derive(Clone, Debug)]
pub struct OrthoLie {
    cayley: CayleyAlgebra,
    der: Vec<QMatrix>,
    left: Vec<QMatrix>,
    right: Vec<QMatrix>,
    frame: Frame,
    skew: Subspace,
    bracket: StructureConstants,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Der(usize),
    Left(usize),
    Right(usize),
}

/// Derivations of an algebra: the kernel of
/// `d(eᵢeⱼ) - d(eᵢ)eⱼ - eᵢd(eⱼ)` over basis pairs, with `d` flattened row-major.
pub fn derivations(sc: &StructureConstants) -> Vec<QMatrix> {
    let n = sc.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut eq = vec![vec![Rational::zero(); n * n]; n];
            for (m, c) in sc.basis_product(i, j) {
                for (k, row) in eq.iter_mut().enumerate() {
                    row[var(k, *m)] += c;
                }
            }
            for r in 0..n {
                for (k, c) in sc.basis_product(r, j) {
                    eq[*k][var(r, i)] -= c;
                }
                for (k, c) in sc.basis_product(i, r) {
                    eq[*k][var(r, j)] -= c;
                }
            }
            rows.extend(eq.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
    }
    QMatrix::from_rows(rows).kernel().basis().iter().map(|v| QMatrix::from_flat(n, n, v.clone())).collect()
}

/// `{d : dᵀN + Nd = 0}` for a symmetric form `N`, flattened row-major.
pub fn skew_space(norm: &QMatrix) -> Subspace {
    let n = norm.rows();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for p in 0..n {
        for q in p..n {
            let mut row = vec![Rational::zero(); n * n];
            for r in 0..n {
                row[var(r, p)] += &norm[(r, q)];
                row[var(r, q)] += &norm[(p, r)];
            }
            rows.push(row);
        }
    }
    QMatrix::from_rows(rows).kernel()
}

/// First basis pair where `d` fails the derivation rule.
pub fn derivation_witness(sc: &StructureConstants, d: &QMatrix) -> Option<(usize, usize)> {
    let n = sc.dim();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
        let (x, y) = (sc.basis_vector(i), sc.basis_vector(j));
        let lhs = d.mul_vec(&sc.mul(&x, &y));
        let a = sc.mul(&d.mul_vec(&x), &y);
        let b = sc.mul(&x, &d.mul_vec(&y));
        lhs.iter().zip(a.iter().zip(&b)).any(|(l, (p, q))| *l != p + q)
    })
}

pub fn ortho_lie(o: &CayleyAlgebra) -> Result<OrthoLie, MalcevError> {
    let sc = o.product();
    let der = derivations(sc);
    for d in &der {
        if let Some((i, j)) = derivation_witness(sc, d) {
            return Err(MalcevError::RelationFailure(format!("derivation basis fails on (e{i}, e{j})")));
        }
    }
    let left: Vec<QMatrix> = o.trace0().basis().iter().map(|a| sc.left_mult(a)).collect();
    let right: Vec<QMatrix> = o.trace0().basis().iter().map(|a| sc.right_mult(a)).collect();
    let flat: Vec<Vec<Rational>> = der.iter().chain(&left).chain(&right).map(|m| m.as_flat().to_vec()).collect();
    let frame = Frame::new(64, flat).ok_or(MalcevError::NotDirect)?;
    let skew = skew_space(o.norm_matrix());
    if frame.span() != skew {
        return Err(MalcevError::RelationFailure("Der ⊕ L ⊕ R differs from the skew space of the norm".into()));
    }
    let bracket = StructureConstants::in_frame(&frame, true, |u, v| {
        let (a, b) = (QMatrix::from_flat(8, 8, u.to_vec()), QMatrix::from_flat(8, 8, v.to_vec()));
        a.commutator(&b).into_flat()
    })?;
    Ok(OrthoLie { cayley: o.clone(), der, left, right, frame, skew, bracket })
}

impl OrthoLie {
    pub fn cayley(&self) -> &CayleyAlgebra {
        &self.cayley
    }

    pub fn dim(&self) -> usize {
        self.frame.len()
    }

    pub fn der(&self) -> &[QMatrix] {
        &self.der
    }

    pub fn left(&self) -> &[QMatrix] {
        &self.left
    }

    pub fn right(&self) -> &[QMatrix] {
        &self.right
    }

    pub fn skew(&self) -> &Subspace {
        &self.skew
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn part(&self, i: usize) -> Part {
        let (d, l) = (self.der.len(), self.left.len());
        if i < d {
            Part::Der(i)
        } else if i < d + l {
            Part::Left(i - d)
        } else {
            Part::Right(i - d - l)
        }
    }

    pub fn index(&self, p: Part) -> usize {
        let (d, l) = (self.der.len(), self.left.len());
        match p {
            Part::Der(i) => i,
            Part::Left(a) => d + a,
            Part::Right(a) => d + l + a,
        }
    }

    pub fn operator(&self, i: usize) -> QMatrix {
        QMatrix::from_flat(8, 8, self.frame.vectors()[i].clone())
    }

    /// Coordinates of an operator on `O`, or `None` outside `o(O, n)`.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        self.frame.coordinates(m.as_flat())
    }

    pub fn from_coordinates(&self, c: &[Rational]) -> QMatrix {
        QMatrix::from_flat(8, 8, self.frame.combine(c))
    }

    /// The linear map given by images of basis parts, as coordinate matrix.
    pub fn assemble<F>(&self, image: F) -> QMatrix
    where
        F: Fn(Part) -> Vec<(Rational, Part)>,
    {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            for (c, p) in image(self.part(j)) {
                m[(self.index(p), j)] += &c;
            }
        }
        m
    }

    /// For `d₁` in `o(O, n)`, the unique `d₂, d₃ ∈ o(O, n)` with
    /// `d₁(xy) = d₂(x)y + x d₃(y)`, solved directly on basis pairs.
    pub fn companions(&self) -> Result<(QMatrix, QMatrix), MalcevError> {
        let sc = self.cayley.product();
        let n = self.dim();
        let ops: Vec<QMatrix> = (0..n).map(|i| self.operator(i)).collect();
        let e: Vec<Vec<Rational>> = (0..8).map(|i| sc.basis_vector(i)).collect();
        let mut columns = Vec::with_capacity(2 * n);
        for x in &ops {
            let col = pairs().flat_map(|(i, j)| sc.mul(&x.mul_vec(&e[i]), &e[j])).collect();
            columns.push(col);
        }
        for x in &ops {
            let col = pairs().flat_map(|(i, j)| sc.mul(&e[i], &x.mul_vec(&e[j]))).collect();
            columns.push(col);
        }
        let system = Frame::new(8 * 64, columns).ok_or(MalcevError::CompanionsNotUnique)?;
        let mut zeta = QMatrix::zeros(n, n);
        let mut eta = QMatrix::zeros(n, n);
        for (j, d1) in ops.iter().enumerate() {
            let rhs: Vec<Rational> = pairs().flat_map(|(a, b)| d1.mul_vec(&sc.mul(&e[a], &e[b]))).collect();
            let sol = system.coordinates(&rhs).ok_or(MalcevError::CompanionsMissing(j))?;
            for i in 0..n {
                zeta[(i, j)] = sol[i].clone();
                eta[(i, j)] = sol[n + i].clone();
            }
        }
        Ok((zeta, eta))
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..8).flat_map(|i| (0..8).map(move |j| (i, j)))
}

/// The triality pair on `o(O, n)` and the companion automorphisms `ζ`, `η`.
#[derive(Clone, Debug)]
pub struct OrthoTriality {
    pub rho: QMatrix,
    pub sigma: QMatrix,
    pub zeta: QMatrix,
    pub eta: QMatrix,
    pub report: OrthoTrialityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthoTrialityReport {
    pub dim_der: usize,
    pub dim: usize,
    pub automorphisms: bool,
    pub s3_relations: bool,
    /// `ζ`, `η` from the decomposition equal the solved companion maps.
    pub companions_match: bool,
    pub rho_is_eta_zeta: bool,
    pub sigma_is_zeta_eta_zeta: bool,
}

impl OrthoTrialityReport {
    pub fn passed(&self) -> bool {
        self.automorphisms && self.s3_relations && self.companions_match && self.rho_is_eta_zeta && self.sigma_is_zeta_eta_zeta
    }
}

pub fn triality_autos_o(g: &OrthoLie) -> Result<OrthoTriality, MalcevError> {
    let one = Rational::one;
    let neg = || -Rational::one();
    let rho = g.assemble(|p| match p {
        Part::Der(_) => vec![(one(), p)],
        Part::Left(a) => vec![(one(), Part::Right(a))],
        Part::Right(a) => vec![(neg(), Part::Left(a)), (neg(), Part::Right(a))],
    });
    let sigma = g.assemble(|p| match p {
        Part::Der(_) => vec![(one(), p)],
        Part::Left(a) => vec![(neg(), Part::Right(a))],
        Part::Right(a) => vec![(neg(), Part::Left(a))],
    });
    let zeta = g.assemble(|p| match p {
        Part::Der(_) => vec![(one(), p)],
        Part::Left(a) => vec![(one(), Part::Left(a)), (one(), Part::Right(a))],
        Part::Right(a) => vec![(neg(), Part::Right(a))],
    });
    let eta = g.assemble(|p| match p {
        Part::Der(_) => vec![(one(), p)],
        Part::Left(a) => vec![(neg(), Part::Left(a))],
        Part::Right(a) => vec![(one(), Part::Left(a)), (one(), Part::Right(a))],
    });
    let (zeta_solved, eta_solved) = g.companions()?;
    let automorphisms = [&rho, &sigma, &zeta, &eta].iter().all(|m| g.bracket().automorphism_witness(m).is_none());
    let id = QMatrix::identity(g.dim());
    let s3_relations = &sigma * &sigma == id && rho.pow(3) == id && &sigma * &rho == &(&rho * &rho) * &sigma;
    let report = OrthoTrialityReport {
        dim_der: g.der().len(),
        dim: g.dim(),
        automorphisms,
        s3_relations,
        companions_match: zeta == zeta_solved && eta == eta_solved,
        rho_is_eta_zeta: &eta_solved * &zeta_solved == rho,
        sigma_is_zeta_eta_zeta: &(&zeta_solved * &eta_solved) * &zeta_solved == sigma,
    };
    Ok(OrthoTriality { rho, sigma, zeta, eta, report })
}

impl OrthoLie {
    pub fn with_triality(&self) -> Result<(LieWithTriality, OrthoTrialityReport), MalcevError> {
        let t = triality_autos_o(self)?;
        let g = LieWithTriality::new(self.bracket.clone(), t.rho, t.sigma)?;
        Ok((g, t.report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::lie::{check_lie_triality, eigen_one_criterion, eigenspace};

    fn octonion_ortho() -> OrthoLie {
        ortho_lie(&CayleyAlgebra::octonions()).unwrap()
    }

    #[test]
    fn dimensions() {
        let g = octonion_ortho();
        assert_eq!(g.der().len(), 14);
        assert_eq!(g.dim(), 28);
        assert_eq!(g.skew().dim(), 28);
        let s = ortho_lie(&CayleyAlgebra::split_octonions()).unwrap();
        assert_eq!((s.der().len(), s.dim()), (14, 28));
    }

    #[test]
    fn l_and_r_generate_everything() {
        let g = octonion_ortho();
        let seed: Vec<QMatrix> = g.left().iter().chain(g.right()).cloned().collect();
        let span = crate::qcore::bracket_closure(&seed, crate::qcore::commutator).unwrap();
        assert_eq!(&span, g.skew());
    }

    #[test]
    fn triality_pair() {
        let g = octonion_ortho();
        let t = triality_autos_o(&g).unwrap();
        assert!(t.report.passed(), "{:?}", t.report);
        let e1 = |p| g.index(p);
        // ηζ(L_{e1}) = R_{e1}, ηζ(R_{e1}) = -T_{e1}
        let ez = &t.eta * &t.zeta;
        let l1 = ez.column(e1(Part::Left(0)));
        let r1 = ez.column(e1(Part::Right(0)));
        assert_eq!(g.from_coordinates(&l1), g.right()[0]);
        assert_eq!(g.from_coordinates(&r1), -&(&g.left()[0] + &g.right()[0]));
    }

    #[test]
    fn triality_and_eigen_one() {
        let g = octonion_ortho();
        let (lie, _) = g.with_triality().unwrap();
        let rep = check_lie_triality(&lie);
        assert!(rep.holds && rep.forms_agree);
        let e = eigen_one_criterion(&lie);
        assert!(e.included);
        assert_eq!(e.e1_rho_dim, 14);
        let der: Vec<Vec<Rational>> = (0..14).map(|i| crate::qcore::unit_vector(28, i)).collect();
        assert_eq!(eigenspace(lie.rho(), &Rational::one()), Subspace::from_spanning(28, der));
    }

    #[test]
    fn broken_sigma_fails_both() {
        let g = octonion_ortho();
        let (lie, _) = g.with_triality().unwrap();
        let mut sigma = lie.sigma().clone();
        sigma[(0, 0)] = -Rational::one();
        let broken = LieWithTriality::unchecked(lie.bracket().clone(), lie.rho().clone(), sigma).unwrap();
        assert!(lie.bracket().automorphism_witness(broken.sigma()).is_some());
        assert!(!check_lie_triality(&broken).holds);
        assert!(!eigen_one_criterion(&broken).included);
    }
}
