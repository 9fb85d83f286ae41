use super::cayley::CayleyAlgebra;
use super::lie::{check_lie_triality, LieWithTriality};
use super::ortho::{ortho_lie, OrthoLie, OrthoTrialityReport};
use super::structure::StructureConstants;
use super::MalcevError;
use crate::qcore::{bracket_closure_traced, commutator, Frame, Origin, QMatrix, Rational, Subspace};
use serde::Serialize;

/// `Lie(m)` for `m = O₀`, realized by the operators `λ_a = L_a`, `ρ_a = R_a`
/// on the Cayley algebra.
#[derive(Clone, Debug)]
pub struct LieOfMalcev {
    ortho: OrthoLie,
    lie: LieWithTriality,
    malcev: StructureConstants,
    lambda: Vec<QMatrix>,
    rho_ops: Vec<QMatrix>,
    zeta: QMatrix,
    eta: QMatrix,
    report: LieOfMalcevReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct LieOfMalcevReport {
    pub dim_m: usize,
    pub dim_lie: usize,
    pub closure_is_ortho: bool,
    pub linear: bool,
    pub lambda_lambda: bool,
    pub rho_rho: bool,
    pub lambda_rho: bool,
    pub dim_lie_minus: usize,
    pub dim_lie_plus: usize,
    pub t_to_a_iso: bool,
    pub plus_fixed_by_sigma: bool,
    pub zeta_eta_automorphisms: bool,
    /// `ηζ` and `ζηζ` from generator images equal the decomposition pair.
    pub pair_matches: bool,
    pub sigma_lambda: bool,
    pub rho_lambda: bool,
    pub triality: bool,
    pub ortho: OrthoTrialityReport,
}

impl LieOfMalcevReport {
    pub fn relations_hold(&self) -> bool {
        self.linear && self.lambda_lambda && self.rho_rho && self.lambda_rho
    }

    pub fn passed(&self) -> bool {
        self.closure_is_ortho
            && self.relations_hold()
            && self.dim_lie_minus == self.dim_m
            && self.dim_lie_plus + self.dim_lie_minus == self.dim_lie
            && self.t_to_a_iso
            && self.plus_fixed_by_sigma
            && self.zeta_eta_automorphisms
            && self.pair_matches
            && self.sigma_lambda
            && self.rho_lambda
            && self.triality
            && self.ortho.passed()
    }
}

pub fn lie_of_malcev(o: &CayleyAlgebra) -> Result<LieOfMalcev, MalcevError> {
    let ortho = ortho_lie(o)?;
    let (lie, ortho_report) = ortho.with_triality()?;
    let sc = o.product();
    let m_basis: Vec<Vec<Rational>> = o.trace0().basis().to_vec();
    let k = m_basis.len();
    let malcev = o.traceless_malcev();
    let lambda: Vec<QMatrix> = m_basis.iter().map(|a| sc.left_mult(a)).collect();
    let rho_ops: Vec<QMatrix> = m_basis.iter().map(|a| sc.right_mult(a)).collect();

    let combine = |ops: &[QMatrix], c: &[Rational]| {
        let mut acc = QMatrix::zeros(8, 8);
        for (x, m) in c.iter().zip(ops) {
            acc = &acc + &m.scale(x);
        }
        acc
    };
    let lam = |c: &[Rational]| combine(&lambda, c);
    let rh = |c: &[Rational]| combine(&rho_ops, c);
    let br = |i: usize, j: usize| malcev.mul(&malcev.basis_vector(i), &malcev.basis_vector(j));
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);

    let seed: Vec<QMatrix> = lambda.iter().chain(&rho_ops).cloned().collect();
    let (elements, origins, span) = bracket_closure_traced(&seed, commutator).map_err(|e| MalcevError::Qcore(e.to_string()))?;
    let closure_is_ortho = &span == ortho.skew();

    let (alpha, beta) = (Rational::from_integer(2), Rational::from_integer(-3));
    let mut linear = true;
    let (mut ll, mut rr, mut lr) = (true, true, true);
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (&m_basis[i], &m_basis[j]);
            let ab: Vec<Rational> = a.iter().zip(b).map(|(x, y)| &alpha * x + &beta * y).collect();
            let ab_coords = o.trace0().coordinates(&ab).expect("in O₀");
            let lin_l = &lambda[i].scale(&alpha) + &lambda[j].scale(&beta);
            let lin_r = &rho_ops[i].scale(&alpha) + &rho_ops[j].scale(&beta);
            linear &= sc.left_mult(&ab) == lin_l && lam(&ab_coords) == lin_l;
            linear &= sc.right_mult(&ab) == lin_r && rh(&ab_coords) == lin_r;
            let c = br(i, j);
            let l_r = lambda[i].commutator(&rho_ops[j]);
            ll &= lambda[i].commutator(&lambda[j]) == &lam(&c) - &l_r.scale(&two);
            rr &= rho_ops[i].commutator(&rho_ops[j]) == &(-&rh(&c)) - &l_r.scale(&two);
            lr &= l_r == rho_ops[i].commutator(&lambda[j]);
        }
    }

    let t: Vec<QMatrix> = (0..k).map(|i| &lambda[i] + &rho_ops[i]).collect();
    let ad: Vec<QMatrix> = (0..k).map(|i| &lambda[i] - &rho_ops[i]).collect();
    let flat = |m: &QMatrix| m.as_flat().to_vec();
    let minus = Subspace::from_spanning(64, t.iter().map(flat).collect());
    let mut plus_gens: Vec<QMatrix> = ad.clone();
    for i in 0..k {
        for j in 0..k {
            let d = &lam(&br(i, j)) - &rh(&br(i, j));
            plus_gens.push(&d - &lambda[i].commutator(&rho_ops[j]).scale(&three));
        }
    }
    let plus = Subspace::from_spanning(64, plus_gens.iter().map(flat).collect());
    let unit = o.unit();
    let half = Rational::new(1, 2);
    let t_to_a_iso = minus.dim() == k
        && t.iter().zip(&m_basis).all(|(ti, a)| ti.mul_vec(&unit).iter().map(|x| x * &half).collect::<Vec<_>>() == *a);
    let sigma_op = |m: &QMatrix| ortho.from_coordinates(&lie.sigma().mul_vec(&ortho.coordinates(m).expect("in o(O,n)")));
    let plus_fixed_by_sigma = plus_gens.iter().all(|m| sigma_op(m) == *m) && plus.intersection(&minus).dim() == 0;

    // ζ, η defined on generators and carried along the bracket tree
    let extend = |gen_image: &dyn Fn(usize) -> QMatrix| -> Vec<QMatrix> {
        let mut img: Vec<QMatrix> = Vec::with_capacity(elements.len());
        for o in &origins {
            let m = match *o {
                Origin::Seed(s) => gen_image(s),
                Origin::Bracket(a, b) => img[a].commutator(&img[b]),
            };
            img.push(m);
        }
        img
    };
    let zeta_img = extend(&|s| if s < k { t[s].clone() } else { -&rho_ops[s - k] });
    let eta_img = extend(&|s| if s < k { -&lambda[s] } else { t[s - k].clone() });
    let tree = Frame::new(64, elements.iter().map(flat).collect()).ok_or(MalcevError::NotDirect)?;
    let to_ortho = |imgs: &[QMatrix]| -> Option<QMatrix> {
        // the map sends tree element i to imgs[i]; express it in the o(O,n) basis
        let n = ortho.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            let c = tree.coordinates(ortho.operator(j).as_flat())?;
            let mut acc = QMatrix::zeros(8, 8);
            for (x, im) in c.iter().zip(imgs) {
                acc = &acc + &im.scale(x);
            }
            let col = ortho.coordinates(&acc)?;
            for i in 0..n {
                m[(i, j)] = col[i].clone();
            }
        }
        Some(m)
    };
    let zeta = to_ortho(&zeta_img).ok_or(MalcevError::NotClosed)?;
    let eta = to_ortho(&eta_img).ok_or(MalcevError::NotClosed)?;
    let zeta_eta_automorphisms =
        lie.bracket().automorphism_witness(&zeta).is_none() && lie.bracket().automorphism_witness(&eta).is_none();
    let pair_matches = &eta * &zeta == *lie.rho() && &(&zeta * &eta) * &zeta == *lie.sigma();

    let rho_op = |m: &QMatrix| ortho.from_coordinates(&lie.rho().mul_vec(&ortho.coordinates(m).expect("in o(O,n)")));
    let sigma_lambda = (0..k).all(|i| sigma_op(&lambda[i]) == -&rho_ops[i]);
    let rho_lambda = (0..k).all(|i| rho_op(&lambda[i]) == rho_ops[i]);

    let report = LieOfMalcevReport {
        dim_m: k,
        dim_lie: span.dim(),
        closure_is_ortho,
        linear,
        lambda_lambda: ll,
        rho_rho: rr,
        lambda_rho: lr,
        dim_lie_minus: minus.dim(),
        dim_lie_plus: plus.dim(),
        t_to_a_iso,
        plus_fixed_by_sigma,
        zeta_eta_automorphisms,
        pair_matches,
        sigma_lambda,
        rho_lambda,
        triality: check_lie_triality(&lie).holds,
        ortho: ortho_report,
    };
    if !report.relations_hold() {
        return Err(MalcevError::RelationFailure(format!("{report:?}")));
    }
    Ok(LieOfMalcev { ortho, lie, malcev, lambda, rho_ops, zeta, eta, report })
}

impl LieOfMalcev {
    pub fn ortho(&self) -> &OrthoLie {
        &self.ortho
    }

    pub fn lie(&self) -> &LieWithTriality {
        &self.lie
    }

    /// The Malcev algebra `O₀` in the basis of the traceless subspace.
    pub fn malcev(&self) -> &StructureConstants {
        &self.malcev
    }

    pub fn lambda(&self) -> &[QMatrix] {
        &self.lambda
    }

    pub fn rho_ops(&self) -> &[QMatrix] {
        &self.rho_ops
    }

    pub fn zeta(&self) -> &QMatrix {
        &self.zeta
    }

    pub fn eta(&self) -> &QMatrix {
        &self.eta
    }

    pub fn report(&self) -> &LieOfMalcevReport {
        &self.report
    }

    /// Coordinates of `T_a = λ_a + ρ_a` in the basis of the Lie algebra.
    pub fn t_coords(&self, a: usize) -> Vec<Rational> {
        self.ortho.coordinates(&(&self.lambda[a] + &self.rho_ops[a])).expect("T_a lies in o(O,n)")
    }
}
