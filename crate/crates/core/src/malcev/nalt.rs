use super::structure::StructureConstants;
use crate::qcore::{QMatrix, Rational, Subspace};

/// `Nalt(A) = { a | (a,x,y) = -(x,a,y) = (x,y,a) for all x, y }`, solved as
/// a linear system over basis pairs.
pub fn nalt(sc: &StructureConstants) -> Subspace {
    let n = sc.dim();
    let e = |i| sc.basis_vector(i);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            // columns indexed by the unknown coefficients of a
            let first: Vec<Vec<Rational>> = (0..n)
                .map(|a| add(&sc.associator(&e(a), &e(x), &e(y)), &sc.associator(&e(x), &e(a), &e(y))))
                .collect();
            let second: Vec<Vec<Rational>> = (0..n)
                .map(|a| add(&sc.associator(&e(x), &e(a), &e(y)), &sc.associator(&e(x), &e(y), &e(a))))
                .collect();
            for cond in [first, second] {
                for k in 0..n {
                    let row: Vec<Rational> = (0..n).map(|a| cond[a][k].clone()).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    QMatrix::from_rows(rows).kernel()
}

/// First basis 4-tuple `(x, w, y, z)` violating the linearized Malcev identity
/// `J(x,y,[w,z]) + J(w,y,[x,z]) = [J(x,y,z),w] + [J(w,y,z),x]`.
pub fn malcev_witness(sc: &StructureConstants) -> Option<[usize; 4]> {
    let n = sc.dim();
    let e: Vec<Vec<Rational>> = (0..n).map(|i| sc.basis_vector(i)).collect();
    let br: Vec<Vec<Vec<Rational>>> = (0..n).map(|i| (0..n).map(|j| sc.mul(&e[i], &e[j])).collect()).collect();
    let jac: Vec<Vec<Vec<Vec<Rational>>>> = (0..n)
        .map(|x| (0..n).map(|y| (0..n).map(|z| sc.jacobian(&e[x], &e[y], &e[z])).collect()).collect())
        .collect();
    for x in 0..n {
        for w in x..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = add(&sc.jacobian(&e[x], &e[y], &br[w][z]), &sc.jacobian(&e[w], &e[y], &br[x][z]));
                    let rhs = add(&sc.mul(&jac[x][y][z], &e[w]), &sc.mul(&jac[w][y][z], &e[x]));
                    if lhs != rhs {
                        return Some([x, w, y, z]);
                    }
                }
            }
        }
    }
    None
}

pub fn check_malcev(sc: &StructureConstants) -> bool {
    sc.anticommutativity_witness().is_none() && malcev_witness(sc).is_none()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The 2-dimensional algebra `uu = v`, `uv = u`, `vu = vv = 0`, which is not
/// flexible: `(u,v,u) = v`.
pub fn nonflexible_plane() -> StructureConstants {
    let mut sc = StructureConstants::zero(2, false);
    sc.set(0, 0, 1, Rational::one());
    sc.set(0, 1, 0, Rational::one());
    sc
}
