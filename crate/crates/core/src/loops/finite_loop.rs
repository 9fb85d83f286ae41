use super::perm::Perm;
use super::LoopError;
use serde::Serialize;

/// A finite loop given by its Cayley table, with the unit at index 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteLoop {
    n: usize,
    table: Vec<u32>,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
}

impl FiniteLoop {
    /// Validates a 0-based Cayley table.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, LoopError> {
        let n = rows.len();
        if n == 0 {
            return Err(LoopError::Empty);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(LoopError::NotSquare { row: i + 1, len: r.len(), expected: n });
            }
            for (j, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(LoopError::EntryOutOfRange { row: i + 1, col: j + 1, value: v + 1 });
                }
            }
        }
        for (i, r) in rows.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in r {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(LoopError::NotLatinRow { row: i + 1, value: v + 1 });
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for r in &rows {
                if std::mem::replace(&mut seen[r[j]], true) {
                    return Err(LoopError::NotLatinColumn { col: j + 1, value: r[j] + 1 });
                }
            }
        }
        let is_unit = |e: usize| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x);
        if !is_unit(0) {
            return match (1..n).find(|&e| is_unit(e)) {
                Some(e) => Err(LoopError::UnitNotFirst { unit: e + 1 }),
                None => Err(LoopError::NoUnit),
            };
        }
        let table: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
        let mut ldiv = vec![0u32; n * n];
        let mut rdiv = vec![0u32; n * n];
        for a in 0..n {
            for x in 0..n {
                let p = table[a * n + x] as usize;
                ldiv[a * n + p] = x as u32;
                rdiv[p * n + x] = a as u32;
            }
        }
        Ok(FiniteLoop { n, table, ldiv, rdiv })
    }

    /// Builds the loop `{0..n}` with product `f`, validating the result.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, LoopError> {
        Self::from_table((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// `a \ b`, the unique `x` with `a·x = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.n + b] as usize
    }

    /// `a / b`, the unique `x` with `x·b = a`.
    #[inline]
    pub fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.mul(i, j)).collect()).collect()
    }

    /// The two-sided inverse of `x`, if left and right inverses agree.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let r = self.ldiv(x, 0);
        (self.rdiv(0, x) == r).then_some(r)
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse(x).expect("element without a two-sided inverse")
    }

    pub fn left_mult(&self, a: usize) -> Perm {
        Perm::from_fn(self.n, |y| self.mul(a, y)).expect("Latin row")
    }

    pub fn right_mult(&self, a: usize) -> Perm {
        Perm::from_fn(self.n, |y| self.mul(y, a)).expect("Latin column")
    }

    /// `x^k` computed as left-normed powers; well defined in power-associative loops.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First triple `(x,y,z)` with `(xy)z ≠ x(yz)`.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Elements of the subloop generated by `gens`.
    pub fn subloop(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut elems = vec![0];
        for &g in gens {
            if !std::mem::replace(&mut inside[g], true) {
                elems.push(g);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let cur = elems.clone();
            for &a in &cur {
                for &b in &cur {
                    for c in [self.mul(a, b), self.ldiv(a, b), self.rdiv(a, b)] {
                        if !std::mem::replace(&mut inside[c], true) {
                            elems.push(c);
                            changed = true;
                        }
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// A small generating set, chosen greedily by index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = self.subloop(&gens);
        for x in 0..self.n {
            if covered.binary_search(&x).is_err() {
                gens.push(x);
                covered = self.subloop(&gens);
            }
        }
        gens
    }

    /// Checks that `f` (indexed by elements of `self`) is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &FiniteLoop, f: &[usize]) -> bool {
        self.n == other.n
            && f.len() == self.n
            && Perm::from_images(f.to_vec()).is_some()
            && (0..self.n).all(|a| (0..self.n).all(|b| f[self.mul(a, b)] == other.mul(f[a], f[b])))
    }

    /// Searches for an isomorphism `self → other` by assigning images to a
    /// generating set and propagating through products.
    pub fn find_isomorphism(&self, other: &FiniteLoop) -> Option<Vec<usize>> {
        if self.n != other.n || self.is_commutative() != other.is_commutative() {
            return None;
        }
        let gens = self.generators();
        let mut choice = vec![0usize; gens.len()];
        self.iso_search(other, &gens, 0, &mut choice)
    }

    fn iso_search(&self, other: &FiniteLoop, gens: &[usize], k: usize, choice: &mut Vec<usize>) -> Option<Vec<usize>> {
        if k == gens.len() {
            let f = self.extend_hom(other, gens, choice)?;
            return self.is_isomorphism(other, &f).then_some(f);
        }
        for y in 1..other.n {
            if choice[..k].contains(&y) {
                continue;
            }
            choice[k] = y;
            if let Some(f) = self.iso_search(other, gens, k + 1, choice) {
                return Some(f);
            }
        }
        None
    }

    fn extend_hom(&self, other: &FiniteLoop, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut f = vec![UNSET; self.n];
        f[0] = 0;
        let mut known = vec![0];
        for (&g, &y) in gens.iter().zip(images) {
            if f[g] != UNSET && f[g] != y {
                return None;
            }
            if f[g] == UNSET {
                f[g] = y;
                known.push(g);
            }
        }
        let mut i = 0;
        while i < known.len() {
            for j in 0..=i {
                for (a, b) in [(known[i], known[j]), (known[j], known[i])] {
                    let c = self.mul(a, b);
                    let fc = other.mul(f[a], f[b]);
                    if f[c] == UNSET {
                        f[c] = fc;
                        known.push(c);
                    } else if f[c] != fc {
                        return None;
                    }
                }
            }
            i += 1;
        }
        (known.len() == self.n).then_some(f)
    }
}

impl std::fmt::Debug for FiniteLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLoop").field("order", &self.n).finish()
    }
}

/// Outcome of one identity scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// 1-based elements of the first failing instance.
    pub witness: Option<Vec<usize>>,
}

impl IdentityCheck {
    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        IdentityCheck {
            name: name.into(),
            passed: witness.is_none(),
            witness: witness.map(|w| w.into_iter().map(|i| i + 1).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub loop_id: String,
    pub checks: Vec<IdentityCheck>,
}

impl LoopReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn scan3(n: usize, holds: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for x in 0..n {
            for y in 0..n {
                if !holds(a, x, y) {
                    return Some(vec![a, x, y]);
                }
            }
        }
    }
    None
}

/// Scans the left, middle and right Moufang identities independently.
/// Witnesses are `(a, x, y)`.
pub fn check_moufang(q: &FiniteLoop, loop_id: &str) -> LoopReport {
    let m = |a, b| q.mul(a, b);
    let n = q.order();
    let left = scan3(n, |a, x, y| m(a, m(x, m(a, y))) == m(m(m(a, x), a), y));
    let middle = scan3(n, |a, x, y| m(m(a, m(x, y)), a) == m(m(a, x), m(y, a)));
    let right = scan3(n, |a, x, y| m(m(m(x, a), y), a) == m(x, m(a, m(y, a))));
    LoopReport {
        loop_id: loop_id.to_string(),
        checks: vec![
            IdentityCheck::from_witness("left_moufang", left),
            IdentityCheck::from_witness("middle_moufang", middle),
            IdentityCheck::from_witness("right_moufang", right),
        ],
    }
}

pub fn is_moufang(q: &FiniteLoop) -> bool {
    check_moufang(q, "").passed()
}

/// The operators attached to one element, all acting on the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultOps {
    pub l: Perm,
    pub r: Perm,
    /// `R_x⁻¹ L_x⁻¹`.
    pub p: Perm,
    /// `L_x R_x`, i.e. `y ↦ (xy)x`.
    pub u: Perm,
    /// `y ↦ y⁻¹`.
    pub j: Perm,
}

pub fn inversion_map(q: &FiniteLoop) -> Result<Perm, LoopError> {
    let inv = (0..q.order())
        .map(|y| q.inverse(y).ok_or(LoopError::NoInverse { element: y + 1 }))
        .collect::<Result<Vec<_>, _>>()?;
    Perm::from_images(inv).ok_or(LoopError::NoInverse { element: 0 })
}

pub fn mult_ops(q: &FiniteLoop, x: usize) -> Result<MultOps, LoopError> {
    let j = inversion_map(q)?;
    let l = q.left_mult(x);
    let r = q.right_mult(x);
    let p = r.inverse().then(&l.inverse());
    let u = l.then(&r);
    Ok(MultOps { l, r, p, u, j })
}
