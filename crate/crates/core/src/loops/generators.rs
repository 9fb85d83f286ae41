use super::finite_loop::{is_moufang, FiniteLoop};
use super::perm::Perm;
use super::LoopError;
use crate::malcev::cayley::unit_product;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn cyclic_group(n: usize) -> FiniteLoop {
    FiniteLoop::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
}

pub fn klein_four() -> FiniteLoop {
    FiniteLoop::from_fn(4, |a, b| a ^ b).expect("Klein four-group")
}

/// Elements of `Sym(k)` in lexicographic order of image lists (identity first).
pub fn symmetric_group_elements(k: usize) -> Vec<Perm> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == k {
            out.push(Perm::from_images(cur.clone()).expect("permutation"));
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// The group table of a list of permutations closed under composition; the
/// identity must come first.
pub fn perm_group_table(elems: &[Perm]) -> Result<FiniteLoop, LoopError> {
    let index: std::collections::HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut rows = Vec::with_capacity(elems.len());
    for a in elems {
        let mut row = Vec::with_capacity(elems.len());
        for b in elems {
            row.push(*index.get(&a.then(b)).ok_or(LoopError::NotClosed)?);
        }
        rows.push(row);
    }
    FiniteLoop::from_table(rows)
}

pub fn symmetric_group(k: usize) -> FiniteLoop {
    perm_group_table(&symmetric_group_elements(k)).expect("symmetric group")
}

/// `A × B` with `(a, b)` at index `a·|B| + b`.
pub fn direct_product(a: &FiniteLoop, b: &FiniteLoop) -> FiniteLoop {
    let m = b.order();
    FiniteLoop::from_fn(a.order() * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).expect("direct product")
}

/// The doubled loop `M(G, 2)` on `G ∪ Gu`, with `gu` at index `|G| + g`.
///
/// `g·h = gh`, `g·(hu) = (hg)u`, `(gu)·h = (gh⁻¹)u`, `(gu)·(hu) = h⁻¹g`.
pub fn chein_loop(g: &FiniteLoop) -> Result<FiniteLoop, LoopError> {
    if let Some(w) = g.associativity_witness() {
        return Err(LoopError::NotAGroup { witness: w.map(|i| i + 1) });
    }
    let n = g.order();
    FiniteLoop::from_fn(2 * n, |a, b| match (a < n, b < n) {
        (true, true) => g.mul(a, b),
        (true, false) => n + g.mul(b - n, a),
        (false, true) => n + g.mul(a - n, g.inv(b)),
        (false, false) => g.mul(g.inv(b - n), a - n),
    })
}

/// The 16 signed basis units `±1, ±e₁, …, ±e₇` of the split-free octonions;
/// index `2k` is `+e_k` and `2k+1` is `-e_k`.
pub fn octonion_unit_loop() -> FiniteLoop {
    let mus = [-1i64, -1, -1];
    FiniteLoop::from_fn(16, |a, b| {
        let (c, k) = unit_product(&mus, a / 2, b / 2);
        let neg = (a % 2 == 1) ^ (b % 2 == 1) ^ (c < 0);
        2 * k + usize::from(neg)
    })
    .expect("octonion units")
}

/// First loop of the given order violating the left Moufang identity, found
/// by a seeded backtracking fill of the Latin square.
pub fn non_moufang_loop(order: usize, seed: u64) -> Result<FiniteLoop, LoopError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = order;
    let mut grid = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        grid[0][i] = i;
        grid[i][0] = i;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let orders: Vec<Vec<usize>> = cells
        .iter()
        .map(|_| {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect();
    fn fill(grid: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], orders: &[Vec<usize>], k: usize) -> Option<FiniteLoop> {
        if k == cells.len() {
            let q = FiniteLoop::from_table(grid.clone()).ok()?;
            return (!is_moufang(&q)).then_some(q);
        }
        let (i, j) = cells[k];
        for &v in &orders[k] {
            if grid[i].contains(&v) || grid.iter().any(|r| r[j] == v) {
                continue;
            }
            grid[i][j] = v;
            if let Some(q) = fill(grid, cells, orders, k + 1) {
                return Some(q);
            }
            grid[i][j] = usize::MAX;
        }
        None
    }
    fill(&mut grid, &cells, &orders, 0).ok_or(LoopError::SearchExhausted { order })
}
