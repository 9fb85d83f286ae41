use super::finite_loop::FiniteLoop;
use super::perm::Perm;
use super::LoopError;
use serde::Serialize;
use std::collections::HashSet;

/// A permutation group listed element by element, with named generators.
#[derive(Clone, Debug, Serialize)]
pub struct PermGroup {
    pub generators: Vec<(String, Perm)>,
    pub elements: Vec<Perm>,
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Closes `generators` under composition, failing once more than `cap`
/// elements have been produced.
pub fn perm_closure(degree: usize, generators: Vec<(String, Perm)>, cap: usize) -> Result<PermGroup, LoopError> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut i = 0;
    while i < elements.len() {
        for (_, g) in &generators {
            let p = elements[i].then(g);
            if seen.insert(p.clone()) {
                elements.push(p);
                if elements.len() > cap {
                    return Err(LoopError::CapExceeded { cap });
                }
            }
        }
        i += 1;
    }
    Ok(PermGroup { generators, elements })
}

/// `Mult(Q)`, the group generated by every `L_a` and `R_a`.
pub fn multiplication_group(q: &FiniteLoop, cap: usize) -> Result<PermGroup, LoopError> {
    let mut gens = Vec::new();
    for a in 1..q.order() {
        gens.push((format!("L{}", a + 1), q.left_mult(a)));
        gens.push((format!("R{}", a + 1), q.right_mult(a)));
    }
    perm_closure(q.order(), gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::generators::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn small_groups() {
        assert_eq!(multiplication_group(&cyclic_group(2), 100).unwrap().order(), 2);
        let m = multiplication_group(&symmetric_group(3), 1000).unwrap();
        assert_eq!(m.order(), 36);
        assert_eq!(factorial(6) % 36, 0);
    }

    #[test]
    fn chein_mult_group_terminates() {
        let q = chein_loop(&symmetric_group(3)).unwrap();
        let m = multiplication_group(&q, 1 << 20).unwrap();
        assert_eq!(factorial(12) % m.order(), 0);
        // Mult(Q) acts transitively and contains every operator.
        let set: HashSet<&Perm> = m.elements.iter().collect();
        for a in 0..12 {
            assert!(set.contains(&q.left_mult(a)) && set.contains(&q.right_mult(a)));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let q = symmetric_group(3);
        assert!(matches!(multiplication_group(&q, 10), Err(LoopError::CapExceeded { cap: 10 })));
    }
}
