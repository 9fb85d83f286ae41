//! Small groups with triality used throughout the test suites.

use super::{GTrialityError, TrialityGroup};
use crate::loops::generators::{cyclic_group, direct_product, symmetric_group};
use crate::loops::{FiniteLoop, Perm};

/// `G` with `ρ = σ = id`.
pub fn trivial_action(g: FiniteLoop) -> Result<TrialityGroup, GTrialityError> {
    let n = g.order();
    TrialityGroup::new(g, Perm::identity(n), Perm::identity(n))
}

/// `C₄` with `ρ = id` and `σ` the inversion; not a group with triality.
pub fn c4_inversion() -> TrialityGroup {
    let g = cyclic_group(4);
    let sigma = Perm::from_fn(4, |x| (4 - x) % 4).expect("inversion");
    TrialityGroup::new(g, Perm::identity(4), sigma).expect("valid action")
}

/// `S₃` with `ρ = id` and `σ` conjugation by a transposition.
pub fn s3_conjugation() -> TrialityGroup {
    let g = symmetric_group(3);
    // index 1 is the transposition swapping the last two points
    let t = 1;
    let sigma = Perm::from_fn(6, |x| g.mul(g.mul(t, x), t)).expect("inner automorphism");
    TrialityGroup::new(g, Perm::identity(6), sigma).expect("valid action")
}

/// `S₃ × S₃ × S₃` with `(a,b,c)^ρ = (c,a,b)` and `(a,b,c)^σ = (b,a,c)`.
pub fn s3_wreath() -> TrialityGroup {
    let s3 = symmetric_group(3);
    let g = direct_product(&direct_product(&s3, &s3), &s3);
    let split = |x: usize| (x / 36, (x / 6) % 6, x % 6);
    let join = |a: usize, b: usize, c: usize| a * 36 + b * 6 + c;
    let rho = Perm::from_fn(216, |x| {
        let (a, b, c) = split(x);
        join(c, a, b)
    })
    .expect("coordinate cycle");
    let sigma = Perm::from_fn(216, |x| {
        let (a, b, c) = split(x);
        join(b, a, c)
    })
    .expect("coordinate swap");
    TrialityGroup::new(g, rho, sigma).expect("valid action")
}

/// The wreath group times a `C₂` on which `S₃` acts trivially; the `C₂`
/// coordinate is the low bit of the index.
pub fn wreath_times_c2() -> TrialityGroup {
    let w = s3_wreath();
    let g = direct_product(w.group(), &cyclic_group(2));
    let lift = |p: &Perm| Perm::from_fn(432, |x| p.apply(x / 2) * 2 + x % 2).expect("lifted automorphism");
    TrialityGroup::new(g, lift(w.rho_perm()), lift(w.sigma_perm())).expect("valid action")
}
