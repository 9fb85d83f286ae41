use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::Mul;

/// A permutation of `{0..n}` acting on the right.
///
/// `p * q` applies `p` first and then `q`, so `i(p*q) = (ip)q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u32).collect() }
    }

    /// Builds a permutation from 0-based images, returning `None` unless the
    /// list is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm { images: images.into_iter().map(|i| i as u32).collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Option<Self> {
        Self::from_images((0..n).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        e = e.abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Conjugation `q⁻¹ p q`, which relabels `p` along `q`.
    pub fn conjugate_by(&self, q: &Perm) -> Perm {
        q.inverse().then(self).then(q)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut lcm = 1usize;
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lcm = num_integer::lcm(lcm, len);
        }
        lcm
    }

    /// 1-based image list, as used in every file format.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.images().map(|i| i + 1).collect()
    }

    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        self.then(&rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.to_one_based())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_based(&v).ok_or_else(|| serde::de::Error::custom("not a permutation of 1..n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    #[test]
    fn composition_is_left_to_right() {
        let p = Perm::from_images(vec![1, 0, 2]).unwrap();
        let q = Perm::from_images(vec![0, 2, 1]).unwrap();
        // 0 -p-> 1 -q-> 2
        assert_eq!((&p * &q).apply(0), 2);
        assert_eq!((&q * &p).apply(0), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![2, 0]).is_none());
        assert!(Perm::from_one_based(&[0, 1]).is_none());
    }

    #[test]
    fn serde_uses_one_based_images() {
        let p = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,3,1]");
        let back: Perm = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn group_axioms(p in arb_perm(7), q in arb_perm(7), r in arb_perm(7)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert!((&p * &p.inverse()).is_identity());
            prop_assert_eq!(p.pow(p.order() as i64), Perm::identity(7));
            prop_assert_eq!(p.pow(-3), p.inverse().pow(3));
        }
    }
}
