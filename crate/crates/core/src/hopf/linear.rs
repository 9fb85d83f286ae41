use crate::qcore::Rational;
use std::collections::BTreeMap;
use std::fmt;

/// A finite linear combination of basis labels with exact coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lin<B: Ord>(BTreeMap<B, Rational>);

impl<B: Ord + Clone> Lin<B> {
    pub fn zero() -> Self {
        Lin(BTreeMap::new())
    }

    pub fn basis(b: B) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(c: Rational, b: B) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(b, c);
        }
        Lin(m)
    }

    pub fn scalar(c: Rational, unit: B) -> Self {
        Self::term(c, unit)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.0.iter()
    }

    pub fn coefficient(&self, b: &B) -> Rational {
        self.0.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    /// The term with the largest label.
    pub fn leading(&self) -> Option<(&B, &Rational)> {
        self.0.iter().next_back()
    }

    pub fn add_term(&mut self, b: B, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&b) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.0.remove(&b);
                }
            }
            None => {
                self.0.insert(b, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Lin<B>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.0 {
            self.add_term(b.clone(), &(x * c));
        }
    }

    pub fn add_assign(&mut self, other: &Lin<B>) {
        for (b, x) in &other.0 {
            self.add_term(b.clone(), x);
        }
    }

    pub fn plus(&self, other: &Lin<B>) -> Lin<B> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Lin<B>) -> Lin<B> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scaled(&self, c: &Rational) -> Lin<B> {
        if c.is_zero() {
            return Lin::zero();
        }
        Lin(self.0.iter().map(|(b, x)| (b.clone(), x * c)).collect())
    }

    pub fn neg(&self) -> Lin<B> {
        self.scaled(&-Rational::one())
    }

    /// Linear extension of `f` from basis labels.
    pub fn map<C: Ord + Clone, F: FnMut(&B) -> Lin<C>>(&self, mut f: F) -> Lin<C> {
        let mut out = Lin::zero();
        for (b, x) in &self.0 {
            out.add_scaled(&f(b), x);
        }
        out
    }

    /// Bilinear extension of `f` from pairs of basis labels.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone, F: FnMut(&B, &C) -> Lin<D>>(&self, other: &Lin<C>, mut f: F) -> Lin<D> {
        let mut out = Lin::zero();
        for (a, x) in &self.0 {
            for (b, y) in other.iter() {
                out.add_scaled(&f(a, b), &(x * y));
            }
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for Lin<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = Lin::zero();
        for (b, c) in iter {
            out.add_term(b, &c);
        }
        out
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for Lin<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.0.iter().map(|(b, c)| format!("{c}·{b:?}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Incremental echelon basis of sparse vectors; each stored row has
/// coefficient 1 at its largest label and no other row has that label as
/// its largest.
#[derive(Clone, Debug)]
pub struct SparseEchelon<B: Ord> {
    rows: BTreeMap<B, Lin<B>>,
}

impl<B: Ord + Clone> Default for SparseEchelon<B> {
    fn default() -> Self {
        Self::new()
    }
}

impl<B: Ord + Clone> SparseEchelon<B> {
    pub fn new() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// What is left of `v` after eliminating stored leading labels.
    pub fn reduce(&self, v: &Lin<B>) -> Lin<B> {
        let mut v = v.clone();
        let mut bound: Option<B> = None;
        loop {
            let next = match &bound {
                None => v.0.iter().next_back(),
                Some(b) => v.0.range(..b.clone()).next_back(),
            };
            let Some((k, c)) = next.map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            if let Some(row) = self.rows.get(&k) {
                v.add_scaled(row, &-c);
            }
            bound = Some(k);
        }
    }

    pub fn contains(&self, v: &Lin<B>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &Lin<B>) -> bool {
        let r = self.reduce(v);
        let Some((k, c)) = r.leading().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip().expect("nonzero");
        self.rows.insert(k, r.scaled(&inv));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn arithmetic_cancels_zeros() {
        let a: Lin<u8> = [(1, r(2)), (3, r(1))].into_iter().collect();
        let b: Lin<u8> = [(1, r(2))].into_iter().collect();
        let d = a.minus(&b);
        assert_eq!(d, Lin::basis(3));
        assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn echelon_membership() {
        let mut e = SparseEchelon::new();
        let u: Lin<u8> = [(0, r(1)), (2, r(1))].into_iter().collect();
        let v: Lin<u8> = [(1, r(1)), (2, r(1))].into_iter().collect();
        assert!(e.insert(&u));
        assert!(e.insert(&v));
        let w: Lin<u8> = [(0, r(1)), (1, r(-1))].into_iter().collect();
        assert!(e.contains(&w));
        assert!(!e.insert(&w));
        assert!(!e.contains(&Lin::basis(0)));
        assert_eq!(e.dim(), 2);
    }
}
