//! Permutations of finite flag sets.
//!
//! Flags are plain integers. A [`Permutation`] acts on a *domain*, a subset of
//! the label range `0..capacity`; labels outside the domain are simply absent.
//! Keeping absent labels (instead of compacting) lets deletions and
//! contractions preserve flag names, so edge ids stay stable across minors.

use std::fmt;

use crate::error::{Error, Result};

pub type Flag = usize;

const ABSENT: usize = usize::MAX;

/// A subset of the label range `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FlagSet {
    bits: Vec<bool>,
    len: usize,
}

impl FlagSet {
    pub fn empty(capacity: usize) -> Self {
        FlagSet {
            bits: vec![false; capacity],
            len: 0,
        }
    }

    pub fn full(capacity: usize) -> Self {
        FlagSet {
            bits: vec![true; capacity],
            len: capacity,
        }
    }

    /// Builds a set from flags; the capacity grows to fit the largest flag.
    pub fn from_flags<I: IntoIterator<Item = Flag>>(capacity: usize, flags: I) -> Self {
        let mut set = FlagSet::empty(capacity);
        for b in flags {
            set.insert(b);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, b: Flag) -> bool {
        self.bits.get(b).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, b: Flag) {
        if b >= self.bits.len() {
            self.bits.resize(b + 1, false);
        }
        if !self.bits[b] {
            self.bits[b] = true;
            self.len += 1;
        }
    }

    pub fn remove(&mut self, b: Flag) {
        if self.contains(b) {
            self.bits[b] = false;
            self.len -= 1;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Flag> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(b, &on)| on.then_some(b))
    }

    pub fn is_subset(&self, other: &FlagSet) -> bool {
        self.iter().all(|b| other.contains(b))
    }

    pub fn intersection(&self, other: &FlagSet) -> FlagSet {
        FlagSet::from_flags(self.capacity(), self.iter().filter(|&b| other.contains(b)))
    }

    pub fn difference(&self, other: &FlagSet) -> FlagSet {
        FlagSet::from_flags(self.capacity(), self.iter().filter(|&b| !other.contains(b)))
    }
}

/// A bijection of a finite set of flags onto itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The permutation of the empty set, in a label range of size `capacity`.
    pub fn empty(capacity: usize) -> Self {
        Permutation {
            images: vec![ABSENT; capacity],
        }
    }

    /// Builds a permutation of `0..images.len()` from its image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (b, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::NotBijective(format!(
                    "image {img} of {b} out of range"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::NotBijective(format!("{img} has two preimages")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles; unlisted flags are fixed.
    pub fn from_cycles<C: AsRef<[Flag]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &b) in cycle.iter().enumerate() {
                if b >= n {
                    return Err(Error::NotBijective(format!("flag {b} out of range 0..{n}")));
                }
                if std::mem::replace(&mut seen[b], true) {
                    return Err(Error::NotBijective(format!("flag {b} listed twice")));
                }
                images[b] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation whose domain is exactly the union of the given cycles.
    pub fn on_cycles<C: AsRef<[Flag]>>(capacity: usize, cycles: &[C]) -> Result<Self> {
        let mut images = vec![ABSENT; capacity];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &b) in cycle.iter().enumerate() {
                if b >= capacity {
                    return Err(Error::NotBijective(format!(
                        "flag {b} out of range 0..{capacity}"
                    )));
                }
                if images[b] != ABSENT {
                    return Err(Error::NotBijective(format!("flag {b} listed twice")));
                }
                images[b] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 2)(1 3)` into a permutation of `0..n`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    /// Size of the label range the permutation lives in.
    pub fn capacity(&self) -> usize {
        self.images.len()
    }

    /// Number of flags in the domain.
    pub fn len(&self) -> usize {
        self.images.iter().filter(|&&i| i != ABSENT).count()
    }

    pub fn is_empty(&self) -> bool {
        self.images.iter().all(|&i| i == ABSENT)
    }

    pub fn contains(&self, b: Flag) -> bool {
        self.images.get(b).is_some_and(|&i| i != ABSENT)
    }

    pub fn domain(&self) -> impl Iterator<Item = Flag> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter_map(|(b, &i)| (i != ABSENT).then_some(b))
    }

    pub fn domain_set(&self) -> FlagSet {
        FlagSet::from_flags(self.capacity(), self.domain())
    }

    /// Image of `b`.
    ///
    /// # Panics
    /// If `b` is not in the domain.
    #[inline]
    pub fn apply(&self, b: Flag) -> Flag {
        let img = self.images[b];
        assert!(
            img != ABSENT,
            "flag {b} is outside the permutation's domain"
        );
        img
    }

    pub fn get(&self, b: Flag) -> Option<Flag> {
        self.images.get(b).copied().filter(|&i| i != ABSENT)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![ABSENT; self.capacity()];
        for b in self.domain() {
            images[self.images[b]] = b;
        }
        Permutation { images }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Permutation) -> Result<Permutation> {
        if self.capacity() != inner.capacity()
            || self
                .images
                .iter()
                .zip(&inner.images)
                .any(|(&a, &b)| (a == ABSENT) != (b == ABSENT))
        {
            return Err(Error::DomainMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|&i| if i == ABSENT { ABSENT } else { self.images[i] })
            .collect();
        Ok(Permutation { images })
    }

    /// Cycles, each starting at its minimum flag, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<Flag>> {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        for start in self.domain() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut b = start;
            while !seen[b] {
                seen[b] = true;
                cycle.push(b);
                b = self.images[b];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.capacity()];
        let mut count = 0;
        for start in self.domain() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut b = start;
            while !seen[b] {
                seen[b] = true;
                b = self.images[b];
            }
        }
        count
    }

    /// True iff the domain is a single cycle. The empty permutation counts as one.
    pub fn is_cyclic(&self) -> bool {
        self.cycle_count() <= 1
    }

    pub fn is_involution(&self) -> bool {
        self.domain().all(|b| self.images[self.images[b]] == b)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = Flag> + '_ {
        self.domain().filter(|&b| self.images[b] == b)
    }

    /// The first return map on `sub`: each `b` in `sub` goes to `p^k(b)` for
    /// the least `k > 0` landing back in `sub`. Flags of `sub` outside the
    /// domain are ignored.
    pub fn restrict(&self, sub: &FlagSet) -> Permutation {
        let mut images = vec![ABSENT; self.capacity()];
        for b in self.domain().filter(|&b| sub.contains(b)) {
            let mut c = self.images[b];
            while !sub.contains(c) {
                c = self.images[c];
            }
            images[b] = c;
        }
        Permutation { images }
    }

    /// Same domain as `self`: acts as [`restrict`](Self::restrict) on `sub`
    /// and fixes every other flag.
    pub fn cut_out(&self, sub: &FlagSet) -> Permutation {
        let mut out = self.restrict(sub);
        for b in self.domain().filter(|&b| !sub.contains(b)) {
            out.images[b] = b;
        }
        out
    }

    /// Renames flags through `rename` (old label → new label) into a label
    /// range of size `capacity`.
    pub fn relabel(&self, rename: &[usize], capacity: usize) -> Permutation {
        let mut images = vec![ABSENT; capacity];
        for b in self.domain() {
            images[rename[b]] = rename[self.images[b]];
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, b) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{b}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_identity_and_inverse() {
        let p = perm(4, &[&[0, 2, 1], &[3]]);
        assert_eq!(Permutation::identity(4).compose(&p).unwrap(), p);
        assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn compose_applies_inner_first() {
        // (0 1 2)∘(0 1): 0→1→2, 1→0→1, 2→2→0
        let outer = perm(3, &[&[0, 1, 2]]);
        let inner = perm(3, &[&[0, 1]]);
        let c = outer.compose(&inner).unwrap();
        assert_eq!(c.cycles(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn compose_size_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DomainMismatch));
    }

    #[test]
    fn cycles_canonical() {
        assert_eq!(
            Permutation::identity(3).cycles(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            perm(4, &[&[3, 2], &[1, 0]]).cycles(),
            vec![vec![0, 1], vec![2, 3]]
        );
        assert_eq!(perm(4, &[&[2, 3, 0, 1]]).cycles(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(perm(4, &[&[0, 2], &[1, 3]]).to_string(), "(0 2)(1 3)");
    }

    #[test]
    fn restrict_examples() {
        let p = perm(4, &[&[0, 1, 2, 3]]);
        assert_eq!(p.restrict(&FlagSet::full(4)), p);
        let r = p.restrict(&FlagSet::from_flags(4, [0, 2]));
        assert_eq!(r.cycles(), vec![vec![0, 2]]);
        assert_eq!(r.len(), 2);
        let single = p.restrict(&FlagSet::from_flags(4, [1]));
        assert_eq!(single.cycles(), vec![vec![1]]);
        let none = p.restrict(&FlagSet::empty(4));
        assert!(none.is_empty());
        assert_eq!(none.to_string(), "()");
    }

    #[test]
    fn cut_out_examples() {
        let p = perm(4, &[&[0, 1, 2, 3]]);
        assert_eq!(p.cut_out(&FlagSet::empty(4)), Permutation::identity(4));
        assert_eq!(p.cut_out(&FlagSet::full(4)), p);
        assert_eq!(
            p.cut_out(&FlagSet::from_flags(4, [0, 2])),
            perm(4, &[&[0, 2]])
        );
    }

    #[test]
    fn parse_roundtrip() {
        let p = Permutation::parse_cycles(5, "(0 3)(1 4 2)").unwrap();
        assert_eq!(p.to_string(), "(0 3)(1 4 2)");
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 5)").is_err());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn cycles_rebuild_original(p in arb_perm(12)) {
            let rebuilt = Permutation::from_cycles(p.capacity(), &p.cycles()).unwrap();
            prop_assert_eq!(rebuilt, p);
        }

        #[test]
        fn restrict_nested_is_idempotent(p in arb_perm(12), a_mask in any::<u16>(), b_mask in any::<u16>()) {
            let n = p.capacity();
            let a = FlagSet::from_flags(n, (0..n).filter(|&b| a_mask >> b & 1 == 1));
            let b = FlagSet::from_flags(n, a.iter().filter(|&x| b_mask >> x & 1 == 1));
            prop_assert_eq!(p.restrict(&a).restrict(&b), p.restrict(&b));
        }

        #[test]
        fn product_restriction_law(
            pair in (1usize..=12).prop_flat_map(|n| (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                any::<u16>(),
            ))
        ) {
            let (s, m, mask) = pair;
            let n = s.len();
            let sigma = Permutation::from_images(s).unwrap();
            let mu = Permutation::from_images(m).unwrap();
            let sub = FlagSet::from_flags(n, (0..n).filter(|&b| mask >> b & 1 == 1));
            let mu_cut = mu.cut_out(&sub);
            let lhs = sigma.cut_out(&sub).compose(&mu_cut).unwrap();
            let rhs = sigma.compose(&mu_cut).unwrap().cut_out(&sub);
            prop_assert_eq!(&lhs, &rhs);
            let lhs_r = sigma.restrict(&sub).compose(&mu.restrict(&sub)).unwrap();
            prop_assert_eq!(lhs_r, sigma.compose(&mu_cut).unwrap().restrict(&sub));
        }
    }
}
