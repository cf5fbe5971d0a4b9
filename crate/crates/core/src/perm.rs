//! The permutation value type.
//!
//! A [`Perm`] is a bijection of the nonnegative integers that moves only
//! finitely many points. Only moved points are stored, as a sorted list of
//! `(point, image)` pairs, so two perms are equal exactly when their stored
//! pairs are equal and there is no notion of an intrinsic size.
//!
//! Products follow the convention `(p * q)[i] == p[q[i]]`: the right-hand
//! factor acts first.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A point of the acted-on set `{0, 1, 2, ...}`.
pub type Point = usize;

/// Alphabet of [`Perm::label`]; one character per point image.
const LABEL_LETTERS: &[u8] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_";
const LABEL_MAX_SIZE: usize = 62;

/// A permutation with finite support.
///
/// Values are immutable; every operation returns a new perm. The derived
/// ordering compares the sorted support pairs and is the canonical key order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    /// Sorted by point, no fixed points.
    pairs: Vec<(Point, Point)>,
}

/// An ordered list of distinct points `c[0] -> c[1] -> ... -> c[k-1] -> c[0]`.
///
/// Cycles of length 0 and 1 are permitted and denote the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle(Vec<Point>);

impl Cycle {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = points.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedCycle { point: w[0] });
        }
        Ok(Cycle(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.0
    }

    fn to_perm(&self) -> Perm {
        let k = self.0.len();
        if k < 2 {
            return Perm::identity();
        }
        let pairs = (0..k).map(|i| (self.0[i], self.0[(i + 1) % k])).collect();
        Perm::from_unsorted_pairs(pairs)
    }
}

impl AsRef<[Point]> for Cycle {
    fn as_ref(&self) -> &[Point] {
        &self.0
    }
}

impl Perm {
    pub fn identity() -> Self {
        Perm { pairs: Vec::new() }
    }

    /// Pairs must describe a bijection; fixed points are dropped.
    fn from_unsorted_pairs(mut pairs: Vec<(Point, Point)>) -> Self {
        pairs.retain(|&(k, v)| k != v);
        pairs.sort_unstable();
        Perm { pairs }
    }

    /// Builds the product of the given cycles, applied in sequence.
    ///
    /// Starting from the identity `acc`, each cycle `c` replaces `acc` by
    /// `acc * c`, so `from_cycles([a, b])` equals `a * b` and the last cycle
    /// acts first on a point. Cycles need not be disjoint.
    pub fn from_cycles<I, C>(cycles: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[Point]>,
    {
        let mut acc = Perm::identity();
        for c in cycles {
            let cycle = Cycle::new(c.as_ref().to_vec())?;
            acc = acc.compose(&cycle.to_perm());
        }
        Ok(acc)
    }

    /// A single cycle.
    pub fn cycle(points: &[Point]) -> Result<Self> {
        Self::from_cycles([points])
    }

    /// The perm mapping `i -> values[i]`.
    pub fn from_array(values: &[Point]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v >= n {
                return Err(Error::NotABijection {
                    reason: format!("entry {v} out of range for length {n}"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection {
                    reason: format!("entry {v} repeated"),
                });
            }
        }
        let pairs = values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v)
            .map(|(i, &v)| (i, v))
            .collect();
        Ok(Perm { pairs })
    }

    /// The canonical key: moved points with their images, sorted by point.
    pub fn pairs(&self) -> &[(Point, Point)] {
        &self.pairs
    }

    /// Image of `k`.
    pub fn apply(&self, k: Point) -> Point {
        match self.pairs.binary_search_by_key(&k, |&(p, _)| p) {
            Ok(i) => self.pairs[i].1,
            Err(_) => k,
        }
    }

    /// `self * other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let (a, b) = (&self.pairs, &other.pairs);
        let mut pairs = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let k = match (a.get(i), b.get(j)) {
                (Some(&(x, _)), Some(&(y, _))) => {
                    if x <= y {
                        i += 1;
                    }
                    if y <= x {
                        j += 1;
                    }
                    x.min(y)
                }
                (Some(&(x, _)), None) => {
                    i += 1;
                    x
                }
                (None, Some(&(y, _))) => {
                    j += 1;
                    y
                }
                (None, None) => break,
            };
            let v = self.apply(other.apply(k));
            if v != k {
                pairs.push((k, v));
            }
        }
        Perm { pairs }
    }

    pub fn inverse(&self) -> Perm {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(k, v)| (v, k)).collect();
        pairs.sort_unstable();
        Perm { pairs }
    }

    /// Integer power by binary exponentiation; negative exponents use the
    /// inverse.
    pub fn power(&self, m: i64) -> Perm {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        base.power_unsigned(m.unsigned_abs())
    }

    fn power_unsigned(self, mut m: u64) -> Perm {
        let mut base = self;
        let mut acc = Perm::identity();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.compose(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Moved points in ascending order.
    pub fn support(&self) -> Vec<Point> {
        self.pairs.iter().map(|&(k, _)| k).collect()
    }

    /// Number of moved points.
    pub fn support_len(&self) -> usize {
        self.pairs.len()
    }

    /// Largest moved point, or 0 for the identity.
    pub fn max_moved(&self) -> Point {
        self.pairs.last().map_or(0, |&(k, _)| k)
    }

    /// Smallest moved point, or 0 for the identity.
    pub fn min_moved(&self) -> Point {
        self.pairs.first().map_or(0, |&(k, _)| k)
    }

    fn check_size(&self, size: usize) -> Result<()> {
        if size <= self.max_moved() {
            return Err(Error::SizeTooSmall {
                size,
                max_moved: self.max_moved(),
            });
        }
        Ok(())
    }

    /// Array form `[p[0], ..., p[size-1]]`.
    pub fn to_array(&self, size: usize) -> Result<Vec<Point>> {
        self.check_size(size)?;
        let mut out: Vec<Point> = (0..size).collect();
        for &(k, v) in &self.pairs {
            out[k] = v;
        }
        Ok(out)
    }

    /// Array form of the smallest size that covers the support.
    pub fn array_form(&self) -> Vec<Point> {
        self.to_array(self.max_moved() + 1)
            .expect("max_moved + 1 always covers the support")
    }

    /// Disjoint cycle decomposition without 1-cycles. Each cycle starts at
    /// its smallest point and cycles are sorted by that point.
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut visited = vec![false; self.pairs.len()];
        let mut out = Vec::new();
        for start in 0..self.pairs.len() {
            if visited[start] {
                continue;
            }
            let first = self.pairs[start].0;
            let mut cycle = vec![first];
            visited[start] = true;
            let mut j = self.pairs[start].1;
            while j != first {
                let idx = self
                    .pairs
                    .binary_search_by_key(&j, |&(p, _)| p)
                    .expect("image of a moved point is moved");
                visited[idx] = true;
                cycle.push(j);
                j = self.pairs[idx].1;
            }
            out.push(Cycle(cycle));
        }
        out
    }

    /// Least `m >= 1` with `p^m` the identity: the lcm of cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycles().iter().fold(BigUint::one(), |acc, c| {
            let len = c.len() as u64;
            let rem = (&acc % len).to_u64().expect("remainder below a u64");
            acc * (len / gcd(len, rem))
        })
    }

    /// Parity of the number of transpositions, 0 or 1.
    pub fn parity(&self) -> u8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        (transpositions % 2) as u8
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    /// +1 for even perms, -1 for odd ones.
    pub fn sign(&self) -> i32 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// `p * q * p^-1 * q^-1`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    /// Base-62 string label: one character per image of `0..size`.
    ///
    /// `size` defaults to `max_moved() + 1` and may not exceed 62.
    pub fn label(&self, size: Option<usize>) -> Result<String> {
        let size = size.unwrap_or(self.max_moved() + 1);
        if size > LABEL_MAX_SIZE {
            return Err(Error::LabelSizeTooLarge { size });
        }
        let array = self.to_array(size)?;
        Ok(array.into_iter().map(|v| LABEL_LETTERS[v] as char).collect())
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        self.compose(&rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Euclid's algorithm. `gcd(a, 0) == a`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple of positive integers.
pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
