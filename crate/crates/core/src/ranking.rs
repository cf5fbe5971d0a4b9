//! Ranking and unranking perms of a fixed size, plus seeded random perms.
//!
//! Two bijections between the `n!` perms of `{0, ..., n-1}` and the
//! integers `0..n!` are provided:
//!
//! * lexicographic order of the array forms, via the inversion vector
//!   (Lehmer code), quadratic in `n`;
//! * the Myrvold-Ruskey scheme, linear in `n` apart from the cost of
//!   assembling the big integer.
//!
//! Under the Myrvold-Ruskey scheme rank 0 is the cycle `(0 1 ... n-1)`, not
//! the identity.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::perm::{Perm, Point};

/// An arbitrary-precision rank in `0..n!`.
pub type Rank = BigUint;

/// Per position, the number of smaller entries to its right in the array form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionVector(Vec<usize>);

impl InversionVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn inversion_vector(p: &Perm, size: usize) -> Result<InversionVector> {
    let a = p.to_array(size)?;
    let entries = (0..size)
        .map(|i| a[i + 1..].iter().filter(|&&x| x < a[i]).count())
        .collect();
    Ok(InversionVector(entries))
}

/// Position of the array form of `p` among all `size!` arrays in
/// lexicographic order.
pub fn rank_lex(p: &Perm, size: usize) -> Result<Rank> {
    let inv = inversion_vector(p, size)?;
    // entry i is a digit of radix size - i; the last entry is least significant
    let digits: Vec<(u64, u64)> = inv
        .entries()
        .iter()
        .enumerate()
        .rev()
        .map(|(i, &d)| (d as u64, (size - i) as u64))
        .collect();
    Ok(mixed_radix_value(&digits))
}

/// Inverse of [`rank_lex`].
///
/// Fails with [`Error::RankOutOfRange`] when `rank >= size!`.
pub fn unrank_lex(size: usize, rank: &Rank) -> Result<Perm> {
    check_unrank_size(size)?;
    let mut rank = rank.clone();
    let mut digits = vec![0usize; size];
    for i in 2..=size {
        let radix = i as u64;
        digits[i - 1] = (&rank % radix).to_usize().expect("digit below radix");
        rank /= radix;
    }
    if !rank.is_zero() {
        return Err(Error::RankOutOfRange);
    }
    digits.reverse();
    let mut remaining: Vec<Point> = (0..size).collect();
    let array: Vec<Point> = digits.into_iter().map(|d| remaining.remove(d)).collect();
    Perm::from_array(&array)
}

/// Myrvold-Ruskey rank of `p` among perms of `size` points.
pub fn rank_mr(p: &Perm, size: usize) -> Result<Rank> {
    let mut a = p.to_array(size)?;
    let mut b = p.inverse().to_array(size)?;
    // digit a[n-1] has radix n; the first digit produced is least significant
    let mut digits = Vec::with_capacity(size.saturating_sub(1));
    for n in (2..=size).rev() {
        let s = a[n - 1];
        a.swap(n - 1, b[n - 1]);
        b.swap(s, n - 1);
        digits.push((s as u64, n as u64));
    }
    Ok(mixed_radix_value(&digits))
}

/// Inverse of [`rank_mr`].
///
/// Fails with [`Error::RankOutOfRange`] when `rank >= size!`.
pub fn unrank_mr(size: usize, rank: &Rank) -> Result<Perm> {
    check_unrank_size(size)?;
    let mut rank = rank.clone();
    let mut array: Vec<Point> = (0..size).collect();
    for n in (1..=size).rev() {
        let radix = n as u64;
        let d = (&rank % radix).to_usize().expect("digit below radix");
        array.swap(n - 1, d);
        rank /= radix;
    }
    if !rank.is_zero() {
        return Err(Error::RankOutOfRange);
    }
    Perm::from_array(&array)
}

fn check_unrank_size(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::SizeTooSmall { size, max_moved: 0 });
    }
    Ok(())
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Value of a mixed-radix numeral given as `(digit, radix)` pairs, least
/// significant first.
///
/// Splits the numeral in halves so the big multiplications are balanced;
/// Horner's rule would cost time quadratic in the length of the result.
fn mixed_radix_value(digits: &[(u64, u64)]) -> BigUint {
    const LEAF: usize = 32;
    if digits.len() <= LEAF {
        return horner(digits);
    }
    let (lo, hi) = digits.split_at(digits.len() / 2);
    let (lo_value, lo_scale) = value_and_scale(lo);
    lo_value + lo_scale * mixed_radix_value(hi)
}

/// Value together with the product of all radices.
fn value_and_scale(digits: &[(u64, u64)]) -> (BigUint, BigUint) {
    const LEAF: usize = 32;
    if digits.len() <= LEAF {
        let scale = digits.iter().fold(BigUint::one(), |acc, &(_, r)| acc * r);
        return (horner(digits), scale);
    }
    let (lo, hi) = digits.split_at(digits.len() / 2);
    let (lv, ls) = value_and_scale(lo);
    let (hv, hs) = value_and_scale(hi);
    (lv + &ls * hv, ls * hs)
}

fn horner(digits: &[(u64, u64)]) -> BigUint {
    digits
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &(d, r)| acc * r + d)
}

/// A seedable deterministic random source for [`random_perm`].
///
/// Equal seeds produce equal sequences of perms.
pub struct RandomSource {
    seed: u64,
    rng: ChaCha12Rng,
}

impl RandomSource {
    pub fn seeded(seed: u64) -> Self {
        RandomSource { seed, rng: ChaCha12Rng::seed_from_u64(seed) }
    }

    /// Seeds from system entropy; the chosen seed is available via
    /// [`RandomSource::seed`] so the run can be repeated.
    pub fn from_entropy() -> Self {
        Self::seeded(rand::rng().random())
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// A uniformly random perm of `0..size` by Fisher-Yates shuffle.
pub fn random_perm<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Perm {
    let mut array: Vec<Point> = (0..size).collect();
    for i in (1..size).rev() {
        let j = rng.random_range(0..=i);
        array.swap(i, j);
    }
    Perm::from_array(&array).expect("a shuffle of 0..size is a bijection")
}
