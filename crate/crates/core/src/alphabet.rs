//! The ordered alphabet `[±n] = {1 < … < n < n̄ < … < 1̄}`, words over it,
//! weights and partitions.
//!
//! A barred letter `k̄` is stored as the negative integer `-k`, so text I/O
//! is bit-exact ("-3" means `3̄`). Comparisons never use raw integer order;
//! they go through the rank of a letter in the alphabet above.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The rank `n` of the alphabet `[±n]`.
pub type Rank = usize;

/// A letter of `[±n]`: a nonzero integer, negative values are barred.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i64);

impl Letter {
    pub fn new(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::Parse("letter 0 is not in the alphabet".into()));
        }
        Ok(Letter(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    /// Absolute value, i.e. the letter with its bar removed.
    pub fn abs(self) -> i64 {
        self.0.abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The complement `i ↔ ī`.
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    /// Whether the letter lies in `[±n]`.
    pub fn fits(self, n: Rank) -> bool {
        self.abs() <= n as i64
    }

    /// Position in the order `1 < … < n < n̄ < … < 1̄`, from 1 to `2n`.
    pub fn rank(self, n: Rank) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            (2 * n as i64 + 1 + self.0) as usize
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        // (barred?, integer value) is order-isomorphic to the rank for
        // every n: unbarred sort below barred, and within each block the
        // integer order agrees with the alphabet order.
        (self.is_barred(), self.0).cmp(&(other.is_barred(), other.0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand used throughout the crate and in tests.
pub fn lt(value: i64) -> Letter {
    Letter::new(value).expect("nonzero letter")
}

/// Total order on letters; exposed to mirror the alphabet contract.
pub fn compare_letters(a: Letter, b: Letter) -> Ordering {
    a.cmp(&b)
}

/// A finite sequence of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fits(&self, n: Rank) -> bool {
        self.0.iter().all(|l| l.fits(n))
    }

    /// Smallest rank for which every letter is valid.
    pub fn min_rank(&self) -> Rank {
        self.0.iter().map(|l| l.abs()).max().unwrap_or(0) as Rank
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// wt(w) ∈ Z^n: entry `i` counts the letters `i` minus the letters `ī`.
    pub fn weight(&self, n: Rank) -> WeightVector {
        let mut wt = vec![0i64; n];
        for l in &self.0 {
            let idx = (l.abs() - 1) as usize;
            wt[idx] += if l.is_barred() { -1 } else { 1 };
        }
        wt
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace-separated signed integers, e.g. `"2 3 -2 -3 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            letters.push(Letter::new(v)?);
        }
        Ok(Word(letters))
    }
}

/// An integer weight vector in Z^n.
pub type WeightVector = Vec<i64>;

/// Parses `"(1,-3,0,3,-2)"` or a bare comma list `"1,-3,0,3,-2"`.
pub fn parse_vector(s: &str) -> Result<WeightVector> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad vector entry {tok:?}")))
        })
        .collect()
}

pub fn format_vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A partition: weakly decreasing nonnegative parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p < 0) {
            return Err(Error::Invalid(format!(
                "{} is not a partition",
                format_vector(&parts)
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `λ_i` (1-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.num_parts().max(self.num_parts()))
            .all(|i| inner.part(i) <= self.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c as i64).count() as i64)
            .collect();
        Partition { parts }
    }

    /// Pads with zeros to length `n` (for weight-vector comparisons).
    pub fn to_vector(&self, n: Rank) -> WeightVector {
        (1..=n).map(|i| self.part(i)).collect()
    }

    /// Whether `|self| - |other|` is one added cell.
    pub fn differs_by_one_cell(&self, other: &Partition) -> bool {
        let (big, small, delta) = if self.size() == other.size() + 1 {
            (self, other, 1)
        } else if other.size() == self.size() + 1 {
            (other, self, 1)
        } else {
            return false;
        };
        let _ = delta;
        big.contains(small)
            && (1..=big.num_parts()).filter(|&i| big.part(i) != small.part(i)).count() == 1
    }
}

/// Whether a weight vector is a partition (weakly decreasing, nonnegative).
pub fn is_partition_vector(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1]) && v.last().is_none_or(|&x| x >= 0)
}

/// λ_v: the unique partition in the B_n-orbit of `v`, obtained by sorting
/// the absolute values of all entries in weakly decreasing order.
pub fn orbit_partition(v: &[i64]) -> Partition {
    let mut parts: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted absolute values form a partition")
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    Partition::new(parse_vector(s)?)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_vector(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_matches_rank() {
        // 1 < … < n < n̄ < … < 1̄ for n = 3.
        let order = [1, 2, 3, -3, -2, -1].map(lt);
        for w in order.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, l) in order.iter().enumerate() {
            assert_eq!(l.rank(3), i + 1);
        }
        assert!(lt(3) < lt(-3));
        assert!(lt(-3) < lt(-1));
        assert_eq!(compare_letters(lt(1), lt(1)), Ordering::Equal);
    }

    #[test]
    fn weight_of_reading_word() {
        let w: Word = "2 3 2 3 -3".parse().unwrap();
        assert_eq!(w.weight(3), vec![0, 2, 1]);
        assert_eq!(Word::empty().weight(4), vec![0; 4]);
        let cancel: Word = "1 -1".parse().unwrap();
        assert_eq!(cancel.weight(2), vec![0, 0]);
    }

    #[test]
    fn orbit_partition_examples() {
        assert_eq!(
            orbit_partition(&[1, -3, 0, 3, -2]).parts(),
            &[3, 3, 2, 1]
        );
        assert_eq!(orbit_partition(&[3, 1]).parts(), &[3, 1]);
        assert_eq!(orbit_partition(&[-2, 1]).parts(), &[2, 1]);
    }

    #[test]
    fn partition_helpers() {
        let lam = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(lam.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert!(lam.contains(&Partition::new(vec![2, 1]).unwrap()));
        assert!(!lam.contains(&Partition::new(vec![2, 2]).unwrap()));
        let mu = Partition::new(vec![3, 2]).unwrap();
        assert!(mu.differs_by_one_cell(&lam));
        assert!(!lam.differs_by_one_cell(&lam));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn vector_io_round_trip() {
        let v = parse_vector("(1,-3,0,3,-2)").unwrap();
        assert_eq!(v, vec![1, -3, 0, 3, -2]);
        assert_eq!(format_vector(&v), "(1,-3,0,3,-2)");
        assert_eq!(parse_vector("1,-2").unwrap(), vec![1, -2]);
    }
}
