//! Admissible columns: the one-column condition (1CC), the split
//! `(ℓC, rC)`, and the bijection Φ onto coadmissible columns.

use std::fmt;

use crate::alphabet::{Letter, Rank, WeightVector, Word};
use crate::error::{Error, Result};

/// A strictly increasing sequence of letters, displayed top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Column {
    cells: Vec<Letter>,
}

/// Outcome of the 1CC test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// The minimal `z` such that `z` and `z̄` occur and more than `z`
    /// letters have absolute value at most `z`.
    BreaksAt(i64),
}

impl Column {
    pub fn new(cells: Vec<Letter>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Invalid("a column needs at least one cell".into()));
        }
        if let Some(i) = cells.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotColumnStrict { col: 0, row: i + 1 });
        }
        Ok(Column { cells })
    }

    /// Internal constructor for letter multisets known to be distinct.
    pub(crate) fn from_letters(mut cells: Vec<Letter>) -> Self {
        cells.sort();
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        Column { cells }
    }

    pub fn cells(&self) -> &[Letter] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.cells.binary_search(&l).is_ok()
    }

    pub fn contains_value(&self, v: i64) -> bool {
        v != 0 && self.contains(Letter::new(v).unwrap())
    }

    pub fn fits(&self, n: Rank) -> bool {
        self.cells.iter().all(|l| l.fits(n))
    }

    pub fn word(&self) -> Word {
        Word::new(self.cells.clone())
    }

    pub fn weight(&self, n: Rank) -> WeightVector {
        self.word().weight(n)
    }

    /// Unbarred values `z` such that both `z` and `z̄` occur, descending.
    fn symmetric_pairs(&self) -> Vec<i64> {
        let mut zs: Vec<i64> = self
            .cells
            .iter()
            .filter(|l| !l.is_barred() && self.contains(l.bar()))
            .map(|l| l.value())
            .collect();
        zs.sort_unstable_by(|a, b| b.cmp(a));
        zs
    }

    /// Tests the one-column condition.
    pub fn admissibility(&self) -> Admissibility {
        let mut pairs = self.symmetric_pairs();
        pairs.reverse(); // ascending: the first failure is the minimal z
        for z in pairs {
            let count = self.cells.iter().filter(|l| l.abs() <= z).count() as i64;
            if count > z {
                return Admissibility::BreaksAt(z);
            }
        }
        Admissibility::Admissible
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility() == Admissibility::Admissible
    }

    /// The split `(ℓC, rC)`: for pairs `z_1 > … > z_r` pick unbarred
    /// letters `t_1 > … > t_r` not occurring in `C` (barred or not) with
    /// `t_i < min(t_{i-1}, z_i)`, each as large as possible; then `ℓC`
    /// replaces each `z_i` by `t_i` and `rC` replaces each `z̄_i` by `t̄_i`.
    pub fn split(&self) -> Result<(Column, Column)> {
        if let Admissibility::BreaksAt(z) = self.admissibility() {
            return Err(Error::NotAdmissible { col: None, z });
        }
        let zs = self.symmetric_pairs();
        if zs.is_empty() {
            return Ok((self.clone(), self.clone()));
        }
        let mut ts = Vec::with_capacity(zs.len());
        let mut upper = i64::MAX;
        for &z in &zs {
            let mut t = upper.min(z) - 1;
            while t >= 1 && (self.contains_value(t) || self.contains_value(-t)) {
                t -= 1;
            }
            if t < 1 {
                // Split exists iff the 1CC holds; asserted in tests.
                return Err(Error::NotAdmissible { col: None, z });
            }
            ts.push(t);
            upper = t;
        }
        let mut left = self.cells.clone();
        let mut right = self.cells.clone();
        for (&z, &t) in zs.iter().zip(&ts) {
            let zi = left.iter().position(|l| l.value() == z).unwrap();
            left[zi] = Letter::new(t).unwrap();
            let zbi = right.iter().position(|l| l.value() == -z).unwrap();
            right[zbi] = Letter::new(-t).unwrap();
        }
        Ok((Column::from_letters(left), Column::from_letters(right)))
    }

    /// Coadmissibility: every pair `i`, `ī` at rows `a < b` counted from
    /// the top satisfies `b - a ≤ n - i`.
    pub fn is_coadmissible(&self, n: Rank) -> bool {
        for (a, l) in self.cells.iter().enumerate() {
            if l.is_barred() {
                continue;
            }
            if let Ok(b) = self.cells.binary_search(&l.bar()) {
                if (b - a) as i64 > n as i64 - l.value() {
                    return false;
                }
            }
        }
        true
    }

    /// Φ(C): same size, unbarred entries from `ℓC`, barred entries from
    /// `rC`. The result is coadmissible.
    pub fn phi(&self) -> Result<Column> {
        let (left, right) = self.split()?;
        let mut cells: Vec<Letter> = left
            .cells
            .iter()
            .filter(|l| !l.is_barred())
            .chain(right.cells.iter().filter(|l| l.is_barred()))
            .copied()
            .collect();
        cells.sort();
        Ok(Column { cells })
    }

    /// Inverse of Φ. The pairs of a coadmissible column are the `t_i` of
    /// the original split; the erased `z_i` are recovered bottom-up as the
    /// smallest letters above `max(z_{i+1}, t_i)` absent from the column.
    pub fn phi_inverse(&self, n: Rank) -> Result<Column> {
        if !self.is_coadmissible(n) {
            return Err(Error::NotCoadmissible { n });
        }
        let ts = self.symmetric_pairs();
        if ts.is_empty() {
            return Ok(self.clone());
        }
        let mut zs = vec![0i64; ts.len()];
        let mut lower = 0i64;
        for i in (0..ts.len()).rev() {
            let mut z = lower.max(ts[i]) + 1;
            while z <= n as i64 && (self.contains_value(z) || self.contains_value(-z)) {
                z += 1;
            }
            if z > n as i64 {
                return Err(Error::NotCoadmissible { n });
            }
            zs[i] = z;
            lower = z;
        }
        let mut cells = self.cells.clone();
        for (&t, &z) in ts.iter().zip(&zs) {
            let ti = cells.iter().position(|l| l.value() == t).unwrap();
            cells[ti] = Letter::new(z).unwrap();
            let tbi = cells.iter().position(|l| l.value() == -t).unwrap();
            cells[tbi] = Letter::new(-z).unwrap();
        }
        let out = Column::from_letters(cells);
        debug_assert!(out.is_admissible());
        Ok(out)
    }

    /// `C⁰`: π-rotation followed by complement. Negation reverses the
    /// alphabet order, so this is again a column.
    pub fn rotate_complement(&self) -> Column {
        let cells = self.cells.iter().rev().map(|l| l.bar()).collect();
        Column { cells }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses `"[2 3 -3]"`, listed top to bottom.
pub fn parse_column(s: &str) -> Result<Column> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(trimmed);
    let word: Word = inner.parse()?;
    Column::new(word.letters().to_vec())
}

#[cfg(test)]
pub(crate) fn col(values: &[i64]) -> Column {
    Column::new(values.iter().map(|&v| crate::alphabet::lt(v)).collect()).unwrap()
}
