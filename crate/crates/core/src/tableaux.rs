//! Kashiwara-Nakashima straight and skew tableaux: validation through the
//! split form, column readings, Yamanouchi tableaux and key recognition.
//!
//! Tableaux are stored column-major (every algorithm here is
//! column-driven); rows are derived views.

use std::fmt;

use crate::alphabet::{Letter, Partition, Rank, WeightVector, Word};
use crate::columns::Column;
use crate::error::{Error, Result};

/// A skew shape μ/ν with ν ⊆ μ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!(
                "inner shape {inner} is not contained in outer shape {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::zero() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.size() == 0
    }

    pub fn num_cells(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(1) as usize
    }

    /// Rows occupied by column `c` (0-based): `top..top + len`.
    pub fn col_extent(&self, c: usize) -> (usize, usize) {
        let top = self.inner.conjugate().part(c + 1) as usize;
        let bottom = self.outer.conjugate().part(c + 1) as usize;
        (top, bottom.saturating_sub(top))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A KN skew tableau: all columns admissible and the split form
/// semistandard.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KNSkewTableau {
    n: Rank,
    shape: SkewShape,
    cols: Vec<Column>,
}

/// A KN tableau of straight shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KNTableau {
    n: Rank,
    cols: Vec<Column>,
}

/// Checks the split-form row condition between two horizontally adjacent
/// columns over the given overlapping rows (`offset` of the right column
/// relative to the left one, both 0-based from their own tops).
pub(crate) fn split_rows_compatible(
    left: &Column,
    right: &Column,
    left_top: usize,
    right_top: usize,
) -> std::result::Result<(), usize> {
    let (_, r_left) = left.split().expect("left column admissible");
    let (l_right, _) = right.split().expect("right column admissible");
    let lo = left_top.max(right_top);
    let hi = (left_top + left.len()).min(right_top + right.len());
    for row in lo..hi {
        if r_left.cells()[row - left_top] > l_right.cells()[row - right_top] {
            return Err(row);
        }
    }
    Ok(())
}

impl KNSkewTableau {
    /// Validates a filling: columns strictly increasing (enforced by
    /// `Column`), admissible, and the split form row-weakly increasing.
    pub fn new(n: Rank, shape: SkewShape, cols: Vec<Column>) -> Result<Self> {
        if cols.len() != shape.num_cols() {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} has {} columns, got {}",
                shape.num_cols(),
                cols.len()
            )));
        }
        for (c, column) in cols.iter().enumerate() {
            let (_, len) = shape.col_extent(c);
            if len == 0 {
                return Err(Error::ShapeMismatch(format!(
                    "shape {shape} has an empty column {c}"
                )));
            }
            if column.len() != len {
                return Err(Error::ShapeMismatch(format!(
                    "column {c} has {} cells, shape {shape} wants {len}",
                    column.len()
                )));
            }
            if !column.fits(n) || column.len() > n {
                return Err(Error::Invalid(format!(
                    "column {c} does not fit in the alphabet of rank {n}"
                )));
            }
            if let crate::columns::Admissibility::BreaksAt(z) = column.admissibility() {
                return Err(Error::NotAdmissible { col: Some(c), z });
            }
        }
        for c in 0..cols.len().saturating_sub(1) {
            let (lt, _) = shape.col_extent(c);
            let (rt, _) = shape.col_extent(c + 1);
            if let Err(row) = split_rows_compatible(&cols[c], &cols[c + 1], lt, rt) {
                return Err(Error::SplitNotSemistandard { row, col: c });
            }
        }
        Ok(KNSkewTableau { n, shape, cols })
    }

    /// Builds a tableau from rows, with `None` marking inner-shape cells.
    /// Placeholders must be leading in every row.
    pub fn from_rows(n: Rank, rows: &[Vec<Option<Letter>>]) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let lead = row.iter().take_while(|c| c.is_none()).count();
            if row[lead..].iter().any(|c| c.is_none()) {
                return Err(Error::Parse(format!(
                    "row {r}: inner-shape placeholders must be leading"
                )));
            }
            inner.push(lead as i64);
            outer.push(row.len() as i64);
        }
        let shape = SkewShape::new(
            Partition::new(outer).map_err(|e| Error::Parse(e.to_string()))?,
            Partition::new(inner).map_err(|e| Error::Parse(e.to_string()))?,
        )?;
        let mut cols = Vec::new();
        for c in 0..shape.num_cols() {
            let (top, len) = shape.col_extent(c);
            let cells: Vec<Letter> = rows
                .iter()
                .skip(top)
                .take(len)
                .map(|row| row[c].expect("cell inside the shape"))
                .collect();
            if let Some(i) = cells.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::NotColumnStrict { col: c, row: top + i + 1 });
            }
            cols.push(Column::new(cells)?);
        }
        Self::new(n, shape, cols)
    }

    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn num_cells(&self) -> usize {
        self.cols.iter().map(Column::len).sum()
    }

    /// Rows as (first column index, letters).
    pub fn rows(&self) -> Vec<(usize, Vec<Letter>)> {
        let nrows = self.shape.outer().num_parts();
        let mut rows = Vec::with_capacity(nrows);
        for r in 0..nrows {
            let start = self.shape.inner().part(r + 1) as usize;
            let end = self.shape.outer().part(r + 1) as usize;
            let letters = (start..end)
                .map(|c| {
                    let (top, _) = self.shape.col_extent(c);
                    self.cols[c].cells()[r - top]
                })
                .collect();
            rows.push((start, letters));
        }
        rows
    }

    /// The split form: every column replaced by `ℓC rC`, row offsets
    /// duplicated.
    pub fn split_form(&self) -> Result<KNSkewTableau> {
        let outer = Partition::new(self.shape.outer().parts().iter().map(|p| 2 * p).collect())?;
        let inner = Partition::new(self.shape.inner().parts().iter().map(|p| 2 * p).collect())?;
        let mut cols = Vec::with_capacity(2 * self.cols.len());
        for (c, column) in self.cols.iter().enumerate() {
            let (l, r) = column.split().map_err(|e| match e {
                Error::NotAdmissible { z, .. } => Error::NotAdmissible { col: Some(c), z },
                other => other,
            })?;
            cols.push(l);
            cols.push(r);
        }
        KNSkewTableau::new(self.n, SkewShape::new(outer, inner)?, cols)
    }

    /// Column reading: columns right to left, each top to bottom.
    pub fn column_reading(&self) -> Word {
        let mut letters = Vec::with_capacity(self.num_cells());
        for column in self.cols.iter().rev() {
            letters.extend_from_slice(column.cells());
        }
        Word::new(letters)
    }

    pub fn weight(&self) -> WeightVector {
        self.column_reading().weight(self.n)
    }
}

impl KNTableau {
    pub fn new(n: Rank, cols: Vec<Column>) -> Result<Self> {
        if cols.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::ShapeMismatch(
                "column lengths must be weakly decreasing".into(),
            ));
        }
        let lengths: Vec<i64> = cols.iter().map(|c| c.len() as i64).collect();
        let shape = SkewShape::straight(Partition::new(lengths)?.conjugate());
        let skew = KNSkewTableau::new(n, shape, cols)?;
        Ok(KNTableau { n, cols: skew.cols })
    }

    pub fn empty(n: Rank) -> Self {
        KNTableau { n, cols: Vec::new() }
    }

    pub(crate) fn from_columns_unchecked(n: Rank, cols: Vec<Column>) -> Self {
        KNTableau { n, cols }
    }

    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn num_cells(&self) -> usize {
        self.cols.iter().map(Column::len).sum()
    }

    pub fn shape(&self) -> Partition {
        let lengths: Vec<i64> = self.cols.iter().map(|c| c.len() as i64).collect();
        Partition::new(lengths).expect("weakly decreasing").conjugate()
    }

    pub fn to_skew(&self) -> KNSkewTableau {
        KNSkewTableau {
            n: self.n,
            shape: SkewShape::straight(self.shape()),
            cols: self.cols.clone(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let nrows = self.cols.first().map_or(0, Column::len);
        (0..nrows)
            .map(|r| {
                self.cols
                    .iter()
                    .take_while(|c| c.len() > r)
                    .map(|c| c.cells()[r])
                    .collect()
            })
            .collect()
    }

    pub fn column_reading(&self) -> Word {
        self.to_skew().column_reading()
    }

    pub fn weight(&self) -> WeightVector {
        self.column_reading().weight(self.n)
    }

    pub fn split_form(&self) -> Result<KNSkewTableau> {
        self.to_skew().split_form()
    }

    /// A key tableau: column sets nested right-to-left and no letter
    /// occurring together with its bar.
    pub fn is_key_tableau(&self) -> bool {
        for w in self.cols.windows(2) {
            if !w[1].cells().iter().all(|l| w[0].contains(*l)) {
                return false;
            }
        }
        self.cols
            .first()
            .is_none_or(|c| c.cells().iter().all(|l| !c.contains(l.bar())))
    }

    /// Entrywise comparison; requires equal shapes. Returns false for
    /// incomparable fillings.
    pub fn entrywise_leq(&self, other: &KNTableau) -> bool {
        if self.shape() != other.shape() {
            return false;
        }
        self.cols
            .iter()
            .zip(&other.cols)
            .all(|(a, b)| a.cells().iter().zip(b.cells()).all(|(x, y)| x <= y))
    }
}

/// The Yamanouchi tableau K(λ): row `i` filled with the letter `i`.
pub fn yamanouchi(lambda: &Partition, n: Rank) -> Result<KNTableau> {
    if lambda.num_parts() > n {
        return Err(Error::ShapeMismatch(format!(
            "{lambda} has more than {n} parts"
        )));
    }
    let conj = lambda.conjugate();
    let cols = (0..conj.num_parts())
        .map(|c| {
            Column::from_letters(
                (1..=conj.part(c + 1)).map(|i| Letter::new(i).unwrap()).collect(),
            )
        })
        .collect();
    Ok(KNTableau { n, cols })
}

fn format_rows(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|row| row.join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

impl fmt::Display for KNTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(|l| l.to_string()).collect())
            .collect();
        write!(f, "{}", format_rows(&rows))
    }
}

impl fmt::Debug for KNTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for KNSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|(start, letters)| {
                let mut row: Vec<String> = vec![".".into(); *start];
                row.extend(letters.iter().map(|l| l.to_string()));
                row
            })
            .collect();
        write!(f, "{}", format_rows(&rows))
    }
}

impl fmt::Debug for KNSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses the row format `"1 3 -1 / 3 -3 / -3"`; `.` or `·` mark
/// inner-shape cells of a skew tableau.
pub fn parse_skew_tableau(n: Rank, s: &str) -> Result<KNSkewTableau> {
    let mut rows = Vec::new();
    for row_text in s.split('/') {
        let mut row = Vec::new();
        for tok in row_text.split_whitespace() {
            if tok == "." || tok == "·" {
                row.push(None);
            } else {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cell {tok:?}")))?;
                row.push(Some(Letter::new(v)?));
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return KNSkewTableau::new(n, SkewShape::straight(Partition::zero()), Vec::new());
    }
    KNSkewTableau::from_rows(n, &rows)
}

pub fn parse_tableau(n: Rank, s: &str) -> Result<KNTableau> {
    let skew = parse_skew_tableau(n, s)?;
    if !skew.shape().is_straight() {
        return Err(Error::ShapeMismatch("expected a straight shape".into()));
    }
    KNTableau::new(n, skew.cols)
}

/// Builds a straight tableau from its rows; panics on invalid input, so
/// only suitable for literals in tests and examples.
pub fn tableau_from_rows(n: Rank, rows: &[&[i64]]) -> KNTableau {
    let rows: Vec<Vec<Option<Letter>>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| Some(Letter::new(v).unwrap())).collect())
        .collect();
    let skew = KNSkewTableau::from_rows(n, &rows).expect("valid tableau literal");
    assert!(skew.shape().is_straight());
    KNTableau { n, cols: skew.cols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::columns::col;

    #[test]
    fn split_form_of_example_tableau() {
        // Columns [2 3 -3], [2 3] of shape (2,2,1).
        let t = tableau_from_rows(3, &[&[2, 2], &[3, 3], &[-3]]);
        let spl = t.split_form().unwrap();
        assert_eq!(
            spl.columns(),
            &[col(&[1, 2, -3]), col(&[2, 3, -1]), col(&[2, 3]), col(&[2, 3])]
        );
        assert_eq!(spl.shape().outer().parts(), &[4, 4, 2]);
    }

    #[test]
    fn split_form_duplicates_positive_tableaux() {
        let t = tableau_from_rows(2, &[&[1, 1], &[2]]);
        let spl = t.split_form().unwrap();
        assert_eq!(
            spl.columns(),
            &[col(&[1, 2]), col(&[1, 2]), col(&[1]), col(&[1])]
        );
    }

    #[test]
    fn validation_errors() {
        // [1 -1] in the first column breaks the 1CC at 1.
        let bad = KNTableau::new(2, vec![col(&[1, -1]), col(&[2])]);
        assert_eq!(bad.unwrap_err(), Error::NotAdmissible { col: Some(0), z: 1 });

        let rows = vec![
            vec![Some(crate::alphabet::lt(1)), Some(crate::alphabet::lt(2))],
            vec![Some(crate::alphabet::lt(1))],
        ];
        assert!(matches!(
            KNSkewTableau::from_rows(2, &rows),
            Err(Error::NotColumnStrict { col: 0, .. })
        ));
    }

    #[test]
    fn accepts_the_kn_221_example() {
        let t = tableau_from_rows(3, &[&[2, 2], &[3, 3], &[-3]]);
        assert_eq!(t.weight(), vec![0, 2, 1]);
        assert_eq!(t.shape().parts(), &[2, 2, 1]);
    }

    #[test]
    fn column_reading_examples() {
        let t = tableau_from_rows(3, &[&[2, 2], &[3, 3], &[-3]]);
        assert_eq!(t.column_reading().to_string(), "2 3 2 3 -3");

        let single = KNTableau::new(3, vec![col(&[1, 2, -1])]);
        // A single inadmissible column is rejected outright.
        assert!(single.is_err());
        let single = KNTableau::new(3, vec![col(&[2, 3, -3])]).unwrap();
        assert_eq!(single.column_reading().to_string(), "2 3 -3");

        let t = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        assert_eq!(t.column_reading().to_string(), "-1 3 -3 1 3 -3");
    }

    #[test]
    fn yamanouchi_tableaux() {
        let k = yamanouchi(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        assert_eq!(k, tableau_from_rows(2, &[&[1, 1], &[2]]));
        assert_eq!(k.weight(), vec![2, 1]);

        assert_eq!(yamanouchi(&Partition::zero(), 2).unwrap(), KNTableau::empty(2));

        let k = yamanouchi(&Partition::new(vec![2, 2, 1]).unwrap(), 3).unwrap();
        assert_eq!(k, tableau_from_rows(3, &[&[1, 1], &[2, 2], &[3]]));
        assert_eq!(k.weight(), vec![2, 2, 1]);
    }

    #[test]
    fn key_tableau_recognition() {
        let key = tableau_from_rows(3, &[&[2, 2], &[3, -1], &[-1]]);
        assert!(key.is_key_tableau());

        let not_key = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        assert!(!not_key.is_key_tableau());

        let yam = yamanouchi(&Partition::new(vec![3, 1]).unwrap(), 3).unwrap();
        assert!(yam.is_key_tableau());
    }

    #[test]
    fn text_round_trip() {
        let t = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        assert_eq!(t.to_string(), "1 3 -1 / 3 -3 / -3");
        assert_eq!(parse_tableau(3, &t.to_string()).unwrap(), t);

        let skew = parse_skew_tableau(3, ". 1 / 1 2").unwrap();
        assert_eq!(skew.shape().inner().parts(), &[1]);
        assert_eq!(skew.to_string(), ". 1 / 1 2");
    }
}
