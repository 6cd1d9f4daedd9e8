//! Baker-Lecouvey column insertion and the Robinson-Schensted type C
//! correspondence.
//!
//! Insertion behaves like column insertion for semistandard tableaux
//! except in three situations: bumping a barred letter whose unbarred
//! partner sits in the same column (type I), inserting an unbarred letter
//! whose bar sits in the column (type II a/b), and an appended letter
//! breaking the one-column condition (case III), which removes a
//! symmetric pair and slides the freed cell out.

use crate::alphabet::{Letter, Partition, Rank, Word};
use crate::columns::{Admissibility, Column};
use crate::error::{Error, Result};
use crate::jdt;
use crate::tableaux::KNTableau;

/// The shape history of an insertion; consecutive shapes differ in
/// exactly one cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>, n: Rank) -> Result<Self> {
        for w in shapes.windows(2) {
            if !w[0].differs_by_one_cell(&w[1]) {
                return Err(Error::Invalid(format!(
                    "consecutive shapes {} and {} differ by more than one cell",
                    w[0], w[1]
                )));
            }
        }
        if let Some(first) = shapes.first() {
            if first.size() != 1 {
                return Err(Error::Invalid("an oscillating tableau starts at one cell".into()));
            }
        }
        if shapes.iter().any(|s| s.num_parts() > n) {
            return Err(Error::Invalid(format!("a shape exceeds {n} rows")));
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn final_shape(&self) -> Partition {
        self.shapes.last().cloned().unwrap_or_else(Partition::zero)
    }
}

fn letter(v: i64) -> Letter {
    Letter::new(v).expect("nonzero letter")
}

/// Removes one occurrence of `l`.
fn remove(cells: &mut Vec<Letter>, l: Letter) {
    let pos = cells.iter().position(|x| *x == l).expect("letter present");
    cells.remove(pos);
}

enum Outcome {
    /// Letter placed; insertion over.
    Done,
    /// `z` and `z̄` were erased from column `col` after an append broke
    /// the 1CC there.
    Break { col: usize },
}

/// Inserts `x` into column `j` of `cols`, bumping rightwards to the end.
fn insert_chain(cols: &mut Vec<Vec<Letter>>, mut j: usize, mut x: Letter, n: Rank) -> Outcome {
    loop {
        if j == cols.len() {
            cols.push(vec![x]);
            return Outcome::Done;
        }
        let col = &mut cols[j];

        // Type II: inserting x with x̄ already in the column.
        if !x.is_barred() && col.contains(&x.bar()) {
            let xv = x.value();
            // Maximal barred string x̄, (x+1)bar, …, (v-1)bar in the column.
            let mut v = xv + 1;
            while v <= n as i64 && col.contains(&letter(-v)) {
                v += 1;
            }
            // β is the entry just above (v-1)bar.
            let pos = col.iter().position(|l| *l == letter(-(v - 1))).unwrap();
            let beta = if pos > 0 { Some(col[pos - 1]) } else { None };
            let bumped = match beta {
                Some(b) if b >= letter(v) => {
                    // IIa: replace the smallest entry δ ≥ v by v and put v̄
                    // at the head of the barred string.
                    let delta = *col.iter().find(|l| **l >= letter(v)).unwrap();
                    remove(col, x.bar());
                    remove(col, delta);
                    col.push(letter(v));
                    col.push(letter(-v));
                    col.sort();
                    delta
                }
                _ => {
                    // IIb: the unbarred string v-1, …, u+1 above the barred
                    // one is nonempty only when β = v-1; otherwise u = v-1.
                    let u = if beta == Some(letter(v - 1)) {
                        let mut m = v - 1;
                        while m > 1 && col.contains(&letter(m - 1)) {
                            m -= 1;
                        }
                        m - 1
                    } else {
                        v - 1
                    };
                    debug_assert!(u >= 1, "admissibility keeps the string above 1");
                    remove(col, x.bar());
                    col.push(letter(u));
                    col.sort();
                    letter(-u)
                }
            };
            x = bumped;
            j += 1;
            continue;
        }

        match col.iter().position(|l| *l >= x) {
            None => {
                col.push(x);
                let column = Column::from_letters(col.clone());
                if let Admissibility::BreaksAt(z) = column.admissibility() {
                    col.clear();
                    col.extend(column.cells().iter().copied().filter(|l| l.abs() != z));
                    return Outcome::Break { col: j };
                }
                *col = column.cells().to_vec();
                return Outcome::Done;
            }
            Some(p) => {
                let target = col[p];
                if target.is_barred() && col.contains(&target.bar()) {
                    // Type I: α takes ȳ's cell and the string y, …, u+1
                    // slides down one value, expelling ū to the right.
                    let y = target.abs();
                    let mut m = y;
                    while m > 1 && col.contains(&letter(m - 1)) {
                        m -= 1;
                    }
                    let u = m - 1;
                    debug_assert!(u >= 1, "admissibility keeps the string above 1");
                    remove(col, target);
                    remove(col, letter(y));
                    col.push(x);
                    col.push(letter(u));
                    col.sort();
                    x = letter(-u);
                } else {
                    col[p] = x;
                    x = target;
                }
                j += 1;
            }
        }
    }
}

/// Inserts one letter, yielding a valid KN tableau. The cell count grows
/// by one except when case III erases a symmetric pair.
pub fn insert_letter(t: &KNTableau, x: Letter) -> KNTableau {
    let n = t.n();
    debug_assert!(x.fits(n));
    let mut cols: Vec<Vec<Letter>> = t.columns().iter().map(|c| c.cells().to_vec()).collect();
    match insert_chain(&mut cols, 0, x, n) {
        Outcome::Done => {}
        Outcome::Break { col } => {
            if cols[col].is_empty() {
                // The whole column vanished; remaining single-cell columns
                // shift one step left.
                cols.remove(col);
            } else {
                // The erasure frees a cell at the top and the bottom of
                // the column; the top one is an inner corner to slide out.
                let tops: Vec<usize> = (0..cols.len()).map(|c| usize::from(c == col)).collect();
                let columns = cols.iter().map(|c| Column::from_letters(c.clone())).collect();
                let state = jdt::SlideState::from_columns(n, columns, tops);
                return jdt::rectify_state(state).expect("case III slide yields a tableau");
            }
        }
    }
    let columns = cols.into_iter().map(Column::from_letters).collect();
    let out = KNTableau::from_columns_unchecked(n, columns);
    debug_assert!(
        KNTableau::new(n, out.columns().to_vec()).is_ok(),
        "insertion produced an invalid tableau: {out}"
    );
    out
}

/// P(w): inserts the word left to right starting from the empty tableau.
pub fn insert_word(n: Rank, w: &Word) -> KNTableau {
    let mut t = KNTableau::empty(n);
    for &l in w.letters() {
        t = insert_letter(&t, l);
    }
    t
}

/// The Robinson-Schensted type C correspondence `w ↦ (P(w), Q(w))`.
pub fn robinson_schensted(n: Rank, w: &Word) -> (KNTableau, OscillatingTableau) {
    let mut t = KNTableau::empty(n);
    let mut shapes = Vec::with_capacity(w.len());
    for &l in w.letters() {
        t = insert_letter(&t, l);
        shapes.push(t.shape());
    }
    let q = OscillatingTableau::new(shapes, n).expect("insertion shapes oscillate");
    (t, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::lt;
    use crate::tableaux::tableau_from_rows;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn special_bumps_of_the_running_example() {
        // Type I: inserting -3 into 2 / 3 / -2.
        let t = tableau_from_rows(3, &[&[2], &[3], &[-2]]);
        let got = insert_letter(&t, lt(-3));
        assert_eq!(got, tableau_from_rows(3, &[&[1, -1], &[3], &[-3]]));

        // Type IIb: inserting 1 afterwards.
        let got = insert_letter(&got, lt(1));
        assert_eq!(got, tableau_from_rows(3, &[&[1, 1, -1], &[3], &[-3]]));

        // Type IIa: P(2 -1 1) from the remark.
        let t = tableau_from_rows(2, &[&[2], &[-1]]);
        let got = insert_letter(&t, lt(1));
        assert_eq!(got, tableau_from_rows(2, &[&[2, 2], &[-2]]));
    }

    #[test]
    fn insert_word_example() {
        let p = insert_word(3, &w("2 3 -2 -3 1"));
        assert_eq!(p, tableau_from_rows(3, &[&[1, 1, -1], &[3], &[-3]]));
        assert_eq!(insert_word(3, &Word::empty()), KNTableau::empty(3));

        let t = tableau_from_rows(3, &[&[2, 2], &[3, 3], &[-3]]);
        assert_eq!(insert_word(3, &t.column_reading()), t);
    }

    #[test]
    fn weight_is_preserved() {
        let word = w("2 3 -2 -3 1 1 -1 2");
        let p = insert_word(3, &word);
        assert_eq!(p.weight(), word.weight(3));
    }

    #[test]
    fn robinson_schensted_example() {
        let (p, q) = robinson_schensted(3, &w("2 3 -2 -3 1"));
        assert_eq!(p, tableau_from_rows(3, &[&[1, 1, -1], &[3], &[-3]]));
        let shapes: Vec<&[i64]> = q.shapes().iter().map(|s| s.parts()).collect();
        assert_eq!(
            shapes,
            vec![
                &[1][..],
                &[1, 1][..],
                &[1, 1, 1][..],
                &[2, 1, 1][..],
                &[3, 1, 1][..]
            ]
        );
        assert_eq!(q.final_shape(), p.shape());
    }

    #[test]
    fn single_letter_and_cancellation() {
        let (p, q) = robinson_schensted(2, &w("-2"));
        assert_eq!(p, tableau_from_rows(2, &[&[-2]]));
        assert_eq!(q.shapes()[0].parts(), &[1]);

        // Case III over n = 1: the pair cancels; confirmed against the
        // elementary Knuth oracle in the acceptance suite.
        let (p, q) = robinson_schensted(1, &w("1 -1"));
        assert_eq!(p, KNTableau::empty(1));
        let shapes: Vec<&[i64]> = q.shapes().iter().map(|s| s.parts()).collect();
        assert_eq!(shapes, vec![&[1][..], &[][..]]);
    }

    #[test]
    fn case_three_with_trailing_columns() {
        // P(1 -2 1 -2 -1): the last letter breaks the first column at 1
        // and the freed cell slides out horizontally.
        let p = insert_word(2, &w("1 -2 1 -2 -1"));
        assert_eq!(p, tableau_from_rows(2, &[&[1, -2], &[-2]]));
    }
}
