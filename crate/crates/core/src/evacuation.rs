//! The star map on words and the two evacuation algorithms realizing the
//! Lusztig involution on type C crystals.

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::insertion::insert_word;
use crate::jdt::rectify;
use crate::tableaux::{KNSkewTableau, KNTableau};

/// w*: the reverse of the letterwise complement.
pub fn star(w: &Word) -> Word {
    Word::new(w.letters().iter().rev().map(|l| l.bar()).collect())
}

/// Evacuation by insertion: T^Ev = P(cr(T)*).
pub fn evacuate_insertion(t: &KNTableau) -> KNTableau {
    insert_word(t.n(), &star(&t.column_reading()))
}

/// T⁰ = complement(π-rotate(T)), validated as a KN skew tableau.
pub fn rotate_complement(t: &KNTableau) -> Result<KNSkewTableau> {
    let rows = t.rows();
    let nrows = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let grid: Vec<Vec<Option<Letter>>> = (0..nrows)
        .map(|i| {
            let src = &rows[nrows - 1 - i];
            let mut row: Vec<Option<Letter>> = vec![None; width - src.len()];
            row.extend(src.iter().rev().map(|l| Some(l.bar())));
            row
        })
        .collect();
    KNSkewTableau::from_rows(t.n(), &grid)
        .map_err(|e| Error::RotatedNotAdmissible(Box::new(e)))
}

/// Evacuation by sliding: rectify T⁰. Agrees with the insertion route
/// whenever T⁰ validates.
pub fn evacuate_jdt(t: &KNTableau) -> Result<KNTableau> {
    rectify(&rotate_complement(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{parse_skew_tableau, tableau_from_rows};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&w("-1 3 -3 1 3 -3")), w("3 -3 -1 3 -3 1"));
        let v = w("2 -1 3 3 -2");
        assert_eq!(star(&star(&v)), v);
        assert_eq!(star(&w("2")), w("-2"));
    }

    #[test]
    fn evacuation_by_insertion() {
        let t = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        let ev = evacuate_insertion(&t);
        assert_eq!(ev, tableau_from_rows(3, &[&[1, 2, -2], &[3, -1], &[-3]]));
        assert_eq!(evacuate_insertion(&ev), t);
        let wt: Vec<i64> = t.weight().iter().map(|x| -x).collect();
        assert_eq!(ev.weight(), wt);
    }

    #[test]
    fn rotate_complement_of_the_example() {
        let t = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        let t0 = rotate_complement(&t).unwrap();
        assert_eq!(t0, parse_skew_tableau(3, ". . 3 / . 3 -3 / 1 -3 -1").unwrap());
    }

    #[test]
    fn star_insertion_runs_through_the_printed_tableaux() {
        // The six intermediate insertion tableaux for w* = 3 -3 -1 3 -3 1.
        let stages: [&[&[i64]]; 6] = [
            &[&[3]],
            &[&[3], &[-3]],
            &[&[3], &[-3], &[-1]],
            &[&[2, -2], &[3], &[-1]],
            &[&[2, -2], &[3, -1], &[-3]],
            &[&[1, 2, -2], &[3, -1], &[-3]],
        ];
        let w: Word = "3 -3 -1 3 -3 1".parse().unwrap();
        let mut t = KNTableau::empty(3);
        for (l, rows) in w.letters().iter().zip(stages) {
            t = crate::insertion::insert_letter(&t, *l);
            assert_eq!(t, tableau_from_rows(3, rows));
        }
    }

    #[test]
    fn evacuation_by_jdt_agrees() {
        let t = tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]]);
        assert_eq!(evacuate_jdt(&t).unwrap(), evacuate_insertion(&t));

        let cell = tableau_from_rows(2, &[&[2]]);
        assert_eq!(evacuate_jdt(&cell).unwrap(), tableau_from_rows(2, &[&[-2]]));
    }
}
