//! Frank tableaux in type C and the right and left key maps.
//!
//! A frank tableau for a column-length arrangement is the unique KN skew
//! tableau of that arrangement's shape rectifying to the given tableau.
//! It is computed along the crystal path: raise to the highest weight,
//! anti-rectify the Yamanouchi tableau, replay the lowering operators.

use std::collections::HashMap;

use crate::alphabet::Partition;
use crate::columns::Column;
use crate::crystal::{f_skew, to_highest};
use crate::error::{Error, Result};
use crate::jdt::type_a_reverse_rectify;
use crate::tableaux::{yamanouchi, KNSkewTableau, KNTableau, SkewShape};

/// The skew shape whose columns have the given lengths left to right,
/// built so that consecutive columns share at least one row. Conjugate
/// shapes are accumulated right to left:
/// `ν'_j = max(ν'_{j+1}, μ'_{j+1} - c_j)`, `μ'_j = ν'_j + c_j`.
pub fn skew_shape_for_lengths(lengths: &[usize]) -> Result<SkewShape> {
    if lengths.is_empty() {
        return SkewShape::new(Partition::zero(), Partition::zero());
    }
    if lengths.contains(&0) {
        return Err(Error::ShapeMismatch("column lengths must be positive".into()));
    }
    let m = lengths.len();
    let mut outer_conj = vec![0i64; m];
    let mut inner_conj = vec![0i64; m];
    outer_conj[m - 1] = lengths[m - 1] as i64;
    for j in (0..m - 1).rev() {
        inner_conj[j] = inner_conj[j + 1].max(outer_conj[j + 1] - lengths[j] as i64);
        outer_conj[j] = inner_conj[j] + lengths[j] as i64;
    }
    SkewShape::new(
        Partition::new(outer_conj)?.conjugate(),
        Partition::new(inner_conj)?.conjugate(),
    )
}

/// The unique KN skew tableau rectifying to `t` whose column lengths,
/// left to right, are the given arrangement of `t`'s column lengths.
pub fn frank_tableau(t: &KNTableau, order: &[usize]) -> Result<KNSkewTableau> {
    let mut own: Vec<usize> = t.columns().iter().map(Column::len).collect();
    let mut want = order.to_vec();
    own.sort_unstable();
    want.sort_unstable();
    if own != want {
        return Err(Error::ShapeMismatch(format!(
            "{order:?} is not an arrangement of the column lengths of the tableau"
        )));
    }
    let shape = skew_shape_for_lengths(order)?;
    let (highest, colors) = to_highest(t);
    debug_assert_eq!(highest, yamanouchi(&t.shape(), t.n())?);
    let mut skew = type_a_reverse_rectify(&highest, &shape)?;
    for &i in colors.iter().rev() {
        skew = f_skew(&skew, i).expect("the lowering path survives anti-rectification");
    }
    Ok(skew)
}

/// Column lengths of `t`, descending.
fn lengths_desc(t: &KNTableau) -> Vec<usize> {
    let mut lengths: Vec<usize> = t.columns().iter().map(Column::len).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// For each distinct column length `k`, the last column of the frank
/// tableau whose arrangement ends with `k` (all other lengths weakly
/// decreasing). By the last-column corollary the arrangement does not
/// matter, which the acceptance suite checks.
fn last_columns_by_length(t: &KNTableau) -> Result<HashMap<usize, Column>> {
    let lengths = lengths_desc(t);
    let mut out = HashMap::new();
    for &k in &lengths {
        if out.contains_key(&k) {
            continue;
        }
        let mut order = lengths.clone();
        let pos = order.iter().position(|&l| l == k).unwrap();
        order.remove(pos);
        order.push(k);
        let frank = frank_tableau(t, &order)?;
        out.insert(k, frank.columns().last().unwrap().clone());
    }
    Ok(out)
}

fn first_columns_by_length(t: &KNTableau) -> Result<HashMap<usize, Column>> {
    let lengths = lengths_desc(t);
    let mut out = HashMap::new();
    for &k in &lengths {
        if out.contains_key(&k) {
            continue;
        }
        let mut order = lengths.clone();
        let pos = order.iter().position(|&l| l == k).unwrap();
        order.remove(pos);
        order.insert(0, k);
        let frank = frank_tableau(t, &order)?;
        out.insert(k, frank.columns().first().unwrap().clone());
    }
    Ok(out)
}

/// K₊(T): each column of length k is replaced by the right column of the
/// last column of the frank tableaux ending with length k.
pub fn right_key(t: &KNTableau) -> KNTableau {
    let last = last_columns_by_length(t).expect("frank tableaux exist for every arrangement");
    let cols = t
        .columns()
        .iter()
        .map(|c| {
            let (_, r) = last[&c.len()].split().expect("frank columns are admissible");
            r
        })
        .collect();
    let out = KNTableau::from_columns_unchecked(t.n(), cols);
    debug_assert!(out.is_key_tableau());
    out
}

/// K₋(T): each column of length k is replaced by the left column of the
/// first column of the frank tableaux starting with length k.
pub fn left_key(t: &KNTableau) -> KNTableau {
    let first = first_columns_by_length(t).expect("frank tableaux exist for every arrangement");
    let cols = t
        .columns()
        .iter()
        .map(|c| {
            let (l, _) = first[&c.len()].split().expect("frank columns are admissible");
            l
        })
        .collect();
    let out = KNTableau::from_columns_unchecked(t.n(), cols);
    debug_assert!(out.is_key_tableau());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::rectify;
    use crate::tableaux::tableau_from_rows;

    fn running_example() -> KNTableau {
        tableau_from_rows(3, &[&[1, 3, -1], &[3, -3], &[-3]])
    }

    #[test]
    fn shapes_from_length_arrangements() {
        // Weakly decreasing lengths give a straight shape.
        let s = skew_shape_for_lengths(&[3, 2, 1]).unwrap();
        assert!(s.is_straight());
        assert_eq!(s.outer().parts(), &[3, 2, 1]);

        let s = skew_shape_for_lengths(&[1, 3]).unwrap();
        assert_eq!(s.outer().parts(), &[2, 2, 2]);
        assert_eq!(s.inner().parts(), &[1, 1]);

        let s = skew_shape_for_lengths(&[2, 3, 1]).unwrap();
        assert_eq!(s.outer().conjugate().parts(), &[3, 3, 1]);
        assert_eq!(s.inner().conjugate().parts(), &[1]);
    }

    #[test]
    fn frank_tableaux_of_the_running_example() {
        let t = running_example();
        // One frank tableau per arrangement of the lengths (3, 2, 1), all
        // rectifying back to T.
        let orders = [
            vec![3, 2, 1],
            vec![3, 1, 2],
            vec![2, 3, 1],
            vec![2, 1, 3],
            vec![1, 3, 2],
            vec![1, 2, 3],
        ];
        let mut seen = Vec::new();
        for order in &orders {
            let frank = frank_tableau(&t, order).unwrap();
            let got: Vec<usize> = frank.columns().iter().map(Column::len).collect();
            assert_eq!(&got, order);
            assert_eq!(rectify(&frank).unwrap(), t);
            seen.push(frank);
        }
        assert_eq!(seen.len(), 6);
        // The identity arrangement returns the tableau itself.
        assert_eq!(seen[0], t.to_skew());
    }

    #[test]
    fn right_key_of_the_running_example() {
        let t = running_example();
        assert_eq!(
            right_key(&t),
            tableau_from_rows(3, &[&[3, 3, -1], &[-2, -1], &[-1]])
        );
    }

    #[test]
    fn left_key_of_the_running_example() {
        let t = running_example();
        assert_eq!(
            left_key(&t),
            tableau_from_rows(3, &[&[1, 1, 2], &[2, 2], &[-3]])
        );
    }

    #[test]
    fn keys_fix_yamanouchi_tableaux() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let yam = yamanouchi(&lam, 2).unwrap();
        assert_eq!(right_key(&yam), yam);
        assert_eq!(left_key(&yam), yam);
    }

    #[test]
    fn frank_readings_are_frank_words() {
        // The reading of a frank tableau splits into maximal strictly
        // increasing runs whose lengths rearrange the column lengths of
        // P, every run is an admissible column, and P gives T back.
        let t = running_example();
        for order in [[3, 2, 1], [1, 2, 3], [2, 3, 1]] {
            let frank = frank_tableau(&t, &order).unwrap();
            let reading = frank.column_reading();
            let mut runs: Vec<Vec<crate::alphabet::Letter>> = Vec::new();
            for &l in reading.letters() {
                match runs.last_mut() {
                    Some(run) if *run.last().unwrap() < l => run.push(l),
                    _ => runs.push(vec![l]),
                }
            }
            let mut run_lengths: Vec<usize> = runs.iter().map(Vec::len).collect();
            run_lengths.sort_unstable();
            assert_eq!(run_lengths, vec![1, 2, 3]);
            for run in runs {
                assert!(Column::new(run).unwrap().is_admissible());
            }
            assert_eq!(crate::insertion::insert_word(3, &reading), t);
        }
    }

    #[test]
    fn last_right_columns_are_nested() {
        let t = running_example();
        let by_len = last_columns_by_length(&t).unwrap();
        let mut lens: Vec<usize> = by_len.keys().copied().collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        for w in lens.windows(2) {
            let (_, big) = by_len[&w[0]].split().unwrap();
            let (_, small) = by_len[&w[1]].split().unwrap();
            assert!(
                small.cells().iter().all(|l| big.contains(*l)),
                "r-columns fail to nest: {big} vs {small}"
            );
        }
    }

    #[test]
    fn right_key_is_constant_on_the_atom() {
        // Both members of U((1, -2)) have right key K((1, -2)).
        let k = crate::weyl::key_tableau(2, &[1, -2]);
        for rows in [[&[1i64, -2][..], &[2][..]], [&[1, -2], &[-2]]] {
            let t = tableau_from_rows(2, &rows);
            assert_eq!(right_key(&t), k);
        }
    }
}
