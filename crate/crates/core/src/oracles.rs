//! Brute-force oracles backing the acceptance suite. They work from the
//! definitions only and are never called by production paths; hard
//! instance-size guards replace silent slowness.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::alphabet::{orbit_partition, Letter, Partition, Rank, Word};
use crate::columns::{Admissibility, Column};
use crate::crystal::Color;
use crate::error::{Error, Result};
use crate::insertion::insert_word;
use crate::tableaux::{split_rows_compatible, KNSkewTableau, KNTableau, SkewShape};
use crate::weyl::SignedPermutation;

/// Every strictly increasing column over `[±n]` with at most `max_len`
/// cells (not necessarily admissible).
pub fn enumerate_columns(n: Rank, max_len: usize) -> Vec<Column> {
    let alphabet: Vec<Letter> = (1..=n as i64)
        .map(|v| Letter::new(v).unwrap())
        .chain((1..=n as i64).rev().map(|v| Letter::new(-v).unwrap()))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Letter>)> = vec![(0, Vec::new())];
    while let Some((start, prefix)) = stack.pop() {
        for (i, &letter) in alphabet.iter().enumerate().skip(start) {
            let mut next = prefix.clone();
            next.push(letter);
            out.push(Column::from_letters(next.clone()));
            if next.len() < max_len {
                stack.push((i + 1, next));
            }
        }
    }
    out
}

/// Every admissible column over `[±n]` with at most `max_len` cells.
pub fn enumerate_admissible_columns(n: Rank, max_len: usize) -> Vec<Column> {
    enumerate_columns(n, max_len)
        .into_iter()
        .filter(Column::is_admissible)
        .collect()
}

fn guard_kn_instance(lambda: &Partition, n: Rank) -> Result<()> {
    if lambda.size() > 8 || n > 3 {
        return Err(Error::InstanceTooLarge(format!(
            "enumeration of KN({lambda}, {n}) is out of desk scale"
        )));
    }
    Ok(())
}

/// All KN tableaux of shape λ over `[±n]`, by exhaustive filling.
pub fn enumerate_kn(lambda: &Partition, n: Rank) -> Result<Vec<KNTableau>> {
    guard_kn_instance(lambda, n)?;
    if lambda.num_parts() > n {
        return Ok(Vec::new());
    }
    let conj = lambda.conjugate();
    let lengths: Vec<usize> = (1..=conj.num_parts()).map(|c| conj.part(c) as usize).collect();
    let pool = enumerate_admissible_columns(n, n);
    let mut out = Vec::new();
    let mut partial: Vec<Column> = Vec::new();
    fn fill(
        lengths: &[usize],
        pool: &[Column],
        partial: &mut Vec<Column>,
        out: &mut Vec<KNTableau>,
        n: Rank,
    ) {
        let c = partial.len();
        if c == lengths.len() {
            out.push(KNTableau::from_columns_unchecked(n, partial.clone()));
            return;
        }
        for cand in pool.iter().filter(|col| col.len() == lengths[c]) {
            if let Some(prev) = partial.last() {
                if split_rows_compatible(prev, cand, 0, 0).is_err() {
                    continue;
                }
            }
            partial.push(cand.clone());
            fill(lengths, pool, partial, out, n);
            partial.pop();
        }
    }
    fill(&lengths, &pool, &mut partial, &mut out, n);
    out.sort();
    Ok(out)
}

/// All KN skew tableaux of the given shape, by exhaustive filling.
pub fn enumerate_kn_skew(shape: &SkewShape, n: Rank) -> Result<Vec<KNSkewTableau>> {
    if shape.num_cells() > 8 || n > 3 {
        return Err(Error::InstanceTooLarge(format!(
            "enumeration of skew fillings of {shape} is out of desk scale"
        )));
    }
    let ncols = shape.num_cols();
    let extents: Vec<(usize, usize)> = (0..ncols).map(|c| shape.col_extent(c)).collect();
    let pool = enumerate_admissible_columns(n, n);
    let mut out = Vec::new();
    let mut partial: Vec<Column> = Vec::new();
    fn fill(
        extents: &[(usize, usize)],
        pool: &[Column],
        shape: &SkewShape,
        partial: &mut Vec<Column>,
        out: &mut Vec<KNSkewTableau>,
        n: Rank,
    ) {
        let c = partial.len();
        if c == extents.len() {
            if let Ok(t) = KNSkewTableau::new(n, shape.clone(), partial.clone()) {
                out.push(t);
            }
            return;
        }
        for cand in pool.iter().filter(|col| col.len() == extents[c].1) {
            if c > 0
                && split_rows_compatible(&partial[c - 1], cand, extents[c - 1].0, extents[c].0)
                    .is_err()
            {
                continue;
            }
            partial.push(cand.clone());
            fill(extents, pool, shape, partial, out, n);
            partial.pop();
        }
    }
    fill(&extents, &pool, shape, &mut partial, &mut out, n);
    Ok(out)
}

/// The staircase-difference skew tableau with column reading `w`: one
/// cell per column, the j-th letter sitting in the j-th row from the top
/// and the j-th column from the right. Rectifying it is an alternative,
/// slide-based route to the insertion tableau P(w).
pub fn diagonal_tableau(n: Rank, w: &Word) -> Result<KNSkewTableau> {
    let k = w.len();
    let outer = Partition::new((1..=k as i64).rev().collect())?;
    let inner = Partition::new((0..k as i64).rev().collect())?;
    let cols = w
        .letters()
        .iter()
        .rev()
        .map(|&l| Column::from_letters(vec![l]))
        .collect();
    KNSkewTableau::new(n, SkewShape::new(outer, inner)?, cols)
}

/// Breadth-first distances over the Cayley graph of B_n give one shortest
/// word per element, straight from the definition of length.
fn bfs_reduced_word(sigma: &SignedPermutation) -> Vec<Color> {
    let n = sigma.n();
    let id = SignedPermutation::identity(n);
    let mut parent: std::collections::HashMap<SignedPermutation, (SignedPermutation, Color)> =
        std::collections::HashMap::new();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(cur) = queue.pop_front() {
        if cur == *sigma {
            break;
        }
        for i in 1..=n {
            let next = cur.right_mul_gen(i);
            if seen.insert(next.clone()) {
                parent.insert(next.clone(), (cur.clone(), i));
                queue.push_back(next);
            }
        }
    }
    let mut word = Vec::new();
    let mut cur = sigma.clone();
    while let Some((prev, i)) = parent.get(&cur) {
        word.push(*i);
        cur = prev.clone();
    }
    word.reverse();
    word
}

/// Everything below `rho`: the products of all subsequences of one
/// reduced word of `rho`.
pub fn bruhat_lower_set(rho: &SignedPermutation) -> Result<HashSet<SignedPermutation>> {
    let n = rho.n();
    if n > 3 {
        return Err(Error::InstanceTooLarge(
            "subword oracle is limited to n ≤ 3".into(),
        ));
    }
    let word = bfs_reduced_word(rho);
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut cur = SignedPermutation::identity(n);
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                cur = cur.right_mul_gen(i);
            }
        }
        out.insert(cur);
    }
    Ok(out)
}

/// Subword criterion for the Bruhat order, straight from the definition.
pub fn bruhat_subword_oracle(
    sigma: &SignedPermutation,
    rho: &SignedPermutation,
) -> Result<bool> {
    Ok(bruhat_lower_set(rho)?.contains(sigma))
}

/// By the length formula, a second reduced word (peeling the largest
/// descent instead of the smallest); used for reduced-word-independence
/// checks.
pub fn alternative_reduced_word(sigma: &SignedPermutation) -> Vec<Color> {
    let n = sigma.n();
    let mut cur = sigma.clone();
    let mut peeled = Vec::new();
    while !cur.is_identity() {
        let i = (1..=n)
            .rev()
            .find(|&i| cur.is_right_descent(i))
            .expect("non-identity elements have a descent");
        peeled.push(i);
        cur = cur.right_mul_gen(i);
    }
    peeled.reverse();
    peeled
}

/// B̂_v by the set-difference definition: B_v minus every strictly
/// smaller Demazure crystal in the orbit.
pub fn atom_by_set_difference(n: Rank, v: &[i64]) -> Result<BTreeSet<KNTableau>> {
    let lambda = orbit_partition(v);
    let mut atom = crate::demazure::demazure_crystal(n, v)?;
    let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
    for sigma in SignedPermutation::all(n) {
        orbit.insert(sigma.act(&lambda.to_vector(n)));
    }
    for u in orbit {
        if u.as_slice() != v && crate::weyl::bruhat_leq_orbit(n, &u, v)? {
            for t in crate::demazure::demazure_crystal(n, &u)? {
                atom.remove(&t);
            }
        }
    }
    Ok(atom)
}

/// Does the strictly increasing word break the 1CC with every proper
/// prefix admissible? Returns the breaking letter.
fn k5_breaking_column(letters: &[Letter]) -> Option<i64> {
    if letters.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    let full = Column::from_letters(letters.to_vec());
    let Admissibility::BreaksAt(z) = full.admissibility() else {
        return None;
    };
    // By the remark after the Knuth relations, checking proper prefixes
    // suffices for checking proper factors.
    for k in 1..letters.len() {
        if !Column::from_letters(letters[..k].to_vec()).is_admissible() {
            return None;
        }
    }
    Some(z)
}

/// All words one elementary Knuth relation (K1-K5) away from `w`.
fn knuth_neighbours(w: &Word, n: Rank, max_len: usize) -> Vec<Word> {
    let ls = w.letters();
    let mut out = Vec::new();
    let not_bar_pair = |beta: Letter, gamma: Letter| !(gamma.value() > 0 && beta == gamma.bar());
    // K1 and K2 in both directions.
    for p in 0..ls.len().saturating_sub(2) {
        let (a, b, c) = (ls[p], ls[p + 1], ls[p + 2]);
        let mut push = |x: Letter, y: Letter, z: Letter| {
            let mut v = ls.to_vec();
            v[p] = x;
            v[p + 1] = y;
            v[p + 2] = z;
            out.push(Word::new(v));
        };
        // K1: γβα ~ βγα with γ < α ≤ β, (β, γ) ≠ (x̄, x).
        if a < c && c <= b && not_bar_pair(b, a) {
            push(b, a, c);
        }
        if b < c && c <= a && not_bar_pair(a, b) {
            push(b, a, c);
        }
        // K2: αβγ ~ αγβ with γ ≤ α < β, (β, γ) ≠ (x̄, x).
        if c <= a && a < b && not_bar_pair(b, c) {
            push(a, c, b);
        }
        if b <= a && a < c && not_bar_pair(c, b) {
            push(a, c, b);
        }
        // K3: (y+1)(y+1bar)β ~ ȳyβ with y < β < ȳ, y ∈ [n-1].
        if a.value() >= 2 && b == a.bar() {
            let y = a.value() - 1;
            if Letter::new(y).unwrap() < c && c < Letter::new(-y).unwrap() {
                push(Letter::new(-y).unwrap(), Letter::new(y).unwrap(), c);
            }
        }
        if a.is_barred() && b == a.bar() {
            let y = b.value();
            if y < n as i64 && b < c && c < a {
                push(Letter::new(y + 1).unwrap(), Letter::new(-(y + 1)).unwrap(), c);
            }
        }
        // K4: βȳy ~ β(y+1)(y+1bar) with y < β < ȳ.
        if c.value() > 0 && b == c.bar() {
            let y = c.value();
            if y < n as i64 && c < a && a < b {
                push(a, Letter::new(y + 1).unwrap(), Letter::new(-(y + 1)).unwrap());
            }
        }
        if b.value() >= 2 && c == b.bar() {
            let y = b.value() - 1;
            if Letter::new(y).unwrap() < a && a < Letter::new(-y).unwrap() {
                push(a, Letter::new(-y).unwrap(), Letter::new(y).unwrap());
            }
        }
    }
    // K5 contraction: a factor that is a minimally non-admissible column
    // loses its breaking pair.
    for start in 0..ls.len() {
        for end in start + 2..=ls.len() {
            if let Some(z) = k5_breaking_column(&ls[start..end]) {
                let mut v = ls[..start].to_vec();
                v.extend(ls[start..end].iter().filter(|l| l.abs() != z));
                v.extend_from_slice(&ls[end..]);
                out.push(Word::new(v));
            }
        }
    }
    // K5 expansion: insert a pair z, z̄ into an increasing factor so that
    // the factor becomes minimally non-admissible. Direction-ambiguous in
    // the relation list, so candidates are re-verified by P-equality.
    if ls.len() + 2 <= max_len {
        let p_w = insert_word(n, w);
        for start in 0..=ls.len() {
            for end in start..=ls.len() {
                let factor = &ls[start..end];
                if factor.windows(2).any(|f| f[0] >= f[1]) {
                    continue;
                }
                for z in 1..=n as i64 {
                    let (zl, zb) = (Letter::new(z).unwrap(), Letter::new(-z).unwrap());
                    if factor.contains(&zl) || factor.contains(&zb) {
                        continue;
                    }
                    let mut cells = factor.to_vec();
                    cells.push(zl);
                    cells.push(zb);
                    cells.sort();
                    if k5_breaking_column(&cells) != Some(z) {
                        continue;
                    }
                    let mut v = ls[..start].to_vec();
                    v.extend_from_slice(&cells);
                    v.extend_from_slice(&ls[end..]);
                    let candidate = Word::new(v);
                    if insert_word(n, &candidate) == p_w {
                        out.push(candidate);
                    }
                }
            }
        }
    }
    out
}

/// The closure of `w` under the elementary Knuth relations, with K5
/// expansion capped at `max_len` letters and the whole exploration at
/// `budget` words.
pub fn knuth_closure(
    w: &Word,
    n: Rank,
    max_len: usize,
    budget: usize,
) -> Result<BTreeSet<Word>> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in knuth_neighbours(&cur, n, max_len) {
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded);
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}
