//! The hyperoctahedral group B_n: window notation, length, the action on
//! Z^n, key tableaux K(v), the σ\[i,j\] table, tableau criteria for the
//! Bruhat order and minimal coset representatives.
//!
//! Generator convention: s_i (i < n) swaps the entries i and i+1 of a
//! vector, s_n negates the last entry; σs_i applies s_i to the window.
//! Other references order [±n] the usual way and negate the *first*
//! entry; translating to that setup is the order isomorphism
//! i ↦ (n-i+1)-bar on \[n\] (and our s_i is their s_{n-i}).

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{orbit_partition, Letter, Rank, WeightVector};
use crate::columns::Column;
use crate::crystal::Color;
use crate::error::{Error, Result};
use crate::tableaux::KNTableau;

/// An element of B_n in window notation `[σ(1) … σ(n)]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &a in &window {
            let abs = a.unsigned_abs() as usize;
            if a == 0 || abs > n || seen[abs - 1] {
                return Err(Error::Invalid(format!(
                    "window {window:?} is not a signed permutation"
                )));
            }
            seen[abs - 1] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: Rank) -> Self {
        SignedPermutation { window: (1..=n as i64).collect() }
    }

    /// ω₀ = [1̄ 2̄ … n̄], the longest element.
    pub fn longest(n: Rank) -> Self {
        SignedPermutation { window: (1..=n as i64).map(|i| -i).collect() }
    }

    pub fn n(&self) -> Rank {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &a)| a == i as i64 + 1)
    }

    /// σ(a) for `a` in `[±n] ∪ {0}`, using σ(-a) = -σ(a) and σ(0) = 0.
    pub fn image(&self, a: i64) -> i64 {
        if a == 0 {
            0
        } else if a > 0 {
            self.window[(a - 1) as usize]
        } else {
            -self.window[(-a - 1) as usize]
        }
    }

    fn inverse_window(&self) -> Vec<i64> {
        let mut inv = vec![0i64; self.n()];
        for (j, &a) in self.window.iter().enumerate() {
            let idx = (a.abs() - 1) as usize;
            inv[idx] = if a > 0 { j as i64 + 1 } else { -(j as i64 + 1) };
        }
        inv
    }

    pub fn inverse(&self) -> SignedPermutation {
        SignedPermutation { window: self.inverse_window() }
    }

    /// σv = (sgn(σ⁻¹(1)) v_{|σ⁻¹(1)|}, …, sgn(σ⁻¹(n)) v_{|σ⁻¹(n)|}).
    pub fn act(&self, v: &[i64]) -> WeightVector {
        assert_eq!(v.len(), self.n(), "vector length must match the rank");
        self.inverse_window()
            .iter()
            .map(|&a| if a > 0 { v[(a - 1) as usize] } else { -v[(-a - 1) as usize] })
            .collect()
    }

    /// ℓ(σ) = #inversions (in the alphabet order) plus Σ (n+1-i) over the
    /// barred window letters ī.
    pub fn length(&self) -> usize {
        let n = self.n();
        let letters: Vec<Letter> = self.window.iter().map(|&a| Letter::new(a).unwrap()).collect();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if letters[i] > letters[j] {
                    inv += 1;
                }
            }
        }
        let barred: usize = self
            .window
            .iter()
            .filter(|&&a| a < 0)
            .map(|&a| n + 1 - (-a) as usize)
            .sum();
        inv + barred
    }

    /// σ s_i: applies s_i to the window.
    pub fn right_mul_gen(&self, i: Color) -> SignedPermutation {
        let n = self.n();
        assert!(1 <= i && i <= n);
        let mut window = self.window.clone();
        if i < n {
            window.swap(i - 1, i);
        } else {
            window[n - 1] = -window[n - 1];
        }
        SignedPermutation { window }
    }

    /// Group product: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        let window = (1..=self.n() as i64).map(|i| self.image(other.image(i))).collect();
        SignedPermutation { window }
    }

    /// Right descents: ℓ(σ s_i) < ℓ(σ) iff σ(i) > σ(i+1) in the alphabet
    /// order (i < n), or σ(n) is barred (i = n).
    pub fn is_right_descent(&self, i: Color) -> bool {
        let n = self.n();
        if i < n {
            Letter::new(self.window[i - 1]).unwrap() > Letter::new(self.window[i]).unwrap()
        } else {
            self.window[n - 1] < 0
        }
    }

    /// A reduced word `(i_1, …, i_ℓ)` with σ = s_{i_1} ⋯ s_{i_ℓ}, found by
    /// peeling the smallest right descent.
    pub fn reduced_word(&self) -> Vec<Color> {
        let mut cur = self.clone();
        let mut peeled = Vec::new();
        while !cur.is_identity() {
            let i = (1..=self.n())
                .find(|&i| cur.is_right_descent(i))
                .expect("non-identity elements have a descent");
            peeled.push(i);
            cur = cur.right_mul_gen(i);
        }
        peeled.reverse();
        peeled
    }

    /// All `2^n n!` elements, in a deterministic order.
    pub fn all(n: Rank) -> Vec<SignedPermutation> {
        let mut perms: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i64 {
                    if !p.iter().any(|&x| x.abs() == v) {
                        for s in [v, -v] {
                            let mut q = p.clone();
                            q.push(s);
                            next.push(q);
                        }
                    }
                }
            }
            perms = next;
        }
        perms.sort_unstable();
        perms.into_iter().map(|window| SignedPermutation { window }).collect()
    }
}

/// Multiplies out a generator word left to right.
pub fn product_of_gens(n: Rank, word: &[Color]) -> SignedPermutation {
    word.iter()
        .fold(SignedPermutation::identity(n), |acc, &i| acc.right_mul_gen(i))
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[2 -3 1]"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed);
        let window = inner
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {tok:?}"))))
            .collect::<Result<Vec<i64>>>()?;
        SignedPermutation::new(window).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// K(v): the unique key tableau of weight `v`; the letter `sgn(v_i)·i`
/// fills the first `|v_i|` columns.
pub fn key_tableau(n: Rank, v: &[i64]) -> KNTableau {
    assert_eq!(v.len(), n);
    let lambda = orbit_partition(v);
    let ncols = lambda.part(1) as usize;
    let cols = (0..ncols)
        .map(|c| {
            let letters = v
                .iter()
                .enumerate()
                .filter(|(_, &x)| x.unsigned_abs() as usize > c)
                .map(|(i, &x)| Letter::new(if x > 0 { i as i64 + 1 } else { -(i as i64 + 1) }).unwrap())
                .collect();
            Column::from_letters(letters)
        })
        .collect();
    let out = KNTableau::from_columns_unchecked(n, cols);
    debug_assert!(out.is_key_tableau() && out.weight() == v);
    out
}

/// K(σ) := K(σ·Δⁿ) for the staircase Δⁿ = (n, n-1, …, 1).
pub fn key_of_perm(sigma: &SignedPermutation) -> KNTableau {
    let n = sigma.n();
    let staircase: Vec<i64> = (1..=n as i64).rev().collect();
    key_tableau(n, &sigma.act(&staircase))
}

/// σ\[i,j\] = |{a ≤ i : σ(a) ≥ j}| over `[±n] ∪ {0}` ordered with
/// `n < 0 < n̄`.
pub fn sigma_table(sigma: &SignedPermutation, i: i64, j: i64) -> usize {
    let n = sigma.n();
    let rank = |x: i64| -> i64 {
        if x > 0 {
            x
        } else if x == 0 {
            n as i64 + 1
        } else {
            2 * n as i64 + 2 + x
        }
    };
    let alphabet = (1..=n as i64).chain([0]).chain((1..=n as i64).rev().map(|v| -v));
    alphabet
        .filter(|&a| rank(a) <= rank(i) && rank(sigma.image(a)) >= rank(j))
        .count()
}

/// Tableau criterion for the Bruhat order: σ ≤ ρ iff K(σ) ≤ K(ρ)
/// entrywise.
pub fn bruhat_leq(sigma: &SignedPermutation, rho: &SignedPermutation) -> bool {
    assert_eq!(sigma.n(), rho.n());
    key_of_perm(sigma).entrywise_leq(&key_of_perm(rho))
}

/// σ_v: the minimal length coset representative with σ_v λ_v = v, read
/// off K(v) with the column [1 … n] prepended, keeping the first
/// occurrence of every absolute value.
pub fn minimal_coset_rep(n: Rank, v: &[i64]) -> SignedPermutation {
    let key = key_tableau(n, v);
    let mut window = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut take = |x: Letter| {
        let idx = (x.abs() - 1) as usize;
        if !seen[idx] {
            seen[idx] = true;
            window.push(x.value());
        }
    };
    for column in key.columns().iter().rev() {
        for &l in column.cells() {
            take(l);
        }
    }
    for i in 1..=n as i64 {
        take(Letter::new(i).unwrap());
    }
    let sigma = SignedPermutation { window };
    debug_assert_eq!(sigma.act(&orbit_partition(v).to_vector(n)), v);
    sigma
}

/// ṽ: repeatedly, when some positive `i` occurs in no entry of `v` (barred
/// or not) while `i+1` does, slide every `±(i+1)` down to `±i`.
pub fn reduce_vector(v: &[i64]) -> WeightVector {
    let mut v = v.to_vec();
    let top = v.iter().map(|x| x.abs()).max().unwrap_or(0);
    loop {
        let mut changed = false;
        for i in 1..top {
            let absent = !v.iter().any(|x| x.abs() == i);
            let next_present = v.iter().any(|x| x.abs() == i + 1);
            if absent && next_present {
                for x in v.iter_mut() {
                    if x.abs() == i + 1 {
                        *x = x.signum() * i;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

/// Bruhat order on a B_n-orbit: u ≤ v iff K(u) ≤ K(v) entrywise. The two
/// vectors must lie in the same orbit.
pub fn bruhat_leq_orbit(n: Rank, u: &[i64], v: &[i64]) -> Result<bool> {
    if orbit_partition(u) != orbit_partition(v) {
        return Err(Error::OrbitMismatch);
    }
    Ok(key_tableau(n, u).entrywise_leq(&key_tableau(n, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Partition;
    use crate::tableaux::{tableau_from_rows, yamanouchi};

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn action_examples() {
        assert_eq!(sp("[2 -3 1]").act(&[1, 2, 3]), vec![3, 1, -2]);
        assert_eq!(SignedPermutation::identity(3).act(&[5, -1, 2]), vec![5, -1, 2]);
        assert_eq!(sp("[-3 -1 2 4]").act(&[4, 3, 2, 1]), vec![-3, 2, -4, 1]);
    }

    #[test]
    fn generator_action() {
        // s_i swaps entries i, i+1; s_n negates the last entry.
        let s1 = SignedPermutation::identity(3).right_mul_gen(1);
        assert_eq!(s1.act(&[1, 2, 3]), vec![2, 1, 3]);
        let s3 = SignedPermutation::identity(3).right_mul_gen(3);
        assert_eq!(s3.act(&[1, 2, 3]), vec![1, 2, -3]);
    }

    #[test]
    fn length_examples() {
        assert_eq!(sp("[2 -3 1]").length(), 3);
        assert_eq!(SignedPermutation::identity(4).length(), 0);
        for n in 1..=4 {
            assert_eq!(SignedPermutation::longest(n).length(), n * n);
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for n in 1..=3 {
            for sigma in SignedPermutation::all(n) {
                let word = sigma.reduced_word();
                assert_eq!(word.len(), sigma.length());
                assert_eq!(product_of_gens(n, &word), sigma);
            }
        }
        assert!(SignedPermutation::identity(3).reduced_word().is_empty());
        // The example σ = s_1 s_3 s_2: the peeled word multiplies back to σ.
        let sigma = sp("[2 -3 1]");
        assert_eq!(product_of_gens(3, &[1, 3, 2]), sigma);
        assert_eq!(product_of_gens(3, &sigma.reduced_word()), sigma);
    }

    #[test]
    fn key_tableau_examples() {
        let k = key_tableau(5, &[1, -3, 0, 3, -2]);
        assert_eq!(
            k,
            tableau_from_rows(5, &[&[1, 4, 4], &[4, -5, -2], &[-5, -2], &[-2]])
        );

        let lam = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(key_tableau(4, &lam.to_vector(4)), yamanouchi(&lam, 4).unwrap());

        assert_eq!(key_tableau(3, &[0, 0, 0]), KNTableau::empty(3));
    }

    #[test]
    fn key_of_perm_examples() {
        let k = key_of_perm(&sp("[-3 -1 2 4]"));
        assert_eq!(
            k,
            tableau_from_rows(4, &[&[2, 2, -3, -3], &[4, -3, -1], &[-3, -1], &[-1]])
        );

        let id = SignedPermutation::identity(3);
        let staircase = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(key_of_perm(&id), yamanouchi(&staircase, 3).unwrap());

        // σ = [-1 -2] sends Δ² to (-2, -1); the construction rule puts 1̄
        // in the first two columns and 2̄ in the first one.
        let k = key_of_perm(&sp("[-1 -2]"));
        assert_eq!(k, tableau_from_rows(2, &[&[-2, -1], &[-1]]));
    }

    #[test]
    fn sigma_table_spots() {
        let sigma = sp("[-3 -1 2 4]");
        assert_eq!(sigma_table(&sigma, 4, 1), 4);
        assert_eq!(sigma_table(&sigma, 2, -2), 1);
        assert_eq!(sigma_table(&sigma, 1, -1), 0);
        assert_eq!(sigma_table(&sigma, 0, -4), 2);
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&sp("[1 -2 -5 3 4]"), &sp("[-4 -1 2 3 5]")));
        let sigma = sp("[2 -3 1]");
        assert!(bruhat_leq(&sigma, &sigma));
    }

    #[test]
    fn minimal_coset_rep_examples() {
        assert_eq!(minimal_coset_rep(5, &[1, 0, -3, 3, -5]), sp("[-5 4 -3 1 2]"));
        let lam = Partition::new(vec![5, 3, 3, 1]).unwrap();
        assert!(minimal_coset_rep(5, &lam.to_vector(5)).is_identity());
        assert_eq!(minimal_coset_rep(5, &[3, -3, 0, 0, -2]), sp("[1 -2 -5 3 4]"));
    }

    #[test]
    fn reduce_vector_examples() {
        assert_eq!(reduce_vector(&[1, 0, -3, 3, -5]), vec![1, 0, -2, 2, -3]);
        assert_eq!(reduce_vector(&[1, 0, -2, 2, -3]), vec![1, 0, -2, 2, -3]);
        assert_eq!(reduce_vector(&[2, 2]), vec![1, 1]);
    }

    #[test]
    fn reduction_preserves_the_coset_rep() {
        for v in [[1, 0, -3].as_slice(), &[0, 2, -2], &[3, -3, 1], &[0, 0, -2]] {
            let reduced = reduce_vector(v);
            assert_eq!(minimal_coset_rep(3, v), minimal_coset_rep(3, &reduced));
        }
    }

    #[test]
    fn coset_representatives_are_the_unique_minima() {
        // Enumerating each coset directly: σ_v has strictly smaller length
        // than every other element sending λ to v.
        for lam in [vec![2, 1, 0], vec![1, 1, 0], vec![2, 2, 1]] {
            for sigma in SignedPermutation::all(3) {
                let v = sigma.act(&lam);
                let rep = minimal_coset_rep(3, &v);
                assert_eq!(rep.act(&lam), v);
                for other in SignedPermutation::all(3) {
                    if other.act(&lam) == v && other != rep {
                        assert!(
                            other.length() > rep.length(),
                            "{other} is not longer than σ_v = {rep} for v = {v:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_comparison_examples() {
        assert!(bruhat_leq_orbit(5, &[3, -3, 0, 0, -2], &[-3, 2, 0, -3, 0]).unwrap());
        assert!(bruhat_leq_orbit(5, &[3, -3, 0, 0, -2], &[3, -3, 0, 0, -2]).unwrap());
        assert_eq!(
            bruhat_leq_orbit(2, &[1, 0], &[2, 0]),
            Err(Error::OrbitMismatch)
        );
    }

    #[test]
    fn sigma_table_encodes_key_columns() {
        // Scanning column i of the table bottom to top, the entry grows by
        // one exactly at the letters of column n+1-i of K(σ).
        for sigma in [sp("[-3 -1 2 4]"), sp("[2 -3 1]"), sp("[1 -2]")] {
            let n = sigma.n();
            let key = key_of_perm(&sigma);
            let rows_top_down: Vec<i64> = (1..=n as i64)
                .chain([0])
                .chain((1..=n as i64).rev().map(|v| -v))
                .collect();
            for i in 1..=n as i64 {
                let mut increases = Vec::new();
                let mut below = 0usize; // the appended zero row
                for &j in rows_top_down.iter().rev() {
                    let here = sigma_table(&sigma, i, j);
                    if here == below + 1 {
                        assert_ne!(j, 0, "the zero row never records an increase");
                        increases.push(Letter::new(j).unwrap());
                    }
                    below = here;
                }
                increases.sort();
                let column = &key.columns()[n - i as usize];
                assert_eq!(increases, column.cells(), "{sigma}, table column {i}");
            }
        }
    }

    #[test]
    fn orbit_partition_is_action_invariant() {
        for sigma in SignedPermutation::all(3) {
            for v in [[2, 1, 0], [3, 0, -3], [1, -1, 2]] {
                assert_eq!(
                    crate::alphabet::orbit_partition(&sigma.act(&v)),
                    crate::alphabet::orbit_partition(&v)
                );
            }
        }
    }

    #[test]
    fn descent_characterisation() {
        // ℓ(σ s_i) > ℓ(σ) iff σ(i) < σ(i+1), or i = n and σ(n) positive.
        for sigma in SignedPermutation::all(3) {
            for i in 1..=3 {
                let longer = sigma.right_mul_gen(i).length() > sigma.length();
                assert_eq!(longer, !sigma.is_right_descent(i), "{sigma} s_{i}");
            }
        }
    }
}
