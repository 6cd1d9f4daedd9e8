//! Demazure crystals, atoms, and the corresponding key polynomials.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{orbit_partition, Rank, WeightVector};
use crate::crystal::{f_tableau, generate_crystal, Color};
use crate::error::Result;
use crate::keys::right_key;
use crate::tableaux::{yamanouchi, KNTableau};
use crate::weyl::{key_tableau, minimal_coset_rep};

/// A finitely supported integer combination of weight-vector monomials
/// (a Laurent polynomial in x_1, …, x_n).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightPolynomial {
    terms: BTreeMap<WeightVector, i64>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        WeightPolynomial::default()
    }

    pub fn add_term(&mut self, weight: WeightVector, coeff: i64) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(weight) {
            Entry::Vacant(e) => {
                if coeff != 0 {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, weight: &[i64]) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    /// Terms in lexicographic weight order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients (the number of tableaux for a character).
    pub fn total_mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn from_tableaux<'a>(tableaux: impl IntoIterator<Item = &'a KNTableau>) -> Self {
        let mut poly = WeightPolynomial::zero();
        for t in tableaux {
            poly.add_term(t.weight(), 1);
        }
        poly
    }

    pub fn sum(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

fn monomial(weight: &[i64]) -> String {
    let factors: Vec<String> = weight
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    factors.join("*")
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &c)| {
                let mon = monomial(w);
                match (c, mon.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, _) => mon,
                    (-1, _) => format!("-{mon}"),
                    _ => format!("{c}*{mon}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// D_i X: the closure of X under f_i.
pub fn demazure_operator(x: &BTreeSet<KNTableau>, i: Color) -> BTreeSet<KNTableau> {
    let mut out = x.clone();
    for t in x {
        let mut cur = t.clone();
        while let Some(next) = f_tableau(&cur, i) {
            out.insert(next.clone());
            cur = next;
        }
    }
    out
}

/// B_v: the composed f-closures of {K(λ_v)} along a reduced word of σ_v,
/// rightmost generator first.
pub fn demazure_crystal(n: Rank, v: &[i64]) -> Result<BTreeSet<KNTableau>> {
    let word = minimal_coset_rep(n, v).reduced_word();
    demazure_crystal_for_word(n, v, &word)
}

/// As [`demazure_crystal`] but along an explicit reduced word
/// `(i_1, …, i_ℓ)` with σ = s_{i_1} ⋯ s_{i_ℓ}.
pub fn demazure_crystal_for_word(
    n: Rank,
    v: &[i64],
    word: &[Color],
) -> Result<BTreeSet<KNTableau>> {
    let lambda = orbit_partition(v);
    let mut set = BTreeSet::from([yamanouchi(&lambda, n)?]);
    for &i in word.iter().rev() {
        set = demazure_operator(&set, i);
    }
    Ok(set)
}

/// The Demazure atom U(v) = B̂_v: the tableaux of B^λ whose right key is
/// K(v). (The set-difference form of the definition lives with the
/// oracles.)
pub fn demazure_atom(n: Rank, v: &[i64]) -> Result<BTreeSet<KNTableau>> {
    let lambda = orbit_partition(v);
    let key = key_tableau(n, v);
    let crystal = generate_crystal(&lambda, n)?;
    Ok(crystal
        .vertices()
        .iter()
        .filter(|t| right_key(t) == key)
        .cloned()
        .collect())
}

/// κ_v: the weight generating function of B_v.
pub fn key_polynomial(n: Rank, v: &[i64]) -> Result<WeightPolynomial> {
    Ok(WeightPolynomial::from_tableaux(demazure_crystal(n, v)?.iter()))
}

/// κ̂_v: the weight generating function of the atom U(v).
pub fn atom_polynomial(n: Rank, v: &[i64]) -> Result<WeightPolynomial> {
    Ok(WeightPolynomial::from_tableaux(demazure_atom(n, v)?.iter()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Partition;
    use crate::tableaux::tableau_from_rows;

    fn b2_21_tableaux(rows_list: &[[&[i64]; 2]]) -> BTreeSet<KNTableau> {
        rows_list.iter().map(|rows| tableau_from_rows(2, rows)).collect()
    }

    #[test]
    fn demazure_operator_on_the_yamanouchi() {
        let k = yamanouchi(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        let d1 = demazure_operator(&BTreeSet::from([k.clone()]), 1);
        assert_eq!(
            d1,
            b2_21_tableaux(&[[&[1, 1], &[2]], [&[1, 2], &[2]]])
        );
        assert!(d1.contains(&k));
        assert_eq!(demazure_operator(&d1, 1), d1);
    }

    #[test]
    fn demazure_crystal_examples() {
        let b = demazure_crystal(2, &[1, -2]).unwrap();
        assert_eq!(
            b,
            b2_21_tableaux(&[
                [&[1, 1], &[2]],
                [&[1, 2], &[2]],
                [&[1, 1], &[-2]],
                [&[1, -2], &[2]],
                [&[1, -2], &[-2]],
            ])
        );

        let lam = Partition::new(vec![2, 1]).unwrap();
        let at_lambda = demazure_crystal(2, &lam.to_vector(2)).unwrap();
        assert_eq!(at_lambda.len(), 1);

        let full = demazure_crystal(2, &[-2, -1]).unwrap();
        assert_eq!(full.len(), 16);
    }

    #[test]
    fn demazure_atom_examples() {
        let atom = demazure_atom(2, &[1, -2]).unwrap();
        assert_eq!(
            atom,
            b2_21_tableaux(&[[&[1, -2], &[2]], [&[1, -2], &[-2]]])
        );

        let lam = Partition::new(vec![2, 1]).unwrap();
        let at_lambda = demazure_atom(2, &lam.to_vector(2)).unwrap();
        assert_eq!(at_lambda.len(), 1);
    }

    #[test]
    fn polynomials() {
        let kappa = key_polynomial(2, &[1, -2]).unwrap();
        for wt in [[2, 1], [1, 2], [2, -1], [1, 0], [1, -2]] {
            assert_eq!(kappa.coeff(&wt), 1, "missing weight {wt:?}");
        }
        assert_eq!(kappa.num_terms(), 5);

        let lam = Partition::new(vec![2, 1]).unwrap();
        let at_lambda = key_polynomial(2, &lam.to_vector(2)).unwrap();
        assert_eq!(at_lambda.coeff(&[2, 1]), 1);
        assert_eq!(at_lambda.num_terms(), 1);

        let full = key_polynomial(2, &[-2, -1]).unwrap();
        assert_eq!(full.total_mass(), 16);
    }

    #[test]
    fn orbit_with_a_nontrivial_stabilizer() {
        // λ = (1,1) over n = 2: the stabilizer is ⟨s_1⟩, the orbit has four
        // vectors, and the crystal has five tableaux split as 1+1+2+1.
        let n = 2;
        let lam = Partition::new(vec![1, 1]).unwrap();
        let orbit: std::collections::BTreeSet<Vec<i64>> =
            crate::weyl::SignedPermutation::all(n)
                .iter()
                .map(|s| s.act(&lam.to_vector(n)))
                .collect();
        assert_eq!(orbit.len(), 4);

        let mut total = 0;
        for v in &orbit {
            let atom = demazure_atom(n, v).unwrap();
            let expected = if v == &vec![-1, 1] { 2 } else { 1 };
            assert_eq!(atom.len(), expected, "atom size at {v:?}");
            total += atom.len();
        }
        assert_eq!(total, 5);

        assert_eq!(key_polynomial(n, &[-1, 1]).unwrap().total_mass(), 4);
        assert_eq!(demazure_crystal(n, &[-1, -1]).unwrap().len(), 5);

        // B_{σλ} is independent of the coset representative: any reduced
        // word of any σ in the coset yields the same crystal.
        for sigma in crate::weyl::SignedPermutation::all(n) {
            let v = sigma.act(&lam.to_vector(n));
            assert_eq!(
                demazure_crystal_for_word(n, &v, &sigma.reduced_word()).unwrap(),
                demazure_crystal(n, &v).unwrap(),
                "coset independence fails at {sigma}"
            );
        }
    }

    #[test]
    fn polynomial_display() {
        let mut p = WeightPolynomial::zero();
        p.add_term(vec![2, 1], 1);
        p.add_term(vec![0, -1], 1);
        p.add_term(vec![0, 0], 2);
        assert_eq!(p.to_string(), "x2^-1 + 2 + x1^2*x2");
        assert_eq!(WeightPolynomial::zero().to_string(), "0");
    }
}
