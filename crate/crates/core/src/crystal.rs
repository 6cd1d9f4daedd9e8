//! Crystal operators via the signature rule, highest-weight detection and
//! full crystal-graph generation.
//!
//! Operators act on tableaux through the column reading and re-insertion;
//! the acceptance suite checks the defining axioms directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alphabet::{is_partition_vector, Letter, Partition, Rank, Word};
use crate::error::Result;
use crate::insertion::insert_word;
use crate::tableaux::{yamanouchi, KNSkewTableau, KNTableau};

/// A crystal colour, `1 ..= n`.
pub type Color = usize;

/// The bracketing data of one colour on a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    /// ε_i: surviving minuses.
    pub eps: usize,
    /// φ_i: surviving pluses.
    pub phi: usize,
    /// Position of the rightmost surviving minus (where e_i acts).
    pub e_pos: Option<usize>,
    /// Position of the leftmost surviving plus (where f_i acts).
    pub f_pos: Option<usize>,
}

/// Signature rule: `+` for `{i, (i+1)bar}`, `-` for `{i+1, ī}` (for
/// `i = n`: `+` for `n`, `-` for `n̄`), then cancel `+-` pairs.
pub fn signature(w: &Word, i: Color, n: Rank) -> Signature {
    debug_assert!(1 <= i && i <= n);
    let iv = i as i64;
    let mut plus_stack: Vec<usize> = Vec::new();
    let mut minuses: Vec<usize> = Vec::new();
    for (pos, l) in w.letters().iter().enumerate() {
        let v = l.value();
        let plus = v == iv || (i < n && v == -(iv + 1));
        let minus = v == -iv || (i < n && v == iv + 1);
        if plus {
            plus_stack.push(pos);
        } else if minus && plus_stack.pop().is_none() {
            minuses.push(pos);
        }
    }
    Signature {
        eps: minuses.len(),
        phi: plus_stack.len(),
        e_pos: minuses.last().copied(),
        f_pos: plus_stack.first().copied(),
    }
}

fn f_letter(l: Letter, i: Color, n: Rank) -> Letter {
    let iv = i as i64;
    let out = if i == n {
        debug_assert_eq!(l.value(), iv);
        -iv
    } else if l.value() == iv {
        iv + 1
    } else {
        debug_assert_eq!(l.value(), -(iv + 1));
        -iv
    };
    Letter::new(out).unwrap()
}

fn e_letter(l: Letter, i: Color, n: Rank) -> Letter {
    let iv = i as i64;
    let out = if i == n {
        debug_assert_eq!(l.value(), -iv);
        iv
    } else if l.value() == iv + 1 {
        iv
    } else {
        debug_assert_eq!(l.value(), -iv);
        -(iv + 1)
    };
    Letter::new(out).unwrap()
}

/// f_i on words; `None` when φ_i = 0.
pub fn f_word(w: &Word, i: Color, n: Rank) -> Option<Word> {
    let pos = signature(w, i, n).f_pos?;
    let mut letters = w.letters().to_vec();
    letters[pos] = f_letter(letters[pos], i, n);
    Some(Word::new(letters))
}

/// e_i on words; `None` when ε_i = 0.
pub fn e_word(w: &Word, i: Color, n: Rank) -> Option<Word> {
    let pos = signature(w, i, n).e_pos?;
    let mut letters = w.letters().to_vec();
    letters[pos] = e_letter(letters[pos], i, n);
    Some(Word::new(letters))
}

/// f_i on tableaux: act on the column reading and re-insert.
pub fn f_tableau(t: &KNTableau, i: Color) -> Option<KNTableau> {
    let w = f_word(&t.column_reading(), i, t.n())?;
    let out = insert_word(t.n(), &w);
    debug_assert_eq!(out.shape(), t.shape());
    Some(out)
}

pub fn e_tableau(t: &KNTableau, i: Color) -> Option<KNTableau> {
    let w = e_word(&t.column_reading(), i, t.n())?;
    let out = insert_word(t.n(), &w);
    debug_assert_eq!(out.shape(), t.shape());
    Some(out)
}

/// Crystal operators on skew tableaux change the selected letter in
/// place; the shape is untouched.
pub(crate) fn f_skew(s: &KNSkewTableau, i: Color) -> Option<KNSkewTableau> {
    let pos = signature(&s.column_reading(), i, s.n()).f_pos?;
    Some(edit_reading_cell(s, pos, |l| f_letter(l, i, s.n())))
}

fn edit_reading_cell(
    s: &KNSkewTableau,
    pos: usize,
    edit: impl Fn(Letter) -> Letter,
) -> KNSkewTableau {
    let mut cols: Vec<Vec<Letter>> = s.columns().iter().map(|c| c.cells().to_vec()).collect();
    let mut seen = 0;
    for c in (0..cols.len()).rev() {
        if pos < seen + cols[c].len() {
            let idx = pos - seen;
            cols[c][idx] = edit(cols[c][idx]);
            let columns = cols
                .into_iter()
                .map(|cells| crate::columns::Column::new(cells).expect("crystal move keeps columns"))
                .collect();
            let out = KNSkewTableau::new(s.n(), s.shape().clone(), columns)
                .expect("crystal move keeps the tableau valid");
            return out;
        }
        seen += cols[c].len();
    }
    unreachable!("reading position inside the tableau")
}

/// Highest-weight words: every prefix weight (the full word included) is
/// a partition.
pub fn is_highest_word(w: &Word, n: Rank) -> bool {
    let mut wt = vec![0i64; n];
    for l in w.letters() {
        let idx = (l.abs() - 1) as usize;
        wt[idx] += if l.is_barred() { -1 } else { 1 };
        if !is_partition_vector(&wt) {
            return false;
        }
    }
    true
}

/// Applies e_i greedily (smallest colour first), recording the colours
/// used; ends at the highest-weight element of the component.
pub fn to_highest(t: &KNTableau) -> (KNTableau, Vec<Color>) {
    let mut cur = t.clone();
    let mut colors = Vec::new();
    'outer: loop {
        for i in 1..=t.n() {
            if let Some(next) = e_tableau(&cur, i) {
                colors.push(i);
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    debug_assert!(is_highest_word(&cur.column_reading(), t.n()));
    (cur, colors)
}

/// The crystal graph of B^λ.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    n: Rank,
    vertices: Vec<KNTableau>,
    edges: Vec<(usize, Color, usize)>,
}

impl CrystalGraph {
    pub fn n(&self) -> Rank {
        self.n
    }

    pub fn vertices(&self) -> &[KNTableau] {
        &self.vertices
    }

    /// Edges `(source, colour, target)` as indices into `vertices`.
    pub fn edges(&self) -> &[(usize, Color, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices with all e_i undefined.
    pub fn highest_vertices(&self) -> Vec<&KNTableau> {
        self.vertices
            .iter()
            .filter(|t| (1..=self.n).all(|i| e_tableau(t, i).is_none()))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let label = if t.num_cells() == 0 { "∅".to_string() } else { t.to_string() };
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for (src, color, dst) in &self.edges {
            let _ = writeln!(out, "  v{src} -> v{dst} [label=\"{color}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of the Yamanouchi tableau under all f_i.
pub fn generate_crystal(lambda: &Partition, n: Rank) -> Result<CrystalGraph> {
    let start = yamanouchi(lambda, n)?;
    let mut index: BTreeMap<KNTableau, usize> = BTreeMap::new();
    let mut by_id: Vec<KNTableau> = vec![start.clone()];
    let mut queue = std::collections::VecDeque::from([start.clone()]);
    index.insert(start, 0);
    let mut raw_edges = Vec::new();
    while let Some(t) = queue.pop_front() {
        let tid = index[&t];
        for i in 1..=n {
            if let Some(next) = f_tableau(&t, i) {
                let nid = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = by_id.len();
                        index.insert(next.clone(), id);
                        by_id.push(next.clone());
                        queue.push_back(next);
                        id
                    }
                };
                raw_edges.push((tid, i, nid));
            }
        }
    }
    // Renumber vertices into reading-word order for stable output.
    let mut vertices = by_id.clone();
    vertices.sort();
    let new_id: Vec<usize> = by_id
        .iter()
        .map(|t| vertices.binary_search(t).unwrap())
        .collect();
    let mut edges: Vec<(usize, Color, usize)> = raw_edges
        .into_iter()
        .map(|(s, c, d)| (new_id[s], c, new_id[d]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(CrystalGraph { n, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::tableau_from_rows;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn signature_rule_example() {
        let word = w("-2 3 1 -2 2 -1");
        let sig = signature(&word, 1, 3);
        assert_eq!((sig.eps, sig.phi), (0, 1));
        assert_eq!(sig.f_pos, Some(0));
        assert_eq!(f_word(&word, 1, 3).unwrap(), w("-1 3 1 -2 2 -1"));
        assert_eq!(e_word(&word, 1, 3), None);

        let highest = w("1 1 2");
        assert_eq!(signature(&highest, 1, 2).eps, 0);
    }

    #[test]
    fn word_operators_are_partial_inverses() {
        for word in ["1 2 -2 -1", "2 -1 1 2", "1 1 2", "-2 3 1 -2 2 -1"] {
            let word = w(word);
            let n = word.min_rank();
            for i in 1..=n {
                if let Some(f) = f_word(&word, i, n) {
                    assert_eq!(e_word(&f, i, n).unwrap(), word);
                }
                if let Some(e) = e_word(&word, i, n) {
                    assert_eq!(f_word(&e, i, n).unwrap(), word);
                }
            }
        }
        assert_eq!(f_word(&w("2"), 2, 2).unwrap(), w("-2"));
    }

    #[test]
    fn tableau_operators_on_the_21_crystal() {
        let k = tableau_from_rows(2, &[&[1, 1], &[2]]);
        assert_eq!(
            f_tableau(&k, 1).unwrap(),
            tableau_from_rows(2, &[&[1, 2], &[2]])
        );
        assert_eq!(
            f_tableau(&k, 2).unwrap(),
            tableau_from_rows(2, &[&[1, 1], &[-2]])
        );
        for i in 1..=2 {
            assert_eq!(e_tableau(&k, i), None);
        }
    }

    #[test]
    fn highest_weight_detection() {
        assert!(is_highest_word(&w("1 1 2"), 2));
        assert!(!is_highest_word(&w("2 1 1"), 2));

        let t = tableau_from_rows(2, &[&[2, -2], &[-1]]);
        let (top, colors) = to_highest(&t);
        assert_eq!(top, tableau_from_rows(2, &[&[1, 1], &[2]]));
        assert!(!colors.is_empty());
    }

    #[test]
    fn crystal_sizes() {
        let b21 = generate_crystal(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        assert_eq!(b21.len(), 16);
        assert_eq!(b21.highest_vertices().len(), 1);

        let standard = generate_crystal(&Partition::new(vec![1]).unwrap(), 2).unwrap();
        assert_eq!(standard.len(), 4);

        let trivial = generate_crystal(&Partition::zero(), 2).unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial.edges().is_empty());
    }

    #[test]
    fn the_16_vertices_of_b21() {
        // The crystal graph of shape (2,1) over n = 2, vertex by vertex.
        let listed: Vec<[&[i64]; 2]> = vec![
            [&[1, 1], &[2]],
            [&[1, 2], &[2]],
            [&[1, 1], &[-2]],
            [&[1, -2], &[2]],
            [&[1, 2], &[-2]],
            [&[2, 2], &[-2]],
            [&[2, 2], &[-1]],
            [&[2, -2], &[-2]],
            [&[2, -2], &[-1]],
            [&[-2, -2], &[-1]],
            [&[1, -2], &[-2]],
            [&[1, -1], &[-2]],
            [&[1, -1], &[2]],
            [&[2, -1], &[-2]],
            [&[2, -1], &[-1]],
            [&[-2, -1], &[-1]],
        ];
        let mut expected: Vec<KNTableau> = listed
            .iter()
            .map(|rows| tableau_from_rows(2, rows))
            .collect();
        expected.sort();
        expected.dedup();
        assert_eq!(expected.len(), 16);
        let graph = generate_crystal(&Partition::new(vec![2, 1]).unwrap(), 2).unwrap();
        assert_eq!(graph.vertices(), expected.as_slice());
    }

    #[test]
    fn generation_matches_enumeration_up_to_22() {
        for parts in [vec![1], vec![1, 1], vec![2], vec![2, 1], vec![2, 2]] {
            for n in 2..=3usize {
                let lam = Partition::new(parts.clone()).unwrap();
                let graph = generate_crystal(&lam, n).unwrap();
                let enumerated = crate::oracles::enumerate_kn(&lam, n).unwrap();
                assert_eq!(
                    graph.vertices(),
                    enumerated.as_slice(),
                    "B^{lam} over n = {n}"
                );
            }
        }
    }

    #[test]
    fn standard_crystal_is_a_chain() {
        let g = generate_crystal(&Partition::new(vec![1]).unwrap(), 2).unwrap();
        let labels: Vec<String> = g.vertices().iter().map(|t| t.to_string()).collect();
        assert_eq!(g.edges().len(), 3);
        assert!(labels.contains(&"1".to_string()) && labels.contains(&"-1".to_string()));
    }
}
