//! Property tests for the word-level layer and the text formats.

use proptest::prelude::*;

use kn_tableaux::alphabet::{lt, Letter, Word};
use kn_tableaux::evacuation::star;
use kn_tableaux::insertion::insert_word;
use kn_tableaux::tableaux::parse_tableau;

fn letters(n: i64, len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=n, prop::bool::ANY), 0..=len)
        .prop_map(|v| v.into_iter().map(|(a, neg)| lt(if neg { -a } else { a })).collect())
}

proptest! {
    #[test]
    fn weight_is_additive_under_concatenation(
        u in letters(3, 6),
        v in letters(3, 6),
    ) {
        let (u, v) = (Word::new(u), Word::new(v));
        let sum: Vec<i64> = u
            .weight(3)
            .iter()
            .zip(v.weight(3).iter())
            .map(|(a, b)| a + b)
            .collect();
        prop_assert_eq!(u.concat(&v).weight(3), sum);
    }

    #[test]
    fn star_is_an_involution(w in letters(3, 8)) {
        let w = Word::new(w);
        prop_assert_eq!(star(&star(&w)), w);
    }

    #[test]
    fn word_text_round_trip(w in letters(4, 8)) {
        let w = Word::new(w);
        let parsed: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn letter_order_is_total_and_rank_monotone(a in 1i64..=4, b in 1i64..=4, s in prop::bool::ANY, t in prop::bool::ANY) {
        let x = lt(if s { -a } else { a });
        let y = lt(if t { -b } else { b });
        prop_assert_eq!(x.cmp(&y), x.rank(4).cmp(&y.rank(4)));
    }

    #[test]
    fn tableau_text_round_trip(w in letters(2, 6)) {
        // P(w) is an arbitrary-ish valid tableau; its row format parses
        // back to the same tableau.
        let t = insert_word(2, &Word::new(w));
        if t.num_cells() > 0 {
            prop_assert_eq!(parse_tableau(2, &t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn insertion_preserves_weight(w in letters(2, 7)) {
        let w = Word::new(w);
        prop_assert_eq!(insert_word(2, &w).weight(), w.weight(2));
    }
}
