//! Ballot-word encoding of path structures: a structure on `P_n` built
//! from `P_m` by the plan `b` is the word of `m - 2` zeros followed by `b`.

use crate::bijections::fmap::BallotWord;
use crate::bijections::plan::{apply_plan, plan_from_structure, SubdivisionPlan};
use crate::error::{Error, Result};
use crate::structure::ArithmeticalStructure;

pub fn word_encode(s: &ArithmeticalStructure) -> Result<BallotWord> {
    let plan = plan_from_structure(s)?;
    let mut w = vec![0; plan.m() - 2];
    w.extend_from_slice(plan.b());
    BallotWord::new(w)
}

pub fn word_decode(w: &BallotWord, n: usize) -> Result<ArithmeticalStructure> {
    if w.len() + 2 != n {
        return Err(Error::Word(format!("length {} does not encode P_{n}", w.len())));
    }
    let zeros = w.entries().iter().take_while(|&&x| x == 0).count();
    let plan = SubdivisionPlan::new(zeros + 2, w.entries()[zeros..].to_vec())?;
    apply_plan(&plan, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn laplacian_is_all_zeros() {
        let s = ArithmeticalStructure::laplacian(Graph::path(5).unwrap());
        assert_eq!(word_encode(&s).unwrap().entries(), &[0, 0, 0]);
    }

    #[test]
    fn example_word() {
        let s = ArithmeticalStructure::from_u64(
            Graph::path(5).unwrap(),
            &[2, 3, 1, 2, 3],
            &[1, 2, 5, 3, 1],
        )
        .unwrap();
        let w = word_encode(&s).unwrap();
        assert_eq!(w.entries(), &[1, 2, 2]);
        assert_eq!(word_decode(&w, 5).unwrap(), s);
    }

    #[test]
    fn all_words_of_length_three_decode_to_distinct_structures() {
        let words: Vec<_> = BallotWord::all(3).collect();
        assert_eq!(words.len(), 14);
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            let s = word_decode(w, 5).unwrap();
            assert_eq!(&word_encode(&s).unwrap(), w);
            assert!(seen.insert(s));
        }
    }

    #[test]
    fn length_mismatch() {
        let w = BallotWord::new(vec![0, 1]).unwrap();
        assert!(word_decode(&w, 5).is_err());
    }

    #[test]
    fn p2_has_empty_word() {
        let s = ArithmeticalStructure::laplacian(Graph::path(2).unwrap());
        let w = word_encode(&s).unwrap();
        assert!(w.is_empty());
        assert_eq!(word_decode(&w, 2).unwrap(), s);
    }
}
