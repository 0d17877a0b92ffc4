use crate::combinat::{shuffle, Word};
use crate::hopf::HopfAlgebra;
use crate::linear::{sign, LinComb};

/// The shuffle algebra: shuffle product, deconcatenation coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShuffleAlgebra;

impl HopfAlgebra for ShuffleAlgebra {
    type Key = Word;

    fn degree(&self, key: &Word) -> usize {
        key.len()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        shuffle(a, b)
    }

    fn coproduct(&self, key: &Word) -> LinComb<(Word, Word)> {
        let l = key.letters();
        (0..=l.len())
            .map(|i| {
                let (u, v) = l.split_at(i);
                (Word::new(u.to_vec()).expect("letters are valid"), Word::new(v.to_vec()).expect("letters are valid"))
            })
            .map(|p| (p, 1.into()))
            .collect()
    }

    fn closed_antipode(&self, key: &Word) -> Option<LinComb<Word>> {
        Some(LinComb::term(key.reversed(), sign(key.len())))
    }
}
