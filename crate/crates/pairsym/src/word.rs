//! Words over a finite alphabet and the symbol-pair metric.
//!
//! Reading a word u of length n through a pair channel yields
//! pi(u) = ((u_0,u_1), (u_1,u_2), ..., (u_{n-1},u_0)), indices cyclic.
//! The pair distance between two words is the Hamming distance of their
//! pair readings; the pair weight is the distance to the zero word.

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// The pair reading of a word: n ordered pairs of adjacent symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVector(Vec<(Symbol, Symbol)>);

impl PairVector {
    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.0
    }
}

/// A word of length n >= 2 over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.len() < 2 {
            return Err(Error::InvalidParameter(
                "words must have length at least 2".into(),
            ));
        }
        if let Some(&s) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::InvalidParameter(format!(
                "symbol {s} out of range for alphabet of order {}",
                alphabet.order()
            )));
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Word length n; never below 2.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// pi(u): the cyclic sequence of adjacent symbol pairs.
    pub fn pair_read(&self) -> PairVector {
        let n = self.symbols.len();
        PairVector(
            (0..n)
                .map(|i| (self.symbols[i], self.symbols[(i + 1) % n]))
                .collect(),
        )
    }

    pub fn hamming_distance(&self, other: &Word) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(hamming_distance_slices(&self.symbols, &other.symbols))
    }

    pub fn pair_distance(&self, other: &Word) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(pair_distance_slices(&self.symbols, &other.symbols))
    }

    /// Pair weight: number of nonzero entries of pi(u).
    pub fn pair_weight(&self) -> usize {
        pair_weight_slice(&self.symbols)
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.symbols.len() != other.symbols.len() {
            return Err(Error::LengthMismatch(
                self.symbols.len(),
                other.symbols.len(),
            ));
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }
}

pub(crate) fn hamming_distance_slices(u: &[Symbol], v: &[Symbol]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

/// Pair distance on raw slices of equal length; position i differs exactly
/// when u and v disagree at i or at i + 1 (cyclically).
pub(crate) fn pair_distance_slices(u: &[Symbol], v: &[Symbol]) -> usize {
    let n = u.len();
    let mut agree = 0usize;
    let mut prev_eq = u[n - 1] == v[n - 1];
    for i in 0..n {
        let cur_eq = u[i] == v[i];
        if prev_eq && cur_eq {
            agree += 1;
        }
        prev_eq = cur_eq;
    }
    n - agree
}

pub(crate) fn pair_weight_slice(u: &[Symbol]) -> usize {
    let n = u.len();
    let mut agree = 0usize;
    let mut prev_zero = u[n - 1] == 0;
    for &s in u {
        let cur_zero = s == 0;
        if prev_zero && cur_zero {
            agree += 1;
        }
        prev_zero = cur_zero;
    }
    n - agree
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(q: u16, symbols: &[Symbol]) -> Word {
        Word::new(Alphabet::ring(q).unwrap(), symbols.to_vec()).unwrap()
    }

    #[test]
    fn pair_read_wraps() {
        let u = w(3, &[0, 1, 2]);
        assert_eq!(u.pair_read().pairs(), &[(0, 1), (1, 2), (2, 0)]);
        let v = w(2, &[1, 1]);
        assert_eq!(v.pair_read().pairs(), &[(1, 1), (1, 1)]);
    }

    #[test]
    fn distances_match_definitions() {
        let u = w(2, &[0, 0, 0]);
        let v = w(2, &[1, 0, 0]);
        assert_eq!(u.hamming_distance(&v).unwrap(), 1);
        assert_eq!(u.pair_distance(&v).unwrap(), 2);
        assert_eq!(v.pair_weight(), 2);

        let a = w(3, &[0, 1, 2, 0]);
        let b = w(3, &[0, 2, 2, 0]);
        assert_eq!(a.hamming_distance(&b).unwrap(), 1);
        assert_eq!(a.pair_distance(&b).unwrap(), 2);
    }

    #[test]
    fn pair_distance_reaches_double_hamming() {
        // Isolated disagreements each spoil two pair positions.
        let u = w(2, &[0, 0, 0, 0, 0, 0]);
        let v = w(2, &[1, 0, 0, 1, 0, 0]);
        assert_eq!(u.hamming_distance(&v).unwrap(), 2);
        assert_eq!(u.pair_distance(&v).unwrap(), 4);
    }

    #[test]
    fn full_disagreement_keeps_pair_distance_n() {
        let u = w(2, &[0, 0, 0]);
        let v = w(2, &[1, 1, 1]);
        assert_eq!(u.pair_distance(&v).unwrap(), 3);
    }

    #[test]
    fn mismatches_rejected() {
        let u = w(2, &[0, 0, 0]);
        let v = w(2, &[0, 0]);
        assert!(matches!(
            u.pair_distance(&v),
            Err(Error::LengthMismatch(3, 2))
        ));
        let x = w(3, &[0, 0, 0]);
        assert!(matches!(u.pair_distance(&x), Err(Error::AlphabetMismatch)));
    }

    #[test]
    fn length_one_rejected() {
        assert!(Word::new(Alphabet::ring(2).unwrap(), vec![1]).is_err());
    }

    #[test]
    fn single_nonzero_symbol_weighs_two() {
        for n in 3..=8 {
            let mut symbols = vec![0; n];
            symbols[n / 2] = 1;
            assert_eq!(w(2, &symbols).pair_weight(), 2);
        }
    }

    #[test]
    fn pair_read_recovers_word() {
        // First components of the pair reading are the word itself.
        let u = w(5, &[4, 0, 3, 3, 1]);
        let firsts: Vec<Symbol> = u.pair_read().pairs().iter().map(|&(a, _)| a).collect();
        assert_eq!(firsts, u.symbols());
    }
}
