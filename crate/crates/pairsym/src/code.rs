//! Codes as finite sets of equal-length words, with brute-force pair-distance
//! scans and the Singleton-type bound for symbol-pair codes.
//!
//! A symbol-pair code over an alphabet of size q with length n and minimum
//! pair distance d satisfies |C| <= q^(n-d+2); codes attaining the bound are
//! called MDS symbol-pair codes. Verification here is always an exhaustive
//! pairwise scan, so a reported minimum distance is a ground-truth fact about
//! the stored words, independent of how they were constructed.

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::word::{hamming_distance_slices, pair_distance_slices};

/// A set of distinct codewords of fixed length n >= 2 over one alphabet,
/// stored in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    alphabet: Alphabet,
    n: usize,
    words: Vec<Vec<Symbol>>,
    claimed_d: Option<usize>,
    provenance: Option<String>,
}

/// Outcome of `Code::mds_report`: the scanned minimum pair distance compared
/// against the Singleton-type bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsReport {
    pub min_pair_distance: usize,
    pub size: u128,
    pub bound: u128,
    pub is_mds: bool,
}

impl Code {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        words: Vec<Vec<Symbol>>,
        claimed_d: Option<usize>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(
                "code length must be at least 2".into(),
            ));
        }
        if let Some(d) = claimed_d {
            if d < 2 || d > n {
                return Err(Error::InvalidParameter(format!(
                    "claimed pair distance {d} outside 2..={n}"
                )));
            }
        }
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch(n, w.len()));
            }
            if let Some(&s) = w.iter().find(|&&s| !alphabet.contains(s)) {
                return Err(Error::InvalidParameter(format!(
                    "symbol {s} out of range for alphabet of order {}",
                    alphabet.order()
                )));
            }
        }
        let mut words = words;
        words.sort_unstable();
        words.dedup();
        Ok(Code {
            alphabet,
            n,
            words,
            claimed_d,
            provenance: None,
        })
    }

    /// The whole space Sigma^n, which has pair distance exactly 2 and is the
    /// trivial MDS symbol-pair code with d = 2.
    pub fn whole_space(alphabet: Alphabet, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(
                "code length must be at least 2".into(),
            ));
        }
        let q = alphabet.order() as u128;
        let total = q
            .checked_pow(n as u32)
            .filter(|&t| t <= 1 << 22)
            .ok_or_else(|| {
                Error::EnumerationTooLarge(format!("whole space of size {}^{n}", alphabet.order()))
            })?;
        let mut words = Vec::with_capacity(total as usize);
        let mut cur = vec![0 as Symbol; n];
        loop {
            words.push(cur.clone());
            // Lexicographic successor: last coordinate moves fastest.
            let mut i = n;
            let mut done = true;
            while i > 0 {
                i -= 1;
                cur[i] += 1;
                if cur[i] < alphabet.order() {
                    done = false;
                    break;
                }
                cur[i] = 0;
            }
            if done {
                break;
            }
        }
        let mut code = Code::new(alphabet, n, words, Some(2))?;
        code.provenance = Some("whole-space".into());
        Ok(code)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Codewords in lexicographic order.
    pub fn words(&self) -> &[Vec<Symbol>] {
        &self.words
    }

    pub fn claimed_d(&self) -> Option<usize> {
        self.claimed_d
    }

    pub fn set_claimed_d(&mut self, d: Option<usize>) {
        self.claimed_d = d;
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn set_provenance(&mut self, p: impl Into<String>) {
        self.provenance = Some(p.into());
    }

    /// Number of unordered codeword pairs a full scan compares.
    pub fn pair_comparisons(&self) -> u128 {
        let m = self.words.len() as u128;
        m * (m.saturating_sub(1)) / 2
    }

    /// Exhaustive minimum pair distance over all unordered codeword pairs.
    /// Work is split across threads; the minimum is order-independent, so the
    /// result does not depend on the partitioning.
    pub fn min_pair_distance(&self) -> Result<usize> {
        self.min_distance_by(pair_distance_slices)
    }

    /// Exhaustive minimum Hamming distance.
    pub fn min_hamming_distance(&self) -> Result<usize> {
        self.min_distance_by(hamming_distance_slices)
    }

    fn min_distance_by(&self, dist: fn(&[Symbol], &[Symbol]) -> usize) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::TooFewCodewords);
        }
        let min = (0..self.words.len() - 1)
            .into_par_iter()
            .map(|i| {
                let u = &self.words[i];
                self.words[i + 1..]
                    .iter()
                    .map(|v| dist(u, v))
                    .min()
                    .unwrap()
            })
            .min()
            .unwrap();
        Ok(min)
    }

    /// Early-exit refutation scan: the first unordered pair (in index order)
    /// with pair distance below `threshold`, or None if no such pair exists.
    pub fn find_pair_below(&self, threshold: usize) -> Result<Option<(usize, usize, usize)>> {
        if self.words.len() < 2 {
            return Err(Error::TooFewCodewords);
        }
        for i in 0..self.words.len() - 1 {
            for j in i + 1..self.words.len() {
                let d = pair_distance_slices(&self.words[i], &self.words[j]);
                if d < threshold {
                    return Ok(Some((i, j, d)));
                }
            }
        }
        Ok(None)
    }

    /// Scan the minimum pair distance and compare the code size against the
    /// Singleton-type bound at that distance.
    pub fn mds_report(&self) -> Result<MdsReport> {
        let d = self.min_pair_distance()?;
        let bound = singleton_bound(self.n, d, self.alphabet.order())?;
        let size = self.words.len() as u128;
        Ok(MdsReport {
            min_pair_distance: d,
            size,
            bound,
            is_mds: size == bound,
        })
    }
}

/// The Singleton-type bound q^(n-d+2) on the size of a symbol-pair code of
/// length n and pair distance d, computed in 128-bit arithmetic.
pub fn singleton_bound(n: usize, d: usize, q: u16) -> Result<u128> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "alphabet order must be at least 2, got {q}"
        )));
    }
    if n < 2 || d < 2 || d > n {
        return Err(Error::InvalidParameter(format!(
            "bound needs 2 <= d <= n, got n={n}, d={d}"
        )));
    }
    let exp = (n - d + 2) as u32;
    (q as u128)
        .checked_pow(exp)
        .ok_or_else(|| Error::Overflow(format!("{q}^{exp}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use proptest::prelude::*;

    fn ring(q: u16) -> Alphabet {
        Alphabet::ring(q).unwrap()
    }

    #[test]
    fn whole_space_is_mds_with_distance_two() {
        for q in 2..=4u16 {
            for n in 2..=5usize {
                let c = Code::whole_space(ring(q), n).unwrap();
                let report = c.mds_report().unwrap();
                assert_eq!(report.min_pair_distance, 2, "q={q} n={n}");
                assert!(report.is_mds);
                assert_eq!(report.size, (q as u128).pow(n as u32));
            }
        }
    }

    #[test]
    fn dropping_a_word_breaks_mds() {
        let c = Code::whole_space(ring(2), 3).unwrap();
        let words: Vec<_> = c.words()[1..].to_vec();
        let c2 = Code::new(ring(2), 3, words, None).unwrap();
        let report = c2.mds_report().unwrap();
        assert_eq!(report.min_pair_distance, 2);
        assert!(!report.is_mds);
    }

    #[test]
    fn singleton_bound_values() {
        assert_eq!(singleton_bound(10, 9, 4).unwrap(), 64);
        assert_eq!(singleton_bound(8, 7, 2).unwrap(), 8);
        for n in 2..=6usize {
            assert_eq!(singleton_bound(n, n, 3).unwrap(), 9);
        }
        assert!(matches!(
            singleton_bound(200, 2, 257),
            Err(Error::InvalidParameter(_)) | Err(Error::Overflow(_))
        ));
        assert!(singleton_bound(5, 6, 2).is_err());
        assert!(singleton_bound(150, 2, 3).is_err());
    }

    #[test]
    fn min_distance_needs_two_words() {
        let c = Code::new(ring(2), 3, vec![vec![0, 0, 0]], None).unwrap();
        assert!(matches!(c.min_pair_distance(), Err(Error::TooFewCodewords)));
    }

    #[test]
    fn duplicate_words_collapse() {
        let c = Code::new(ring(2), 2, vec![vec![0, 1], vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(c.size(), 2);
    }

    #[test]
    fn refutation_scan_finds_close_pair() {
        let c = Code::whole_space(ring(2), 3).unwrap();
        let hit = c.find_pair_below(3).unwrap();
        assert!(hit.is_some());
        let (i, j, d) = hit.unwrap();
        assert_eq!(d, pair_distance_slices(&c.words()[i], &c.words()[j]));
        assert!(d < 3);
        assert!(c.find_pair_below(2).unwrap().is_none());
    }

    #[test]
    fn min_pair_distance_rotation_invariant() {
        let words = vec![
            vec![0, 1, 2, 0, 1],
            vec![1, 1, 0, 2, 2],
            vec![2, 0, 0, 0, 1],
            vec![0, 2, 1, 1, 0],
        ];
        let c = Code::new(ring(3), 5, words.clone(), None).unwrap();
        let base = c.min_pair_distance().unwrap();
        for r in 1..5 {
            let rotated: Vec<Vec<Symbol>> = words
                .iter()
                .map(|w| {
                    let mut v = w.clone();
                    v.rotate_left(r);
                    v
                })
                .collect();
            let cr = Code::new(ring(3), 5, rotated, None).unwrap();
            assert_eq!(cr.min_pair_distance().unwrap(), base);
        }
    }

    #[test]
    fn sandwich_property_exhaustive_small() {
        // d_H + 1 <= d_p <= 2 d_H strictly between the extremes, equality at
        // d_H = 0 and d_H = n.
        for q in 2..=3u16 {
            for n in 2..=5usize {
                let space = Code::whole_space(ring(q), n).unwrap();
                for u in space.words() {
                    for v in space.words() {
                        let dh = hamming_distance_slices(u, v);
                        let dp = pair_distance_slices(u, v);
                        if dh == 0 || dh == n {
                            assert_eq!(dp, dh);
                        } else {
                            assert!(dh < dp && dp <= 2 * dh, "u={u:?} v={v:?}");
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn metric_axioms(
            q in 2u16..=4,
            n in 2usize..=8,
            seed in proptest::collection::vec(0u16..4, 24),
        ) {
            let a = ring(q);
            let take = |k: usize| -> Vec<Symbol> {
                seed.iter().skip(k * n).take(n).map(|&s| s % q).collect()
            };
            let (u, v, w) = (take(0), take(1), take(2));
            let wu = Word::new(a.clone(), u.clone()).unwrap();
            let wv = Word::new(a.clone(), v.clone()).unwrap();
            let ww = Word::new(a.clone(), w.clone()).unwrap();
            let duv = wu.pair_distance(&wv).unwrap();
            let dvu = wv.pair_distance(&wu).unwrap();
            prop_assert_eq!(duv, dvu);
            prop_assert_eq!(duv == 0, u == v);
            let duw = wu.pair_distance(&ww).unwrap();
            let dvw = wv.pair_distance(&ww).unwrap();
            prop_assert!(duw <= duv + dvw);
            // Pair reading is injective and weight matches distance to zero.
            let zero = Word::new(a.clone(), vec![0; n]).unwrap();
            prop_assert_eq!(wu.pair_weight(), wu.pair_distance(&zero).unwrap());
            if u != v {
                prop_assert_ne!(wu.pair_read(), wv.pair_read());
            }
        }

        #[test]
        fn sandwich_property_random(
            q in 2u16..=4,
            n in 2usize..=8,
            seed in proptest::collection::vec(0u16..4, 16),
        ) {
            let take = |k: usize| -> Vec<Symbol> {
                seed.iter().skip(k * n).take(n).map(|&s| s % q).collect()
            };
            let (u, v) = (take(0), take(1));
            let dh = hamming_distance_slices(&u, &v);
            let dp = pair_distance_slices(&u, &v);
            if dh == 0 || dh == n {
                prop_assert_eq!(dp, dh);
            } else {
                prop_assert!(dh < dp && dp <= 2 * dh);
            }
        }
    }
}
