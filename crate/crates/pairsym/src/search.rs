//! Exhaustive maximum-code search over small parameter spaces.
//!
//! Finds the exact largest code of length n over Z_q whose minimum pair
//! distance is at least d, as a maximum clique of the compatibility graph on
//! all q^n words. Cyclic rotation and symbol permutation both preserve pair
//! distance, so the clique search only needs to consider codes whose
//! lexicographically smallest word is canonical in its symmetry orbit, with
//! every further word canonically no smaller; that cuts the branching by
//! roughly the symmetry-group order without risking the exact answer.

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::word::pair_distance_slices;

/// Hard cap on q^n for [`max_code_size`]; beyond it the clique search is no
/// longer a desk-scale computation.
pub const SEARCH_GUARD: u128 = 4096;

/// Outcome of [`max_code_size`]: the best size found, one code attaining
/// it, and whether an early-stop target cut the search short (in which case
/// `maximum` is only a lower bound).
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub maximum: usize,
    pub witness: Vec<Vec<Symbol>>,
    pub reached_target: bool,
}

/// Exact maximum size of a length-n code over Z_q with minimum pair
/// distance at least d, by branch and bound. With `target` set, the search
/// stops as soon as it has a code that large. Deterministic; guarded by
/// q^n <= [`SEARCH_GUARD`].
pub fn max_code_size(n: usize, d: usize, q: u16, target: Option<usize>) -> Result<SearchOutcome> {
    if n < 2 || d < 2 || d > n || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2, 2 <= d <= n and q >= 2, got (n={n}, d={d}, q={q})"
        )));
    }
    let space = (q as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::Overflow(format!("q^n with q = {q}, n = {n}")))?;
    if space > SEARCH_GUARD {
        return Err(Error::EnumerationTooLarge(format!(
            "q^n = {space} words exceed the search guard of {SEARCH_GUARD}"
        )));
    }
    let total = space as usize;
    let words: Vec<Vec<Symbol>> = (0..total).map(|i| word_of(i, n, q)).collect();

    // Symmetry group: all n rotations crossed with symbol permutations
    // (every symbol bijection preserves pair distance; full group for small
    // q, the translation subgroup otherwise -- any subgroup gives a sound
    // canonical form, just weaker pruning).
    let perms = symbol_maps(q);
    let canon: Vec<Vec<Symbol>> = words.iter().map(|w| canonical_form(w, &perms)).collect();

    let stride = total.div_ceil(64);
    let mut adj = vec![0u64; total * stride];
    for u in 0..total {
        for v in u + 1..total {
            if pair_distance_slices(&words[u], &words[v]) >= d {
                adj[u * stride + v / 64] |= 1 << (v % 64);
                adj[v * stride + u / 64] |= 1 << (u % 64);
            }
        }
    }
    let has_edge = |u: usize, v: usize| adj[u * stride + v / 64] >> (v % 64) & 1 == 1;

    let mut best: Vec<usize> = Vec::new();
    let mut reached = false;
    'roots: for r in 0..total {
        if canon[r] != words[r] {
            continue;
        }
        // The root is the smallest word of the clique, so candidates sit
        // above it and may not map below it canonically.
        let cands: Vec<usize> = (r + 1..total)
            .filter(|&v| has_edge(r, v) && canon[v] >= words[r])
            .collect();
        if cands.len() < best.len() {
            continue;
        }
        let mut current = vec![r];
        if best.is_empty() {
            best = current.clone();
        }
        extend(
            &mut current,
            cands,
            &mut best,
            &has_edge,
            target,
            &mut reached,
        );
        if reached {
            break 'roots;
        }
    }

    let mut witness: Vec<Vec<Symbol>> = best.iter().map(|&i| words[i].clone()).collect();
    witness.sort();
    Ok(SearchOutcome {
        maximum: best.len(),
        witness,
        reached_target: reached,
    })
}

fn extend(
    current: &mut Vec<usize>,
    cands: Vec<usize>,
    best: &mut Vec<usize>,
    has_edge: &impl Fn(usize, usize) -> bool,
    target: Option<usize>,
    reached: &mut bool,
) {
    if current.len() > best.len() {
        *best = current.clone();
        if target.is_some_and(|t| best.len() >= t) {
            *reached = true;
            return;
        }
    }
    if current.len() + cands.len() <= best.len() {
        return;
    }
    // Greedy coloring: vertices of one color class are pairwise adjacent-free,
    // so a clique takes at most one per class; processing in descending color
    // order makes the per-vertex bound exact for the remaining prefix.
    let mut color_of = vec![0usize; cands.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, &v) in cands.iter().enumerate() {
        let slot = classes
            .iter()
            .position(|class| class.iter().all(|&u| !has_edge(cands[u], v)))
            .unwrap_or_else(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
        classes[slot].push(idx);
        color_of[idx] = slot + 1;
    }
    let mut order: Vec<usize> = (0..cands.len()).collect();
    order.sort_by_key(|&idx| color_of[idx]);

    for pos in (0..order.len()).rev() {
        let idx = order[pos];
        if current.len() + color_of[idx] <= best.len() {
            return;
        }
        let v = cands[idx];
        let next: Vec<usize> = order[..pos]
            .iter()
            .map(|&j| cands[j])
            .filter(|&u| has_edge(u, v))
            .collect();
        current.push(v);
        extend(current, next, best, has_edge, target, reached);
        current.pop();
        if *reached {
            return;
        }
    }
}

fn word_of(mut idx: usize, n: usize, q: u16) -> Vec<Symbol> {
    let mut w = vec![0 as Symbol; n];
    for t in (0..n).rev() {
        w[t] = (idx % q as usize) as Symbol;
        idx /= q as usize;
    }
    w
}

/// Symbol bijections used for canonicalization: every permutation of the
/// alphabet when q! stays tiny, otherwise the q cyclic translations.
fn symbol_maps(q: u16) -> Vec<Vec<Symbol>> {
    if q <= 5 {
        let mut maps = Vec::new();
        let mut perm: Vec<Symbol> = (0..q).collect();
        heap_permutations(&mut perm, q as usize, &mut maps);
        maps
    } else {
        (0..q)
            .map(|c| (0..q).map(|s| (s + c) % q).collect())
            .collect()
    }
}

fn heap_permutations(perm: &mut Vec<Symbol>, k: usize, out: &mut Vec<Vec<Symbol>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(perm, k - 1, out);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

fn canonical_form(w: &[Symbol], maps: &[Vec<Symbol>]) -> Vec<Symbol> {
    let n = w.len();
    let mut best: Option<Vec<Symbol>> = None;
    let mut image = vec![0 as Symbol; n];
    for map in maps {
        for shift in 0..n {
            for t in 0..n {
                image[t] = map[w[(t + shift) % n] as usize];
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::code::Code;

    #[test]
    fn guard_enforced() {
        assert!(matches!(
            max_code_size(7, 2, 4, None),
            Err(Error::EnumerationTooLarge(_))
        ));
        // 4^6 = 4096 sits exactly on the guard.
        assert!(max_code_size(6, 6, 4, Some(1)).is_ok());
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(max_code_size(4, 5, 2, None).is_err());
        assert!(max_code_size(4, 1, 2, None).is_err());
        assert!(max_code_size(1, 2, 2, None).is_err());
    }

    #[test]
    fn full_distance_binary_maxima() {
        // Both hit the Singleton-type bound q^(n-d+2) = 4.
        let out = max_code_size(3, 3, 2, None).unwrap();
        assert_eq!(out.maximum, 4);
        assert!(!out.reached_target);
        let out = max_code_size(4, 4, 2, None).unwrap();
        assert_eq!(out.maximum, 4);
        // The witness really is a code at that distance.
        let code = Code::new(Alphabet::ring(2).unwrap(), 4, out.witness, None).unwrap();
        assert_eq!(code.size(), 4);
        assert_eq!(code.min_pair_distance().unwrap(), 4);
    }

    #[test]
    fn ternary_whole_space_found() {
        // d = 2 admits every word: maximum is q^n.
        let out = max_code_size(3, 2, 3, None).unwrap();
        assert_eq!(out.maximum, 27);
    }

    #[test]
    fn early_stop_reports_lower_bound() {
        let out = max_code_size(4, 2, 2, Some(3)).unwrap();
        assert!(out.reached_target);
        assert!(out.maximum >= 3);
        assert_eq!(out.witness.len(), out.maximum);
    }

    #[test]
    fn matches_constructed_code_sizes() {
        // Cross-validation: the search can never fall below a code we build.
        let constructed = crate::constructions::construct(4, 3, 2).unwrap().code;
        let out = max_code_size(4, 3, 2, None).unwrap();
        assert!(out.maximum >= constructed.size());
    }

    #[test]
    fn length_eight_binary_pair_distance_seven() {
        let out = max_code_size(8, 7, 2, None).unwrap();
        assert!(out.maximum <= 7, "found {}", out.maximum);
        // Below the bound q^(n-d+2) = 8: no MDS code at these parameters.
        let code = Code::new(Alphabet::ring(2).unwrap(), 8, out.witness, None).unwrap();
        assert!(code.min_pair_distance().unwrap() >= 7);
    }
}
