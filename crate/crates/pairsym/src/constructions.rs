//! Ways to build MDS symbol-pair codes, and a dispatcher that picks a route
//! from the target parameters (n, d, q).
//!
//! The routes, roughly in order of the distances they serve: the whole space
//! (d = 2), embedding a classical MDS code (pair distance one above the
//! Hamming distance), explicit two-column / two-row / three-column generator
//! matrices for d = 4, d = n and d = 5, a table of hand-found matrices for
//! small parameters no family covers, interleaving two classical codes
//! (doubles length and distance), re-reading a classical code along the
//! eulerian trail of a graph with large girth (stretches length n0 up to
//! quadratic in q while d grows in lockstep), development of seed words, and
//! the coordinatewise product of two codes over coprime-free alphabets.

use crate::alphabet::{is_prime, prime_power, Alphabet, Symbol};
use crate::classical::{
    is_mds_classical, parity_check, reed_solomon, triply_extended_rs, GeneratorMatrix,
};
use crate::code::{Code, MdsReport};
use crate::develop::{dev_8_7_2p, develop};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::spectrum::{eulerian_girth3, eulerian_girth4, max_size_girth4};

/// Default cap on the number of pairwise comparisons `construct` spends
/// verifying its output; larger codes are returned unverified.
pub const DEFAULT_VERIFY_BUDGET: u128 = 10_000_000;

/// A classical MDS code, viewed with pair distance one above its Hamming
/// distance. The input's exact minimum Hamming distance d is established by
/// full pairwise scan and must be below n.
pub fn embed_classical(code: &Code) -> Result<Code> {
    let report = is_mds_classical(code)?;
    if !report.is_mds {
        return Err(Error::Inapplicable(format!(
            "input is not a classical MDS code: size {} below {}",
            report.size, report.bound
        )));
    }
    let d = report.min_hamming_distance;
    embed_words(
        code.alphabet().clone(),
        code.n(),
        code.words().to_vec(),
        d,
        format!("classical-embedding(n={}, hamming_d={d})", code.n()),
    )
}

/// Matrix form of [`embed_classical`]: the span of a standard-form generator
/// is linear, so its minimum Hamming distance equals its minimum nonzero
/// weight, which a single linear scan computes.
pub fn embed_classical_matrix(gm: &GeneratorMatrix) -> Result<Code> {
    let d = gm.min_hamming_weight()?;
    let (n, k) = (gm.n(), gm.k());
    if d != n - k + 1 {
        return Err(Error::Inapplicable(format!(
            "span is not classical MDS: [n={n}, k={k}] has minimum weight {d}, not {}",
            n - k + 1
        )));
    }
    let mut words = Vec::new();
    gm.for_each_codeword(|w| words.push(w.to_vec()))?;
    embed_words(
        gm.alphabet().clone(),
        n,
        words,
        d,
        format!(
            "classical-embedding([{n},{k},{d}], q={})",
            gm.alphabet().order()
        ),
    )
}

fn embed_words(
    alphabet: Alphabet,
    n: usize,
    words: Vec<Vec<Symbol>>,
    d: usize,
    provenance: String,
) -> Result<Code> {
    if d >= n {
        return Err(Error::Inapplicable(format!(
            "classical distance {d} must be below the length {n}"
        )));
    }
    let mut code = Code::new(alphabet, n, words, Some(d + 1))?;
    code.set_provenance(provenance);
    Ok(code)
}

/// Alternate the coordinates of every pair of codewords from two classical
/// codes of equal length and equal minimum Hamming distance d. The result
/// has length 2n, size |c1|*|c2| and pair distance at least 2d, with
/// equality when both inputs are classical MDS.
pub fn interleave(c1: &Code, c2: &Code) -> Result<Code> {
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch(c1.n(), c2.n()));
    }
    if c1.alphabet() != c2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let d1 = c1.min_hamming_distance()?;
    let d2 = c2.min_hamming_distance()?;
    if d1 != d2 {
        return Err(Error::InvalidParameter(format!(
            "interleaving needs equal classical distances, got {d1} and {d2}"
        )));
    }
    let n = c1.n();
    let mut words = Vec::with_capacity(c1.size() * c2.size());
    for u in c1.words() {
        for v in c2.words() {
            let mut w = Vec::with_capacity(2 * n);
            for t in 0..n {
                w.push(u[t]);
                w.push(v[t]);
            }
            words.push(w);
        }
    }
    let mut code = Code::new(c1.alphabet().clone(), 2 * n, words, Some(2 * d1))?;
    debug_assert_eq!(code.size(), c1.size() * c2.size());
    code.set_provenance(format!(
        "interleaving(n={n}, hamming_d={d1}, q={})",
        c1.alphabet().order()
    ));
    Ok(code)
}

/// Shared precondition checks for trail re-reading: the graph must have the
/// code's length as its order, be eulerian, and have girth at least
/// n - d + 1. Returns the closed trail.
fn trail_for_extension(n: usize, d: usize, graph: &Graph) -> Result<Vec<usize>> {
    if graph.order() != n {
        return Err(Error::Inapplicable(format!(
            "graph order {} does not match code length {n}",
            graph.order()
        )));
    }
    if !graph.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let need = n - d + 1;
    let girth = graph
        .girth()
        .ok_or_else(|| Error::Inapplicable("graph has no cycle".into()))?;
    if girth < need {
        return Err(Error::Inapplicable(format!(
            "girth {girth} below the required {need}"
        )));
    }
    graph.eulerian_trail()
}

/// Re-read a classical MDS (n,d) code along a closed eulerian trail of a
/// graph of order n with girth at least n - d + 1: coordinate t of the new
/// word is coordinate x_t of the old one, where x_0..x_{m-1} are the first m
/// trail vertices. Length becomes the graph size m and the pair distance
/// becomes m - n + d + 1, which again meets the Singleton-type bound.
pub fn extend_by_graph(code: &Code, graph: &Graph) -> Result<Code> {
    let report = is_mds_classical(code)?;
    if !report.is_mds {
        return Err(Error::Inapplicable(format!(
            "input is not a classical MDS code: size {} below {}",
            report.size, report.bound
        )));
    }
    extend_words_by_graph(
        code.alphabet().clone(),
        code.n(),
        report.min_hamming_distance,
        code.words().iter().map(|w| w.as_slice()),
        code.size(),
        graph,
    )
}

/// Span-based variant used by the parameterized families below; linearity
/// lets a weight scan certify the classical distance.
fn extend_matrix_by_graph(gm: &GeneratorMatrix, graph: &Graph) -> Result<Code> {
    let d = gm.min_hamming_weight()?;
    let (n, k) = (gm.n(), gm.k());
    if d != n - k + 1 {
        return Err(Error::Inapplicable(format!(
            "span is not classical MDS: [n={n}, k={k}] has minimum weight {d}"
        )));
    }
    let mut words = Vec::new();
    gm.for_each_codeword(|w| words.push(w.to_vec()))?;
    let size = words.len();
    extend_words_by_graph(
        gm.alphabet().clone(),
        n,
        d,
        words.iter().map(|w| w.as_slice()),
        size,
        graph,
    )
}

fn extend_words_by_graph<'a>(
    alphabet: Alphabet,
    n: usize,
    d: usize,
    words: impl Iterator<Item = &'a [Symbol]>,
    size: usize,
    graph: &Graph,
) -> Result<Code> {
    if d >= n {
        return Err(Error::Inapplicable(format!(
            "classical distance {d} must be below the length {n}"
        )));
    }
    let trail = trail_for_extension(n, d, graph)?;
    let m = graph.size();
    let route = &trail[..m];
    let reread: Vec<Vec<Symbol>> = words
        .map(|u| route.iter().map(|&x| u[x]).collect())
        .collect();
    let mut code = Code::new(alphabet, m, reread, Some(m - n + d + 1))?;
    if code.size() != size {
        // Every vertex appears among the first m trail entries, so the
        // re-reading is injective; a shrink means the trail is broken.
        return Err(Error::Inapplicable(
            "trail re-reading collapsed distinct codewords".into(),
        ));
    }
    code.set_provenance(format!(
        "graph-extension(order={n}, size={m}, hamming_d={d})"
    ));
    Ok(code)
}

/// The classical MDS [n, n-d+1, d] generator this crate can reach over
/// GF(q): plain evaluation codes up to length q+1, and the two
/// characteristic-2 extensions of length q+2 (dimension 3 or q-1).
pub fn classical_mds_matrix(q: u16, n: usize, d: usize) -> Option<GeneratorMatrix> {
    if d < 1 || d > n || n < 2 {
        return None;
    }
    let (p, m) = prime_power(q)?;
    let alphabet = Alphabet::field(p, m).ok()?;
    let k = n - d + 1;
    if n <= q as usize + 1 {
        reed_solomon(&alphabet, n, k).ok()
    } else if n == q as usize + 2 && p == 2 && (k == 3 || k == q as usize - 1) {
        triply_extended_rs(&alphabet, k).ok()
    } else {
        None
    }
}

fn cycle_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

/// MDS (n, n-1)_q codes for prime powers q: a classical [n0, 3, n0-2] code
/// re-read along an eulerian graph of order n0, size n and girth >= 3, for
/// the smallest workable n0 <= q+1 (q+2 in characteristic 2). For q >= 4
/// every 3 <= n <= T-3 and n = T is reachable, where T = (q^2-1)/2 for odd
/// q and T = q(q+2)/2 for even q, plus sporadic lengths equal to the
/// maximum graph size of some smaller order (such as n = 10 at q = 4).
pub fn mds_nm1(q: u16, n: usize) -> Result<Code> {
    let (p, m) = prime_power(q)
        .ok_or_else(|| Error::Unsupported(format!("alphabet order {q} is not a prime power")))?;
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "length must be at least 3, got {n}"
        )));
    }
    let alphabet = Alphabet::field(p, m)?;
    let max_n0 = if p == 2 {
        q as usize + 2
    } else {
        q as usize + 1
    };
    for n0 in 3..=max_n0 {
        let graph = match eulerian_girth3(n0, n) {
            Ok(g) => g,
            Err(_) => continue,
        };
        let gm = if n0 == q as usize + 2 {
            triply_extended_rs(&alphabet, 3)?
        } else {
            reed_solomon(&alphabet, n0, 3)?
        };
        let mut code = extend_matrix_by_graph(&gm, &graph)?;
        code.set_provenance(format!(
            "graph-extension(classical=[{n0},3,{}], q={q}, size={n})",
            n0 - 2
        ));
        return Ok(code);
    }
    let top = if q % 2 == 1 {
        (q as usize * q as usize - 1) / 2
    } else {
        q as usize * (q as usize + 2) / 2
    };
    let range = if top >= 6 {
        format!(
            "; supported lengths include 3 <= n <= {} and n = {top}",
            top - 3
        )
    } else {
        String::new()
    };
    Err(Error::Unsupported(format!(
        "no eulerian graph of order at most {max_n0} has size {n} and girth 3 for q = {q}{range}"
    )))
}

/// MDS (n, n-2)_q codes for prime powers q, via classical [n0, 4, n0-3]
/// codes and eulerian graphs of girth >= 4 for the smallest workable
/// n0 <= q+1. For odd q >= 5 every 4 <= n <= M(q)+1 is reachable together
/// with even n up to M(q+1) except M(q+1) - 2; for even q >= 8 every
/// 4 <= n <= q^2/4 + 1 except q^2/4 - 1, where M is the maximum size of an
/// even girth->=4 graph of that order.
pub fn mds_nm2(q: u16, n: usize) -> Result<Code> {
    let (p, m) = prime_power(q)
        .ok_or_else(|| Error::Unsupported(format!("alphabet order {q} is not a prime power")))?;
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "length must be at least 4, got {n}"
        )));
    }
    let alphabet = Alphabet::field(p, m)?;
    for n0 in 4..=q as usize + 1 {
        let graph = if n0 < 6 {
            if n == n0 {
                cycle_graph(n0)
            } else {
                continue;
            }
        } else {
            match eulerian_girth4(n0, n) {
                Ok(g) => g,
                Err(_) => continue,
            }
        };
        let gm = reed_solomon(&alphabet, n0, 4)?;
        let mut code = extend_matrix_by_graph(&gm, &graph)?;
        code.set_provenance(format!(
            "graph-extension(classical=[{n0},4,{}], q={q}, size={n})",
            n0 - 3
        ));
        return Ok(code);
    }
    let range = if q >= 5 && q % 2 == 1 {
        let t1 = max_size_girth4(q as usize) + 1;
        let t2 = max_size_girth4(q as usize + 1);
        format!(
            "; supported lengths include 4 <= n <= {t1} and even n <= {t2} apart from {}",
            t2 - 2
        )
    } else if q >= 8 {
        let t = (q as usize * q as usize) / 4 + 1;
        format!(
            "; supported lengths include 4 <= n <= {t} apart from {}",
            t - 2
        )
    } else {
        String::new()
    };
    Err(Error::Unsupported(format!(
        "no eulerian graph of order at most {} has size {n} and girth 4 for q = {q}{range}",
        q + 1
    )))
}

/// Generator of the Z_q-linear MDS (n,4)_q code for any n >= 4, q >= 2:
/// identity block plus a column of 1, 2, ..., n-2 (mod q) and a column of
/// ones. Every nonzero combination keeps pair weight at least 4.
pub fn linear_d4(q: u16, n: usize) -> Result<GeneratorMatrix> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "length must be at least 4, got {n}"
        )));
    }
    let alphabet = Alphabet::ring(q)?;
    let k = n - 2;
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![0 as Symbol; n];
            row[i] = 1;
            row[n - 2] = ((i + 1) % q as usize) as Symbol;
            row[n - 1] = 1;
            row
        })
        .collect();
    GeneratorMatrix::new(alphabet, rows)
}

/// Generator of the Z_q-linear MDS (n,n)_q code for any n >= 2: two rows
/// supported on the even and odd coordinates respectively; for odd n both
/// rows also cover the final coordinate. Nonzero codewords have no two
/// consecutive zeros, so their pair weight is n.
pub fn linear_dn(q: u16, n: usize) -> Result<GeneratorMatrix> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "length must be at least 2, got {n}"
        )));
    }
    let alphabet = Alphabet::ring(q)?;
    let last_shared = n % 2 == 1;
    let row0 = (0..n)
        .map(|j| (j % 2 == 0 || (last_shared && j == n - 1)) as Symbol)
        .collect();
    let row1 = (0..n)
        .map(|j| (j % 2 == 1 || (last_shared && j == n - 1)) as Symbol)
        .collect();
    GeneratorMatrix::new(alphabet, vec![row0, row1])
}

/// Generator of the Z_q-linear MDS (n,5)_q code for odd primes q and
/// 5 <= n <= 2q+3: identity block plus the columns (i+1), 1 and (-1)^i.
pub fn linear_d5(q: u16, n: usize) -> Result<GeneratorMatrix> {
    if !is_prime(q) || q.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "alphabet order must be an odd prime, got {q}"
        )));
    }
    if n < 5 || n > 2 * q as usize + 3 {
        return Err(Error::InvalidParameter(format!(
            "length must satisfy 5 <= n <= {}, got {n}",
            2 * q + 3
        )));
    }
    let alphabet = Alphabet::ring(q)?;
    let k = n - 3;
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![0 as Symbol; n];
            row[i] = 1;
            row[n - 3] = ((i + 1) % q as usize) as Symbol;
            row[n - 2] = 1;
            row[n - 1] = if i % 2 == 0 { 1 } else { q - 1 };
            row
        })
        .collect();
    GeneratorMatrix::new(alphabet, rows)
}

/// Hand-tabulated Z_q-linear generators for the eleven small parameter
/// triples that no general family reaches; each spans a verified MDS
/// (n,d)_q symbol-pair code.
pub fn tabulated_code(q: u16, n: usize, d: usize) -> Result<GeneratorMatrix> {
    let rows: Vec<Vec<Symbol>> = match (q, n, d) {
        (2, 6, 5) => vec![
            vec![1, 0, 0, 1, 0, 1],
            vec![0, 1, 0, 1, 1, 0],
            vec![0, 0, 1, 1, 1, 1],
        ],
        (2, 7, 6) => vec![
            vec![1, 0, 0, 1, 0, 1, 1],
            vec![0, 1, 0, 1, 1, 1, 0],
            vec![0, 0, 1, 0, 1, 1, 1],
        ],
        (2, 7, 5) => vec![
            vec![1, 0, 0, 0, 1, 0, 1],
            vec![0, 1, 0, 0, 1, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 0, 1, 1],
        ],
        (2, 8, 6) => vec![
            vec![1, 0, 0, 0, 1, 0, 1, 0],
            vec![0, 1, 0, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 0, 0, 1],
            vec![0, 0, 0, 1, 0, 1, 1, 1],
        ],
        (2, 9, 7) => vec![
            vec![1, 0, 0, 0, 1, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 0, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1, 1, 1],
        ],
        (2, 10, 8) => vec![
            vec![1, 0, 0, 0, 1, 0, 1, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 1, 0, 1, 1, 0],
            vec![0, 0, 1, 0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
        ],
        (3, 7, 6) => vec![
            vec![1, 0, 0, 2, 2, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 2],
        ],
        (3, 8, 7) => vec![
            vec![1, 0, 0, 1, 1, 1, 2, 0],
            vec![0, 1, 0, 0, 1, 1, 1, 2],
            vec![0, 0, 1, 1, 1, 2, 0, 1],
        ],
        (3, 9, 7) => vec![
            vec![1, 0, 0, 0, 2, 2, 1, 0, 1],
            vec![0, 1, 0, 0, 2, 0, 1, 1, 1],
            vec![0, 0, 1, 0, 2, 2, 0, 0, 2],
            vec![0, 0, 0, 1, 1, 0, 2, 1, 1],
        ],
        (3, 10, 8) => vec![
            vec![1, 0, 0, 0, 1, 1, 1, 2, 2, 0],
            vec![0, 1, 0, 0, 0, 1, 1, 1, 1, 2],
            vec![0, 0, 1, 0, 0, 2, 0, 1, 2, 2],
            vec![0, 0, 0, 1, 1, 1, 2, 2, 1, 2],
        ],
        (5, 9, 7) => vec![
            vec![1, 0, 0, 0, 1, 0, 1, 0, 1],
            vec![0, 1, 0, 0, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 0, 2, 0, 3],
            vec![0, 0, 0, 1, 0, 1, 0, 2, 3],
        ],
        _ => {
            return Err(Error::Unsupported(format!(
                "no tabulated matrix for (n={n}, d={d}, q={q})"
            )))
        }
    };
    GeneratorMatrix::new(Alphabet::ring(q)?, rows)
}

/// All (q, n, d) triples served by [`tabulated_code`].
pub const TABULATED_TRIPLES: [(u16, usize, usize); 11] = [
    (2, 6, 5),
    (2, 7, 6),
    (2, 7, 5),
    (2, 8, 6),
    (2, 9, 7),
    (2, 10, 8),
    (3, 7, 6),
    (3, 8, 7),
    (3, 9, 7),
    (3, 10, 8),
    (5, 9, 7),
];

/// Coordinatewise pairing of two codes with equal length and equal claimed
/// distance d: symbol pairs encode as s1*q2 + s2. The result keeps distance
/// at least d over the order-q1*q2 alphabet, with equality when both inputs
/// are MDS, which also transfers the bound-meeting size.
pub fn product(c1: &Code, c2: &Code) -> Result<Code> {
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch(c1.n(), c2.n()));
    }
    let d = match (c1.claimed_d(), c2.claimed_d()) {
        (Some(a), Some(b)) if a == b => a,
        (a, b) => {
            return Err(Error::InvalidParameter(format!(
                "product needs equal claimed distances, got {a:?} and {b:?}"
            )))
        }
    };
    let (q1, q2) = (c1.alphabet().order(), c2.alphabet().order());
    let q = (q1 as u32) * (q2 as u32);
    if q > u16::MAX as u32 {
        return Err(Error::Overflow(format!("product alphabet order {q}")));
    }
    let n = c1.n();
    let mut words = Vec::with_capacity(c1.size() * c2.size());
    for u in c1.words() {
        for v in c2.words() {
            words.push((0..n).map(|t| u[t] * q2 + v[t]).collect());
        }
    }
    let mut code = Code::new(Alphabet::ring(q as u16)?, n, words, Some(d))?;
    debug_assert_eq!(code.size(), c1.size() * c2.size());
    code.set_provenance(format!("product(q1={q1}, q2={q2}, n={n}, d={d})"));
    Ok(code)
}

/// A constructed code together with the route taken and, when the pairwise
/// scan fit the budget, its brute-force verification report.
#[derive(Debug, Clone)]
pub struct Constructed {
    pub code: Code,
    pub route: String,
    pub verified: Option<MdsReport>,
}

/// Build an MDS (n,d)_q symbol-pair code with the default verification
/// budget. See [`construct_with_budget`].
pub fn construct(n: usize, d: usize, q: u16) -> Result<Constructed> {
    construct_with_budget(n, d, q, DEFAULT_VERIFY_BUDGET)
}

/// Dispatcher over every construction in this module. Tries, in order: the
/// known-impossible case (8,7) over two symbols, the whole space (d = 2),
/// the parity-check embedding (d = 3), the two fixed matrix families
/// (d = 4 and d = n), the tabulated matrices, the d = 5 family, development
/// (length 8, order twice an odd prime), the two graph-extension families
/// (d = n-1, n-2), embedding or interleaving an evaluation code, and finally
/// products over factorizations of q. The returned code is verified by full
/// pairwise scan when that costs at most `budget` comparisons.
pub fn construct_with_budget(n: usize, d: usize, q: u16, budget: u128) -> Result<Constructed> {
    if n < 2 || d < 2 || d > n || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2, 2 <= d <= n and q >= 2, got (n={n}, d={d}, q={q})"
        )));
    }
    certify(construct_unverified(n, d, q)?, budget)
}

/// Wrap a code with a claimed distance into a [`Constructed`], verifying
/// the claim by full pairwise scan when that fits the comparison budget and
/// leaving `verified` empty otherwise. A scan that contradicts the claim or
/// the bound is an error, not a silent downgrade.
pub fn certify(code: Code, budget: u128) -> Result<Constructed> {
    let d = code.claimed_d().ok_or_else(|| {
        Error::InvalidParameter("cannot certify a code with no claimed distance".into())
    })?;
    let route = code.provenance().unwrap_or("unknown").to_string();
    let verified = if code.pair_comparisons() <= budget {
        let report = code.mds_report()?;
        if !report.is_mds || report.min_pair_distance != d {
            return Err(Error::VerificationFailed {
                expected: d,
                found: report.min_pair_distance,
            });
        }
        Some(report)
    } else {
        None
    };
    Ok(Constructed {
        code,
        route,
        verified,
    })
}

fn construct_unverified(n: usize, d: usize, q: u16) -> Result<Code> {
    if (n, d, q) == (8, 7, 2) {
        return Err(Error::Nonexistent(
            "over two symbols any length-8 code with pair distance 7 has at most 7 codewords, \
             below the 8 the bound allows"
                .into(),
        ));
    }
    if d == 2 {
        return Code::whole_space(Alphabet::ring(q)?, n);
    }
    if d == 3 {
        return embed_classical_matrix(&parity_check(&Alphabet::ring(q)?, n)?);
    }
    if d == 4 {
        return span_with_claim(linear_d4(q, n)?, 4);
    }
    if d == n {
        return span_with_claim(linear_dn(q, n)?, n);
    }
    // From here on 5 <= d <= n - 1.
    if let Ok(gm) = tabulated_code(q, n, d) {
        let mut code = span_with_claim(gm, d)?;
        code.set_provenance(format!("tabulated(n={n}, d={d}, q={q})"));
        return Ok(code);
    }
    if d == 5 {
        if let Ok(gm) = linear_d5(q, n) {
            return span_with_claim(gm, 5);
        }
    }
    if n == 8 && d == 7 && q.is_multiple_of(2) && is_prime(q / 2) && q / 2 > 2 {
        return develop(&dev_8_7_2p(q / 2)?);
    }
    if d + 1 == n {
        if let Ok(code) = mds_nm1(q, n) {
            return Ok(code);
        }
    }
    if d + 2 == n {
        if let Ok(code) = mds_nm2(q, n) {
            return Ok(code);
        }
    }
    if let Some(gm) = classical_mds_matrix(q, n, d - 1) {
        if let Ok(code) = embed_classical_matrix(&gm) {
            return Ok(code);
        }
    }
    if n.is_multiple_of(2) && d.is_multiple_of(2) {
        if let Some(gm) = classical_mds_matrix(q, n / 2, d / 2) {
            let half = gm.span()?;
            if let Ok(code) = interleave(&half, &half) {
                return Ok(code);
            }
        }
    }
    let mut a = 2u16;
    while (a as u32) * (a as u32) <= q as u32 {
        if q.is_multiple_of(a) {
            let b = q / a;
            if let (Ok(c1), Ok(c2)) = (construct_unverified(n, d, a), construct_unverified(n, d, b))
            {
                let mut code = product(&c1, &c2)?;
                code.set_provenance(format!(
                    "product({} x {})",
                    c1.provenance().unwrap_or("?"),
                    c2.provenance().unwrap_or("?")
                ));
                return Ok(code);
            }
        }
        a += 1;
    }
    Err(Error::Unsupported(format!(
        "no construction covers (n={n}, d={d}, q={q})"
    )))
}

/// Span a generator matrix into a code claiming pair distance d.
pub fn span_with_claim(gm: GeneratorMatrix, d: usize) -> Result<Code> {
    let mut code = gm.span()?;
    code.set_claimed_d(Some(d));
    code.set_provenance(format!(
        "linear-matrix(n={}, k={}, d={d}, q={})",
        gm.n(),
        gm.k(),
        gm.alphabet().order()
    ));
    Ok(code)
}
