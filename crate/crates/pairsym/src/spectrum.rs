//! Eulerian graphs of prescribed order, size and girth.
//!
//! The code constructions need, for a given order n, eulerian graphs of
//! every achievable size m, with girth at least three (any simple eulerian
//! graph) or at least four (triangle-free). Both spectra are built the same
//! way: decompose the densest admissible graph into edge-disjoint Hamilton
//! cycles, realize small sizes inside two cycles, and add whole cycles to
//! climb to larger sizes. Girth four additionally uses complete bipartite
//! hosts, cycle removals, subdivision for odd orders, and two fixed order-9
//! gadgets for the sizes of opposite parity.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Largest size of an eulerian graph of order n: every degree is even and
/// at most n - 1, so at most 2*floor((n-1)/2) per vertex.
pub fn max_size_girth3(n: usize) -> usize {
    n * ((n - 1) / 2)
}

/// Largest size of an eulerian graph of order n with girth at least four.
pub fn max_size_girth4(n: usize) -> usize {
    if n.is_multiple_of(2) {
        2 * (n * n / 8)
    } else {
        2 * ((n - 1) * (n - 1) / 8) + 1
    }
}

type EdgeSet = BTreeSet<(usize, usize)>;

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Edges of the closed cycle through `seq` in order.
fn cycle_edges(seq: &[usize]) -> EdgeSet {
    let mut edges = EdgeSet::new();
    for w in seq.windows(2) {
        edges.insert(norm(w[0], w[1]));
    }
    edges.insert(norm(seq[seq.len() - 1], seq[0]));
    edges
}

fn ring_label(x: i64, ring: usize) -> usize {
    x.rem_euclid(ring as i64) as usize
}

/// The i-th Hamilton cycle of K_n in an edge-disjoint family of
/// floor((n-1)/2) cycles. Vertices are Z_{n-1} plus a hub labeled n - 1;
/// after the hub the cycle zigzags i, i-1, i+1, i-2, i+2, ...
pub(crate) fn hamilton_cycle_g3(n: usize, i: usize) -> Vec<usize> {
    let ring = n - 1;
    let mut seq = Vec::with_capacity(n);
    seq.push(n - 1);
    for j in 0..ring {
        let t = (j as i64 + 1) / 2;
        let v = if j % 2 == 1 {
            i as i64 - t
        } else {
            i as i64 + t
        };
        seq.push(ring_label(v, ring));
    }
    seq
}

/// Closed cycle on the first s vertices of cycle 0's zigzag (s >= 3). The
/// closing edge leaves cycle 0; `closing_cycle_g3` names the cycle it lands
/// in. For even n the length-3 cycle skips the hub instead, since the
/// hub-prefix of length 3 closes outside the family.
fn prefix_cycle_g3(n: usize, s: usize) -> Vec<usize> {
    let ring = n - 1;
    if n.is_multiple_of(2) && s == 3 {
        return vec![0, ring - 1, 1];
    }
    hamilton_cycle_g3(n, 0)[..s].to_vec()
}

fn closing_cycle_g3(n: usize, s: usize) -> usize {
    let k = (n - 1) / 2;
    if n % 2 == 1 {
        // order n = 2k+1: prefix ends at -l (s = 2l+1) or +(l-1) (s = 2l).
        if s % 2 == 1 {
            k - (s - 1) / 2
        } else {
            s / 2 - 1
        }
    } else if s == 3 {
        1
    } else if s % 2 == 1 {
        k + 1 - (s - 1) / 2
    } else {
        s / 2 - 1
    }
}

/// Even subgraph of size m living inside cycles {0, c}: the prefix cycle
/// itself for m < n, cycle 0 for m = n, and the union of cycles 0 and c
/// minus a prefix cycle for m > n. Returns the edges and the set of
/// Hamilton-cycle indices consumed.
fn small_even_g3(n: usize, m: usize) -> (EdgeSet, BTreeSet<usize>) {
    use std::cmp::Ordering::*;
    match m.cmp(&n) {
        Less => {
            let c = closing_cycle_g3(n, m);
            (cycle_edges(&prefix_cycle_g3(n, m)), BTreeSet::from([0, c]))
        }
        Equal => (cycle_edges(&hamilton_cycle_g3(n, 0)), BTreeSet::from([0])),
        Greater => {
            let s = 2 * n - m;
            let c = closing_cycle_g3(n, s);
            let mut edges = cycle_edges(&hamilton_cycle_g3(n, 0));
            edges.extend(cycle_edges(&hamilton_cycle_g3(n, c)));
            for e in cycle_edges(&prefix_cycle_g3(n, s)) {
                let removed = edges.remove(&e);
                debug_assert!(removed);
            }
            (edges, BTreeSet::from([0, c]))
        }
    }
}

/// Eulerian graph of order n and size m. Exists for n <= m <= M with
/// M = n*floor((n-1)/2); the two sizes M-1 and M-2 are refused.
pub fn eulerian_girth3(n: usize, m: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::GraphUnsupported {
            order: n,
            size: m,
            girth: 3,
            reason: "order below 3".into(),
        });
    }
    let top = max_size_girth3(n);
    if m + 1 == top || m + 2 == top {
        return Err(Error::GraphNonexistent {
            order: n,
            size: m,
            girth: 3,
        });
    }
    if m < n || m > top {
        return Err(Error::GraphUnsupported {
            order: n,
            size: m,
            girth: 3,
            reason: format!("size outside the constructive range {n}..={top}"),
        });
    }
    let k = (n - 1) / 2;
    let edges = if m == top {
        let mut edges = EdgeSet::new();
        for i in 0..k {
            edges.extend(cycle_edges(&hamilton_cycle_g3(n, i)));
        }
        edges
    } else if m <= 2 * n - 3 {
        small_even_g3(n, m).0
    } else {
        // m <= M - 3: peel off whole Hamilton cycles until the remainder
        // fits the small table, then add that many unused cycles back.
        let r = (m - (2 * n - 3)).div_ceil(n);
        let (mut edges, used) = small_even_g3(n, m - r * n);
        let mut added = 0;
        for i in 0..k {
            if added == r {
                break;
            }
            if !used.contains(&i) {
                edges.extend(cycle_edges(&hamilton_cycle_g3(n, i)));
                added += 1;
            }
        }
        debug_assert_eq!(added, r);
        edges
    };
    let g = Graph::new(n, edges)?;
    debug_assert_eq!(g.size(), m);
    debug_assert!(g.is_eulerian());
    Ok(g)
}

/// The i-th Hamilton cycle of K_{n',n'} in an edge-disjoint family of
/// floor(n'/2) cycles. Left part is 0..n', right part is n'..2n'; cycle i
/// alternates a -> a + 2i (right) -> a + 1 (left).
pub(crate) fn hamilton_cycle_g4(nprime: usize, i: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(2 * nprime);
    for a in 0..nprime {
        seq.push(a);
        seq.push(nprime + (a + 2 * i) % nprime);
    }
    seq
}

/// Closed cycle alternating 0, 0', 1, 1', ..., s/2-1, (s/2-1)' (s even).
/// Closing edge has offset s/2 - 1, landing in cycle floor(s/4).
fn prefix_cycle_g4(nprime: usize, s: usize) -> Vec<usize> {
    (0..s)
        .map(|j| if j % 2 == 0 { j / 2 } else { nprime + j / 2 })
        .collect()
}

/// For odd n', the cycle 0, 2', 1, 3', ..., n'-2, 0' of length 2(n'-1),
/// inside cycles {0, 1}. Covers the one size the prefix cycles miss.
fn special_cycle_g4(nprime: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(2 * (nprime - 1));
    for a in 0..nprime - 1 {
        seq.push(a);
        seq.push(nprime + (a + 2) % nprime);
    }
    seq
}

/// Even bipartite subgraph of size m (even, 4 <= m <= 2n-4) inside two
/// Hamilton cycles of K_{n/2,n/2}.
fn small_even_g4(n: usize, m: usize) -> (EdgeSet, BTreeSet<usize>) {
    let nprime = n / 2;
    if nprime % 2 == 1 && m == n - 2 {
        return (
            cycle_edges(&special_cycle_g4(nprime)),
            BTreeSet::from([0, 1]),
        );
    }
    if nprime % 2 == 1 && m == n + 2 {
        let mut edges = cycle_edges(&hamilton_cycle_g4(nprime, 0));
        edges.extend(cycle_edges(&hamilton_cycle_g4(nprime, 1)));
        for e in cycle_edges(&special_cycle_g4(nprime)) {
            let removed = edges.remove(&e);
            debug_assert!(removed);
        }
        return (edges, BTreeSet::from([0, 1]));
    }
    use std::cmp::Ordering::*;
    match m.cmp(&n) {
        Less => (
            cycle_edges(&prefix_cycle_g4(nprime, m)),
            BTreeSet::from([0, m / 4]),
        ),
        Equal => (
            cycle_edges(&hamilton_cycle_g4(nprime, 0)),
            BTreeSet::from([0]),
        ),
        Greater => {
            let s = 2 * n - m;
            let c = s / 4;
            let mut edges = cycle_edges(&hamilton_cycle_g4(nprime, 0));
            edges.extend(cycle_edges(&hamilton_cycle_g4(nprime, c)));
            for e in cycle_edges(&prefix_cycle_g4(nprime, s)) {
                let removed = edges.remove(&e);
                debug_assert!(removed);
            }
            (edges, BTreeSet::from([0, c]))
        }
    }
}

/// Same-parity girth-4 sizes for even n: subgraphs of K_{n/2,n/2} plus, for
/// n = 4k+2, the denser K_{2k,2k+2} with a short cycle removed.
fn girth4_even(n: usize, m: usize) -> Result<Graph> {
    let nprime = n / 2;
    let k = nprime / 2;
    let top = max_size_girth4(n);
    let edges = if nprime % 2 == 1 && m == top {
        return Graph::complete_bipartite(2 * k, 2 * k + 2);
    } else if nprime % 2 == 1 && (m > n * k || m == n * k - 2) {
        // n*k-2 <= m <= top-4: remove one cycle of length top - m from
        // K_{2k,2k+2}; the cycle alternates between the first (top-m)/2
        // vertices of either part.
        let mut g = Graph::complete_bipartite(2 * k, 2 * k + 2)?;
        let s = top - m;
        debug_assert!((4..=2 * k + 2).contains(&s) && s.is_multiple_of(2));
        let seq: Vec<usize> = (0..s)
            .map(|j| if j % 2 == 0 { j / 2 } else { 2 * k + j / 2 })
            .collect();
        for (u, v) in cycle_edges(&seq) {
            g.remove_edge(u, v)?;
        }
        return Ok(g);
    } else if m == n * k {
        let mut edges = EdgeSet::new();
        for i in 0..k {
            edges.extend(cycle_edges(&hamilton_cycle_g4(nprime, i)));
        }
        edges
    } else if m <= 2 * n - 4 {
        small_even_g4(n, m).0
    } else {
        let r = (m - (2 * n - 4)).div_ceil(n);
        let (mut edges, used) = small_even_g4(n, m - r * n);
        let mut added = 0;
        for i in 0..k {
            if added == r {
                break;
            }
            if !used.contains(&i) {
                edges.extend(cycle_edges(&hamilton_cycle_g4(nprime, i)));
                added += 1;
            }
        }
        debug_assert_eq!(added, r);
        edges
    };
    Graph::new(n, edges)
}

/// The four fixed eulerian girth-4 graphs covering sizes of the parity the
/// bipartite constructions cannot reach.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    H9_14,
    H9_16,
    H10_15,
    H10_17,
}

pub fn gadget(which: Gadget) -> Graph {
    let h9_14 = [
        (0, 1),
        (0, 5),
        (0, 7),
        (0, 8),
        (1, 2),
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (4, 5),
        (4, 7),
        (4, 8),
        (5, 6),
        (6, 7),
    ];
    let h9_16 = [
        (0, 1),
        (0, 5),
        (0, 7),
        (0, 8),
        (1, 2),
        (1, 4),
        (1, 6),
        (2, 3),
        (2, 5),
        (2, 8),
        (3, 4),
        (4, 5),
        (4, 8),
        (5, 6),
        (6, 7),
        (6, 8),
    ];
    match which {
        Gadget::H9_14 => Graph::new(9, h9_14).unwrap(),
        Gadget::H9_16 => Graph::new(9, h9_16).unwrap(),
        Gadget::H10_15 => Graph::new(9, h9_14).unwrap().subdivide(0, 1).unwrap(),
        Gadget::H10_17 => Graph::new(9, h9_16).unwrap().subdivide(0, 1).unwrap(),
    }
}

/// Opposite-parity girth-4 sizes: plant a gadget into the densest even
/// bipartite host of order n minus the gadget's vertex surplus. The host
/// K_{2*floor(h/4), 2*ceil(h/4)} loses a K_{4,4} between the first four
/// vertices of either part, and the gadget takes over those eight slots,
/// its bipartition classes {0,2,4,6} / {1,3,5,7} mapped onto them and its
/// extra vertices appended after the host.
fn girth4_gadget_route(n: usize, which: Gadget) -> Result<Graph> {
    if n <= 10 {
        return Ok(gadget(which));
    }
    let host_order = 2 * ((n - 1) / 2);
    let a = 2 * (host_order / 4);
    let b = host_order - a;
    let mut edges: EdgeSet = Graph::complete_bipartite(a, b)?.edges().collect();
    for u in 0..4 {
        for v in a..a + 4 {
            edges.remove(&(u, v));
        }
    }
    for (gu, gv) in gadget(which).edges() {
        let map = |x: usize| match x {
            0 | 2 | 4 | 6 => x / 2,
            1 | 3 | 5 | 7 => a + x / 2,
            extra => host_order + (extra - 8),
        };
        edges.insert(norm(map(gu), map(gv)));
    }
    Graph::new(n, edges)
}

/// Eulerian graph of order n, size m, girth at least four. For m of the
/// same parity as n this covers n <= m <= M with M = max_size_girth4(n),
/// refusing M-2 when n >= 8; for the opposite parity only the four sizes
/// near the maximum reachable through the gadgets are constructed.
pub fn eulerian_girth4(n: usize, m: usize) -> Result<Graph> {
    let unsupported = |reason: String| Error::GraphUnsupported {
        order: n,
        size: m,
        girth: 4,
        reason,
    };
    if n < 6 {
        return Err(unsupported("order below 6".into()));
    }
    let top = max_size_girth4(n);
    if m % 2 != n % 2 {
        let which = if n % 2 == 1 && n >= 9 && m + 3 == top {
            Gadget::H9_14
        } else if n % 2 == 1 && n >= 9 && m + 1 == top {
            Gadget::H9_16
        } else if n.is_multiple_of(2) && n >= 10 && m + 1 == max_size_girth4(n - 2) {
            Gadget::H10_15
        } else if n.is_multiple_of(2) && n >= 10 && m == max_size_girth4(n - 2) + 1 {
            Gadget::H10_17
        } else {
            return Err(unsupported(
                "size parity differs from order and is not a gadget size".into(),
            ));
        };
        return girth4_gadget_route(n, which);
    }
    if m + 2 == top && n >= 8 {
        return Err(Error::GraphNonexistent {
            order: n,
            size: m,
            girth: 4,
        });
    }
    if m < n || m > top {
        return Err(unsupported(format!(
            "size outside the constructive range {n}..={top}"
        )));
    }
    if n % 2 == 1 {
        let inner = eulerian_girth4(n - 1, m - 1)?;
        let (u, v) = inner.edges().next().expect("graph has edges");
        return inner.subdivide(u, v);
    }
    girth4_even(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_sizes() {
        assert_eq!(max_size_girth3(5), 10);
        assert_eq!(max_size_girth3(6), 12);
        assert_eq!(max_size_girth3(7), 21);
        assert_eq!(max_size_girth4(8), 16);
        assert_eq!(max_size_girth4(9), 17);
        assert_eq!(max_size_girth4(10), 24);
        assert_eq!(max_size_girth4(6), 8);
        assert_eq!(max_size_girth4(7), 9);
    }

    #[test]
    fn hamilton_family_decomposes_complete_graph() {
        for n in [5usize, 6, 7, 8, 9, 10, 11] {
            let k = (n - 1) / 2;
            let mut all = EdgeSet::new();
            for i in 0..k {
                let seq = hamilton_cycle_g3(n, i);
                assert_eq!(seq.len(), n, "cycle must span, n={n} i={i}");
                let mut sorted = seq.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), n, "distinct vertices, n={n} i={i}");
                let edges = cycle_edges(&seq);
                assert_eq!(edges.len(), n);
                assert!(all.is_disjoint(&edges), "cycles overlap, n={n} i={i}");
                all.extend(edges);
            }
            assert_eq!(all.len(), k * n);
            if n % 2 == 1 {
                // odd order: the family fills the complete graph
                assert_eq!(all.len(), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn bipartite_family_decomposes() {
        for nprime in [3usize, 4, 5, 6, 7] {
            let k = nprime / 2;
            let mut all = EdgeSet::new();
            for i in 0..k {
                let seq = hamilton_cycle_g4(nprime, i);
                assert_eq!(seq.len(), 2 * nprime);
                let edges = cycle_edges(&seq);
                assert_eq!(edges.len(), 2 * nprime);
                assert!(all.is_disjoint(&edges), "n'={nprime} i={i}");
                all.extend(edges);
            }
            assert_eq!(all.len(), 2 * nprime * k);
        }
    }

    #[test]
    fn girth3_full_spectrum_small_orders() {
        for n in 3..=12 {
            let top = max_size_girth3(n);
            for m in n..=top {
                let result = eulerian_girth3(n, m);
                if m + 1 == top || m + 2 == top {
                    assert!(
                        matches!(result, Err(Error::GraphNonexistent { .. })),
                        "n={n} m={m} should be refused"
                    );
                } else {
                    let g = result.unwrap_or_else(|e| panic!("n={n} m={m}: {e}"));
                    assert_eq!(g.order(), n);
                    assert_eq!(g.size(), m);
                    assert!(g.is_eulerian(), "n={n} m={m}");
                }
            }
            assert!(eulerian_girth3(n, top + 1).is_err());
            if n > 3 {
                assert!(eulerian_girth3(n, n - 1).is_err());
            }
        }
    }

    #[test]
    fn girth3_spot_checks() {
        let g = eulerian_girth3(5, 10).unwrap();
        assert_eq!(g, Graph::complete(5).unwrap());

        let g = eulerian_girth3(7, 14).unwrap();
        assert_eq!((g.order(), g.size()), (7, 14));
        assert!(g.is_eulerian());

        // order 6: sizes 10 and 11 are the refused pair
        assert!(matches!(
            eulerian_girth3(6, 11),
            Err(Error::GraphNonexistent { .. })
        ));
        assert!(matches!(
            eulerian_girth3(6, 10),
            Err(Error::GraphNonexistent { .. })
        ));
        assert!(matches!(
            eulerian_girth3(6, 14),
            Err(Error::GraphUnsupported { .. })
        ));
        assert_eq!(eulerian_girth3(3, 3).unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn girth4_full_spectrum_small_orders() {
        for n in 6..=12 {
            let top = max_size_girth4(n);
            for m in (n..=top).filter(|m| m % 2 == n % 2) {
                let result = eulerian_girth4(n, m);
                if m + 2 == top && n >= 8 {
                    assert!(
                        matches!(result, Err(Error::GraphNonexistent { .. })),
                        "n={n} m={m} should be refused"
                    );
                } else {
                    let g = result.unwrap_or_else(|e| panic!("n={n} m={m}: {e}"));
                    assert_eq!(g.order(), n, "n={n} m={m}");
                    assert_eq!(g.size(), m, "n={n} m={m}");
                    assert!(g.is_eulerian(), "n={n} m={m}");
                    assert!(g.girth().unwrap_or(usize::MAX) >= 4, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn girth4_opposite_parity_sizes() {
        for n in 9..=14 {
            let sizes: Vec<usize> = if n % 2 == 1 {
                vec![max_size_girth4(n) - 3, max_size_girth4(n) - 1]
            } else {
                vec![max_size_girth4(n - 2) - 1, max_size_girth4(n - 2) + 1]
            };
            for m in sizes {
                let g = eulerian_girth4(n, m).unwrap_or_else(|e| panic!("n={n} m={m}: {e}"));
                assert_eq!(g.order(), n, "n={n} m={m}");
                assert_eq!(g.size(), m, "n={n} m={m}");
                assert!(g.is_eulerian(), "n={n} m={m}");
                assert!(g.girth().unwrap() >= 4, "n={n} m={m}");
            }
        }
        // an opposite-parity size away from the gadget sizes is refused
        assert!(matches!(
            eulerian_girth4(10, 9),
            Err(Error::GraphUnsupported { .. })
        ));
    }

    #[test]
    fn girth4_spot_checks() {
        let g = eulerian_girth4(8, 16).unwrap();
        assert_eq!(g, Graph::complete_bipartite(4, 4).unwrap());

        assert!(matches!(
            eulerian_girth4(8, 14),
            Err(Error::GraphNonexistent { .. })
        ));

        let g = eulerian_girth4(9, 14).unwrap();
        assert_eq!(g, gadget(Gadget::H9_14));

        let g = eulerian_girth4(10, 24).unwrap();
        assert_eq!(g, Graph::complete_bipartite(4, 6).unwrap());

        assert_eq!(eulerian_girth4(6, 6).unwrap().girth(), Some(6));
    }

    #[test]
    fn gadget_contracts() {
        for (which, order, size) in [
            (Gadget::H9_14, 9, 14),
            (Gadget::H9_16, 9, 16),
            (Gadget::H10_15, 10, 15),
            (Gadget::H10_17, 10, 17),
        ] {
            let g = gadget(which);
            assert_eq!(g.order(), order, "{which:?}");
            assert_eq!(g.size(), size, "{which:?}");
            assert!(g.is_eulerian(), "{which:?}");
            assert_eq!(g.girth(), Some(4), "{which:?}");
        }
    }
}
