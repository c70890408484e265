//! Simple undirected graphs with the handful of operations the graph-based
//! code constructions need: connectivity, degree parity, girth, closed
//! eulerian trails, and edge subdivision.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices 0..order. Edges are stored as
/// ordered pairs (u, v) with u < v, so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(order: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut edges = BTreeSet::new();
        for (u, v) in edge_list {
            if u >= order || v >= order {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { order, edges })
    }

    pub fn complete(order: usize) -> Result<Self> {
        Graph::new(
            order,
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))),
        )
    }

    /// Complete bipartite graph: part A is 0..a, part B is a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(
                "bipartite parts must be nonempty".into(),
            ));
        }
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.edges.remove(&(u.min(v), u.max(v))) {
            return Err(Error::NoSuchEdge(u, v));
        }
        Ok(())
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_even(&self) -> bool {
        let mut deg = vec![0usize; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|d| d % 2 == 0)
    }

    /// Connected when every vertex of positive degree lies in one component
    /// and no vertex is isolated.
    pub fn is_connected(&self) -> bool {
        if self.order == 1 {
            return true;
        }
        let adj = self.adjacency();
        if adj.iter().any(|nbrs| nbrs.is_empty()) {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.order
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_even() && self.is_connected()
    }

    /// Length of a shortest cycle, or None for a forest.
    ///
    /// BFS from every root: a non-tree edge (v, w) with both endpoints
    /// explored closes a walk of length dist[v] + dist[w] + 1 through the
    /// root. The minimum over all roots is the girth, since a shortest cycle
    /// is seen exactly from any of its own vertices.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best = usize::MAX;
        for root in 0..self.order {
            let mut dist = vec![usize::MAX; self.order];
            let mut parent = vec![usize::MAX; self.order];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] >= best {
                    break;
                }
                for &w in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w && parent[w] != v {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Closed eulerian trail as a vertex sequence v_0, v_1, ..., v_m with
    /// v_0 = v_m = the smallest positive-degree vertex; consecutive vertices
    /// are the traversed edges, each edge of the graph appearing once.
    ///
    /// Hierholzer's algorithm with an explicit stack; neighbors are taken
    /// smallest first, so the trail is deterministic.
    pub fn eulerian_trail(&self) -> Result<Vec<usize>> {
        if !self.is_eulerian() {
            return Err(Error::NotEulerian);
        }
        if self.edges.is_empty() {
            return Ok(vec![0]);
        }
        // Neighbor lists sorted descending so pop() yields smallest first.
        let mut adj = self.adjacency();
        for nbrs in adj.iter_mut() {
            nbrs.sort_unstable_by(|a, b| b.cmp(a));
        }
        let mut remaining: BTreeSet<(usize, usize)> = self.edges.clone();
        let mut stack = vec![0usize];
        let mut trail = Vec::with_capacity(self.edges.len() + 1);
        while let Some(&v) = stack.last() {
            let next = loop {
                match adj[v].last().copied() {
                    Some(w) if !remaining.contains(&(v.min(w), v.max(w))) => {
                        adj[v].pop();
                    }
                    other => break other,
                }
            };
            match next {
                Some(w) => {
                    remaining.remove(&(v.min(w), v.max(w)));
                    stack.push(w);
                }
                None => {
                    trail.push(v);
                    stack.pop();
                }
            }
        }
        trail.reverse();
        debug_assert_eq!(trail.len(), self.edges.len() + 1);
        debug_assert_eq!(trail.first(), trail.last());
        Ok(trail)
    }

    /// Replace edge (u, v) by the path u - w - v through a fresh vertex w.
    /// Adds one vertex and grows the size by one; a girth-g graph with the
    /// subdivided edge on some shortest cycle gets girth g + 1.
    pub fn subdivide(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let w = self.order;
        let mut edges = self.edges.clone();
        edges.remove(&(u.min(v), u.max(v)));
        edges.insert((u, w));
        edges.insert((v, w));
        Ok(Graph {
            order: self.order + 1,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_basics() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_eulerian());
        assert_eq!(g.girth(), Some(3));
        assert_eq!(g.eulerian_trail().unwrap(), vec![0, 1, 2, 0]);
    }

    #[test]
    fn complete_graphs() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.size(), 10);
        assert!(k5.is_eulerian());
        assert_eq!(k5.girth(), Some(3));
        let trail = k5.eulerian_trail().unwrap();
        assert_eq!(trail.len(), 11);
        assert_eq!(trail[0], 0);
        assert_eq!(trail[10], 0);

        // K_4 has odd degrees.
        assert!(!Graph::complete(4).unwrap().is_eulerian());
    }

    #[test]
    fn bipartite_girth() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(g.size(), 9);
        assert_eq!(g.girth(), Some(4));
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn cycles_and_paths() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(c6.girth(), Some(6));
        assert!(c6.is_eulerian());
        assert_eq!(c6.eulerian_trail().unwrap(), vec![0, 1, 2, 3, 4, 5, 0]);

        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), None);
        assert!(!path.is_eulerian());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(g.is_even());
        assert!(!g.is_connected());
        assert!(matches!(g.eulerian_trail(), Err(Error::NotEulerian)));
    }

    #[test]
    fn figure_eight_trail() {
        // Two triangles sharing vertex 0: every edge once, returns to 0.
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert!(g.is_eulerian());
        let trail = g.eulerian_trail().unwrap();
        assert_eq!(trail.len(), 7);
        let mut seen = BTreeSet::new();
        for pair in trail.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]));
            assert!(seen.insert((pair[0].min(pair[1]), pair[0].max(pair[1]))));
        }
        assert_eq!(seen.len(), g.size());
    }

    #[test]
    fn subdivision_raises_girth() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.girth(), Some(3));
        let g = k4.subdivide(0, 1).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 7);
        assert_eq!(g.girth(), Some(3)); // 1-2-3 triangle survives
        let h = Graph::new(3, [(0, 1), (1, 2), (0, 2)])
            .unwrap()
            .subdivide(0, 1)
            .unwrap();
        assert_eq!(h.girth(), Some(4));
        assert!(matches!(h.subdivide(0, 1), Err(Error::NoSuchEdge(0, 1))));
    }

    #[test]
    fn girth_catches_parallel_bfs_trap() {
        // Two vertices joined by three internally disjoint paths of lengths
        // 2, 3, 3: girth is 5, and a single-root BFS from a far vertex could
        // overestimate without per-root scanning.
        let g = Graph::new(
            8,
            [
                (0, 2),
                (2, 1),
                (0, 3),
                (3, 4),
                (4, 1),
                (0, 5),
                (5, 6),
                (6, 1),
                (6, 7),
            ],
        )
        .unwrap();
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn single_vertex_trail() {
        let g = Graph::new(1, []).unwrap();
        assert!(g.is_eulerian());
        assert_eq!(g.eulerian_trail().unwrap(), vec![0]);
    }
}
