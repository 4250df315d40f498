//! Immutable simple undirected graphs on dense vertex indices.

mod clique;
mod edge_list;
mod vertex_set;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use clique::{clique_number, DEFAULT_CLIQUE_LIMIT};
pub use edge_list::{parse_edge_list, write_edge_list};
pub use vertex_set::VertexSet;

/// Distance reported for vertices that cannot be reached from the source.
pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and deduplicated. Labels are display-only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Result of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper 2-coloring; `true` and `false` are the two sides.
    Coloring(Vec<bool>),
    /// An odd cycle, listed in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs hop distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|s| self.bfs_distances(s).expect("source in range"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0)
            .expect("vertex 0 exists")
            .iter()
            .all(|&d| d != UNREACHABLE)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(&parent, &depth, u, v));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Coloring(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// Subgraph induced by `s`, re-indexed in increasing order of the
    /// original indices. The second component maps new indices to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if s.bound() > self.n() {
            return Err(Error::VertexOutOfRange(s.bound() - 1));
        }
        let back_map = s.to_vec();
        let mut forward = vec![usize::MAX; self.n()];
        for (new, &old) in back_map.iter().enumerate() {
            forward[old] = new;
        }
        let adj = back_map
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter(|&&w| forward[w] != usize::MAX)
                    .map(|&w| forward[w])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| back_map.iter().map(|&i| l[i].clone()).collect());
        Ok((Graph { adj, labels }, back_map))
    }

    /// Disjoint union; vertices of `h` are shifted by `self.n()`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            h.adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph { adj, labels: None }
    }

    /// Join `self + h`: the disjoint union plus every cross edge.
    pub fn join(&self, h: &Graph) -> Graph {
        let (a, b) = (self.n(), h.n());
        let mut g = self.disjoint_union(h);
        for u in 0..a {
            g.adj[u].extend(a..a + b);
        }
        for v in a..a + b {
            let mut left: Vec<usize> = (0..a).collect();
            left.extend_from_slice(&g.adj[v]);
            g.adj[v] = left;
        }
        g
    }
}

fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadOrder(n));
    }
    let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
    Ok(Graph { adj, labels: None })
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadOrder(n));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadOrder(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn from_edge_list_examples() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            complete(3).unwrap()
        );
        assert_eq!(Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap().m(), 1);
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange(2))
        );
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path(4).unwrap().bfs_distances(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(complete(4).unwrap().bfs_distances(2).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(cycle(5).unwrap().bfs_distances(0).unwrap(), vec![0, 1, 2, 2, 1]);
        assert_eq!(
            path(2).unwrap().bfs_distances(2),
            Err(Error::VertexOutOfRange(2))
        );
        let d = Graph::empty(2).bfs_distances(0).unwrap();
        assert_eq!(d, vec![0, UNREACHABLE]);
    }

    #[test]
    fn connectivity_examples() {
        assert!(complete(3).unwrap().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(bowtie().is_connected());
    }

    #[test]
    fn bipartite_examples() {
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(complete(2).unwrap().is_bipartite());
        let c5 = cycle(5).unwrap();
        match c5.bipartition() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len() % 2, 1);
                for i in 0..c.len() {
                    assert!(c5.has_edge(c[i], c[(i + 1) % c.len()]));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        let (k3, map) = complete(4).unwrap().induced_subgraph(&s).unwrap();
        assert_eq!(k3, complete(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let (p3, _) = cycle(5).unwrap().induced_subgraph(&s).unwrap();
        assert_eq!(p3, path(3).unwrap());
        let right: VertexSet = [2, 3, 4].into_iter().collect();
        let (tri, map) = bowtie().induced_subgraph(&right).unwrap();
        assert_eq!(tri, complete(3).unwrap());
        assert_eq!(map, vec![2, 3, 4]);
        assert_eq!(
            bowtie().induced_subgraph(&VertexSet::new()),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn join_and_union_examples() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();
        assert_eq!(k1.join(&k2), complete(3).unwrap());
        let h = k1.join(&k2.disjoint_union(&k2));
        assert_eq!((h.n(), h.m()), (5, 6));
        assert_eq!(h.degree(0), 4);
        let fan = k1.join(&path(3).unwrap());
        assert_eq!((fan.n(), fan.m()), (4, 5));

        let kk = k2.disjoint_union(&k2);
        assert_eq!((kk.n(), kk.m()), (4, 2));
        let e = k1.disjoint_union(&k1);
        assert_eq!((e.n(), e.m()), (2, 0));
        let kp = complete(3).unwrap().disjoint_union(&path(2).unwrap());
        assert_eq!((kp.n(), kp.m()), (5, 4));
    }

    #[test]
    fn family_constructors() {
        assert_eq!(complete(1).unwrap().n(), 1);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert_eq!(complete(0), Err(Error::BadOrder(0)));
        assert_eq!(cycle(2), Err(Error::BadOrder(2)));
    }
}
