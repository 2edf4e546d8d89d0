//! Exact distances by breadth-first search over rotation classes.
//!
//! Transpositions preserve length and symbol counts, so the one-move graph
//! splits into independent buckets keyed by `(n, ones)`. Each bucket graph
//! is built once and shared through a [`GraphCache`].

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::sequence::TranspositionSequence;
use crate::string::{canonicalize, CircularBinaryString};
use crate::transposition::{neighbor_moves, Transposition};

/// Longest strings the oracle will enumerate.
pub const MAX_ORACLE_LEN: usize = 20;

pub const UNREACHABLE: u32 = u32::MAX;

/// All rotation classes of one `(n, ones)` bucket and their one-move edges.
#[derive(Debug)]
pub struct ClassGraph {
    n: usize,
    ones: usize,
    nodes: Vec<CircularBinaryString>,
    index: HashMap<CircularBinaryString, usize>,
    /// For each node, its neighbors with a triple reaching them from the
    /// node's canonical representative.
    adjacency: Vec<Vec<(usize, Transposition)>>,
}

/// Canonical classes of length `n` with `ones` ones, in lexicographic order.
pub fn enumerate_classes(n: usize, ones: usize) -> Result<Vec<CircularBinaryString>> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > MAX_ORACLE_LEN {
        return Err(Error::TooLong { n, max: MAX_ORACLE_LEN });
    }
    if ones > n {
        return Err(Error::Precondition("ones must not exceed n"));
    }
    let mut out = Vec::new();
    let mut bits = vec![0u8; n];
    // Lexicographic order over codes whose bit (n - 1 - i) is symbol i.
    for code in 0u32..(1u32 << n) {
        if code.count_ones() as usize != ones {
            continue;
        }
        for (i, b) in bits.iter_mut().enumerate() {
            *b = ((code >> (n - 1 - i)) & 1) as u8;
        }
        let c = canonicalize(&bits)?;
        if c.bits() == bits.as_slice() {
            out.push(c);
        }
    }
    Ok(out)
}

/// Builds the class graph of one bucket.
pub fn build_class_graph(n: usize, ones: usize) -> Result<ClassGraph> {
    let nodes = enumerate_classes(n, ones)?;
    let index: HashMap<_, _> = nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let adjacency = if n < 3 {
        vec![Vec::new(); nodes.len()]
    } else {
        nodes
            .iter()
            .map(|c| {
                Ok(neighbor_moves(c)?
                    .into_iter()
                    .map(|(v, t)| (index[&v], t))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(ClassGraph { n, ones, nodes, index, adjacency })
}

impl ClassGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn nodes(&self) -> &[CircularBinaryString] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, s: &CircularBinaryString) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn neighbors_of(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[node].iter().map(|&(v, _)| v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from `source` to every node.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        self.bfs(source).0
    }

    fn bfs(&self, source: usize) -> (Vec<u32>, Vec<Option<(usize, Transposition)>>) {
        let mut dist = vec![UNREACHABLE; self.nodes.len()];
        let mut parent = vec![None; self.nodes.len()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &(v, t) in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some((u, t));
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    /// Row `u` holds the distances from node `u`.
    pub fn all_pairs(&self) -> Vec<Vec<u32>> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..self.nodes.len()).into_par_iter().map(|u| self.distances_from(u)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.all_pairs_sequential()
        }
    }

    pub fn all_pairs_sequential(&self) -> Vec<Vec<u32>> {
        (0..self.nodes.len()).map(|u| self.distances_from(u)).collect()
    }

    /// A shortest move sequence between two nodes, with every move expressed
    /// against the evolving concrete representative.
    pub fn shortest_path(&self, from: usize, to: usize) -> Result<TranspositionSequence> {
        let (dist, parent) = self.bfs(from);
        if dist[to] == UNREACHABLE {
            return Err(Error::ConstructionFailed("target class unreachable".into()));
        }
        let mut edges = Vec::new();
        let mut v = to;
        while let Some((u, t)) = parent[v] {
            edges.push((u, t));
            v = u;
        }
        edges.reverse();
        let n = self.n;
        let mut literal = self.nodes[from].bits().to_vec();
        let mut moves = Vec::with_capacity(edges.len());
        for (u, t) in edges {
            let r0 = self.nodes[u].rotation_offset(&literal).ok_or(Error::NotARotation)?;
            let on_literal = t.rebase(n, (n - r0) % n)?;
            literal = on_literal.apply_to(&literal)?;
            moves.push(on_literal);
        }
        TranspositionSequence { start: self.nodes[from].clone(), moves, claimed_end: self.nodes[to].clone() }.validated()
    }
}

type Slot = Arc<OnceLock<Arc<ClassGraph>>>;

/// Bucket graphs shared between threads, each built at most once.
#[derive(Debug, Default)]
pub struct GraphCache {
    slots: Mutex<HashMap<(usize, usize), Slot>>,
}

impl GraphCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize, ones: usize) -> Result<Arc<ClassGraph>> {
        let slot = {
            let mut slots = self.slots.lock().expect("graph cache poisoned");
            Arc::clone(slots.entry((n, ones)).or_default())
        };
        if let Some(g) = slot.get() {
            return Ok(Arc::clone(g));
        }
        // Validate before entering the once-cell so errors are not cached.
        enumerate_check(n, ones)?;
        Ok(Arc::clone(slot.get_or_init(|| {
            Arc::new(build_class_graph(n, ones).expect("bucket parameters validated"))
        })))
    }

    /// Process-wide cache used by [`exact_distance`] and [`exact_path`].
    pub fn global() -> &'static GraphCache {
        static CACHE: OnceLock<GraphCache> = OnceLock::new();
        CACHE.get_or_init(GraphCache::new)
    }
}

fn enumerate_check(n: usize, ones: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyInput)
    } else if n > MAX_ORACLE_LEN {
        Err(Error::TooLong { n, max: MAX_ORACLE_LEN })
    } else if ones > n {
        Err(Error::Precondition("ones must not exceed n"))
    } else {
        Ok(())
    }
}

fn locate(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<(Arc<ClassGraph>, usize, usize)> {
    if !s.compatible_with(t) {
        return Err(Error::Incompatible);
    }
    let g = GraphCache::global().get(s.len(), s.ones())?;
    let (u, v) = (g.index_of(s).expect("class in bucket"), g.index_of(t).expect("class in bucket"));
    Ok((g, u, v))
}

/// Minimum number of transpositions turning `s` into `t`.
pub fn exact_distance(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<usize> {
    let (g, u, v) = locate(s, t)?;
    if u == v {
        return Ok(0);
    }
    Ok(g.distances_from(u)[v] as usize)
}

/// A shortest replay-valid sequence from `s` to `t`.
pub fn exact_path(s: &CircularBinaryString, t: &CircularBinaryString) -> Result<TranspositionSequence> {
    let (g, u, v) = locate(s, t)?;
    g.shortest_path(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::parse_string;

    fn cbs(text: &str) -> CircularBinaryString {
        parse_string(text).unwrap()
    }

    #[test]
    fn small_buckets() {
        let total: usize = (0..=4).map(|ones| build_class_graph(4, ones).unwrap().len()).sum();
        assert_eq!(total, 6);

        let g = build_class_graph(4, 2).unwrap();
        assert_eq!(g.nodes(), &[cbs("0011"), cbs("0101")]);
        assert_eq!(g.edge_count(), 1);

        let g = build_class_graph(3, 1).unwrap();
        assert_eq!(g.nodes(), &[cbs("001")]);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn adjacency_is_symmetric_and_stays_in_bucket() {
        for n in 3..=9 {
            for ones in 0..=n {
                let g = build_class_graph(n, ones).unwrap();
                for u in 0..g.len() {
                    for v in g.neighbors_of(u) {
                        assert!(g.neighbors_of(v).any(|w| w == u));
                        assert_eq!(g.nodes()[v].ones(), ones);
                    }
                }
            }
        }
    }

    #[test]
    fn distance_examples() {
        assert_eq!(exact_distance(&cbs("0011"), &cbs("0101")).unwrap(), 1);
        assert_eq!(exact_distance(&cbs("0011"), &cbs("0011")).unwrap(), 0);
        assert_eq!(exact_distance(&cbs("0000111"), &cbs("0010101")).unwrap(), 2);
        assert_eq!(exact_distance(&cbs("0011"), &cbs("0001")), Err(Error::Incompatible));
    }

    #[test]
    fn path_examples() {
        let p = exact_path(&cbs("0011"), &cbs("0101")).unwrap();
        assert_eq!(p.len(), 1);
        assert!(exact_path(&cbs("0110"), &cbs("0011")).unwrap().is_empty());
        let p = exact_path(&cbs("0000111"), &cbs("0010101")).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.verify().is_pass());
    }

    #[test]
    fn paths_replay_across_a_bucket() {
        let g = build_class_graph(9, 4).unwrap();
        let dist = g.all_pairs_sequential();
        for (u, row) in dist.iter().enumerate() {
            for (v, &d) in row.iter().enumerate() {
                let p = g.shortest_path(u, v).unwrap();
                assert_eq!(p.len() as u32, d);
                assert!(p.verify().is_pass());
            }
        }
        assert_eq!(g.all_pairs(), dist);
    }

    #[test]
    fn cache_returns_shared_graph() {
        let cache = GraphCache::new();
        let a = cache.get(6, 3).unwrap();
        let b = cache.get(6, 3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert!(cache.get(MAX_ORACLE_LEN + 1, 1).is_err());
        assert!(cache.get(4, 5).is_err());
    }

    #[test]
    fn cache_builds_once_under_contention() {
        let cache = GraphCache::new();
        let graphs: Vec<_> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..8).map(|_| scope.spawn(|| cache.get(8, 4).unwrap())).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(graphs.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    }
}
