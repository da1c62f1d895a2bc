//! Digraphs on `[n]`: strong components, circumference, exact `l`-feedback
//! vertex sets and loop-full tree recognition.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive cycle and feedback searches.
pub const MAX_EXHAUSTIVE: usize = 12;

/// A directed graph on vertices `1..=n`. Loops are allowed, parallel arcs are not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, arcs: BTreeSet::new() }
    }

    /// Builds a graph from arcs; repeated arcs are rejected.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::new(n);
        for (i, j) in arcs {
            if !g.add_arc(i, j)? {
                return Err(Error::DuplicateArc(i, j));
            }
        }
        Ok(g)
    }

    /// Complete digraph on `n` vertices, optionally with every loop.
    pub fn complete(n: usize, loops: bool) -> Self {
        let mut g = Digraph::new(n);
        for i in 1..=n {
            for j in 1..=n {
                if i != j || loops {
                    g.arcs.insert((i, j));
                }
            }
        }
        g
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Adds `i -> j`; returns false if it was already present.
    pub fn add_arc(&mut self, i: usize, j: usize) -> Result<bool> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.arcs.insert((i, j)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.contains(&(i, j))
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.has_arc(i, i)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|(i, j)| i == j).count()
    }

    /// `N^-(i)`, ascending.
    pub fn in_neighbors(&self, i: usize) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.has_arc(j, i)).collect()
    }

    pub fn out_neighbors(&self, i: usize) -> Vec<usize> {
        self.arcs.range((i, 0)..=(i, usize::MAX)).map(|&(_, j)| j).collect()
    }

    /// Edges `{i, j}`, `i < j`, of the underlying undirected graph.
    pub fn underlying_edges(&self) -> BTreeSet<(usize, usize)> {
        self.arcs
            .iter()
            .filter(|(i, j)| i != j)
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .collect()
    }

    /// Subgraph induced by `keep` (any order), relabeled to `1..=keep.len()`
    /// following ascending original labels. Returns the graph and the map
    /// from new labels (index + 1) to old labels.
    pub fn induced(&self, keep: &[usize]) -> (Digraph, Vec<usize>) {
        let mut labels: Vec<usize> = keep.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut g = Digraph::new(labels.len());
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate() {
                if self.has_arc(u, v) {
                    g.arcs.insert((a + 1, b + 1));
                }
            }
        }
        (g, labels)
    }

    /// Is every arc set of `self` contained in `other`'s (same labels)?
    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.n <= other.n && self.arcs.is_subset(&other.arcs)
    }

    /// Out-neighborhoods as bitmasks over 0-based vertices.
    fn out_masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.n];
        for &(i, j) in &self.arcs {
            m[i - 1] |= 1 << (j - 1);
        }
        m
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|(i, j)| format!("{i}->{j}")).collect();
        write!(f, "n={} [{}]", self.n, arcs.join(", "))
    }
}

/// Strong components, listed so that every arc between two components goes
/// from an earlier to a later one. Each component is sorted ascending.
pub fn strong_components(g: &Digraph) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        succ: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for &w in &self.succ[v] {
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("tarjan stack");
                    self.on_stack[w] = false;
                    comp.push(w + 1);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                self.out.push(comp);
            }
        }
    }

    let n = g.n();
    let succ: Vec<Vec<usize>> =
        (1..=n).map(|i| g.out_neighbors(i).into_iter().map(|j| j - 1).collect()).collect();
    let mut t = Tarjan {
        succ: &succ,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    // Tarjan emits sinks first.
    t.out.reverse();
    t.out
}

fn check_exhaustive(g: &Digraph, what: &'static str) -> Result<()> {
    if g.n() > MAX_EXHAUSTIVE {
        return Err(Error::Infeasible { what, n: g.n(), limit: MAX_EXHAUSTIVE });
    }
    Ok(())
}

/// Length of a longest directed cycle; loops count as cycles of length 1.
pub fn circumference(g: &Digraph) -> Result<usize> {
    check_exhaustive(g, "circumference")?;
    let all = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    Ok(longest_cycle(&g.out_masks(), all, usize::MAX))
}

/// Longest cycle inside the vertex set `allowed`, stopping as soon as one
/// longer than `stop_above` is found.
fn longest_cycle(out: &[u64], allowed: u64, stop_above: usize) -> usize {
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        out: &[u64],
        start: usize,
        v: usize,
        depth: usize,
        visited: u64,
        pool: u64,
        best: &mut usize,
        stop_above: usize,
    ) {
        if out[v] & (1 << start) != 0 && depth > *best {
            *best = depth;
        }
        if *best > stop_above {
            return;
        }
        let free = pool & !visited;
        if depth + free.count_ones() as usize <= *best {
            return;
        }
        let mut next = out[v] & free;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            dfs(out, start, w, depth + 1, visited | 1 << w, pool, best, stop_above);
            if *best > stop_above {
                return;
            }
        }
    }

    let n = out.len();
    let mut best = 0;
    // Cycles live inside strong components of the allowed subgraph.
    let mut sub = Digraph::new(n);
    for (i, &m) in out.iter().enumerate() {
        if allowed & (1 << i) == 0 {
            continue;
        }
        let mut rest = m & allowed;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            sub.arcs.insert((i + 1, j + 1));
        }
    }
    for comp in strong_components(&sub) {
        let mask = comp
            .iter()
            .filter(|&&v| allowed & (1 << (v - 1)) != 0)
            .fold(0u64, |m, &v| m | 1 << (v - 1));
        for &s in &comp {
            let s = s - 1;
            if allowed & (1 << s) == 0 {
                continue;
            }
            if best >= (mask >> s).count_ones() as usize {
                // Only vertices >= s remain as cycle members rooted at s.
                break;
            }
            let pool = mask & !((1u64 << s) - 1);
            dfs(out, s, s, 1, 1 << s, pool, &mut best, stop_above);
            if best > stop_above {
                return best;
            }
        }
    }
    best
}

/// Circumference of `g` without the vertices in `removed`.
pub fn circumference_without(g: &Digraph, removed: &[usize]) -> Result<usize> {
    check_exhaustive(g, "circumference")?;
    let all = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    let drop = removed.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
    Ok(longest_cycle(&g.out_masks(), all & !drop, usize::MAX))
}

/// A smallest vertex set whose removal leaves circumference at most `l`;
/// among those, the lexicographically smallest. Its size is `τ_l(G)`.
pub fn min_l_feedback_set(g: &Digraph, l: usize) -> Result<Vec<usize>> {
    check_exhaustive(g, "l-feedback vertex set")?;
    let out = g.out_masks();
    let n = g.n();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for size in 0..=n {
        for set in (1..=n).combinations(size) {
            let drop = set.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
            if longest_cycle(&out, all & !drop, l) <= l {
                return Ok(set);
            }
        }
    }
    unreachable!("removing every vertex leaves no cycle")
}

/// `τ_l(G)`.
pub fn feedback_number(g: &Digraph, l: usize) -> Result<usize> {
    min_l_feedback_set(g, l).map(|s| s.len())
}

/// Every non-loop arc has its reverse.
pub fn is_symmetric(g: &Digraph) -> bool {
    g.arcs().all(|(i, j)| i == j || g.has_arc(j, i))
}

/// Why a graph is not a loop-full tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeRejection {
    Empty,
    MissingLoop(usize),
    AsymmetricArc(usize, usize),
    NotATree,
}

impl fmt::Display for TreeRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeRejection::Empty => write!(f, "graph has no vertices"),
            TreeRejection::MissingLoop(v) => write!(f, "vertex {v} has no loop"),
            TreeRejection::AsymmetricArc(i, j) => write!(f, "arc {i} -> {j} has no reverse"),
            TreeRejection::NotATree => write!(f, "underlying undirected graph is not a tree"),
        }
    }
}

/// Rooted view of a loop-full tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeInfo {
    pub root: usize,
    /// Non-leaves by (distance from root, label); the root comes first.
    pub non_leaves: Vec<usize>,
    /// Leaves, ascending. For `n <= 2` the root is never a leaf.
    pub leaves: Vec<usize>,
    /// Every vertex by (distance from root, label).
    pub order: Vec<usize>,
}

impl TreeInfo {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }
}

/// Recognizes a loop-full tree and roots it at its smallest non-leaf.
pub fn tree_info(g: &Digraph) -> Result<TreeInfo> {
    let reject = |r| Err(Error::NotLoopFullTree(r));
    let n = g.n();
    if n == 0 {
        return reject(TreeRejection::Empty);
    }
    if let Some(v) = (1..=n).find(|&v| !g.has_loop(v)) {
        return reject(TreeRejection::MissingLoop(v));
    }
    if let Some((i, j)) = g.arcs().find(|&(i, j)| i != j && !g.has_arc(j, i)) {
        return reject(TreeRejection::AsymmetricArc(i, j));
    }
    let edges = g.underlying_edges();
    if edges.len() != n - 1 {
        return reject(TreeRejection::NotATree);
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(i, j) in &edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let degree = |v: usize| adj[v].len();
    let root = if n <= 2 { 1 } else { (1..=n).find(|&v| degree(v) >= 2).unwrap_or(1) };

    let mut dist = vec![usize::MAX; n + 1];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if dist[1..].contains(&usize::MAX) {
        return reject(TreeRejection::NotATree);
    }

    let is_leaf = |v: usize| v != root && degree(v) <= 1;
    let mut non_leaves: Vec<usize> = (1..=n).filter(|&v| !is_leaf(v)).collect();
    non_leaves.sort_by_key(|&v| (dist[v], v));
    let leaves = (1..=n).filter(|&v| is_leaf(v)).collect();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (dist[v], v));
    Ok(TreeInfo { root, non_leaves, leaves, order })
}

/// Loop-full symmetric tree with the given undirected edges.
pub fn loop_full_tree(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    let mut g = Digraph::new(n);
    for v in 1..=n {
        g.add_arc(v, v)?;
    }
    for &(i, j) in edges {
        g.add_arc(i, j)?;
        g.add_arc(j, i)?;
    }
    Ok(g)
}
