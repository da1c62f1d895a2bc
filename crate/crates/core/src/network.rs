//! States, words and Boolean networks under asynchronous updates.
//!
//! A state of an `n`-component network is stored as an integer whose binary
//! expansion, written with component 1 as the most significant bit, is the
//! textual form of the state: `"011"` is index 3 and has `x_1 = 0`.
//! Every table in this crate is indexed this way.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::Digraph;

/// Largest component count a network may have.
pub const MAX_COMPONENTS: usize = 24;

/// Largest component count for which the asynchronous graph is materialized.
pub const MAX_MATERIALIZED: usize = 20;

#[inline]
pub(crate) fn component_mask(n: usize, i: usize) -> u32 {
    debug_assert!(i >= 1 && i <= n);
    1 << (n - i)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_COMPONENTS {
        return Err(Error::ComponentCount { n, max: MAX_COMPONENTS });
    }
    Ok(())
}

/// A point of the `n`-cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    bits: u32,
    n: u8,
}

impl State {
    pub fn new(n: usize, index: u32) -> Result<Self> {
        check_n(n)?;
        if (index as u64) >> n != 0 {
            return Err(Error::InvalidState(format!("index {index} does not fit {n} components")));
        }
        Ok(State { bits: index, n: n as u8 })
    }

    pub(crate) fn from_index(n: usize, index: u32) -> Self {
        State { bits: index, n: n as u8 }
    }

    pub fn zero(n: usize) -> Result<Self> {
        State::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The table index of this state.
    pub fn index(&self) -> u32 {
        self.bits
    }

    /// Value of component `i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.n(), "component {i} out of range");
        self.bits & component_mask(self.n(), i) != 0
    }

    pub fn with(&self, i: usize, value: bool) -> State {
        assert!(i >= 1 && i <= self.n(), "component {i} out of range");
        let m = component_mask(self.n(), i);
        let bits = if value { self.bits | m } else { self.bits & !m };
        State { bits, n: self.n }
    }

    pub fn flip(&self, i: usize) -> State {
        self.with(i, !self.get(i))
    }

    /// Componentwise order of the Boolean lattice.
    pub fn le(&self, other: &State) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn hamming(&self, other: &State) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// All `2^n` states in index order.
    pub fn all(n: usize) -> impl Iterator<Item = State> {
        (0..1u32 << n).map(move |b| State::from_index(n, b))
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for State {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.len();
        check_n(n).map_err(|_| Error::InvalidState(format!("`{s}` has unsupported length")))?;
        let mut bits = 0u32;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(Error::InvalidState(format!("`{s}` is not a bit string"))),
            }
        }
        Ok(State { bits, n: n as u8 })
    }
}

/// A finite word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidLetter(0));
        }
        Ok(Word(letters))
    }

    /// Callers guarantee every letter is at least 1.
    pub(crate) fn from_letters(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn push(&mut self, letter: u32) {
        assert!(letter >= 1, "letters are positive");
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: u32) -> usize {
        self.0.iter().filter(|&&c| c == letter).count()
    }

    /// Renames every letter through `map`.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Word {
        Word::from_letters(self.0.iter().map(|&c| map(c)).collect())
    }

    /// Compact digit form, available when every letter is a single digit.
    pub fn to_digits(&self) -> Option<String> {
        if self.0.iter().all(|&c| c <= 9) {
            Some(self.0.iter().map(|c| char::from(b'0' + *c as u8)).collect())
        } else {
            None
        }
    }

    /// Parses a word written as comma/space separated integers, or, when
    /// `alphabet <= 9` and no separator is present, as one digit per letter.
    pub fn parse(text: &str, alphabet: usize) -> Result<Word> {
        let text = text.trim();
        let bad = |tok: &str| Error::InvalidParameter(format!("`{tok}` is not a letter"));
        if text.is_empty() || text == "ε" || text == "-" {
            return Ok(Word::empty());
        }
        let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
        let letters: Vec<u32> = if separated {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad(t)))
                .collect::<Result<_>>()?
        } else if alphabet <= 9 {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad(text)))
                .collect::<Result<_>>()?
        } else {
            vec![text.parse::<u32>().map_err(|_| bad(text))?]
        };
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl From<&[u32]> for Word {
    /// Panics if a letter is zero.
    fn from(letters: &[u32]) -> Self {
        Word::new(letters.to_vec()).expect("letters are positive")
    }
}

impl<const K: usize> From<[u32; K]> for Word {
    fn from(letters: [u32; K]) -> Self {
        Word::from(&letters[..])
    }
}

/// A set of states, as a bitset over table indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateSet {
    n: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        let size = 1usize << n;
        StateSet { n, blocks: vec![0; size.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = StateSet::empty(n);
        for b in 0..1u32 << n {
            s.insert_index(b);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert_index(&mut self, b: u32) {
        self.blocks[(b / 64) as usize] |= 1 << (b % 64);
    }

    pub fn contains_index(&self, b: u32) -> bool {
        self.blocks[(b / 64) as usize] & (1 << (b % 64)) != 0
    }

    pub fn insert(&mut self, x: State) {
        self.insert_index(x.index());
    }

    pub fn contains(&self, x: State) -> bool {
        self.contains_index(x.index())
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().enumerate().flat_map(|(k, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros();
                rest &= rest - 1;
                Some(k as u32 * 64 + t)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        let n = self.n;
        self.indices().map(move |b| State::from_index(n, b))
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }
}

/// An `n`-component Boolean network, stored as the image of every state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanNetwork {
    n: usize,
    images: Vec<u32>,
}

impl BooleanNetwork {
    /// Builds a network from its table: `images[x]` is the index of `f(x)`.
    pub fn from_images(n: usize, images: Vec<u32>) -> Result<Self> {
        check_n(n)?;
        let size = 1usize << n;
        if images.len() != size {
            return Err(Error::TableSize { expected: size, found: images.len() });
        }
        if let Some(&bad) = images.iter().find(|&&y| (y as u64) >> n != 0) {
            return Err(Error::InvalidState(format!("image index {bad} out of range")));
        }
        Ok(BooleanNetwork { n, images })
    }

    pub fn from_fn(n: usize, f: impl Fn(State) -> State) -> Result<Self> {
        check_n(n)?;
        let images = State::all(n).map(|x| f(x).index()).collect();
        BooleanNetwork::from_images(n, images)
    }

    /// Builds a network from its local functions `f_i(x)`, `i` 1-based.
    pub fn from_components(n: usize, f: impl Fn(usize, State) -> bool) -> Result<Self> {
        check_n(n)?;
        let images = State::all(n)
            .map(|x| {
                (1..=n).fold(0u32, |acc, i| if f(i, x) { acc | component_mask(n, i) } else { acc })
            })
            .collect();
        Ok(BooleanNetwork { n, images })
    }

    /// Builds a network from one truth table per component.
    pub fn from_component_tables(n: usize, tables: &[Vec<bool>]) -> Result<Self> {
        check_n(n)?;
        if tables.len() != n {
            return Err(Error::TableSize { expected: n, found: tables.len() });
        }
        for t in tables {
            if t.len() != 1 << n {
                return Err(Error::TableSize { expected: 1 << n, found: t.len() });
            }
        }
        BooleanNetwork::from_components(n, |i, x| tables[i - 1][x.index() as usize])
    }

    pub fn identity(n: usize) -> Result<Self> {
        BooleanNetwork::from_fn(n, |x| x)
    }

    pub fn constant(value: State) -> Result<Self> {
        BooleanNetwork::from_fn(value.n(), |_| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn eval(&self, x: State) -> State {
        State::from_index(self.n, self.images[x.index() as usize])
    }

    /// `f_i(x)`.
    pub fn component(&self, i: usize, x: State) -> bool {
        self.images[x.index() as usize] & component_mask(self.n, i) != 0
    }

    /// Truth table of `f_i` in state-index order.
    pub fn component_table(&self, i: usize) -> Vec<bool> {
        let m = component_mask(self.n, i);
        self.images.iter().map(|&y| y & m != 0).collect()
    }

    /// Action of one letter on a state index; letters outside `[n]` fix it.
    #[inline]
    pub fn step_index(&self, x: u32, letter: u32) -> u32 {
        let i = letter as usize;
        if i == 0 || i > self.n {
            return x;
        }
        let m = component_mask(self.n, i);
        (x & !m) | (self.images[x as usize] & m)
    }

    #[inline]
    pub fn is_fixed_index(&self, x: u32) -> bool {
        self.images[x as usize] == x
    }

    pub fn apply_letter(&self, letter: u32, x: State) -> State {
        assert_eq!(x.n(), self.n, "state has the wrong component count");
        State::from_index(self.n, self.step_index(x.index(), letter))
    }

    /// `f^w(x)`: the letters of `w` applied left to right.
    pub fn apply_word(&self, w: &Word, x: State) -> State {
        assert_eq!(x.n(), self.n, "state has the wrong component count");
        let b = w.letters().iter().fold(x.index(), |b, &c| self.step_index(b, c));
        State::from_index(self.n, b)
    }

    pub fn is_fixed_point(&self, x: State) -> bool {
        self.is_fixed_index(x.index())
    }

    pub fn fixed_points(&self) -> Vec<State> {
        State::all(self.n).filter(|&x| self.is_fixed_point(x)).collect()
    }

    pub fn fixed_point_set(&self) -> StateSet {
        let mut s = StateSet::empty(self.n);
        for b in 0..self.images.len() as u32 {
            if self.is_fixed_index(b) {
                s.insert_index(b);
            }
        }
        s
    }

    /// Arc `j -> i` whenever `f_i` depends on `x_j`.
    pub fn interaction_graph(&self) -> Digraph {
        let n = self.n;
        let mut g = Digraph::new(n);
        for j in 1..=n {
            let mj = component_mask(n, j);
            let mut changed = 0u32;
            for x in 0..self.images.len() as u32 {
                if x & mj == 0 {
                    changed |= self.images[x as usize] ^ self.images[(x | mj) as usize];
                }
            }
            for i in 1..=n {
                if changed & component_mask(n, i) != 0 {
                    g.add_arc(j, i).expect("vertices in range");
                }
            }
        }
        g
    }

    /// Materializes the asynchronous graph.
    pub fn async_graph(&self) -> Result<AsyncGraph> {
        if self.n > MAX_MATERIALIZED {
            return Err(Error::Infeasible {
                what: "asynchronous graph materialization",
                n: self.n,
                limit: MAX_MATERIALIZED,
            });
        }
        let succ = (0..self.images.len() as u32)
            .map(|x| self.successor_indices(x).collect())
            .collect();
        Ok(AsyncGraph { n: self.n, succ })
    }

    /// Out-neighbors of `x` in the asynchronous graph, by increasing letter.
    pub(crate) fn successor_indices(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n as u32).filter_map(move |c| {
            let y = self.step_index(x, c);
            (y != x).then_some(y)
        })
    }

    /// Letters whose action moves `x`, ascending.
    pub(crate) fn moving_letters(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        let diff = self.images[x as usize] ^ x;
        let n = self.n;
        (1..=n as u32).filter(move |&c| diff & component_mask(n, c as usize) != 0)
    }

    pub fn fixes(&self, w: &Word) -> bool {
        (0..self.images.len() as u32).all(|x| {
            let y = w.letters().iter().fold(x, |b, &c| self.step_index(b, c));
            self.is_fixed_index(y)
        })
    }

    /// Every state reaches a fixed point in the asynchronous graph.
    pub fn is_fixable(&self) -> bool {
        let size = self.images.len();
        let mut seen = vec![false; size];
        let mut queue: VecDeque<u32> = VecDeque::new();
        for x in 0..size as u32 {
            if self.is_fixed_index(x) {
                seen[x as usize] = true;
                queue.push_back(x);
            }
        }
        let mut reached = queue.len();
        while let Some(y) = queue.pop_front() {
            for i in 1..=self.n {
                let x = y ^ component_mask(self.n, i);
                if !seen[x as usize] && self.step_index(x, i as u32) == y {
                    seen[x as usize] = true;
                    reached += 1;
                    queue.push_back(x);
                }
            }
        }
        reached == size
    }

    /// Order preservation, checked on covering pairs of the lattice.
    pub fn is_monotone(&self) -> bool {
        (1..=self.n).all(|i| {
            let m = component_mask(self.n, i);
            (0..self.images.len() as u32).filter(|x| x & m == 0).all(|x| {
                let lo = self.images[x as usize];
                let hi = self.images[(x | m) as usize];
                lo & !hi == 0
            })
        })
    }

    /// The asynchronous graph has no directed cycle.
    pub fn is_async_acyclic(&self) -> bool {
        self.async_topological_order().is_some()
    }

    /// A topological order of the asynchronous graph (smallest index first
    /// among available states), or `None` if it has a cycle.
    pub fn async_topological_order(&self) -> Option<Vec<u32>> {
        let size = self.images.len();
        let mut indegree = vec![0u32; size];
        for x in 0..size as u32 {
            for y in self.successor_indices(x) {
                indegree[y as usize] += 1;
            }
        }
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (0..size as u32)
            .filter(|&x| indegree[x as usize] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut order = Vec::with_capacity(size);
        while let Some(std::cmp::Reverse(x)) = ready.pop() {
            order.push(x);
            for y in self.successor_indices(x) {
                indegree[y as usize] -= 1;
                if indegree[y as usize] == 0 {
                    ready.push(std::cmp::Reverse(y));
                }
            }
        }
        (order.len() == size).then_some(order)
    }
}

/// Explicit asynchronous graph on the `2^n` states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsyncGraph {
    n: usize,
    succ: Vec<Vec<u32>>,
}

impl AsyncGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn state_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, x: State) -> impl Iterator<Item = State> + '_ {
        let n = self.n;
        self.succ[x.index() as usize].iter().map(move |&y| State::from_index(n, y))
    }

    /// Arcs ordered by source index, then by flipped component.
    pub fn arcs(&self) -> impl Iterator<Item = (State, State)> + '_ {
        let n = self.n;
        self.succ.iter().enumerate().flat_map(move |(x, ys)| {
            ys.iter()
                .map(move |&y| (State::from_index(n, x as u32), State::from_index(n, y)))
        })
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        let size = self.succ.len();
        let mut indegree = vec![0usize; size];
        for ys in &self.succ {
            for &y in ys {
                indegree[y as usize] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..size).filter(|&x| indegree[x] == 0).collect();
        let mut done = 0;
        while let Some(x) = stack.pop() {
            done += 1;
            for &y in &self.succ[x] {
                indegree[y as usize] -= 1;
                if indegree[y as usize] == 0 {
                    stack.push(y as usize);
                }
            }
        }
        done == size
    }
}

/// The map `x -> f^w(x)` for the word applied so far.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    n: usize,
    image: Vec<u32>,
}

impl Configuration {
    pub fn identity(n: usize) -> Self {
        Configuration { n, image: (0..1u32 << n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn image(&self, x: State) -> State {
        State::from_index(self.n, self.image[x.index() as usize])
    }

    pub fn image_indices(&self) -> &[u32] {
        &self.image
    }

    pub fn apply_letter(&mut self, f: &BooleanNetwork, letter: u32) {
        for y in &mut self.image {
            *y = f.step_index(*y, letter);
        }
    }

    pub fn apply_word(&mut self, f: &BooleanNetwork, w: &Word) {
        for &c in w.letters() {
            self.apply_letter(f, c);
        }
    }

    /// Every image is a fixed point of `f`.
    pub fn is_fixing(&self, f: &BooleanNetwork) -> bool {
        self.image.iter().all(|&y| f.is_fixed_index(y))
    }

    /// The states still in play. The future of the configuration only
    /// depends on this set, which is what the oracle searches over.
    pub fn image_set(&self) -> StateSet {
        let mut s = StateSet::empty(self.n);
        for &y in &self.image {
            s.insert_index(y);
        }
        s
    }

    /// Canonical byte encoding of the full image array (little-endian).
    pub fn to_bytes(&self) -> Vec<u8> {
        self.image.iter().flat_map(|y| y.to_le_bytes()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Network of the worked example, from its component formulas.
    fn example3() -> BooleanNetwork {
        BooleanNetwork::from_components(3, |i, x| {
            let (x1, x2, x3) = (x.get(1), x.get(2), x.get(3));
            match i {
                1 => x1 && x2 && x3,
                2 => x1 && !x3,
                3 => x2 && !x1,
                _ => unreachable!(),
            }
        })
        .unwrap()
    }

    fn negation() -> BooleanNetwork {
        BooleanNetwork::from_fn(1, |x| x.flip(1)).unwrap()
    }

    fn s(text: &str) -> State {
        text.parse().unwrap()
    }

    #[test]
    fn example3_table_matches_formulas() {
        let rows = [
            ("000", "000"),
            ("001", "000"),
            ("010", "001"),
            ("011", "001"),
            ("100", "010"),
            ("101", "000"),
            ("110", "010"),
            ("111", "100"),
        ];
        let f = example3();
        for (x, y) in rows {
            assert_eq!(f.eval(s(x)).to_string(), y, "row {x}");
        }
    }

    #[test]
    fn state_text_is_component_one_first() {
        let x = s("100");
        assert!(x.get(1));
        assert!(!x.get(3));
        assert_eq!(x.index(), 4);
        assert_eq!(State::new(3, 4).unwrap().to_string(), "100");
        assert!("10a".parse::<State>().is_err());
        assert!(State::new(2, 4).is_err());
    }

    #[test]
    fn apply_word_examples() {
        let f = example3();
        assert_eq!(f.apply_word(&Word::empty(), s("010")), s("010"));
        assert_eq!(f.apply_word(&Word::from([3]), s("010")), s("011"));
        assert_eq!(f.apply_word(&Word::from([1, 2, 3, 1]), s("111")), s("000"));
        assert_eq!(f.apply_word(&Word::from([5]), s("111")), s("111"));
    }

    #[test]
    fn apply_word_matches_manual_replay() {
        // 111 -1-> 111 -2-> 101 -3-> 100 -1-> 000, read off the table row by row.
        let f = example3();
        let mut x = s("111");
        let trail: Vec<String> = [1u32, 2, 3, 1]
            .iter()
            .map(|&c| {
                let y = f.eval(x);
                let i = c as usize;
                x = x.with(i, y.get(i));
                x.to_string()
            })
            .collect();
        assert_eq!(trail, ["111", "101", "100", "000"]);
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(example3().fixed_points(), vec![s("000")]);
        assert_eq!(BooleanNetwork::identity(3).unwrap().fixed_points().len(), 8);
        assert!(negation().fixed_points().is_empty());
    }

    #[test]
    fn interaction_graph_examples() {
        let g = example3().interaction_graph();
        let arcs: Vec<_> = g.arcs().collect();
        let mut expected = vec![(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (2, 3), (1, 3)];
        expected.sort();
        assert_eq!(arcs, expected);

        let c = BooleanNetwork::constant(s("101")).unwrap();
        assert_eq!(c.interaction_graph().arc_count(), 0);

        let id = BooleanNetwork::identity(4).unwrap().interaction_graph();
        assert_eq!(id.arcs().collect::<Vec<_>>(), vec![(1, 1), (2, 2), (3, 3), (4, 4)]);
    }

    #[test]
    fn async_graph_examples() {
        let g = example3().async_graph().unwrap();
        let mut arcs: Vec<(String, String)> =
            g.arcs().map(|(x, y)| (x.to_string(), y.to_string())).collect();
        arcs.sort();
        let mut expected: Vec<(String, String)> = [
            ("001", "000"),
            ("010", "000"),
            ("010", "011"),
            ("011", "001"),
            ("100", "000"),
            ("100", "110"),
            ("101", "001"),
            ("101", "100"),
            ("110", "010"),
            ("111", "110"),
            ("111", "101"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        expected.sort();
        assert_eq!(arcs, expected);

        assert_eq!(BooleanNetwork::identity(3).unwrap().async_graph().unwrap().arc_count(), 0);
        let neg = negation().async_graph().unwrap();
        assert_eq!(neg.arcs().count(), 2);
        assert!(!neg.is_acyclic());
    }

    #[test]
    fn async_graph_size_limit() {
        let f = BooleanNetwork::identity(21).unwrap();
        assert!(matches!(f.async_graph(), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn fixes_examples() {
        let f = example3();
        assert!(f.fixes(&Word::from([1, 2, 3, 1])));
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    assert!(!f.fixes(&Word::from([a, b, c])), "{a}{b}{c}");
                }
            }
        }
        assert!(BooleanNetwork::identity(2).unwrap().fixes(&Word::empty()));
    }

    #[test]
    fn fixable_examples() {
        assert!(example3().is_fixable());
        assert!(!negation().is_fixable());
        assert!(BooleanNetwork::identity(3).unwrap().is_fixable());
    }

    #[test]
    fn monotone_examples() {
        let f = example3();
        assert!(!f.is_monotone());
        // The violating pair, found by a full scan over comparable pairs.
        assert!(s("010").le(&s("110")));
        assert!(!f.eval(s("010")).le(&f.eval(s("110"))));
        assert!(BooleanNetwork::constant(s("01")).unwrap().is_monotone());
        let and = BooleanNetwork::from_components(2, |_, x| x.get(1) && x.get(2)).unwrap();
        assert!(and.is_monotone());
    }

    #[test]
    fn async_acyclic_examples() {
        assert!(example3().is_async_acyclic());
        assert!(example3().async_graph().unwrap().is_acyclic());
        assert!(!negation().is_async_acyclic());
        assert!(BooleanNetwork::identity(2).unwrap().is_async_acyclic());
    }

    #[test]
    fn configuration_tracks_apply_word() {
        let f = example3();
        let w = Word::from([2, 1, 3, 3, 2]);
        let mut c = Configuration::identity(3);
        c.apply_word(&f, &w);
        for x in State::all(3) {
            assert_eq!(c.image(x), f.apply_word(&w, x));
        }
        assert_eq!(c.to_bytes().len(), 8 * 4);
        let mut c = Configuration::identity(3);
        c.apply_word(&f, &Word::from([1, 2, 3, 1]));
        assert!(c.is_fixing(&f));
        assert_eq!(c.image_set().len(), 1);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(Word::parse("1231", 3).unwrap(), Word::from([1, 2, 3, 1]));
        assert_eq!(Word::parse("1, 2,3 1", 3).unwrap(), Word::from([1, 2, 3, 1]));
        assert_eq!(Word::parse("12", 12).unwrap(), Word::from([12]));
        assert!(Word::parse("102", 3).is_err());
        assert!(Word::parse("1 x", 3).is_err());
        assert!(Word::parse("", 3).unwrap().is_empty());
        assert_eq!(Word::from([2, 1, 3]).to_string(), "2 1 3");
    }

    #[test]
    fn state_set_iteration() {
        let mut s = StateSet::empty(7);
        for b in [0u32, 63, 64, 127] {
            s.insert_index(b);
        }
        assert_eq!(s.indices().collect::<Vec<_>>(), vec![0, 63, 64, 127]);
        assert_eq!(s.len(), 4);
        assert!(s.is_subset(&StateSet::full(7)));
    }
}
