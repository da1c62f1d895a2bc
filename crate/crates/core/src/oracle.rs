//! Exhaustive ground truth for small `n`.
//!
//! Everything here is brute force: network families are enumerated
//! explicitly, single-network fixing lengths come from a breadth-first search
//! over configurations, and family fixing lengths and minimum universal words
//! from iterative deepening over words. Each search has a size bound that can
//! be lifted with [`Cost::Accept`].

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graphs::Digraph;
use crate::network::{component_mask, BooleanNetwork, StateSet, Word};
use crate::synth::conjunctive_network;
use crate::words::{is_k_universal, path_universal_unbounded};

/// Largest `n` for enumerating all, monotone or asynchronous-acyclic networks.
pub const MAX_ENUMERATION: usize = 3;
/// Largest `n` for enumerating conjunctive networks.
pub const MAX_CONJUNCTIVE_ENUMERATION: usize = 4;
/// Largest family size for labeled monotone families.
pub const MAX_FAMILY_MEMBERS: u128 = 10_000_000;
/// Largest `n` for the configuration search.
pub const MAX_CONFIGURATION_SEARCH: usize = 4;
/// Largest `n` for the minimum `(n,k)`-universal length search.
pub const MAX_UNIVERSAL_SEARCH: usize = 4;
/// Largest `n` for the minimum path-universal length search.
pub const MAX_PATH_UNIVERSAL_SEARCH: usize = 3;
/// Largest `n` for the fixable fraction.
pub const MAX_FRACTION: usize = 3;
/// Component tables are `u64` bitmasks over the states, which caps every
/// enumeration at this `n` regardless of [`Cost`].
pub const HARD_ENUMERATION_LIMIT: usize = 6;

/// Whether the configured size bounds apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Cost {
    #[default]
    Bounded,
    /// Run beyond the configured bounds.
    Accept,
}

fn guard(cost: Cost, what: &'static str, n: usize, limit: usize) -> Result<()> {
    if cost == Cost::Bounded && n > limit {
        return Err(Error::Infeasible { what, n, limit });
    }
    Ok(())
}

/// Which networks a [`FamilyEnumeration`] produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    All,
    Monotone,
    AsyncAcyclic,
    /// Monotone networks whose interaction graph is a labeled subgraph of the
    /// given digraph.
    MonotoneOn(Digraph),
    /// Conjunctive networks on every digraph with vertex set `[n]`.
    Conjunctive,
    /// Conjunctive networks on every symmetric digraph with vertex set `[n]`.
    ConjunctiveSymmetric,
}

/// Exhaustive, duplicate-free stream of the networks satisfying a predicate.
#[derive(Clone, Debug)]
pub struct FamilyEnumeration {
    n: usize,
    predicate: Predicate,
}

pub fn enumerate_networks(n: usize, predicate: Predicate, cost: Cost) -> Result<FamilyEnumeration> {
    if n == 0 || n > HARD_ENUMERATION_LIMIT {
        return Err(Error::Infeasible {
            what: "network enumeration",
            n,
            limit: HARD_ENUMERATION_LIMIT,
        });
    }
    match &predicate {
        Predicate::All | Predicate::AsyncAcyclic if n > 4 => {
            return Err(Error::Infeasible { what: "network enumeration", n, limit: 4 });
        }
        Predicate::All | Predicate::Monotone | Predicate::AsyncAcyclic => {
            guard(cost, "network enumeration", n, MAX_ENUMERATION)?
        }
        Predicate::Conjunctive | Predicate::ConjunctiveSymmetric => {
            guard(cost, "conjunctive network enumeration", n, MAX_CONJUNCTIVE_ENUMERATION)?
        }
        Predicate::MonotoneOn(g) => {
            if g.n() != n {
                return Err(Error::InvalidParameter(format!(
                    "graph has {} vertices, family has {n} components",
                    g.n()
                )));
            }
            let size: u128 = (1..=n)
                .map(|i| DEDEKIND[g.in_neighbors(i).len()])
                .product();
            if cost == Cost::Bounded && size > MAX_FAMILY_MEMBERS {
                return Err(Error::Infeasible {
                    what: "labeled monotone family enumeration",
                    n,
                    limit: n,
                });
            }
        }
    }
    Ok(FamilyEnumeration { n, predicate })
}

/// Number of monotone Boolean functions of `d` variables.
const DEDEKIND: [u128; 7] = [2, 3, 6, 20, 168, 7581, 7828354];

impl FamilyEnumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn predicate(&self) -> &Predicate {
        &self.predicate
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = BooleanNetwork> + '_> {
        let n = self.n;
        match &self.predicate {
            Predicate::All => {
                let all: Vec<u64> = (0..1u64 << (1 << n)).collect();
                Box::new(ProductIter::new(n, vec![all; n]))
            }
            Predicate::Monotone => Box::new(monotone_on(&Digraph::complete(n, true))),
            Predicate::MonotoneOn(g) => Box::new(monotone_on(g)),
            Predicate::AsyncAcyclic => Box::new(async_acyclic(n)),
            Predicate::Conjunctive => Box::new((0..1u64 << (n * n)).map(move |mask| {
                let arcs = (0..n * n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| (b / n + 1, b % n + 1));
                conjunctive_network(&Digraph::from_arcs(n, arcs).expect("distinct arcs"))
            })),
            Predicate::ConjunctiveSymmetric => {
                let pairs: Vec<(usize, usize)> = (1..=n)
                    .flat_map(|i| (i..=n).map(move |j| (i, j)))
                    .collect();
                Box::new((0..1u64 << pairs.len()).map(move |mask| {
                    let mut g = Digraph::new(n);
                    for (b, &(i, j)) in pairs.iter().enumerate() {
                        if mask & (1 << b) != 0 {
                            g.add_arc(i, j).expect("in range");
                            g.add_arc(j, i).expect("in range");
                        }
                    }
                    conjunctive_network(&g)
                }))
            }
        }
    }

    /// Number of members, by enumeration where no closed form is used.
    pub fn count(&self) -> u128 {
        let n = self.n as u32;
        match &self.predicate {
            Predicate::All => 1u128 << (n << n),
            Predicate::Monotone => DEDEKIND[self.n].pow(n),
            Predicate::MonotoneOn(g) => {
                (1..=self.n).map(|i| DEDEKIND[g.in_neighbors(i).len()]).product()
            }
            Predicate::Conjunctive => 1u128 << (n * n),
            Predicate::ConjunctiveSymmetric => 1u128 << (n * (n + 1) / 2),
            Predicate::AsyncAcyclic => self.iter().count() as u128,
        }
    }

    pub fn members(&self) -> Vec<BooleanNetwork> {
        self.iter().collect()
    }

    /// Family fixing length; repeated letters are skipped for
    /// asynchronous-acyclic families, where `f^{ii} = f^i`.
    pub fn min_fixing_length(&self, budget: usize) -> Result<(usize, Word)> {
        let skip = matches!(self.predicate, Predicate::AsyncAcyclic);
        family_min_fixing_length(&self.members(), budget, skip)
    }
}

/// Cartesian product of per-component truth tables.
struct ProductIter {
    n: usize,
    choices: Vec<Vec<u64>>,
    odometer: Vec<usize>,
    done: bool,
}

impl ProductIter {
    fn new(n: usize, choices: Vec<Vec<u64>>) -> Self {
        let done = choices.iter().any(Vec::is_empty);
        ProductIter { n, odometer: vec![0; choices.len()], choices, done }
    }
}

impl Iterator for ProductIter {
    type Item = BooleanNetwork;

    fn next(&mut self) -> Option<BooleanNetwork> {
        if self.done {
            return None;
        }
        let n = self.n;
        let images = (0..1u32 << n)
            .map(|x| {
                (0..n).fold(0u32, |acc, c| {
                    let table = self.choices[c][self.odometer[c]];
                    if table >> x & 1 == 1 {
                        acc | component_mask(n, c + 1)
                    } else {
                        acc
                    }
                })
            })
            .collect();
        // Last component varies fastest.
        let mut c = n;
        loop {
            if c == 0 {
                self.done = true;
                break;
            }
            c -= 1;
            self.odometer[c] += 1;
            if self.odometer[c] < self.choices[c].len() {
                break;
            }
            self.odometer[c] = 0;
        }
        Some(BooleanNetwork::from_images(n, images).expect("valid table"))
    }
}

/// Truth tables of the monotone functions of `d` variables; the first
/// variable is the most significant bit of the local index.
pub(crate) fn monotone_tables(d: usize) -> Vec<u64> {
    if d == 0 {
        return vec![0, 1];
    }
    let prev = monotone_tables(d - 1);
    let half = 1u32 << (d - 1);
    let mut out = Vec::new();
    for &lo in &prev {
        for &hi in &prev {
            if lo & !hi == 0 {
                out.push(lo | hi << half);
            }
        }
    }
    out
}

/// Lifts a local table over `vars` (ascending) to a table over all states.
fn lift(n: usize, vars: &[usize], local: u64) -> u64 {
    let d = vars.len();
    (0..1u32 << n).fold(0u64, |acc, x| {
        let idx = vars.iter().enumerate().fold(0u32, |k, (pos, &v)| {
            if x & component_mask(n, v) != 0 {
                k | 1 << (d - 1 - pos)
            } else {
                k
            }
        });
        if local >> idx & 1 == 1 {
            acc | 1 << x
        } else {
            acc
        }
    })
}

fn monotone_on(g: &Digraph) -> ProductIter {
    let n = g.n();
    let choices = (1..=n)
        .map(|i| {
            let vars = g.in_neighbors(i);
            monotone_tables(vars.len()).into_iter().map(|t| lift(n, &vars, t)).collect()
        })
        .collect();
    ProductIter::new(n, choices)
}

/// Asynchronous-acyclic networks, one per acyclic choice of an orientation
/// (or none) for every edge of the cube. The network is recovered from its
/// asynchronous graph: `f_i(x) != x_i` iff `x -> x^i` is an arc.
fn async_acyclic(n: usize) -> impl Iterator<Item = BooleanNetwork> {
    let edges: Vec<(u32, usize)> = (0..1u32 << n)
        .flat_map(|x| (1..=n).filter(move |&i| x & component_mask(n, i) == 0).map(move |i| (x, i)))
        .collect();
    let total = 3u64.pow(edges.len() as u32);
    (0..total).filter_map(move |mut code| {
        let mut images: Vec<u32> = (0..1u32 << n).collect();
        for &(x, i) in &edges {
            let m = component_mask(n, i);
            match code % 3 {
                1 => images[x as usize] ^= m,
                2 => images[(x | m) as usize] ^= m,
                _ => {}
            }
            code /= 3;
        }
        let f = BooleanNetwork::from_images(n, images).expect("valid table");
        f.is_async_acyclic().then_some(f)
    })
}

/// Breadth-first search from `start`; returns the letters of a shortest path
/// to an accepted node, or `None` if none is reachable.
fn bfs_word<K: Clone + Eq + Hash>(
    start: K,
    letters: u32,
    step: impl Fn(&K, u32) -> K,
    accept: impl Fn(&K) -> bool,
) -> Option<Vec<u32>> {
    let mut parent: HashMap<K, Option<(K, u32)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        if accept(&node) {
            let mut word = Vec::new();
            let mut cur = node;
            while let Some(Some((prev, c))) = parent.get(&cur).cloned() {
                word.push(c);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for c in 1..=letters {
            let next = step(&node, c);
            if let Entry::Vacant(e) = parent.entry(next.clone()) {
                e.insert(Some((node.clone(), c)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// A shortest word fixing `f`, or `None` when `f` is not fixable.
///
/// Searches configurations `x -> f^w(x)` starting from the identity. Two
/// configurations with the same set of images have the same future, so the
/// search runs on image sets.
pub fn shortest_fixing_word(f: &BooleanNetwork, cost: Cost) -> Result<Option<Word>> {
    let n = f.n();
    guard(cost, "configuration search", n, MAX_CONFIGURATION_SEARCH)?;
    let word = if n <= 6 {
        let size = 1u32 << n;
        let fixed = (0..size).filter(|&x| f.is_fixed_index(x)).fold(0u64, |m, x| m | 1 << x);
        let full = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        bfs_word(
            full,
            n as u32,
            |&set, c| {
                let mut out = 0u64;
                let mut rest = set;
                while rest != 0 {
                    let x = rest.trailing_zeros();
                    rest &= rest - 1;
                    out |= 1 << f.step_index(x, c);
                }
                out
            },
            |&set| set & !fixed == 0,
        )
    } else {
        let fixed = f.fixed_point_set();
        bfs_word(
            StateSet::full(n),
            n as u32,
            |set, c| {
                let mut out = StateSet::empty(n);
                for x in set.indices() {
                    out.insert_index(f.step_index(x, c));
                }
                out
            },
            |set| set.is_subset(&fixed),
        )
    };
    Ok(word.map(Word::from_letters))
}

/// `λ(f)`, or `None` when `f` is not fixable.
pub fn min_fixing_length(f: &BooleanNetwork, cost: Cost) -> Result<Option<usize>> {
    Ok(shortest_fixing_word(f, cost)?.map(|w| w.len()))
}

/// Calls `visit` on every word of length `len` over `[letters]` in
/// lexicographic order, optionally skipping words with two equal consecutive
/// letters and fixing the first letter to 1. Stops when `visit` returns true.
fn for_each_word(
    len: usize,
    letters: u32,
    skip_repeats: bool,
    first_is_one: bool,
    mut visit: impl FnMut(&[u32]) -> bool,
) -> bool {
    fn rec(
        buf: &mut Vec<u32>,
        len: usize,
        letters: u32,
        skip_repeats: bool,
        first_is_one: bool,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if buf.len() == len {
            return visit(buf);
        }
        let top = if first_is_one && buf.is_empty() { 1 } else { letters };
        for c in 1..=top {
            if skip_repeats && buf.last() == Some(&c) {
                continue;
            }
            buf.push(c);
            let found = rec(buf, len, letters, skip_repeats, first_is_one, visit);
            buf.pop();
            if found {
                return true;
            }
        }
        false
    }
    let mut buf = Vec::with_capacity(len);
    rec(&mut buf, len, letters, skip_repeats, first_is_one, &mut visit)
}

/// Least `L <= budget` such that some word of length `L` over `[n]` fixes
/// every member, with the lexicographically first such word.
///
/// `skip_repeats` drops words with equal consecutive letters; only sound for
/// families where `f^{ii} = f^i`, e.g. asynchronous-acyclic ones.
pub fn family_min_fixing_length(
    members: &[BooleanNetwork],
    budget: usize,
    skip_repeats: bool,
) -> Result<(usize, Word)> {
    let Some(first) = members.first() else {
        return Ok((0, Word::empty()));
    };
    let n = first.n();
    if members.iter().any(|f| f.n() != n) {
        return Err(Error::InvalidParameter("family members differ in component count".into()));
    }
    // Members are tried most-recently-failing first.
    let mut order: Vec<usize> = (0..members.len()).collect();
    for len in 0..=budget {
        let mut found = None;
        for_each_word(len, n as u32, skip_repeats, false, |w| {
            let word = Word::from_letters(w.to_vec());
            match order.iter().position(|&m| !members[m].fixes(&word)) {
                Some(p) => {
                    let m = order.remove(p);
                    order.insert(0, m);
                    false
                }
                None => {
                    found = Some(word);
                    true
                }
            }
        });
        if let Some(w) = found {
            return Ok((len, w));
        }
    }
    Err(Error::ExceedsBudget { budget })
}

/// `λ_k(n)`, the least length of an `(n,k)`-universal word, with a witness.
/// Zero when `k >= n`.
pub fn min_universal_length(n: usize, k: usize, cost: Cost) -> Result<(usize, Word)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if k >= n {
        return Ok((0, Word::empty()));
    }
    guard(cost, "minimum universal word search", n, MAX_UNIVERSAL_SEARCH)?;
    // Universality is invariant under renaming letters, so the first letter
    // can be taken to be 1; a repeated letter never helps an embedding of a
    // repetition-free word.
    for len in 1.. {
        let mut found = None;
        for_each_word(len, n as u32, true, true, |w| {
            let word = Word::from_letters(w.to_vec());
            if is_k_universal(&word, n, k).expect("bounded n") {
                found = Some(word);
                true
            } else {
                false
            }
        });
        if let Some(w) = found {
            return Ok((len, w));
        }
    }
    unreachable!()
}

/// `Λ(n)`, the least length of an `n`-path-universal word, with a witness.
pub fn min_path_universal_length(n: usize, cost: Cost) -> Result<(usize, Word)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    guard(cost, "minimum path-universal word search", n, MAX_PATH_UNIVERSAL_SEARCH)?;
    // Path words have no consecutive repetitions and are closed under
    // renaming letters.
    for len in 1.. {
        let mut found = None;
        for_each_word(len, n as u32, true, true, |w| {
            let word = Word::from_letters(w.to_vec());
            if path_universal_unbounded(&word, n) {
                found = Some(word);
                true
            } else {
                false
            }
        });
        if let Some(w) = found {
            return Ok((len, w));
        }
    }
    unreachable!()
}

/// Fraction of all `n`-component networks that are fixable, exactly.
pub fn fixable_fraction(n: usize, cost: Cost) -> Result<Ratio<u64>> {
    guard(cost, "fixable fraction", n, MAX_FRACTION)?;
    let family = enumerate_networks(n, Predicate::All, cost)?;
    let total = family.count();
    if total > u64::MAX as u128 {
        return Err(Error::Infeasible { what: "fixable fraction", n, limit: MAX_FRACTION });
    }
    let fixable = family.iter().filter(BooleanNetwork::is_fixable).count() as u64;
    Ok(Ratio::new(fixable, total as u64))
}

/// A random monotone network whose interaction graph is a labeled subgraph
/// of `g`. Each local function is a random positive DNF over the
/// in-neighbors, which reaches every monotone function.
pub fn sample_monotone_on<R: Rng + ?Sized>(g: &Digraph, rng: &mut R) -> Result<BooleanNetwork> {
    let n = g.n();
    let dnfs: Vec<Vec<Vec<usize>>> = (1..=n)
        .map(|i| {
            let vars = g.in_neighbors(i);
            let terms = rng.gen_range(0..=vars.len() + 1);
            (0..terms)
                .map(|_| vars.iter().copied().filter(|_| rng.gen_bool(0.5)).collect())
                .collect()
        })
        .collect();
    BooleanNetwork::from_components(n, |i, x| {
        dnfs[i - 1].iter().any(|term| term.iter().all(|&v| x.get(v)))
    })
}
