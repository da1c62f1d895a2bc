//! Fixing-word constructions for families of networks.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::{self, Digraph};
use crate::network::{component_mask, BooleanNetwork, Configuration, Word};
use crate::oracle::{enumerate_networks, Cost, Predicate};
use crate::words::zigzag_universal;

/// A family of networks sharing the same component count.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    Explicit(Vec<BooleanNetwork>),
    All(usize),
    /// Monotone networks with interaction graph a labeled subgraph of `G`.
    MonotoneOn(Digraph),
    AsyncAcyclic(usize),
    ConjunctiveSymmetric(usize),
}

impl FamilySpec {
    pub fn members(&self, cost: Cost) -> Result<Vec<BooleanNetwork>> {
        let (n, predicate) = match self {
            FamilySpec::Explicit(v) => {
                if let Some(f) = v.first() {
                    if v.iter().any(|g| g.n() != f.n()) {
                        return Err(Error::InvalidParameter(
                            "family members differ in component count".into(),
                        ));
                    }
                }
                return Ok(v.clone());
            }
            FamilySpec::All(n) => (*n, Predicate::All),
            FamilySpec::MonotoneOn(g) => (g.n(), Predicate::MonotoneOn(g.clone())),
            FamilySpec::AsyncAcyclic(n) => (*n, Predicate::AsyncAcyclic),
            FamilySpec::ConjunctiveSymmetric(n) => (*n, Predicate::ConjunctiveSymmetric),
        };
        Ok(enumerate_networks(n, predicate, cost)?.members())
    }
}

/// The conjunctive network on `g`: `f_i` is the conjunction of the
/// in-neighbors of `i`, and the constant 1 when there are none.
///
/// Panics if `g` has no vertices or more than
/// [`MAX_COMPONENTS`](crate::network::MAX_COMPONENTS).
pub fn conjunctive_network(g: &Digraph) -> BooleanNetwork {
    let n = g.n();
    let masks: Vec<u32> = (1..=n)
        .map(|i| g.in_neighbors(i).iter().fold(0u32, |m, &j| m | component_mask(n, j)))
        .collect();
    BooleanNetwork::from_components(n, |i, x| x.index() & masks[i - 1] == masks[i - 1])
        .expect("graph has a supported vertex count")
}

/// Shortest asynchronous path from `x` to a fixed point, as letters.
fn path_to_fixed_point(f: &BooleanNetwork, x: u32) -> Option<Vec<u32>> {
    let mut parent = vec![None::<(u32, u32)>; f.images().len()];
    let mut seen = vec![false; f.images().len()];
    seen[x as usize] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        if f.is_fixed_index(y) {
            let mut letters = Vec::new();
            let mut cur = y;
            while let Some((prev, c)) = parent[cur as usize] {
                letters.push(c);
                cur = prev;
            }
            letters.reverse();
            return Some(letters);
        }
        for c in f.moving_letters(y) {
            let z = f.step_index(y, c);
            if !seen[z as usize] {
                seen[z as usize] = true;
                parent[z as usize] = Some((y, c));
                queue.push_back(z);
            }
        }
    }
    None
}

/// Generic fixing word for any family of fixable networks, of length at
/// most `4^n` per member.
///
/// Members are handled in order. For each member and each state in index
/// order, the current image of the state under the word built so far is
/// driven to a fixed point along a shortest asynchronous path. Fixed points
/// stay fixed under every letter, so earlier members remain fixed.
pub fn greedy_fix_word(family: &FamilySpec, cost: Cost) -> Result<Word> {
    let members = family.members(cost)?;
    let mut word = Word::empty();
    for (m, f) in members.iter().enumerate() {
        if !f.is_fixable() {
            return Err(Error::NotFixable { member: m });
        }
        let mut config = Configuration::identity(f.n());
        config.apply_word(f, &word);
        for k in 0..f.images().len() {
            let y = config.image_indices()[k];
            if f.is_fixed_index(y) {
                continue;
            }
            let path = path_to_fixed_point(f, y).ok_or(Error::NotFixable { member: m })?;
            let segment = Word::from_letters(path);
            config.apply_word(f, &segment);
            word.extend_from(&segment);
        }
    }
    Ok(word)
}

/// Fixing word of length `2^n - r` for an asynchronous-acyclic network with
/// `r` fixed points.
///
/// Takes a topological order of the asynchronous graph with the fixed points
/// last; the `p`-th letter is the smallest component moving the `p`-th
/// state, which sends it strictly later in the order.
pub fn acyclic_instance_word(f: &BooleanNetwork) -> Result<Word> {
    let order = f.async_topological_order().ok_or(Error::NotAsyncAcyclic)?;
    // Fixed points are sinks, so moving them to the end keeps the order valid.
    let (mut order, fixed): (Vec<u32>, Vec<u32>) =
        order.into_iter().partition(|&x| !f.is_fixed_index(x));
    let moving = order.len();
    order.extend(fixed);
    let letters = order[..moving]
        .iter()
        .map(|&x| f.moving_letters(x).next().expect("non-fixed state moves"))
        .collect();
    Ok(Word::from_letters(letters))
}

/// Fixing word of length `2n - L - 1` for the monotone networks on a
/// loop-full tree with `L` leaves.
///
/// With the non-leaves `v_1, ..., v_N` ordered by distance from the root,
/// emits `v_N, ..., v_2, v_1, v_2, ..., v_N` and then every leaf.
pub fn tree_word(g: &Digraph) -> Result<Word> {
    let info = graphs::tree_info(g)?;
    let inner = &info.non_leaves;
    let letters = inner
        .iter()
        .rev()
        .chain(inner.iter().skip(1))
        .chain(info.leaves.iter())
        .map(|&v| v as u32)
        .collect();
    Ok(Word::from_letters(letters))
}

/// Word of length `2n - 1` fixing every monotone network on a loop-full
/// tree, constant local functions included.
///
/// With all vertices `v_1, ..., v_n` ordered by distance from the root,
/// emits `v_n, ..., v_2, v_1, v_2, ..., v_n`.
pub fn tree_sweep_word(g: &Digraph) -> Result<Word> {
    let info = graphs::tree_info(g)?;
    let order = &info.order;
    let letters = order.iter().rev().chain(order.iter().skip(1)).map(|&v| v as u32).collect();
    Ok(Word::from_letters(letters))
}

/// Intermediate results of [`feedback_word`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeedbackWord {
    pub word: Word,
    /// A minimum 2-feedback vertex set, ascending.
    pub feedback_set: Vec<usize>,
    /// Strong components of the remaining graph, in topological order.
    pub components: Vec<Vec<usize>>,
    /// Length of the prefix that fixes the remaining graph.
    pub prefix_len: usize,
}

/// Fixing word of length at most `τ_2(G) n² + 3n` for the monotone networks
/// on `g`.
///
/// Let `I` be a minimum 2-feedback vertex set and relabel so that the other
/// vertices come first (ascending) and `I` last (ascending). The word is:
/// a [`tree_sweep_word`] for the loop-full closure of each strong component of
/// `G - I`, in topological order; then for each `k = 1..=|I|`, the `k`-th
/// vertex of `I` followed by an `(α+k)`-universal word over the first
/// `α + k` relabeled vertices, where `α = n - |I|`.
pub fn feedback_word(g: &Digraph) -> Result<FeedbackWord> {
    let n = g.n();
    let feedback_set = graphs::min_l_feedback_set(g, 2)?;
    let rest: Vec<usize> = (1..=n).filter(|v| !feedback_set.contains(v)).collect();
    let (remaining, labels) = g.induced(&rest);

    let mut word = Word::empty();
    let mut components = Vec::new();
    for comp in graphs::strong_components(&remaining) {
        let (sub, sub_labels) = remaining.induced(&comp);
        let edges: Vec<(usize, usize)> = sub.underlying_edges().into_iter().collect();
        let closure = graphs::loop_full_tree(sub.n(), &edges)?;
        let w = tree_sweep_word(&closure)?;
        word.extend_from(&w.relabel(|c| labels[sub_labels[c as usize - 1] - 1] as u32));
        components.push(comp.iter().map(|&v| labels[v - 1]).collect());
    }
    let prefix_len = word.len();

    let relabeled: Vec<usize> = rest.iter().chain(feedback_set.iter()).copied().collect();
    let alpha = rest.len();
    for (k, &v) in feedback_set.iter().enumerate() {
        word.push(v as u32);
        let universal = zigzag_universal(alpha + k + 1, 0)?;
        word.extend_from(&universal.relabel(|c| relabeled[c as usize - 1] as u32));
    }
    Ok(FeedbackWord { word, feedback_set, components, prefix_len })
}

/// `1, 2, ..., n` followed by an `(n, k)`-universal zigzag word, with
/// `k = 2` clamped to `0..=n-1`. Fixes every conjunctive network on a
/// symmetric digraph with vertex set `[n]`.
pub fn symmetric_conjunctive_word(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let k = 2.min(n - 1);
    let mut word = Word::from_letters((1..=n as u32).collect());
    word.extend_from(&zigzag_universal(n, k)?);
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::loop_full_tree;
    use crate::network::State;

    fn example3() -> BooleanNetwork {
        BooleanNetwork::from_components(3, |i, x| match i {
            1 => x.get(1) && x.get(2) && x.get(3),
            2 => x.get(1) && !x.get(3),
            _ => x.get(2) && !x.get(1),
        })
        .unwrap()
    }

    fn w(letters: &[u32]) -> Word {
        Word::from(letters)
    }

    #[test]
    fn conjunctive_examples() {
        let f = conjunctive_network(&Digraph::from_arcs(2, [(1, 2), (2, 1)]).unwrap());
        for x in State::all(2) {
            assert_eq!(f.component(1, x), x.get(2));
            assert_eq!(f.component(2, x), x.get(1));
        }
        let fixed: Vec<String> = f.fixed_points().iter().map(|s| s.to_string()).collect();
        assert_eq!(fixed, ["00", "11"]);
        let one = conjunctive_network(&Digraph::new(1));
        assert!(State::all(1).all(|x| one.component(1, x)));
        let id = conjunctive_network(&Digraph::from_arcs(1, [(1, 1)]).unwrap());
        assert_eq!(id, BooleanNetwork::identity(1).unwrap());
    }

    #[test]
    fn greedy_examples() {
        let fam = FamilySpec::Explicit(vec![example3()]);
        let word = greedy_fix_word(&fam, Cost::Bounded).unwrap();
        assert!(example3().fixes(&word));
        assert!(word.len() <= 64);

        let id = FamilySpec::Explicit(vec![BooleanNetwork::identity(2).unwrap()]);
        assert!(greedy_fix_word(&id, Cost::Bounded).unwrap().is_empty());

        let neg = BooleanNetwork::from_fn(1, |x| x.flip(1)).unwrap();
        let fam = FamilySpec::Explicit(vec![BooleanNetwork::identity(1).unwrap(), neg]);
        assert_eq!(greedy_fix_word(&fam, Cost::Bounded), Err(Error::NotFixable { member: 1 }));
    }

    #[test]
    fn greedy_fixes_whole_families() {
        let fam = FamilySpec::AsyncAcyclic(2);
        let members = fam.members(Cost::Bounded).unwrap();
        let word = greedy_fix_word(&fam, Cost::Bounded).unwrap();
        assert!(word.len() <= 16 * members.len());
        assert!(members.iter().all(|f| f.fixes(&word)));
        assert!(matches!(
            greedy_fix_word(&FamilySpec::All(1), Cost::Bounded),
            Err(Error::NotFixable { .. })
        ));
    }

    #[test]
    fn acyclic_instance_examples() {
        let f = example3();
        let word = acyclic_instance_word(&f).unwrap();
        assert_eq!(word.len(), 7);
        assert!(f.fixes(&word));
        assert!(acyclic_instance_word(&BooleanNetwork::identity(2).unwrap()).unwrap().is_empty());
        let one = BooleanNetwork::from_fn(1, |x| x.with(1, true)).unwrap();
        assert_eq!(acyclic_instance_word(&one).unwrap(), w(&[1]));
        let neg = BooleanNetwork::from_fn(1, |x| x.flip(1)).unwrap();
        assert_eq!(acyclic_instance_word(&neg), Err(Error::NotAsyncAcyclic));
    }

    #[test]
    fn acyclic_instance_handles_early_sinks() {
        // 00 is a fixed point with no in-arcs, so it sorts first.
        let f = BooleanNetwork::from_images(2, vec![0b00, 0b11, 0b11, 0b11]).unwrap();
        assert!(f.is_async_acyclic());
        assert_eq!(f.async_topological_order().unwrap()[0], 0);
        let word = acyclic_instance_word(&f).unwrap();
        assert_eq!(word.len(), 2);
        assert!(f.fixes(&word));
    }

    #[test]
    fn tree_examples() {
        let path3 = loop_full_tree(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(tree_word(&path3).unwrap(), w(&[2, 1, 3]));
        let path4 = loop_full_tree(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree_word(&path4).unwrap(), w(&[3, 2, 3, 1, 4]));
        let star = loop_full_tree(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(tree_word(&star).unwrap(), w(&[1, 2, 3, 4]));
        assert_eq!(tree_word(&loop_full_tree(1, &[]).unwrap()).unwrap(), w(&[1]));
        assert_eq!(tree_word(&loop_full_tree(2, &[(1, 2)]).unwrap()).unwrap(), w(&[1, 2]));
        assert!(matches!(tree_word(&Digraph::new(2)), Err(Error::NotLoopFullTree(_))));
    }

    #[test]
    fn sweep_examples() {
        let path3 = loop_full_tree(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(tree_sweep_word(&path3).unwrap(), w(&[3, 1, 2, 1, 3]));
        let star = loop_full_tree(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(tree_sweep_word(&star).unwrap(), w(&[4, 3, 2, 1, 2, 3, 4]));
        assert_eq!(tree_sweep_word(&loop_full_tree(1, &[]).unwrap()).unwrap(), w(&[1]));
    }

    #[test]
    fn feedback_examples() {
        // Acyclic graph: only the tree-word prefix.
        let dag = Digraph::from_arcs(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let fw = feedback_word(&dag).unwrap();
        assert!(fw.feedback_set.is_empty());
        assert_eq!(fw.word, w(&[1, 2, 3]));
        assert!(fw.word.len() <= 6);

        let cycle = Digraph::from_arcs(
            3,
            [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (3, 1)],
        )
        .unwrap();
        let fw = feedback_word(&cycle).unwrap();
        assert_eq!(fw.feedback_set, vec![1]);
        assert_eq!(fw.components, vec![vec![2], vec![3]]);
        // Relabeling 2,3,1 -> 1,2,3 maps zigzag 1,2,3,2,1,2,3 to 2,3,1,3,2,3,1.
        assert_eq!(fw.word, w(&[2, 3, 1, 2, 3, 1, 3, 2, 3, 1]));

        let tri = Digraph::complete(3, true);
        let fw = feedback_word(&tri).unwrap();
        assert_eq!(fw.feedback_set.len(), 1);
        assert!(fw.word.len() <= 9 + 9);
    }

    #[test]
    fn symmetric_conjunctive_examples() {
        assert_eq!(symmetric_conjunctive_word(3).unwrap(), w(&[1, 2, 3, 1, 2, 3]));
        assert_eq!(symmetric_conjunctive_word(1).unwrap(), w(&[1, 1]));
        assert_eq!(symmetric_conjunctive_word(2).unwrap(), w(&[1, 2, 1, 2]));
        for n in 3..8 {
            assert_eq!(symmetric_conjunctive_word(n).unwrap().len(), n + (n - 1) * (n - 2) + 1);
        }
    }
}
