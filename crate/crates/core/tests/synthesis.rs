use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bnfix_core::graphs::{loop_full_tree, tree_info};
use bnfix_core::oracle::{self, enumerate_networks, family_min_fixing_length, Cost, Predicate};
use bnfix_core::synth::{self, conjunctive_network, FamilySpec};
use bnfix_core::words::{self, is_subword};
use bnfix_core::{BooleanNetwork, Digraph, Word};

fn trees(n: usize) -> Vec<Digraph> {
    let edges: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
    edges
        .into_iter()
        .combinations(n - 1)
        .map(|es| loop_full_tree(n, &es).unwrap())
        .filter(|g| tree_info(g).is_ok())
        .collect()
}

fn monotone_on(g: &Digraph) -> Vec<BooleanNetwork> {
    enumerate_networks(g.n(), Predicate::MonotoneOn(g.clone()), Cost::Bounded).unwrap().members()
}

fn has_constant_component(f: &BooleanNetwork) -> bool {
    let g = f.interaction_graph();
    (1..=f.n()).any(|i| g.in_neighbors(i).is_empty())
}

#[test]
fn sweep_word_fixes_tree_families_optimally() {
    for n in 1..=4 {
        for g in trees(n) {
            let w = synth::tree_sweep_word(&g).unwrap();
            assert_eq!(w.len(), 2 * n - 1);
            let members = monotone_on(&g);
            assert!(members.iter().all(|f| f.fixes(&w)), "{g}: {w}");
            let (l, _) = family_min_fixing_length(&members, 2 * n - 1, false).unwrap();
            assert_eq!(l, 2 * n - 1, "{g}");
        }
    }
}

#[test]
fn tree_word_is_exact_without_constant_components() {
    for n in 2..=4 {
        for g in trees(n) {
            let info = tree_info(&g).unwrap();
            let w = synth::tree_word(&g).unwrap();
            let expected = 2 * n - info.leaf_count() - 1;
            assert_eq!(w.len(), expected);
            let members: Vec<_> = monotone_on(&g).into_iter().filter(|f| !has_constant_component(f)).collect();
            assert!(members.iter().all(|f| f.fixes(&w)), "{g}: {w}");
            let (l, _) = family_min_fixing_length(&members, expected, false).unwrap();
            assert_eq!(l, expected, "{g}");
        }
    }
}

#[test]
fn tree_words_on_constant_leaves_can_fail() {
    // f1 = x1 & x2, f2 = 0 on the loop-full edge: 11 -> 11 -> 10 under 1, 2.
    let g = loop_full_tree(2, &[(1, 2)]).unwrap();
    let f = BooleanNetwork::from_images(2, vec![0, 0, 0, 2]).unwrap();
    assert!(f.is_monotone() && f.interaction_graph().is_subgraph_of(&g));
    let w = synth::tree_word(&g).unwrap();
    assert_eq!(w, Word::from([1, 2]));
    assert!(!f.fixes(&w));
    assert!(f.fixes(&synth::tree_sweep_word(&g).unwrap()));
}

/// Every word fixing the conjunctive network on a loop-full tree uses every
/// letter and has `ij` as a subword for distinct non-leaves `i, j`.
#[test]
fn fixing_words_of_tree_conjunctive_networks() {
    for n in 2..=4 {
        for g in trees(n) {
            let f = conjunctive_network(&g);
            let info = tree_info(&g).unwrap();
            let max_len = 2 * n - info.leaf_count();
            let mut seen = 0;
            for len in 0..=max_len {
                for letters in (0..len).map(|_| 1..=n as u32).multi_cartesian_product() {
                    let w = Word::new(letters).unwrap();
                    if !f.fixes(&w) {
                        continue;
                    }
                    seen += 1;
                    assert!((1..=n as u32).all(|c| w.count(c) > 0), "{g}: {w}");
                    for (&i, &j) in info.non_leaves.iter().tuple_combinations() {
                        assert!(is_subword(&Word::from([i as u32, j as u32]), &w), "{g}: {w} lacks {i}{j}");
                        assert!(is_subword(&Word::from([j as u32, i as u32]), &w), "{g}: {w} lacks {j}{i}");
                    }
                }
            }
            assert!(seen > 0);
        }
    }
}

#[test]
fn feedback_word_fixes_every_monotone_network_on_three_vertices() {
    let pairs: Vec<(usize, usize)> = (1..=3).cartesian_product(1..=3).collect();
    for mask in 0u32..1 << 9 {
        let arcs = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a);
        let g = Digraph::from_arcs(3, arcs).unwrap();
        let fw = synth::feedback_word(&g).unwrap();
        let tau = fw.feedback_set.len();
        assert!(fw.word.len() <= tau * 9 + 9, "{g}: {}", fw.word);
        for f in monotone_on(&g) {
            assert!(f.fixes(&fw.word), "{g}: {:?} not fixed by {}", f.images(), fw.word);
        }
    }
}

#[test]
fn feedback_word_on_sampled_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 4..=6 {
        for _ in 0..20 {
            let arcs: Vec<(usize, usize)> = (1..=n)
                .cartesian_product(1..=n)
                .filter(|_| rand::Rng::gen_bool(&mut rng, 0.3))
                .collect();
            let g = Digraph::from_arcs(n, arcs).unwrap();
            let fw = synth::feedback_word(&g).unwrap();
            let tau = fw.feedback_set.len();
            assert!(fw.word.len() <= tau * n * n + 3 * n);
            for _ in 0..200 {
                let f = oracle::sample_monotone_on(&g, &mut rng).unwrap();
                assert!(f.fixes(&fw.word), "{g}: {:?}", f.images());
            }
        }
    }
}

#[test]
fn path_universal_word_fixes_async_acyclic_families() {
    for n in 1..=3 {
        let w = words::path_universal_word(n).unwrap();
        let family = enumerate_networks(n, Predicate::AsyncAcyclic, Cost::Bounded).unwrap();
        assert!(family.iter().all(|f| f.fixes(&w)), "n = {n}");
    }
}

#[test]
fn greedy_word_fixes_every_fixable_pair_network() {
    let fixable: Vec<_> = enumerate_networks(2, Predicate::All, Cost::Bounded)
        .unwrap()
        .iter()
        .filter(BooleanNetwork::is_fixable)
        .collect();
    let count = fixable.len();
    let w = synth::greedy_fix_word(&FamilySpec::Explicit(fixable.clone()), Cost::Bounded).unwrap();
    assert!(w.len() <= 16 * count);
    assert!(fixable.iter().all(|f| f.fixes(&w)));
}

#[test]
fn synthesized_words_are_never_shorter_than_the_oracle() {
    let g = loop_full_tree(3, &[(1, 2), (2, 3)]).unwrap();
    let (l, _) = family_min_fixing_length(&monotone_on(&g), 8, false).unwrap();
    assert!(synth::tree_sweep_word(&g).unwrap().len() >= l);
    for n in 2..=3 {
        let members = enumerate_networks(n, Predicate::ConjunctiveSymmetric, Cost::Bounded).unwrap().members();
        let (l, _) = family_min_fixing_length(&members, 12, false).unwrap();
        assert!(synth::symmetric_conjunctive_word(n).unwrap().len() >= l);
    }
}
