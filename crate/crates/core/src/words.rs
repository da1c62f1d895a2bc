//! Combinatorics on words: subwords, `(n,k)`-universal words, words induced
//! by paths of the `n`-cube and path-universal words.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::network::{State, Word};

/// Largest `n` for which `(n,k)`-universality is decided by enumeration.
pub const MAX_UNIVERSAL_CHECK: usize = 8;
/// Largest `n` for which path-universality is decided by enumerating cube paths.
pub const MAX_PATH_UNIVERSAL_CHECK: usize = 4;
/// Largest `n` accepted by [`gray_word`].
pub const MAX_GRAY: usize = 20;
/// Largest `n` accepted by [`path_universal_word`].
pub const MAX_PATH_UNIVERSAL_WORD: usize = 12;

/// `u` embeds into `w` order-preservingly.
pub fn is_subword(u: &Word, w: &Word) -> bool {
    let mut rest = w.letters().iter();
    u.letters().iter().all(|c| rest.any(|d| d == c))
}

/// `next[p * (n + 1) + c]` is the first position `>= p` holding letter `c`,
/// or `len` if there is none. Letters outside `[n]` are never looked up.
struct NextTable {
    n: usize,
    len: usize,
    next: Vec<u32>,
}

impl NextTable {
    fn new(w: &Word, n: usize) -> Self {
        let len = w.len();
        let stride = n + 1;
        let mut next = vec![len as u32; (len + 1) * stride];
        for p in (0..len).rev() {
            let (head, tail) = next.split_at_mut((p + 1) * stride);
            head[p * stride..].copy_from_slice(&tail[..stride]);
            let c = w.letters()[p] as usize;
            if c <= n {
                head[p * stride + c] = p as u32;
            }
        }
        NextTable { n, len, next }
    }

    /// Position just after the first `c` at or after `p`, if any.
    #[inline]
    fn advance(&self, p: usize, c: usize) -> Option<usize> {
        let q = self.next[p * (self.n + 1) + c] as usize;
        (q < self.len).then_some(q + 1)
    }
}

/// Every repetition-free word of length `n - k` over `[n]` is a subword of `w`.
/// `k = 0` is ordinary `n`-universality.
pub fn is_k_universal(w: &Word, n: usize, k: usize) -> Result<bool> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    if n > MAX_UNIVERSAL_CHECK {
        return Err(Error::Infeasible {
            what: "(n,k)-universality check",
            n,
            limit: MAX_UNIVERSAL_CHECK,
        });
    }
    fn dfs(t: &NextTable, n: usize, used: u32, pos: usize, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        (1..=n).filter(|c| used & (1 << c) == 0).all(|c| match t.advance(pos, c) {
            Some(p) => dfs(t, n, used | 1 << c, p, left - 1),
            None => false,
        })
    }
    let t = NextTable::new(w, n);
    Ok(dfs(&t, n, 0, 0, n - k))
}

/// `n`-universality: every permutation of `[n]` is a subword.
pub fn is_universal(w: &Word, n: usize) -> Result<bool> {
    is_k_universal(w, n, 0)
}

/// `1` followed by `n - k` segments alternating between `2, 3, ..., n` and
/// `n-1, ..., 1`. The result is `(n,k)`-universal and has length
/// `(n-1)(n-k) + 1`.
pub fn zigzag_universal(n: usize, k: usize) -> Result<Word> {
    if n == 0 || k > n {
        return Err(Error::InvalidParameter(format!("zigzag needs 0 <= k <= n, n >= 1 (n={n}, k={k})")));
    }
    Ok(zigzag(n, n - k))
}

fn zigzag(n: usize, segments: usize) -> Word {
    let n = n as u32;
    let mut letters = Vec::with_capacity(1 + segments * (n as usize - 1));
    letters.push(1);
    for s in 1..=segments {
        if s % 2 == 1 {
            letters.extend(2..=n);
        } else {
            letters.extend((1..n).rev());
        }
    }
    Word::from_letters(letters)
}

/// The word `1, u^1, ..., u^{2^n - 1}` with the same alternating segments as
/// [`zigzag_universal`]; it contains every word of length at most `2^n - 1`
/// without consecutive repetitions, hence every path word.
pub fn path_universal_word(n: usize) -> Result<Word> {
    if n == 0 || n > MAX_PATH_UNIVERSAL_WORD {
        return Err(Error::Infeasible {
            what: "path-universal word",
            n,
            limit: MAX_PATH_UNIVERSAL_WORD,
        });
    }
    Ok(zigzag(n, (1 << n) - 1))
}

/// Some letter occurs an odd number of times in every non-empty factor.
///
/// Checked through prefix parities: the factor `w_i..w_j` is all-even exactly
/// when the parity vectors of the prefixes of length `i-1` and `j` agree.
pub fn is_path_word(w: &Word, n: usize) -> bool {
    if w.letters().iter().any(|&c| c as usize > n) {
        return false;
    }
    let blocks = n.div_ceil(64).max(1);
    let mut parity = vec![0u64; blocks];
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(w.len() + 1);
    seen.insert(parity.clone());
    for &c in w.letters() {
        let b = c as usize - 1;
        parity[b / 64] ^= 1 << (b % 64);
        if !seen.insert(parity.clone()) {
            return false;
        }
    }
    true
}

/// A path of the `n`-cube: distinct states, consecutive ones at Hamming
/// distance 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubePath {
    n: usize,
    states: Vec<State>,
}

impl CubePath {
    pub fn new(states: Vec<State>) -> Result<Self> {
        let n = states
            .first()
            .map(State::n)
            .ok_or_else(|| Error::InvalidParameter("a path has at least one state".into()))?;
        let mut seen = HashSet::new();
        for (k, x) in states.iter().enumerate() {
            if x.n() != n {
                return Err(Error::InvalidParameter("mixed component counts".into()));
            }
            if !seen.insert(*x) {
                return Err(Error::InvalidParameter(format!("state {x} repeats")));
            }
            if k > 0 && states[k - 1].hamming(x) != 1 {
                return Err(Error::InvalidParameter(format!("{} -> {x} is not a cube edge", states[k - 1])));
            }
        }
        Ok(CubePath { n, states })
    }

    /// Walks `w` from `start`, flipping one component per letter.
    pub fn from_word(start: State, w: &Word) -> Result<Self> {
        let n = start.n();
        let mut states = vec![start];
        let mut x = start;
        for &c in w.letters() {
            if c as usize > n {
                return Err(Error::VertexOutOfRange { vertex: c as usize, n });
            }
            x = x.flip(c as usize);
            states.push(x);
        }
        CubePath::new(states)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    /// The flipped components, in order.
    pub fn induced_word(&self) -> Word {
        Word::from_letters(
            self.states
                .windows(2)
                .map(|p| {
                    let diff = p[0].index() ^ p[1].index();
                    (self.n - diff.trailing_zeros() as usize) as u32
                })
                .collect(),
        )
    }
}

/// Reflected Gray-code Hamiltonian path from `0...0`.
pub fn gray_path(n: usize) -> Result<CubePath> {
    let w = gray_word(n)?;
    CubePath::from_word(State::zero(n)?, &w)
}

/// Word induced by the reflected Gray code: `w^1 = 1`,
/// `w^n = w^{n-1}, n, w^{n-1}` (the factor is a palindrome).
pub fn gray_word(n: usize) -> Result<Word> {
    if n == 0 || n > MAX_GRAY {
        return Err(Error::Infeasible { what: "Gray word", n, limit: MAX_GRAY });
    }
    let mut letters = vec![1u32];
    for t in 2..=n as u32 {
        let prev = letters.clone();
        letters.push(t);
        letters.extend(prev.into_iter().rev());
    }
    Ok(Word::from_letters(letters))
}

/// Largest number of occurrences of a single letter.
pub fn max_multiplicity(w: &Word) -> usize {
    let mut counts = std::collections::HashMap::new();
    for &c in w.letters() {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    counts.into_values().max().unwrap_or(0)
}

/// Every word induced by a path of the `n`-cube is a subword of `w`.
///
/// Enumerates paths from `0...0` (translations of the cube preserve induced
/// words) carrying the greedy embedding position, and stops at the first
/// path word that fails to embed; path words are closed under prefixes.
pub fn is_path_universal(w: &Word, n: usize) -> Result<bool> {
    if n == 0 || n > MAX_PATH_UNIVERSAL_CHECK {
        return Err(Error::Infeasible {
            what: "path-universality check",
            n,
            limit: MAX_PATH_UNIVERSAL_CHECK,
        });
    }
    Ok(path_universal_unbounded(w, n))
}

pub(crate) fn path_universal_unbounded(w: &Word, n: usize) -> bool {
    fn dfs(t: &NextTable, n: usize, x: u32, visited: &mut [bool], pos: usize) -> bool {
        for c in 1..=n {
            let y = x ^ (1 << (n - c));
            if visited[y as usize] {
                continue;
            }
            let Some(p) = t.advance(pos, c) else {
                return false;
            };
            visited[y as usize] = true;
            let ok = dfs(t, n, y, visited, p);
            visited[y as usize] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    let t = NextTable::new(w, n);
    let mut visited = vec![false; 1 << n];
    visited[0] = true;
    dfs(&t, n, 0, &mut visited, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn w(letters: &[u32]) -> Word {
        Word::from(letters)
    }

    /// All subwords of `w` of length `len`, by brute force over index sets.
    fn subwords(w: &Word, len: usize) -> HashSet<Vec<u32>> {
        (0..w.len())
            .combinations(len)
            .map(|idx| idx.iter().map(|&i| w.letters()[i]).collect())
            .collect()
    }

    fn brute_k_universal(w: &Word, n: usize, k: usize) -> bool {
        let subs = subwords(w, n - k);
        (1..=n as u32).permutations(n - k).all(|p| subs.contains(&p))
    }

    fn brute_path_word(w: &Word) -> bool {
        let l = w.letters();
        (0..l.len()).all(|i| {
            (i..l.len()).all(|j| {
                let window = &l[i..=j];
                window.iter().any(|c| window.iter().filter(|&d| d == c).count() % 2 == 1)
            })
        })
    }

    #[test]
    fn subword_examples() {
        assert!(is_subword(&w(&[1, 3]), &w(&[1, 2, 3])));
        assert!(!is_subword(&w(&[2, 1]), &w(&[1, 2, 3])));
        assert!(is_subword(&Word::empty(), &w(&[4, 4])));
        assert!(is_subword(&Word::empty(), &Word::empty()));
    }

    #[test]
    fn k_universal_examples() {
        assert!(is_k_universal(&w(&[1, 2, 1]), 2, 0).unwrap());
        assert!(brute_k_universal(&w(&[1, 2, 1]), 2, 0));
        assert!(!is_k_universal(&w(&[1, 2]), 2, 0).unwrap());
        assert!(is_k_universal(&w(&[1, 2, 3, 2, 1]), 3, 1).unwrap());
        assert!(brute_k_universal(&w(&[1, 2, 3, 2, 1]), 3, 1));
        assert!(is_k_universal(&Word::empty(), 3, 3).unwrap());
        assert!(is_k_universal(&w(&[1]), 9, 0).is_err());
        assert!(is_k_universal(&w(&[1]), 2, 3).is_err());
    }

    #[test]
    fn k_universal_agrees_with_subword_enumeration() {
        for n in 1..=3usize {
            for len in 0..=6 {
                for letters in (0..len).map(|_| 1..=n as u32).multi_cartesian_product() {
                    let word = w(&letters);
                    for k in 0..=n {
                        assert_eq!(
                            is_k_universal(&word, n, k).unwrap(),
                            brute_k_universal(&word, n, k),
                            "{word} n={n} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zigzag_examples() {
        assert_eq!(zigzag_universal(3, 1).unwrap(), w(&[1, 2, 3, 2, 1]));
        assert_eq!(zigzag_universal(3, 2).unwrap(), w(&[1, 2, 3]));
        assert_eq!(zigzag_universal(1, 0).unwrap(), w(&[1]));
        assert_eq!(zigzag_universal(4, 0).unwrap(), w(&[1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 2, 1]));
        assert!(zigzag_universal(2, 3).is_err());
    }

    #[test]
    fn zigzag_is_universal_up_to_six() {
        for n in 1..=6 {
            for k in 0..n {
                let z = zigzag_universal(n, k).unwrap();
                assert_eq!(z.len(), (n - 1) * (n - k) + 1);
                assert!(is_k_universal(&z, n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn concatenation_of_complementary_universal_words() {
        for n in 1..=5 {
            for k in 0..=n {
                let a = zigzag_universal(n, k).unwrap();
                let b = zigzag_universal(n, n - k).unwrap();
                assert!(is_universal(&a.concat(&b), n).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn path_word_examples() {
        assert!(is_path_word(&w(&[1, 2, 1]), 2));
        assert_eq!(
            CubePath::from_word("00".parse().unwrap(), &w(&[1, 2, 1])).unwrap().states().len(),
            4
        );
        assert!(!is_path_word(&w(&[1, 1]), 2));
        assert!(is_path_word(&w(&[1, 2, 3, 1]), 3));
        let p = CubePath::from_word("000".parse().unwrap(), &w(&[1, 2, 3, 1])).unwrap();
        let text: Vec<String> = p.states().iter().map(|s| s.to_string()).collect();
        assert_eq!(text, ["000", "100", "110", "111", "011"]);
        assert!(!is_path_word(&w(&[3]), 2));
        assert!(is_path_word(&Word::empty(), 1));
    }

    #[test]
    fn path_word_criterion_matches_cube_walk() {
        for n in 1..=3usize {
            for len in 0..=6 {
                for letters in (0..len).map(|_| 1..=n as u32).multi_cartesian_product() {
                    let word = w(&letters);
                    let walk = CubePath::from_word(State::zero(n).unwrap(), &word).is_ok();
                    assert_eq!(is_path_word(&word, n), walk, "{word}");
                    assert_eq!(brute_path_word(&word), walk, "{word}");
                    if walk {
                        assert!(letters.windows(2).all(|p| p[0] != p[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn gray_examples() {
        assert_eq!(gray_word(1).unwrap(), w(&[1]));
        assert_eq!(gray_word(2).unwrap(), w(&[1, 2, 1]));
        assert_eq!(gray_word(3).unwrap(), w(&[1, 2, 1, 3, 1, 2, 1]));
        assert_eq!(max_multiplicity(&gray_word(3).unwrap()), 4);
        let p = gray_path(3).unwrap();
        assert_eq!(p.states().len(), 8);
        assert_eq!(p.induced_word(), gray_word(3).unwrap());
        assert!(gray_word(0).is_err());
    }

    #[test]
    fn path_universal_examples() {
        assert_eq!(path_universal_word(2).unwrap(), w(&[1, 2, 1, 2]));
        assert_eq!(path_universal_word(1).unwrap(), w(&[1]));
        let p3 = path_universal_word(3).unwrap();
        assert_eq!(p3.len(), 15);
        assert!(is_path_universal(&w(&[1, 2, 1, 2]), 2).unwrap());
        assert!(!is_path_universal(&w(&[1, 2, 1]), 2).unwrap());
        assert!(!is_subword(&w(&[2, 1, 2]), &w(&[1, 2, 1])));
        assert!(is_path_universal(&gray_word(2).unwrap(), 1).unwrap());
        assert!(is_path_universal(&p3, 3).unwrap());
        assert!(is_path_universal(&path_universal_word(4).unwrap(), 4).unwrap());
        assert!(is_path_universal(&w(&[1]), 5).is_err());
    }

    #[test]
    fn path_universal_agrees_with_path_word_enumeration() {
        // All maximal path words of the 3-cube, collected by brute force.
        let n = 3;
        let mut path_words = Vec::new();
        for len in 0..8 {
            for letters in (0..len).map(|_| 1..=n as u32).multi_cartesian_product() {
                let word = w(&letters);
                if is_path_word(&word, n) {
                    path_words.push(word);
                }
            }
        }
        let pu = path_universal_word(3).unwrap();
        let mut candidates: Vec<Word> = (0..pu.len())
            .map(|skip| {
                let l: Vec<u32> = pu.letters().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c).collect();
                w(&l)
            })
            .collect();
        candidates.extend((0..12).map(|_| 1..=3u32).multi_cartesian_product().step_by(997).map(|l| w(&l)));
        for cand in candidates {
            let brute = path_words.iter().all(|p| is_subword(p, &cand));
            assert_eq!(is_path_universal(&cand, n).unwrap(), brute, "{cand}");
        }
        assert!(path_words.iter().all(|p| is_subword(p, &pu)));
    }
}
