//! Words over the positive integers: r-pairing, the coplactic operations
//! e_r, f_r, sigma_r, and Knuth equivalence.

use crate::shapes::Composition;
use std::collections::BTreeSet;

pub type Word = Vec<usize>;

/// The r-pairing of a word: each r+1 is a left parenthesis, each r a right
/// parenthesis, matched left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPairing {
    /// Matched (position of r+1, position of r) index pairs, 0-based.
    pub pairs: Vec<(usize, usize)>,
    /// Positions of unpaired r's, increasing. The unpaired subword is
    /// r^s (r+1)^t with s = unpaired_low.len().
    pub unpaired_low: Vec<usize>,
    /// Positions of unpaired (r+1)'s, increasing.
    pub unpaired_high: Vec<usize>,
}

pub fn r_pairing(word: &[usize], r: usize) -> RPairing {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    let mut unpaired_low = Vec::new();
    for (idx, &c) in word.iter().enumerate() {
        if c == r + 1 {
            stack.push(idx);
        } else if c == r {
            match stack.pop() {
                Some(open) => pairs.push((open, idx)),
                None => unpaired_low.push(idx),
            }
        }
    }
    RPairing {
        pairs,
        unpaired_low,
        unpaired_high: stack,
    }
}

/// e_r: change the leftmost unpaired r+1 to r; None when there is none.
pub fn e_word(r: usize, word: &[usize]) -> Option<Word> {
    let p = r_pairing(word, r);
    let &pos = p.unpaired_high.first()?;
    let mut out = word.to_vec();
    out[pos] = r;
    Some(out)
}

/// f_r: change the rightmost unpaired r to r+1; None when there is none.
pub fn f_word(r: usize, word: &[usize]) -> Option<Word> {
    let p = r_pairing(word, r);
    let &pos = p.unpaired_low.last()?;
    let mut out = word.to_vec();
    out[pos] = r + 1;
    Some(out)
}

/// sigma_r: replace the unpaired subword r^s (r+1)^t by r^t (r+1)^s.
/// Implemented as |s - t| applications of e_r or f_r.
pub fn sigma_word(r: usize, word: &[usize]) -> Word {
    let p = r_pairing(word, r);
    let (s, t) = (p.unpaired_low.len(), p.unpaired_high.len());
    let mut out = word.to_vec();
    if s > t {
        for _ in 0..s - t {
            out = f_word(r, &out).expect("unpaired r available");
        }
    } else {
        for _ in 0..t - s {
            out = e_word(r, &out).expect("unpaired r+1 available");
        }
    }
    out
}

/// Content of a word as a composition (count of each letter).
pub fn content(word: &[usize]) -> Composition {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut parts = vec![0usize; max];
    for &c in word {
        parts[c - 1] += 1;
    }
    Composition::new(parts)
}

/// Words obtained by one elementary Knuth transformation.
pub fn knuth_neighbors(word: &[usize]) -> Vec<Word> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[p], word[p + 1], word[p + 2]);
        // direction 1: x y z = i k j -> k i j  (i <= j < k)
        if b > c && a <= c && c < b {
            out.push(swap3(word, p, b, a, c));
        }
        // direction 2: x y z = k i j -> i k j  (i <= j < k)
        if a > b && b <= c && c < a {
            out.push(swap3(word, p, b, a, c));
        }
        // direction 3: x y z = j i k -> j k i  (i < j <= k)
        if a > b && a <= c && b < a {
            out.push(swap3(word, p, a, c, b));
        }
        // direction 4: x y z = j k i -> j i k  (i < j <= k)
        if c < a && a <= b && c < b {
            out.push(swap3(word, p, a, c, b));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn swap3(word: &[usize], p: usize, x: usize, y: usize, z: usize) -> Word {
    let mut out = word.to_vec();
    out[p] = x;
    out[p + 1] = y;
    out[p + 2] = z;
    out
}

/// The full Knuth class of a word, by closure.
pub fn knuth_class(word: &[usize]) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = vec![word.to_vec()];
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop() {
        for nb in knuth_neighbors(&w) {
            if seen.insert(nb.clone()) {
                queue.push(nb);
            }
        }
    }
    seen
}

pub fn knuth_equivalent(u: &[usize], v: &[usize]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    knuth_class(u).contains(&v.to_vec())
}

/// All words of the given length over the alphabet {1, .., max}.
pub fn all_words(len: usize, max: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for c in 1..=max {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}
