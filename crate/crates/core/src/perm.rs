//! Permutations in one-line notation, their codes, descents, lengths,
//! reduced words, and pattern classes.

use crate::error::{Error, Result};
use crate::shapes::Composition;
use std::fmt;
use std::str::FromStr;

/// A permutation of {1, .., n} in one-line notation.
///
/// All indices and values are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element n (n-1) .. 1 of S_n.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    /// Value at position i (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.word[i] > self.word[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// The code (c_1, .., c_{n-1}), c_i = #{j > i : w_j < w_i}.
    pub fn code(&self) -> Composition {
        let n = self.n();
        let mut parts = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            parts.push(
                (i + 1..n)
                    .filter(|&j| self.word[j] < self.word[i])
                    .count(),
            );
        }
        Composition::new(parts)
    }

    /// Positions i with w_i > w_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// Smallest i with w_i < w_{i+1}, if any.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.word[i - 1] < self.word[i])
    }

    /// Right multiplication by the adjacent transposition s_i: swaps the
    /// entries in positions i and i+1.
    pub fn right_s(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n(), "s_{i} out of range");
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Product of adjacent transpositions s_{a_1} .. s_{a_k} in S_n.
    pub fn from_word(letters: &[usize], n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n);
        for &a in letters {
            if a == 0 || a >= n {
                return Err(Error::NotPermutation);
            }
            w = w.right_s(a);
        }
        Ok(w)
    }

    /// Whether s_{a_1} .. s_{a_k} is reduced (length increases at each step).
    pub fn is_reduced(letters: &[usize], n: usize) -> bool {
        let mut w = Permutation::identity(n);
        for &a in letters {
            if a == 0 || a >= n || w.word[a - 1] > w.word[a] {
                return false;
            }
            w = w.right_s(a);
        }
        true
    }

    /// Builds the permutation of a reduced word; rejects non-reduced input.
    pub fn from_reduced_word(letters: &[usize], n: usize) -> Result<Permutation> {
        if !Self::is_reduced(letters, n) {
            return Err(Error::NotReduced);
        }
        Permutation::from_word(letters, n)
    }

    /// All reduced words for this permutation.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.descents() {
            let shorter = self.right_s(i);
            for mut word in shorter.reduced_words() {
                word.push(i);
                out.push(word);
            }
        }
        out
    }

    /// One canonical reduced word (smallest descent stripped last).
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = w.descents().first().copied() {
            rev.push(i);
            w = w.right_s(i);
        }
        rev.reverse();
        rev
    }

    /// Embeds into S_m (m >= n) by fixing the new points.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut word = self.word.clone();
        word.extend(self.n() + 1..=m);
        Permutation { word }
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        fn search(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == pattern.len() {
                // check order isomorphism
                let k = pattern.len();
                for a in 0..k {
                    for b in a + 1..k {
                        if (pattern[a] < pattern[b]) != (chosen[a] < chosen[b]) {
                            return false;
                        }
                    }
                }
                return true;
            }
            for i in start..word.len() {
                chosen.push(word[i]);
                if search(word, pattern, i + 1, chosen) {
                    chosen.pop();
                    return true;
                }
                chosen.pop();
            }
            false
        }
        search(&self.word, pattern, 0, &mut Vec::new())
    }

    pub fn is_321_avoiding(&self) -> bool {
        !self.contains_pattern(&[3, 2, 1])
    }

    pub fn is_vexillary(&self) -> bool {
        !self.contains_pattern(&[2, 1, 4, 3])
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    /// The flag of a vexillary permutation: the weakly increasing
    /// rearrangement of d_i = min{j > i : w_j < w_i} - 1 over the positions
    /// i with nonzero code entry.
    pub fn vexillary_flag(&self) -> Result<Vec<usize>> {
        if !self.is_vexillary() {
            return Err(Error::PatternClass("permutation is not vexillary"));
        }
        let n = self.n();
        let mut flag = Vec::new();
        for i in 1..=n {
            if let Some(j) = (i + 1..=n).find(|&j| self.word[j - 1] < self.word[i - 1]) {
                flag.push(j - 1);
            }
        }
        flag.sort_unstable();
        Ok(flag)
    }

    /// All permutations of S_n in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { word: cur.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}

/// Pattern-class flags of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternFlags {
    pub is_321_avoiding: bool,
    pub is_vexillary: bool,
    pub is_grassmannian: bool,
}

pub fn classify(w: &Permutation) -> PatternFlags {
    PatternFlags {
        is_321_avoiding: w.is_321_avoiding(),
        is_vexillary: w.is_vexillary(),
        is_grassmannian: w.is_grassmannian(),
    }
}

impl fmt::Display for Permutation {
    /// Digits concatenated for n <= 9, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad character {c:?} in permutation")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|_| Error::Parse(format!("{s:?} is not a permutation")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn length_by_inversions() {
        assert_eq!(p("123").length(), 0);
        assert_eq!(p("215463").length(), 5);
        assert_eq!(p("4321").length(), 6);
    }

    #[test]
    fn code_examples() {
        assert_eq!(p("1234").code().parts(), &[0, 0, 0]);
        assert_eq!(p("215463").code().parts(), &[1, 0, 2, 1, 1]);
        assert_eq!(p("4321").code().parts(), &[3, 2, 1]);
    }

    #[test]
    fn code_roundtrip_determines_permutation() {
        for w in Permutation::all(5) {
            // reconstruct from code: w_i is the (c_i+1)-st smallest unused value
            let code = w.code();
            let mut avail: Vec<usize> = (1..=5).collect();
            let mut word = Vec::new();
            for i in 0..5 {
                let c = if i < code.parts().len() { code.parts()[i] } else { 0 };
                word.push(avail.remove(c));
            }
            assert_eq!(word, w.as_slice());
        }
    }

    #[test]
    fn length_equals_code_sum() {
        for w in Permutation::all(5) {
            assert_eq!(w.length(), w.code().size());
        }
    }

    #[test]
    fn descent_examples() {
        assert!(p("1234").descents().is_empty());
        assert_eq!(p("215463").descents(), vec![1, 3, 5]);
        assert_eq!(p("54321").descents(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn classify_examples() {
        let id = p("123");
        let f = classify(&id);
        assert!(f.is_321_avoiding && f.is_vexillary && f.is_grassmannian);
        assert!(!classify(&p("321")).is_321_avoiding);
        assert!(!classify(&p("2143")).is_vexillary);
    }

    #[test]
    fn reduced_words_of_longest_s3() {
        let mut words = p("321").reduced_words();
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
    }

    #[test]
    fn canonical_word_is_reduced() {
        for w in Permutation::all(4) {
            let word = w.canonical_reduced_word();
            assert!(Permutation::is_reduced(&word, 4));
            assert_eq!(Permutation::from_word(&word, 4).unwrap(), w);
        }
    }

    #[test]
    fn vexillary_flag_examples() {
        assert_eq!(p("1234").vexillary_flag().unwrap(), Vec::<usize>::new());
        // d_i by direct evaluation for 1432: i=2: min{j>2: w_j<4}=3 -> 2; i=3: j=4 -> 3
        assert_eq!(p("1432").vexillary_flag().unwrap(), vec![2, 3]);
        assert!(p("2143").vexillary_flag().is_err());
    }

    #[test]
    fn grassmannian_flag_bounded_by_descent() {
        for w in Permutation::all(5) {
            if w.is_grassmannian() && !w.is_identity() {
                let d = w.descents()[0];
                let flag = w.vexillary_flag().unwrap();
                assert!(flag.iter().all(|&f| f <= d));
                let nonzero = w.code().parts().iter().filter(|&&c| c > 0).count();
                assert_eq!(flag.len(), nonzero);
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["1", "215463", "4321"] {
            assert_eq!(p(s).to_string(), s);
        }
        let big = Permutation::new(vec![12, 3, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11]).unwrap();
        assert_eq!(big.to_string(), "12,3,1,2,4,5,6,7,8,9,10,11");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
