//! Compositions and partitions.

use std::fmt;

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Part at 1-based index i, zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The decreasing rearrangement.
    pub fn lambda(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts form a partition")
    }

    /// Trailing zeros removed; used for semantic comparisons.
    pub fn trimmed(&self) -> Composition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

/// A weakly decreasing sequence of positive integers (trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based index i, zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions with at most `max_len` parts, each at most `max_part`,
    /// of total size `size`.
    pub fn all_of_size_in_box(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn rec(
            remaining: usize,
            rows_left: usize,
            cap: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=cap.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, rows_left - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_len, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in the given partition (as a box shape).
    pub fn all_contained_in(bound: &Partition) -> Vec<Partition> {
        fn rec(bound: &Partition, row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if row > bound.len() {
                return;
            }
            for p in 1..=cap.min(bound.part(row)) {
                // extend by a new row of size p only if weakly decreasing
                cur.push(p);
                rec(bound, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let cap = bound.part(1);
        rec(bound, 1, cap, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Composition {
        Composition::new(p.parts.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All distinct rearrangements (with trailing zeros allowed) of a partition
/// into exactly `len` parts.
pub fn compositions_rearranging(lambda: &Partition, len: usize) -> Vec<Composition> {
    let mut base = lambda.parts().to_vec();
    if base.len() > len {
        return vec![];
    }
    base.resize(len, 0);
    base.sort_unstable();
    let mut out = Vec::new();
    loop {
        let mut alpha = base.clone();
        alpha.reverse();
        // base iterates in ascending lex; collect every distinct rearrangement
        out.push(Composition::new(base.clone()));
        let _ = alpha;
        if !next_permutation(&mut base) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_sorts() {
        let a = Composition::new(vec![1, 0, 2, 1]);
        assert_eq!(a.lambda().parts(), &[2, 1, 1]);
        assert_eq!(a.size(), a.lambda().size());
    }

    #[test]
    fn conjugate_involutive() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn box_enumeration() {
        let all = Partition::all_contained_in(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(all.len(), 5); // {}, (1), (2), (1,1), (2,1)
    }

    #[test]
    fn rearrangements_count() {
        let lam = Partition::new(vec![2, 1, 1]).unwrap();
        let all = compositions_rearranging(&lam, 4);
        // choose position of 2 (4 ways) and positions of the two 1s (C(3,2)=3)
        assert_eq!(all.len(), 12);
        assert!(all.iter().all(|a| a.lambda() == lam));
    }
}
