//! Sparse multivariate polynomials with exact integer coefficients.

use crate::shapes::Composition;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A monomial x_1^{a_1} x_2^{a_2} ..; trailing zero exponents are trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: vec![] }
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// The variable x_i (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// x^alpha for a composition alpha.
    pub fn from_composition(alpha: &Composition) -> Self {
        Monomial::from_exponents(alpha.parts().iter().map(|&p| p as u32).collect())
    }

    /// Exponent of x_i (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps = (1..=len)
            .map(|i| self.exp(i) + other.exp(i))
            .collect();
        Monomial::from_exponents(exps)
    }

    /// Monomial with the exponents of x_i and x_{i+1} replaced.
    pub fn with_pair(&self, i: usize, a: u32, b: u32) -> Monomial {
        let len = self.exps.len().max(i + 1);
        let mut exps: Vec<u32> = (1..=len).map(|k| self.exp(k)).collect();
        exps[i - 1] = a;
        exps[i] = b;
        Monomial::from_exponents(exps)
    }

    /// Action of the adjacent transposition s_i on variables.
    pub fn swap(&self, i: usize) -> Monomial {
        self.with_pair(i, self.exp(i + 1), self.exp(i))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: degree first, then lexicographic on exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.exps.len().max(other.exps.len());
            for i in 1..=len {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial with integer coefficients, stored sparsely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = IntPolynomial::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = IntPolynomial::default();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of coefficients, i.e. the evaluation at x_i = 1.
    pub fn eval_all_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Degree when homogeneous, None for 0 or inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Action of the adjacent transposition s_i on the variables.
    pub fn swap_vars(&self, i: usize) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.swap(i), c);
        }
        out
    }

    /// Largest monomial in graded-lex order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical text form: terms in decreasing graded-lex order, unit
    /// coefficients and exponents elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.unsigned_abs();
            if idx == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs != 1 || m.exponents().is_empty() {
                write!(f, "{abs}")?;
                if !m.exponents().is_empty() {
                    write!(f, "*")?;
                }
            }
            if !m.exponents().is_empty() {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::monomial(Monomial::var(i), 1)
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::one().to_string(), "1");
        let p = &(&x(1) * &x(1)) * &x(2);
        assert_eq!(p.to_string(), "x1^2*x2");
        let q = &x(1) + &x(2);
        assert_eq!(q.to_string(), "x1 + x2");
        let r = &IntPolynomial::constant(2) * &x(1);
        assert_eq!(r.to_string(), "2*x1");
        let s = &x(2) - &x(1);
        assert_eq!(s.to_string(), "-x1 + x2");
    }

    #[test]
    fn graded_lex_order() {
        let m1 = Monomial::from_exponents(vec![1]); // x1
        let m2 = Monomial::from_exponents(vec![0, 1]); // x2
        let m3 = Monomial::from_exponents(vec![2]); // x1^2
        assert!(m1 > m2);
        assert!(m3 > m1);
        assert!(m3 > m2);
    }

    #[test]
    fn arithmetic_exact() {
        let p = &x(1) + &x(2);
        let q = &p * &p;
        assert_eq!(q.coeff(&Monomial::from_exponents(vec![1, 1])), 2);
        assert_eq!(q.coeff(&Monomial::from_exponents(vec![2])), 1);
        let zero = &q - &q;
        assert!(zero.is_zero());
    }

    #[test]
    fn homogeneity() {
        let p = &x(1) * &x(2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = &p + &x(1);
        assert_eq!(q.homogeneous_degree(), None);
    }
}
