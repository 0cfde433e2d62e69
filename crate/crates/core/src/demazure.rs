//! Divided difference and isobaric (Demazure) operators, and the algebraic
//! oracles for Schubert and key polynomials built from them.

use crate::perm::Permutation;
use crate::poly::{IntPolynomial, Monomial};
use crate::shapes::Composition;

/// The divided difference (p - s_i p) / (x_i - x_{i+1}).
///
/// Computed term by term from the closed form of (x^a y^b - x^b y^a)/(x - y),
/// so the division is exact by construction.
pub fn divided_difference(i: usize, p: &IntPolynomial) -> IntPolynomial {
    assert!(i >= 1);
    let mut out = IntPolynomial::zero();
    for (m, c) in p.terms() {
        let a = m.exp(i);
        let b = m.exp(i + 1);
        if a == b {
            continue;
        }
        if a > b {
            for k in 0..(a - b) {
                out.add_term(m.with_pair(i, b + k, a - 1 - k), c);
            }
        } else {
            for k in 0..(b - a) {
                out.add_term(m.with_pair(i, a + k, b - 1 - k), -c);
            }
        }
    }
    out
}

/// The isobaric operator pi_i(p) = divided_difference(i, x_i * p).
pub fn isobaric(i: usize, p: &IntPolynomial) -> IntPolynomial {
    let xi = IntPolynomial::monomial(Monomial::var(i), 1);
    divided_difference(i, &(&xi * p))
}

/// The staircase monomial x_1^{n-1} x_2^{n-2} .. x_{n-1}.
pub fn staircase_monomial(n: usize) -> Monomial {
    Monomial::from_exponents((0..n.saturating_sub(1)).map(|i| (n - 1 - i) as u32).collect())
}

/// The Schubert polynomial of w, by divided differences down from the
/// longest element along the lexicographically smallest reduced chain.
pub fn schubert_polynomial(w: &Permutation) -> IntPolynomial {
    let chain = ascent_chain(w, false);
    apply_chain(w.n(), &chain)
}

/// Same polynomial along the chain that always picks the largest ascent;
/// used to test chain independence.
pub fn schubert_polynomial_greedy_chain(w: &Permutation) -> IntPolynomial {
    let chain = ascent_chain(w, true);
    apply_chain(w.n(), &chain)
}

fn ascent_chain(w: &Permutation, largest: bool) -> Vec<usize> {
    let mut chain = Vec::new();
    let mut v = w.clone();
    loop {
        let ascents: Vec<usize> = (1..v.n()).filter(|&i| v.at(i) < v.at(i + 1)).collect();
        let Some(&i) = (if largest { ascents.last() } else { ascents.first() }) else {
            break;
        };
        chain.push(i);
        v = v.right_s(i);
    }
    chain
}

fn apply_chain(n: usize, chain: &[usize]) -> IntPolynomial {
    let mut p = IntPolynomial::monomial(staircase_monomial(n), 1);
    for &i in chain.iter().rev() {
        p = divided_difference(i, &p);
    }
    p
}

/// The permutation of minimum length sorting alpha into its decreasing
/// rearrangement under the right action alpha.w = (alpha_{w_1}, alpha_{w_2}, ..).
pub fn u_of_alpha(alpha: &Composition) -> Permutation {
    let mut idx: Vec<usize> = (1..=alpha.len()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(alpha.part(i)), i));
    Permutation::new(idx).expect("index rearrangement is a permutation")
}

/// The key (Demazure) polynomial of a composition: isobaric operators along
/// a reduced word of u(alpha) applied to x^{lambda(alpha)}.
pub fn key_polynomial(alpha: &Composition) -> IntPolynomial {
    let u = u_of_alpha(alpha);
    let word = u.canonical_reduced_word();
    let lambda = Composition::from(&alpha.lambda());
    let mut p = IntPolynomial::monomial(Monomial::from_composition(&lambda), 1);
    for &a in word.iter().rev() {
        p = isobaric(a, &p);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::monomial(Monomial::var(i), 1)
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        assert!(divided_difference(1, &(&x(1) * &x(2))).is_zero());
        assert_eq!(divided_difference(1, &(&x(1) * &x(1))), &x(1) + &x(2));
        assert_eq!(divided_difference(1, &x(1)), IntPolynomial::one());
    }

    #[test]
    fn isobaric_examples() {
        assert_eq!(isobaric(1, &IntPolynomial::one()), IntPolynomial::one());
        assert_eq!(isobaric(1, &x(1)), &x(1) + &x(2));
        assert!(isobaric(1, &x(2)).is_zero());
    }

    #[test]
    fn schubert_base_cases() {
        assert_eq!(schubert_polynomial(&p("1")), IntPolynomial::one());
        assert_eq!(schubert_polynomial(&p("321")).to_string(), "x1^2*x2");
        assert_eq!(schubert_polynomial(&p("132")), &x(1) + &x(2));
    }

    #[test]
    fn schubert_homogeneous_nonnegative() {
        for w in Permutation::all(4) {
            let s = schubert_polynomial(&w);
            assert!(s.has_nonnegative_coefficients());
            if w.is_identity() {
                assert_eq!(s, IntPolynomial::one());
            } else {
                assert_eq!(s.homogeneous_degree(), Some(w.length() as u32));
            }
        }
    }

    #[test]
    fn chain_independence_s4() {
        for w in Permutation::all(4) {
            assert_eq!(
                schubert_polynomial(&w),
                schubert_polynomial_greedy_chain(&w),
                "chains disagree for {w}"
            );
        }
    }

    #[test]
    fn stability_under_embedding() {
        for w in Permutation::all(4) {
            assert_eq!(schubert_polynomial(&w), schubert_polynomial(&w.embed(6)));
        }
    }

    #[test]
    fn u_of_alpha_examples() {
        assert!(u_of_alpha(&Composition::new(vec![3, 1, 0])).is_identity());
        assert_eq!(
            u_of_alpha(&Composition::new(vec![1, 0, 2, 1])),
            p("3142")
        );
        assert_eq!(u_of_alpha(&Composition::new(vec![0, 1])), p("21"));
    }

    #[test]
    fn key_polynomial_examples() {
        assert_eq!(key_polynomial(&Composition::new(vec![1, 0])), x(1));
        assert_eq!(key_polynomial(&Composition::new(vec![0, 1])), &x(1) + &x(2));
        // weakly decreasing alpha gives a single monomial
        let a = Composition::new(vec![2, 1]);
        assert_eq!(key_polynomial(&a).to_string(), "x1^2*x2");
    }

    #[test]
    fn braid_relations_on_random_suite() {
        // deterministic pseudo-random polynomial suite
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..20 {
            let mut poly = IntPolynomial::zero();
            for _ in 0..6 {
                let exps: Vec<u32> = (0..4).map(|_| (next() % 4) as u32).collect();
                let c = (next() % 7) as i64 - 3;
                poly.add_term(Monomial::from_exponents(exps), c);
            }
            for i in 1..=3usize {
                let dd = divided_difference(i, &poly);
                assert!(divided_difference(i, &dd).is_zero(), "dd_i^2 != 0");
            }
            let lhs = divided_difference(1, &divided_difference(2, &divided_difference(1, &poly)));
            let rhs = divided_difference(2, &divided_difference(1, &divided_difference(2, &poly)));
            assert_eq!(lhs, rhs, "braid relation failed");
            let lhs = divided_difference(1, &divided_difference(3, &poly));
            let rhs = divided_difference(3, &divided_difference(1, &poly));
            assert_eq!(lhs, rhs, "commuting relation failed");
        }
    }
}
