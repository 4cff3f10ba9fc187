//! Exponent vectors and the combinatorics of Pommaret division.
//!
//! The class of a nonzero exponent vector μ is the smallest (1-based) index
//! of a nonzero entry; its multiplicative variables are x₁,…,x_cls. A term
//! x^μ divides x^ν *involutively* when it divides it and the quotient only
//! involves multiplicative variables of x^μ.

use serde::Serialize;
use std::fmt;

/// A length-n vector of non-negative exponents.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The exponent vector of x_var (1-based).
    pub fn variable(n: usize, var: usize) -> Self {
        assert!(var >= 1 && var <= n, "variable index out of range");
        let mut e = vec![0; n];
        e[var - 1] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of variable `var` (1-based).
    pub fn exponent_of(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Smallest 1-based index with a nonzero entry; `None` for the zero vector.
    pub fn class(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0).map(|i| i + 1)
    }

    /// Whether `var` is multiplicative for this term, i.e. var ≤ class.
    /// Panics on the zero vector, whose class is undefined.
    pub fn is_multiplicative(&self, var: usize) -> bool {
        var <= self.class().expect("class of the zero exponent vector")
    }

    /// The multiplicative variable indices 1 ..= class.
    pub fn multiplicative(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.class().expect("class of the zero exponent vector")
    }

    /// The non-multiplicative variable indices class+1 ..= n.
    pub fn non_multiplicative(&self) -> std::ops::RangeInclusive<usize> {
        let cls = self.class().expect("class of the zero exponent vector");
        (cls + 1)..=self.len()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Involutive divisibility: plain divisibility with the quotient
    /// supported on the multiplicative variables of `self`.
    pub fn involutive_divides(&self, other: &ExponentVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        let cls = match self.class() {
            Some(c) => c,
            None => return false,
        };
        for (i, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            if a > b {
                return false;
            }
            // quotient entry at 1-based index i+1 must vanish beyond cls
            if i + 1 > cls && a != b {
                return false;
            }
        }
        true
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn mul_variable(&self, var: usize) -> ExponentVector {
        let mut e = self.0.clone();
        e[var - 1] = e[var - 1].checked_add(1).expect("exponent overflow");
        ExponentVector(e)
    }

    /// Componentwise difference when `other` divides `self`.
    pub fn div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Support contained in the given set of 1-based variable indices.
    pub fn supported_within(&self, vars: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&(i + 1)))
    }

    /// Zero out the entry of `var`, as in a colon by x_var^∞.
    pub fn without_variable(&self, var: usize) -> ExponentVector {
        let mut e = self.0.clone();
        e[var - 1] = 0;
        ExponentVector(e)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in a fixed
/// deterministic order. Used by enumeration oracles.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<ExponentVector>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(ExponentVector::new(current.clone()));
        return;
    }
    for e in 0..=remaining {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Binomial coefficient over u64, small arguments only.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .expect("binomial overflow")
            .checked_div(i + 1)
            .unwrap();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    #[test]
    fn class_examples() {
        assert_eq!(ev(&[0, 1, 2]).class(), Some(2));
        // x·z in three variables has class 1
        assert_eq!(ev(&[1, 0, 1]).class(), Some(1));
        assert_eq!(ev(&[0, 0, 5]).class(), Some(3));
        assert_eq!(ev(&[0, 0, 0]).class(), None);
    }

    #[test]
    fn multiplicative_variables() {
        // z² in three variables: all variables multiplicative
        let z2 = ev(&[0, 0, 2]);
        assert!((1..=3).all(|v| z2.is_multiplicative(v)));
        assert_eq!(z2.non_multiplicative().count(), 0);
        assert_eq!(z2.multiplicative().collect::<Vec<_>>(), vec![1, 2, 3]);
        // x²: only x multiplicative
        let x2 = ev(&[2, 0, 0]);
        assert!(x2.is_multiplicative(1));
        assert!(!x2.is_multiplicative(2));
        assert_eq!(x2.multiplicative().collect::<Vec<_>>(), vec![1]);
        assert_eq!(x2.non_multiplicative().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn involutive_division_examples() {
        // yz |_P xyz: quotient x lies in k[x,y] = multiplicative span of yz
        assert!(ev(&[0, 1, 1]).involutive_divides(&ev(&[1, 1, 1])));
        // x² does not involutively divide x²y: quotient y is non-multiplicative
        assert!(!ev(&[2, 0]).involutive_divides(&ev(&[2, 1])));
        assert!(ev(&[2, 0]).divides(&ev(&[2, 1])));
        // a term involutively divides itself
        assert!(ev(&[1, 2, 0]).involutive_divides(&ev(&[1, 2, 0])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(6, 3), 20);
    }

    proptest! {
        #[test]
        fn involutive_implies_plain(a in proptest::collection::vec(0u32..4, 3),
                                    b in proptest::collection::vec(0u32..4, 3)) {
            let (a, b) = (ExponentVector::new(a), ExponentVector::new(b));
            if a.involutive_divides(&b) {
                prop_assert!(a.divides(&b));
            }
        }

        #[test]
        fn class_of_product_is_min(a in proptest::collection::vec(0u32..4, 4),
                                   b in proptest::collection::vec(0u32..4, 4)) {
            let (a, b) = (ExponentVector::new(a), ExponentVector::new(b));
            if let (Some(ca), Some(cb)) = (a.class(), b.class()) {
                prop_assert_eq!(a.mul(&b).class(), Some(ca.min(cb)));
            }
        }

        #[test]
        fn class_monotone_under_high_support(a in proptest::collection::vec(0u32..4, 4),
                                             b in proptest::collection::vec(0u32..4, 4)) {
            let a = ExponentVector::new(a);
            if let Some(ca) = a.class() {
                // restrict b to variables ≥ class(a)
                let mut bb = b;
                for i in 0..ca - 1 { bb[i] = 0; }
                let b = ExponentVector::new(bb);
                prop_assert!(a.class().unwrap() <= a.mul(&b).class().unwrap());
            }
        }
    }
}
