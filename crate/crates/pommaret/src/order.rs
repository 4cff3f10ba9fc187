//! The two term orders used throughout, both in the reversed-variable
//! convention: x₁ is the smallest variable and x_n the largest.

use crate::exponent::ExponentVector;
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TermOrder {
    /// Degree first; among equal degrees x^μ ≺ x^ν iff the first
    /// non-vanishing entry of μ − ν is positive. Equals standard degrevlex
    /// on the reversed variable list. The default everywhere.
    DegRevLexReversed,
    /// Standard lex after reversing the variable numbering: x^μ ≻ x^ν iff
    /// the last non-vanishing entry of μ − ν is positive. Used for sorting
    /// basis elements into an inverse P-ordering, never for leading terms.
    LexReversed,
}

impl TermOrder {
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        assert_eq!(a.len(), b.len(), "exponent vector length mismatch");
        match self {
            TermOrder::DegRevLexReversed => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for (x, y) in a.entries().iter().zip(b.entries()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        // first nonzero entry of a−b positive ⇒ a smaller
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                    }
                }
                Ordering::Equal
            }
            TermOrder::LexReversed => {
                for (x, y) in a.entries().iter().zip(b.entries()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a ExponentVector, b: &'a ExponentVector) -> &'a ExponentVector {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Human-readable label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            TermOrder::DegRevLexReversed => "degrevlex on the reversed variable list",
            TermOrder::LexReversed => "lex on the reversed variable list",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    const REV: TermOrder = TermOrder::DegRevLexReversed;
    const LEX: TermOrder = TermOrder::LexReversed;

    #[test]
    fn revlex_examples() {
        // xy ≺ z²
        assert_eq!(REV.compare(&ev(&[1, 1, 0]), &ev(&[0, 0, 2])), Ordering::Less);
        assert_eq!(REV.compare(&ev(&[1, 1, 0]), &ev(&[1, 1, 0])), Ordering::Equal);
        // degree first
        assert_eq!(REV.compare(&ev(&[1, 0, 0]), &ev(&[0, 1, 1])), Ordering::Less);
        // x³ ≺ y³ ≺ z³
        assert_eq!(REV.compare(&ev(&[3, 0, 0]), &ev(&[0, 3, 0])), Ordering::Less);
        assert_eq!(REV.compare(&ev(&[0, 3, 0]), &ev(&[0, 0, 3])), Ordering::Less);
    }

    #[test]
    fn degree_two_chain_in_three_variables() {
        // ascending: x² ≺ xy ≺ xz ≺ y² ≺ yz ≺ z²
        let chain = [
            ev(&[2, 0, 0]),
            ev(&[1, 1, 0]),
            ev(&[1, 0, 1]),
            ev(&[0, 2, 0]),
            ev(&[0, 1, 1]),
            ev(&[0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(REV.compare(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn lex_reversed_examples() {
        // x² ≺ xy ≺ xz within class 1, y² ≺ yz within class 2
        assert_eq!(LEX.compare(&ev(&[2, 0, 0]), &ev(&[1, 1, 0])), Ordering::Less);
        assert_eq!(LEX.compare(&ev(&[1, 1, 0]), &ev(&[1, 0, 1])), Ordering::Less);
        assert_eq!(LEX.compare(&ev(&[0, 2, 0]), &ev(&[0, 1, 1])), Ordering::Less);
        // x²y ≻ x² (degree is ignored, the top variable decides)
        assert_eq!(LEX.compare(&ev(&[2, 1]), &ev(&[2, 0])), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn total_order_on_triples(a in proptest::collection::vec(0u32..5, 3),
                                  b in proptest::collection::vec(0u32..5, 3),
                                  c in proptest::collection::vec(0u32..5, 3)) {
            for order in [REV, LEX] {
                let (a, b, c) = (ExponentVector::new(a.clone()),
                                 ExponentVector::new(b.clone()),
                                 ExponentVector::new(c.clone()));
                // antisymmetry
                prop_assert_eq!(order.compare(&a, &b), order.compare(&b, &a).reverse());
                prop_assert_eq!(order.compare(&a, &b) == Ordering::Equal, a == b);
                // transitivity
                if order.compare(&a, &b) != Ordering::Greater
                    && order.compare(&b, &c) != Ordering::Greater
                {
                    prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
