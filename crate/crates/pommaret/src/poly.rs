//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Polynomial`] stores terms with pairwise distinct exponents, sorted
//! descending under the active order; the empty term list is zero. All
//! arithmetic goes through a [`PolyRing`], which bundles the ring context,
//! the coefficient field and the term order; values are immutable once
//! built, so everything here is a pure function.

use crate::exponent::ExponentVector;
use crate::field::CoefficientField;
use crate::linear::LinearChange;
use crate::order::TermOrder;
use crate::ring::RingContext;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<C> {
    pub coefficient: C,
    pub exponent: ExponentVector,
}

/// Terms sorted descending under the ring's order; no zero coefficients,
/// no duplicate exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C> {
    terms: Vec<Term<C>>,
}

impl<C> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The maximal term under the active order; `None` for zero.
    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<&ExponentVector> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Everything below the leading term; zero stays zero.
    pub fn tail(&self) -> Polynomial<C>
    where
        C: Clone,
    {
        Polynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Total degree, i.e. the maximum term degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.exponent.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.exponent.degree();
                self.terms.iter().all(|t| t.exponent.degree() == d)
            }
        }
    }
}

/// The working ring: context, coefficient field and term order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: CoefficientField> {
    pub context: RingContext,
    pub field: F,
    pub order: TermOrder,
}

impl<F: CoefficientField> PolyRing<F> {
    pub fn new(context: RingContext, field: F) -> Self {
        PolyRing {
            context,
            field,
            order: TermOrder::DegRevLexReversed,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.context.num_vars()
    }

    /// Canonical form: merge duplicate exponents, drop zeros, sort descending.
    pub fn normalize(&self, terms: Vec<Term<F::Elem>>) -> Polynomial<F::Elem> {
        let mut map: HashMap<ExponentVector, F::Elem> = HashMap::with_capacity(terms.len());
        for t in terms {
            debug_assert_eq!(t.exponent.len(), self.num_vars());
            match map.get_mut(&t.exponent) {
                Some(c) => *c = self.field.add(c, &t.coefficient),
                None => {
                    map.insert(t.exponent, t.coefficient);
                }
            }
        }
        let mut list: Vec<Term<F::Elem>> = map
            .into_iter()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(exponent, coefficient)| Term {
                coefficient,
                exponent,
            })
            .collect();
        list.sort_by(|a, b| self.order.compare(&b.exponent, &a.exponent));
        Polynomial { terms: list }
    }

    pub fn monomial(&self, exponent: ExponentVector) -> Polynomial<F::Elem> {
        Polynomial {
            terms: vec![Term {
                coefficient: self.field.one(),
                exponent,
            }],
        }
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term {
                coefficient: c,
                exponent: ExponentVector::zeros(self.num_vars()),
            }],
        }
    }

    pub fn variable(&self, var: usize) -> Polynomial<F::Elem> {
        self.monomial(ExponentVector::variable(self.num_vars(), var))
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
        terms.extend(a.terms.iter().cloned());
        terms.extend(b.terms.iter().cloned());
        self.normalize(terms)
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: self.field.neg(&t.coefficient),
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.add(a, &self.neg(b))
    }

    /// a − c·x^μ·b, the basic reduction step.
    pub fn sub_scaled(
        &self,
        a: &Polynomial<F::Elem>,
        c: &F::Elem,
        mu: &ExponentVector,
        b: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
        terms.extend(a.terms.iter().cloned());
        for t in &b.terms {
            terms.push(Term {
                coefficient: self.field.neg(&self.field.mul(c, &t.coefficient)),
                exponent: t.exponent.mul(mu),
            });
        }
        self.normalize(terms)
    }

    pub fn mul_term(
        &self,
        a: &Polynomial<F::Elem>,
        c: &F::Elem,
        mu: &ExponentVector,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: self.field.mul(c, &t.coefficient),
                    exponent: t.exponent.mul(mu),
                })
                .collect(),
        }
    }

    pub fn mul_variable(&self, a: &Polynomial<F::Elem>, var: usize) -> Polynomial<F::Elem> {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient.clone(),
                    exponent: t.exponent.mul_variable(var),
                })
                .collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for s in &a.terms {
            for t in &b.terms {
                terms.push(Term {
                    coefficient: self.field.mul(&s.coefficient, &t.coefficient),
                    exponent: s.exponent.mul(&t.exponent),
                });
            }
        }
        self.normalize(terms)
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: self.field.mul(c, &t.coefficient),
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    pub fn make_monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_term() {
            None => Polynomial::zero(),
            Some(lead) => {
                let inv = self.field.inv(&lead.coefficient);
                self.scale(a, &inv)
            }
        }
    }

    /// Substitute each variable by the linear form given by the matrix row
    /// and expand. A ring homomorphism; the identity matrix is a no-op.
    pub fn apply_linear_change(
        &self,
        f: &Polynomial<F::Elem>,
        change: &LinearChange<F::Elem>,
    ) -> Polynomial<F::Elem> {
        assert_eq!(change.dim(), self.num_vars(), "matrix dimension mismatch");
        if change.is_identity(&self.field) {
            return f.clone();
        }
        let forms: Vec<Polynomial<F::Elem>> = (0..self.num_vars())
            .map(|i| {
                let terms = change.matrix()[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !self.field.is_zero(c))
                    .map(|(j, c)| Term {
                        coefficient: c.clone(),
                        exponent: ExponentVector::variable(self.num_vars(), j + 1),
                    })
                    .collect();
                self.normalize(terms)
            })
            .collect();
        let mut out = Polynomial::zero();
        for t in &f.terms {
            let mut acc = self.constant(t.coefficient.clone());
            for (i, form) in forms.iter().enumerate() {
                for _ in 0..t.exponent.entries()[i] {
                    acc = self.mul(&acc, form);
                }
            }
            out = self.add(&out, &acc);
        }
        out
    }

    /// Exact division by x₁^e; every term must carry at least that power.
    pub fn divide_by_variable_power(
        &self,
        f: &Polynomial<F::Elem>,
        var: usize,
        e: u32,
    ) -> Option<Polynomial<F::Elem>> {
        let divisor = {
            let mut v = vec![0u32; self.num_vars()];
            v[var - 1] = e;
            ExponentVector::new(v)
        };
        let mut terms = Vec::with_capacity(f.terms.len());
        for t in &f.terms {
            terms.push(Term {
                coefficient: t.coefficient.clone(),
                exponent: t.exponent.div(&divisor)?,
            });
        }
        Some(Polynomial { terms })
    }

    /// Render as a parseable expression, terms descending.
    pub fn format(&self, f: &Polynomial<F::Elem>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in f.terms.iter().enumerate() {
            let coeff_str = self.field.format(&t.coefficient);
            let (sign, mag) = match coeff_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff_str),
            };
            if i == 0 {
                if sign == "-" {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (j, &e) in t.exponent.entries().iter().enumerate() {
                if e == 1 {
                    factors.push(self.context.name(j + 1).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.context.name(j + 1), e));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}
