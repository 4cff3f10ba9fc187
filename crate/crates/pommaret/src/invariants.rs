//! Homological and cohomological invariants read off a Pommaret basis for
//! the default order.
//!
//! Everything here is a function of the leading exponents alone: their
//! classes and degrees determine regularity, projective dimension, depth,
//! satiety, the q-vector, the ranks of the induced free resolution, the
//! extremal Betti numbers and the Hilbert series. Dimension additionally
//! consults the leading ideal. Saturation is the one operation needing the
//! actual polynomials.

use crate::engine::{
    involutive_autoreduce, pommaret_complete, CompletionResult, EngineError, PommaretBasis,
};
use crate::exponent::{binomial, ExponentVector};
use crate::field::CoefficientField;
use crate::monomial::{MonomialIdeal, MonomialPommaretBasis};
use crate::poly::{PolyRing, Polynomial};
use serde::Serialize;
use std::collections::BTreeMap;

/// The class/degree data of a basis, the common input of every invariant.
/// Built from a polynomial basis (leading exponents) or a monomial one
/// (the elements themselves), so transfers between the two sides compare
/// like with like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisProfile {
    num_vars: usize,
    leads: Vec<ExponentVector>,
}

impl BasisProfile {
    pub fn new(num_vars: usize, leads: Vec<ExponentVector>) -> Self {
        assert!(!leads.is_empty(), "a basis profile needs elements");
        assert!(leads.iter().all(|e| !e.is_zero() && e.len() == num_vars));
        BasisProfile { num_vars, leads }
    }

    pub fn from_pommaret<C: Clone>(basis: &PommaretBasis<C>) -> Self {
        let leads = basis.leading_exponents();
        BasisProfile {
            num_vars: leads[0].len(),
            leads,
        }
    }

    pub fn from_monomial(basis: &MonomialPommaretBasis) -> Self {
        BasisProfile {
            num_vars: basis.num_vars(),
            leads: basis.elements().to_vec(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn leads(&self) -> &[ExponentVector] {
        &self.leads
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_raw(self.num_vars, self.leads.clone())
    }

    /// Minimal class over the basis.
    pub fn min_class(&self) -> usize {
        self.leads
            .iter()
            .map(|e| e.class().expect("basis elements are nonzero"))
            .min()
            .expect("nonempty")
    }

    pub fn max_degree(&self) -> u32 {
        self.leads.iter().map(|e| e.degree()).max().expect("nonempty")
    }
}

/// A degree that may be −∞ (the maximum over an empty set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedDegree {
    MinusInfinity,
    Finite(i64),
}

impl ExtendedDegree {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedDegree::Finite(v) => Some(v),
            ExtendedDegree::MinusInfinity => None,
        }
    }

    fn shift(self, delta: i64) -> ExtendedDegree {
        match self {
            ExtendedDegree::Finite(v) => ExtendedDegree::Finite(v + delta),
            ExtendedDegree::MinusInfinity => ExtendedDegree::MinusInfinity,
        }
    }
}

impl Serialize for ExtendedDegree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedDegree::Finite(v) => serializer.serialize_i64(*v),
            ExtendedDegree::MinusInfinity => serializer.serialize_str("-infinity"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree")]
pub enum Satiety {
    #[serde(rename = "saturated")]
    Saturated,
    #[serde(rename = "degree")]
    Degree(u32),
}

/// Counts of basis elements by (class, degree), with class marginals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDegreeCensus {
    #[serde(serialize_with = "serialize_class_degree_map")]
    pub by_class_and_degree: BTreeMap<(usize, u32), u64>,
    pub by_class: BTreeMap<usize, u64>,
    pub total: u64,
}

fn serialize_class_degree_map<S: serde::Serializer>(
    map: &BTreeMap<(usize, u32), u64>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        class: usize,
        degree: u32,
        count: u64,
    }
    serializer.collect_seq(map.iter().map(|(&(class, degree), &count)| Entry {
        class,
        degree,
        count,
    }))
}

fn serialize_bigraded_map<S: serde::Serializer>(
    map: &BTreeMap<(usize, u32), u64>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        i: usize,
        j: u32,
        rank: u64,
    }
    serializer.collect_seq(map.iter().map(|(&(i, j), &rank)| Entry { i, j, rank }))
}

pub fn census(profile: &BasisProfile) -> ClassDegreeCensus {
    let mut by_class_and_degree: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    let mut by_class: BTreeMap<usize, u64> = BTreeMap::new();
    for lead in profile.leads() {
        let cls = lead.class().expect("nonzero");
        *by_class_and_degree.entry((cls, lead.degree())).or_insert(0) += 1;
        *by_class.entry(cls).or_insert(0) += 1;
    }
    ClassDegreeCensus {
        total: profile.leads().len() as u64,
        by_class_and_degree,
        by_class,
    }
}

/// Castelnuovo–Mumford regularity: the maximal basis degree.
pub fn regularity(profile: &BasisProfile) -> u32 {
    profile.max_degree()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    /// Projective dimension of the ideal, n − min class.
    pub pd: usize,
    /// depth of the quotient ring P/I, min class − 1. The ideal's own
    /// depth is one more.
    pub depth_quotient: usize,
    /// Krull dimension of P/I.
    pub dim: usize,
    pub cohen_macaulay: bool,
    /// {x₁,…,x_D} induces the Noether normalisation.
    pub noether_vars: Vec<usize>,
}

pub fn basic_invariants(profile: &BasisProfile) -> BasicInvariants {
    let min_class = profile.min_class();
    let dim = profile
        .leading_ideal()
        .dimension()
        .expect("proper nonzero leading ideal");
    let depth_quotient = min_class - 1;
    BasicInvariants {
        pd: profile.num_vars() - min_class,
        depth_quotient,
        dim,
        cohen_macaulay: dim == depth_quotient,
        noether_vars: (1..=dim).collect(),
    }
}

/// Satiety: the maximal degree of a class-one element; saturated when
/// there is none.
pub fn satiety(profile: &BasisProfile) -> Satiety {
    profile
        .leads()
        .iter()
        .filter(|e| e.class() == Some(1))
        .map(|e| e.degree())
        .max()
        .map_or(Satiety::Saturated, Satiety::Degree)
}

/// q_i = (maximal degree in class i) − 1, with −∞ for empty classes.
pub fn q_invariants(profile: &BasisProfile) -> Vec<ExtendedDegree> {
    (1..=profile.num_vars())
        .map(|cls| {
            profile
                .leads()
                .iter()
                .filter(|e| e.class() == Some(cls))
                .map(|e| e.degree())
                .max()
                .map_or(ExtendedDegree::MinusInfinity, |d| {
                    ExtendedDegree::Finite(d as i64 - 1)
                })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cohomological index {t} exceeds the dimension {dim}")]
pub struct CohomologyRangeError {
    pub t: usize,
    pub dim: usize,
}

/// reg_t = max(q₁,…,q_{t+1}) and a*_t = max(q₁, q₂−1, …, q_{t+1}−t) for
/// 0 ≤ t ≤ dim P/I.
pub fn cohomology_maxima(
    profile: &BasisProfile,
    t: usize,
) -> Result<(ExtendedDegree, ExtendedDegree), CohomologyRangeError> {
    let dim = profile
        .leading_ideal()
        .dimension()
        .expect("proper nonzero leading ideal");
    if t > dim {
        return Err(CohomologyRangeError { t, dim });
    }
    let q = q_invariants(profile);
    let reg_t = q[..=t]
        .iter()
        .copied()
        .max()
        .unwrap_or(ExtendedDegree::MinusInfinity);
    let a_star_t = q[..=t]
        .iter()
        .enumerate()
        .map(|(i, qi)| qi.shift(-(i as i64)))
        .max()
        .unwrap_or(ExtendedDegree::MinusInfinity);
    Ok((reg_t, a_star_t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionRanks {
    /// r_0, …, r_{n−d}, the free-module ranks of the induced resolution.
    pub total: Vec<u64>,
    /// (homological index i, internal degree j) → r_{i,j}.
    #[serde(serialize_with = "serialize_bigraded_map")]
    pub bigraded: BTreeMap<(usize, u32), u64>,
}

/// Ranks of the basis-induced free resolution: position i collects each
/// class-k element with weight C(n−k, i).
pub fn resolution_ranks(profile: &BasisProfile) -> ResolutionRanks {
    let n = profile.num_vars();
    let d = profile.min_class();
    let length = n - d;
    let mut total = vec![0u64; length + 1];
    let mut bigraded: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for lead in profile.leads() {
        let cls = lead.class().expect("nonzero");
        let degree = lead.degree();
        for (i, slot) in total.iter_mut().enumerate() {
            let weight = binomial((n - cls) as u64, i as u64);
            if weight == 0 {
                continue;
            }
            *slot += weight;
            *bigraded.entry((i, degree + i as u32)).or_insert(0) += weight;
        }
    }
    ResolutionRanks { total, bigraded }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalBetti {
    pub i: usize,
    pub j: u32,
    pub value: u64,
}

/// Positions and values of the extremal Betti numbers: walk from the
/// maximal degree downwards, always through the minimal class among
/// maximal-degree elements, stopping at the minimal class of the whole
/// basis (the ideal's depth).
pub fn extremal_betti(profile: &BasisProfile) -> Vec<ExtremalBetti> {
    let n = profile.num_vars();
    let depth_class = profile.min_class();
    let mut out = Vec::new();
    let mut pool: Vec<&ExponentVector> = profile.leads().iter().collect();
    loop {
        let max_degree = pool.iter().map(|e| e.degree()).max().expect("nonempty pool");
        let min_class = pool
            .iter()
            .filter(|e| e.degree() == max_degree)
            .map(|e| e.class().expect("nonzero"))
            .min()
            .expect("nonempty slice");
        let i = n - min_class;
        let value = profile
            .leads()
            .iter()
            .filter(|e| e.degree() == max_degree && e.class() == Some(min_class))
            .count() as u64;
        out.push(ExtremalBetti {
            i,
            j: max_degree + i as u32,
            value,
        });
        if min_class == depth_class {
            return out;
        }
        pool.retain(|e| e.class().expect("nonzero") < min_class);
    }
}

/// The Hilbert series of the ideal as numerator over (1−t)^n, from the
/// disjoint-cone decomposition: each element contributes
/// t^deg·(1−t)^(n−cls).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub num_vars: usize,
    /// `numerator[j]` is the coefficient of t^j.
    pub numerator: Vec<i64>,
}

pub fn hilbert_series(profile: &BasisProfile) -> HilbertSeries {
    let n = profile.num_vars();
    let mut numerator = vec![0i64; (profile.max_degree() as usize) + n + 1];
    for lead in profile.leads() {
        let cls = lead.class().expect("nonzero");
        let deg = lead.degree() as usize;
        for m in 0..=(n - cls) {
            let coeff = binomial((n - cls) as u64, m as u64) as i64;
            let signed = if m % 2 == 0 { coeff } else { -coeff };
            numerator[deg + m] += signed;
        }
    }
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    HilbertSeries {
        num_vars: n,
        numerator,
    }
}

impl HilbertSeries {
    /// Coefficient of t^q in the series of the ideal.
    pub fn coefficient(&self, q: u32) -> i64 {
        let n = self.num_vars as u64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(j, _)| *j as u32 <= q)
            .map(|(j, &c)| c * binomial((q - j as u32) as u64 + n - 1, n - 1) as i64)
            .sum()
    }

    /// Coefficient of t^q in the series of the quotient ring P/I.
    pub fn quotient_coefficient(&self, q: u32) -> i64 {
        let n = self.num_vars as u64;
        binomial(q as u64 + n - 1, n - 1) as i64 - self.coefficient(q)
    }

    /// Direct cone-count of degree-q monomials covered by the basis.
    pub fn cone_count(profile: &BasisProfile, q: u32) -> u64 {
        profile
            .leads()
            .iter()
            .filter(|e| e.degree() <= q)
            .map(|e| {
                let cls = e.class().expect("nonzero") as u64;
                binomial((q - e.degree()) as u64 + cls - 1, cls - 1)
            })
            .sum()
    }
}

/// Saturation read off the basis: class-one elements lose their full x₁
/// power, the rest stay; eliminating involutive redundancies turns the
/// weak basis into a Pommaret basis of the saturated ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct SaturationResult<C> {
    pub weak_basis: Vec<Polynomial<C>>,
    /// `None` exactly when the saturation is the whole ring.
    pub basis: Option<PommaretBasis<C>>,
    pub saturated: bool,
}

pub fn saturation_from_basis<F: CoefficientField>(
    ring: &PolyRing<F>,
    basis: &PommaretBasis<F::Elem>,
) -> Result<SaturationResult<F::Elem>, EngineError> {
    let mut weak: Vec<Polynomial<F::Elem>> = Vec::with_capacity(basis.len());
    let mut saturated = true;
    for h in basis.elements() {
        let lead = h.leading_exponent().expect("nonzero");
        if lead.class() == Some(1) {
            saturated = false;
            let e = lead.exponent_of(1);
            let divided = ring
                .divide_by_variable_power(h, 1, e)
                .expect("all terms carry the leading x1 power");
            weak.push(divided);
        } else {
            weak.push(h.clone());
        }
    }
    if weak.iter().any(|h| h.degree() == Some(0)) {
        // a unit appeared: the saturation is the whole ring
        return Ok(SaturationResult {
            weak_basis: weak,
            basis: None,
            saturated,
        });
    }
    let reduced = involutive_autoreduce(ring, weak.clone());
    match pommaret_complete(ring, &reduced, None)? {
        CompletionResult::Basis(b) => Ok(SaturationResult {
            weak_basis: weak,
            basis: Some(b),
            saturated,
        }),
        CompletionResult::DeltaSingular(_) => Err(EngineError::Internal(
            "saturation of a δ-regular ideal must stay δ-regular".into(),
        )),
    }
}

/// The full report. `reg_t` and `a_star_t` are indexed by t = 0..=dim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub reg: u32,
    pub pd: usize,
    pub depth_quotient: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    pub satiety: Satiety,
    pub noether_vars: Vec<usize>,
    pub q_vector: Vec<ExtendedDegree>,
    pub reg_t: Vec<ExtendedDegree>,
    pub a_star_t: Vec<ExtendedDegree>,
    pub resolution_ranks: ResolutionRanks,
    pub extremal_betti: Vec<ExtremalBetti>,
    pub census: ClassDegreeCensus,
}

pub fn invariant_report(profile: &BasisProfile) -> InvariantReport {
    let basics = basic_invariants(profile);
    let mut reg_t = Vec::with_capacity(basics.dim + 1);
    let mut a_star_t = Vec::with_capacity(basics.dim + 1);
    for t in 0..=basics.dim {
        let (r, a) = cohomology_maxima(profile, t).expect("t ranges over 0..=dim");
        reg_t.push(r);
        a_star_t.push(a);
    }
    let reg = regularity(profile);
    let report = InvariantReport {
        reg,
        pd: basics.pd,
        depth_quotient: basics.depth_quotient,
        dim: basics.dim,
        cohen_macaulay: basics.cohen_macaulay,
        satiety: satiety(profile),
        noether_vars: basics.noether_vars,
        q_vector: q_invariants(profile),
        reg_t,
        a_star_t,
        resolution_ranks: resolution_ranks(profile),
        extremal_betti: extremal_betti(profile),
        census: census(profile),
    };
    // internal consistency: these identities hold for every valid basis
    debug_assert_eq!(report.pd + report.depth_quotient + 1, profile.num_vars());
    debug_assert!(report
        .q_vector
        .iter()
        .all(|q| q.finite().map_or(true, |v| v <= reg as i64 - 1)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomial_pommaret_complete, MonomialCompletionOutcome};

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn profile_of(n: usize, gens: &[&[u32]]) -> BasisProfile {
        let ideal = MonomialIdeal::minimal_generators(n, gens.iter().map(|g| ev(g))).unwrap();
        match monomial_pommaret_complete(&ideal, 64).unwrap() {
            MonomialCompletionOutcome::Basis(b) => BasisProfile::from_monomial(&b),
            MonomialCompletionOutcome::NotQuasiStable { .. } => panic!("not quasi-stable"),
        }
    }

    fn m2_profile() -> BasisProfile {
        profile_of(
            3,
            &[&[0, 0, 2], &[0, 1, 1], &[0, 2, 0], &[1, 0, 1], &[1, 1, 0], &[2, 0, 0]],
        )
    }

    fn x2_y2_profile() -> BasisProfile {
        profile_of(2, &[&[2, 0], &[0, 2]])
    }

    #[test]
    fn census_of_m2() {
        let c = census(&m2_profile());
        assert_eq!(c.by_class.get(&1), Some(&3));
        assert_eq!(c.by_class.get(&2), Some(&2));
        assert_eq!(c.by_class.get(&3), Some(&1));
        assert_eq!(c.total, 6);
    }

    #[test]
    fn census_of_completed_pair() {
        let c = census(&x2_y2_profile());
        assert_eq!(c.by_class_and_degree.get(&(1, 2)), Some(&1));
        assert_eq!(c.by_class_and_degree.get(&(1, 3)), Some(&1));
        assert_eq!(c.by_class_and_degree.get(&(2, 2)), Some(&1));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&m2_profile()), 2);
        assert_eq!(regularity(&x2_y2_profile()), 3);
    }

    #[test]
    fn basic_invariants_examples() {
        let b = basic_invariants(&m2_profile());
        assert_eq!((b.pd, b.depth_quotient, b.dim), (2, 0, 0));
        assert!(b.cohen_macaulay);
        assert!(b.noether_vars.is_empty());
        let b = basic_invariants(&x2_y2_profile());
        assert_eq!((b.pd, b.depth_quotient, b.dim), (1, 0, 0));
        assert!(b.cohen_macaulay);
    }

    #[test]
    fn satiety_examples() {
        assert_eq!(satiety(&m2_profile()), Satiety::Degree(2));
        assert_eq!(satiety(&x2_y2_profile()), Satiety::Degree(3));
        // no class-one elements: saturated
        let saturated = profile_of(3, &[&[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(satiety(&saturated), Satiety::Saturated);
        // a power of the top variable is saturated for any n ≥ 2
        let principal = profile_of(3, &[&[0, 0, 4]]);
        assert_eq!(satiety(&principal), Satiety::Saturated);
    }

    #[test]
    fn q_vector_examples() {
        assert_eq!(
            q_invariants(&x2_y2_profile()),
            vec![ExtendedDegree::Finite(2), ExtendedDegree::Finite(1)]
        );
        assert_eq!(
            q_invariants(&m2_profile()),
            vec![
                ExtendedDegree::Finite(1),
                ExtendedDegree::Finite(1),
                ExtendedDegree::Finite(1)
            ]
        );
        // empty class yields the sentinel
        let p = profile_of(3, &[&[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(q_invariants(&p)[0], ExtendedDegree::MinusInfinity);
    }

    #[test]
    fn cohomology_maxima_examples() {
        let (reg0, a0) = cohomology_maxima(&m2_profile(), 0).unwrap();
        assert_eq!(reg0, ExtendedDegree::Finite(1));
        assert_eq!(a0, ExtendedDegree::Finite(1));
        assert!(cohomology_maxima(&m2_profile(), 1).is_err());
        // all leading classes up to t+1 empty: both maxima are −∞
        let p = profile_of(3, &[&[0, 1, 1], &[0, 0, 2]]);
        let (regt, at) = cohomology_maxima(&p, 0).unwrap();
        assert_eq!(regt, ExtendedDegree::MinusInfinity);
        assert_eq!(at, ExtendedDegree::MinusInfinity);
    }

    #[test]
    fn resolution_ranks_examples() {
        assert_eq!(resolution_ranks(&m2_profile()).total, vec![6, 8, 3]);
        assert_eq!(resolution_ranks(&x2_y2_profile()).total, vec![3, 2]);
        // the two-element sharp fixture
        let sharp = profile_of(3, &[&[0, 0, 2], &[0, 1, 1]]);
        assert_eq!(resolution_ranks(&sharp).total, vec![2, 1]);
    }

    #[test]
    fn bigraded_ranks_of_m2() {
        let ranks = resolution_ranks(&m2_profile());
        assert_eq!(ranks.bigraded.get(&(0, 2)), Some(&6));
        assert_eq!(ranks.bigraded.get(&(1, 3)), Some(&8));
        assert_eq!(ranks.bigraded.get(&(2, 4)), Some(&3));
    }

    #[test]
    fn extremal_betti_examples() {
        assert_eq!(
            extremal_betti(&m2_profile()),
            vec![ExtremalBetti { i: 2, j: 4, value: 3 }]
        );
        assert_eq!(
            extremal_betti(&x2_y2_profile()),
            vec![ExtremalBetti { i: 1, j: 4, value: 1 }]
        );
    }

    #[test]
    fn hilbert_series_examples() {
        let hs = hilbert_series(&x2_y2_profile());
        let expected = [0, 0, 2, 4, 5, 6, 7, 8, 9];
        for (q, &want) in expected.iter().enumerate() {
            assert_eq!(hs.coefficient(q as u32), want, "degree {q}");
            assert_eq!(
                HilbertSeries::cone_count(&x2_y2_profile(), q as u32) as i64,
                want
            );
        }
        let m2 = hilbert_series(&m2_profile());
        assert_eq!(m2.numerator, vec![0, 0, 6, -8, 3]);
        for q in 2..=8u32 {
            assert_eq!(
                m2.coefficient(q),
                binomial(q as u64 + 2, 2) as i64,
                "all monomials of degree {q}"
            );
        }
        // principal top-variable power: full cone
        let principal = profile_of(3, &[&[0, 0, 4]]);
        let hsp = hilbert_series(&principal);
        assert_eq!(hsp.numerator, vec![0, 0, 0, 0, 1]);
        assert_eq!(hsp.coefficient(6), binomial(4, 2) as i64);
    }

    #[test]
    fn alternating_rank_sums_match_numerator() {
        for profile in [m2_profile(), x2_y2_profile()] {
            let ranks = resolution_ranks(&profile);
            let hs = hilbert_series(&profile);
            let mut sums: BTreeMap<u32, i64> = BTreeMap::new();
            for (&(i, j), &r) in &ranks.bigraded {
                let signed = if i % 2 == 0 { r as i64 } else { -(r as i64) };
                *sums.entry(j).or_insert(0) += signed;
            }
            for (j, &coeff) in hs.numerator.iter().enumerate() {
                assert_eq!(
                    sums.get(&(j as u32)).copied().unwrap_or(0),
                    coeff,
                    "degree {j}"
                );
            }
        }
    }

    #[test]
    fn full_report_is_consistent() {
        let report = invariant_report(&m2_profile());
        assert_eq!(report.reg, 2);
        assert_eq!(report.pd + report.depth_quotient + 1, 3);
        assert_eq!(report.reg_t.len(), report.dim + 1);
        // satiety never exceeds regularity
        if let Satiety::Degree(s) = report.satiety {
            assert!(s <= report.reg);
        }
    }
}
