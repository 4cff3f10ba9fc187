//! Report structures. JSON output is deterministic for fixed input, flags
//! and seed: field order is fixed, maps are sorted, rationals are exact
//! strings. Timing is the one field excluded from that guarantee.

use crate::complin::{ComponentwiseVerdict, GinSampleReport};
use crate::exponent::ExponentVector;
use crate::invariants::InvariantReport;
use crate::monomial::{PEdge, QuasiStableMethod};
use crate::ring::RingContext;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub ring: RingSection,
    pub flags: FlagsSection,
    pub coordinate_change: Option<CoordinateChangeReport>,
    pub basis: Option<BasisSection>,
    pub invariants: Option<InvariantReport>,
    pub verdicts: Option<Verdicts>,
    /// Wall-clock milliseconds; excluded from determinism comparisons.
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RingSection {
    pub variables: Vec<String>,
    pub characteristic: u64,
    pub term_order: String,
    /// The reversed-variable convention, stated on every report.
    pub convention: String,
}

impl RingSection {
    pub fn new(context: &RingContext, order_label: &str) -> Self {
        RingSection {
            variables: context.names().to_vec(),
            characteristic: context.characteristic(),
            term_order: order_label.to_string(),
            convention: convention_note(),
        }
    }
}

pub fn convention_note() -> String {
    "variables are numbered x1..xn with x1 lowest; the order equals standard degrevlex \
     on the reversed variable list"
        .to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlagsSection {
    pub transform: String,
    pub seed: u64,
    pub trials: u32,
    pub max_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoordinateChangeReport {
    pub is_identity: bool,
    /// Row i is the image of variable i+1, exact entries.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisSection {
    pub size: usize,
    /// Elements in canonical order (ascending leading term).
    pub elements: Vec<String>,
    pub leading_terms: Vec<String>,
    pub regularity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MethodVerdict {
    pub method: QuasiStableMethod,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientRow {
    pub index: usize,
    pub element: String,
    pub colon_generators: Vec<String>,
    pub variable_generated: bool,
    pub equals_non_multiplicative: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PGraphEdgeReport {
    pub from: String,
    pub to: String,
    pub variable: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientsSection {
    pub ordering: Vec<String>,
    pub p_graph_edges: Vec<PGraphEdgeReport>,
    pub rows: Vec<QuotientRow>,
    pub colon_identity_holds: bool,
    pub has_linear_quotients: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HilbertSection {
    /// Numerator coefficients over (1−t)^n for the ideal's series.
    pub numerator: Vec<i64>,
    pub denominator_power: usize,
    pub max_degree: u32,
    pub ideal_coefficients: Vec<i64>,
    pub quotient_coefficients: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SaturationSection {
    pub weak_basis: Vec<String>,
    /// `None` when the saturation is the whole ring.
    pub basis: Option<Vec<String>>,
    pub saturation_is_unit: bool,
    pub saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GinVoteReport {
    pub leading_ideal: Vec<String>,
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GinSection {
    /// Probabilistic sampling: a vote, never a certificate.
    pub experimental: bool,
    pub trials: u32,
    pub seed: u64,
    pub entry_bound: i64,
    pub votes: Vec<GinVoteReport>,
    pub candidate: Option<Vec<String>>,
    pub tie: bool,
    pub unanimous: bool,
    pub candidate_quasi_stable: Option<bool>,
    pub candidate_stable: Option<bool>,
    pub rejected_draws: u32,
    pub positive_characteristic_warning: Option<String>,
    /// Transferable invariants of the input match the candidate's.
    pub invariants_match: Option<bool>,
    pub candidate_invariants: Option<InvariantReport>,
}

impl GinSection {
    pub fn from_report(report: &GinSampleReport, context: &RingContext) -> Self {
        GinSection {
            experimental: report.experimental,
            trials: report.trials,
            seed: report.seed,
            entry_bound: report.entry_bound,
            votes: report
                .votes
                .iter()
                .map(|v| GinVoteReport {
                    leading_ideal: v
                        .leading_ideal
                        .generators()
                        .iter()
                        .map(|e| format_monomial(context, e))
                        .collect(),
                    count: v.count,
                })
                .collect(),
            candidate: report.candidate.as_ref().map(|c| {
                c.generators()
                    .iter()
                    .map(|e| format_monomial(context, e))
                    .collect()
            }),
            tie: report.tie,
            unanimous: report.votes.len() == 1,
            candidate_quasi_stable: report.candidate_quasi_stable,
            candidate_stable: report.candidate_stable,
            rejected_draws: report.rejected_draws,
            positive_characteristic_warning: (context.characteristic() != 0).then(|| {
                "generic initial ideals in positive characteristic need not be stable".to_string()
            }),
            invariants_match: None,
            candidate_invariants: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Verdicts {
    #[serde(rename = "quasistable")]
    QuasiStable {
        verdict: bool,
        methods: Vec<MethodVerdict>,
    },
    #[serde(rename = "stable")]
    Stable { stable: bool, quasi_stable: bool },
    #[serde(rename = "componentwise-linear")]
    Complin(ComponentwiseVerdict),
    #[serde(rename = "quotients")]
    Quotients(QuotientsSection),
    #[serde(rename = "hilbert")]
    Hilbert(HilbertSection),
    #[serde(rename = "saturate")]
    Saturate(SaturationSection),
    #[serde(rename = "gin-sample")]
    GinSample(GinSection),
}

/// Render a monomial with the declared variable names.
pub fn format_monomial(context: &RingContext, e: &ExponentVector) -> String {
    if e.is_zero() {
        return "1".to_string();
    }
    let mut factors = Vec::new();
    for (i, &exp) in e.entries().iter().enumerate() {
        if exp == 1 {
            factors.push(context.name(i + 1).to_string());
        } else if exp > 1 {
            factors.push(format!("{}^{}", context.name(i + 1), exp));
        }
    }
    factors.join("*")
}

pub fn format_edge(context: &RingContext, edge: &PEdge, vertices: &[ExponentVector]) -> PGraphEdgeReport {
    PGraphEdgeReport {
        from: format_monomial(context, &vertices[edge.from]),
        to: format_monomial(context, &vertices[edge.to]),
        variable: context.name(edge.variable).to_string(),
    }
}

/// FNV-1a over the raw input text; stable across runs and platforms.
pub fn input_digest(text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.as_bytes() {
        hash ^= *byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Human-readable rendering; prints the convention and term order up
    /// front.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "ring: {} (char {})\n",
            self.ring.variables.join(", "),
            self.ring.characteristic
        ));
        out.push_str(&format!("order: {}\n", self.ring.term_order));
        out.push_str(&format!("note: {}\n", self.ring.convention));
        if let Some(change) = &self.coordinate_change {
            if change.is_identity {
                out.push_str("coordinates: unchanged\n");
            } else {
                out.push_str("coordinate change (row i = image of variable i):\n");
                for row in &change.matrix {
                    out.push_str(&format!("  [{}]\n", row.join(", ")));
                }
            }
        }
        if let Some(basis) = &self.basis {
            out.push_str(&format!(
                "basis ({} elements, regularity {}):\n",
                basis.size, basis.regularity
            ));
            for e in &basis.elements {
                out.push_str(&format!("  {e}\n"));
            }
        }
        if let Some(inv) = &self.invariants {
            out.push_str(&format!(
                "reg {}  pd {}  depth(P/I) {}  dim {}  cohen_macaulay {}\n",
                inv.reg, inv.pd, inv.depth_quotient, inv.dim, inv.cohen_macaulay
            ));
            let satiety = match inv.satiety {
                crate::invariants::Satiety::Saturated => "saturated".to_string(),
                crate::invariants::Satiety::Degree(d) => d.to_string(),
            };
            out.push_str(&format!(
                "satiety {}  q-vector {}\n",
                satiety,
                render_degrees(&inv.q_vector)
            ));
            out.push_str(&format!(
                "resolution ranks {:?}  reg_t {}  a*_t {}\n",
                inv.resolution_ranks.total,
                render_degrees(&inv.reg_t),
                render_degrees(&inv.a_star_t)
            ));
            let extremal: Vec<String> = inv
                .extremal_betti
                .iter()
                .map(|e| format!("({}, {}): {}", e.i, e.j, e.value))
                .collect();
            out.push_str(&format!("extremal betti {{{}}}\n", extremal.join(", ")));
        }
        if let Some(verdicts) = &self.verdicts {
            out.push_str(&render_verdicts(verdicts));
        }
        out.push_str(&format!("timing: {} ms\n", self.timing_ms));
        out
    }
}

fn render_degrees(degrees: &[crate::invariants::ExtendedDegree]) -> String {
    let parts: Vec<String> = degrees
        .iter()
        .map(|d| match d.finite() {
            Some(v) => v.to_string(),
            None => "-inf".to_string(),
        })
        .collect();
    format!("({})", parts.join(", "))
}

fn render_verdicts(verdicts: &Verdicts) -> String {
    let mut out = String::new();
    match verdicts {
        Verdicts::QuasiStable { verdict, methods } => {
            out.push_str(&format!("quasi-stable: {verdict}\n"));
            for m in methods {
                out.push_str(&format!("  {:?}: {}\n", m.method, m.verdict));
            }
        }
        Verdicts::Stable {
            stable,
            quasi_stable,
        } => {
            out.push_str(&format!(
                "stable: {stable}   quasi-stable: {quasi_stable}\n"
            ));
        }
        Verdicts::Complin(v) => {
            out.push_str(&format!(
                "componentwise linear: {}   (leading ideal stable: {}, beta0 {} vs {})\n",
                v.verdict, v.leading_ideal_stable, v.beta0_ideal, v.beta0_leading
            ));
            for row in &v.per_degree {
                out.push_str(&format!(
                    "  component degree {}: regularity {} -> linear {}\n",
                    row.degree, row.component_regularity, row.linear
                ));
            }
        }
        Verdicts::Quotients(q) => {
            out.push_str(&format!(
                "inverse P-ordering: {}\n",
                q.ordering.join(", ")
            ));
            out.push_str("P-graph edges:\n");
            for e in &q.p_graph_edges {
                out.push_str(&format!("  {} --{}--> {}\n", e.from, e.variable, e.to));
            }
            out.push_str("colon table:\n");
            for row in &q.rows {
                out.push_str(&format!(
                    "  {:>2}: <previous> : {} = <{}>   variables: {}   exact: {}\n",
                    row.index,
                    row.element,
                    row.colon_generators.join(", "),
                    row.variable_generated,
                    row.equals_non_multiplicative
                ));
            }
            out.push_str(&format!(
                "linear quotients: {}   colon identity: {}\n",
                q.has_linear_quotients, q.colon_identity_holds
            ));
        }
        Verdicts::Hilbert(h) => {
            out.push_str(&format!(
                "series numerator over (1-t)^{}: {:?}\n",
                h.denominator_power, h.numerator
            ));
            out.push_str(&format!(
                "dim I_q,   q = 0..{}: {:?}\n",
                h.max_degree, h.ideal_coefficients
            ));
            out.push_str(&format!(
                "dim (P/I)_q, q = 0..{}: {:?}\n",
                h.max_degree, h.quotient_coefficients
            ));
        }
        Verdicts::Saturate(s) => {
            out.push_str(&format!(
                "saturated: {}   saturation is the whole ring: {}\n",
                s.saturated, s.saturation_is_unit
            ));
            out.push_str(&format!("weak basis: {}\n", s.weak_basis.join(", ")));
            if let Some(basis) = &s.basis {
                out.push_str(&format!("saturation basis: {}\n", basis.join(", ")));
            }
        }
        Verdicts::GinSample(g) => {
            out.push_str(&format!(
                "EXPERIMENTAL gin sample: {} trials, seed {}, entry bound {}\n",
                g.trials, g.seed, g.entry_bound
            ));
            for v in &g.votes {
                out.push_str(&format!(
                    "  {} votes: <{}>\n",
                    v.count,
                    v.leading_ideal.join(", ")
                ));
            }
            match &g.candidate {
                Some(c) => out.push_str(&format!("candidate: <{}>\n", c.join(", "))),
                None => out.push_str("candidate: tie, no silent pick\n"),
            }
            out.push_str(&format!(
                "quasi-stable: {:?}   stable: {:?}   unanimous: {}   rejected draws: {}\n",
                g.candidate_quasi_stable, g.candidate_stable, g.unanimous, g.rejected_draws
            ));
            if let Some(matched) = g.invariants_match {
                out.push_str(&format!("transferable invariants match: {matched}\n"));
            }
            if let Some(warning) = &g.positive_characteristic_warning {
                out.push_str(&format!("warning: {warning}\n"));
            }
        }
    }
    out
}
