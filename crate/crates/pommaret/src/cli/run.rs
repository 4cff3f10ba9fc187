//! Command dispatch: parse, compute, self-check, report.

use super::parse::{parse_ideal_file, IdealFile, ParseError};
use super::report::{
    format_edge, format_monomial, input_digest, BasisSection,
    CoordinateChangeReport, FlagsSection, GinSection, HilbertSection, MethodVerdict,
    QuotientRow, QuotientsSection, Report, RingSection, SaturationSection, Verdicts,
};
use crate::complin::{gin_sample, is_componentwise_linear, minimal_resolution_test};
use crate::engine::{
    find_delta_regular_coordinates, pommaret_complete,
    verify_closure, CompletionResult, EngineError, PommaretBasis, Repair, RepairOptions,
};
use crate::field::{CoefficientField, FieldError, PrimeField, Rationals};
use crate::invariants::{
    hilbert_series, invariant_report, regularity, saturation_from_basis, BasisProfile,
};
use crate::linear::LinearChange;
use crate::monomial::{
    inverse_p_ordering, is_stable, linear_quotients_check, monomial_pommaret_complete, p_graph,
    quasi_stable_breakdown, MonomialCompletionOutcome, MonomialIdeal, MonomialPommaretBasis,
};
use crate::poly::{PolyRing, Polynomial, Term};
use crate::ring::RingContext;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Basis,
    Invariants,
    QuasiStable,
    Stable,
    Complin,
    Quotients,
    Hilbert,
    Saturate,
    GinSample,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Basis => "basis",
            Command::Invariants => "invariants",
            Command::QuasiStable => "quasistable",
            Command::Stable => "stable",
            Command::Complin => "complin",
            Command::Quotients => "quotients",
            Command::Hilbert => "hilbert",
            Command::Saturate => "saturate",
            Command::GinSample => "gin-sample",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformMode {
    Auto,
    Off,
}

#[derive(Clone, Debug)]
pub struct Flags {
    /// Overrides the file's `char:` line when set.
    pub characteristic: Option<u64>,
    pub transform: TransformMode,
    pub seed: u64,
    pub trials: u32,
    pub max_degree: Option<u32>,
    pub json: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            characteristic: None,
            transform: TransformMode::Auto,
            seed: 0,
            trials: 16,
            max_degree: None,
            json: false,
        }
    }
}

/// Errors mapped onto the exit codes: input problems exit 2, unresolved
/// δ-singularity exits 3, a failed self-check exits 4.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("command `{command}` accepts monomial generators only")]
    NonMonomialInput { command: &'static str },
    #[error("input error: {0}")]
    Input(String),
    #[error("δ-singular coordinates: {0}")]
    DeltaSingular(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::NonMonomialInput { .. } | CliError::Input(_) => 2,
            CliError::DeltaSingular(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Internal(msg) => CliError::Internal(msg),
            EngineError::RepairExhausted { attempts } => CliError::DeltaSingular(format!(
                "coordinate repair exhausted after {attempts} random attempts"
            )),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn run(command: Command, file_text: &str, flags: &Flags) -> Result<Report, CliError> {
    let parsed = parse_ideal_file(file_text)?;
    let characteristic = flags
        .characteristic
        .unwrap_or_else(|| parsed.context.characteristic());
    let context = RingContext::new(parsed.context.names().to_vec(), characteristic)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let digest = input_digest(file_text);
    if characteristic == 0 {
        let ring = PolyRing::new(context, Rationals);
        run_typed(&ring, &parsed, command, flags, digest)
    } else {
        let ring = PolyRing::new(context, PrimeField::new(characteristic)?);
        run_typed(&ring, &parsed, command, flags, digest)
    }
}

fn convert_generators<F: CoefficientField>(
    ring: &PolyRing<F>,
    file: &IdealFile,
) -> Result<Vec<Polynomial<F::Elem>>, CliError> {
    let mut out = Vec::with_capacity(file.generators.len());
    for (terms, line) in file.generators.iter().zip(&file.generator_lines) {
        let mut converted = Vec::with_capacity(terms.len());
        for (coeff, exponent) in terms {
            let c = ring
                .field
                .from_ratio(coeff.numer(), coeff.denom())
                .map_err(|e| CliError::Input(format!("line {line}: {e}")))?;
            if ring.field.is_zero(&c) {
                continue;
            }
            converted.push(Term {
                coefficient: c,
                exponent: exponent.clone(),
            });
        }
        let poly = ring.normalize(converted);
        if poly.is_zero() {
            return Err(CliError::Input(format!(
                "line {line}: generator vanishes in characteristic {}",
                ring.field.characteristic()
            )));
        }
        out.push(poly);
    }
    Ok(out)
}

fn repair_options(flags: &Flags) -> RepairOptions {
    RepairOptions {
        seed: flags.seed,
        ..RepairOptions::default()
    }
}

/// Basis with the transform policy applied: auto-repair coordinates, or
/// fail with the δ-singularity witness when transforms are off.
fn basis_pipeline<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    flags: &Flags,
) -> Result<Repair<F::Elem>, CliError> {
    match flags.transform {
        TransformMode::Auto => {
            Ok(find_delta_regular_coordinates(ring, gens, &repair_options(flags))?)
        }
        TransformMode::Off => match pommaret_complete(ring, gens, flags.max_degree)? {
            CompletionResult::Basis(basis) => Ok(Repair {
                change: LinearChange::identity(ring.num_vars(), &ring.field),
                transformed: gens.to_vec(),
                basis,
            }),
            CompletionResult::DeltaSingular(witness) => Err(CliError::DeltaSingular(format!(
                "leading ideal {:?} fails the colon equality at variable {}",
                witness
                    .leading_ideal
                    .generators()
                    .iter()
                    .map(|e| format_monomial(&ring.context, e))
                    .collect::<Vec<_>>(),
                witness.failing_variable
            ))),
        },
    }
}

fn change_report<F: CoefficientField>(
    ring: &PolyRing<F>,
    change: &LinearChange<F::Elem>,
) -> CoordinateChangeReport {
    CoordinateChangeReport {
        is_identity: change.is_identity(&ring.field),
        matrix: change
            .matrix()
            .iter()
            .map(|row| row.iter().map(|c| ring.field.format(c)).collect())
            .collect(),
    }
}

fn basis_section<F: CoefficientField>(
    ring: &PolyRing<F>,
    basis: &PommaretBasis<F::Elem>,
) -> Result<BasisSection, CliError> {
    // self-check before anything is emitted
    if verify_closure(ring, basis.elements()).is_err() {
        return Err(CliError::Internal(
            "emitted basis fails the closure re-check".into(),
        ));
    }
    Ok(BasisSection {
        size: basis.len(),
        elements: basis.elements().iter().map(|h| ring.format(h)).collect(),
        leading_terms: basis
            .leading_exponents()
            .iter()
            .map(|e| format_monomial(&ring.context, e))
            .collect(),
        regularity: basis.max_degree(),
    })
}

fn monomial_ideal_of<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    command: &'static str,
) -> Result<MonomialIdeal, CliError> {
    if gens.iter().any(|g| g.num_terms() != 1) {
        return Err(CliError::NonMonomialInput { command });
    }
    MonomialIdeal::minimal_generators(
        ring.num_vars(),
        gens.iter().map(|g| g.leading_exponent().unwrap().clone()),
    )
    .map_err(|e| CliError::Input(e.to_string()))
}

fn monomial_basis_of(ideal: &MonomialIdeal) -> Result<MonomialPommaretBasis, CliError> {
    let cap = (2 * ideal.max_generator_degree() * ideal.num_vars() as u32)
        .max(ideal.max_generator_degree() + 1);
    match monomial_pommaret_complete(ideal, cap).map_err(|e| CliError::Input(e.to_string()))? {
        MonomialCompletionOutcome::Basis(b) => Ok(b),
        MonomialCompletionOutcome::NotQuasiStable { witness } => Err(CliError::DeltaSingular(
            format!(
                "the monomial ideal is not quasi-stable: completion keeps growing at degree {}",
                witness.degree()
            ),
        )),
    }
}

fn run_typed<F: CoefficientField>(
    ring: &PolyRing<F>,
    file: &IdealFile,
    command: Command,
    flags: &Flags,
    digest: String,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let gens = convert_generators(ring, file)?;
    let mut report = Report {
        command: command.name().to_string(),
        input_digest: digest,
        ring: RingSection::new(&ring.context, ring.order.label()),
        flags: FlagsSection {
            transform: match flags.transform {
                TransformMode::Auto => "auto".into(),
                TransformMode::Off => "off".into(),
            },
            seed: flags.seed,
            trials: flags.trials,
            max_degree: flags.max_degree,
        },
        coordinate_change: None,
        basis: None,
        invariants: None,
        verdicts: None,
        timing_ms: 0,
    };

    match command {
        Command::Basis => {
            let repair = basis_pipeline(ring, &gens, flags)?;
            report.coordinate_change = Some(change_report(ring, &repair.change));
            report.basis = Some(basis_section(ring, &repair.basis)?);
        }
        Command::Invariants => {
            let repair = basis_pipeline(ring, &gens, flags)?;
            report.coordinate_change = Some(change_report(ring, &repair.change));
            report.basis = Some(basis_section(ring, &repair.basis)?);
            report.invariants = Some(invariant_report(&BasisProfile::from_pommaret(
                &repair.basis,
            )));
        }
        Command::QuasiStable => {
            let ideal = monomial_ideal_of(ring, &gens, "quasistable")?;
            let breakdown =
                quasi_stable_breakdown(&ideal).map_err(|e| CliError::Input(e.to_string()))?;
            let verdict = breakdown[0].1;
            if breakdown.iter().any(|(_, v)| *v != verdict) {
                return Err(CliError::Internal(format!(
                    "quasi-stability methods disagree: {breakdown:?}"
                )));
            }
            report.verdicts = Some(Verdicts::QuasiStable {
                verdict,
                methods: breakdown
                    .into_iter()
                    .map(|(method, verdict)| MethodVerdict { method, verdict })
                    .collect(),
            });
        }
        Command::Stable => {
            let ideal = monomial_ideal_of(ring, &gens, "stable")?;
            let stable = is_stable(&ideal).map_err(|e| CliError::Input(e.to_string()))?;
            let quasi = quasi_stable_breakdown(&ideal)
                .map_err(|e| CliError::Input(e.to_string()))?
                .iter()
                .all(|(_, v)| *v);
            if stable && !quasi {
                return Err(CliError::Internal(
                    "a stable ideal must be quasi-stable".into(),
                ));
            }
            report.verdicts = Some(Verdicts::Stable {
                stable,
                quasi_stable: quasi,
            });
        }
        Command::Complin => {
            let (verdict, repair) = match flags.transform {
                TransformMode::Auto => is_componentwise_linear(ring, &gens, &repair_options(flags))
                    .map_err(CliError::from)?,
                TransformMode::Off => {
                    if !crate::engine::is_componentwise_delta_regular(ring, &gens)? {
                        return Err(CliError::DeltaSingular(
                            "coordinates are not componentwise δ-regular and transforms are off"
                                .into(),
                        ));
                    }
                    is_componentwise_linear(ring, &gens, &repair_options(flags))
                        .map_err(CliError::from)?
                }
            };
            // cross-check against the constant-free-syzygy criterion
            let minimal = minimal_resolution_test(ring, &repair.basis);
            if minimal != verdict.verdict {
                return Err(CliError::Internal(
                    "componentwise-linearity verdict disagrees with the syzygy scan".into(),
                ));
            }
            report.coordinate_change = Some(change_report(ring, &repair.change));
            report.basis = Some(basis_section(ring, &repair.basis)?);
            report.verdicts = Some(Verdicts::Complin(verdict));
        }
        Command::Quotients => {
            let basis = if gens.iter().all(|g| g.num_terms() == 1) {
                let ideal = monomial_ideal_of(ring, &gens, "quotients")?;
                monomial_basis_of(&ideal)?
            } else {
                let repair = basis_pipeline(ring, &gens, flags)?;
                report.coordinate_change = Some(change_report(ring, &repair.change));
                monomial_basis_of(&repair.basis.leading_ideal())?
            };
            let ordering = inverse_p_ordering(&basis);
            let graph = p_graph(&basis).map_err(|e| CliError::Internal(e.to_string()))?;
            if !graph.is_topologically_ordered() {
                return Err(CliError::Internal(
                    "inverse P-ordering is not topological".into(),
                ));
            }
            let check = linear_quotients_check(&ordering, ring.num_vars());
            if !check.colon_identity_holds {
                return Err(CliError::Internal(
                    "colon identity fails on a completed basis".into(),
                ));
            }
            report.verdicts = Some(Verdicts::Quotients(QuotientsSection {
                ordering: ordering
                    .iter()
                    .map(|e| format_monomial(&ring.context, e))
                    .collect(),
                p_graph_edges: graph
                    .edges
                    .iter()
                    .map(|e| format_edge(&ring.context, e, &graph.vertices))
                    .collect(),
                rows: check
                    .steps
                    .iter()
                    .map(|s| QuotientRow {
                        index: s.index,
                        element: format_monomial(&ring.context, &ordering[s.index - 1]),
                        colon_generators: s
                            .colon
                            .generators()
                            .iter()
                            .map(|e| format_monomial(&ring.context, e))
                            .collect(),
                        variable_generated: s.variable_generated,
                        equals_non_multiplicative: s.equals_non_multiplicative,
                    })
                    .collect(),
                colon_identity_holds: check.colon_identity_holds,
                has_linear_quotients: check.has_linear_quotients,
            }));
        }
        Command::Hilbert => {
            let repair = basis_pipeline(ring, &gens, flags)?;
            report.coordinate_change = Some(change_report(ring, &repair.change));
            let profile = BasisProfile::from_pommaret(&repair.basis);
            let series = hilbert_series(&profile);
            let max_degree = flags.max_degree.unwrap_or(regularity(&profile) + 3);
            report.verdicts = Some(Verdicts::Hilbert(HilbertSection {
                numerator: series.numerator.clone(),
                denominator_power: ring.num_vars(),
                max_degree,
                ideal_coefficients: (0..=max_degree).map(|q| series.coefficient(q)).collect(),
                quotient_coefficients: (0..=max_degree)
                    .map(|q| series.quotient_coefficient(q))
                    .collect(),
            }));
        }
        Command::Saturate => {
            let repair = basis_pipeline(ring, &gens, flags)?;
            report.coordinate_change = Some(change_report(ring, &repair.change));
            report.basis = Some(basis_section(ring, &repair.basis)?);
            let saturation = saturation_from_basis(ring, &repair.basis)?;
            report.verdicts = Some(Verdicts::Saturate(SaturationSection {
                weak_basis: saturation
                    .weak_basis
                    .iter()
                    .map(|h| ring.format(h))
                    .collect(),
                basis: saturation
                    .basis
                    .as_ref()
                    .map(|b| b.elements().iter().map(|h| ring.format(h)).collect()),
                saturation_is_unit: saturation.basis.is_none(),
                saturated: saturation.saturated,
            }));
        }
        Command::GinSample => {
            let sample = gin_sample(ring, &gens, flags.trials.max(1), flags.seed, 10)?;
            let mut section = GinSection::from_report(&sample, &ring.context);
            // transfer comparison: invariants of the input against the
            // candidate's (coordinates auto-repaired for the comparison)
            if let Some(candidate) = &sample.candidate {
                let repair =
                    find_delta_regular_coordinates(ring, &gens, &repair_options(flags))?;
                report.coordinate_change = Some(change_report(ring, &repair.change));
                let own = invariant_report(&BasisProfile::from_pommaret(&repair.basis));
                let candidate_basis = monomial_basis_of(candidate)?;
                let gin_invariants =
                    invariant_report(&BasisProfile::from_monomial(&candidate_basis));
                section.invariants_match = Some(
                    own.reg == gin_invariants.reg
                        && own.pd == gin_invariants.pd
                        && own.depth_quotient == gin_invariants.depth_quotient
                        && own.cohen_macaulay == gin_invariants.cohen_macaulay
                        && own.satiety == gin_invariants.satiety
                        && own.reg_t == gin_invariants.reg_t
                        && own.a_star_t == gin_invariants.a_star_t
                        && own.extremal_betti == gin_invariants.extremal_betti,
                );
                section.candidate_invariants = Some(gin_invariants);
                report.invariants = Some(own);
            }
            report.verdicts = Some(Verdicts::GinSample(section));
        }
    }
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GORENSTEIN: &str = "ring: x, y, z\nideal:\nz^2 - x*y\ny*z\ny^2\nx*z\nx^2\n";
    const M2: &str =
        "ring: x, y, z\nideal:\nz^2\ny*z\ny^2\nx*z\nx*y\nx^2\n";
    const PAIR: &str = "ring: x, y\nideal:\nx^2\ny^2\n";

    #[test]
    fn invariants_of_m2_via_run() {
        let report = run(Command::Invariants, M2, &Flags::default()).unwrap();
        let inv = report.invariants.unwrap();
        assert_eq!(inv.reg, 2);
        assert_eq!(inv.pd, 2);
        assert_eq!(inv.depth_quotient, 0);
        assert_eq!(inv.dim, 0);
        assert_eq!(inv.resolution_ranks.total, vec![6, 8, 3]);
        assert_eq!(inv.extremal_betti.len(), 1);
        assert_eq!(
            (inv.extremal_betti[0].i, inv.extremal_betti[0].j, inv.extremal_betti[0].value),
            (2, 4, 3)
        );
    }

    #[test]
    fn quotients_of_m2_via_run() {
        let report = run(Command::Quotients, M2, &Flags::default()).unwrap();
        match report.verdicts.unwrap() {
            Verdicts::Quotients(section) => {
                assert_eq!(
                    section.ordering,
                    vec!["z^2", "y*z", "y^2", "x*z", "x*y", "x^2"]
                );
                assert_eq!(section.p_graph_edges.len(), 8);
                assert!(section.colon_identity_holds);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
    }

    #[test]
    fn basis_with_transform_off_fails_on_singular_input() {
        let text = "ring: x, y\nideal:\nx\n";
        let flags = Flags {
            transform: TransformMode::Off,
            ..Flags::default()
        };
        let err = run(Command::Basis, text, &flags).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        // auto mode repairs it
        let ok = run(Command::Basis, text, &Flags::default()).unwrap();
        assert!(!ok.coordinate_change.unwrap().is_identity);
    }

    #[test]
    fn quasistable_rejects_polynomial_input() {
        let err = run(Command::QuasiStable, GORENSTEIN, &Flags::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let ok = run(Command::QuasiStable, PAIR, &Flags::default()).unwrap();
        match ok.verdicts.unwrap() {
            Verdicts::QuasiStable { verdict, methods } => {
                assert!(verdict);
                assert_eq!(methods.len(), 5);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
    }

    #[test]
    fn gin_sample_on_gorenstein_file() {
        let flags = Flags {
            seed: 7,
            trials: 16,
            ..Flags::default()
        };
        let report = run(Command::GinSample, GORENSTEIN, &flags).unwrap();
        match report.verdicts.unwrap() {
            Verdicts::GinSample(section) => {
                assert!(section.unanimous, "votes: {:?}", section.votes);
                // canonical ascending order of the six generators
                assert_eq!(
                    section.candidate.unwrap(),
                    vec!["x*y", "x*z", "y^2", "y*z", "z^2", "x^3"]
                );
                assert_eq!(section.candidate_quasi_stable, Some(true));
                assert_eq!(section.candidate_stable, Some(true));
                assert_eq!(section.invariants_match, Some(true));
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
    }

    #[test]
    fn json_determinism_excluding_timing() {
        let flags = Flags {
            seed: 5,
            ..Flags::default()
        };
        let a = run(Command::Invariants, GORENSTEIN, &flags).unwrap();
        let b = run(Command::Invariants, GORENSTEIN, &flags).unwrap();
        let strip = |r: &Report| {
            let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
            v.as_object_mut().unwrap().remove("timing_ms");
            v
        };
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn emitted_basis_reparses_and_reverifies() {
        let report = run(Command::Basis, GORENSTEIN, &Flags::default()).unwrap();
        let basis = report.basis.unwrap();
        let mut text = String::from("ring: x, y, z\nideal:\n");
        for e in &basis.elements {
            text.push_str(e);
            text.push('\n');
        }
        let reparsed = run(Command::Basis, &text, &Flags::default()).unwrap();
        // already a Pommaret basis: identity change and the same elements
        assert!(reparsed.coordinate_change.unwrap().is_identity);
        assert_eq!(reparsed.basis.unwrap().elements, basis.elements);
    }

    #[test]
    fn hilbert_and_saturate_sections() {
        let report = run(Command::Hilbert, PAIR, &Flags::default()).unwrap();
        match report.verdicts.unwrap() {
            Verdicts::Hilbert(section) => {
                // dim I_q for <x^2, y^2>: 0, 0, 2, 4, 5, 6, ...
                assert_eq!(section.denominator_power, 2);
                assert_eq!(section.ideal_coefficients[..6], [0, 0, 2, 4, 5, 6]);
                assert_eq!(section.quotient_coefficients[..4], [1, 2, 1, 0]);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
        let report = run(Command::Saturate, M2, &Flags::default()).unwrap();
        match report.verdicts.unwrap() {
            Verdicts::Saturate(section) => {
                assert!(section.saturation_is_unit);
                assert!(!section.saturated);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
        // a saturated fixture keeps its basis
        let saturated = "ring: x, y, z\nideal:\ny*z\nz^2\n";
        let report = run(Command::Saturate, saturated, &Flags::default()).unwrap();
        match report.verdicts.unwrap() {
            Verdicts::Saturate(section) => {
                assert!(section.saturated);
                assert_eq!(section.basis.unwrap(), vec!["y*z", "z^2"]);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
    }

    #[test]
    fn characteristic_flag_overrides_file() {
        let flags = Flags {
            characteristic: Some(7),
            ..Flags::default()
        };
        let report = run(Command::Basis, PAIR, &flags).unwrap();
        assert_eq!(report.ring.characteristic, 7);
        let bad = Flags {
            characteristic: Some(6),
            ..Flags::default()
        };
        assert_eq!(
            run(Command::Basis, PAIR, &bad).unwrap_err().exit_code(),
            2
        );
    }
}
