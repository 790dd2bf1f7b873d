//! Minimal-ECD / ECID classification of group algebras.
//!
//! Semisimple case (p not dividing |H|): the abelian classification is an
//! exact iff on the maximal orbit size t_w; the non-abelian one is exact
//! when Wedderburn component data is available (supplied, or derived
//! arithmetically over an asserted splitting field) and otherwise falls
//! back to sufficient bounds (commutative complement, b0, half-gamma,
//! square-root window).  Modular case (p | |H|): a Sylow necessary
//! condition plus an exhaustive idempotent census.
//!
//! Every verdict is justified by the rules recorded in the report;
//! "undecided" is a first-class outcome when no rule fires either way.
//! All classification arithmetic is integral (integer square roots by
//! bisection, never floating point).

use crate::arith;
use crate::codes::{self, CodesError, IdempotentSearch};
use crate::cyclotomic::witness_orbit_size;
use crate::field::{FiniteField, PrimePower};
use crate::group::Group;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("characteristic {0} divides |H| = {1}: use the modular path")]
    NotSemisimple(u64, u64),
    #[error("characteristic {0} does not divide |H| = {1}: use the semisimple path")]
    Semisimple(u64, u64),
    #[error("the group is not abelian")]
    NotAbelian,
    #[error("the group is abelian; use the abelian classification")]
    Abelian,
    #[error("b0 requires gamma >= 4, got {0}")]
    GammaTooSmall(u64),
    #[error("Wedderburn data is inconsistent: non-commutative dimension {got} != |H| - [H:H'] = {expected}")]
    InconsistentWedderburn { expected: u64, got: u64 },
    #[error("Wedderburn component ({n}, {d}) violates n >= 2, d >= 1")]
    BadComponent { n: u64, d: u64 },
    #[error("splitting-field assertion contradicts the necessary condition exp(H/H') | q - 1")]
    SplittingAssertionContradicted,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Codes(#[from] CodesError),
}

/// Classification outcome.  `MinimalEcd` is the semisimple form of `Ecid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    MinimalEcd,
    Ecid,
    NotEcid,
    Undecided,
}

impl Verdict {
    pub fn is_certified_ecd(&self) -> bool {
        matches!(self, Verdict::MinimalEcd | Verdict::Ecid)
    }
}

/// One arithmetic rule evaluated during classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleFire {
    /// Descriptive rule identifier, e.g. "max-orbit-dim" or "b0-bound".
    pub rule: String,
    /// The concrete numbers the rule saw.
    pub inputs: String,
    pub holds: bool,
}

/// Key quantities computed on the way to a verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_w: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b0: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqrt_gamma_floor: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqrt_gamma_over_s_ceil: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_component_dim: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    /// Rule that settled the verdict (absent for "undecided").
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decided_by: Option<String>,
    pub rules: Vec<RuleFire>,
    pub quantities: Quantities,
    /// The Wedderburn data the verdict relied on, when one was supplied or
    /// derived.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedderburn: Option<WedderburnData>,
}

impl ClassificationReport {
    fn new() -> ClassificationReport {
        ClassificationReport {
            verdict: Verdict::Undecided,
            decided_by: None,
            rules: Vec::new(),
            quantities: Quantities::default(),
            wedderburn: None,
        }
    }

    fn rule(&mut self, rule: &str, inputs: String, holds: bool) {
        self.rules.push(RuleFire {
            rule: rule.to_string(),
            inputs,
            holds,
        });
    }

    fn decide(&mut self, verdict: Verdict, rule: &str) {
        self.verdict = verdict;
        self.decided_by = Some(rule.to_string());
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WedderburnSource {
    UserSupplied,
    ArithmeticSolver,
    AbelianOrbits,
}

/// The shape of a semisimple Wedderburn-Artin decomposition: r commutative
/// simple components plus matrix components M_{n_j}(F_j) with
/// d_j = [F_j : F_q].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnData {
    #[serde(rename = "r")]
    pub commutative_count: u64,
    pub noncommutative: Vec<(u64, u64)>,
    #[serde(default = "default_source")]
    pub source: WedderburnSource,
}

fn default_source() -> WedderburnSource {
    WedderburnSource::UserSupplied
}

impl WedderburnData {
    pub fn new(commutative_count: u64, noncommutative: Vec<(u64, u64)>) -> WedderburnData {
        WedderburnData {
            commutative_count,
            noncommutative,
            source: WedderburnSource::UserSupplied,
        }
    }

    /// Dimension of the non-commutative part: sum of n_j^2 * d_j.
    pub fn gamma(&self) -> u64 {
        self.noncommutative.iter().map(|&(n, d)| n * n * d).sum()
    }

    /// max over components of n_j * d_j, the dimension of a minimal ideal
    /// in that component.  Zero when there are no matrix components.
    pub fn max_component_dim(&self) -> u64 {
        self.noncommutative.iter().map(|&(n, d)| n * d).max().unwrap_or(0)
    }

    fn validate(&self) -> Result<(), ClassifyError> {
        for &(n, d) in &self.noncommutative {
            if n < 2 || d < 1 {
                return Err(ClassifyError::BadComponent { n, d });
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Pure arithmetic pieces

/// The bound b0 = max over f = 1..floor(gamma/4) of floor(sqrt(gamma/f)) * f.
/// It dominates every possible n_j * [F_j : F_q] in a decomposition of
/// non-commutative dimension gamma, and never exceeds floor(gamma/2).
pub fn b0(gamma: u64) -> Result<u64, ClassifyError> {
    if gamma < 4 {
        return Err(ClassifyError::GammaTooSmall(gamma));
    }
    let mut best = 0u64;
    for f in 1..=gamma / 4 {
        best = best.max(arith::floor_sqrt_div(gamma, f) * f);
    }
    Ok(best)
}

pub fn sqrt_gamma_floor(gamma: u64) -> u64 {
    arith::isqrt(gamma)
}

pub fn sqrt_gamma_over_s_ceil(gamma: u64, s: u64) -> u64 {
    arith::ceil_sqrt_div(gamma, s)
}

/// All multisets {n_1 <= ... <= n_s} of integers >= 2 with sum of squares
/// equal to gamma.  An empty result means the shape is infeasible.
pub fn wedderburn_solver(gamma: u64, s: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s as usize);
    let mut budget = u64::MAX;
    solver_rec(gamma, s, 2, &mut cur, &mut out, &mut budget);
    out
}

/// Solver with a node budget; `None` when the budget is exhausted before
/// the enumeration finished (the solution list would be unreliable).
pub fn wedderburn_solver_capped(gamma: u64, s: u64, node_budget: u64) -> Option<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s as usize);
    let mut budget = node_budget;
    if solver_rec(gamma, s, 2, &mut cur, &mut out, &mut budget) {
        Some(out)
    } else {
        None
    }
}

fn solver_rec(
    remaining: u64,
    slots: u64,
    min_n: u64,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    budget: &mut u64,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if slots == 0 {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return true;
    }
    // Each of the remaining slots needs at least 4; the current slot takes
    // squares of n starting at the previous value to keep multisets sorted.
    let mut n = min_n;
    loop {
        let need_rest = 4 * (slots - 1);
        let sq = n * n;
        if sq + need_rest > remaining {
            break;
        }
        cur.push(n);
        if !solver_rec(remaining - sq, slots - 1, n, cur, out, budget) {
            cur.pop();
            return false;
        }
        cur.pop();
        n += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Abelian semisimple classification

/// Exact classification of a semisimple abelian group algebra: minimal-ECD
/// iff t_w <= p.  The sufficient tests (splitting index, totient of the
/// exponent) are recorded alongside.
pub fn classify_abelian_semisimple(
    group: &Group,
    field: &FiniteField,
) -> Result<ClassificationReport, ClassifyError> {
    if !group.is_abelian() {
        return Err(ClassifyError::NotAbelian);
    }
    let q = field.prime_power();
    let p = q.p();
    let n = group.order() as u64;
    if n % p == 0 {
        return Err(ClassifyError::NotSemisimple(p, n));
    }
    let (exponent, _) = group.exponent();
    let t_w = witness_orbit_size(exponent, q);
    let phi = arith::euler_phi(exponent);
    let mut report = ClassificationReport::new();
    report.quantities.t_w = Some(t_w);
    report.quantities.exponent = Some(exponent);
    report.quantities.phi_exponent = Some(phi);
    report.rule("max-orbit-dim", format!("t_w = {t_w}, p = {p}"), t_w <= p);
    // The least splitting index of an extension of GF(q) is t_w itself.
    report.rule(
        "splitting-index",
        format!("least t with exp(G) | q^t - 1 is {t_w}, p = {p}"),
        t_w <= p,
    );
    report.rule(
        "totient-exponent",
        format!("phi(exp(G)) = phi({exponent}) = {phi}, p = {p}"),
        phi <= p,
    );
    if t_w <= p {
        report.decide(Verdict::MinimalEcd, "max-orbit-dim");
    } else {
        report.decide(Verdict::NotEcid, "max-orbit-dim");
    }
    Ok(report)
}

/// t_w: the largest dimension of a minimal ideal of the semisimple abelian
/// group algebra.
pub fn max_minimal_ideal_dim(group: &Group, field: &FiniteField) -> Result<u64, ClassifyError> {
    if !group.is_abelian() {
        return Err(ClassifyError::NotAbelian);
    }
    let q = field.prime_power();
    let n = group.order() as u64;
    if n % q.p() == 0 {
        return Err(ClassifyError::NotSemisimple(q.p(), n));
    }
    Ok(witness_orbit_size(group.exponent().0, q))
}

// ---------------------------------------------------------------------------
// Non-abelian semisimple classification

/// Everything the non-abelian semisimple classifier needs to know about H,
/// as plain numbers.  This allows classifying groups that are only known
/// arithmetically (order, commutator index, class count) without a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithmeticProfile {
    /// |H|
    pub order: u64,
    /// [H : H']
    pub commutator_index: u64,
    /// exp(H/H')
    pub quotient_exponent: u64,
    /// Number of conjugacy classes, when known.
    pub class_count: Option<u64>,
}

impl ArithmeticProfile {
    pub fn from_group(group: &Group) -> ArithmeticProfile {
        let (_, quotient) = group.commutator_subgroup();
        ArithmeticProfile {
            order: group.order() as u64,
            commutator_index: quotient.order() as u64,
            quotient_exponent: quotient.exponent().0,
            class_count: Some(group.conjugacy_class_count() as u64),
        }
    }
}

const SOLVER_NODE_BUDGET: u64 = 2_000_000;

/// Exact-when-possible classification of a non-abelian semisimple group
/// algebra.
///
/// With Wedderburn data (supplied, or derived by the arithmetic solver when
/// a splitting field is asserted and the solver output is unambiguous) the
/// iff criterion t_w <= p and max n_j d_j <= p decides the verdict exactly.
/// Otherwise sufficient bounds are tried and "undecided" is returned when
/// none of them fires.
pub fn classify_nonabelian_semisimple(
    group: &Group,
    field: &FiniteField,
    wedderburn: Option<&WedderburnData>,
    assert_splitting: bool,
) -> Result<ClassificationReport, ClassifyError> {
    if group.is_abelian() {
        return Err(ClassifyError::Abelian);
    }
    let profile = ArithmeticProfile::from_group(group);
    classify_semisimple_profile(&profile, field.prime_power(), wedderburn, assert_splitting)
}

/// The classifier behind [`classify_nonabelian_semisimple`], working on an
/// arithmetic profile alone.
pub fn classify_semisimple_profile(
    profile: &ArithmeticProfile,
    q: PrimePower,
    wedderburn: Option<&WedderburnData>,
    assert_splitting: bool,
) -> Result<ClassificationReport, ClassifyError> {
    let p = q.p();
    if profile.order % p == 0 {
        return Err(ClassifyError::NotSemisimple(p, profile.order));
    }
    let gamma = profile.order - profile.commutator_index;
    let t_w = witness_orbit_size(profile.quotient_exponent, q);
    let mut report = ClassificationReport::new();
    report.quantities.t_w = Some(t_w);
    report.quantities.exponent = Some(profile.quotient_exponent);
    report.quantities.gamma = Some(gamma);

    if assert_splitting {
        // Necessary condition: the field must contain a primitive
        // exp(H/H')-th root of unity.
        if (q.q() - 1) % profile.quotient_exponent != 0 {
            return Err(ClassifyError::SplittingAssertionContradicted);
        }
    }

    // Resolve Wedderburn data: user-supplied wins; otherwise derive it over
    // an asserted splitting field from the class count and the solver.
    let mut effective: Option<WedderburnData> = None;
    if let Some(wd) = wedderburn {
        wd.validate()?;
        if wd.gamma() != gamma {
            return Err(ClassifyError::InconsistentWedderburn {
                expected: gamma,
                got: wd.gamma(),
            });
        }
        effective = Some(wd.clone());
    } else if assert_splitting {
        if let Some(classes) = profile.class_count {
            let s = classes - profile.commutator_index;
            report.quantities.component_count = Some(s);
            match wedderburn_solver_capped(gamma, s, SOLVER_NODE_BUDGET) {
                Some(solutions) if solutions.len() == 1 => {
                    let nc: Vec<(u64, u64)> = solutions[0].iter().map(|&n| (n, 1)).collect();
                    report.rule(
                        "wedderburn-solver",
                        format!(
                            "unique {{n_j}} with square sum {gamma} in {s} slots: {:?}",
                            solutions[0]
                        ),
                        true,
                    );
                    effective = Some(WedderburnData {
                        commutative_count: profile.commutator_index,
                        noncommutative: nc,
                        source: WedderburnSource::ArithmeticSolver,
                    });
                }
                Some(solutions) if !solutions.is_empty() => {
                    // All solutions may still agree on the decisive bound.
                    let all_le = solutions.iter().all(|sol| *sol.last().unwrap() <= p);
                    let all_gt = solutions.iter().all(|sol| *sol.last().unwrap() > p);
                    report.rule(
                        "wedderburn-solver",
                        format!(
                            "{} solutions; max n_j <= p in all: {all_le}, > p in all: {all_gt}",
                            solutions.len()
                        ),
                        all_le || all_gt,
                    );
                    if t_w <= p && all_le {
                        report.decide(Verdict::MinimalEcd, "wedderburn-solver-consensus");
                    } else if all_gt {
                        report.decide(Verdict::NotEcid, "wedderburn-solver-consensus");
                    }
                    if report.verdict != Verdict::Undecided {
                        finish_quantities(&mut report, gamma, profile);
                        return Ok(report);
                    }
                }
                Some(_) => {
                    report.rule(
                        "wedderburn-solver",
                        format!("no multiset of squares sums to {gamma} in {s} slots"),
                        false,
                    );
                }
                None => {
                    report.rule(
                        "wedderburn-solver",
                        format!("solver budget exhausted for gamma = {gamma}, s = {s}"),
                        false,
                    );
                }
            }
        }
    }

    if let Some(wd) = effective {
        let maxdim = wd.max_component_dim();
        report.quantities.max_component_dim = Some(maxdim);
        report.quantities.component_count = Some(wd.noncommutative.len() as u64);
        let tw_ok = t_w <= p;
        let max_ok = maxdim <= p;
        report.rule("max-orbit-dim", format!("t_w = {t_w}, p = {p}"), tw_ok);
        report.rule(
            "wedderburn-max",
            format!("max n_j*d_j = {maxdim}, p = {p}"),
            max_ok,
        );
        report.decide(
            if tw_ok && max_ok {
                Verdict::MinimalEcd
            } else {
                Verdict::NotEcid
            },
            "wedderburn-max",
        );
        report.wedderburn = Some(wd);
        finish_quantities(&mut report, gamma, profile);
        return Ok(report);
    }

    // Sufficient tests only.
    let tw_ok = t_w <= p;
    report.rule("max-orbit-dim", format!("t_w = {t_w}, p = {p}"), tw_ok);
    if !tw_ok {
        // Some minimal ideal of the commutative part has dimension > p.
        report.decide(Verdict::NotEcid, "max-orbit-dim");
        finish_quantities(&mut report, gamma, profile);
        return Ok(report);
    }
    let comm_ok = gamma <= p;
    report.rule(
        "commutative-complement",
        format!("|H| - [H:H'] = {gamma}, p = {p}"),
        comm_ok,
    );
    let b0_val = b0(gamma)?;
    report.quantities.b0 = Some(b0_val);
    let b0_ok = b0_val <= p;
    report.rule("b0-bound", format!("b0({gamma}) = {b0_val}, p = {p}"), b0_ok);
    let half_ok = gamma / 2 <= p;
    report.rule(
        "half-gamma",
        format!("floor(gamma/2) = {}, p = {p}", gamma / 2),
        half_ok,
    );
    let order_ok = profile.order - 1 <= p;
    report.rule(
        "order-bound",
        format!("|H| - 1 = {}, p = {p}", profile.order - 1),
        order_ok,
    );
    if comm_ok {
        report.decide(Verdict::MinimalEcd, "commutative-complement");
    } else if b0_ok {
        report.decide(Verdict::MinimalEcd, "b0-bound");
    } else if half_ok {
        report.decide(Verdict::MinimalEcd, "half-gamma");
    } else if order_ok {
        report.decide(Verdict::MinimalEcd, "order-bound");
    } else if assert_splitting {
        let upper = arith::isqrt(gamma);
        let upper_ok = upper <= p;
        report.rule(
            "sqrt-gamma-upper",
            format!("floor(sqrt({gamma})) = {upper}, p = {p}"),
            upper_ok,
        );
        if upper_ok {
            report.decide(Verdict::MinimalEcd, "sqrt-gamma-upper");
        } else if let Some(classes) = profile.class_count {
            let s = classes - profile.commutator_index;
            let lower = arith::ceil_sqrt_div(gamma, s);
            report.quantities.sqrt_gamma_over_s_ceil = Some(lower);
            let lower_fires = lower > p;
            report.rule(
                "sqrt-gamma-lower",
                format!("ceil(sqrt({gamma}/{s})) = {lower} > p = {p}: some n_j*d_j exceeds p"),
                lower_fires,
            );
            if lower_fires {
                report.decide(Verdict::NotEcid, "sqrt-gamma-lower");
            }
        }
    }
    finish_quantities(&mut report, gamma, profile);
    Ok(report)
}

fn finish_quantities(report: &mut ClassificationReport, gamma: u64, profile: &ArithmeticProfile) {
    report.quantities.sqrt_gamma_floor = Some(arith::isqrt(gamma));
    if report.quantities.component_count.is_none() {
        if let Some(c) = profile.class_count {
            report.quantities.component_count = Some(c - profile.commutator_index);
        }
    }
    if report.quantities.sqrt_gamma_over_s_ceil.is_none() {
        if let Some(s) = report.quantities.component_count {
            if s > 0 {
                report.quantities.sqrt_gamma_over_s_ceil = Some(arith::ceil_sqrt_div(gamma, s));
            }
        }
    }
    if report.quantities.b0.is_none() && gamma >= 4 {
        report.quantities.b0 = b0(gamma).ok();
    }
}

// ---------------------------------------------------------------------------
// Modular (non-semisimple) classification

/// Necessary condition for a modular group algebra to be ECID: the Sylow
/// p-subgroups must be cyclic of order p (p divides |H| exactly once).
/// `false` means the algebra is certainly not ECID.
pub fn modular_necessary_condition(
    group: &Group,
    field: &FiniteField,
) -> Result<bool, ClassifyError> {
    let p = field.p();
    let n = group.order() as u64;
    if n % p != 0 {
        return Err(ClassifyError::Semisimple(p, n));
    }
    group
        .sylow_is_cp(p)
        .map_err(|_| ClassifyError::NotPrime(p))
}

/// Modular classification from the Sylow necessary condition alone: a
/// failing condition settles not-ECID; a passing one leaves the verdict
/// undecided (only the exhaustive census can certify ECID).
pub fn classify_modular_necessary(
    group: &Group,
    field: &FiniteField,
) -> Result<ClassificationReport, ClassifyError> {
    let sylow = modular_necessary_condition(group, field)?;
    let mut report = ClassificationReport::new();
    report.rule(
        "sylow-cp",
        format!(
            "p = {} divides |H| = {} exactly once: {sylow}",
            field.p(),
            group.order()
        ),
        sylow,
    );
    if !sylow {
        report.decide(Verdict::NotEcid, "sylow-cp");
    }
    Ok(report)
}

/// Result of the exhaustive modular classification: the verdict report plus
/// the full idempotent census it was decided from.
#[derive(Debug)]
pub struct ModularExhaustive {
    pub report: ClassificationReport,
    pub search: IdempotentSearch,
}

/// Decides ECID for p | |H| by enumerating every idempotent of F_q H
/// (within the candidate budget) and checking that all primitive ones
/// generate ideals of dimension exactly p.
pub fn classify_modular_exhaustive(
    group: &Group,
    field: &FiniteField,
    budget: u64,
) -> Result<ModularExhaustive, ClassifyError> {
    let p = field.p();
    let n = group.order() as u64;
    if n % p != 0 {
        return Err(ClassifyError::Semisimple(p, n));
    }
    let mut report = ClassificationReport::new();
    let sylow = group.sylow_is_cp(p).map_err(|_| ClassifyError::NotPrime(p))?;
    report.rule(
        "sylow-cp",
        format!("p = {p} divides |H| = {n} exactly once: {sylow}"),
        sylow,
    );
    let search = codes::idempotent_search(group, field, budget)?;
    let prim_dims: Vec<u64> = search
        .entries
        .iter()
        .filter(|e| e.primitive)
        .map(|e| e.dim)
        .collect();
    // The two equivalent exhaustive criteria: every principal indecomposable
    // is ECD (dim <= p), and every primitive idempotent gives dim exactly p.
    let all_at_most_p = prim_dims.iter().all(|&d| d <= p);
    let all_exactly_p = prim_dims.iter().all(|&d| d == p);
    assert_eq!(
        all_at_most_p, all_exactly_p,
        "a principal indecomposable of dimension <= p must have dimension exactly p"
    );
    report.rule(
        "exhaustive-primitive-dims",
        format!(
            "{} primitive idempotents, dims <= p: {all_at_most_p}, dims == p: {all_exactly_p}",
            prim_dims.len()
        ),
        all_exactly_p,
    );
    report.decide(
        if all_exactly_p {
            Verdict::Ecid
        } else {
            Verdict::NotEcid
        },
        "exhaustive-primitive-dims",
    );
    Ok(ModularExhaustive { report, search })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn b0_values() {
        assert_eq!(b0(21).unwrap(), 10);
        assert_eq!(b0(4).unwrap(), 2);
        assert_eq!(b0(3).unwrap_err(), ClassifyError::GammaTooSmall(3));
        for gamma in 4..200 {
            let v = b0(gamma).unwrap();
            assert!(v <= gamma / 2, "b0({gamma}) = {v} > gamma/2");
        }
    }

    #[test]
    fn solver_examples() {
        assert_eq!(wedderburn_solver(21, 4), vec![vec![2, 2, 2, 3]]);
        assert_eq!(wedderburn_solver(8, 2), vec![vec![2, 2]]);
        assert!(wedderburn_solver(5, 1).is_empty());
        // every solution respects the b0 chain with d_j = 1
        for (gamma, s) in [(21u64, 4u64), (29, 5), (50, 3), (36, 2)] {
            for sol in wedderburn_solver(gamma, s) {
                let maxn = *sol.last().unwrap();
                let b = b0(gamma).unwrap();
                assert!(maxn <= b && b <= gamma / 2);
            }
        }
    }

    #[test]
    fn solver_respects_random_component_bounds() {
        // For arbitrary admissible (n_j, d_j) data the chain
        // max n_j d_j <= b0(gamma) <= gamma/2 must hold.
        let mut rng = crate::arith::SplitMix64(0xB0B0);
        for _ in 0..200 {
            let s = 1 + rng.below(4);
            let comps: Vec<(u64, u64)> = (0..s)
                .map(|_| (2 + rng.below(5), 1 + rng.below(3)))
                .collect();
            let wd = WedderburnData::new(1, comps);
            let gamma = wd.gamma();
            let b = b0(gamma).unwrap();
            assert!(wd.max_component_dim() <= b && b <= gamma / 2);
        }
    }

    #[test]
    fn abelian_classification() {
        // t_w = 2 = p for C3 over GF(2)
        let c3 = Group::abelian(&[3]).unwrap();
        let rep = classify_abelian_semisimple(&c3, &gf(2)).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.quantities.t_w, Some(2));

        // C2 over GF(3): t_w = 1
        let c2 = Group::abelian(&[2]).unwrap();
        let rep = classify_abelian_semisimple(&c2, &gf(3)).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.quantities.t_w, Some(1));

        // C5 over GF(2): t_w = 4 > 2
        let c5 = Group::abelian(&[5]).unwrap();
        let rep = classify_abelian_semisimple(&c5, &gf(2)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotEcid);

        // the big product group of exponent 144 over GF(5^6)
        let g1 = Group::abelian(&[2, 16, 9, 3]).unwrap();
        let f = FiniteField::new(5, 6, None).unwrap();
        let rep = classify_abelian_semisimple(&g1, &f).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.quantities.t_w, Some(2));

        // wrong path errors
        let c6 = Group::abelian(&[6]).unwrap();
        assert_eq!(
            classify_abelian_semisimple(&c6, &gf(2)).unwrap_err(),
            ClassifyError::NotSemisimple(2, 6)
        );
    }

    #[test]
    fn max_minimal_ideal_dims() {
        let c3 = Group::abelian(&[3]).unwrap();
        assert_eq!(max_minimal_ideal_dim(&c3, &gf(2)).unwrap(), 2);
        // exp(G) | q - 1 forces every orbit to be a singleton
        let f25 = FiniteField::new(5, 2, None).unwrap();
        let c6 = Group::abelian(&[6]).unwrap();
        assert_eq!(max_minimal_ideal_dim(&c6, &f25).unwrap(), 1);
        let c3b = Group::abelian(&[3]).unwrap();
        assert_eq!(max_minimal_ideal_dim(&c3b, &f25).unwrap(), 1);
    }

    fn sl23() -> Group {
        Group::from_permutations(&[
            vec![1, 3, 5, 4, 2, 7, 8, 6],
            vec![2, 4, 6, 7, 3, 8, 1, 5],
        ])
        .unwrap()
    }

    #[test]
    fn sl23_sufficient_bounds() {
        // b0(21) = 10 <= 11 decides minimal-ECD over GF(11)
        let rep = classify_nonabelian_semisimple(&sl23(), &gf(11), None, false).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.decided_by.as_deref(), Some("b0-bound"));
        assert_eq!(rep.quantities.gamma, Some(21));
        assert_eq!(rep.quantities.b0, Some(10));

        // over GF(7) nothing fires without a splitting assertion
        let rep = classify_nonabelian_semisimple(&sl23(), &gf(7), None, false).unwrap();
        assert_eq!(rep.verdict, Verdict::Undecided);

        // p > |H| - 1 makes every proper ideal trivially small
        let rep = classify_nonabelian_semisimple(&sl23(), &gf(23), None, false).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
    }

    #[test]
    fn sl23_with_wedderburn_data() {
        let f25 = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
        let wd = WedderburnData::new(3, vec![(2, 1), (2, 1), (2, 1), (3, 1)]);
        let rep = classify_nonabelian_semisimple(&sl23(), &f25, Some(&wd), false).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.quantities.max_component_dim, Some(3));

        // inconsistent data is rejected
        let bad = WedderburnData::new(3, vec![(2, 1), (4, 1)]);
        assert_eq!(
            classify_nonabelian_semisimple(&sl23(), &f25, Some(&bad), false).unwrap_err(),
            ClassifyError::InconsistentWedderburn {
                expected: 21,
                got: 20
            }
        );
    }

    #[test]
    fn sl23_solver_derivation_over_asserted_splitting_field() {
        let f25 = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
        let rep = classify_nonabelian_semisimple(&sl23(), &f25, None, true).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.quantities.component_count, Some(4));
        assert_eq!(rep.quantities.max_component_dim, Some(3));

        // GF(5) fails the necessary condition exp(H/H') = 3 | q - 1 = 4
        assert_eq!(
            classify_nonabelian_semisimple(&sl23(), &gf(5), None, true).unwrap_err(),
            ClassifyError::SplittingAssertionContradicted
        );
    }

    #[test]
    fn sporadic_group_arithmetic_stub() {
        // order 95040, perfect, 15 conjugacy classes
        let profile = ArithmeticProfile {
            order: 95040,
            commutator_index: 1,
            quotient_exponent: 1,
            class_count: Some(15),
        };
        // gamma = 95039, window 83 <= max n_j <= 308
        let q79 = PrimePower::new(79, 1).unwrap();
        let rep = classify_semisimple_profile(&profile, q79, None, true).unwrap();
        assert_eq!(rep.verdict, Verdict::NotEcid);
        assert_eq!(rep.quantities.sqrt_gamma_over_s_ceil, Some(83));

        let q307 = PrimePower::new(307, 1).unwrap();
        let rep = classify_semisimple_profile(&profile, q307, None, true).unwrap();
        assert_eq!(rep.verdict, Verdict::Undecided);
        assert_eq!(rep.quantities.sqrt_gamma_floor, Some(308));

        let q311 = PrimePower::new(311, 1).unwrap();
        let rep = classify_semisimple_profile(&profile, q311, None, true).unwrap();
        assert_eq!(rep.verdict, Verdict::MinimalEcd);
        assert_eq!(rep.decided_by.as_deref(), Some("sqrt-gamma-upper"));
    }

    #[test]
    fn report_json_roundtrip() {
        let f25 = FiniteField::new(5, 2, Some(vec![2, 4, 1])).unwrap();
        let rep = classify_nonabelian_semisimple(&sl23(), &f25, None, true).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert!(json.contains("\"minimal-ecd\""));
    }

    #[test]
    fn modular_necessary_examples() {
        let a4 = Group::from_permutations(&[vec![2, 3, 1], vec![2, 1, 4, 3]]).unwrap();
        assert!(modular_necessary_condition(&a4, &gf(3)).unwrap());
        let c6 = Group::abelian(&[6]).unwrap();
        assert!(modular_necessary_condition(&c6, &gf(2)).unwrap());
        let c4 = Group::abelian(&[4]).unwrap();
        assert!(!modular_necessary_condition(&c4, &gf(2)).unwrap());
        let c3 = Group::abelian(&[3]).unwrap();
        assert_eq!(
            modular_necessary_condition(&c3, &gf(2)).unwrap_err(),
            ClassifyError::Semisimple(2, 3)
        );
    }
}
