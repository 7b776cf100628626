//! Forward saturation of an ideal of `S_C` under the bracket.

use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::brackets::{increasing_tuples, Bracket};
use crate::groebner::{buchberger_counted, divide, GroebnerBasis, GroebnerError, Steps, DEFAULT_STEP_BUDGET};
use crate::poly::Polynomial;
use crate::quotient::QuotientContext;

pub const DEFAULT_MAX_ROUNDS: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaturationConfig {
    pub max_rounds: usize,
    /// Reduction steps shared by every basis computation and normal form.
    pub budget: u64,
}

impl Default for SaturationConfig {
    fn default() -> Self {
        Self { max_rounds: DEFAULT_MAX_ROUNDS, budget: DEFAULT_STEP_BUDGET }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    WholeRing,
    ProperStable,
    BudgetExhausted,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::WholeRing => "whole-ring",
            Verdict::ProperStable => "proper-stable",
            Verdict::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Round {
    pub round: usize,
    pub basis_size: usize,
    pub added: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturationReport {
    pub casimir: String,
    pub lambda: String,
    pub seeds: Vec<String>,
    pub iterations: usize,
    pub rounds: Vec<Round>,
    pub steps_used: u64,
    #[serde(serialize_with = "super::display_all")]
    pub final_basis: Vec<Polynomial>,
    pub verdict: Verdict,
    /// For a proper verdict: one more bracketing round, reduced by plain
    /// division against the final basis, produced nothing new.
    pub verified: bool,
    /// What ran out, for a budget verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhausted: Option<String>,
}

fn new_elements(q: &QuotientContext, g: &GroebnerBasis, steps: &mut Steps) -> Result<Vec<Polynomial>, GroebnerError> {
    let b = q.bracket();
    let ctx = q.context();
    let tuples = increasing_tuples(ctx.len(), b.arity() - 1);
    let products: Vec<Polynomial> = g
        .generators()
        .par_iter()
        .flat_map_iter(|p| {
            tuples.iter().map(move |t| {
                let mut args: Vec<Polynomial> = t.iter().map(|&i| Polynomial::var(ctx, i)).collect();
                args.push(p.clone());
                b.eval(&args).expect("arity and context match")
            })
        })
        .collect();
    let mut out: Vec<Polynomial> = Vec::new();
    for p in products {
        let r = g.normal_form_counted(&p, steps)?;
        if !r.is_zero() && !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Independent closure check by textbook division.
fn closed_by_division(q: &QuotientContext, g: &GroebnerBasis) -> bool {
    let b = q.bracket();
    let ctx = q.context();
    increasing_tuples(ctx.len(), b.arity() - 1).iter().all(|t| {
        g.generators().iter().all(|p| {
            let mut args: Vec<Polynomial> = t.iter().map(|&i| Polynomial::var(ctx, i)).collect();
            args.push(p.clone());
            let v = b.eval(&args).expect("arity and context match");
            divide(&v, g.generators(), g.order()).expect("nonzero basis").remainder.is_zero()
        })
    })
}

/// Repeats `G ← GB(current ∪ {C − λ})`, bracketing every basis element with
/// every increasing generator tuple and adding the nonzero normal forms,
/// until nothing new appears, `1 ∈ G`, or the budget runs out.
pub fn saturate_poisson_ideal(q: &QuotientContext, seeds: &[Polynomial], cfg: SaturationConfig) -> Result<SaturationReport, AnalysisError> {
    if seeds.iter().all(|s| q.reduce(s).is_zero()) {
        return Err(AnalysisError::SeedsVanish);
    }
    let mut report = SaturationReport {
        casimir: q.casimir().to_string(),
        lambda: q.lambda().to_string(),
        seeds: seeds.iter().map(ToString::to_string).collect(),
        iterations: 0,
        rounds: Vec::new(),
        steps_used: 0,
        final_basis: Vec::new(),
        verdict: Verdict::BudgetExhausted,
        verified: false,
        exhausted: None,
    };
    let mut steps = Steps::new(cfg.budget);
    let mut current: Vec<Polynomial> = seeds.to_vec();
    current.push(q.modulus_generator());
    for round in 1..=cfg.max_rounds {
        report.iterations = round;
        let outcome = buchberger_counted(&current, q.order(), &mut steps).and_then(|g| {
            if g.contains_one() {
                return Ok((g, Vec::new()));
            }
            let added = new_elements(q, &g, &mut steps)?;
            Ok((g, added))
        });
        report.steps_used = steps.used().min(steps.limit());
        let (g, added) = match outcome {
            Ok(x) => x,
            Err(GroebnerError::BudgetExhausted { steps }) => {
                report.exhausted = Some(format!("{steps} reduction steps"));
                return Ok(report);
            }
            Err(e) => return Err(e.into()),
        };
        report.rounds.push(Round { round, basis_size: g.len(), added: added.len() });
        report.final_basis = g.generators().to_vec();
        if g.contains_one() {
            report.verdict = Verdict::WholeRing;
            report.verified = true;
            return Ok(report);
        }
        if added.is_empty() {
            report.verdict = Verdict::ProperStable;
            report.verified = closed_by_division(q, &g);
            return Ok(report);
        }
        current = g.generators().to_vec();
        current.extend(added);
    }
    report.exhausted = Some(format!("{} rounds", cfg.max_rounds));
    Ok(report)
}
