//! Exact verifiers for skew-symmetry, the Leibniz rule, the Filippov
//! identity and the strong identity.
//!
//! Trial inputs are drawn sequentially from one seeded generator, so a
//! report depends only on the configuration; evaluation runs in parallel and
//! results are merged by trial index.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{increasing_tuples, Bracket};
use crate::poly::Polynomial;
use crate::random::{random_poly, rng, RandomShape};

/// At most this many failures are kept verbatim in a report.
pub const MAX_RECORDED_FAILURES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    pub shape: RandomShape,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self { trials: 100, seed: 0, shape: RandomShape::default() }
    }
}

impl TrialConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        Self { trials, seed, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub inputs: Vec<String>,
    pub defect: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub arity: usize,
    /// Random trials run.
    pub trials: usize,
    /// Deterministic checks (generator tuples, unit inputs) run before the
    /// random trials.
    pub generator_checks: usize,
    pub failure_count: usize,
    pub failures: Vec<IdentityFailure>,
    pub pass: bool,
}

impl IdentityReport {
    /// First recorded defect, if any.
    pub fn witness(&self) -> Option<&IdentityFailure> {
        self.failures.first()
    }
}

/// One check: polynomial inputs plus slot indices where the identity needs
/// them.
#[derive(Debug, Clone)]
struct Case {
    inputs: Vec<Polynomial>,
    slots: Vec<usize>,
}

impl Case {
    fn of(inputs: Vec<Polynomial>) -> Self {
        Self { inputs, slots: Vec::new() }
    }
}

fn run<B, F>(b: &B, identity: &str, generator_cases: Vec<Case>, random_cases: Vec<Case>, defect: F) -> IdentityReport
where
    B: Bracket + ?Sized,
    F: Fn(&B, &Case) -> Polynomial + Sync,
{
    let generator_checks = generator_cases.len();
    let trials = random_cases.len();
    let cases: Vec<Case> = generator_cases.into_iter().chain(random_cases).collect();
    let defects: Vec<Polynomial> = cases.par_iter().map(|c| defect(b, c)).collect();
    let mut failures = Vec::new();
    let mut failure_count = 0;
    for (case, d) in cases.iter().zip(&defects) {
        if d.is_zero() {
            continue;
        }
        failure_count += 1;
        if failures.len() < MAX_RECORDED_FAILURES {
            failures.push(IdentityFailure { inputs: case.inputs.iter().map(ToString::to_string).collect(), defect: d.to_string() });
        }
    }
    IdentityReport {
        identity: identity.to_string(),
        arity: b.arity(),
        trials,
        generator_checks,
        failure_count,
        failures,
        pass: failure_count == 0,
    }
}

fn eval<B: Bracket + ?Sized>(b: &B, args: &[Polynomial]) -> Polynomial {
    b.eval(args).expect("verifier supplies bracket arity in the bracket's context")
}

fn random_cases<B, S>(b: &B, cfg: &TrialConfig, len: usize, slots: S) -> Vec<Case>
where
    B: Bracket + ?Sized,
    S: Fn(&mut ChaCha8Rng) -> Vec<usize>,
{
    let mut r = rng(cfg.seed);
    (0..cfg.trials)
        .map(|_| {
            let inputs = (0..len).map(|_| random_poly(&mut r, b.context(), cfg.shape)).collect();
            Case { inputs, slots: slots(&mut r) }
        })
        .collect()
}

/// Repeated arguments vanish and a transposition of two random slots flips
/// the sign.
pub fn verify_skew<B: Bracket + ?Sized>(b: &B, cfg: &TrialConfig) -> IdentityReport {
    let n = b.arity();
    let cases = random_cases(b, cfg, n, |r| {
        let i = r.gen_range(0..n);
        let j = (i + r.gen_range(1..n)) % n;
        vec![i.min(j), i.max(j)]
    });
    run(b, "skew", Vec::new(), cases, |b, case| {
        let args = &case.inputs;
        let (i, j) = (case.slots[0], case.slots[1]);
        let mut repeated = args.to_vec();
        repeated[j] = repeated[i].clone();
        let mut swapped = args.to_vec();
        swapped.swap(i, j);
        let flip = &eval(b, args) + &eval(b, &swapped);
        let rep = eval(b, &repeated);
        if rep.is_zero() { flip } else { rep }
    })
}

/// `{…, x·y, …} − x·{…, y, …} − {…, x, …}·y` in a random slot.
///
/// Inputs are the `n − 1` other arguments followed by `x` and `y`.
pub fn verify_leibniz<B: Bracket + ?Sized>(b: &B, cfg: &TrialConfig) -> IdentityReport {
    let n = b.arity();
    let cases = random_cases(b, cfg, n + 1, |r| vec![r.gen_range(0..n)]);
    // x = 1 must also be harmless
    let fixed: Vec<Case> = cases
        .first()
        .map(|first| {
            let mut unit = first.clone();
            unit.inputs[n - 1] = Polynomial::one(b.context());
            unit
        })
        .into_iter()
        .collect();
    run(b, "leibniz", fixed, cases, |b, case| {
        let others = &case.inputs[..n - 1];
        let (x, y) = (&case.inputs[n - 1], &case.inputs[n]);
        let slot = case.slots[0];
        let with = |v: Polynomial| {
            let mut a = others.to_vec();
            a.insert(slot, v);
            eval(b, &a)
        };
        let lhs = with(x * y);
        &(&lhs - &(x * &with(y.clone()))) - &(&with(x.clone()) * y)
    })
}

/// `{{u_1,…,u_n}, v_1,…,v_{n−1}} − Σ_i {u_1,…,{u_i, v_1,…,v_{n−1}},…,u_n}`.
///
/// Checked first on every increasing generator tuple for `u` and `v`, then on
/// random inputs. For brackets that are not n-Lie this is a witness search.
pub fn verify_filippov<B: Bracket + ?Sized>(b: &B, cfg: &TrialConfig) -> IdentityReport {
    let n = b.arity();
    let vars = Polynomial::vars(b.context());
    let mut gen_cases: Vec<Case> = Vec::new();
    for u in increasing_tuples(vars.len(), n) {
        for v in increasing_tuples(vars.len(), n - 1) {
            gen_cases.push(Case::of(u.iter().chain(&v).map(|&i| vars[i].clone()).collect()));
        }
    }
    let cases = random_cases(b, cfg, 2 * n - 1, |_| Vec::new());
    run(b, "filippov", gen_cases, cases, |b, case| filippov_defect(b, &case.inputs[..n], &case.inputs[n..]))
}

pub(crate) fn filippov_defect<B: Bracket + ?Sized>(b: &B, u: &[Polynomial], v: &[Polynomial]) -> Polynomial {
    let inner = eval(b, u);
    let mut args = vec![inner];
    args.extend_from_slice(v);
    let mut acc = eval(b, &args);
    for i in 0..u.len() {
        let mut w = vec![u[i].clone()];
        w.extend_from_slice(v);
        let mut outer = u.to_vec();
        outer[i] = eval(b, &w);
        acc = &acc - &eval(b, &outer);
    }
    acc
}

/// `Σ_{i=1}^{n+1} (−1)^i {u_1,…,u_{n−1}, v_i}·{v_1,…,v̂_i,…,v_{n+1}}`.
///
/// Checked on every increasing generator tuple for `u` and `v`, then on
/// random inputs.
pub fn verify_strong<B: Bracket + ?Sized>(b: &B, cfg: &TrialConfig) -> IdentityReport {
    let n = b.arity();
    let vars = Polynomial::vars(b.context());
    let mut gen_cases: Vec<Case> = Vec::new();
    if vars.len() > n {
        for u in increasing_tuples(vars.len(), n - 1) {
            for v in increasing_tuples(vars.len(), n + 1) {
                gen_cases.push(Case::of(u.iter().chain(&v).map(|&i| vars[i].clone()).collect()));
            }
        }
    }
    let cases = random_cases(b, cfg, 2 * n, |_| Vec::new());
    run(b, "strong", gen_cases, cases, |b, case| strong_defect(b, &case.inputs[..n - 1], &case.inputs[n - 1..]))
}

pub(crate) fn strong_defect<B: Bracket + ?Sized>(b: &B, u: &[Polynomial], v: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(b.context());
    for i in 0..v.len() {
        let mut left = u.to_vec();
        left.push(v[i].clone());
        let right: Vec<Polynomial> = v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let term = &eval(b, &left) * &eval(b, &right);
        // i is zero-based, so (−1)^(i+1)
        acc = if i % 2 == 0 { &acc - &term } else { &acc + &term };
    }
    acc
}
