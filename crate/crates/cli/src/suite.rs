//! Regression battery behind `paper-suite`: one item per acceptance check.

use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use nlie_core::analysis::{
    center_membership, center_probe_ambient, center_probe_quotient, is_closed_homogeneous, kth_root,
    minimal_root_homogeneous, saturate_poisson_ideal, SaturationConfig, Verdict,
};
use nlie_core::brackets::{
    ternary_jacobian, verify_filippov, verify_leibniz, verify_skew, verify_strong, Bracket, IdentityReport, TrialConfig,
};
use nlie_core::expr::parse_in;
use nlie_core::poly::{int, Polynomial, Rational, VarContext};
use nlie_core::quotient::{random_m_homogeneous, QuotientContext};
use nlie_core::random::{random_homogeneous, random_poly, rng, RandomShape};
use nlie_core::structures::{
    make_elliptic, make_jacobian, make_malcev_abg, make_malcev_canonical, make_malcev_splittable, make_nlie,
    make_nlie_diagonal, make_quadric, make_sl2, AlgebraSpec,
};

const MAX_LISTED: usize = 12;

/// Number, title and runtime limit in seconds of every suite item.
pub const ITEMS: [(u32, &str, f64); 8] = [
    (1, "bracket-table regression", 1.0),
    (2, "identity suite", 30.0),
    (3, "ternary Jacobian constants", 1.0),
    (4, "Casimir centrality", 5.0),
    (5, "roots and closedness", 30.0),
    (6, "grading and lift", 30.0),
    (7, "simplicity probes", 1200.0),
    (8, "centrality probes", 60.0),
];

/// Per-run limit for a single saturation.
pub const SATURATION_RUN_LIMIT: f64 = 120.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemReport {
    pub id: u32,
    pub title: String,
    pub checks: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
    pub limit_seconds: f64,
    pub within_limit: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub items: Vec<ItemReport>,
    pub pass: bool,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn eq(&mut self, label: &str, got: &Polynomial, want: &Polynomial) {
        self.check(got == want, || format!("{label}: got {got}, expected {want}"));
    }

    fn report(&mut self, r: &IdentityReport, algebra: &str, trials: usize) {
        let ok = r.pass && r.trials == trials;
        self.check(ok, || {
            let w = r.witness().map(|f| format!(" at ({}) defect {}", f.inputs.join(", "), f.defect)).unwrap_or_default();
            format!("{} on {algebra}: {} failures{w}", r.identity, r.failure_count)
        });
    }
}

fn p(spec: &AlgebraSpec, s: &str) -> Polynomial {
    parse_in(spec.context(), s).expect("suite expressions parse")
}

fn br(spec: &AlgebraSpec, args: &[&str]) -> Polynomial {
    let args: Vec<Polynomial> = args.iter().map(|a| p(spec, a)).collect();
    spec.bracket.eval(&args).expect("arity matches")
}

/// Runs every item with the given seed.
pub fn paper_suite(seed: u64) -> SuiteReport {
    let items: Vec<ItemReport> = ITEMS.iter().map(|&(id, _, _)| run_item(id, seed)).collect();
    let pass = items.iter().all(|i| i.pass);
    SuiteReport { seed, items, pass }
}

/// Runs one item, timing it against its limit.
pub fn run_item(id: u32, seed: u64) -> ItemReport {
    let &(_, title, limit) = ITEMS.iter().find(|(i, _, _)| *i == id).expect("known suite item");
    let start = Instant::now();
    let mut t = Tally::default();
    match id {
        1 => tables(&mut t),
        2 => identities(&mut t, seed),
        3 => ternary(&mut t),
        4 => centrality(&mut t),
        5 => roots(&mut t, seed),
        6 => grading(&mut t, seed),
        7 => simplicity(&mut t, seed),
        8 => probes(&mut t),
        _ => unreachable!(),
    }
    let seconds = start.elapsed().as_secs_f64();
    let within_limit = seconds < limit;
    ItemReport {
        id,
        title: title.to_string(),
        checks: t.checks,
        failure_count: t.failure_count,
        failures: t.failures,
        seconds,
        limit_seconds: limit,
        within_limit,
        pass: t.failure_count == 0 && t.checks > 0 && within_limit,
    }
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn tables(t: &mut Tally) {
    let sl2 = make_sl2();
    let jac = make_jacobian("sl2-jacobian", sl2.casimir.clone().unwrap()).unwrap();
    for s in [&sl2, &jac] {
        t.eq("{h,e}", &br(s, &["h", "e"]), &p(s, "2e"));
        t.eq("{h,f}", &br(s, &["h", "f"]), &p(s, "-2f"));
        t.eq("{e,f}", &br(s, &["e", "f"]), &p(s, "h"));
    }

    // simple n-Lie algebras of dimension n + 1, diagonal and general forms
    let primes = [2, 3, 5, 7];
    for n in [2usize, 3] {
        let alphas: Vec<Rational> = primes[..=n].iter().map(|&a| int(a)).collect();
        let s = make_nlie_diagonal(&alphas).unwrap();
        for i in 0..=n {
            let args: Vec<String> = (0..=n).filter(|&j| j != i).map(|j| format!("e{}", j + 1)).collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let want = Polynomial::var(s.context(), i).scale(&alphas[i]);
            t.eq(&format!("[{}]", args.join(",")), &br(&s, &args), &want);
        }
    }
    let ctx = VarContext::new(["e1", "e2", "e3"]).unwrap();
    let f = parse_in(&ctx, "e1^2 + 3 e1 e2 - 2 e2 e3 + 5 e3^2").unwrap();
    let s = make_nlie(&f).unwrap();
    for i in 0..3 {
        let args: Vec<Polynomial> = (0..3).filter(|&j| j != i).map(|j| Polynomial::var(&ctx, j)).collect();
        let want = f.diff(i).scale(&int(sign(2 - i)));
        t.eq("L_2(f)", &s.bracket.eval(&args).unwrap(), &want);
    }

    // Jacobian bracket of an arbitrary polynomial on generators
    for (n, c) in [(2usize, "x1^3 x2 + 2 x2 x3^2 - x1"), (3, "x1 x2 x3 x4 + x1^2 - 3 x4^3 + x2 x3")] {
        let ctx = VarContext::numbered("x", n + 1);
        let c = parse_in(&ctx, c).unwrap();
        let s = make_jacobian("example", c.clone()).unwrap();
        for i in 0..=n {
            let args: Vec<Polynomial> = (0..=n).filter(|&j| j != i).map(|j| Polynomial::var(&ctx, j)).collect();
            let want = c.diff(i).scale(&int(sign(n - i)));
            t.eq(&format!("P_C n={n} slot {}", i + 1), &s.bracket.eval(&args).unwrap(), &want);
        }
    }

    for a in [0, 1, 2] {
        let s = make_elliptic(&int(a));
        t.eq("{x,y}", &br(&s, &["x", "y"]), &p(&s, &format!("-{a} x y + z^2")));
        t.eq("{y,z}", &br(&s, &["y", "z"]), &p(&s, &format!("-{a} y z + x^2")));
        t.eq("{z,x}", &br(&s, &["z", "x"]), &p(&s, &format!("-{a} z x + y^2")));
    }

    let s = make_malcev_splittable();
    let printed = [
        ("h", "x", "2x"),
        ("h", "y", "2y"),
        ("h", "z", "2z"),
        ("h", "x'", "-2x'"),
        ("h", "y'", "-2y'"),
        ("h", "z'", "-2z'"),
        ("x", "x'", "h"),
        ("y", "y'", "h"),
        ("z", "z'", "h"),
        ("x", "y", "2z'"),
        ("y", "z", "2x'"),
        ("z", "x", "2y'"),
        ("x'", "y'", "-2z"),
        ("y'", "z'", "-2x"),
        ("z'", "x'", "-2y"),
    ];
    let names = s.context().names().to_vec();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            let want = printed
                .iter()
                .find_map(|(u, v, w)| {
                    if (u, v) == (&a.as_str(), &b.as_str()) {
                        Some(p(&s, w))
                    } else if (v, u) == (&a.as_str(), &b.as_str()) {
                        Some(-p(&s, w))
                    } else {
                        None
                    }
                })
                .unwrap_or_else(|| Polynomial::zero(s.context()));
            t.eq(&format!("[{a},{b}]"), &br(&s, &[a, b]), &want);
        }
    }

    let s = make_malcev_canonical();
    let e = |i: usize| format!("e{}", i % 7 + 1);
    for i in 0..7 {
        let (a, b, c) = (e(i), e(i + 1), e(i + 3));
        t.eq(&format!("[{a},{b}]"), &br(&s, &[&a, &b]), &p(&s, &c));
        t.eq(&format!("[{b},{c}]"), &br(&s, &[&b, &c]), &p(&s, &a));
        t.eq(&format!("[{c},{a}]"), &br(&s, &[&c, &a]), &p(&s, &b));
    }

    let s = make_malcev_abg(&int(2), &int(3), &int(5)).unwrap();
    t.eq("[f1,f2]", &br(&s, &["f1", "f2"]), &p(&s, "f4"));
    t.eq("[f2,f4]", &br(&s, &["f2", "f4"]), &p(&s, "3 f1"));
    t.eq("[f5,f6]", &br(&s, &["f5", "f6"]), &p(&s, "15 f1"));
    let want = p(&s, "15 f1^2 + 10 f2^2 + 6 f3^2 + 5 f4^2 + 2 f5^2 + f6^2 + 3 f7^2");
    t.eq("c(2,3,5)", s.casimir.as_ref().unwrap(), &want);
}

fn identities(t: &mut Tally, seed: u64) {
    const TRIALS: usize = 100;
    let cfg = TrialConfig::new(TRIALS, seed);
    let full = [make_sl2(), make_elliptic(&int(1)), make_quadric(4).unwrap()];
    for s in &full {
        t.report(&verify_skew(&s.bracket, &cfg), &s.name, TRIALS);
        t.report(&verify_leibniz(&s.bracket, &cfg), &s.name, TRIALS);
        t.report(&verify_filippov(&s.bracket, &cfg), &s.name, TRIALS);
        t.report(&verify_strong(&s.bracket, &cfg), &s.name, TRIALS);
    }
    let s = make_malcev_splittable();
    t.report(&verify_skew(&s.bracket, &cfg), &s.name, TRIALS);
    t.report(&verify_leibniz(&s.bracket, &cfg), &s.name, TRIALS);
}

fn ternary(t: &mut Tally) {
    let s = make_malcev_splittable();
    let j = |a: &str, b: &str, c: &str| ternary_jacobian(&s.bracket, &p(&s, a), &p(&s, b), &p(&s, c)).unwrap();
    t.eq("J(x,y,h)", &j("x", "y", "h"), &p(&s, "12z'"));
    for a in ["x'", "y'", "z'"] {
        t.eq(&format!("J({a},y,h)"), &j(a, "y", "h"), &Polynomial::zero(s.context()));
    }
    t.eq("J(y,x,h)", &j("y", "x", "h"), &p(&s, "-12z'"));
    t.eq("J(z,x,h)", &j("z", "x", "h"), &p(&s, "12y'"));
    t.eq("J(y',x,x')", &j("y'", "x", "x'"), &p(&s, "-6y'"));
    t.eq("J(z',x,x')", &j("z'", "x", "x'"), &p(&s, "-6z'"));
    for lambda in [1, 2, -3] {
        let q = QuotientContext::from_spec(&s, int(lambda)).unwrap();
        let lhs = q.reduce(&p(&s, "y y' + z z'"));
        let rhs = q.reduce(&p(&s, &format!("-({lambda}) - x x' - 1/4 h^2")));
        t.eq(&format!("yy'+zz' at lambda={lambda}"), &lhs, &rhs);
    }
}

fn central(t: &mut Tally, s: &AlgebraSpec) {
    let c = s.casimir.as_ref().expect("built-in Casimir");
    let m = center_membership(&s.bracket, c, None);
    t.check(m.central, || format!("{} Casimir {c} not central: {:?}", s.name, m.defects.first()));
}

fn centrality(t: &mut Tally) {
    central(t, &make_sl2());
    for a in [0, 1, 2] {
        central(t, &make_elliptic(&int(a)));
    }
    for nv in [3, 4, 5] {
        central(t, &make_quadric(nv).unwrap());
        let alphas: Vec<Rational> = (1..=nv as i64).map(|a| int(if a % 2 == 0 { -a } else { a })).collect();
        central(t, &make_nlie_diagonal(&alphas).unwrap());
    }
    central(t, &make_malcev_canonical());
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                central(t, &make_malcev_abg(&int(a), &int(b), &int(c)).unwrap());
            }
        }
    }
    central(t, &make_malcev_splittable());
}

fn roots(t: &mut Tally, seed: u64) {
    let mut r = rng(seed);
    let shape = RandomShape::default();
    for case in 0..50 {
        let nv = r.gen_range(1..=4);
        let ctx = VarContext::numbered("x", nv);
        let d = r.gen_range(1..=3);
        let c = random_homogeneous(&mut r, &ctx, d, shape);
        let k = r.gen_range(2..=4u32);
        let num = r.gen_range(1..=9i64) * if r.gen_bool(0.5) { 1 } else { -1 };
        let alpha = Rational::new(num.into(), r.gen_range(1..=5i64).into());
        let big = c.pow(k).scale(&alpha);
        match kth_root(&big, k) {
            Ok(res) => {
                let ok = res.root.as_ref().is_some_and(|kr| kr.root.pow(k).scale(&kr.alpha) == big && kr.root.monic() == c.monic());
                t.check(ok, || format!("case {case}: no {k}-th root recovered from {big}"));
            }
            Err(e) => t.check(false, || format!("case {case}: {e}")),
        }
        match minimal_root_homogeneous(&big) {
            Ok(mr) => {
                let ok = is_closed_homogeneous(&mr.root).is_ok_and(|cl| cl.closed) && mr.root.pow(mr.k).scale(&mr.alpha) == big;
                t.check(ok, || format!("case {case}: minimal root {} of {big} is not a closed root", mr.root));
            }
            Err(e) => t.check(false, || format!("case {case}: {e}")),
        }
    }
    let mut closed = vec![make_sl2()];
    closed.extend([0, 1, 2].map(|a| make_elliptic(&int(a))));
    closed.extend([3, 4, 5].map(|nv| make_quadric(nv).unwrap()));
    for s in &closed {
        let c = s.casimir.as_ref().unwrap();
        let ok = is_closed_homogeneous(c).is_ok_and(|cl| cl.closed);
        t.check(ok, || format!("{} Casimir {c} reported not closed", s.name));
    }
}

fn grading(t: &mut Tally, seed: u64) {
    const TRIALS: usize = 50;
    let mut r = rng(seed);
    let shape = RandomShape::default();
    let algebras = [make_quadric(3).unwrap(), make_elliptic(&int(1)), make_quadric(4).unwrap()];
    let quotients: Vec<QuotientContext> = algebras.iter().map(|s| QuotientContext::from_spec(s, int(1)).unwrap()).collect();
    for q in &quotients {
        let (n, m) = (q.bracket().arity(), q.m());
        for trial in 0..TRIALS {
            let residues: Vec<u32> = (0..n).map(|_| r.gen_range(0..m)).collect();
            let fs: Vec<Polynomial> =
                residues.iter().map(|&res| random_m_homogeneous(&mut r, q.context(), m, res, 4, shape)).collect();
            let want = q.predicted_residue(&residues).unwrap();
            let got = q.bracket_eval(&fs).unwrap();
            let classes = q.grade_decompose(&got);
            let ok = classes.is_empty() || (classes.len() == 1 && classes[0].residue == want);
            t.check(ok, || {
                let got: Vec<u32> = classes.iter().map(|c| c.residue).collect();
                format!("n={n} m={m} trial {trial}: residues {residues:?} gave {got:?}, predicted {want}")
            });
        }
    }
    for trial in 0..TRIALS {
        let q = &quotients[trial % quotients.len()];
        let m = q.m();
        let f = loop {
            let res = r.gen_range(0..m);
            let f = random_m_homogeneous(&mut r, q.context(), m, res, 5, shape);
            if !q.reduce(&f).is_zero() {
                break f;
            }
        };
        match q.lift(&f) {
            Ok(l) => {
                let ok = l.is_homogeneous() && l.total_degree() == f.total_degree() && q.reduce(&l) == q.reduce(&f);
                t.check(ok, || format!("lift trial {trial}: {f} lifted to {l}"));
            }
            Err(e) => t.check(false, || format!("lift trial {trial}: {e}")),
        }
    }
}

fn degree_two_seed<R: Rng>(r: &mut R, ctx: &Arc<VarContext>) -> Polynomial {
    let shape = RandomShape::default();
    let low = RandomShape { max_degree: 1, ..shape };
    &random_homogeneous(r, ctx, 2, shape) + &random_poly(r, ctx, low)
}

fn saturation(t: &mut Tally, s: &AlgebraSpec, lambda: i64, seed: Polynomial, expect: Verdict) {
    let q = QuotientContext::from_spec(s, int(lambda)).unwrap();
    let start = Instant::now();
    let out = saturate_poisson_ideal(&q, &[seed.clone()], SaturationConfig::default());
    let secs = start.elapsed().as_secs_f64();
    match out {
        Ok(rep) => {
            let ok = rep.verdict == expect && (expect != Verdict::ProperStable || rep.verified) && secs < SATURATION_RUN_LIMIT;
            t.check(ok, || {
                format!("{} lambda={lambda} seed {seed}: {} in {secs:.1}s, expected {}", s.name, rep.verdict.as_str(), expect.as_str())
            });
        }
        Err(e) => t.check(false, || format!("{} lambda={lambda} seed {seed}: {e}", s.name)),
    }
}

fn simplicity(t: &mut Tally, seed: u64) {
    let mut r = rng(seed);
    for s in [make_quadric(3).unwrap(), make_sl2(), make_elliptic(&int(1))] {
        for lambda in [1, -1] {
            for g in Polynomial::vars(s.context()) {
                saturation(t, &s, lambda, g, Verdict::WholeRing);
            }
            let g = degree_two_seed(&mut r, s.context());
            saturation(t, &s, lambda, g, Verdict::WholeRing);
        }
    }
    let s = make_quadric(4).unwrap();
    for g in Polynomial::vars(s.context()) {
        saturation(t, &s, 1, g, Verdict::WholeRing);
    }
    let g = degree_two_seed(&mut r, s.context());
    saturation(t, &s, 1, g, Verdict::WholeRing);
    let s = make_malcev_splittable();
    for g in ["h", "x"] {
        saturation(t, &s, 1, p(&s, g), Verdict::WholeRing);
    }
    let ctx = VarContext::new(["x", "y", "z"]).unwrap();
    let s = make_jacobian("square", parse_in(&ctx, "(x + y + z)^2").unwrap()).unwrap();
    saturation(t, &s, 1, p(&s, "x + y + z - 1"), Verdict::ProperStable);
}

fn probes(t: &mut Tally) {
    for s in [make_sl2(), make_quadric(3).unwrap(), make_quadric(4).unwrap()] {
        let q = QuotientContext::from_spec(&s, int(1)).unwrap();
        let probe = center_probe_quotient(&q, 3);
        t.check(probe.constants_only(), || format!("{} quotient center to degree 3: {:?}", s.name, probe.basis));
    }
    for s in [make_sl2(), make_quadric(3).unwrap(), make_quadric(4).unwrap(), make_elliptic(&int(1))] {
        let c = s.casimir.as_ref().unwrap();
        let m = c.total_degree().unwrap();
        let probe = center_probe_ambient(&s.bracket, m);
        t.check(spans_one_and(&probe.basis, c), || format!("{} ambient center to degree {m}: {:?}", s.name, probe.basis));
    }
}

/// True iff `basis` spans exactly `{1, c}`.
fn spans_one_and(basis: &[Polynomial], c: &Polynomial) -> bool {
    let (lm, lc) = c.leading_term().expect("nonzero");
    let has_one = basis.iter().any(|b| b.is_constant() && !b.is_zero());
    basis.len() == 2
        && has_one
        && basis.iter().any(|b| !b.is_constant())
        && basis.iter().all(|b| (b - &c.scale(&(b.coefficient(lm) / lc))).is_constant())
}
