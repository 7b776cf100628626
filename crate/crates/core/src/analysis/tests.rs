use super::*;
use crate::brackets::JacobianBracket;
use crate::expr::parse_in;
use crate::poly::{int, Polynomial, VarContext};
use crate::quotient::QuotientContext;
use crate::structures::{make_elliptic, make_jacobian, make_malcev_abg, make_malcev_canonical, make_malcev_splittable, make_quadric, make_sl2};

fn quadric_xyz() -> (JacobianBracket, Polynomial) {
    let s = make_quadric(3).unwrap();
    (s.bracket.as_jacobian().unwrap().clone(), s.casimir.unwrap())
}

#[test]
fn jacobian_membership() {
    let (b, c) = quadric_xyz();
    assert!(center_membership_jacobian(&b, &c, None).central);
    let poly = &(&c * &c) + &c.scale(&int(3));
    assert!(center_membership_jacobian(&b, &poly, None).central);
    let x = Polynomial::var(b.context(), 0);
    let m = center_membership_jacobian(&b, &x, None);
    assert!(!m.central);
    // ∂x/∂x ∂C/∂y − 0 = 2y
    assert_eq!(m.defects[0].at, ["x", "y"]);
    assert_eq!(m.defects[0].value, "2*y");
}

#[test]
fn casimir_powers_are_central() {
    for s in [make_sl2(), make_elliptic(&int(1)), make_quadric(4).unwrap()] {
        let c = s.casimir.clone().unwrap();
        for j in 1..=3 {
            assert!(center_membership(&s.bracket, &c.pow(j), None).central, "{} C^{j}", s.name);
        }
    }
}

#[test]
fn table_membership() {
    let s = make_malcev_canonical();
    assert!(center_membership_table(&s.bracket, s.casimir.as_ref().unwrap(), None).central);
    for a in 1..=3 {
        for b in 1..=3 {
            let t = make_malcev_abg(&int(a), &int(b), &int(a + b)).unwrap();
            assert!(center_membership(&t.bracket, t.casimir.as_ref().unwrap(), None).central);
        }
    }
    let sp = make_malcev_splittable();
    let h = Polynomial::var(sp.context(), 0);
    let m = center_membership(&sp.bracket, &h, None);
    assert!(!m.central);
    assert_eq!(m.defects[0].at, ["x"]);
    assert_eq!(m.defects[0].value, "2*x");
}

#[test]
fn quotient_membership() {
    let s = make_sl2();
    let q = QuotientContext::from_spec(&s, int(1)).unwrap();
    let c = s.casimir.clone().unwrap();
    let j = s.jacobian_form.clone().unwrap();
    assert!(center_membership_jacobian(&j, &c, Some(&q)).central);
    assert!(!center_membership_jacobian(&j, &Polynomial::var(&q.context().clone(), 2), Some(&q)).central);
}

#[test]
fn dependence() {
    let ctx = VarContext::new(["x", "y", "z"]).unwrap();
    let p = |s: &str| parse_in(&ctx, s).unwrap();
    assert_eq!(jacobian_dependence(&[p("x"), p("y")]).unwrap(), Dependence { rank: 2, dependent: false });
    let f = p("x y + z^2");
    assert!(jacobian_dependence(&[f.clone(), &(&f * &f) + &Polynomial::one(&ctx)]).unwrap().dependent);
    let c2 = VarContext::new(["x", "y"]).unwrap();
    let u = parse_in(&c2, "x + y").unwrap();
    let v = parse_in(&c2, "(x + y)^3 - 2").unwrap();
    assert_eq!(jacobian_dependence(&[u, v]).unwrap().rank, 1);
    assert!(matches!(jacobian_dependence(&[p("x"), p("y"), p("z"), p("x")]), Err(AnalysisError::TooManyPolynomials { .. })));
    let mut r = crate::random::rng(5);
    for _ in 0..10 {
        let f = crate::random::random_poly(&mut r, &ctx, Default::default());
        let g = &(&f.pow(2).scale(&int(3)) - &f) + &Polynomial::constant(&ctx, int(7));
        assert!(jacobian_dependence(&[f, g]).unwrap().dependent);
    }
}

#[test]
fn saturation_quadric_reaches_whole_ring() {
    let s = make_quadric(3).unwrap();
    let q = QuotientContext::from_spec(&s, int(1)).unwrap();
    let x = Polynomial::var(q.context(), 0);
    let r = saturate_poisson_ideal(&q, &[x], SaturationConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::WholeRing);
    assert!(r.final_basis.iter().any(Polynomial::is_one));
}

#[test]
fn saturation_non_closed_stays_proper() {
    let ctx = VarContext::new(["x", "y", "z"]).unwrap();
    let c = parse_in(&ctx, "(x + y + z)^2").unwrap();
    let s = make_jacobian("square", c).unwrap();
    let q = QuotientContext::from_spec(&s, int(1)).unwrap();
    let seed = parse_in(&ctx, "x + y + z - 1").unwrap();
    let r = saturate_poisson_ideal(&q, &[seed], SaturationConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::ProperStable);
    assert!(r.verified);
}

#[test]
fn saturation_budget_is_reported() {
    let s = make_elliptic(&int(1));
    let q = QuotientContext::from_spec(&s, int(1)).unwrap();
    let x = Polynomial::var(q.context(), 0);
    let r = saturate_poisson_ideal(&q, &[x], SaturationConfig { max_rounds: 25, budget: 3 }).unwrap();
    assert_eq!(r.verdict, Verdict::BudgetExhausted);
    assert!(r.exhausted.is_some());
    let zero = Polynomial::zero(q.context());
    assert_eq!(saturate_poisson_ideal(&q, &[zero], SaturationConfig::default()).unwrap_err(), AnalysisError::SeedsVanish);
}

#[test]
fn center_probes() {
    let sl2 = make_sl2();
    let q = QuotientContext::from_spec(&sl2, int(1)).unwrap();
    assert!(center_probe_quotient(&q, 2).constants_only());
    let amb = center_probe_ambient(&sl2.bracket, 2);
    assert_eq!(amb.basis.len(), 2);
    let c = sl2.casimir.clone().unwrap().monic();
    assert!(amb.basis.contains(&c), "{:?}", amb.basis);
    let quad = make_quadric(4).unwrap();
    let q4 = QuotientContext::from_spec(&quad, int(1)).unwrap();
    assert!(center_probe_quotient(&q4, 2).constants_only());
}

#[test]
fn probe_degree_truncation() {
    let s = make_elliptic(&int(1));
    let d3 = center_probe_ambient(&s.bracket, 3);
    let d2 = center_probe_ambient(&s.bracket, 2);
    let low: Vec<Polynomial> = d3.basis.iter().filter(|p| p.total_degree().unwrap_or(0) <= 2).cloned().collect();
    assert_eq!(low, d2.basis);
    assert_eq!(d3.basis.len(), 2);
}
