use std::sync::Arc;

use super::*;
use crate::poly::{int, rat, Polynomial, VarContext};

fn ctx(names: &[&str]) -> Arc<VarContext> {
    VarContext::new(names.iter().copied()).unwrap()
}

fn sl2_casimir(c: &Arc<VarContext>) -> Polynomial {
    let [e, f, h] = [0, 1, 2].map(|i| Polynomial::var(c, i));
    &(&h * &h).scale(&rat(1, 2)) + &(&e * &f).scale(&int(2))
}

fn sl2_table(c: &Arc<VarContext>) -> TableBracket {
    let [e, f, h] = [0, 1, 2].map(|i| Polynomial::var(c, i));
    let mut t = StructureTable::new(c, 2).unwrap();
    t.set(&[2, 0], e.scale(&int(2))).unwrap();
    t.set(&[2, 1], f.scale(&int(-2))).unwrap();
    t.set(&[0, 1], h).unwrap();
    TableBracket::new(t)
}

#[test]
fn jacobian_of_identity_map_is_one() {
    let c = VarContext::numbered("x", 4);
    assert!(jacobian(&Polynomial::vars(&c)).unwrap().is_one());
}

#[test]
fn jacobian_repeated_row_vanishes() {
    let c = ctx(&["x", "y", "z"]);
    let [x, y, z] = [0, 1, 2].map(|i| Polynomial::var(&c, i));
    let f = &(&x * &y) + &z;
    assert!(jacobian(&[f.clone(), f, y]).unwrap().is_zero());
}

#[test]
fn jacobian_two_by_two() {
    let c = ctx(&["x", "y"]);
    let [x, y] = [0, 1].map(|i| Polynomial::var(&c, i));
    assert_eq!(jacobian(&[&x * &x, y]).unwrap(), x.scale(&int(2)));
    assert_eq!(jacobian(&[x]).unwrap_err(), BracketError::Arity { expected: 2, got: 1 });
}

#[test]
fn sl2_jacobian_bracket() {
    let c = ctx(&["e", "f", "h"]);
    let [e, f, h] = [0, 1, 2].map(|i| Polynomial::var(&c, i));
    let b = JacobianBracket::new(sl2_casimir(&c)).unwrap();
    assert_eq!(b.arity(), 2);
    assert_eq!(b.eval(&[e.clone(), f.clone()]).unwrap(), h);
    assert_eq!(b.eval(&[h.clone(), e.clone()]).unwrap(), e.scale(&int(2)));
    assert_eq!(b.eval(&[h.clone(), f.clone()]).unwrap(), f.scale(&int(-2)));
    assert!(b.eval(&[e.clone(), e]).unwrap().is_zero());
}

#[test]
fn sl2_table_agrees_with_jacobian() {
    let c = ctx(&["e", "f", "h"]);
    let jb = JacobianBracket::new(sl2_casimir(&c)).unwrap();
    let tb = sl2_table(&c);
    for t in increasing_tuples(3, 2) {
        assert_eq!(jb.on_generators(&t).unwrap(), tb.on_generators(&t).unwrap(), "{t:?}");
    }
    let mut r = crate::random::rng(7);
    for _ in 0..20 {
        let a = crate::random::random_poly(&mut r, &c, Default::default());
        let b = crate::random::random_poly(&mut r, &c, Default::default());
        assert_eq!(jb.eval(&[a.clone(), b.clone()]).unwrap(), tb.eval(&[a, b]).unwrap());
    }
}

#[test]
fn elliptic_brackets() {
    let c = ctx(&["x", "y", "z"]);
    let [x, y, z] = [0, 1, 2].map(|i| Polynomial::var(&c, i));
    for alpha in [0, 1, 2] {
        let a = int(alpha);
        let cub = &(&(&x.pow(3) + &y.pow(3)) + &z.pow(3)).scale(&rat(1, 3)) - &(&(&x * &y) * &z).scale(&a);
        let b = JacobianBracket::new(cub).unwrap();
        let expect = |p: &Polynomial, q: &Polynomial, r: &Polynomial| &(r * r) - &(p * q).scale(&a);
        assert_eq!(b.eval(&[x.clone(), y.clone()]).unwrap(), expect(&x, &y, &z));
        assert_eq!(b.eval(&[y.clone(), z.clone()]).unwrap(), expect(&y, &z, &x));
        assert_eq!(b.eval(&[z.clone(), x.clone()]).unwrap(), expect(&z, &x, &y));
    }
}

#[test]
fn generator_tuple_is_signed_partial() {
    // {x_1, …, x̂_i, …, x_{n+1}} = (−1)^{n−i+1} ∂C/∂x_i with 1-based i
    let c = VarContext::numbered("x", 4);
    let v = Polynomial::vars(&c);
    let cas = &(&(&v[0] * &v[1]) * &v[2]) + &(&v[3].pow(3) - &(&v[0] * &v[0]));
    let b = JacobianBracket::new(cas.clone()).unwrap();
    let n = 3;
    for i in 1..=4usize {
        let tuple: Vec<usize> = (0..4).filter(|&j| j != i - 1).collect();
        let d = cas.diff(i - 1);
        let expect = if (n + 1 - i) % 2 == 0 { d } else { -d };
        assert_eq!(b.on_generators(&tuple).unwrap(), expect, "i = {i}");
    }
}

#[test]
fn multiple_casimirs() {
    // {f, g} = J(f, g, C1, C2) after moving the casimir rows last
    let c = VarContext::numbered("x", 4);
    let v = Polynomial::vars(&c);
    let c1 = &(&v[0] * &v[0]) + &v[3];
    let c2 = &v[1] * &v[2];
    let b = JacobianBracket::with_casimirs(vec![c1.clone(), c2.clone()]).unwrap();
    assert_eq!(b.arity(), 2);
    let f = &v[0] + &(&v[1] * &v[3]);
    let g = v[2].pow(2);
    let direct = jacobian(&[f.clone(), g.clone(), c1, c2]).unwrap();
    assert_eq!(b.eval(&[f, g]).unwrap(), direct);
}

#[test]
fn constructor_errors() {
    let c = ctx(&["x", "y", "z"]);
    assert_eq!(JacobianBracket::new(Polynomial::one(&c)).unwrap_err(), BracketError::ConstantCasimir("1".into()));
    assert_eq!(JacobianBracket::with_casimirs(vec![]).unwrap_err(), BracketError::NoCasimir);
    let c2 = ctx(&["x", "y"]);
    assert!(JacobianBracket::new(Polynomial::var(&c2, 0)).is_err());
    let mut t = StructureTable::new(&c, 2).unwrap();
    let x = Polynomial::var(&c, 0);
    assert_eq!(t.set(&[0, 0], x.clone()).unwrap_err(), BracketError::RepeatedGenerator(vec![0, 0]));
    assert_eq!(t.set(&[0, 5], x.clone()).unwrap_err(), BracketError::GeneratorOutOfRange(5));
    assert!(matches!(t.set(&[0, 1], &x * &x), Err(BracketError::NonLinearConstant(_))));
    assert!(StructureTable::new(&c, 4).is_err());
}

#[test]
fn table_sign_normalization() {
    let c = ctx(&["a", "b", "c", "d"]);
    let d = Polynomial::var(&c, 3);
    let mut t = StructureTable::new(&c, 3).unwrap();
    t.set(&[2, 0, 1], d.clone()).unwrap();
    assert_eq!(t.get(&[0, 1, 2]), d);
    assert_eq!(t.get(&[1, 0, 2]), -&d);
    assert!(t.get(&[0, 0, 2]).is_zero());
    assert_eq!(sort_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
    assert_eq!(sort_sign(&[1, 0]), Some((vec![0, 1], -1)));
    assert_eq!(sort_sign(&[1, 1]), None);
}

#[test]
fn lie_table_has_vanishing_jacobiator() {
    let c = ctx(&["e", "f", "h"]);
    let b = sl2_table(&c);
    let mut r = crate::random::rng(3);
    for _ in 0..10 {
        let [p, q, s] = [0; 3].map(|_| crate::random::random_poly(&mut r, &c, Default::default()));
        assert!(ternary_jacobian(&b, &p, &q, &s).unwrap().is_zero());
    }
}

#[test]
fn generator_table_lists_nonzero_entries() {
    let c = ctx(&["e", "f", "h"]);
    let jb = JacobianBracket::new(sl2_casimir(&c)).unwrap();
    let t = generator_table(&jb);
    assert_eq!(t.len(), 3);
    assert_eq!(t[0].0, vec![0, 1]);
    assert_eq!(t[0].1.to_string(), "h");
}

#[test]
fn identity_reports_on_sl2() {
    let c = ctx(&["e", "f", "h"]);
    let jb = JacobianBracket::new(sl2_casimir(&c)).unwrap();
    let cfg = TrialConfig::new(20, 1);
    for report in [verify_skew(&jb, &cfg), verify_leibniz(&jb, &cfg), verify_filippov(&jb, &cfg), verify_strong(&jb, &cfg)] {
        assert!(report.pass, "{report:?}");
        assert!(report.failures.is_empty());
    }
    let f = verify_filippov(&jb, &cfg);
    assert_eq!(f.generator_checks, 9);
    assert_eq!(f.trials, 20);
}

#[test]
fn non_lie_table_yields_filippov_witness() {
    // [a,b] = c, [a,c] = c, [b,c] = a violates Jacobi on (a, b, c)
    let c = ctx(&["a", "b", "c"]);
    let v = Polynomial::vars(&c);
    let mut t = StructureTable::new(&c, 2).unwrap();
    t.set(&[0, 1], v[2].clone()).unwrap();
    t.set(&[0, 2], v[2].clone()).unwrap();
    t.set(&[1, 2], v[0].clone()).unwrap();
    let b = TableBracket::new(t);
    let report = verify_filippov(&b, &TrialConfig::new(5, 0));
    assert!(!report.pass);
    assert!(report.witness().is_some());
    assert!(verify_leibniz(&b, &TrialConfig::new(10, 0)).pass);
    assert!(verify_skew(&b, &TrialConfig::new(10, 0)).pass);
}

#[test]
fn strong_identity_at_arity_three() {
    let c = VarContext::numbered("x", 4);
    let q = Polynomial::vars(&c).iter().fold(Polynomial::zero(&c), |acc, v| &acc + &(v * v));
    let b = JacobianBracket::new(q).unwrap();
    let r = verify_strong(&b, &TrialConfig::new(10, 2));
    assert!(r.pass, "{r:?}");
    assert_eq!(r.generator_checks, 6);
}
