use std::sync::Arc;

use nlie_core::brackets::{Bracket, TrialConfig, verify_leibniz};
use nlie_core::expr::parse_in;
use nlie_core::groebner::{buchberger, divide, GroebnerBasis, GroebnerError, MonomialOrder};
use nlie_core::poly::{int, Monomial, Polynomial, Rational, VarContext};
use nlie_core::quotient::{random_m_homogeneous, QuotientContext};
use nlie_core::random::{random_homogeneous, random_poly, rng, RandomShape};
use nlie_core::structures::{make_elliptic, make_malcev_canonical, make_malcev_splittable, make_quadric, make_sl2};
use proptest::prelude::*;

fn ctx(n: usize) -> Arc<VarContext> {
    VarContext::numbered("x", n)
}

fn poly_in(c: Arc<VarContext>, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = c.len();
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        let terms: Vec<(Monomial, Rational)> = terms
            .into_iter()
            .map(|(mut e, k)| {
                // cap total degree by trimming from the end
                let mut total: u32 = e.iter().sum();
                for x in e.iter_mut().rev() {
                    while total > max_deg && *x > 0 {
                        *x -= 1;
                        total -= 1;
                    }
                }
                (Monomial::from_exponents(e), int(k))
            })
            .collect();
        Polynomial::from_terms(&c, terms)
    })
}

fn seeded(c: &Arc<VarContext>, seed: u64) -> Polynomial {
    random_poly(&mut rng(seed), c, RandomShape::default())
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in (1usize..=5).prop_flat_map(|n| {
        let cx = ctx(n);
        (poly_in(cx.clone(), 4, 5), poly_in(cx.clone(), 4, 5), poly_in(cx, 4, 5))
    })) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!((&a * &b).total_degree().unwrap(), a.total_degree().unwrap() + b.total_degree().unwrap());
        }
    }

    #[test]
    fn derivation_and_schwarz((f, g, i, j) in (1usize..=5).prop_flat_map(|n| {
        let cx = ctx(n);
        (poly_in(cx.clone(), 4, 5), poly_in(cx, 4, 5), 0..n, 0..n)
    })) {
        prop_assert_eq!((&f * &g).diff(i), &(&f * &g.diff(i)) + &(&g * &f.diff(i)));
        prop_assert_eq!(f.diff(i).diff(j), f.diff(j).diff(i));
    }

    #[test]
    fn homogeneous_partition(f in poly_in(ctx(4), 4, 8)) {
        let comps = f.homogeneous_components();
        let sum = comps.values().fold(Polynomial::zero(f.context()), |acc, p| &acc + p);
        prop_assert_eq!(sum, f);
        for (d, p) in comps {
            prop_assert!(p.is_homogeneous());
            prop_assert_eq!(p.total_degree(), Some(d));
        }
    }

    #[test]
    fn division_is_exact(f in poly_in(ctx(3), 4, 6), ds in prop::collection::vec(poly_in(ctx(3), 3, 3), 1..=3), lex in any::<bool>()) {
        let ds: Vec<Polynomial> = ds.into_iter().filter(|d| !d.is_zero()).collect();
        prop_assume!(!ds.is_empty());
        let order = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
        let div = divide(&f, &ds, &order).unwrap();
        let mut back = div.remainder.clone();
        for (q, d) in div.quotients.iter().zip(&ds) {
            back = &back + &(q * d);
        }
        prop_assert_eq!(back, f);
        let leads: Vec<Monomial> = ds.iter().map(|d| order.leading_monomial(d).unwrap().clone()).collect();
        for (m, _) in div.remainder.terms() {
            prop_assert!(!leads.iter().any(|l| l.divides(m)));
        }
    }

    #[test]
    fn principal_shortcut(p in poly_in(ctx(3), 3, 4)) {
        prop_assume!(!p.is_zero());
        let order = MonomialOrder::grevlex();
        let g = buchberger(std::slice::from_ref(&p), &order, 10_000).unwrap();
        prop_assert_eq!(g.generators(), &[p.monic()]);
        prop_assert_eq!(g, GroebnerBasis::principal(&p, &order).unwrap());
    }
}

fn s_poly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mf, cf) = order.leading_term(f).unwrap();
    let (mg, cg) = order.leading_term(g).unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_monomial(&mf.divide_into(&l).unwrap()).scale(&cf.recip());
    let b = g.mul_monomial(&mg.divide_into(&l).unwrap()).scale(&cg.recip());
    &a - &b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_soundness(gens in prop::collection::vec(poly_in(ctx(3), 3, 3), 1..=3), lex in any::<bool>()) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let order = if lex { MonomialOrder::lex() } else { MonomialOrder::grevlex() };
        let g = match buchberger(&gens, &order, 20_000) {
            Ok(g) => g,
            Err(GroebnerError::BudgetExhausted { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let basis = g.generators();
        for (i, a) in basis.iter().enumerate() {
            prop_assert_eq!(&order.leading_term(a).unwrap().1, &int(1));
            for b in &basis[i + 1..] {
                let s = s_poly(a, b, &order);
                prop_assert!(divide(&s, basis, &order).unwrap().remainder.is_zero());
            }
        }
        for p in &gens {
            prop_assert!(g.contains(p));
        }
    }

    #[test]
    fn normal_form_canonicity(gens in prop::collection::vec(poly_in(ctx(3), 2, 3), 1..=2), f in poly_in(ctx(3), 3, 5), mults in prop::collection::vec(poly_in(ctx(3), 2, 3), 2)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let order = MonomialOrder::grevlex();
        let Ok(g) = buchberger(&gens, &order, 20_000) else { return Ok(()) };
        let mut other = f.clone();
        for (m, p) in mults.iter().zip(&gens) {
            other = &other + &(m * p);
        }
        prop_assert_eq!(g.normal_form(&f), g.normal_form(&other));
        let r = divide(&(&f - &g.normal_form(&f)), g.generators(), &order).unwrap();
        prop_assert!(r.remainder.is_zero());
    }

    #[test]
    fn brackets_are_multilinear(seed in any::<u64>(), k in -5i64..=5, which in 0usize..3) {
        let spec = [make_sl2(), make_quadric(4).unwrap(), make_malcev_splittable()][which].clone();
        let b = &spec.bracket;
        let c = spec.context();
        let mut r = rng(seed);
        let args: Vec<Polynomial> = (0..b.arity()).map(|_| random_poly(&mut r, c, RandomShape::default())).collect();
        let extra = random_poly(&mut r, c, RandomShape::default());
        let slot = (seed % b.arity() as u64) as usize;
        let base = b.eval(&args).unwrap();
        let mut with_extra = args.clone();
        with_extra[slot] = extra.clone();
        let mut combined = args.clone();
        combined[slot] = &args[slot].scale(&int(k)) + &extra;
        prop_assert_eq!(b.eval(&combined).unwrap(), &base.scale(&int(k)) + &b.eval(&with_extra).unwrap());
    }

    #[test]
    fn quotient_product_is_well_defined(seed in any::<u64>(), which in 0usize..3) {
        let spec = [make_sl2(), make_elliptic(&int(2)), make_quadric(4).unwrap()][which].clone();
        let q = QuotientContext::from_spec(&spec, int(3)).unwrap();
        let (f, g) = (seeded(q.context(), seed), seeded(q.context(), seed ^ 0x9e37));
        prop_assert_eq!(q.reduce(&(&f * &g)), q.reduce(&(&q.reduce(&f) * &q.reduce(&g))));
    }

    #[test]
    fn quotient_bracket_ignores_representatives(seed in any::<u64>(), which in 0usize..3) {
        let spec = [make_sl2(), make_elliptic(&int(1)), make_malcev_splittable()][which].clone();
        let q = QuotientContext::from_spec(&spec, int(-2)).unwrap();
        let c = q.context();
        let mut r = rng(seed);
        let args: Vec<Polynomial> = (0..q.bracket().arity()).map(|_| random_poly(&mut r, c, RandomShape::default())).collect();
        let g = random_poly(&mut r, c, RandomShape::default());
        let mut moved = args.clone();
        let slot = (seed % args.len() as u64) as usize;
        moved[slot] = &moved[slot] + &(&q.modulus_generator() * &g);
        let direct = q.reduce(&q.bracket().eval(&args).unwrap());
        prop_assert_eq!(q.bracket_eval(&moved).unwrap(), direct);
    }

    #[test]
    fn grading_and_lift(seed in any::<u64>(), which in 0usize..3) {
        let spec = [make_sl2(), make_elliptic(&int(1)), make_quadric(4).unwrap()][which].clone();
        let q = QuotientContext::from_spec(&spec, int(1)).unwrap();
        let m = q.m();
        let mut r = rng(seed);
        let n = q.bracket().arity();
        let residues: Vec<u32> = (0..n).map(|i| ((seed >> (4 * i)) % u64::from(m)) as u32).collect();
        let args: Vec<Polynomial> = residues.iter().map(|&res| random_m_homogeneous(&mut r, q.context(), m, res, 4, RandomShape::default())).collect();
        let out = q.bracket_eval(&args).unwrap();
        let classes = q.grade_decompose(&out);
        prop_assert!(classes.len() <= 1);
        if let Some(cl) = classes.first() {
            prop_assert_eq!(cl.residue, q.predicted_residue(&residues).unwrap());
        }
        let f = &args[0];
        if !q.reduce(f).is_zero() {
            let l = q.lift(f).unwrap();
            prop_assert!(l.is_homogeneous());
            prop_assert_eq!(l.total_degree(), f.total_degree());
            prop_assert_eq!(q.reduce(&l), q.reduce(f));
        }
    }

    #[test]
    fn ideal_has_no_homogeneous_elements(seed in any::<u64>(), which in 0usize..3) {
        let spec = [make_sl2(), make_elliptic(&int(1)), make_quadric(3).unwrap()][which].clone();
        let q = QuotientContext::from_spec(&spec, int(1)).unwrap();
        let mut r = rng(seed);
        let d = (seed % u64::from(2 * q.m() + 1)) as u32;
        let f = random_homogeneous(&mut r, q.context(), d, RandomShape::default());
        prop_assert!(!q.reduce(&f).is_zero());
        // and a multiple of C − λ with a homogeneous cofactor is never homogeneous
        let g = &f * &q.modulus_generator();
        prop_assert!(q.reduce(&g).is_zero());
        prop_assert!(!g.is_homogeneous());
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>(), which in 0usize..3) {
        let spec = [make_sl2(), make_malcev_splittable(), make_malcev_canonical()][which].clone();
        let c = spec.context();
        let mut r = rng(seed);
        let shape = RandomShape { max_degree: 4, coeff_bound: 9, max_terms: 6 };
        let f = &random_poly(&mut r, c, shape).scale(&Rational::new(1.into(), 7.into())) - &random_poly(&mut r, c, shape);
        prop_assert_eq!(parse_in(c, &f.to_string()).unwrap(), f);
    }
}

#[test]
fn table_leibniz_on_canonical_malcev() {
    let s = make_malcev_canonical();
    assert!(verify_leibniz(&s.bracket, &TrialConfig::new(50, 9)).pass);
    // brute-force product rule on generator monomial triples
    let c = s.context();
    let v = Polynomial::vars(c);
    for a in 0..7 {
        for b in 0..7 {
            for d in 0..7 {
                let lhs = s.bracket.eval(&[&v[a] * &v[b], v[d].clone()]).unwrap();
                let rhs = &(&v[a] * &s.bracket.eval(&[v[b].clone(), v[d].clone()]).unwrap()) + &(&s.bracket.eval(&[v[a].clone(), v[d].clone()]).unwrap() * &v[b]);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
