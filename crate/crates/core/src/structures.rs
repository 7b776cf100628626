//! Built-in algebras and their Casimir elements.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::brackets::{generator_table, Bracket, BracketError, BracketStructure, JacobianBracket, StructureTable, TableBracket};
use crate::linalg;
use crate::poly::{int, rat, Polynomial, Rational, VarContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("`{0}` is not a homogeneous quadratic form")]
    NotQuadratic(String),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("scaled product [f{i}, f{j}] has a non-integral parameter power")]
    NonIntegralPower { i: usize, j: usize },
    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },
    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// A named bracket algebra with its Casimir element and construction
/// parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub bracket: BracketStructure,
    pub casimir: Option<Polynomial>,
    pub parameters: BTreeMap<String, Rational>,
    /// Jacobian bracket equal to a table bracket, when one is known.
    pub jacobian_form: Option<JacobianBracket>,
    /// Non-degeneracy of the defining quadratic form, for `𝕃_n(f)`.
    pub simple: Option<bool>,
}

impl AlgebraSpec {
    fn new(name: impl Into<String>, bracket: impl Into<BracketStructure>, casimir: Polynomial) -> Self {
        Self {
            name: name.into(),
            bracket: bracket.into(),
            casimir: Some(casimir),
            parameters: BTreeMap::new(),
            jacobian_form: None,
            simple: None,
        }
    }

    fn with_parameter(mut self, name: &str, value: Rational) -> Self {
        self.parameters.insert(name.to_string(), value);
        self
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.bracket.context()
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }

    /// Nonzero brackets of increasing generator tuples.
    pub fn generator_table(&self) -> Vec<(Vec<usize>, Polynomial)> {
        generator_table(&self.bracket)
    }

    pub fn summary(&self) -> AlgebraSummary {
        let ctx = self.context();
        AlgebraSummary {
            name: self.name.clone(),
            kind: match self.bracket {
                BracketStructure::Jacobian(_) => "jacobian",
                BracketStructure::Table(_) => "table",
            },
            generators: ctx.names().to_vec(),
            arity: self.arity(),
            parameters: self.parameters.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
            defining: self.bracket.as_jacobian().map(|j| j.casimirs().iter().map(ToString::to_string).collect()),
            constants: self
                .generator_table()
                .into_iter()
                .map(|(t, v)| TableEntry { tuple: t.iter().map(|&i| ctx.name(i).to_string()).collect(), value: v.to_string() })
                .collect(),
            casimir: self.casimir.as_ref().map(ToString::to_string),
            simple: self.simple,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub tuple: Vec<String>,
    pub value: String,
}

/// Serializable view of an [`AlgebraSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub kind: &'static str,
    pub generators: Vec<String>,
    pub arity: usize,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defining: Option<Vec<String>>,
    pub constants: Vec<TableEntry>,
    pub casimir: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
}

impl fmt::Display for AlgebraSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra     {}", self.name)?;
        writeln!(f, "kind        {}", self.kind)?;
        writeln!(f, "generators  {}", self.generators.join(", "))?;
        writeln!(f, "arity       {}", self.arity)?;
        for (k, v) in &self.parameters {
            writeln!(f, "param       {k} = {v}")?;
        }
        if let Some(d) = &self.defining {
            writeln!(f, "defining    {}", d.join("; "))?;
        }
        if let Some(c) = &self.casimir {
            writeln!(f, "casimir     {c}")?;
        }
        if let Some(s) = self.simple {
            writeln!(f, "simple      {s}")?;
        }
        for e in &self.constants {
            writeln!(f, "  {{{}}} = {}", e.tuple.join(", "), e.value)?;
        }
        Ok(())
    }
}

fn vars<const N: usize>(ctx: &Arc<VarContext>) -> [Polynomial; N] {
    std::array::from_fn(|i| Polynomial::var(ctx, i))
}

fn sum_of_squares(ctx: &Arc<VarContext>) -> Polynomial {
    Polynomial::vars(ctx).iter().fold(Polynomial::zero(ctx), |acc, v| &acc + &(v * v))
}

/// `sl_2` on `(e, f, h)`: `{h,e} = 2e`, `{h,f} = −2f`, `{e,f} = h`, with
/// Casimir `½h² + 2ef`.
pub fn make_sl2() -> AlgebraSpec {
    let ctx = VarContext::new(["e", "f", "h"]).expect("valid names");
    let [e, f, h] = vars(&ctx);
    let mut t = StructureTable::new(&ctx, 2).expect("binary");
    t.set(&[2, 0], e.scale(&int(2))).expect("linear");
    t.set(&[2, 1], f.scale(&int(-2))).expect("linear");
    t.set(&[0, 1], h.clone()).expect("linear");
    let c = &(&h * &h).scale(&rat(1, 2)) + &(&e * &f).scale(&int(2));
    let mut spec = AlgebraSpec::new("sl2", TableBracket::new(t), c.clone());
    spec.jacobian_form = Some(JacobianBracket::new(c).expect("non-constant"));
    spec
}

/// The n-Lie algebra `𝕃_n(f)` on `N = n + 1` generators for a quadratic form
/// `f`, with `[e_1,…,ê_i,…,e_N] = (−1)^{n−i+1} ∂f/∂x_i` (1-based `i`).
pub fn make_nlie(f: &Polynomial) -> Result<AlgebraSpec, StructureError> {
    let ctx = f.context().clone();
    let nv = ctx.len();
    if nv < 3 {
        return Err(StructureError::TooFewVariables { needed: 3, got: nv });
    }
    if f.is_zero() || !f.is_homogeneous() || f.total_degree() != Some(2) {
        return Err(StructureError::NotQuadratic(f.to_string()));
    }
    let n = nv - 1;
    let mut t = StructureTable::new(&ctx, n)?;
    for i in 0..nv {
        let tuple: Vec<usize> = (0..nv).filter(|&j| j != i).collect();
        // 1-based index i + 1 gives exponent n − i
        let d = f.diff(i);
        t.set(&tuple, if (n - i) % 2 == 0 { d } else { -d })?;
    }
    let gram: linalg::Matrix = (0..nv).map(|i| (0..nv).map(|j| f.diff(i).diff(j).constant_value().unwrap_or_else(Rational::zero)).collect()).collect();
    let mut spec = AlgebraSpec::new("nlie", TableBracket::new(t), f.clone());
    spec.simple = Some(!linalg::determinant(&gram).is_zero());
    spec.jacobian_form = Some(JacobianBracket::new(f.clone())?);
    Ok(spec)
}

/// `𝕃_n(f)` for `f = ½ Σ (−1)^{n−i+1} α_i x_i²`, whose table is
/// `[e_1,…,ê_i,…,e_N] = α_i e_i`.
pub fn make_nlie_diagonal(alphas: &[Rational]) -> Result<AlgebraSpec, StructureError> {
    let nv = alphas.len();
    if nv < 3 {
        return Err(StructureError::TooFewVariables { needed: 3, got: nv });
    }
    let ctx = VarContext::numbered("e", nv);
    let n = nv - 1;
    let mut f = Polynomial::zero(&ctx);
    for (i, a) in alphas.iter().enumerate() {
        let x = Polynomial::var(&ctx, i);
        let sign = if (n - i) % 2 == 0 { int(1) } else { int(-1) };
        f = &f + &(&x * &x).scale(&(a * sign * rat(1, 2)));
    }
    let mut spec = make_nlie(&f)?;
    for (i, a) in alphas.iter().enumerate() {
        spec = spec.with_parameter(&format!("alpha{}", i + 1), a.clone());
    }
    Ok(spec)
}

/// Jacobian bracket of `C = Σ x_i²` on `nvars` variables, arity
/// `nvars − 1`.
pub fn make_quadric(nvars: usize) -> Result<AlgebraSpec, StructureError> {
    if nvars < 3 {
        return Err(StructureError::TooFewVariables { needed: 3, got: nvars });
    }
    let ctx = if nvars == 3 { VarContext::new(["x", "y", "z"]).expect("valid names") } else { VarContext::numbered("x", nvars) };
    let c = sum_of_squares(&ctx);
    Ok(AlgebraSpec::new("quadric", JacobianBracket::new(c.clone())?, c).with_parameter("n", int(nvars as i64)))
}

/// `P_C` for an arbitrary non-constant `C`.
pub fn make_jacobian(name: &str, casimir: Polynomial) -> Result<AlgebraSpec, StructureError> {
    Ok(AlgebraSpec::new(name, JacobianBracket::new(casimir.clone())?, casimir))
}

/// Elliptic Poisson algebra: `C = ⅓(x³ + y³ + z³) − αxyz` on `(x, y, z)`.
pub fn make_elliptic(alpha: &Rational) -> AlgebraSpec {
    let ctx = VarContext::new(["x", "y", "z"]).expect("valid names");
    let [x, y, z] = vars(&ctx);
    let c = &(&(&x.pow(3) + &y.pow(3)) + &z.pow(3)).scale(&rat(1, 3)) - &(&(&x * &y) * &z).scale(alpha);
    AlgebraSpec::new("elliptic", JacobianBracket::new(c.clone()).expect("non-constant"), c).with_parameter("alpha", alpha.clone())
}

/// The seven triples `(i, i+1, i+3) mod 7`, zero-based: `[e_a, e_b] = e_c`
/// and its cyclic rotations.
pub fn malcev_triples() -> [[usize; 3]; 7] {
    std::array::from_fn(|i| [i, (i + 1) % 7, (i + 3) % 7])
}

fn cyclic_table(ctx: &Arc<VarContext>, mut coeff: impl FnMut(usize, usize, usize) -> Rational) -> StructureTable {
    let mut t = StructureTable::new(ctx, 2).expect("binary");
    for [a, b, c] in malcev_triples() {
        for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
            t.set(&[p, q], Polynomial::var(ctx, r).scale(&coeff(p, q, r))).expect("linear");
        }
    }
    t
}

/// Seven-dimensional Malcev algebra in the canonical basis, Casimir
/// `e_1² + … + e_7²`.
pub fn make_malcev_canonical() -> AlgebraSpec {
    let ctx = VarContext::numbered("e", 7);
    let t = cyclic_table(&ctx, |_, _, _| Rational::one());
    AlgebraSpec::new("malcev-canonical", TableBracket::new(t), sum_of_squares(&ctx))
}

/// Exponents of `(α, β, γ)` in `f_i = √(α^a β^b γ^c) e_i`.
const SCALING: [[u32; 3]; 7] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1]];

/// `𝕄(α, β, γ)` on `f_1 … f_7`. Each product `[f_i, f_j] = σ (s_i s_j / s_k) f_k`
/// of the scaled basis must be an integral monomial in the parameters.
pub fn make_malcev_abg(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<AlgebraSpec, StructureError> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if v.is_zero() {
            return Err(StructureError::ZeroParameter(name));
        }
    }
    let params = [alpha, beta, gamma];
    let ctx = VarContext::numbered("f", 7);
    let mut bad = None;
    let t = cyclic_table(&ctx, |i, j, k| {
        let mut c = Rational::one();
        for (p, param) in params.iter().enumerate() {
            let twice = (SCALING[i][p] + SCALING[j][p]) as i64 - SCALING[k][p] as i64;
            if twice < 0 || twice % 2 != 0 {
                bad.get_or_insert((i + 1, j + 1));
                return Rational::zero();
            }
            c *= num_traits::pow((*param).clone(), (twice / 2) as usize);
        }
        c
    });
    if let Some((i, j)) = bad {
        return Err(StructureError::NonIntegralPower { i, j });
    }
    // αβγ·c_𝕄 with e_i² = f_i² / s_i²
    let prod = alpha * beta * gamma;
    let mut c = Polynomial::zero(&ctx);
    for (i, s) in SCALING.iter().enumerate() {
        let mut sq = Rational::one();
        for (p, param) in params.iter().enumerate() {
            if s[p] == 1 {
                sq *= *param;
            }
        }
        let f = Polynomial::var(&ctx, i);
        c = &c + &(&f * &f).scale(&(&prod / sq));
    }
    Ok(AlgebraSpec::new("malcev-abg", TableBracket::new(t), c)
        .with_parameter("alpha", alpha.clone())
        .with_parameter("beta", beta.clone())
        .with_parameter("gamma", gamma.clone()))
}

/// Malcev algebra in the splittable basis `h, x, y, z, x', y', z'`, Casimir
/// `−(xx' + yy' + zz' + ¼h²)`.
pub fn make_malcev_splittable() -> AlgebraSpec {
    let ctx = VarContext::new(["h", "x", "y", "z", "x'", "y'", "z'"]).expect("valid names");
    let [h, x, y, z, xp, yp, zp] = vars(&ctx);
    let mut t = StructureTable::new(&ctx, 2).expect("binary");
    let two = int(2);
    let entries = [
        ([0, 1], x.scale(&two)),
        ([0, 2], y.scale(&two)),
        ([0, 3], z.scale(&two)),
        ([0, 4], xp.scale(&-&two)),
        ([0, 5], yp.scale(&-&two)),
        ([0, 6], zp.scale(&-&two)),
        ([1, 4], h.clone()),
        ([2, 5], h.clone()),
        ([3, 6], h.clone()),
        ([1, 2], zp.scale(&two)),
        ([2, 3], xp.scale(&two)),
        ([3, 1], yp.scale(&two)),
        ([4, 5], z.scale(&-&two)),
        ([5, 6], x.scale(&-&two)),
        ([6, 4], y.scale(&-&two)),
    ];
    for (k, v) in entries {
        t.set(&k, v).expect("linear");
    }
    let c = -&(&(&(&(&x * &xp) + &(&y * &yp)) + &(&z * &zp)) + &(&h * &h).scale(&rat(1, 4)));
    AlgebraSpec::new("malcev-splittable", TableBracket::new(t), c)
}

/// Names accepted by [`builtin`], with their parameter lists.
pub const BUILTINS: [(&str, &str); 7] = [
    ("sl2", "binary Poisson enveloping algebra of sl2"),
    ("elliptic", "elliptic Poisson algebra, parameter alpha"),
    ("quadric", "Jacobian bracket of x1^2 + ... + xN^2, parameter N (default 3)"),
    ("nlie", "n-Lie algebra L_n(f) with diagonal f, parameters alpha1..alphaN"),
    ("malcev-canonical", "seven-dimensional Malcev algebra, canonical basis"),
    ("malcev-abg", "Malcev algebra M(alpha, beta, gamma)"),
    ("malcev-splittable", "seven-dimensional Malcev algebra, splittable basis"),
];

/// Builds a built-in algebra from its name and positional parameters.
pub fn builtin(name: &str, params: &[Rational]) -> Result<AlgebraSpec, StructureError> {
    let wrong = |expected: usize| StructureError::ParameterCount { expected, got: params.len() };
    match (name, params) {
        ("sl2", []) => Ok(make_sl2()),
        ("elliptic", []) => Ok(make_elliptic(&Rational::one())),
        ("elliptic", [a]) => Ok(make_elliptic(a)),
        ("quadric", []) => make_quadric(3),
        ("quadric", [n]) => {
            let got = if n.is_integer() { usize::try_from(n.to_integer()).unwrap_or(0) } else { 0 };
            make_quadric(got)
        }
        ("nlie", _) => make_nlie_diagonal(params),
        ("malcev-canonical", []) => Ok(make_malcev_canonical()),
        ("malcev-abg", []) => make_malcev_abg(&int(1), &int(1), &int(1)),
        ("malcev-abg", [a, b, c]) => make_malcev_abg(a, b, c),
        ("malcev-splittable", []) => Ok(make_malcev_splittable()),
        ("sl2" | "malcev-canonical" | "malcev-splittable", _) => Err(wrong(0)),
        ("elliptic" | "quadric", _) => Err(wrong(1)),
        ("malcev-abg", _) => Err(wrong(3)),
        (other, _) => Err(StructureError::UnknownAlgebra(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{increasing_tuples, ternary_jacobian, verify_filippov, TrialConfig};
    use crate::expr::parse_in;

    fn br(spec: &AlgebraSpec, a: &str, b: &str) -> Polynomial {
        let ctx = spec.context();
        spec.bracket.eval(&[parse_in(ctx, a).unwrap(), parse_in(ctx, b).unwrap()]).unwrap()
    }

    fn p(spec: &AlgebraSpec, s: &str) -> Polynomial {
        parse_in(spec.context(), s).unwrap()
    }

    #[test]
    fn sl2_table_and_jacobian_agree() {
        let s = make_sl2();
        assert_eq!(br(&s, "h", "e"), p(&s, "2e"));
        assert_eq!(br(&s, "h", "f"), p(&s, "-2f"));
        assert_eq!(br(&s, "e", "f"), p(&s, "h"));
        assert!(br(&s, "e", "e").is_zero());
        let j = s.jacobian_form.as_ref().unwrap();
        for t in increasing_tuples(3, 2) {
            assert_eq!(j.on_generators(&t).unwrap(), s.bracket.on_generators(&t).unwrap());
        }
        let c = s.casimir.clone().unwrap();
        for g in Polynomial::vars(s.context()) {
            assert!(s.bracket.eval(&[c.clone(), g]).unwrap().is_zero());
        }
    }

    #[test]
    fn nlie_diagonal_table() {
        for nv in [3usize, 4, 5] {
            let alphas: Vec<Rational> = (1..=nv as i64).map(|a| int(a + 1)).collect();
            let s = make_nlie_diagonal(&alphas).unwrap();
            assert_eq!(s.arity(), nv - 1);
            assert_eq!(s.simple, Some(true));
            for i in 0..nv {
                let tuple: Vec<usize> = (0..nv).filter(|&j| j != i).collect();
                let expect = Polynomial::var(s.context(), i).scale(&alphas[i]);
                assert_eq!(s.bracket.on_generators(&tuple).unwrap(), expect);
                assert_eq!(s.jacobian_form.as_ref().unwrap().on_generators(&tuple).unwrap(), expect);
            }
        }
    }

    #[test]
    fn nlie_flags_and_errors() {
        let ctx = VarContext::numbered("x", 4);
        let sq = parse_in(&ctx, "x1^2 + x2^2 + x3^2 + x4^2").unwrap();
        assert_eq!(make_nlie(&sq).unwrap().simple, Some(true));
        let degenerate = parse_in(&ctx, "x1^2").unwrap();
        assert_eq!(make_nlie(&degenerate).unwrap().simple, Some(false));
        let cubic = parse_in(&ctx, "x1^3").unwrap();
        assert!(matches!(make_nlie(&cubic), Err(StructureError::NotQuadratic(_))));
        assert!(make_nlie(&parse_in(&ctx, "x1^2 + x2").unwrap()).is_err());
    }

    #[test]
    fn nlie_tables_are_filippov() {
        let ctx = VarContext::numbered("x", 4);
        let s = make_nlie(&parse_in(&ctx, "x1^2 - 2x2^2 + x3 x4").unwrap()).unwrap();
        let r = verify_filippov(&s.bracket, &TrialConfig::new(0, 0));
        assert!(r.pass, "{r:?}");
        assert_eq!(r.generator_checks, 4 * 6);
    }

    #[test]
    fn elliptic_printed_table() {
        for a in [0, 1, 2] {
            let s = make_elliptic(&int(a));
            assert_eq!(br(&s, "x", "y"), p(&s, &format!("-{a} x y + z^2")));
            assert_eq!(br(&s, "y", "z"), p(&s, &format!("-{a} y z + x^2")));
            assert_eq!(br(&s, "z", "x"), p(&s, &format!("-{a} z x + y^2")));
        }
    }

    #[test]
    fn canonical_malcev_seed_entries() {
        let s = make_malcev_canonical();
        assert_eq!(br(&s, "e1", "e2"), p(&s, "e4"));
        assert_eq!(br(&s, "e2", "e3"), p(&s, "e5"));
        assert_eq!(br(&s, "e7", "e1"), p(&s, "e3"));
        assert_eq!(br(&s, "e6", "e7"), p(&s, "e2"));
        // rotations inside a triple
        assert_eq!(br(&s, "e2", "e4"), p(&s, "e1"));
        assert_eq!(br(&s, "e4", "e1"), p(&s, "e2"));
        assert_eq!(s.generator_table().len(), 21);
    }

    #[test]
    fn abg_excerpt_and_specialization() {
        let (a, b, c) = (int(2), int(3), int(5));
        let s = make_malcev_abg(&a, &b, &c).unwrap();
        assert_eq!(br(&s, "f1", "f2"), p(&s, "f4"));
        assert_eq!(br(&s, "f2", "f4"), p(&s, "3 f1"));
        assert_eq!(br(&s, "f5", "f6"), p(&s, "15 f1"));
        assert_eq!(s.casimir.clone().unwrap(), p(&s, "15f1^2 + 10f2^2 + 6f3^2 + 5f4^2 + 2f5^2 + f6^2 + 3f7^2"));
        let one = make_malcev_abg(&int(1), &int(1), &int(1)).unwrap();
        let canon = make_malcev_canonical();
        let renamed = one.bracket.as_table().unwrap().table().renamed(canon.context());
        assert_eq!(&renamed, canon.bracket.as_table().unwrap().table());
        assert_eq!(make_malcev_abg(&int(0), &b, &c).unwrap_err(), StructureError::ZeroParameter("alpha"));
    }

    #[test]
    fn splittable_entries() {
        let s = make_malcev_splittable();
        assert_eq!(br(&s, "x", "x'"), p(&s, "h"));
        assert_eq!(br(&s, "x", "y"), p(&s, "2z'"));
        assert_eq!(br(&s, "x'", "y'"), p(&s, "-2z"));
        assert_eq!(br(&s, "h", "x"), p(&s, "2x"));
        assert!(br(&s, "x", "y'").is_zero());
        assert!(br(&s, "x", "z'").is_zero());
        // {h, x, x'} is an sl2 triple: [h,x]=2x, [h,x']=−2x', [x,x']=h
        assert_eq!(br(&s, "h", "x'"), p(&s, "-2x'"));
        assert_eq!(s.generator_table().len(), 15);
    }

    #[test]
    fn splittable_ternary_jacobians() {
        let s = make_malcev_splittable();
        let j = |a: &str, b: &str, c: &str| ternary_jacobian(&s.bracket, &p(&s, a), &p(&s, b), &p(&s, c)).unwrap();
        assert_eq!(j("x", "y", "h"), p(&s, "12z'"));
        assert_eq!(j("y", "x", "h"), p(&s, "-12z'"));
        assert_eq!(j("z", "x", "h"), p(&s, "12y'"));
        assert_eq!(j("y'", "x", "x'"), p(&s, "-6y'"));
        assert_eq!(j("z'", "x", "x'"), p(&s, "-6z'"));
        for a in ["x'", "y'", "z'"] {
            assert!(j(a, "y", "h").is_zero());
        }
    }

    #[test]
    fn malcev_identity_on_basis_triples() {
        for s in [make_malcev_splittable(), make_malcev_canonical(), make_malcev_abg(&int(2), &int(-1), &rat(1, 3)).unwrap()] {
            let b = &s.bracket;
            let g = Polynomial::vars(s.context());
            for a in &g {
                for x in &g {
                    assert!(b.eval(&[a.clone(), x.clone()]).unwrap() == -b.eval(&[x.clone(), a.clone()]).unwrap());
                    for c in &g {
                        let lhs = b.eval(&[ternary_jacobian(b, a, x, c).unwrap(), a.clone()]).unwrap();
                        let ac = b.eval(&[a.clone(), c.clone()]).unwrap();
                        let rhs = ternary_jacobian(b, a, x, &ac).unwrap();
                        assert_eq!(lhs, rhs, "{} ({a}, {x}, {c})", s.name);
                    }
                }
            }
        }
    }

    #[test]
    fn casimirs_are_central_on_generators() {
        let specs = [
            make_sl2(),
            make_elliptic(&int(2)),
            make_quadric(4).unwrap(),
            make_malcev_canonical(),
            make_malcev_abg(&int(2), &int(3), &rat(1, 2)).unwrap(),
            make_malcev_splittable(),
        ];
        for s in &specs {
            let c = s.casimir.clone().unwrap();
            let n = s.context().len();
            for t in increasing_tuples(n, s.arity() - 1) {
                let mut args: Vec<Polynomial> = t.iter().map(|&i| Polynomial::var(s.context(), i)).collect();
                args.push(c.clone());
                assert!(s.bracket.eval(&args).unwrap().is_zero(), "{} {t:?}", s.name);
            }
        }
    }

    #[test]
    fn builtin_registry() {
        for (name, _) in BUILTINS {
            let params: Vec<Rational> = if name == "nlie" { vec![int(1); 3] } else { Vec::new() };
            assert_eq!(builtin(name, &params).unwrap().name, name);
        }
        assert!(matches!(builtin("nope", &[]), Err(StructureError::UnknownAlgebra(_))));
        assert!(matches!(builtin("sl2", &[int(1)]), Err(StructureError::ParameterCount { .. })));
    }
}
