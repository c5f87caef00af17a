//! Exact evaluation of parsed identities on a triple.

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::identity::ast::{Identity, LExpr, MExpr, MapName, Var};
use crate::pairs::{Frame, MapTriple};
use crate::verdict::{all_failures, Verdict, Witness};

/// Values for `x, y, z, w`; unused slots are never read.
pub(crate) type Env = [Option<Element>; 4];

pub(crate) struct Evaluator<'a> {
    pub f: Frame<'a>,
}

impl<'a> Evaluator<'a> {
    pub fn new(triple: &'a MapTriple) -> Evaluator<'a> {
        Evaluator { f: Frame::new(triple) }
    }

    fn images(&self, map: MapName) -> &[Element] {
        match map {
            MapName::S => &self.f.s,
            MapName::T => &self.f.t,
            MapName::P => &self.f.p,
            MapName::Sp => &self.f.sp,
            MapName::Tp => &self.f.tp,
            MapName::Pp => &self.f.pp,
        }
    }

    pub fn m(&self, e: &MExpr, env: &Env) -> Element {
        match e {
            MExpr::Var(v) => env[v.index()].clone().expect("variable bound"),
            MExpr::Bracket(a, b) => self.f.m.mul(&self.m(a, env), &self.m(b, env)),
            MExpr::Jacobian(args) => {
                let [a, b, c] = args.as_ref();
                self.f.m.jac(&self.m(a, env), &self.m(b, env), &self.m(c, env))
            }
            MExpr::Scale(k, a) => self.m(a, env).scale(k),
            MExpr::Neg(a) => -self.m(a, env),
            MExpr::Sum(terms) => {
                let mut out = self.f.m.zero();
                for t in terms {
                    out.add_scaled(&Rational::ONE, &self.m(t, env));
                }
                out
            }
            MExpr::Zero => self.f.m.zero(),
        }
    }

    pub fn l(&self, e: &LExpr, env: &Env) -> Element {
        match e {
            LExpr::Apply(map, a) => self.f.apply(self.images(*map), &self.m(a, env)),
            LExpr::Yamagutian(a, b) => {
                let (u, v) = (self.m(a, env), self.m(b, env));
                let mut out = Element::zero(self.f.l.dim());
                for images in [&self.f.s, &self.f.t, &self.f.p] {
                    let (x, y) = (self.f.apply(images, &u), self.f.apply(images, &v));
                    out.add_scaled(&Rational::ONE, &self.f.lb(&x, &y));
                }
                out.scale(&Rational::new(1, 6))
            }
            LExpr::Bracket(a, b) => self.f.lb(&self.l(a, env), &self.l(b, env)),
            LExpr::Scale(k, a) => self.l(a, env).scale(k),
            LExpr::Neg(a) => -self.l(a, env),
            LExpr::Sum(terms) => {
                let mut out = Element::zero(self.f.l.dim());
                for t in terms {
                    out.add_scaled(&Rational::ONE, &self.l(t, env));
                }
                out
            }
            LExpr::Zero => Element::zero(self.f.l.dim()),
        }
    }

    /// `lhs - rhs`.
    pub fn residual(&self, id: &Identity, env: &Env) -> Element {
        &self.l(&id.lhs, env) - &self.l(&id.rhs, env)
    }

    /// Binds `vars[i]` to the basis vector `tuple[i]`.
    pub fn basis_env(&self, vars: &[Var], tuple: &[usize]) -> Env {
        let mut env: Env = Default::default();
        for (v, &i) in vars.iter().zip(tuple) {
            env[v.index()] = Some(self.f.m.basis(i));
        }
        env
    }
}

/// Sweeps all basis tuples for the free variables (first variable most
/// significant) and collects nonzero residuals, at most `limit` of them.
pub fn eval_identity(id: &Identity, triple: &MapTriple, limit: Option<usize>) -> Verdict {
    let ev = Evaluator::new(triple);
    let failures = all_failures(ev.f.dim(), id.vars.len(), limit, |tuple| {
        let r = ev.residual(id, &ev.basis_env(&id.vars, tuple));
        (!r.is_zero()).then_some(r)
    });
    Verdict {
        failures: failures
            .into_iter()
            .map(|(indices, residual)| Witness {
                equation: id.text.clone(),
                indices,
                residual,
            })
            .collect(),
    }
}

/// `lhs - rhs` with `values[i]` substituted for the `i`-th free variable.
pub fn eval_at(id: &Identity, triple: &MapTriple, values: &[Element]) -> Result<Element> {
    if values.len() != id.vars.len() {
        return Err(Error::Shape(format!(
            "identity has {} free variables, got {} values",
            id.vars.len(),
            values.len()
        )));
    }
    let dim = triple.source().dim();
    if let Some(bad) = values.iter().find(|v| v.dim() != dim) {
        return Err(Error::Shape(format!("value of dimension {} in an algebra of dimension {dim}", bad.dim())));
    }
    let ev = Evaluator::new(triple);
    let mut env: Env = Default::default();
    for (v, value) in id.vars.iter().zip(values) {
        env[v.index()] = Some(value.clone());
    }
    Ok(ev.residual(id, &env))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::fixture;
    use crate::identity::parse_identity;
    use proptest::prelude::*;

    fn sl2_identity() -> MapTriple {
        fixture("sl2-identity").unwrap()
    }

    #[test]
    fn symmetry_passes_on_identity_pair() {
        let id = parse_identity("[S(x),T(y)] = [T(x),S(y)]").unwrap();
        assert!(eval_identity(&id, &sl2_identity(), None).passed());
    }

    #[test]
    fn cyclic_yamagutian_passes() {
        let id = parse_identity("Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0").unwrap();
        assert!(eval_identity(&id, &sl2_identity(), None).passed());
    }

    #[test]
    fn s_of_bracket_fails_at_e_f() {
        let id = parse_identity("S([x,y]) = 0").unwrap();
        let v = eval_identity(&id, &sl2_identity(), None);
        let w = v.first().unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.residual, Element::from_i64(&[0, 0, 1]));
        // [e,f], [e,h], [f,e], [f,h], [h,e], [h,f] are all nonzero.
        assert_eq!(v.failures.len(), 6);
        assert_eq!(eval_identity(&id, &sl2_identity(), Some(2)).failures.len(), 2);
        assert_eq!(eval_identity(&id, &sl2_identity(), Some(1)).failures[0].indices, vec![0, 1]);
    }

    #[test]
    fn yamagutian_value() {
        let id = parse_identity("Y(x;y) = 0").unwrap();
        let t = sl2_identity();
        let r = eval_at(&id, &t, &[Element::from_i64(&[1, 0, 0]), Element::from_i64(&[0, 1, 0])]).unwrap();
        assert_eq!(r, Element::new(vec![Rational::ZERO, Rational::ZERO, Rational::new(1, 3)]));
        assert!(eval_at(&id, &t, &[Element::from_i64(&[1, 0, 0])]).is_err());
        assert!(eval_at(&id, &t, &[Element::from_i64(&[1, 0]), Element::from_i64(&[1, 0])]).is_err());
    }

    #[test]
    fn closed_identity_has_one_tuple() {
        let t = sl2_identity();
        assert!(eval_identity(&parse_identity("0 = 0").unwrap(), &t, None).passed());
        let v = eval_identity(&parse_identity("S(0) = [S(0), T(0)]").unwrap(), &t, None);
        assert!(v.passed());
    }

    #[test]
    fn four_variables_are_supported() {
        let id = parse_identity("[[S(x),S(y)],[T(z),T(w)]] + [[T(z),T(w)],[S(x),S(y)]] = 0").unwrap();
        assert_eq!(id.vars.len(), 4);
        assert!(eval_identity(&id, &sl2_identity(), None).passed());
    }

    fn element() -> impl Strategy<Value = Element> {
        proptest::collection::vec((-4i64..5, 1i64..4), 3)
            .prop_map(|v| Element::new(v.into_iter().map(|(a, b)| Rational::new(a, b)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn generic_points_agree_with_sweep(x in element(), y in element(), z in element()) {
            let t = sl2_identity();
            for text in [
                "[S(x),S(y)] = 2*Y(x;y) + 1/3*S([x,y]) + 2/3*T([x,y])",
                "6*[Y(x;y),S(z)] = 3*[[S(x),S(y)],S(z)] - S([[x,y],z])",
                "S([x,y]) = 0",
            ] {
                let id = parse_identity(text).unwrap();
                let values: Vec<Element> = [&x, &y, &z][..id.vars.len()].iter().map(|e| (*e).clone()).collect();
                let r = eval_at(&id, &t, &values).unwrap();
                if eval_identity(&id, &t, Some(1)).passed() {
                    prop_assert!(r.is_zero());
                }
            }
        }

        #[test]
        fn residual_is_bilinear(x in element(), x2 in element(), y in element(), k in -3i64..4) {
            let t = sl2_identity();
            let id = parse_identity("S([x,y]) = [S(x), T(y)] + Y(x;y)").unwrap();
            let k = Rational::integer(k);
            let mut combined = x.clone();
            combined.add_scaled(&k, &x2);
            let lhs = eval_at(&id, &t, &[combined, y.clone()]).unwrap();
            let mut rhs = eval_at(&id, &t, &[x, y.clone()]).unwrap();
            rhs.add_scaled(&k, &eval_at(&id, &t, &[x2, y]).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
