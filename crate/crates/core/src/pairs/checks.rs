//! Exhaustive basis-pair checks of the pair relations and their consequences.
//!
//! Every identity here is bilinear in `(x, y)`, so checking all pairs of
//! basis vectors of `M` is equivalent to checking all elements.

use crate::algebra::{Algebra, Element};
use crate::exact::Rational;
use crate::pairs::{yamagutian, MapTriple, TrialityElement};
use crate::verdict::{all_failures, first_failure, Verdict, Witness};

/// Precomputed basis images of a triple and its conjugates.
pub(crate) struct Frame<'a> {
    pub m: &'a Algebra,
    pub l: &'a Algebra,
    pub s: Vec<Element>,
    pub t: Vec<Element>,
    pub p: Vec<Element>,
    pub sp: Vec<Element>,
    pub tp: Vec<Element>,
    pub pp: Vec<Element>,
    /// `[m_i, m_j]` at index `i * dim + j`.
    m_products: Vec<Element>,
}

impl<'a> Frame<'a> {
    pub fn new(triple: &'a MapTriple) -> Frame<'a> {
        let m = triple.source().as_ref();
        let c = triple.conjugates();
        let dim = m.dim();
        let m_products = (0..dim * dim).map(|k| m.mul_basis(k / dim, k % dim)).collect();
        Frame {
            m,
            l: triple.target().as_ref(),
            s: triple.s().images(),
            t: triple.t().images(),
            p: triple.p().images(),
            sp: c.sp.images(),
            tp: c.tp.images(),
            pp: c.pp.images(),
            m_products,
        }
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// `[m_i, m_j]` in `M`.
    pub fn mb(&self, i: usize, j: usize) -> &Element {
        &self.m_products[i * self.dim() + j]
    }

    /// Bracket in `L`.
    pub fn lb(&self, a: &Element, b: &Element) -> Element {
        self.l.mul(a, b)
    }

    /// Applies a map, given by its basis images, to an element of `M`.
    pub fn apply(&self, images: &[Element], u: &Element) -> Element {
        let mut out = Element::zero(self.l.dim());
        for (i, c) in u.support() {
            out.add_scaled(c, &images[i]);
        }
        out
    }

    /// `sum k_i v_i` over `L`.
    pub fn combo(&self, terms: &[(i64, &Element)]) -> Element {
        let mut out = Element::zero(self.l.dim());
        for (k, v) in terms {
            out.add_scaled(&Rational::integer(*k), v);
        }
        out
    }

    /// `6 Y(m_i; m_j)` straight from the definition.
    pub fn six_y(&self, i: usize, j: usize) -> Element {
        let mut out = self.lb(&self.s[i], &self.s[j]);
        out.add_scaled(&Rational::ONE, &self.lb(&self.t[i], &self.t[j]));
        out.add_scaled(&Rational::ONE, &self.lb(&self.p[i], &self.p[j]));
        out
    }
}

type Residual = Option<(&'static str, Element)>;

/// Returns the first nonzero residual among labelled `lhs - rhs` values.
pub(crate) fn first_nonzero(eqs: impl IntoIterator<Item = (&'static str, Element)>) -> Residual {
    eqs.into_iter().find(|(_, r)| !r.is_zero())
}

pub(crate) fn sweep(dim: usize, arity: usize, f: impl Fn(&[usize]) -> Residual + Sync) -> Verdict {
    Verdict::from_first(first_failure(dim, arity, f).map(|(indices, (eq, residual))| Witness {
        equation: eq.to_string(),
        indices,
        residual,
    }))
}

/// The defining relations on every basis pair:
/// `[Sx,Sy] = S[x,y] - 2[Sx,Ty]` and `[Tx,Ty] = T[y,x] - 2[Tx,Sy]`.
pub fn check_mm(triple: &MapTriple) -> Verdict {
    let f = Frame::new(triple);
    sweep(f.dim(), 2, |t| mm_residual(&f, t[0], t[1]))
}

/// [`check_mm`] collecting up to `limit` failing basis pairs, in order.
pub fn check_mm_witnesses(triple: &MapTriple, limit: Option<usize>) -> Verdict {
    let f = Frame::new(triple);
    Verdict {
        failures: all_failures(f.dim(), 2, limit, |t| mm_residual(&f, t[0], t[1]))
            .into_iter()
            .map(|(indices, (eq, residual))| Witness {
                equation: eq.to_string(),
                indices,
                residual,
            })
            .collect(),
    }
}

pub(crate) fn mm_residual(f: &Frame<'_>, x: usize, y: usize) -> Residual {
    let ss = f.lb(&f.s[x], &f.s[y]);
    let st = f.lb(&f.s[x], &f.t[y]);
    let s_xy = f.apply(&f.s, f.mb(x, y));
    let first = f.combo(&[(1, &ss), (-1, &s_xy), (2, &st)]);
    if !first.is_zero() {
        return Some(("MM-1a: [Sx,Sy] = S[x,y] - 2[Sx,Ty]", first));
    }
    let tt = f.lb(&f.t[x], &f.t[y]);
    let ts = f.lb(&f.t[x], &f.s[y]);
    let t_yx = f.apply(&f.t, f.mb(y, x));
    let second = f.combo(&[(1, &tt), (-1, &t_yx), (2, &ts)]);
    (!second.is_zero()).then_some(("MM-1b: [Tx,Ty] = T[y,x] - 2[Tx,Sy]", second))
}

/// `[Sx,Ty] = [Tx,Sy]`.
pub fn st_symmetry_check(triple: &MapTriple) -> Verdict {
    let f = Frame::new(triple);
    sweep(f.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        let r = &f.lb(&f.s[x], &f.t[y]) - &f.lb(&f.t[x], &f.s[y]);
        (!r.is_zero()).then_some(("[Sx,Ty] = [Tx,Sy]", r))
    })
}

/// `2[Sx,Ty] = S[x,y] - [Sx,Sy] = T[y,x] - [Tx,Ty] = 2[Tx,Sy]`.
pub fn minimality_check(triple: &MapTriple) -> Verdict {
    let f = Frame::new(triple);
    sweep(f.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        let a = f.combo(&[(2, &f.lb(&f.s[x], &f.t[y]))]);
        let b = &f.apply(&f.s, f.mb(x, y)) - &f.lb(&f.s[x], &f.s[y]);
        let c = &f.apply(&f.t, f.mb(y, x)) - &f.lb(&f.t[x], &f.t[y]);
        let d = f.combo(&[(2, &f.lb(&f.t[x], &f.s[y]))]);
        first_nonzero([
            ("2[Sx,Ty] = S[x,y] - [Sx,Sy]", &a - &b),
            ("S[x,y] - [Sx,Sy] = T[y,x] - [Tx,Ty]", &b - &c),
            ("T[y,x] - [Tx,Ty] = 2[Tx,Sy]", &c - &d),
        ])
    })
}

/// `[Sx,S+y] = [S+x,Sy] = S[x,y]` and the same for `T` and `P`.
pub fn conj_mm_check(triple: &MapTriple) -> Verdict {
    let f = Frame::new(triple);
    sweep(f.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        let xy = f.mb(x, y);
        let case = |m: &[Element], c: &[Element]| {
            let target = f.apply(m, xy);
            (&f.lb(&m[x], &c[y]) - &target, &f.lb(&c[x], &m[y]) - &target)
        };
        let (s1, s2) = case(&f.s, &f.sp);
        let (t1, t2) = case(&f.t, &f.tp);
        let (p1, p2) = case(&f.p, &f.pp);
        first_nonzero([
            ("[Sx,S+y] = S[x,y]", s1),
            ("[S+x,Sy] = S[x,y]", s2),
            ("[Tx,T+y] = T[x,y]", t1),
            ("[T+x,Ty] = T[x,y]", t2),
            ("[Px,P+y] = P[x,y]", p1),
            ("[P+x,Py] = P[x,y]", p2),
        ])
    })
}

/// The alternative expressions of `6Y` (and `18Y`) against the table.
pub fn yamagutian_forms_check(triple: &MapTriple) -> Verdict {
    let f = Frame::new(triple);
    let table = yamagutian(triple);
    let six = Rational::integer(6);
    sweep(f.dim(), 2, |t| {
        let (x, y) = (t[0], t[1]);
        let six_y = table.get(x, y).scale(&six);
        let xy = f.mb(x, y);
        let alt1 = |m: &[Element], c: &[Element]| f.combo(&[(3, &f.lb(&m[x], &m[y])), (-1, &f.apply(c, xy))]);
        let alt2 = |c: &[Element], a: &[Element], b: &[Element]| {
            f.combo(&[(2, &f.apply(c, xy)), (-6, &f.lb(&a[x], &b[y]))])
        };
        let conj = |c: &[Element]| &f.lb(&c[x], &c[y]) + &f.apply(c, xy);
        let eighteen = f.combo(&[
            (1, &f.lb(&f.sp[x], &f.sp[y])),
            (1, &f.lb(&f.tp[x], &f.tp[y])),
            (1, &f.lb(&f.pp[x], &f.pp[y])),
        ]);
        first_nonzero([
            ("6Y = 3[Sx,Sy] - S+[x,y]", &six_y - &alt1(&f.s, &f.sp)),
            ("6Y = 3[Tx,Ty] - T+[x,y]", &six_y - &alt1(&f.t, &f.tp)),
            ("6Y = 3[Px,Py] - P+[x,y]", &six_y - &alt1(&f.p, &f.pp)),
            ("6Y = 2P+[x,y] - 6[Sx,Ty]", &six_y - &alt2(&f.pp, &f.s, &f.t)),
            ("6Y = 2S+[x,y] - 6[Tx,Py]", &six_y - &alt2(&f.sp, &f.t, &f.p)),
            ("6Y = 2T+[x,y] - 6[Px,Sy]", &six_y - &alt2(&f.tp, &f.p, &f.s)),
            ("6Y = [S+x,S+y] + S+[x,y]", &six_y - &conj(&f.sp)),
            ("6Y = [T+x,T+y] + T+[x,y]", &six_y - &conj(&f.tp)),
            ("6Y = [P+x,P+y] + P+[x,y]", &six_y - &conj(&f.pp)),
            ("18Y = [S+x,S+y] + [T+x,T+y] + [P+x,P+y]", &six_y.scale(&Rational::integer(3)) - &eighteen),
        ])
    })
}

/// `Y(g·t) = Y(t)` for all six substitutions; witness indices are `(x, y)`.
pub fn yamagutian_invariance_check(triple: &MapTriple) -> Verdict {
    let base = yamagutian(triple);
    let dim = triple.source().dim();
    for g in TrialityElement::all() {
        let moved = yamagutian(&g.apply(triple));
        for i in 0..dim {
            for j in i + 1..dim {
                let r = &moved.get(i, j) - &base.get(i, j);
                if !r.is_zero() {
                    return Verdict::from_first(Some(Witness {
                        equation: format!("Y({g}·t) = Y(t)"),
                        indices: vec![i, j],
                        residual: r,
                    }));
                }
            }
        }
    }
    Verdict::pass()
}

/// Outcome of checking the defining relations on all six images `g·t`.
#[derive(Clone, Debug)]
pub struct OrbitVerdict {
    pub members: Vec<(TrialityElement, Verdict)>,
}

impl OrbitVerdict {
    /// All six verdicts agree (all pass or all fail).
    pub fn agree(&self) -> bool {
        let first = self.members[0].1.passed();
        self.members.iter().all(|(_, v)| v.passed() == first)
    }

    pub fn all_pass(&self) -> bool {
        self.members.iter().all(|(_, v)| v.passed())
    }
}

pub fn orbit_check(triple: &MapTriple) -> OrbitVerdict {
    OrbitVerdict {
        members: TrialityElement::all()
            .into_iter()
            .map(|g| (g, check_mm(&g.apply(triple))))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{algebras, fixtures};
    use crate::pairs::{make_triple, LinearMap};
    use std::sync::Arc;

    fn sl2() -> Arc<Algebra> {
        Arc::new(Algebra::build(algebras::sl2()).unwrap())
    }

    #[test]
    fn identity_pair_passes() {
        let l = sl2();
        let t = make_triple(LinearMap::identity(l.clone()), LinearMap::zero(l.clone(), l)).unwrap();
        assert!(check_mm(&t).passed());
        assert!(st_symmetry_check(&t).passed());
        assert!(minimality_check(&t).passed());
        assert!(conj_mm_check(&t).passed());
        assert!(yamagutian_forms_check(&t).passed());
        assert!(yamagutian_invariance_check(&t).passed());
        let orbit = orbit_check(&t);
        assert!(orbit.agree() && orbit.all_pass());
    }

    #[test]
    fn witnesses_extend_the_first_failure() {
        let l = sl2();
        let id = LinearMap::identity(l);
        let t = make_triple(id.clone(), id).unwrap();
        let all = check_mm_witnesses(&t, None);
        assert_eq!(all.first(), check_mm(&t).first());
        assert!(all.failures.len() > 2);
        assert_eq!(check_mm_witnesses(&t, Some(2)).failures, all.failures[..2]);
        assert!(check_mm_witnesses(&fixtures::fixture("sl2-identity").unwrap(), None).passed());
    }

    #[test]
    fn doubled_identity_fails_at_e_f() {
        let l = sl2();
        let id = LinearMap::identity(l.clone());
        let t = make_triple(id.clone(), id).unwrap();
        let v = check_mm(&t);
        let w = v.first().unwrap();
        assert!(w.equation.starts_with("MM-1a"));
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.residual, Element::from_i64(&[0, 0, 2]));
    }

    #[test]
    fn zero_triple_passes_everything() {
        let l = sl2();
        let t = fixtures::zero_pair(l.clone(), l);
        assert!(check_mm(&t).passed());
        assert!(minimality_check(&t).passed());
        assert!(yamagutian_forms_check(&t).passed());
    }

    #[test]
    fn perturbed_identity_fails_uniformly() {
        let l = sl2();
        let t = make_triple(LinearMap::identity(l.clone()), LinearMap::zero(l.clone(), l)).unwrap();
        let bad = fixtures::perturb(&t, fixtures::MapSelector::S, 0, 0, &Rational::ONE).unwrap();
        assert!(!check_mm(&bad).passed());
        assert!(!minimality_check(&bad).passed());
        let orbit = orbit_check(&bad);
        assert!(orbit.agree());
        assert!(orbit.members.iter().all(|(_, v)| !v.passed()));
    }

    #[test]
    fn lr_pair_over_matrices_has_commuting_parts() {
        let a = Algebra::build(algebras::m2()).unwrap();
        let t = fixtures::lr_pair(&a).unwrap();
        assert!(check_mm(&t).passed());
        assert!(st_symmetry_check(&t).passed());
        assert!(yamagutian_forms_check(&t).passed());
    }
}
