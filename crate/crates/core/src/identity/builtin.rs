//! Hand-written evaluators for the catalog, one per entry.
//!
//! Each returns `lhs - rhs` for every equation of its entry, in the entry's
//! order, on one basis tuple. `Y` is read from the precomputed table.

use crate::algebra::Element;
use crate::exact::Rational;
use crate::identity::ast::MapName;
use crate::pairs::{yamagutian, Frame, MapTriple, YamagutianTable};

pub(crate) type SweepFn = fn(&Ctx<'_>, &[usize]) -> Vec<Element>;

#[derive(Clone, Copy)]
pub(crate) enum Builtin {
    Sweep(SweepFn),
    Orbit,
    YTri,
}

impl std::fmt::Debug for Builtin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Builtin::Sweep(_) => "Sweep",
            Builtin::Orbit => "Orbit",
            Builtin::YTri => "YTri",
        })
    }
}

pub(crate) struct Ctx<'a> {
    f: Frame<'a>,
    y: YamagutianTable,
}

use MapName::{Pp, Sp, Tp, P, S, T};

const CYCLE: [(MapName, MapName, MapName); 3] = [(S, T, P), (T, P, S), (P, S, T)];

fn plus(m: MapName) -> MapName {
    match m {
        S => Sp,
        T => Tp,
        P => Pp,
        other => other,
    }
}

impl<'a> Ctx<'a> {
    pub fn new(triple: &'a MapTriple) -> Ctx<'a> {
        Ctx {
            f: Frame::new(triple),
            y: yamagutian(triple),
        }
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    fn im(&self, m: MapName) -> &[Element] {
        match m {
            S => &self.f.s,
            T => &self.f.t,
            P => &self.f.p,
            Sp => &self.f.sp,
            Tp => &self.f.tp,
            Pp => &self.f.pp,
        }
    }

    /// Image of the basis vector `x`.
    fn at(&self, m: MapName, x: usize) -> &Element {
        &self.im(m)[x]
    }

    fn on(&self, m: MapName, u: &Element) -> Element {
        self.f.apply(self.im(m), u)
    }

    fn br(&self, a: &Element, b: &Element) -> Element {
        self.f.lb(a, b)
    }

    /// `[m(x), n(y)]` on basis vectors.
    fn pair(&self, m: MapName, x: usize, n: MapName, y: usize) -> Element {
        self.br(self.at(m, x), self.at(n, y))
    }

    fn mb(&self, x: usize, y: usize) -> &Element {
        self.f.mb(x, y)
    }

    fn mbe(&self, u: &Element, z: usize) -> Element {
        self.f.m.mul(u, &self.f.m.basis(z))
    }

    fn jac(&self, x: usize, y: usize, z: usize) -> Element {
        let b = |i| self.f.m.basis(i);
        self.f.m.jac(&b(x), &b(y), &b(z))
    }

    fn sum(&self, terms: &[(Rational, &Element)]) -> Element {
        let mut out = Element::zero(self.f.l.dim());
        for (k, v) in terms {
            out.add_scaled(k, v);
        }
        out
    }
}

fn r(k: i64) -> Rational {
    Rational::integer(k)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn mm(c: &Ctx<'_>, a: MapName, b: MapName, negated: bool, x: usize, y: usize) -> [Element; 2] {
    let sign = if negated { r(-1) } else { r(1) };
    let first = c.sum(&[
        (r(1), &c.pair(a, x, a, y)),
        (-&sign, &c.on(a, c.mb(x, y))),
        (r(2), &c.pair(a, x, b, y)),
    ]);
    let second = c.sum(&[
        (r(1), &c.pair(b, x, b, y)),
        (-&sign, &c.on(b, c.mb(y, x))),
        (r(2), &c.pair(b, x, a, y)),
    ]);
    [first, second]
}

pub(crate) fn mm_1a(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let [a, _] = mm(c, S, T, false, t[0], t[1]);
    vec![a]
}

pub(crate) fn mm_1b(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let [_, b] = mm(c, S, T, false, t[0], t[1]);
    vec![b]
}

pub(crate) fn orbit_member(c: &Ctx<'_>, a: MapName, b: MapName, negated: bool, t: &[usize]) -> Vec<Element> {
    mm(c, a, b, negated, t[0], t[1]).into()
}

pub(crate) fn st_sym(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    vec![&c.pair(S, x, T, y) - &c.pair(T, x, S, y)]
}

pub(crate) fn min(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let a = c.pair(S, x, T, y).scale(&r(2));
    let b = &c.on(S, c.mb(x, y)) - &c.pair(S, x, S, y);
    let cc = &c.on(T, c.mb(y, x)) - &c.pair(T, x, T, y);
    let d = c.pair(T, x, S, y).scale(&r(2));
    vec![&a - &b, &b - &cc, &cc - &d]
}

pub(crate) fn conj_def(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let x = t[0];
    let mut out = Vec::new();
    for (cm, a, b) in [(P, S, T), (S, T, P), (T, P, S)] {
        let cp = c.at(plus(cm), x);
        let (va, vb, vc) = (c.at(a, x), c.at(b, x), c.at(cm, x));
        out.push(c.sum(&[(r(1), cp), (r(-1), va), (r(1), vb)]));
        out.push(c.sum(&[(r(1), cp), (r(-1), vc), (r(-2), va)]));
        out.push(c.sum(&[(r(1), cp), (r(1), vc), (r(2), vb)]));
    }
    out
}

pub(crate) fn conj_sum(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let x = t[0];
    vec![c.sum(&[(r(1), c.at(Sp, x)), (r(1), c.at(Tp, x)), (r(1), c.at(Pp, x))])]
}

pub(crate) fn conj_mm(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let mut out = Vec::new();
    for (a, _, _) in CYCLE {
        let target = c.on(a, c.mb(x, y));
        out.push(&c.pair(a, x, plus(a), y) - &target);
        out.push(&c.pair(plus(a), x, a, y) - &target);
    }
    out
}

pub(crate) fn conj_inv(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let x = t[0];
    let mut out = Vec::new();
    for (cm, a, b) in [(P, T, S), (S, P, T), (T, S, P)] {
        let three_c = c.at(cm, x).scale(&r(3));
        let (ap, bp, cp) = (c.at(plus(a), x), c.at(plus(b), x), c.at(plus(cm), x));
        out.push(c.sum(&[(r(1), &three_c), (r(-1), ap), (r(1), bp)]));
        out.push(c.sum(&[(r(1), &three_c), (r(-1), cp), (r(-2), ap)]));
        out.push(c.sum(&[(r(1), &three_c), (r(1), cp), (r(2), bp)]));
    }
    out
}

pub(crate) fn y_skew(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let def = c.sum(&[
        (r(1), &c.pair(S, x, S, y)),
        (r(1), &c.pair(T, x, T, y)),
        (r(1), &c.pair(P, x, P, y)),
    ]);
    vec![&c.y.get(x, y).scale(&r(6)) - &def, &c.y.get(x, y) + &c.y.get(y, x)]
}

pub(crate) fn y_alt1(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let six_y = c.y.get(x, y).scale(&r(6));
    CYCLE
        .iter()
        .map(|&(a, _, _)| c.sum(&[(r(1), &six_y), (r(-3), &c.pair(a, x, a, y)), (r(1), &c.on(plus(a), c.mb(x, y)))]))
        .collect()
}

pub(crate) fn y_alt2(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let six_y = c.y.get(x, y).scale(&r(6));
    CYCLE
        .iter()
        .map(|&(a, b, cm)| c.sum(&[(r(1), &six_y), (r(-2), &c.on(plus(cm), c.mb(x, y))), (r(6), &c.pair(a, x, b, y))]))
        .collect()
}

pub(crate) fn y_conj(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let six_y = c.y.get(x, y).scale(&r(6));
    CYCLE
        .iter()
        .map(|&(a, _, _)| {
            let ap = plus(a);
            c.sum(&[(r(1), &six_y), (r(-1), &c.pair(ap, x, ap, y)), (r(-1), &c.on(ap, c.mb(x, y)))])
        })
        .collect()
}

pub(crate) fn y_18(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    vec![c.sum(&[
        (r(18), &c.y.get(x, y)),
        (r(-1), &c.pair(Sp, x, Sp, y)),
        (r(-1), &c.pair(Tp, x, Tp, y)),
        (r(-1), &c.pair(Pp, x, Pp, y)),
    ])]
}

fn decomp(c: &Ctx<'_>, a: MapName, b: MapName, t: &[usize]) -> Vec<Element> {
    let (x, y) = (t[0], t[1]);
    let yv = c.y.get(x, y);
    let (ax, bx) = (c.on(a, c.mb(x, y)), c.on(b, c.mb(x, y)));
    let (aa, ab, bb) = (c.pair(a, x, a, y), c.pair(a, x, b, y), c.pair(b, x, b, y));
    vec![
        c.sum(&[(r(1), &aa), (r(-2), &yv), (q(-1, 3), &ax), (q(-2, 3), &bx)]),
        c.sum(&[(r(1), &ab), (r(1), &yv), (q(-1, 3), &ax), (q(1, 3), &bx)]),
        c.sum(&[(r(1), &bb), (r(-2), &yv), (q(2, 3), &ax), (q(1, 3), &bx)]),
        c.sum(&[(r(3), &aa), (r(-6), &yv), (r(-1), &ax), (r(-2), &bx)]),
        c.sum(&[(r(3), &ab), (r(3), &yv), (r(-1), &ax), (r(1), &bx)]),
        c.sum(&[(r(3), &bb), (r(-6), &yv), (r(2), &ax), (r(1), &bx)]),
    ]
}

pub(crate) fn decomp_st(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    decomp(c, S, T, t)
}

pub(crate) fn decomp_tp(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    decomp(c, T, P, t)
}

pub(crate) fn decomp_ps(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    decomp(c, P, S, t)
}

pub(crate) fn y_act(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let xyz = c.mbe(c.mb(x, y), z);
    CYCLE
        .iter()
        .map(|&(a, _, _)| {
            let lhs = c.br(&c.y.get(x, y), c.at(a, z)).scale(&r(6));
            let inner = c.br(&c.pair(a, x, a, y), c.at(a, z));
            c.sum(&[(r(1), &lhs), (r(-3), &inner), (r(1), &c.on(a, &xyz))])
        })
        .collect()
}

pub(crate) fn tri_sum3(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let mut out = Element::zero(c.f.l.dim());
    for (a, _, _) in CYCLE {
        out.add_scaled(&r(1), &c.br(&c.pair(a, x, a, y), c.at(a, z)));
    }
    vec![out]
}

pub(crate) fn y_j(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let j = c.jac(x, y, z);
    CYCLE
        .iter()
        .map(|&(a, _, _)| {
            let mut out = c.on(a, &j);
            for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
                out.add_scaled(&r(6), &c.br(&c.y.get(u, v), c.at(a, w)));
            }
            out
        })
        .collect()
}

fn cyclic_conj(c: &Ctx<'_>, m: MapName, rhs: MapName, t: &[usize]) -> Vec<Element> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let mut out = c.on(rhs, &c.jac(x, y, z));
    for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
        out.add_scaled(&r(1), &c.br(&c.on(m, c.mb(u, v)), c.at(m, w)));
    }
    vec![out]
}

pub(crate) fn conj_j_a_paper(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    cyclic_conj(c, Sp, Pp, t)
}

pub(crate) fn conj_j_a_triality(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    cyclic_conj(c, Sp, Sp, t)
}

pub(crate) fn conj_j_b(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    cyclic_conj(c, Tp, Tp, t)
}

pub(crate) fn conj_j_c(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    cyclic_conj(c, Pp, Pp, t)
}

pub(crate) fn y_cyc(c: &Ctx<'_>, t: &[usize]) -> Vec<Element> {
    let (x, y, z) = (t[0], t[1], t[2]);
    let b = |i| c.f.m.basis(i);
    let mut out = Element::zero(c.f.l.dim());
    for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
        out.add_scaled(&r(1), &c.y.apply(c.mb(u, v), &b(w)));
    }
    vec![out]
}
