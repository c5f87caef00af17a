//! Two-sorted syntax trees: `M`-expressions denote elements of the source
//! algebra, `L`-expressions elements of the target Lie algebra.

use std::collections::BTreeSet;
use std::fmt;

use crate::exact::Rational;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X,
    Y,
    Z,
    W,
}

impl Var {
    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            "w" => Some(Var::W),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
        })
    }
}

/// The maps of a triple and its conjugates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MapName {
    S,
    T,
    P,
    Sp,
    Tp,
    Pp,
}

impl MapName {
    pub fn from_name(name: &str) -> Option<MapName> {
        match name {
            "S" => Some(MapName::S),
            "T" => Some(MapName::T),
            "P" => Some(MapName::P),
            "Sp" => Some(MapName::Sp),
            "Tp" => Some(MapName::Tp),
            "Pp" => Some(MapName::Pp),
            _ => None,
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapName::S => "S",
            MapName::T => "T",
            MapName::P => "P",
            MapName::Sp => "Sp",
            MapName::Tp => "Tp",
            MapName::Pp => "Pp",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MExpr {
    Var(Var),
    Bracket(Box<MExpr>, Box<MExpr>),
    /// `J(a, b, c) = [[a,b],c] + [[b,c],a] + [[c,a],b]`.
    Jacobian(Box<[MExpr; 3]>),
    Scale(Rational, Box<MExpr>),
    Neg(Box<MExpr>),
    Sum(Vec<MExpr>),
    Zero,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LExpr {
    Apply(MapName, Box<MExpr>),
    Yamagutian(Box<MExpr>, Box<MExpr>),
    Bracket(Box<LExpr>, Box<LExpr>),
    Scale(Rational, Box<LExpr>),
    Neg(Box<LExpr>),
    Sum(Vec<LExpr>),
    Zero,
}

/// `lhs = rhs`, both of sort `L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Identity {
    pub lhs: LExpr,
    pub rhs: LExpr,
    /// Free variables in canonical order (`x < y < z < w`).
    pub vars: Vec<Var>,
    /// The source text as written.
    pub text: String,
}

impl MExpr {
    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            MExpr::Var(v) => {
                out.insert(*v);
            }
            MExpr::Bracket(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            MExpr::Jacobian(args) => args.iter().for_each(|a| a.collect_vars(out)),
            MExpr::Scale(_, a) | MExpr::Neg(a) => a.collect_vars(out),
            MExpr::Sum(terms) => terms.iter().for_each(|a| a.collect_vars(out)),
            MExpr::Zero => {}
        }
    }
}

impl LExpr {
    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            LExpr::Apply(_, m) => m.collect_vars(out),
            LExpr::Yamagutian(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            LExpr::Bracket(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            LExpr::Scale(_, a) | LExpr::Neg(a) => a.collect_vars(out),
            LExpr::Sum(terms) => terms.iter().for_each(|a| a.collect_vars(out)),
            LExpr::Zero => {}
        }
    }
}

fn write_scaled(f: &mut fmt::Formatter<'_>, k: &Rational, inner: &dyn fmt::Display) -> fmt::Result {
    write!(f, "{k}*{inner}")
}

impl fmt::Display for MExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MExpr::Var(v) => write!(f, "{v}"),
            MExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            MExpr::Jacobian(args) => write!(f, "J({},{},{})", args[0], args[1], args[2]),
            MExpr::Scale(k, a) => write_scaled(f, k, &Paren(a.as_ref())),
            MExpr::Neg(a) => write!(f, "-{}", Paren(a.as_ref())),
            MExpr::Sum(terms) => write_sum(f, terms),
            MExpr::Zero => f.write_str("0"),
        }
    }
}

impl fmt::Display for LExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LExpr::Apply(map, m) => write!(f, "{map}({m})"),
            LExpr::Yamagutian(a, b) => write!(f, "Y({a};{b})"),
            LExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            LExpr::Scale(k, a) => write_scaled(f, k, &Paren(a.as_ref())),
            LExpr::Neg(a) => write!(f, "-{}", Paren(a.as_ref())),
            LExpr::Sum(terms) => write_sum(f, terms),
            LExpr::Zero => f.write_str("0"),
        }
    }
}

trait IsSum {
    fn is_sum(&self) -> bool;
}

impl IsSum for MExpr {
    fn is_sum(&self) -> bool {
        matches!(self, MExpr::Sum(_))
    }
}

impl IsSum for LExpr {
    fn is_sum(&self) -> bool {
        matches!(self, LExpr::Sum(_))
    }
}

/// Parenthesizes sums so the printed form re-parses to the same tree.
struct Paren<'a, E>(&'a E);

impl<E: fmt::Display + IsSum> fmt::Display for Paren<'_, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_sum() {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn write_sum<E: fmt::Display>(f: &mut fmt::Formatter<'_>, terms: &[E]) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
