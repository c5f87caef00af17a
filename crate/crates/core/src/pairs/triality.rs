//! The triality substitution group acting on triples.
//!
//! The generators act by `σ·(S,T,P) = (T,P,S)` and `τ·(S,T,P) = (-T,-S,-P)`.
//! They satisfy `σ³ = τ² = id` and `τστ = σ²`, so every word reduces to a
//! normal form `σ^r τ^f` with `r ∈ {0,1,2}` and `f ∈ {0,1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pairs::MapTriple;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    Sigma,
    Tau,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TrialityElement {
    rotation: u8,
    flip: bool,
}

impl TrialityElement {
    pub const IDENTITY: TrialityElement = TrialityElement {
        rotation: 0,
        flip: false,
    };
    pub const SIGMA: TrialityElement = TrialityElement {
        rotation: 1,
        flip: false,
    };
    pub const TAU: TrialityElement = TrialityElement {
        rotation: 0,
        flip: true,
    };

    /// `σ^rotation τ^flip`.
    pub fn new(rotation: u8, flip: bool) -> TrialityElement {
        TrialityElement {
            rotation: rotation % 3,
            flip,
        }
    }

    /// All six elements: `id, σ, σ², τ, στ, σ²τ`.
    pub fn all() -> [TrialityElement; 6] {
        [
            Self::new(0, false),
            Self::new(1, false),
            Self::new(2, false),
            Self::new(0, true),
            Self::new(1, true),
            Self::new(2, true),
        ]
    }

    pub fn rotation(self) -> u8 {
        self.rotation
    }

    pub fn flip(self) -> bool {
        self.flip
    }

    /// `self ∘ other`, i.e. act by `other` first.
    pub fn compose(self, other: TrialityElement) -> TrialityElement {
        // σ^a τ^f σ^b τ^g = σ^(a ± b) τ^(f+g) since τ σ^b τ = σ^(-b).
        let b = if self.flip { 3 - other.rotation } else { other.rotation };
        TrialityElement::new(self.rotation + b, self.flip ^ other.flip)
    }

    pub fn inverse(self) -> TrialityElement {
        if self.flip {
            self
        } else {
            TrialityElement::new(3 - self.rotation, false)
        }
    }

    /// Reduces a word, read left to right as a product of generators.
    pub fn from_word(word: &[Generator]) -> TrialityElement {
        word.iter().fold(Self::IDENTITY, |acc, g| {
            acc.compose(match g {
                Generator::Sigma => Self::SIGMA,
                Generator::Tau => Self::TAU,
            })
        })
    }

    pub fn apply(self, t: &MapTriple) -> MapTriple {
        let mut out = t.clone();
        if self.flip {
            out = MapTriple {
                s: out.t.neg(),
                t: out.s.neg(),
                p: out.p.neg(),
            };
        }
        for _ in 0..self.rotation {
            out = MapTriple {
                s: out.t,
                t: out.p,
                p: out.s,
            };
        }
        out
    }
}

impl fmt::Display for TrialityElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.rotation {
            0 => "",
            1 => "σ",
            _ => "σ²",
        };
        match (r, self.flip) {
            ("", false) => f.write_str("id"),
            (r, true) => write!(f, "{r}τ"),
            (r, false) => f.write_str(r),
        }
    }
}

impl FromStr for TrialityElement {
    type Err = Error;

    /// Accepts words such as `id`, `σ²τ`, `s2t`, `sigma^2 tau`, `s*s*t`.
    fn from_str(text: &str) -> Result<TrialityElement> {
        let bad = || Error::Invalid(format!("not a triality word: {text:?}"));
        let normalized = text
            .trim()
            .replace("sigma", "s")
            .replace("tau", "t")
            .replace('σ', "s")
            .replace('τ', "t")
            .replace('²', "2")
            .replace('³', "3");
        if normalized == "id" || normalized == "1" || normalized == "e" {
            return Ok(Self::IDENTITY);
        }
        let mut word = Vec::new();
        let mut chars = normalized.chars().peekable();
        while let Some(c) = chars.next() {
            let g = match c {
                's' => Generator::Sigma,
                't' => Generator::Tau,
                ' ' | '*' | '.' | '·' | '∘' => continue,
                _ => return Err(bad()),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut power = 1;
            if let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                chars.next();
                power = d;
            }
            word.extend(std::iter::repeat(g).take(power as usize));
        }
        if word.is_empty() {
            return Err(bad());
        }
        Ok(Self::from_word(&word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::construct::algebras;
    use crate::exact::{Matrix, Rational};
    use crate::pairs::{make_triple, LinearMap};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn identity_triple() -> (MapTriple, LinearMap) {
        let l = Arc::new(Algebra::build(algebras::sl2()).unwrap());
        let id = LinearMap::identity(l.clone());
        (make_triple(id.clone(), LinearMap::zero(l.clone(), l)).unwrap(), id)
    }

    #[test]
    fn generators_act_as_stated() {
        let (t, id) = identity_triple();
        let zero = id.scale(&Rational::ZERO);
        for g in [TrialityElement::SIGMA, TrialityElement::TAU] {
            let out = g.apply(&t);
            assert_eq!(out.s(), &zero);
            assert_eq!(out.t(), &id.neg());
            assert_eq!(out.p(), &id);
        }
        let s3 = TrialityElement::from_word(&[Generator::Sigma; 3]);
        assert_eq!(s3, TrialityElement::IDENTITY);
        assert_eq!(s3.apply(&t), t);
    }

    #[test]
    fn group_table() {
        let all = TrialityElement::all();
        for a in all {
            assert_eq!(a.compose(a.inverse()), TrialityElement::IDENTITY);
            for b in all {
                for c in all {
                    assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
                }
            }
        }
        let (s, t) = (TrialityElement::SIGMA, TrialityElement::TAU);
        assert_eq!(t.compose(s).compose(t), s.compose(s));
        assert_eq!(t.compose(t), TrialityElement::IDENTITY);
    }

    #[test]
    fn parses_words() {
        for (text, expect) in [
            ("id", TrialityElement::IDENTITY),
            ("σ²τ", TrialityElement::new(2, true)),
            ("s2t", TrialityElement::new(2, true)),
            ("sigma^2 tau", TrialityElement::new(2, true)),
            ("t s t", TrialityElement::new(2, false)),
            ("sss", TrialityElement::IDENTITY),
        ] {
            assert_eq!(text.parse::<TrialityElement>().unwrap(), expect, "{text}");
        }
        assert!("x".parse::<TrialityElement>().is_err());
        assert!("".parse::<TrialityElement>().is_err());
        let names: Vec<String> = TrialityElement::all().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["id", "σ", "σ²", "τ", "στ", "σ²τ"]);
        for g in TrialityElement::all() {
            assert_eq!(g.to_string().parse::<TrialityElement>().unwrap(), g);
        }
    }

    fn map3() -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, 9)
            .prop_map(|v| Matrix::from_entries(3, 3, v.into_iter().map(Rational::integer).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn action_is_a_group_action(a in map3(), b in map3()) {
            let l = Arc::new(Algebra::build(algebras::sl2()).unwrap());
            let t = make_triple(
                LinearMap::new(l.clone(), l.clone(), a).unwrap(),
                LinearMap::new(l.clone(), l, b).unwrap(),
            ).unwrap();
            let (s, tau) = (TrialityElement::SIGMA, TrialityElement::TAU);
            let sss = s.apply(&s.apply(&s.apply(&t)));
            prop_assert_eq!(&sss, &t);
            prop_assert_eq!(&tau.apply(&tau.apply(&t)), &t);
            prop_assert_eq!(tau.apply(&s.apply(&tau.apply(&t))), s.apply(&s.apply(&t)));
            for g in TrialityElement::all() {
                for h in TrialityElement::all() {
                    prop_assert_eq!(g.compose(h).apply(&t), g.apply(&h.apply(&t)));
                }
            }
        }
    }
}
