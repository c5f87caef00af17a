//! Constructors for concrete triples.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{commutator_algebra, Algebra, Element};
use crate::construct::algebras;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::pairs::{make_triple, LinearMap, MapTriple};

/// `S = T = P = 0`.
pub fn zero_pair(m: Arc<Algebra>, l: Arc<Algebra>) -> MapTriple {
    let zero = LinearMap::zero(m, l);
    make_triple(zero.clone(), zero).expect("same algebras")
}

/// `(ι, 0, -ι)`, `(0, -ι, ι)`, `(-ι, ι, 0)` for the identity map `ι` of a
/// Lie algebra; the three form one orbit under the rotation `σ`.
pub fn identity_orbit_pairs(l: Arc<Algebra>) -> Result<[MapTriple; 3]> {
    if !l.kind().is_lie() {
        return Err(Error::Invalid(format!(
            "identity-orbit pairs need a Lie algebra, {:?} is {}",
            l.name(),
            l.kind()
        )));
    }
    let id = LinearMap::identity(l.clone());
    let zero = LinearMap::zero(l.clone(), l);
    Ok([
        make_triple(id.clone(), zero.clone())?,
        make_triple(zero, id.neg())?,
        make_triple(id.neg(), id)?,
    ])
}

/// Left and right multiplications of a general algebra `A`:
/// `S_x = (a ↦ xa)`, `T_x = (a ↦ ax)`, as maps from the commutator algebra
/// of `A` into `gl(dim A)`.
pub fn lr_pair(a: &Algebra) -> Result<MapTriple> {
    let m = Arc::new(commutator_algebra(a)?);
    let n = a.dim();
    let l = Arc::new(Algebra::gl(n));
    let mult = |left: bool| -> Vec<Element> {
        (0..n)
            .map(|x| {
                let mut flat = vec![Rational::ZERO; n * n];
                for b in 0..n {
                    let prod = if left { a.mul_basis(x, b) } else { a.mul_basis(b, x) };
                    for (row, c) in prod.support() {
                        flat[row * n + b] = c.clone();
                    }
                }
                Element::new(flat)
            })
            .collect()
    };
    let s = LinearMap::from_images(m.clone(), l.clone(), &mult(true))?;
    let t = LinearMap::from_images(m, l, &mult(false))?;
    make_triple(s, t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapSelector {
    S,
    T,
}

impl FromStr for MapSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(MapSelector::S),
            "T" | "t" => Ok(MapSelector::T),
            _ => Err(Error::Invalid(format!("map selector must be S or T, got {s:?}"))),
        }
    }
}

impl fmt::Display for MapSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapSelector::S => "S",
            MapSelector::T => "T",
        })
    }
}

/// Shifts one matrix entry of `S` or `T` by `delta`; `P` is recomputed.
pub fn perturb(t: &MapTriple, map: MapSelector, row: usize, col: usize, delta: &Rational) -> Result<MapTriple> {
    match map {
        MapSelector::S => make_triple(t.s().shifted(row, col, delta)?, t.t().clone()),
        MapSelector::T => make_triple(t.s().clone(), t.t().shifted(row, col, delta)?),
    }
}

/// A named triple used by tests, the acceptance suite and shipped examples.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub triple: MapTriple,
}

fn arc(d: crate::algebra::AlgebraDescriptor) -> Arc<Algebra> {
    Arc::new(Algebra::build(d).expect("fixture algebra is valid"))
}

/// Every triple expected to satisfy the defining relations.
pub fn passing_fixtures() -> Vec<Fixture> {
    let sl2 = arc(algebras::sl2());
    let mut out = vec![
        Fixture {
            name: "zero-sl2",
            triple: zero_pair(sl2.clone(), sl2.clone()),
        },
        Fixture {
            name: "zero-zero1-gl1",
            triple: zero_pair(arc(algebras::zero1()), Arc::new(Algebra::gl(1))),
        },
        Fixture {
            name: "zero-so3-gl3",
            triple: zero_pair(arc(algebras::so3()), Arc::new(Algebra::gl(3))),
        },
    ];
    for (name, d) in [
        ("sl2", algebras::sl2()),
        ("so3", algebras::so3()),
        ("solvable2", algebras::solvable2()),
    ] {
        let [a, b, c] = identity_orbit_pairs(arc(d)).expect("Lie fixture");
        let names: [&'static str; 3] = match name {
            "sl2" => ["sl2-identity", "sl2-identity-sigma", "sl2-identity-sigma2"],
            "so3" => ["so3-identity", "so3-identity-sigma", "so3-identity-sigma2"],
            _ => ["solvable2-identity", "solvable2-identity-sigma", "solvable2-identity-sigma2"],
        };
        for (name, triple) in names.into_iter().zip([a, b, c]) {
            out.push(Fixture { name, triple });
        }
    }
    for (name, d) in [
        ("rationals-lr", algebras::rationals()),
        ("m2-lr", algebras::m2()),
        ("upper2-lr", algebras::upper2()),
        ("octonions-lr", algebras::octonions()),
    ] {
        out.push(Fixture {
            name,
            triple: lr_pair(&Algebra::build(d).expect("fixture algebra")).expect("general algebra"),
        });
    }
    out
}

/// Looks a fixture up by name, including the failing ones (`sl2-double`,
/// `nonalt3-lr`).
pub fn fixture(name: &str) -> Option<MapTriple> {
    match name {
        "sl2-double" => {
            let l = arc(algebras::sl2());
            let id = LinearMap::identity(l);
            Some(make_triple(id.clone(), id).expect("same algebras"))
        }
        "nonalt3-lr" => Some(lr_pair(&Algebra::build(algebras::non_alternative3()).ok()?).ok()?),
        _ => passing_fixtures().into_iter().find(|f| f.name == name).map(|f| f.triple),
    }
}
