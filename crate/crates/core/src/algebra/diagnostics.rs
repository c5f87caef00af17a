//! Derived constructions and axiom diagnostics on built algebras.

use crate::algebra::{Algebra, AlgebraDescriptor, Element, Kind, StructureConstant};
use crate::error::{Error, Result};
use crate::verdict::{first_failure, Verdict, Witness};

fn require_general(a: &Algebra, what: &str) -> Result<()> {
    if a.kind() != Kind::General {
        return Err(Error::Invalid(format!(
            "{what} needs a general algebra, {:?} is {}",
            a.name(),
            a.kind()
        )));
    }
    Ok(())
}

/// The minus algebra: same space, bracket `[x,y] = xy - yx`.
pub fn commutator_algebra(a: &Algebra) -> Result<Algebra> {
    require_general(a, "commutator_algebra")?;
    let dim = a.dim();
    let mut table = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let c = &a.mul_basis(i, j) - &a.mul_basis(j, i);
            table.extend(c.support().map(|(k, v)| StructureConstant::new(i, j, k, v.clone())));
        }
    }
    Algebra::build(AlgebraDescriptor {
        name: format!("{}-commutator", a.name()),
        kind: Kind::Anticommutative,
        dim,
        basis: a.descriptor().basis.clone(),
        table,
    })
}

fn associator(a: &Algebra, x: &Element, y: &Element, z: &Element) -> Element {
    &a.mul(&a.mul(x, y), z) - &a.mul(x, &a.mul(y, z))
}

/// Linearized alternative laws `(x,z,y) + (z,x,y) = 0` and
/// `(y,x,z) + (y,z,x) = 0` on every basis triple `(x, y, z)`.
pub fn alternativity_check(a: &Algebra) -> Result<Verdict> {
    require_general(a, "alternativity_check")?;
    let hit = first_failure(a.dim(), 3, |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        let left = &associator(a, &x, &z, &y) + &associator(a, &z, &x, &y);
        if !left.is_zero() {
            return Some(("left alternative law (x,z,y) + (z,x,y) = 0", left));
        }
        let right = &associator(a, &y, &x, &z) + &associator(a, &y, &z, &x);
        (!right.is_zero()).then_some(("right alternative law (y,x,z) + (y,z,x) = 0", right))
    });
    Ok(Verdict::from_first(hit.map(|(indices, (eq, residual))| Witness {
        equation: eq.to_string(),
        indices,
        residual,
    })))
}

/// `(xy)z = x(yz)` on every basis triple.
pub fn associativity_check(a: &Algebra) -> Result<Verdict> {
    require_general(a, "associativity_check")?;
    let hit = first_failure(a.dim(), 3, |t| {
        let r = associator(a, &a.basis(t[0]), &a.basis(t[1]), &a.basis(t[2]));
        (!r.is_zero()).then_some(r)
    });
    Ok(Verdict::from_first(hit.map(|(indices, residual)| Witness {
        equation: "(xy)z = x(yz)".to_string(),
        indices,
        residual,
    })))
}

/// The Mal'tsev identity `[J(x,y,z),x] = J(x,y,[x,z])`, checked in its
/// linearization in `x` on every basis 4-tuple `(a, b, y, z)`:
/// `f(a,b) + f(b,a) = 0` with `f(a,b) = [J(a,y,z),b] - J(a,y,[b,z])`.
pub fn maltsev_check(a: &Algebra) -> Result<Verdict> {
    if !a.kind().is_anticommutative() {
        return Err(Error::Invalid(format!(
            "maltsev_check needs an anticommutative algebra, {:?} is {}",
            a.name(),
            a.kind()
        )));
    }
    if a.kind().is_lie() {
        return Ok(Verdict::pass());
    }
    let f = |p: &Element, q: &Element, y: &Element, z: &Element| {
        &a.mul(&a.jac(p, y, z), q) - &a.jac(p, y, &a.mul(q, z))
    };
    let hit = first_failure(a.dim(), 4, |t| {
        let (p, q, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]), a.basis(t[3]));
        let r = &f(&p, &q, &y, &z) + &f(&q, &p, &y, &z);
        (!r.is_zero()).then_some(r)
    });
    Ok(Verdict::from_first(hit.map(|(indices, residual)| Witness {
        equation: "[J(x,y,z),x] = J(x,y,[x,z]) (linearized in x)".to_string(),
        indices,
        residual,
    })))
}
