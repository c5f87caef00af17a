//! Descriptors of the standard fixture algebras.

use crate::algebra::{AlgebraDescriptor, Kind, StructureConstant};
use crate::exact::Rational;

fn sc(i: usize, j: usize, k: usize, c: i64) -> StructureConstant {
    StructureConstant::new(i, j, k, c)
}

/// `sl(2)` on the basis `e, f, h` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> AlgebraDescriptor {
    AlgebraDescriptor::new(
        "sl2",
        Kind::Lie,
        &["e", "f", "h"],
        vec![sc(0, 1, 2, 1), sc(0, 2, 0, -2), sc(1, 2, 1, 2)],
    )
}

/// `so(3)`: `[e1,e2] = e3` and cyclic.
pub fn so3() -> AlgebraDescriptor {
    AlgebraDescriptor::new(
        "so3",
        Kind::Lie,
        &["e1", "e2", "e3"],
        vec![sc(0, 1, 2, 1), sc(0, 2, 1, -1), sc(1, 2, 0, 1)],
    )
}

/// The non-abelian 2-dimensional Lie algebra, `[e1,e2] = e2`.
pub fn solvable2() -> AlgebraDescriptor {
    AlgebraDescriptor::new("solvable2", Kind::Lie, &["e1", "e2"], vec![sc(0, 1, 1, 1)])
}

/// The 1-dimensional algebra with zero bracket.
pub fn zero1() -> AlgebraDescriptor {
    AlgebraDescriptor::new("zero1", Kind::Lie, &["u"], vec![])
}

/// Anticommutative, not Lie: `[e1,e2] = e3`, `[e1,e3] = e1`, `[e2,e3] = 0`.
pub fn non_lie3() -> AlgebraDescriptor {
    AlgebraDescriptor::new(
        "nonlie3",
        Kind::Anticommutative,
        &["e1", "e2", "e3"],
        vec![sc(0, 1, 2, 1), sc(0, 2, 0, 1)],
    )
}

/// The associative algebra of `n x n` matrices, basis `E_ab` row-major.
pub fn matrix_algebra(n: usize) -> AlgebraDescriptor {
    let idx = |a: usize, b: usize| a * n + b;
    let mut table = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                // E_ab E_bd = E_ad
                table.push(sc(idx(a, b), idx(b, d), idx(a, d), 1));
            }
        }
    }
    let mut d = AlgebraDescriptor::gl(n);
    d.name = format!("m{n}");
    d.kind = Kind::General;
    d.table = table;
    d
}

pub fn m2() -> AlgebraDescriptor {
    matrix_algebra(2)
}

/// Upper-triangular 2x2 matrices on `E11, E12, E22`.
pub fn upper2() -> AlgebraDescriptor {
    AlgebraDescriptor::new(
        "upper2",
        Kind::General,
        &["E11", "E12", "E22"],
        vec![sc(0, 0, 0, 1), sc(0, 1, 1, 1), sc(1, 2, 1, 1), sc(2, 2, 2, 1)],
    )
}

/// The rationals as a 1-dimensional algebra over themselves.
pub fn rationals() -> AlgebraDescriptor {
    AlgebraDescriptor::new("rationals", Kind::General, &["1"], vec![sc(0, 0, 0, 1)])
}

/// `e0 e0 = e1`, `e1 e0 = e2`: fails the left alternative law at `(e0,e0,e0)`.
pub fn non_alternative3() -> AlgebraDescriptor {
    AlgebraDescriptor::new(
        "nonalt3",
        Kind::General,
        &["e0", "e1", "e2"],
        vec![sc(0, 0, 1, 1), sc(1, 0, 2, 1)],
    )
}

fn cd_conj(x: &[Rational]) -> Vec<Rational> {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c })
        .collect()
}

/// Product in the Cayley–Dickson algebra of dimension `x.len()`:
/// `(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))`.
fn cd_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c);
    let db = cd_mul(&cd_conj(d), b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &cd_conj(c));
    ac.iter()
        .zip(&db)
        .map(|(p, q)| p - q)
        .chain(da.iter().zip(&bc).map(|(p, q)| p + q))
        .collect()
}

/// The algebra obtained from the rationals by `doublings` Cayley–Dickson
/// steps (1: complex, 2: quaternion, 3: octonion numbers over the rationals).
pub fn cayley_dickson(doublings: u32) -> AlgebraDescriptor {
    let dim = 1usize << doublings;
    let unit = |i: usize| {
        let mut v = vec![Rational::ZERO; dim];
        v[i] = Rational::ONE;
        v
    };
    let mut table = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in cd_mul(&unit(i), &unit(j)).into_iter().enumerate() {
                if !c.is_zero() {
                    table.push(StructureConstant::new(i, j, k, c));
                }
            }
        }
    }
    let name = match doublings {
        0 => "rationals".to_string(),
        1 => "complex".to_string(),
        2 => "quaternions".to_string(),
        3 => "octonions".to_string(),
        n => format!("cayley-dickson-{n}"),
    };
    AlgebraDescriptor {
        name,
        kind: Kind::General,
        dim,
        basis: AlgebraDescriptor::default_basis(dim),
        table,
    }
}

pub fn octonions() -> AlgebraDescriptor {
    cayley_dickson(3)
}

/// Built-in algebras addressable by name in input files.
pub fn by_name(name: &str) -> Option<AlgebraDescriptor> {
    let d = match name {
        "sl2" => sl2(),
        "so3" => so3(),
        "solvable2" => solvable2(),
        "zero1" => zero1(),
        "nonlie3" => non_lie3(),
        "m2" => m2(),
        "upper2" => upper2(),
        "rationals" => rationals(),
        "nonalt3" => non_alternative3(),
        "octonions" => octonions(),
        "complex" => cayley_dickson(1),
        "quaternions" => cayley_dickson(2),
        _ => {
            let n: usize = name.strip_prefix("gl")?.parse().ok()?;
            if n == 0 {
                return None;
            }
            AlgebraDescriptor::gl(n)
        }
    };
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Element};

    #[test]
    fn octonion_units() {
        let o = Algebra::build(octonions()).unwrap();
        assert_eq!(o.mul_basis(1, 2), o.basis(3));
        for i in 1..8 {
            assert_eq!(o.mul_basis(i, i), -&o.basis(0), "e{i}^2");
            assert_eq!(o.mul_basis(0, i), o.basis(i));
            assert_eq!(o.mul_basis(i, 0), o.basis(i));
        }
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    assert_eq!(o.mul_basis(i, j), -&o.mul_basis(j, i), "e{i}e{j}");
                }
            }
        }
    }

    #[test]
    fn quaternion_table() {
        let h = Algebra::build(cayley_dickson(2)).unwrap();
        assert_eq!(h.mul_basis(1, 2), h.basis(3));
        assert_eq!(h.mul_basis(2, 3), h.basis(1));
        assert_eq!(h.mul_basis(3, 1), h.basis(2));
    }

    #[test]
    fn named_fixtures_build() {
        for name in [
            "sl2", "so3", "solvable2", "zero1", "nonlie3", "m2", "upper2", "rationals", "nonalt3", "octonions",
            "gl3",
        ] {
            let d = by_name(name).unwrap();
            Algebra::build(d).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(by_name("gl0").is_none());
        assert!(by_name("e8").is_none());
    }

    #[test]
    fn upper_triangular_products() {
        let u = Algebra::build(upper2()).unwrap();
        assert_eq!(u.mul_basis(0, 1), u.basis(1));
        assert!(u.mul_basis(1, 0).is_zero());
        assert_eq!(u.mul(&Element::from_i64(&[1, 1, 1]), &Element::from_i64(&[1, 1, 1])), Element::from_i64(&[1, 2, 1]));
    }
}
