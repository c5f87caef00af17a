//! Finite-dimensional algebras given by structure constants, plus the
//! matrix algebras `gl(n)` realized directly as commutators.
//!
//! An algebra is described by an [`AlgebraDescriptor`] and turned into a
//! validated [`Algebra`] by [`Algebra::build`]. For the anticommutative kinds
//! the descriptor lists only the products `[b_i, b_j]` with `i < j`; the rest
//! of the table follows from antisymmetry, and absent entries are zero.

mod diagnostics;
mod element;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use diagnostics::{alternativity_check, associativity_check, commutator_algebra, maltsev_check};
pub use element::Element;

use crate::error::{Error, Result};
use crate::exact::{commutator_flat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Arbitrary bilinear product, full table.
    General,
    Anticommutative,
    /// Anticommutative and satisfying the Jacobi identity.
    Lie,
    /// All `n x n` matrices under the commutator.
    Gl,
}

impl Kind {
    pub fn is_anticommutative(self) -> bool {
        !matches!(self, Kind::General)
    }

    pub fn is_lie(self) -> bool {
        matches!(self, Kind::Lie | Kind::Gl)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::General => "general",
            Kind::Anticommutative => "anticommutative",
            Kind::Lie => "lie",
            Kind::Gl => "gl",
        })
    }
}

/// One structure constant: `b_i b_j` has coefficient `coeff` on `b_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Rational,
}

impl StructureConstant {
    pub fn new(i: usize, j: usize, k: usize, coeff: impl Into<Rational>) -> Self {
        StructureConstant {
            i,
            j,
            k,
            coeff: coeff.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub kind: Kind,
    pub dim: usize,
    pub basis: Vec<String>,
    pub table: Vec<StructureConstant>,
}

impl AlgebraDescriptor {
    pub fn new(name: &str, kind: Kind, basis: &[&str], table: Vec<StructureConstant>) -> Self {
        AlgebraDescriptor {
            name: name.to_string(),
            kind,
            dim: basis.len(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }

    /// `gl(n)` with basis `E_ab` (matrix units) in row-major order.
    pub fn gl(n: usize) -> Self {
        let basis = (0..n * n)
            .map(|i| format!("E{}{}", i / n + 1, i % n + 1))
            .collect();
        AlgebraDescriptor {
            name: format!("gl{n}"),
            kind: Kind::Gl,
            dim: n * n,
            basis,
            table: Vec::new(),
        }
    }

    pub fn default_basis(dim: usize) -> Vec<String> {
        (0..dim).map(|i| format!("e{i}")).collect()
    }

    /// Side length of the matrices for `kind = gl`.
    pub fn gl_size(&self) -> Option<usize> {
        (self.kind == Kind::Gl).then(|| (self.dim as f64).sqrt().round() as usize)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Products {
    /// `table[i * dim + j]` lists the nonzero `(k, c)` of `b_i b_j`.
    Table(Vec<Vec<(usize, Rational)>>),
    Gl(usize),
}

/// A validated algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    descriptor: AlgebraDescriptor,
    products: Products,
}

impl Algebra {
    pub fn build(d: AlgebraDescriptor) -> Result<Algebra> {
        if d.dim == 0 {
            return Err(Error::Invalid(format!("algebra {:?} has dimension 0", d.name)));
        }
        if d.basis.len() != d.dim {
            return Err(Error::Shape(format!(
                "algebra {:?}: {} basis labels for dimension {}",
                d.name,
                d.basis.len(),
                d.dim
            )));
        }
        if d.kind == Kind::Gl {
            let n = d.gl_size().expect("gl kind");
            if n * n != d.dim {
                return Err(Error::Invalid(format!(
                    "gl algebra {:?} has dimension {}, not a square",
                    d.name, d.dim
                )));
            }
            if !d.table.is_empty() {
                return Err(Error::Invalid(format!(
                    "gl algebra {:?} takes no structure constants",
                    d.name
                )));
            }
            return Ok(Algebra {
                descriptor: d,
                products: Products::Gl(n),
            });
        }

        let dim = d.dim;
        let mut seen = HashSet::new();
        let mut table = vec![Vec::new(); dim * dim];
        for sc in &d.table {
            let StructureConstant { i, j, k, ref coeff } = *sc;
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "structure constant ({i}, {j}, {k}) in algebra {:?} of dimension {dim}",
                    d.name
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry { i, j, k });
            }
            if coeff.is_zero() {
                continue;
            }
            if d.kind.is_anticommutative() {
                if i == j {
                    return Err(Error::AxiomViolation {
                        axiom: "anticommutativity [u,u] = 0",
                        witness: vec![i, i],
                    });
                }
                if i > j {
                    return Err(Error::Invalid(format!(
                        "algebra {:?}: anticommutative tables list only i < j, found ({i}, {j}, {k})",
                        d.name
                    )));
                }
                table[j * dim + i].push((k, -coeff));
            }
            table[i * dim + j].push((k, coeff.clone()));
        }
        for cell in &mut table {
            cell.sort_by_key(|(k, _)| *k);
        }
        let algebra = Algebra {
            descriptor: d,
            products: Products::Table(table),
        };
        if algebra.kind() == Kind::Lie {
            let failure = crate::verdict::first_failure(dim, 3, |t| {
                let (a, b, c) = (t[0], t[1], t[2]);
                if !(a < b && b < c) {
                    return None;
                }
                let j = algebra.jacobian_basis(a, b, c);
                (!j.is_zero()).then_some(())
            });
            if let Some((witness, ())) = failure {
                return Err(Error::AxiomViolation {
                    axiom: "Jacobi identity",
                    witness,
                });
            }
        }
        Ok(algebra)
    }

    pub fn gl(n: usize) -> Algebra {
        Algebra::build(AlgebraDescriptor::gl(n)).expect("gl(n) is valid")
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    pub fn name(&self) -> &str {
        &self.descriptor.name
    }

    pub fn kind(&self) -> Kind {
        self.descriptor.kind
    }

    pub fn dim(&self) -> usize {
        self.descriptor.dim
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.descriptor.basis[i]
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn gl_size(&self) -> Option<usize> {
        match self.products {
            Products::Gl(n) => Some(n),
            Products::Table(_) => None,
        }
    }

    fn check_dim(&self, u: &Element) -> Result<()> {
        if u.dim() != self.dim() {
            return Err(Error::Shape(format!(
                "element of dimension {} used in algebra {:?} of dimension {}",
                u.dim(),
                self.name(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// The algebra's product, written `[u, v]`: the bilinear extension of
    /// the structure constants (matrix commutator for `gl`).
    pub fn bracket(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.mul(u, v))
    }

    /// [`Algebra::bracket`] without dimension checks.
    pub(crate) fn mul(&self, u: &Element, v: &Element) -> Element {
        match &self.products {
            Products::Gl(n) => Element::new(commutator_flat(u.coords(), v.coords(), *n)),
            Products::Table(table) => {
                let dim = self.dim();
                let mut out = vec![Rational::ZERO; dim];
                for (i, ui) in u.support() {
                    for (j, vj) in v.support() {
                        let cell = &table[i * dim + j];
                        if cell.is_empty() {
                            continue;
                        }
                        let w = ui * vj;
                        for (k, c) in cell {
                            out[*k] += &w * c;
                        }
                    }
                }
                Element::new(out)
            }
        }
    }

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> Element {
        match &self.products {
            Products::Table(table) => {
                let mut out = self.zero();
                for (k, c) in &table[i * self.dim() + j] {
                    out.add_scaled(c, &Element::basis(self.dim(), *k));
                }
                out
            }
            Products::Gl(_) => self.mul(&self.basis(i), &self.basis(j)),
        }
    }

    /// `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobian(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        Ok(self.jac(x, y, z))
    }

    pub(crate) fn jac(&self, x: &Element, y: &Element, z: &Element) -> Element {
        let mut out = self.mul(&self.mul(x, y), z);
        out.add_scaled(&Rational::ONE, &self.mul(&self.mul(y, z), x));
        out.add_scaled(&Rational::ONE, &self.mul(&self.mul(z, x), y));
        out
    }

    fn jacobian_basis(&self, a: usize, b: usize, c: usize) -> Element {
        self.jac(&self.basis(a), &self.basis(b), &self.basis(c))
    }

    /// Formats an element as a combination of basis labels.
    pub fn format_element(&self, u: &Element) -> String {
        let terms: Vec<String> = u
            .support()
            .map(|(i, c)| {
                let label = self.basis_label(i);
                if c.is_one() {
                    label.to_string()
                } else if (-c).is_one() {
                    format!("-{label}")
                } else {
                    format!("{c}*{label}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}
