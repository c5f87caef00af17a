//! Pairs `(S, T)` of linear maps `M -> L`, their completion to triples
//! `(S, T, P)` with `S + T + P = 0`, the triality conjugates, the order-6
//! substitution group, and the Yamagutian.

mod checks;
mod triality;
mod yamagutian;

use std::fmt;
use std::sync::Arc;

pub use checks::{
    check_mm, check_mm_witnesses, conj_mm_check, minimality_check, orbit_check, st_symmetry_check, yamagutian_forms_check,
    yamagutian_invariance_check, OrbitVerdict,
};
pub(crate) use checks::Frame;
pub use triality::{Generator, TrialityElement};
pub use yamagutian::{yamagutian, YamagutianTable};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

/// A linear map between two algebras, stored as a `dim(L) x dim(M)` matrix
/// whose column `j` is the image of the `j`-th basis vector of `M`.
///
/// When `L` is `gl(n)` each column is an `n x n` matrix flattened row-major.
#[derive(Clone, Debug)]
pub struct LinearMap {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
            && same_algebra(&self.source, &other.source)
            && same_algebra(&self.target, &other.target)
    }
}

impl Eq for LinearMap {}

impl LinearMap {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<LinearMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "map {} -> {} needs a {}x{} matrix, got {}x{}",
                source.name(),
                target.name(),
                target.dim(),
                source.dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: Arc<Algebra>, target: Arc<Algebra>) -> LinearMap {
        let matrix = Matrix::zeros(target.dim(), source.dim());
        LinearMap {
            source,
            target,
            matrix,
        }
    }

    /// The identity map of `a` onto itself.
    pub fn identity(a: Arc<Algebra>) -> LinearMap {
        let matrix = Matrix::identity(a.dim());
        LinearMap {
            source: a.clone(),
            target: a,
            matrix,
        }
    }

    /// Builds the map sending basis vector `j` of `source` to `images[j]`.
    pub fn from_images(source: Arc<Algebra>, target: Arc<Algebra>, images: &[Element]) -> Result<LinearMap> {
        if images.len() != source.dim() || images.iter().any(|e| e.dim() != target.dim()) {
            return Err(Error::Shape(format!(
                "{} images given for a map {} -> {}",
                images.len(),
                source.name(),
                target.name()
            )));
        }
        let mut matrix = Matrix::zeros(target.dim(), source.dim());
        for (j, img) in images.iter().enumerate() {
            for (i, c) in img.coords().iter().enumerate() {
                *matrix.get_mut(i, j) = c.clone();
            }
        }
        Ok(LinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, j: usize) -> Element {
        Element::new(self.matrix.column(j))
    }

    pub fn images(&self) -> Vec<Element> {
        (0..self.source.dim()).map(|j| self.image(j)).collect()
    }

    pub fn apply(&self, u: &Element) -> Result<Element> {
        Ok(Element::new(self.matrix.mul_vec(u.coords())?))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn compatible(&self, other: &LinearMap) -> Result<()> {
        if !same_algebra(&self.source, &other.source) || !same_algebra(&self.target, &other.target) {
            return Err(Error::Shape(format!(
                "maps {} -> {} and {} -> {} do not share source and target",
                self.source.name(),
                self.target.name(),
                other.source.name(),
                other.target.name()
            )));
        }
        Ok(())
    }

    fn with_matrix(&self, matrix: Matrix) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.compatible(other)?;
        Ok(self.with_matrix(self.matrix.add(&other.matrix)?))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.compatible(other)?;
        Ok(self.with_matrix(self.matrix.sub(&other.matrix)?))
    }

    pub fn neg(&self) -> LinearMap {
        self.with_matrix(self.matrix.neg())
    }

    pub fn scale(&self, k: &Rational) -> LinearMap {
        self.with_matrix(self.matrix.scale(k))
    }

    /// Returns a copy with entry `(row, col)` shifted by `delta`.
    pub fn shifted(&self, row: usize, col: usize, delta: &Rational) -> Result<LinearMap> {
        if row >= self.matrix.rows() || col >= self.matrix.cols() {
            return Err(Error::IndexOutOfRange(format!(
                "entry ({row}, {col}) of a {}x{} map matrix",
                self.matrix.rows(),
                self.matrix.cols()
            )));
        }
        let mut matrix = self.matrix.clone();
        let v = matrix.get(row, col) + delta;
        *matrix.get_mut(row, col) = v;
        Ok(self.with_matrix(matrix))
    }
}

/// `(S, T, P)` with `P = -S - T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapTriple {
    s: LinearMap,
    t: LinearMap,
    p: LinearMap,
}

/// Completes `(S, T)` to the triple `(S, T, -S-T)`.
pub fn make_triple(s: LinearMap, t: LinearMap) -> Result<MapTriple> {
    let p = s.add(&t)?.neg();
    Ok(MapTriple { s, t, p })
}

impl MapTriple {
    /// Assembles a triple from all three maps, checking `S + T + P = 0`.
    pub fn from_parts(s: LinearMap, t: LinearMap, p: LinearMap) -> Result<MapTriple> {
        if !s.add(&t)?.add(&p)?.is_zero() {
            return Err(Error::Invalid("S + T + P is not zero".into()));
        }
        Ok(MapTriple { s, t, p })
    }

    pub fn s(&self) -> &LinearMap {
        &self.s
    }

    pub fn t(&self) -> &LinearMap {
        &self.t
    }

    pub fn p(&self) -> &LinearMap {
        &self.p
    }

    pub fn source(&self) -> &Arc<Algebra> {
        self.s.source()
    }

    pub fn target(&self) -> &Arc<Algebra> {
        self.s.target()
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.t.is_zero()
    }

    pub fn conjugates(&self) -> Conjugates {
        conjugates(self)
    }
}

impl fmt::Display for MapTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "S =\n{}", self.s.matrix())?;
        writeln!(f, "T =\n{}", self.t.matrix())?;
        write!(f, "P =\n{}", self.p.matrix())
    }
}

/// The triality conjugates `S+ = T - P`, `T+ = P - S`, `P+ = S - T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Conjugates {
    pub sp: LinearMap,
    pub tp: LinearMap,
    pub pp: LinearMap,
}

pub fn conjugates(t: &MapTriple) -> Conjugates {
    let diff = |a: &LinearMap, b: &LinearMap| a.sub(b).expect("triple maps share algebras");
    Conjugates {
        sp: diff(&t.t, &t.p),
        tp: diff(&t.p, &t.s),
        pp: diff(&t.s, &t.t),
    }
}

impl Conjugates {
    /// `S+ + T+ + P+ = 0` and `3S = P+ - T+`, `3T = S+ - P+`, `3P = T+ - S+`.
    pub fn verify(&self, t: &MapTriple) -> bool {
        let three = Rational::integer(3);
        let sum_zero = self
            .sp
            .add(&self.tp)
            .and_then(|m| m.add(&self.pp))
            .is_ok_and(|m| m.is_zero());
        let recovers = |target: &LinearMap, a: &LinearMap, b: &LinearMap| {
            a.sub(b).is_ok_and(|d| d == target.scale(&three))
        };
        sum_zero
            && recovers(&t.s, &self.pp, &self.tp)
            && recovers(&t.t, &self.sp, &self.pp)
            && recovers(&t.p, &self.tp, &self.sp)
    }

    /// Inverts the conjugation: `S = (P+ - T+)/3`, `T = (S+ - P+)/3`.
    pub fn recover(&self) -> MapTriple {
        let third = Rational::new(1, 3);
        let s = self.pp.sub(&self.tp).expect("shared algebras").scale(&third);
        let t = self.sp.sub(&self.pp).expect("shared algebras").scale(&third);
        make_triple(s, t).expect("shared algebras")
    }
}
