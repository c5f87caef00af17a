//! Dense row-major matrices over [`Rational`] and exact linear solving.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::Shape("matrix must have at least one row and column".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::integer(v)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix")
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    fn same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "sum")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "difference")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = vec![Rational::ZERO; self.rows * other.cols];
        mul_into(&self.entries, &other.entries, self.rows, self.cols, other.cols, &mut out);
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entries: out,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .entries
            .chunks(self.cols)
            .map(|row| dot(row, v))
            .collect())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    ///
    /// Pivots are chosen as the leftmost column holding a nonzero entry at or
    /// below the current row, taking the smallest such row index.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.entries.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                *self.get_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &(&factor * self.get(row, c));
                    *self.get_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::ZERO;
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `out += a * b` for row-major `a` (n x k) and `b` (k x m), skipping zeros.
pub(crate) fn mul_into(a: &[Rational], b: &[Rational], n: usize, k: usize, m: usize, out: &mut [Rational]) {
    for i in 0..n {
        for l in 0..k {
            let x = &a[i * k + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                let y = &b[l * m + j];
                if !y.is_zero() {
                    out[i * m + j] += x * y;
                }
            }
        }
    }
}

/// `a·b − b·a` for square matrices of equal size.
pub fn commutator(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.is_square() || !b.is_square() || a.rows != b.rows {
        return Err(Error::Shape(format!(
            "commutator of {}x{} and {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let entries = commutator_flat(&a.entries, &b.entries, a.rows);
    Ok(Matrix {
        rows: a.rows,
        cols: a.cols,
        entries,
    })
}

pub(crate) fn commutator_flat(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut ab = vec![Rational::ZERO; n * n];
    let mut ba = vec![Rational::ZERO; n * n];
    mul_into(a, b, n, n, n, &mut ab);
    mul_into(b, a, n, n, n, &mut ba);
    for (x, y) in ab.iter_mut().zip(&ba) {
        if !y.is_zero() {
            *x -= y;
        }
    }
    ab
}

/// Solution set of `A·x = b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolutionSet {
    Inconsistent,
    /// `particular + span(null_basis)`; free variables are zero in the
    /// particular solution and each null-space vector has leading entry 1.
    Solutions {
        particular: Vec<Rational>,
        null_basis: Vec<Vec<Rational>>,
    },
}

impl SolutionSet {
    pub fn is_unique(&self) -> bool {
        matches!(self, SolutionSet::Solutions { null_basis, .. } if null_basis.is_empty())
    }
}

pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<SolutionSet> {
    if a.rows != b.len() {
        return Err(Error::Shape(format!(
            "{} equations but {} right-hand sides",
            a.rows,
            b.len()
        )));
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for r in 0..a.rows {
        for c in 0..n {
            *aug.get_mut(r, c) = a.get(r, c).clone();
        }
        *aug.get_mut(r, n) = b[r].clone();
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return Ok(SolutionSet::Inconsistent);
    }
    let mut particular = vec![Rational::ZERO; n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug.get(r, n).clone();
    }
    let mut null_basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::ZERO; n];
        v[free] = Rational::ONE;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -aug.get(r, free);
        }
        let lead = v.iter().find(|x| !x.is_zero()).expect("free column is nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            v.iter_mut().for_each(|x| *x = &*x * &inv);
        }
        null_basis.push(v);
    }
    Ok(SolutionSet::Solutions {
        particular,
        null_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::integer(x)).collect()
    }

    #[test]
    fn commutator_examples() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(commutator(&a, &b).unwrap(), Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert!(commutator(&a, &a).unwrap().is_zero());
        let c = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert_eq!(commutator(&c, &a).unwrap(), Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn commutator_rejects_bad_shapes() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(commutator(&a, &Matrix::identity(3)).is_err());
        assert!(commutator(&Matrix::from_i64(&[&[1, 2]]), &a).is_err());
    }

    #[test]
    fn solve_unique() {
        let s = solve_linear(&Matrix::identity(2), &v(&[1, 2])).unwrap();
        assert_eq!(
            s,
            SolutionSet::Solutions {
                particular: v(&[1, 2]),
                null_basis: vec![]
            }
        );
        assert!(s.is_unique());
    }

    #[test]
    fn solve_rank_one() {
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_linear(&a, &v(&[1, 2])).unwrap(),
            SolutionSet::Solutions {
                particular: v(&[1, 0]),
                null_basis: vec![v(&[1, -1])]
            }
        );
        assert_eq!(solve_linear(&a, &v(&[1, 3])).unwrap(), SolutionSet::Inconsistent);
        assert!(solve_linear(&a, &v(&[1])).is_err());
    }

    #[test]
    fn rank_and_rref() {
        let mut m = Matrix::from_i64(&[&[0, 2, 4], &[1, 1, 1], &[1, 2, 3]]);
        assert_eq!(m.rank(), 2);
        let pivots = m.rref_in_place();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m, Matrix::from_i64(&[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
    }

    fn square(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-5i64..6, 1i64..4), n * n).prop_map(move |xs| {
            Matrix::from_entries(n, n, xs.into_iter().map(|(a, b)| Rational::new(a, b)).collect())
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn commutator_is_antisymmetric(a in square(3), b in square(3)) {
            prop_assert_eq!(commutator(&a, &b).unwrap(), commutator(&b, &a).unwrap().neg());
        }

        #[test]
        fn commutator_satisfies_jacobi(a in square(3), b in square(3), c in square(3)) {
            let ab_c = commutator(&commutator(&a, &b).unwrap(), &c).unwrap();
            let bc_a = commutator(&commutator(&b, &c).unwrap(), &a).unwrap();
            let ca_b = commutator(&commutator(&c, &a).unwrap(), &b).unwrap();
            prop_assert!(ab_c.add(&bc_a).unwrap().add(&ca_b).unwrap().is_zero());
        }

        #[test]
        fn solutions_solve(a in square(3), x in proptest::collection::vec(-4i64..5, 3)) {
            let x: Vec<Rational> = x.into_iter().map(Rational::integer).collect();
            let b = a.mul_vec(&x).unwrap();
            match solve_linear(&a, &b).unwrap() {
                SolutionSet::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
                SolutionSet::Solutions { particular, null_basis } => {
                    prop_assert_eq!(a.mul_vec(&particular).unwrap(), b);
                    prop_assert_eq!(null_basis.len(), 3 - a.rank());
                    for n in null_basis {
                        prop_assert!(a.mul_vec(&n).unwrap().iter().all(Rational::is_zero));
                    }
                }
            }
        }
    }
}
