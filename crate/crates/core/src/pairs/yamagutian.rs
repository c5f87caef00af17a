use serde::Serialize;

use crate::algebra::Element;
use crate::exact::Rational;
use crate::pairs::{Frame, MapTriple};

/// Values `Y(m_i; m_j)` for `i < j`; the rest follows from skew-symmetry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YamagutianTable {
    dim: usize,
    target_dim: usize,
    upper: Vec<Element>,
}

/// `Y(x;y) = ([Sx,Sy] + [Tx,Ty] + [Px,Py]) / 6` on basis pairs.
pub fn yamagutian(triple: &MapTriple) -> YamagutianTable {
    let f = Frame::new(triple);
    let sixth = Rational::new(1, 6);
    let dim = f.dim();
    let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
    for i in 0..dim {
        for j in i + 1..dim {
            upper.push(f.six_y(i, j).scale(&sixth));
        }
    }
    YamagutianTable {
        dim,
        target_dim: f.l.dim(),
        upper,
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    i: usize,
    j: usize,
    value: &'a Element,
}

impl YamagutianTable {
    fn slot(&self, i: usize, j: usize) -> usize {
        // Row-major index into the strict upper triangle.
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Element::zero(self.target_dim),
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[self.slot(j, i)],
        }
    }

    /// Bilinear extension to arbitrary elements of `M`.
    pub fn apply(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero(self.target_dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let k = &(&u.coords()[i] * &v.coords()[j]) - &(&u.coords()[j] * &v.coords()[i]);
                out.add_scaled(&k, &self.upper[self.slot(i, j)]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Element::is_zero)
    }

    /// `(i, j, Y(m_i; m_j))` for `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Element)> {
        let dim = self.dim;
        (0..dim)
            .flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
            .zip(&self.upper)
            .map(|((i, j), v)| (i, j, v))
    }
}

impl Serialize for YamagutianTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries().map(|(i, j, value)| Entry { i, j, value }))
    }
}
