//! Searching for pairs of the form `S = Σ a_i B_i`, `T = Σ b_i B_i`.
//!
//! With one basis map the defining relations collapse to two scalar
//! quadratics, solved in closed form. Otherwise a Levenberg-Marquardt
//! least-squares iteration runs from random starts in `f64`; every candidate
//! is rationalized and kept only if it passes the exact check.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::identity::run_suite;
use crate::pairs::{check_mm, make_triple, LinearMap, MapTriple};

/// Basis maps `B_1..B_k : M -> L` spanning the ansatz.
#[derive(Clone, Debug)]
pub struct AnsatzSpace {
    basis: Vec<LinearMap>,
    /// Drop the all-zero solution from results.
    pub exclude_trivial: bool,
}

impl AnsatzSpace {
    pub fn new(basis: Vec<LinearMap>) -> Result<AnsatzSpace> {
        let first = basis
            .first()
            .ok_or_else(|| Error::Invalid("an ansatz needs at least one basis map".into()))?;
        for b in &basis[1..] {
            if b.source().as_ref() != first.source().as_ref() || b.target().as_ref() != first.target().as_ref() {
                return Err(Error::Invalid("ansatz basis maps must share source and target".into()));
            }
        }
        Ok(AnsatzSpace {
            basis,
            exclude_trivial: false,
        })
    }

    /// The one-map ansatz `B_1 = ι` on a Lie algebra.
    pub fn scalar(l: Arc<Algebra>) -> AnsatzSpace {
        AnsatzSpace {
            basis: vec![LinearMap::identity(l)],
            exclude_trivial: false,
        }
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &Arc<Algebra> {
        self.basis[0].source()
    }

    pub fn target(&self) -> &Arc<Algebra> {
        self.basis[0].target()
    }

    /// `(Σ a_i B_i, Σ b_i B_i)` completed to a triple.
    pub fn triple(&self, a: &[Rational], b: &[Rational]) -> Result<MapTriple> {
        let combine = |coeffs: &[Rational]| -> Result<LinearMap> {
            let mut acc = LinearMap::zero(self.source().clone(), self.target().clone());
            for (c, m) in coeffs.iter().zip(&self.basis) {
                acc = acc.add(&m.scale(c))?;
            }
            Ok(acc)
        };
        make_triple(combine(a)?, combine(b)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Closed form for one basis map, the float path otherwise.
    Auto,
    Exact,
    Float,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub starts: usize,
    pub seed: u64,
    pub max_denominator: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            strategy: Strategy::Auto,
            starts: 100,
            seed: 0,
            max_denominator: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Solution {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    #[serde(skip)]
    pub triple: MapTriple,
    /// Whether the whole identity suite passes on the solution.
    pub suite_passed: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchDiagnostics {
    pub strategy: Option<Strategy>,
    /// Converged float starts, or closed-form roots.
    pub candidates: usize,
    /// Candidates rejected by rationalization or exact verification.
    pub dropped: usize,
    /// The closed form found a curve of solutions rather than isolated points.
    pub positive_dimensional: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub solutions: Vec<Solution>,
    pub diagnostics: SearchDiagnostics,
}

/// Solves the defining relations on the ansatz; results are exactly
/// verified and sorted by `(a, b)`.
pub fn ansatz_search(space: &AnsatzSpace, opts: &SearchOptions) -> Result<SearchResult> {
    let strategy = match (opts.strategy, space.k()) {
        (Strategy::Auto, 1) | (Strategy::Exact, 1) => Strategy::Exact,
        (Strategy::Exact, k) => {
            return Err(Error::Invalid(format!(
                "the exact strategy handles one basis map, the ansatz has {k}"
            )))
        }
        _ => Strategy::Float,
    };
    let mut diagnostics = SearchDiagnostics {
        strategy: Some(strategy),
        ..Default::default()
    };
    let candidates: Vec<(Vec<Rational>, Vec<Rational>)> = match strategy {
        Strategy::Exact => {
            let (points, curve) = scalar_roots(&space.basis[0]);
            diagnostics.positive_dimensional = curve;
            points.into_iter().map(|(a, b)| (vec![a], vec![b])).collect()
        }
        _ => float_candidates(space, opts, &mut diagnostics),
    };
    if strategy == Strategy::Exact {
        diagnostics.candidates = candidates.len();
    }
    let mut unique = candidates;
    unique.sort();
    unique.dedup();
    let mut solutions = Vec::new();
    for (a, b) in unique {
        if space.exclude_trivial && a.iter().chain(&b).all(Rational::is_zero) {
            continue;
        }
        let triple = space.triple(&a, &b)?;
        if !check_mm(&triple).passed() {
            diagnostics.dropped += 1;
            continue;
        }
        let suite_passed = run_suite(&triple).all_passed();
        solutions.push(Solution {
            a,
            b,
            triple,
            suite_passed,
        });
    }
    Ok(SearchResult {
        solutions,
        diagnostics,
    })
}

/// How the relation for one coefficient constrains it.
#[derive(Clone, Debug, PartialEq)]
enum Branch {
    Free,
    Zero,
    /// `c = 0` or `c + 2c' = λ`, with `c'` the other coefficient.
    ZeroOr(Rational),
}

/// Reads off `C u = D c` for all coordinates, where `C`, `D` are the
/// stacked `[Bx,By]` and `B[x,y]` (or `B[y,x]`) vectors.
fn branch(c: &[Rational], d: &[Rational]) -> Branch {
    let c_zero = c.iter().all(Rational::is_zero);
    let d_zero = d.iter().all(Rational::is_zero);
    match (c_zero, d_zero) {
        (true, true) => Branch::Free,
        (true, false) => Branch::Zero,
        (false, true) => Branch::ZeroOr(Rational::ZERO),
        (false, false) => {
            let pivot = c.iter().position(|x| !x.is_zero()).expect("nonzero");
            let lambda = &d[pivot] / &c[pivot];
            if c.iter().zip(d).all(|(ci, di)| &(ci * &lambda) == di) {
                Branch::ZeroOr(lambda)
            } else {
                Branch::Zero
            }
        }
    }
}

/// Roots `(a, b)` of `a(a+2b) C = a D`, `b(b+2a) C = b D'` with
/// `C = [Bx,By]`, `D = B[x,y]`, `D' = B[y,x]` over all basis pairs.
fn scalar_roots(b: &LinearMap) -> (Vec<(Rational, Rational)>, bool) {
    let m = b.source();
    let l = b.target();
    let images = b.images();
    let (mut c, mut d, mut d2) = (Vec::new(), Vec::new(), Vec::new());
    for x in 0..m.dim() {
        for y in 0..m.dim() {
            c.extend(l.mul(&images[x], &images[y]).into_coords());
            d.extend(b.apply(&m.mul_basis(x, y)).expect("dims").into_coords());
            d2.extend(b.apply(&m.mul_basis(y, x)).expect("dims").into_coords());
        }
    }
    let (ba, bb) = (branch(&c, &d), branch(&c, &d2));
    if ba == Branch::Free || bb == Branch::Free {
        return (Vec::new(), true);
    }
    let zero = Rational::ZERO;
    let mut out = vec![(zero.clone(), zero.clone())];
    if let Branch::ZeroOr(mu) = &bb {
        out.push((zero.clone(), mu.clone()));
    }
    if let Branch::ZeroOr(lambda) = &ba {
        out.push((lambda.clone(), zero.clone()));
        if let Branch::ZeroOr(mu) = &bb {
            // a + 2b = λ, 2a + b = μ.
            let three = Rational::integer(3);
            let two = Rational::integer(2);
            out.push((
                &(&(&two * mu) - lambda) / &three,
                &(&(&two * lambda) - mu) / &three,
            ));
        }
    }
    (out, false)
}

/// Float model of the residual system: for each basis pair and each
/// coordinate of `L`, `C[i][j] = [B_i x, B_j y]`, `D[i] = B_i[x,y]`,
/// `E[i] = B_i[y,x]`, flattened into rows.
struct FloatSystem {
    k: usize,
    rows: usize,
    c: Vec<Vec<Vec<f64>>>,
    d: Vec<Vec<f64>>,
    e: Vec<Vec<f64>>,
}

impl FloatSystem {
    fn new(space: &AnsatzSpace) -> FloatSystem {
        let m = space.source();
        let l = space.target();
        let k = space.k();
        let images: Vec<Vec<Element>> = space.basis.iter().map(LinearMap::images).collect();
        let f = |e: Element| e.coords().iter().map(Rational::to_f64).collect::<Vec<f64>>();
        let mut c = vec![vec![Vec::new(); k]; k];
        let mut d = vec![Vec::new(); k];
        let mut e = vec![Vec::new(); k];
        for x in 0..m.dim() {
            for y in 0..m.dim() {
                let (xy, yx) = (m.mul_basis(x, y), m.mul_basis(y, x));
                for i in 0..k {
                    for j in 0..k {
                        c[i][j].extend(f(l.mul(&images[i][x], &images[j][y])));
                    }
                    d[i].extend(f(space.basis[i].apply(&xy).expect("dims")));
                    e[i].extend(f(space.basis[i].apply(&yx).expect("dims")));
                }
            }
        }
        FloatSystem {
            k,
            rows: d[0].len(),
            c,
            d,
            e,
        }
    }

    /// Residuals of both relations and their Jacobian in `(a, b)`.
    fn eval(&self, z: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
        let k = self.k;
        let (a, b) = z.split_at(k);
        let n = self.rows;
        let mut r = DVector::zeros(2 * n);
        let mut jac = DMatrix::zeros(2 * n, 2 * k);
        for row in 0..n {
            let c = |i: usize, j: usize| self.c[i][j][row];
            let mut r1 = 0.0;
            let mut r2 = 0.0;
            for i in 0..k {
                r1 -= a[i] * self.d[i][row];
                r2 -= b[i] * self.e[i][row];
                for j in 0..k {
                    r1 += a[i] * a[j] * c(i, j) + 2.0 * a[i] * b[j] * c(i, j);
                    r2 += b[i] * b[j] * c(i, j) + 2.0 * b[i] * a[j] * c(i, j);
                }
            }
            r[row] = r1;
            r[n + row] = r2;
            for m in 0..k {
                let mut da1 = -self.d[m][row];
                let mut db1 = 0.0;
                let mut db2 = -self.e[m][row];
                let mut da2 = 0.0;
                for j in 0..k {
                    da1 += a[j] * (c(m, j) + c(j, m)) + 2.0 * b[j] * c(m, j);
                    db1 += 2.0 * a[j] * c(j, m);
                    db2 += b[j] * (c(m, j) + c(j, m)) + 2.0 * a[j] * c(m, j);
                    da2 += 2.0 * b[j] * c(j, m);
                }
                jac[(row, m)] = da1;
                jac[(row, k + m)] = db1;
                jac[(n + row, m)] = da2;
                jac[(n + row, k + m)] = db2;
            }
        }
        (r, jac)
    }

    /// Levenberg-Marquardt from `z`; returns the end point if the residual
    /// norm is numerically zero.
    fn solve(&self, mut z: Vec<f64>) -> Option<Vec<f64>> {
        let mut mu = 1e-3;
        let (mut r, mut jac) = self.eval(&z);
        let mut cost = r.norm_squared();
        for _ in 0..500 {
            if cost < 1e-26 {
                break;
            }
            let jt = jac.transpose();
            let mut lhs = &jt * &jac;
            let g = &jt * &r;
            for i in 0..lhs.nrows() {
                lhs[(i, i)] += mu * (1.0 + lhs[(i, i)]);
            }
            let step = lhs.lu().solve(&(-g))?;
            let trial: Vec<f64> = z.iter().zip(step.iter()).map(|(x, s)| x + s).collect();
            let (tr, tj) = self.eval(&trial);
            let tc = tr.norm_squared();
            if tc < cost {
                z = trial;
                r = tr;
                jac = tj;
                cost = tc;
                mu = (mu * 0.3).max(1e-12);
            } else {
                mu *= 10.0;
                if mu > 1e12 {
                    break;
                }
            }
        }
        (cost < 1e-18 && z.iter().all(|x| x.is_finite())).then_some(z)
    }
}

fn float_candidates(
    space: &AnsatzSpace,
    opts: &SearchOptions,
    diagnostics: &mut SearchDiagnostics,
) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    let system = FloatSystem::new(space);
    let k = space.k();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let starts: Vec<Vec<f64>> = (0..opts.starts)
        .map(|_| (0..2 * k).map(|_| rng.gen_range(-3.0..3.0)).collect())
        .collect();
    let converged: Vec<Vec<f64>> = starts.into_par_iter().filter_map(|z| system.solve(z)).collect();
    diagnostics.candidates = converged.len();
    let mut out = Vec::new();
    for z in converged {
        let q: Option<Vec<Rational>> = z.iter().map(|x| Rational::approximate(*x, opts.max_denominator)).collect();
        match q {
            Some(q) => {
                let (a, b) = q.split_at(k);
                out.push((a.to_vec(), b.to_vec()));
            }
            None => diagnostics.dropped += 1,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::algebras;

    fn sl2() -> Arc<Algebra> {
        Arc::new(Algebra::build(algebras::sl2()).unwrap())
    }

    fn pairs(r: &SearchResult) -> Vec<(Rational, Rational)> {
        r.solutions.iter().map(|s| (s.a[0].clone(), s.b[0].clone())).collect()
    }

    fn expected() -> Vec<(Rational, Rational)> {
        let r = Rational::integer;
        vec![(r(-1), r(1)), (r(0), r(-1)), (r(0), r(0)), (r(1), r(0))]
    }

    #[test]
    fn scalar_ansatz_has_four_roots() {
        let res = ansatz_search(&AnsatzSpace::scalar(sl2()), &SearchOptions::default()).unwrap();
        assert_eq!(pairs(&res), expected());
        assert!(res.solutions.iter().all(|s| s.suite_passed));
        assert_eq!(res.diagnostics.dropped, 0);
        assert!(!res.diagnostics.positive_dimensional);
    }

    #[test]
    fn scalar_roots_on_other_lie_algebras() {
        for d in [algebras::so3(), algebras::solvable2()] {
            let l = Arc::new(Algebra::build(d).unwrap());
            let res = ansatz_search(&AnsatzSpace::scalar(l), &SearchOptions::default()).unwrap();
            assert_eq!(pairs(&res), expected());
        }
    }

    #[test]
    fn minus_one_one_is_sigma_squared_image() {
        use crate::construct::identity_orbit_pairs;
        use crate::pairs::TrialityElement;
        let l = sl2();
        let res = ansatz_search(&AnsatzSpace::scalar(l.clone()), &SearchOptions::default()).unwrap();
        let base = identity_orbit_pairs(l).unwrap()[0].clone();
        let sigma2 = TrialityElement::new(2, false).apply(&base);
        assert_eq!(res.solutions[0].triple, sigma2);
    }

    #[test]
    fn abelian_source_is_a_curve() {
        let z = Arc::new(Algebra::build(algebras::zero1()).unwrap());
        let res = ansatz_search(&AnsatzSpace::scalar(z), &SearchOptions::default()).unwrap();
        assert!(res.diagnostics.positive_dimensional);
        assert!(res.solutions.is_empty());
    }

    #[test]
    fn projection_ansatz_has_only_the_trivial_root() {
        let l = sl2();
        let b = LinearMap::from_images(
            l.clone(),
            l.clone(),
            &[Element::from_i64(&[1, 0, 0]), Element::from_i64(&[0, 0, 0]), Element::from_i64(&[0, 0, 0])],
        )
        .unwrap();
        let mut space = AnsatzSpace::new(vec![b]).unwrap();
        let res = ansatz_search(&space, &SearchOptions::default()).unwrap();
        assert_eq!(pairs(&res), vec![(Rational::ZERO, Rational::ZERO)]);
        space.exclude_trivial = true;
        assert!(ansatz_search(&space, &SearchOptions::default()).unwrap().solutions.is_empty());
    }

    #[test]
    fn float_path_recovers_the_same_roots() {
        let opts = SearchOptions {
            strategy: Strategy::Float,
            seed: 7,
            ..Default::default()
        };
        let res = ansatz_search(&AnsatzSpace::scalar(sl2()), &opts).unwrap();
        assert_eq!(pairs(&res), expected());
        assert!(res.diagnostics.candidates > 4);
    }

    #[test]
    fn float_path_with_two_maps() {
        // B_1 = ι, B_2 = 2ι: every solution is a rescaled scalar root.
        let l = sl2();
        let id = LinearMap::identity(l);
        let space = AnsatzSpace::new(vec![id.clone(), id.scale(&Rational::integer(2))]).unwrap();
        let opts = SearchOptions {
            starts: 20,
            seed: 1,
            ..Default::default()
        };
        let res = ansatz_search(&space, &opts).unwrap();
        for s in &res.solutions {
            assert!(check_mm(&s.triple).passed());
        }
        assert!(ansatz_search(
            &space,
            &SearchOptions {
                strategy: Strategy::Exact,
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn mismatched_basis_is_rejected() {
        let a = LinearMap::identity(sl2());
        let so3 = Arc::new(Algebra::build(algebras::so3()).unwrap());
        assert!(AnsatzSpace::new(vec![a, LinearMap::identity(so3)]).is_err());
        assert!(AnsatzSpace::new(vec![]).is_err());
    }
}
