//! Pass/fail outcomes of exhaustive basis sweeps.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Element;

/// One failing basis tuple.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    /// Which equation (or law) failed.
    pub equation: String,
    /// Basis indices substituted for the variables, in variable order.
    pub indices: Vec<usize>,
    /// `lhs - rhs` at that tuple; never zero.
    pub residual: Element,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Verdict {
    /// Failures in lexicographic tuple order (possibly truncated).
    pub failures: Vec<Witness>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict::default()
    }

    pub fn from_first(first: Option<Witness>) -> Verdict {
        Verdict {
            failures: first.into_iter().collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first(&self) -> Option<&Witness> {
        self.failures.first()
    }
}

fn decode(mut index: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in tuple.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    tuple
}

/// Evaluates `f` on every tuple in `[0, dim)^arity` and returns the
/// lexicographically first tuple where it reports a failure.
pub(crate) fn first_failure<T, F>(dim: usize, arity: usize, f: F) -> Option<(Vec<usize>, T)>
where
    T: Send,
    F: Fn(&[usize]) -> Option<T> + Sync,
{
    let total = dim.pow(arity as u32);
    (0..total).into_par_iter().find_map_first(|i| {
        let tuple = decode(i, dim, arity);
        f(&tuple).map(|r| (tuple, r))
    })
}

/// Like [`first_failure`] but collects every failing tuple, in order,
/// keeping at most `limit`.
pub(crate) fn all_failures<T, F>(dim: usize, arity: usize, limit: Option<usize>, f: F) -> Vec<(Vec<usize>, T)>
where
    T: Send,
    F: Fn(&[usize]) -> Option<T> + Sync,
{
    if limit == Some(1) {
        return first_failure(dim, arity, f).into_iter().collect();
    }
    let total = dim.pow(arity as u32);
    let mut found: Vec<(Vec<usize>, T)> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let tuple = decode(i, dim, arity);
            f(&tuple).map(|r| (tuple, r))
        })
        .collect();
    if let Some(limit) = limit {
        found.truncate(limit);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(decode(0, 3, 2), vec![0, 0]);
        assert_eq!(decode(5, 3, 2), vec![1, 2]);
        assert_eq!(decode(7, 2, 3), vec![1, 1, 1]);
    }

    #[test]
    fn first_failure_is_deterministic() {
        let hit = first_failure(4, 3, |t| (t[1] == 2 && t[2] >= 1).then_some(()));
        assert_eq!(hit.map(|(t, _)| t), Some(vec![0, 2, 1]));
        let all = all_failures(4, 3, Some(3), |t| (t[1] == 2 && t[2] >= 1).then_some(()));
        let tuples: Vec<_> = all.into_iter().map(|(t, _)| t).collect();
        assert_eq!(tuples, vec![vec![0, 2, 1], vec![0, 2, 2], vec![0, 2, 3]]);
        assert!(first_failure(3, 0, |_| None::<()>).is_none());
    }
}
