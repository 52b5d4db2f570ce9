//! Distance-preserving bijections between point sets.
//!
//! Two sets are isometric when some bijection between them preserves every
//! pairwise Hamming distance. Only the distance matrices matter here, so the
//! sets may live in spaces with different word lengths or alphabets.

use crate::space::{DistanceMatrix, PointSet};

/// A permutation sending row `i` of the first set to row `mapping[i]` of the
/// second, preserving all pairwise distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryWitness {
    mapping: Vec<usize>,
}

impl IsometryWitness {
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// Check the witness entry by entry against both distance matrices.
    pub fn verify(&self, s: &PointSet, t: &PointSet) -> bool {
        let m = s.len();
        if t.len() != m || self.mapping.len() != m {
            return false;
        }
        let mut used = vec![false; m];
        for &img in &self.mapping {
            if img >= m || used[img] {
                return false;
            }
            used[img] = true;
        }
        let ds = s.distance_matrix();
        let dt = t.distance_matrix();
        for i in 0..m {
            for j in 0..m {
                if ds.get(i, j) != dt.get(self.mapping[i], self.mapping[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search for a distance-preserving bijection from `s` to `t`.
///
/// Backtracks over the mapping in row order of `s`, pruning on partial
/// distance consistency, with candidate targets tried in index order; the
/// first witness found is therefore the lexicographically least one.
pub fn is_isometric(s: &PointSet, t: &PointSet) -> Option<IsometryWitness> {
    if s.len() != t.len() {
        return None;
    }
    let m = s.len();
    let ds = s.distance_matrix();
    let dt = t.distance_matrix();
    let mut mapping = vec![usize::MAX; m];
    let mut used = vec![false; m];
    if assign(0, m, &ds, &dt, &mut mapping, &mut used) {
        Some(IsometryWitness { mapping })
    } else {
        None
    }
}

fn assign(
    i: usize,
    m: usize,
    ds: &DistanceMatrix,
    dt: &DistanceMatrix,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == m {
        return true;
    }
    for cand in 0..m {
        if used[cand] {
            continue;
        }
        if (0..i).all(|j| dt.get(mapping[j], cand) == ds.get(j, i)) {
            mapping[i] = cand;
            used[cand] = true;
            if assign(i + 1, m, ds, dt, mapping, used) {
                return true;
            }
            used[cand] = false;
            mapping[i] = usize::MAX;
        }
    }
    false
}
