//! Exact metric-density decisions via minimum-dimension realization search.
//!
//! A set is metrically dense when no isometric image has smaller rank.
//! Ordering an isometric image by the original row order turns it into a
//! realization of the original distance matrix, and deleting constant
//! columns embeds a rank-r set into E_q^r, so the least rank over isometric
//! images equals the least dimension r admitting a realization that uses
//! every column non-constantly. The search below decides that exactly.
//!
//! Symmetry breaking, one representative per equivalence class:
//! per-column symbol permutations and column permutations are ambient
//! isometries, so every realization can be normalized to have (a) an
//! all-zero first row, (b) symbols first appearing in increasing order down
//! each column, and (c) columns in nondecreasing lexicographic order. The
//! search enumerates exactly the normalized grids, in row-major
//! lexicographic order, so the first hit is the canonically least
//! realization and the result is deterministic.

use serde::{Serialize, Serializer};

use crate::bounds::{bounds_report, rank_lower_bound, rank_upper_bound};
use crate::error::{Error, Result};
use crate::space::{DistanceMatrix, PointSet, SpaceParams, Word};

/// Search limits. A node is one candidate symbol placement; exhausting the
/// budget yields an explicit `unknown`, never a guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    /// Optional cap on the embedding dimensions tried.
    pub max_dimension: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: 10_000_000,
            max_dimension: None,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        Self {
            node_budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeOutcome {
    Realized(PointSet),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeResult {
    pub outcome: RealizeOutcome,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingStatus {
    Exact,
    BudgetExhausted,
    /// No realization exists in any dimension: the whole sound range up to
    /// the rank upper bound was searched without success.
    Infeasible,
}

fn serialize_rows<S: Serializer>(
    v: &Option<PointSet>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    v.as_ref()
        .map(|s| {
            s.rows()
                .iter()
                .map(|w| w.symbols().to_vec())
                .collect::<Vec<_>>()
        })
        .serialize(serializer)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingResult {
    pub status: EmbeddingStatus,
    /// The minimum dimension when `status` is `exact`; otherwise the last
    /// dimension attempted.
    pub min_dimension: usize,
    pub nodes_explored: u64,
    #[serde(serialize_with = "serialize_rows")]
    pub realization: Option<PointSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Dense,
    NotDense,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertifiedBy {
    BoundCertificate,
    ExactSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityVerdict {
    pub verdict: Verdict,
    /// Absent when the verdict is `unknown`.
    pub certified_by: Option<CertifiedBy>,
    /// A lower-rank isometric image, present when the verdict is `not_dense`.
    #[serde(serialize_with = "serialize_rows")]
    pub witness: Option<PointSet>,
}

#[derive(PartialEq)]
enum Found {
    Yes,
    No,
    OutOfBudget,
}

struct Search<'a> {
    dm: &'a DistanceMatrix,
    q: u32,
    r: usize,
    m: usize,
    grid: Vec<Vec<u32>>,
    /// Per column, the largest symbol used among completed rows.
    maxsym: Vec<u32>,
    /// tied[c]: columns c-1 and c are equal over the completed rows.
    tied: Vec<bool>,
    /// partial[i][j]: differing columns so far between the row i being
    /// placed and the completed row j < i.
    partial: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn place_row(&mut self, i: usize) -> Found {
        if i == self.m {
            // realizations with a constant (all-zero) column belong to a
            // smaller dimension and are rejected here
            return if self.maxsym.iter().all(|&s| s > 0) {
                Found::Yes
            } else {
                Found::No
            };
        }
        for j in 0..i {
            self.partial[i][j] = 0;
        }
        self.place_cell(i, 0)
    }

    fn place_cell(&mut self, i: usize, c: usize) -> Found {
        if c == self.r {
            // pruning forced every partial distance to its exact target
            let saved_maxsym = self.maxsym.clone();
            let saved_tied = self.tied.clone();
            for c2 in 0..self.r {
                self.maxsym[c2] = self.maxsym[c2].max(self.grid[i][c2]);
            }
            for c2 in 1..self.r {
                self.tied[c2] = self.tied[c2] && self.grid[i][c2 - 1] == self.grid[i][c2];
            }
            let res = self.place_row(i + 1);
            if res == Found::No {
                self.maxsym = saved_maxsym;
                self.tied = saved_tied;
            }
            return res;
        }
        let cap = (self.maxsym[c] + 1).min(self.q - 1);
        for s in 0..=cap {
            // column order symmetry: keep tied columns nondecreasing
            if c > 0 && self.tied[c] && s < self.grid[i][c - 1] {
                continue;
            }
            if self.nodes >= self.budget {
                return Found::OutOfBudget;
            }
            self.nodes += 1;
            self.grid[i][c] = s;
            for j in 0..i {
                self.partial[i][j] += usize::from(s != self.grid[j][c]);
            }
            let remaining = self.r - c - 1;
            let consistent = (0..i).all(|j| {
                let target = self.dm.get(i, j);
                let got = self.partial[i][j];
                got <= target && target - got <= remaining
            });
            if consistent {
                let res = self.place_cell(i, c + 1);
                if res != Found::No {
                    return res;
                }
            }
            for j in 0..i {
                self.partial[i][j] -= usize::from(s != self.grid[j][c]);
            }
        }
        Found::No
    }
}

/// Search for the canonically least ordered point set in E_q^r whose
/// distance matrix equals `dm` and which uses every column non-constantly.
pub fn realize_in_dimension(
    dm: &DistanceMatrix,
    q: u32,
    r: usize,
    node_budget: u64,
) -> Result<RealizeResult> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q: q as u64 });
    }
    let m = dm.size();
    if m < 2 {
        return Err(Error::TooFewPoints { m, required: 2 });
    }
    if dm.max_entry() > r {
        return Ok(RealizeResult {
            outcome: RealizeOutcome::Infeasible,
            nodes_explored: 0,
        });
    }
    // here r >= 1 because the matrix has a positive entry
    let mut search = Search {
        dm,
        q,
        r,
        m,
        grid: vec![vec![0; r]; m],
        maxsym: vec![0; r],
        tied: vec![true; r],
        partial: vec![vec![0; m]; m],
        nodes: 0,
        budget: node_budget,
    };
    let outcome = match search.place_row(1) {
        Found::Yes => {
            let params = SpaceParams::new(q, r).expect("q >= 2 and r >= 1");
            let rows = search.grid.iter().cloned().map(Word::new).collect();
            let set = PointSet::new(params, rows)
                .expect("positive pairwise distances imply distinct rows");
            RealizeOutcome::Realized(set)
        }
        Found::No => RealizeOutcome::Infeasible,
        Found::OutOfBudget => RealizeOutcome::BudgetExhausted,
    };
    Ok(RealizeResult {
        outcome,
        nodes_explored: search.nodes,
    })
}

/// Find the least dimension r such that `dm` is realizable in E_q^r with
/// all columns non-constant.
///
/// Dimensions are tried upward starting from the rank lower bound (rounded
/// up, and never below the largest matrix entry); both start and the upper
/// cutoff `floor(D/(m-1))` are isometry invariants, so the scan is sound
/// and complete. Running past the cutoff without success proves that no
/// realization exists over this alphabet at any dimension.
pub fn min_embedding_dimension(
    dm: &DistanceMatrix,
    q: u32,
    cfg: &SearchConfig,
) -> Result<EmbeddingResult> {
    let m = dm.size();
    if m < 2 {
        return Err(Error::TooFewPoints { m, required: 2 });
    }
    let d = dm.distance_sum();
    let lower = rank_lower_bound(d, m as u64, q as u64)?;
    let upper = rank_upper_bound(d, m as u64)?;
    let start = (lower.ceil().max(1) as usize).max(dm.max_entry());
    let sound_stop = upper.floor().max(0) as usize;
    let stop = cfg
        .max_dimension
        .map_or(sound_stop, |cap| cap.min(sound_stop));
    let mut nodes_total = 0u64;
    let mut last_attempted = stop.min(start);
    for r in start..=stop {
        last_attempted = r;
        let remaining = cfg.node_budget.saturating_sub(nodes_total);
        let res = realize_in_dimension(dm, q, r, remaining)?;
        nodes_total += res.nodes_explored;
        match res.outcome {
            RealizeOutcome::Realized(set) => {
                return Ok(EmbeddingResult {
                    status: EmbeddingStatus::Exact,
                    min_dimension: r,
                    nodes_explored: nodes_total,
                    realization: Some(set),
                });
            }
            RealizeOutcome::Infeasible => continue,
            RealizeOutcome::BudgetExhausted => {
                return Ok(EmbeddingResult {
                    status: EmbeddingStatus::BudgetExhausted,
                    min_dimension: r,
                    nodes_explored: nodes_total,
                    realization: None,
                });
            }
        }
    }
    let status = if stop < sound_stop {
        // a caller-imposed dimension cap cut the scan short
        EmbeddingStatus::BudgetExhausted
    } else {
        EmbeddingStatus::Infeasible
    };
    Ok(EmbeddingResult {
        status,
        min_dimension: last_attempted,
        nodes_explored: nodes_total,
        realization: None,
    })
}

/// Decide whether `s` is metrically dense.
///
/// Fast path: when the bounds report certifies density (rank equals the
/// ceiling of the isometry-invariant lower bound) no search is needed.
/// Otherwise the minimum embedding dimension is computed exactly; a smaller
/// dimension than `rank(s)` yields a concrete lower-rank witness.
pub fn is_metrically_dense(s: &PointSet, cfg: &SearchConfig) -> Result<DensityVerdict> {
    let report = bounds_report(s)?;
    if report.density_certified {
        return Ok(DensityVerdict {
            verdict: Verdict::Dense,
            certified_by: Some(CertifiedBy::BoundCertificate),
            witness: None,
        });
    }
    let dm = s.distance_matrix();
    let result = min_embedding_dimension(&dm, s.q(), cfg)?;
    match result.status {
        EmbeddingStatus::Exact => {
            let rank = s.rank();
            assert!(
                result.min_dimension <= rank,
                "a set realizes its own matrix within its rank"
            );
            if result.min_dimension == rank {
                Ok(DensityVerdict {
                    verdict: Verdict::Dense,
                    certified_by: Some(CertifiedBy::ExactSearch),
                    witness: None,
                })
            } else {
                Ok(DensityVerdict {
                    verdict: Verdict::NotDense,
                    certified_by: Some(CertifiedBy::ExactSearch),
                    witness: result.realization,
                })
            }
        }
        EmbeddingStatus::BudgetExhausted => Ok(DensityVerdict {
            verdict: Verdict::Unknown,
            certified_by: None,
            witness: None,
        }),
        EmbeddingStatus::Infeasible => {
            unreachable!("a point set always realizes its own distance matrix")
        }
    }
}

/// Independent check of a `not_dense` witness: `b` must be isometric to `s`
/// with strictly smaller rank.
pub fn verify_witness(s: &PointSet, b: &PointSet) -> bool {
    crate::isometry::is_isometric(s, b).is_some() && b.rank() < s.rank()
}
