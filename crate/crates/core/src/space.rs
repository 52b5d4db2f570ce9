//! Words, point sets, and the basic combinatorial statistics of subsets of
//! the Hamming space E_q^n: pairwise distances, the distance sum, per-column
//! symbol histograms with their pair contributions, rank (the number of
//! non-constant columns), and face counting.

use std::collections::HashMap;
use std::fmt;
use std::ops::Index;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Ambient space parameters: alphabet size `q >= 2` and word length `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceParams {
    q: u32,
    n: usize,
}

impl SpaceParams {
    pub fn new(q: u32, n: usize) -> Result<Self> {
        if q < 2 || n == 0 {
            return Err(Error::BadSpaceParams { q, n });
        }
        Ok(Self { q, n })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// A word over the alphabet {0, .., q-1}. Symbol range is validated when the
/// word enters a [`PointSet`] or generator matrix with known parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(symbols: Vec<u32>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for Word {
    fn from(symbols: Vec<u32>) -> Self {
        Self::new(symbols)
    }
}

impl Index<usize> for Word {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Number of coordinates where `x` and `y` differ.
pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.symbols()
        .iter()
        .zip(y.symbols())
        .filter(|(a, b)| a != b)
        .count())
}

/// An ordered set of distinct words in a common space. Row order is
/// significant for isometry witnesses and file round-tripping, but rank,
/// the distance sum and the column histograms do not depend on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    params: SpaceParams,
    rows: Vec<Word>,
}

impl PointSet {
    pub fn new(params: SpaceParams, rows: Vec<Word>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != params.n() {
                return Err(Error::RowLength {
                    row: i,
                    len: row.len(),
                    n: params.n(),
                });
            }
            if let Some(&s) = row.symbols().iter().find(|&&s| s >= params.q()) {
                return Err(Error::SymbolOutOfRange {
                    row: i,
                    symbol: s,
                    q: params.q(),
                });
            }
            if let Some(&first) = seen.get(row.symbols()) {
                return Err(Error::DuplicateRow { first, second: i });
            }
            seen.insert(row.symbols(), i);
        }
        drop(seen);
        Ok(Self { params, rows })
    }

    /// Convenience constructor from raw symbol rows.
    pub fn from_rows(q: u32, n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let params = SpaceParams::new(q, n)?;
        Self::new(params, rows.into_iter().map(Word::new).collect())
    }

    pub fn params(&self) -> SpaceParams {
        self.params
    }

    pub fn q(&self) -> u32 {
        self.params.q()
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    /// Number of points, `m`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty sets
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Word {
        &self.rows[i]
    }

    /// The m x m matrix of pairwise Hamming distances.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let m = self.len();
        let mut entries = vec![0usize; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let d = hamming_distance(&self.rows[i], &self.rows[j])
                    .expect("rows of a point set share one length");
                entries[i * m + j] = d;
                entries[j * m + i] = d;
            }
        }
        DistanceMatrix { m, entries }
    }

    /// Sum of Hamming distances over all unordered pairs of distinct points.
    pub fn distance_sum(&self) -> Result<u64> {
        if self.len() < 2 {
            return Err(Error::TooFewPoints {
                m: self.len(),
                required: 2,
            });
        }
        let mut total = 0u64;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                total += hamming_distance(&self.rows[i], &self.rows[j])
                    .expect("rows of a point set share one length") as u64;
            }
        }
        Ok(total)
    }

    /// Symbol counts of column `j`.
    pub fn column_histogram(&self, j: usize) -> Result<ColumnHistogram> {
        if j >= self.n() {
            return Err(Error::ColumnOutOfRange {
                index: j,
                n: self.n(),
            });
        }
        let mut counts = vec![0u64; self.q() as usize];
        for row in &self.rows {
            counts[row[j] as usize] += 1;
        }
        Ok(ColumnHistogram { counts })
    }

    /// Number of non-constant columns.
    pub fn rank(&self) -> usize {
        (0..self.n())
            .filter(|&j| {
                let first = self.rows[0][j];
                self.rows.iter().any(|row| row[j] != first)
            })
            .count()
    }
}

/// Symmetric matrix of pairwise distances; the isometry invariant of a
/// point set. Externally supplied matrices are validated as metrics on
/// distinct points at construction, so a [`DistanceMatrix`] is always a
/// legal realization query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    m: usize,
    entries: Vec<usize>,
}

impl DistanceMatrix {
    pub fn from_entries(rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidMatrix {
                reason: "empty matrix".into(),
            });
        }
        if let Some(i) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::InvalidMatrix {
                reason: format!("row {i} has {} entries, expected {m}", rows[i].len()),
            });
        }
        let mut entries = vec![0usize; m * m];
        for (i, row) in rows.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                entries[i * m + j] = d;
            }
        }
        let dm = Self { m, entries };
        for i in 0..m {
            if dm.get(i, i) != 0 {
                return Err(Error::InvalidMatrix {
                    reason: format!("diagonal entry ({i}, {i}) is nonzero"),
                });
            }
            for j in (i + 1)..m {
                if dm.get(i, j) != dm.get(j, i) {
                    return Err(Error::InvalidMatrix {
                        reason: format!("entries ({i}, {j}) and ({j}, {i}) differ"),
                    });
                }
                if dm.get(i, j) == 0 {
                    return Err(Error::InvalidMatrix {
                        reason: format!("distance between distinct points {i} and {j} is zero"),
                    });
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if dm.get(i, j) > dm.get(i, k) + dm.get(k, j) {
                        return Err(Error::InvalidMatrix {
                            reason: format!("triangle inequality fails for points {i}, {k}, {j}"),
                        });
                    }
                }
            }
        }
        Ok(dm)
    }

    /// Number of points.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.m + j]
    }

    pub fn max_entry(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Sum over unordered pairs.
    pub fn distance_sum(&self) -> u64 {
        let mut total = 0u64;
        for i in 0..self.m {
            for j in (i + 1)..self.m {
                total += self.get(i, j) as u64;
            }
        }
        total
    }
}

/// Symbol counts `y_0, .., y_{q-1}` of one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnHistogram {
    counts: Vec<u64>,
}

impl ColumnHistogram {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total count, i.e. the number of rows `m`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of symbols that occur at least once.
    pub fn positive(&self) -> usize {
        self.counts.iter().filter(|&&y| y > 0).count()
    }

    /// A column is constant iff at most one symbol occurs.
    pub fn is_constant(&self) -> bool {
        self.positive() <= 1
    }

    /// Number of unordered row pairs that differ in this column:
    /// the sum of `y_k * y_j` over symbol pairs `k < j`.
    pub fn contribution(&self) -> u64 {
        let mut total = 0u64;
        for k in 0..self.counts.len() {
            for j in (k + 1)..self.counts.len() {
                total += self.counts[k] * self.counts[j];
            }
        }
        total
    }
}

/// Number of k-dimensional faces of E_q^n: C(n, k) * q^(n - k), exact.
pub fn count_faces(n: usize, k: usize, q: u32) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q: q as u64 });
    }
    if k > n {
        return Err(Error::FaceDimension { k, n });
    }
    let choose = num_integer::binomial(BigUint::from(n), BigUint::from(k));
    let cells = BigUint::from(q).pow((n - k) as u32);
    Ok(choose * cells)
}
