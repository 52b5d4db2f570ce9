//! Exact rational bounds relating the rank of a point set to its distance
//! sum, together with the extremal per-column contributions behind them and
//! a combined report.
//!
//! All comparisons are exact; nothing here touches floating point, because
//! the interesting conclusions (tightness, the density certificate) are
//! equality tests on rationals.

use std::fmt;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::space::PointSet;

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Reduced rational `num / den`. Panics if `den` is zero; the sign is
    /// normalized onto the numerator.
    pub fn new(num: i64, den: i64) -> Self {
        Self(Ratio::new(num, den))
    }

    pub fn from_int(v: i64) -> Self {
        Self(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == Ratio::from_integer(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<std::cmp::Ordering> {
        self.0.partial_cmp(&Ratio::from_integer(*other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &self.numer())?;
        s.serialize_field("den", &self.denom())?;
        s.end()
    }
}

// Counts stay within i64 at the supported scale; a breach means the input is
// far outside the desk-scale design envelope, so fail loudly.
fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("bound arithmetic exceeds 64-bit range")
}

fn check_m(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::TooFewPoints {
            m: m as usize,
            required: 2,
        });
    }
    Ok(())
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q });
    }
    Ok(())
}

/// Upper bound on the rank: `D / (m - 1)`.
pub fn rank_upper_bound(distance_sum: u64, m: u64) -> Result<Rational> {
    check_m(m)?;
    Ok(Rational::new(
        narrow(distance_sum as i128),
        narrow((m - 1) as i128),
    ))
}

/// Lower bound on the rank.
///
/// For `m >= q` this is `2qD / ((q-1) m^2)`; for `m < q` (which forces
/// `q > 2` once `m >= 2`) it is `2(q-2)D / ((m^2-2)(q-2) - (m-2)^2)`.
pub fn rank_lower_bound(distance_sum: u64, m: u64, q: u64) -> Result<Rational> {
    check_m(m)?;
    check_q(q)?;
    let d = distance_sum as i128;
    let (m, q) = (m as i128, q as i128);
    if m >= q {
        Ok(Rational::new(narrow(2 * q * d), narrow((q - 1) * m * m)))
    } else {
        let den = (m * m - 2) * (q - 2) - (m - 2) * (m - 2);
        assert!(den > 0, "lower-bound denominator must be positive");
        Ok(Rational::new(narrow(2 * (q - 2) * d), narrow(den)))
    }
}

/// Least contribution a non-constant column can make to the distance sum:
/// `m - 1`, attained by the histogram `(m-1, 1)`.
pub fn min_column_contribution(m: u64) -> Result<u64> {
    check_m(m)?;
    Ok(m - 1)
}

/// Largest contribution a non-constant column can make, as the real
/// relaxation of the histogram optimum. Integer histograms may fall short
/// of this value when the optimal counts are fractional.
pub fn max_column_contribution(m: u64, q: u64) -> Result<Rational> {
    check_m(m)?;
    check_q(q)?;
    let (m, q) = (m as i128, q as i128);
    if m >= q {
        Ok(Rational::new(narrow((q - 1) * m * m), narrow(2 * q)))
    } else {
        let num = (m * m - 2) * (q - 2) - (m - 2) * (m - 2);
        Ok(Rational::new(narrow(num), narrow(2 * (q - 2))))
    }
}

/// Which lower-bound case applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowerBoundCase {
    #[serde(rename = "m>=q")]
    MGeQ,
    #[serde(rename = "m<q")]
    MLtQ,
}

impl fmt::Display for LowerBoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBoundCase::MGeQ => write!(f, "m>=q"),
            LowerBoundCase::MLtQ => write!(f, "m<q"),
        }
    }
}

/// Exact bound evaluation for one point set.
///
/// `lower_tight` / `upper_tight` compare the integer rank against the
/// integer sharpenings `ceil(lower)` / `floor(upper)`. The lower bound is a
/// function of `(D, m, q)` only, all isometry invariants, so
/// `rank == ceil(lower)` certifies that no isometric image has smaller rank:
/// that is the `density_certified` flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub m: u64,
    pub q: u64,
    pub distance_sum: u64,
    pub rank: u64,
    pub lower: Rational,
    pub upper: Rational,
    pub lower_ceiling: i64,
    pub upper_floor: i64,
    pub lower_case: LowerBoundCase,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub density_certified: bool,
}

pub fn bounds_report(s: &PointSet) -> Result<BoundsReport> {
    let m = s.len() as u64;
    let q = s.q() as u64;
    let distance_sum = s.distance_sum()?;
    let rank = s.rank() as u64;
    let lower = rank_lower_bound(distance_sum, m, q)?;
    let upper = rank_upper_bound(distance_sum, m)?;
    let lower_ceiling = lower.ceil();
    let upper_floor = upper.floor();
    let lower_tight = rank as i64 == lower_ceiling;
    let upper_tight = rank as i64 == upper_floor;
    Ok(BoundsReport {
        m,
        q,
        distance_sum,
        rank,
        lower,
        upper,
        lower_ceiling,
        upper_floor,
        lower_case: if m >= q {
            LowerBoundCase::MGeQ
        } else {
            LowerBoundCase::MLtQ
        },
        lower_tight,
        upper_tight,
        density_certified: lower_tight,
    })
}
