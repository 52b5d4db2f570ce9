//! Prime-power finite fields GF(p^e), generator matrices and their spans,
//! and the uniform-column-distribution test.
//!
//! Field elements are the integers `0..q` read as base-p coefficient vectors
//! of polynomials over GF(p), reduced modulo the lexicographically smallest
//! monic irreducible polynomial of degree `e`. With this encoding a word
//! over E_q doubles as a vector of field elements, so spans land directly in
//! [`PointSet`] with no conversion layer.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::space::{PointSet, SpaceParams, Word};

/// A concrete field GF(p^e) with `q = p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus polynomial, coefficients low-degree-first, length e+1.
    /// For e = 1 this is the placeholder `x` and arithmetic is plain mod p.
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn coeffs(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.e as usize];
        let mut v = a;
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    fn element(&self, coeffs: &[u32]) -> u32 {
        let mut out = 0u32;
        for &c in coeffs.iter().rev() {
            out = out * self.p + c;
        }
        out
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        assert!(a < self.q && b < self.q, "elements must lie in [0, q)");
        let (ac, bc) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u32> = ac.iter().zip(&bc).map(|(x, y)| (x + y) % self.p).collect();
        self.element(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        assert!(a < self.q, "elements must lie in [0, q)");
        let nc: Vec<u32> = self
            .coeffs(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.element(&nc)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        assert!(a < self.q && b < self.q, "elements must lie in [0, q)");
        let p = self.p as u64;
        let e = self.e as usize;
        let (ac, bc) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in ac.iter().enumerate() {
            for (j, &y) in bc.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (d, &mc) in self.modulus.iter().enumerate().take(e) {
                let idx = i - e + d;
                prod[idx] = (prod[idx] + p - (c * mc as u64) % p) % p;
            }
        }
        let coeffs: Vec<u32> = prod.iter().take(e).map(|&c| c as u32).collect();
        self.element(&coeffs)
    }

    pub fn pow(&self, base: u32, exp: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = base;
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, via a^(q-2).
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero { q: self.q });
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }
}

/// Construct GF(q) for a prime power q, with the lexicographically smallest
/// monic irreducible modulus (coefficients compared constant term first).
/// Deterministic across runs.
pub fn make_field(q: u32) -> Result<FieldSpec> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q: q as u64 });
    }
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let modulus = if e == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible(p, e)
    };
    Ok(FieldSpec { p, e, q, modulus })
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .expect("q >= 2 has a divisor");
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    let total = (p as u64).pow(e as u32);
    for idx in 0..total {
        let mut coeffs = vec![0u32; e + 1];
        coeffs[e] = 1;
        let mut v = idx;
        for j in (0..e).rev() {
            coeffs[j] = (v % p as u64) as u32;
            v /= p as u64;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

/// Trial division by every monic polynomial of degree at most e/2.
fn is_irreducible(candidate: &[u32], p: u32) -> bool {
    let e = candidate.len() - 1;
    for d in 1..=e / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u32; d + 1];
            divisor[d] = 1;
            let mut v = idx;
            for c in divisor.iter_mut().take(d) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            if poly_rem(candidate, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b`, coefficients
/// low-degree-first over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for (d, &bc) in b.iter().enumerate() {
            let idx = i - db + d;
            r[idx] = (r[idx] + p - (c * bc as u64) % p) % p;
        }
    }
    r.truncate(db);
    r.iter().map(|&c| c as u32).collect()
}

fn row_rank(field: &FieldSpec, rows: &[Word]) -> usize {
    let mut mat: Vec<Vec<u32>> = rows.iter().map(|w| w.symbols().to_vec()).collect();
    if mat.is_empty() {
        return 0;
    }
    let ncols = mat[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = field
            .inv(mat[rank][col])
            .expect("pivot entries are nonzero");
        for cell in mat[rank][col..].iter_mut() {
            *cell = field.mul(*cell, inv);
        }
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (cell, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell = field.sub(*cell, field.mul(factor, p));
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Linearly independent generator rows spanning a k-dimensional subspace
/// of E_q^n. Dependent rows are rejected rather than reduced, so the
/// requested dimension is always the actual one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    n: usize,
    rows: Vec<Word>,
}

impl GeneratorMatrix {
    pub fn new(field: FieldSpec, n: usize, rows: Vec<Word>) -> Result<Self> {
        let k = rows.len();
        if k == 0 || k > n {
            return Err(Error::SubspaceDimension { k, n });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RowLength {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            if let Some(&s) = row.symbols().iter().find(|&&s| s >= field.q()) {
                return Err(Error::SymbolOutOfRange {
                    row: i,
                    symbol: s,
                    q: field.q(),
                });
            }
        }
        if row_rank(&field, &rows) != k {
            return Err(Error::DependentRows);
        }
        Ok(Self { field, n, rows })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    /// All q^k linear combinations, in lexicographic coefficient order
    /// (first coefficient most significant), starting with the zero word.
    pub fn span(&self) -> PointSet {
        let q = self.field.q() as usize;
        let k = self.k();
        let size = q
            .checked_pow(k as u32)
            .expect("span size fits in memory at supported scales");
        let mut words = Vec::with_capacity(size);
        for idx in 0..size {
            let mut coeffs = vec![0u32; k];
            let mut v = idx;
            for i in (0..k).rev() {
                coeffs[i] = (v % q) as u32;
                v /= q;
            }
            let mut word = vec![0u32; self.n];
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, w) in word.iter_mut().enumerate() {
                    *w = self.field.add(*w, self.field.mul(c, self.rows[i][j]));
                }
            }
            words.push(Word::new(word));
        }
        let params = SpaceParams::new(self.field.q(), self.n).expect("validated at construction");
        PointSet::new(params, words).expect("independent generators span distinct elements")
    }
}

/// True iff q divides m and every non-constant column carries each symbol
/// exactly m/q times. Constant columns are exempt; q not dividing m simply
/// returns false, keeping this usable as a predicate on arbitrary sets.
pub fn is_uniform_columns(s: &PointSet) -> bool {
    let m = s.len() as u64;
    let q = s.q() as u64;
    if !m.is_multiple_of(q) {
        return false;
    }
    let share = m / q;
    (0..s.n()).all(|j| {
        let h = s.column_histogram(j).expect("column index in range");
        h.is_constant() || h.counts().iter().all(|&y| y == share)
    })
}

/// Sample a random k-dimensional generator matrix, rejecting dependent rows.
/// Deterministic for a fixed seed.
pub fn random_subspace(
    n: usize,
    k: usize,
    field: &FieldSpec,
    seed: u64,
) -> Result<GeneratorMatrix> {
    if k == 0 || k > n {
        return Err(Error::SubspaceDimension { k, n });
    }
    const MAX_ATTEMPTS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Word> = Vec::with_capacity(k);
    let mut attempts = 0;
    while rows.len() < k {
        if attempts >= MAX_ATTEMPTS {
            return Err(Error::SamplingExhausted { k, attempts });
        }
        attempts += 1;
        let cand = Word::new((0..n).map(|_| rng.random_range(0..field.q())).collect());
        rows.push(cand);
        if row_rank(field, &rows) != rows.len() {
            rows.pop();
        }
    }
    GeneratorMatrix::new(field.clone(), n, rows)
}
