//! Corpus generators and brute-force oracles shared by the integration
//! suites. Everything here is deliberately independent of the search and
//! bound implementations it is used to check.
#![allow(dead_code)] // each test binary uses a different subset of helpers

use std::collections::HashMap;

use hamming_rank::{make_field, GeneratorMatrix, PointSet, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn example_a() -> PointSet {
    PointSet::from_rows(
        2,
        4,
        vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 1, 0, 1],
            vec![0, 1, 1, 0],
        ],
    )
    .unwrap()
}

pub fn example_b() -> PointSet {
    PointSet::from_rows(
        2,
        4,
        vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 1, 0, 1],
            vec![1, 0, 0, 1],
        ],
    )
    .unwrap()
}

/// Every word of E_q^n in lexicographic order.
pub fn all_words(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut words = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(words.len() * q as usize);
        for w in &words {
            for s in 0..q {
                let mut extended = w.clone();
                extended.push(s);
                next.push(extended);
            }
        }
        words = next;
    }
    words
}

/// All size-m subsets of `items`, as index-ordered rows.
pub fn subsets_of_size(items: &[Vec<u32>], m: usize) -> Vec<Vec<Vec<u32>>> {
    fn rec(
        items: &[Vec<u32>],
        m: usize,
        start: usize,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let needed = m - cur.len();
        for i in start..=items.len().saturating_sub(needed) {
            cur.push(items[i].clone());
            rec(items, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn random_point_set(rng: &mut ChaCha8Rng, q: u32, n: usize, m: usize) -> PointSet {
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(m);
    while rows.len() < m {
        let cand: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
        if !rows.contains(&cand) {
            rows.push(cand);
        }
    }
    PointSet::from_rows(q, n, rows).unwrap()
}

/// Seeded stream of random point sets with q in `2..=q_max`, n in
/// `1..=n_max`, and m in `2..=m_max` (capped by the space size).
pub fn seeded_corpus(
    seed: u64,
    count: usize,
    q_max: u32,
    n_max: usize,
    m_max: usize,
) -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = rng.random_range(2..=q_max);
            let n = rng.random_range(1..=n_max);
            let space = (q as u64).saturating_pow(n as u32);
            let cap = (m_max as u64).min(space) as usize;
            let m = rng.random_range(2..=cap.max(2));
            random_point_set(&mut rng, q, n, m)
        })
        .collect()
}

/// Every GF(2) generator matrix with word length `n` and `k <= min(n, 2)`
/// rows: all nonzero words, then all ordered independent pairs.
pub fn gf2_generator_matrices(n: usize) -> Vec<GeneratorMatrix> {
    let field = make_field(2).unwrap();
    let nonzero: Vec<Vec<u32>> = all_words(2, n).into_iter().skip(1).collect();
    let mut out = Vec::new();
    for w in &nonzero {
        out.push(GeneratorMatrix::new(field.clone(), n, vec![Word::new(w.clone())]).unwrap());
    }
    if n >= 2 {
        for a in &nonzero {
            for b in &nonzero {
                if let Ok(g) = GeneratorMatrix::new(
                    field.clone(),
                    n,
                    vec![Word::new(a.clone()), Word::new(b.clone())],
                ) {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn word_distance(x: &[u32], y: &[u32]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Flattened upper triangle of the pairwise distance matrix of `rows`;
/// the key under which realizations are grouped.
pub fn matrix_key(rows: &[&Vec<u32>]) -> Vec<usize> {
    let m = rows.len();
    let mut key = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            key.push(word_distance(rows[i], rows[j]));
        }
    }
    key
}

pub fn point_set_matrix_key(s: &PointSet) -> Vec<usize> {
    let rows: Vec<Vec<u32>> = s.rows().iter().map(|w| w.symbols().to_vec()).collect();
    matrix_key(&rows.iter().collect::<Vec<_>>())
}

fn tuple_rank(rows: &[&Vec<u32>], n: usize) -> usize {
    (0..n)
        .filter(|&c| rows.iter().any(|r| r[c] != rows[0][c]))
        .count()
}

/// Unpruned brute force: enumerate every ordered m-tuple of distinct words
/// of E_q^r and record, per distance matrix, the least rank of any tuple
/// realizing it. Any realization in a smaller ambient dimension pads to r
/// with a constant column without changing rank or distances, so this map
/// is the ground truth for minimum rank over isometric images with
/// distances at most r.
pub fn brute_force_min_ranks(q: u32, r: usize, m: usize) -> HashMap<Vec<usize>, usize> {
    let words = all_words(q, r);
    let w = words.len();
    let mut out: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut idx = vec![0usize; m];
    loop {
        let rows: Vec<&Vec<u32>> = idx.iter().map(|&i| &words[i]).collect();
        let mut distinct = true;
        'outer: for i in 0..m {
            for j in (i + 1)..m {
                if rows[i] == rows[j] {
                    distinct = false;
                    break 'outer;
                }
            }
        }
        if distinct {
            let key = matrix_key(&rows);
            let rank = tuple_rank(&rows, r);
            out.entry(key)
                .and_modify(|best| *best = (*best).min(rank))
                .or_insert(rank);
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < w {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
