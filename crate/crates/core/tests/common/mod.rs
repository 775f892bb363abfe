#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use foxkh::knotio::{
    dt_to_gauss, gauss_to_diagram, load_corpus, parse_dt, Diagram, GaussCode, PassKind,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/rolfsen_alternating_8.jsonl")
}

pub struct Knot {
    pub name: String,
    pub diagram: Diagram,
    pub expected_det: Option<u64>,
}

pub fn corpus() -> Vec<Knot> {
    load_corpus(corpus_path())
        .unwrap()
        .into_iter()
        .map(|e| Knot {
            diagram: gauss_to_diagram(&dt_to_gauss(&e.dt))
                .unwrap()
                .with_name(e.name.clone()),
            name: e.name,
            expected_det: e.expected_det,
        })
        .collect()
}

pub fn from_dt(dt: &str) -> Diagram {
    gauss_to_diagram(&dt_to_gauss(&parse_dt(dt).unwrap())).unwrap()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Crossing matrix read straight off a Gauss code: arcs are counted along
/// the code from its first pass, advancing after each under pass, and rows
/// follow crossing labels. Only the labeling differs from the library's.
pub fn naive_crossing_matrix(code: &GaussCode) -> Vec<Vec<i64>> {
    let passes = code.passes();
    let n = passes.len() / 2;
    let mut arc = vec![0usize; passes.len()];
    let mut count = 0;
    for (k, p) in passes.iter().enumerate() {
        arc[k] = count % n;
        if p.kind == PassKind::Under {
            count += 1;
        }
    }
    let mut m = vec![vec![0i64; n]; n];
    for (k, p) in passes.iter().enumerate() {
        let row = p.label as usize - 1;
        match p.kind {
            PassKind::Over => m[row][arc[k]] += 2,
            PassKind::Under => {
                m[row][arc[k]] -= 1;
                m[row][(arc[k] + 1) % n] -= 1;
            }
        }
    }
    m
}

/// Knot determinant by cofactor expansion of the naive matrix.
pub fn oracle_det(code: &GaussCode) -> BigInt {
    let m = naive_crossing_matrix(code);
    let n = m.len();
    let minor: Vec<Vec<i64>> = m[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect();
    let d = cofactor_det(&big_rows(&minor));
    if d < BigInt::zero() {
        -d
    } else {
        d
    }
}

/// DT codes on `1..=max_n` crossings, all positive or all negative.
pub fn dt_strategy(max_n: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let evens: Vec<i64> = (1..=n as i64).map(|k| 2 * k).collect();
            (Just(evens).prop_shuffle(), any::<bool>())
        })
        .prop_map(|(v, neg)| {
            if neg {
                v.into_iter().map(|x| -x).collect()
            } else {
                v
            }
        })
}

/// Paley construction of a Hadamard matrix of order `q + 1`, `q` a prime
/// congruent to 3 mod 4.
pub fn paley_hadamard(q: i64) -> Vec<Vec<i64>> {
    let squares: Vec<i64> = (1..q).map(|x| x * x % q).collect();
    let chi = |a: i64| {
        let a = a.rem_euclid(q);
        if a == 0 {
            0
        } else if squares.contains(&a) {
            1
        } else {
            -1
        }
    };
    let n = (q + 1) as usize;
    let mut h = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let s = match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => -1,
                _ => chi(j as i64 - i as i64),
            };
            h[i][j] = s + i64::from(i == j);
        }
    }
    h
}
