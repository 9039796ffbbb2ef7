//! Brute-force reference for the weighted h-index, written without the
//! library's scheme or index code. Shared with the CLI acceptance suite.

#![allow(dead_code)]

use std::collections::BTreeMap;

use credit_weights::index::PaperRecord;
use credit_weights::{Rational, SchemeKind};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Weights straight from each scheme's defining formula.
pub fn oracle_weights(kind: SchemeKind, alpha: &Rational, k: usize) -> Vec<Rational> {
    let ki = k as i64;
    match kind {
        SchemeKind::Equal => vec![r(1, ki); k],
        SchemeKind::ArithmeticType1 => (1..=ki)
            .map(|j| r(2 * (ki - j + 1), ki * (ki + 1)))
            .collect(),
        SchemeKind::ArithmeticType2 => {
            let mut w = r(1, ki) + alpha.clone() * r(ki - 1, 2);
            let mut out = Vec::new();
            for _ in 0..k {
                out.push(w.clone());
                w -= alpha.clone();
            }
            out
        }
        SchemeKind::Geometric => {
            let den = (BigInt::one() << k) - BigInt::one();
            (1..=k)
                .map(|j| Rational::new(BigInt::one() << (k - j), den.clone()))
                .collect()
        }
        SchemeKind::Harmonic => {
            let l = (1..=ki).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
            let parts: Vec<BigInt> = (1..=ki).map(|j| &l / BigInt::from(j)).collect();
            let total: BigInt = parts.iter().sum();
            parts
                .into_iter()
                .map(|p| Rational::new(p, total.clone()))
                .collect()
        }
    }
}

/// Largest h with at least h values >= h, by scanning every candidate.
pub fn oracle_h(values: &[Rational]) -> usize {
    (0..=values.len())
        .filter(|&h| {
            let bar = Rational::from_integer(BigInt::from(h));
            values.iter().filter(|v| **v >= bar).count() >= h
        })
        .max()
        .unwrap_or(0)
}

/// author -> (sorted effective citations, weighted h)
pub fn oracle_profiles(
    corpus: &[PaperRecord],
    kind: SchemeKind,
    alpha: &Rational,
) -> BTreeMap<String, (Vec<Rational>, usize)> {
    let mut values: BTreeMap<String, Vec<Rational>> = BTreeMap::new();
    for p in corpus {
        let w = oracle_weights(kind, alpha, p.authors().len());
        for (i, a) in p.authors().iter().enumerate() {
            let c = Rational::from_integer(BigInt::from(p.citations()));
            values.entry(a.clone()).or_default().push(c * w[i].clone());
        }
    }
    values
        .into_iter()
        .map(|(a, mut v)| {
            v.sort_by(|x, y| y.cmp(x));
            let h = oracle_h(&v);
            (a, (v, h))
        })
        .collect()
}

/// Random corpus with `max_papers` papers at most, authors drawn from a
/// small pool so that profiles overlap.
pub fn random_corpus(
    rng: &mut impl Rng,
    max_papers: usize,
    max_authors: usize,
    max_citations: u64,
) -> Vec<PaperRecord> {
    let pool: Vec<String> = (0..12).map(|i| format!("author{i:02}")).collect();
    let n = rng.gen_range(0..=max_papers);
    (0..n)
        .map(|i| {
            let k = rng.gen_range(1..=max_authors);
            let mut authors = pool.clone();
            for j in 0..k {
                let pick = rng.gen_range(j..authors.len());
                authors.swap(j, pick);
            }
            authors.truncate(k);
            PaperRecord::new(
                format!("p{i:03}"),
                rng.gen_range(0..=max_citations),
                authors,
            )
            .expect("generated record is valid")
        })
        .collect()
}
