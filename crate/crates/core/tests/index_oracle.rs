mod common {
    pub mod oracle;
}

use common::oracle::{oracle_profiles, random_corpus};
use credit_weights::corpus::{parse_corpus, write_corpus, CorpusFormat};
use credit_weights::index::{build_profiles, h_index, paper_credits, PaperRecord};
use credit_weights::scalar::{frac, int};
use credit_weights::{Positivity, Rational, Scheme, SchemeKind};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scheme_for(kind: SchemeKind, alpha: &Rational) -> Scheme {
    Scheme::fixed(kind).unwrap_or_else(|| Scheme::type2(alpha.clone(), Positivity::StrictPositive))
}

#[test]
fn twenty_paper_equal_corpus_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let corpus = random_corpus(&mut rng, 20, 5, 50);
    let profiles = build_profiles(&corpus, &Scheme::equal()).unwrap();
    let oracle = oracle_profiles(&corpus, SchemeKind::Equal, &int(0));
    assert_eq!(profiles.len(), oracle.len());
    for (author, (values, h)) in oracle {
        let p = &profiles[&author];
        assert_eq!(p.effective_citations(), values, "{author}");
        assert_eq!(p.weighted_h, h, "{author}");
    }
}

#[test]
fn all_schemes_match_oracle_and_conserve_credit() {
    let alpha = frac(1, 40);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let corpus = random_corpus(&mut rng, 25, 6, 80);
        for kind in SchemeKind::ALL {
            let scheme = scheme_for(kind, &alpha);
            let profiles = build_profiles(&corpus, &scheme).unwrap();
            let oracle = oracle_profiles(&corpus, kind, &alpha);
            for (author, (values, h)) in &oracle {
                assert_eq!(&profiles[author].effective_citations(), values);
                assert_eq!(profiles[author].weighted_h, *h);
            }
            for paper in &corpus {
                let total = paper_credits(paper, &scheme)
                    .unwrap()
                    .into_iter()
                    .fold(int(0), |a, (_, c)| a + c);
                assert_eq!(total, int(paper.citations() as i64));
            }
        }
    }
}

#[test]
fn weighted_h_never_exceeds_raw_h() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..30 {
        let corpus = random_corpus(&mut rng, 30, 6, 100);
        let raw = build_profiles(&corpus, &Scheme::fixed(SchemeKind::Equal).unwrap()).unwrap();
        for kind in SchemeKind::ALL {
            let profiles = build_profiles(&corpus, &scheme_for(kind, &frac(1, 50))).unwrap();
            for (author, p) in &profiles {
                let raw_citations: Vec<Rational> = corpus
                    .iter()
                    .filter(|paper| paper.position_of(author).is_some())
                    .map(|paper| int(paper.citations() as i64))
                    .collect();
                assert!(p.weighted_h <= h_index(&raw_citations));
                assert!(p.weighted_h <= p.paper_count());
                assert_eq!(raw[author].paper_count(), p.paper_count());
            }
        }
    }
}

#[test]
fn decreasing_schemes_never_reward_later_positions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let corpus = random_corpus(&mut rng, 30, 6, 100);
    for kind in [
        SchemeKind::ArithmeticType1,
        SchemeKind::ArithmeticType2,
        SchemeKind::Geometric,
        SchemeKind::Harmonic,
    ] {
        let scheme = scheme_for(kind, &frac(1, 50));
        for paper in &corpus {
            let credits = paper_credits(paper, &scheme).unwrap();
            assert!(credits.windows(2).all(|w| w[0].1 >= w[1].1));
            for (author, credit) in credits {
                assert!(credit <= int(paper.citations() as i64), "{author}");
            }
        }
    }
}

#[test]
fn profiles_ignore_corpus_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let mut corpus = random_corpus(&mut rng, 30, 6, 100);
        let scheme = Scheme::harmonic();
        let before = build_profiles(&corpus, &scheme).unwrap();
        corpus.shuffle(&mut rng);
        assert_eq!(build_profiles(&corpus, &scheme).unwrap(), before);
    }
}

fn record_strategy() -> impl Strategy<Value = Vec<PaperRecord>> {
    let author = "[a-z][a-z0-9 _.-]{0,6}[a-z0-9]";
    let paper = (0u64..10_000, prop::collection::btree_set(author, 1..6));
    prop::collection::vec(paper, 0..12).prop_map(|papers| {
        papers
            .into_iter()
            .enumerate()
            .map(|(i, (citations, authors))| {
                let mut authors: Vec<String> = authors.into_iter().collect();
                let n = authors.len();
                authors.rotate_left(i % n);
                PaperRecord::new(format!("id,{i}\"x"), citations, authors).unwrap()
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn corpus_round_trips(papers in record_strategy()) {
        for format in [CorpusFormat::JsonLines, CorpusFormat::Csv] {
            let text = write_corpus(&papers, format).unwrap();
            let parsed = parse_corpus(text.as_bytes(), format).unwrap();
            prop_assert_eq!(&parsed.papers, &papers);
        }
    }
}
