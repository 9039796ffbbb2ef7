//! Weighted citation indices.
//!
//! Each paper's citation count is split among its authors by a positional
//! weight scheme; an author's weighted h-index is the ordinary h-index of
//! those shares. Shares stay exact, so a share of `16/3` counts toward
//! `h = 5` but not `h = 6`.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::error::WeightError;
use crate::scalar::Scalar;
use crate::scheme::{SchemeSpec, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("author '{author}' is not listed on paper '{paper}'")]
    AuthorNotFound { author: String, paper: String },
    #[error("duplicate paper id '{0}'")]
    DuplicatePaper(String),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error(transparent)]
    Scheme(#[from] WeightError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("paper '{0}' has an empty author list")]
    EmptyAuthors(String),
    #[error("paper '{paper}' lists author '{author}' more than once")]
    DuplicateAuthor { paper: String, author: String },
}

/// One publication with its byline in credit order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaperRecord {
    paper_id: String,
    citations: u64,
    authors: Vec<String>,
}

impl PaperRecord {
    pub fn new(
        paper_id: impl Into<String>,
        citations: u64,
        authors: Vec<String>,
    ) -> Result<Self, RecordError> {
        let paper_id = paper_id.into();
        if authors.is_empty() {
            return Err(RecordError::EmptyAuthors(paper_id));
        }
        let mut seen = HashSet::with_capacity(authors.len());
        if let Some(dup) = authors.iter().find(|a| !seen.insert(a.as_str())) {
            return Err(RecordError::DuplicateAuthor {
                author: dup.clone(),
                paper: paper_id,
            });
        }
        Ok(PaperRecord {
            paper_id,
            citations,
            authors,
        })
    }

    pub fn paper_id(&self) -> &str {
        &self.paper_id
    }

    pub fn citations(&self) -> u64 {
        self.citations
    }

    pub fn authors(&self) -> &[String] {
        &self.authors
    }

    /// 1-based byline position of `author_id`.
    pub fn position_of(&self, author_id: &str) -> Option<usize> {
        self.authors
            .iter()
            .position(|a| a == author_id)
            .map(|i| i + 1)
    }
}

/// A paper's contribution to one author's profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Credit<T> {
    pub paper_id: String,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorProfile<T> {
    pub author_id: String,
    /// Sorted by value descending, ties by paper id ascending.
    pub credits: Vec<Credit<T>>,
    pub weighted_h: usize,
}

impl<T: Scalar> AuthorProfile<T> {
    pub fn paper_count(&self) -> usize {
        self.credits.len()
    }

    pub fn effective_citations(&self) -> Vec<T> {
        self.credits.iter().map(|c| c.value.clone()).collect()
    }
}

fn share<T: Scalar>(citations: u64, weights: &WeightVector<T>, position: usize) -> T {
    let citations = T::from_u64(citations).expect("citation count representable");
    citations * weights.weights()[position - 1].clone()
}

/// `citations × w_j` for the author at position `j` on `paper`.
pub fn effective_citations<T: Scalar>(
    paper: &PaperRecord,
    author_id: &str,
    scheme: &SchemeSpec<T>,
) -> Result<T, IndexError> {
    let position = paper
        .position_of(author_id)
        .ok_or_else(|| IndexError::AuthorNotFound {
            author: author_id.to_string(),
            paper: paper.paper_id.clone(),
        })?;
    let weights = scheme.weights(paper.authors.len())?;
    Ok(share(paper.citations, &weights, position))
}

/// Every author's share of one paper, in byline order.
pub fn paper_credits<T: Scalar>(
    paper: &PaperRecord,
    scheme: &SchemeSpec<T>,
) -> Result<Vec<(String, T)>, IndexError> {
    let weights = scheme.weights(paper.authors.len())?;
    Ok(paper
        .authors
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), share(paper.citations, &weights, i + 1)))
        .collect())
}

/// Largest `h` such that at least `h` values are `>= h`.
pub fn h_index<T: Scalar>(values: &[T]) -> usize {
    let mut sorted: Vec<&T> = values.iter().collect();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("citation values are comparable"));
    sorted
        .iter()
        .enumerate()
        .take_while(|(i, v)| **v >= &T::from_count(i + 1))
        .count()
}

/// Profiles for every author in the corpus. The result does not depend on
/// the order of `corpus`.
pub fn build_profiles<T: Scalar>(
    corpus: &[PaperRecord],
    scheme: &SchemeSpec<T>,
) -> Result<BTreeMap<String, AuthorProfile<T>>, IndexError> {
    let mut seen = HashSet::with_capacity(corpus.len());
    for paper in corpus {
        if !seen.insert(paper.paper_id.as_str()) {
            return Err(IndexError::DuplicatePaper(paper.paper_id.clone()));
        }
    }

    let mut weights_by_k: HashMap<usize, WeightVector<T>> = HashMap::new();
    let mut credits: BTreeMap<String, Vec<Credit<T>>> = BTreeMap::new();
    for paper in corpus {
        let k = paper.authors.len();
        let weights = match weights_by_k.entry(k) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(scheme.weights(k)?),
        };
        for (i, author) in paper.authors.iter().enumerate() {
            credits.entry(author.clone()).or_default().push(Credit {
                paper_id: paper.paper_id.clone(),
                value: share(paper.citations, weights, i + 1),
            });
        }
    }

    Ok(credits
        .into_iter()
        .map(|(author_id, mut credits)| {
            credits.sort_by(|a, b| {
                b.value
                    .partial_cmp(&a.value)
                    .expect("citation values are comparable")
                    .then_with(|| a.paper_id.cmp(&b.paper_id))
            });
            let values: Vec<T> = credits.iter().map(|c| c.value.clone()).collect();
            let profile = AuthorProfile {
                weighted_h: h_index(&values),
                author_id: author_id.clone(),
                credits,
            };
            (author_id, profile)
        })
        .collect())
}
