//! Positional weight schemes for sharing one paper's credit among its authors.
//!
//! Five schemes are provided, all evaluated in any [`Scalar`]:
//!
//! | scheme      | weight of the author at position `j` of `k`          |
//! |-------------|------------------------------------------------------|
//! | equal       | `1/k`                                                |
//! | type1       | `2(k-j+1) / (k(k+1))`                                |
//! | type2       | `1/k + (k-2j+1)/2 * alpha`                           |
//! | geometric   | `2^(k-j) / (2^k - 1)`                                |
//! | harmonic    | `(1/j) / H_k`                                        |
//!
//! Type-2 is an arithmetic progression with common difference `-alpha`;
//! `alpha = 0` gives equal weights and `alpha = 2/(k(k+1))` gives type1.

mod analysis;
mod bounds;

use std::fmt;
use std::str::FromStr;

use crate::error::WeightError;
use crate::scalar::Scalar;

pub use analysis::{
    classify_linearity, delta_vs_equal, first_last_ratio, harmonic_approx, harmonic_delta,
    harmonic_number, harmonic_sum, monotonicity, type2_delta, HarmonicNumbers, HarmonicSum,
    Linearity, Monotonicity, EULER_MASCHERONI,
};
pub use bounds::{
    alpha_from_endpoints, alpha_matching_type1, endpoint_alpha, endpoints_consistent, max_alpha,
    positivity_bound, type2_endpoints, type2_ratio, weights_from_endpoints, AlphaBound,
};

/// Ordered credit weights for one author list; position 1 is the first author.
///
/// Always non-empty and summing to one (exactly, for exact scalars).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector<T> {
    weights: Vec<T>,
}

impl<T: Scalar> WeightVector<T> {
    /// Wraps externally supplied weights, checking they form a distribution
    /// over at least one author.
    pub fn new(weights: Vec<T>) -> Result<Self, WeightError> {
        if weights.is_empty() {
            return Err(WeightError::InvalidAuthorCount);
        }
        let v = WeightVector { weights };
        let sum = v.sum();
        if !sum.approx_eq(&T::one()) {
            return Err(WeightError::NotNormalized {
                sum: sum.to_string(),
            });
        }
        Ok(v)
    }

    fn from_generated(weights: Vec<T>) -> Self {
        debug_assert!(!weights.is_empty());
        WeightVector { weights }
    }

    /// Number of authors.
    pub fn k(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<T> {
        self.weights
    }

    /// Weight at a 1-based author position.
    pub fn at(&self, position: usize) -> Result<&T, WeightError> {
        position
            .checked_sub(1)
            .and_then(|i| self.weights.get(i))
            .ok_or(WeightError::PositionOutOfRange {
                position,
                k: self.k(),
            })
    }

    pub fn first(&self) -> &T {
        &self.weights[0]
    }

    pub fn last(&self) -> &T {
        &self.weights[self.weights.len() - 1]
    }

    pub fn sum(&self) -> T {
        self.weights
            .iter()
            .fold(T::zero(), |acc, w| acc + w.clone())
    }

    /// Same weights assigned in the opposite author order.
    pub fn reversed(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.reverse();
        WeightVector { weights }
    }

    /// `(position, weight)` pairs with 1-based positions.
    pub fn positions(&self) -> impl Iterator<Item = (usize, &T)> {
        self.weights.iter().enumerate().map(|(i, w)| (i + 1, w))
    }

    pub fn to_f64(&self) -> WeightVector<f64> {
        WeightVector {
            weights: self
                .weights
                .iter()
                .map(|w| w.to_f64().unwrap_or(f64::NAN))
                .collect(),
        }
    }
}

/// The five supported schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeKind {
    Equal,
    ArithmeticType1,
    ArithmeticType2,
    Geometric,
    Harmonic,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 5] = [
        SchemeKind::Equal,
        SchemeKind::ArithmeticType1,
        SchemeKind::ArithmeticType2,
        SchemeKind::Geometric,
        SchemeKind::Harmonic,
    ];

    /// Lowercase command-line name.
    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::Equal => "equal",
            SchemeKind::ArithmeticType1 => "type1",
            SchemeKind::ArithmeticType2 => "type2",
            SchemeKind::Geometric => "geometric",
            SchemeKind::Harmonic => "harmonic",
        }
    }

    /// Human-readable name used in reports.
    pub fn label(self) -> &'static str {
        match self {
            SchemeKind::Equal => "Equal",
            SchemeKind::ArithmeticType1 => "Arithmetic: Type-1",
            SchemeKind::ArithmeticType2 => "Arithmetic: Type-2",
            SchemeKind::Geometric => "Geometric",
            SchemeKind::Harmonic => "Harmonic",
        }
    }

    /// Whether the scheme takes a tunable parameter (only type2 does).
    pub fn is_parameterized(self) -> bool {
        self == SchemeKind::ArithmeticType2
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SchemeKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown scheme '{s}' (expected equal, type1, type2, geometric or harmonic)"
                )
            })
    }
}

/// How strictly a type2 `alpha` is checked against the positivity bound
/// `2/(k(k-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Positivity {
    /// Every weight strictly positive: `|alpha| < 2/(k(k-1))`.
    #[default]
    StrictPositive,
    /// The last weight may reach zero: `|alpha| <= 2/(k(k-1))`.
    AllowZero,
    /// Any alpha; weights may go negative.
    Unchecked,
}

/// A scheme together with its parameters. `alpha` is present exactly when
/// the kind is [`SchemeKind::ArithmeticType2`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSpec<T> {
    kind: SchemeKind,
    alpha: Option<T>,
    positivity: Positivity,
}

impl<T: Scalar> SchemeSpec<T> {
    /// A parameter-free scheme. Returns `None` for type2, which needs alpha.
    pub fn fixed(kind: SchemeKind) -> Option<Self> {
        (!kind.is_parameterized()).then_some(SchemeSpec {
            kind,
            alpha: None,
            positivity: Positivity::default(),
        })
    }

    pub fn equal() -> Self {
        Self::fixed(SchemeKind::Equal).unwrap()
    }

    pub fn type1() -> Self {
        Self::fixed(SchemeKind::ArithmeticType1).unwrap()
    }

    pub fn geometric() -> Self {
        Self::fixed(SchemeKind::Geometric).unwrap()
    }

    pub fn harmonic() -> Self {
        Self::fixed(SchemeKind::Harmonic).unwrap()
    }

    pub fn type2(alpha: T, positivity: Positivity) -> Self {
        SchemeSpec {
            kind: SchemeKind::ArithmeticType2,
            alpha: Some(alpha),
            positivity,
        }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn alpha(&self) -> Option<&T> {
        self.alpha.as_ref()
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    /// Weight vector this scheme assigns to a paper with `k` authors.
    pub fn weights(&self, k: usize) -> Result<WeightVector<T>, WeightError> {
        match (self.kind, &self.alpha) {
            (SchemeKind::Equal, _) => equal_weights(k),
            (SchemeKind::ArithmeticType1, _) => type1_weights(k),
            (SchemeKind::ArithmeticType2, Some(alpha)) => type2_weights(k, alpha, self.positivity),
            (SchemeKind::ArithmeticType2, None) => unreachable!("type2 spec always carries alpha"),
            (SchemeKind::Geometric, _) => geometric_weights(k),
            (SchemeKind::Harmonic, _) => harmonic_weights(k),
        }
    }
}

fn check_k(k: usize) -> Result<(), WeightError> {
    if k == 0 {
        Err(WeightError::InvalidAuthorCount)
    } else {
        Ok(())
    }
}

/// Every author receives `1/k`.
pub fn equal_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_k(k)?;
    let w = T::one() / T::from_count(k);
    Ok(WeightVector::from_generated(vec![w; k]))
}

/// Linear weights with common difference `-alpha`, centred on `1/k`.
///
/// Negative `alpha` gives increasing weights. The feasibility of `alpha` is
/// checked according to `positivity`; at `k = 1` every alpha yields `{1}`.
pub fn type2_weights<T: Scalar>(
    k: usize,
    alpha: &T,
    positivity: Positivity,
) -> Result<WeightVector<T>, WeightError> {
    check_k(k)?;
    check_type2_alpha(k, alpha, positivity)?;
    let base = T::one() / T::from_count(k);
    let two = T::from_count(2);
    let weights = (1..=k)
        .map(|j| {
            let offset = T::from_count(k + 1) - T::from_count(2 * j);
            base.clone() + offset * alpha.clone() / two.clone()
        })
        .collect();
    Ok(WeightVector::from_generated(weights))
}

fn check_type2_alpha<T: Scalar>(
    k: usize,
    alpha: &T,
    positivity: Positivity,
) -> Result<(), WeightError> {
    let strict = match positivity {
        Positivity::Unchecked => return Ok(()),
        Positivity::StrictPositive => true,
        Positivity::AllowZero => false,
    };
    let Some(bound) = positivity_bound::<T>(k) else {
        return Ok(());
    };
    let magnitude = alpha.abs();
    let ok = if strict {
        magnitude < bound
    } else {
        magnitude <= bound
    };
    if ok {
        Ok(())
    } else {
        Err(WeightError::AlphaOutOfRange {
            k,
            alpha: alpha.to_string(),
            bound: bound.to_string(),
            strict,
        })
    }
}

/// Fixed linear positional weights `2(k-j+1) / (k(k+1))`.
pub fn type1_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_k(k)?;
    let denom = T::from_count(k) * T::from_count(k + 1);
    let weights = (1..=k)
        .map(|j| T::from_count(2 * (k - j + 1)) / denom.clone())
        .collect();
    Ok(WeightVector::from_generated(weights))
}

/// Each author receives twice the weight of the next: `2^(k-j) / (2^k - 1)`.
pub fn geometric_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    check_k(k)?;
    let two = T::from_count(2);
    // powers[i] = 2^i
    let mut powers = Vec::with_capacity(k + 1);
    let mut p = T::one();
    for _ in 0..=k {
        powers.push(p.clone());
        p = p * two.clone();
    }
    let denom = powers[k].clone() - T::one();
    let weights = (1..=k)
        .map(|j| powers[k - j].clone() / denom.clone())
        .collect();
    Ok(WeightVector::from_generated(weights))
}

/// Weights proportional to `1/j`, normalised by the harmonic number `H_k`.
pub fn harmonic_weights<T: Scalar>(k: usize) -> Result<WeightVector<T>, WeightError> {
    let h = harmonic_number::<T>(k)?;
    let weights = (1..=k)
        .map(|j| T::one() / (T::from_count(j) * h.clone()))
        .collect();
    Ok(WeightVector::from_generated(weights))
}
