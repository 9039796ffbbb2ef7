//! Type-2 endpoint formulas, alpha inversion and feasibility bounds.

use crate::error::WeightError;
use crate::scalar::Scalar;

use super::{check_k, WeightVector};

/// First and last weights of the type2 vector, `1/k ± alpha(k-1)/2`.
pub fn type2_endpoints<T: Scalar>(k: usize, alpha: &T) -> Result<(T, T), WeightError> {
    check_k(k)?;
    let base = T::one() / T::from_count(k);
    let spread = alpha.clone() * T::from_count(k - 1) / T::from_count(2);
    Ok((base.clone() + spread.clone(), base - spread))
}

/// `w1 / wk` of the type2 vector, from the endpoint closed forms.
pub fn type2_ratio<T: Scalar>(k: usize, alpha: &T) -> Result<T, WeightError> {
    let (first, last) = type2_endpoints(k, alpha)?;
    if last.is_negligible() {
        return Err(WeightError::DivisionByZeroWeight);
    }
    Ok(first / last)
}

/// Whether `(w1, wk)` can be the endpoints of a normalised type2 vector,
/// i.e. `w1 + wk = 2/k`.
pub fn endpoints_consistent<T: Scalar>(k: usize, w1: &T, wk: &T) -> bool {
    k >= 1 && (w1.clone() + wk.clone()).approx_eq(&(T::from_count(2) / T::from_count(k)))
}

/// `(w1 - wk) / (k - 1)` with no consistency check on the endpoints.
pub fn endpoint_alpha<T: Scalar>(k: usize, w1: &T, wk: &T) -> Result<T, WeightError> {
    if k < 2 {
        return Err(WeightError::Underdetermined { k });
    }
    Ok((w1.clone() - wk.clone()) / T::from_count(k - 1))
}

/// Recovers alpha from the first and last weights.
///
/// Fails with [`WeightError::InconsistentEndpoints`] when the pair cannot
/// come from a type2 vector summing to one; use [`endpoint_alpha`] to get
/// the raw value regardless.
pub fn alpha_from_endpoints<T: Scalar>(k: usize, w1: &T, wk: &T) -> Result<T, WeightError> {
    let alpha = endpoint_alpha(k, w1, wk)?;
    check_endpoints(k, w1, wk)?;
    Ok(alpha)
}

fn check_endpoints<T: Scalar>(k: usize, w1: &T, wk: &T) -> Result<(), WeightError> {
    if endpoints_consistent(k, w1, wk) {
        Ok(())
    } else {
        Err(WeightError::InconsistentEndpoints {
            k,
            sum: (w1.clone() + wk.clone()).to_string(),
            expected: (T::from_count(2) / T::from_count(k)).to_string(),
        })
    }
}

/// Linear interpolation between the endpoints:
/// `w_j = ((k-j) w1 + (j-1) wk) / (k-1)`.
pub fn weights_from_endpoints<T: Scalar>(
    k: usize,
    w1: &T,
    wk: &T,
) -> Result<WeightVector<T>, WeightError> {
    if k < 2 {
        return Err(WeightError::Underdetermined { k });
    }
    check_endpoints(k, w1, wk)?;
    let span = T::from_count(k - 1);
    let weights = (1..=k)
        .map(|j| {
            (T::from_count(k - j) * w1.clone() + T::from_count(j - 1) * wk.clone()) / span.clone()
        })
        .collect();
    Ok(WeightVector::from_generated(weights))
}

/// Alpha at which type2 reproduces type1 exactly: `2/(k(k+1))`.
pub fn alpha_matching_type1<T: Scalar>(k: usize) -> Result<T, WeightError> {
    check_k(k)?;
    Ok(T::from_count(2) / (T::from_count(k) * T::from_count(k + 1)))
}

/// `2/(k(k-1))`, the largest |alpha| keeping the last weight non-negative.
/// `None` for `k < 2`, where alpha is unconstrained.
pub fn positivity_bound<T: Scalar>(k: usize) -> Option<T> {
    (k >= 2).then(|| T::from_count(2) / (T::from_count(k) * T::from_count(k - 1)))
}

/// Upper limit on alpha that keeps the last author's weight at or above a
/// floor `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBound<T> {
    pub k: usize,
    pub mu: T,
    pub max_alpha: T,
    /// Alpha must stay strictly below `max_alpha`. Set only for `mu = 0`,
    /// where reaching the bound would zero out the last author.
    pub strict: bool,
}

impl<T: Scalar> AlphaBound<T> {
    /// Whether `alpha` (or its mirror `-alpha`) respects the bound.
    pub fn admits(&self, alpha: &T) -> bool {
        let magnitude = alpha.abs();
        if self.strict {
            magnitude < self.max_alpha
        } else {
            magnitude <= self.max_alpha
        }
    }
}

/// `(2/(k-1)) (1/k - mu)`: the largest alpha with `w_k >= mu`.
pub fn max_alpha<T: Scalar>(k: usize, mu: &T) -> Result<AlphaBound<T>, WeightError> {
    if k < 2 {
        return Err(WeightError::NoConstraint { k });
    }
    let share = T::one() / T::from_count(k);
    if mu.is_negative() || *mu > share {
        return Err(WeightError::InfeasibleFloor {
            k,
            mu: mu.to_string(),
            max: share.to_string(),
        });
    }
    let max_alpha = T::from_count(2) / T::from_count(k - 1) * (share - mu.clone());
    Ok(AlphaBound {
        k,
        mu: mu.clone(),
        max_alpha,
        strict: mu.is_zero(),
    })
}
