//! Structural properties of weight vectors and harmonic-number helpers.

use num_traits::ToPrimitive;

use crate::error::WeightError;
use crate::scalar::Scalar;
use crate::Rational;

use super::{check_k, WeightVector};

/// Euler–Mascheroni constant, to double precision.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Linearity {
    Linear,
    Nonlinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monotonicity {
    StrictlyDecreasing,
    Constant,
    StrictlyIncreasing,
    Mixed,
}

/// Per-position gain over the equal share: `w_j - 1/k`. Sums to zero.
pub fn delta_vs_equal<T: Scalar>(v: &WeightVector<T>) -> Vec<T> {
    let share = T::one() / T::from_count(v.k());
    v.weights()
        .iter()
        .map(|w| w.clone() - share.clone())
        .collect()
}

/// Closed form of the type2 gain at position `j`: `(k-2j+1)/2 * alpha`.
pub fn type2_delta<T: Scalar>(k: usize, j: usize, alpha: &T) -> T {
    let offset = T::from_count(k + 1) - T::from_count(2 * j);
    offset * alpha.clone() / T::from_count(2)
}

/// Closed form of the harmonic gain at position `j` given a value for the
/// harmonic number: `(k - j H) / (j k H)`.
///
/// Pass the exact `H_k` to get the exact gain, or [`harmonic_approx`] for
/// the asymptotic estimate.
pub fn harmonic_delta<T: Scalar>(k: usize, j: usize, harmonic: &T) -> T {
    let kk = T::from_count(k);
    let jj = T::from_count(j);
    (kk.clone() - jj.clone() * harmonic.clone()) / (jj * kk * harmonic.clone())
}

/// `w1 / wk`.
pub fn first_last_ratio<T: Scalar>(v: &WeightVector<T>) -> Result<T, WeightError> {
    if v.last().is_negligible() {
        return Err(WeightError::DivisionByZeroWeight);
    }
    Ok(v.first().clone() / v.last().clone())
}

/// Linear iff every second difference `w_{j+1} - 2 w_j + w_{j-1}` vanishes.
pub fn classify_linearity<T: Scalar>(v: &WeightVector<T>) -> Linearity {
    let two = T::from_count(2);
    let linear = v
        .weights()
        .windows(3)
        .all(|w| (w[2].clone() - two.clone() * w[1].clone() + w[0].clone()).is_negligible());
    if linear {
        Linearity::Linear
    } else {
        Linearity::Nonlinear
    }
}

pub fn monotonicity<T: Scalar>(v: &WeightVector<T>) -> Monotonicity {
    let steps: Vec<T> = v
        .weights()
        .windows(2)
        .map(|w| w[1].clone() - w[0].clone())
        .collect();
    if steps.iter().all(|d| d.is_negligible()) {
        Monotonicity::Constant
    } else if steps.iter().all(|d| d.is_negative() && !d.is_negligible()) {
        Monotonicity::StrictlyDecreasing
    } else if steps.iter().all(|d| d.is_positive() && !d.is_negligible()) {
        Monotonicity::StrictlyIncreasing
    } else {
        Monotonicity::Mixed
    }
}

/// `H_k = 1 + 1/2 + ... + 1/k`.
pub fn harmonic_number<T: Scalar>(k: usize) -> Result<T, WeightError> {
    check_k(k)?;
    Ok((1..=k).fold(T::zero(), |acc, i| acc + T::one() / T::from_count(i)))
}

/// Exact harmonic numbers `(k, H_k)` for `k = 1, 2, ...`, each obtained
/// from the previous one with a single addition.
#[derive(Debug, Clone, Default)]
pub struct HarmonicNumbers {
    k: usize,
    sum: Rational,
}

impl HarmonicNumbers {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for HarmonicNumbers {
    type Item = (usize, Rational);

    fn next(&mut self) -> Option<Self::Item> {
        self.k += 1;
        self.sum += Rational::new(1.into(), self.k.into());
        Some((self.k, self.sum.clone()))
    }
}

/// `ln k + gamma + 1/(2k)`.
pub fn harmonic_approx(k: usize) -> f64 {
    let k = k as f64;
    k.ln() + EULER_MASCHERONI + 1.0 / (2.0 * k)
}

/// Exact harmonic number alongside its asymptotic estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSum {
    pub k: usize,
    pub exact: Rational,
    pub approx: f64,
}

impl HarmonicSum {
    pub fn exact_f64(&self) -> f64 {
        self.exact.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn harmonic_sum(k: usize) -> Result<HarmonicSum, WeightError> {
    Ok(HarmonicSum {
        k,
        exact: harmonic_number(k)?,
        approx: harmonic_approx(k),
    })
}
