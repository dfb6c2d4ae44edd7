//! Grünwald-type weight sequences and the Toeplitz symbols used to certify
//! that the time-stepping quadratic forms are positive semi-definite.
//!
//! All sequences come from multiplicative recurrences on the binomial
//! coefficients, so they stay finite for any length.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A fractional order in the open interval `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FracOrder(f64);

impl FracOrder {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::OrderOutOfRange(value))
        }
    }

    /// Admits the closed endpoint `1.0`, where the weight expansions reduce to
    /// `(1 - z)^{±1}` and the wave symbol vanishes identically.
    #[cfg(test)]
    pub(crate) fn probe(value: f64) -> Self {
        assert!(value > 0.0 && value <= 1.0);
        Self(value)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for FracOrder {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Integer shifts `(p, q)` of a weighted and shifted Grünwald operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftPair {
    p: i32,
    q: i32,
}

impl ShiftPair {
    pub fn new(p: i32, q: i32) -> Result<Self> {
        if p == q {
            return Err(Error::EqualShifts(p));
        }
        Ok(Self { p, q })
    }

    pub fn p(self) -> i32 {
        self.p
    }

    pub fn q(self) -> i32 {
        self.q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `g_k = (-1)^k binom(α, k)`, coefficients of `(1 - z)^α`.
    GrunwaldDerivative,
    /// `ω_k = (-1)^k binom(-α, k)`, coefficients of `(1 - z)^{-α}`.
    GrunwaldIntegral,
    /// Shift-combined derivative weights driving the sub-diffusion scheme.
    LambdaSubdiffusion,
    /// Shift-combined integral weights driving the diffusion-wave scheme.
    LambdaWave,
}

/// The prefix `values[0..=n]` of one of the weight sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSequence {
    order: FracOrder,
    kind: WeightKind,
    values: Vec<f64>,
}

impl WeightSequence {
    pub fn order(&self) -> FracOrder {
        self.order
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: a sequence holds at least its zeroth entry.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

impl std::ops::Index<usize> for WeightSequence {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.values[k]
    }
}

fn binomial_series(n: usize, step: impl Fn(f64) -> f64) -> Vec<f64> {
    let mut values = Vec::with_capacity(n + 1);
    values.push(1.0);
    for k in 1..=n {
        let prev = values[k - 1];
        values.push(step(k as f64) * prev);
    }
    values
}

/// `g_0 = 1`, `g_k = (1 - (α + 1)/k) g_{k-1}`.
pub fn grunwald_derivative_weights(order: FracOrder, n: usize) -> WeightSequence {
    let a = order.value();
    WeightSequence {
        order,
        kind: WeightKind::GrunwaldDerivative,
        values: binomial_series(n, |k| 1.0 - (a + 1.0) / k),
    }
}

/// `ω_0 = 1`, `ω_k = (1 + (α - 1)/k) ω_{k-1}`.
pub fn grunwald_integral_weights(order: FracOrder, n: usize) -> WeightSequence {
    let a = order.value();
    WeightSequence {
        order,
        kind: WeightKind::GrunwaldIntegral,
        values: binomial_series(n, |k| 1.0 + (a - 1.0) / k),
    }
}

/// Derivative weights for shifts `(0, -1)`:
/// `λ_0 = (2+α)/2`, `λ_k = (2+α)/2 g_k - α/2 g_{k-1}`.
pub fn lambda_subdiffusion(order: FracOrder, n: usize) -> WeightSequence {
    let a = order.value();
    let g = grunwald_derivative_weights(order, n).values;
    let (c0, c1) = (1.0 + 0.5 * a, 0.5 * a);
    let values = (0..=n)
        .map(|k| {
            if k == 0 {
                c0 * g[0]
            } else {
                c0 * g[k] - c1 * g[k - 1]
            }
        })
        .collect();
    WeightSequence {
        order,
        kind: WeightKind::LambdaSubdiffusion,
        values,
    }
}

/// Integral weights for shifts `(0, -1)`:
/// `λ_0 = 1 - α/2`, `λ_k = (1 - α/2) ω_k + α/2 ω_{k-1}`.
pub fn lambda_wave(order: FracOrder, n: usize) -> WeightSequence {
    let a = order.value();
    let w = grunwald_integral_weights(order, n).values;
    let (c0, c1) = (1.0 - 0.5 * a, 0.5 * a);
    let values = (0..=n)
        .map(|k| {
            if k == 0 {
                c0 * w[0]
            } else {
                c0 * w[k] + c1 * w[k - 1]
            }
        })
        .collect();
    WeightSequence {
        order,
        kind: WeightKind::LambdaWave,
        values,
    }
}

/// Coefficients `(c_p, c_q)` of `c_p A_p + c_q A_q` cancelling the first-order
/// error of the shifted derivative approximations.
pub fn weighted_shift_coefficients_derivative(order: FracOrder, shifts: ShiftPair) -> (f64, f64) {
    let a = order.value();
    let (p, q) = (f64::from(shifts.p), f64::from(shifts.q));
    let denom = 2.0 * (p - q);
    ((a - 2.0 * q) / denom, (2.0 * p - a) / denom)
}

/// Integral counterpart of [`weighted_shift_coefficients_derivative`].
pub fn weighted_shift_coefficients_integral(order: FracOrder, shifts: ShiftPair) -> (f64, f64) {
    let a = order.value();
    let (p, q) = (f64::from(shifts.p), f64::from(shifts.q));
    (
        (2.0 * q + a) / (2.0 * (q - p)),
        (2.0 * p + a) / (2.0 * (p - q)),
    )
}

/// Symbol of the symmetric Toeplitz matrix built from [`lambda_subdiffusion`]
/// (principal value on `[0, π]`).
pub fn gen_fn_subdiffusion(order: FracOrder, x: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[0, pi]",
        });
    }
    let a = order.value();
    let phase = 0.5 * a * (PI - x);
    let bracket = (1.0 + 0.5 * a) * phase.cos() - 0.5 * a * (phase - x).cos();
    Ok((2.0 * (0.5 * x).sin()).powf(a) * bracket)
}

/// Symbol of the symmetric Toeplitz matrix built from [`lambda_wave`].
/// Diverges at `x = 0`, so the domain is `(0, π]`.
pub fn gen_fn_wave(order: FracOrder, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= PI) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "(0, pi]",
        });
    }
    let a = order.value();
    let phase = 0.5 * a * (PI - x);
    let bracket = (1.0 - 0.5 * a) * phase.cos() + 0.5 * a * (x + phase).cos();
    Ok((2.0 * (0.5 * x).sin()).powf(-a) * bracket)
}
