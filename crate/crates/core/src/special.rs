//! Error function family.
//!
//! `erf` and `erfc` are the musl implementations from `libm` (about 1 ulp).
//! `erf_inv` takes the `statrs` approximation and polishes it with Newton
//! steps against `libm::erf`, since the raw approximation is only good to
//! roughly 1e-11.

use std::f64::consts::{PI, SQRT_2};

pub use libm::{erf, erfc};

/// Inverse error function on `(-1, 1)`; returns `±inf` at `±1`.
pub fn erf_inv(y: f64) -> f64 {
    let mut x = statrs::function::erf::erf_inv(y);
    if !x.is_finite() {
        return x;
    }
    for _ in 0..2 {
        let slope = 2.0 / PI.sqrt() * (-x * x).exp();
        if slope == 0.0 {
            break;
        }
        x -= (erf(x) - y) / slope;
    }
    x
}

/// Standard normal CDF, evaluated through `erfc` so both tails keep full
/// relative precision.
pub fn normal_cdf(t: f64) -> f64 {
    0.5 * erfc(-t / SQRT_2)
}

/// Upper tail `Q(t) = 1 - Φ(t)`.
pub fn q_function(t: f64) -> f64 {
    0.5 * erfc(t / SQRT_2)
}
