//! Channel and noise model: exponential distance attenuation, log-normal
//! fading of the channel power gain, and the two-term (background plus
//! Bernoulli-Gaussian impulsive) noise.
//!
//! This is the only module that converts between dB and linear units. Every
//! other module consumes the linear quantities derived here.

use std::f64::consts::LN_10;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::special::{erf, normal_cdf};

/// Scaling constant between natural log and dB, `10 / ln 10`.
pub const ZETA: f64 = 10.0 / LN_10;

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Unit in which the operating frequency is substituted into `a1 * f^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrequencyUnit {
    #[default]
    MHz,
    Hz,
}

impl fmt::Display for FrequencyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrequencyUnit::MHz => f.write_str("MHz"),
            FrequencyUnit::Hz => f.write_str("Hz"),
        }
    }
}

impl FromStr for FrequencyUnit {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mhz" => Ok(FrequencyUnit::MHz),
            "hz" => Ok(FrequencyUnit::Hz),
            other => Err(format!(
                "unknown frequency unit `{other}` (expected MHz or Hz)"
            )),
        }
    }
}

/// Constants of `A(f, d) = exp(-(a0 + a1 f^k) d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttenuationParams {
    /// 1/m
    pub a0: f64,
    /// 1/m per unit^k
    pub a1: f64,
    pub k: f64,
    pub frequency_mhz: f64,
    /// `MHz` plugs 30 into `f^k` for a 30 MHz carrier, `Hz` plugs 3e7.
    pub formula_unit: FrequencyUnit,
}

impl Default for AttenuationParams {
    fn default() -> Self {
        AttenuationParams {
            a0: 9.4e-3,
            a1: 4.2e-7,
            k: 0.7,
            frequency_mhz: 30.0,
            formula_unit: FrequencyUnit::MHz,
        }
    }
}

impl AttenuationParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.a0 >= 0.0 && self.a0.is_finite()) {
            return Err(Error::param(
                "attenuation.a0",
                self.a0,
                "must be finite and >= 0",
            ));
        }
        if !(self.a1 >= 0.0 && self.a1.is_finite()) {
            return Err(Error::param(
                "attenuation.a1",
                self.a1,
                "must be finite and >= 0",
            ));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(Error::param(
                "attenuation.k",
                self.k,
                "must be finite and > 0",
            ));
        }
        if !(self.frequency_mhz > 0.0 && self.frequency_mhz.is_finite()) {
            return Err(Error::param(
                "attenuation.frequency_mhz",
                self.frequency_mhz,
                "must be finite and > 0",
            ));
        }
        let alpha = self.alpha();
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::param(
                "attenuation.alpha",
                alpha,
                "must be finite and > 0",
            ));
        }
        Ok(())
    }

    /// Attenuation factor `a0 + a1 f^k` in 1/m.
    pub fn alpha(&self) -> f64 {
        let f = match self.formula_unit {
            FrequencyUnit::MHz => self.frequency_mhz,
            FrequencyUnit::Hz => self.frequency_mhz * 1e6,
        };
        self.a0 + self.a1 * f.powf(self.k)
    }
}

/// Log-normal fading of one link: mean and standard deviation (dB) of
/// `10 log10(h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingParams {
    pub mu_db: f64,
    pub sigma_db: f64,
}

impl Default for FadingParams {
    /// `mu = 3 dB`, `sigma^2 = 2 dB^2`.
    fn default() -> Self {
        FadingParams {
            mu_db: 3.0,
            sigma_db: 2f64.sqrt(),
        }
    }
}

impl FadingParams {
    pub fn new(mu_db: f64, sigma_db: f64) -> Result<Self> {
        let f = FadingParams { mu_db, sigma_db };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu_db.is_finite() {
            return Err(Error::param("fading.mu_db", self.mu_db, "must be finite"));
        }
        if !(self.sigma_db > 0.0 && self.sigma_db.is_finite()) {
            return Err(Error::param(
                "fading.sigma_db",
                self.sigma_db,
                "must be finite and > 0",
            ));
        }
        Ok(())
    }

    /// Standardized normal argument of the `h^2` CDF at `ln(x)`:
    /// `(zeta ln x - 2 mu) / (2 sigma)`.
    pub fn standardized(&self, ln_x: f64) -> f64 {
        (ZETA * ln_x - 2.0 * self.mu_db) / (2.0 * self.sigma_db)
    }
}

/// Noise statistics shared by every modem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParams {
    /// Impulse occurrence probability.
    pub p: f64,
    pub sbnr_db: f64,
    /// `+inf` disables the impulsive component.
    pub sinr_db: f64,
}

impl Default for NoiseParams {
    fn default() -> Self {
        NoiseParams {
            p: 0.01,
            sbnr_db: 25.0,
            sinr_db: -15.0,
        }
    }
}

impl NoiseParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::param("noise.p", self.p, "must lie in [0, 1]"));
        }
        let bg = self.background_variance();
        if !(bg > 0.0 && bg.is_finite()) {
            return Err(Error::param(
                "noise.sbnr_db",
                self.sbnr_db,
                "background variance must be finite and > 0",
            ));
        }
        let imp = self.impulsive_variance();
        if self.sinr_db.is_nan() || !(imp >= 0.0 && imp.is_finite()) {
            return Err(Error::param(
                "noise.sinr_db",
                self.sinr_db,
                "impulsive variance must be finite and >= 0",
            ));
        }
        Ok(())
    }

    /// `sigma_w^2 = 10^(-SBNR/10)`
    pub fn background_variance(&self) -> f64 {
        db_to_linear(-self.sbnr_db)
    }

    /// `sigma_i^2 = 10^(-SINR/10)`
    pub fn impulsive_variance(&self) -> f64 {
        db_to_linear(-self.sinr_db)
    }

    /// Impulsive penalty `beta = 1 + sigma_i^2 / sigma_w^2`.
    pub fn beta(&self) -> f64 {
        1.0 + self.impulsive_variance() / self.background_variance()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkSpec {
    /// meters
    pub distance: f64,
    pub fading: FadingParams,
}

impl LinkSpec {
    pub fn new(distance: f64, fading: FadingParams) -> Result<Self> {
        let l = LinkSpec { distance, fading };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.distance > 0.0 && self.distance.is_finite()) {
            return Err(Error::param(
                "link.distance",
                self.distance,
                "must be finite and > 0",
            ));
        }
        self.fading.validate()
    }
}

/// Parameters shared by every link computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub attenuation: AttenuationParams,
    pub noise: NoiseParams,
    /// Target spectral efficiency, bits/s/Hz.
    pub xi: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        SystemParams {
            attenuation: AttenuationParams::default(),
            noise: NoiseParams::default(),
            xi: 1.0,
        }
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        self.attenuation.validate()?;
        self.noise.validate()?;
        if !(self.xi > 0.0 && self.xi.is_finite()) {
            return Err(Error::param("xi", self.xi, "must be finite and > 0"));
        }
        Ok(())
    }
}

/// Power gain `A(f, d)` of a line section of length `d` meters.
pub fn attenuation(params: &AttenuationParams, d: f64) -> Result<f64> {
    if d.is_nan() || d < 0.0 {
        return Err(Error::param("distance", d, "must be >= 0"));
    }
    Ok((-params.alpha() * d).exp())
}

/// CDF of the log-normal power gain `h^2` at `x`.
///
/// Evaluated as `1 - Q((zeta ln x - 2 mu) / (2 sigma))`; see
/// [`lognormal_sq_cdf_erf`] for the algebraically identical erf form.
pub fn lognormal_sq_cdf(x: f64, fading: &FadingParams) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::param("x", x, "must be > 0"));
    }
    Ok(lognormal_sq_cdf_ln(x.ln(), fading))
}

/// `1/2 + 1/2 erf((zeta ln x - 2 mu) / (sqrt(8) sigma))`.
pub fn lognormal_sq_cdf_erf(x: f64, fading: &FadingParams) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::param("x", x, "must be > 0"));
    }
    let arg = (ZETA * x.ln() - 2.0 * fading.mu_db) / (8f64.sqrt() * fading.sigma_db);
    Ok(0.5 + 0.5 * erf(arg))
}

/// CDF of `h^2` taking `ln x`, so callers can stay in the log domain.
pub fn lognormal_sq_cdf_ln(ln_x: f64, fading: &FadingParams) -> f64 {
    normal_cdf(fading.standardized(ln_x))
}

/// Draws one power gain `h^2`: `X ~ N(mu, sigma^2)` in dB, then `10^(X/5)`.
pub fn sample_channel_gain_sq<R: Rng + ?Sized>(fading: &FadingParams, rng: &mut R) -> f64 {
    let z: f64 = rng.sample(StandardNormal);
    let x_db = fading.mu_db + fading.sigma_db * z;
    10f64.powf(x_db / 5.0)
}

/// High-SNR outage threshold on the SNR, `beta^p 2^xi`.
pub fn noise_threshold(noise: &NoiseParams, xi: f64) -> f64 {
    noise.beta().powf(noise.p) * xi.exp2()
}
