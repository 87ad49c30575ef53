//! Monte Carlo outage estimator.
//!
//! Only the fading is sampled. The impulsive noise enters through the exact
//! noise-state-averaged capacity `(1-p) log2(1+g) + p log2(1+g/beta)`, which
//! is compared against `xi` per hop; no high-SNR approximation is made, so
//! the estimates are an independent check on [`crate::outage`].
//!
//! Each trial owns a ChaCha8 stream selected by its index, so results do not
//! depend on how trials are spread across workers. Within a trial the hops are
//! drawn in topology order (relay hops before the IDF direct link), which means
//! schemes simulated with the same seed share their per-hop fading draws.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{attenuation, sample_channel_gain_sq, LinkSpec, NoiseParams, SystemParams};
use crate::outage::{Scheme, Topology};

/// Two-sided 99% standard normal quantile.
pub const Z_99: f64 = 2.575_829_303_548_900_4;

/// Analytic values below this are compared against the confidence interval only.
pub const RELATIVE_CHECK_FLOOR: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            trials: 1_000_000,
            seed: 0x5eed,
            workers: 1,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::param("sim.trials", 0.0, "must be >= 1"));
        }
        if self.workers == 0 {
            return Err(Error::param("sim.workers", 0.0, "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimEstimate {
    pub p_hat: f64,
    /// Half-width of the 99% binomial interval (Agresti-Coull centre, so it
    /// stays positive when no outage was observed).
    pub ci99_half_width: f64,
    pub trials: u64,
    pub outages: u64,
}

impl SimEstimate {
    pub fn from_counts(outages: u64, trials: u64) -> Self {
        let n = trials as f64;
        let z2 = Z_99 * Z_99;
        let n_adj = n + z2;
        let p_adj = (outages as f64 + 0.5 * z2) / n_adj;
        SimEstimate {
            p_hat: outages as f64 / n,
            ci99_half_width: Z_99 * (p_adj * (1.0 - p_adj) / n_adj).sqrt(),
            trials,
            outages,
        }
    }

    /// Allowed `|p_hat - analytic|`: three CI half-widths, or 10% of the
    /// analytic value when that is larger and the value is not tiny.
    pub fn agreement_tolerance(&self, analytic: f64) -> f64 {
        let ci = 3.0 * self.ci99_half_width;
        if analytic >= RELATIVE_CHECK_FLOOR {
            ci.max(0.1 * analytic)
        } else {
            ci
        }
    }

    pub fn agrees_with(&self, analytic: f64) -> bool {
        (self.p_hat - analytic).abs() <= self.agreement_tolerance(analytic)
    }
}

/// Average capacity over the two noise states, bits/s/Hz.
pub fn mixture_capacity(snr: f64, noise: &NoiseParams) -> f64 {
    let p = noise.p;
    (1.0 - p) * snr.ln_1p() / std::f64::consts::LN_2
        + p * (snr / noise.beta()).ln_1p() / std::f64::consts::LN_2
}

/// Per-link constants reused by every trial.
struct LinkSampler {
    link: LinkSpec,
    /// `P A(f,d) / sigma_w^2`
    snr_scale: f64,
}

impl LinkSampler {
    fn new(power: f64, link: &LinkSpec, sys: &SystemParams) -> Result<Self> {
        link.validate()?;
        let a = attenuation(&sys.attenuation, link.distance)?;
        Ok(LinkSampler {
            link: *link,
            snr_scale: power * a / sys.noise.background_variance(),
        })
    }

    fn fails(&self, sys: &SystemParams, rng: &mut ChaCha8Rng) -> bool {
        let h2 = sample_channel_gain_sq(&self.link.fading, rng);
        mixture_capacity(self.snr_scale * h2, &sys.noise) < sys.xi
    }
}

fn check_inputs(power: f64, sys: &SystemParams, cfg: &SimConfig) -> Result<()> {
    cfg.validate()?;
    sys.validate()?;
    if !(power > 0.0 && power.is_finite()) {
        return Err(Error::param("power", power, "must be finite and > 0"));
    }
    Ok(())
}

fn trial_rng(seed: &<ChaCha8Rng as SeedableRng>::Seed, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(*seed);
    rng.set_stream(trial);
    rng
}

/// Counts trials for which `outage` returns true.
fn count_outages<F>(cfg: &SimConfig, outage: F) -> Result<u64>
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    // expand the user seed once; the trial index picks the stream
    let seed = ChaCha8Rng::seed_from_u64(cfg.seed).get_seed();
    let run = |trial: u64| outage(&mut trial_rng(&seed, trial)) as u64;
    if cfg.workers == 1 {
        return Ok((0..cfg.trials).map(run).sum());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::config("sim.workers", e.to_string()))?;
    Ok(pool.install(|| (0..cfg.trials).into_par_iter().map(run).sum()))
}

pub fn simulate_link_outage(
    power: f64,
    link: &LinkSpec,
    sys: &SystemParams,
    cfg: &SimConfig,
) -> Result<SimEstimate> {
    check_inputs(power, sys, cfg)?;
    let sampler = LinkSampler::new(power, link, sys)?;
    let outages = count_outages(cfg, |rng| sampler.fails(sys, rng))?;
    Ok(SimEstimate::from_counts(outages, cfg.trials))
}

/// DF chain: the trial is an outage when any hop's capacity falls short.
/// Every hop is drawn in every trial.
pub fn simulate_multihop_outage(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
    cfg: &SimConfig,
) -> Result<SimEstimate> {
    check_inputs(power, sys, cfg)?;
    let hops = topology
        .links()
        .iter()
        .map(|l| LinkSampler::new(power, l, sys))
        .collect::<Result<Vec<_>>>()?;
    let outages = count_outages(cfg, |rng| {
        hops.iter()
            .fold(false, |failed, hop| hop.fails(sys, rng) | failed)
    })?;
    Ok(SimEstimate::from_counts(outages, cfg.trials))
}

/// IDF: outage when the direct link fails and the relay path fails too.
pub fn simulate_idf_outage(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
    cfg: &SimConfig,
) -> Result<SimEstimate> {
    check_inputs(power, sys, cfg)?;
    let direct = topology
        .direct()
        .ok_or_else(|| Error::Topology("IDF requires a direct link".into()))?;
    if topology.hops() != 2 {
        return Err(Error::Topology(format!(
            "IDF requires exactly two relay hops, got {}",
            topology.hops()
        )));
    }
    let sr = LinkSampler::new(power, &topology.links()[0], sys)?;
    let rd = LinkSampler::new(power, &topology.links()[1], sys)?;
    let sd = LinkSampler::new(power, direct, sys)?;
    let outages = count_outages(cfg, |rng| {
        let relay_failed = sr.fails(sys, rng) | rd.fails(sys, rng);
        let direct_failed = sd.fails(sys, rng);
        direct_failed && relay_failed
    })?;
    Ok(SimEstimate::from_counts(outages, cfg.trials))
}

/// Dispatches to the simulator of `scheme`.
pub fn simulate_scheme(
    scheme: Scheme,
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
    cfg: &SimConfig,
) -> Result<SimEstimate> {
    match scheme {
        Scheme::SingleHop | Scheme::MultiHop(_) => {
            simulate_multihop_outage(power, topology, sys, cfg)
        }
        Scheme::Idf => simulate_idf_outage(power, topology, sys, cfg),
    }
}
