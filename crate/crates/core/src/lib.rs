//! Outage probability, optimal transmit power and energy per bit of
//! single-hop, multi-hop decode-and-forward and incremental decode-and-forward
//! relaying over power-line channels with log-normal fading and
//! Bernoulli-Gaussian impulsive noise.
//!
//! The closed-form results in [`outage`], [`power`] and [`energy`] use the
//! high-SNR outage threshold `beta^p 2^xi`; [`montecarlo`] estimates the same
//! outages with the exact mixture-capacity criterion.

pub mod config;
pub mod energy;
pub mod error;
pub mod model;
pub mod montecarlo;
pub mod numfmt;
pub mod outage;
pub mod power;
pub mod special;
pub mod sweep;

pub use energy::{
    energy_idf, energy_multihop, energy_single_hop, scheme_energy, EnergyReport, EnergyTerm,
    ModemPowerProfile,
};
pub use error::{Error, Result};
pub use model::{
    attenuation, lognormal_sq_cdf, noise_threshold, sample_channel_gain_sq, AttenuationParams,
    FadingParams, FrequencyUnit, LinkSpec, NoiseParams, SystemParams,
};
pub use montecarlo::{
    simulate_idf_outage, simulate_link_outage, simulate_multihop_outage, simulate_scheme,
    SimConfig, SimEstimate,
};
pub use outage::{
    dual_hop_chain, idf_outage, link_outage, multihop_outage, scheme_outage, serial_chain_outage,
    single_hop_outage, three_hop_chain, OutageBreakdown, Scheme, Topology,
};
pub use power::{
    solve_idf, solve_multihop, solve_scheme, solve_single_hop, PowerSolution, SolveMethod,
    SolverOptions,
};
