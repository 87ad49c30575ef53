//! Energy per bit for each scheme, given a solved transmit power.
//!
//! Every report lists the branches of the scheme's energy expression as
//! `(weight, energy)` pairs; the energy per bit is their weighted sum.

use crate::error::{Error, Result};
use crate::outage::{OutageBreakdown, Scheme};

/// Static power draw and data rate of the (identical) PLC modems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModemPowerProfile {
    /// W
    pub p_static_tx: f64,
    /// W
    pub p_static_rx: f64,
    /// Hz
    pub bandwidth: f64,
    /// bits/s/Hz
    pub xi: f64,
}

impl Default for ModemPowerProfile {
    fn default() -> Self {
        ModemPowerProfile {
            p_static_tx: 0.5,
            p_static_rx: 0.5,
            bandwidth: 30e6,
            xi: 1.0,
        }
    }
}

impl ModemPowerProfile {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("profile.static_tx", self.p_static_tx),
            ("profile.static_rx", self.p_static_rx),
            ("profile.bandwidth", self.bandwidth),
            ("profile.xi", self.xi),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::param(name, v, "must be finite and > 0"));
            }
        }
        Ok(())
    }

    /// `R_b = xi B`, bits/s.
    pub fn bit_rate(&self) -> f64 {
        self.xi * self.bandwidth
    }

    /// Energy per bit of one hop's transmission,
    /// `(P + P_tx_static + P_rx_static) / R_b`.
    pub fn per_transmission(&self, power: f64) -> f64 {
        (power + self.p_static_tx + self.p_static_rx) / self.bit_rate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyTerm {
    /// Probability of the branch.
    pub weight: f64,
    /// J/bit spent on the branch.
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    /// J/bit
    pub energy_per_bit: f64,
    pub terms: Vec<EnergyTerm>,
    pub scheme: Scheme,
}

impl EnergyReport {
    fn from_terms(scheme: Scheme, terms: Vec<EnergyTerm>) -> Self {
        debug_assert!(terms.iter().all(|t| (0.0..=1.0).contains(&t.weight)));
        let energy_per_bit = terms.iter().map(|t| t.weight * t.energy).sum();
        EnergyReport {
            energy_per_bit,
            terms,
            scheme,
        }
    }

    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }
}

fn check_power(power: f64) -> Result<()> {
    // zero is allowed: it gives the static-power floor
    if power >= 0.0 && power.is_finite() {
        Ok(())
    } else {
        Err(Error::param("power", power, "must be finite and >= 0"))
    }
}

pub fn energy_single_hop(power: f64, profile: &ModemPowerProfile) -> Result<EnergyReport> {
    check_power(power)?;
    profile.validate()?;
    Ok(EnergyReport::from_terms(
        Scheme::SingleHop,
        vec![EnergyTerm {
            weight: 1.0,
            energy: profile.per_transmission(power),
        }],
    ))
}

/// DF chain of `hops` hops. A packet lost at hop `m` (1-based) has cost `m`
/// transmissions; once it clears hops `1..N-1` all `N` transmissions are
/// charged.
pub fn energy_multihop(
    power: f64,
    outage: &OutageBreakdown,
    hops: usize,
    profile: &ModemPowerProfile,
) -> Result<EnergyReport> {
    check_power(power)?;
    profile.validate()?;
    if hops < 2 {
        return Err(Error::Topology(format!(
            "multi-hop energy needs at least two hops, got {hops}"
        )));
    }
    if outage.per_link.len() != hops {
        return Err(Error::Topology(format!(
            "outage breakdown has {} links but {hops} hops were requested",
            outage.per_link.len()
        )));
    }
    let gamma = profile.per_transmission(power);
    let mut terms = Vec::with_capacity(hops);
    let mut reach = 1.0;
    for (m, &o) in outage.per_link[..hops - 1].iter().enumerate() {
        terms.push(EnergyTerm {
            weight: reach * o,
            energy: (m + 1) as f64 * gamma,
        });
        reach *= 1.0 - o;
    }
    terms.push(EnergyTerm {
        weight: reach,
        energy: hops as f64 * gamma,
    });
    Ok(EnergyReport::from_terms(Scheme::MultiHop(hops), terms))
}

/// Incremental DF. The relay listens to every source transmission and only
/// forwards when the direct link fails and the relay decoded.
pub fn energy_idf(
    power: f64,
    outage: &OutageBreakdown,
    profile: &ModemPowerProfile,
) -> Result<EnergyReport> {
    check_power(power)?;
    profile.validate()?;
    let o_sd = outage
        .direct_link
        .ok_or_else(|| Error::Topology("IDF energy needs the direct-link outage".into()))?;
    let o_sr = *outage
        .per_link
        .first()
        .ok_or_else(|| Error::Topology("IDF energy needs the source-relay outage".into()))?;
    let rb = profile.bit_rate();
    let (tx, rx) = (profile.p_static_tx, profile.p_static_rx);
    let one_transmission = (power + tx + 2.0 * rx) / rb;
    let two_transmissions = (2.0 * power + 2.0 * tx + 3.0 * rx) / rb;
    Ok(EnergyReport::from_terms(
        Scheme::Idf,
        vec![
            EnergyTerm {
                weight: 1.0 - o_sd,
                energy: one_transmission,
            },
            EnergyTerm {
                weight: o_sd * (1.0 - o_sr),
                energy: two_transmissions,
            },
            EnergyTerm {
                weight: o_sd * o_sr,
                energy: one_transmission,
            },
        ],
    ))
}

/// Dispatches to the energy expression of `scheme`.
pub fn scheme_energy(
    scheme: Scheme,
    power: f64,
    outage: &OutageBreakdown,
    profile: &ModemPowerProfile,
) -> Result<EnergyReport> {
    match scheme {
        Scheme::SingleHop => energy_single_hop(power, profile),
        Scheme::MultiHop(n) => energy_multihop(power, outage, n, profile),
        Scheme::Idf => energy_idf(power, outage, profile),
    }
}
