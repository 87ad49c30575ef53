//! Closed-form (high-SNR) outage probabilities.
//!
//! A link is in outage when its SNR `P A(f,d) h^2 / sigma_w^2` falls below
//! `beta^p 2^xi`. Multi-hop DF chains fail at the first failing hop; the IDF
//! scheme fails when the direct link fails and the two-hop relay path fails
//! as well. All outage operations use one common transmit power for every
//! transmitting modem.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{lognormal_sq_cdf_ln, noise_threshold, FadingParams, LinkSpec, SystemParams};
use crate::special::erf;

/// Relative tolerance on `|direct - sum(hops)|` and on equal IDF hop lengths.
const DISTANCE_RTOL: f64 = 1e-9;

/// Transmission scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    SingleHop,
    /// Decode-and-forward chain with the given number of hops (>= 2).
    MultiHop(usize),
    /// Incremental DF with one midpoint relay.
    Idf,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::SingleHop => f.write_str("single-hop"),
            Scheme::MultiHop(n) => write!(f, "multi-hop-{n}"),
            Scheme::Idf => f.write_str("idf"),
        }
    }
}

impl FromStr for Scheme {
    type Err = String;

    /// Accepts `sh`, `single-hop`, `idf`, `mhN` and `multi-hop-N`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "sh" | "single-hop" | "singlehop" => return Ok(Scheme::SingleHop),
            "idf" => return Ok(Scheme::Idf),
            _ => {}
        }
        let hops = s
            .strip_prefix("multi-hop-")
            .or_else(|| s.strip_prefix("mh"))
            .ok_or_else(|| format!("unknown scheme `{s}`"))?;
        let n: usize = hops
            .parse()
            .map_err(|_| format!("bad hop count in scheme `{s}`"))?;
        match n {
            0 => Err(format!("scheme `{s}` needs at least one hop")),
            1 => Ok(Scheme::SingleHop),
            n => Ok(Scheme::MultiHop(n)),
        }
    }
}

/// Ordered hops from source to destination, plus the direct path used by IDF.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    links: Vec<LinkSpec>,
    direct: Option<LinkSpec>,
}

impl Topology {
    pub fn new(links: Vec<LinkSpec>, direct: Option<LinkSpec>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::Topology("at least one hop is required".into()));
        }
        for l in &links {
            l.validate()?;
        }
        if let Some(d) = &direct {
            d.validate()?;
            let total: f64 = links.iter().map(|l| l.distance).sum();
            if (d.distance - total).abs() > DISTANCE_RTOL * d.distance {
                return Err(Error::Topology(format!(
                    "direct distance {} differs from the sum of hop distances {}",
                    d.distance, total
                )));
            }
        }
        Ok(Topology { links, direct })
    }

    pub fn single_hop(link: LinkSpec) -> Result<Self> {
        Topology::new(vec![link], None)
    }

    /// `hops` equal sections of `total / hops` meters, all with `fading`.
    pub fn equal_spacing(total: f64, hops: usize, fading: FadingParams) -> Result<Self> {
        if hops == 0 {
            return Err(Error::Topology("at least one hop is required".into()));
        }
        let hop = LinkSpec::new(total / hops as f64, fading)?;
        Topology::new(vec![hop; hops], None)
    }

    /// Direct link of `total` meters and a relay at the midpoint.
    pub fn idf_midpoint(total: f64, fading: FadingParams) -> Result<Self> {
        let half = LinkSpec::new(total / 2.0, fading)?;
        let direct = LinkSpec::new(total, fading)?;
        Topology::new(vec![half, half], Some(direct))
    }

    /// Topology a scheme uses over `total` meters with identical fading on
    /// every link.
    pub fn for_scheme(scheme: Scheme, total: f64, fading: FadingParams) -> Result<Self> {
        match scheme {
            Scheme::SingleHop => Topology::equal_spacing(total, 1, fading),
            Scheme::MultiHop(n) => Topology::equal_spacing(total, n, fading),
            Scheme::Idf => Topology::idf_midpoint(total, fading),
        }
    }

    pub fn links(&self) -> &[LinkSpec] {
        &self.links
    }

    pub fn direct(&self) -> Option<&LinkSpec> {
        self.direct.as_ref()
    }

    pub fn hops(&self) -> usize {
        self.links.len()
    }

    pub fn total_distance(&self) -> f64 {
        self.links.iter().map(|l| l.distance).sum()
    }

    fn check_idf(&self) -> Result<&LinkSpec> {
        let direct = self
            .direct
            .as_ref()
            .ok_or_else(|| Error::Topology("IDF requires a direct link".into()))?;
        if self.links.len() != 2 {
            return Err(Error::Topology(format!(
                "IDF requires exactly two relay hops, got {}",
                self.links.len()
            )));
        }
        let (a, b) = (self.links[0].distance, self.links[1].distance);
        if (a - b).abs() > DISTANCE_RTOL * a.max(b) {
            return Err(Error::Topology(format!(
                "IDF relay must sit at the midpoint (hops of {a} m and {b} m)"
            )));
        }
        Ok(direct)
    }
}

/// End-to-end outage together with the per-link terms it was composed from.
#[derive(Debug, Clone, PartialEq)]
pub struct OutageBreakdown {
    pub end_to_end: f64,
    /// Aligned with [`Topology::links`].
    pub per_link: Vec<f64>,
    /// Direct-link outage (IDF only).
    pub direct_link: Option<f64>,
}

fn check_power(power: f64) -> Result<()> {
    if power > 0.0 && power.is_finite() {
        Ok(())
    } else {
        Err(Error::param("power", power, "must be finite and > 0"))
    }
}

fn clamp_probability(p: f64) -> f64 {
    let c = p.clamp(0.0, 1.0);
    debug_assert!(
        (c - p).abs() <= 1e-12,
        "probability {p} clamped by more than 1e-12"
    );
    c
}

/// `ln(beta^p 2^xi / (P A / sigma_w^2))`: the log of the `h^2` value below
/// which the link is in outage. Kept in the log domain so long links do not
/// underflow.
fn ln_outage_gain(power: f64, link: &LinkSpec, sys: &SystemParams) -> f64 {
    let ln_threshold = noise_threshold(&sys.noise, sys.xi).ln();
    let ln_snr_scale =
        power.ln() - sys.attenuation.alpha() * link.distance - sys.noise.background_variance().ln();
    ln_threshold - ln_snr_scale
}

/// Standardized argument of a link's outage CDF at transmit power `power`:
/// `(zeta ln(beta^p 2^xi) - 2 mu - zeta ln(P A / sigma_w^2)) / (2 sigma)`.
pub(crate) fn link_argument(power: f64, link: &LinkSpec, sys: &SystemParams) -> f64 {
    link.fading.standardized(ln_outage_gain(power, link, sys))
}

fn link_outage_unchecked(power: f64, link: &LinkSpec, sys: &SystemParams) -> f64 {
    lognormal_sq_cdf_ln(ln_outage_gain(power, link, sys), &link.fading)
}

/// Outage of a single link at transmit power `power` (watts).
pub fn link_outage(power: f64, link: &LinkSpec, sys: &SystemParams) -> Result<f64> {
    check_power(power)?;
    link.validate()?;
    sys.validate()?;
    Ok(link_outage_unchecked(power, link, sys))
}

/// Serial DF composition: the packet is lost at the first failing hop.
///
/// Written term by term as `O_1 + O_1^c [sum_m O_{m+1} prod_{i<m} O_i^c + ...]`
/// so each branch matches one failure position.
pub fn serial_chain_outage(per_link: &[f64]) -> f64 {
    match per_link {
        [] => 0.0,
        [only] => clamp_probability(*only),
        [first, rest @ ..] => {
            let (middle, last) = rest.split_at(rest.len() - 1);
            let mut bracket = 0.0;
            let mut survive = 1.0;
            for &o in middle {
                bracket += o * survive;
                survive *= 1.0 - o;
            }
            bracket += last[0] * survive;
            clamp_probability(first + bracket * (1.0 - first))
        }
    }
}

/// Two-hop chain, `O_1 + O_1^c O_2`.
pub fn dual_hop_chain(o1: f64, o2: f64) -> f64 {
    o1 + (1.0 - o1) * o2
}

/// Three-hop chain, `O_1 + O_1^c (O_2 + O_2^c O_3)`.
pub fn three_hop_chain(o1: f64, o2: f64, o3: f64) -> f64 {
    o1 + (1.0 - o1) * (o2 + (1.0 - o2) * o3)
}

pub fn single_hop_outage(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
) -> Result<OutageBreakdown> {
    if topology.hops() != 1 {
        return Err(Error::Topology(format!(
            "single-hop outage needs exactly one link, got {}",
            topology.hops()
        )));
    }
    let o = link_outage(power, &topology.links[0], sys)?;
    Ok(OutageBreakdown {
        end_to_end: o,
        per_link: vec![o],
        direct_link: None,
    })
}

/// DF chain of `N >= 2` hops at common transmit power.
pub fn multihop_outage(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
) -> Result<OutageBreakdown> {
    if topology.hops() < 2 {
        return Err(Error::Topology(format!(
            "multi-hop outage needs at least two links, got {}",
            topology.hops()
        )));
    }
    chain_breakdown(power, topology, sys)
}

/// DF composition over any number of hops, including one.
pub(crate) fn chain_breakdown(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
) -> Result<OutageBreakdown> {
    check_power(power)?;
    sys.validate()?;
    let per_link: Vec<f64> = topology
        .links
        .iter()
        .map(|l| link_outage_unchecked(power, l, sys))
        .collect();
    Ok(OutageBreakdown {
        end_to_end: serial_chain_outage(&per_link),
        per_link,
        direct_link: None,
    })
}

/// Incremental DF: the relay only forwards when the direct link fails.
pub fn idf_outage(power: f64, topology: &Topology, sys: &SystemParams) -> Result<OutageBreakdown> {
    let direct = topology.check_idf()?;
    check_power(power)?;
    sys.validate()?;
    let o_sd = link_outage_unchecked(power, direct, sys);
    let o_sr = link_outage_unchecked(power, &topology.links[0], sys);
    let o_rd = link_outage_unchecked(power, &topology.links[1], sys);
    Ok(OutageBreakdown {
        end_to_end: clamp_probability(o_sd * (o_sr + (1.0 - o_sr) * o_rd)),
        per_link: vec![o_sr, o_rd],
        direct_link: Some(o_sd),
    })
}

/// Dispatches to the outage operation of `scheme`.
pub fn scheme_outage(
    scheme: Scheme,
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
) -> Result<OutageBreakdown> {
    match scheme {
        Scheme::SingleHop => single_hop_outage(power, topology, sys),
        Scheme::MultiHop(_) => multihop_outage(power, topology, sys),
        Scheme::Idf => idf_outage(power, topology, sys),
    }
}

/// The erf terms `(X, Y, Z)` of the IDF polynomial: `X`, `Y` for the
/// source-relay and relay-destination hops, `Z` for the direct link, each
/// equal to `2 O - 1` of that link.
pub fn idf_polynomial_terms(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
) -> Result<(f64, f64, f64)> {
    let direct = topology.check_idf()?;
    check_power(power)?;
    sys.validate()?;
    let term = |link: &LinkSpec| erf(link_argument(power, link, sys) / SQRT_2);
    Ok((
        term(&topology.links[0]),
        term(&topology.links[1]),
        term(direct),
    ))
}

/// IDF outage expanded as `(3 + X + Y + 3Z + XZ + YZ - XY - XYZ) / 8`.
pub fn idf_polynomial_outage(power: f64, topology: &Topology, sys: &SystemParams) -> Result<f64> {
    let (x, y, z) = idf_polynomial_terms(power, topology, sys)?;
    Ok((3.0 + idf_polynomial_lhs(x, y, z)) / 8.0)
}

/// `X + Y + 3Z + XZ + YZ - XY - XYZ - (8 O* - 3)`; zero at the optimal IDF power.
pub fn idf_polynomial_residual(
    power: f64,
    topology: &Topology,
    sys: &SystemParams,
    target: f64,
) -> Result<f64> {
    let (x, y, z) = idf_polynomial_terms(power, topology, sys)?;
    Ok(idf_polynomial_lhs(x, y, z) - (8.0 * target - 3.0))
}

fn idf_polynomial_lhs(x: f64, y: f64, z: f64) -> f64 {
    x + y + 3.0 * z + x * z + y * z - x * y - x * y * z
}
