//! Minimum transmit power meeting a target outage `O*`.
//!
//! Single hop has a closed form. Multi-hop DF and IDF outages are strictly
//! decreasing in the common transmit power, so their optimal powers are found
//! by bracketed bisection.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{noise_threshold, LinkSpec, SystemParams, ZETA};
use crate::outage::{
    chain_breakdown, idf_outage, idf_polynomial_residual, link_outage, Scheme, Topology,
};
use crate::special::erf_inv;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    ClosedForm,
    Bisection,
}

impl fmt::Display for SolveMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveMethod::ClosedForm => f.write_str("closed-form"),
            SolveMethod::Bisection => f.write_str("bisection"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSolution {
    /// watts
    pub power: f64,
    /// `|O(power) - O*|`
    pub residual: f64,
    pub iterations: usize,
    /// Bracket that straddled the target before bisection started (equal
    /// endpoints for the closed form).
    pub bracket: (f64, f64),
    pub method: SolveMethod,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Stop once `|O(P) - O*|` is at most this.
    pub tol: f64,
    /// Cap on halvings of the lower end and doublings of the upper end.
    pub max_expansions: usize,
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-10,
            max_expansions: 200,
            max_iterations: 400,
        }
    }
}

/// Ratio between the single-hop closed form on the longest hop and the first
/// lower bracket end.
const LOWER_BRACKET_FACTOR: f64 = 1e6;

/// Bisection also stops once the bracket is narrower than this relative width.
const MIN_RELATIVE_WIDTH: f64 = 1e-12;

fn check_target(target: f64) -> Result<()> {
    if target > 0.0 && target < 1.0 {
        Ok(())
    } else {
        Err(Error::param("outage_target", target, "must lie in (0, 1)"))
    }
}

fn closed_form_power(target: f64, link: &LinkSpec, sys: &SystemParams) -> f64 {
    let f = &link.fading;
    let ln_power = noise_threshold(&sys.noise, sys.xi).ln()
        + sys.noise.background_variance().ln()
        + sys.attenuation.alpha() * link.distance
        - (8f64.sqrt() * f.sigma_db * erf_inv(2.0 * target - 1.0) + 2.0 * f.mu_db) / ZETA;
    ln_power.exp()
}

/// Closed-form optimal single-hop power.
pub fn solve_single_hop(target: f64, link: &LinkSpec, sys: &SystemParams) -> Result<PowerSolution> {
    check_target(target)?;
    link.validate()?;
    sys.validate()?;
    let power = closed_form_power(target, link, sys);
    if !(power > 0.0 && power.is_finite()) {
        return Err(Error::NonFinite { power });
    }
    let residual = (link_outage(power, link, sys)? - target).abs();
    Ok(PowerSolution {
        power,
        residual,
        iterations: 0,
        bracket: (power, power),
        method: SolveMethod::ClosedForm,
    })
}

/// Optimal common power of a DF chain. One-hop topologies are accepted and
/// reduce to the single-hop problem.
pub fn solve_multihop(
    target: f64,
    topology: &Topology,
    sys: &SystemParams,
    opts: &SolverOptions,
) -> Result<PowerSolution> {
    check_target(target)?;
    sys.validate()?;
    let start = initial_lower_power(target, topology, sys);
    bisect_decreasing(
        |p| chain_breakdown(p, topology, sys).map(|b| b.end_to_end),
        target,
        start,
        opts,
    )
}

/// Optimal IDF power: solves the composed outage for `O*` and then checks the
/// solution against the expanded polynomial form in `X`, `Y`, `Z`.
pub fn solve_idf(
    target: f64,
    topology: &Topology,
    sys: &SystemParams,
    opts: &SolverOptions,
) -> Result<PowerSolution> {
    check_target(target)?;
    sys.validate()?;
    // validates the IDF shape before any bracketing
    idf_outage(1.0, topology, sys)?;
    let start = initial_lower_power(target, topology, sys);
    let sol = bisect_decreasing(
        |p| idf_outage(p, topology, sys).map(|b| b.end_to_end),
        target,
        start,
        opts,
    )?;
    let residual = idf_polynomial_residual(sol.power, topology, sys, target)?.abs();
    let limit = idf_polynomial_limit(opts.tol);
    if residual > limit {
        return Err(Error::PolynomialMismatch { residual, limit });
    }
    Ok(sol)
}

/// Dispatches to the solver of `scheme`; single-hop topologies use the
/// closed form.
pub fn solve_scheme(
    scheme: Scheme,
    target: f64,
    topology: &Topology,
    sys: &SystemParams,
    opts: &SolverOptions,
) -> Result<PowerSolution> {
    match scheme {
        Scheme::SingleHop => {
            if topology.hops() != 1 || topology.direct().is_some() {
                return Err(Error::Topology("single-hop needs exactly one link".into()));
            }
            solve_single_hop(target, &topology.links()[0], sys)
        }
        Scheme::MultiHop(_) => solve_multihop(target, topology, sys, opts),
        Scheme::Idf => solve_idf(target, topology, sys, opts),
    }
}

/// The polynomial residual equals `8 (O - O*)`, so its bound follows the
/// outage tolerance.
pub fn idf_polynomial_limit(tol: f64) -> f64 {
    (8.0 * tol).max(1e-9)
}

fn initial_lower_power(target: f64, topology: &Topology, sys: &SystemParams) -> f64 {
    let longest = topology
        .links()
        .iter()
        .max_by(|a, b| a.distance.total_cmp(&b.distance))
        .expect("topology has at least one link");
    closed_form_power(target, longest, sys) / LOWER_BRACKET_FACTOR
}

/// Bisection on a strictly decreasing `outage(P)` for `outage(P) = target`.
fn bisect_decreasing<F>(
    outage: F,
    target: f64,
    start: f64,
    opts: &SolverOptions,
) -> Result<PowerSolution>
where
    F: Fn(f64) -> Result<f64>,
{
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::param("solver.tol", opts.tol, "must be > 0"));
    }
    let eval = |p: f64| -> Result<f64> {
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::NonFinite { power: p });
        }
        let o = outage(p)?;
        if o.is_finite() {
            Ok(o)
        } else {
            Err(Error::NonFinite { power: p })
        }
    };

    let mut lo = start;
    let mut expansions = 0;
    while eval(lo)? <= target {
        if expansions == opts.max_expansions {
            return Err(Error::BracketExpansion {
                expansions,
                power: lo,
            });
        }
        lo *= 0.5;
        expansions += 1;
    }
    let mut hi = lo;
    expansions = 0;
    while eval(hi)? >= target {
        if expansions == opts.max_expansions {
            return Err(Error::BracketExpansion {
                expansions,
                power: hi,
            });
        }
        hi *= 2.0;
        expansions += 1;
    }
    let bracket = (lo, hi);

    let mut residual = f64::INFINITY;
    for iteration in 1..=opts.max_iterations {
        let mid = 0.5 * (lo + hi);
        let o = eval(mid)?;
        residual = (o - target).abs();
        if residual <= opts.tol || hi - lo < MIN_RELATIVE_WIDTH * mid {
            return Ok(PowerSolution {
                power: mid,
                residual,
                iterations: iteration,
                bracket,
                method: SolveMethod::Bisection,
            });
        }
        if o > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
    })
}
