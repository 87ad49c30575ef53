//! Parameter sweeps over distance, static power, outage target or impulse
//! probability, written out as CSV.

use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;

use crate::config::{ScenarioConfig, SweepMetric, SweepVariable, KEYS};
use crate::energy::scheme_energy;
use crate::error::{Error, Result};
use crate::montecarlo::{simulate_scheme, SimEstimate};
use crate::numfmt::g12;
use crate::outage::{scheme_outage, Scheme, Topology};
use crate::power::solve_scheme;

/// Largest relative spread of the IDF energy column accepted by the
/// threshold-independence check, and the largest O* it looks at.
pub const IDF_THRESHOLD_SPREAD_LIMIT: f64 = 0.05;
pub const IDF_THRESHOLD_CHECK_MAX_TARGET: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// Value of the swept variable.
    pub x: f64,
    /// Impulse probability of the family this row belongs to.
    pub family: Option<f64>,
    pub scheme: Scheme,
    /// Fixed power in outage mode, solved power in energy mode.
    pub power: f64,
    pub outage: f64,
    pub energy_per_bit: Option<f64>,
    pub mc: Option<SimEstimate>,
}

impl SweepRow {
    /// Whether the Monte Carlo estimate falls outside the agreement tolerance.
    pub fn mc_disagrees(&self) -> Option<bool> {
        self.mc.map(|m| !m.agrees_with(self.outage))
    }

    /// The value the sweep's metric reports.
    pub fn metric_value(&self) -> f64 {
        self.energy_per_bit.unwrap_or(self.outage)
    }
}

/// Result of the IDF threshold-independence check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadCheck {
    /// `(max - min) / min` of the IDF energy over the checked targets.
    pub spread: f64,
    pub limit: f64,
    pub points: usize,
}

impl SpreadCheck {
    pub fn passed(&self) -> bool {
        self.spread < self.limit
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub config: ScenarioConfig,
    pub rows: Vec<SweepRow>,
}

/// Copy of `config` with the sweep variable (and impulse family) applied.
pub fn point_config(config: &ScenarioConfig, x: f64, family: Option<f64>) -> ScenarioConfig {
    let mut c = config.clone();
    if let Some(p) = family {
        c.system.noise.p = p;
    }
    match config.sweep.variable {
        SweepVariable::Distance => c.distance = x,
        SweepVariable::StaticPower => {
            c.profile.p_static_tx = x;
            c.profile.p_static_rx = x;
        }
        SweepVariable::OutageTarget => c.outage_target = x,
        SweepVariable::ImpulseProbability => c.system.noise.p = x,
    }
    c
}

/// Evaluates one scheme under `c`. Returns `(power, outage, energy)`;
/// energy is only computed for the energy metric.
pub fn evaluate(
    c: &ScenarioConfig,
    scheme: Scheme,
    metric: SweepMetric,
) -> Result<(f64, f64, Option<f64>)> {
    let topology = Topology::for_scheme(scheme, c.distance, c.fading)?;
    match metric {
        SweepMetric::Outage => {
            let o = scheme_outage(scheme, c.transmit_power, &topology, &c.system)?;
            Ok((c.transmit_power, o.end_to_end, None))
        }
        SweepMetric::Energy => {
            let sol = solve_scheme(scheme, c.outage_target, &topology, &c.system, &c.solver)?;
            let o = scheme_outage(scheme, sol.power, &topology, &c.system)?;
            let e = scheme_energy(scheme, sol.power, &o, &c.profile)?;
            Ok((sol.power, o.end_to_end, Some(e.energy_per_bit)))
        }
    }
}

fn run_row(
    config: &ScenarioConfig,
    x: f64,
    family: Option<f64>,
    scheme: Scheme,
) -> Result<SweepRow> {
    let c = point_config(config, x, family);
    let (power, outage, energy_per_bit) = evaluate(&c, scheme, config.sweep.metric)?;
    let mc = if config.sweep.validate_mc {
        let topology = Topology::for_scheme(scheme, c.distance, c.fading)?;
        Some(simulate_scheme(
            scheme,
            power,
            &topology,
            &c.system,
            &config.sweep.sim,
        )?)
    } else {
        None
    };
    Ok(SweepRow {
        x,
        family,
        scheme,
        power,
        outage,
        energy_per_bit,
        mc,
    })
}

/// Runs every (family, point, scheme) combination. Points are evaluated in
/// parallel; rows come back in sweep order.
pub fn run_sweep(config: &ScenarioConfig) -> Result<SweepOutput> {
    config.validate()?;
    let spec = &config.sweep;
    let families: Vec<Option<f64>> = if spec.impulse_families.is_empty() {
        vec![None]
    } else {
        spec.impulse_families.iter().copied().map(Some).collect()
    };
    let points = spec.points();
    let tasks: Vec<(Option<f64>, f64, Scheme)> = families
        .iter()
        .flat_map(|&fam| {
            points
                .iter()
                .flat_map(move |&x| spec.schemes.iter().map(move |&s| (fam, x, s)))
        })
        .collect();
    let rows = tasks
        .into_par_iter()
        .map(|(family, x, scheme)| {
            run_row(config, x, family, scheme).map_err(|e| Error::SweepPoint {
                scheme,
                variable: spec.variable.name(),
                point: x,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepOutput {
        config: config.clone(),
        rows,
    })
}

fn scheme_label(s: Scheme) -> String {
    match s {
        Scheme::SingleHop => "sh".into(),
        Scheme::MultiHop(n) => format!("mh{n}"),
        Scheme::Idf => "idf".into(),
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Trend {
    Increasing,
    Decreasing,
    NonDecreasing,
    NonIncreasing,
    Mixed,
}

fn trend(v: &[f64]) -> Trend {
    let d: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
    if d.iter().all(|&x| x > 0.0) {
        Trend::Increasing
    } else if d.iter().all(|&x| x < 0.0) {
        Trend::Decreasing
    } else if d.iter().all(|&x| x >= 0.0) {
        Trend::NonDecreasing
    } else if d.iter().all(|&x| x <= 0.0) {
        Trend::NonIncreasing
    } else {
        Trend::Mixed
    }
}

impl SweepOutput {
    fn has_families(&self) -> bool {
        !self.config.sweep.impulse_families.is_empty()
    }

    fn energy_mode(&self) -> bool {
        self.config.sweep.metric == SweepMetric::Energy
    }

    pub fn column_names(&self) -> Vec<String> {
        let mut cols = vec![self.config.sweep.variable.name().to_string()];
        if self.has_families() {
            cols.push("impulse_probability".into());
        }
        cols.push("scheme".into());
        if self.energy_mode() {
            cols.extend(["power", "outage", "energy_per_bit"].map(String::from));
        } else {
            cols.push("outage".into());
        }
        if self.config.sweep.validate_mc {
            cols.extend(["mc_outage", "mc_ci99", "mc_disagree"].map(String::from));
        }
        cols
    }

    /// Header comment lines, without the leading `# `.
    pub fn header_comments(&self) -> Vec<String> {
        let c = &self.config;
        let mut out = vec![format!("plc-relay {}", env!("CARGO_PKG_VERSION"))];
        let mut assumed = format!(
            "assumptions: xi = {} bit/s/Hz, static_tx = {} W, static_rx = {} W, bandwidth = {} Hz, f in a1*f^k taken in {}, relays equally spaced, IDF relay at the midpoint",
            g12(c.profile.xi),
            g12(c.profile.p_static_tx),
            g12(c.profile.p_static_rx),
            g12(c.profile.bandwidth),
            c.system.attenuation.formula_unit,
        );
        if c.sweep.metric == SweepMetric::Outage {
            let _ = write!(
                assumed,
                ", fixed transmit power {} W",
                g12(c.transmit_power)
            );
        }
        if c.sweep.variable == SweepVariable::StaticPower {
            assumed.push_str(", swept static power applies to both tx and rx");
        }
        out.push(assumed);
        out.push(format!(
            "seed = {}, trials = {}, monte carlo columns = {}",
            c.sweep.sim.seed, c.sweep.sim.trials, c.sweep.validate_mc
        ));
        out.extend(
            KEYS.iter()
                .map(|k| format!("{} = {}", k.name, c.get(k.name).unwrap_or_default())),
        );
        out
    }

    /// Writes the dataset: `#` comments, header row, one row per
    /// (point, scheme).
    pub fn write_csv<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        for line in self.header_comments() {
            writeln!(w, "# {line}")?;
        }
        writeln!(w, "{}", self.column_names().join(","))?;
        for r in &self.rows {
            let mut fields = vec![g12(r.x)];
            if let Some(p) = r.family {
                fields.push(g12(p));
            }
            fields.push(scheme_label(r.scheme));
            if self.energy_mode() {
                fields.push(g12(r.power));
                fields.push(g12(r.outage));
                fields.push(g12(r.energy_per_bit.unwrap_or(f64::NAN)));
            } else {
                fields.push(g12(r.outage));
            }
            if let Some(m) = r.mc {
                fields.push(g12(m.p_hat));
                fields.push(g12(m.ci99_half_width));
                fields.push(u8::from(!m.agrees_with(r.outage)).to_string());
            }
            writeln!(w, "{}", fields.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }

    /// Rows of one scheme (and family), in sweep order.
    pub fn series(&self, scheme: Scheme, family: Option<f64>) -> Vec<&SweepRow> {
        self.rows
            .iter()
            .filter(|r| r.scheme == scheme && r.family == family)
            .collect()
    }

    /// Spread of the IDF energy across outage targets up to 1e-2, when this
    /// is an energy-versus-target sweep that includes IDF.
    pub fn idf_threshold_check(&self) -> Option<SpreadCheck> {
        let s = &self.config.sweep;
        if s.metric != SweepMetric::Energy || s.variable != SweepVariable::OutageTarget {
            return None;
        }
        let values: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.scheme == Scheme::Idf && r.family.is_none())
            .filter(|r| r.x <= IDF_THRESHOLD_CHECK_MAX_TARGET * (1.0 + 1e-9))
            .filter_map(|r| r.energy_per_bit)
            .collect();
        if values.len() < 2 {
            return None;
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Some(SpreadCheck {
            spread: (max - min) / min,
            limit: IDF_THRESHOLD_SPREAD_LIMIT,
            points: values.len(),
        })
    }

    /// Human-readable overview: range and trend per series, Monte Carlo
    /// disagreements, and the IDF threshold check where it applies.
    pub fn summary(&self) -> String {
        let s = &self.config.sweep;
        let metric = if self.energy_mode() {
            "energy per bit (J/bit)"
        } else {
            "outage"
        };
        let mut out = format!(
            "{} sweep over {} from {} to {} ({} points, {} scale), {} rows\n",
            metric,
            s.variable,
            g12(s.start),
            g12(s.stop),
            s.steps,
            s.scale,
            self.rows.len()
        );
        let families: Vec<Option<f64>> = if s.impulse_families.is_empty() {
            vec![None]
        } else {
            s.impulse_families.iter().copied().map(Some).collect()
        };
        for fam in &families {
            for &scheme in &s.schemes {
                let v: Vec<f64> = self
                    .series(scheme, *fam)
                    .iter()
                    .map(|r| r.metric_value())
                    .collect();
                if v.is_empty() {
                    continue;
                }
                let label = match fam {
                    Some(p) => format!("{scheme} (p = {})", g12(*p)),
                    None => scheme.to_string(),
                };
                let trend = match trend(&v) {
                    Trend::Increasing => "strictly increasing",
                    Trend::Decreasing => "strictly decreasing",
                    Trend::NonDecreasing => "non-decreasing",
                    Trend::NonIncreasing => "non-increasing",
                    Trend::Mixed => "not monotone",
                };
                let _ = writeln!(
                    out,
                    "  {label:<24} first {:<14} last {:<14} {trend}",
                    format!("{:.6e}", v[0]),
                    format!("{:.6e}", v[v.len() - 1]),
                );
            }
        }
        if s.validate_mc {
            let bad = self
                .rows
                .iter()
                .filter(|r| r.mc_disagrees() == Some(true))
                .count();
            let _ = writeln!(
                out,
                "monte carlo: {bad} of {} rows outside max(3 x 99% CI, 10% relative)",
                self.rows.len()
            );
        }
        if let Some(check) = self.idf_threshold_check() {
            let _ = writeln!(
                out,
                "idf energy spread over O* <= {}: {:.2}% across {} points (limit {:.0}%): {}",
                g12(IDF_THRESHOLD_CHECK_MAX_TARGET),
                100.0 * check.spread,
                check.points,
                100.0 * check.limit,
                if check.passed() { "ok" } else { "exceeded" }
            );
        }
        out
    }
}
