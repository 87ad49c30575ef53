//! Scenario configuration: a flat `key = value` text format with dotted keys
//! and `#` comments, figure presets, and a schema dump.
//!
//! Values are layered: a preset (or the defaults), then a config file, then
//! `--set key=value` overrides. Every value remembers where it was set so a
//! failed validation can point at the offending line.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::energy::ModemPowerProfile;
use crate::error::{Error, Result};
use crate::model::{FadingParams, FrequencyUnit, SystemParams};
use crate::montecarlo::SimConfig;
use crate::numfmt::g12;
use crate::outage::Scheme;
use crate::power::SolverOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Distance,
    /// Sets the transmit and receive static power together.
    StaticPower,
    OutageTarget,
    ImpulseProbability,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::Distance => "distance",
            SweepVariable::StaticPower => "static_power",
            SweepVariable::OutageTarget => "outage_target",
            SweepVariable::ImpulseProbability => "impulse_probability",
        }
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepVariable {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "distance" => Ok(SweepVariable::Distance),
            "static_power" => Ok(SweepVariable::StaticPower),
            "outage_target" => Ok(SweepVariable::OutageTarget),
            "impulse_probability" => Ok(SweepVariable::ImpulseProbability),
            _ => Err(format!(
                "unknown sweep variable `{s}` (expected distance, static_power, outage_target or impulse_probability)"
            )),
        }
    }
}

/// What a sweep reports at each point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMetric {
    /// Outage at the fixed `transmit_power`.
    Outage,
    /// Energy per bit at the power that meets `outage_target`.
    Energy,
}

impl fmt::Display for SweepMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMetric::Outage => "outage",
            SweepMetric::Energy => "energy",
        })
    }
}

impl FromStr for SweepMetric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "outage" => Ok(SweepMetric::Outage),
            "energy" => Ok(SweepMetric::Energy),
            _ => Err(format!(
                "unknown sweep metric `{s}` (expected outage or energy)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

impl fmt::Display for SweepScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepScale::Linear => "linear",
            SweepScale::Log => "log",
        })
    }
}

impl FromStr for SweepScale {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "linear" => Ok(SweepScale::Linear),
            "log" => Ok(SweepScale::Log),
            _ => Err(format!(
                "unknown sweep scale `{s}` (expected linear or log)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub metric: SweepMetric,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub scale: SweepScale,
    pub schemes: Vec<Scheme>,
    /// Impulse probabilities to repeat the sweep for; empty uses `noise.p`.
    pub impulse_families: Vec<f64>,
    pub validate_mc: bool,
    pub sim: SimConfig,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            variable: SweepVariable::Distance,
            metric: SweepMetric::Outage,
            start: 100.0,
            stop: 1200.0,
            steps: 12,
            scale: SweepScale::Linear,
            schemes: vec![
                Scheme::SingleHop,
                Scheme::MultiHop(2),
                Scheme::MultiHop(3),
                Scheme::MultiHop(4),
                Scheme::Idf,
            ],
            impulse_families: Vec::new(),
            validate_mc: false,
            sim: SimConfig::default(),
        }
    }
}

impl SweepSpec {
    /// Values of the swept variable, in order.
    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i + 1 == self.steps {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.scale {
                    SweepScale::Linear => self.start + t * (self.stop - self.start),
                    SweepScale::Log => (self.start.ln() + t * (self.stop / self.start).ln()).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub system: SystemParams,
    /// Fading of every link.
    pub fading: FadingParams,
    pub profile: ModemPowerProfile,
    pub outage_target: f64,
    /// Source-to-destination distance for single-point commands, meters.
    pub distance: f64,
    /// Fixed transmit power for outage evaluation and simulation, watts.
    pub transmit_power: f64,
    pub solver: SolverOptions,
    pub sweep: SweepSpec,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            system: SystemParams::default(),
            fading: FadingParams::default(),
            profile: ModemPowerProfile::default(),
            outage_target: 1e-2,
            distance: 400.0,
            transmit_power: 1.0,
            solver: SolverOptions::default(),
            sweep: SweepSpec::default(),
        }
    }
}

/// Names accepted by [`ScenarioConfig::preset`].
pub const PRESETS: [&str; 5] = ["fig2", "fig3", "fig4", "fig5", "fig6"];

impl ScenarioConfig {
    /// Ready-made sweeps. Axis extents and the impulse families are choices of
    /// this tool; everything else is the default scenario.
    pub fn preset(name: &str) -> Result<Self> {
        let mut c = ScenarioConfig::default();
        let s = &mut c.sweep;
        let all_df = vec![
            Scheme::SingleHop,
            Scheme::MultiHop(2),
            Scheme::MultiHop(3),
            Scheme::MultiHop(4),
        ];
        match name {
            "fig2" => {
                s.metric = SweepMetric::Outage;
                s.variable = SweepVariable::Distance;
                (s.start, s.stop, s.steps) = (100.0, 1200.0, 23);
                s.schemes = all_df;
            }
            "fig3" => {
                s.metric = SweepMetric::Outage;
                s.variable = SweepVariable::Distance;
                (s.start, s.stop, s.steps) = (100.0, 1200.0, 23);
                s.schemes = vec![Scheme::MultiHop(2), Scheme::Idf];
                s.impulse_families = vec![0.0, 0.01, 0.1];
            }
            "fig4" => {
                s.metric = SweepMetric::Energy;
                s.variable = SweepVariable::Distance;
                (s.start, s.stop, s.steps) = (100.0, 1200.0, 23);
                s.schemes = all_df.into_iter().chain([Scheme::Idf]).collect();
            }
            "fig5" => {
                c.distance = 100.0;
                s.metric = SweepMetric::Energy;
                s.variable = SweepVariable::StaticPower;
                (s.start, s.stop, s.steps) = (1e-3, 2.0, 34);
                s.scale = SweepScale::Log;
                s.schemes = all_df.into_iter().chain([Scheme::Idf]).collect();
            }
            "fig6" => {
                c.distance = 100.0;
                s.metric = SweepMetric::Energy;
                s.variable = SweepVariable::OutageTarget;
                (s.start, s.stop, s.steps) = (1e-4, 1e-1, 13);
                s.scale = SweepScale::Log;
                s.schemes = all_df.into_iter().chain([Scheme::Idf]).collect();
            }
            _ => {
                return Err(Error::config(
                    "--preset",
                    format!(
                        "unknown preset `{name}` (expected one of {})",
                        PRESETS.join(", ")
                    ),
                ))
            }
        }
        Ok(c)
    }

    /// Parses a config file on top of the defaults.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut loader = ConfigLoader::new(ScenarioConfig::default());
        loader.apply_text(text, "<config>")?;
        loader.finish()
    }

    pub fn validate(&self) -> Result<()> {
        self.check()
            .map_err(|(key, msg)| Error::config(format!("key `{key}`"), msg))
    }

    /// Current value of `key` in config syntax.
    pub fn get(&self, key: &str) -> Option<String> {
        KEYS.iter().find(|k| k.name == key).map(|k| (k.get)(self))
    }

    fn check(&self) -> std::result::Result<(), (&'static str, String)> {
        self.system.validate().map_err(param_to_key)?;
        self.fading.validate().map_err(param_to_key)?;
        self.profile.validate().map_err(param_to_key)?;
        if self.system.xi != self.profile.xi {
            return Err((
                "profile.xi",
                "link and modem spectral efficiencies differ".into(),
            ));
        }
        if !(self.outage_target > 0.0 && self.outage_target < 1.0) {
            return Err((
                "outage_target",
                format!("{} must lie in (0, 1)", g12(self.outage_target)),
            ));
        }
        if !(self.distance > 0.0 && self.distance.is_finite()) {
            return Err((
                "distance",
                format!("{} must be finite and > 0", g12(self.distance)),
            ));
        }
        if !(self.transmit_power > 0.0 && self.transmit_power.is_finite()) {
            return Err((
                "transmit_power",
                format!("{} must be finite and > 0", g12(self.transmit_power)),
            ));
        }
        if !(self.solver.tol > 0.0 && self.solver.tol < 1.0) {
            return Err((
                "solver.tol",
                format!("{} must lie in (0, 1)", g12(self.solver.tol)),
            ));
        }
        if self.solver.max_iterations == 0 {
            return Err(("solver.max_iterations", "must be >= 1".into()));
        }
        self.check_sweep()
    }

    fn check_sweep(&self) -> std::result::Result<(), (&'static str, String)> {
        let s = &self.sweep;
        s.sim.validate().map_err(param_to_key)?;
        if s.schemes.is_empty() {
            return Err(("sweep.schemes", "at least one scheme is required".into()));
        }
        if s.steps < 2 {
            return Err(("sweep.steps", format!("{} must be >= 2", s.steps)));
        }
        if !(s.start.is_finite() && s.stop.is_finite() && s.start < s.stop) {
            return Err((
                "sweep.stop",
                format!(
                    "range {} .. {} must be finite with start < stop",
                    g12(s.start),
                    g12(s.stop)
                ),
            ));
        }
        if s.scale == SweepScale::Log && s.start <= 0.0 {
            return Err((
                "sweep.start",
                "a log-scaled sweep must start above 0".into(),
            ));
        }
        let (lo_ok, hi_ok, domain) = match s.variable {
            SweepVariable::Distance => (s.start > 0.0, true, "(0, inf)"),
            SweepVariable::StaticPower => (s.start > 0.0, true, "(0, inf)"),
            SweepVariable::OutageTarget => (s.start > 0.0, s.stop < 1.0, "(0, 1)"),
            SweepVariable::ImpulseProbability => (s.start >= 0.0, s.stop <= 1.0, "[0, 1]"),
        };
        if !lo_ok {
            return Err((
                "sweep.start",
                format!("{} must lie in {domain}", s.variable),
            ));
        }
        if !hi_ok {
            return Err(("sweep.stop", format!("{} must lie in {domain}", s.variable)));
        }
        if s.metric == SweepMetric::Outage
            && matches!(
                s.variable,
                SweepVariable::OutageTarget | SweepVariable::StaticPower
            )
        {
            return Err((
                "sweep.metric",
                format!("sweeping {} only affects the energy metric", s.variable),
            ));
        }
        if !s.impulse_families.is_empty() && s.variable == SweepVariable::ImpulseProbability {
            return Err((
                "sweep.impulse_families",
                "cannot be combined with an impulse probability sweep".into(),
            ));
        }
        if let Some(p) = s
            .impulse_families
            .iter()
            .find(|p| !(0.0..=1.0).contains(*p))
        {
            return Err((
                "sweep.impulse_families",
                format!("{} must lie in [0, 1]", g12(*p)),
            ));
        }
        Ok(())
    }
}

/// Maps a parameter error from a nested validator to its config key.
fn param_to_key(e: Error) -> (&'static str, String) {
    match e {
        Error::InvalidParameter {
            name,
            value,
            reason,
        } => {
            let key = match name {
                "xi" => "profile.xi",
                "attenuation.alpha" => "attenuation.a0",
                "link.distance" => "distance",
                "power" => "transmit_power",
                other => other,
            };
            (key, format!("value {} {reason}", g12(value)))
        }
        other => ("<config>", other.to_string()),
    }
}

/// Where a default value comes from, shown by the schema dump.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// Part of the reference scenario's parameter list.
    Reference,
    /// Not given by the reference scenario; chosen by this tool.
    Assumed,
    /// Numerical or output setting with no physical meaning.
    Tool,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Reference => "reference scenario",
            Origin::Assumed => "assumption",
            Origin::Tool => "tool setting",
        })
    }
}

type Getter = fn(&ScenarioConfig) -> String;
type Setter = fn(&mut ScenarioConfig, &str) -> std::result::Result<(), String>;

pub struct KeySpec {
    pub name: &'static str,
    pub origin: Origin,
    pub help: &'static str,
    get: Getter,
    set: Setter,
}

/// Shortest text that parses back to the same value.
fn format_value(x: f64) -> String {
    format!("{x:?}")
}

fn parse_f64(v: &str) -> std::result::Result<f64, String> {
    let x: f64 = v
        .parse()
        .map_err(|_| format!("expected a number, got `{v}`"))?;
    if x.is_nan() {
        return Err("NaN is not allowed".into());
    }
    Ok(x)
}

fn parse_int<T: FromStr>(v: &str) -> std::result::Result<T, String> {
    v.parse()
        .map_err(|_| format!("expected a non-negative integer, got `{v}`"))
}

fn parse_bool(v: &str) -> std::result::Result<bool, String> {
    match v {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(format!("expected true or false, got `{v}`")),
    }
}

fn parse_list<T>(
    v: &str,
    item: impl Fn(&str) -> std::result::Result<T, String>,
) -> std::result::Result<Vec<T>, String> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(item)
        .collect()
}

fn scheme_key(s: &Scheme) -> String {
    match s {
        Scheme::SingleHop => "sh".into(),
        Scheme::MultiHop(n) => format!("mh{n}"),
        Scheme::Idf => "idf".into(),
    }
}

macro_rules! float_key {
    ($name:literal, $origin:ident, $help:literal, $($field:ident).+) => {
        KeySpec {
            name: $name,
            origin: Origin::$origin,
            help: $help,
            get: |c| format_value(c.$($field).+),
            set: |c, v| {
                c.$($field).+ = parse_f64(v)?;
                Ok(())
            },
        }
    };
}

macro_rules! parsed_key {
    ($name:literal, $origin:ident, $help:literal, $parse:expr, $($field:ident).+) => {
        KeySpec {
            name: $name,
            origin: Origin::$origin,
            help: $help,
            get: |c| c.$($field).+.to_string(),
            set: |c, v| {
                c.$($field).+ = $parse(v)?;
                Ok(())
            },
        }
    };
}

pub static KEYS: &[KeySpec] = &[
    float_key!(
        "attenuation.a0",
        Reference,
        "attenuation constant, 1/m",
        system.attenuation.a0
    ),
    float_key!(
        "attenuation.a1",
        Reference,
        "attenuation constant, 1/m per unit^k",
        system.attenuation.a1
    ),
    float_key!(
        "attenuation.k",
        Reference,
        "attenuation exponent",
        system.attenuation.k
    ),
    float_key!(
        "attenuation.frequency_mhz",
        Reference,
        "carrier frequency, MHz",
        system.attenuation.frequency_mhz
    ),
    parsed_key!(
        "attenuation.frequency_unit",
        Assumed,
        "unit the frequency is expressed in inside a1*f^k (MHz or Hz)",
        |v: &str| v.parse::<FrequencyUnit>(),
        system.attenuation.formula_unit
    ),
    float_key!(
        "noise.p",
        Reference,
        "impulse occurrence probability",
        system.noise.p
    ),
    float_key!(
        "noise.sbnr_db",
        Reference,
        "signal to background noise ratio, dB",
        system.noise.sbnr_db
    ),
    float_key!(
        "noise.sinr_db",
        Reference,
        "signal to impulsive noise ratio, dB (inf disables impulses)",
        system.noise.sinr_db
    ),
    float_key!(
        "fading.mu_db",
        Reference,
        "mean of 10 log10(h), dB, every link",
        fading.mu_db
    ),
    float_key!(
        "fading.sigma_db",
        Reference,
        "std of 10 log10(h), dB, every link",
        fading.sigma_db
    ),
    float_key!(
        "profile.static_tx",
        Assumed,
        "transmitter static power, W",
        profile.p_static_tx
    ),
    float_key!(
        "profile.static_rx",
        Assumed,
        "receiver static power, W",
        profile.p_static_rx
    ),
    float_key!(
        "profile.bandwidth",
        Assumed,
        "bandwidth, Hz",
        profile.bandwidth
    ),
    KeySpec {
        name: "profile.xi",
        origin: Origin::Assumed,
        help: "target spectral efficiency, bits/s/Hz",
        get: |c| format_value(c.profile.xi),
        set: |c, v| {
            let xi = parse_f64(v)?;
            c.profile.xi = xi;
            c.system.xi = xi;
            Ok(())
        },
    },
    float_key!(
        "outage_target",
        Reference,
        "target outage probability O*",
        outage_target
    ),
    float_key!(
        "distance",
        Tool,
        "source to destination distance, m",
        distance
    ),
    float_key!(
        "transmit_power",
        Assumed,
        "fixed transmit power for outage sweeps and simulation, W",
        transmit_power
    ),
    float_key!(
        "solver.tol",
        Tool,
        "stop when |O(P) - O*| is at most this",
        solver.tol
    ),
    parsed_key!(
        "solver.max_iterations",
        Tool,
        "bisection iteration cap",
        parse_int::<usize>,
        solver.max_iterations
    ),
    parsed_key!(
        "solver.max_expansions",
        Tool,
        "bracket halving/doubling cap",
        parse_int::<usize>,
        solver.max_expansions
    ),
    parsed_key!(
        "sweep.variable",
        Tool,
        "distance, static_power, outage_target or impulse_probability",
        |v: &str| v.parse::<SweepVariable>(),
        sweep.variable
    ),
    parsed_key!(
        "sweep.metric",
        Tool,
        "outage (fixed power) or energy (power solved for O*)",
        |v: &str| v.parse::<SweepMetric>(),
        sweep.metric
    ),
    float_key!("sweep.start", Tool, "first sweep value", sweep.start),
    float_key!("sweep.stop", Tool, "last sweep value", sweep.stop),
    parsed_key!(
        "sweep.steps",
        Tool,
        "number of sweep points",
        parse_int::<usize>,
        sweep.steps
    ),
    parsed_key!(
        "sweep.scale",
        Tool,
        "linear or log spacing",
        |v: &str| v.parse::<SweepScale>(),
        sweep.scale
    ),
    KeySpec {
        name: "sweep.schemes",
        origin: Origin::Tool,
        help: "comma list of sh, mhN, idf",
        get: |c| {
            c.sweep
                .schemes
                .iter()
                .map(scheme_key)
                .collect::<Vec<_>>()
                .join(", ")
        },
        set: |c, v| {
            c.sweep.schemes = parse_list(v, |s| s.parse::<Scheme>())?;
            Ok(())
        },
    },
    KeySpec {
        name: "sweep.impulse_families",
        origin: Origin::Assumed,
        help: "comma list of impulse probabilities to repeat the sweep for (empty: noise.p)",
        get: |c| {
            c.sweep
                .impulse_families
                .iter()
                .map(|p| format_value(*p))
                .collect::<Vec<_>>()
                .join(", ")
        },
        set: |c, v| {
            c.sweep.impulse_families = parse_list(v, parse_f64)?;
            Ok(())
        },
    },
    parsed_key!(
        "sim.validate",
        Tool,
        "add Monte Carlo columns to sweeps",
        parse_bool,
        sweep.validate_mc
    ),
    parsed_key!(
        "sim.trials",
        Tool,
        "Monte Carlo trials per estimate",
        parse_int::<u64>,
        sweep.sim.trials
    ),
    parsed_key!(
        "sim.seed",
        Tool,
        "Monte Carlo seed",
        parse_int::<u64>,
        sweep.sim.seed
    ),
    parsed_key!(
        "sim.workers",
        Tool,
        "Monte Carlo worker threads",
        parse_int::<usize>,
        sweep.sim.workers
    ),
];

/// Schema listing: every key with its default value, origin and meaning.
pub fn schema_dump() -> String {
    let defaults = ScenarioConfig::default();
    let mut out = String::from("# plc-relay scenario keys: key = default  # meaning [origin]\n");
    for k in KEYS {
        out.push_str(&format!(
            "{} = {}  # {} [{}]\n",
            k.name,
            (k.get)(&defaults),
            k.help,
            k.origin
        ));
    }
    out.push_str(&format!("# presets: {}\n", PRESETS.join(", ")));
    out
}

/// Builds a [`ScenarioConfig`] from layered sources, tracking where each
/// key was last set.
#[derive(Debug, Clone)]
pub struct ConfigLoader {
    config: ScenarioConfig,
    locations: BTreeMap<&'static str, String>,
}

impl ConfigLoader {
    pub fn new(base: ScenarioConfig) -> Self {
        ConfigLoader {
            config: base,
            locations: BTreeMap::new(),
        }
    }

    fn set(&mut self, key: &str, value: &str, location: String) -> Result<()> {
        let spec = KEYS
            .iter()
            .find(|k| k.name == key)
            .ok_or_else(|| Error::config(&location, format!("unknown key `{key}`")))?;
        (spec.set)(&mut self.config, value)
            .map_err(|msg| Error::config(&location, format!("key `{key}`: {msg}")))?;
        self.locations.insert(spec.name, location);
        Ok(())
    }

    /// Applies a config file's contents; `source` names it in errors.
    pub fn apply_text(&mut self, text: &str, source: &str) -> Result<()> {
        let mut seen = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let location = format!("{source}:{line_no}");
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::config(&location, format!("expected `key = value`, got `{line}`"))
            })?;
            let key = key.trim();
            if key.is_empty() {
                return Err(Error::config(&location, "missing key before `=`"));
            }
            if let Some(first) = seen.insert(key.to_string(), line_no) {
                return Err(Error::config(
                    &location,
                    format!("key `{key}` already set on line {first}"),
                ));
            }
            self.set(key, value.trim(), location)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        self.apply_text(&text, &path.display().to_string())
    }

    /// Applies one `key=value` override.
    pub fn apply_override(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment.split_once('=').ok_or_else(|| {
            Error::config("--set", format!("expected key=value, got `{assignment}`"))
        })?;
        let key = key.trim();
        self.set(key, value.trim(), format!("--set {key}"))
    }

    /// Validates the result, reporting the location of the offending key.
    pub fn finish(self) -> Result<ScenarioConfig> {
        match self.config.check() {
            Ok(()) => Ok(self.config),
            Err((key, msg)) => {
                let location = match self.locations.get(key) {
                    Some(loc) => format!("{loc}: key `{key}`"),
                    None => format!("key `{key}`"),
                };
                Err(Error::config(location, msg))
            }
        }
    }
}
