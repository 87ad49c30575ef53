use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use plc_relay::config::{schema_dump, ConfigLoader, ScenarioConfig, SweepMetric};
use plc_relay::numfmt::g12;
use plc_relay::sweep::run_sweep;
use plc_relay::{
    scheme_energy, scheme_outage, simulate_scheme, solve_scheme, Error, Result, Scheme, Topology,
};

#[derive(Parser)]
#[command(
    name = "plc-relay",
    version,
    about = "Outage, optimal power and energy per bit of PLC relaying schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outage probability at the configured transmit power.
    Outage(PointArgs),
    /// Smallest transmit power meeting the outage target.
    Power(PointArgs),
    /// Energy per bit at the optimal transmit power.
    Energy(PointArgs),
    /// Monte Carlo outage estimate next to the analytic value.
    Simulate(PointArgs),
    /// Run the configured sweep and write CSV.
    Sweep(SweepArgs),
    /// Print every config key with its default.
    Schema,
}

#[derive(Args)]
struct ConfigArgs {
    /// Scenario file of `key = value` lines.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override one key, e.g. `--set noise.p=0.05`. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Start from a figure preset instead of the defaults.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Schemes to evaluate (sh, mhN, idf); defaults to `sweep.schemes`.
    #[arg(long, value_delimiter = ',')]
    scheme: Vec<Scheme>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// CSV destination; standard output when absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl ConfigArgs {
    fn load(&self) -> Result<ScenarioConfig> {
        let base = match &self.preset {
            Some(name) => ScenarioConfig::preset(name)?,
            None => ScenarioConfig::default(),
        };
        let mut loader = ConfigLoader::new(base);
        if let Some(path) = &self.config {
            loader.apply_file(path)?;
        }
        for o in &self.overrides {
            loader.apply_override(o)?;
        }
        loader.finish()
    }
}

impl PointArgs {
    fn load(&self) -> Result<(ScenarioConfig, Vec<Scheme>)> {
        let config = self.config.load()?;
        let schemes = if self.scheme.is_empty() {
            config.sweep.schemes.clone()
        } else {
            self.scheme.clone()
        };
        Ok((config, schemes))
    }
}

fn outage(args: &PointArgs) -> Result<()> {
    let (c, schemes) = args.load()?;
    println!(
        "distance {} m, transmit power {} W",
        g12(c.distance),
        g12(c.transmit_power)
    );
    for scheme in schemes {
        let topo = Topology::for_scheme(scheme, c.distance, c.fading)?;
        let o = scheme_outage(scheme, c.transmit_power, &topo, &c.system)?;
        let links: Vec<String> = o.per_link.iter().map(|x| format!("{x:.6e}")).collect();
        print!(
            "{:<14} outage {:.6e}  links [{}]",
            scheme.to_string(),
            o.end_to_end,
            links.join(", ")
        );
        match o.direct_link {
            Some(d) => println!("  direct {d:.6e}"),
            None => println!(),
        }
    }
    Ok(())
}

fn power(args: &PointArgs) -> Result<()> {
    let (c, schemes) = args.load()?;
    println!(
        "distance {} m, outage target {}",
        g12(c.distance),
        g12(c.outage_target)
    );
    for scheme in schemes {
        let topo = Topology::for_scheme(scheme, c.distance, c.fading)?;
        let sol = solve_scheme(scheme, c.outage_target, &topo, &c.system, &c.solver)?;
        println!(
            "{:<14} power {:.9e} W  residual {:.2e}  {} ({} iterations, bracket [{:.3e}, {:.3e}])",
            scheme.to_string(),
            sol.power,
            sol.residual,
            sol.method,
            sol.iterations,
            sol.bracket.0,
            sol.bracket.1
        );
    }
    Ok(())
}

fn energy(args: &PointArgs) -> Result<()> {
    let (c, schemes) = args.load()?;
    println!(
        "distance {} m, outage target {}, static tx/rx {}/{} W, bit rate {} bit/s",
        g12(c.distance),
        g12(c.outage_target),
        g12(c.profile.p_static_tx),
        g12(c.profile.p_static_rx),
        g12(c.profile.bit_rate())
    );
    for scheme in schemes {
        let topo = Topology::for_scheme(scheme, c.distance, c.fading)?;
        let sol = solve_scheme(scheme, c.outage_target, &topo, &c.system, &c.solver)?;
        let o = scheme_outage(scheme, sol.power, &topo, &c.system)?;
        let e = scheme_energy(scheme, sol.power, &o, &c.profile)?;
        let terms: Vec<String> = e
            .terms
            .iter()
            .map(|t| format!("{:.4e} x {:.4e}", t.weight, t.energy))
            .collect();
        println!(
            "{:<14} energy {:.6e} J/bit  power {:.6e} W  terms [{}]",
            scheme.to_string(),
            e.energy_per_bit,
            sol.power,
            terms.join(", ")
        );
    }
    Ok(())
}

fn simulate(args: &PointArgs) -> Result<()> {
    let (c, schemes) = args.load()?;
    let sim = &c.sweep.sim;
    println!(
        "distance {} m, transmit power {} W, {} trials, seed {}, {} workers",
        g12(c.distance),
        g12(c.transmit_power),
        sim.trials,
        sim.seed,
        sim.workers
    );
    for scheme in schemes {
        let topo = Topology::for_scheme(scheme, c.distance, c.fading)?;
        let analytic = scheme_outage(scheme, c.transmit_power, &topo, &c.system)?.end_to_end;
        let est = simulate_scheme(scheme, c.transmit_power, &topo, &c.system, sim)?;
        println!(
            "{:<14} analytic {:.6e}  simulated {:.6e} +/- {:.2e} (99%)  {}",
            scheme.to_string(),
            analytic,
            est.p_hat,
            est.ci99_half_width,
            if est.agrees_with(analytic) {
                "agree"
            } else {
                "DISAGREE"
            }
        );
    }
    Ok(())
}

fn sweep(args: &SweepArgs) -> Result<()> {
    let c = args.config.load()?;
    let out = run_sweep(&c)?;
    match &args.out {
        Some(path) => {
            let mut buf = Vec::new();
            out.write_csv(&mut buf)?;
            fs::write(path, buf)?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            out.write_csv(&mut lock)?;
            lock.flush()?;
        }
    }
    eprint!("{}", out.summary());
    if c.sweep.metric == SweepMetric::Energy {
        if let Some(check) = out.idf_threshold_check() {
            if !check.passed() {
                eprintln!(
                    "warning: idf energy is not threshold-independent under this configuration"
                );
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Outage(a) => outage(&a),
        Command::Power(a) => power(&a),
        Command::Energy(a) => energy(&a),
        Command::Simulate(a) => simulate(&a),
        Command::Sweep(a) => sweep(&a),
        Command::Schema => {
            print!("{}", schema_dump());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            report_exit(&e)
        }
    }
}

fn report_exit(e: &Error) -> ExitCode {
    ExitCode::from(e.exit_code() as u8)
}
