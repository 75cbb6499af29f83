//! Command-line front end: single-point bounds, sweeps, figure presets and
//! the aperture-ratio threshold, written as CSV or JSON.
//!
//! Units at the boundary are cm for radii, km for distance, nm for
//! wavelength, Hz for frequency and K for temperature.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bounds::{m_threshold, m_threshold_residual};
use crate::channel::PhysicalConstants;
use crate::error::Error;
use crate::sweep::{
    evaluate_point, figure_preset, run_sweep, MuStar, PointResult, PowerSetting, ScenarioParams, Spacing,
    SweepRow, SweepSpec, SweepVariable, DEFAULT_POINTS,
};

/// Exact CSV column header.
pub const CSV_HEADER: &str = "x,eta,kappa,n_e,k_dr,k_rr,k_best,k_upper,mu_star_dr,mu_star_rr,flags";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fso-wiretap",
    version,
    about = "Secret-key-rate bounds for a free-space optical wiretap channel with a finite-aperture eavesdropper"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bounds at a single scenario.
    Bounds {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One-dimensional sweep around a scenario.
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a named preset sweep (fig2 to fig12).
    Figure {
        id: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Aperture-ratio threshold below which direct reconciliation wins.
    Mth {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct ScenarioArgs {
    /// Carrier wavelength in nm [default: 1550].
    #[arg(long, conflicts_with = "freq_hz", allow_negative_numbers = true)]
    lambda_nm: Option<f64>,
    /// Carrier frequency in Hz.
    #[arg(long, allow_negative_numbers = true)]
    freq_hz: Option<f64>,
    /// Background temperature in K.
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    temp_k: f64,
    /// Beam waist radius in cm.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    w0_cm: f64,
    /// Alice's aperture radius in cm.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    ra_cm: f64,
    /// Bob's aperture radius in cm.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    rb_cm: f64,
    /// Eve's aperture radius in cm.
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    re_cm: f64,
    /// Link distance in km.
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    distance_km: f64,
    /// Reconciliation efficiency in (0, 1].
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    beta: f64,
    /// Mean photon number, or `opt` to optimise it.
    #[arg(long, default_value = "opt", allow_negative_numbers = true)]
    mu: String,
}

#[derive(Debug, Args)]
struct RangeArgs {
    /// Swept variable.
    #[arg(long)]
    var: String,
    /// Lower end of the range, in the variable's boundary unit.
    #[arg(long, allow_negative_numbers = true)]
    min: f64,
    /// Upper end of the range.
    #[arg(long, allow_negative_numbers = true)]
    max: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    count: usize,
    /// Logarithmic spacing.
    #[arg(long)]
    log: bool,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// File of `key=value` lines using the flag names; flags on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

const SCENARIO_KEYS: [&str; 10] = [
    "lambda-nm",
    "freq-hz",
    "temp-k",
    "w0-cm",
    "ra-cm",
    "rb-cm",
    "re-cm",
    "distance-km",
    "beta",
    "mu",
];
const RANGE_KEYS: [&str; 5] = ["var", "min", "max", "count", "log"];
const OUTPUT_KEYS: [&str; 2] = ["out", "format"];

fn keys_for(subcommand: &str) -> Vec<&'static str> {
    let mut keys = OUTPUT_KEYS.to_vec();
    if matches!(subcommand, "bounds" | "sweep") {
        keys.extend(SCENARIO_KEYS);
    }
    if subcommand == "sweep" {
        keys.extend(RANGE_KEYS);
    }
    keys
}

fn parse_config(text: &str) -> Result<Vec<(String, String)>, Failure> {
    let known: Vec<&str> = SCENARIO_KEYS
        .iter()
        .chain(&RANGE_KEYS)
        .chain(&OUTPUT_KEYS)
        .copied()
        .collect();
    let mut entries = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("config line {}: expected key=value", n + 1)))?;
        let key = key.trim().replace('_', "-");
        if !known.contains(&key.as_str()) {
            return Err(Failure::usage(format!("config line {}: unknown key `{key}`", n + 1)));
        }
        entries.push((key, value.trim().to_string()));
    }
    Ok(entries)
}

fn flag_given(args: &[String], key: &str) -> bool {
    let long = format!("--{key}");
    let prefix = format!("--{key}=");
    args.iter().any(|a| *a == long || a.starts_with(&prefix))
}

/// Appends config-file entries for every flag absent from the command line.
fn merge_config(args: Vec<String>) -> Result<Vec<String>, Failure> {
    let mut path = None;
    for (i, a) in args.iter().enumerate() {
        if a == "--config" {
            path = args.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else { return Ok(args) };
    let Some(subcommand) = args
        .iter()
        .skip(1)
        .find(|a| matches!(a.as_str(), "bounds" | "sweep" | "figure" | "mth"))
        .cloned()
    else {
        return Ok(args);
    };

    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::usage(format!("cannot read config file `{path}`: {e}")))?;
    let applicable = keys_for(&subcommand);
    let mut merged = args.clone();
    for (key, value) in parse_config(&text)? {
        if !applicable.contains(&key.as_str()) || flag_given(&args, &key) {
            continue;
        }
        let wavelength_pair = matches!(key.as_str(), "lambda-nm" | "freq-hz");
        if wavelength_pair && (flag_given(&args, "lambda-nm") || flag_given(&args, "freq-hz")) {
            continue;
        }
        if key == "log" {
            match value.to_ascii_lowercase().as_str() {
                "true" | "1" | "yes" => merged.push("--log".into()),
                "false" | "0" | "no" => {}
                _ => return Err(Failure::usage(format!("config key `log`: expected true or false, got `{value}`"))),
            }
            continue;
        }
        merged.push(format!("--{key}={value}"));
    }
    Ok(merged)
}

fn flag_for(param: &str) -> &'static str {
    match param {
        "waist_radius" => "--w0-cm",
        "wavelength" => "--lambda-nm",
        "frequency" => "--freq-hz",
        "r_alice" => "--ra-cm",
        "r_bob" => "--rb-cm",
        "r_eve" => "--re-cm",
        "distance" => "--distance-km",
        "temperature" => "--temp-k",
        "beta" => "--beta",
        "mu" => "--mu",
        _ => "input",
    }
}

fn check(flag: &str, value: f64, ok: bool, rule: &str) -> Result<(), Failure> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Failure::usage(format!("invalid value for {flag}: {value} ({rule})")))
    }
}

fn scenario_from(args: &ScenarioArgs) -> Result<ScenarioParams, Failure> {
    let cm = 1e-2;
    check("--temp-k", args.temp_k, args.temp_k > 0.0, "must be positive")?;
    check("--w0-cm", args.w0_cm, args.w0_cm > 0.0, "must be positive")?;
    check("--ra-cm", args.ra_cm, args.ra_cm > 0.0, "must be positive")?;
    check("--rb-cm", args.rb_cm, args.rb_cm > 0.0, "must be positive")?;
    check("--re-cm", args.re_cm, args.re_cm > 0.0, "must be positive")?;
    check("--distance-km", args.distance_km, args.distance_km >= 0.0, "must be non-negative")?;
    check("--beta", args.beta, args.beta > 0.0 && args.beta <= 1.0, "must lie in (0, 1]")?;
    let wavelength = match (args.lambda_nm, args.freq_hz) {
        (_, Some(f)) => {
            check("--freq-hz", f, f > 0.0, "must be positive")?;
            PhysicalConstants::LIGHT_SPEED / f
        }
        (Some(nm), None) => {
            check("--lambda-nm", nm, nm > 0.0, "must be positive")?;
            nm * 1e-9
        }
        (None, None) => 1550e-9,
    };
    let power = if args.mu.eq_ignore_ascii_case("opt") {
        PowerSetting::Optimize
    } else {
        let mu: f64 = args
            .mu
            .parse()
            .map_err(|_| Failure::usage(format!("invalid value for --mu: `{}` (expected a number or `opt`)", args.mu)))?;
        check("--mu", mu, mu >= 0.0, "must be non-negative")?;
        PowerSetting::Fixed(mu)
    };
    Ok(ScenarioParams {
        wavelength,
        temperature: args.temp_k,
        waist_radius: args.w0_cm * cm,
        r_alice: args.ra_cm * cm,
        r_bob: args.rb_cm * cm,
        r_eve: args.re_cm * cm,
        distance: args.distance_km * 1e3,
        beta: args.beta,
        power,
    })
}

/// Boundary unit of a sweep variable and its factor to SI.
pub fn boundary_unit(variable: SweepVariable) -> (&'static str, f64) {
    match variable {
        SweepVariable::Distance => ("km", 1e3),
        SweepVariable::Frequency => ("Hz", 1.0),
        SweepVariable::EveRadius | SweepVariable::WaistRadius | SweepVariable::BobRadius => ("cm", 1e-2),
        SweepVariable::InputPower => ("photons", 1.0),
    }
}

fn failure_from(err: &Error) -> Failure {
    match err {
        Error::InvalidParameter { name, value, reason } => Failure::usage(format!(
            "invalid value for {}: {value} ({reason})",
            flag_for(name)
        )),
        Error::Spec(msg) => Failure::usage(msg.clone()),
        other => Failure::internal(other.to_string()),
    }
}

fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn mu_text(mu: MuStar) -> String {
    match mu {
        MuStar::Finite(m) => sci(m),
        MuStar::Unbounded => "unbounded".into(),
        MuStar::NoKey => "none".into(),
    }
}

fn flags_text(result: &Result<PointResult, Error>) -> String {
    match result {
        Err(_) => "ERR".into(),
        Ok(p) => {
            let mut tokens = Vec::new();
            if p.bound.dr_clamped {
                tokens.push("clamp_dr");
            }
            if p.bound.rr_clamped {
                tokens.push("clamp_rr");
            }
            if tokens.is_empty() {
                "-".into()
            } else {
                tokens.join("|")
            }
        }
    }
}

fn csv_row(x: f64, result: &Result<PointResult, Error>) -> String {
    let flags = flags_text(result);
    match result {
        Ok(p) => {
            let c = &p.channel;
            let b = &p.bound;
            format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                sci(x),
                sci(c.eta),
                sci(c.kappa),
                sci(c.n_e),
                sci(b.k_dr),
                sci(b.k_rr),
                sci(b.k_best),
                sci(b.k_upper),
                mu_text(p.mu_star_dr),
                mu_text(p.mu_star_rr),
                flags
            )
        }
        Err(_) => {
            let nan = sci(f64::NAN);
            let mut row = sci(x);
            for _ in 0..9 {
                row.push(',');
                row.push_str(&nan);
            }
            row.push(',');
            row.push_str(&flags);
            row
        }
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

fn mu_json(mu: MuStar) -> Value {
    match mu {
        MuStar::Finite(m) => num(m),
        MuStar::Unbounded => Value::String("unbounded".into()),
        MuStar::NoKey => Value::String("none".into()),
    }
}

fn json_row(x: f64, result: &Result<PointResult, Error>) -> Value {
    let mut m = Map::new();
    m.insert("x".into(), num(x));
    match result {
        Ok(p) => {
            m.insert("eta".into(), num(p.channel.eta));
            m.insert("kappa".into(), num(p.channel.kappa));
            m.insert("n_e".into(), num(p.channel.n_e));
            m.insert("k_dr".into(), num(p.bound.k_dr));
            m.insert("k_rr".into(), num(p.bound.k_rr));
            m.insert("k_best".into(), num(p.bound.k_best));
            m.insert("k_upper".into(), num(p.bound.k_upper));
            m.insert("mu_star_dr".into(), mu_json(p.mu_star_dr));
            m.insert("mu_star_rr".into(), mu_json(p.mu_star_rr));
        }
        Err(_) => {
            for key in [
                "eta", "kappa", "n_e", "k_dr", "k_rr", "k_best", "k_upper", "mu_star_dr", "mu_star_rr",
            ] {
                m.insert(key.into(), Value::Null);
            }
        }
    }
    m.insert("flags".into(), Value::String(flags_text(result)));
    Value::Object(m)
}

fn scenario_metadata(p: &ScenarioParams) -> Vec<String> {
    let mu = match p.power {
        PowerSetting::Fixed(mu) => format!("{mu}"),
        PowerSetting::Optimize => "opt".into(),
    };
    vec![
        format!("lambda_nm={}", p.wavelength * 1e9),
        format!("temp_k={}", p.temperature),
        format!("w0_cm={}", p.waist_radius * 1e2),
        format!("ra_cm={}", p.r_alice * 1e2),
        format!("rb_cm={}", p.r_bob * 1e2),
        format!("re_cm={}", p.r_eve * 1e2),
        format!("distance_km={}", p.distance * 1e-3),
        format!("beta={}", p.beta),
        format!("mu={mu}"),
    ]
}

/// Labelled block of rows with `x` in boundary units.
struct Block {
    label: Option<String>,
    metadata: Vec<String>,
    rows: Vec<(f64, Result<PointResult, Error>)>,
}

fn to_block(label: Option<String>, spec: &SweepSpec, rows: Vec<SweepRow>) -> Block {
    let (_, factor) = boundary_unit(spec.variable);
    Block {
        label,
        metadata: scenario_metadata(&spec.fixed),
        rows: rows.into_iter().map(|r| (r.x / factor, r.result)).collect(),
    }
}

fn render_csv(header: &[String], blocks: &[Block]) -> String {
    let mut s = String::new();
    writeln!(s, "# fso-wiretap {}", env!("CARGO_PKG_VERSION")).unwrap();
    for line in header {
        writeln!(s, "# {line}").unwrap();
    }
    if blocks.len() == 1 {
        for line in &blocks[0].metadata {
            writeln!(s, "# {line}").unwrap();
        }
    }
    writeln!(s, "{CSV_HEADER}").unwrap();
    for (i, block) in blocks.iter().enumerate() {
        if let Some(label) = &block.label {
            writeln!(s, "# series {i}: {label}; {}", block.metadata.join(" ")).unwrap();
        }
        for (x, r) in &block.rows {
            writeln!(s, "{}", csv_row(*x, r)).unwrap();
        }
    }
    s
}

fn render_json(blocks: &[Block], grouped: bool) -> String {
    let value = if grouped {
        Value::Array(
            blocks
                .iter()
                .map(|b| {
                    json!({
                        "series": b.label.clone().unwrap_or_default(),
                        "rows": b.rows.iter().map(|(x, r)| json_row(*x, r)).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    } else {
        Value::Array(blocks.iter().flat_map(|b| b.rows.iter().map(|(x, r)| json_row(*x, r))).collect())
    };
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialise");
    s.push('\n');
    s
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::internal(format!("cannot write output: {e}"))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::internal(format!("cannot write `{}`: {e}", path.display())))
}

fn cmd_bounds(scenario: &ScenarioArgs, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = scenario_from(scenario)?;
    let result = evaluate_point(&params);
    if let Err(e) = &result {
        return Err(failure_from(e));
    }
    let block = Block {
        label: None,
        metadata: scenario_metadata(&params),
        rows: vec![(params.distance * 1e-3, result)],
    };
    let text = match output.format {
        Format::Csv => render_csv(&["command=bounds".into(), "x_unit=km".into()], &[block]),
        Format::Json => render_json(&[block], false),
    };
    emit(output, &text, stdout)
}

fn cmd_sweep(
    scenario: &ScenarioArgs,
    range: &RangeArgs,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let fixed = scenario_from(scenario)?;
    let variable = SweepVariable::parse(&range.var).ok_or_else(|| {
        let names: Vec<&str> = SweepVariable::ALL.iter().map(|v| v.name()).collect();
        Failure::usage(format!(
            "invalid value for --var: `{}` (expected one of {})",
            range.var,
            names.join(", ")
        ))
    })?;
    let (unit, factor) = boundary_unit(variable);
    let spec = SweepSpec {
        variable,
        min: range.min * factor,
        max: range.max * factor,
        count: range.count,
        spacing: if range.log { Spacing::Log } else { Spacing::Linear },
        fixed,
    };
    if !(range.min < range.max) {
        return Err(Failure::usage(format!(
            "invalid range for --min/--max: need min < max, got [{}, {}]",
            range.min, range.max
        )));
    }
    let rows = run_sweep(&spec).map_err(|e| failure_from(&e))?;
    let block = to_block(None, &spec, rows);
    let text = match output.format {
        Format::Csv => render_csv(
            &[
                "command=sweep".into(),
                format!("variable={}", variable.name()),
                format!("x_unit={unit}"),
            ],
            &[block],
        ),
        Format::Json => render_json(&[block], false),
    };
    emit(output, &text, stdout)
}

fn cmd_figure(id: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let preset = figure_preset(id).map_err(|e| failure_from(&e))?;
    let variable = preset.series[0].spec.variable;
    let (unit, _) = boundary_unit(variable);
    let mut blocks = Vec::with_capacity(preset.series.len());
    for series in &preset.series {
        let rows = run_sweep(&series.spec).map_err(|e| failure_from(&e))?;
        blocks.push(to_block(Some(series.label.clone()), &series.spec, rows));
    }
    let text = match output.format {
        Format::Csv => render_csv(
            &[
                format!("figure={}", preset.id),
                format!("description={}", preset.description),
                format!("variable={}", variable.name()),
                format!("x_unit={unit}"),
            ],
            &blocks,
        ),
        Format::Json => render_json(&blocks, true),
    };
    emit(output, &text, stdout)
}

fn cmd_mth(output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let m = m_threshold();
    let residual = m_threshold_residual(m);
    let text = match output.format {
        Format::Csv => format!("m_th={m:.10}\nresidual={residual:.3e}\n"),
        Format::Json => format!("{{\"m_th\": {m:.10}, \"residual\": {residual:.3e}}}\n"),
    };
    emit(output, &text, stdout)
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<String> = args
        .into_iter()
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    let outcome = merge_config(args).and_then(|args| {
        let cli = match Cli::try_parse_from(&args) {
            Ok(cli) => cli,
            Err(e) => {
                let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
                let rendered = e.render().to_string();
                return Err(Failure { code, message: rendered });
            }
        };
        match &cli.command {
            Command::Bounds { scenario, output } => cmd_bounds(scenario, output, stdout),
            Command::Sweep { scenario, range, output } => cmd_sweep(scenario, range, output, stdout),
            Command::Figure { id, output } => cmd_figure(id, output, stdout),
            Command::Mth { output } => cmd_mth(output, stdout),
        }
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) if f.code == EXIT_OK => {
            let _ = stdout.write_all(f.message.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let msg = f.message.trim_end();
            let _ = if msg.starts_with("error:") {
                writeln!(stderr, "{msg}")
            } else {
                writeln!(stderr, "error: {msg}")
            };
            f.code
        }
    }
}
