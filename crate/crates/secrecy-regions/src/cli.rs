//! Command-line front-end: parses channel/sweep configs, dispatches to the
//! evaluators, and emits regions and rates as CSV or JSON documents.
//!
//! Exit codes: 0 on success, 2 for configuration errors, 3 for runtime or
//! numeric failures.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dm::{self, AuxSizes, DmChannelConfig, LawSampler, SamplerMode};
use crate::error::Error;
use crate::gaussian::{self, ChannelConfig, DfMode, GaussianChannel, SweepSpec};
use crate::output::{OutputFormat, RegionDocument, ScalarDocument};
use crate::polytope::Region2D;
use crate::reductions::{self, CorrelatedGaussianInput};

/// Evaluate achievable secrecy rate regions of the two-user multiple access
/// channel with generalized feedback.
#[derive(Debug, Parser)]
#[command(name = "secrecy-regions", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace an achievable rate region of a Gaussian channel.
    Region(RegionArgs),
    /// Grid-maximize a secrecy sum rate over power splits.
    SumRate(SumRateArgs),
    /// Trace a secrecy region of a discrete memoryless channel.
    DmRegion(DmRegionArgs),
    /// Evaluate a no-feedback / relay / MISO special case.
    Reduce(ReduceArgs),
    /// Emit regular and secrecy regions for inter-user gains 0, 0.6 and 1.0
    /// on the reference channel (six files).
    Fig3(PresetArgs),
    /// Emit partial and full decode-and-forward secrecy regions for
    /// inter-user gains 0.2, 0.55 and 1.0 on the reference channel (six files).
    Fig4(PresetArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionMode {
    Partial,
    Full,
    Regular,
    #[value(name = "mac-wt")]
    MacWt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RateMode {
    Partial,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceMode {
    #[value(name = "mac-wt")]
    MacWt,
    Relay,
    Miso,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, value_enum)]
    pub mode: RegionMode,
    /// Gaussian channel JSON document.
    #[arg(long)]
    pub channel: PathBuf,
    /// Grid points per power-fraction axis.
    #[arg(long)]
    pub steps: Option<usize>,
    /// Weight directions per polytope trace.
    #[arg(long)]
    pub angles: Option<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct SumRateArgs {
    #[arg(long, value_enum)]
    pub mode: RateMode,
    #[arg(long)]
    pub channel: PathBuf,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct DmRegionArgs {
    #[arg(long, value_enum)]
    pub mode: RateMode,
    /// Discrete channel JSON document (alphabet sizes + transition table).
    #[arg(long)]
    pub channel: PathBuf,
    /// Number of sampled input laws.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub mode: ReduceMode,
    #[arg(long)]
    pub channel: PathBuf,
    /// Input correlation for the relay and MISO cases (overrides the file).
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub angles: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct PresetArgs {
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub angles: Option<usize>,
    /// Output directory.
    #[arg(long, default_value = "regions-out")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

/// A failed run, carrying the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad configuration (exit 2).
    Config(String),
    /// Runtime, numeric, or output failure (exit 3).
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Runtime(m) => m,
        }
    }
}

fn config_err(e: Error) -> CliError {
    CliError::Config(e.to_string())
}

fn runtime_err(e: Error) -> CliError {
    match e {
        Error::Validation(_) | Error::Usage(_) | Error::Domain(_) | Error::Parse(_) => {
            CliError::Config(e.to_string())
        }
        other => CliError::Runtime(other.to_string()),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("channel file {}: {e}", path.display())))
}

fn load_gaussian(path: &Path) -> CliResult<ChannelConfig> {
    ChannelConfig::from_json(&read_file(path)?).map_err(config_err)
}

fn emit(out: Option<&Path>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn tool_meta() -> (String, String) {
    (
        "tool".to_owned(),
        format!("secrecy-regions v{}", env!("CARGO_PKG_VERSION")),
    )
}

fn channel_echo(ch: &GaussianChannel) -> (String, String) {
    (
        "channel".to_owned(),
        serde_json::to_string(ch).expect("channel echo"),
    )
}

fn region_doc(
    result: &str,
    ch: &GaussianChannel,
    spec: &SweepSpec,
    region: &Region2D,
) -> RegionDocument {
    RegionDocument::new(
        [
            tool_meta(),
            ("result".to_owned(), result.to_owned()),
            channel_echo(ch),
            ("steps".to_owned(), spec.steps_per_fraction.to_string()),
            ("angles".to_owned(), spec.angles.to_string()),
        ],
        region,
    )
}

/// Executes one parsed invocation.
pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Region(args) => run_region(args),
        Command::SumRate(args) => run_sum_rate(args),
        Command::DmRegion(args) => run_dm_region(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Fig3(args) => run_fig3(args),
        Command::Fig4(args) => run_fig4(args),
    }
}

fn run_region(args: RegionArgs) -> CliResult<()> {
    let cfg = load_gaussian(&args.channel)?;
    let ch = cfg.channel().map_err(config_err)?;
    let spec = cfg.sweep(args.steps, args.angles).map_err(config_err)?;
    let (result, region) = match args.mode {
        RegionMode::Partial => (
            "partial-df-secrecy-region",
            gaussian::region_partial(&ch, &spec).map_err(runtime_err)?,
        ),
        RegionMode::Full => (
            "full-df-secrecy-region",
            gaussian::region_full(&ch, &spec).map_err(runtime_err)?,
        ),
        RegionMode::Regular => (
            "regular-rate-region",
            gaussian::regular_region(&ch, &spec).map_err(runtime_err)?,
        ),
        RegionMode::MacWt => (
            "mac-wiretap-region",
            reductions::mac_wiretap_region(&ch, &spec).map_err(runtime_err)?,
        ),
    };
    let doc = region_doc(result, &ch, &spec, &region);
    emit(args.out.as_deref(), &doc.render(args.format.into()))
}

fn run_sum_rate(args: SumRateArgs) -> CliResult<()> {
    let cfg = load_gaussian(&args.channel)?;
    let ch = cfg.channel().map_err(config_err)?;
    let spec = cfg.sweep(args.steps, None).map_err(config_err)?;
    let (result, mode) = match args.mode {
        RateMode::Partial => ("partial-df-max-sum-rate", DfMode::Partial),
        RateMode::Full => ("full-df-max-sum-rate", DfMode::Full),
    };
    let (value, split) = gaussian::max_sum_rate(&ch, mode, &spec).map_err(runtime_err)?;
    let doc = ScalarDocument::new(
        [
            tool_meta(),
            ("result".to_owned(), result.to_owned()),
            channel_echo(&ch),
            ("steps".to_owned(), spec.steps_per_fraction.to_string()),
        ],
        value,
        Some([
            split.pu1, split.p12, split.p10, split.pu2, split.p21, split.p20,
        ]),
    );
    emit(args.out.as_deref(), &doc.render(args.format.into()))
}

fn run_dm_region(args: DmRegionArgs) -> CliResult<()> {
    let cfg = DmChannelConfig::from_json(&read_file(&args.channel)?).map_err(config_err)?;
    let ch = cfg.channel().map_err(config_err)?;
    let sampler = LawSampler {
        mode: SamplerMode::Random,
        samples: args.samples,
        seed: args.seed,
    };
    let aux = AuxSizes::default();
    let (result, region, aux_echo) = match args.mode {
        RateMode::Partial => (
            "dm-partial-df-secrecy-region",
            dm::region_partial_dm(&ch, &sampler, aux).map_err(runtime_err)?,
            format!("u={},v1={},v2={}", aux.u, aux.v1, aux.v2),
        ),
        RateMode::Full => (
            "dm-full-df-secrecy-region",
            dm::region_full_dm(&ch, &sampler, aux.u).map_err(runtime_err)?,
            format!("u={}", aux.u),
        ),
    };
    let (nx1, nx2, ny1, ny2, ny, nz) = ch.sizes();
    let doc = RegionDocument::new(
        [
            tool_meta(),
            ("result".to_owned(), result.to_owned()),
            (
                "channel".to_owned(),
                format!(
                    r#"{{"x1":{nx1},"x2":{nx2},"y1":{ny1},"y2":{ny2},"y":{ny},"z":{nz}}}"#
                ),
            ),
            ("aux".to_owned(), aux_echo),
            ("samples".to_owned(), sampler.samples.to_string()),
            ("seed".to_owned(), sampler.seed.to_string()),
        ],
        &region,
    );
    emit(args.out.as_deref(), &doc.render(args.format.into()))
}

fn run_reduce(args: ReduceArgs) -> CliResult<()> {
    let cfg = load_gaussian(&args.channel)?;
    let ch = cfg.channel().map_err(config_err)?;
    let rho = args.rho.or(cfg.rho).unwrap_or(0.0);
    match args.mode {
        ReduceMode::MacWt => {
            let spec = cfg.sweep(args.steps, args.angles).map_err(config_err)?;
            let region = reductions::mac_wiretap_region(&ch, &spec).map_err(runtime_err)?;
            let doc = region_doc("mac-wiretap-region", &ch, &spec, &region);
            emit(args.out.as_deref(), &doc.render(args.format.into()))
        }
        ReduceMode::Relay | ReduceMode::Miso => {
            let inp =
                CorrelatedGaussianInput::new(ch.p1, ch.p2, rho).map_err(config_err)?;
            let (result, value) = match args.mode {
                ReduceMode::Relay => (
                    "relay-eavesdropper-rate",
                    reductions::relay_eavesdropper_rate(&ch, &inp).map_err(runtime_err)?,
                ),
                ReduceMode::Miso => (
                    "miso-wiretap-sum-rate",
                    reductions::miso_sum_rate(&ch, &inp).map_err(runtime_err)?,
                ),
                ReduceMode::MacWt => unreachable!(),
            };
            let doc = ScalarDocument::new(
                [
                    tool_meta(),
                    ("result".to_owned(), result.to_owned()),
                    channel_echo(&ch),
                    ("rho".to_owned(), format!("{rho}")),
                ],
                value,
                None,
            );
            emit(args.out.as_deref(), &doc.render(args.format.into()))
        }
    }
}

/// Reference channel of the parameter studies.
fn study_channel(hc: f64) -> GaussianChannel {
    GaussianChannel::new(0.6, 0.6, 0.2, 0.1, hc, hc, 1.0, 1.0).expect("study channel")
}

fn preset_spec(args: &PresetArgs) -> CliResult<SweepSpec> {
    let d = SweepSpec::default();
    SweepSpec::new(
        args.steps.unwrap_or(d.steps_per_fraction),
        args.angles.unwrap_or(d.angles),
    )
    .map_err(config_err)
}

fn write_preset_file(
    dir: &Path,
    stem: &str,
    format: FormatArg,
    doc: &RegionDocument,
) -> CliResult<()> {
    let ext = match format {
        FormatArg::Csv => "csv",
        FormatArg::Json => "json",
    };
    let path = dir.join(format!("{stem}.{ext}"));
    emit(Some(&path), &doc.render(format.into()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn run_fig3(args: PresetArgs) -> CliResult<()> {
    let spec = preset_spec(&args)?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Runtime(format!("creating {}: {e}", args.out.display())))?;
    for hc in [0.0, 0.6, 1.0] {
        let ch = study_channel(hc);
        let regular = gaussian::regular_region(&ch, &spec).map_err(runtime_err)?;
        let secrecy = gaussian::region_partial(&ch, &spec).map_err(runtime_err)?;
        write_preset_file(
            &args.out,
            &format!("fig3_regular_h12_{hc:.2}"),
            args.format,
            &region_doc("regular-rate-region", &ch, &spec, &regular),
        )?;
        write_preset_file(
            &args.out,
            &format!("fig3_secrecy_h12_{hc:.2}"),
            args.format,
            &region_doc("partial-df-secrecy-region", &ch, &spec, &secrecy),
        )?;
    }
    Ok(())
}

fn run_fig4(args: PresetArgs) -> CliResult<()> {
    let spec = preset_spec(&args)?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Runtime(format!("creating {}: {e}", args.out.display())))?;
    for hc in [0.2, 0.55, 1.0] {
        let ch = study_channel(hc);
        let partial = gaussian::region_partial(&ch, &spec).map_err(runtime_err)?;
        let full = gaussian::region_full(&ch, &spec).map_err(runtime_err)?;
        write_preset_file(
            &args.out,
            &format!("fig4_partial_h12_{hc:.2}"),
            args.format,
            &region_doc("partial-df-secrecy-region", &ch, &spec, &partial),
        )?;
        write_preset_file(
            &args.out,
            &format!("fig4_full_h12_{hc:.2}"),
            args.format,
            &region_doc("full-df-secrecy-region", &ch, &spec, &full),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Config("x".into()).exit_code(), 2);
        assert_eq!(CliError::Runtime("x".into()).exit_code(), 3);
    }

    #[test]
    fn missing_channel_file_is_a_config_error() {
        let args = RegionArgs {
            mode: RegionMode::Partial,
            channel: PathBuf::from("/nonexistent/channel.json"),
            steps: Some(3),
            angles: Some(5),
            out: None,
            format: FormatArg::Csv,
        };
        match run_region(args) {
            Err(CliError::Config(msg)) => assert!(msg.contains("channel")),
            other => panic!("expected config error, got {other:?}"),
        }
    }
}
