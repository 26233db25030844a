use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scforge::io::alist::to_alist;
use scforge::io::atomic_write;
use scforge::io::config::{Mode, PartitionSource, RunConfig};
use scforge::io::report::DesignReport;
use scforge::io::run::{code_from_report, run, write_artifacts};
use scforge::{CodeParams, Error};

#[derive(Parser)]
#[command(name = "scforge", version, about = "Design SC LDPC codes for partial-response channels")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the optimal-overlap partition problem.
    Oo(RunArgs),
    /// Optimise circulant powers for a fixed partition.
    Cpo(RunArgs),
    /// OO partition followed by CPO.
    Full(RunArgs),
    /// Closed-form pattern census of a partition.
    Census(RunArgs),
    /// Uncoupled baseline with SCB powers.
    Uncoupled(RunArgs),
    /// Best cutting-vector partition with SCB powers.
    CvBaseline(RunArgs),
    /// Re-export the code or report embedded in a JSON report.
    Export {
        /// Report produced by an earlier run.
        report: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Alist)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Alist,
    ReportJson,
    ReportTable,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// CPO proposal budget.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// What to print on stdout.
    #[arg(long, value_enum, default_value_t = Format::ReportTable)]
    format: Format,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    kappa: Option<usize>,
    #[arg(long)]
    z: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Cutting vector partition, e.g. `4,9,15`.
    #[arg(long, value_delimiter = ',')]
    cutting_vector: Option<Vec<usize>>,
    /// Record wall times in the report.
    #[arg(long)]
    timings: bool,
}

impl RunArgs {
    fn config(&self, mode: Mode) -> Result<RunConfig, Error> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => {
                let need = |v: Option<usize>, n: &str| {
                    v.ok_or_else(|| Error::Config(format!("--{n} is required without --config")))
                };
                let params = CodeParams::new(
                    need(self.gamma, "gamma")?,
                    need(self.kappa, "kappa")?,
                    need(self.z, "z")?,
                    self.m.unwrap_or(if mode == Mode::Uncoupled { 0 } else { 1 }),
                    need(self.l, "l")?,
                )?;
                RunConfig::new(params, mode)
            }
        };
        cfg.mode = mode;
        let p = &mut cfg.params;
        for (slot, v) in [
            (&mut p.gamma, self.gamma),
            (&mut p.kappa, self.kappa),
            (&mut p.z, self.z),
            (&mut p.m, self.m),
            (&mut p.l, self.l),
        ] {
            if let Some(v) = v {
                *slot = v;
            }
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(b) = self.budget {
            cfg.cpo.budget = b;
        }
        if let Some(d) = &self.out_dir {
            cfg.out_dir = Some(d.clone());
        }
        if let Some(z) = &self.cutting_vector {
            cfg.partition = Some(PartitionSource::CuttingVector(z.clone()));
        }
        cfg.timings |= self.timings;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn render(report: &DesignReport, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Alist => to_alist(&code_from_report(report)?.h),
        Format::ReportJson => report.to_json(),
        Format::ReportTable => report.to_table(),
    })
}

fn execute(cli: Cli) -> Result<(), Error> {
    let (args, mode) = match cli.cmd {
        Cmd::Oo(a) => (a, Mode::Oo),
        Cmd::Cpo(a) => (a, Mode::Cpo),
        Cmd::Full(a) => (a, Mode::Full),
        Cmd::Census(a) => (a, Mode::Census),
        Cmd::Uncoupled(a) => (a, Mode::Uncoupled),
        Cmd::CvBaseline(a) => (a, Mode::CvBaseline),
        Cmd::Export { report, format, out } => {
            let r = DesignReport::from_json(&std::fs::read_to_string(&report)?)?;
            let text = render(&r, format)?;
            match out {
                Some(path) => atomic_write(&path, text.as_bytes())?,
                None => print!("{text}"),
            }
            return Ok(());
        }
    };
    let cfg = args.config(mode)?;
    let out = run(&cfg)?;
    if let Some(dir) = &cfg.out_dir {
        write_artifacts(&out, dir)?;
    }
    let text = match args.format {
        Format::Alist => match &out.code {
            Some(code) => to_alist(&code.h),
            None => return Err(Error::Config("this mode produces no matrix to export".into())),
        },
        f => render(&out.report, f)?,
    };
    print!("{text}");
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded { .. } => 3,
        Error::Io(_) => 4,
        Error::Json(_)
        | Error::Config(_)
        | Error::InvalidParams(_)
        | Error::GammaTwo
        | Error::InvalidPartition(_)
        | Error::InvalidCuttingVector(_)
        | Error::BelowThreshold { .. }
        | Error::NotGammaThree(_)
        | Error::Alist(_)
        | Error::Girth => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("SCFORGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
