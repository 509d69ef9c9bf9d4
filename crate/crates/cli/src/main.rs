use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbitres::exceptional::exceptional_table_json;
use orbitres::report::{build_atlas, build_report, render_csv, render_markdown, render_text};
use orbitres::selfcheck::run_selfcheck;
use orbitres::{exceptional_verdict, ClassicalOrbit, LieType, Partition, VeryEvenLabel};

const EXIT_INPUT: u8 = 2;
const EXIT_SELFCHECK: u8 = 3;

#[derive(Parser)]
#[command(
    name = "orbitres",
    version,
    about = "Picard groups, polarizations and symplectic resolutions of nilpotent orbits"
)]
struct Cli {
    /// Largest matrix size `m` that atlas and selfcheck may enumerate.
    #[arg(long, env = "ORBITRES_MAX_M", default_value_t = 30, global = true)]
    cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one orbit, e.g. `report so7 3,2,2`.
    Report {
        /// Algebra: sl5, sp6, so8, or A4, C3, D4, ...
        algebra: String,
        /// Partition: `3,2,2,1` or `3,2^2,1`.
        partition: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Very even label for so_2n partitions with only even parts.
        #[arg(long)]
        label: Option<String>,
    },
    /// One row per orbit of an algebra.
    Atlas {
        algebra: String,
        #[arg(long, value_enum, default_value_t = AtlasFormat::Md)]
        format: AtlasFormat,
    },
    /// Cross-checks every classical orbit with m <= max_m.
    Selfcheck {
        max_m: Option<u32>,
        #[arg(long = "max-m")]
        max_m_flag: Option<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Verdict for an exceptional orbit given by its Bala-Carter label.
    Exceptional {
        /// G2, F4, E6, E7 or E8
        algebra: Option<String>,
        label: Option<String>,
        /// Print the whole table as JSON.
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum AtlasFormat {
    Json,
    Md,
    Csv,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Report {
            algebra,
            partition,
            format,
            label,
        } => report(&algebra, &partition, label.as_deref(), format),
        Command::Atlas { algebra, format } => atlas(&algebra, format, cli.cap),
        Command::Selfcheck {
            max_m,
            max_m_flag,
            format,
        } => selfcheck(max_m.or(max_m_flag).unwrap_or(24), cli.cap, format),
        Command::Exceptional {
            algebra,
            label,
            dump,
        } => exceptional(algebra, label, dump),
    }
}

fn report(algebra: &str, partition: &str, label: Option<&str>, format: ReportFormat) -> ExitCode {
    let orbit = (|| {
        let lie_type: LieType = algebra.parse()?;
        let partition: Partition = partition.parse()?;
        let label = label.map(str::parse::<VeryEvenLabel>).transpose()?;
        ClassicalOrbit::new(lie_type, partition, label)
    })();
    let orbit = match orbit {
        Ok(o) => o,
        Err(e) => return input_error(e),
    };
    let report = match build_report(&orbit) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("internal error: {e}");
            return ExitCode::from(EXIT_SELFCHECK);
        }
    };
    match format {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        ReportFormat::Text => print!("{}", render_text(&report)),
    }
    ExitCode::SUCCESS
}

fn atlas(algebra: &str, format: AtlasFormat, cap: u32) -> ExitCode {
    let lie_type: LieType = match algebra.parse() {
        Ok(t) => t,
        Err(e) => return input_error(e),
    };
    if lie_type.m() > cap {
        return input_error(format!(
            "{lie_type} exceeds the enumeration cap m <= {cap} (set ORBITRES_MAX_M to raise it)"
        ));
    }
    let rows = match build_atlas(lie_type) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("internal error: {e}");
            return ExitCode::from(EXIT_SELFCHECK);
        }
    };
    match format {
        AtlasFormat::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        AtlasFormat::Md => print!("{}", render_markdown(lie_type, &rows)),
        AtlasFormat::Csv => print!("{}", render_csv(&rows)),
    }
    ExitCode::SUCCESS
}

fn selfcheck(max_m: u32, cap: u32, format: ReportFormat) -> ExitCode {
    if max_m < 2 {
        return input_error("selfcheck needs max_m >= 2");
    }
    if max_m > cap {
        return input_error(format!(
            "max_m = {max_m} exceeds the enumeration cap {cap} (set ORBITRES_MAX_M to raise it)"
        ));
    }
    let summary = run_selfcheck(max_m);
    match format {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&summary).unwrap()),
        ReportFormat::Text => {
            println!(
                "checked {} orbits with m <= {}: {} failures, {} without symplectic resolution",
                summary.orbits_checked,
                max_m,
                summary.failures.len(),
                summary.no_verdicts.len()
            );
            for f in &summary.failures {
                println!("FAIL {} [{}] {}", f.orbit, f.check, f.detail);
            }
        }
    }
    if summary.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_SELFCHECK)
    }
}

fn exceptional(algebra: Option<String>, label: Option<String>, dump: bool) -> ExitCode {
    if dump {
        println!("{}", exceptional_table_json());
        return ExitCode::SUCCESS;
    }
    let (Some(algebra), Some(label)) = (algebra, label) else {
        return input_error("usage: exceptional <ALGEBRA> <LABEL> or exceptional --dump");
    };
    match exceptional_verdict(&algebra, &label) {
        Ok(v) => {
            println!("{}", v.answer);
            ExitCode::SUCCESS
        }
        Err(orbitres::ExceptionalError::NotInDatabase { guidance, .. }) => {
            println!("not in database");
            eprintln!("{guidance}");
            ExitCode::SUCCESS
        }
        Err(e) => input_error(e),
    }
}
