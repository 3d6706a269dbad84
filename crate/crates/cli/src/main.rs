//! Command-line front end: solve plane-wave solutions, run the
//! verification suite, export kinematic-plane geometry, and demonstrate
//! boosts as kinematic-plane rotations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error,
//! 3 light-speed singularity.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use diracgeo::dirac::{boost_via_rotation, solve_plane_wave, solve_rest};
use diracgeo::{Error, ParticleParameters, Vector3};
use diracgeo_cli::records::{BlochRow, BlochRowSolution, ReportRecord, SolutionRecord};

#[derive(Parser)]
#[command(
    name = "diracgeo",
    version,
    about = "Plane-wave Dirac solutions and their velocity-space geometry",
    after_help = "Randomness in `verify` comes from a SplitMix64 generator seeded by --seed, \
so reports are byte-identical across runs and platforms."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the four plane-wave solutions for a momentum and mass.
    Solve {
        /// Momentum components, three values (natural units).
        #[arg(long, num_args = 3, value_names = ["PX", "PY", "PZ"], allow_hyphen_values = true, required = true)]
        p: Vec<f64>,
        /// Particle mass, must be positive.
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run every numerical check; exit 0 only if all pass.
    Verify {
        /// Seed for the SplitMix64 draw generator.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random draws per check (at least 1).
        #[arg(long, default_value_t = 100)]
        draws: usize,
        /// Replace every check's tolerance; tiny values force failures.
        #[arg(long, allow_hyphen_values = true)]
        tolerance_override: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Export kinematic-plane geometry over a momentum sweep (p along k).
    BlochExport {
        #[arg(long, allow_hyphen_values = true)]
        p_mag_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        p_mag_max: f64,
        /// Number of sample points, at least 2.
        #[arg(long)]
        steps: usize,
        /// Particle mass, must be positive.
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Csv)]
        format: ExportFormat,
    },
    /// Boost the positive-energy, positive-helicity solution by rotating
    /// its speed factor by phi in the kinematic plane.
    Boost {
        /// Momentum components, three values; zero momentum boosts the
        /// rest solution.
        #[arg(long, num_args = 3, value_names = ["PX", "PY", "PZ"], allow_hyphen_values = true, required = true)]
        p: Vec<f64>,
        /// Particle mass, must be positive.
        #[arg(long, allow_hyphen_values = true)]
        m: f64,
        /// Kinematic-plane rotation angle (radians).
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_ARGS: i32 = 2;
const EXIT_SINGULARITY: i32 = 3;

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Solve { p, m, format } => cmd_solve(&p, m, format),
        Command::Verify {
            seed,
            draws,
            tolerance_override,
            format,
        } => cmd_verify(seed, draws, tolerance_override, format),
        Command::BlochExport {
            p_mag_min,
            p_mag_max,
            steps,
            m,
            format,
        } => cmd_bloch_export(p_mag_min, p_mag_max, steps, m, format),
        Command::Boost { p, m, phi, format } => cmd_boost(&p, m, phi, format),
    }
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    command: &'static str,
    inputs: I,
    results: Vec<R>,
}

#[derive(Serialize)]
struct SolveInputs {
    p: [f64; 3],
    m: f64,
}

#[derive(Serialize)]
struct VerifyInputs {
    seed: u64,
    draws: usize,
    tolerance_override: Option<f64>,
}

#[derive(Serialize)]
struct BlochInputs {
    p_mag_min: f64,
    p_mag_max: f64,
    steps: usize,
    m: f64,
}

#[derive(Serialize)]
struct BoostInputs {
    p: [f64; 3],
    m: f64,
    phi: f64,
}

fn parse_particle(p: &[f64], m: f64) -> Result<ParticleParameters, i32> {
    let p = Vector3::new(p[0], p[1], p[2]);
    ParticleParameters::new(p, m).map_err(|err| {
        eprintln!("error: {err}");
        EXIT_ARGS
    })
}

fn solutions_for(params: &ParticleParameters) -> Vec<diracgeo::PlaneWaveSolution> {
    if params.momentum_magnitude() == 0.0 {
        solve_rest(params.m)
    } else {
        solve_plane_wave(params).expect("nonzero momentum")
    }
}

fn cmd_solve(p: &[f64], m: f64, format: Format) -> i32 {
    let params = match parse_particle(p, m) {
        Ok(params) => params,
        Err(code) => return code,
    };
    let records: Vec<SolutionRecord> = solutions_for(&params)
        .iter()
        .map(SolutionRecord::from_solution)
        .collect();

    match format {
        Format::Json => {
            let envelope = Envelope {
                command: "solve",
                inputs: SolveInputs {
                    p: params.p.0,
                    m: params.m,
                },
                results: records,
            };
            println!("{}", serde_json::to_string(&envelope).expect("serializable"));
        }
        Format::Csv => {
            println!("{}", SolutionRecord::CSV_HEADER);
            for record in &records {
                println!("{}", record.csv_row());
            }
        }
        Format::Table => {
            println!(
                "four plane-wave solutions for p = ({}, {}, {}), m = {}",
                params.p[0], params.p[1], params.p[2], params.m
            );
            for (i, record) in records.iter().enumerate() {
                print!("{}", record.table_block(&format!("solution {}", i + 1)));
            }
        }
    }
    EXIT_OK
}

fn cmd_verify(seed: u64, draws: usize, tolerance_override: Option<f64>, format: Format) -> i32 {
    if draws < 1 {
        eprintln!("error: --draws must be at least 1");
        return EXIT_ARGS;
    }
    let reports: Vec<ReportRecord> = diracgeo::run_all_checks(seed, draws, tolerance_override)
        .iter()
        .map(ReportRecord::from_report)
        .collect();
    let all_passed = reports.iter().all(|r| r.passed);

    match format {
        Format::Json => {
            let envelope = Envelope {
                command: "verify",
                inputs: VerifyInputs {
                    seed,
                    draws,
                    tolerance_override,
                },
                results: reports,
            };
            println!("{}", serde_json::to_string(&envelope).expect("serializable"));
        }
        Format::Csv => {
            println!("{}", ReportRecord::CSV_HEADER);
            for report in &reports {
                println!("{}", report.csv_row());
            }
        }
        Format::Table => {
            println!(
                "verification suite: seed {seed}, {draws} draws per randomized check{}",
                tolerance_override
                    .map(|t| format!(", tolerance override {t:e}"))
                    .unwrap_or_default()
            );
            println!(
                "{:<30} {:>6} {:>14} {:>11}   result",
                "check", "draws", "max residual", "tolerance"
            );
            for report in &reports {
                println!("{}", report.table_row());
            }
            println!(
                "{}",
                if all_passed {
                    "all checks passed"
                } else {
                    "SOME CHECKS FAILED"
                }
            );
        }
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn cmd_bloch_export(
    p_mag_min: f64,
    p_mag_max: f64,
    steps: usize,
    m: f64,
    format: ExportFormat,
) -> i32 {
    if !(p_mag_min >= 0.0 && p_mag_min < p_mag_max) || steps < 2 {
        eprintln!("error: need 0 <= p-mag-min < p-mag-max and steps >= 2");
        return EXIT_ARGS;
    }
    if !(m > 0.0) {
        eprintln!("error: mass must be positive (got {m})");
        return EXIT_ARGS;
    }

    let rows: Vec<BlochRow> = (0..steps)
        .map(|i| {
            let p_mag = p_mag_min + (p_mag_max - p_mag_min) * i as f64 / (steps - 1) as f64;
            let params = ParticleParameters::new(Vector3::K * p_mag, m).expect("positive mass");
            let theta = (p_mag / params.dispersion_energy()).asin();
            let (s_plus, _) = diracgeo::dirac::s_vectors(p_mag, m);
            let solutions: Vec<BlochRowSolution> = solutions_for(&params)
                .iter()
                .map(|sol| {
                    let record = SolutionRecord::from_solution(sol);
                    BlochRowSolution {
                        helicity: record.helicity,
                        energy_sign: record.energy_sign,
                        bloch_r: record.bloch_r,
                        quadrant: record.quadrant,
                    }
                })
                .collect();
            BlochRow {
                p_mag,
                theta,
                s_plus: s_plus.0,
                solutions: solutions.try_into().expect("four solutions"),
            }
        })
        .collect();

    match format {
        ExportFormat::Json => {
            let envelope = Envelope {
                command: "bloch-export",
                inputs: BlochInputs {
                    p_mag_min,
                    p_mag_max,
                    steps,
                    m,
                },
                results: rows,
            };
            println!("{}", serde_json::to_string(&envelope).expect("serializable"));
        }
        ExportFormat::Csv => {
            println!("{}", BlochRow::CSV_HEADER);
            for row in &rows {
                println!("{}", row.csv_row());
            }
        }
    }
    EXIT_OK
}

fn cmd_boost(p: &[f64], m: f64, phi: f64, format: Format) -> i32 {
    let params = match parse_particle(p, m) {
        Ok(params) => params,
        Err(code) => return code,
    };
    // The positive-energy, positive-helicity solution (the spin-up rest
    // solution for zero momentum).
    let input = solutions_for(&params)[0];
    let boosted = match boost_via_rotation(&input, phi) {
        Ok(boosted) => boosted,
        Err(Error::LightSpeedSingularity(cos_theta)) => {
            eprintln!(
                "error: rotation by phi = {phi} drives the state onto the light-speed \
boundary (cos theta' = {cos_theta:e}); the momentum diverges there"
            );
            return EXIT_SINGULARITY;
        }
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_ARGS;
        }
    };
    let records = vec![
        SolutionRecord::from_solution(&input),
        SolutionRecord::from_solution(&boosted),
    ];

    match format {
        Format::Json => {
            let envelope = Envelope {
                command: "boost",
                inputs: BoostInputs {
                    p: params.p.0,
                    m: params.m,
                    phi,
                },
                results: records,
            };
            println!("{}", serde_json::to_string(&envelope).expect("serializable"));
        }
        Format::Csv => {
            println!("{}", SolutionRecord::CSV_HEADER);
            for record in &records {
                println!("{}", record.csv_row());
            }
        }
        Format::Table => {
            println!("kinematic-plane rotation by phi = {phi}");
            print!("{}", records[0].table_block("before"));
            print!("{}", records[1].table_block("after"));
        }
    }
    EXIT_OK
}
