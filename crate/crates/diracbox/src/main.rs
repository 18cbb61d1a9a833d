//! Command-line front end: solvers, reference-table reproduction, figure data,
//! boundary-condition verification and density-of-states reports.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical/acceptance failure.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use diracbox::output::{Cell, Table};
use diracbox::reference::TABLE1;
use diracbox::spinor::{
    build_field, dirac_current, field_norm_at, mit_residual, Complex2Spinor, Face,
};
use diracbox::units::{dispersion, WaveVector};
use diracbox::{
    box1d, box3d, dos, BoxGeometry, QuantumNumbers,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const VERIFY_THRESHOLD: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "diracbox", version, about = "Relativistic particle in a box: spectra, boundary checks, density of states")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this path instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// 1-D spectrum: roots of tan(x) = -x/lambda
    Solve1d {
        /// Box length in Compton wavelengths
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        n_max: u32,
        /// Phase-update convergence tolerance
        #[arg(long, default_value_t = box3d::DEFAULT_TOL)]
        tol: f64,
    },
    /// 3-D coupled system: one mode (--qn) or full enumeration (--n-max)
    Solve3d {
        /// Cubic box edge in Compton wavelengths
        #[arg(long)]
        cube: Option<f64>,
        #[arg(long)]
        lx: Option<f64>,
        #[arg(long)]
        ly: Option<f64>,
        #[arg(long)]
        lz: Option<f64>,
        /// Quantum-number triple, e.g. 1,1,2
        #[arg(long)]
        qn: Option<String>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, default_value_t = box3d::DEFAULT_TOL)]
        tol: f64,
    },
    /// Reproduce the published six-level reference table with deviations
    Table1 {},
    /// Data behind the graphical solution (fig1) and the level spectra (fig2)
    FigData {
        /// fig1 or fig2
        #[arg(long)]
        which: String,
        /// Compton-to-edge ratios for fig1
        #[arg(long, default_value = "10,1,0.1")]
        ratios: String,
    },
    /// Build the spinor field of a mode and report wall residuals
    Verify {
        #[arg(long)]
        cube: Option<f64>,
        #[arg(long)]
        lx: Option<f64>,
        #[arg(long)]
        ly: Option<f64>,
        #[arg(long)]
        lz: Option<f64>,
        #[arg(long)]
        qn: String,
        /// Random face samples per face, in addition to the 5x5 grid
        #[arg(long, default_value_t = 25)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deliberately negate one coefficient (mutation check)
        #[arg(long, default_value_t = false)]
        break_coeffs: bool,
    },
    /// Spacing series, cumulative counts and non-relativistic comparison
    Dos {
        /// Comma-separated list of cubic edges
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n_max: u32,
    },
}

enum AppError {
    /// exit 1: bad flags or I/O
    Usage(String),
    /// exit 2: solver or acceptance failure, with partial output to flush
    Numeric(String, Option<Table>),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    if let Err(msg) = configure_threads() {
        eprintln!("{msg}");
        return ExitCode::from(1);
    }

    let format = cli.format;
    let output = cli.output.clone();
    match run(cli) {
        Ok(table) => {
            if emit(&table, format, &output).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Numeric(msg, partial)) => {
            if let Some(table) = partial {
                let _ = emit(&table, format, &output);
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("DIRACBOX_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| format!("error: DIRACBOX_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            return Err("error: DIRACBOX_THREADS must be a positive integer".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| format!("error: failed to configure thread pool: {e}"))?;
    }
    Ok(())
}

fn emit(table: &Table, format: Format, output: &Option<PathBuf>) -> Result<(), ()> {
    let text = match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| eprintln!("error: cannot write {}: {e}", path.display())),
    }
}

fn run(cli: Cli) -> Result<Table, AppError> {
    match cli.cmd {
        Cmd::Solve1d { lambda, n_max, tol } => cmd_solve1d(lambda, n_max, tol),
        Cmd::Solve3d { cube, lx, ly, lz, qn, n_max, tol } => {
            cmd_solve3d(parse_geometry(cube, lx, ly, lz)?, qn, n_max, tol)
        }
        Cmd::Table1 {} => cmd_table1(),
        Cmd::FigData { which, ratios } => cmd_fig_data(&which, &ratios),
        Cmd::Verify { cube, lx, ly, lz, qn, samples, seed, break_coeffs } => cmd_verify(
            parse_geometry(cube, lx, ly, lz)?,
            parse_qn(&qn)?,
            samples,
            seed,
            break_coeffs,
        ),
        Cmd::Dos { lambda, n_max } => cmd_dos(&lambda, n_max),
    }
}

fn parse_geometry(
    cube: Option<f64>,
    lx: Option<f64>,
    ly: Option<f64>,
    lz: Option<f64>,
) -> Result<BoxGeometry, AppError> {
    let edges = match (cube, lx, ly, lz) {
        (Some(c), None, None, None) => [c; 3],
        (None, Some(x), Some(y), Some(z)) => [x, y, z],
        _ => {
            return Err(AppError::Usage(
                "specify either --cube or all of --lx --ly --lz".into(),
            ))
        }
    };
    BoxGeometry::new(edges).map_err(|e| AppError::Usage(format!("--cube/--lx/--ly/--lz: {e}")))
}

fn parse_qn(s: &str) -> Result<QuantumNumbers, AppError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(AppError::Usage(format!("--qn expects n1,n2,n3, got {s:?}")));
    }
    let mut n = [0u32; 3];
    for (i, p) in parts.iter().enumerate() {
        n[i] = p
            .trim()
            .parse()
            .map_err(|_| AppError::Usage(format!("--qn component {:?} is not an integer", p)))?;
    }
    QuantumNumbers::new(n).map_err(|e| AppError::Usage(format!("--qn: {e}")))
}

fn parse_lambda_list(s: &str) -> Result<Vec<f64>, AppError> {
    s.split(',')
        .map(|p| {
            let v: f64 = p
                .trim()
                .parse()
                .map_err(|_| AppError::Usage(format!("--lambda entry {p:?} is not a number")))?;
            if !(v.is_finite() && v > 0.0) {
                return Err(AppError::Usage(format!("--lambda entry {p} must be positive")));
            }
            Ok(v)
        })
        .collect()
}

fn cmd_solve1d(lambda: f64, n_max: u32, tol: f64) -> Result<Table, AppError> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(AppError::Usage(format!("--lambda must be positive, got {lambda}")));
    }
    if n_max < 1 {
        return Err(AppError::Usage("--n-max must be at least 1".into()));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(AppError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let mut table = Table::new(&[
        "lambda", "n", "x", "x_over_pi", "u", "epsilon", "residual", "status",
    ]);
    table.param("lambda", Cell::Num(lambda));
    table.param("n_max", Cell::Int(n_max as i64));
    for n in 1..=n_max {
        match box1d::solve_1d_mode(lambda, n) {
            Ok(m) => table.row(vec![
                Cell::Num(lambda),
                Cell::Int(n as i64),
                Cell::Num(m.x),
                Cell::Num(m.x / PI),
                Cell::Num(m.u),
                Cell::Num(m.epsilon),
                Cell::Num(m.residual),
                Cell::str("ok"),
            ]),
            Err(e) => {
                table.row(vec![
                    Cell::Num(lambda),
                    Cell::Int(n as i64),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::str("failed"),
                ]);
                return Err(AppError::Numeric(e.to_string(), Some(table)));
            }
        }
    }
    Ok(table)
}

fn cmd_solve3d(
    geometry: BoxGeometry,
    qn: Option<String>,
    n_max: Option<u32>,
    tol: f64,
) -> Result<Table, AppError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(AppError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let edges = geometry.edges();
    let mut table = Table::new(&[
        "lx", "ly", "lz", "n1", "n2", "n3", "x1_over_pi", "x2_over_pi", "x3_over_pi", "epsilon",
        "degeneracy", "residual_max", "sweeps", "status",
    ]);
    table.param("lx", Cell::Num(edges[0]));
    table.param("ly", Cell::Num(edges[1]));
    table.param("lz", Cell::Num(edges[2]));

    let mode_row = |sol: &box3d::ModeSolution, degeneracy: Option<u32>| {
        let ph = sol.phases();
        let n = sol.qn.as_array();
        vec![
            Cell::Num(edges[0]),
            Cell::Num(edges[1]),
            Cell::Num(edges[2]),
            Cell::Int(n[0] as i64),
            Cell::Int(n[1] as i64),
            Cell::Int(n[2] as i64),
            Cell::Num(ph[0] / PI),
            Cell::Num(ph[1] / PI),
            Cell::Num(ph[2] / PI),
            Cell::Num(sol.epsilon),
            degeneracy.map_or(Cell::Empty, |d| Cell::Int(d as i64)),
            Cell::Num(sol.max_residual()),
            Cell::Int(sol.iterations as i64),
            Cell::str("ok"),
        ]
    };

    match (qn, n_max) {
        (Some(spec), None) => {
            let qn = parse_qn(&spec)?;
            table.param("qn", Cell::str(spec));
            match box3d::solve_mode(&geometry, &qn, tol, box3d::DEFAULT_MAX_SWEEPS) {
                Ok(sol) => table.row(mode_row(&sol, None)),
                Err(e) => {
                    let n = qn.as_array();
                    table.row(vec![
                        Cell::Num(edges[0]),
                        Cell::Num(edges[1]),
                        Cell::Num(edges[2]),
                        Cell::Int(n[0] as i64),
                        Cell::Int(n[1] as i64),
                        Cell::Int(n[2] as i64),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::str("failed"),
                    ]);
                    return Err(AppError::Numeric(e.to_string(), Some(table)));
                }
            }
        }
        (None, Some(n_max)) => {
            if n_max < 1 {
                return Err(AppError::Usage("--n-max must be at least 1".into()));
            }
            table.param("n_max", Cell::Int(n_max as i64));
            let levels = box3d::enumerate_spectrum(&geometry, n_max)
                .map_err(|e| AppError::Numeric(e.to_string(), None))?;
            for level in &levels.entries {
                for member in &level.members {
                    table.row(mode_row(member, Some(level.degeneracy)));
                }
            }
        }
        _ => {
            return Err(AppError::Usage(
                "specify exactly one of --qn or --n-max".into(),
            ))
        }
    }
    Ok(table)
}

fn cmd_table1() -> Result<Table, AppError> {
    // reference self-check: printed energies follow from printed wavenumbers
    for row in TABLE1 {
        let u = WaveVector::new([
            row.k_over_pi[0] * PI / row.lambda,
            row.k_over_pi[1] * PI / row.lambda,
            row.k_over_pi[2] * PI / row.lambda,
        ])
        .unwrap();
        let eps = dispersion(&u).value();
        if (eps - row.epsilon).abs() / row.epsilon > 5e-4 {
            return Err(AppError::Numeric(
                format!("reference dataset inconsistent at {:?} lambda={}", row.qn, row.lambda),
                None,
            ));
        }
    }

    let mut table = Table::new(&[
        "n1", "n2", "n3", "degeneracy", "lambda", "k1_over_pi", "k2_over_pi", "k3_over_pi",
        "epsilon", "dev_k1", "dev_k2", "dev_k3", "dev_eps_rel",
    ]);
    let mut worst: f64 = 0.0;
    for row in TABLE1 {
        let geometry = BoxGeometry::cubic(row.lambda).unwrap();
        let qn = QuantumNumbers::new(row.qn).unwrap();
        let sol = box3d::solve_mode(&geometry, &qn, box3d::DEFAULT_TOL, box3d::DEFAULT_MAX_SWEEPS)
            .map_err(|e| AppError::Numeric(e.to_string(), None))?;
        let ph = sol.phases();
        let dev = [
            (ph[0] / PI - row.k_over_pi[0]).abs(),
            (ph[1] / PI - row.k_over_pi[1]).abs(),
            (ph[2] / PI - row.k_over_pi[2]).abs(),
        ];
        let dev_eps = (sol.epsilon - row.epsilon).abs() / row.epsilon;
        worst = worst.max(dev_eps).max(dev[0]).max(dev[1]).max(dev[2]);
        table.row(vec![
            Cell::Int(row.qn[0] as i64),
            Cell::Int(row.qn[1] as i64),
            Cell::Int(row.qn[2] as i64),
            Cell::Int(row.degeneracy as i64),
            Cell::Num(row.lambda),
            Cell::Num(ph[0] / PI),
            Cell::Num(ph[1] / PI),
            Cell::Num(ph[2] / PI),
            Cell::Num(sol.epsilon),
            Cell::Num(dev[0]),
            Cell::Num(dev[1]),
            Cell::Num(dev[2]),
            Cell::Num(dev_eps),
        ]);
    }
    if worst > 5e-5 {
        return Err(AppError::Numeric(
            format!("maximum deviation {worst:.3e} exceeds 5e-5"),
            Some(table),
        ));
    }
    Ok(table)
}

fn cmd_fig_data(which: &str, ratios: &str) -> Result<Table, AppError> {
    match which {
        "fig1" => {
            let ratios = parse_lambda_list(ratios)?;
            let mut columns: Vec<String> = vec!["x".into(), "tan_x".into()];
            for (i, _) in ratios.iter().enumerate() {
                columns.push(format!("rhs_ratio_{i}"));
            }
            let cols: Vec<&str> = columns.iter().map(|s| s.as_str()).collect();
            let mut table = Table::new(&cols);
            for (i, &r) in ratios.iter().enumerate() {
                table.param(&format!("ratio_{i}"), Cell::Num(r));
            }
            let points = 1200;
            let hi = 3.0 * PI;
            for i in 1..points {
                let x = hi * i as f64 / points as f64;
                let t = x.tan().clamp(-20.0, 20.0);
                let mut row = vec![Cell::Num(x), Cell::Num(t)];
                for &r in &ratios {
                    row.push(Cell::Num(-x * r));
                }
                table.row(row);
            }
            Ok(table)
        }
        "fig2" => {
            let mut table = Table::new(&[
                "lambda", "index", "n1", "n2", "n3", "epsilon", "log10_kinetic", "degeneracy",
            ]);
            for &lambda in &[0.1, 1.0, 10.0] {
                let levels = box3d::enumerate_spectrum(&BoxGeometry::cubic(lambda).unwrap(), 3)
                    .map_err(|e| AppError::Numeric(e.to_string(), None))?;
                let mut index = 0i64;
                for level in &levels.entries {
                    for member in &level.members {
                        index += 1;
                        let n = member.qn.as_array();
                        table.row(vec![
                            Cell::Num(lambda),
                            Cell::Int(index),
                            Cell::Int(n[0] as i64),
                            Cell::Int(n[1] as i64),
                            Cell::Int(n[2] as i64),
                            Cell::Num(member.epsilon),
                            Cell::Num((member.epsilon - 1.0).log10()),
                            Cell::Int(level.degeneracy as i64),
                        ]);
                    }
                }
            }
            Ok(table)
        }
        other => Err(AppError::Usage(format!("--which must be fig1 or fig2, got {other:?}"))),
    }
}

fn cmd_verify(
    geometry: BoxGeometry,
    qn: QuantumNumbers,
    samples: u32,
    seed: u64,
    break_coeffs: bool,
) -> Result<Table, AppError> {
    let sol = box3d::solve_mode(&geometry, &qn, box3d::DEFAULT_TOL, box3d::DEFAULT_MAX_SWEEPS)
        .map_err(|e| AppError::Numeric(e.to_string(), None))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chis = vec![Complex2Spinor::basis_up()];
    for _ in 0..10 {
        let v: [f64; 4] = rng.gen();
        chis.push(
            Complex2Spinor([
                Complex64::new(v[0] - 0.5, v[1] - 0.5),
                Complex64::new(v[2] - 0.5, v[3] - 0.5),
            ])
            .normalized(),
        );
    }
    // 5x5 grid (face corners included), face center, plus seeded random points
    let mut fracs: Vec<[f64; 2]> = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            fracs.push([i as f64 / 4.0, j as f64 / 4.0]);
        }
    }
    fracs.push([0.5, 0.5]);
    for _ in 0..samples {
        fracs.push([rng.gen(), rng.gen()]);
    }

    let edges = geometry.edges();
    let n = qn.as_array();
    let mut table = Table::new(&[
        "lx", "ly", "lz", "n1", "n2", "n3", "seed", "face_axis", "face_side", "max_mit_residual",
        "max_current_ratio",
    ]);
    table.param("samples", Cell::Int(samples as i64));
    table.param("seed", Cell::Int(seed as i64));
    table.param("break_coeffs", Cell::str(if break_coeffs { "true" } else { "false" }));

    let mut overall_mit: f64 = 0.0;
    let mut overall_cur: f64 = 0.0;
    for face in Face::all() {
        let mut max_mit: f64 = 0.0;
        let mut max_cur: f64 = 0.0;
        for chi in &chis {
            let mut field = build_field(&sol, *chi)
                .map_err(|e| AppError::Numeric(e.to_string(), None))?;
            if break_coeffs {
                field = field.with_negated_coefficient(0);
            }
            for &frac in &fracs {
                let res = mit_residual(&field, face, frac);
                let norm = field_norm_at(&field, face, frac);
                if norm > 0.0 {
                    max_mit = max_mit.max(res / norm);
                }
                let p = field.face_point(face, frac);
                let j = dirac_current(&field, p);
                if j[0] > 0.0 {
                    max_cur = max_cur.max(j[1 + face.axis].abs() / j[0]);
                }
            }
        }
        overall_mit = overall_mit.max(max_mit);
        overall_cur = overall_cur.max(max_cur);
        table.row(vec![
            Cell::Num(edges[0]),
            Cell::Num(edges[1]),
            Cell::Num(edges[2]),
            Cell::Int(n[0] as i64),
            Cell::Int(n[1] as i64),
            Cell::Int(n[2] as i64),
            Cell::Int(seed as i64),
            Cell::Int(face.axis as i64),
            Cell::str(match face.side {
                diracbox::spinor::Side::Lower => "lower",
                diracbox::spinor::Side::Upper => "upper",
            }),
            Cell::Num(max_mit),
            Cell::Num(max_cur),
        ]);
    }

    if overall_mit > VERIFY_THRESHOLD || overall_cur > VERIFY_THRESHOLD {
        return Err(AppError::Numeric(
            format!(
                "wall residuals exceed {VERIFY_THRESHOLD:.0e}: max bag-condition residual {overall_mit:.3e}, max normal-current ratio {overall_cur:.3e}"
            ),
            Some(table),
        ));
    }
    Ok(table)
}

fn cmd_dos(lambda_list: &str, n_max: u32) -> Result<Table, AppError> {
    let lambdas = parse_lambda_list(lambda_list)?;
    if n_max < 2 {
        return Err(AppError::Usage("--n-max must be at least 2".into()));
    }
    let mut table = Table::new(&[
        "lambda", "kind", "index", "n1", "n2", "n3", "a", "b", "c",
    ]);
    table.param("n_max", Cell::Int(n_max as i64));
    for &lambda in &lambdas {
        // 1-D reduction: modes and spacings
        let modes = box1d::spectrum_1d(lambda, n_max)
            .map_err(|e| AppError::Numeric(e.to_string(), None))?;
        for m in &modes {
            table.row(vec![
                Cell::Num(lambda),
                Cell::str("mode1d"),
                Cell::Int(m.n as i64),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Num(m.x / PI),
                Cell::Num(m.u),
                Cell::Num(m.epsilon),
            ]);
        }
        for (i, w) in modes.windows(2).enumerate() {
            table.row(vec![
                Cell::Num(lambda),
                Cell::str("spacing"),
                Cell::Int((i + 1) as i64),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Num(w[1].x - w[0].x),
                Cell::Empty,
                Cell::Empty,
            ]);
        }

        // 3-D comparison against the non-relativistic quantization
        let geometry = BoxGeometry::cubic(lambda).unwrap();
        let cmp = dos::nr_comparison(&geometry, n_max)
            .map_err(|e| AppError::Numeric(e.to_string(), None))?;
        for (i, pair) in cmp.pairs.iter().enumerate() {
            table.row(vec![
                Cell::Num(lambda),
                Cell::str("nr_pair"),
                Cell::Int((i + 1) as i64),
                Cell::Int(pair.qn[0] as i64),
                Cell::Int(pair.qn[1] as i64),
                Cell::Int(pair.qn[2] as i64),
                Cell::Num(pair.eps_rel),
                Cell::Num(pair.eps_nr),
                Cell::Empty,
            ]);
        }
        // cumulative relativistic counts on the covered NR thresholds
        let rel_top = cmp.rel_table.max_epsilon();
        let grid: Vec<f64> = cmp
            .nr_table
            .entries
            .iter()
            .map(|lv| lv.epsilon)
            .filter(|&t| t <= rel_top)
            .collect();
        if !grid.is_empty() {
            let counts = dos::cumulative_count(&cmp.rel_table, &grid)
                .map_err(|e| AppError::Numeric(e.to_string(), None))?;
            for (i, &(eps, count)) in counts.grid.iter().enumerate() {
                table.row(vec![
                    Cell::Num(lambda),
                    Cell::str("count"),
                    Cell::Int((i + 1) as i64),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Num(eps),
                    Cell::Int(count as i64),
                    Cell::Empty,
                ]);
            }
        }
        for (i, t) in cmp.thresholds.iter().enumerate() {
            table.row(vec![
                Cell::Num(lambda),
                Cell::str("nr_threshold"),
                Cell::Int((i + 1) as i64),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Num(t.threshold),
                Cell::Int(t.rel_count as i64),
                Cell::Int(t.nr_count as i64),
            ]);
        }
    }
    Ok(table)
}
