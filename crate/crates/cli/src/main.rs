//! `hypmetrics`: evaluate distance-ratio metrics, extract geodesics, draw
//! metric balls and run the verification suites.

mod input;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypmetrics_core::analysis::{
    self, fixed_factor_ball_radii, run_suites, slit_straddle_ratios, suites, trace_metric_ball,
    uniformity_ratio, zeta_ball_radii, FixedFactorRelation, VerifyConfig,
};
use hypmetrics_core::format::sig12;
use hypmetrics_core::path::{shortest_path_estimate, DensityField, DensityKind, Resolution, SolverConfig};
use hypmetrics_core::{Domain, Error, MetricKind, Point, Shape};

const SEED_ENV: &str = "HYPMETRICS_SEED";

#[derive(Debug)]
pub struct CliError {
    code: u8,
    kind: &'static str,
    message: String,
}

impl CliError {
    pub fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            kind: "malformed_input",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::OutsideDomain => (3, "exterior_point"),
            Error::Disconnected | Error::Quadrature => (4, "solver_failure"),
            _ => (2, "malformed_input"),
        };
        Self {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "hypmetrics", version, about = "Distance-ratio metrics on Euclidean domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate metrics on point pairs.
    Eval(EvalArgs),
    /// Approximate a k, m or h geodesic between two points.
    Geodesic(GeodesicArgs),
    /// Trace a metric ball and its Euclidean sandwich.
    Balls(BallsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Estimate the largest m/zeta ratio over random pairs.
    Uniformity(UniformityArgs),
}

#[derive(Args)]
struct SolverArgs {
    /// Bulk lattice spacing (default: automatic).
    #[arg(long)]
    resolution: Option<f64>,
    /// Stencil reach: 1 for axis and diagonal moves, 2 adds knight moves.
    #[arg(long)]
    connectivity: Option<u8>,
    #[arg(long)]
    refine_iters: Option<usize>,
    #[arg(long)]
    quad_tol: Option<f64>,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, CliError> {
        let mut cfg = SolverConfig::default();
        if let Some(h) = self.resolution {
            cfg.resolution = Resolution::Spacing(h);
        }
        if let Some(c) = self.connectivity {
            cfg.connectivity = c;
        }
        if let Some(n) = self.refine_iters {
            cfg.refine_iters = n;
        }
        if let Some(t) = self.quad_tol {
            cfg.quad_tol = t;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    domain: PathBuf,
    /// CSV with header x0,x1[,x2],y0,y1[,y2].
    #[arg(long, required_unless_present = "pair")]
    pairs: Option<PathBuf>,
    /// Inline pair "x0,x1;y0,y1"; repeatable.
    #[arg(long)]
    pair: Vec<String>,
    /// Comma-separated metrics: j, j_prime, zeta, zeta_prime, k, m, h.
    #[arg(long, default_value = "zeta")]
    metric: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct GeodesicArgs {
    #[arg(long)]
    domain: PathBuf,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// k, m or h.
    #[arg(long, default_value = "m")]
    density: String,
    /// Write the polyline as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct BallsArgs {
    #[arg(long)]
    domain: PathBuf,
    #[arg(long)]
    center: String,
    #[arg(long)]
    s: f64,
    #[arg(long, default_value = "zeta")]
    metric: String,
    /// Rays used to trace the boundary (default 360; 24 for k and m).
    #[arg(long)]
    rays: Option<usize>,
    /// Bisection tolerance per ray (default 1e-10; 1e-3 for k and m).
    #[arg(long)]
    tol: Option<f64>,
    /// Also draw this many seeded random points of the ball, for balls that
    /// are not star-shaped about the center.
    #[arg(long)]
    point_cloud: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// List suites and the statements they check.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Random pairs per shape for closed-form suites.
    #[arg(long)]
    pairs: Option<usize>,
    /// Random pairs per shape for suites that call the solver.
    #[arg(long)]
    solver_pairs: Option<usize>,
    /// Write the full report (with witnesses) here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct UniformityArgs {
    #[arg(long)]
    domain: PathBuf,
    #[arg(long, default_value_t = 200)]
    pairs: usize,
    /// zeta or zeta_prime.
    #[arg(long, default_value = "zeta")]
    metric: String,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    solver: SolverArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a),
        Command::Geodesic(a) => geodesic(a),
        Command::Balls(a) => balls(a),
        Command::Verify(a) => verify(a),
        Command::Uniformity(a) => uniformity(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", json!({"error": e.kind, "message": e.message}));
            ExitCode::from(e.code)
        }
    }
}

/// `HYPMETRICS_SEED` wins over `--seed`.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::malformed(format!("{SEED_ENV} must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(flag.unwrap_or(analysis::sampling::DEFAULT_SEED)),
    }
}

/// Rounds to 12 significant digits for JSON output.
fn num(v: f64) -> Value {
    sig12(v).parse::<f64>().ok().map_or(Value::Null, Value::from)
}

fn coords(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(|c| num(*c)).collect())
}

fn parse_metrics(list: &str) -> Result<Vec<MetricKind>, CliError> {
    list.split(',').map(|m| Ok(m.parse::<MetricKind>()?)).collect()
}

fn density_kind(kind: MetricKind) -> Option<DensityKind> {
    match kind {
        MetricKind::K => Some(DensityKind::K),
        MetricKind::M => Some(DensityKind::M),
        _ => None,
    }
}

fn require_planar(domain: &Domain) -> Result<(), CliError> {
    if domain.dim() == 2 {
        Ok(())
    } else {
        Err(CliError::malformed("SVG output needs a planar domain"))
    }
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => *v = num(n.as_f64().expect("f64 number")),
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to 12 significant digits.
fn pretty(v: &Value) -> String {
    let mut v = v.clone();
    round_numbers(&mut v);
    serde_json::to_string_pretty(&v).expect("json serializes") + "\n"
}

struct Evaluated {
    value: f64,
    spacing: Option<f64>,
}

fn evaluate(domain: &Domain, kind: MetricKind, x: &Point, y: &Point, cfg: &SolverConfig) -> Result<Evaluated, CliError> {
    for p in [x, y] {
        p.check_dim(domain.dim())?;
        if !domain.contains(p)? {
            return Err(Error::OutsideDomain.into());
        }
    }
    match density_kind(kind) {
        Some(dk) => {
            let field = DensityField::new(dk, domain)?;
            let g = shortest_path_estimate(&field, x, y, cfg)?;
            Ok(Evaluated {
                value: g.value,
                spacing: Some(g.diagnostics.spacing),
            })
        }
        None => Ok(Evaluated {
            value: kind.closed_form(domain, x, y)?,
            spacing: None,
        }),
    }
}

fn eval(a: EvalArgs) -> Result<u8, CliError> {
    let domain = input::read_domain(&a.domain)?;
    let kinds = parse_metrics(&a.metric)?;
    let cfg = a.solver.config()?;
    let mut pairs = match &a.pairs {
        Some(p) => input::read_pairs(p)?,
        None => Vec::new(),
    };
    for p in &a.pair {
        pairs.push(input::parse_inline_pair(p)?);
    }
    let dim = domain.dim();
    let text = match a.format {
        Format::Csv => {
            let mut header: Vec<String> = ["x", "y"]
                .iter()
                .flat_map(|p| (0..dim).map(move |i| format!("{p}{i}")))
                .collect();
            for k in &kinds {
                header.push(k.name().to_string());
                if !k.is_closed_form() {
                    header.push(format!("{}_estimate_spacing", k.name()));
                }
            }
            let mut out = header.join(",") + "\n";
            for (x, y) in &pairs {
                let mut row: Vec<String> = x.coords().iter().chain(y.coords()).map(|c| sig12(*c)).collect();
                for k in &kinds {
                    let e = evaluate(&domain, *k, x, y, &cfg)?;
                    row.push(sig12(e.value));
                    if let Some(h) = e.spacing {
                        row.push(sig12(h));
                    }
                }
                out += &(row.join(",") + "\n");
            }
            out
        }
        Format::Json => {
            let mut rows = Vec::new();
            for (x, y) in &pairs {
                let mut values = serde_json::Map::new();
                for k in &kinds {
                    let e = evaluate(&domain, *k, x, y, &cfg)?;
                    let v = match e.spacing {
                        Some(h) => json!({"value": num(e.value), "estimate": true, "spacing": num(h)}),
                        None => num(e.value),
                    };
                    values.insert(k.name().to_string(), v);
                }
                rows.push(json!({"x": coords(x), "y": coords(y), "values": values}));
            }
            pretty(&Value::Array(rows))
        }
    };
    input::write_output(a.out.as_deref(), &text)?;
    Ok(0)
}

fn geodesic(a: GeodesicArgs) -> Result<u8, CliError> {
    let domain = input::read_domain(&a.domain)?;
    let kind = match a.density.trim().to_ascii_lowercase().as_str() {
        "k" => DensityKind::K,
        "m" => DensityKind::M,
        "h" => DensityKind::H,
        other => return Err(CliError::malformed(format!("unknown density {other:?}; use k, m or h"))),
    };
    let (x, y) = (input::parse_point(&a.from)?, input::parse_point(&a.to)?);
    for p in [&x, &y] {
        p.check_dim(domain.dim())?;
        if !domain.contains(p)? {
            return Err(Error::OutsideDomain.into());
        }
    }
    if a.svg.is_some() {
        require_planar(&domain)?;
    }
    let cfg = a.solver.config()?;
    let field = DensityField::new(kind, &domain)?;
    let g = shortest_path_estimate(&field, &x, &y, &cfg)?;
    if let Some(path) = &a.out {
        input::write_output(Some(path), &g.path.to_csv(g.value))?;
    }
    if let Some(path) = &a.svg {
        let mut fig = svg::Figure::new(&domain, g.path.vertices());
        fig.polyline(g.path.vertices(), false, r#"fill="none" stroke="crimson" stroke-width="2""#);
        fig.dot(&x, r#"fill="crimson""#);
        fig.dot(&y, r#"fill="crimson""#);
        input::write_output(Some(path), &fig.finish())?;
    }
    let d = &g.diagnostics;
    let summary = json!({
        "density": kind.name(),
        "from": coords(&x),
        "to": coords(&y),
        "value": num(g.value),
        "estimate": true,
        "vertices": g.path.vertices().len(),
        "diagnostics": {
            "spacing": num(d.spacing),
            "finest_spacing": num(d.finest_spacing),
            "nested_levels": d.nested_levels,
            "nodes_settled": d.nodes_settled,
            "lattice_value": num(d.lattice_value),
            "sweeps": d.sweeps,
            "last_level_gain": num(d.last_level_gain),
        },
    });
    input::emit(&pretty(&summary));
    Ok(0)
}

fn balls(a: BallsArgs) -> Result<u8, CliError> {
    let domain = input::read_domain(&a.domain)?;
    let kind: MetricKind = a.metric.parse()?;
    let x = input::parse_point(&a.center)?;
    x.check_dim(domain.dim())?;
    if !domain.contains(&x)? {
        return Err(Error::OutsideDomain.into());
    }
    if !(a.s > 0.0 && a.s.is_finite()) {
        return Err(CliError::malformed(format!("s must be positive, got {}", a.s)));
    }
    require_planar(&domain)?;
    let estimated = !kind.is_closed_form();
    let rays = a.rays.unwrap_or(if estimated { 24 } else { 360 });
    let tol = a.tol.unwrap_or(if estimated { 1e-3 } else { 1e-10 });
    if rays == 0 {
        return Err(CliError::malformed("rays must be positive"));
    }
    let mut cfg = a.solver.config()?;
    if estimated && a.solver.resolution.is_none() {
        cfg.resolution = Resolution::Spacing(domain.diameter().finite().unwrap_or(4.0) / 128.0);
        cfg.refine_iters = a.solver.refine_iters.unwrap_or(5);
    }
    let field = density_kind(kind).map(|dk| DensityField::new(dk, &domain)).transpose()?;
    let mut metric = |z: &Point| -> hypmetrics_core::Result<f64> {
        match &field {
            Some(f) => Ok(shortest_path_estimate(f, &x, z, &cfg)?.value),
            None => kind.closed_form(&domain, &x, z),
        }
    };
    let boundary = trace_metric_ball(&domain, &mut metric, &x, a.s, rays, tol)?;
    if estimated {
        eprintln!(
            "warning: {}-ball traced from solver estimates (upper bounds on the metric) at spacing {}; \
             the boundary is drawn slightly inside the true ball",
            kind.name(),
            match cfg.resolution {
                Resolution::Spacing(h) => sig12(h),
                Resolution::Auto => "auto".into(),
            }
        );
    }
    let radii = match (kind, domain.diameter().finite()) {
        (MetricKind::Zeta | MetricKind::M, Some(d)) => Some(zeta_ball_radii(a.s, domain.eta(&x)?, d)?),
        (MetricKind::ZetaPrime, Some(d)) => Some(fixed_factor_ball_radii(
            FixedFactorRelation::ZetaPrimeEuclidean,
            a.s,
            Some((domain.eta(&x)?, d)),
        )?),
        _ => None,
    };
    let mut cloud = Vec::new();
    if let Some(n) = a.point_cloud {
        let mut rng = analysis::sampling::seeded_rng(resolve_seed(a.seed)?);
        for _ in 0..n {
            let p = analysis::sampling::sample_interior(&domain, &mut rng, 0.0)?;
            if metric(&p)? < a.s {
                cloud.push(p);
            }
        }
    }
    if let Some(path) = &a.svg {
        let mut focus = boundary.clone();
        if let Some((_, big_r)) = radii {
            focus.push(x.offset(&Point::xy(1.0, 1.0), big_r));
            focus.push(x.offset(&Point::xy(-1.0, -1.0), big_r));
        }
        let mut fig = svg::Figure::new(&domain, &focus);
        for p in &cloud {
            fig.dot(p, r#"fill="steelblue" fill-opacity="0.4""#);
        }
        fig.polyline(&boundary, true, r#"fill="none" stroke="steelblue" stroke-width="2""#);
        if let Some((r, big_r)) = radii {
            let dashed = r#"fill="none" stroke="gray" stroke-dasharray="4 3""#;
            fig.circle(&x, r, dashed);
            fig.circle(&x, big_r, dashed);
        }
        fig.dot(&x, r#"fill="black""#);
        input::write_output(Some(path), &fig.finish())?;
    }
    let summary = json!({
        "metric": kind.name(),
        "center": coords(&x),
        "s": num(a.s),
        "rays": rays,
        "estimate": estimated,
        "inner_radius": radii.map(|r| num(r.0)),
        "outer_radius": radii.map(|r| num(r.1)),
        "boundary_radius_min": num(boundary.iter().map(|p| p.dist(&x)).fold(f64::INFINITY, f64::min)),
        "boundary_radius_max": num(boundary.iter().map(|p| p.dist(&x)).fold(0.0, f64::max)),
        "point_cloud": cloud.len(),
    });
    input::emit(&pretty(&summary));
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, CliError> {
    if a.list {
        for s in suites() {
            input::emit(&format!("{}\t{}\n", s.name, s.statement));
        }
        return Ok(0);
    }
    let defaults = VerifyConfig::default();
    let cfg = VerifyConfig {
        seed: resolve_seed(a.seed)?,
        pairs: a.pairs.unwrap_or(defaults.pairs),
        solver_pairs: a.solver_pairs.unwrap_or(defaults.solver_pairs),
        inject_fault: a.inject_fault,
        ..defaults
    };
    let reports = run_suites(&a.suite, &cfg)?;
    let passed = reports.iter().all(|r| r.passed());
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite,
                "theorem": r.theorem,
                "checked": r.checked,
                "violations": r.violations.len(),
                "max_ratio": num(r.max_ratio),
            })
        })
        .collect();
    let full = json!({"passed": passed, "seed": cfg.seed, "suites": reports});
    match &a.report {
        Some(path) => {
            input::write_output(Some(path), &pretty(&full))?;
            input::emit(&pretty(&json!({"passed": passed, "seed": cfg.seed, "suites": summary})));
        }
        None => input::emit(&pretty(&full)),
    }
    Ok(if passed { 0 } else { 1 })
}

fn uniformity(a: UniformityArgs) -> Result<u8, CliError> {
    let domain = input::read_domain(&a.domain)?;
    let beta: MetricKind = a.metric.parse()?;
    let cfg = a.solver.config()?;
    let seed = resolve_seed(a.seed)?;
    let est = uniformity_ratio(&domain, a.pairs, &cfg, beta, seed)?;
    let mut out = json!({
        "metric": beta.name(),
        "seed": seed,
        "pairs_tested": est.pairs_tested,
        "pairs_skipped": est.pairs_skipped,
        "max_ratio": num(est.max_ratio),
        "argmax_pair": est.argmax_pair.as_ref().map(|(x, y)| json!([
            x.iter().map(|c| num(*c)).collect::<Vec<_>>(),
            y.iter().map(|c| num(*c)).collect::<Vec<_>>(),
        ])),
    });
    if matches!(domain.shape(), Shape::SlitDisk { .. }) {
        let ratios = slit_straddle_ratios(&domain, &[1e-2, 1e-3, 1e-4], &cfg)?;
        out["straddle"] = ratios
            .iter()
            .map(|r| json!({"eps": num(r.eps), "m": num(r.m), "zeta": num(r.zeta), "ratio": num(r.ratio)}))
            .collect();
    }
    input::emit(&pretty(&out));
    Ok(0)
}
