//! Named verification suites, one per inequality family.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::balls::{
    check_ball_inclusion, check_chain_inclusion, check_fixed_factor_inclusion, zeta_ball_radii,
    FixedFactorRelation,
};
use crate::analysis::mobius::random_mobius_map;
use crate::analysis::sampling::{random_unit_vector, sample_interior, sample_pair, seeded_rng, DEFAULT_SEED};
use crate::analysis::sharpness::sharpness_limit_suite;
use crate::analysis::uniformity::{
    nonuniform_zeta_k_check, slit_straddle_ratios, uniformity_ratio_on_pairs, PAIR_CLEARANCE,
};
use crate::analysis::PairViolation;
use crate::error::{Error, Result};
use crate::geom::{Domain, Point};
use crate::metrics::{self, MetricKind};
use crate::path::{inner_metric_estimate, shortest_path_estimate, DensityField, DensityKind, SolverConfig};
use crate::transforms::{mobius_distortion_check, DISTORTION_BOUND};

/// Absolute slack on closed-form inequalities.
pub const SLACK: f64 = 1e-12;
/// Relative tolerance granted to solver estimates.
pub const SOLVER_TOL: f64 = 1e-2;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Pairs per shape for closed-form suites.
    pub pairs: usize,
    /// Pairs per shape for suites that call the solver.
    pub solver_pairs: usize,
    /// Sphere samples per ball check.
    pub samples: usize,
    /// Replaces one constant by a wrong one, to exercise failure reporting.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            pairs: 200,
            solver_pairs: 8,
            samples: 500,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    /// The statement being checked.
    pub theorem: &'static str,
    pub checked: usize,
    pub violations: Vec<Value>,
    /// Largest observed `lhs / rhs` over the checked inequalities.
    pub max_ratio: f64,
    pub config: Value,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub struct Suite {
    pub name: &'static str,
    pub statement: &'static str,
    run: fn(&VerifyConfig, &mut Tally) -> Result<()>,
}

impl Suite {
    pub fn run(&self, cfg: &VerifyConfig) -> Result<SuiteReport> {
        let mut tally = Tally::default();
        (self.run)(cfg, &mut tally)?;
        Ok(SuiteReport {
            suite: self.name,
            theorem: self.statement,
            checked: tally.checked,
            violations: tally.violations,
            max_ratio: tally.max_ratio,
            config: serde_json::to_value(cfg).expect("config serializes"),
        })
    }
}

/// Accumulates checks of `lhs ≤ rhs`.
#[derive(Default)]
struct Tally {
    checked: usize,
    violations: Vec<Value>,
    max_ratio: f64,
}

impl Tally {
    fn le(&mut self, label: &str, x: &Point, y: &Point, lhs: f64, rhs: f64, slack: f64) {
        self.checked += 1;
        if rhs > 0.0 {
            self.max_ratio = self.max_ratio.max(lhs / rhs);
        }
        if !(lhs <= rhs + slack) {
            let mut v = serde_json::to_value(PairViolation::new(x, y, lhs, rhs)).expect("serializes");
            v["check"] = json!(label);
            self.violations.push(v);
        }
    }

    fn ratio(&mut self, r: f64) {
        if r.is_finite() {
            self.max_ratio = self.max_ratio.max(r);
        }
    }

    fn absorb<T: Serialize>(&mut self, checked: usize, violations: &[T], context: Value) {
        self.checked += checked;
        for v in violations {
            let mut v = serde_json::to_value(v).expect("serializes");
            v["context"] = context.clone();
            self.violations.push(v);
        }
    }
}

/// Bounded shapes the closed-form suites sample from.
pub fn test_domains() -> Vec<Domain> {
    let o = Point::origin(2);
    vec![
        Domain::unit_disk(),
        Domain::annulus(o.clone(), 1.0, 2.0).expect("valid annulus"),
        Domain::punctured_ball(o.clone(), 1.0).expect("valid punctured disk"),
        Domain::slit_disk(o, 1.0, Point::xy(1.0, 0.0)).expect("valid slit disk"),
        Domain::polygon(
            [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
                .iter()
                .map(|&(a, b)| Point::xy(a, b))
                .collect(),
        )
        .expect("valid polygon"),
        Domain::ball(Point::origin(3), 1.0).expect("valid ball"),
    ]
}

fn pairs(domain: &Domain, rng: &mut ChaCha8Rng, n: usize) -> Result<Vec<(Point, Point)>> {
    let d = domain.diameter().finite().unwrap_or(1.0);
    (0..n).map(|_| sample_pair(domain, rng, PAIR_CLEARANCE * d)).collect()
}

fn closed(kind: MetricKind, d: &Domain, x: &Point, y: &Point) -> Result<f64> {
    kind.closed_form(d, x, y)
}

/// Runs `body` on `cfg.pairs` random pairs of every test domain.
fn for_pairs<F>(cfg: &VerifyConfig, t: &mut Tally, mut body: F) -> Result<()>
where
    F: FnMut(&Domain, &Point, &Point, &mut Tally) -> Result<()>,
{
    let mut rng = seeded_rng(cfg.seed);
    for d in test_domains() {
        for (x, y) in pairs(&d, &mut rng, cfg.pairs)? {
            body(&d, &x, &y, t)?;
        }
    }
    Ok(())
}

fn upper_constant(cfg: &VerifyConfig) -> f64 {
    if cfg.inject_fault {
        1.0
    } else {
        2.0
    }
}

fn metric_axioms(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    for d in test_domains().into_iter().filter(|d| d.dim() == 2) {
        let scale = d.diameter().to_f64();
        for _ in 0..cfg.pairs {
            let x = sample_interior(&d, &mut rng, PAIR_CLEARANCE * scale)?;
            let y = sample_interior(&d, &mut rng, PAIR_CLEARANCE * scale)?;
            let z = sample_interior(&d, &mut rng, PAIR_CLEARANCE * scale)?;
            for kind in [MetricKind::Zeta, MetricKind::ZetaPrime] {
                let xy = closed(kind, &d, &x, &y)?;
                let yx = closed(kind, &d, &y, &x)?;
                let yz = closed(kind, &d, &y, &z)?;
                let xz = closed(kind, &d, &x, &z)?;
                t.le("symmetry", &x, &y, (xy - yx).abs(), 0.0, SLACK);
                t.le("triangle", &x, &z, xz, xy + yz, SLACK);
                t.le("nonnegative", &x, &y, 0.0, xy, 0.0);
                t.le("identity", &x, &x, closed(kind, &d, &x, &x)?, 0.0, 0.0);
            }
        }
    }
    Ok(())
}

fn zeta_vs_zeta_prime(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let c = upper_constant(cfg);
    for_pairs(cfg, t, |d, x, y, t| {
        let z = metrics::zeta(d, x, y)?;
        let zp = metrics::zeta_prime(d, x, y)?;
        t.le("zeta' <= zeta", x, y, zp, z, SLACK);
        t.le("zeta <= c zeta'", x, y, z, c * zp, SLACK);
        Ok(())
    })
}

fn zeta_vs_j(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for_pairs(cfg, t, |d, x, y, t| {
        let j = metrics::j_metric(d, x, y)?;
        let jp = metrics::j_prime_metric(d, x, y)?;
        let z = metrics::zeta(d, x, y)?;
        let zp = metrics::zeta_prime(d, x, y)?;
        t.le("j <= zeta", x, y, j, z, SLACK);
        t.le("zeta <= 2 j", x, y, z, 2.0 * j, SLACK);
        t.le("j' <= zeta'", x, y, jp, zp, SLACK);
        t.le("zeta' <= 2 j'", x, y, zp, 2.0 * jp, SLACK);
        Ok(())
    })
}

fn zeta_vs_j_prime(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for_pairs(cfg, t, |d, x, y, t| {
        let jp = metrics::j_prime_metric(d, x, y)?;
        let z = metrics::zeta(d, x, y)?;
        t.le("j' <= zeta", x, y, jp, z, SLACK);
        t.le("zeta <= 2 j'", x, y, z, 2.0 * jp, SLACK);
        Ok(())
    })
}

fn zeta_prime_vs_j(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for_pairs(cfg, t, |d, x, y, t| {
        let j = metrics::j_metric(d, x, y)?;
        let zp = metrics::zeta_prime(d, x, y)?;
        t.le("j/2 <= zeta'", x, y, 0.5 * j, zp, SLACK);
        t.le("zeta' <= 2 j", x, y, zp, 2.0 * j, SLACK);
        Ok(())
    })
}

fn eta_log_bound(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for_pairs(cfg, t, |d, x, y, t| {
        let lhs = (d.eta(x)? / d.eta(y)?).ln().abs();
        t.le("|log eta(x)/eta(y)| <= zeta", x, y, lhs, metrics::zeta(d, x, y)?, SLACK);
        Ok(())
    })
}

fn hyperbolic_ball(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    for d in [Domain::unit_disk(), Domain::ball(Point::origin(3), 1.0)?] {
        for (x, y) in pairs(&d, &mut rng, cfg.pairs)? {
            let h = metrics::hyperbolic_closed_form(&d, &x, &y)?;
            let z = metrics::zeta(&d, &x, &y)?;
            t.le("zeta <= h", &x, &y, z, h, SLACK);
            t.le("h <= 2 zeta", &x, &y, h, 2.0 * z, SLACK);
        }
    }
    Ok(())
}

fn solver_domains() -> Vec<Domain> {
    test_domains().into_iter().filter(|d| d.dim() == 2).collect()
}

fn m_dominates_zeta(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let scfg = SolverConfig::default();
    for d in solver_domains() {
        let field = DensityField::new(DensityKind::M, &d)?;
        for (x, y) in pairs(&d, &mut rng, cfg.solver_pairs)? {
            let m = shortest_path_estimate(&field, &x, &y, &scfg)?.value;
            let z = metrics::zeta(&d, &x, &y)?;
            t.le("zeta <= m", &x, &y, z, m, SLACK);
            t.le("zeta' <= zeta", &x, &y, metrics::zeta_prime(&d, &x, &y)?, z, SLACK);
        }
    }
    Ok(())
}

fn zeta_vs_k(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let scfg = SolverConfig::default();
    for d in solver_domains() {
        let field = DensityField::new(DensityKind::K, &d)?;
        for (x, y) in pairs(&d, &mut rng, cfg.solver_pairs)? {
            let k = shortest_path_estimate(&field, &x, &y, &scfg)?.value;
            let j = metrics::j_metric(&d, &x, &y)?;
            t.le("j <= k", &x, &y, j, k, SLACK);
            t.le("zeta <= 2 k", &x, &y, metrics::zeta(&d, &x, &y)?, 2.0 * k, SLACK);
        }
    }
    Ok(())
}

fn inner_metric(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let scfg = SolverConfig::default();
    for d in [Domain::unit_disk(), Domain::annulus(Point::origin(2), 1.0, 2.0)?] {
        let field = DensityField::new(DensityKind::M, &d)?;
        for (x, y) in pairs(&d, &mut rng, cfg.solver_pairs)? {
            let est = inner_metric_estimate(MetricKind::Zeta, &field, &x, &y, &scfg, 12)?;
            let m = est.candidate.value;
            t.le("|l_zeta - m| <= 1% m", &x, &y, (est.value - m).abs(), SOLVER_TOL * m, 0.0);
        }
    }
    Ok(())
}

fn local_bounds(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let scfg = SolverConfig::default();
    for d in solver_domains() {
        let diam = d.diameter().to_f64();
        let field = DensityField::new(DensityKind::M, &d)?;
        for k in 0..cfg.pairs.max(cfg.solver_pairs) {
            let x = sample_interior(&d, &mut rng, PAIR_CLEARANCE * diam)?;
            let eta = d.eta(&x)?;
            let lambda = rng.gen_range(0.01..0.5);
            let y = x.offset(&random_unit_vector(2, &mut rng), lambda * eta / diam);
            let u = diam * x.dist(&y);
            let lower = (u / (eta + u)).ln_1p();
            let upper = (u / (eta - u)).ln_1p();
            let z = metrics::zeta(&d, &x, &y)?;
            t.le("lower <= zeta", &x, &y, lower, z, SLACK);
            t.le("zeta <= upper", &x, &y, z, upper, SLACK);
            if k < cfg.solver_pairs {
                let m = shortest_path_estimate(&field, &x, &y, &scfg)?.value;
                t.le("lower <= m", &x, &y, lower, m, SLACK);
                t.le("m <= upper", &x, &y, m, upper * (1.0 + SOLVER_TOL), 0.0);
            }
        }
    }
    Ok(())
}

fn density_limit(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let step = 1e-6;
    for d in test_domains() {
        let diam = d.diameter().to_f64();
        for _ in 0..cfg.pairs.min(20) {
            let x = sample_interior(&d, &mut rng, 1e-2 * diam)?;
            let y = x.offset(&random_unit_vector(d.dim(), &mut rng), step);
            let limit = diam / d.eta(&x)?;
            let rel = (metrics::zeta(&d, &x, &y)? / step - limit).abs() / limit;
            t.le("|zeta(x,x+tv)/t - d/eta| <= 1e-4 d/eta", &x, &y, rel, 1e-4, 0.0);
        }
    }
    Ok(())
}

/// Centers used by the Euclidean ball checks.
pub fn ball_check_centers() -> Vec<(Domain, Point)> {
    let domains = test_domains();
    vec![
        (domains[0].clone(), Point::xy(0.0, 0.0)),
        (domains[0].clone(), Point::xy(0.3, -0.4)),
        (domains[1].clone(), Point::xy(0.0, 1.5)),
        (domains[4].clone(), Point::xy(0.5, 0.5)),
        (domains[4].clone(), Point::xy(1.5, 0.4)),
    ]
}

pub const BALL_RADII: [f64; 4] = [0.1, std::f64::consts::LN_2, 1.0, 2.0];

fn euclidean_balls(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for (d, x) in ball_check_centers() {
        let diam = d.diameter().to_f64();
        for s in BALL_RADII {
            let radii = zeta_ball_radii(s, d.eta(&x)?, diam)?;
            for kind in [MetricKind::Zeta, MetricKind::ZetaPrime] {
                // ζ' balls sit between ζ balls of radii s and 2s.
                let radii = match kind {
                    MetricKind::ZetaPrime => (radii.0, zeta_ball_radii(2.0 * s, d.eta(&x)?, diam)?.1),
                    _ => radii,
                };
                let rep = check_ball_inclusion(&d, |z| closed(kind, &d, &x, z), &x, s, radii, cfg.samples, 1e-9, 0.0)?;
                t.ratio(rep.outer_radius / rep.inner_radius);
                t.absorb(
                    rep.samples_tested,
                    &rep.violations,
                    json!({"shape": d.shape().name(), "metric": kind.name(), "s": s}),
                );
            }
        }
    }
    Ok(())
}

fn m_euclidean_balls(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let scfg = SolverConfig::default();
    let d = Domain::unit_disk();
    let field = DensityField::new(DensityKind::M, &d)?;
    for x in [Point::xy(0.0, 0.0), Point::xy(0.3, -0.4)] {
        for s in BALL_RADII {
            let radii = zeta_ball_radii(s, d.eta(&x)?, 2.0)?;
            let m = |z: &Point| Ok(shortest_path_estimate(&field, &x, z, &scfg)?.value);
            let rep = check_ball_inclusion(&d, m, &x, s, radii, cfg.solver_pairs, 1e-9, SOLVER_TOL)?;
            t.absorb(rep.samples_tested, &rep.violations, json!({"center": x.coords(), "s": s}));
        }
    }
    Ok(())
}

pub const CHAIN_RADII: [f64; 3] = [0.1, 0.3, 0.6];

fn zeta_m_ball_chain(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let scfg = SolverConfig::default();
    let d = Domain::unit_disk();
    let field = DensityField::new(DensityKind::M, &d)?;
    for x in [Point::xy(0.0, 0.0), Point::xy(0.3, -0.4)] {
        for s in CHAIN_RADII {
            let m = |z: &Point| Ok(shortest_path_estimate(&field, &x, z, &scfg)?.value);
            let rep = check_chain_inclusion(&d, m, &x, s, cfg.solver_pairs, SOLVER_TOL)?;
            t.absorb(rep.samples_tested, &rep.violations, json!({"center": x.coords(), "s": s}));
        }
    }
    Ok(())
}

fn fixed_factor_balls(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    for d in test_domains() {
        let diam = d.diameter().to_f64();
        for _ in 0..4 {
            let x = sample_interior(&d, &mut rng, PAIR_CLEARANCE * diam)?;
            let pts = (0..cfg.pairs)
                .map(|_| sample_interior(&d, &mut rng, PAIR_CLEARANCE * diam))
                .collect::<Result<Vec<_>>>()?;
            for rel in FixedFactorRelation::ALL {
                for s in BALL_RADII {
                    let rep = check_fixed_factor_inclusion(&d, rel, &x, s, &pts)?;
                    t.absorb(
                        rep.samples_tested,
                        &rep.violations,
                        json!({"shape": d.shape().name(), "relation": rel, "s": s}),
                    );
                }
            }
        }
    }
    Ok(())
}

fn mobius_distortion(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    for d in [Domain::unit_disk(), Domain::ball(Point::origin(3), 1.0)?] {
        for _ in 0..10 {
            let (map, _) = random_mobius_map(&d, &mut rng, 3)?;
            let ps = pairs(&d, &mut rng, cfg.pairs.min(100))?;
            let rep = mobius_distortion_check(&map, &d, &ps, DISTORTION_BOUND)?;
            t.ratio(rep.max_ratio_zeta.max(rep.max_ratio_zeta_prime));
            t.absorb(rep.pairs_checked, &rep.violations, json!({"map": map.to_json()}));
        }
    }
    Ok(())
}

/// Upper bound on `m/ζ` in a ball, with the solver tolerance added.
pub const BALL_UNIFORMITY_BOUND: f64 = 2.0 * 1.02;

fn uniformity(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let scfg = SolverConfig::default();
    let d = Domain::unit_disk();
    let ps = pairs(&d, &mut rng, cfg.solver_pairs)?;
    let est = uniformity_ratio_on_pairs(&d, &ps, &scfg, MetricKind::Zeta)?;
    let (x, y) = est
        .argmax_pair
        .clone()
        .map(|(a, b)| (Point::new(&a), Point::new(&b)))
        .unwrap_or_else(|| (Point::new(&[0.0, 0.0]), Point::new(&[0.0, 0.0])));
    t.le("m/zeta <= 2 in the disk", &x?, &y?, est.max_ratio, BALL_UNIFORMITY_BOUND, 0.0);
    t.checked += est.pairs_tested.saturating_sub(1);

    let slit = &test_domains()[3];
    let ratios = slit_straddle_ratios(slit, &[1e-2, 1e-3, 1e-4], &SolverConfig::with_spacing(0.02))?;
    for w in ratios.windows(2) {
        let (x, y) = crate::analysis::uniformity::slit_straddle_pair(slit, w[1].eps)?;
        t.le("straddling m/zeta increases as eps shrinks", &x, &y, w[0].ratio, w[1].ratio, 0.0);
    }
    Ok(())
}

fn nonuniform_zeta_k(cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    let mut rng = seeded_rng(cfg.seed);
    let slit = &test_domains()[3];
    let ps = pairs(slit, &mut rng, cfg.solver_pairs)?;
    let rep = nonuniform_zeta_k_check(slit, &ps, &SolverConfig::default())?;
    t.ratio(rep.max_ratio);
    t.absorb(rep.checked, &rep.violations, json!({"shape": "slit_disk"}));
    Ok(())
}

fn sharpness(_cfg: &VerifyConfig, t: &mut Tally) -> Result<()> {
    for c in sharpness_limit_suite(&SolverConfig::default())? {
        t.checked += 1;
        t.ratio(c.deviation() / c.tolerance);
        if !c.passed() {
            t.violations.push(serde_json::to_value(&c).expect("serializes"));
        }
    }
    Ok(())
}

static SUITES: &[Suite] = &[
    Suite {
        name: "metric-axioms",
        statement: "zeta and zeta' are symmetric, vanish only on the diagonal and satisfy the triangle inequality",
        run: metric_axioms,
    },
    Suite {
        name: "zeta-vs-zeta-prime",
        statement: "zeta' <= zeta <= 2 zeta'",
        run: zeta_vs_zeta_prime,
    },
    Suite {
        name: "zeta-vs-j",
        statement: "j <= zeta <= 2 j and j' <= zeta' <= 2 j' on bounded domains",
        run: zeta_vs_j,
    },
    Suite {
        name: "zeta-vs-j-prime",
        statement: "j' <= zeta <= 2 j' on bounded domains",
        run: zeta_vs_j_prime,
    },
    Suite {
        name: "zeta-prime-vs-j",
        statement: "j/2 <= zeta' <= 2 j on bounded domains",
        run: zeta_prime_vs_j,
    },
    Suite {
        name: "eta-log-bound",
        statement: "|log(eta(x)/eta(y))| <= zeta(x,y)",
        run: eta_log_bound,
    },
    Suite {
        name: "m-dominates-zeta",
        statement: "m >= zeta >= zeta'",
        run: m_dominates_zeta,
    },
    Suite {
        name: "hyperbolic-ball",
        statement: "zeta <= h <= 2 zeta in balls",
        run: hyperbolic_ball,
    },
    Suite {
        name: "zeta-vs-k",
        statement: "j <= k and zeta <= 2 k on bounded domains",
        run: zeta_vs_k,
    },
    Suite {
        name: "inner-metric",
        statement: "the inner metric of zeta is m",
        run: inner_metric,
    },
    Suite {
        name: "local-bounds",
        statement: "log(1 + du/(eta + du)) <= zeta, m <= log(1 + du/(eta - du)) for u = |x-y| < eta(x)/d",
        run: local_bounds,
    },
    Suite {
        name: "density-limit",
        statement: "zeta(x,y)/|x-y| -> d/eta(x) as y -> x",
        run: density_limit,
    },
    Suite {
        name: "euclidean-balls",
        statement: "B(x,r) in B_zeta(x,s) in B(x,R), r = (1-e^-s) eta/d, R = (e^s-1) eta/d; zeta' balls with R at 2s",
        run: euclidean_balls,
    },
    Suite {
        name: "m-euclidean-balls",
        statement: "B(x,r) in B_m(x,s) in B(x,R) with the zeta radii",
        run: m_euclidean_balls,
    },
    Suite {
        name: "zeta-m-ball-chain",
        statement: "B_zeta(x,r) in B_m(x,s) in B_zeta(x,s) in B_m(x,R), r = log(2-e^-s), R = -log(2-e^s)",
        run: zeta_m_ball_chain,
    },
    Suite {
        name: "fixed-factor-balls",
        statement: "ball inclusions between zeta, zeta', j, j' and Euclidean balls with fixed radius factors",
        run: fixed_factor_balls,
    },
    Suite {
        name: "mobius-distortion",
        statement: "zeta_f(D)(fx,fy) <= 4 zeta_D(x,y) and likewise for zeta' under Mobius maps",
        run: mobius_distortion,
    },
    Suite {
        name: "uniformity",
        statement: "m <= c zeta in uniform domains (c = 2 in balls); m/zeta unbounded across a slit",
        run: uniformity,
    },
    Suite {
        name: "nonuniform-zeta-k",
        statement: "zeta <= k in a bounded non-uniform domain",
        run: nonuniform_zeta_k,
    },
    Suite {
        name: "sharpness",
        statement: "near-limit ratios showing the comparison constants are best possible",
        run: sharpness,
    },
];

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn find_suite(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {name:?}")))
}

/// Runs the named suite, or every suite for `"all"`.
pub fn run_suites(name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| s.run(cfg)).collect()
    } else {
        Ok(vec![find_suite(name)?.run(cfg)?])
    }
}
