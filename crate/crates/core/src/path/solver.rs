//! Geodesic estimation for density-weighted path metrics.
//!
//! Two stages:
//!
//! 1. A lattice shortest-path search. Nodes sit on a grid anchored at the
//!    start point with spacing `h`, keep a clearance of at least
//!    `boundary_margin · h` from ∂D, and connect to their stencil neighbors
//!    with edge weight equal to the density integral along the segment. When
//!    an endpoint is closer to ∂D than the bulk grid can resolve, nested
//!    grids with spacing `h/2, h/4, …` are added in windows around the
//!    endpoints until the finest spacing is a fixed fraction of the endpoint
//!    clearance. The search is A* with a closed-form lower bound on the
//!    metric (`ζ` for `m`, `j` for `k`) as the heuristic, which is consistent
//!    because the bound is itself a metric dominated by every edge weight.
//! 2. Polyline refinement. The lattice path is resampled at equal density
//!    length, then each interior vertex is moved by golden-section search
//!    along the directions normal and tangent to its neighbor chord. The
//!    vertex count doubles level by level (midpoint insertion never changes
//!    the length) up to a count tied to the lattice spacing.
//!
//! Every returned value is the density length of an explicit interior
//! polyline, hence an upper bound on the true metric.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{covered, Point};
use crate::path::{DensityField, PolylinePath};

/// Lattice spacing: explicit, or chosen from the endpoints and the domain.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Resolution {
    /// Bulk spacing `d(D)/512` on bounded domains and
    /// `max(δ(x), δ(y), |x − y|/64)/8` on unbounded ones; nested grids
    /// refine down to `min(δ(x), δ(y))/8` around the endpoints.
    Auto,
    Spacing(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub resolution: Resolution,
    /// 1: axis + diagonal neighbors; 2: adds the knight-move directions.
    pub connectivity: u8,
    /// Maximum refinement sweeps per polyline level.
    pub refine_iters: usize,
    /// Relative tolerance of every segment quadrature.
    pub quad_tol: f64,
    /// Minimum node clearance, in units of the local spacing.
    pub boundary_margin: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            resolution: Resolution::Auto,
            connectivity: 2,
            refine_iters: 40,
            quad_tol: 1e-8,
            boundary_margin: 1.0,
        }
    }
}

impl SolverConfig {
    pub fn with_spacing(h: f64) -> Self {
        Self {
            resolution: Resolution::Spacing(h),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Resolution::Spacing(h) = self.resolution {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::InvalidConfig(format!("resolution must be positive, got {h}")));
            }
        }
        if !(1..=2).contains(&self.connectivity) {
            return Err(Error::InvalidConfig(format!(
                "connectivity must be 1 or 2, got {}",
                self.connectivity
            )));
        }
        if !(self.quad_tol > 0.0 && self.quad_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "quad_tol must lie in (0, 1), got {}",
                self.quad_tol
            )));
        }
        if !(self.boundary_margin >= 1.0 && self.boundary_margin.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "boundary_margin must be at least 1, got {}",
                self.boundary_margin
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SolverDiagnostics {
    /// Bulk lattice spacing.
    pub spacing: f64,
    /// Spacing of the finest nested grid.
    pub finest_spacing: f64,
    /// Number of nested grids below the bulk one.
    pub nested_levels: u32,
    pub nodes_created: usize,
    pub nodes_settled: usize,
    /// Density length of the raw lattice path.
    pub lattice_value: f64,
    pub vertices: usize,
    pub sweeps: usize,
    /// Relative decrease produced by the last vertex-doubling level; a
    /// proxy for the remaining discretization error.
    pub last_level_gain: f64,
}

#[derive(Clone, Debug)]
pub struct GeodesicEstimate {
    /// Upper bound on the path metric between the endpoints.
    pub value: f64,
    pub path: PolylinePath,
    pub diagnostics: SolverDiagnostics,
}

/// Window radius of nested grids around the endpoints, in local spacings.
const WINDOW: f64 = 12.0;
/// Finest spacing is at most `min(δ(x), δ(y)) / (ENDPOINT_FRACTION (1 + margin))`.
const ENDPOINT_FRACTION: f64 = 4.0;
const MAX_NODES: usize = 6_000_000;
const MAX_NESTED: u32 = 48;
const GOLDEN_STEPS: usize = 20;
const SWEEP_REL_TOL: f64 = 1e-9;
const MIN_VERTICES: usize = 16;
const MAX_VERTICES: usize = 2048;

/// Estimates the path metric of `field` between `x` and `y`.
pub fn shortest_path_estimate(
    field: &DensityField<'_>,
    x: &Point,
    y: &Point,
    cfg: &SolverConfig,
) -> Result<GeodesicEstimate> {
    cfg.validate()?;
    let domain = field.domain();
    let dx = domain.boundary_distance(x)?;
    let dy = domain.boundary_distance(y)?;
    if x == y {
        return Ok(GeodesicEstimate {
            value: 0.0,
            path: PolylinePath::single(x.clone()),
            diagnostics: SolverDiagnostics::default(),
        });
    }
    if !(2..=3).contains(&domain.dim()) {
        return Err(Error::InvalidArgument(format!(
            "the lattice solver supports dimensions 2 and 3, got {}",
            domain.dim()
        )));
    }

    let h0 = match cfg.resolution {
        Resolution::Spacing(h) => h,
        Resolution::Auto => match domain.diameter().finite() {
            Some(d) => d / 512.0,
            None => dx.max(dy).max(x.dist(y) / 64.0) / 8.0,
        },
    };
    let floor = dx.min(dy) / (ENDPOINT_FRACTION * (1.0 + cfg.boundary_margin));
    let mut nested = 0u32;
    while h0 / f64::powi(2.0, nested as i32) > floor && nested < MAX_NESTED {
        nested += 1;
    }

    let clip = if domain.is_bounded() {
        None
    } else {
        let pad = 4.0 * x.dist(y) + 4.0 * dx.max(dy);
        let lo: Vec<f64> = x.coords().iter().zip(y.coords()).map(|(a, b)| a.min(*b) - pad).collect();
        let hi: Vec<f64> = x.coords().iter().zip(y.coords()).map(|(a, b)| a.max(*b) + pad).collect();
        Some((lo, hi))
    };

    let mut lattice = Lattice::new(field, x.clone(), y.clone(), h0, nested, clip, cfg);
    let search = lattice.search()?;

    let mut diagnostics = SolverDiagnostics {
        spacing: h0,
        finest_spacing: lattice.spacing(nested),
        nested_levels: nested,
        nodes_created: lattice.nodes.len(),
        nodes_settled: search.settled,
        lattice_value: search.value,
        ..SolverDiagnostics::default()
    };

    let euclid: f64 = search.points.windows(2).map(|w| w[0].dist(&w[1])).sum();
    let target_vertices = ((euclid / h0).ceil() as usize)
        .next_power_of_two()
        .clamp(MIN_VERTICES, MAX_VERTICES);
    let refined = refine(field, &search.points, &search.cumulative, target_vertices, cfg)?;

    let (value, points) = if refined.value <= search.value {
        diagnostics.sweeps = refined.sweeps;
        diagnostics.last_level_gain = refined.last_level_gain;
        (refined.value, refined.points)
    } else {
        (search.value, search.points)
    };
    diagnostics.vertices = points.len();
    Ok(GeodesicEstimate {
        value,
        path: PolylinePath::from_vertices_unchecked(points),
        diagnostics,
    })
}

type Key = [i64; 3];

struct Node {
    key: Key,
    pos: Point,
    clearance: f64,
    /// Bit `l` set when the node is active on grid level `l`.
    mask: u64,
    heuristic: f64,
    g: f64,
    parent: u32,
    settled: bool,
}

struct SearchResult {
    points: Vec<Point>,
    /// Cumulative density length at each point.
    cumulative: Vec<f64>,
    value: f64,
    settled: usize,
}

#[derive(Copy, Clone, PartialEq)]
struct Entry_ {
    f: f64,
    g: f64,
    idx: u32,
}

impl Eq for Entry_ {}

impl Ord for Entry_ {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on f, ties broken by index for determinism
        other
            .f
            .total_cmp(&self.f)
            .then_with(|| other.idx.cmp(&self.idx))
    }
}

impl PartialOrd for Entry_ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const TARGET: u32 = u32::MAX;
const NO_PARENT: u32 = u32::MAX - 1;

struct Lattice<'f, 'd> {
    field: &'f DensityField<'d>,
    start: Point,
    target: Point,
    target_clearance: f64,
    dim: usize,
    h0: f64,
    nested: u32,
    unit: f64,
    margin: f64,
    clip: Option<(Vec<f64>, Vec<f64>)>,
    stencil: Vec<Key>,
    snap: Vec<Key>,
    quad_tol: f64,
    nodes: Vec<Node>,
    index: HashMap<Key, u32>,
}

fn offsets(dim: usize, reach: i64) -> Vec<Key> {
    let mut out = Vec::new();
    let zr = if dim == 3 { -reach..=reach } else { 0..=0 };
    for i in -reach..=reach {
        for j in -reach..=reach {
            for k in zr.clone() {
                if (i, j, k) != (0, 0, 0) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl<'f, 'd> Lattice<'f, 'd> {
    fn new(
        field: &'f DensityField<'d>,
        start: Point,
        target: Point,
        h0: f64,
        nested: u32,
        clip: Option<(Vec<f64>, Vec<f64>)>,
        cfg: &SolverConfig,
    ) -> Self {
        let dim = start.dim();
        let reach = cfg.connectivity as i64;
        let stencil = offsets(dim, reach)
            .into_iter()
            .filter(|o| gcd(gcd(o[0], o[1]), o[2]) == 1)
            .collect();
        let snap = offsets(dim, 2)
            .into_iter()
            .filter(|o| o.iter().map(|v| v * v).sum::<i64>() <= 4)
            .collect();
        let target_clearance = field.domain().clearance(&target);
        Self {
            field,
            start,
            target,
            target_clearance,
            dim,
            h0,
            nested,
            unit: h0 / f64::powi(2.0, nested as i32),
            margin: cfg.boundary_margin,
            clip,
            stencil,
            snap,
            quad_tol: cfg.quad_tol,
            nodes: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn spacing(&self, level: u32) -> f64 {
        self.h0 / f64::powi(2.0, level as i32)
    }

    fn position(&self, key: &Key) -> Point {
        Point::from_iter_unchecked(
            self.start
                .coords()
                .iter()
                .zip(key.iter())
                .map(|(s, k)| s + *k as f64 * self.unit),
        )
    }

    fn active_mask(&self, key: &Key, pos: &Point, clearance: f64) -> u64 {
        if clearance <= 0.0 {
            return 0;
        }
        let tz = key[..self.dim]
            .iter()
            .filter(|&&k| k != 0)
            .map(|k| k.trailing_zeros())
            .min()
            .unwrap_or(u32::MAX);
        let coarsest = self.nested.saturating_sub(tz);
        let near = pos.dist(&self.start).min(pos.dist(&self.target));
        let mut mask = 0u64;
        for level in coarsest..=self.nested {
            let h = self.spacing(level);
            if clearance < self.margin * h {
                continue;
            }
            let ok = if level == 0 {
                match &self.clip {
                    Some((lo, hi)) => pos
                        .coords()
                        .iter()
                        .zip(lo.iter().zip(hi))
                        .all(|(c, (l, u))| *c >= *l && *c <= *u),
                    None => true,
                }
            } else {
                near <= WINDOW * h
            };
            if ok {
                mask |= 1 << level;
            }
        }
        mask
    }

    fn node(&mut self, key: Key) -> Result<u32> {
        match self.index.entry(key) {
            Entry::Occupied(e) => Ok(*e.get()),
            Entry::Vacant(e) => {
                if self.nodes.len() >= MAX_NODES {
                    return Err(Error::InvalidConfig(
                        "lattice exceeds the node budget; coarsen the resolution".into(),
                    ));
                }
                let idx = self.nodes.len() as u32;
                e.insert(idx);
                let pos = Point::from_iter_unchecked(
                    self.start
                        .coords()
                        .iter()
                        .zip(key.iter())
                        .map(|(s, k)| s + *k as f64 * self.unit),
                );
                let clearance = self.field.domain().clearance(&pos);
                let mask = self.active_mask(&key, &pos, clearance);
                let heuristic = if mask != 0 {
                    self.field
                        .lower_bound(&pos, clearance, &self.target, self.target_clearance)
                } else {
                    0.0
                };
                self.nodes.push(Node {
                    key,
                    pos,
                    clearance,
                    mask,
                    heuristic,
                    g: f64::INFINITY,
                    parent: NO_PARENT,
                    settled: false,
                });
                Ok(idx)
            }
        }
    }

    fn edge_weight(&self, a: &Point, ca: f64, b: &Point, cb: f64) -> Option<f64> {
        if !covered(ca, cb, a.dist(b)) && !self.field.domain().segment_is_interior(a, b) {
            return None;
        }
        self.field.segment_length_unchecked(a, b, self.quad_tol).ok()
    }

    fn search(&mut self) -> Result<SearchResult> {
        let source = self.node([0, 0, 0])?;
        debug_assert_eq!(self.position(&[0, 0, 0]), self.start);
        self.nodes[source as usize].g = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(Entry_ {
            f: self.nodes[source as usize].heuristic,
            g: 0.0,
            idx: source,
        });
        let mut target_g = f64::INFINITY;
        let mut target_parent = NO_PARENT;
        let mut settled = 0usize;
        let mut neighbors: Vec<Key> = Vec::new();

        while let Some(Entry_ { g, idx, .. }) = heap.pop() {
            if idx == TARGET {
                break;
            }
            let u = idx as usize;
            if g > self.nodes[u].g || self.nodes[u].settled {
                continue;
            }
            self.nodes[u].settled = true;
            settled += 1;
            let (ukey, upos, uclear, umask) = {
                let n = &self.nodes[u];
                (n.key, n.pos.clone(), n.clearance, n.mask)
            };

            neighbors.clear();
            for level in 0..=self.nested {
                let step = 1i64 << (self.nested - level);
                let h = self.spacing(level);
                if umask & (1 << level) != 0 {
                    for o in &self.stencil {
                        neighbors.push([
                            ukey[0] + o[0] * step,
                            ukey[1] + o[1] * step,
                            ukey[2] + o[2] * step,
                        ]);
                    }
                }
                if idx == source {
                    for o in &self.snap {
                        neighbors.push([o[0] * step, o[1] * step, o[2] * step]);
                    }
                }
                let snaps_target = (umask & (1 << level) != 0 || idx == source)
                    && upos.dist(&self.target) <= 2.0 * h;
                if snaps_target && target_g > g {
                    if let Some(w) = self.edge_weight(&upos, uclear, &self.target, self.target_clearance) {
                        if g + w < target_g {
                            target_g = g + w;
                            target_parent = idx;
                            heap.push(Entry_ {
                                f: target_g,
                                g: target_g,
                                idx: TARGET,
                            });
                        }
                    }
                }
            }

            for (slot, key) in neighbors.clone().into_iter().enumerate() {
                let v = self.node(key)? as usize;
                if v == u || self.nodes[v].settled {
                    continue;
                }
                // Level the edge belongs to: stencil edges need the neighbor
                // active on that level; snap edges from the source need it
                // active on the snap level.
                let level = self.edge_level(slot, idx == source, umask);
                if self.nodes[v].mask & (1 << level) == 0 {
                    continue;
                }
                let vpos = self.nodes[v].pos.clone();
                let vclear = self.nodes[v].clearance;
                let lb = self.field.lower_bound(&upos, uclear, &vpos, vclear);
                if g + lb >= self.nodes[v].g {
                    continue;
                }
                if let Some(w) = self.edge_weight(&upos, uclear, &vpos, vclear) {
                    let cand = g + w;
                    if cand < self.nodes[v].g {
                        let node = &mut self.nodes[v];
                        node.g = cand;
                        node.parent = idx;
                        heap.push(Entry_ {
                            f: cand + node.heuristic,
                            g: cand,
                            idx: v as u32,
                        });
                    }
                }
            }
        }

        if !target_g.is_finite() {
            return Err(Error::Disconnected);
        }

        let mut points = vec![self.target.clone()];
        let mut cumulative = vec![target_g];
        let mut cur = target_parent;
        while cur != NO_PARENT {
            let n = &self.nodes[cur as usize];
            points.push(n.pos.clone());
            cumulative.push(n.g);
            cur = n.parent;
        }
        points.reverse();
        cumulative.reverse();
        Ok(SearchResult {
            points,
            cumulative,
            value: target_g,
            settled,
        })
    }

    /// Maps a slot of the neighbor list built in `search` back to its level.
    fn edge_level(&self, slot: usize, is_source: bool, mask: u64) -> u32 {
        let mut slot = slot;
        for level in 0..=self.nested {
            if mask & (1 << level) != 0 {
                if slot < self.stencil.len() {
                    return level;
                }
                slot -= self.stencil.len();
            }
            if is_source {
                if slot < self.snap.len() {
                    return level;
                }
                slot -= self.snap.len();
            }
        }
        unreachable!("neighbor slot out of range")
    }
}

struct Refined {
    points: Vec<Point>,
    value: f64,
    sweeps: usize,
    last_level_gain: f64,
}

/// Resamples `points` at `n` equal steps of cumulative density length.
fn resample(points: &[Point], cumulative: &[f64], n: usize) -> Vec<Point> {
    let total = *cumulative.last().expect("nonempty");
    let mut out = Vec::with_capacity(n + 1);
    out.push(points[0].clone());
    let mut j = 0;
    for i in 1..n {
        let s = total * i as f64 / n as f64;
        while j + 2 < cumulative.len() && cumulative[j + 1] < s {
            j += 1;
        }
        let span = cumulative[j + 1] - cumulative[j];
        let t = if span > 0.0 {
            ((s - cumulative[j]) / span).clamp(0.0, 1.0)
        } else {
            0.0
        };
        out.push(points[j].lerp(&points[j + 1], t));
    }
    out.push(points.last().expect("nonempty").clone());
    out.dedup();
    out
}

fn segment_values(field: &DensityField<'_>, pts: &[Point], tol: f64) -> Option<Vec<f64>> {
    let domain = field.domain();
    pts.windows(2)
        .map(|w| {
            if !domain.segment_is_interior(&w[0], &w[1]) {
                return None;
            }
            field.segment_length_unchecked(&w[0], &w[1], tol).ok()
        })
        .collect()
}

fn refine(
    field: &DensityField<'_>,
    lattice: &[Point],
    cumulative: &[f64],
    target_vertices: usize,
    cfg: &SolverConfig,
) -> Result<Refined> {
    let tol = cfg.quad_tol;
    let mut n = 8usize.min(target_vertices);
    let (mut pts, mut seg) = loop {
        let pts = resample(lattice, cumulative, n);
        if let Some(seg) = segment_values(field, &pts, tol) {
            break (pts, seg);
        }
        if n >= target_vertices.max(lattice.len()) {
            // The lattice path itself is interior by construction.
            let pts = lattice.to_vec();
            let seg = segment_values(field, &pts, tol).ok_or(Error::Quadrature)?;
            break (pts, seg);
        }
        n *= 2;
    };

    let mut sweeps = 0;
    let mut last_level_gain;
    let mut level_start_value = seg.iter().sum::<f64>();
    loop {
        for _ in 0..cfg.refine_iters {
            let before: f64 = seg.iter().sum();
            sweep(field, &mut pts, &mut seg, tol);
            sweeps += 1;
            let after: f64 = seg.iter().sum();
            if before - after <= SWEEP_REL_TOL * after {
                break;
            }
        }
        let value: f64 = seg.iter().sum();
        last_level_gain = (level_start_value - value) / value;
        if pts.len() > target_vertices {
            break;
        }
        // midpoint insertion
        let mut new_pts = Vec::with_capacity(2 * pts.len());
        let mut new_seg = Vec::with_capacity(2 * seg.len());
        for (i, w) in pts.windows(2).enumerate() {
            let mid = w[0].lerp(&w[1], 0.5);
            let left = field.segment_length_unchecked(&w[0], &mid, tol);
            let right = field.segment_length_unchecked(&mid, &w[1], tol);
            match (left, right) {
                (Ok(l), Ok(r)) => {
                    new_pts.push(w[0].clone());
                    new_pts.push(mid);
                    new_seg.push(l);
                    new_seg.push(r);
                }
                _ => {
                    new_pts.push(w[0].clone());
                    new_seg.push(seg[i]);
                }
            }
        }
        new_pts.push(pts.last().expect("nonempty").clone());
        if new_pts.len() == pts.len() {
            break;
        }
        pts = new_pts;
        seg = new_seg;
        level_start_value = seg.iter().sum();
    }
    let value = seg.iter().sum();
    Ok(Refined {
        points: pts,
        value,
        sweeps,
        last_level_gain,
    })
}

fn perpendiculars(t: &Point) -> Vec<Point> {
    let c = t.coords();
    match c.len() {
        2 => vec![Point::xy(-c[1], c[0])],
        _ => {
            // pick the axis least aligned with t, Gram–Schmidt, then cross
            let axis = (0..3)
                .min_by(|&a, &b| c[a].abs().total_cmp(&c[b].abs()))
                .unwrap_or(0);
            let e = Point::basis(3, axis);
            let u = (&e - &(t * t.dot(&e))).normalized().expect("independent axis");
            let (uc, _) = (u.coords(), ());
            let w = Point::xyz(
                c[1] * uc[2] - c[2] * uc[1],
                c[2] * uc[0] - c[0] * uc[2],
                c[0] * uc[1] - c[1] * uc[0],
            );
            vec![u, w]
        }
    }
}

/// One Gauss–Seidel pass of golden-section vertex moves.
fn sweep(field: &DensityField<'_>, pts: &mut [Point], seg: &mut [f64], tol: f64) {
    let domain = field.domain();
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    for i in 1..pts.len() - 1 {
        let chord = &pts[i + 1] - &pts[i - 1];
        let Some(tangent) = chord.normalized() else {
            continue;
        };
        let mut dirs = perpendiculars(&tangent);
        dirs.push(tangent);
        for dir in &dirs {
            let (a, v, b) = (&pts[i - 1], &pts[i], &pts[i + 1]);
            let radius = 0.5 * v.dist(a).min(v.dist(b));
            if radius <= 0.0 {
                continue;
            }
            let current = seg[i - 1] + seg[i];
            let cost = |t: f64| -> Option<(f64, f64, f64)> {
                let p = v.offset(dir, t);
                if !domain.segment_is_interior(a, &p) || !domain.segment_is_interior(&p, b) {
                    return None;
                }
                let l = field.segment_length_unchecked(a, &p, tol).ok()?;
                let r = field.segment_length_unchecked(&p, b, tol).ok()?;
                Some((l + r, l, r))
            };
            let value = |t: f64| cost(t).map_or(f64::INFINITY, |c| c.0);
            let (mut lo, mut hi) = (-radius, radius);
            let mut c = hi - inv_phi * (hi - lo);
            let mut d = lo + inv_phi * (hi - lo);
            let mut fc = value(c);
            let mut fd = value(d);
            for _ in 0..GOLDEN_STEPS {
                if fc < fd {
                    hi = d;
                    d = c;
                    fd = fc;
                    c = hi - inv_phi * (hi - lo);
                    fc = value(c);
                } else {
                    lo = c;
                    c = d;
                    fc = fd;
                    d = lo + inv_phi * (hi - lo);
                    fd = value(d);
                }
            }
            let t = if fc < fd { c } else { d };
            if let Some((total, l, r)) = cost(t) {
                if total < current {
                    pts[i] = pts[i].offset(dir, t);
                    seg[i - 1] = l;
                    seg[i] = r;
                }
            }
        }
    }
}
