use hypmetrics_core::{Domain, Point};
use proptest::prelude::*;

fn l_shape() -> Domain {
    Domain::polygon(
        [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
            .iter()
            .map(|&(x, y)| Point::xy(x, y))
            .collect(),
    )
    .unwrap()
}

fn domains() -> Vec<Domain> {
    vec![
        Domain::unit_disk(),
        Domain::annulus(Point::origin(2), 1.0, 2.0).unwrap(),
        Domain::punctured_ball(Point::origin(2), 1.0).unwrap(),
        Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap(),
        l_shape(),
    ]
}

fn unit() -> impl Strategy<Value = f64> {
    0.0..1.0f64
}

/// Point of the bounding box of `d` at fractional position `(u, v)`.
fn in_box(d: &Domain, u: f64, v: f64) -> Point {
    let (lo, hi) = d.bounding_box().unwrap();
    let (lo, hi) = (lo.coords(), hi.coords());
    Point::xy(lo[0] + u * (hi[0] - lo[0]), lo[1] + v * (hi[1] - lo[1]))
}

/// Distance to a segment by projecting onto its line, clamped.
fn brute_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (vx, vy) = (b.0 - a.0, b.1 - a.1);
    let t = (((p.0 - a.0) * vx + (p.1 - a.1) * vy) / (vx * vx + vy * vy)).clamp(0.0, 1.0);
    ((p.0 - a.0 - t * vx).powi(2) + (p.1 - a.1 - t * vy).powi(2)).sqrt()
}

proptest! {
    #[test]
    fn boundary_distance_is_one_lipschitz(i in 0usize..5, a in unit(), b in unit(), c in unit(), e in unit()) {
        let d = &domains()[i];
        let (x, y) = (in_box(d, a, b), in_box(d, c, e));
        prop_assume!(d.contains(&x).unwrap() && d.contains(&y).unwrap());
        let gap = (d.boundary_distance(&x).unwrap() - d.boundary_distance(&y).unwrap()).abs();
        prop_assert!(gap <= x.dist(&y) + 1e-12);
    }

    #[test]
    fn eta_is_diameter_lipschitz_and_bounded(i in 0usize..5, a in unit(), b in unit(), c in unit(), e in unit()) {
        let d = &domains()[i];
        let (x, y) = (in_box(d, a, b), in_box(d, c, e));
        prop_assume!(d.contains(&x).unwrap() && d.contains(&y).unwrap());
        let diam = d.diameter().to_f64();
        let (ex, ey) = (d.eta(&x).unwrap(), d.eta(&y).unwrap());
        prop_assert!((ex - ey).abs() <= diam * x.dist(&y) + 1e-12);
        let delta = d.boundary_distance(&x).unwrap();
        prop_assert!(delta <= diam / 2.0 + 1e-12);
        prop_assert!(ex <= diam * delta + 1e-12);
        prop_assert!(ex > 0.0);
    }

    #[test]
    fn polygon_distance_matches_brute_force(a in -0.5..2.5f64, b in -0.5..2.5f64) {
        let d = l_shape();
        let p = Point::xy(a, b);
        prop_assume!(d.contains(&p).unwrap());
        let v = [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)];
        let brute = (0..v.len())
            .map(|k| brute_segment((a, b), v[k], v[(k + 1) % v.len()]))
            .fold(f64::INFINITY, f64::min);
        prop_assert!((d.boundary_distance(&p).unwrap() - brute).abs() < 1e-6);
    }

    #[test]
    fn boundary_distance_shrinks_with_the_domain(a in -0.99..0.99f64, b in -0.99..0.99f64) {
        let small = Domain::unit_disk();
        let big = Domain::ball(Point::xy(0.1, 0.0), 1.5).unwrap();
        let p = Point::xy(a, b);
        prop_assume!(small.contains(&p).unwrap());
        prop_assert!(small.boundary_distance(&p).unwrap() <= big.boundary_distance(&p).unwrap());
    }

    #[test]
    fn slit_disk_distance_sees_the_slit(a in 0.05..0.95f64, h in -0.2..0.2f64) {
        prop_assume!(h != 0.0);
        let d = Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap();
        let p = Point::xy(a, h);
        prop_assume!(d.contains(&p).unwrap());
        prop_assert!(d.boundary_distance(&p).unwrap() <= h.abs() + 1e-15);
    }
}

#[test]
fn exterior_and_boundary_points_are_rejected() {
    for d in domains() {
        assert!(d.boundary_distance(&Point::xy(5.0, 5.0)).is_err());
    }
    let slit = Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap();
    assert!(!slit.contains(&Point::xy(0.5, 0.0)).unwrap());
    assert!(!Domain::punctured_ball(Point::origin(2), 1.0).unwrap().contains(&Point::origin(2)).unwrap());
}
