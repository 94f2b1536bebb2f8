use hypmetrics_core::metrics::hyperbolic_closed_form;
use hypmetrics_core::path::{shortest_path_estimate, DensityField, DensityKind, PolylinePath, SolverConfig};
use hypmetrics_core::{Domain, Point};
use proptest::prelude::*;

fn disk_point() -> impl Strategy<Value = Point> {
    (0.0..0.9f64, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| Point::xy(r * a.cos(), r * a.sin()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn m_estimate_bounds_hyperbolic_distance_from_above(x in disk_point(), y in disk_point()) {
        let d = Domain::unit_disk();
        let field = DensityField::new(DensityKind::M, &d).unwrap();
        let est = shortest_path_estimate(&field, &x, &y, &SolverConfig::with_spacing(0.02)).unwrap();
        let exact = hyperbolic_closed_form(&d, &x, &y).unwrap();
        prop_assert!(est.value >= exact * (1.0 - 1e-7), "{} < {}", est.value, exact);
        prop_assert!(est.value <= exact * 1.01 + 1e-9, "{} vs {}", est.value, exact);
        prop_assert_eq!(est.path.start(), &x);
        prop_assert_eq!(est.path.end(), &y);
    }

    #[test]
    fn k_estimate_bounds_hyperbolic_distance_in_half_plane(a in -1.0..1.0f64, b in 0.2..2.0f64, c in -1.0..1.0f64, e in 0.2..2.0f64) {
        let d = Domain::upper_half_plane();
        let (x, y) = (Point::xy(a, b), Point::xy(c, e));
        let field = DensityField::new(DensityKind::K, &d).unwrap();
        let est = shortest_path_estimate(&field, &x, &y, &SolverConfig::default()).unwrap();
        let exact = hyperbolic_closed_form(&d, &x, &y).unwrap();
        prop_assert!(est.value >= exact * (1.0 - 1e-7));
        prop_assert!(est.value <= exact * 1.01 + 1e-9);
    }
}

#[test]
fn slit_crossing_segment_is_rejected() {
    let d = Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap();
    let (above, below) = (Point::xy(0.5, 0.1), Point::xy(0.5, -0.1));
    assert!(!d.segment_is_interior(&above, &below));
    assert!(PolylinePath::new(&d, vec![above.clone(), below.clone()]).is_err());
    let around = vec![above.clone(), Point::xy(-0.1, 0.05), Point::xy(-0.1, -0.05), below.clone()];
    assert!(PolylinePath::new(&d, around).is_ok());
}

#[test]
fn slit_disk_geodesic_goes_around_the_slit() {
    let d = Domain::slit_disk(Point::origin(2), 1.0, Point::xy(1.0, 0.0)).unwrap();
    let (x, y) = (Point::xy(0.5, 0.1), Point::xy(0.5, -0.1));
    let field = DensityField::new(DensityKind::K, &d).unwrap();
    let est = shortest_path_estimate(&field, &x, &y, &SolverConfig::with_spacing(0.02)).unwrap();
    assert!(est.path.vertices().iter().any(|p| p.coords()[0] < 0.0));
    for (a, b) in est.path.segments() {
        assert!(d.segment_is_interior(a, b));
    }
}
