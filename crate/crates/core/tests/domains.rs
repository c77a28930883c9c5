use alphashape_core::{rng_from_seed, Domain, DomainKind, Point2};
use proptest::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

const EPS: f64 = alphashape_core::EPS_GEOM;

fn all_domains() -> Vec<Domain> {
    [
        "disk:1",
        "annulus:0.25,1",
        "stadium:1,0.5",
        "disks:(-2,0),1,(2,0),0.5",
        "disks:(-2,0),1,(2,0),1",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

/// Vertical slice of the domain at abscissa `x` as disjoint y-intervals.
fn slice(domain: &Domain, x: f64) -> Vec<(f64, f64)> {
    let chord = |cx: f64, cy: f64, r: f64| -> Option<(f64, f64)> {
        let d = x - cx;
        (d.abs() < r).then(|| {
            let h = (r * r - d * d).sqrt();
            (cy - h, cy + h)
        })
    };
    match domain.kind() {
        DomainKind::Disk { radius } => chord(0.0, 0.0, radius).into_iter().collect(),
        DomainKind::Annulus { inner, outer } => {
            match (chord(0.0, 0.0, outer), chord(0.0, 0.0, inner)) {
                (Some((lo, hi)), Some((ilo, ihi))) => vec![(lo, ilo), (ihi, hi)],
                (Some(o), None) => vec![o],
                _ => vec![],
            }
        }
        DomainKind::Stadium {
            half_length,
            cap_radius,
        } => {
            if x.abs() <= half_length {
                vec![(-cap_radius, cap_radius)]
            } else {
                chord(half_length * x.signum(), 0.0, cap_radius)
                    .into_iter()
                    .collect()
            }
        }
        DomainKind::DisjointDisks { c1, r1, c2, r2 } => chord(c1.x, c1.y, r1)
            .into_iter()
            .chain(chord(c2.x, c2.y, r2))
            .collect(),
    }
}

/// Area of the domain inside `[x0, x1] x [y0, y1]` by midpoint integration of
/// slice lengths.
fn cell_area(domain: &Domain, x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
    let steps = 20_000;
    let dx = (x1 - x0) / steps as f64;
    let mut acc = 0.0;
    for k in 0..steps {
        let x = x0 + (k as f64 + 0.5) * dx;
        for (lo, hi) in slice(domain, x) {
            acc += (hi.min(y1) - lo.max(y0)).max(0.0);
        }
    }
    acc * dx
}

#[test]
fn slice_oracle_recovers_area() {
    for d in all_domains() {
        let (lo, hi) = d.bounding_box();
        let area = cell_area(&d, lo.x, hi.x, lo.y, hi.y);
        assert!(
            (area / d.area() - 1.0).abs() < 1e-6,
            "{d}: {area} vs {}",
            d.area()
        );
    }
}

#[test]
fn sampler_passes_chi_square_on_grid() {
    let n = 100_000;
    let k = 10;
    for (idx, d) in all_domains().iter().enumerate() {
        let (lo, hi) = d.bounding_box();
        let w = (hi.x - lo.x) / k as f64;
        let h = (hi.y - lo.y) / k as f64;
        let mut observed = vec![0usize; k * k];
        let mut rng = rng_from_seed(1000 + idx as u64);
        for p in d.sample_uniform(n, &mut rng) {
            assert!(d.contains(p), "{d}: {p:?} outside");
            let cx = (((p.x - lo.x) / w) as usize).min(k - 1);
            let cy = (((p.y - lo.y) / h) as usize).min(k - 1);
            observed[cy * k + cx] += 1;
        }
        // Cells with small expected counts are pooled into one bin.
        let (mut stat, mut bins) = (0.0, 0usize);
        let (mut pool_obs, mut pool_exp) = (0.0, 0.0);
        for cy in 0..k {
            for cx in 0..k {
                let x0 = lo.x + cx as f64 * w;
                let y0 = lo.y + cy as f64 * h;
                let expected = n as f64 * cell_area(d, x0, x0 + w, y0, y0 + h) / d.area();
                let obs = observed[cy * k + cx] as f64;
                if expected < 5.0 {
                    pool_obs += obs;
                    pool_exp += expected;
                } else {
                    stat += (obs - expected).powi(2) / expected;
                    bins += 1;
                }
            }
        }
        if pool_exp >= 5.0 {
            stat += (pool_obs - pool_exp).powi(2) / pool_exp;
            bins += 1;
        } else {
            assert!(
                pool_obs <= 5.0 + 5.0 * pool_exp,
                "{d}: pooled {pool_obs} vs {pool_exp}"
            );
        }
        let critical = ChiSquared::new((bins - 1) as f64)
            .unwrap()
            .inverse_cdf(1.0 - 1e-3);
        assert!(
            stat < critical,
            "{d}: chi2 {stat} >= {critical} on {bins} bins"
        );
    }
}

#[test]
fn rolling_balls_fit_on_both_sides() {
    for d in all_domains() {
        let r = d.rolling_r();
        for comp in d.components() {
            for b in comp.samples(400.0) {
                for (center, inside) in [
                    (b.position - b.outward_normal * r, true),
                    (b.position + b.outward_normal * r, false),
                ] {
                    assert_eq!(d.contains(center), inside, "{d}: center {center:?}");
                    assert!(
                        d.distance_to_boundary(center) >= r - 1e-9,
                        "{d}: ball at {center:?} crosses the boundary"
                    );
                    // Polar probe grid strictly inside the open ball.
                    for ring in 1..=8 {
                        let rho = r * (1.0 - 1e-6) * ring as f64 / 8.0;
                        for step in 0..32 {
                            let t = std::f64::consts::TAU * step as f64 / 32.0;
                            let q = center + Point2::new(t.cos(), t.sin()) * rho;
                            assert_eq!(d.contains(q), inside, "{d}: probe {q:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn perimeter_matches_polyline_integration() {
    for d in all_domains() {
        let mut total = 0.0;
        for comp in d.components() {
            let steps = 400_000;
            let len = comp.length();
            let mut prev = comp.point_at(0.0).position;
            for k in 1..=steps {
                let next = comp.point_at(len * k as f64 / steps as f64).position;
                total += prev.dist(next);
                prev = next;
            }
        }
        let rel = (total / d.exact_perimeter() - 1.0).abs();
        assert!(rel < 1e-9, "{d}: relative error {rel:e}");
    }
}

#[test]
fn corona_hole_fraction() {
    let d: Domain = "annulus:0.25,1".parse().unwrap();
    let mut rng = rng_from_seed(77);
    let pts = d.sample_uniform(100_000, &mut rng);
    let frac = pts.iter().filter(|p| p.norm() <= 0.5).count() as f64 / pts.len() as f64;
    assert!((frac - 0.2).abs() < 0.01, "{frac}");
}

fn any_domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        (0.1..3.0f64).prop_map(|r| Domain::disk(r).unwrap()),
        (0.05..1.0f64, 0.1..2.0f64).prop_map(|(a, w)| Domain::annulus(a, a + w).unwrap()),
        (0.0..2.0f64, 0.1..1.0f64).prop_map(|(l, c)| Domain::stadium(l, c).unwrap()),
        (0.1..1.0f64, 0.1..1.0f64, 0.05..1.0f64).prop_map(|(r1, r2, gap)| {
            Domain::disjoint_disks(Point2::ORIGIN, r1, Point2::new(r1 + r2 + gap, 0.0), r2).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn projection_is_idempotent(d in any_domain(), u in 0.0..1.0f64, v in 0.0..1.0f64) {
        let (lo, hi) = d.bounding_box();
        let p = Point2::new(lo.x - 0.5 + (hi.x - lo.x + 1.0) * u, lo.y - 0.5 + (hi.y - lo.y + 1.0) * v);
        if let Ok(b) = d.project_to_boundary(p) {
            prop_assert!(d.distance_to_boundary(b.position) < 1e-12);
            prop_assert!((p.dist(b.position) - d.distance_to_boundary(p)).abs() < 1e-12);
            let again = d.project_to_boundary(b.position).unwrap();
            prop_assert!(again.position.dist(b.position) < EPS);
            prop_assert_eq!(again.component_id, b.component_id);
            prop_assert!((b.outward_normal.norm() - 1.0).abs() < 1e-12);
            prop_assert!(b.tangent.dot(b.outward_normal).abs() < 1e-12);
            // The outward normal leaves the domain.
            let r = d.rolling_r();
            prop_assert!(!d.contains(b.position + b.outward_normal * (0.5 * r)));
            prop_assert!(d.contains(b.position - b.outward_normal * (0.5 * r)));
        }
    }

    #[test]
    fn spec_strings_round_trip(d in any_domain()) {
        let back: Domain = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn samples_stay_inside(d in any_domain(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        for p in d.sample_uniform(200, &mut rng) {
            prop_assert!(d.contains(p));
        }
    }
}
