//! Invariants of the frontier pipeline checked on random signals.

use envelope_core::{
    alpha_frontier, envelope_indices, estimate_alpha, extract_candidates, find_pulses,
    interpolate_frontier, lower_frontier, menger_circumradius, normalize_and_scale,
    upper_frontier, CandidateMode, EnvelopeError, EnvelopeParams, Point, ScaledPoints, Signal,
    DEFAULT_TOL,
};
use envelope_testkit::geometry::{circumradius_via_center, empty_disc_chain, upper_hull};
use proptest::prelude::*;

fn signal_strategy(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, 1..max_len)
}

fn scaled_positive(s: &Signal) -> Option<ScaledPoints> {
    let pulses = find_pulses(s).ok()?;
    let set = extract_candidates(s, &pulses, CandidateMode::Split).ok()?;
    if set.positive.is_empty() {
        return None;
    }
    normalize_and_scale(&set.positive, s.peak_abs()).ok()
}

fn is_strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn pulses_cover_exactly_the_nonzero_samples(samples in prop::collection::vec(prop_oneof![Just(0.0), -1.0f64..1.0], 1..80)) {
        let s = Signal::new(samples.clone()).unwrap();
        let pulses = find_pulses(&s).unwrap();
        let mut covered = vec![false; samples.len()];
        let mut prev_end: Option<usize> = None;
        for p in &pulses {
            prop_assert!(p.start <= p.end);
            if let Some(e) = prev_end { prop_assert!(p.start > e); }
            prev_end = Some(p.end);
            for i in p.start..=p.end {
                prop_assert!(samples[i] != 0.0);
                prop_assert_eq!(samples[i] > 0.0, p.sign == envelope_core::Sign::Positive);
                covered[i] = true;
            }
        }
        for (i, &v) in samples.iter().enumerate() {
            prop_assert_eq!(covered[i], v != 0.0);
        }
        // Maximality: neighbouring pulses either touch a zero or flip sign.
        for w in pulses.windows(2) {
            prop_assert!(w[1].start > w[0].end + 1 || w[0].sign != w[1].sign);
        }
    }

    #[test]
    fn scaled_points_invariants(samples in signal_strategy(200)) {
        let s = Signal::new(samples).unwrap();
        if let Some(sc) = scaled_positive(&s) {
            prop_assert!(sc.x_step > 0.0 && sc.y_max > 0.0);
            prop_assert!(sc.points.windows(2).all(|w| w[0].x < w[1].x));
            prop_assert!(sc.points.iter().all(|p| p.y.abs() <= 1.0));
            let m = sc.len();
            if m >= 2 {
                prop_assert!((sc.x_span() / (m - 1) as f64 - 1.0).abs() <= 1e-9);
            }
            let a = estimate_alpha(&sc, DEFAULT_TOL);
            prop_assert!(a.is_finite() && a >= 1.0);
            prop_assert!(a <= sc.x_span().max(1.0));
        }
    }

    #[test]
    fn mirror(samples in signal_strategy(300)) {
        let s = Signal::new(samples).unwrap();
        let p = EnvelopeParams::default();
        let lower = lower_frontier(&s, &p).map(|f| f.indices).map_err(|e| match e {
            EnvelopeError::NoNegativePulses => EnvelopeError::NoPositivePulses,
            e => e,
        });
        let upper_neg = upper_frontier(&s.negated(), &p).map(|f| f.indices);
        prop_assert_eq!(lower, upper_neg);
    }

    #[test]
    fn power_of_two_scaling_is_invisible(samples in signal_strategy(300), k in -20i32..20) {
        let s = Signal::new(samples.clone()).unwrap();
        let c = 2f64.powi(k);
        let scaled = Signal::new(samples.iter().map(|v| v * c).collect()).unwrap();
        let p = EnvelopeParams::default();
        prop_assert_eq!(upper_frontier(&s, &p), upper_frontier(&scaled, &p));
        prop_assert_eq!(envelope_indices(&s, &p), envelope_indices(&scaled, &p));
    }

    #[test]
    fn frontier_shape(samples in signal_strategy(300), manual in prop::option::of(0.05f64..50.0)) {
        let s = Signal::new(samples).unwrap();
        let p = manual.map(EnvelopeParams::manual).unwrap_or_default();
        if let Ok(f) = upper_frontier(&s, &p) {
            let pulses = find_pulses(&s).unwrap();
            let set = extract_candidates(&s, &pulses, CandidateMode::Split).unwrap();
            let members: Vec<usize> = set.positive.iter().map(|c| c.index).collect();
            prop_assert!(is_strictly_increasing(&f.indices));
            prop_assert_eq!(f.indices.first(), members.first());
            prop_assert_eq!(f.indices.last(), members.last());
            prop_assert!(f.indices.iter().all(|i| members.contains(i)));
            prop_assert_eq!(f.bridged.len(), f.indices.len() - 1);
        }
    }

    #[test]
    fn dominance_on_geometric_spans(samples in signal_strategy(300)) {
        let s = Signal::new(samples).unwrap();
        let Ok(f) = upper_frontier(&s, &EnvelopeParams::default()) else { return Ok(()); };
        let pulses = find_pulses(&s).unwrap();
        let set = extract_candidates(&s, &pulses, CandidateMode::Split).unwrap();
        let curve = interpolate_frontier(s.len(), &f.values_from(s.samples())).unwrap();
        let slack = 1e-9 * s.peak_abs();
        for (k, w) in f.indices.windows(2).enumerate() {
            if f.bridged[k] { continue; }
            for c in set.positive.iter().filter(|c| c.index > w[0] && c.index < w[1]) {
                prop_assert!(curve[c.index] >= c.value - slack);
            }
        }
    }

    #[test]
    fn deterministic(samples in signal_strategy(300)) {
        let s = Signal::new(samples).unwrap();
        let p = EnvelopeParams::default();
        prop_assert_eq!(upper_frontier(&s, &p), upper_frontier(&s.clone(), &p));
        prop_assert_eq!(envelope_indices(&s, &p), envelope_indices(&s, &p));
    }

    #[test]
    fn circumradius_symmetry_and_rigid_invariance(
        pts in prop::array::uniform3((-10.0f64..10.0, -10.0f64..10.0)),
        angle in 0.0f64..std::f64::consts::TAU,
        shift in (-100.0f64..100.0, -100.0f64..100.0),
    ) {
        let [a, b, c] = pts.map(|(x, y)| Point::new(x, y));
        let r = menger_circumradius(a, b, c, DEFAULT_TOL);
        prop_assume!(r.is_finite() && r < 1e6);
        for (p, q, t) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            let r2 = menger_circumradius(p, q, t, DEFAULT_TOL);
            prop_assert!((r2 - r).abs() <= 1e-9 * r);
        }
        let (sn, cs) = angle.sin_cos();
        let mv = |p: Point| Point::new(cs * p.x - sn * p.y + shift.0, sn * p.x + cs * p.y + shift.1);
        let moved = menger_circumradius(mv(a), mv(b), mv(c), DEFAULT_TOL);
        prop_assert!((moved - r).abs() <= 1e-9 * r);
        let reference = circumradius_via_center((a.x, a.y), (b.x, b.y), (c.x, c.y)).unwrap();
        prop_assert!((reference - r).abs() <= 1e-9 * r);
    }

    #[test]
    fn matches_empty_disc_oracle(samples in signal_strategy(64), manual in prop::option::of(0.2f64..4.0)) {
        let s = Signal::new(samples).unwrap();
        let Some(sc) = scaled_positive(&s) else { return Ok(()); };
        let alpha = manual.unwrap_or_else(|| estimate_alpha(&sc, DEFAULT_TOL));
        let pts: Vec<(f64, f64)> = sc.points.iter().map(|p| (p.x, p.y)).collect();
        let oracle = empty_disc_chain(&pts, alpha, DEFAULT_TOL);
        prop_assume!(!oracle.degenerate);
        let chain = alpha_frontier(&sc, alpha, DEFAULT_TOL).unwrap();
        prop_assert_eq!(chain.ordinals, oracle.ordinals);
        prop_assert_eq!(chain.bridged, oracle.bridged);
    }

    #[test]
    fn huge_disc_reproduces_the_convex_hull(
        ys in prop::collection::vec(0.01f64..=1.0, 1..64),
        gaps in prop::collection::vec(0.25f64..1.75, 64),
    ) {
        let mut x = 0.0;
        let pts: Vec<(f64, f64)> = ys.iter().zip(&gaps).map(|(&y, &g)| { let p = (x, y); x += g; p }).collect();
        let sc = ScaledPoints {
            points: pts.iter().map(|&(x, y)| Point::new(x, y)).collect(),
            x_step: 1.0,
            y_max: 1.0,
        };
        // The alpha hull only converges to the convex hull as alpha grows.
        let alpha = 1e6 * sc.x_span().max(1.0);
        prop_assert_eq!(alpha_frontier(&sc, alpha, DEFAULT_TOL).unwrap().ordinals, upper_hull(&pts));
    }
}
