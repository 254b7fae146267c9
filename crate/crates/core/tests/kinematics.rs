use std::f64::consts::PI;

use proptest::prelude::*;
use twocars::dubins::{step_exact, turning_circle, GameConfig, Orientation, Owner, Pose, VehicleParams};
use twocars::oracle::verify_tangent;
use twocars::tangents::{common_tangents, pair_circles, valid_tangent, PEPair};
use twocars::Vec2;

fn pose() -> impl Strategy<Value = Pose> {
    (-20.0..20.0, -20.0..20.0, -PI..PI).prop_map(|(x, y, th)| Pose::new(x, y, th))
}

fn close(a: &Pose, b: &Pose, tol: f64) -> bool {
    a.position().distance(b.position()) < tol && (Vec2::from_angle(a.theta) - Vec2::from_angle(b.theta)).norm() < tol
}

proptest! {
    #[test]
    fn step_composes(p in pose(), v in 0.0..3.0, w in -3.0..3.0, a in 0.0..5.0, b in 0.0..5.0) {
        let two = step_exact(&step_exact(&p, v, w, a), v, w, b);
        let one = step_exact(&p, v, w, a + b);
        prop_assert!(close(&two, &one, 1e-9), "{two:?} vs {one:?}");
    }

    #[test]
    fn full_turn_stays_on_circle(p in pose(), v in 0.1..3.0, w in 0.2..3.0, ccw in any::<bool>(), t in 0.0..10.0) {
        let params = VehicleParams::new(v, w).unwrap();
        let o = if ccw { Orientation::Ccw } else { Orientation::Cw };
        let c = turning_circle(&p, &params, Owner::Pursuer, o);
        let q = step_exact(&p, v, w * o.sign(), t);
        prop_assert!(c.offset(q.position()).abs() < 1e-9);
    }

    #[test]
    fn radius_is_speed_independent(p in pose(), v1 in 0.1..3.0, v2 in 0.1..3.0, w in 0.2..3.0, s in 0.0..6.0) {
        // equal arc length s along the same circle whatever the speed
        let a = step_exact(&p, v1, w, s / v1);
        let b = step_exact(&p, v2, w, s / v2);
        prop_assert!(close(&a, &b, 1e-9));
    }

    #[test]
    fn one_valid_tangent_per_pair(p in pose(), e in pose()) {
        let cfg = GameConfig::standard();
        for pair in PEPair::ALL {
            let (cp, ce) = pair_circles(pair, &p, &e, &cfg);
            let all = common_tangents(&cp, &ce);
            if all.len() == 4 {
                let valid: Vec<_> = all.iter().filter(|t| verify_tangent(t, &cp, &ce).ok(1e-9)).collect();
                prop_assert_eq!(valid.len(), 1, "{}", pair);
                prop_assert_eq!(Some(*valid[0]), valid_tangent(pair, &cp, &ce));
            }
        }
    }

    #[test]
    fn valid_tangent_residuals(p in pose(), e in pose()) {
        let cfg = GameConfig::standard();
        for pair in PEPair::ALL {
            let (cp, ce) = pair_circles(pair, &p, &e, &cfg);
            if let Some(t) = valid_tangent(pair, &cp, &ce) {
                let r = verify_tangent(&t, &cp, &ce);
                prop_assert!(r.ok(1e-9), "{pair}: {r:?}");
                prop_assert!((t.length - t.t_p.distance(t.t_e)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn mirror_maps_valid_tangents(p in pose(), e in pose(), ox in -5.0..5.0, oy in -5.0..5.0, phi in -PI..PI) {
        let cfg = GameConfig::standard();
        let o = Vec2::new(ox, oy);
        let (pm, em) = (p.reflect(o, phi), e.reflect(o, phi));
        for pair in PEPair::ALL {
            let (cp, ce) = pair_circles(pair, &p, &e, &cfg);
            let m = pair.mirrored();
            let (cpm, cem) = pair_circles(m, &pm, &em, &cfg);
            match (valid_tangent(pair, &cp, &ce), valid_tangent(m, &cpm, &cem)) {
                (Some(t), Some(tm)) => {
                    prop_assert!(twocars::dubins::reflect_point(t.t_p, o, phi).distance(tm.t_p) < 1e-9);
                    prop_assert!(twocars::dubins::reflect_point(t.t_e, o, phi).distance(tm.t_e) < 1e-9);
                }
                (None, None) => {}
                (a, b) => prop_assert!(false, "{pair}: {a:?} vs {b:?}"),
            }
        }
    }
}
