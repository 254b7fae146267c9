use std::f64::consts::PI;

use proptest::prelude::*;
use twocars::dubins::{GameConfig, Owner, Pose};
use twocars::matrix_law::regime_threshold;
use twocars::simulator::{classify_cs_structure, final_segments, run_law, SimOptions};

fn in_regime_state() -> impl Strategy<Value = (Pose, Pose)> {
    (0.0..15.0, -PI..PI, -PI..PI, -PI..PI).prop_map(|(extra, bearing, thp, the)| {
        let d = regime_threshold(&GameConfig::standard()) + extra;
        (Pose::new(0.0, 0.0, thp), Pose::new(d * bearing.cos(), d * bearing.sin(), the))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn law_captures_in_regime((p, e) in in_regime_state()) {
        let cfg = GameConfig::standard();
        let opts = SimOptions::default();
        let traj = run_law(&cfg, p, e, &opts).unwrap();
        let t = traj.capture_time;
        prop_assert!(t.is_some_and(|t| t < opts.t_max), "no capture from {e:?}");

        // both vehicles always at full speed
        for s in &traj.samples {
            prop_assert_eq!(s.v_p, cfg.pursuer.v_max());
            prop_assert_eq!(s.v_e, cfg.evader.v_max());
        }

        // final straight legs are parallel and share a line up to the angle slack
        let f = final_segments(&traj).expect("both vehicles end on straight legs");
        prop_assert!(f.angle < 1e-2, "angle {}", f.angle);
        prop_assert!(f.lateral_offset <= opts.eps_capture + 1e-2 * f.pursuer_leg, "{f:?}");

        for owner in [Owner::Pursuer, Owner::Evader] {
            prop_assert!(classify_cs_structure(&traj, owner).is_cs, "{owner:?} is not CS from {e:?}");
        }
    }
}
