use std::f64::consts::PI;

use proptest::prelude::*;
use twocars::capture::{intercept_time, time_to_capture};
use twocars::dubins::{reflect_point, step_exact, GameConfig, Pose};
use twocars::matrix_law::{build_matrix, feedback, solve_matrix, GameMatrix};
use twocars::tangents::PEPair;
use twocars::Vec2;

fn pose() -> impl Strategy<Value = Pose> {
    (-20.0..20.0, -20.0..20.0, -PI..PI).prop_map(|(x, y, th)| Pose::new(x, y, th))
}

fn entry() -> impl Strategy<Value = f64> {
    prop_oneof![9 => -5.0..50.0, 1 => Just(f64::INFINITY)]
}

fn matrix() -> impl Strategy<Value = GameMatrix> {
    [[entry(), entry()], [entry(), entry()]]
        .prop_filter("one finite entry", |t| t.iter().flatten().any(|x| x.is_finite()))
        .prop_map(GameMatrix::from_times)
}

/// Rows and columns whose security values tie would make the tie-break decide.
fn well_separated(m: &GameMatrix) -> bool {
    let t = &m.times;
    let rows = [t[0][0].max(t[0][1]), t[1][0].max(t[1][1])];
    let cols = [t[0][0].min(t[1][0]), t[0][1].min(t[1][1])];
    let apart = |a: f64, b: f64| (a.is_infinite() != b.is_infinite()) || (a - b).abs() > 1e-6;
    apart(rows[0], rows[1]) && apart(cols[0], cols[1])
}

proptest! {
    #[test]
    fn open_loop_arcs_meet_at_capture_point(p in pose(), e in pose()) {
        let cfg = GameConfig::standard();
        for pair in PEPair::ALL {
            let Some(est) = time_to_capture(pair, &p, &e, &cfg) else { continue };
            if est.degenerate {
                continue;
            }
            let (pp, ep) = (&cfg.pursuer, &cfg.evader);
            let pa = step_exact(&p, pp.v_max(), pair.pursuer.sign() * pp.w_max(), est.t_p);
            let pt = step_exact(&pa, pp.v_max(), 0.0, est.time - est.t_p);
            let ea = step_exact(&e, ep.v_max(), pair.evader.sign() * ep.w_max(), est.t_e);
            let et = step_exact(&ea, ep.v_max(), 0.0, est.time - est.t_e);
            prop_assert!(pt.position().distance(est.capture_point) < 1e-6, "{pair}: {pt:?} {est:?}");
            prop_assert!(et.position().distance(est.capture_point) < 1e-6, "{pair}: {et:?} {est:?}");
            prop_assert!(est.time >= est.t_p.max(est.t_e) - 1e-12);
        }
    }

    #[test]
    fn intercept_grows_with_tangent_length(t_p in 0.0..10.0, t_e in 0.0..10.0, d in 0.0..40.0, dd in 1e-3..10.0) {
        let (a, _) = intercept_time(t_p, t_e, d, 2.0, 1.0);
        let (b, _) = intercept_time(t_p, t_e, d + dd, 2.0, 1.0);
        prop_assert!(b > a);
    }

    #[test]
    fn mirror_swaps_pairs(p in pose(), e in pose(), ox in -5.0..5.0, oy in -5.0..5.0, phi in -PI..PI) {
        let cfg = GameConfig::standard();
        let o = Vec2::new(ox, oy);
        let (pm, em) = (p.reflect(o, phi), e.reflect(o, phi));
        for pair in PEPair::ALL {
            let a = time_to_capture(pair, &p, &e, &cfg);
            let b = time_to_capture(pair.mirrored(), &pm, &em, &cfg);
            match (a, b) {
                (Some(a), Some(b)) => {
                    prop_assert!((a.time - b.time).abs() < 1e-9, "{pair}: {} vs {}", a.time, b.time);
                    prop_assert!(reflect_point(a.capture_point, o, phi).distance(b.capture_point) < 1e-9);
                }
                (None, None) => {}
                (a, b) => prop_assert!(false, "{pair}: {a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn selection_ignores_positive_scale(m in matrix(), k in 1e-3..1e3) {
        let a = solve_matrix(&m);
        let b = solve_matrix(&m.scaled(k));
        prop_assert_eq!((a.row, a.col), (b.row, b.col));
    }

    #[test]
    fn security_values_are_ordered(m in matrix()) {
        let s = solve_matrix(&m);
        prop_assert!(s.minmax >= s.maxmin);
        prop_assert!(s.saddle_gap() >= 0.0);
        let t = &m.times;
        let saddle = (0..2).any(|r| (0..2).any(|c| {
            t[r][c] == t[r][0].max(t[r][1]) && t[r][c] == t[0][c].min(t[1][c])
        }));
        prop_assert_eq!(saddle, s.saddle_gap() == 0.0);
    }

    #[test]
    fn mirror_flips_solution(p in pose(), e in pose(), phi in -PI..PI) {
        let cfg = GameConfig::standard();
        let Ok(m) = build_matrix(&p, &e, &cfg) else { return Ok(()) };
        prop_assume!(well_separated(&m));
        let o = Vec2::new(0.0, 0.0);
        let mm = build_matrix(&p.reflect(o, phi), &e.reflect(o, phi), &cfg).unwrap();
        let (a, b) = (solve_matrix(&m), solve_matrix(&mm));
        prop_assert_eq!(a.pair().mirrored(), b.pair());
    }

    #[test]
    fn feedback_is_deterministic(p in pose(), e in pose()) {
        let cfg = GameConfig::standard();
        let a = feedback(&p, &e, &cfg, 0.005);
        let b = feedback(&p, &e, &cfg, 0.005);
        prop_assert_eq!(a, b);
    }
}
