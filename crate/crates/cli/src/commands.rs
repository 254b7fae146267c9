//! Subcommand implementations. Each returns the process exit code.

use std::f64::consts::PI;
use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twocars::dubins::{Owner, Pose};
use twocars::export::{write_metadata_json, write_regions_csv, write_trajectory_csv, RunMetadata};
use twocars::matrix_law::{build_matrix, feedback_from_matrix, default_arc_epsilon, GameMatrix};
use twocars::oracle::{
    brute_force_minmax_with, cs_minmax, pursuer_grid_response, verify_tangent, DiscreteGameSpec,
};
use twocars::reach::{
    active_set_analysis, blocking_set, containment_time, cs_endpoint_by_steps, kinematic_upper_bound, left_boundary,
    reachable_region, right_boundary, RegionKind, SetKind, BISECTION_TOL,
};
use twocars::simulator::{run, run_law, saddle_check};
use twocars::tangents::{common_tangents, pair_circles, valid_tangent, PEPair};
use twocars::{Exec, GameError};

use crate::config::Scenario;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_POLICY: u8 = 3;

fn write_file(path: &Path, f: impl FnOnce(BufWriter<File>) -> twocars::Result<()>) -> Result<(), u8> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| report(format!("{}: {e}", dir.display())))?;
    }
    let file = File::create(path).map_err(|e| report(format!("{}: {e}", path.display())))?;
    f(BufWriter::new(file)).map_err(|e| report(e.to_string()))
}

fn report(msg: String) -> u8 {
    eprintln!("error: {msg}");
    EXIT_INVALID
}

fn output_path(out: Option<&Path>, configured: Option<&PathBuf>, default_name: String) -> PathBuf {
    match (out, configured) {
        (Some(dir), _) => dir.join(default_name),
        (None, Some(p)) => p.clone(),
        (None, None) => PathBuf::from(default_name),
    }
}

pub fn simulate(s: &Scenario, out: Option<&Path>) -> u8 {
    let pursuer = s.policy(Owner::Pursuer);
    let evader = s.policy(Owner::Evader);
    let traj = match run(&s.cfg, s.p0, s.e0, pursuer.as_ref(), evader.as_ref(), &s.opts) {
        Ok(t) => t,
        Err(e @ GameError::PolicyFailure { .. }) => {
            eprintln!("error: {e}");
            return EXIT_POLICY;
        }
        Err(e) => return report(e.to_string()),
    };
    let meta = RunMetadata::from_run(&traj, &s.cfg);
    let csv_path = output_path(out, s.raw.trajectory_csv.as_ref(), format!("{}.csv", s.raw.name));
    let json_path = output_path(out, s.raw.metadata_json.as_ref(), format!("{}.json", s.raw.name));
    if let Err(code) = write_file(&csv_path, |w| write_trajectory_csv(&traj, w))
        .and_then(|_| write_file(&json_path, |w| write_metadata_json(&meta, w)))
    {
        return code;
    }
    match traj.capture_time {
        Some(t) => {
            let c = traj.capture_point.expect("capture point accompanies capture time");
            println!("captured at t = {t:.4} at ({:.4}, {:.4}); pair switches {}", c.x, c.y, meta.pair_switches);
            if meta.pair_flip_warning {
                println!("warning: chosen PE-pair changed {} times", meta.pair_switches);
            }
            println!("wrote {} and {}", csv_path.display(), json_path.display());
            EXIT_OK
        }
        None => {
            println!("no capture within t_max = {}", s.opts.t_max);
            println!("wrote {} and {}", csv_path.display(), json_path.display());
            EXIT_FAIL
        }
    }
}

pub fn matrix(s: &Scenario) -> u8 {
    let m = match build_matrix(&s.p0, &s.e0, &s.cfg) {
        Ok(m) => m,
        Err(GameError::AllPairsInfeasible) => {
            print!("{}", GameMatrix::from_times([[f64::INFINITY; 2]; 2]));
            println!("no PE-pair has a valid tangent; the law is undefined here");
            return EXIT_OK;
        }
        Err(e) => return report(e.to_string()),
    };
    print!("{m}");
    let c = feedback_from_matrix(&m, &s.cfg, default_arc_epsilon(s.opts.dt));
    let sol = c.solution;
    println!("minmax = {:.6}  maxmin = {:.6}  saddle gap = {:.6}", sol.minmax, sol.maxmin, sol.saddle_gap());
    println!("chosen pair {} value {:.6}", sol.pair(), sol.value);
    println!("controls at t=0: pursuer (v={}, w={})  evader (v={}, w={})", c.v_p, c.w_p, c.v_e, c.w_e);
    EXIT_OK
}

pub fn tangents(s: &Scenario) -> u8 {
    for pair in PEPair::ALL {
        let (cp, ce) = pair_circles(pair, &s.p0, &s.e0, &s.cfg);
        let valid = valid_tangent(pair, &cp, &ce);
        let all = common_tangents(&cp, &ce);
        println!("{pair}: {} common tangents", all.len());
        for t in &all {
            let r = verify_tangent(t, &cp, &ce);
            println!(
                "  {} t_p=({:.6}, {:.6}) t_e=({:.6}, {:.6}) len={:.6} heading={:.6} residual={:.2e}",
                if Some(*t) == valid { "*" } else { " " },
                t.t_p.x,
                t.t_p.y,
                t.t_e.x,
                t.t_e.y,
                t.length,
                t.heading(),
                r.max_residual()
            );
        }
    }
    EXIT_OK
}

pub fn reachsets(s: &Scenario, out: Option<&Path>, horizon: Option<f64>) -> u8 {
    let bound = kinematic_upper_bound(&s.p0, &s.e0, &s.cfg);
    let min = s.cfg.pursuer.full_turn_time().max(s.cfg.evader.full_turn_time());
    let t_bar = horizon.unwrap_or(bound).max(min);
    let n = 256;
    let regions = (|| -> twocars::Result<_> {
        let pp = &s.cfg.pursuer;
        Ok(vec![
            reachable_region(&s.p0, pp, RegionKind::LeftSet, t_bar, n)?,
            reachable_region(&s.p0, pp, RegionKind::RightSet, t_bar, n)?,
            reachable_region(&s.p0, pp, RegionKind::FullSet, t_bar, n)?,
            blocking_set(&s.p0, &s.e0, &s.cfg, t_bar)?,
            {
                let mut r = reachable_region(&s.e0, &s.cfg.evader, RegionKind::FullSet, t_bar, n)?;
                r.owner = Owner::Evader;
                r
            },
        ])
    })();
    let regions = match regions {
        Ok(r) => r,
        Err(e) => return report(e.to_string()),
    };
    let path = output_path(out, None, format!("{}_regions.csv", s.raw.name));
    if let Err(code) = write_file(&path, |w| write_regions_csv(&regions, w)) {
        return code;
    }
    println!("regions at horizon {t_bar:.4} written to {}", path.display());
    println!("kinematic upper bound {bound:.4}");
    for kind in [SetKind::Full, SetKind::Left, SetKind::Right, SetKind::Blocking] {
        match containment_time(&s.p0, &s.e0, &s.cfg, kind) {
            Ok(c) => println!("containment {kind:?}: {:?} (hypothesis met: {})", c.time, c.hypothesis_met),
            Err(e) => println!("containment {kind:?}: {e}"),
        }
    }
    match active_set_analysis(&s.p0, &s.e0, &s.cfg) {
        Ok(a) => println!("active set {:?} with T_a = {:.4} (in regime: {})", a.winner, a.t_a, a.in_regime),
        Err(e) => println!("active set: {e}"),
    }
    EXIT_OK
}

/// Pass/fail tally of a verify suite.
#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            println!("FAIL {}", what());
        }
    }

    fn finish(self, suite: &str) -> u8 {
        println!("{suite}: {} passed, {} failed", self.passed, self.failed);
        if self.failed == 0 {
            EXIT_OK
        } else {
            EXIT_FAIL
        }
    }
}

pub fn verify_tangents(s: &Scenario, seed: u64) -> u8 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..1000 {
        let mut pose = || Pose::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0), rng.gen_range(-PI..PI));
        let (p, e) = (pose(), pose());
        for pair in PEPair::ALL {
            let (cp, ce) = pair_circles(pair, &p, &e, &s.cfg);
            let valid = valid_tangent(pair, &cp, &ce);
            if let Some(t) = valid {
                let r = verify_tangent(&t, &cp, &ce);
                tally.check(r.ok(1e-9), || format!("{pair} residuals {r:?} at p={p:?} e={e:?}"));
            }
            let all = common_tangents(&cp, &ce);
            if all.len() == 4 {
                let n = all.iter().filter(|t| verify_tangent(t, &cp, &ce).ok(1e-9)).count();
                tally.check(n == 1 && valid.is_some(), || format!("{pair} has {n} valid tangents at p={p:?} e={e:?}"));
            }
        }
    }
    tally.finish("tangents")
}

pub fn verify_oracle(s: &Scenario, horizon_steps: usize) -> u8 {
    let mut tally = Tally::default();
    let spec = DiscreteGameSpec::new(horizon_steps, 0.25, s.opts.eps_capture.max(0.25));
    let par = match brute_force_minmax_with(&s.p0, &s.e0, &s.cfg, &spec, Exec::Parallel) {
        Ok(v) => v,
        Err(e) => return report(e.to_string()),
    };
    let seq = brute_force_minmax_with(&s.p0, &s.e0, &s.cfg, &spec, Exec::Sequential).expect("same spec");
    println!("brute force H={horizon_steps}: value {:.4}", par.value);
    tally.check(par == seq, || "parallel and sequential enumerations differ".into());
    tally.check((0.0..=spec.no_capture_payoff).contains(&par.value), || format!("value {} out of range", par.value));

    let cs = match cs_minmax(&s.p0, &s.e0, &s.cfg, 64, s.opts.eps_capture) {
        Ok(v) => v,
        Err(e) => return report(e.to_string()),
    };
    println!("cs_minmax value {:.4} (pursuer {:?}, evader {:?})", cs.value, cs.pursuer_cs, cs.evader_cs);
    let grid = pursuer_grid_response(&s.p0, &s.e0, &s.cfg, cs.evader_cs, 128, s.opts.dt, s.opts.eps_capture, cs.horizon, Exec::default());
    if let Some((t, _)) = grid {
        tally.check(t >= cs.value - s.opts.dt - BISECTION_TOL, || format!("grid pursuer {t} beats value {}", cs.value));
    }
    if s.p0.distance(&s.e0) >= twocars::matrix_law::regime_threshold(&s.cfg) {
        match run_law(&s.cfg, s.p0, s.e0, &s.opts) {
            Ok(traj) => {
                let law = traj.capture_time.unwrap_or(f64::INFINITY);
                println!("law-vs-law capture {law:.4}");
                tally.check((cs.value - law).abs() <= 0.05 * law, || format!("cs value {} vs law {law}", cs.value));
            }
            Err(e) => tally.check(false, || e.to_string()),
        }
    }
    tally.finish("oracle")
}

pub fn verify_reachsets(s: &Scenario) -> u8 {
    let mut tally = Tally::default();
    let pp = &s.cfg.pursuer;
    let bound = kinematic_upper_bound(&s.p0, &s.e0, &s.cfg);
    let t_bar = bound.max(pp.full_turn_time());
    for curve in [left_boundary(&s.p0, pp, t_bar, 256), right_boundary(&s.p0, pp, t_bar, 256)] {
        let curve = match curve {
            Ok(c) => c,
            Err(e) => return report(e.to_string()),
        };
        let worst = curve
            .samples
            .iter()
            .map(|(t1, z)| z.distance(cs_endpoint_by_steps(&s.p0, pp, curve.side, *t1, t_bar)))
            .fold(0.0, f64::max);
        tally.check(worst < 1e-9, || format!("{:?} boundary off by {worst:e}", curve.side));
    }
    let time = |kind| containment_time(&s.p0, &s.e0, &s.cfg, kind).map(|c| c.time);
    match (time(SetKind::Full), time(SetKind::Left), time(SetKind::Right)) {
        (Ok(full), Ok(l), Ok(r)) => {
            println!("containment full {full:?} left {l:?} right {r:?} (bound {bound:.4})");
            if let Some(f) = full {
                tally.check(f <= bound, || format!("full containment {f} exceeds bound {bound}"));
                for t in [l, r].into_iter().flatten() {
                    tally.check(t >= f - BISECTION_TOL, || format!("one-sided containment {t} before full {f}"));
                }
            }
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return report(e.to_string()),
    }
    match blocking_set(&s.p0, &s.e0, &s.cfg, t_bar) {
        Ok(b) => tally.check(twocars::geometry::polygon_is_simple(&b.vertices), || "blocking set polygon self-intersects".into()),
        Err(e) => return report(e.to_string()),
    }
    tally.finish("reachsets")
}

pub fn verify_saddle(s: &Scenario, seed: u64) -> u8 {
    let tol = 5.0 * s.opts.dt;
    let r = match saddle_check(&s.cfg, s.p0, s.e0, &s.opts, 50, tol, seed, Exec::default()) {
        Ok(r) => r,
        Err(e) => return report(e.to_string()),
    };
    println!("law-vs-law capture {:.4}, tolerance {tol}", r.law_time);
    let mut tally = Tally::default();
    for o in &r.evader_variants {
        tally.check(o.capture_time.is_some_and(|t| t <= r.law_time + tol), || {
            format!("evader deviation {:?} on [{:.2}, {:.2}] gives {:?}", o.control, o.start, o.end, o.capture_time)
        });
    }
    for o in &r.pursuer_variants {
        tally.check(o.capture_time.is_none_or(|t| t >= r.law_time - tol), || {
            format!("pursuer deviation {:?} on [{:.2}, {:.2}] gives {:?}", o.control, o.start, o.end, o.capture_time)
        });
    }
    tally.finish("saddle")
}
