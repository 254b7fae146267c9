//! Closed-loop rollouts with exact integration and ε-capture.
//!
//! Both policies observe the same pre-step state, then both vehicles are advanced
//! with [`step_exact`] over one step of length `dt`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dubins::{step_exact, Control, GameConfig, Orientation, Owner, Pose};
use crate::error::{GameError, Result};
use crate::exec::Exec;
use crate::geometry::Vec2;
use crate::matrix_law::{build_matrix, default_arc_epsilon, feedback_from_matrix};
use crate::tangents::PEPair;

/// What a policy returns for one instant.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Decision {
    pub control: Control,
    /// PE-pair selected by a matrix-law policy.
    pub pair: Option<PEPair>,
    pub saddle_gap: Option<f64>,
}

impl From<Control> for Decision {
    fn from(control: Control) -> Self {
        Decision { control, pair: None, saddle_gap: None }
    }
}

/// State-feedback control for one vehicle.
pub trait Policy: Send + Sync {
    /// Vehicle this policy drives.
    fn owner(&self) -> Owner;

    fn decide(&self, t: f64, p: &Pose, e: &Pose, cfg: &GameConfig) -> Result<Decision>;
}

/// The tangent-based feedback law, driving one of the two vehicles.
#[derive(Debug, Clone, Copy)]
pub struct MatrixLaw {
    pub owner: Owner,
    pub arc_epsilon: f64,
}

impl MatrixLaw {
    /// Law for `owner` with the default straight-phase threshold for step `dt`.
    pub fn new(owner: Owner, dt: f64) -> Self {
        Self { owner, arc_epsilon: default_arc_epsilon(dt) }
    }
}

impl Policy for MatrixLaw {
    fn owner(&self) -> Owner {
        self.owner
    }

    fn decide(&self, _t: f64, p: &Pose, e: &Pose, cfg: &GameConfig) -> Result<Decision> {
        let m = build_matrix(p, e, cfg)?;
        let u = feedback_from_matrix(&m, cfg, self.arc_epsilon);
        let control = match self.owner {
            Owner::Pursuer => Control::new(u.v_p, u.w_p),
            Owner::Evader => Control::new(u.v_e, u.w_e),
        };
        Ok(Decision { control, pair: Some(u.chosen_pair), saddle_gap: Some(u.saddle_gap()) })
    }
}

/// Piecewise-constant open-loop schedule; the last control is held afterwards.
#[derive(Debug, Clone)]
pub struct Scripted {
    pub owner: Owner,
    /// `(duration, control)` segments in order.
    pub segments: Vec<(f64, Control)>,
}

impl Scripted {
    pub fn constant(owner: Owner, control: Control) -> Self {
        Self { owner, segments: vec![(f64::INFINITY, control)] }
    }

    fn control_at(&self, t: f64) -> Control {
        let mut start = 0.0;
        for &(duration, control) in &self.segments {
            if t < start + duration {
                return control;
            }
            start += duration;
        }
        self.segments.last().map(|s| s.1).unwrap_or_default()
    }
}

impl Policy for Scripted {
    fn owner(&self) -> Owner {
        self.owner
    }

    fn decide(&self, t: f64, _p: &Pose, _e: &Pose, _cfg: &GameConfig) -> Result<Decision> {
        Ok(self.control_at(t).into())
    }
}

/// Wraps a policy and overrides its control on `[start, end)`.
#[derive(Debug, Clone)]
pub struct Perturbed<P> {
    pub inner: P,
    pub start: f64,
    pub end: f64,
    pub control: Control,
}

impl<P: Policy> Policy for Perturbed<P> {
    fn owner(&self) -> Owner {
        self.inner.owner()
    }

    fn decide(&self, t: f64, p: &Pose, e: &Pose, cfg: &GameConfig) -> Result<Decision> {
        if t >= self.start && t < self.end {
            Ok(self.control.into())
        } else {
            self.inner.decide(t, p, e, cfg)
        }
    }
}

/// Replays a fixed-step control sequence (e.g. from the discrete oracle), then holds `after`.
#[derive(Debug, Clone)]
pub struct OracleReplay {
    pub owner: Owner,
    pub step: f64,
    pub controls: Vec<Control>,
    pub after: Control,
}

impl Policy for OracleReplay {
    fn owner(&self) -> Owner {
        self.owner
    }

    fn decide(&self, t: f64, _p: &Pose, _e: &Pose, _cfg: &GameConfig) -> Result<Decision> {
        // small guard so that t = k·step lands in slot k despite round-off
        let k = ((t + 1e-9 * self.step) / self.step).floor() as usize;
        Ok(self.controls.get(k).copied().unwrap_or(self.after).into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimOptions {
    pub dt: f64,
    pub eps_capture: f64,
    pub t_max: f64,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self { dt: 0.01, eps_capture: 0.05, t_max: 200.0 }
    }
}

/// One recorded instant. Controls are those applied over the following step; the
/// terminal sample repeats the last applied controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub p: Pose,
    pub e: Pose,
    pub v_p: f64,
    pub w_p: f64,
    pub v_e: f64,
    pub w_e: f64,
    pub d_pe: f64,
    pub pair: Option<PEPair>,
    pub saddle_gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub eps_capture: f64,
    pub samples: Vec<Sample>,
    pub capture_time: Option<f64>,
    pub capture_point: Option<Vec2>,
}

impl Trajectory {
    pub fn final_sample(&self) -> Option<&Sample> {
        self.samples.last()
    }

    /// Number of changes of the pursuer's chosen PE-pair along the run.
    pub fn pair_switches(&self) -> usize {
        let pairs: Vec<PEPair> = self.samples.iter().filter_map(|s| s.pair).collect();
        pairs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn saddle_gaps(&self) -> Vec<f64> {
        self.samples.iter().filter_map(|s| s.saddle_gap).collect()
    }

    /// Curvature commands of one vehicle over the non-terminal samples.
    pub fn curvatures(&self, vehicle: Owner) -> Vec<f64> {
        let n = self.samples.len().saturating_sub(1);
        self.samples[..n]
            .iter()
            .map(|s| match vehicle {
                Owner::Pursuer => s.w_p,
                Owner::Evader => s.w_e,
            })
            .collect()
    }
}

/// Rolls out both policies from `(p0, e0)` until ε-capture or `t_max`.
pub fn run(
    cfg: &GameConfig,
    p0: Pose,
    e0: Pose,
    pursuer: &dyn Policy,
    evader: &dyn Policy,
    opts: &SimOptions,
) -> Result<Trajectory> {
    if !(opts.dt > 0.0 && opts.eps_capture > 0.0 && opts.t_max > 0.0) {
        return Err(GameError::InvalidParams(format!(
            "dt, eps_capture and t_max must be positive (got {}, {}, {})",
            opts.dt, opts.eps_capture, opts.t_max
        )));
    }
    let dt = opts.dt;
    let n_steps = (opts.t_max / dt).ceil() as usize;
    let mut samples = Vec::with_capacity(n_steps.min(1 << 20) + 1);
    let (mut p, mut e) = (p0, e0);
    let mut d = p.distance(&e);
    let mut last = Decision::default();
    let mut last_e = Decision::default();

    let terminal = |t: f64, p: Pose, e: Pose, d: f64, up: &Decision, ue: &Decision| Sample {
        t,
        p,
        e,
        v_p: up.control.v,
        w_p: up.control.w,
        v_e: ue.control.v,
        w_e: ue.control.w,
        d_pe: d,
        pair: None,
        saddle_gap: None,
    };

    if d <= opts.eps_capture {
        samples.push(terminal(0.0, p, e, d, &last, &last_e));
        return Ok(Trajectory {
            dt,
            eps_capture: opts.eps_capture,
            samples,
            capture_time: Some(0.0),
            capture_point: Some(p.position().lerp(e.position(), 0.5)),
        });
    }

    for k in 0..n_steps {
        let t = k as f64 * dt;
        let fail = |err: GameError| GameError::PolicyFailure { t, source: Box::new(err) };
        let up = pursuer.decide(t, &p, &e, cfg).map_err(fail)?;
        let ue = evader.decide(t, &p, &e, cfg).map_err(fail)?;
        if !up.control.within(&cfg.pursuer) || !ue.control.within(&cfg.evader) {
            return Err(fail(GameError::InvalidParams("policy control outside the vehicle limits".into())));
        }
        samples.push(Sample {
            t,
            p,
            e,
            v_p: up.control.v,
            w_p: up.control.w,
            v_e: ue.control.v,
            w_e: ue.control.w,
            d_pe: d,
            pair: up.pair.or(ue.pair),
            saddle_gap: up.saddle_gap.or(ue.saddle_gap),
        });
        let p_next = step_exact(&p, up.control.v, up.control.w, dt);
        let e_next = step_exact(&e, ue.control.v, ue.control.w, dt);
        let d_next = p_next.distance(&e_next);
        let t_next = (k + 1) as f64 * dt;
        if d_next <= opts.eps_capture {
            let frac = ((d - opts.eps_capture) / (d - d_next)).clamp(0.0, 1.0);
            let pc = step_exact(&p, up.control.v, up.control.w, frac * dt);
            let ec = step_exact(&e, ue.control.v, ue.control.w, frac * dt);
            samples.push(terminal(t_next, p_next, e_next, d_next, &up, &ue));
            return Ok(Trajectory {
                dt,
                eps_capture: opts.eps_capture,
                samples,
                capture_time: Some(t + frac * dt),
                capture_point: Some(pc.position().lerp(ec.position(), 0.5)),
            });
        }
        p = p_next;
        e = e_next;
        d = d_next;
        last = up;
        last_e = ue;
    }
    samples.push(terminal(n_steps as f64 * dt, p, e, d, &last, &last_e));
    Ok(Trajectory { dt, eps_capture: opts.eps_capture, samples, capture_time: None, capture_point: None })
}

/// Law-vs-law rollout with default straight-phase thresholds.
pub fn run_law(cfg: &GameConfig, p0: Pose, e0: Pose, opts: &SimOptions) -> Result<Trajectory> {
    let pursuer = MatrixLaw::new(Owner::Pursuer, opts.dt);
    let evader = MatrixLaw::new(Owner::Evader, opts.dt);
    run(cfg, p0, e0, &pursuer, &evader, opts)
}

/// The four reference initial states: the pursuer at the origin heading north and the
/// evader behind-left, right, dead behind and ahead at distance 6.
pub fn reference_cases() -> [(&'static str, Pose, Pose); 4] {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};
    let p = Pose::new(0.0, 0.0, FRAC_PI_2);
    [
        ("case1", p, Pose::new(-3.0, -6.0, FRAC_PI_2)),
        ("case2", p, Pose::new(6.0, 3.0, FRAC_PI_2)),
        ("case3", p, Pose::new(0.0, -6.0, FRAC_PI_2)),
        ("case4", p, Pose::new(0.0, 6.0, FRAC_PI_2 + FRAC_PI_6)),
    ]
}

/// Result of checking a control history for the arc-then-straight shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsVerdict {
    pub is_cs: bool,
    /// Time of the first straight sample.
    pub switch_time: Option<f64>,
    /// Circle ridden before the switch; `None` for a pure straight line.
    pub circle: Option<Orientation>,
    /// Short runs (at most [`CS_TRANSIENT_STEPS`] steps) that were ignored.
    pub transients: usize,
}

/// Runs of at most this many steps are treated as tangent-crossing transients.
pub const CS_TRANSIENT_STEPS: usize = 2;

fn sign_of(w: f64) -> i8 {
    if w > 0.0 {
        1
    } else if w < 0.0 {
        -1
    } else {
        0
    }
}

/// Checks that a vehicle's curvature history is one full-curvature run followed by one
/// straight run, ignoring runs of at most [`CS_TRANSIENT_STEPS`] steps.
pub fn classify_cs_structure(traj: &Trajectory, vehicle: Owner) -> CsVerdict {
    let ws = traj.curvatures(vehicle);
    // (sign, start index, length)
    let mut runs: Vec<(i8, usize, usize)> = Vec::new();
    for (i, &w) in ws.iter().enumerate() {
        let s = sign_of(w);
        match runs.last_mut() {
            Some(r) if r.0 == s => r.2 += 1,
            _ => runs.push((s, i, 1)),
        }
    }
    let long: Vec<_> = runs.iter().copied().filter(|r| r.2 > CS_TRANSIENT_STEPS).collect();
    let transients = runs.len() - long.len();
    let mut merged: Vec<(i8, usize, usize)> = Vec::new();
    for r in long {
        match merged.last_mut() {
            Some(m) if m.0 == r.0 => m.2 = r.1 + r.2 - m.1,
            _ => merged.push(r),
        }
    }
    let not_cs = CsVerdict { is_cs: false, switch_time: None, circle: None, transients };
    let circle_of = |s: i8| if s > 0 { Orientation::Ccw } else { Orientation::Cw };
    match merged.as_slice() {
        [(0, _, _)] => CsVerdict { is_cs: true, switch_time: Some(0.0), circle: None, transients },
        [(s, _, _), (0, start, _)] if *s != 0 => CsVerdict {
            is_cs: true,
            switch_time: Some(traj.samples[*start].t),
            circle: Some(circle_of(*s)),
            transients,
        },
        _ => not_cs,
    }
}

/// Direction and lateral offset between the final straight segments of both vehicles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FinalSegments {
    /// Angle between the two segment directions, in radians.
    pub angle: f64,
    /// Distance of the pursuer's segment start from the evader's segment line.
    pub lateral_offset: f64,
    /// Length of the pursuer's final straight leg.
    pub pursuer_leg: f64,
}

/// Compares the final straight legs of both vehicles; `None` unless both are CS.
pub fn final_segments(traj: &Trajectory) -> Option<FinalSegments> {
    let vp = classify_cs_structure(traj, Owner::Pursuer);
    let ve = classify_cs_structure(traj, Owner::Evader);
    if !(vp.is_cs && ve.is_cs) {
        return None;
    }
    let last = traj.samples.last()?;
    let at = |t: f64| traj.samples.iter().find(|s| s.t >= t - 1e-12);
    let sp = at(vp.switch_time?)?;
    let se = at(ve.switch_time?)?;
    let leg = last.p.position() - sp.p.position();
    let dp = leg.normalized()?;
    let de = (last.e.position() - se.e.position()).normalized()?;
    let angle = dp.dot(de).clamp(-1.0, 1.0).acos();
    let lateral_offset = de.cross(sp.p.position() - se.e.position()).abs();
    Some(FinalSegments { angle, lateral_offset, pursuer_leg: leg.norm() })
}

/// Outcome of one perturbed rollout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationOutcome {
    pub start: f64,
    pub end: f64,
    pub control: Control,
    /// `None` when the perturbed run did not capture within its horizon.
    pub capture_time: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SaddleReport {
    pub law_time: f64,
    pub tolerance: f64,
    pub evader_variants: Vec<PerturbationOutcome>,
    pub pursuer_variants: Vec<PerturbationOutcome>,
}

impl SaddleReport {
    /// Evader deviations that lengthened the game beyond tolerance.
    pub fn evader_violations(&self) -> Vec<&PerturbationOutcome> {
        self.evader_variants
            .iter()
            .filter(|o| o.capture_time.is_none_or(|t| t > self.law_time + self.tolerance))
            .collect()
    }

    /// Pursuer deviations that shortened the game beyond tolerance.
    pub fn pursuer_violations(&self) -> Vec<&PerturbationOutcome> {
        self.pursuer_variants
            .iter()
            .filter(|o| o.capture_time.is_some_and(|t| t < self.law_time - self.tolerance))
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.evader_violations().is_empty() && self.pursuer_violations().is_empty()
    }
}

fn random_window(rng: &mut ChaCha8Rng, law_time: f64, params: &crate::dubins::VehicleParams) -> (f64, f64, Control) {
    let start = rng.gen_range(0.0..0.5 * law_time);
    let len = rng.gen_range(0.1..2.0);
    let v = if rng.gen_bool(0.5) { params.v_max() } else { rng.gen_range(0.0..=params.v_max()) };
    let w = match rng.gen_range(0..3) {
        0 => params.w_max(),
        1 => -params.w_max(),
        _ => rng.gen_range(-params.w_max()..=params.w_max()),
    };
    (start, start + len, Control::new(v, w))
}

/// Checks the saddle-point inequality empirically: unilateral deviations of the evader
/// must not delay capture, and those of the pursuer must not hasten it, beyond `tolerance`.
#[allow(clippy::too_many_arguments)]
pub fn saddle_check(
    cfg: &GameConfig,
    p0: Pose,
    e0: Pose,
    opts: &SimOptions,
    variants: usize,
    tolerance: f64,
    seed: u64,
    exec: Exec,
) -> Result<SaddleReport> {
    let base = run_law(cfg, p0, e0, opts)?;
    let law_time = base.capture_time.ok_or_else(|| {
        GameError::InvalidParams("law-vs-law run did not capture; no reference time".into())
    })?;
    let long = SimOptions { t_max: 4.0 * law_time + 50.0, ..*opts };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let windows: Vec<(Owner, (f64, f64, Control))> = (0..2 * variants)
        .map(|i| {
            let who = if i < variants { Owner::Evader } else { Owner::Pursuer };
            (who, random_window(&mut rng, law_time, cfg.params(who)))
        })
        .collect();
    let outcomes = exec.map(&windows, |&(who, (start, end, control))| -> Result<PerturbationOutcome> {
        let law_p = MatrixLaw::new(Owner::Pursuer, opts.dt);
        let law_e = MatrixLaw::new(Owner::Evader, opts.dt);
        let traj = match who {
            Owner::Evader => {
                let dev = Perturbed { inner: law_e, start, end, control };
                run(cfg, p0, e0, &law_p, &dev, &long)?
            }
            Owner::Pursuer => {
                let dev = Perturbed { inner: law_p, start, end, control };
                run(cfg, p0, e0, &dev, &law_e, &long)?
            }
        };
        Ok(PerturbationOutcome { start, end, control, capture_time: traj.capture_time })
    });
    let mut evader_variants = Vec::with_capacity(variants);
    let mut pursuer_variants = Vec::with_capacity(variants);
    for (o, (who, _)) in outcomes.into_iter().zip(&windows) {
        match who {
            Owner::Evader => evader_variants.push(o?),
            Owner::Pursuer => pursuer_variants.push(o?),
        }
    }
    Ok(SaddleReport { law_time, tolerance, evader_variants, pursuer_variants })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn tail_chase_captures_at_ten() {
        let cfg = GameConfig::standard();
        let traj = run_law(
            &cfg,
            Pose::new(0.0, 0.0, FRAC_PI_2),
            Pose::new(0.0, 10.0, FRAC_PI_2),
            &SimOptions { t_max: 30.0, ..Default::default() },
        )
        .unwrap();
        let t = traj.capture_time.unwrap();
        assert!((t - 10.0).abs() <= 0.1, "capture at {t}");
        assert!(traj.samples.iter().all(|s| s.w_p == 0.0 && s.w_e == 0.0));
        let v = classify_cs_structure(&traj, Owner::Pursuer);
        assert!(v.is_cs);
        assert_eq!(v.switch_time, Some(0.0));
        assert_eq!(v.circle, None);
    }

    #[test]
    fn sample_invariants() {
        let cfg = GameConfig::standard();
        let traj = run_law(
            &cfg,
            Pose::new(0.0, 0.0, FRAC_PI_2),
            Pose::new(6.0, 3.0, FRAC_PI_2),
            &SimOptions::default(),
        )
        .unwrap();
        for (k, s) in traj.samples.iter().enumerate() {
            assert_eq!(s.t, k as f64 * traj.dt);
            assert!((s.d_pe - s.p.distance(&s.e)).abs() <= 1e-12);
        }
        assert!(traj.final_sample().unwrap().d_pe <= traj.eps_capture);
    }

    #[test]
    fn straight_fleeing_evader_is_caught_no_later() {
        let cfg = GameConfig::standard();
        let (p0, e0) = (Pose::new(0.0, 0.0, FRAC_PI_2), Pose::new(0.0, -6.0, FRAC_PI_2));
        let opts = SimOptions::default();
        let t_law = run_law(&cfg, p0, e0, &opts).unwrap().capture_time.unwrap();
        let law = MatrixLaw::new(Owner::Pursuer, opts.dt);
        let straight = Scripted::constant(Owner::Evader, Control::new(1.0, 0.0));
        let traj = run(&cfg, p0, e0, &law, &straight, &opts).unwrap();
        assert!(traj.capture_time.unwrap() <= t_law + 0.05);
    }

    #[test]
    fn diverging_parallel_flight_never_captures() {
        let cfg = GameConfig::standard();
        let p = Scripted::constant(Owner::Pursuer, Control::new(2.0, 0.0));
        let e = Scripted::constant(Owner::Evader, Control::new(1.0, 0.0));
        let traj = run(
            &cfg,
            Pose::new(0.0, 0.0, FRAC_PI_2),
            Pose::new(10.0, 0.0, FRAC_PI_2),
            &p,
            &e,
            &SimOptions { t_max: 5.0, ..Default::default() },
        )
        .unwrap();
        assert!(traj.capture_time.is_none());
        assert!(traj.samples.windows(2).all(|w| w[1].d_pe >= w[0].d_pe));
    }

    #[test]
    fn alternating_turns_are_not_cs() {
        let cfg = GameConfig::standard();
        let zig = Scripted {
            owner: Owner::Pursuer,
            segments: vec![
                (1.0, Control::new(2.0, 2.0)),
                (1.0, Control::new(2.0, -2.0)),
                (1.0, Control::new(2.0, 2.0)),
            ],
        };
        let e = Scripted::constant(Owner::Evader, Control::new(1.0, 0.0));
        let traj = run(
            &cfg,
            Pose::new(0.0, 0.0, 0.0),
            Pose::new(50.0, 50.0, 0.0),
            &zig,
            &e,
            &SimOptions { t_max: 3.0, ..Default::default() },
        )
        .unwrap();
        assert!(!classify_cs_structure(&traj, Owner::Pursuer).is_cs);
        assert!(classify_cs_structure(&traj, Owner::Evader).is_cs);
    }

    #[test]
    fn policy_failure_carries_timestamp() {
        struct Broken;
        impl Policy for Broken {
            fn owner(&self) -> Owner {
                Owner::Pursuer
            }
            fn decide(&self, t: f64, _: &Pose, _: &Pose, _: &GameConfig) -> Result<Decision> {
                if t >= 0.5 {
                    Err(GameError::AllPairsInfeasible)
                } else {
                    Ok(Control::new(2.0, 0.0).into())
                }
            }
        }
        let cfg = GameConfig::standard();
        let e = Scripted::constant(Owner::Evader, Control::new(1.0, 0.0));
        let err = run(
            &cfg,
            Pose::new(0.0, 0.0, 0.0),
            Pose::new(0.0, 30.0, 0.0),
            &Broken,
            &e,
            &SimOptions::default(),
        )
        .unwrap_err();
        match err {
            GameError::PolicyFailure { t, source } => {
                assert!((t - 0.5).abs() < 1e-9);
                assert_eq!(*source, GameError::AllPairsInfeasible);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn oracle_replay_indexes_by_step() {
        let r = OracleReplay {
            owner: Owner::Evader,
            step: 0.5,
            controls: vec![Control::new(1.0, 1.0), Control::new(1.0, -1.0)],
            after: Control::new(1.0, 0.0),
        };
        let cfg = GameConfig::standard();
        let z = Pose::new(0.0, 0.0, 0.0);
        assert_eq!(r.decide(0.0, &z, &z, &cfg).unwrap().control.w, 1.0);
        assert_eq!(r.decide(0.5, &z, &z, &cfg).unwrap().control.w, -1.0);
        assert_eq!(r.decide(2.0, &z, &z, &cfg).unwrap().control.w, 0.0);
    }
}
