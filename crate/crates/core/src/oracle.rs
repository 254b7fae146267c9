//! Independent validators for the feedback law: an exhaustive discrete open-loop
//! game, a CS-restricted search, and numeric residuals for tangents.

use serde::{Deserialize, Serialize};

use crate::dubins::{step_exact, Control, GameConfig, Orientation, Owner, Pose, TurningCircle};
use crate::error::{GameError, Result};
use crate::exec::Exec;
use crate::geometry::Vec2;
use crate::reach::{cs_reach_time, evader_path_point, first_entry, kinematic_upper_bound, Side};
use crate::tangents::DirectedTangent;

/// Largest horizon the brute-force oracle accepts (`3^9` sequences per player).
pub const MAX_HORIZON_STEPS: usize = 9;

/// A fixed-step game where each player picks full-speed curvature `−w_m`, `0` or `+w_m`
/// per step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscreteGameSpec {
    pub horizon_steps: usize,
    pub dt: f64,
    pub eps_capture: f64,
    /// Payoff when no capture happens within the horizon.
    pub no_capture_payoff: f64,
}

impl DiscreteGameSpec {
    /// Game with the no-capture payoff set to ten times the horizon duration.
    pub fn new(horizon_steps: usize, dt: f64, eps_capture: f64) -> Self {
        Self { horizon_steps, dt, eps_capture, no_capture_payoff: 10.0 * horizon_steps as f64 * dt }
    }

    fn check(&self) -> Result<()> {
        if self.horizon_steps > MAX_HORIZON_STEPS {
            return Err(GameError::BudgetExceeded { horizon: self.horizon_steps, max: MAX_HORIZON_STEPS });
        }
        if !(self.dt > 0.0 && self.eps_capture >= 0.0) {
            return Err(GameError::InvalidParams("dt must be positive and eps_capture non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteSolution {
    pub value: f64,
    pub pursuer_seq: Vec<Control>,
    pub evader_seq: Vec<Control>,
}

/// Decodes sequence `index` (base 3, first step most significant) into curvature signs.
fn digits(mut index: usize, h: usize) -> Vec<i8> {
    let mut out = vec![0i8; h];
    for slot in out.iter_mut().rev() {
        *slot = (index % 3) as i8 - 1;
        index /= 3;
    }
    out
}

fn rollout(pose: &Pose, v: f64, w_max: f64, signs: &[i8], dt: f64) -> Vec<Vec2> {
    let mut out = Vec::with_capacity(signs.len() + 1);
    let mut p = *pose;
    out.push(p.position());
    for &s in signs {
        p = step_exact(&p, v, w_max * s as f64, dt);
        out.push(p.position());
    }
    out
}

fn controls(signs: &[i8], v: f64, w_max: f64) -> Vec<Control> {
    signs.iter().map(|&s| Control::new(v, w_max * s as f64)).collect()
}

/// Exhaustive open-loop min-max: the pursuer commits to a sequence, the evader answers
/// with the sequence that delays ε-capture (checked at step boundaries) the longest.
///
/// Committing first gives the evader information, so this is an upper value of the
/// discrete game; it is meant for short-horizon sanity checks only.
/// Ties go to the lexicographically smallest sequence with controls ordered `−w, 0, +w`.
pub fn brute_force_minmax(p0: &Pose, e0: &Pose, cfg: &GameConfig, spec: &DiscreteGameSpec) -> Result<DiscreteSolution> {
    brute_force_minmax_with(p0, e0, cfg, spec, Exec::default())
}

pub fn brute_force_minmax_with(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    spec: &DiscreteGameSpec,
    exec: Exec,
) -> Result<DiscreteSolution> {
    spec.check()?;
    let h = spec.horizon_steps;
    let n = 3usize.pow(h as u32);
    let (pp, ep) = (&cfg.pursuer, &cfg.evader);
    let evader_paths: Vec<Vec<Vec2>> =
        (0..n).map(|j| rollout(e0, ep.v_max(), ep.w_max(), &digits(j, h), spec.dt)).collect();
    let eps2 = spec.eps_capture * spec.eps_capture;
    // (worst time for the evader, evader index) per pursuer sequence
    let per_pursuer = exec.map_range(n, |i| {
        let path = rollout(p0, pp.v_max(), pp.w_max(), &digits(i, h), spec.dt);
        let mut best = (f64::NEG_INFINITY, 0usize);
        for (j, e) in evader_paths.iter().enumerate() {
            let t = path
                .iter()
                .zip(e)
                .position(|(a, b)| (*a - *b).norm_sq() <= eps2)
                .map_or(spec.no_capture_payoff, |k| k as f64 * spec.dt);
            if t > best.0 {
                best = (t, j);
            }
        }
        best
    });
    let (i, &(value, j)) = per_pursuer
        .iter()
        .enumerate()
        .fold(None::<(usize, &(f64, usize))>, |acc, (i, b)| match acc {
            Some((_, a)) if a.0 <= b.0 => acc,
            _ => Some((i, b)),
        })
        .expect("at least one sequence");
    Ok(DiscreteSolution {
        value,
        pursuer_seq: controls(&digits(i, h), pp.v_max(), pp.w_max()),
        evader_seq: controls(&digits(j, h), ep.v_max(), ep.w_max()),
    })
}

/// One CS strategy: turn on `side` for `t1` at full speed, then go straight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsStrategy {
    pub side: Side,
    pub t1: f64,
}

impl CsStrategy {
    pub fn control_at(&self, t: f64, params: &crate::dubins::VehicleParams) -> Control {
        if t < self.t1 {
            Control::new(params.v_max(), params.w_max() * self.side.orientation().sign())
        } else {
            Control::new(params.v_max(), 0.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsSolution {
    pub value: f64,
    pub pursuer_cs: CsStrategy,
    pub evader_cs: CsStrategy,
    /// Search horizon (four times the kinematic bound).
    pub horizon: f64,
}

/// Earliest ε-interception of a committed evader CS path by a pursuer CS path, and
/// the pursuer strategy achieving it.
///
/// The pursuer reaches the ε-disk around `z` when its LS/RS reach time, shortened
/// by `ε / v_pm` on the straight part, is at most the current time.
pub fn pursuer_best_response(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    evader: CsStrategy,
    eps: f64,
    horizon: f64,
) -> Option<(f64, CsStrategy)> {
    let pp = &cfg.pursuer;
    let point = |tau: f64| evader_path_point(e0, &cfg.evader, evader.side, evader.t1, tau);
    let time_to = |side: Side, z: Vec2| {
        let t = cs_reach_time(p0, pp, side, z);
        if p0.position().distance(z) <= eps {
            return 0.0;
        }
        t - eps / pp.v_max()
    };
    let caught = |tau: f64| {
        let z = point(tau);
        time_to(Side::Left, z).min(time_to(Side::Right, z)) <= tau
    };
    let t = first_entry(horizon, caught)?;
    let z = point(t);
    let side = if time_to(Side::Left, z) <= time_to(Side::Right, z) { Side::Left } else { Side::Right };
    let straight = {
        let c = crate::dubins::turning_circle(p0, pp, Owner::Pursuer, side.orientation());
        let d = (z - c.center).norm();
        (d * d - c.radius * c.radius).max(0.0).sqrt() / pp.v_max()
    };
    let t1 = (cs_reach_time(p0, pp, side, z) - straight).max(0.0);
    Some((t, CsStrategy { side, t1 }))
}

/// CS-restricted game value: the evader picks the CS path maximizing the pursuer's
/// best-response interception time (grid of `grid` switch times per side, then three
/// rounds of local subdivision around the best).
pub fn cs_minmax(p0: &Pose, e0: &Pose, cfg: &GameConfig, grid: usize, eps: f64) -> Result<CsSolution> {
    cs_minmax_with(p0, e0, cfg, grid, eps, Exec::default())
}

pub fn cs_minmax_with(p0: &Pose, e0: &Pose, cfg: &GameConfig, grid: usize, eps: f64, exec: Exec) -> Result<CsSolution> {
    if grid < 32 {
        return Err(GameError::InvalidParams(format!("grid must be at least 32, got {grid}")));
    }
    let horizon = 4.0 * kinematic_upper_bound(p0, e0, cfg);
    let payoff = 10.0 * horizon;
    let full = cfg.evader.full_turn_time();
    let eval = |s: &CsStrategy| {
        pursuer_best_response(p0, e0, cfg, *s, eps, horizon)
            .map_or((payoff, None), |(t, p)| (t, Some(p)))
    };
    let pick = |cands: &[CsStrategy]| {
        let vals = exec.map(cands, eval);
        let mut best = 0;
        for (k, v) in vals.iter().enumerate() {
            if v.0 > vals[best].0 {
                best = k;
            }
        }
        (cands[best], vals[best])
    };
    let mut cands: Vec<CsStrategy> = [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| (0..grid).map(move |i| CsStrategy { side, t1: full * i as f64 / (grid - 1) as f64 }))
        .collect();
    let mut width = full / (grid - 1) as f64;
    let (mut best_s, mut best_v) = pick(&cands);
    for _ in 0..3 {
        cands = (0..=16)
            .map(|k| CsStrategy {
                side: best_s.side,
                t1: (best_s.t1 - width + 2.0 * width * k as f64 / 16.0).clamp(0.0, full),
            })
            .collect();
        let (s, v) = pick(&cands);
        if v.0 >= best_v.0 {
            best_s = s;
            best_v = v;
        }
        width /= 8.0;
    }
    let pursuer_cs = best_v.1.unwrap_or(CsStrategy { side: Side::Left, t1: 0.0 });
    Ok(CsSolution { value: best_v.0, pursuer_cs, evader_cs: best_s, horizon })
}

/// Interception time of two committed CS strategies, by exact stepping at `dt`.
#[allow(clippy::too_many_arguments)]
pub fn simulate_cs_pair(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    pursuer: CsStrategy,
    evader: CsStrategy,
    dt: f64,
    eps: f64,
    t_max: f64,
) -> Option<f64> {
    let (mut p, mut e) = (*p0, *e0);
    let n = (t_max / dt).ceil() as usize;
    for k in 0..=n {
        let t = k as f64 * dt;
        if p.distance(&e) <= eps {
            return Some(t);
        }
        for (pose, s, params) in [(&mut p, pursuer, &cfg.pursuer), (&mut e, evader, &cfg.evader)] {
            // split the step at the switch so the arc ends exactly at t1
            let c = s.control_at(t, params);
            if c.w != 0.0 && t + dt > s.t1 {
                let a = step_exact(pose, c.v, c.w, s.t1 - t);
                *pose = step_exact(&a, c.v, 0.0, t + dt - s.t1);
            } else {
                *pose = step_exact(pose, c.v, c.w, dt);
            }
        }
    }
    None
}

/// Best interception time a pursuer can get from a grid of CS strategies against a
/// fixed evader CS strategy, by simulation.
#[allow(clippy::too_many_arguments)]
pub fn pursuer_grid_response(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    evader: CsStrategy,
    grid: usize,
    dt: f64,
    eps: f64,
    t_max: f64,
    exec: Exec,
) -> Option<(f64, CsStrategy)> {
    let full = cfg.pursuer.full_turn_time();
    let cands: Vec<CsStrategy> = [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| (0..grid).map(move |i| CsStrategy { side, t1: full * i as f64 / (grid - 1) as f64 }))
        .collect();
    let times = exec.map(&cands, |s| simulate_cs_pair(p0, e0, cfg, *s, evader, dt, eps, t_max));
    times
        .into_iter()
        .zip(cands)
        .filter_map(|(t, s)| t.map(|t| (t, s)))
        .min_by(|a, b| a.0.total_cmp(&b.0))
}

/// Numeric residuals of a directed tangent against its two circles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangentResiduals {
    /// `| |t_p − O_p| − r_p |`
    pub radial_p: f64,
    pub radial_e: f64,
    /// `|(t_p − O_p) · direction|`
    pub perp_p: f64,
    pub perp_e: f64,
    /// Whether the direction matches the circle's travel direction at each tangent point.
    pub orientation_p: bool,
    pub orientation_e: bool,
}

impl TangentResiduals {
    pub fn max_residual(&self) -> f64 {
        self.radial_p.max(self.radial_e).max(self.perp_p).max(self.perp_e)
    }

    pub fn ok(&self, tol: f64) -> bool {
        self.max_residual() < tol && self.orientation_p && self.orientation_e
    }
}

fn orientation_ok(c: &TurningCircle, point: Vec2, dir: Vec2) -> bool {
    let radial = point - c.center;
    let cross = radial.cross(dir);
    match c.orientation {
        Orientation::Ccw => cross > 0.0,
        Orientation::Cw => cross < 0.0,
    }
}

pub fn verify_tangent(t: &DirectedTangent, cp: &TurningCircle, ce: &TurningCircle) -> TangentResiduals {
    let rp = t.t_p - cp.center;
    let re = t.t_e - ce.center;
    TangentResiduals {
        radial_p: (rp.norm() - cp.radius).abs(),
        radial_e: (re.norm() - ce.radius).abs(),
        perp_p: rp.dot(t.direction).abs(),
        perp_e: re.dot(t.direction).abs(),
        orientation_p: orientation_ok(cp, t.t_p, t.direction),
        orientation_e: orientation_ok(ce, t.t_e, t.direction),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangents::{pair_circles, valid_tangent, PEPair};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn immediate_capture_has_zero_value() {
        let cfg = GameConfig::standard();
        let s = DiscreteGameSpec::new(3, 0.5, 2.0);
        let v = brute_force_minmax(&Pose::new(0.0, 0.0, 0.0), &Pose::new(1.0, 0.0, 0.0), &cfg, &s).unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn short_chase_open_loop_value() {
        let cfg = GameConfig::standard();
        let s = DiscreteGameSpec::new(4, 0.5, 0.25);
        let (p, e) = (Pose::new(0.0, 0.0, FRAC_PI_2), Pose::new(0.0, 1.0, FRAC_PI_2));
        let v = brute_force_minmax(&p, &e, &cfg, &s).unwrap();
        // against a committed pursuer the evader always has a turning escape
        assert_eq!(v.value, s.no_capture_payoff);
        // both straight: the gap closes by 0.5 per step
        let a = rollout(&p, 2.0, 2.0, &[0; 4], 0.5);
        let b = rollout(&e, 1.0, 1.0, &[0; 4], 0.5);
        let k = a.iter().zip(&b).position(|(x, y)| x.distance(*y) <= 0.25).unwrap();
        assert_eq!(k as f64 * 0.5, 1.0);
    }

    #[test]
    fn equal_speeds_never_close() {
        let cfg = GameConfig::new_unchecked(
            crate::dubins::VehicleParams::new(1.0, 2.0).unwrap(),
            crate::dubins::VehicleParams::new(1.0, 1.0).unwrap(),
        );
        let s = DiscreteGameSpec::new(3, 0.5, 0.1);
        let v = brute_force_minmax(&Pose::new(0.0, 0.0, FRAC_PI_2), &Pose::new(0.0, 5.0, FRAC_PI_2), &cfg, &s).unwrap();
        assert_eq!(v.value, s.no_capture_payoff);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = GameConfig::standard();
        let s = DiscreteGameSpec::new(10, 0.5, 0.1);
        let z = Pose::new(0.0, 0.0, 0.0);
        assert_eq!(
            brute_force_minmax(&z, &z, &cfg, &s),
            Err(GameError::BudgetExceeded { horizon: 10, max: MAX_HORIZON_STEPS })
        );
    }

    #[test]
    fn digits_are_lexicographic() {
        assert_eq!(digits(0, 3), vec![-1, -1, -1]);
        assert_eq!(digits(1, 3), vec![-1, -1, 0]);
        assert_eq!(digits(26, 3), vec![1, 1, 1]);
    }

    #[test]
    fn tail_chase_cs_value() {
        let cfg = GameConfig::standard();
        let s = cs_minmax(&Pose::new(0.0, 0.0, FRAC_PI_2), &Pose::new(0.0, 10.0, FRAC_PI_2), &cfg, 64, 0.0).unwrap();
        assert!((s.value - 10.0).abs() < 0.01, "{s:?}");
    }

    #[test]
    fn tail_chase_tangent_residuals() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let e = Pose::new(0.0, 10.0, FRAC_PI_2);
        let (cp, ce) = pair_circles(PEPair::AA, &p, &e, &cfg);
        let t = valid_tangent(PEPair::AA, &cp, &ce).unwrap();
        assert!(verify_tangent(&t, &cp, &ce).ok(1e-12));
        let bad = DirectedTangent { t_p: t.t_p + Vec2::new(1e-3, 0.0), ..t };
        let r = verify_tangent(&bad, &cp, &ce);
        assert!((r.radial_p - 1e-3).abs() < 1e-9);
    }
}
