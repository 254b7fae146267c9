//! Reachable sets of CS (arc-then-straight) paths, containment times, the blocking
//! set and the active-set race.
//!
//! Set membership uses closed-form minimum reach times: a point `z` outside the
//! turning disk is reached by a unique LS (RS) path, leaving the circle at the
//! tangent point seen from `z`. Polygons are built only for export and plotting.
//!
//! Containment follows the safe-region reading: a pursuer set family `S(τ)` has
//! contained the evader at `T` when every evader CS path `γ` has met `γ(τ) ∈ S(τ)`
//! for some `τ ≤ T`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::dubins::{step_exact, turning_circle, GameConfig, Orientation, Owner, Pose, TurningCircle, VehicleParams};
use crate::error::{GameError, Result};
use crate::exec::Exec;
use crate::geometry::{point_in_polygon, wrap_positive, Vec2};

/// Default number of samples on boundary curves and evader path fans.
pub const DEFAULT_SAMPLES: usize = 256;

/// Time resolution of the containment search (step of the scan, then bisection).
pub const SCAN_STEP: f64 = 0.005;
pub const BISECTION_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn orientation(self) -> Orientation {
        match self {
            Side::Left => Orientation::Ccw,
            Side::Right => Orientation::Cw,
        }
    }
}

/// Which pursuer set a containment time refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Left,
    Right,
    /// Union of the left and right sets.
    Full,
    Blocking,
}

/// Minimum time for a CS path of the given side to reach `z`, or `+∞` inside the turning disk.
pub fn cs_reach_time(pose: &Pose, params: &VehicleParams, side: Side, z: Vec2) -> f64 {
    let c = turning_circle(pose, params, Owner::Pursuer, side.orientation());
    let r = c.radius;
    let rel = z - c.center;
    let d = rel.norm();
    if d < r {
        // points within round-off of the circle count as on it
        if r - d > 1e-12 * r.max(1.0) {
            return f64::INFINITY;
        }
    }
    let straight = (d * d - r * r).max(0.0).sqrt();
    let alpha = (r / d).min(1.0).acos();
    let phi = rel.angle();
    let start = c.angle_of(pose.position());
    let sweep = match side {
        Side::Left => wrap_positive(phi - alpha - start),
        Side::Right => wrap_positive(start - (phi + alpha)),
    };
    let sweep = if TAU - sweep < 1e-12 { 0.0 } else { sweep };
    (r * sweep + straight) / params.v_max()
}

/// Minimum time over LS and RS paths.
pub fn full_reach_time(pose: &Pose, params: &VehicleParams, z: Vec2) -> f64 {
    cs_reach_time(pose, params, Side::Left, z).min(cs_reach_time(pose, params, Side::Right, z))
}

/// Position after turning at full curvature on `side` for `t1`, then driving straight
/// until `t_bar`, both at full speed.
pub fn cs_endpoint(pose: &Pose, params: &VehicleParams, side: Side, t1: f64, t_bar: f64) -> Vec2 {
    let v = params.v_max();
    let w = params.w_max() * side.orientation().sign();
    let th1 = pose.theta + v * w * t1;
    let s = v * (t_bar - t1);
    Vec2::new(
        pose.x + (th1.sin() - pose.theta.sin()) / w + s * th1.cos(),
        pose.y - (th1.cos() - pose.theta.cos()) / w + s * th1.sin(),
    )
}

/// Same endpoint obtained by composing two exact integration steps.
pub fn cs_endpoint_by_steps(pose: &Pose, params: &VehicleParams, side: Side, t1: f64, t_bar: f64) -> Vec2 {
    let w = params.w_max() * side.orientation().sign();
    let arc = step_exact(pose, params.v_max(), w, t1);
    step_exact(&arc, params.v_max(), 0.0, t_bar - t1).position()
}

/// Endpoints of all CS paths of duration `t_bar` turning to one side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub owner: Owner,
    pub side: Side,
    pub horizon: f64,
    /// `(t1, endpoint)` with strictly increasing switch times `t1`.
    pub samples: Vec<(f64, Vec2)>,
    /// The endpoint curve closed by the straight segment back to its start. The
    /// turning disk inside it is not part of the set.
    pub polygon: Vec<Vec2>,
}

fn boundary(pose: &Pose, params: &VehicleParams, owner: Owner, side: Side, t_bar: f64, n: usize) -> Result<BoundaryCurve> {
    let full = params.full_turn_time();
    if t_bar.is_nan() || t_bar < full {
        return Err(GameError::HorizonTooShort { t_bar, min: full });
    }
    if n < 16 {
        return Err(GameError::InvalidParams(format!("need at least 16 boundary samples, got {n}")));
    }
    let t1_max = t_bar.min(full);
    let samples: Vec<(f64, Vec2)> = (0..n)
        .map(|i| {
            let t1 = t1_max * i as f64 / (n - 1) as f64;
            (t1, cs_endpoint(pose, params, side, t1, t_bar))
        })
        .collect();
    let polygon = samples.iter().map(|s| s.1).collect();
    Ok(BoundaryCurve { owner, side, horizon: t_bar, samples, polygon })
}

/// Boundary of the left (anticlockwise) CS reachable set.
pub fn left_boundary(pose: &Pose, params: &VehicleParams, t_bar: f64, n_samples: usize) -> Result<BoundaryCurve> {
    boundary(pose, params, Owner::Pursuer, Side::Left, t_bar, n_samples)
}

/// Boundary of the right (clockwise) CS reachable set.
pub fn right_boundary(pose: &Pose, params: &VehicleParams, t_bar: f64, n_samples: usize) -> Result<BoundaryCurve> {
    boundary(pose, params, Owner::Pursuer, Side::Right, t_bar, n_samples)
}

/// `(evader_regime, pursuer_circle_guard)` distances.
pub fn distance_thresholds(cfg: &GameConfig) -> (f64, f64) {
    let (p, e) = (&cfg.pursuer, &cfg.evader);
    let re = e.radius();
    let rp = p.radius();
    (
        2.0 * re + TAU * re * p.v_max() / e.v_max(),
        2.0 * rp + TAU * rp * e.v_max() / p.v_max(),
    )
}

/// Capture-time bound from two kinematic points, the pursuer delayed by `(2π + 2) r_p / v_pm`.
pub fn kinematic_upper_bound(p0: &Pose, e0: &Pose, cfg: &GameConfig) -> f64 {
    let (vp, ve) = (cfg.pursuer.v_max(), cfg.evader.v_max());
    let delay = (TAU + 2.0) * cfg.pursuer.radius() / vp;
    (p0.distance(e0) + vp * delay) / (vp - ve)
}

/// The channel cut out of the pursuer's set by the blocking construction: the region
/// between the two arc-plus-ray curves that run parallel to `EP`, away from the evader.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockingChannel {
    /// Unit direction from the evader towards the pursuer.
    pub direction: Vec2,
    pub left_circle: TurningCircle,
    pub right_circle: TurningCircle,
    /// Where the left (right) curve leaves its circle.
    pub left_exit: Vec2,
    pub right_exit: Vec2,
    pub left_arc_time: f64,
    pub right_arc_time: f64,
    /// Polygon of the channel, rays cut at `reach` beyond the exits; empty when degenerate.
    pub polygon: Vec<Vec2>,
}

const ARC_VERTICES: usize = 64;

fn arc_points(c: &TurningCircle, from: f64, sweep: f64, n: usize) -> Vec<Vec2> {
    let s = c.orientation.sign();
    (0..=n).map(|i| c.point_at(from + s * sweep * i as f64 / n as f64)).collect()
}

/// Builds the blocking channel with rays of length `reach`.
pub fn blocking_channel(p0: &Pose, e0: &Pose, cfg: &GameConfig, reach: f64) -> Result<BlockingChannel> {
    let u = (p0.position() - e0.position()).normalized().filter(|_| p0.distance(e0) >= 1e-9).ok_or(GameError::DegenerateDirection)?;
    let params = &cfg.pursuer;
    let r = params.radius();
    let lc = turning_circle(p0, params, Owner::Pursuer, Orientation::Ccw);
    let rc = turning_circle(p0, params, Owner::Pursuer, Orientation::Cw);
    let left_exit = lc.center + u.perp_cw() * r;
    let right_exit = rc.center + u.perp() * r;
    let start_l = lc.angle_of(p0.position());
    let start_r = rc.angle_of(p0.position());
    let sweep_l = lc.sweep(start_l, lc.angle_of(left_exit));
    let sweep_r = rc.sweep(start_r, rc.angle_of(right_exit));
    let v = params.v_max();
    let polygon = if left_exit.distance(right_exit) < 1e-9 {
        Vec::new()
    } else {
        let mut poly = arc_points(&lc, start_l, sweep_l, ARC_VERTICES);
        poly.push(left_exit + u * reach);
        poly.push(right_exit + u * reach);
        let mut back = arc_points(&rc, start_r, sweep_r, ARC_VERTICES);
        back.reverse();
        poly.extend(back);
        poly.pop(); // closing vertex duplicates the first
        poly
    };
    Ok(BlockingChannel {
        direction: u,
        left_circle: lc,
        right_circle: rc,
        left_exit,
        right_exit,
        left_arc_time: r * sweep_l / v,
        right_arc_time: r * sweep_r / v,
        polygon,
    })
}

impl BlockingChannel {
    pub fn contains(&self, z: Vec2) -> bool {
        !self.polygon.is_empty() && point_in_polygon(z, &self.polygon)
    }
}

/// Membership test for one pursuer set family at time `tau`.
struct SetOracle<'a> {
    p0: Pose,
    params: &'a VehicleParams,
    kind: SetKind,
    channel: Option<BlockingChannel>,
}

impl SetOracle<'_> {
    fn contains(&self, z: Vec2, tau: f64) -> bool {
        match self.kind {
            SetKind::Left => cs_reach_time(&self.p0, self.params, Side::Left, z) <= tau,
            SetKind::Right => cs_reach_time(&self.p0, self.params, Side::Right, z) <= tau,
            SetKind::Full => full_reach_time(&self.p0, self.params, z) <= tau,
            SetKind::Blocking => {
                full_reach_time(&self.p0, self.params, z) <= tau
                    && !self.channel.as_ref().is_some_and(|c| c.contains(z))
            }
        }
    }
}

/// Position at `tau` of the evader CS path turning on `side` for `t1`, then straight.
pub fn evader_path_point(e0: &Pose, params: &VehicleParams, side: Side, t1: f64, tau: f64) -> Vec2 {
    if tau <= t1 {
        let w = params.w_max() * side.orientation().sign();
        step_exact(e0, params.v_max(), w, tau).position()
    } else {
        cs_endpoint(e0, params, side, t1, tau)
    }
}

/// The fan of evader CS paths used as the extreme evader motions.
pub fn evader_paths(params: &VehicleParams, n_per_side: usize) -> Vec<(Side, f64)> {
    let full = params.full_turn_time();
    let n = n_per_side.max(2);
    [Side::Left, Side::Right]
        .into_iter()
        .flat_map(|side| (0..n).map(move |i| (side, full * i as f64 / (n - 1) as f64)))
        .collect()
}

/// First time in `[0, horizon]` at which `inside` holds, scanning with [`SCAN_STEP`] and
/// refining the bracket by bisection to [`BISECTION_TOL`].
pub fn first_entry(horizon: f64, inside: impl Fn(f64) -> bool) -> Option<f64> {
    if inside(0.0) {
        return Some(0.0);
    }
    let steps = (horizon / SCAN_STEP).ceil() as usize;
    let mut lo = 0.0;
    for k in 1..=steps {
        let hi = (k as f64 * SCAN_STEP).min(horizon);
        if inside(hi) {
            let (mut a, mut b) = (lo, hi);
            while b - a > BISECTION_TOL {
                let m = 0.5 * (a + b);
                if inside(m) {
                    b = m;
                } else {
                    a = m;
                }
            }
            return Some(b);
        }
        lo = hi;
    }
    None
}

fn first_catch(oracle: &SetOracle, e0: &Pose, params: &VehicleParams, path: (Side, f64), horizon: f64) -> Option<f64> {
    let (side, t1) = path;
    first_entry(horizon, |tau| oracle.contains(evader_path_point(e0, params, side, t1, tau), tau))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Containment {
    pub kind: SetKind,
    /// `None` when some evader path escapes the set up to `horizon`.
    pub time: Option<f64>,
    /// Search horizon (the kinematic bound).
    pub horizon: f64,
    /// Whether the initial distance meets the pursuer-circle guard; results are
    /// unreliable otherwise.
    pub hypothesis_met: bool,
    /// The evader path realizing the containment time.
    pub critical_path: Option<(Side, f64)>,
}

/// Containment time of the evader's CS path fan by one pursuer set family.
pub fn containment_time(p0: &Pose, e0: &Pose, cfg: &GameConfig, kind: SetKind) -> Result<Containment> {
    containment_time_with(p0, e0, cfg, kind, DEFAULT_SAMPLES, Exec::default())
}

pub fn containment_time_with(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    kind: SetKind,
    paths_per_side: usize,
    exec: Exec,
) -> Result<Containment> {
    let horizon = kinematic_upper_bound(p0, e0, cfg);
    let (_, guard) = distance_thresholds(cfg);
    let channel = match kind {
        SetKind::Blocking => Some(blocking_channel(p0, e0, cfg, 2.0 * cfg.pursuer.v_max() * horizon)?),
        _ => None,
    };
    let oracle = SetOracle { p0: *p0, params: &cfg.pursuer, kind, channel };
    let paths = evader_paths(&cfg.evader, paths_per_side);
    let catches = exec.map(&paths, |&path| first_catch(&oracle, e0, &cfg.evader, path, horizon));
    let mut worst: Option<(f64, (Side, f64))> = Some((0.0, paths[0]));
    for (c, path) in catches.into_iter().zip(&paths) {
        worst = match (worst, c) {
            (Some((w, wp)), Some(t)) => Some(if t > w { (t, *path) } else { (w, wp) }),
            _ => None,
        };
    }
    Ok(Containment {
        kind,
        time: worst.map(|w| w.0),
        horizon,
        hypothesis_met: p0.distance(e0) >= guard,
        critical_path: worst.map(|w| w.1),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    LeftSet,
    RightSet,
    FullSet,
    BlockingSet,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionPolygon {
    pub kind: RegionKind,
    pub owner: Owner,
    pub horizon: f64,
    pub vertices: Vec<Vec2>,
}

/// Outermost radius along the ray `center + ρ·dir` that satisfies `member`, found by an
/// inward scan from `rho_max` and bisection.
fn outer_radius(center: Vec2, dir: Vec2, rho_max: f64, member: &dyn Fn(Vec2) -> bool) -> f64 {
    let n = 400;
    let mut prev = rho_max;
    for k in (0..n).rev() {
        let rho = rho_max * k as f64 / n as f64;
        if member(center + dir * rho) {
            let (mut a, mut b) = (rho, prev);
            for _ in 0..50 {
                let m = 0.5 * (a + b);
                if member(center + dir * m) {
                    a = m;
                } else {
                    b = m;
                }
            }
            return a;
        }
        prev = rho;
    }
    0.0
}

/// Region polygons of the pursuer's left, right or full CS reachable set at `t_bar`.
pub fn reachable_region(p0: &Pose, params: &VehicleParams, kind: RegionKind, t_bar: f64, n: usize) -> Result<RegionPolygon> {
    let vertices = match kind {
        RegionKind::LeftSet => left_boundary(p0, params, t_bar, n)?.polygon,
        RegionKind::RightSet => right_boundary(p0, params, t_bar, n)?.polygon,
        RegionKind::FullSet => {
            let full = params.full_turn_time();
            if t_bar < full {
                return Err(GameError::HorizonTooShort { t_bar, min: full });
            }
            let rho_max = params.v_max() * t_bar * 1.01;
            let member = |z: Vec2| full_reach_time(p0, params, z) <= t_bar;
            (0..n)
                .map(|i| {
                    let dir = Vec2::from_angle(TAU * i as f64 / n as f64);
                    p0.position() + dir * outer_radius(p0.position(), dir, rho_max, &member)
                })
                .collect()
        }
        RegionKind::BlockingSet => {
            return Err(GameError::InvalidParams("use blocking_set for the blocking region".into()));
        }
    };
    Ok(RegionPolygon { kind, owner: Owner::Pursuer, horizon: t_bar, vertices })
}

/// Blocking set at `t_bar`: the two curves that leave `P` on the pursuer circles and run
/// parallel to `EP`, closed on the evader's side along the outer frontier of the
/// pursuer's CS reachable set.
pub fn blocking_set(p0: &Pose, e0: &Pose, cfg: &GameConfig, t_bar: f64) -> Result<RegionPolygon> {
    blocking_set_with(p0, e0, cfg, t_bar, DEFAULT_SAMPLES)
}

pub fn blocking_set_with(p0: &Pose, e0: &Pose, cfg: &GameConfig, t_bar: f64, n: usize) -> Result<RegionPolygon> {
    let params = &cfg.pursuer;
    let full = params.full_turn_time();
    if t_bar < full {
        return Err(GameError::HorizonTooShort { t_bar, min: full });
    }
    let ch = blocking_channel(p0, e0, cfg, 0.0)?;
    let v = params.v_max();
    let p = p0.position();
    let u = ch.direction;
    let end_l = ch.left_exit + u * (v * (t_bar - ch.left_arc_time));
    let end_r = ch.right_exit + u * (v * (t_bar - ch.right_arc_time));

    let start_l = ch.left_circle.angle_of(p);
    let start_r = ch.right_circle.angle_of(p);
    let sweep_l = ch.left_arc_time * v / params.radius();
    let sweep_r = ch.right_arc_time * v / params.radius();
    let mut left_curve = arc_points(&ch.left_circle, start_l, sweep_l, ARC_VERTICES);
    left_curve.push(end_l);
    let mut right_curve = arc_points(&ch.right_circle, start_r, sweep_r, ARC_VERTICES);
    right_curve.push(end_r);

    // frontier from the left curve's end around the evader's side to the right curve's end
    let a_l = (end_l - p).angle();
    let a_r = (end_r - p).angle();
    let a_e = (e0.position() - p).angle();
    let ccw_to_r = wrap_positive(a_r - a_l);
    let through_e_ccw = wrap_positive(a_e - a_l) < ccw_to_r;
    let span = if through_e_ccw { ccw_to_r } else { -(TAU - ccw_to_r) };
    let rho_max = v * t_bar * 1.01;
    let member = |z: Vec2| full_reach_time(p0, params, z) <= t_bar;
    let frontier: Vec<Vec2> = (1..n)
        .map(|i| {
            let dir = Vec2::from_angle(a_l + span * i as f64 / n as f64);
            p + dir * outer_radius(p, dir, rho_max, &member)
        })
        .collect();

    let mut vertices = left_curve;
    vertices.extend(frontier);
    right_curve.reverse();
    vertices.extend(right_curve);
    vertices.pop(); // P again
    Ok(RegionPolygon { kind: RegionKind::BlockingSet, owner: Owner::Pursuer, horizon: t_bar, vertices })
}

/// Whether the evader is in the closed half plane behind the pursuer.
pub fn evader_behind(p0: &Pose, e0: &Pose) -> bool {
    (e0.position() - p0.position()).dot(p0.heading()) <= 0.0
}

/// Whether the evader starts where the truncated set of `side` can hold it: behind the
/// pursuer, and either on that side or within the angle `arccos(2π r_p v_em / (v_pm d))`
/// of the backward axis.
pub fn truncated_set_applies(p0: &Pose, e0: &Pose, cfg: &GameConfig, side: Side) -> bool {
    if !evader_behind(p0, e0) {
        return false;
    }
    let rel = e0.position() - p0.position();
    let d = rel.norm();
    if d == 0.0 {
        return false;
    }
    let h = p0.heading();
    let on_side = match side {
        Side::Left => h.cross(rel) > 0.0,
        Side::Right => h.cross(rel) < 0.0,
    };
    let ratio = TAU * cfg.pursuer.radius() * cfg.evader.v_max() / (cfg.pursuer.v_max() * d);
    let limit = ratio.min(1.0).acos();
    let from_back = (rel.dot(-h) / d).clamp(-1.0, 1.0).acos();
    on_side || from_back <= limit
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActiveSet {
    Left,
    Right,
    Blocking,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActiveSetReport {
    pub winner: ActiveSet,
    pub t_a: f64,
    /// Continuous-containment times; `None` stands for `+∞`.
    pub t_left: Option<f64>,
    pub t_right: Option<f64>,
    pub t_blocking: Option<f64>,
    pub in_regime: bool,
}

/// Races the truncated left, truncated right and blocking sets.
///
/// A truncated set only counts when [`truncated_set_applies`]. When the evader is
/// behind and a truncated set applies, that set is active and the blocking set ties
/// with it; otherwise the blocking set is active.
pub fn active_set_analysis(p0: &Pose, e0: &Pose, cfg: &GameConfig) -> Result<ActiveSetReport> {
    active_set_analysis_with(p0, e0, cfg, DEFAULT_SAMPLES, Exec::default())
}

pub fn active_set_analysis_with(
    p0: &Pose,
    e0: &Pose,
    cfg: &GameConfig,
    paths_per_side: usize,
    exec: Exec,
) -> Result<ActiveSetReport> {
    let (regime, _) = distance_thresholds(cfg);
    let side_time = |side: Side, kind: SetKind| -> Result<Option<f64>> {
        if truncated_set_applies(p0, e0, cfg, side) {
            Ok(containment_time_with(p0, e0, cfg, kind, paths_per_side, exec)?.time)
        } else {
            Ok(None)
        }
    };
    let t_left = side_time(Side::Left, SetKind::Left)?;
    let t_right = side_time(Side::Right, SetKind::Right)?;
    let t_blocking = containment_time_with(p0, e0, cfg, SetKind::Blocking, paths_per_side, exec)?.time;
    let inf = f64::INFINITY;
    let lr = match (t_left, t_right) {
        (Some(l), Some(r)) if r < l => Some((ActiveSet::Right, r)),
        (Some(l), _) => Some((ActiveSet::Left, l)),
        (None, Some(r)) => Some((ActiveSet::Right, r)),
        (None, None) => None,
    };
    let (winner, t_a) = match lr {
        Some(best) => best,
        None => (ActiveSet::Blocking, t_blocking.unwrap_or(inf)),
    };
    Ok(ActiveSetReport { winner, t_a, t_left, t_right, t_blocking, in_regime: p0.distance(e0) >= regime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn close(a: Vec2, b: Vec2, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    #[test]
    fn boundary_examples() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let t_bar = FRAC_PI_2;
        assert!(close(cs_endpoint(&p, &cfg.pursuer, Side::Left, 0.0, t_bar), Vec2::new(0.0, PI), 1e-12));
        assert!(close(cs_endpoint(&p, &cfg.pursuer, Side::Left, FRAC_PI_2, t_bar), Vec2::ZERO, 1e-12));
        assert!(close(cs_endpoint(&p, &cfg.pursuer, Side::Left, FRAC_PI_4, t_bar), Vec2::new(-1.0, -FRAC_PI_2), 1e-12));
        let b = left_boundary(&p, &cfg.pursuer, t_bar, 16).unwrap();
        assert!(b.samples.windows(2).all(|w| w[1].0 > w[0].0));
        assert!(matches!(left_boundary(&p, &cfg.pursuer, 1.0, 16), Err(GameError::HorizonTooShort { .. })));
    }

    #[test]
    fn reach_time_matches_endpoints() {
        let cfg = GameConfig::standard();
        let p = Pose::new(1.0, -2.0, 0.3);
        for side in [Side::Left, Side::Right] {
            for i in 0..50 {
                let t1 = cfg.pursuer.full_turn_time() * i as f64 / 50.0;
                let z = cs_endpoint(&p, &cfg.pursuer, side, t1, 5.0);
                assert!((cs_reach_time(&p, &cfg.pursuer, side, z) - 5.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn inside_disk_is_unreachable() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        assert!(cs_reach_time(&p, &cfg.pursuer, Side::Left, Vec2::new(-0.5, 0.1)).is_infinite());
        assert!(cs_reach_time(&p, &cfg.pursuer, Side::Right, Vec2::new(-0.5, 0.1)).is_finite());
    }

    #[test]
    fn threshold_values() {
        let (a, b) = distance_thresholds(&GameConfig::standard());
        assert!((a - (2.0 + 4.0 * PI)).abs() < 1e-12);
        assert!((b - (1.0 + FRAC_PI_2)).abs() < 1e-12);
    }

    #[test]
    fn kinematic_bound_values() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let at = |d: f64| kinematic_upper_bound(&p, &Pose::new(0.0, d, FRAC_PI_2), &cfg);
        assert!((at(20.0) - (20.0 + (TAU + 2.0) * 0.5)).abs() < 1e-12);
        assert!((at(0.0) - (TAU + 2.0) * 0.5).abs() < 1e-12);
        assert!((at(40.0) - at(20.0) - 20.0).abs() < 1e-9);
    }

    #[test]
    fn channel_degenerates_when_evader_directly_behind() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let e = Pose::new(0.0, -20.0, FRAC_PI_2);
        let ch = blocking_channel(&p, &e, &cfg, 10.0).unwrap();
        assert!(ch.polygon.is_empty());
        assert!(close(ch.left_exit, Vec2::ZERO, 1e-12));
        assert!(matches!(blocking_channel(&p, &p, &cfg, 1.0), Err(GameError::DegenerateDirection)));
    }

    #[test]
    fn blocking_set_contains_evader() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        for e in [Pose::new(3.0, -8.0, 0.0), Pose::new(-2.0, 9.0, 1.0), Pose::new(7.0, 1.0, -2.0)] {
            let poly = blocking_set_with(&p, &e, &cfg, 20.0, 128).unwrap();
            assert!(point_in_polygon(e.position(), &poly.vertices));
            assert!(crate::geometry::polygon_is_simple(&poly.vertices));
        }
    }

    #[test]
    fn truncated_set_wedges() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let behind_left = Pose::new(-5.0, -15.0, 0.0);
        assert!(truncated_set_applies(&p, &behind_left, &cfg, Side::Left));
        assert!(truncated_set_applies(&p, &behind_left, &cfg, Side::Right));
        let far_left = Pose::new(-15.0, -0.5, 0.0);
        assert!(truncated_set_applies(&p, &far_left, &cfg, Side::Left));
        assert!(!truncated_set_applies(&p, &far_left, &cfg, Side::Right));
        assert!(!truncated_set_applies(&p, &Pose::new(0.0, 15.0, 0.0), &cfg, Side::Left));
    }
}
