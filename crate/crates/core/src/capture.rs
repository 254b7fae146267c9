//! Time to capture along the valid tangent of a PE-pair.
//!
//! Both vehicles first ride their chosen circle to the tangent point (arc times
//! `t_p`, `t_e`), then run straight along the tangent at full speed. The pursuer
//! is behind on the same directed line, so the gap closes at `v_pm − v_em`.

use serde::{Deserialize, Serialize};

use crate::dubins::{arc_time, GameConfig, Pose};
use crate::error::{GameError, Result};
use crate::geometry::Vec2;
use crate::tangents::{pair_circles, valid_tangent, DirectedTangent, PEPair};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaptureEstimate {
    pub pair: PEPair,
    pub tangent: DirectedTangent,
    /// Pursuer arc time to its tangent point.
    pub t_p: f64,
    /// Evader arc time to its tangent point.
    pub t_e: f64,
    /// Time to capture.
    pub time: f64,
    pub capture_point: Vec2,
    /// Set when the pursuer would reach the evader's exit point first.
    pub degenerate: bool,
}

/// Capture time along a tangent of length `tangent_len` given the two arc times.
///
/// Returns `(time, degenerate)`. When the pursuer can reach the evader's exit point
/// before the evader does, the negative remaining gap is kept, so the time drops
/// below `t_e`, and the estimate is flagged.
pub fn intercept_time(t_p: f64, t_e: f64, tangent_len: f64, v_pm: f64, v_em: f64) -> (f64, bool) {
    let closing = v_pm - v_em;
    if t_p > t_e {
        let gap = tangent_len + v_em * (t_p - t_e);
        (t_p + gap / closing, false)
    } else {
        let gap = tangent_len - v_pm * (t_e - t_p);
        (t_e + gap / closing, gap < 0.0)
    }
}

/// Capture estimate for one PE-pair, or `None` when the pair has no valid tangent.
pub fn time_to_capture(pair: PEPair, p: &Pose, e: &Pose, cfg: &GameConfig) -> Option<CaptureEstimate> {
    let (cp, ce) = pair_circles(pair, p, e, cfg);
    let tangent = valid_tangent(pair, &cp, &ce)?;
    let (v_pm, v_em) = (cfg.pursuer.v_max(), cfg.evader.v_max());
    // tangent points come from the same circles, so they are on-circle to round-off
    let t_p = arc_time(&cp, p.position(), tangent.t_p, v_pm).ok()?;
    let t_e = arc_time(&ce, e.position(), tangent.t_e, v_em).ok()?;
    let (time, degenerate) = intercept_time(t_p, t_e, tangent.length, v_pm, v_em);
    let capture_point = if degenerate {
        tangent.t_e
    } else {
        tangent.t_e + tangent.direction * (v_em * (time - t_e))
    };
    Some(CaptureEstimate { pair, tangent, t_p, t_e, time, capture_point, degenerate })
}

/// Common heading of both vehicles at capture: the tangent direction.
pub fn capture_point_heading(estimate: &CaptureEstimate) -> Result<f64> {
    if estimate.degenerate {
        return Err(GameError::DegenerateEstimate);
    }
    Ok(estimate.tangent.heading())
}
