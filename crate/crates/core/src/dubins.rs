//! Vehicle parameters, poses, turning circles and closed-form integration of the
//! Dubins kinematics `ẋ = v cos θ`, `ẏ = v sin θ`, `θ̇ = v w`.
//!
//! `w` is a path curvature, so the turning radius `1 / w_max` does not depend on
//! the speed.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::geometry::{normalize_angle, wrap_positive, Vec2};

/// Tolerance used when projecting tangent points onto their circle.
pub const ON_CIRCLE_TOL: f64 = 1e-6;

/// Speed and curvature limits of one vehicle.
///
/// The turning radius is always derived from `w_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VehicleParams {
    v_max: f64,
    w_max: f64,
}

impl VehicleParams {
    pub fn new(v_max: f64, w_max: f64) -> Result<Self> {
        if !(v_max.is_finite() && v_max > 0.0) {
            return Err(GameError::InvalidParams(format!("v_max must be positive, got {v_max}")));
        }
        if !(w_max.is_finite() && w_max > 0.0) {
            return Err(GameError::InvalidParams(format!("w_max must be positive, got {w_max}")));
        }
        Ok(Self { v_max, w_max })
    }

    pub fn v_max(&self) -> f64 {
        self.v_max
    }

    pub fn w_max(&self) -> f64 {
        self.w_max
    }

    /// Minimum turning radius `1 / w_max`.
    pub fn radius(&self) -> f64 {
        1.0 / self.w_max
    }

    /// Time to drive once around the turning circle at full speed.
    pub fn full_turn_time(&self) -> f64 {
        TAU * self.radius() / self.v_max
    }

    /// Angular rate `v_max · w_max` while turning at full speed.
    pub fn turn_rate(&self) -> f64 {
        self.v_max * self.w_max
    }

    /// Same vehicle with both radius-like quantities scaled by `k` (curvature divided by `k`).
    pub fn with_radius_scaled(&self, k: f64) -> Result<Self> {
        Self::new(self.v_max, self.w_max / k)
    }
}

/// Parameters of both players.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GameConfig {
    pub pursuer: VehicleParams,
    pub evader: VehicleParams,
}

impl GameConfig {
    /// Builds a configuration, requiring a strictly faster and more agile pursuer.
    pub fn new(pursuer: VehicleParams, evader: VehicleParams) -> Result<Self> {
        if pursuer.v_max <= evader.v_max {
            return Err(GameError::AssumptionViolated(format!(
                "v_pm = {} <= v_em = {}",
                pursuer.v_max, evader.v_max
            )));
        }
        if pursuer.w_max <= evader.w_max {
            return Err(GameError::AssumptionViolated(format!(
                "w_pm = {} <= w_em = {}",
                pursuer.w_max, evader.w_max
            )));
        }
        Ok(Self { pursuer, evader })
    }

    /// Skips the speed/agility check. Only the validators accept such configurations.
    pub fn new_unchecked(pursuer: VehicleParams, evader: VehicleParams) -> Self {
        Self { pursuer, evader }
    }

    /// `v_pm = 2, w_pm = 2, v_em = 1, w_em = 1`, the parameters of the reference scenarios.
    pub fn standard() -> Self {
        Self {
            pursuer: VehicleParams { v_max: 2.0, w_max: 2.0 },
            evader: VehicleParams { v_max: 1.0, w_max: 1.0 },
        }
    }

    pub fn params(&self, owner: Owner) -> &VehicleParams {
        match owner {
            Owner::Pursuer => &self.pursuer,
            Owner::Evader => &self.evader,
        }
    }

    pub fn satisfies_assumption(&self) -> bool {
        self.pursuer.v_max > self.evader.v_max && self.pursuer.w_max > self.evader.w_max
    }
}

/// Position and heading of one vehicle. The heading is kept in (−π, π].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Self { x, y, theta: normalize_angle(theta) }
    }

    pub fn position(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    pub fn heading(&self) -> Vec2 {
        Vec2::from_angle(self.theta)
    }

    pub fn distance(&self, other: &Pose) -> f64 {
        self.position().distance(other.position())
    }

    /// Mirror image across the line through `origin` with direction angle `phi`.
    pub fn reflect(&self, origin: Vec2, phi: f64) -> Pose {
        let p = reflect_point(self.position(), origin, phi);
        Pose::new(p.x, p.y, 2.0 * phi - self.theta)
    }
}

/// Mirror image of `p` across the line through `origin` with direction angle `phi`.
pub fn reflect_point(p: Vec2, origin: Vec2, phi: f64) -> Vec2 {
    let d = Vec2::from_angle(phi);
    let rel = p - origin;
    let along = d * rel.dot(d);
    origin + along * 2.0 - rel
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Owner {
    Pursuer,
    Evader,
}

/// Rotation sense of a turning circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Anticlockwise, traversed with `w = +w_max`.
    Ccw,
    /// Clockwise, traversed with `w = −w_max`.
    Cw,
}

impl Orientation {
    /// +1 for anticlockwise, −1 for clockwise.
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Ccw => 1.0,
            Orientation::Cw => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }

    /// Direction of travel at a point whose outward radius is `radial`.
    pub fn travel_direction(self, radial: Vec2) -> Vec2 {
        match self {
            Orientation::Ccw => radial.perp(),
            Orientation::Cw => radial.perp_cw(),
        }
    }
}

/// Minimum-radius circle traced by a vehicle turning at full curvature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TurningCircle {
    pub center: Vec2,
    pub radius: f64,
    pub orientation: Orientation,
    pub owner: Owner,
}

impl TurningCircle {
    /// Radial offset of `p` from the circle (positive outside).
    pub fn offset(&self, p: Vec2) -> f64 {
        p.distance(self.center) - self.radius
    }

    /// Polar angle of `p` around the center.
    pub fn angle_of(&self, p: Vec2) -> f64 {
        (p - self.center).angle()
    }

    pub fn point_at(&self, angle: f64) -> Vec2 {
        self.center + Vec2::from_angle(angle) * self.radius
    }

    /// Angle swept from `from_angle` to `to_angle` in the circle's own rotation sense, in [0, 2π).
    pub fn sweep(&self, from_angle: f64, to_angle: f64) -> f64 {
        let raw = match self.orientation {
            Orientation::Ccw => to_angle - from_angle,
            Orientation::Cw => from_angle - to_angle,
        };
        let s = wrap_positive(raw);
        // round-off just below a full turn means "same point"
        if TAU - s < 1e-12 {
            0.0
        } else {
            s
        }
    }

    /// Mirror image across a line; the rotation sense flips.
    pub fn reflect(&self, origin: Vec2, phi: f64) -> TurningCircle {
        TurningCircle {
            center: reflect_point(self.center, origin, phi),
            radius: self.radius,
            orientation: self.orientation.flipped(),
            owner: self.owner,
        }
    }
}

/// Anticlockwise and clockwise turning circles through `pose`.
pub fn turning_circles(pose: &Pose, params: &VehicleParams, owner: Owner) -> (TurningCircle, TurningCircle) {
    let r = params.radius();
    let (s, c) = pose.theta.sin_cos();
    let ccw = TurningCircle {
        center: Vec2::new(pose.x - s * r, pose.y + c * r),
        radius: r,
        orientation: Orientation::Ccw,
        owner,
    };
    let cw = TurningCircle {
        center: Vec2::new(pose.x + s * r, pose.y - c * r),
        radius: r,
        orientation: Orientation::Cw,
        owner,
    };
    (ccw, cw)
}

/// Turning circle of the given sense through `pose`.
pub fn turning_circle(pose: &Pose, params: &VehicleParams, owner: Owner, orientation: Orientation) -> TurningCircle {
    let (ccw, cw) = turning_circles(pose, params, owner);
    match orientation {
        Orientation::Ccw => ccw,
        Orientation::Cw => cw,
    }
}

/// Piecewise-constant speed and curvature command.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Control {
    pub v: f64,
    pub w: f64,
}

impl Control {
    pub const fn new(v: f64, w: f64) -> Self {
        Self { v, w }
    }

    pub fn within(&self, params: &VehicleParams) -> bool {
        let slack = 1e-12;
        self.v >= -slack
            && self.v <= params.v_max * (1.0 + slack)
            && self.w.abs() <= params.w_max * (1.0 + slack)
    }
}

/// Exact pose after holding `(v, w)` for `dt`.
pub fn step_exact(pose: &Pose, v: f64, w: f64, dt: f64) -> Pose {
    if w == 0.0 {
        let (s, c) = pose.theta.sin_cos();
        return Pose::new(pose.x + v * dt * c, pose.y + v * dt * s, pose.theta);
    }
    let theta1 = pose.theta + v * w * dt;
    let (s0, c0) = pose.theta.sin_cos();
    let (s1, c1) = theta1.sin_cos();
    Pose::new(pose.x + (s1 - s0) / w, pose.y - (c1 - c0) / w, theta1)
}

/// Time to travel along `circle`, in its rotation sense, from `from` to `to` at speed `v`.
///
/// Both points are projected onto the circle first; either lying more than
/// [`ON_CIRCLE_TOL`] away is an error. The result lies in `[0, 2πr / v)`.
pub fn arc_time(circle: &TurningCircle, from: Vec2, to: Vec2, v: f64) -> Result<f64> {
    for p in [from, to] {
        let off = circle.offset(p);
        if off.abs() > ON_CIRCLE_TOL || !off.is_finite() {
            return Err(GameError::PointOffCircle { offset: off });
        }
    }
    let sweep = circle.sweep(circle.angle_of(from), circle.angle_of(to));
    Ok(sweep * circle.radius / v)
}
