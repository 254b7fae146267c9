//! Directed common tangents between a pursuer circle and an evader circle, and the
//! rotation-sense filter that picks the single usable tangent of each PE-pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dubins::{turning_circle, GameConfig, Orientation, Owner, Pose, TurningCircle};
use crate::geometry::Vec2;

/// Slack on center-distance comparisons when deciding tangent existence.
pub const EXISTENCE_SLACK: f64 = 1e-9;

/// One pursuer circle paired with one evader circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PEPair {
    pub pursuer: Orientation,
    pub evader: Orientation,
}

impl PEPair {
    pub const AA: PEPair = PEPair { pursuer: Orientation::Ccw, evader: Orientation::Ccw };
    pub const AC: PEPair = PEPair { pursuer: Orientation::Ccw, evader: Orientation::Cw };
    pub const CA: PEPair = PEPair { pursuer: Orientation::Cw, evader: Orientation::Ccw };
    pub const CC: PEPair = PEPair { pursuer: Orientation::Cw, evader: Orientation::Cw };

    /// Row-major order of the capture-time matrix.
    pub const ALL: [PEPair; 4] = [Self::AA, Self::AC, Self::CA, Self::CC];

    pub fn new(pursuer: Orientation, evader: Orientation) -> Self {
        Self { pursuer, evader }
    }

    /// Pair obtained after mirroring the configuration.
    pub fn mirrored(self) -> Self {
        Self { pursuer: self.pursuer.flipped(), evader: self.evader.flipped() }
    }

    /// Row/column indices in the capture-time matrix (0 = A, 1 = C).
    pub fn indices(self) -> (usize, usize) {
        (choice_index(self.pursuer), choice_index(self.evader))
    }

    pub fn from_indices(row: usize, col: usize) -> Self {
        Self { pursuer: index_choice(row), evader: index_choice(col) }
    }
}

pub(crate) fn choice_index(o: Orientation) -> usize {
    match o {
        Orientation::Ccw => 0,
        Orientation::Cw => 1,
    }
}

pub(crate) fn index_choice(i: usize) -> Orientation {
    if i == 0 {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

pub(crate) fn choice_letter(o: Orientation) -> char {
    match o {
        Orientation::Ccw => 'A',
        Orientation::Cw => 'C',
    }
}

impl fmt::Display for PEPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}p,{}e}}", choice_letter(self.pursuer), choice_letter(self.evader))
    }
}

/// A tangent segment from a point on the pursuer circle to a point on the evader circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectedTangent {
    pub t_p: Vec2,
    pub t_e: Vec2,
    pub length: f64,
    /// Unit vector from `t_p` towards `t_e`.
    pub direction: Vec2,
}

impl DirectedTangent {
    pub fn heading(&self) -> f64 {
        self.direction.angle()
    }
}

/// All distinct lines tangent to both circles, directed pursuer → evader.
///
/// Outer tangents need a center distance of at least `|r_p − r_e|`, crossing
/// tangents at least `r_p + r_e`. Coincident centers give an empty list.
pub fn common_tangents(cp: &TurningCircle, ce: &TurningCircle) -> Vec<DirectedTangent> {
    let delta = ce.center - cp.center;
    let d = delta.norm();
    let mut out = Vec::with_capacity(4);
    if d < 1e-12 {
        return out;
    }
    let axis = delta * (1.0 / d);
    let (r1, r2) = (cp.radius, ce.radius);
    // s = +1: both tangent points on the same side (outer); s = −1: crossing.
    for s in [1.0, -1.0] {
        let cos_a = (r1 - s * r2) / d;
        if cos_a.abs() > 1.0 + EXISTENCE_SLACK / d {
            continue;
        }
        let cos_a = cos_a.clamp(-1.0, 1.0);
        let h = (1.0 - cos_a * cos_a).max(0.0).sqrt();
        let ks: &[f64] = if h < 1e-12 { &[1.0] } else { &[1.0, -1.0] };
        for &k in ks {
            let normal = axis * cos_a + axis.perp() * (k * h);
            let t_p = cp.center + normal * r1;
            let t_e = ce.center + normal * (s * r2);
            let seg = t_e - t_p;
            let length = seg.norm();
            let direction = if length > 1e-12 { seg * (1.0 / length) } else { normal.perp() };
            out.push(DirectedTangent { t_p, t_e, length, direction });
        }
    }
    out
}

/// Cosines between the tangent direction and the travel direction of each circle at
/// its tangent point. A valid tangent has both equal to one.
pub fn orientation_alignment(t: &DirectedTangent, cp: &TurningCircle, ce: &TurningCircle) -> (f64, f64) {
    let along = |c: &TurningCircle, at: Vec2| {
        (at - c.center)
            .normalized()
            .map(|radial| c.orientation.travel_direction(radial).dot(t.direction))
            .unwrap_or(f64::NAN)
    };
    (along(cp, t.t_p), along(ce, t.t_e))
}

/// The unique tangent whose direction matches the rotation sense of both circles.
///
/// At an anticlockwise circle the tangent direction is the radius vector rotated by
/// +π/2, at a clockwise circle by −π/2. Returns `None` when no candidate passes.
pub fn valid_tangent(pair: PEPair, cp: &TurningCircle, ce: &TurningCircle) -> Option<DirectedTangent> {
    debug_assert_eq!(cp.orientation, pair.pursuer);
    debug_assert_eq!(ce.orientation, pair.evader);
    let mut best: Option<(f64, DirectedTangent)> = None;
    for mut cand in common_tangents(cp, ce) {
        if cand.length <= 1e-12 {
            // Touching circles: orient the zero-length tangent along the pursuer's travel.
            if let Some(radial) = (cand.t_p - cp.center).normalized() {
                cand.direction = cp.orientation.travel_direction(radial);
            }
        }
        let (ap, ae) = orientation_alignment(&cand, cp, ce);
        if ap > 0.5 && ae > 0.5 {
            let score = ap.min(ae);
            if best.as_ref().is_none_or(|(s, _)| score > *s) {
                best = Some((score, cand));
            }
        }
    }
    best.map(|(_, t)| t)
}

/// Pursuer and evader circles selected by `pair` at the given joint state.
pub fn pair_circles(pair: PEPair, p: &Pose, e: &Pose, cfg: &GameConfig) -> (TurningCircle, TurningCircle) {
    (
        turning_circle(p, &cfg.pursuer, Owner::Pursuer, pair.pursuer),
        turning_circle(e, &cfg.evader, Owner::Evader, pair.evader),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn circle(cx: f64, cy: f64, r: f64, o: Orientation, owner: Owner) -> TurningCircle {
        TurningCircle { center: Vec2::new(cx, cy), radius: r, orientation: o, owner }
    }

    #[test]
    fn four_tangents_when_far_apart() {
        let cp = circle(-0.5, 0.0, 0.5, Orientation::Ccw, Owner::Pursuer);
        let ce = circle(-1.0, 10.0, 1.0, Orientation::Ccw, Owner::Evader);
        let ts = common_tangents(&cp, &ce);
        assert_eq!(ts.len(), 4);
        for t in &ts {
            assert!((t.t_p.distance(cp.center) - 0.5).abs() < 1e-12);
            assert!((t.t_e.distance(ce.center) - 1.0).abs() < 1e-12);
            assert!(t.direction.dot(t.t_p - cp.center).abs() < 1e-12);
            assert!(t.direction.dot(t.t_e - ce.center).abs() < 1e-12);
        }
    }

    #[test]
    fn contained_circles_have_no_tangent() {
        let cp = circle(0.0, 0.0, 0.5, Orientation::Ccw, Owner::Pursuer);
        let ce = circle(0.0, 0.0, 1.0, Orientation::Ccw, Owner::Evader);
        assert!(common_tangents(&cp, &ce).is_empty());
        let inner = circle(0.1, 0.0, 0.5, Orientation::Ccw, Owner::Pursuer);
        assert!(common_tangents(&inner, &ce).is_empty());
    }

    #[test]
    fn overlapping_circles_only_have_outer_tangents() {
        let cp = circle(-0.5, 0.0, 0.5, Orientation::Ccw, Owner::Pursuer);
        let ce = circle(0.8, 0.0, 1.0, Orientation::Cw, Owner::Evader);
        assert_eq!(common_tangents(&cp, &ce).len(), 2);
    }

    #[test]
    fn touching_circles_give_single_crossing_tangent() {
        let cp = circle(0.0, 0.0, 0.5, Orientation::Ccw, Owner::Pursuer);
        let ce = circle(1.5, 0.0, 1.0, Orientation::Cw, Owner::Evader);
        let ts = common_tangents(&cp, &ce);
        assert_eq!(ts.len(), 3);
        let v = valid_tangent(PEPair::AC, &cp, &ce).expect("touching tangent");
        assert!(v.length < 1e-9);
        assert!(v.t_p.distance(Vec2::new(0.5, 0.0)) < 1e-9);
        assert!(v.direction.distance(Vec2::new(0.0, 1.0)) < 1e-9);
    }

    #[test]
    fn tail_chase_tangent_is_the_y_axis() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let e = Pose::new(0.0, 10.0, FRAC_PI_2);
        let (cp, ce) = pair_circles(PEPair::AA, &p, &e, &cfg);
        let t = valid_tangent(PEPair::AA, &cp, &ce).unwrap();
        assert!(t.t_p.distance(Vec2::new(0.0, 0.0)) < 1e-12);
        assert!(t.t_e.distance(Vec2::new(0.0, 10.0)) < 1e-12);
        assert!(t.direction.distance(Vec2::new(0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn crossing_pair_is_unique_in_tail_chase() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let e = Pose::new(0.0, 10.0, FRAC_PI_2);
        let (cp, ce) = pair_circles(PEPair::AC, &p, &e, &cfg);
        let all = common_tangents(&cp, &ce);
        assert_eq!(all.len(), 4);
        let passing: Vec<_> = all
            .iter()
            .filter(|t| {
                let (a, b) = orientation_alignment(t, &cp, &ce);
                a > 0.5 && b > 0.5
            })
            .collect();
        assert_eq!(passing.len(), 1);
        let v = valid_tangent(PEPair::AC, &cp, &ce).unwrap();
        let (a, b) = orientation_alignment(&v, &cp, &ce);
        assert!((a - 1.0).abs() < 1e-9 && (b - 1.0).abs() < 1e-9);
        // crossing tangent: endpoints on opposite sides of the center line
        let axis = ce.center - cp.center;
        assert!(axis.cross(v.t_p - cp.center) * axis.cross(v.t_e - ce.center) < 0.0);
    }

    #[test]
    fn crossing_pair_missing_when_circles_overlap() {
        let cfg = GameConfig::standard();
        let p = Pose::new(0.0, 0.0, FRAC_PI_2);
        let e = Pose::new(-0.2, 0.0, FRAC_PI_2);
        let (cp, ce) = pair_circles(PEPair::AC, &p, &e, &cfg);
        assert!((cp.center.distance(ce.center) - 1.3).abs() < 1e-12);
        assert!(valid_tangent(PEPair::AC, &cp, &ce).is_none());
    }

    #[test]
    fn pair_display_and_indices() {
        assert_eq!(PEPair::AC.to_string(), "{Ap,Ce}");
        for pair in PEPair::ALL {
            let (r, c) = pair.indices();
            assert_eq!(PEPair::from_indices(r, c), pair);
            assert_eq!(pair.mirrored().mirrored(), pair);
        }
    }
}
