//! The 2×2 capture-time matrix game over turning-circle choices and the feedback
//! law built on its security strategies.
//!
//! Rows are the pursuer's choices (A = anticlockwise, C = clockwise), columns the
//! evader's. The pursuer plays the row minimising its worst case, the evader the
//! column maximising its worst case.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::capture::{time_to_capture, CaptureEstimate};
use crate::dubins::{GameConfig, Orientation, Pose};
use crate::error::{GameError, Result};
use crate::tangents::{choice_letter, index_choice, PEPair};

/// Capture times for every PE-pair; `+inf` where the pair has no valid tangent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameMatrix {
    pub times: [[f64; 2]; 2],
    /// Pursuer arc time per entry, used to break ties between rows.
    pub pursuer_arc: [[f64; 2]; 2],
    /// Evader arc time per entry, used to break ties between columns.
    pub evader_arc: [[f64; 2]; 2],
    #[serde(skip)]
    pub estimates: [[Option<CaptureEstimate>; 2]; 2],
}

impl GameMatrix {
    /// Matrix with the given entries and zero arc times (ties fall back to A before C).
    pub fn from_times(times: [[f64; 2]; 2]) -> Self {
        Self {
            times,
            pursuer_arc: [[0.0; 2]; 2],
            evader_arc: [[0.0; 2]; 2],
            estimates: [[None; 2]; 2],
        }
    }

    pub fn get(&self, pair: PEPair) -> f64 {
        let (r, c) = pair.indices();
        self.times[r][c]
    }

    pub fn estimate(&self, pair: PEPair) -> Option<&CaptureEstimate> {
        let (r, c) = pair.indices();
        self.estimates[r][c].as_ref()
    }

    pub fn all_infinite(&self) -> bool {
        self.times.iter().flatten().all(|t| t.is_infinite())
    }

    pub fn scaled(&self, k: f64) -> Self {
        let mut m = self.clone();
        for row in m.times.iter_mut() {
            for t in row.iter_mut() {
                *t *= k;
            }
        }
        m
    }
}

impl fmt::Display for GameMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |t: f64| if t.is_finite() { format!("{t:>10.3}") } else { format!("{:>10}", "inf") };
        writeln!(f, "P\\E     {:>10} {:>10}", "w_e=+w_em", "w_e=-w_em")?;
        for (r, row) in self.times.iter().enumerate() {
            writeln!(
                f,
                "{} {:>6} {} {}",
                choice_letter(index_choice(r)),
                if r == 0 { "+w_pm" } else { "-w_pm" },
                cell(row[0]),
                cell(row[1])
            )?;
        }
        Ok(())
    }
}

/// Security-strategy solution of a [`GameMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixSolution {
    pub row: Orientation,
    pub col: Orientation,
    /// Smallest row maximum (the pursuer's guaranteed ceiling).
    pub minmax: f64,
    /// Largest column minimum (the evader's guaranteed floor).
    pub maxmin: f64,
    /// Entry at the chosen row and column.
    pub value: f64,
}

impl MatrixSolution {
    pub fn pair(&self) -> PEPair {
        PEPair::new(self.row, self.col)
    }

    /// `minmax − maxmin`; zero for a pure saddle, `inf` when only the ceiling is infinite.
    pub fn saddle_gap(&self) -> f64 {
        if self.minmax == self.maxmin {
            0.0
        } else {
            self.minmax - self.maxmin
        }
    }
}

fn nearly_equal(a: f64, b: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        return a == b;
    }
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// Index of the best candidate under `better`, ties broken by the smaller arc time and then
/// by the lower index.
fn pick(values: [f64; 2], arcs: [f64; 2], better: impl Fn(f64, f64) -> bool) -> usize {
    if nearly_equal(values[0], values[1]) {
        if nearly_equal(arcs[0], arcs[1]) || arcs[0] < arcs[1] {
            0
        } else {
            1
        }
    } else if better(values[1], values[0]) {
        1
    } else {
        0
    }
}

/// Pursuer plays the min-max row, evader the max-min column.
///
/// Requires at least one finite entry.
pub fn solve_matrix(m: &GameMatrix) -> MatrixSolution {
    let t = &m.times;
    let mut row_max = [0.0; 2];
    let mut row_arc = [0.0; 2];
    for r in 0..2 {
        row_max[r] = t[r][0].max(t[r][1]);
        row_arc[r] = (0..2)
            .filter(|&c| nearly_equal(t[r][c], row_max[r]))
            .map(|c| m.pursuer_arc[r][c])
            .fold(f64::INFINITY, f64::min);
    }
    let mut col_min = [0.0; 2];
    let mut col_arc = [0.0; 2];
    for c in 0..2 {
        col_min[c] = t[0][c].min(t[1][c]);
        col_arc[c] = (0..2)
            .filter(|&r| nearly_equal(t[r][c], col_min[c]))
            .map(|r| m.evader_arc[r][c])
            .fold(f64::INFINITY, f64::min);
    }
    let row = pick(row_max, row_arc, |a, b| a < b);
    let col = pick(col_min, col_arc, |a, b| a > b);
    MatrixSolution {
        row: index_choice(row),
        col: index_choice(col),
        minmax: row_max[row],
        maxmin: col_min[col],
        value: t[row][col],
    }
}

/// Capture-time matrix at the joint state `(p, e)`.
pub fn build_matrix(p: &Pose, e: &Pose, cfg: &GameConfig) -> Result<GameMatrix> {
    let mut m = GameMatrix {
        times: [[f64::INFINITY; 2]; 2],
        pursuer_arc: [[f64::INFINITY; 2]; 2],
        evader_arc: [[f64::INFINITY; 2]; 2],
        estimates: [[None; 2]; 2],
    };
    for pair in PEPair::ALL {
        let (r, c) = pair.indices();
        if let Some(est) = time_to_capture(pair, p, e, cfg) {
            m.times[r][c] = est.time;
            m.pursuer_arc[r][c] = est.t_p;
            m.evader_arc[r][c] = est.t_e;
            m.estimates[r][c] = Some(est);
        }
    }
    if m.all_infinite() {
        return Err(GameError::AllPairsInfeasible);
    }
    Ok(m)
}

/// Output of the feedback law at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlPair {
    pub w_p: f64,
    pub v_p: f64,
    pub w_e: f64,
    pub v_e: f64,
    pub chosen_pair: PEPair,
    pub solution: MatrixSolution,
}

impl ControlPair {
    pub fn saddle_gap(&self) -> f64 {
        self.solution.saddle_gap()
    }
}

/// Default straight-phase threshold for a simulation step `dt`: half a step of arc time.
pub fn default_arc_epsilon(dt: f64) -> f64 {
    0.5 * dt
}

/// Feedback law: solve the instantaneous matrix game and turn toward the chosen
/// tangent, or drive straight once the tangent point is within `arc_epsilon`.
pub fn feedback(p: &Pose, e: &Pose, cfg: &GameConfig, arc_epsilon: f64) -> Result<ControlPair> {
    let m = build_matrix(p, e, cfg)?;
    Ok(feedback_from_matrix(&m, cfg, arc_epsilon))
}

/// Feedback law for an already built matrix.
pub fn feedback_from_matrix(m: &GameMatrix, cfg: &GameConfig, arc_epsilon: f64) -> ControlPair {
    let solution = solve_matrix(m);
    let pair = solution.pair();
    let (r, c) = pair.indices();
    let on_tangent = |arc: f64| arc.is_finite() && arc <= arc_epsilon;
    let w_p = if on_tangent(m.pursuer_arc[r][c]) {
        0.0
    } else {
        pair.pursuer.sign() * cfg.pursuer.w_max()
    };
    let w_e = if on_tangent(m.evader_arc[r][c]) {
        0.0
    } else {
        pair.evader.sign() * cfg.evader.w_max()
    };
    ControlPair {
        w_p,
        v_p: cfg.pursuer.v_max(),
        w_e,
        v_e: cfg.evader.v_max(),
        chosen_pair: pair,
        solution,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Applicability {
    InRegime,
    BelowThreshold,
}

/// Separation `2 r_e + 2π r_e v_pm / v_em` above which the tangent law is proven optimal.
pub fn regime_threshold(cfg: &GameConfig) -> f64 {
    let r_e = cfg.evader.radius();
    2.0 * r_e + std::f64::consts::TAU * r_e * cfg.pursuer.v_max() / cfg.evader.v_max()
}

/// Whether the initial separation meets the sufficient distance condition. Advisory only.
pub fn applicability(p: &Pose, e: &Pose, cfg: &GameConfig) -> Applicability {
    if p.distance(e) >= regime_threshold(cfg) {
        Applicability::InRegime
    } else {
        Applicability::BelowThreshold
    }
}
