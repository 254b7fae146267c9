//! Trajectory CSV, run-metadata JSON and region CSV, the formats read by the plotting tool.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::dubins::{GameConfig, Owner};
use crate::error::{GameError, Result};
use crate::geometry::Vec2;
use crate::matrix_law::{applicability, Applicability};
use crate::reach::{RegionKind, RegionPolygon};
use crate::simulator::Trajectory;

pub const TRAJECTORY_HEADER: [&str; 12] = ["t", "xp", "yp", "thp", "xe", "ye", "the", "vp", "wp", "ve", "we", "dpe"];
pub const REGION_HEADER: [&str; 3] = ["region", "x", "y"];

/// Pair switches above this count are flagged in the metadata.
pub const PAIR_FLIP_LIMIT: usize = 2;

/// One trajectory CSV row, fields in header order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub xp: f64,
    pub yp: f64,
    pub thp: f64,
    pub xe: f64,
    pub ye: f64,
    pub the: f64,
    pub vp: f64,
    pub wp: f64,
    pub ve: f64,
    pub we: f64,
    pub dpe: f64,
}

impl TrajectoryRow {
    fn values(&self) -> [f64; 12] {
        [self.t, self.xp, self.yp, self.thp, self.xe, self.ye, self.the, self.vp, self.wp, self.ve, self.we, self.dpe]
    }
}

pub fn trajectory_rows(traj: &Trajectory) -> Vec<TrajectoryRow> {
    traj.samples
        .iter()
        .map(|s| TrajectoryRow {
            t: s.t,
            xp: s.p.x,
            yp: s.p.y,
            thp: s.p.theta,
            xe: s.e.x,
            ye: s.e.y,
            the: s.e.theta,
            vp: s.v_p,
            wp: s.w_p,
            ve: s.v_e,
            we: s.w_e,
            dpe: s.d_pe,
        })
        .collect()
}

fn export_err(e: impl std::fmt::Display) -> GameError {
    GameError::Export(e.to_string())
}

/// 17 significant digits, enough for an exact f64 round trip.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_trajectory_csv<W: Write>(traj: &Trajectory, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRAJECTORY_HEADER).map_err(export_err)?;
    for row in trajectory_rows(traj) {
        w.write_record(row.values().map(fmt)).map_err(export_err)?;
    }
    w.flush().map_err(export_err)
}

pub fn read_trajectory_csv<R: Read>(input: R) -> Result<Vec<TrajectoryRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(export_err)?;
    if header.iter().ne(TRAJECTORY_HEADER) {
        return Err(GameError::Export(format!("unexpected trajectory header: {header:?}")));
    }
    r.deserialize().map(|row| row.map_err(export_err)).collect()
}

/// Summary of a run, written next to the trajectory CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetadata {
    pub dt: f64,
    pub eps_capture: f64,
    pub steps: usize,
    pub captured: bool,
    pub capture_time: Option<f64>,
    pub capture_point: Option<[f64; 2]>,
    pub pair_switches: usize,
    /// Set when the chosen PE-pair changed more than [`PAIR_FLIP_LIMIT`] times.
    pub pair_flip_warning: bool,
    pub saddle_gaps: Vec<f64>,
    pub applicability: Applicability,
}

impl RunMetadata {
    pub fn from_run(traj: &Trajectory, cfg: &GameConfig) -> Self {
        let switches = traj.pair_switches();
        let applicability = match traj.samples.first() {
            Some(s) => applicability(&s.p, &s.e, cfg),
            None => Applicability::BelowThreshold,
        };
        Self {
            dt: traj.dt,
            eps_capture: traj.eps_capture,
            steps: traj.samples.len().saturating_sub(1),
            captured: traj.capture_time.is_some(),
            capture_time: traj.capture_time,
            capture_point: traj.capture_point.map(|p| [p.x, p.y]),
            pair_switches: switches,
            pair_flip_warning: switches > PAIR_FLIP_LIMIT,
            saddle_gaps: traj.saddle_gaps(),
            applicability,
        }
    }
}

pub fn write_metadata_json<W: Write>(meta: &RunMetadata, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, meta).map_err(export_err)
}

pub fn region_label(kind: RegionKind, owner: Owner) -> String {
    let kind = match kind {
        RegionKind::LeftSet => "left_set",
        RegionKind::RightSet => "right_set",
        RegionKind::FullSet => "full_set",
        RegionKind::BlockingSet => "blocking_set",
    };
    match owner {
        Owner::Pursuer => kind.to_string(),
        Owner::Evader => format!("evader_{kind}"),
    }
}

/// Writes polygons as `region,x,y` rows, one vertex per row, polygons in order.
pub fn write_regions_csv<W: Write>(regions: &[RegionPolygon], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REGION_HEADER).map_err(export_err)?;
    for region in regions {
        let label = region_label(region.kind, region.owner);
        for v in &region.vertices {
            w.write_record([label.clone(), fmt(v.x), fmt(v.y)]).map_err(export_err)?;
        }
    }
    w.flush().map_err(export_err)
}

/// Reads `region,x,y` rows back into labelled vertex lists, keeping file order.
pub fn read_regions_csv<R: Read>(input: R) -> Result<Vec<(String, Vec<Vec2>)>> {
    #[derive(Deserialize)]
    struct Row {
        region: String,
        x: f64,
        y: f64,
    }
    let mut r = csv::Reader::from_reader(input);
    let mut out: Vec<(String, Vec<Vec2>)> = Vec::new();
    for row in r.deserialize::<Row>() {
        let row = row.map_err(export_err)?;
        match out.last_mut() {
            Some((label, pts)) if *label == row.region => pts.push(Vec2::new(row.x, row.y)),
            _ => out.push((row.region, vec![Vec2::new(row.x, row.y)])),
        }
    }
    Ok(out)
}
