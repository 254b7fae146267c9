//! Flat JSON scenario files.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use twocars::dubins::{Control, GameConfig, Owner, Pose, VehicleParams};
use twocars::simulator::{MatrixLaw, Policy, Scripted, SimOptions};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicySpec {
    MatrixLaw,
    /// Full speed, zero curvature.
    Straight,
    /// `[duration, v, w]` segments; the last one repeats.
    Scripted(Vec<[f64; 3]>),
}

fn default_policy() -> PolicySpec {
    PolicySpec::MatrixLaw
}

fn default_dt() -> f64 {
    0.01
}

fn default_eps() -> f64 {
    0.05
}

fn default_t_max() -> f64 {
    200.0
}

fn default_name() -> String {
    "scenario".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default = "default_name")]
    pub name: String,
    pub v_pm: f64,
    pub w_pm: f64,
    pub v_em: f64,
    pub w_em: f64,
    /// `[x, y, theta]`
    pub p0: [f64; 3],
    pub e0: [f64; 3],
    #[serde(default = "default_dt")]
    pub dt: f64,
    #[serde(default = "default_eps")]
    pub eps_capture: f64,
    #[serde(default = "default_t_max")]
    pub t_max: f64,
    #[serde(default = "default_policy")]
    pub pursuer_policy: PolicySpec,
    #[serde(default = "default_policy")]
    pub evader_policy: PolicySpec,
    #[serde(default)]
    pub trajectory_csv: Option<PathBuf>,
    #[serde(default)]
    pub metadata_json: Option<PathBuf>,
}

/// A config that passed validation.
pub struct Scenario {
    pub raw: ScenarioConfig,
    pub cfg: GameConfig,
    pub p0: Pose,
    pub e0: Pose,
    pub opts: SimOptions,
}

impl ScenarioConfig {
    pub fn load(path: &Path) -> Result<Scenario, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let raw: ScenarioConfig = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        raw.validate()
    }

    pub fn validate(self) -> Result<Scenario, String> {
        let scalars = [self.v_pm, self.w_pm, self.v_em, self.w_em, self.dt, self.eps_capture, self.t_max];
        if !scalars.iter().chain(&self.p0).chain(&self.e0).all(|x| x.is_finite()) {
            return Err("all numeric fields must be finite".into());
        }
        if !(self.dt > 0.0 && self.t_max > 0.0 && self.eps_capture > 0.0) {
            return Err("dt, eps_capture and t_max must be positive".into());
        }
        for spec in [&self.pursuer_policy, &self.evader_policy] {
            if let PolicySpec::Scripted(segs) = spec {
                if segs.is_empty() || segs.iter().any(|s| s[0].is_nan() || s[0] <= 0.0) {
                    return Err("scripted policies need segments with positive durations".into());
                }
            }
        }
        let pursuer = VehicleParams::new(self.v_pm, self.w_pm).map_err(|e| e.to_string())?;
        let evader = VehicleParams::new(self.v_em, self.w_em).map_err(|e| e.to_string())?;
        let cfg = GameConfig::new(pursuer, evader).map_err(|e| e.to_string())?;
        let pose = |a: [f64; 3]| Pose::new(a[0], a[1], a[2]);
        Ok(Scenario {
            cfg,
            p0: pose(self.p0),
            e0: pose(self.e0),
            opts: SimOptions { dt: self.dt, eps_capture: self.eps_capture, t_max: self.t_max },
            raw: self,
        })
    }
}

impl Scenario {
    pub fn policy(&self, owner: Owner) -> Box<dyn Policy> {
        let spec = match owner {
            Owner::Pursuer => &self.raw.pursuer_policy,
            Owner::Evader => &self.raw.evader_policy,
        };
        let params = self.cfg.params(owner);
        match spec {
            PolicySpec::MatrixLaw => Box::new(MatrixLaw::new(owner, self.opts.dt)),
            PolicySpec::Straight => Box::new(Scripted::constant(owner, Control::new(params.v_max(), 0.0))),
            PolicySpec::Scripted(segs) => Box::new(Scripted {
                owner,
                segments: segs.iter().map(|s| (s[0], Control::new(s[1], s[2]))).collect(),
            }),
        }
    }
}
