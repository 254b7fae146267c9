use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("invalid vehicle parameters: {0}")]
    InvalidParams(String),

    #[error("pursuer must be strictly faster and more agile than the evader ({0})")]
    AssumptionViolated(String),

    #[error("point lies {offset:.3e} off the circle (tolerance 1e-6)")]
    PointOffCircle { offset: f64 },

    #[error("capture estimate is degenerate (pursuer reaches the exit point before the evader)")]
    DegenerateEstimate,

    #[error("no PE-pair has a valid tangent; vehicles are too close for the tangent law")]
    AllPairsInfeasible,

    #[error("policy failed at t = {t}: {source}")]
    PolicyFailure {
        t: f64,
        #[source]
        source: Box<GameError>,
    },

    #[error("horizon {t_bar} is shorter than one full turn ({min})")]
    HorizonTooShort { t_bar: f64, min: f64 },

    #[error("pursuer and evader positions coincide; direction EP undefined")]
    DegenerateDirection,

    #[error("discrete game horizon {horizon} exceeds the enumeration budget ({max})")]
    BudgetExceeded { horizon: usize, max: usize },

    #[error("export failed: {0}")]
    Export(String),
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
