use thiserror::Error;

pub type Result<T, E = SetOptError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SetOptError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("order unit not interior: <w_{index}, q> = {pairing}")]
    OrderUnitNotInterior { index: usize, pairing: f64 },

    #[error("empty grid")]
    EmptyGrid,

    #[error("empty cloud")]
    EmptyCloud,

    #[error("interval violation at x = {x:?}: lower {lower} > upper {upper}")]
    IntervalViolation { x: Vec<f64>, lower: f64, upper: f64 },

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("point {0:?} is not a grid point")]
    NotInGrid(Vec<f64>),

    #[error("direction must be nonzero")]
    ZeroDirection,

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A consistency check between two computation routes failed. This
    /// signals a tolerance misconfiguration rather than bad input.
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

impl SetOptError {
    pub fn is_internal(&self) -> bool {
        matches!(self, SetOptError::Internal(_))
    }

    /// Short machine-readable tag used in one-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            SetOptError::DimensionMismatch { .. } => "dimension_mismatch",
            SetOptError::InvalidCone(_) => "invalid_cone",
            SetOptError::OrderUnitNotInterior { .. } => "order_unit_not_interior",
            SetOptError::EmptyGrid => "empty_grid",
            SetOptError::EmptyCloud => "empty_cloud",
            SetOptError::IntervalViolation { .. } => "interval_violation",
            SetOptError::Schema(_) => "schema",
            SetOptError::NotInGrid(_) => "not_in_grid",
            SetOptError::ZeroDirection => "zero_direction",
            SetOptError::InvalidSchedule(_) => "invalid_schedule",
            SetOptError::InvalidArgument(_) => "invalid_argument",
            SetOptError::Internal(_) => "internal",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(SetOptError::DimensionMismatch { expected, found });
    }
    Ok(())
}
