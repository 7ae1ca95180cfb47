use thiserror::Error;

/// Errors reported by landscape construction, refinement and analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("landscape over {n_bits} bits needs {expected} fitness values, got {got}")]
    FitnessTableSize {
        n_bits: u32,
        expected: usize,
        got: usize,
    },

    #[error("fitness values must be finite, index {index} is {value}")]
    NonFiniteFitness { index: usize, value: f64 },

    #[error("bit width {n_bits} outside supported range [{min}, {max}]")]
    BitsOutOfRange { n_bits: u32, min: u32, max: u32 },

    #[error("degree distributions have incompatible lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("distribution weights must sum to 1, got {sum}")]
    Unnormalized { sum: f64 },

    #[error("distribution weight for degree {degree} is {weight}, expected a finite value >= 0")]
    BadWeight { degree: usize, weight: f64 },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("no feasible degree to sample from")]
    EmptyFeasibleSet,

    #[error("FDC undefined: {0}")]
    FdcUndefined(&'static str),

    #[error("{path}:{line}: {message}")]
    Format {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
