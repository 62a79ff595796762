use cobweb_core::tiling::Violation;

/// Everything a command can fail with.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cobweb_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("not a tiling: {0}")]
    NotATiling(#[from] Violation),
    #[error("{0}")]
    Invalid(String),
    #[error("{format} output supports at most {max} dimensions, the box has {dims}")]
    UnsupportedDimension {
        format: &'static str,
        dims: usize,
        max: usize,
    },
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 3 for inputs that are well formed but exceed what can be computed,
    /// 1 for IO failures and failed verification, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        use cobweb_core::Error as E;
        match self {
            CliError::Core(E::NonRepresentable | E::SearchLimitExceeded { .. } | E::TooLarge(_)) => 3,
            CliError::Io { .. } | CliError::NotATiling(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
