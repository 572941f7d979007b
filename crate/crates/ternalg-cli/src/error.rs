use thiserror::Error;

/// Everything that maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("invalid structure file: {msg}")]
    Json { line: usize, column: usize, msg: String },

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Library(#[from] ternalg::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    InFile {
        path: String,
        source: Box<CliError>,
    },
}

impl CliError {
    pub fn context(self, what: &str) -> CliError {
        match self {
            CliError::Format(msg) => CliError::Format(format!("{what}.{msg}")),
            CliError::Library(e) => CliError::Format(format!("{what}: {e}")),
            other => other,
        }
    }

    pub fn in_file(self, path: &str) -> CliError {
        CliError::InFile {
            path: path.to_string(),
            source: Box::new(self),
        }
    }
}
