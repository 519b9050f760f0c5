use cavity_thermo::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(Error),
    #[error("{0}")]
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGeometry(_) | Error::InvalidArgument(_) | Error::NotAMode(..) => {
                CliError::Usage(e.to_string())
            }
            Error::CutoffTooLarge { .. } | Error::CutoffNotConverged { .. } | Error::SolverFailure(_) => {
                CliError::Numerical(e)
            }
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
        }
    }

    /// One-line JSON record for stderr.
    pub fn machine_line(&self) -> String {
        let kind = match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Numerical(Error::CutoffTooLarge { .. }) => "cutoff_budget",
            CliError::Numerical(Error::CutoffNotConverged { .. }) => "cutoff_not_converged",
            CliError::Numerical(Error::SolverFailure(_)) => "solver_failure",
            CliError::Numerical(_) => "numerical",
        };
        serde_json::json!({ "error": kind, "message": self.to_string() }).to_string()
    }
}
