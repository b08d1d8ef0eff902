use std::fmt;

/// Why a command did not succeed, with the process exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input, invalid parameters.
    Input(String),
    /// A search ran out of budget or resources.
    Budget(String),
    /// A certificate failed verification.
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Budget(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Input(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "error: {m}"),
            Failure::Budget(m) => write!(f, "budget exhausted: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<mcturan::Error> for Failure {
    fn from(e: mcturan::Error) -> Self {
        match e {
            mcturan::Error::BudgetExhausted { .. } | mcturan::Error::Resource(_) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("malformed JSON: {e}"))
    }
}
