use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { line: usize, column: usize, message: String },
    Verification(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn parse(line: usize, column: usize, message: String) -> Self {
        Self::Parse { line, column, message }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Verification(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error: {m}"),
            Self::Parse { line, column, message } => write!(f, "parse error at line {line}, column {column}: {message}"),
            Self::Verification(m) => write!(f, "verification failed: {m}"),
            Self::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}
