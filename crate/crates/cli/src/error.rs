use std::fmt;

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const USAGE: i32 = 2;
pub const IO: i32 = 3;
pub const NUMERICAL: i32 = 4;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: USAGE, message: message.into() }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        CliError { code: NUMERICAL, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<fractal_ac::Error> for CliError {
    fn from(e: fractal_ac::Error) -> Self {
        let code = if e.is_parameter_error() { USAGE } else { NUMERICAL };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: IO, message: format!("i/o error: {e}") }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError { code: IO, message: format!("csv error: {e}") }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError { code: IO, message: format!("json error: {e}") }
    }
}

/// Attaches the parameter point to numerical failures.
pub trait AtPoint<T> {
    fn at(self, point: &str) -> Result<T, CliError>;
}

impl<T> AtPoint<T> for fractal_ac::Result<T> {
    fn at(self, point: &str) -> Result<T, CliError> {
        self.map_err(|e| {
            let mut err = CliError::from(e);
            if err.code == NUMERICAL {
                err.message = format!("{} (at {point})", err.message);
            }
            err
        })
    }
}
