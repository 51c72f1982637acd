use thiserror::Error;

pub const MAX_TABLE_BOUND: u32 = 200;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse `{input}`: {source}")]
    Element {
        input: String,
        source: zplane::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("table bound {0} exceeds the maximum of {MAX_TABLE_BOUND}")]
    BoundTooLarge(u32),
    #[error(transparent)]
    Domain(#[from] zplane::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Element { .. } => "parse",
            CliError::Usage(_) => "usage",
            CliError::BoundTooLarge(_) => "bound_too_large",
            CliError::Domain(_) => "domain",
        }
    }
}
