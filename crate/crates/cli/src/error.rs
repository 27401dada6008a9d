use thiserror::Error;

/// Problems with the invocation or the documents themselves. These map to
/// exit code 2; a failed validation is a report, not an error.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: unsupported schema_version {found}")]
    Schema { path: String, found: u32 },
    #[error("{at}: dangling reference `{reference}`")]
    Reference { at: String, reference: String },
    #[error("{at}: expected a {expected} document, found {found}")]
    Kind {
        at: String,
        expected: String,
        found: String,
    },
    #[error("{at}: field {found} does not match {expected}")]
    FieldMismatch {
        at: String,
        expected: String,
        found: String,
    },
    #[error("{at}: {message}")]
    Content { at: String, message: String },
    #[error("build {op}: {message}")]
    Build { op: String, message: String },
    #[error("{0}")]
    Usage(String),
}
