//! Front end for `burnside-core`: parses a group and a prime set, runs one
//! computation and renders it as text or JSON.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification failed,
//! 3 the group exceeds `--max-order`, 4 internal error.

pub mod config;
pub mod document;
pub mod render;
pub mod run;

pub use config::{parse_config, Command, Config, Format, UsageError};
pub use document::{Payload, ReportDocument};
pub use run::{run, RunError, EXIT_CAP, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Text => render::to_text(doc),
        Format::Json => render::to_json(doc),
    }
}
