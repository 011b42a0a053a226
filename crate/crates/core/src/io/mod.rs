//! Text formats, DOT export, reports and the enumeration cache.

mod cache;
mod dot;
mod lattice_file;
mod report;
mod script;
mod tokens;

pub use cache::{CacheStatus, EnumerationCache};
pub use dot::{embedding_order, export_dot, ranks};
pub use lattice_file::{parse_lattice, serialize_lattice, Flags, FORMAT_VERSION};
pub use report::{analysis_report, format_enumeration, format_reports};
pub use script::{parse_sequence, parse_sequence_one_line, sequence_one_line, serialize_sequence};
