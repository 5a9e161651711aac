//! File formats, canonical JSON and subcommands behind the `bdh` binary.

pub mod commands;
pub mod dot;
pub mod formats;
pub mod json;

pub use commands::{finish, Algo, CliError, Emit, Format, GenOptions, LatticeOptions, Output};
pub use formats::{parse_edge_list, parse_input, parse_sequence, write_edge_list, write_sequence, Input, ParseError};
pub use json::LatticeJson;
