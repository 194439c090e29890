//! Library side of the `dloop` command line tool: document loading,
//! commands and reports.

pub mod commands;
pub mod corpus;
pub mod report;

pub use commands::{
    cobar_report, cotor_report, double_loop_report, fiber_report, formal_report, identity_map,
    iterated_cobar_complex, load_coalgebra, load_map, path_loop_report, suites, verify_report,
    CliError, CliResult, LoadedMap, Options,
};
pub use report::{Block, Check, DegreeRow, Format, Product, Report};
