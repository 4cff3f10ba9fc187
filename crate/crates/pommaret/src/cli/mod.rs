//! The batch front end: the ideal-file format, the commands, and the
//! report structures emitted by the `pommaret` binary.

mod parse;
mod report;
mod run;

pub use parse::{parse_ideal_file, IdealFile, ParseError};
pub use report::{
    BasisSection, CoordinateChangeReport, GinSection, HilbertSection, QuotientsSection, Report,
    SaturationSection, Verdicts,
};
pub use run::{run, CliError, Command, Flags, TransformMode};
