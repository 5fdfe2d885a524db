//! Prime-by-prime sweeps, record serialization and the summary tables.

pub mod config;
pub mod io;
pub mod report;
pub mod sweep;

pub use config::{FSpec, Format, SurveyConfig};
pub use io::{read_csv, read_jsonl, write_csv, write_jsonl, RecordRow, CSV_HEADER};
pub use report::{
    d2_reference, delta_reference, density_report, growth_report, rows_from_records, DensityRow,
    DENSITY_HEADER, GROWTH_HEADER,
};
pub use sweep::{run, sweep, DegreeBatch, SurveySummary};
