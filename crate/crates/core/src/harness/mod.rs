//! Benchmark plumbing: loading or generating point sets, timing the
//! preconditioner and hull pipelines, and writing CSV and text reports.

pub mod dataset;
pub mod extract;
pub mod pipeline;
pub mod report;

pub use dataset::{
    generate, load_points, parse_points, quantize, DatasetSpec, Generator, GeneratorKind,
    Projection, Source,
};
pub use extract::{emit_extract_csv, extract_bench, naive_scan, random_slots, ExtractRecord};
pub use pipeline::{
    apply_method, full_matrix, run_pipeline, BenchRecord, Method, PipelineConfig, Reduced,
};
pub use report::{
    csv_string, emit_csv, fit_reduction_time, format_seconds, linear_fit, parse_csv,
    parse_seconds, stats_report, LinearFit, CSV_HEADER,
};
