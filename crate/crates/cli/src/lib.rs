//! Library backing the `slicetree` binary: ingestion, the classification
//! pipeline, and the JSON/DOT emitters. Kept as a library so the
//! integration and acceptance suites can drive the pipeline directly.

pub mod emit;
pub mod ingest;
pub mod pipeline;
pub mod report;

pub use ingest::{parse_auto, parse_edge_list, parse_graph_json, IngestError, LabeledGraph};
pub use pipeline::{
    build_family, build_tree_artifact, run_pipeline, FamilySource, PipelineFailure,
    PipelineOptions, PipelineOutcome,
};
pub use report::{ClassificationReport, TreeJson, Verdict};
