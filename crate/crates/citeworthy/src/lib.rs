//! Corpus construction and baseline classifiers for citation-worthiness
//! detection in American case law.
//!
//! The crate turns raw case-law exports into a labeled sentence dataset and
//! trains a TF-IDF / logistic-regression baseline on it, optionally wrapped
//! in positive-unlabeled (PU) reweighting:
//!
//! - [`ingest`]: stream case documents out of newline-delimited JSON or
//!   per-case JSON files without loading the corpus into memory.
//! - [`clean`]: strip non-sentence noise (footnote markers, page numbers,
//!   quoted excerpts) and normalize the dotted abbreviations that break
//!   sentence splitting.
//! - [`segment`]: rule-based sentence boundary detection tuned for legal
//!   prose.
//! - [`citation`]: detect versus-type and reporter-type citation spans,
//!   mask them with a placeholder token, and flag citation-only sentences.
//! - [`label`]: the four-way sentence typing that yields binary
//!   citation-worthiness labels, document-level splits, dataset-version
//!   sampling, and profiling statistics.
//! - [`model`]: TF-IDF vectorizer, weighted logistic regression, and the
//!   PU estimator built on top of them.
//! - [`eval`]: confusion counts and precision/recall/F1 reporting.
//! - [`pipeline`]: end-to-end orchestration with deterministic, parallel
//!   document processing.
//!
//! ```
//! use citeworthy::citation::CitationEngine;
//!
//! let engine = CitationEngine::default();
//! let sentence = "See Allen v. Allen, 265 Ga. 53 (1) (452 SE2d 767) (1995)";
//! let processed = engine.process(sentence, &[]);
//! assert_eq!(processed.masked, "See [CITATION_SPAN]");
//! assert!(processed.is_citation_only);
//! ```

pub mod citation;
pub mod clean;
pub mod error;
pub mod eval;
pub mod ingest;
pub mod label;
pub mod model;
pub mod pipeline;
pub mod reporters;
pub mod segment;

mod book;

pub use error::{Error, Result};
