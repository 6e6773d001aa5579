//! Exact spectral analysis of cographs.
//!
//! The crate recognizes cographs (producing a cotree or an induced-P4
//! witness), computes duplication/coduplication classes and the neighborhood
//! partial order with its minimum chain cover, derives exact integer
//! characteristic polynomials with square-free multiplicity decompositions
//! and Sturm interval counts, and machine-checks a battery of spectral
//! statements about cographs over exhaustive and randomized graph campaigns.
//!
//! All verdicts rest on arbitrary-precision integer arithmetic; floating
//! point appears only in the advisory Jacobi cross-check eigensolver.

pub mod cograph;
pub mod graph;
pub mod graph6;
pub mod neighborhood;
pub mod poly;
pub mod spectral;
pub mod verify;

pub use cograph::{
    build_cotree, enumerate_all_graphs, enumerate_cographs, enumerate_cotrees, find_induced_p4,
    is_cograph, random_cograph, Cotree, CotreeOp, CotreeOutcome, P4Witness,
};
pub use graph::{Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use neighborhood::{
    build_order, coduplication_classes, duplication_classes, equivalence_classes, is_threshold,
    min_chain_cover, ChainCover, ClassPartition, QuotientOrder,
};
pub use poly::{yun_square_free, IntPoly, SturmChain};
pub use spectral::{
    char_poly, count_eigs_open_interval, numeric_eigenvalues, rank_exact,
    square_free_decomposition, FactorRecord, MultiplicitySpectrum,
};
pub use verify::{
    run_campaign, verify_graph, CampaignConfig, CampaignMode, CampaignSummary, CheckRecord,
    CheckStatus, VerificationReport,
};
