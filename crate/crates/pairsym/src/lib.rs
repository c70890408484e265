//! Construction and brute-force verification of MDS symbol-pair codes.
//!
//! A symbol-pair code is read through a channel that outputs overlapping
//! pairs of adjacent symbols; its minimum pair distance d obeys the
//! Singleton-type bound |C| <= q^(n-d+2), and codes meeting the bound are
//! maximum distance separable (MDS). This crate builds such codes from
//! classical MDS codes, eulerian graphs of prescribed order, size and girth,
//! explicit generator matrices, development of seed words under a doubled
//! group action, and products of coprime-alphabet codes; every construction
//! can be checked by exhaustive pairwise scan.

pub mod alphabet;
pub mod catalog;
pub mod classical;
pub mod code;
pub mod constructions;
pub mod develop;
pub mod error;
pub mod formats;
pub mod graphs;
pub mod search;
pub mod spectrum;
pub mod word;

pub use alphabet::{AbelianGroup, Alphabet, Symbol};
pub use catalog::{
    entry_is_mds, min_alphabet_order, resolve_entry, run_catalog, ExistenceEntry, Status,
    CATALOG_BUDGET, CATALOG_INSTANCES,
};
pub use classical::{
    is_mds_classical, parity_check, reed_solomon, repetition, standard_form, triply_extended_rs,
    ClassicalMdsReport, GeneratorMatrix,
};
pub use code::{singleton_bound, Code, MdsReport};
pub use constructions::{
    certify, classical_mds_matrix, construct, construct_with_budget, embed_classical,
    embed_classical_matrix, extend_by_graph, interleave, linear_d4, linear_d5, linear_dn, mds_nm1,
    mds_nm2, product, span_with_claim, tabulated_code, Constructed, DEFAULT_VERIFY_BUDGET,
    TABULATED_TRIPLES,
};
pub use develop::{dev_8_7_2p, develop, is_development_seed, DevelopmentSeed, SeedViolation};
pub use error::{Error, Result};
pub use formats::{
    code_from_str, code_to_string, gen_from_str, gen_to_string, graph_from_str, graph_to_string,
    read_code, read_gen, read_graph, write_code, write_gen, write_graph,
};
pub use graphs::Graph;
pub use search::{max_code_size, SearchOutcome, SEARCH_GUARD};
pub use spectrum::{
    eulerian_girth3, eulerian_girth4, gadget, max_size_girth3, max_size_girth4, Gadget,
};
pub use word::{PairVector, Word};
