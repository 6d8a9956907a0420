//! Computable models of the braid-group quotients that extend the symmetric
//! group: `G_n` (integer winding coefficients), its scaled variants `G_n^t`,
//! and the mod 4 braid group `Z_n`, together with the 2-cocycles classifying
//! them, a truncated resolution for checking those cocycles against the bar
//! resolution, and presentation machinery with Todd-Coxeter enumeration for
//! order verification.

pub mod braid;
pub mod burau;
pub mod chain;
pub mod coset;
pub mod ext;
pub mod perm;
pub mod presentation;
pub mod strand;

pub use braid::{
    band_expand, concat, free_reduce, invert, parse_word, perm_of, BraidLetter, BraidWord,
};
pub use burau::{burau_matrix, in_level, SquareMatrixModM};
pub use chain::{
    boundary_p1, boundary_p2, boundary_r1, boundary_r2, check_chain_map, check_closed_forms,
    cocycle_via_section, eta, gamma0, gamma1, gamma2, kappa, phi, Cell2, FreeModElem,
    GroupRingElem,
};
pub use coset::{todd_coxeter, CosetTable, EnumerationResult};
pub use ext::{
    bar_cocycle, elem_from_word, ext_inv, ext_mul, normal_generators_b4, omega_splitting_check,
    schreier_bound, search_splitting_zn, section_word, verify_relation_table, ExtElement,
    RelationReport, RingTag, TableId,
};
pub use perm::{
    compose, normal_form, pair_action, pair_normal_form, Permutation, TranspositionWord, UPair,
};
pub use presentation::{
    build_extension_presentation, build_presentation, enumerate_zn, parse_presentation,
    Builtin, ExtensionData, Presentation,
};
pub use strand::{crossing_counts, is_pure, winding_vector, CrossingCounts, PairVector, Ring};
