//! Finite Heyting algebra workbench.
//!
//! The crate builds finite Heyting algebras from posets, orders, or raw
//! tables, studies the filters of elements dense over a point, performs the
//! one-step enrichment that adjoins a least dense element as a quotient of a
//! generated subalgebra of a power, and checks the whole construction
//! against Stone duality and a symbolic infinite chain. Everything is
//! exhaustive and deterministic; no randomness is used anywhere.

pub mod algebra;
pub mod density;
pub mod enrichment;
pub mod io;
pub mod omega;
pub mod stone;
pub mod suites;
pub mod error;
pub mod terms;

pub use algebra::{
    catalog, filter_generated, generated_subalgebra, is_isomorphic, quotient_by_filter,
    validate, CatalogEntry, Filter, FiniteHeytingAlgebra, FinitePoset, Homomorphism,
    Quotient, RawTables, ValidationReport,
};
pub use density::{
    check_delta_identity, delta_min, dense_characterizations, dense_over, km_from_heyting,
    push_filter, KMAlgebra,
};
pub use enrichment::{
    build_fa, build_iota_algebra, commute_iso, compose_witnesses, dense_in_iota, extend_hom,
    free_one_generator, km_completion, one_step, point_evaluation, witness_for_onestep,
    EnrichedAlgebra, OneStepResult, PowerPoint, Witness,
};
pub use error::{Error, Result};
pub use io::{algebra_from_json, export_dot, load_algebra, SCHEMA_VERSION};
pub use omega::{
    enumerate_fragment, f0_member, quotient_equiv, remark_counterexample, verify_onestep_omega,
    OmegaCheck, OmegaElement, OmegaReport, PieceKind, PiecewiseMap, RemarkReport,
};
pub use stone::{
    compare_with_onestep, delta_subalgebra, open_statement_check, sigma, sigma_plus, spectrum,
    CompareReport, DeltaSubalgebra, OpenStatementReport, Spectrum,
};
pub use suites::{run_all, SuiteBounds, SuiteOutcome, SuiteRun};
pub use terms::{
    check_schema, enumerate_terms, holds_identity, parse, Formula, SchemaBounds, SchemaId,
    SchemaReport, Valuation,
};
