//! Independent checkers and brute-force oracles.

mod path_props;
mod planar;
mod search;

pub use crate::report::{Finding, Severity, ValidationReport, Witness};
pub use path_props::{check_lemma5_properties, check_lemma5_properties_on};
pub use planar::{bends, check_drawing, check_planar, curve_complexity};
pub use search::{brute_force_min_balanced_prefix, exhaustive_embedding_search, SearchConfig, SearchOutcome};
