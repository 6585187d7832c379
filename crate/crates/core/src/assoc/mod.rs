//! The free associative superalgebra over the integers: the expansion
//! homomorphism from Lie expressions, collection of words into products of
//! basic commutators, and exact rank certificates.

mod collect;
mod expand;
mod rank;
mod verify;

pub use collect::{
    collect, collect_through, enum_basic_products, BasicProduct, CollectedDisplay, CollectedPoly,
};
pub use expand::{expand_element, expand_poly, expand_term, Expander};
pub use rank::{rank_over_integers, solve_coordinates, RankReport};
pub use verify::{
    scheme_basis, verify_basis, ProductCensus, Scheme, SchemeElement, WeightReport,
    MAX_CENSUS_COLUMNS,
};
