//! Minimal binomial multiples of polynomials over finite fields, binomial
//! factorization and distance-2 constacyclic codes.
//!
//! Elements of GF(p^e) are encoded as integers `sum a_i p^i` over the
//! canonical modulus; polynomials carry ascending coefficient codes.

pub mod arith;
pub mod binfactor;
pub mod codes;
pub mod cosets;
pub mod error;
pub mod ext;
pub mod factor;
pub mod field;
pub mod minbin;
pub mod oracle;
pub mod poly;
pub use cosets::{
    cyclotomic_coset, cyclotomic_cosets, defining_set, defining_set_in, embed,
    is_defined_over_base, is_equal_difference, minimal_equal_difference_cover, CyclotomicCoset,
    DefiningSet, EqualDifferenceSet,
};
pub use error::{Error, Result};
pub use ext::{in_base_field, splitting_context, ExtElem, ExtField, SplittingContext};
pub use factor::{factorize, poly_order, radical, Factorization};
pub use field::{elem_order, make_field, primitive_element, Field, FieldElement};
pub use minbin::{
    is_binomial, is_free_of_binomials, min_binomial, min_binomial_lcm, min_binomial_squarefree,
    MinBinResult,
};
pub use binfactor::{
    binomial_defining_set, coset_size_check, depolarize, factor_binomial, BinomialShape,
};
pub use codes::{
    enumerate_distance_two_codes, has_min_distance_two, proper_binomial_factors,
    ConstacyclicCode,
};
pub use oracle::{
    oracle_distance_two, oracle_expand_equal_difference, oracle_min_binomial, oracle_poly_order,
};
pub use poly::Poly;
