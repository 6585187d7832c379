//! Bases of free Lie superalgebras over the integers.
//!
//! * [`hall`]: basic commutators and the super basis with odd squares adjoined;
//! * [`words`]: Lyndon and regular words with their bracketings;
//! * [`reduce`]: straightening arbitrary Lie expressions into basis coordinates;
//! * [`assoc`]: the free associative superalgebra, collection, and exact
//!   rank certificates for all of the above.
//!
//! ```
//! use superlie::{parse_alphabet, parse_expression, normal_form, SuperBasis};
//!
//! let alphabet = parse_alphabet("x:odd y:even").unwrap();
//! let basis = SuperBasis::new(&alphabet, 3).unwrap();
//! let expr = parse_expression("[x,x,y]", &alphabet).unwrap();
//! assert_eq!(normal_form(&expr, &basis).unwrap().to_string(), "-2*[y,x,x]");
//! ```

pub mod alphabet;
pub mod assoc;
pub mod error;
pub mod hall;
pub mod parse;
pub mod poly;
pub mod reduce;
pub mod term;
pub mod words;

pub use alphabet::{Alphabet, Generator, Parity};
pub use error::{Error, Result};
pub use hall::{
    basic_index, enum_basic, super_basis, BasicCommutator, HallBasis, SuperBasis, SuperBasisElement,
};
pub use parse::{parse_alphabet, parse_expression, parse_word};
pub use poly::{multidegree, AssocPoly, AssocWord, LiePoly, LinComb};
pub use reduce::{bracket, check_axioms, left_normalize, normal_form, Coordinates};
pub use term::{parity_of, weight_of, LieTerm};
pub use words::{enum_words, pi, shirshov_super_basis, standard_factorization, theta, WordKind};

use num_bigint::BigInt;
use serde_json::Value;

/// A JSON number when it fits in an `i64`, otherwise a decimal string.
pub fn bigint_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}
