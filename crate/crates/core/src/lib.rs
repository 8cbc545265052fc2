//! Crystal isomorphisms between level-`l` Fock spaces in affine type A.
//!
//! Charged multipartitions carry the Kashiwara crystal structure of
//! [`crystal`]; [`rsk`] provides Schensted insertion on their symbols and
//! [`isom`] the cyclage, the pseudoperiod reduction and the canonical
//! isomorphism onto FLOTW multipartitions, with its inverse.
//!
//! ```
//! use affine_crystal::crystal::canonical_oracle;
//! use affine_crystal::isom::{canonical, canonical_inverse};
//! use affine_crystal::ChargedMultipartition;
//!
//! let m: ChargedMultipartition = "4.2^2.1^3|5.2^3.1^4|7^2.6.4^2.2^2.1^3 @ 0,9,5".parse()?;
//! let res = canonical(&m, 4)?;
//! assert!(res.image.is_flotw(4));
//! assert_eq!(res.image, canonical_oracle(&m, 4)?.0);
//! assert_eq!(canonical_inverse(&res.image, &res.log, 4)?, m);
//! # Ok::<(), affine_crystal::Error>(())
//! ```

pub mod crystal;
pub mod error;
pub mod isom;
pub mod multipartition;
pub mod rsk;
pub mod symbol;
pub mod text;

pub use crystal::{CrystalGraph, Letter, Mode, SignedWord, WeightVector};
pub use error::{Error, Result};
pub use isom::{CanonicalResult, Pseudoperiod, Step, StepLog};
pub use multipartition::{
    ChargedMultipartition, MaskedMultipartition, Multicharge, Node, Partition,
};
pub use rsk::RecordingSymbol;
pub use symbol::Symbol;
