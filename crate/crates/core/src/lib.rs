//! Strongly-cyclic branched coverings of (g,1)-knots.
//!
//! Starting from a knot-group presentation `<a1..ag, g | r1..rg>` this crate
//! decides whether n-fold strongly-cyclic branched coverings exist, counts
//! and enumerates them by their monodromies, and rewrites the relators into
//! the g-word cyclic presentation of each covering's fundamental group.
//!
//! ```
//! use knotcover::{abelianize, covering_count, lift_words, KnotGroupPresentation, Monodromy};
//!
//! let p: KnotGroupPresentation = "genus 2\nrel a2 a1^-2 g a2^-1 g^-1\nrel a1 g a2^3 a1^-1 g^-1\n"
//!     .parse()
//!     .unwrap();
//! let h = abelianize(&p);
//! assert_eq!(covering_count(&h, 6), 6u32.into());
//!
//! let mono = Monodromy::new(&h, 2, vec![0, 0]).unwrap();
//! let cyclic = lift_words(&p, &mono).unwrap();
//! assert_eq!(cyclic.words()[0].to_string(), "x2.1 x1.1^-2 x2.2^-1");
//! ```

pub mod corpus;
pub mod coverings;
pub mod lift;
pub mod linalg;
pub mod presentation;
pub mod selftest;
pub mod word;

pub use coverings::{
    brute_force_monodromies, covering_count, covering_exists, covering_report,
    enumerate_monodromies, equivalent_monodromies, unique_covering, CoveringError, CoveringReport,
    Monodromy, MonodromyList,
};
pub use lift::{
    block_normal_form, hat_substitution, lift, lift_words, parse_cyclic, sheet_walk_lift,
    BlockForm, CyclicPresentation, Lift, LiftError, LiftNote,
};
pub use linalg::{
    invariant_factors, smith_normal_form, solve_congruences, AbelianGroup, CongruenceSolutionSet,
    IntMatrix, SnfResult,
};
pub use presentation::{
    abelianize, exponent_matrices, homology_of_complement, parse_presentation, HomologyData,
    KnotGroupPresentation, PresentationError,
};
pub use word::{free_reduce, parse_word, Generator, Syllable, Word};
