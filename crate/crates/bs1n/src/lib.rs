//! Hyperbolic structures on the solvable Baumslag–Solitar groups BS(1,n).
//!
//! BS(1,n) = ⟨a, t | t a t⁻¹ = aⁿ⟩ acts on a bounded collection of
//! quasi-isometry types of hyperbolic spaces, and for these groups the full
//! poset of such actions is known exactly: one elliptic class, one lineal
//! class, the hyperbolic plane, and one Bass–Serre-tree class for every
//! nonempty subset of the prime divisors of n — 2^k + 2 classes in all when
//! n has k distinct primes.
//!
//! This crate mechanizes the objects behind that classification:
//!
//! * [`basen`] — exact elements of Z[1/n] as signed base-n digit maps, the
//!   shift automorphism, and the fractional profile (p, c).
//! * [`nadic`] — truncated n-adic integers with digit-level carry
//!   recursions, Chinese-remainder splitting, and the lattice of ideals of
//!   Z_n used to index the tree actions.
//! * [`confining`] — membership oracles for the subsets of Z[1/n] that
//!   generate the actions, a checker for the confining axioms, and the map
//!   recovering an ideal from such a subset.
//! * [`bsgroup`] — BS(1,n) itself: normal forms, word metrics for the
//!   generating sets S(𝔞) ∪ {t±1}, Bass–Serre tree balls, the plane action,
//!   and the abelianization.
//! * [`poset`] — the poset of hyperbolic structures, with comparison,
//!   Hasse diagram, and serialization.
//! * [`wreath`] — the contrasting Z ≀ Z computation: truncation chains
//!   Q^i, their structural facts, and the separation bound showing no two
//!   of those confining chains give equivalent actions.
//! * [`cli`] — the `bs1n` command-line front end over all of the above.
//!
//! The examples directory exercises each capability end to end; start with
//! `cargo run --example poset_hasse`.

pub mod basen;
pub mod bsgroup;
pub mod cli;
pub mod confining;
pub mod error;
pub mod nadic;
pub mod poset;
pub mod wreath;

pub use basen::NAryNumber;
pub use bsgroup::{BSElement, BfsParams, Letter, NormalForm, TreeBall};
pub use confining::{ConfiningReport, ConfiningSet, EnumBounds, Flavor, VerifyLimits};
pub use error::{Error, Result};
pub use nadic::{FullIdeal, IdealComponent, IdealSpec, NAdic, NadicDistance, Verdict};
pub use poset::{Comparison, HypPoset, HypStructure};
pub use wreath::{LaurentPoly, QiBounds, QiFactsReport, QiTruncation, SeparationBound, WreathElement};
