//! Mihailova subgroups of `F_n x F_n`, their one-parametric recursive
//! presentation, Peiffer transformations of identities among relations, and
//! the embedding of `F_2 x F_2` into `Aut(F_3)`.
//!
//! Module map:
//! - [`freegroup`]: reduced words, conjugacy, roots.
//! - [`presentation`]: finite presentations, conciseness, bounded word problem.
//! - [`mihailova`]: `M(H)`, the epimorphism `pi : F_{n+m} -> M(H)` and the relator family.
//! - [`identities`]: identities among relations, Peiffer moves, word transforms, reduction search.
//! - [`autf3`]: endomorphisms of `F_3 = <q, a, b>` and the orbit undecidable subgroup.

pub mod autf3;
pub mod error;
pub mod freegroup;
pub mod identities;
pub mod mihailova;
pub mod presentation;

pub use error::{Error, Result};
pub use freegroup::{Alphabet, Letter, Sign, Word};
pub use identities::{IdentitySequence, IdentityTerm, ReductionCertificate};
pub use mihailova::{MixedWord, PairWord, SyllableForm};
pub use presentation::{Budget, Presentation, Verdict, WpVerdict};
