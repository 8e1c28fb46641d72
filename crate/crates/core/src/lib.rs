//! Combinatorics of super Young tableaux over finite signed alphabets:
//! Schensted-like insertion, the super plactic congruence, the super jeu de
//! taquin with confluent rectification, evacuation, Fomin growth diagrams
//! and super Littlewood-Richardson coefficients.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads. Exhaustive brute-force
//! oracles (Knuth-relation closures, Greene invariants, fiber counting) are
//! part of the public API and are meant for desk-scale verification.
//!
//! ```
//! use superplactic::alphabet::SignedAlphabet;
//! use superplactic::insertion::tableau_of_word;
//! use superplactic::tableau::parse_skew_tableau;
//! use superplactic::taquin::rectify;
//!
//! let a = SignedAlphabet::parse("1 0\n2 0\n3 1\n4 0\n5 1")?;
//! let w = a.parse_word("5 5 3 4 4 1 1 2")?;
//! let t = tableau_of_word(&w);
//! assert_eq!(t.shape(), "3,3,1,1".parse()?);
//!
//! let s = parse_skew_tableau(". 1 2\n1 4\n", &a)?;
//! assert_eq!(rectify(&s).read_row(), a.parse_word("4 1 1 2")?);
//! # Ok::<(), superplactic::Error>(())
//! ```

pub mod alphabet;
pub mod error;
pub mod evacuation;
pub mod growth;
pub mod insertion;
pub mod lr;
pub mod plactic;
pub mod shapes;
pub mod tableau;
pub mod taquin;

#[cfg(test)]
pub(crate) mod testutil;

pub use alphabet::{Letter, Parity, SignedAlphabet, Word};
pub use error::{Error, Result};
pub use shapes::{Cell, Partition, SkewShape};
pub use tableau::{Chain, SkewTableau, Tableau};

#[cfg(test)]
mod thread_safety {
    fn shareable<T: Send + Sync>() {}

    #[test]
    fn values_are_send_and_sync() {
        shareable::<crate::SignedAlphabet>();
        shareable::<crate::Word>();
        shareable::<crate::Partition>();
        shareable::<crate::SkewShape>();
        shareable::<crate::Tableau>();
        shareable::<crate::SkewTableau>();
        shareable::<crate::Chain>();
        shareable::<crate::growth::Recording>();
        shareable::<crate::growth::GrowthDiagram>();
        shareable::<crate::lr::TableauSum>();
    }
}
