//! Kashiwara-Nakashima tableaux in type C and the combinatorics around
//! them: Baker-Lecouvey insertion, Sheats symplectic jeu de taquin,
//! crystal operators, right and left key maps via frank tableaux,
//! Demazure crystals/atoms/characters, tableau criteria for the Bruhat
//! order on the hyperoctahedral group, and evacuation.
//!
//! Everything is desk-scale by design and backed by brute-force oracles
//! (see [`oracles`] and [`verify`]).

pub mod alphabet;
pub mod columns;
pub mod crystal;
pub mod demazure;
pub mod error;
pub mod evacuation;
pub mod insertion;
pub mod jdt;
pub mod keys;
pub mod oracles;
pub mod tableaux;
pub mod verify;
pub mod weyl;

pub use alphabet::{Letter, Partition, Rank, WeightVector, Word};
pub use columns::{Admissibility, Column};
pub use error::{Error, Result};
pub use tableaux::{KNSkewTableau, KNTableau, SkewShape};

#[cfg(test)]
mod tests {
    /// All values are immutable after construction; operations are pure
    /// functions, so everything is shareable and sendable across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::Letter>();
        assert_send_sync::<crate::Word>();
        assert_send_sync::<crate::Partition>();
        assert_send_sync::<crate::Column>();
        assert_send_sync::<crate::KNTableau>();
        assert_send_sync::<crate::KNSkewTableau>();
        assert_send_sync::<crate::weyl::SignedPermutation>();
        assert_send_sync::<crate::crystal::CrystalGraph>();
        assert_send_sync::<crate::demazure::WeightPolynomial>();
        assert_send_sync::<crate::insertion::OscillatingTableau>();
        assert_send_sync::<crate::Error>();
    }
}
