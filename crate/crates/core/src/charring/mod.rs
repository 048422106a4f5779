//! The formal character ring: irreducible characters, Weyl numerators and
//! decomposition of virtual characters.

mod character;
mod decompose;
mod freudenthal;

pub use character::FormalCharacter;
pub use decompose::{decompose, Component, VirtualDecomposition};
pub use freudenthal::{dominant_multiplicities, irreducible_character, weyl_dimension, weyl_numerator};

/// Convolution product of two characters.
pub fn multiply(a: &FormalCharacter, b: &FormalCharacter) -> FormalCharacter {
    a.multiply(b)
}
