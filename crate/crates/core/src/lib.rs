//! Exact invariant theory of eight-point configurations.
//!
//! The crate constructs the classical tableau invariants of `n` points in
//! projective space, the fourteen Kempe coordinates of eight points on a
//! line, the skew cubic and skew quintic hypersurfaces attached to them, and
//! runs an exact (or two-prime modular) verification of every quantitative
//! claim about these objects: dimension counts, representation-theoretic
//! multiplicities, Hilbert series, the graded Betti table, secant degree,
//! Gale duality, and uniqueness of the quintic.
//!
//! Everything is computed from first principles over the rationals; no
//! floating point is used anywhere. Randomized checks draw from named,
//! seeded substreams so that reports are bit-reproducible.

pub mod scalar;
pub mod seeds;
pub mod modp;
pub mod matrix;
pub mod poly;
pub mod unipoly;
pub mod perm;
pub mod configs;
pub mod tableau;
pub mod graph2;
pub mod partitions;
pub mod characters;
pub mod plethysm;
pub mod soann;
pub mod m8;
pub mod n8;
pub mod report;
pub mod cache;
pub mod claims;
