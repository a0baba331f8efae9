//! Exact root-system, Weyl-group, torus and affine Hecke algebra machinery,
//! together with a verification harness that checks a catalogue of
//! case-by-case computations about one-dimensional representations and
//! nilpotent orbit counts.
//!
//! Everything is exact: integers, arbitrary-precision counts, rationals and
//! Laurent polynomials in `v = q^{1/2}`. Finite-field orbit counts are used as
//! an oracle for complex orbit counts and are always cross-checked over at
//! least two primes.

pub mod cases;
pub mod error;
pub mod hecke;
pub mod lattice;
pub mod laurent;
pub mod nilorbits;
pub mod partitions;
pub mod report;
pub mod rootsys;
pub mod torus;
pub mod verify;
pub mod weylgrp;

pub use error::{Error, Result};
pub use hecke::{AffineWeylGroup, ExtAffineElement, GeneratorValue, HeckeAlgebra, HeckeElement};
pub use laurent::Laurent;
pub use nilorbits::{NilModule, OrbitConfig, OrbitCount, Submodule};
pub use partitions::Partition;
pub use report::{ClaimRecord, ClaimStatus, VerificationReport};
pub use rootsys::{Family, Root, RootSystem, RootSystemType, SignConvention, StructureConstants};
pub use torus::{QOrder, SubsystemSignature, TorusPoint};
pub use verify::{verify_all, RunConfig};
pub use weylgrp::{PoincarePoly, WeylElement, WeylGroup};
