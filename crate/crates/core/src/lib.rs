//! Exact arithmetic for Azumaya algebras with involution over small finite
//! commutative rings.
//!
//! The crate computes reduced norms and reduced characteristic polynomials,
//! enumerates unitary and special groups, builds constructive Hilbert 90
//! witnesses `a = b * sigma(b)^{-1}` for unitary elements, and constructs
//! norm-principle witnesses showing `Nrd(a)^{1-sigma}` is the reduced norm of
//! a unitary element. Transfer (norm) maps along finite free extensions and
//! their additivity and homotopy compatibility are checked exhaustively.
//!
//! Rings are finite and enumerable, so every statement can also be checked
//! by brute force; the brute-force oracles live next to the constructions.

pub mod algebra;
pub mod error;
pub mod etale;
pub mod groups;
pub mod hilbert90;
pub mod involution;
pub mod matrix;
pub mod norm_principle;
pub mod poly;
pub mod ring;
pub mod samples;
pub mod transfers;

pub use algebra::{Algebra, AlgebraElem, AlgebraPresentation, AzumayaReport, Center, StructureTable};
pub use error::{Error, Result};
pub use etale::{EtaleElem, QuadraticEtale};
pub use groups::{FiniteAbelianPresentation, SpecialKind};
pub use hilbert90::{H90Witness, InclusionReport};
pub use involution::{AlgebraWithInvolution, InvolutionKind};
pub use matrix::RingMatrix;
pub use norm_principle::{NpRoute, NpWitness, PlusMinusSplit};
pub use poly::Poly;
pub use ring::{RingElem, RingSpec};
pub use transfers::{FiniteFreeExtension, PolyExtension};
