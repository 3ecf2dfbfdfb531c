//! Braiding invariants of words in free and finitely presented groups.
//!
//! The crate evaluates tree-shaped braiding symbols on words (by recursive
//! braiding products, a single streaming pass, or configuration counting),
//! relates them to functionals on the free Lie algebra through the
//! Baker–Campbell–Hausdorff expansion, computes the invariants that descend
//! to a presented group, and uses them to bound the rational lower central
//! series depth of a word.
//!
//! Everything is generic over a [`Scalar`] type; exact linear algebra needs
//! an [`Exact`] one. The aliases below fix the scalar to arbitrary-precision
//! rationals, which is what the command-line tool uses.

pub mod braiding;
pub mod coalgebra;
pub mod descent;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod membership;
pub mod scalar;
pub mod tensor;
pub mod words;

pub use error::{Error, Result};
pub use scalar::{Exact, Scalar};

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

pub type QDFunction = braiding::DFunction<Q>;
pub type QTreeSymbol = braiding::TreeSymbol<Q>;
pub type QSymbolSum = braiding::SymbolSum<Q>;
pub type QHom = words::Homomorphism<Q>;
pub type QTensor = tensor::TruncatedTensor<Q>;
pub type QLieElement = lie::LieElement<Q>;
pub type QFunctional = coalgebra::Functional<Q>;
pub type QCobracket = coalgebra::CobracketTensor<Q>;
pub type QCoalgebra = coalgebra::Coalgebra<Q>;
pub type QMatrix = linalg::Matrix<Q>;
pub type QSubspace = linalg::Subspace<Q>;
pub type QInvariantBasis = descent::InvariantBasis<Q>;
pub type QDepthReport = membership::DepthReport<Q>;
