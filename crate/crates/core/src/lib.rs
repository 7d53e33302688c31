//! Exact computation of the modified k-Fibonacci-like sequence
//! `M(k, n+1) = k·M(k, n) + M(k, n-1)`, `M(k, 0) = M(k, 1) = 2`, and of its
//! binomial, k-binomial, rising k-binomial and falling k-binomial transforms.
//!
//! Every quantity is computed over an exact carrier: arbitrary-precision
//! integers for a concrete `k`, or integer polynomials in `k` for identities
//! that must hold for all `k`. Each transform is available both as its
//! defining weighted binomial sum and as a closed second-order recurrence,
//! along with exact Binet forms (via Lucas sequences), a floating-point Binet
//! path, and rational generating functions. The [`audit`] module checks a
//! registry of published claims about these objects against independent
//! computation.

pub mod audit;
pub mod closed_form;
pub mod error;
pub mod genfunc;
pub mod ring;
pub mod sequences;
pub mod transforms;

pub use closed_form::{binet_closed, binet_float, lucas_u, paper_binet_verbatim, QuadChar};
pub use error::{Error, Result, RingError};
pub use genfunc::{gf_expand, gf_from_rec, paper_gf_verbatim, RationalGF, XPoly};
pub use ring::{poly_eval, ExactInt, KPoly, Mode, Ring, RingElem};
pub use sequences::{
    f_from_m, k_fib_spec, m_from_f, modified_k_fib_spec, term_fast, terms, Order2Rec, Terms,
};
pub use transforms::{
    binomial_coeff, transform_direct, transform_rec_spec, DirectSums, TransformKind,
};
