//! Exact-arithmetic kernel for noncommutative symmetric functions: the
//! monomial (M), forgotten (F), and fundamental (L) bases alongside the
//! classical Ψ, S, Λ, and ribbon (R) bases, with transition matrices,
//! products, the involution ω, the duality pairing, Kostka matrices,
//! quasideterminant machinery, and an identity-verification suite.

pub mod algebra;
pub mod bases;
pub mod composition;
pub mod element;
pub mod error;
pub mod exec;
pub mod expr;
pub mod identities;
pub mod kostka;
pub mod qsym;
pub mod quasidet;
pub mod symalg;
pub mod symimage;
