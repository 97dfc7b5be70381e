//! Good integers and Galois duality of cyclic codes.
//!
//! The library decides membership of an integer `d` in the divisor family of
//! the sequence `a^(k*s+T) + b^(k*s+T)` (with a witness exponent), classifies
//! and counts `q^k`-cyclotomic classes of finite abelian groups by type,
//! factors `x^n - 1` over `GF(q^k)` into sigma-orbit blocks, and enumerates
//! Galois LCD and Galois self-dual cyclic codes with independent verification.
//!
//! Module map:
//! * [`arith`] — integer primitives: factorization, orders, valuations, CRT.
//! * [`good`] — the membership decision procedure and its cross-checks.
//! * [`cyclo`] — cyclotomic classes on finite abelian groups and type counts.
//! * [`gfpoly`] — finite fields `GF(p^m)`, dense polynomials, theta-reciprocals.
//! * [`codes`] — orbit factorization of `x^n - 1` and code censuses.

pub mod arith;
pub mod codes;
pub mod cyclo;
pub mod gfpoly;
pub mod good;
