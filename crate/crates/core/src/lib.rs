//! Left metacyclic codes of length `3m` over a prime field F_q.
//!
//! A left metacyclic code is a left ideal of the group algebra
//! `F_q[G_(m,3,r)]`, where `G_(m,3,r) = <x, y | x^m = 1, y^3 = 1, yx = x^r y>`.
//! The algebra splits into components `R_i = K_i[y; θ_i]/<y^3 - 1>`, one for
//! every q-cyclotomic coset modulo `m`, and every code is a direct sum of
//! left ideals chosen independently in each component.
//!
//! The crate builds that decomposition exactly and uses it to
//!
//! * list every left ideal of every component ([`skew`]),
//! * count, enumerate and assemble full-length codes with F_q generator
//!   matrices ([`code`]),
//! * compute Euclidean duals and the self-orthogonal codes,
//! * compute weight enumerators by exhaustive span enumeration,
//! * cross-check all of the above with brute-force oracles ([`oracle`]).
//!
//! ```
//! use metacyclic::{code::CodeSpace, structure::System};
//!
//! let system = System::new(14, 3, 9).unwrap();
//! let space = CodeSpace::new(&system);
//! assert_eq!(space.count_codes().to_string(), "541696");
//! ```
//!
//! The `examples/` directory has one runnable program per capability, and the
//! `metacyclic` binary exposes the same functionality on the command line.

pub mod cli;
pub mod code;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod skew;
pub mod structure;

pub use code::{CodeSpace, MetacyclicCode, WeightEnum};
pub use field::{FElem, FieldCtx};
pub use skew::{IdealDescriptor, IdealTag};
pub use structure::System;
