//! Combinatorics behind cuspidal character sheaves on reductive groups:
//! which Levi subgroups carry cuspidal data, how Levi subgroups of a
//! centralizer split into conjugacy classes, and the exact double-coset
//! identities expanding a characteristic function over Green symbols.
//!
//! The crate is `no_std` and only needs an allocator. Every computation is
//! exact; there is no floating point anywhere.

#![no_std]

extern crate alloc;

pub mod centralizer;
pub mod cuspidality;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lattice;
pub mod pairing;
pub mod perm;
pub mod root_system;
pub mod twisted;

pub use error::{Error, Result};
