use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {series}{rank}")]
    InvalidCartanType { series: char, rank: usize },
    #[error("unrecognized type label `{0}`")]
    UnknownTypeLabel(String),
    #[error("root system is reducible; an irreducible one is required")]
    Reducible,
    #[error("not a permutation")]
    InvalidPermutation,
    #[error("permutation degrees disagree")]
    DegreeMismatch,
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    GroupTooLarge { order: u128, limit: u128 },
    #[error("subsystem is not of full rank")]
    NotFullRank,
    #[error("isogeny `{label}` is not available for this type")]
    InvalidIsogeny { label: String },
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("element is central in the ambient group")]
    CentralElement,
    #[error("map is not a group automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("character is not invariant under the automorphism")]
    NotExtendable,
    #[error("scenario validation failed: {0}")]
    Validation(String),
    #[error("supplied character table rejected: {0}")]
    BadCharacterTable(String),
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
