use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("|W0| = {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u128, budget: u128 },

    #[error("hypothesis fails: (q-1) * sum_w q^l(w) vanishes for o(q) = {0}")]
    PoincareVanishes(String),

    #[error("no admissible prime p = 1 mod {modulus} below {bound} (need {needed}, found {found})")]
    NoAdmissiblePrime {
        modulus: u64,
        bound: u64,
        needed: usize,
        found: usize,
    },

    #[error("module dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("torus-class state count {states} exceeds the budget {budget}")]
    StateBudget { states: u64, budget: u64 },

    #[error("rank {rank} exceeds the Hecke multiplication cap {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("inconsistent one-dimensional assignment: {0}")]
    InconsistentAssignment(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
