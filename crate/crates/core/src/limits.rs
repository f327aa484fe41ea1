//! Degree bounds shared by the table caches and the enumerators.

use crate::error::{Error, Result};

/// Default cap on |λ| for Jack tables, transition matrices and matching
/// enumeration.
pub const DEFAULT_MAX_N: usize = 8;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "JACKCC_MAX_N";

pub fn max_degree() -> usize {
    std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

pub fn check_degree(n: usize) -> Result<()> {
    let bound = max_degree();
    if n > bound {
        return Err(Error::DegreeTooLarge { n, bound });
    }
    Ok(())
}
