//! Exact computation of Jack connection coefficients.
//!
//! Three independent routes produce the coefficients a^λ_{(n)(n)}(α): the
//! Cauchy sum over Jack characters ([`connection::a_cauchy`]), the linear
//! recurrence in λ ([`connection::a_nn_recurrence`]), and the weight
//! statistic on good matchings of the λ-graph
//! ([`matchings::weight_distribution`]). All arithmetic is exact in ℚ(α).

pub mod algebra;
pub mod connection;
pub mod error;
pub mod jack;
pub mod limits;
pub mod linalg;
pub mod matchings;
pub mod partition;
pub mod psum;
pub mod report;

pub use error::{Error, Result};
pub use partition::{generate_partitions, Partition};
