//! Deterministic dense linear algebra and randomness primitives.

pub mod conv;
pub mod matrix;
pub mod power;
pub mod rng;
pub mod solve;

pub use conv::conv1d_symmetric;
pub use matrix::{matmul, DenseMatrix};
pub use power::{power_iteration, power_iteration_matrix, PowerIterationResult};
pub use rng::{Purpose, SeededRng, StreamKey};
pub use solve::solve_spd;
