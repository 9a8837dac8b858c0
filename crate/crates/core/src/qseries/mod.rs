//! Truncated q-expansions with exact rational coefficients.

mod eval;
mod expansion;
mod power;
mod products;

pub use expansion::QExpansion;
pub use power::RationalPower;
pub use products::{
    eta_power, euler_product, hardy_ramanujan, ln_hardy_ramanujan, partition_numbers, pentagonal_series,
    restricted_partitions,
};
