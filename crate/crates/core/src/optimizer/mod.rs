//! Exact multicolor Turán numbers, integer and fractional packings, and the
//! catalog of closed-form bounds.

mod candidates;
mod catalog;
mod exact;
mod lp;
mod pack;

pub use crate::budget::SearchBudget;
pub use catalog::{best_lower, best_upper, bound_catalog, bound_catalog_with_budget, BoundRecord, BoundValidity, Direction};
pub use exact::{multicolor_turan_exact, ExactResult};
pub use lp::{fractional_packing, ratio, FractionalPacking};
pub use pack::{greedy_pack, max_packing, PackingResult};

pub(crate) use pack::max_packing_until;
