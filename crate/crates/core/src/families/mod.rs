//! Printed closed forms and the claim registry that checks them.

pub mod claim;
pub mod formulas;
pub mod registry;

pub use claim::{Claim, ClaimOutcome, ClaimValue, Point, Source, Truth, Verdict, Witness};
