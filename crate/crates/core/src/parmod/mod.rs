//! Partial representations (`K_par G`-modules) and partial actions on free modules.

mod action;
mod rep;
mod set_action;
pub mod standard;

pub use action::{
    action_coinvariant_relators, action_coinvariants, coinvariants, induced_partial_action, rep_coinvariant_relators,
    validate_partial_action, ActionReport, PartialActionModule,
};
pub use rep::{validate_partial_rep, ParRepModule, Side};
pub use set_action::{linearize_set_action, SetPartialAction};
