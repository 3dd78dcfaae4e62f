//! The two complexity constructions: the reduction `R` from fixed-point-free
//! involutions to fixed-edge-free ones, and the equivalence of PAR with
//! graph isomorphism.

mod par;
mod r;

pub use par::{
    gi_to_par, par_via_iso, recover_isomorphism, GiToPar, ParError, ParInstance, Transform,
};
pub use r::{
    lift_involution, reduce_r, reduce_r_non_isolated, reduction_correctness_check, ReductionCheck,
};
