//! The vector representation of U_q(gl(m|n)) and the Reshetikhin–Turaev
//! functor on slice diagrams.

mod mat;
mod qgroup;
mod rt;

pub use mat::{rank, rank_sparse, Mat};
pub use qgroup::{Gen, QGroupData};
pub use rt::{alexander_rt, eval_closed_rt, eval_tangle_rt, eval_tangle_with, RepMatrix, RtError, RtGenerators};
