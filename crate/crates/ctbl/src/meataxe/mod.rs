//! Module-theoretic operations over finite fields: spinning up standard
//! bases, sub/factor actions, composition factors, orbit-to-permutation
//! conversion, conjugacy certification, and kernel-generator search.

mod chop;
mod conjugacy;
mod kernel;
mod module;
mod orbit;
mod perm;

pub use chop::composition_factors;
pub use kernel::kernel_generators_by_order_mismatch;
pub use conjugacy::{certify_conjugacy, classic_seed_word, evaluate_algebra_sum};
pub use module::{factor_action, rebase, standard_basis, submodule_action, GModule};
pub use orbit::orbit_and_permutation;
pub use perm::Permutation;
