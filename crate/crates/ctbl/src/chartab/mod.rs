//! Character-table machinery: table heads, cyclotomic class functions,
//! induction and symmetrization, parametrized-map algebra, fusion and
//! power-map inference, LLL irreducible extraction, congruence completion,
//! and the central-extension table builder.

mod complete;
mod extension;
mod func;
mod fusion;
mod head;
mod induce;
mod lattice;
mod map;
mod power;
mod symm;
mod table;
mod verify;
#[cfg(test)]
pub(crate) mod test_tables;

pub use complete::complete_by_congruences;
pub use extension::{build_central_extension_table, PreimageOrders};
pub use func::{norm, scalar_product, ClassFunction};
pub use fusion::{
    consistency_refine, init_fusion, possible_class_fusions, representatives_fusions,
};
pub use head::TableHead;
pub use induce::{induced_by_fusion, induced_cyclic, CyclicInductionMode};
pub use lattice::{lll_characters, reduced, solution_int_mat};
pub use map::ClassMap;
pub use power::possible_power_maps;
pub use symm::{antisymmetric_parts, symmetrizations};
pub use table::CharacterTable;
pub use verify::{verify_orthogonality, OrthogonalityReport};
