//! Crystals `B(lambda)` as components of tensor products of level-one Fock
//! crystals, truncated by a budget on lowering coefficients.
//!
//! `B(lambda)` for `lambda = sum w_i Lambda_i` is the component of the
//! all-empty word in `B(Lambda_{i_1}) (x) ... (x) B(Lambda_{i_L})`, where the
//! charges `i_1 <= ... <= i_L` list residue `i` exactly `w_i` times. Lowering
//! along any path only increases lowering coefficients, so the budgeted graph
//! is exactly the set of nodes whose lowering vector fits the budget.

mod graph;
mod node;
mod ops;

pub use graph::{
    generate_crystal, CrystalGraph, Edge, GenerationConfig, GraphDocument, NodeDocument,
    DEFAULT_NODE_CAP,
};
pub use node::{canonical_charges, tensor_eps_phi, CrystalNode, TensorEpsPhi};
pub use ops::{
    levi_branching, levi_branching_with, tensor_highest_weights, tensor_highest_weights_from,
    tensor_highest_weights_with, tensor_splittings_with, tensor_weight_multiplicity,
    tensor_weight_multiplicity_with, weight_multiplicity, weight_multiplicity_with, BranchTable,
    Splitting,
};
pub(crate) use ops::lowering_of;
