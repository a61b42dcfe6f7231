//! Named graphs and families, their membership deciders, the constructive
//! dual homomorphisms, and the pair transformations.

mod descriptor;
mod hits;
pub mod named;
mod phi;
mod sparse;
mod transform;
mod tree;

pub use descriptor::{FamilyDescriptor, FamilyWitness, Member, Truncation};
pub use hits::{family_hits, TreeFixpoint};
pub use named::{
    gen_d, gen_g1, gen_g2, gen_p, gen_q, path_power_pattern, path_power_word, q_prime_word, q_word,
    transitive_tournament,
};
pub use phi::{levels, phi_to_dual, try_phi_to_dual, type_pattern, vertex_types, DualKind, DualOutcome};
pub use sparse::{on_cycle, sparse_witness_y, SparseWitness};
pub use transform::{add_universal_sink, append_pair, append_sinks, combine_pairs, combined_members, CombinedMembers};
pub use tree::{gadget, gadget_graph, Attachment, BinaryTree, Gadget, GadgetPath, TreeParams};
