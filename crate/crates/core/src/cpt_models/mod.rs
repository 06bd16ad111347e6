//! The CPT groups of the Dirac field, the electromagnetic potential, the Dirac equation
//! and QED, with their irreps, reference fixtures and a verifier against them.

pub mod fixtures;
mod groups;
mod irreps;
mod labels;
mod verify;

pub use groups::{
    build_c4_x_z2, build_d4, build_d4_action, build_d4_x_z2, build_g_a, build_g_psi_eq,
    build_g_psi_hat, build_qed_group, build_quaternion, build_z2, build_z2_cubed, build_z2_signs,
    cpt_word_group, derive_g_a_from_field_action, named_cpt_labels, named_group, printed_g_a_map,
    CptGroup, GPsiEq, GPsiHat, Qed, GA, GROUP_IDS,
};
pub use irreps::{
    constructive_table, irreps_g_a, irreps_g_psi_eq, irreps_g_psi_hat, irreps_q, irreps_qed,
    named_constructive_table, named_irreps, NamedIrrep, CONSTRUCTIVE_IDS,
};
pub use labels::{CptLabel, CptRelations, CptToken, CptWord, FieldTransform};
pub use verify::{verify_paper, DiscrepancyReport, Finding, Verdict};
