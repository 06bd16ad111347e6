//! Finite groups as explicit Cayley tables, with constructions and structural searches.

mod group;
mod hom;
mod perm;
mod products;
mod quaternion;
mod subgroups;

pub use group::{
    generate_group, order_cap, ConjugacyClass, ElementId, FiniteGroup, GroupJson,
    DEFAULT_ORDER_CAP, ORDER_CAP_ENV,
};
pub use hom::{
    embeds, invariants, is_isomorphic, verify_hom, GroupHom, GroupInvariants, HomReport,
};
pub use perm::Permutation;
pub use products::{
    direct_product, semidirect_product, ActionTable, DirectProduct, SemidirectProduct,
};
pub use quaternion::{QUnit, SignedQuaternion};
pub use subgroups::{is_normal, is_subgroup, quotient_group, subgroups_of_order};
