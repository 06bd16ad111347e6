//! Representations, characters and character tables over cyclotomic fields.

mod character;
mod completion;
mod dixon;
mod matching;
mod render;
mod rep;

pub use character::{
    are_equivalent, char_inner_product, character_of, check_orthogonality, decompose_character,
    is_irreducible, value_cmp, Character, CharacterTable, Provenance,
};
pub use completion::{complete_by_orthogonality, sign_characters, PartialTable};
pub use dixon::{character_table, dixon_prime};
pub use matching::{tables_match, value_tables_match, TableMatch, ValueTable};
pub use render::{class_header, latex_label};
pub use rep::{
    hom_violations, intertwiners, pullback_rep, restrict_rep, tensor_product_rep, Representation,
};
