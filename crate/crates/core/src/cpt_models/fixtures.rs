//! Reference tables and maps, transcribed as printed, with the known print defects.
//!
//! Scalars are written as exact values (`-1`, `2i`); matrices row by row (`0,i;i,0`).
//! A bare `-` is kept where the source prints a lone minus glyph.

/// A character table over conjugacy classes.
#[derive(Clone, Copy, Debug)]
pub struct CharTableFixture {
    pub id: &'static str,
    pub group: &'static str,
    /// Class representative, in the labelling used by the registry group.
    pub class_labels: &'static [&'static str],
    pub class_sizes: &'static [usize],
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

/// A table of representation matrices per group element.
#[derive(Clone, Copy, Debug)]
pub struct IrrepTableFixture {
    pub id: &'static str,
    pub group: &'static str,
    /// `(CPT label, structural label)` per column; structural is empty when not printed.
    pub columns: &'static [(&'static str, &'static str)],
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

/// A printed element map `source label ↦ target label`.
#[derive(Clone, Copy, Debug)]
pub struct MapFixture {
    pub id: &'static str,
    pub pairs: &'static [(&'static str, &'static str)],
}

/// A known defect in the printed reference, with the value forced by the mathematics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Defect {
    pub id: &'static str,
    /// Fixture id the defect lives in, or the id of a counting statement.
    pub fixture: &'static str,
    pub row: &'static str,
    pub columns: &'static [&'static str],
    pub printed: &'static str,
    pub corrected: &'static str,
    pub derivation: &'static str,
}

pub const Q_CHARACTERS: CharTableFixture = CharTableFixture {
    id: "q-characters",
    group: "Q",
    class_labels: &["1", "-1", "ι", "γ", "κ"],
    class_sizes: &[1, 1, 2, 2, 2],
    rows: &[
        ("χ1", &["1", "1", "1", "1", "1"]),
        ("χ2", &["1", "1", "1", "-1", "-1"]),
        ("χ3", &["1", "1", "-1", "1", "-1"]),
        ("χ4", &["1", "1", "-1", "-1", "1"]),
        ("χ5", &["2", "-2", "0", "0", "0"]),
    ],
};

/// The two-dimensional irrep of Q, pinned on the generators ι and γ.
pub const Q_TWO_DIM_IOTA: &str = "i,0;0,-i";
pub const Q_TWO_DIM_GAMMA: &str = "0,1;-1,0";
pub const Q_TWO_DIM_KAPPA: &str = "0,i;i,0";

pub const G_PSI_HAT_ISOMORPHISM: MapFixture = MapFixture {
    id: "g-psi-hat-isomorphism",
    pairs: &[
        ("Î", "(1,1)"),
        ("-Î", "(-1,1)"),
        ("Ĉ", "(1,-1)"),
        ("-Ĉ", "(-1,-1)"),
        ("P̂", "(ι,1)"),
        ("-P̂", "(-ι,1)"),
        ("T̂", "(γ,1)"),
        ("-T̂", "(-γ,1)"),
        ("Ĉ*P̂", "(ι,-1)"),
        ("-Ĉ*P̂", "(-ι,-1)"),
        ("Ĉ*T̂", "(γ,-1)"),
        ("-Ĉ*T̂", "(-γ,-1)"),
        ("P̂*T̂", "(κ,1)"),
        ("-P̂*T̂", "(-κ,1)"),
        ("Θ̂", "(κ,-1)"),
        ("-Θ̂", "(-κ,-1)"),
    ],
};

const G_PSI_HAT_COLUMNS: &[(&str, &str)] = &[
    ("Î", "(1,e)"),
    ("Ĉ", "(1,a)"),
    ("-Î", "(-1,e)"),
    ("-Ĉ", "(-1,a)"),
    ("P̂", "(ι,e)"),
    ("Ĉ*P̂", "(ι,a)"),
    ("-P̂", "(-ι,e)"),
    ("-Ĉ*P̂", "(-ι,a)"),
    ("T̂", "(γ,e)"),
    ("Ĉ*T̂", "(γ,a)"),
    ("-T̂", "(-γ,e)"),
    ("-Ĉ*T̂", "(-γ,a)"),
    ("P̂*T̂", "(κ,e)"),
    ("Θ̂", "(κ,a)"),
    ("-P̂*T̂", "(-κ,e)"),
    ("-Θ̂", "(-κ,a)"),
];

pub const G_PSI_HAT_IRREPS: IrrepTableFixture = IrrepTableFixture {
    id: "g-psi-hat-irreps",
    group: "G_psi_hat",
    columns: G_PSI_HAT_COLUMNS,
    rows: &[
        ("φ1", &["1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]),
        ("φ2", &["1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"]),
        ("φ3", &["1", "1", "1", "1", "1", "1", "1", "1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "-1"]),
        ("φ4", &["1", "-1", "1", "-1", "1", "-1", "1", "-1", "-1", "1", "-1", "1", "-1", "1", "-1", "1"]),
        ("φ5", &["1", "1", "1", "1", "-1", "-1", "-1", "-1", "1", "1", "1", "1", "-1", "-1", "-1", "-1"]),
        ("φ6", &["1", "-1", "1", "-1", "-1", "1", "-1", "1", "1", "-1", "1", "-1", "-1", "1", "-1", "1"]),
        ("φ7", &["1", "1", "1", "1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "1", "1", "1", "1"]),
        ("φ8", &["1", "-1", "1", "-1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "1", "-1", "1", "-1"]),
        (
            "φ9",
            &[
                "1,0;0,1", "1,0;0,1", "-1,0;0,-1", "-1,0;0,-1", "i,0;0,-i", "i,0;0,-i", "-i,0;0,i",
                "-i,0;0,i", "0,1;-1,0", "0,1;-1,0", "0,-1;1,0", "0,-1;1,0", "0,i;i,0", "0,i;i,0",
                "0,-i;-i,0", "0,-i;-i,0",
            ],
        ),
        (
            "φ10",
            &[
                "1,0;0,1", "-1,0;0,-1", "-1,0;0,-1", "1,0;0,1", "i,0;0,-i", "-i,0;0,i", "-i,0;0,i",
                "i,0;0,-i", "0,1;-1,0", "0,-1;1,0", "0,-1;1,0", "0,1;-1,0", "0,i;i,0", "0,-i;-i,0",
                "0,-i;-i,0", "0,i;i,0",
            ],
        ),
    ],
};

pub const G_PSI_HAT_CHARACTERS: CharTableFixture = CharTableFixture {
    id: "g-psi-hat-characters",
    group: "G_psi_hat",
    class_labels: &["(1,e)", "(1,a)", "(-1,e)", "(-1,a)", "(ι,e)", "(ι,a)", "(γ,e)", "(γ,a)", "(κ,e)", "(κ,a)"],
    class_sizes: &[1, 1, 1, 1, 2, 2, 2, 2, 2, 2],
    rows: &[
        ("λ1", &["1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]),
        ("λ2", &["1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"]),
        ("λ3", &["1", "1", "1", "1", "1", "1", "-1", "-1", "-1", "-1"]),
        ("λ4", &["1", "-1", "1", "-1", "1", "-1", "-1", "1", "-1", "1"]),
        ("λ5", &["1", "1", "1", "1", "-1", "-1", "1", "1", "-1", "-1"]),
        ("λ6", &["1", "-1", "1", "-1", "-1", "1", "1", "-1", "-1", "1"]),
        ("λ7", &["1", "1", "1", "1", "-1", "-1", "-1", "-1", "1", "1"]),
        ("λ8", &["1", "-1", "1", "-1", "-1", "1", "-1", "1", "1", "-1"]),
        ("λ9", &["2", "2", "-2", "-2", "0", "0", "0", "0", "0", "0"]),
        ("λ10", &["2", "-2", "-2", "2", "0", "0", "0", "0", "0", "0"]),
    ],
};

/// Classes of Q×Z₂ as printed: CPT label of the class and its members.
pub const G_PSI_HAT_CLASSES: &[(&str, &[&str])] = &[
    ("Î", &["(1,e)"]),
    ("Ĉ", &["(1,a)"]),
    ("-Î", &["(-1,e)"]),
    ("-Ĉ", &["(-1,a)"]),
    ("P̂", &["(ι,e)", "(-ι,e)"]),
    ("Ĉ*P̂", &["(ι,a)", "(-ι,a)"]),
    ("T̂", &["(γ,e)", "(-γ,e)"]),
    ("Ĉ*T̂", &["(γ,a)", "(-γ,a)"]),
    ("P̂*T̂", &["(κ,e)", "(-κ,e)"]),
    ("Θ̂", &["(κ,a)", "(-κ,a)"]),
];

pub const G_A_ISOMORPHISM: MapFixture = MapFixture {
    id: "g-a-isomorphism",
    pairs: &[
        ("Î", "(e1,e2,e3)"),
        ("Ĉ", "(a1,e2,e3)"),
        ("P̂", "(e1,a2,e3)"),
        ("T̂", "(e1,a2,a3)"),
        ("P̂*T̂", "(e1,a2,a3)"),
        ("Ĉ*P̂", "(a1,a2,e3)"),
        ("Ĉ*T̂", "(a1,e2,a3)"),
        ("Θ̂", "(a1,a2,a3)"),
    ],
};

pub const G_A_IRREPS: IrrepTableFixture = IrrepTableFixture {
    id: "g-a-irreps",
    group: "G_A",
    columns: &[
        ("Î", "(e1,e2,e3)"),
        ("Ĉ", "(a1,e2,e3)"),
        ("P̂", "(e1,a2,e3)"),
        ("T̂", "(e1,e2,a3)"),
        ("P̂*T̂", "(e1,a2,a3)"),
        ("Ĉ*P̂", "(a1,a2,e3)"),
        ("Ĉ*T̂", "(a1,e2,a3)"),
        ("Θ̂", "(a1,a2,a3)"),
    ],
    rows: &[
        ("Φ1", &["1", "1", "1", "1", "1", "1", "1", "1"]),
        ("Φ2", &["1", "-1", "1", "1", "1", "-1", "-1", "-1"]),
        ("Φ3", &["1", "1", "-1", "1", "-1", "-1", "1", "-1"]),
        ("Φ4", &["1", "1", "1", "-1", "-1", "1", "-1", "-1"]),
        ("Φ5", &["1", "-1", "-1", "1", "-1", "1", "-1", "1"]),
        ("Φ6", &["1", "-1", "1", "-1", "-1", "-1", "1", "1"]),
        ("Φ7", &["1", "1", "-1", "-1", "1", "-1", "-1", "1"]),
        ("Φ8", &["1", "-1", "-1", "-1", "1", "1", "1", "-1"]),
    ],
};

/// Index triple `ijk` of each Φ row: the row is `ψ_i ⊗ ψ_j ⊗ ψ_k`.
pub const G_A_ROW_INDICES: &[[u8; 3]] =
    &[[1, 1, 1], [2, 1, 1], [1, 2, 1], [1, 1, 2], [2, 2, 1], [2, 1, 2], [1, 2, 2], [2, 2, 2]];

/// D₄ as printed, class by class.
pub const D4_CLASSES: &[&[&str]] =
    &[&["I"], &["(1234)", "(1432)"], &["(13)(24)"], &["(12)(34)", "(14)(23)"], &["(24)", "(13)"]];

/// `λ(−1)` on D₄.
pub const D4_ACTION: MapFixture = MapFixture {
    id: "d4-action",
    pairs: &[
        ("I", "I"),
        ("(1234)", "(1234)"),
        ("(24)", "(13)"),
        ("(13)", "(24)"),
        ("(12)(34)", "(14)(23)"),
        ("(14)(23)", "(12)(34)"),
        ("(13)(24)", "(13)(24)"),
        ("(1432)", "(1432)"),
    ],
};

pub const D4_RELABELING: MapFixture = MapFixture {
    id: "d4-relabeling",
    pairs: &[
        ("I", "I"),
        ("(1234)", "P"),
        ("(1432)", "-P"),
        ("(13)(24)", "-I"),
        ("(12)(34)", "Θ"),
        ("(14)(23)", "-Θ"),
        ("(24)", "-CT"),
        ("(13)", "CT"),
    ],
};

/// CPT label ↦ `(D₄ element by CPT name, Z₂ sign)`.
pub const G_PSI_EQ_ISOMORPHISM: MapFixture = MapFixture {
    id: "g-psi-eq-isomorphism",
    pairs: &[
        ("I", "(I,1)"),
        ("-I", "(-I,1)"),
        ("C", "(-Θ,-1)"),
        ("-C", "(Θ,-1)"),
        ("P", "(P,1)"),
        ("-P", "(-P,1)"),
        ("T", "(P,-1)"),
        ("-T", "(-P,-1)"),
        ("CP", "(CT,-1)"),
        ("-CP", "(-CT,-1)"),
        ("CT", "(CT,1)"),
        ("-CT", "(-CT,1)"),
        ("PT", "(-I,-1)"),
        ("-PT", "(I,-1)"),
        ("Θ", "(Θ,1)"),
        ("-Θ", "(-Θ,1)"),
    ],
};

pub const G_PSI_EQ_CLASSES: &[&[&str]] = &[
    &["I"],
    &["-I"],
    &["C", "-C"],
    &["T"],
    &["-T"],
    &["P", "-P"],
    &["CP", "-CP"],
    &["CT", "-CT"],
    &["PT", "-PT"],
    &["Θ", "-Θ"],
];

/// Nontrivial cosets of the three index-2 subgroups, as printed.
pub const G_PSI_EQ_QUOTIENTS: &[(&str, &[&str])] = &[
    ("D4", &["C", "T", "CP", "PT", "-C", "-T", "-CP", "-PT"]),
    ("C4xZ2", &["C", "CP", "CT", "Θ", "-C", "-CP", "-CT", "-Θ"]),
    ("Q", &["T", "CT", "PT", "Θ", "-T", "-CT", "-PT", "-Θ"]),
];

/// The two-dimensional irrep of D₄ in CPT names.
pub const D4_TWO_DIM: &[(&str, &str)] = &[
    ("I", "1,0;0,1"),
    ("-I", "-1,0;0,-1"),
    ("P", "0,-1;1,0"),
    ("-P", "0,1;-1,0"),
    ("Θ", "-1,0;0,1"),
    ("-Θ", "1,0;0,-1"),
    ("-CT", "0,1;1,0"),
    ("CT", "0,-1;-1,0"),
];

/// The two choices for the image of C that complete the D₄ irrep.
pub const G_PSI_EQ_C_CHOICES: &[(&str, &str)] = &[("φ9", "0,i;i,0"), ("φ10", "0,-i;-i,0")];

/// Images of T, CP and PT that follow from each choice of C.
pub const G_PSI_EQ_DERIVED: &[(&str, &[(&str, &str)])] = &[
    ("φ9", &[("T", "i,0;0,i"), ("CP", "i,0;0,-i"), ("PT", "0,-i;i,0")]),
    ("φ10", &[("T", "-i,0;0,-i"), ("CP", "-i,0;0,i"), ("PT", "0,i;-i,0")]),
];

pub const G_PSI_EQ_IRREPS: IrrepTableFixture = IrrepTableFixture {
    id: "g-psi-eq-irreps",
    group: "G_psi_eq",
    columns: &[
        ("I", ""),
        ("C", ""),
        ("-I", ""),
        ("-C", ""),
        ("P", ""),
        ("CP", ""),
        ("-P", ""),
        ("-CP", ""),
        ("T", ""),
        ("CT", ""),
        ("-T", ""),
        ("-CT", ""),
        ("PT", ""),
        ("Θ", ""),
        ("-PT", ""),
        ("-Θ", ""),
    ],
    rows: &[
        ("φ1", &["1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]),
        ("φ2", &["1", "-1", "1", "-1", "1", "-1", "1", "-1", "-1", "1", "-1", "1", "-1", "1", "-1", "1"]),
        ("φ3", &["1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"]),
        ("φ4", &["1", "1", "1", "1", "1", "1", "1", "1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "-1"]),
        ("φ5", &["1", "-1", "1", "-1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "1", "-1", "1", "-1"]),
        ("φ6", &["1", "-1", "1", "-1", "-1", "1", "-1", "1", "1", "-1", "1", "-1", "-1", "1", "-1", "1"]),
        ("φ7", &["1", "1", "1", "1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "-1", "1", "1", "1", "1"]),
        ("φ8", &["1", "-", "1", "-", "-1", "-1", "-1", "-1", "1", "1", "1", "1", "-1", "-1", "-1", "-1"]),
        (
            "φ9",
            &[
                "1,0;0,1", "0,i;i,0", "-1,0;0,-1", "0,-i;-i,0", "0,-1;1,0", "i,0;0,-i", "0,1;-1,0",
                "-i,0;0,i", "i,0;0,i", "0,-1;-1,0", "-i,0;0,-i", "0,1;1,0", "0,-i;i,0", "-1,0;0,1",
                "0,i;-i,0", "1,0;0,-1",
            ],
        ),
        (
            "φ10",
            &[
                "1,0;0,1", "0,-i;-i,0", "-1,0;0,-1", "0,i;i,0", "0,-1;1,0", "-i,0;0,i", "0,1;-1,0",
                "i,0;0,-i", "-i,0;0,-i", "0,-1;-1,0", "i,0;0,i", "0,-1;-1,0", "0,i;-i,0", "-1,0;0,1",
                "0,-i;i,0", "1,0;0,-1",
            ],
        ),
    ],
};

pub const G_PSI_EQ_CHARACTERS: CharTableFixture = CharTableFixture {
    id: "g-psi-eq-characters",
    group: "G_psi_eq",
    class_labels: &["I", "-I", "C", "T", "-T", "P", "CP", "CT", "PT", "Θ"],
    class_sizes: &[1, 1, 2, 1, 1, 2, 2, 2, 2, 2],
    rows: &[
        ("χ1", &["1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]),
        ("χ2", &["1", "1", "-1", "-1", "-1", "1", "-1", "1", "-1", "1"]),
        ("χ3", &["1", "1", "-1", "1", "1", "1", "-1", "-1", "1", "-1"]),
        ("χ4", &["1", "1", "1", "-1", "-1", "1", "1", "-1", "-1", "-1"]),
        ("χ5", &["1", "1", "-1", "-1", "-1", "-1", "1", "1", "1", "-1"]),
        ("χ6", &["1", "1", "-1", "1", "1", "-1", "1", "-1", "-1", "1"]),
        ("χ7", &["1", "1", "1", "-1", "-1", "-1", "-1", "-1", "1", "1"]),
        ("χ8", &["1", "1", "1", "1", "1", "-1", "-1", "1", "-1", "-1"]),
        ("χ9", &["2", "-2", "0", "2i", "-2i", "0", "0", "0", "0", "0"]),
        ("χ10", &["2", "-2", "0", "-2i", "2i", "0", "0", "0", "0", "0"]),
    ],
};

/// One-dimensional coincidences: row of the Q×Z₂ family = row of the D₄⋊Z₂ family.
pub const ONE_DIM_IDENTIFICATIONS: &[(&str, &str)] = &[
    ("φ1", "φ1"),
    ("φ2", "φ3"),
    ("φ3", "φ4"),
    ("φ4", "φ2"),
    ("φ5", "φ8"),
    ("φ6", "φ6"),
    ("φ7", "φ7"),
    ("φ8", "φ5"),
];

/// Order-2 subgroups of D₄⋊Z₂ listed in the reference.
pub const G_PSI_EQ_LISTED_Z2: &[[&str; 2]] = &[["I", "CT"], ["I", "PT"], ["I", "Θ"]];

/// The order-2 subgroup of Q×Z₂ named in the reference, and the count it states.
pub const G_PSI_HAT_STATED_Z2: [&str; 2] = ["Î", "Ĉ"];
pub const G_PSI_HAT_STATED_Z2_COUNT: usize = 1;

/// Sum of squared irrep dimensions stated for D₄⋊Z₂.
pub const G_PSI_EQ_STATED_DIM_SUM: usize = 10;

/// Counts stated for the order-128 group.
pub const QED_ORDER: usize = 128;
pub const QED_IRREPS: usize = 80;
pub const QED_ONE_DIM: usize = 64;
pub const QED_TWO_DIM: usize = 16;

pub const DEFECTS: &[Defect] = &[
    Defect {
        id: "g-a-isomorphism/T̂",
        fixture: "g-a-isomorphism",
        row: "T̂",
        columns: &[],
        printed: "(e1,a2,a3)",
        corrected: "(e1,e2,a3)",
        derivation: "T̂ and P̂*T̂ share an image, so the map is not injective; the homomorphism law \
                     P̂*T̂ = P̂·T̂ forces T̂ ↦ (e1,e2,a3), which is also the T̂ column header of the Z₂³ irrep table",
    },
    Defect {
        id: "g-psi-eq-irreps/φ8/C",
        fixture: "g-psi-eq-irreps",
        row: "φ8",
        columns: &["C", "-C"],
        printed: "-",
        corrected: "1",
        derivation: "χ8 equals 1 on the class 2[C] of the character table, and the Q×Z₂ row φ5 \
                     identified with φ8 takes the value 1 on Ĉ and -Ĉ",
    },
    Defect {
        id: "g-psi-eq-irreps/φ10/-CT",
        fixture: "g-psi-eq-irreps",
        row: "φ10",
        columns: &["-CT"],
        printed: "0,-1;-1,0",
        corrected: "0,1;1,0",
        derivation: "ρ(-CT) = ρ(-I)·ρ(CT) = -(-σ1) = σ1; the printed entry repeats the CT matrix",
    },
    Defect {
        id: "g-psi-eq-dimension-sum",
        fixture: "g-psi-eq-dimension-sum",
        row: "",
        columns: &[],
        printed: "10",
        corrected: "16",
        derivation: "the squared irrep dimensions sum to the group order, 8·1 + 2·4 = 16; \
                     10 is the number of classes",
    },
    Defect {
        id: "g-psi-hat-z2-count",
        fixture: "g-psi-hat-z2-count",
        row: "",
        columns: &[],
        printed: "1",
        corrected: "3",
        derivation: "Q×Z₂ has three involutions, -Î, Ĉ and -Ĉ, each generating its own subgroup of order 2",
    },
];

/// Every fixture id, in report order.
pub const FIXTURE_ORDER: &[&str] = &[
    "q-characters",
    "g-psi-hat-isomorphism",
    "g-psi-hat-irreps",
    "g-psi-hat-characters",
    "g-psi-hat-classes",
    "g-a-isomorphism",
    "g-a-irreps",
    "g-a-field-action",
    "qed-counts",
    "d4h-coincidence",
    "d4-classes",
    "d4-action",
    "d4-relabeling",
    "g-psi-eq-isomorphism",
    "g-psi-eq-classes",
    "g-psi-eq-quotients",
    "g-psi-eq-dimension-sum",
    "g-psi-eq-two-dim",
    "g-psi-eq-irreps",
    "g-psi-eq-characters",
    "one-dim-identifications",
    "two-dim-inequivalence",
    "g-psi-hat-z2-count",
    "z2-cubed-embeddings",
    "g-psi-eq-z2-subgroups",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        for t in [Q_CHARACTERS, G_PSI_HAT_CHARACTERS, G_PSI_EQ_CHARACTERS] {
            assert_eq!(t.class_labels.len(), t.class_sizes.len());
            assert_eq!(t.rows.len(), t.class_labels.len(), "{}", t.id);
            assert!(t.rows.iter().all(|(_, r)| r.len() == t.class_labels.len()));
        }
        for t in [G_PSI_HAT_IRREPS, G_A_IRREPS, G_PSI_EQ_IRREPS] {
            assert!(t.rows.iter().all(|(_, r)| r.len() == t.columns.len()), "{}", t.id);
        }
        for d in DEFECTS {
            assert!(!d.derivation.is_empty());
            assert!(FIXTURE_ORDER.contains(&d.fixture), "{}", d.id);
        }
    }
}
