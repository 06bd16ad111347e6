use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unsigned CPT word in normal order `C^c P^p T^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CptToken {
    I,
    C,
    P,
    T,
    CP,
    CT,
    PT,
    Theta,
}

impl CptToken {
    pub const ALL: [CptToken; 8] = [
        CptToken::I,
        CptToken::C,
        CptToken::P,
        CptToken::T,
        CptToken::CP,
        CptToken::CT,
        CptToken::PT,
        CptToken::Theta,
    ];

    /// `(c, p, t)` exponent bits.
    pub fn bits(self) -> (bool, bool, bool) {
        use CptToken::*;
        match self {
            I => (false, false, false),
            C => (true, false, false),
            P => (false, true, false),
            T => (false, false, true),
            CP => (true, true, false),
            CT => (true, false, true),
            PT => (false, true, true),
            Theta => (true, true, true),
        }
    }

    pub fn from_bits(c: bool, p: bool, t: bool) -> Self {
        *Self::ALL.iter().find(|k| k.bits() == (c, p, t)).unwrap()
    }

    fn plain(self) -> &'static str {
        use CptToken::*;
        match self {
            I => "I",
            C => "C",
            P => "P",
            T => "T",
            CP => "CP",
            CT => "CT",
            PT => "PT",
            Theta => "Θ",
        }
    }

    fn hatted(self) -> &'static str {
        use CptToken::*;
        match self {
            I => "Î",
            C => "Ĉ",
            P => "P̂",
            T => "T̂",
            CP => "Ĉ*P̂",
            CT => "Ĉ*T̂",
            PT => "P̂*T̂",
            Theta => "Θ̂",
        }
    }
}

/// A signed CPT label. The hat flag marks operator groups (as opposed to the wave-equation group).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CptLabel {
    pub token: CptToken,
    pub negative: bool,
    pub hat: bool,
}

impl CptLabel {
    pub fn new(token: CptToken, negative: bool, hat: bool) -> Self {
        CptLabel { token, negative, hat }
    }

    /// Same token and sign, ignoring the hat flag.
    pub fn corresponds(&self, other: &CptLabel) -> bool {
        self.token == other.token && self.negative == other.negative
    }

    pub fn with_hat(self, hat: bool) -> Self {
        CptLabel { hat, ..self }
    }
}

impl fmt::Display for CptLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(if self.hat { self.token.hatted() } else { self.token.plain() })
    }
}

impl FromStr for CptLabel {
    type Err = Error;

    /// Accepts `-CT`, `−Ĉ*T̂`, `Theta`, `-Θ̂` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (negative, rest) = match s.strip_prefix('-').or_else(|| s.strip_prefix('−')) {
            Some(r) => (true, r),
            None => (false, s),
        };
        let hat = rest.contains('\u{302}') || rest.contains(['Î', 'Ĉ']);
        let core: String = rest
            .replace("Theta", "Θ")
            .chars()
            .filter_map(|c| match c {
                '\u{302}' | '*' | ' ' => None,
                'Î' => Some('I'),
                'Ĉ' => Some('C'),
                other => Some(other),
            })
            .collect();
        let token = match core.as_str() {
            "I" | "1" => CptToken::I,
            "C" => CptToken::C,
            "P" => CptToken::P,
            "T" => CptToken::T,
            "CP" => CptToken::CP,
            "CT" => CptToken::CT,
            "PT" => CptToken::PT,
            "Θ" | "CPT" => CptToken::Theta,
            _ => return Err(Error::Parse(s.to_string())),
        };
        Ok(CptLabel { token, negative, hat })
    }
}

/// Sign conventions fixing a CPT group: squares of the generators and commutation signs.
///
/// `comm_xy = -1` means `YX = -XY`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CptRelations {
    pub sq_c: i8,
    pub sq_p: i8,
    pub sq_t: i8,
    pub comm_cp: i8,
    pub comm_ct: i8,
    pub comm_pt: i8,
}

impl CptRelations {
    /// Operator group on the Dirac field: `Ĉ² = 1`, `P̂² = T̂² = −1`, `P̂T̂ = −T̂P̂`, `Ĉ` central.
    pub const DIRAC_FIELD: CptRelations =
        CptRelations { sq_c: 1, sq_p: -1, sq_t: -1, comm_cp: 1, comm_ct: 1, comm_pt: -1 };

    /// Group of the Dirac equation: `C² = P² = T² = −1`, `CP = −PC`, `T` central.
    pub const DIRAC_EQUATION: CptRelations =
        CptRelations { sq_c: -1, sq_p: -1, sq_t: -1, comm_cp: -1, comm_ct: 1, comm_pt: 1 };

    /// Operator group on the electromagnetic potential: commuting involutions.
    pub const MAXWELL_FIELD: CptRelations =
        CptRelations { sq_c: 1, sq_p: 1, sq_t: 1, comm_cp: 1, comm_ct: 1, comm_pt: 1 };
}

/// Element `±C^c P^p T^t` of a CPT group with given relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CptWord {
    pub negative: bool,
    pub token: CptToken,
}

impl CptWord {
    pub fn new(token: CptToken, negative: bool) -> Self {
        CptWord { negative, token }
    }

    /// Product in normal form: commute the right factor's letters leftwards, then square.
    pub fn mul(self, rhs: CptWord, rel: &CptRelations) -> CptWord {
        let (c1, p1, t1) = self.token.bits();
        let (c2, p2, t2) = rhs.token.bits();
        let mut sign = 1i8;
        let mut flip = |cond: bool, s: i8| {
            if cond {
                sign *= s;
            }
        };
        // C^c2 past T^t1 then P^p1
        flip(t1 && c2, rel.comm_ct);
        flip(p1 && c2, rel.comm_cp);
        flip(c1 && c2, rel.sq_c);
        // P^p2 past T^t1
        flip(t1 && p2, rel.comm_pt);
        flip(p1 && p2, rel.sq_p);
        flip(t1 && t2, rel.sq_t);
        CptWord {
            negative: self.negative ^ rhs.negative ^ (sign < 0),
            token: CptToken::from_bits(c1 ^ c2, p1 ^ p2, t1 ^ t2),
        }
    }

    pub fn label(self, hat: bool) -> CptLabel {
        CptLabel { token: self.token, negative: self.negative, hat }
    }
}

/// Action of a discrete transformation on a 4-vector field `A^μ(x, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldTransform {
    /// Overall sign flip of the field.
    pub negate: bool,
    /// Index lowered with the metric diag(1,−1,−1,−1), i.e. spatial components negated.
    pub lower_index: bool,
    pub space_flip: bool,
    pub time_flip: bool,
}

impl FieldTransform {
    pub const IDENTITY: FieldTransform =
        FieldTransform { negate: false, lower_index: false, space_flip: false, time_flip: false };
    pub const CHARGE: FieldTransform = FieldTransform { negate: true, ..Self::IDENTITY };
    pub const PARITY: FieldTransform =
        FieldTransform { lower_index: true, space_flip: true, ..Self::IDENTITY };
    pub const TIME: FieldTransform = FieldTransform { lower_index: true, time_flip: true, ..Self::IDENTITY };

    /// Composition: each bit is a parity, so composition adds them mod 2.
    pub fn compose(self, other: FieldTransform) -> FieldTransform {
        FieldTransform {
            negate: self.negate ^ other.negate,
            lower_index: self.lower_index ^ other.lower_index,
            space_flip: self.space_flip ^ other.space_flip,
            time_flip: self.time_flip ^ other.time_flip,
        }
    }
}

impl fmt::Display for FieldTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}A{}({},{})",
            if self.negate { "-" } else { "" },
            if self.lower_index { "_μ" } else { "^μ" },
            if self.space_flip { "-x" } else { "x" },
            if self.time_flip { "-t" } else { "t" },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for token in CptToken::ALL {
            for negative in [false, true] {
                for hat in [false, true] {
                    let l = CptLabel::new(token, negative, hat);
                    assert_eq!(l.to_string().parse::<CptLabel>().unwrap(), l);
                }
            }
        }
        assert_eq!("−Theta".parse::<CptLabel>().unwrap(), CptLabel::new(CptToken::Theta, true, false));
        assert!("Q".parse::<CptLabel>().is_err());
    }

    #[test]
    fn words_associate() {
        for rel in [CptRelations::DIRAC_FIELD, CptRelations::DIRAC_EQUATION, CptRelations::MAXWELL_FIELD] {
            let all: Vec<CptWord> = CptToken::ALL
                .iter()
                .flat_map(|&t| [CptWord::new(t, false), CptWord::new(t, true)])
                .collect();
            for &a in &all {
                for &b in &all {
                    for &c in &all {
                        assert_eq!(a.mul(b, &rel).mul(c, &rel), a.mul(b.mul(c, &rel), &rel));
                    }
                }
            }
        }
    }

    #[test]
    fn field_transforms() {
        let pt = FieldTransform::PARITY.compose(FieldTransform::TIME);
        assert!(!pt.lower_index && pt.space_flip && pt.time_flip && !pt.negate);
        assert_eq!(FieldTransform::CHARGE.compose(FieldTransform::CHARGE), FieldTransform::IDENTITY);
        assert_eq!(FieldTransform::PARITY.to_string(), "A_μ(-x,t)");
    }
}
