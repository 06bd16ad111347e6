use std::fmt;

use serde::{Deserialize, Serialize};

/// Basis unit of the quaternion group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QUnit {
    One,
    Iota,
    Gamma,
    Kappa,
}

impl QUnit {
    pub const ALL: [QUnit; 4] = [QUnit::One, QUnit::Iota, QUnit::Gamma, QUnit::Kappa];

    pub fn symbol(self) -> &'static str {
        match self {
            QUnit::One => "1",
            QUnit::Iota => "ι",
            QUnit::Gamma => "γ",
            QUnit::Kappa => "κ",
        }
    }

    /// Product of two units as `(negated, unit)`.
    fn mul(self, rhs: QUnit) -> (bool, QUnit) {
        use QUnit::*;
        match (self, rhs) {
            (One, u) | (u, One) => (false, u),
            (a, b) if a == b => (true, One),
            (Iota, Gamma) => (false, Kappa),
            (Gamma, Kappa) => (false, Iota),
            (Kappa, Iota) => (false, Gamma),
            (Gamma, Iota) => (true, Kappa),
            (Kappa, Gamma) => (true, Iota),
            (Iota, Kappa) => (true, Gamma),
            _ => unreachable!(),
        }
    }
}

/// Element `±u` of the quaternion group, `u ∈ {1, ι, γ, κ}`, with `ι² = γ² = κ² = ιγκ = −1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedQuaternion {
    pub negative: bool,
    pub unit: QUnit,
}

impl SignedQuaternion {
    pub const ONE: Self = Self::pos(QUnit::One);
    pub const MINUS_ONE: Self = Self::neg(QUnit::One);
    pub const IOTA: Self = Self::pos(QUnit::Iota);
    pub const GAMMA: Self = Self::pos(QUnit::Gamma);
    pub const KAPPA: Self = Self::pos(QUnit::Kappa);

    pub const fn pos(unit: QUnit) -> Self {
        SignedQuaternion {
            negative: false,
            unit,
        }
    }

    pub const fn neg(unit: QUnit) -> Self {
        SignedQuaternion {
            negative: true,
            unit,
        }
    }

    pub fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn all() -> Vec<Self> {
        QUnit::ALL
            .iter()
            .flat_map(|&u| [Self::pos(u), Self::neg(u)])
            .collect()
    }

    pub fn negate(self) -> Self {
        SignedQuaternion {
            negative: !self.negative,
            unit: self.unit,
        }
    }

    pub fn inverse(self) -> Self {
        if self.unit == QUnit::One {
            self
        } else {
            self.negate()
        }
    }
}

impl std::ops::Mul for SignedQuaternion {
    type Output = SignedQuaternion;
    fn mul(self, rhs: Self) -> Self {
        let (flip, unit) = self.unit.mul(rhs.unit);
        SignedQuaternion {
            negative: self.negative ^ rhs.negative ^ flip,
            unit,
        }
    }
}

impl std::ops::Neg for SignedQuaternion {
    type Output = SignedQuaternion;
    fn neg(self) -> Self {
        self.negate()
    }
}

impl fmt::Display for SignedQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(self.unit.symbol())
    }
}
