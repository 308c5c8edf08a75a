//! The three truth values and the strong connective tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// `T`, `F`, or the unknown value `X`.
///
/// The derived ordering `T < F < X` is the enumeration order used for table
/// rows and witness selection. It is not the information order; see
/// [`TruthValue::approximates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruthValue {
    #[serde(rename = "T")]
    T,
    #[serde(rename = "F")]
    F,
    #[serde(rename = "x")]
    X,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::T, TruthValue::F, TruthValue::X];
    pub const DEFINITE: [TruthValue; 2] = [TruthValue::T, TruthValue::F];

    pub fn is_definite(self) -> bool {
        self != TruthValue::X
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::T
        } else {
            TruthValue::F
        }
    }

    pub fn to_bool(self) -> Option<bool> {
        match self {
            TruthValue::T => Some(true),
            TruthValue::F => Some(false),
            TruthValue::X => None,
        }
    }

    /// Information order: `X ⊑ T`, `X ⊑ F`, and `v ⊑ v`.
    pub fn approximates(self, other: TruthValue) -> bool {
        self == other || self == TruthValue::X
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        use TruthValue::*;
        match self {
            T => F,
            X => X,
            F => T,
        }
    }

    pub fn and(self, rhs: Self) -> Self {
        use TruthValue::*;
        match (self, rhs) {
            (F, _) | (_, F) => F,
            (T, T) => T,
            _ => X,
        }
    }

    pub fn or(self, rhs: Self) -> Self {
        use TruthValue::*;
        match (self, rhs) {
            (T, _) | (_, T) => T,
            (F, F) => F,
            _ => X,
        }
    }

    pub fn implies(self, rhs: Self) -> Self {
        use TruthValue::*;
        match (self, rhs) {
            (F, _) | (_, T) => T,
            (T, F) => F,
            _ => X,
        }
    }

    /// Swaps `T` and `F`, keeping `X`.
    pub fn dual(self) -> Self {
        self.not()
    }
}

/// Renders `T`, `F`, and lowercase `x`.
impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::T => "T",
            TruthValue::F => "F",
            TruthValue::X => "x",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidTruthValue(pub String);

impl fmt::Display for InvalidTruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid truth value `{}` (expected T, F or X)", self.0)
    }
}

impl std::error::Error for InvalidTruthValue {}

impl FromStr for TruthValue {
    type Err = InvalidTruthValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "t" => Ok(TruthValue::T),
            "F" | "f" => Ok(TruthValue::F),
            "X" | "x" => Ok(TruthValue::X),
            other => Err(InvalidTruthValue(other.to_owned())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::TruthValue::{self, *};

    #[test]
    fn information_order() {
        assert!(X.approximates(T));
        assert!(X.approximates(F));
        assert!(X.approximates(X));
        assert!(T.approximates(T));
        assert!(!T.approximates(F));
        assert!(!T.approximates(X));
        assert!(!F.approximates(X));
    }

    #[test]
    fn enumeration_order() {
        let mut v = vec![X, F, T];
        v.sort();
        assert_eq!(v, vec![T, F, X]);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("X".parse::<TruthValue>().unwrap(), X);
        assert_eq!("x".parse::<TruthValue>().unwrap(), X);
        assert_eq!(X.to_string(), "x");
        assert!("U".parse::<TruthValue>().is_err());
    }
}
