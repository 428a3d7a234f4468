use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative integer or the absorbing value `inf`.
///
/// Used for propagation times (a set that is not forcing has infinite
/// propagation time) and for the product throttling values derived from them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl From<u64> for Extended {
    fn from(v: u64) -> Self {
        Extended::Finite(v)
    }
}

impl From<Option<u64>> for Extended {
    fn from(v: Option<u64>) -> Self {
        v.map_or(Extended::Infinite, Extended::Finite)
    }
}

impl Add for Extended {
    type Output = Extended;
    fn add(self, rhs: Extended) -> Extended {
        match (self, rhs) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinite,
        }
    }
}

impl Add<u64> for Extended {
    type Output = Extended;
    fn add(self, rhs: u64) -> Extended {
        self + Extended::Finite(rhs)
    }
}

impl Mul<u64> for Extended {
    type Output = Extended;
    fn mul(self, rhs: u64) -> Extended {
        match self {
            Extended::Finite(a) => Extended::Finite(a * rhs),
            Extended::Infinite => Extended::Infinite,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extended::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Extended::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected integer or \"inf\", got {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs() {
        let inf = Extended::Infinite;
        assert_eq!(inf + 3, inf);
        assert_eq!(inf * 4, inf);
        assert!(Extended::Finite(u64::MAX) < inf);
        assert_eq!(Extended::Finite(2) + Extended::Finite(5), Extended::Finite(7));
    }

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Extended::Finite(4)).unwrap(), "4");
        let back: Extended = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Extended::Infinite);
        assert!(serde_json::from_str::<Extended>("\"nan\"").is_err());
    }
}
