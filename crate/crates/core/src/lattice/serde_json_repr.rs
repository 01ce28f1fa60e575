//! JSON representation of lattices: `{"label": str?, "gram": [[int, ...], ...]}`
//! with every integer written as a decimal string.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use super::{IntMatrix, Lattice, LatticeError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub gram: Vec<Vec<IntString>>,
}

/// An integer that reads from either a JSON string or a JSON number and
/// always writes as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntString(pub BigInt);

impl Serialize for IntString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for IntString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(IntString(BigInt::from(v))),
            Raw::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(IntString)
                .map_err(|_| serde::de::Error::custom(format!("not an integer: {s:?}"))),
        }
    }
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            label: l.label().map(str::to_owned),
            gram: l
                .gram()
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(IntString).collect())
                .collect(),
        }
    }
}

impl TryFrom<LatticeJson> for Lattice {
    type Error = LatticeError;
    fn try_from(j: LatticeJson) -> Result<Self, LatticeError> {
        let n = j.gram.len();
        if j.gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSymmetric);
        }
        let rows = j.gram.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect();
        let l = Lattice::new(IntMatrix::from_rows(rows))?;
        Ok(match j.label {
            Some(label) => l.with_label(label),
            None => l,
        })
    }
}

impl Lattice {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LatticeJson::from(self)).expect("lattice JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Lattice, LatticeError> {
        let j: LatticeJson =
            serde_json::from_str(text).map_err(|e| LatticeError::Json(e.to_string()))?;
        Lattice::try_from(j)
    }
}

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub(crate) fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub(crate) fn ser_rational_rows<S: Serializer>(
    v: &[Vec<BigRational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}
