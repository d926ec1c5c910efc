//! Serde helpers: big integers travel as decimal strings.

pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(D::Error::custom)
    }

    pub fn parse(s: &str) -> Result<BigUint, String> {
        let t = s.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("expected a non-negative decimal integer, got {s:?}"));
        }
        BigUint::parse_bytes(t.as_bytes(), 10).ok_or_else(|| format!("bad integer {s:?}"))
    }
}

pub mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{ser::SerializeSeq, de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_str_radix(10))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| super::decimal::parse(s).map_err(D::Error::custom))
            .collect()
    }
}

/// `BTreeMap<usize, BigUint>` as `{"0": "12", ...}`.
pub mod decimal_map {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use serde::{de::Error, ser::SerializeMap, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BTreeMap<usize, BigUint>, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(v.len()))?;
        for (k, x) in v {
            map.serialize_entry(&k.to_string(), &x.to_str_radix(10))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, BigUint>, D::Error> {
        BTreeMap::<String, String>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| {
                let key = k
                    .parse::<usize>()
                    .map_err(|_| D::Error::custom(format!("bad vertex id {k:?}")))?;
                Ok((key, super::decimal::parse(&v).map_err(D::Error::custom)?))
            })
            .collect()
    }
}
