use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One coordinate-weight sequence γ_1 ≥ γ_2 ≥ … with values in (0,1].
///
/// Parametric families support the asymptotic (tractability) analysis;
/// explicit lists are for concrete finite-dimensional experiments. An
/// explicit list only extends past its end when padding was opted into,
/// since silently repeating weights corrupts limit statements.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightFamily {
    /// Finite list γ_1, …, γ_n; `pad` repeats the last value beyond n.
    Explicit { values: Vec<f64>, pad: bool },
    /// γ_j = c
    Constant(f64),
    /// γ_j = j^{-a}, a > 0
    Polynomial { a: f64 },
    /// γ_j = q^j, 0 < q ≤ 1
    Geometric { q: f64 },
}

impl WeightFamily {
    pub fn validate(&self) -> Result<()> {
        let check_unit = |v: f64| -> Result<()> {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::parameter(format!("weight {v} outside (0,1]")));
            }
            Ok(())
        };
        match self {
            WeightFamily::Explicit { values, .. } => {
                if values.is_empty() {
                    return Err(Error::parameter("empty weight list"));
                }
                for w in values {
                    check_unit(*w)?;
                }
                if values.windows(2).any(|w| w[1] > w[0]) {
                    return Err(Error::parameter("weight list must be non-increasing"));
                }
                Ok(())
            }
            WeightFamily::Constant(c) => check_unit(*c),
            WeightFamily::Polynomial { a } => {
                if !(*a > 0.0) {
                    return Err(Error::parameter(format!(
                        "polynomial weight decay a = {a} must be positive"
                    )));
                }
                Ok(())
            }
            WeightFamily::Geometric { q } => check_unit(*q),
        }
    }

    /// γ_j for 1-based j.
    pub fn get(&self, j: usize) -> Result<f64> {
        debug_assert!(j >= 1);
        match self {
            WeightFamily::Explicit { values, pad } => match values.get(j - 1) {
                Some(w) => Ok(*w),
                None if *pad => Ok(*values.last().expect("non-empty list")),
                None => Err(Error::parameter(format!(
                    "weight index {j} beyond explicit list of length {} (padding not enabled)",
                    values.len()
                ))),
            },
            WeightFamily::Constant(c) => Ok(*c),
            WeightFamily::Polynomial { a } => Ok((j as f64).powf(-a)),
            WeightFamily::Geometric { q } => Ok(q.powi(j as i32)),
        }
    }

    pub fn is_parametric(&self) -> bool {
        !matches!(self, WeightFamily::Explicit { .. })
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFamily::Explicit { values, pad } => {
                let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "list:{}", parts.join(","))?;
                if *pad {
                    write!(f, ":pad")?;
                }
                Ok(())
            }
            WeightFamily::Constant(c) => write!(f, "const:c={c}"),
            WeightFamily::Polynomial { a } => write!(f, "poly:a={a}"),
            WeightFamily::Geometric { q } => write!(f, "geom:q={q}"),
        }
    }
}

fn parse_kv(body: &str, key: &str) -> Result<f64> {
    let (k, v) = body
        .split_once('=')
        .ok_or_else(|| Error::parameter(format!("expected {key}=<value>, got {body:?}")))?;
    if k.trim() != key {
        return Err(Error::parameter(format!(
            "expected parameter {key:?}, got {:?}",
            k.trim()
        )));
    }
    v.trim()
        .parse::<f64>()
        .map_err(|e| Error::parameter(format!("bad value {v:?}: {e}")))
}

impl FromStr for WeightFamily {
    type Err = Error;

    /// Grammar: `poly:a=2`, `geom:q=0.5`, `const:c=1`, `list:0.9,0.5,0.25`
    /// (append `:pad` to a list to repeat its last entry beyond the end).
    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parameter(format!("expected kind:params, got {s:?}")))?;
        let fam = match kind.trim() {
            "poly" => WeightFamily::Polynomial {
                a: parse_kv(body, "a")?,
            },
            "geom" => WeightFamily::Geometric {
                q: parse_kv(body, "q")?,
            },
            "const" => WeightFamily::Constant(parse_kv(body, "c")?),
            "list" => {
                let (list, pad) = match body.strip_suffix(":pad") {
                    Some(rest) => (rest, true),
                    None => (body, false),
                };
                let values = list
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<f64>()
                            .map_err(|e| Error::parameter(format!("bad weight {p:?}: {e}")))
                    })
                    .collect::<Result<Vec<f64>>>()?;
                WeightFamily::Explicit { values, pad }
            }
            other => {
                return Err(Error::parameter(format!(
                    "unknown weight family {other:?} (expected poly, geom, const or list)"
                )))
            }
        };
        fam.validate()?;
        Ok(fam)
    }
}

impl Serialize for WeightFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WeightFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The weight pair (γ^(1), γ^(2)): one sequence for the digital coordinates,
/// one for the periodic coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightSpec {
    pub gamma1: WeightFamily,
    pub gamma2: WeightFamily,
}

impl WeightSpec {
    pub fn new(gamma1: WeightFamily, gamma2: WeightFamily) -> Result<Self> {
        gamma1.validate()?;
        gamma2.validate()?;
        Ok(WeightSpec { gamma1, gamma2 })
    }

    /// Same family for both sequences.
    pub fn uniform(family: WeightFamily) -> Result<Self> {
        Self::new(family.clone(), family)
    }

    pub fn gamma1(&self, j: usize) -> Result<f64> {
        self.gamma1.get(j)
    }

    pub fn gamma2(&self, j: usize) -> Result<f64> {
        self.gamma2.get(j)
    }

    pub fn is_parametric(&self) -> bool {
        self.gamma1.is_parametric() && self.gamma2.is_parametric()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!(
            "poly:a=2".parse::<WeightFamily>().unwrap(),
            WeightFamily::Polynomial { a: 2.0 }
        );
        assert_eq!(
            "geom:q=0.5".parse::<WeightFamily>().unwrap(),
            WeightFamily::Geometric { q: 0.5 }
        );
        assert_eq!(
            "const:c=1".parse::<WeightFamily>().unwrap(),
            WeightFamily::Constant(1.0)
        );
        assert_eq!(
            "list:0.9,0.5,0.25".parse::<WeightFamily>().unwrap(),
            WeightFamily::Explicit {
                values: vec![0.9, 0.5, 0.25],
                pad: false
            }
        );
        assert!("poly:a=0".parse::<WeightFamily>().is_err());
        assert!("const:c=1.5".parse::<WeightFamily>().is_err());
        assert!("list:0.5,0.9".parse::<WeightFamily>().is_err());
        assert!("splines:x=1".parse::<WeightFamily>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["poly:a=2", "geom:q=0.5", "const:c=1", "list:0.9,0.5,0.25"] {
            let fam: WeightFamily = s.parse().unwrap();
            let again: WeightFamily = fam.to_string().parse().unwrap();
            assert_eq!(fam, again);
        }
        let padded: WeightFamily = "list:0.9,0.5:pad".parse().unwrap();
        assert!(matches!(padded, WeightFamily::Explicit { pad: true, .. }));
        assert_eq!(padded.to_string(), "list:0.9,0.5:pad");
    }

    #[test]
    fn getters() {
        let fam = WeightFamily::Polynomial { a: 2.0 };
        assert_eq!(fam.get(1).unwrap(), 1.0);
        assert_eq!(fam.get(2).unwrap(), 0.25);

        let geo = WeightFamily::Geometric { q: 0.5 };
        assert_eq!(geo.get(1).unwrap(), 0.5);
        assert_eq!(geo.get(3).unwrap(), 0.125);

        let list = WeightFamily::Explicit {
            values: vec![0.9, 0.5],
            pad: false,
        };
        assert_eq!(list.get(2).unwrap(), 0.5);
        assert!(list.get(3).is_err());

        let padded = WeightFamily::Explicit {
            values: vec![0.9, 0.5],
            pad: true,
        };
        assert_eq!(padded.get(7).unwrap(), 0.5);
    }
}
