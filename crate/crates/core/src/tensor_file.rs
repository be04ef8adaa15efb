//! JSON tensor files: `{"m": 2, "n": 2, "entries": {"T[1,1,1]": "1/2", ...}}`.
//!
//! Entries not listed are zero. A file without `entries` describes only a
//! format, for symbolic commands.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pencil::RatTensor;
use crate::polyring::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFile {
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<BTreeMap<String, String>>,
}

fn parse_key(key: &str) -> Option<(usize, usize, usize)> {
    let inner = key.trim().strip_prefix("T[")?.strip_suffix(']')?;
    let mut it = inner.split(',').map(|s| s.trim().parse::<usize>().ok());
    let out = (it.next()??, it.next()??, it.next()??);
    it.next().is_none().then_some(out)
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: num_bigint::BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl TensorFile {
    pub fn symbolic(m: usize, n: usize) -> Self {
        TensorFile {
            m,
            n,
            entries: None,
        }
    }

    /// Nonzero entries written in lowest terms.
    pub fn from_tensor(t: &RatTensor) -> Self {
        let mut entries = BTreeMap::new();
        for k in 1..=2 {
            for j in 1..=t.n() {
                for i in 1..=t.m() {
                    let v = t.get(i, j, k);
                    if !v.is_zero() {
                        entries.insert(format!("T[{i},{j},{k}]"), v.to_string());
                    }
                }
            }
        }
        TensorFile {
            m: t.m(),
            n: t.n(),
            entries: Some(entries),
        }
    }

    /// The rational tensor, or `None` for a format-only file.
    pub fn tensor(&self) -> Result<Option<RatTensor>> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::TensorFile("m and n must be positive".into()));
        }
        let Some(entries) = &self.entries else {
            return Ok(None);
        };
        let mut t = RatTensor::zeros(self.m, self.n);
        for (key, value) in entries {
            let (i, j, k) = parse_key(key)
                .ok_or_else(|| Error::TensorFile(format!("bad entry name `{key}`")))?;
            if !(1..=self.m).contains(&i) || !(1..=self.n).contains(&j) || !(1..=2).contains(&k) {
                return Err(Error::TensorFile(format!(
                    "entry `{key}` is outside a {}x{}x2 tensor",
                    self.m, self.n
                )));
            }
            let v = parse_rational(value)
                .ok_or_else(|| Error::TensorFile(format!("bad rational `{value}` for `{key}`")))?;
            t.set(i, j, k, v);
        }
        Ok(Some(t))
    }

    /// The same file with entries in lowest terms and zeros dropped.
    pub fn normalized(&self) -> Result<Self> {
        Ok(match self.tensor()? {
            Some(t) => TensorFile::from_tensor(&t),
            None => self.clone(),
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: TensorFile = serde_json::from_str(s)?;
        file.tensor()?;
        Ok(file)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn parses_and_normalizes() {
        let f = TensorFile::from_json(
            r#"{"m": 2, "n": 2, "entries": {"T[1,1,1]": "2/4", "T[2, 2, 2]": "-3", "T[1,2,1]": "0/5"}}"#,
        )
        .unwrap();
        let t = f.tensor().unwrap().unwrap();
        assert_eq!(*t.get(1, 1, 1), rat(1, 2));
        assert_eq!(*t.get(2, 2, 2), rat(-3, 1));
        assert!(t.get(2, 1, 1).is_zero());
        let norm = f.normalized().unwrap();
        let entries = norm.entries.as_ref().unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries["T[1,1,1]"], "1/2");
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            r#"{"m": 2, "n": 2, "entries": {"T[3,1,1]": "1"}}"#,
            r#"{"m": 2, "n": 2, "entries": {"T[1,1,3]": "1"}}"#,
            r#"{"m": 2, "n": 2, "entries": {"X": "1"}}"#,
            r#"{"m": 2, "n": 2, "entries": {"T[1,1,1]": "1/0"}}"#,
            r#"{"m": 0, "n": 2}"#,
            r#"{"m": 2}"#,
        ] {
            assert!(TensorFile::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn format_only() {
        let f = TensorFile::from_json(r#"{"m": 3, "n": 4}"#).unwrap();
        assert!(f.tensor().unwrap().is_none());
    }

    #[test]
    fn save_load_round_trip() {
        let mut rng = crate::action::sample_rng(1, 0);
        let t = crate::action::random_tensor(2, 3, &mut rng);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        let f = TensorFile::from_tensor(&t);
        f.save(&path).unwrap();
        let back = TensorFile::load(&path).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.tensor().unwrap().unwrap(), t);
    }
}
