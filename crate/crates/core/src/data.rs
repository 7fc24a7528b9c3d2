//! Complete (uncensored) lifetime samples.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Device lifetimes reported by Aarset (1987), 50 complete observations.
pub const AARSET: [f64; 50] = [
    0.1, 0.2, 1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 3.0, 6.0, 7.0, 11.0, 12.0, 18.0, //
    18.0, 18.0, 18.0, 18.0, 21.0, 32.0, 36.0, 40.0, 45.0, 46.0, 47.0, 50.0, 55.0, 60.0, //
    63.0, 63.0, 67.0, 67.0, 67.0, 67.0, 72.0, 75.0, 79.0, 82.0, 82.0, 83.0, 84.0, 84.0, //
    84.0, 85.0, 85.0, 85.0, 85.0, 85.0, 86.0, 86.0,
];

/// A sample of finite, nonnegative observations in input order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Dataset {
    values: Vec<f64>,
}

impl Dataset {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("non-finite observation {v}"),
                });
            }
            if v < 0.0 {
                return Err(Error::NegativeValue { line: i + 1, value: v });
            }
        }
        Ok(Self { values })
    }

    pub fn aarset() -> Self {
        Self {
            values: AARSET.to_vec(),
        }
    }

    /// Parses newline-delimited observations.
    ///
    /// Blank lines and lines whose first non-blank character is `#` are
    /// skipped; surrounding whitespace is ignored. Errors carry the 1-based
    /// line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let value: f64 = trimmed.parse().map_err(|_| Error::Parse {
                line,
                message: format!("cannot parse {trimmed:?} as a number"),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    line,
                    message: format!("non-finite observation {trimmed:?}"),
                });
            }
            if value < 0.0 {
                return Err(Error::NegativeValue { line, value });
            }
            values.push(value);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn mean(&self) -> Option<f64> {
        (!self.is_empty()).then(|| self.sum() / self.len() as f64)
    }

    pub fn min(&self) -> Option<f64> {
        self.values.iter().copied().reduce(f64::min)
    }

    pub fn max(&self) -> Option<f64> {
        self.values.iter().copied().reduce(f64::max)
    }

    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Fails with [`Error::EmptyData`] when there are no observations.
    pub fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyData)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        self.require_nonempty()?;
        if let Some(pos) = self.values.iter().position(|&v| v == 0.0) {
            return Err(Error::DegenerateData(format!(
                "observation {} is exactly zero; the profile estimate of beta is undefined",
                pos + 1
            )));
        }
        Ok(())
    }

    /// Renders one value per line using the shortest round-tripping form.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 20);
        for v in &self.values {
            out.push_str(&format!("{v:?}\n"));
        }
        out
    }
}

impl TryFrom<Vec<f64>> for Dataset {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Dataset> for Vec<f64> {
    fn from(d: Dataset) -> Self {
        d.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aarset_summary() {
        let d = Dataset::aarset();
        assert_eq!(d.len(), 50);
        assert_eq!(d.min(), Some(0.1));
        assert_eq!(d.max(), Some(86.0));
        assert!((d.sum() - 2284.3).abs() < 1e-9);
    }

    #[test]
    fn parse_simple_and_comments() {
        let d = Dataset::parse("1\n2\n3\n").unwrap();
        assert_eq!(d.values(), &[1.0, 2.0, 3.0]);
        let d = Dataset::parse("# header\n  4.5  \n\n# note\n6\t\n").unwrap();
        assert_eq!(d.values(), &[4.5, 6.0]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            Dataset::parse("1\n2\nabc\n"),
            Err(Error::Parse {
                line: 3,
                message: "cannot parse \"abc\" as a number".into()
            })
        );
        assert_eq!(
            Dataset::parse("# c\n-1\n"),
            Err(Error::NegativeValue { line: 2, value: -1.0 })
        );
        assert!(matches!(Dataset::parse("inf\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Dataset::parse("NaN\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn text_round_trip() {
        let d = Dataset::new(vec![0.1, 1.0 / 3.0, 1e-300, 86.0]).unwrap();
        assert_eq!(Dataset::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn zero_observations_rejected_for_profile() {
        let d = Dataset::new(vec![0.0, 1.0]).unwrap();
        assert!(matches!(d.require_positive(), Err(Error::DegenerateData(_))));
        assert_eq!(Dataset::new(vec![]).unwrap().require_nonempty(), Err(Error::EmptyData));
    }
}
