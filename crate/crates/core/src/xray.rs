//! Antidiagonal X-rays: the sum vector a matrix casts along its
//! antidiagonals, their slash-separated text form, and count statistics
//! over all matrices of one size.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Failure to build or parse an X-ray.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum XRayError {
    #[error("empty X-ray")]
    Empty,
    #[error("X-ray has even length {len}; a square matrix casts an odd number of sums")]
    EvenLength { len: usize },
    #[error("invalid X-ray entry {token:?}")]
    InvalidToken { token: String },
    #[error("corner sum at position {index} is {value}, outside {{0, 1}}")]
    CornerOutOfRange { index: usize, value: i64 },
}

impl XRayError {
    /// Bare error tag for the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            XRayError::CornerOutOfRange { .. } => "CornerOutOfRange",
            _ => "ParseError",
        }
    }
}

/// A candidate antidiagonal X-ray of a `size()` x `size()` matrix: an odd
/// number 2n-1 of integer sums whose first and last entries, being single
/// corner cells, lie in {0, 1}.
///
/// No further feasibility is demanded: an `XRay` may be realized by many
/// matrices, exactly one, or none at all (reconstruction reports an empty
/// result then). X-rays computed from a matrix always sum to n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XRay {
    sums: Vec<i64>,
}

impl XRay {
    pub fn new(sums: Vec<i64>) -> Result<Self, XRayError> {
        if sums.is_empty() {
            return Err(XRayError::Empty);
        }
        if sums.len().is_multiple_of(2) {
            return Err(XRayError::EvenLength { len: sums.len() });
        }
        for index in [1, sums.len()] {
            let value = sums[index - 1];
            if !(0..=1).contains(&value) {
                return Err(XRayError::CornerOutOfRange { index, value });
            }
        }
        Ok(XRay { sums })
    }

    /// Side length n of the matrices this X-ray speaks about.
    pub fn size(&self) -> usize {
        self.sums.len().div_ceil(2)
    }

    /// The sums, indexed 0-based; entry `k - 1` is antidiagonal k.
    pub fn sums(&self) -> &[i64] {
        &self.sums
    }
}

impl FromStr for XRay {
    type Err = XRayError;

    /// Parses the slash-separated form, e.g. `0/2/-1/2/0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(XRayError::Empty);
        }
        let sums = s
            .split('/')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| XRayError::InvalidToken { token: tok.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        XRay::new(sums)
    }
}

impl fmt::Display for XRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.sums.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// How often each X-ray value occurs among all alternating sign matrices
/// of one size.
///
/// Keyed by the canonical rendered X-ray string; iteration and the CSV
/// export are therefore sorted by that string and fully deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XRayHistogram {
    n: usize,
    counts: BTreeMap<String, u64>,
}

impl XRayHistogram {
    pub(crate) fn from_counts(n: usize, counts: BTreeMap<String, u64>) -> Self {
        XRayHistogram { n, counts }
    }

    /// Matrix size the histogram was built for.
    pub fn size(&self) -> usize {
        self.n
    }

    /// How many matrices cast `x`; 0 when none does.
    pub fn count(&self, x: &XRay) -> u64 {
        self.counts.get(&x.to_string()).copied().unwrap_or(0)
    }

    /// Number of distinct X-ray values.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all counts, i.e. the number of matrices of this size.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of X-rays cast by exactly one matrix.
    pub fn singleton_count(&self) -> u64 {
        self.counts.values().filter(|&&c| c == 1).count() as u64
    }

    /// `(rendered x-ray, count)` pairs in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// CSV export with header `xray,count`, rows sorted ascending by the
    /// x-ray string, trailing newline included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("xray,count\n");
        for (k, v) in self.iter() {
            out.push_str(k);
            out.push(',');
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

impl Serialize for XRayHistogram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_round_trip() {
        let x: XRay = "1/0/1/0/1".parse().unwrap();
        assert_eq!(x.size(), 3);
        assert_eq!(x.to_string(), "1/0/1/0/1");
        let y: XRay = "0/2/-1/2/0".parse().unwrap();
        assert_eq!(y.sums(), &[0, 2, -1, 2, 0]);
    }

    #[test]
    fn single_entry_xray() {
        let x: XRay = "1".parse().unwrap();
        assert_eq!(x.size(), 1);
    }

    #[test]
    fn rejects_even_length() {
        let err = "1/0".parse::<XRay>().unwrap_err();
        assert_eq!(err, XRayError::EvenLength { len: 2 });
        assert_eq!(err.name(), "ParseError");
    }

    #[test]
    fn rejects_empty_and_garbage() {
        assert_eq!("".parse::<XRay>().unwrap_err(), XRayError::Empty);
        assert_eq!(" ".parse::<XRay>().unwrap_err(), XRayError::Empty);
        assert_eq!(
            "1/x/1".parse::<XRay>().unwrap_err(),
            XRayError::InvalidToken { token: "x".into() }
        );
    }

    #[test]
    fn rejects_corner_sums_outside_unit_range() {
        let err = "2/0/0".parse::<XRay>().unwrap_err();
        assert_eq!(err, XRayError::CornerOutOfRange { index: 1, value: 2 });
        assert_eq!(
            "0/0/-1".parse::<XRay>().unwrap_err(),
            XRayError::CornerOutOfRange { index: 3, value: -1 }
        );
    }

    #[test]
    fn infeasible_totals_are_still_representable() {
        // Sum-to-n is a property of X-rays cast by matrices, not of the type.
        let x: XRay = "1/1/1".parse().unwrap();
        assert_eq!(x.size(), 2);
        assert_eq!(x.sums().iter().sum::<i64>(), 3);
    }
}
