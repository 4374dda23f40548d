//! Dyck paths in the matrix convention: step strings over east/south that
//! cross an n x n grid corner to corner without dipping below the main
//! diagonal.

use std::fmt;
use std::str::FromStr;

/// One step of a lattice path. East orders before south, matching the
/// lexicographic order of the rendered step strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    East,
    South,
}

/// Why a step sequence is not a Dyck path.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DyckPathError {
    #[error("empty path")]
    Empty,
    #[error("invalid step {found:?} at position {position}")]
    InvalidStep { position: usize, found: char },
    #[error("unbalanced path: {east} east steps, {south} south steps")]
    Unbalanced { east: usize, south: usize },
    #[error("path dips below the main diagonal at step {position}")]
    BelowDiagonal { position: usize },
}

impl DyckPathError {
    /// Bare error tag for the CLI: parse-shaped failures report
    /// `ParseError`, a balanced string in the wrong region reports
    /// `NotDyck`.
    pub fn name(&self) -> &'static str {
        match self {
            DyckPathError::BelowDiagonal { .. } => "NotDyck",
            _ => "ParseError",
        }
    }
}

/// A Dyck path of semilength n: n east and n south steps, every prefix
/// holding at least as many easts as souths.
///
/// Drawn on the n x n grid the path runs from the north-west corner to the
/// south-east corner along cell borders, staying weakly above (north-east
/// of) the main diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckPathError> {
        if steps.is_empty() {
            return Err(DyckPathError::Empty);
        }
        let mut east = 0usize;
        let mut south = 0usize;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::East => east += 1,
                Step::South => south += 1,
            }
            if south > east {
                return Err(DyckPathError::BelowDiagonal { position: i + 1 });
            }
        }
        if east != south {
            return Err(DyckPathError::Unbalanced { east, south });
        }
        Ok(DyckPath { steps })
    }

    /// Number of east steps (equivalently south steps); the path spans the
    /// `semilength() x semilength()` grid.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl FromStr for DyckPath {
    type Err = DyckPathError;

    /// Accepts `E`/`S`, with `U`/`D` as aliases for east/south on input.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            steps.push(match c {
                'E' | 'U' => Step::East,
                'S' | 'D' => Step::South,
                _ => return Err(DyckPathError::InvalidStep { position: i + 1, found: c }),
            });
        }
        DyckPath::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::South => "S",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let p: DyckPath = "EESS".parse().unwrap();
        assert_eq!(p.semilength(), 2);
        assert_eq!(p.to_string(), "EESS");
    }

    #[test]
    fn up_down_aliases() {
        assert_eq!("UUDD".parse::<DyckPath>().unwrap().to_string(), "EESS");
        assert_eq!("UESD".parse::<DyckPath>().unwrap().to_string(), "EESS");
    }

    #[test]
    fn rejects_empty() {
        assert_eq!("".parse::<DyckPath>().unwrap_err(), DyckPathError::Empty);
    }

    #[test]
    fn rejects_bad_character() {
        let err = "EXSS".parse::<DyckPath>().unwrap_err();
        assert_eq!(err, DyckPathError::InvalidStep { position: 2, found: 'X' });
        assert_eq!(err.name(), "ParseError");
    }

    #[test]
    fn rejects_unbalanced() {
        assert_eq!(
            "EES".parse::<DyckPath>().unwrap_err(),
            DyckPathError::Unbalanced { east: 2, south: 1 }
        );
    }

    #[test]
    fn rejects_dip_below_diagonal() {
        let err = "ESSE".parse::<DyckPath>().unwrap_err();
        assert_eq!(err, DyckPathError::BelowDiagonal { position: 3 });
        assert_eq!(err.name(), "NotDyck");
    }
}
