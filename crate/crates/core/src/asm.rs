//! The [`Asm`] matrix type: validation, antidiagonal X-rays, symmetry,
//! direct sum decomposition, and the text/JSON renderings.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::xray::XRay;

/// Which line of a matrix a validation error points at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

/// Why a candidate matrix is not an alternating sign matrix.
///
/// Indices are 1-based and name the first offending line in validation
/// order: shape, entry range, row sums, column sums, row prefix sums,
/// column prefix sums.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AsmError {
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) is {value}, outside {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },
    #[error("row {index} sums to {sum}, expected 1")]
    RowSum { index: usize, sum: i64 },
    #[error("column {index} sums to {sum}, expected 1")]
    ColSum { index: usize, sum: i64 },
    #[error("{line} {index} has a prefix sum of {sum}, outside {{0, 1}}")]
    NotAlternating { line: Line, index: usize, sum: i64 },
}

impl AsmError {
    /// Bare variant name, used as the stable error tag on the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            AsmError::NotSquare { .. } => "NotSquare",
            AsmError::EntryOutOfRange { .. } => "EntryOutOfRange",
            AsmError::RowSum { .. } => "RowSum",
            AsmError::ColSum { .. } => "ColSum",
            AsmError::NotAlternating { .. } => "NotAlternating",
        }
    }
}

/// How [`Asm::render`] draws a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    /// One character per entry: `+`, `-`, `.` for 1, -1, 0.
    Signs,
    /// Right-aligned integers, columns separated by a single space.
    Integers,
}

/// A validated alternating sign matrix.
///
/// Every `Asm` in existence satisfies the full definition: square over
/// {-1, 0, 1}, all line sums 1, all line prefix sums in {0, 1} (which is
/// exactly the alternating-sign condition together with the sign of the
/// first and last nonzero entry per line). Entries are stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Validates `entries` as an `n` x `n` alternating sign matrix.
    pub fn new(n: usize, entries: &[Vec<i64>]) -> Result<Self, AsmError> {
        if entries.len() != n {
            let row = entries.len().min(n) + 1;
            let len = entries.get(row - 1).map_or(0, Vec::len);
            return Err(AsmError::NotSquare { row, len, expected: n });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(AsmError::NotSquare { row: i + 1, len: row.len(), expected: n });
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(AsmError::EntryOutOfRange { row: i + 1, col: j + 1, value: v });
                }
                flat.push(v as i8);
            }
        }
        let a = Asm { n, entries: flat };
        for i in 1..=n {
            let sum: i64 = (1..=n).map(|j| a.get(i, j) as i64).sum();
            if sum != 1 {
                return Err(AsmError::RowSum { index: i, sum });
            }
        }
        for j in 1..=n {
            let sum: i64 = (1..=n).map(|i| a.get(i, j) as i64).sum();
            if sum != 1 {
                return Err(AsmError::ColSum { index: j, sum });
            }
        }
        for i in 1..=n {
            let mut prefix = 0i64;
            for j in 1..=n {
                prefix += a.get(i, j) as i64;
                if prefix != 0 && prefix != 1 {
                    return Err(AsmError::NotAlternating { line: Line::Row, index: i, sum: prefix });
                }
            }
        }
        for j in 1..=n {
            let mut prefix = 0i64;
            for i in 1..=n {
                prefix += a.get(i, j) as i64;
                if prefix != 0 && prefix != 1 {
                    return Err(AsmError::NotAlternating {
                        line: Line::Column,
                        index: j,
                        sum: prefix,
                    });
                }
            }
        }
        Ok(a)
    }

    /// Validates a square of rows, inferring the size from the row count.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, AsmError> {
        Self::new(rows.len(), rows)
    }

    /// Internal constructor for matrices produced by algorithms whose
    /// output is proven valid; still fully checked, a failure is a defect.
    pub(crate) fn from_grid(n: usize, grid: &[i8]) -> Self {
        debug_assert_eq!(grid.len(), n * n);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| grid[i * n..(i + 1) * n].iter().map(|&v| v as i64).collect())
            .collect();
        Self::new(n, &rows).expect("constructed matrix must be alternating sign")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        assert!(
            (1..=self.n).contains(&row) && (1..=self.n).contains(&col),
            "cell ({row}, {col}) out of bounds for size {}",
            self.n
        );
        self.entries[(row - 1) * self.n + (col - 1)]
    }

    /// Rows as plain integer vectors, for interop and re-validation.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].iter().map(|&v| v as i64).collect())
            .collect()
    }

    /// The antidiagonal X-ray: entry k (1-based) is the sum over all cells
    /// with `row + col - 1 = k`, for k in 1..=2n-1.
    pub fn xray(&self) -> XRay {
        let n = self.n;
        let mut sums = vec![0i64; 2 * n - 1];
        for i in 1..=n {
            for j in 1..=n {
                sums[i + j - 2] += self.get(i, j) as i64;
            }
        }
        XRay::new(sums).expect("antidiagonal sums of a valid matrix form a valid X-ray")
    }

    pub fn transpose(&self) -> Asm {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 1..=n {
            for j in 1..=n {
                entries[(j - 1) * n + (i - 1)] = self.get(i, j);
            }
        }
        Asm { n, entries }
    }

    /// True when the matrix equals its transpose.
    pub fn is_diagonally_symmetric(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (i + 1..=n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Splits into the unique maximal block-diagonal decomposition.
    ///
    /// Returns the indecomposable diagonal blocks in top-left to
    /// bottom-right order; a matrix with no proper split returns itself.
    /// `direct_sum` of the result rebuilds the original matrix.
    pub fn direct_summands(&self) -> Vec<Asm> {
        let n = self.n;
        // reach = furthest row/col index entangled with lines seen so far;
        // a block boundary is any k with reach <= k.
        let mut blocks = Vec::new();
        let mut start = 1usize;
        let mut reach = 0usize;
        for k in 1..=n {
            for j in 1..=n {
                if self.get(k, j) != 0 && j > reach {
                    reach = j;
                }
                if self.get(j, k) != 0 && j > reach {
                    reach = j;
                }
            }
            if reach <= k {
                let m = k - start + 1;
                let mut entries = Vec::with_capacity(m * m);
                for i in start..=k {
                    for j in start..=k {
                        entries.push(self.get(i, j));
                    }
                }
                blocks.push(Asm::from_grid(m, &entries));
                start = k + 1;
            }
        }
        blocks
    }

    /// Draws the matrix; no trailing newline.
    pub fn render(&self, style: RenderStyle) -> String {
        let n = self.n;
        match style {
            RenderStyle::Signs => {
                let mut out = String::with_capacity(n * (n + 1));
                for i in 1..=n {
                    if i > 1 {
                        out.push('\n');
                    }
                    for j in 1..=n {
                        out.push(match self.get(i, j) {
                            1 => '+',
                            -1 => '-',
                            _ => '.',
                        });
                    }
                }
                out
            }
            RenderStyle::Integers => {
                let widths: Vec<usize> = (1..=n)
                    .map(|j| (1..=n).map(|i| self.get(i, j).to_string().len()).max().unwrap())
                    .collect();
                let mut out = String::new();
                for i in 1..=n {
                    if i > 1 {
                        out.push('\n');
                    }
                    for j in 1..=n {
                        if j > 1 {
                            out.push(' ');
                        }
                        out.push_str(&format!("{:>width$}", self.get(i, j), width = widths[j - 1]));
                    }
                }
                out
            }
        }
    }

    /// Serializes to the matrix JSON interchange form
    /// `{"n": ..., "entries": [[...], ...]}` on a single line.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    /// Parses and validates the matrix JSON interchange form.
    pub fn from_json_str(s: &str) -> Result<Self, MatrixJsonError> {
        let raw: RawMatrix =
            serde_json::from_str(s).map_err(|e| MatrixJsonError::Json(e.to_string()))?;
        Asm::new(raw.n, &raw.entries).map_err(MatrixJsonError::Invalid)
    }
}

/// Block-diagonal concatenation; inverse of [`Asm::direct_summands`].
pub fn direct_sum(blocks: &[Asm]) -> Asm {
    let n: usize = blocks.iter().map(Asm::size).sum();
    assert!(n > 0, "direct sum of no blocks");
    let mut entries = vec![0i8; n * n];
    let mut off = 0usize;
    for b in blocks {
        let m = b.size();
        for i in 1..=m {
            for j in 1..=m {
                entries[(off + i - 1) * n + (off + j - 1)] = b.get(i, j);
            }
        }
        off += m;
    }
    Asm::from_grid(n, &entries)
}

/// Failure to read a matrix from its JSON interchange form.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatrixJsonError {
    #[error("malformed matrix JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Invalid(#[from] AsmError),
}

impl MatrixJsonError {
    pub fn name(&self) -> &'static str {
        match self {
            MatrixJsonError::Json(_) => "ParseError",
            MatrixJsonError::Invalid(e) => e.name(),
        }
    }
}

#[derive(Deserialize)]
struct RawMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for Asm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Asm", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &self.rows())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(deserializer)?;
        Asm::new(raw.n, &raw.entries).map_err(D::Error::custom)
    }
}
