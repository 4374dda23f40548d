//! Reconstruction of alternating sign matrices from a prescribed X-ray by
//! backtracking over antidiagonals.
//!
//! The search fills antidiagonal k = 1..=2n-1 in order, cells by
//! increasing row, values tried as -1 < 0 < 1, so results arrive in a
//! frozen deterministic order and a `limit` cuts off a prefix of the full
//! result list. Cells of one antidiagonal occupy pairwise distinct rows
//! and columns, which keeps running row and column prefix sums well
//! defined and makes each cell's admissible values independent of its
//! antidiagonal neighbors; that independence yields sharp per-antidiagonal
//! sum windows for pruning.

use crate::asm::Asm;
use crate::bijection::map_a;
use crate::enumerate::all_dyck_paths;
use crate::xray::XRay;

/// Failure surface of [`reconstruct_determined`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReconstructError {
    #[error("the X-ray does not single out a matrix in the image of map_a")]
    NotDeterminedImage,
}

impl ReconstructError {
    pub fn name(&self) -> &'static str {
        match self {
            ReconstructError::NotDeterminedImage => "NotDeterminedImage",
        }
    }
}

/// All matrices casting the X-ray `x`, in search order; empty when the
/// X-ray is infeasible. `limit` stops the search after that many results.
pub fn find_asms_with_xray(x: &XRay, limit: Option<usize>) -> Vec<Asm> {
    search(x, limit, &mut |_, _| {})
}

/// True when exactly one matrix casts `x`; searches with limit 2.
pub fn is_determined_xray(x: &XRay) -> bool {
    search(x, Some(2), &mut |_, _| {}).len() == 1
}

/// The unique matrix in the image of `map_a` casting `x`, found by a
/// linear scan over all Dyck paths of the matching size.
pub fn reconstruct_determined(x: &XRay) -> Result<Asm, ReconstructError> {
    for p in all_dyck_paths(x.size()) {
        let a = map_a(&p);
        if &a.xray() == x {
            return Ok(a);
        }
    }
    Err(ReconstructError::NotDeterminedImage)
}

/// Backtracking search; `observer` fires after each antidiagonal completes
/// consistently, receiving its index and its entries in row order. Tests
/// use the hook to watch invariants of the partial fillings.
pub(crate) fn search(
    x: &XRay,
    limit: Option<usize>,
    observer: &mut dyn FnMut(usize, &[i8]),
) -> Vec<Asm> {
    let n = x.size();
    let sums = x.sums();
    // Entries of any solution total n (one per row); each antidiagonal can
    // move at most one unit per cell. Infeasible X-rays die here.
    if sums.iter().sum::<i64>() != i64::try_from(n).unwrap() {
        return Vec::new();
    }
    for (k, &s) in (1..=2 * n - 1).zip(sums) {
        let len = antidiagonal_cells(n, k).count() as i64;
        if s.abs() > len {
            return Vec::new();
        }
    }
    let mut state = Search {
        n,
        sums,
        limit,
        grid: vec![0i8; n * n],
        row_state: vec![0i8; n],
        col_state: vec![0i8; n],
        results: Vec::new(),
        observer,
    };
    state.antidiagonal(1);
    state.results
}

/// Cells of antidiagonal k in an n x n grid, by increasing row.
fn antidiagonal_cells(n: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    let lo = k.saturating_sub(n - 1).max(1);
    let hi = k.min(n);
    (lo..=hi).map(move |i| (i, k + 1 - i))
}

struct Search<'a> {
    n: usize,
    sums: &'a [i64],
    limit: Option<usize>,
    grid: Vec<i8>,
    /// Prefix sum of each row over its assigned cells; always in {0, 1}.
    row_state: Vec<i8>,
    col_state: Vec<i8>,
    results: Vec<Asm>,
    observer: &'a mut dyn FnMut(usize, &[i8]),
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.results.len() >= l)
    }

    fn antidiagonal(&mut self, k: usize) {
        if k == 2 * self.n {
            // All line sums closed at 1 along the way, so this is an ASM.
            self.results.push(Asm::from_grid(self.n, &self.grid));
            return;
        }
        let cells: Vec<(usize, usize)> = antidiagonal_cells(self.n, k).collect();
        // Admissible value sets per cell are fixed across the whole
        // antidiagonal: its cells never share a row or column.
        let mut max_tail = vec![0i64; cells.len() + 1];
        let mut min_tail = vec![0i64; cells.len() + 1];
        for (idx, &(i, j)) in cells.iter().enumerate().rev() {
            let can_plus = self.row_state[i - 1] == 0 && self.col_state[j - 1] == 0;
            let can_minus = self.row_state[i - 1] == 1 && self.col_state[j - 1] == 1;
            max_tail[idx] = max_tail[idx + 1] + i64::from(can_plus);
            min_tail[idx] = min_tail[idx + 1] - i64::from(can_minus);
        }
        self.cell(k, &cells, 0, 0, &max_tail, &min_tail);
    }

    fn cell(
        &mut self,
        k: usize,
        cells: &[(usize, usize)],
        idx: usize,
        partial: i64,
        max_tail: &[i64],
        min_tail: &[i64],
    ) {
        if self.done() {
            return;
        }
        let target = self.sums[k - 1];
        if idx == cells.len() {
            if partial == target {
                let entries: Vec<i8> =
                    cells.iter().map(|&(i, j)| self.grid[(i - 1) * self.n + (j - 1)]).collect();
                (self.observer)(k, &entries);
                self.antidiagonal(k + 1);
            }
            return;
        }
        if target < partial + min_tail[idx] || target > partial + max_tail[idx] {
            return;
        }
        let (i, j) = cells[idx];
        for v in [-1i8, 0, 1] {
            let r = self.row_state[i - 1] + v;
            if r != 0 && r != 1 || (j == self.n && r != 1) {
                continue;
            }
            let c = self.col_state[j - 1] + v;
            if c != 0 && c != 1 || (i == self.n && c != 1) {
                continue;
            }
            self.grid[(i - 1) * self.n + (j - 1)] = v;
            self.row_state[i - 1] = r;
            self.col_state[j - 1] = c;
            self.cell(k, cells, idx + 1, partial + i64::from(v), max_tail, min_tail);
            self.row_state[i - 1] -= v;
            self.col_state[j - 1] -= v;
            self.grid[(i - 1) * self.n + (j - 1)] = 0;
        }
    }
}

// Completed-line bookkeeping: a cell (i, j) is the last assigned of row i
// exactly when j = n, and of column j exactly when i = n, because
// antidiagonal order fills rows left to right and columns top to bottom.
