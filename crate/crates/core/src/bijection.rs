//! The bijection between Dyck paths and the alternating sign matrices
//! determined by their antidiagonal X-rays.
//!
//! [`map_a`] sends a Dyck path to a diagonally symmetric ASM by writing a
//! run of 1s down the antidiagonal of every peak and a run of -1s down the
//! antidiagonal of every valley that sits off the main diagonal. Distinct
//! turns live on distinct antidiagonals, so the runs never collide, and
//! the X-ray of the image reads off the path's height at each turn. These
//! images are exactly the matrices with a unique X-ray preimage.
//!
//! [`shadow_path`] recovers the path as the staircase profile of the
//! rightmost 1s seen so far, giving [`inverse_a`] as a verify-and-return
//! inverse.
//!
//! [`map_m`] witnesses that no other diagonally symmetric matrix is
//! determined by its X-ray: a symmetric matrix outside the image of
//! [`map_a`] is rewritten, without changing the X-ray, into a different
//! matrix that is no longer symmetric (so the original shares its X-ray
//! with a transpose pair). It reflects the region between the shifted
//! shadow path and its mirror through the subdiagonal, then plants a
//! -1/+1 pair across the subdiagonal at every zero-valued off-diagonal
//! valley cell. Matrices in the image of [`map_a`] are exactly its fixed
//! points.

use crate::asm::{direct_sum, Asm};
use crate::cell::Cell;
use crate::dyck::{DyckPath, Step};

/// Failure surface of the bijection maps.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("shadow profile is not a Dyck path")]
    NotDyck,
    #[error("matrix is not the image of any Dyck path")]
    NotInImage,
    #[error("matrix is not diagonally symmetric")]
    NotSymmetric,
}

impl BijectionError {
    /// Bare error tag for the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            BijectionError::NotDyck => "NotDyck",
            BijectionError::NotInImage => "NotInImage",
            BijectionError::NotSymmetric => "NotSymmetric",
        }
    }
}

/// A south-to-east turn of a path.
///
/// The turn after e east and s south steps touches the main diagonal
/// exactly when e = s; otherwise the cell just south-west of the turn
/// point, `(s + 1, e)`, records where the turn happened.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valley {
    /// Valley strictly above the main diagonal, tagged by its cell.
    OffDiagonal(Cell),
    /// Return to the main diagonal after `east` east and south steps.
    OnDiagonal { east: usize },
}

impl Valley {
    pub fn is_on_diagonal(&self) -> bool {
        matches!(self, Valley::OnDiagonal { .. })
    }

    /// The cell south-west of the turn, when the turn is off the diagonal.
    pub fn cell(&self) -> Option<Cell> {
        match self {
            Valley::OffDiagonal(c) => Some(*c),
            Valley::OnDiagonal { .. } => None,
        }
    }
}

/// Peaks and valleys of a Dyck path, in step order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathGeometry {
    /// East-to-south turns; the cell south-west of the turn point.
    pub peaks: Vec<Cell>,
    /// South-to-east turns.
    pub valleys: Vec<Valley>,
}

/// Reads the turns off a path.
///
/// A peak after e east and s south steps is the cell `(s + 1, e)`, which
/// always lies weakly above the main diagonal. Valleys use the same cell
/// unless the turn returns to the diagonal (e = s). Every Dyck path has
/// one more peak than it has valleys.
pub fn path_geometry(p: &DyckPath) -> PathGeometry {
    let mut peaks = Vec::new();
    let mut valleys = Vec::new();
    let mut east = 0usize;
    let mut south = 0usize;
    let steps = p.steps();
    for w in steps.windows(2) {
        match w[0] {
            Step::East => east += 1,
            Step::South => south += 1,
        }
        match (w[0], w[1]) {
            (Step::East, Step::South) => peaks.push(Cell::new(south + 1, east)),
            (Step::South, Step::East) => valleys.push(if east == south {
                Valley::OnDiagonal { east }
            } else {
                Valley::OffDiagonal(Cell::new(south + 1, east))
            }),
            _ => {}
        }
    }
    PathGeometry { peaks, valleys }
}

/// Antidiagonal run from `from` down-left to the main diagonal: the cells
/// `(row + t, col - t)` for `t = 0..=col - row`.
fn antidiagonal_run(from: Cell) -> impl Iterator<Item = Cell> {
    debug_assert!(from.col >= from.row, "run must start weakly above the diagonal");
    (0..=from.col - from.row).map(move |t| Cell::new(from.row + t, from.col - t))
}

/// The determined matrix of a Dyck path.
///
/// Peaks contribute antidiagonal runs of 1s, off-diagonal valleys runs of
/// -1s, each run ending on the main diagonal. The result is a valid,
/// diagonally symmetric ASM whose X-ray singles it out among all matrices
/// of its size.
pub fn map_a(p: &DyckPath) -> Asm {
    let n = p.semilength();
    let mut grid = vec![0i8; n * n];
    let geom = path_geometry(p);
    for &peak in &geom.peaks {
        for c in antidiagonal_run(peak) {
            grid[(c.row - 1) * n + (c.col - 1)] = 1;
        }
    }
    for valley in &geom.valleys {
        if let Some(v) = valley.cell() {
            for c in antidiagonal_run(v) {
                grid[(c.row - 1) * n + (c.col - 1)] = -1;
            }
        }
    }
    Asm::from_grid(n, &grid)
}

/// Rightmost-1 profile: `profile[r]` (1-based, `profile[0] = 0`) is the
/// largest column holding a 1 in rows 1..=r.
///
/// For every valid ASM `profile[r] >= r`: the top-left r x (r - 1)
/// submatrix cannot absorb r full row sums, so some 1 in the first r rows
/// sits in column r or beyond.
fn shadow_profile(a: &Asm) -> Vec<usize> {
    let n = a.size();
    let mut profile = vec![0usize; n + 1];
    for r in 1..=n {
        profile[r] = profile[r - 1];
        for c in (profile[r - 1] + 1..=n).rev() {
            if a.get(r, c) == 1 {
                profile[r] = c;
                break;
            }
        }
    }
    profile
}

/// The shadow path of a matrix: in each row r, east steps out to the
/// rightmost 1 seen in rows 1..=r, then one south step.
///
/// Always succeeds on a validated ASM; the `NotDyck` arm is retained for
/// the contract's sake and is exercised by tests only in the negative.
pub fn shadow_path(a: &Asm) -> Result<DyckPath, BijectionError> {
    let n = a.size();
    let profile = shadow_profile(a);
    let mut steps = Vec::with_capacity(2 * n);
    for r in 1..=n {
        if profile[r] < r {
            return Err(BijectionError::NotDyck);
        }
        steps.extend(std::iter::repeat_n(Step::East, profile[r] - profile[r - 1]));
        steps.push(Step::South);
    }
    DyckPath::new(steps).map_err(|_| BijectionError::NotDyck)
}

/// Recovers the unique path with `map_a(path) == a`, or reports that `a`
/// is not an image.
pub fn inverse_a(a: &Asm) -> Result<DyckPath, BijectionError> {
    let p = shadow_path(a).map_err(|_| BijectionError::NotInImage)?;
    if &map_a(&p) == a {
        Ok(p)
    } else {
        Err(BijectionError::NotInImage)
    }
}

/// Reflection through the subdiagonal: `(i, j) -> (j + 1, i - 1)`, an
/// involution fixing the cells with `i = j + 1`.
fn subdiagonal_reflection(c: Cell) -> Cell {
    Cell::new(c.col + 1, c.row - 1)
}

/// The X-ray-preserving rewrite of a diagonally symmetric matrix.
///
/// Applied blockwise to the direct summands. On each block, with
/// `profile` the rightmost-1 profile of the block:
///
/// 1. every cell of the shade, the reflection-invariant region
///    `{(r, c) : c <= profile[r - 1] - 1 and r <= profile[c]}` pinched
///    between the shifted shadow path and its subdiagonal mirror, is
///    replaced by the entry at its mirror cell;
/// 2. every off-diagonal valley cell of the shadow path still holding a 0
///    becomes -1, and its mirror cell becomes 1.
///
/// Both moves swap cells within single antidiagonals, so the X-ray never
/// changes. Images of [`map_a`] come back unchanged; everything else
/// comes back a different, non-symmetric matrix with the same X-ray.
pub fn map_m(a: &Asm) -> Result<Asm, BijectionError> {
    if !a.is_diagonally_symmetric() {
        return Err(BijectionError::NotSymmetric);
    }
    let blocks: Vec<Asm> = a.direct_summands().iter().map(map_m_block).collect();
    Ok(direct_sum(&blocks))
}

fn map_m_block(a: &Asm) -> Asm {
    let n = a.size();
    let profile = shadow_profile(a);
    let path = shadow_path(a).expect("valid matrices always cast a shadow path");

    let in_shade = |c: Cell| c.col < profile[c.row - 1] && c.row <= profile[c.col];

    let mut grid = vec![0i8; n * n];
    for row in 1..=n {
        for col in 1..=n {
            let cell = Cell::new(row, col);
            let src = if in_shade(cell) { subdiagonal_reflection(cell) } else { cell };
            grid[(row - 1) * n + (col - 1)] = a.get(src.row, src.col);
        }
    }
    for valley in path_geometry(&path).valleys {
        if let Some(v) = valley.cell() {
            // Valley cells sit outside the shade and hold 0 or -1; only
            // the 0 case gains a new pair across the subdiagonal.
            if grid[(v.row - 1) * n + (v.col - 1)] == 0 {
                let m = subdiagonal_reflection(v);
                debug_assert_eq!(grid[(m.row - 1) * n + (m.col - 1)], 0);
                grid[(v.row - 1) * n + (v.col - 1)] = -1;
                grid[(m.row - 1) * n + (m.col - 1)] = 1;
            }
        }
    }
    Asm::from_grid(n, &grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn asm(rows: &[&[i64]]) -> Asm {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Asm::from_rows(&rows).unwrap()
    }

    #[test]
    fn geometry_of_single_peak() {
        let g = path_geometry(&path("EESS"));
        assert_eq!(g.peaks, vec![Cell::new(1, 2)]);
        assert_eq!(g.valleys, vec![]);
    }

    #[test]
    fn geometry_of_staircase() {
        let g = path_geometry(&path("ESESES"));
        assert_eq!(g.peaks, vec![Cell::new(1, 1), Cell::new(2, 2), Cell::new(3, 3)]);
        assert_eq!(
            g.valleys,
            vec![Valley::OnDiagonal { east: 1 }, Valley::OnDiagonal { east: 2 }]
        );
    }

    #[test]
    fn geometry_distinguishes_off_diagonal_valleys() {
        let g = path_geometry(&path("EESESS"));
        assert_eq!(g.peaks, vec![Cell::new(1, 2), Cell::new(2, 3)]);
        assert_eq!(g.valleys, vec![Valley::OffDiagonal(Cell::new(2, 2))]);
    }

    #[test]
    fn peaks_outnumber_valleys_by_one() {
        for n in 1..=6 {
            for p in crate::enumerate::all_dyck_paths(n) {
                let g = path_geometry(&p);
                assert_eq!(g.peaks.len(), g.valleys.len() + 1, "path {p}");
            }
        }
    }

    #[test]
    fn map_a_of_staircase_is_identity() {
        assert_eq!(map_a(&path("ESES")), asm(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn map_a_pairing_for_size_three() {
        let expect = [
            ("EEESSS", "0/0/3/0/0"),
            ("EESESS", "0/2/-1/2/0"),
            ("EESSES", "0/2/0/0/1"),
            ("ESEESS", "1/0/0/2/0"),
            ("ESESES", "1/0/1/0/1"),
        ];
        for (p, x) in expect {
            assert_eq!(map_a(&path(p)).xray().to_string(), x, "path {p}");
        }
    }

    #[test]
    fn map_a_valley_run_on_diagonal_cell() {
        // The valley cell (2, 2) touches the main diagonal, so its run is
        // the single -1 in the center.
        assert_eq!(map_a(&path("EESESS")), asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]));
    }

    #[test]
    fn map_a_entry_counts_match_run_lengths() {
        for n in 1..=6 {
            for p in crate::enumerate::all_dyck_paths(n) {
                let g = path_geometry(&p);
                let plus: usize = g.peaks.iter().map(|c| c.col - c.row + 1).sum();
                let minus: usize = g
                    .valleys
                    .iter()
                    .filter_map(Valley::cell)
                    .map(|c| c.col - c.row + 1)
                    .sum();
                let a = map_a(&p);
                let mut got_plus = 0usize;
                let mut got_minus = 0usize;
                for i in 1..=n {
                    for j in 1..=n {
                        match a.get(i, j) {
                            1 => got_plus += 1,
                            -1 => got_minus += 1,
                            _ => {}
                        }
                    }
                }
                assert_eq!((got_plus, got_minus), (plus, minus), "path {p}");
            }
        }
    }

    #[test]
    fn shadow_of_identity_is_staircase() {
        let id = asm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(shadow_path(&id).unwrap().to_string(), "ESESES");
    }

    #[test]
    fn shadow_never_fails_on_valid_matrices() {
        for n in 1..=4 {
            for a in crate::enumerate::all_asms(n) {
                assert!(shadow_path(&a).is_ok(), "shadow failed on {:?}", a.rows());
            }
        }
    }

    #[test]
    fn inverse_recovers_paths() {
        assert_eq!(
            inverse_a(&asm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap().to_string(),
            "ESESES"
        );
        assert_eq!(
            inverse_a(&asm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])).unwrap().to_string(),
            "EESSES"
        );
    }

    #[test]
    fn inverse_rejects_non_images() {
        // Symmetric but shared X-ray with its transpose partner's class.
        let err = inverse_a(&asm(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])).unwrap_err();
        assert_eq!(err, BijectionError::NotInImage);
        assert_eq!(err.name(), "NotInImage");
    }

    #[test]
    fn map_m_requires_symmetry() {
        let err = map_m(&asm(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])).unwrap_err();
        assert_eq!(err, BijectionError::NotSymmetric);
    }

    #[test]
    fn map_m_fixes_identity() {
        let id = asm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(map_m(&id).unwrap(), id);
    }

    #[test]
    fn map_m_moves_symmetric_non_image() {
        // Permutation 3412 is symmetric but not determined by its X-ray.
        let a = asm(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = map_m(&a).unwrap();
        assert_eq!(b, asm(&[&[0, 0, 1, 0], &[0, 1, -1, 1], &[0, 0, 1, 0], &[1, 0, 0, 0]]));
        assert!(!b.is_diagonally_symmetric());
        assert_eq!(b.xray(), a.xray());
    }
}
