//! Self-contained invariant suite over all objects of one size: the
//! bijection facts, X-ray preservation, and census consistency, checked
//! by exhaustive enumeration.

use std::collections::BTreeSet;

use crate::asm::Asm;
use crate::bijection::{inverse_a, map_a, map_m, shadow_path};
use crate::enumerate::{all_dsasms, all_dyck_paths, report, EnumerationReport};
use crate::reconstruct::find_asms_with_xray;

/// Outcome of [`run`]: the census plus a description of every failed
/// check (empty when everything holds).
#[derive(Clone, Debug)]
pub struct Verification {
    pub report: EnumerationReport,
    pub failures: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every check for size `n`. Work grows with the number of matrices
/// of that size, all of which are enumerated several times.
pub fn run(n: usize) -> Verification {
    let report = report(n);
    let mut failures = Vec::new();
    let mut fail = |msg: String| failures.push(msg);

    if report.histogram.total() != report.asm_count {
        fail(format!(
            "histogram total {} differs from matrix count {}",
            report.histogram.total(),
            report.asm_count
        ));
    }
    if report.determined_count != report.dyck_count {
        fail(format!(
            "{} uniquely determined matrices but {} paths",
            report.determined_count, report.dyck_count
        ));
    }

    // The image of map_a is exactly the set of matrices with a unique
    // X-ray preimage, and map_a is injective.
    let image: BTreeSet<Vec<Vec<i64>>> =
        all_dyck_paths(n).map(|p| map_a(&p).rows()).collect();
    if image.len() as u64 != report.dyck_count {
        fail(format!("map_a sends {} paths to {} matrices", report.dyck_count, image.len()));
    }
    let determined: BTreeSet<Vec<Vec<i64>>> = crate::enumerate::determined_asms(n)
        .iter()
        .map(Asm::rows)
        .collect();
    if image != determined {
        fail("image of map_a differs from the X-ray-determined matrices".to_string());
    }

    for p in all_dyck_paths(n) {
        let a = map_a(&p);
        if !a.is_diagonally_symmetric() {
            fail(format!("map_a({p}) is not diagonally symmetric"));
        }
        match shadow_path(&a) {
            Ok(q) if q == p => {}
            Ok(q) => fail(format!("shadow of map_a({p}) is {q}")),
            Err(e) => fail(format!("shadow of map_a({p}) failed: {e}")),
        }
        match inverse_a(&a) {
            Ok(q) if q == p => {}
            other => fail(format!("inverse of map_a({p}) gave {other:?}")),
        }
        // Uniqueness of the preimage, by direct search.
        let found = find_asms_with_xray(&a.xray(), Some(2));
        if found != vec![a] {
            fail(format!("X-ray of map_a({p}) does not determine it"));
        }
    }

    for a in all_dsasms(n) {
        let rows = a.rows();
        let b = match map_m(&a) {
            Ok(b) => b,
            Err(e) => {
                fail(format!("map_m failed on {rows:?}: {e}"));
                continue;
            }
        };
        if let Err(e) = Asm::from_rows(&b.rows()) {
            fail(format!("map_m of {rows:?} is not alternating sign: {e}"));
            continue;
        }
        if b.xray() != a.xray() {
            fail(format!("map_m changed the X-ray of {rows:?}"));
        }
        let fixed = b == a;
        if fixed != image.contains(&rows) {
            fail(format!("map_m fixes {rows:?} iff it is an image: violated"));
        }
        if !fixed && b.is_diagonally_symmetric() {
            fail(format!("map_m moved {rows:?} to another symmetric matrix"));
        }
    }

    Verification { report, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_pass() {
        for n in 1..=4 {
            let v = run(n);
            assert!(v.passed(), "n = {n}: {:?}", v.failures);
        }
    }

    #[test]
    fn report_travels_with_the_verdict() {
        let v = run(3);
        assert_eq!(v.report.asm_count, 7);
        assert_eq!(v.report.determined_count, 5);
    }
}
