//! SlowSort, the multiply-and-surrender sort: sort both halves, move the
//! larger of the two maxima to the end, then sort everything but the end.
//!
//! ```text
//! SlowSort(A, i, j):
//!   if i ≥ j: return
//!   m = ⌊(i + j) / 2⌋
//!   SlowSort(A, i, m)
//!   SlowSort(A, m + 1, j)
//!   if A[m] > A[j]: swap A[m] and A[j]
//!   SlowSort(A, i, j − 1)
//! ```
//!
//! Recursion depth is at most n + log₂ n; the quasi-polynomial running time
//! keeps n small long before the call stack matters.

use crate::instrument::{BudgetExceeded, Recorder};
use crate::Element;

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    if a.is_empty() {
        rec.enter();
        return Ok(());
    }
    let last = a.len() - 1;
    slow(a, 0, last, rec)
}

fn slow(a: &mut [Element], i: usize, j: usize, rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    rec.enter();
    if i >= j {
        return Ok(());
    }
    let m = (i + j) / 2;
    slow(a, i, m, rec)?;
    slow(a, m + 1, j, rec)?;
    if rec.greater(a[m], a[j])? {
        rec.record_swap(m, j, a[m], a[j]);
        a.swap(m, j);
    }
    slow(a, i, j - 1, rec)
}
