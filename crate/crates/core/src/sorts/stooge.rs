//! StoogeSort as usually given in textbooks: order the two endpoints, then
//! sort the first two thirds, the last two thirds and the first two thirds
//! again. Recursion depth is logarithmic in n.
//!
//! ```text
//! StoogeSort(A, i, j):
//!   if A[i] > A[j]: swap A[i] and A[j]
//!   if i + 1 ≥ j: return
//!   k = ⌊(j − i + 1) / 3⌋
//!   StoogeSort(A, i, j − k)
//!   StoogeSort(A, i + k, j)
//!   StoogeSort(A, i, j − k)
//! ```
//!
//! For n ≤ 1 the top-level call is entered but compares nothing.

use crate::instrument::{BudgetExceeded, Recorder};
use crate::Element;

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    if a.len() < 2 {
        rec.enter();
        return Ok(());
    }
    let last = a.len() - 1;
    stooge(a, 0, last, rec)
}

fn stooge(a: &mut [Element], i: usize, j: usize, rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    rec.enter();
    if rec.greater(a[i], a[j])? {
        rec.record_swap(i, j, a[i], a[j]);
        a.swap(i, j);
    }
    if i + 1 >= j {
        return Ok(());
    }
    let k = (j - i + 1) / 3;
    stooge(a, i, j - k, rec)?;
    stooge(a, i + k, j, rec)?;
    stooge(a, i, j - k, rec)
}
