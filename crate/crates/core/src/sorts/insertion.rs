//! Textbook InsertionSort. The inner guard `i > 1 and A[i−1] > A[i]`
//! short-circuits, so reaching the front of the array costs no comparison.

use crate::instrument::{BudgetExceeded, Recorder};
use crate::Element;

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    rec.enter();
    for j in 1..a.len() {
        let mut i = j;
        while i > 0 && rec.greater(a[i - 1], a[i])? {
            rec.record_swap(i - 1, i, a[i - 1], a[i]);
            a.swap(i - 1, i);
            i -= 1;
        }
    }
    Ok(())
}
