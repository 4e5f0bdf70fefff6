//! ExpoSort: sort the first n−1 elements, fix the last adjacent pair, then
//! sort the first n−1 elements again. Both recursive calls always run, so the
//! call tree is complete and the comparison count is 2^(n−1) − 1 on every
//! input.
//!
//! ```text
//! ExpoSort(A, n):
//!   if n > 1:
//!     ExpoSort(A, n − 1)
//!     if A[n−1] > A[n]: swap A[n−1] and A[n]
//!     ExpoSort(A, n − 1)
//! ```
//!
//! The recursion is driven by an explicit stack so depth is bounded by the
//! heap, not the call stack.

use crate::instrument::{BudgetExceeded, Recorder};
use crate::Element;

#[derive(Clone, Copy)]
enum Frame {
    /// Entry of `ExpoSort(A, n)`.
    Call(usize),
    /// The guarded swap of positions n−1 and n (1-based).
    FixLastPair(usize),
}

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    let mut stack = vec![Frame::Call(a.len())];
    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Call(n) => {
                rec.enter();
                if n > 1 {
                    // Pushed in reverse order of execution.
                    stack.push(Frame::Call(n - 1));
                    stack.push(Frame::FixLastPair(n));
                    stack.push(Frame::Call(n - 1));
                }
            }
            Frame::FixLastPair(n) => {
                let (i, j) = (n - 2, n - 1);
                if rec.greater(a[i], a[j])? {
                    rec.record_swap(i, j, a[i], a[j]);
                    a.swap(i, j);
                }
            }
        }
    }
    Ok(())
}
