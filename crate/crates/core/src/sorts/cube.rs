//! CubeSort: ExpoSort with the second recursive call moved inside the swap
//! branch. Linear on sorted input, cubic on reversed input.
//!
//! ```text
//! CubeSort(A, n):
//!   if n > 1:
//!     CubeSort(A, n − 1)
//!     if A[n−1] > A[n]:
//!       swap A[n−1] and A[n]
//!       CubeSort(A, n − 1)
//! ```

use crate::instrument::{BudgetExceeded, Recorder};
use crate::Element;

#[derive(Clone, Copy)]
enum Frame {
    Call(usize),
    /// Guarded swap, followed by the re-sort of the prefix only if it fired.
    FixLastPair(usize),
}

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder) -> Result<(), BudgetExceeded> {
    let mut stack = vec![Frame::Call(a.len())];
    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Call(n) => {
                rec.enter();
                if n > 1 {
                    stack.push(Frame::FixLastPair(n));
                    stack.push(Frame::Call(n - 1));
                }
            }
            Frame::FixLastPair(n) => {
                let (i, j) = (n - 2, n - 1);
                if rec.greater(a[i], a[j])? {
                    rec.record_swap(i, j, a[i], a[j]);
                    a.swap(i, j);
                    stack.push(Frame::Call(n - 1));
                }
            }
        }
    }
    Ok(())
}
