//! BogoSort: check whether the array is sorted; if not, shuffle it uniformly
//! at random and try again. Sortedness is checked before the first shuffle,
//! so sorted input costs no shuffles at all.
//!
//! Each sortedness check counts its element comparisons and stops at the first
//! descent. Shuffles are Fisher–Yates exchanges rather than guarded swaps, so
//! they are tallied in `shuffles` and never appear in the swap trace.

use crate::instrument::{BudgetExceeded, Recorder};
use crate::rng::SeededRng;
use crate::Element;

pub fn sort_slice(a: &mut [Element], rec: &mut Recorder, seed: u64) -> Result<(), BudgetExceeded> {
    rec.enter();
    let mut rng = SeededRng::new(seed);
    while !is_sorted_counted(a, rec)? {
        rec.record_shuffle()?;
        rng.shuffle(a);
    }
    Ok(())
}

fn is_sorted_counted(a: &[Element], rec: &mut Recorder) -> Result<bool, BudgetExceeded> {
    for w in a.windows(2) {
        if rec.greater(w[0], w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}
