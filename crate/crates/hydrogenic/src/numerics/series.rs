//! Compensated summation and log-factorials.

use crate::scalar::Real;

/// Kahan compensated accumulator.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<R: Real> {
    sum: R,
    compensation: R,
}

impl<R: Real> KahanSum<R> {
    pub fn new() -> Self {
        Self {
            sum: R::zero(),
            compensation: R::zero(),
        }
    }

    pub fn add(&mut self, value: R) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> R {
        self.sum
    }
}

impl<R: Real> Default for KahanSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// Compensated sum of a sequence.
pub fn kahan_sum<R: Real, I: IntoIterator<Item = R>>(values: I) -> R {
    let mut acc = KahanSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// ln(k!) evaluated as a compensated sum of logarithms.
///
/// Exact enough (relative error at the epsilon level) for every factorial
/// ratio in this crate; avoids overflow where k! itself would not fit.
pub fn log_factorial<R: Real>(k: u64) -> R {
    let mut acc = KahanSum::new();
    for i in 2..=k {
        acc.add(R::from_uint(i).ln());
    }
    acc.value()
}
