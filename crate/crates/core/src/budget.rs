//! Bit-budget ledger.
//!
//! Long-lived structures hold a [`Tracked`] guard that registers their size in
//! bits under a label. The ledger is thread-local, so independent runs on
//! different threads (e.g. parallel tests) never see each other's numbers.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Default)]
struct Ledger {
    current: BTreeMap<&'static str, u64>,
    label_peak: BTreeMap<&'static str, u64>,
    total: u64,
    peak: u64,
    at_peak: BTreeMap<&'static str, u64>,
}

impl Ledger {
    fn apply(&mut self, label: &'static str, old: u64, new: u64) {
        let slot = self.current.entry(label).or_insert(0);
        *slot = *slot - old + new;
        let now = *slot;
        let lp = self.label_peak.entry(label).or_insert(0);
        if now > *lp {
            *lp = now;
        }
        self.total = self.total - old + new;
        if self.total > self.peak {
            self.peak = self.total;
            self.at_peak = self.current.iter().filter(|(_, &b)| b > 0).map(|(&k, &b)| (k, b)).collect();
        }
    }
}

thread_local! {
    static LEDGER: RefCell<Ledger> = RefCell::new(Ledger::default());
}

/// RAII registration of `bits` under `label`. Dropping releases the bits.
#[derive(Debug)]
pub struct Tracked {
    label: &'static str,
    bits: u64,
}

impl Tracked {
    pub fn new(label: &'static str, bits: u64) -> Self {
        LEDGER.with(|l| l.borrow_mut().apply(label, 0, bits));
        Tracked { label, bits }
    }

    /// A guard that registers nothing yet.
    pub fn empty(label: &'static str) -> Self {
        Tracked { label, bits: 0 }
    }

    pub fn set(&mut self, bits: u64) {
        if bits != self.bits {
            LEDGER.with(|l| l.borrow_mut().apply(self.label, self.bits, bits));
            self.bits = bits;
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn label(&self) -> &'static str {
        self.label
    }
}

impl Clone for Tracked {
    fn clone(&self) -> Self {
        Tracked::new(self.label, self.bits)
    }
}

impl Drop for Tracked {
    fn drop(&mut self) {
        let (label, bits) = (self.label, self.bits);
        // The ledger may already be gone during thread teardown.
        let _ = LEDGER.try_with(|l| l.borrow_mut().apply(label, bits, 0));
    }
}

/// Snapshot of the ledger.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BudgetReport {
    pub current: u64,
    pub peak: u64,
    /// Per-label breakdown at the moment the peak was reached; sums to `peak`.
    pub at_peak: Vec<(&'static str, u64)>,
    /// Highest value each label ever reached on its own.
    pub label_peaks: Vec<(&'static str, u64)>,
}

impl BudgetReport {
    pub fn label_peak(&self, label: &str) -> u64 {
        self.label_peaks.iter().find(|(l, _)| *l == label).map_or(0, |&(_, b)| b)
    }

    /// Highest value reached by any label starting with `prefix`.
    pub fn prefix_peak(&self, prefix: &str) -> u64 {
        self.label_peaks.iter().filter(|(l, _)| l.starts_with(prefix)).map(|&(_, b)| b).max().unwrap_or(0)
    }
}

impl fmt::Display for BudgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bits peak {} current {}", self.peak, self.current)?;
        for (label, bits) in &self.at_peak {
            writeln!(f, "bits at-peak {label} {bits}")?;
        }
        for (label, bits) in &self.label_peaks {
            writeln!(f, "bits label-peak {label} {bits}")?;
        }
        Ok(())
    }
}

pub fn report() -> BudgetReport {
    LEDGER.with(|l| {
        let l = l.borrow();
        BudgetReport {
            current: l.total,
            peak: l.peak,
            at_peak: l.at_peak.iter().map(|(&k, &v)| (k, v)).collect(),
            label_peaks: l.label_peak.iter().map(|(&k, &v)| (k, v)).collect(),
        }
    })
}

/// Forget peaks; live registrations stay counted as the new baseline.
pub fn reset_peaks() {
    LEDGER.with(|l| {
        let mut l = l.borrow_mut();
        l.peak = l.total;
        l.at_peak = l.current.iter().filter(|(_, &b)| b > 0).map(|(&k, &b)| (k, b)).collect();
        l.label_peak = l.current.clone();
    })
}

/// Run `f` with fresh peak counters and return its report alongside the result.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, BudgetReport) {
    reset_peaks();
    let out = f();
    (out, report())
}

/// Round a bit count up to whole 64-bit words, the unit every structure allocates in.
pub fn words_to_bits(words: usize) -> u64 {
    words as u64 * 64
}
