//! Check results shared by every verification sweep.

use std::fmt::Display;

use rayon::prelude::*;
use serde::Serialize;

use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failing basis tuple and the nonzero entries of `lhs - rhs` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub at: String,
    pub difference: Vec<(Vec<u32>, String)>,
}

impl Violation {
    pub fn new(at: impl Display, difference: &Tensor) -> Violation {
        Violation {
            at: at.to_string(),
            difference: difference.sparse_entries(),
        }
    }

    pub fn note(at: impl Display) -> Violation {
        Violation {
            at: at.to_string(),
            difference: Vec::new(),
        }
    }
}

/// The outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity being verified, written out.
    pub anchor: String,
    pub status: Status,
    /// Number of basis cases examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Check {
    pub fn new(id: &str, anchor: &str, checked: usize, violations: Vec<Violation>) -> Check {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            checked,
            violations,
        }
    }

    /// A single yes/no identity.
    pub fn single(id: &str, anchor: &str, ok: bool, detail: impl Display) -> Check {
        let v = if ok {
            Vec::new()
        } else {
            vec![Violation::note(detail)]
        };
        Check::new(id, anchor, 1, v)
    }

    /// Compares two tensors as one case.
    pub fn equal(id: &str, anchor: &str, lhs: &Tensor, rhs: &Tensor) -> Check {
        let diff = lhs.sub(rhs);
        let v = if diff.is_zero() {
            Vec::new()
        } else {
            vec![Violation::new("-", &diff)]
        };
        Check::new(id, anchor, 1, v)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Stop at the first violation instead of collecting all of them.
    pub fail_fast: bool,
}

/// Runs `case` over every item; a case returns `Some` on violation.
///
/// Without fail-fast the items are checked in parallel and violations are
/// reported in item order.
pub fn sweep<I, F>(id: &str, anchor: &str, opts: SweepOptions, items: &[I], case: F) -> Check
where
    I: Sync,
    F: Fn(&I) -> Option<Violation> + Sync + Send,
{
    if opts.fail_fast {
        let mut checked = 0;
        for it in items {
            checked += 1;
            if let Some(v) = case(it) {
                return Check::new(id, anchor, checked, vec![v]);
            }
        }
        return Check::new(id, anchor, checked, Vec::new());
    }
    let violations: Vec<Violation> = items.par_iter().filter_map(&case).collect();
    Check::new(id, anchor, items.len(), violations)
}

/// Convenience for sweeps comparing two tensors per basis element.
pub fn diff_case(at: impl Display, lhs: &Tensor, rhs: &Tensor) -> Option<Violation> {
    let d = lhs.sub(rhs);
    (!d.is_zero()).then(|| Violation::new(at, &d))
}

/// An ordered collection of checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}
