use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::exact::{unflatten, Rational, Tensor};

pub const DEFAULT_FAILURE_CAP: usize = 16;

/// One violated equation on one basis tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub equation: String,
    pub tuple: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

/// Outcome of an exhaustive axiom scan.
///
/// `passed` reflects the whole scan; only the first `cap` failures are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub total_failures: usize,
    pub cap: usize,
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::with_cap(DEFAULT_FAILURE_CAP)
    }
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        CheckReport {
            passed: true,
            failures: Vec::new(),
            total_failures: 0,
            cap,
        }
    }

    pub fn record(&mut self, failure: Failure) {
        self.passed = false;
        self.total_failures += 1;
        if self.failures.len() < self.cap {
            self.failures.push(failure);
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.passed &= other.passed;
        self.total_failures += other.total_failures;
        let room = self.cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn merged(mut self, other: CheckReport) -> Self {
        self.merge(other);
        self
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Scans every basis tuple of `in_dims` and compares both sides exactly.
    /// Tuples are visited in lexicographic order, so recorded failures are the
    /// lexicographically first ones.
    pub fn scan<L, R>(&mut self, equation: &str, in_dims: &[usize], lhs: L, rhs: R) -> Result<()>
    where
        L: Fn(&Tensor) -> Result<Tensor> + Sync,
        R: Fn(&Tensor) -> Result<Tensor> + Sync,
    {
        let total: usize = in_dims.iter().product();
        let bad = (0..total)
            .into_par_iter()
            .map(|flat| {
                let x = Tensor::basis(in_dims, flat);
                let l = lhs(&x)?;
                let r = rhs(&x)?;
                Ok((l != r).then_some((flat, l, r)))
            })
            .collect::<Result<Vec<_>>>()?;
        for (flat, l, r) in bad.into_iter().flatten() {
            self.record(Failure {
                equation: equation.to_string(),
                tuple: unflatten(in_dims, flat),
                lhs: l.to_dense(),
                rhs: r.to_dense(),
            });
        }
        Ok(())
    }

    /// Convenience wrapper returning a fresh report for a single equation.
    pub fn of<L, R>(equation: &str, in_dims: &[usize], lhs: L, rhs: R) -> Result<Self>
    where
        L: Fn(&Tensor) -> Result<Tensor> + Sync,
        R: Fn(&Tensor) -> Result<Tensor> + Sync,
    {
        let mut rep = CheckReport::new();
        rep.scan(equation, in_dims, lhs, rhs)?;
        Ok(rep)
    }
}

fn fmt_coeffs(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {:?}: lhs {} rhs {}",
            self.equation,
            self.tuple,
            fmt_coeffs(&self.lhs),
            fmt_coeffs(&self.rhs)
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "passed");
        }
        write!(f, "failed ({} violations)", self.total_failures)?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn cap_bounds_recorded_failures() {
        let mut rep = CheckReport::with_cap(2);
        rep.scan(
            "never",
            &[5],
            |x| Ok(x.clone()),
            |x| Ok(x.scaled(&int(2))),
        )
        .unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.total_failures, 5);
        assert_eq!(rep.failures.len(), 2);
        assert_eq!(rep.failures[0].tuple, vec![0]);
        assert_eq!(rep.failures[1].tuple, vec![1]);
    }

    #[test]
    fn empty_scan_passes() {
        let rep = CheckReport::of("vacuous", &[0, 3], |x| Ok(x.clone()), |_| unreachable!()).unwrap();
        assert!(rep.passed && rep.failures.is_empty());
    }
}
