use thiserror::Error;

/// Returned when a request would exceed the evaluation budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("evaluation budget of {max_fe} exhausted")]
pub struct Exhausted {
    pub max_fe: u64,
}

/// Function-evaluation accounting for one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvaluationBudget {
    consumed: u64,
    max_fe: u64,
}

impl EvaluationBudget {
    /// `max_fe` of zero is bumped to one so progress stays well defined.
    pub fn new(max_fe: u64) -> Self {
        EvaluationBudget {
            consumed: 0,
            max_fe: max_fe.max(1),
        }
    }

    pub fn consumed(&self) -> u64 {
        self.consumed
    }

    pub fn max_fe(&self) -> u64 {
        self.max_fe
    }

    pub fn remaining(&self) -> u64 {
        self.max_fe - self.consumed
    }

    pub fn is_exhausted(&self) -> bool {
        self.consumed >= self.max_fe
    }

    /// Fraction of the budget already spent, in `[0, 1]`.
    pub fn progress(&self) -> f64 {
        self.consumed as f64 / self.max_fe as f64
    }

    /// Charges `n` evaluations. On failure nothing is charged.
    pub fn consume(&mut self, n: u64) -> Result<u64, Exhausted> {
        match self.consumed.checked_add(n) {
            Some(total) if total <= self.max_fe => {
                self.consumed = total;
                Ok(total)
            }
            _ => Err(Exhausted { max_fe: self.max_fe }),
        }
    }
}
