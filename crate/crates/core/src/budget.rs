use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock deadline shared by the long-running algebra routines.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_duration(limit: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(limit) }
    }

    pub fn seconds(secs: f64) -> Self {
        Self::from_duration(Duration::from_secs_f64(secs))
    }

    #[inline]
    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }
}
