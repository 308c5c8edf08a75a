use crate::error::{Error, Result};

/// How enumeration loops are executed.
///
/// `Parallel` uses rayon when the `parallel` feature is enabled and falls
/// back to the sequential loop otherwise. Both produce identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

pub const DEFAULT_MAX_VARS_THREE: usize = 14;
pub const DEFAULT_MAX_VARS_TWO: usize = 20;
pub const DEFAULT_MAX_NODES: usize = 1_000_000;

/// Enumeration caps, the tableau node budget, and the execution mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Cap on `n` for anything that enumerates `3^n` assignments.
    pub max_vars_three: usize,
    /// Cap on `n` for anything that enumerates `2^n` assignments.
    pub max_vars_two: usize,
    pub max_nodes: usize,
    pub exec: Exec,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_vars_three: DEFAULT_MAX_VARS_THREE,
            max_vars_two: DEFAULT_MAX_VARS_TWO,
            max_nodes: DEFAULT_MAX_NODES,
            exec: Exec::default(),
        }
    }
}

// Bitmask enumeration works on u64 row indices.
const HARD_LIMIT: usize = 40;

impl Options {
    pub fn sequential() -> Self {
        Options { exec: Exec::Sequential, ..Options::default() }
    }

    /// Sets both enumeration caps.
    pub fn with_max_vars(mut self, n: usize) -> Self {
        self.max_vars_three = n;
        self.max_vars_two = n;
        self
    }

    pub fn with_max_nodes(mut self, n: usize) -> Self {
        self.max_nodes = n;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub(crate) fn check_three(&self, count: usize) -> Result<()> {
        let cap = self.max_vars_three.min(HARD_LIMIT / 2);
        if count > cap {
            return Err(Error::CapExceeded { count, cap, what: "three-valued enumeration" });
        }
        Ok(())
    }

    pub(crate) fn check_two(&self, count: usize) -> Result<()> {
        let cap = self.max_vars_two.min(HARD_LIMIT);
        if count > cap {
            return Err(Error::CapExceeded { count, cap, what: "two-valued enumeration" });
        }
        Ok(())
    }
}
