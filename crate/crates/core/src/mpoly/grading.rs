use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Degree in the ℤ³-grading of a Cox ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiDegree(pub i64, pub i64, pub i64);

impl MultiDegree {
    pub const ZERO: MultiDegree = MultiDegree(0, 0, 0);

    pub fn scaled(self, k: i64) -> Self {
        MultiDegree(self.0 * k, self.1 * k, self.2 * k)
    }
}

impl Add for MultiDegree {
    type Output = MultiDegree;
    fn add(self, o: Self) -> Self {
        MultiDegree(self.0 + o.0, self.1 + o.1, self.2 + o.2)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}
