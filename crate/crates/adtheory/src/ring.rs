use std::fmt;

use serde::{Deserialize, Serialize};

/// Coefficient ring: `Z` when `modulus == 0`, otherwise `Z/modulus`.
/// The involution acts by negation on elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub modulus: u64,
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec { modulus: 0 }
    }

    pub fn zmod(m: u64) -> Self {
        RingSpec { modulus: m }
    }

    pub fn normalize(&self, v: i64) -> i64 {
        if self.modulus == 0 {
            v
        } else {
            v.rem_euclid(self.modulus as i64)
        }
    }

    pub fn is_zero(&self, v: i64) -> bool {
        self.normalize(v) == 0
    }

    pub fn add(&self, a: i64, b: i64) -> i64 {
        self.normalize(a.checked_add(b).expect("ring addition overflow"))
    }

    pub fn mul(&self, a: i64, b: i64) -> i64 {
        self.normalize(a.checked_mul(b).expect("ring multiplication overflow"))
    }

    pub fn neg(&self, a: i64) -> i64 {
        self.normalize(a.checked_neg().expect("ring negation overflow"))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}
