//! The ambient polynomial ring: variable names and characteristic.

use crate::field::is_prime_u64;
use serde::Serialize;
use std::collections::HashSet;

/// Describes k[x₁,…,x_n]. Variable index 1 maps to the first name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingContext {
    names: Vec<String>,
    characteristic: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("characteristic {0} is neither 0 nor prime")]
    BadCharacteristic(u64),
}

impl RingContext {
    pub fn new(names: Vec<String>, characteristic: u64) -> Result<Self, RingError> {
        if names.is_empty() {
            return Err(RingError::NoVariables);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(RingError::DuplicateName(name.clone()));
            }
        }
        if characteristic != 0 && !is_prime_u64(characteristic) {
            return Err(RingError::BadCharacteristic(characteristic));
        }
        Ok(RingContext {
            names,
            characteristic,
        })
    }

    /// Convenience constructor over ℚ.
    pub fn rational(names: &[&str]) -> Self {
        RingContext::new(names.iter().map(|s| s.to_string()).collect(), 0)
            .expect("invalid ring description")
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of variable `var` (1-based).
    pub fn name(&self, var: usize) -> &str {
        &self.names[var - 1]
    }

    /// 1-based index of a declared name.
    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RingContext::new(vec![], 0).is_err());
        assert!(RingContext::new(vec!["x".into(), "x".into()], 0).is_err());
        assert!(RingContext::new(vec!["x".into()], 6).is_err());
        let r = RingContext::new(vec!["x".into(), "y".into()], 7).unwrap();
        assert_eq!(r.variable_index("y"), Some(2));
        assert_eq!(r.name(1), "x");
    }
}
