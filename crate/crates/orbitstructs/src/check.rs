use std::fmt::Display;

use serde_json::{json, Value};

use crate::OrbitError;

/// One identity with both sides rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

impl Check {
    pub fn equal<T: PartialEq + Display>(name: impl Into<String>, left: &T, right: &T) -> Self {
        Check { name: name.into(), left: left.to_string(), right: right.to_string(), pass: left == right }
    }

    /// `divisor | value`.
    pub fn divides(name: impl Into<String>, divisor: &num_bigint::BigInt, value: &num_bigint::BigInt) -> Self {
        use num_traits::Zero;
        let pass = if divisor.is_zero() { value.is_zero() } else { (value % divisor).is_zero() };
        Check { name: name.into(), left: divisor.to_string(), right: value.to_string(), pass }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "left": self.left, "right": self.right, "pass": self.pass })
    }
}

/// Fails on the first check that does not pass.
pub fn ensure(checks: &[Check]) -> Result<(), OrbitError> {
    match checks.iter().find(|c| !c.pass) {
        Some(c) => Err(OrbitError::CheckFailed { name: c.name.clone(), left: c.left.clone(), right: c.right.clone() }),
        None => Ok(()),
    }
}

pub fn checks_json(checks: &[Check]) -> Value {
    Value::Array(checks.iter().map(Check::to_json).collect())
}
