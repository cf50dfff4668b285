//! Canonical JSON helpers. Rationals are serialized as strings "p/q" in
//! lowest terms (plain "p" for integers); objects rely on serde_json's
//! sorted-key maps, so emitted bytes are stable across runs.

use crate::ratio::{q_str, Q};
use serde_json::Value;

pub fn q_json(x: &Q) -> Value {
    Value::String(q_str(x))
}

pub fn qvec_json(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q_json).collect())
}

pub fn qmat_json(m: &[Vec<Q>]) -> Value {
    Value::Array(m.iter().map(|row| qvec_json(row)).collect())
}

/// One canonical byte encoding: pretty-printed with sorted keys and a
/// trailing newline.
pub fn to_bytes(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_string_pretty(v).expect("serializable").into_bytes();
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{qq, qz};

    #[test]
    fn rationals_as_strings() {
        assert_eq!(q_json(&qq(3, 4)), Value::String("3/4".into()));
        assert_eq!(q_json(&qq(-1, 2)), Value::String("-1/2".into()));
        assert_eq!(q_json(&qz(5)), Value::String("5".into()));
    }

    #[test]
    fn keys_are_sorted() {
        let v = serde_json::json!({"zeta": 1, "alpha": 2});
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"alpha":2,"zeta":1}"#);
    }
}
