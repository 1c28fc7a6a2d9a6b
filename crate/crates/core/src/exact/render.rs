use serde_json::{json, Value};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::{Rational, Ring};

/// Interchange rendering shared by the CLI and golden tests.
///
/// Rationals render as `"a/b"` (or `"a"` when `b = 1`); polynomials as JSON
/// arrays of their coefficients, lowest degree first; rational functions as
/// `{"num": [...], "den": [...]}`.
pub trait Canonical {
    fn to_json(&self) -> Value;

    fn to_text(&self) -> String {
        match self.to_json() {
            Value::String(s) => s,
            other => other.to_string(),
        }
    }
}

impl Canonical for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl<C: Ring + Canonical> Canonical for Poly<C> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Canonical::to_json).collect())
    }
}

impl Canonical for RatFunc {
    fn to_json(&self) -> Value {
        json!({ "num": self.numer().to_json(), "den": self.denom().to_json() })
    }

    fn to_text(&self) -> String {
        if self.is_polynomial() {
            self.numer().to_text()
        } else {
            format!("{}/{}", self.numer().to_text(), self.denom().to_text())
        }
    }
}

impl Canonical for bool {
    fn to_json(&self) -> Value {
        Value::Bool(*self)
    }
}

impl<T: Canonical> Canonical for Vec<T> {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(Canonical::to_json).collect())
    }
}

impl Canonical for Value {
    fn to_json(&self) -> Value {
        self.clone()
    }
}

impl Canonical for num_bigint::BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;
    use crate::exact::rational::{int, rat};

    #[test]
    fn renders() {
        assert_eq!(rat(3, 4).to_text(), "3/4");
        assert_eq!(int(-2).to_text(), "-2");
        let p = Poly::new(Var::Omega, vec![rat(-3, 2), int(3), int(-1)]);
        assert_eq!(p.to_text(), r#"["-3/2","3","-1"]"#);
        let f = RatFunc::new(Poly::x(Var::Rho), Poly::new(Var::Rho, vec![int(-1), int(1)])).unwrap();
        assert_eq!(f.to_text(), r#"["0","1"]/["-1","1"]"#);
        assert_eq!(f.to_json(), json!({"num": ["0", "1"], "den": ["-1", "1"]}));
    }
}
