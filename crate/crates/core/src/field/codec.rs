//! Text and JSON encodings of contexts and elements.

use super::{Element, FieldCtx, FieldError, Result};
use serde::{Deserialize, Serialize};

/// JSON form of a context: `{"p":3,"m":1,"n":2,"modulus":[2,1,1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CtxSpec {
    pub p: u32,
    pub m: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldCtx {
    pub fn spec(&self) -> CtxSpec {
        CtxSpec { p: self.p, m: self.m, n: self.n, modulus: Some(self.modulus.clone()) }
    }

    /// Rebuilds a context; a missing modulus means the deterministic default.
    pub fn from_spec(spec: &CtxSpec, table_cap: u64) -> Result<Self> {
        let default = Self::with_table_cap(spec.p, spec.m, spec.n, table_cap)?;
        match &spec.modulus {
            Some(m) if *m != default.modulus => {
                Self::with_modulus(spec.p, spec.m, spec.n, m.clone(), table_cap)
            }
            _ => Ok(default),
        }
    }

    /// Comma-separated little-endian digits, e.g. `"1,2"` for `1 + 2α`.
    pub fn format_element(&self, x: Element) -> String {
        self.digits(x).iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    /// Inverse of [`FieldCtx::format_element`]. Missing high digits are zero.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        if s.is_empty() {
            return Err(FieldError::Parse(s.to_string()));
        }
        let digits = s
            .split(',')
            .map(|d| d.trim().parse::<u32>().map_err(|_| FieldError::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.from_digits(&digits).map_err(|_| FieldError::Parse(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_strings() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let x = ctx.parse_element("1,2").unwrap();
        assert_eq!(x.index(), 7);
        assert_eq!(ctx.format_element(x), "1,2");
        assert_eq!(ctx.parse_element("2").unwrap().index(), 2);
        assert!(ctx.parse_element("3,0").is_err());
        assert!(ctx.parse_element("1,1,1").is_err());
        assert!(ctx.parse_element("").is_err());
    }

    #[test]
    fn spec_round_trip() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let json = serde_json::to_string(&ctx.spec()).unwrap();
        assert_eq!(json, r#"{"p":3,"m":1,"n":2,"modulus":[2,1,1]}"#);
        let back: CtxSpec = serde_json::from_str(&json).unwrap();
        let again = FieldCtx::from_spec(&back, 1 << 22).unwrap();
        assert_eq!(again.modulus(), ctx.modulus());
    }
}
