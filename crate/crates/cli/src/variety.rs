//! Variety files: `{"ambient_dim": 2, "kind": "hypersurface", "polynomial": "..."}`.
//!
//! Coordinates are always `x0..xn`.

use std::path::Path;

use plucker_core::duality::{primal_vars, ProjVariety};
use plucker_core::parse_polynomial;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hypersurface,
    Linear,
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietySpec {
    pub ambient_dim: usize,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_dim: Option<usize>,
}

impl VarietySpec {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn build(&self) -> Result<ProjVariety, CliError> {
        let n = self.ambient_dim;
        let invalid = |msg: String| CliError::Input(msg);
        match self.kind {
            Kind::Hypersurface => {
                let text = self
                    .polynomial
                    .as_deref()
                    .ok_or_else(|| invalid("a hypersurface needs a polynomial".into()))?;
                let f = parse_polynomial(text, &primal_vars(n))
                    .map_err(|e| invalid(format!("polynomial {text:?}: {e}")))?;
                if !f.is_homogeneous() {
                    return Err(invalid(format!("polynomial {text:?} is not homogeneous")));
                }
                ProjVariety::hypersurface(n, &f).map_err(|e| invalid(format!("{text:?}: {e}")))
            }
            Kind::Linear => {
                let m = self
                    .linear_dim
                    .ok_or_else(|| invalid("a linear space needs linear_dim".into()))?;
                ProjVariety::linear(n, m).map_err(|e| invalid(e.to_string()))
            }
            Kind::Point => ProjVariety::point(n).map_err(|e| invalid(e.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> Result<ProjVariety, CliError> {
        serde_json::from_str::<VarietySpec>(json).unwrap().build()
    }

    #[test]
    fn builds_each_kind() {
        let s = spec(r#"{"ambient_dim": 2, "kind": "hypersurface", "polynomial": "x0*x2 - x1^2"}"#)
            .unwrap();
        assert_eq!((s.dim(), s.degree()), (1, 2));
        let l = spec(r#"{"ambient_dim": 3, "kind": "linear", "linear_dim": 1}"#).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(
            spec(r#"{"ambient_dim": 1, "kind": "point"}"#)
                .unwrap()
                .dim(),
            0
        );
    }

    #[test]
    fn rejects_bad_polynomials() {
        for p in ["x0*x2 - x1", "x0 + + x1", "x3^2", ""] {
            let json =
                format!(r#"{{"ambient_dim": 2, "kind": "hypersurface", "polynomial": "{p}"}}"#);
            assert!(matches!(spec(&json), Err(CliError::Input(_))), "{p}");
        }
        assert!(spec(r#"{"ambient_dim": 2, "kind": "linear"}"#).is_err());
        assert!(
            serde_json::from_str::<VarietySpec>(r#"{"ambient_dim": 2, "kind": "cone"}"#).is_err()
        );
    }
}
