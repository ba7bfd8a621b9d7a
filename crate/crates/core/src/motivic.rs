//! E-polynomial classes of standard strata and the rules for combining them.
//!
//! `disjoint_union` is additivity over a decomposition `X = Z ⊔ U` into a
//! closed and an open piece, and `fibration` is the pushforward rule for a
//! Zariski-locally-trivial fibration with trivial monodromy. The latter is an
//! assertion made by the caller; nothing here can check monodromy, and the rule
//! is wrong for fibrations with nontrivial monodromy.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A named stratum together with its E-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumClass {
    pub name: String,
    pub e: LaurentPoly,
}

/// Lookup table of stratum classes, seeded with the standard ones.
#[derive(Clone, Debug)]
pub struct StratumRegistry {
    classes: BTreeMap<String, LaurentPoly>,
}

pub const STANDARD_STRATA: [&str; 6] =
    ["point", "affine_line", "torus", "line_minus_two_points", "aff_group", "aso_star"];

impl Default for StratumRegistry {
    fn default() -> Self {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        let torus = &q - &one;
        let mut classes = BTreeMap::new();
        classes.insert("point".to_string(), one.clone());
        classes.insert("affine_line".to_string(), q.clone());
        classes.insert("torus".to_string(), torus.clone());
        classes.insert("line_minus_two_points".to_string(), &q - &LaurentPoly::constant(2));
        classes.insert("aff_group".to_string(), &q * &torus);
        // Nontrivial translations of the line: a copy of C*.
        classes.insert("aso_star".to_string(), torus);
        StratumRegistry { classes }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RegistryFile {
    Pairs(Vec<(String, String)>),
    Map(BTreeMap<String, String>),
}

impl StratumRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Result<&LaurentPoly> {
        self.classes.get(name).ok_or_else(|| Error::UnknownStratum(name.to_string()))
    }

    pub fn class(&self, name: &str) -> Result<StratumClass> {
        Ok(StratumClass { name: name.to_string(), e: self.get(name)?.clone() })
    }

    /// Adds or replaces a class. `point` is pinned to 1.
    pub fn register(&mut self, name: impl Into<String>, e: LaurentPoly) -> Result<()> {
        let name = name.into();
        if name == "point" && !e.is_one() {
            return Err(Error::InvalidInput("the class of a point is fixed to 1".into()));
        }
        self.classes.insert(name, e);
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.classes.keys().map(String::as_str)
    }

    /// Reads extra classes from JSON: either `[["name", "poly"], ...]` or
    /// `{"name": "poly", ...}` with polynomials in the text format.
    pub fn extend_from_json(&mut self, json: &str) -> Result<()> {
        let pairs: Vec<(String, String)> = match serde_json::from_str(json)? {
            RegistryFile::Pairs(v) => v,
            RegistryFile::Map(m) => m.into_iter().collect(),
        };
        for (name, text) in pairs {
            self.register(name, text.parse()?)?;
        }
        Ok(())
    }

    pub fn extend_from_file(&mut self, path: impl AsRef<Path>) -> Result<()> {
        self.extend_from_json(&std::fs::read_to_string(path)?)
    }
}

/// The class of a standard stratum from the built-in registry.
pub fn standard_class(name: &str) -> Result<LaurentPoly> {
    StratumRegistry::default().get(name).cloned()
}

pub fn disjoint_union(e1: &LaurentPoly, e2: &LaurentPoly) -> LaurentPoly {
    e1 + e2
}

/// Class of the total space of a trivial-monodromy fibration.
pub fn fibration(base_e: &LaurentPoly, fiber_e: &LaurentPoly) -> LaurentPoly {
    base_e * fiber_e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn standard_classes() {
        assert_eq!(standard_class("point").unwrap(), LaurentPoly::one());
        assert_eq!(standard_class("affine_line").unwrap(), p("q"));
        assert_eq!(standard_class("torus").unwrap(), p("q - 1"));
        assert_eq!(standard_class("line_minus_two_points").unwrap(), p("q - 2"));
        assert_eq!(standard_class("aso_star").unwrap(), p("q - 1"));
        assert_eq!(standard_class("klein_bottle"), Err(Error::UnknownStratum("klein_bottle".into())));
    }

    #[test]
    fn aff_group_is_line_times_torus() {
        let r = StratumRegistry::default();
        assert_eq!(r.get("aff_group").unwrap(), &fibration(r.get("affine_line").unwrap(), r.get("torus").unwrap()));
        assert_eq!(r.get("aff_group").unwrap(), &p("q^2 - q"));
    }

    #[test]
    fn disjoint_union_examples() {
        let x1 =
            disjoint_union(&standard_class("line_minus_two_points").unwrap(), &standard_class("affine_line").unwrap());
        assert_eq!(x1, p("2q - 2"));
        assert_eq!(disjoint_union(&p("q^2"), &LaurentPoly::zero()), p("q^2"));
        assert_eq!(
            disjoint_union(&standard_class("torus").unwrap(), &standard_class("point").unwrap()),
            standard_class("affine_line").unwrap()
        );
    }

    #[test]
    fn fibration_examples() {
        let e = p("q^3 - 2q");
        assert_eq!(fibration(&e, &LaurentPoly::one()), e);
        assert_eq!(fibration(&LaurentPoly::one(), &e), e);
        let a = p("q + 1");
        let b = p("q - 3");
        assert_eq!(fibration(&(&a * &b), &e), &a * &fibration(&b, &e));
    }

    // The generic and special fibres of (A1, A2, B) -> B[A1, A2]B^-1 on Aff(C)^3,
    // assembled stratum by stratum.
    #[test]
    fn commutator_map_fibres_reassemble_aff_cubed() {
        let r = StratumRegistry::default();
        let q = r.get("affine_line").unwrap().clone();
        let torus = r.get("torus").unwrap().clone();
        let c_minus_2 = r.get("line_minus_two_points").unwrap().clone();
        let q2 = q.pow(2);
        let q3 = q.pow(3);

        let generic = disjoint_union(
            &fibration(&c_minus_2, &fibration(&torus.pow(2), &q2)),
            &fibration(&c_minus_2, &fibration(&torus, &q2)),
        );
        assert_eq!(generic, &(&q * &torus) * &(&q3 - &(&q2 * &LaurentPoly::constant(2))));

        let special = [
            fibration(&c_minus_2, &fibration(&torus.pow(2), &q2)),
            fibration(&torus, &q3),
            fibration(&c_minus_2, &fibration(&torus, &q2)),
        ]
        .into_iter()
        .sum::<LaurentPoly>();
        assert_eq!(special, &(&q * &torus) * &(&q3 - &q2));

        let total = disjoint_union(&special, &fibration(r.get("aso_star").unwrap(), &generic));
        assert_eq!(total, r.get("aff_group").unwrap().pow(3));
    }

    #[test]
    fn registry_extension_from_json() {
        let mut r = StratumRegistry::new();
        r.extend_from_json(r#"[["p1", "q + 1"], ["conic_minus_pt", "q"]]"#).unwrap();
        assert_eq!(r.get("p1").unwrap(), &p("q + 1"));
        r.extend_from_json(r#"{"cusp": "q"}"#).unwrap();
        assert_eq!(r.get("cusp").unwrap(), &p("q"));
        assert!(r.extend_from_json(r#"[["point", "q"]]"#).is_err());
        assert!(r.extend_from_json(r#"[["bad", "q +"]]"#).is_err());
        assert!(r.names().any(|n| n == "torus"));
    }
}
