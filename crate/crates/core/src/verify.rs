//! Oracle comparisons run by the `verify` subcommand.
//!
//! Each check yields one report line `CHECK <desc> ... PASS|FAIL|SKIP`. Checks
//! whose oracle would exceed the enumeration budget are skipped, not failed.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::affc;
use crate::error::Error;
use crate::finite_group::{self, FiniteGroup, PunctureSet};
use crate::poly::LaurentPoly;
use crate::tqft::{assemble_word, insert_identity_tubes, SurfaceSpec, TqftDatum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub outcome: Outcome,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "CHECK {} ... PASS", self.description),
            Outcome::Fail(why) => write!(f, "CHECK {} ... FAIL ({why})", self.description),
            Outcome::Skip(why) => write!(f, "CHECK {} ... SKIP ({why})", self.description),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, description: impl Into<String>, outcome: Outcome) {
        self.checks.push(Check { description: description.into(), outcome });
    }

    fn compare(&mut self, description: String, got: Result<LaurentPoly, Error>, want: Result<LaurentPoly, Error>) {
        let outcome = match (got, want) {
            (_, Err(Error::BudgetExceeded { needed, .. })) => {
                Outcome::Skip(format!("oracle needs {needed} operations"))
            }
            (Err(e), _) => Outcome::Fail(format!("engine: {e}")),
            (_, Err(e)) => Outcome::Fail(format!("oracle: {e}")),
            (Ok(g), Ok(w)) if g == w => Outcome::Pass,
            (Ok(g), Ok(w)) => Outcome::Fail(format!("engine gave {g}, expected {w}")),
        };
        self.push(description, outcome);
    }

    pub fn all_pass(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.checks.iter().filter(|c| pred(&c.outcome)).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(|o| *o == Outcome::Pass),
            self.count(|o| matches!(o, Outcome::Fail(_))),
            self.count(|o| matches!(o, Outcome::Skip(_))),
        )
    }
}

/// Engine against the closed form and against `e(X_2g)` for `1 ≤ g ≤ max_genus`.
pub fn verify_affc(datum: &TqftDatum, max_genus: u32) -> Report {
    let mut report = Report::default();
    for g in 1..=max_genus {
        let spec = SurfaceSpec::closed(g);
        let got = datum.epoly_rep_variety(&spec);
        report.compare(format!("affc closed form g={g}"), got.clone(), Ok(affc::affc_closed_form(g)));
        report.compare(format!("affc X_{} recursion g={g}", 2 * g), got, Ok(affc::xk_epoly(2 * g)));
    }
    report
}

/// All ordered puncture tuples of length `s` drawn from `labels`.
fn puncture_tuples(labels: &[String], s: usize) -> Vec<Vec<String>> {
    if s == 0 {
        return vec![Vec::new()];
    }
    std::iter::repeat_n(labels.iter().cloned(), s).multi_cartesian_product().collect()
}

/// Finite-group engine against brute-force enumeration.
///
/// Punctures range over every conjugacy class. When `datum` is given it is
/// checked in place of the one built from `group`; its puncture labels must
/// be of the form `rep=K` or `elements=…`.
pub fn verify_finite(
    group: &FiniteGroup,
    datum: Option<&TqftDatum>,
    max_genus: u32,
    max_punctures: usize,
    budget: u128,
) -> Result<Report, Error> {
    let (datum, sets) = match datum {
        Some(d) => {
            let mut sets = BTreeMap::new();
            for label in d.puncture_tubes().keys() {
                let set: PunctureSet = label.parse()?;
                sets.insert(label.clone(), set.resolve(group)?);
            }
            (d.clone(), sets)
        }
        None => {
            let classes = group.conjugacy_classes();
            let sets: BTreeMap<String, Vec<usize>> = (0..classes.len())
                .map(|k| {
                    let rep = group.input_index(classes.representative(k));
                    (PunctureSet::Representative(rep).label(), classes.members[k].clone())
                })
                .collect();
            (finite_group::to_tqft_datum(group, &sets)?, sets)
        }
    };
    let reduced = finite_group::class_reduce(&datum, group)?;
    let labels: Vec<String> = sets.keys().cloned().collect();

    let mut report = Report::default();
    for g in 0..=max_genus {
        for s in 0..=max_punctures {
            for tuple in puncture_tuples(&labels, s) {
                let spec = SurfaceSpec::new(g, tuple.iter().cloned());
                let subsets: Vec<Vec<usize>> = tuple.iter().map(|l| sets[l].clone()).collect();
                let oracle = finite_group::brute_force_count(group, g, &subsets, budget).map(LaurentPoly::from);
                let got = datum.epoly_rep_variety(&spec);
                report.compare(format!("finite brute force {spec}"), got.clone(), oracle);
                report.compare(format!("finite class reduction {spec}"), reduced.epoly_rep_variety(&spec), got);
            }
        }
    }
    Ok(report)
}

/// Structural checks for a datum of unknown provenance: normalisation at the
/// sphere, exact division for every spec in range, and invariance under
/// inserted P tubes when the datum has one.
pub fn verify_custom(datum: &TqftDatum, max_genus: u32, max_punctures: usize) -> Report {
    let mut report = Report::default();
    report.compare(
        "custom sphere normalization".into(),
        datum.epoly_rep_variety(&SurfaceSpec::closed(0)),
        Ok(LaurentPoly::one()),
    );
    let labels: Vec<String> = datum.puncture_tubes().keys().cloned().collect();
    let max_punctures = if labels.is_empty() { 0 } else { max_punctures };
    for g in 0..=max_genus {
        for s in 0..=max_punctures {
            for tuple in puncture_tuples(&labels, s) {
                let spec = SurfaceSpec::new(g, tuple);
                let base = datum.epoly_rep_variety(&spec);
                let outcome = match &base {
                    Ok(_) => Outcome::Pass,
                    Err(e) => Outcome::Fail(e.to_string()),
                };
                report.push(format!("custom exact division {spec}"), outcome);
                if datum.identity_tube().is_some() {
                    for k in 1..=2 {
                        let word = insert_identity_tubes(&assemble_word(&spec), k);
                        report.compare(
                            format!("custom P-insertion k={k} {spec}"),
                            datum.evaluate_normalized(&word),
                            base.clone(),
                        );
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{cyclic, symmetric, DEFAULT_BUDGET};
    use crate::matrix::PolyMatrix;

    #[test]
    fn affc_report_has_twelve_passes() {
        let r = verify_affc(&affc::affc_datum(), 6);
        assert_eq!(r.checks.len(), 12);
        assert!(r.all_pass(), "{r}");
        assert!(r.to_string().contains("CHECK affc closed form g=1 ... PASS"));
    }

    #[test]
    fn finite_report_passes() {
        let r = verify_finite(&symmetric(3), None, 2, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r.checks.len() > 20);
    }

    #[test]
    fn budget_turns_into_skip() {
        let r = verify_finite(&symmetric(3), None, 2, 0, 100).unwrap();
        assert!(r.all_pass());
        assert!(r.count(|o| matches!(o, Outcome::Skip(_))) > 0);
    }

    #[test]
    fn tampered_finite_datum_fails() {
        let g = cyclic(3);
        let good = finite_group::to_tqft_datum(&g, &BTreeMap::new()).unwrap();
        let mut rows = good.genus_tube().to_rows();
        rows[0][0] = &rows[0][0] + &LaurentPoly::from(3i64);
        let bad = TqftDatum::new(
            good.e_g().clone(),
            PolyMatrix::from_rows(rows).unwrap(),
            BTreeMap::new(),
            good.identity_tube().cloned(),
            good.disc_in().to_vec(),
            good.disc_out().to_vec(),
        )
        .unwrap();
        let r = verify_finite(&g, Some(&bad), 2, 0, DEFAULT_BUDGET).unwrap();
        let fail = r.first_failure().expect("tampering detected");
        assert!(fail.description.contains("g=1"), "{fail}");
    }

    #[test]
    fn custom_checks_catch_non_exact_division() {
        let g = cyclic(2);
        let good = finite_group::to_tqft_datum(&g, &BTreeMap::new()).unwrap();
        assert!(verify_custom(&good, 3, 0).all_pass());
        let mut rows = good.genus_tube().to_rows();
        rows[0][0] = LaurentPoly::from(7i64);
        let bad = TqftDatum::new(
            good.e_g().clone(),
            PolyMatrix::from_rows(rows).unwrap(),
            BTreeMap::new(),
            None,
            good.disc_in().to_vec(),
            good.disc_out().to_vec(),
        )
        .unwrap();
        let r = verify_custom(&bad, 3, 0);
        assert!(!r.all_pass());
    }
}
