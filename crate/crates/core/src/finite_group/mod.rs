//! Finite groups given by Cayley tables, their conjugacy classes, and the
//! tube data and brute-force counts built from them.
//!
//! Elements are indices `0..n`. On ingestion the identity is moved to index 0
//! by swapping it with whatever element sat there; the input numbering is kept
//! so user-facing indices can be translated in both directions.

mod brute;
mod standard;
mod transfer;

use std::collections::{HashMap, VecDeque};
use std::path::Path;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use brute::{brute_force_count, count_operations, DEFAULT_BUDGET};
pub use standard::{alternating, cyclic, dihedral, direct_product, klein_four, quaternion, symmetric};
pub use transfer::{
    class_reduce, commutator_distribution, genus_matrix, puncture_matrix, to_class_datum, to_tqft_datum, tube_matrix_p,
    IntMatrix,
};

/// Default cap on the order of a group generated by permutations.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<u32>,
    inverse: Vec<u32>,
    // internal index -> index in the source table
    input_label: Vec<usize>,
    // source index -> internal index
    from_input: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table `table[x][y] = x·y` over `0..n`.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::NotAGroup("table too large".into()));
        }
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {x} has {} entries, expected {n}", row.len())));
            }
            if let Some(y) = row.iter().position(|&z| z >= n) {
                return Err(Error::NotAGroup(format!("entry ({x}, {y}) = {} is out of range", row[y])));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity element".into()))?;

        // swap e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let input_label: Vec<usize> = (0..n).map(relabel).collect();
        let from_input = input_label.clone();
        let mut mult = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                mult[x * n + y] = relabel(table[input_label[x]][input_label[y]]) as u32;
            }
        }

        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mult[x * n + y] == 0 && mult[y * n + x] == 0)
                .ok_or_else(|| Error::NotAGroup(format!("element {} has no inverse", input_label[x])))?;
            inverse[x] = y as u32;
        }

        let g = FiniteGroup { order: n, mult, inverse, input_label, from_input };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::NotAGroup(format!(
                    "associativity fails for ({}, {}, {})",
                    self.input_label[a], self.input_label[b], self.input_label[c]
                )))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed_ca1e);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Closure of permutations of `0..degree` under composition, with
    /// `(σ·τ)(i) = σ(τ(i))`. Element 0 is the identity permutation.
    pub fn from_permutation_generators(degree: usize, generators: &[Vec<usize>], max_order: usize) -> Result<Self> {
        for (k, s) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if s.len() != degree || s.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::InvalidInput(format!("generator {k} is not a permutation of 0..{degree}")));
            }
        }
        let compose = |a: &[usize], b: &[usize]| b.iter().map(|&i| a[i]).collect::<Vec<usize>>();
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = compose(&elements[x], s);
                if !index.contains_key(&y) {
                    if elements.len() >= max_order {
                        return Err(Error::GroupTooLarge { limit: max_order });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let table: Vec<Vec<usize>> =
            elements.iter().map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        Self::from_cayley_table(&table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    /// `h x h^-1`.
    #[inline]
    pub fn conj(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(h, x), self.inv(h))
    }

    /// `[x, y] = x y x^-1 y^-1`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Index of an element as numbered in the source table.
    pub fn input_index(&self, x: usize) -> usize {
        self.input_label[x]
    }

    /// Internal index of the element numbered `i` in the source table.
    pub fn element_from_input(&self, i: usize) -> Result<usize> {
        self.from_input
            .get(i)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("element {i} out of range for a group of order {}", self.order)))
    }

    /// The Cayley table in internal numbering.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| (0..self.order).map(|y| self.mul(x, y)).collect()).collect()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut members = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let k = members.len();
            let mut orbit = Vec::new();
            for h in 0..n {
                let y = self.conj(h, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = k;
                    orbit.push(y);
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let centralizer_order = members.iter().map(|m| n / m.len()).collect();
        ConjugacyClasses { class_of, members, centralizer_order }
    }

    /// Conjugation closure of a set of elements, sorted.
    pub fn conjugation_closure(&self, elements: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        for &x in elements {
            for h in 0..self.order {
                inside[self.conj(h, x)] = true;
            }
        }
        (0..self.order).filter(|&x| inside[x]).collect()
    }

    /// Checks that `elements` is a conjugation-closed set; returns it sorted
    /// and deduplicated.
    pub fn checked_class_union(&self, elements: &[usize]) -> Result<Vec<usize>> {
        if let Some(&x) = elements.iter().find(|&&x| x >= self.order) {
            return Err(Error::InvalidInput(format!("element {x} out of range")));
        }
        let mut set: Vec<usize> = elements.to_vec();
        set.sort_unstable();
        set.dedup();
        let mut inside = vec![false; self.order];
        for &x in &set {
            inside[x] = true;
        }
        for &x in &set {
            for h in 0..self.order {
                let y = self.conj(h, x);
                if !inside[y] {
                    return Err(Error::NotConjugationClosed(format!(
                        "{} is conjugate to {} but missing",
                        self.input_label[y], self.input_label[x]
                    )));
                }
            }
        }
        Ok(set)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        serde_json::from_str::<GroupFile>(json)?.into_group(DEFAULT_MAX_ORDER)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupFile::Table { table: self.table() }).expect("group serializes")
    }
}

/// Group file: `{"table": [[...]]}` or `{"degree": d, "generators": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table { table: Vec<Vec<usize>> },
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn into_group(self, max_order: usize) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { table } => FiniteGroup::from_cayley_table(&table),
            GroupFile::Permutations { degree, generators } => {
                FiniteGroup::from_permutation_generators(degree, &generators, max_order)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub centralizer_order: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn representative(&self, k: usize) -> usize {
        self.members[k][0]
    }
}

/// How a puncture's subset is given: one element (closed up under
/// conjugation), or an explicit conjugation-closed set. Indices use the
/// numbering of the source table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PunctureSet {
    Representative(usize),
    Elements(Vec<usize>),
}

impl PunctureSet {
    /// Resolves to sorted internal indices.
    pub fn resolve(&self, g: &FiniteGroup) -> Result<Vec<usize>> {
        match self {
            PunctureSet::Representative(i) => Ok(g.conjugation_closure(&[g.element_from_input(*i)?])),
            PunctureSet::Elements(v) => {
                let internal = v.iter().map(|&i| g.element_from_input(i)).collect::<Result<Vec<_>>>()?;
                g.checked_class_union(&internal)
            }
        }
    }

    /// Label used for the puncture tube in a datum.
    pub fn label(&self) -> String {
        match self {
            PunctureSet::Representative(i) => format!("rep={i}"),
            PunctureSet::Elements(v) => {
                format!("elements={}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            }
        }
    }
}

impl std::str::FromStr for PunctureSet {
    type Err = Error;

    /// Parses `rep=K` or `elements=i,j,k`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad puncture spec {s:?}; expected rep=K or elements=i,j,..."));
        let (key, val) = s.split_once('=').ok_or_else(bad)?;
        let nums = || val.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>();
        match key.trim() {
            "rep" => Ok(PunctureSet::Representative(val.trim().parse().map_err(|_| bad())?)),
            "elements" => Ok(PunctureSet::Elements(nums()?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn identity_relabelled_to_zero() {
        // Z3 with the identity stored at index 2
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_cayley_table(&t).unwrap();
        assert_eq!(g.element_from_input(2).unwrap(), 0);
        assert_eq!(g.input_index(0), 2);
        for x in 0..3 {
            for y in 0..3 {
                let want = t[g.input_index(x)][g.input_index(y)];
                assert_eq!(g.input_index(g.mul(x, y)), want);
            }
        }
        for x in 0..3 {
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn broken_tables_rejected() {
        let no_identity = vec![vec![1, 0], vec![1, 0]];
        assert!(matches!(FiniteGroup::from_cayley_table(&no_identity), Err(Error::NotAGroup(_))));
        assert!(matches!(FiniteGroup::from_cayley_table(&[]), Err(Error::NotAGroup(_))));
        assert!(matches!(FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]]), Err(Error::NotAGroup(_))));
        assert!(matches!(FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 2]]), Err(Error::NotAGroup(_))));
        // identity but 1 and 2 have no inverse
        let no_inv = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        assert!(matches!(FiniteGroup::from_cayley_table(&no_inv), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn non_associative_loop_rejected_with_witness() {
        // The Latin square of a 5-element loop that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_cayley_table(&t) {
            Err(Error::NotAGroup(msg)) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn permutation_closure() {
        assert_eq!(s3().order(), 6);
        let trivial = FiniteGroup::from_permutation_generators(4, &[vec![0, 1, 2, 3]], 10).unwrap();
        assert_eq!(trivial.order(), 1);
        let z2 = FiniteGroup::from_permutation_generators(2, &[vec![1, 0]], 10).unwrap();
        assert_eq!(z2.order(), 2);
        let none = FiniteGroup::from_permutation_generators(3, &[], 10).unwrap();
        assert_eq!(none.order(), 1);
    }

    #[test]
    fn permutation_errors() {
        let s5 = [vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        assert_eq!(FiniteGroup::from_permutation_generators(5, &s5, 100), Err(Error::GroupTooLarge { limit: 100 }));
        assert!(matches!(
            FiniteGroup::from_permutation_generators(3, &[vec![0, 0, 1]], 10),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(FiniteGroup::from_permutation_generators(3, &[vec![0, 1]], 10), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn s3_classes() {
        let cc = s3().conjugacy_classes();
        assert_eq!(cc.len(), 3);
        let mut sizes: Vec<usize> = cc.members.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(cc.members[0], vec![0]);
        for (m, c) in cc.members.iter().zip(&cc.centralizer_order) {
            assert_eq!(m.len() * c, 6);
        }
    }

    #[test]
    fn closure_and_validation() {
        let g = s3();
        let cc = g.conjugacy_classes();
        let t = cc.members.iter().find(|m| m.len() == 3).unwrap().clone();
        assert_eq!(g.conjugation_closure(&[t[0]]), t);
        assert_eq!(g.checked_class_union(&t).unwrap(), t);
        assert!(matches!(g.checked_class_union(&t[..2]), Err(Error::NotConjugationClosed(_))));
        assert!(g.checked_class_union(&[99]).is_err());
    }

    #[test]
    fn puncture_spec_parsing() {
        assert_eq!("rep=3".parse::<PunctureSet>().unwrap(), PunctureSet::Representative(3));
        assert_eq!("elements=1, 2,4".parse::<PunctureSet>().unwrap(), PunctureSet::Elements(vec![1, 2, 4]));
        for bad in ["rep", "rep=x", "foo=1", "elements=", "elements=1,,2"] {
            assert!(bad.parse::<PunctureSet>().is_err(), "{bad}");
        }
        assert_eq!(PunctureSet::Elements(vec![1, 2]).label(), "elements=1,2");
    }

    #[test]
    fn group_file_formats() {
        let g = FiniteGroup::from_json(r#"{"table": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(g.order(), 2);
        let g = FiniteGroup::from_json(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(FiniteGroup::from_json(&g.to_json()).unwrap(), g);
        assert!(FiniteGroup::from_json(r#"{"rows": []}"#).is_err());
    }
}
