//! Tube matrices of a finite group on the point basis `Q_a`, `a ∈ G`.
//!
//! Every tube pulls back along a span of finite sets and pushes forward, so on
//! point classes the matrices just count fibres. Entry `[a][g]` is the
//! coefficient of `Q_a` in the image of `Q_g`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::LaurentPoly;
use crate::tqft::TqftDatum;

/// Square matrix of counts, indexed `[row][col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<u64>,
}

impl IntMatrix {
    fn from_columns(n: usize, cols: Vec<Vec<u64>>) -> Self {
        let mut data = vec![0; n * n];
        for (j, col) in cols.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                data[i * n + j] = x;
            }
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.data[row * self.n + col]
    }

    pub fn column_sum(&self, col: usize) -> u64 {
        (0..self.n).map(|i| self.get(i, col)).sum()
    }

    pub fn to_poly(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, self.n, |i, j| LaurentPoly::from(self.get(i, j)))
    }
}

/// `c[k] = #{(x, y) ∈ G² : [x, y] = k}`.
pub fn commutator_distribution(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order();
    let mut c = vec![0u64; n];
    for x in 0..n {
        for y in 0..n {
            c[g.commutator(x, y)] += 1;
        }
    }
    c
}

/// `M[a][g] = #{(g1, g2, h) : h g [g1, g2] h^-1 = a}`, computed as
/// `Σ_h c(g^-1 h^-1 a h)` from the commutator distribution.
pub fn genus_matrix(g: &FiniteGroup) -> IntMatrix {
    let n = g.order();
    let c = commutator_distribution(g);
    let cols = (0..n)
        .into_par_iter()
        .map(|x| {
            let x_inv = g.inv(x);
            let mut col = vec![0u64; n];
            for h in 0..n {
                let h_inv = g.inv(h);
                for (a, slot) in col.iter_mut().enumerate() {
                    *slot += c[g.mul(x_inv, g.conj(h_inv, a))];
                }
            }
            col
        })
        .collect();
    IntMatrix::from_columns(n, cols)
}

/// `M[a][g] = #{(g1, h) ∈ G × λ : g1 g h g1^-1 = a}`; `lambda` must be closed
/// under conjugation.
pub fn puncture_matrix(g: &FiniteGroup, lambda: &[usize]) -> Result<IntMatrix> {
    let lambda = g.checked_class_union(lambda)?;
    let n = g.order();
    let cols = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut col = vec![0u64; n];
            for &h in &lambda {
                let xh = g.mul(x, h);
                for g1 in 0..n {
                    col[g.conj(g1, xh)] += 1;
                }
            }
            col
        })
        .collect();
    Ok(IntMatrix::from_columns(n, cols))
}

/// `M[a][g] = #{h : h g h^-1 = a}`.
pub fn tube_matrix_p(g: &FiniteGroup) -> IntMatrix {
    let n = g.order();
    let cols = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut col = vec![0u64; n];
            for h in 0..n {
                col[g.conj(h, x)] += 1;
            }
            col
        })
        .collect();
    IntMatrix::from_columns(n, cols)
}

/// Full-rank datum on the point basis: `e_G = |G|`, both discs pick out the
/// identity. `punctures` maps labels to conjugation-closed subsets in
/// internal numbering.
pub fn to_tqft_datum(g: &FiniteGroup, punctures: &BTreeMap<String, Vec<usize>>) -> Result<TqftDatum> {
    let n = g.order();
    let tubes = punctures
        .iter()
        .map(|(label, set)| Ok((label.clone(), puncture_matrix(g, set)?.to_poly())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let mut disc = vec![LaurentPoly::zero(); n];
    disc[g.identity()] = LaurentPoly::one();
    TqftDatum::new(
        LaurentPoly::from(n as u64),
        genus_matrix(g).to_poly(),
        tubes,
        Some(tube_matrix_p(g).to_poly()),
        disc.clone(),
        disc,
    )
}

/// Restricts a full-rank datum of `g` to class functions, in the basis of
/// class indicators.
///
/// All tube matrices commute with conjugation, so they preserve class
/// functions. With `1_B` the indicator of class `B`, the reduced matrix is
/// `R[A][B] = Σ_{b ∈ B} M[a][b]` for any `a ∈ A`; the incoming disc keeps its
/// value on each class and the outgoing disc sums over it.
pub fn class_reduce(datum: &TqftDatum, g: &FiniteGroup) -> Result<TqftDatum> {
    let n = g.order();
    if datum.rank() != n {
        return Err(Error::InvalidDatum(format!("datum has rank {}, group has order {n}", datum.rank())));
    }
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let reduce = |m: &PolyMatrix| {
        PolyMatrix::from_fn(k, k, |a, b| {
            let rep = classes.representative(a);
            classes.members[b].iter().map(|&x| m[(rep, x)].clone()).sum()
        })
    };
    for members in &classes.members {
        let v = &datum.disc_in()[members[0]];
        if members.iter().any(|&x| &datum.disc_in()[x] != v) {
            return Err(Error::InvalidDatum("disc_in is not a class function".into()));
        }
    }
    let disc_in = (0..k).map(|b| datum.disc_in()[classes.representative(b)].clone()).collect();
    let disc_out = classes.members.iter().map(|m| m.iter().map(|&x| datum.disc_out()[x].clone()).sum()).collect();
    TqftDatum::new(
        datum.e_g().clone(),
        reduce(datum.genus_tube()),
        datum.puncture_tubes().iter().map(|(l, m)| (l.clone(), reduce(m))).collect(),
        datum.identity_tube().map(reduce),
        disc_in,
        disc_out,
    )
}

/// `class_reduce(to_tqft_datum(g, punctures), g)`.
pub fn to_class_datum(g: &FiniteGroup, punctures: &BTreeMap<String, Vec<usize>>) -> Result<TqftDatum> {
    class_reduce(&to_tqft_datum(g, punctures)?, g)
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::super::{cyclic, symmetric};
    use super::*;
    use crate::tqft::SurfaceSpec;

    // O(n^4) direct count, independent of the commutator distribution.
    fn genus_matrix_naive(g: &FiniteGroup) -> Vec<Vec<u64>> {
        let n = g.order();
        let mut m = vec![vec![0u64; n]; n];
        for x in 0..n {
            for g1 in 0..n {
                for g2 in 0..n {
                    let y = g.mul(x, g.commutator(g1, g2));
                    for h in 0..n {
                        m[g.conj(h, y)][x] += 1;
                    }
                }
            }
        }
        m
    }

    #[test]
    fn z2_genus_matrix() {
        let g = cyclic(2);
        assert_eq!(commutator_distribution(&g), vec![4, 0]);
        let m = genus_matrix(&g);
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)), (8, 0, 0, 8));
    }

    #[test]
    fn s3_genus_matrix_corner() {
        let g = symmetric(3);
        assert_eq!(commutator_distribution(&g)[0], 18);
        assert_eq!(genus_matrix(&g).get(0, 0), 108);
    }

    #[test]
    fn fast_genus_matrix_matches_naive() {
        for g in [cyclic(3), symmetric(3), super::super::quaternion()] {
            let fast = genus_matrix(&g);
            let slow = genus_matrix_naive(&g);
            for a in 0..g.order() {
                for x in 0..g.order() {
                    assert_eq!(fast.get(a, x), slow[a][x]);
                }
            }
        }
    }

    #[test]
    fn identity_puncture_is_p_tube() {
        let g = symmetric(3);
        assert_eq!(puncture_matrix(&g, &[0]).unwrap(), tube_matrix_p(&g));
    }

    #[test]
    fn s3_transposition_puncture_column() {
        let g = symmetric(3);
        let cc = g.conjugacy_classes();
        let t = cc.members.iter().find(|m| m.len() == 3).unwrap();
        let m = puncture_matrix(&g, t).unwrap();
        assert_eq!(m.column_sum(0), 18);
        // identity column lands on transpositions only, |C(t)| = 2 per h, 6 per element
        for a in 0..6 {
            let want = if t.contains(&a) { 6 } else { 0 };
            assert_eq!(m.get(a, 0), want);
        }
        assert!(matches!(puncture_matrix(&g, &t[..1]), Err(Error::NotConjugationClosed(_))));
    }

    #[test]
    fn abelian_p_tube_is_scalar() {
        let g = cyclic(5);
        let m = tube_matrix_p(&g);
        for a in 0..5 {
            for x in 0..5 {
                assert_eq!(m.get(a, x), if a == x { 5 } else { 0 });
            }
        }
    }

    #[test]
    fn small_datum_values() {
        let none = BTreeMap::new();
        let z2 = to_tqft_datum(&cyclic(2), &none).unwrap();
        assert_eq!(z2.epoly_rep_variety(&SurfaceSpec::closed(1)).unwrap(), LaurentPoly::from(4i64));
        let g = symmetric(3);
        let t = g.conjugacy_classes().members.iter().find(|m| m.len() == 3).unwrap().clone();
        let punct = BTreeMap::from([("t".to_string(), t)]);
        let s3 = to_tqft_datum(&g, &punct).unwrap();
        assert_eq!(s3.epoly_rep_variety(&SurfaceSpec::closed(1)).unwrap(), LaurentPoly::from(18i64));
        assert!(s3.epoly_rep_variety(&SurfaceSpec::new(0, ["t"])).unwrap().is_zero());
    }

    #[test]
    fn reduced_ranks() {
        let none = BTreeMap::new();
        assert_eq!(to_class_datum(&cyclic(4), &none).unwrap().rank(), 4);
        assert_eq!(to_class_datum(&symmetric(3), &none).unwrap().rank(), 3);
        let wrong = to_tqft_datum(&cyclic(4), &none).unwrap();
        assert!(class_reduce(&wrong, &symmetric(3)).is_err());
    }
}
