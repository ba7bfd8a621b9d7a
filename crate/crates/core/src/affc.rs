//! The affine group `Aff(C) = C* ⋉ C`.
//!
//! Its tube data lives on the rank 2 module spanned by `i_!Q_0` (the unit)
//! and `j_!Q_{ASO*}` (nontrivial translations). The genus tube is stored with
//! its overall `q(q-1)` factor, exactly as it comes out of the fibre
//! computation; the engine's final division by `e(G)^g` removes it.

use std::collections::BTreeMap;

use crate::matrix::PolyMatrix;
use crate::poly::LaurentPoly;
use crate::tqft::TqftDatum;

fn q() -> LaurentPoly {
    LaurentPoly::q()
}

fn qc(coeffs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(coeffs.iter().copied())
}

/// `e(Aff(C)) = q(q - 1)`.
pub fn e_aff() -> LaurentPoly {
    &q() * &(&q() - &LaurentPoly::one())
}

/// The genus tube with the `q(q-1)` factor divided out.
pub fn reduced_genus_matrix() -> PolyMatrix {
    PolyMatrix::from_rows(vec![
        vec![qc(&[(3, 1), (2, -1)]), qc(&[(4, 1), (3, -3), (2, 2)])],
        vec![qc(&[(3, 1), (2, -2)]), qc(&[(4, 1), (3, -3), (2, 3)])],
    ])
    .expect("2x2")
}

pub fn affc_datum() -> TqftDatum {
    let unit = vec![LaurentPoly::one(), LaurentPoly::zero()];
    TqftDatum::new(e_aff(), reduced_genus_matrix().scale(&e_aff()), BTreeMap::new(), None, unit.clone(), unit)
        .expect("Aff(C) datum is consistent")
}

/// `q^{2g-1}((q-1)^{2g} + q - 1)`, for `g ≥ 1`.
pub fn affc_closed_form(genus: u32) -> LaurentPoly {
    assert!(genus >= 1, "closed form needs genus >= 1");
    let qm1 = &q() - &LaurentPoly::one();
    let inner = &qm1.pow(2 * genus) + &qm1;
    &LaurentPoly::q_pow(2 * i64::from(genus) - 1) * &inner
}

/// `e(X_k)` for `X_k = {Σ_{i≤k} (a_i - 1) b_i = 0} ⊂ (C* × C)^k`, unrolled from
/// `e(X_k) = (q-2) q^{k-1} (q-1)^{k-1} + q e(X_{k-1})`, `e(X_1) = 2q - 2`.
pub fn xk_epoly(k: u32) -> LaurentPoly {
    assert!(k >= 1, "X_k needs k >= 1");
    let qm1 = &q() - &LaurentPoly::one();
    let qm2 = &q() - &LaurentPoly::constant(2);
    let mut e = qc(&[(1, 2), (0, -2)]);
    for j in 2..=k {
        let fresh = &(&qm2 * &q().pow(j - 1)) * &qm1.pow(j - 1);
        e = &fresh + &(&q() * &e);
    }
    e
}

/// Next value of `e(Rep(Σ_g)) = q^{2g}(q-1)^{2g-2}(q-2) + q² e(Rep(Σ_{g-1}))`.
pub fn rep_recursion_step(genus: u32, previous: &LaurentPoly) -> LaurentPoly {
    assert!(genus >= 2);
    let qm1 = &q() - &LaurentPoly::one();
    let qm2 = &q() - &LaurentPoly::constant(2);
    let fresh = &(&q().pow(2 * genus) * &qm1.pow(2 * genus - 2)) * &qm2;
    &fresh + &(&q().pow(2) * previous)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tqft::{SurfaceSpec, Tube, TubeWord};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn genus_tube_entries() {
        let d = affc_datum();
        let l = d.genus_tube();
        assert_eq!(l[(0, 0)], &p("q^2 - q") * &p("q^3 - q^2"));
        assert_eq!(l[(1, 0)], &p("q^2 - q") * &p("q^3 - 2q^2"));
        assert_eq!(l[(0, 1)], &p("q^2 - q") * &p("q^4 - 3q^3 + 2q^2"));
        assert_eq!(l[(1, 1)], &p("q^2 - q") * &p("q^4 - 3q^3 + 3q^2"));
        assert_eq!(d.e_g(), &p("q^2 - q"));
        assert!(d.puncture_tubes().is_empty());
        assert!(d.identity_tube().is_none());
    }

    #[test]
    fn raw_one_handle() {
        let raw = affc_datum().evaluate_raw(&TubeWord::new(vec![Tube::L])).unwrap();
        assert_eq!(raw, &p("q^2 - q") * &p("q^3 - q^2"));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(affc_closed_form(1), p("q^3 - q^2"));
        assert_eq!(affc_closed_form(1), &p("q^2") * &p("q - 1"));
        assert_eq!(affc_closed_form(2), &p("q^3") * &(&p("q - 1").pow(4) + &p("q - 1")));
        assert_eq!(affc_closed_form(2), p("q^7 - 4q^6 + 6q^5 - 3q^4"));
    }

    #[test]
    fn xk_examples() {
        assert_eq!(xk_epoly(1), p("2q - 2"));
        let by_hand = &(&(&p("q - 2") * &p("q")) * &p("q - 1")) + &p("2q^2 - 2q");
        assert_eq!(xk_epoly(2), by_hand);
        assert_eq!(xk_epoly(2), p("q^3 - q^2"));
    }

    #[test]
    fn engine_agrees_with_both_oracles() {
        let d = affc_datum();
        let mut prev = None;
        for g in 1..=6 {
            let e = d.epoly_rep_variety(&SurfaceSpec::closed(g)).unwrap();
            assert_eq!(e, affc_closed_form(g), "closed form, g = {g}");
            assert_eq!(e, xk_epoly(2 * g), "X_2g, g = {g}");
            if let Some(prev) = &prev {
                assert_eq!(e, rep_recursion_step(g, prev), "recursion, g = {g}");
            }
            assert!(e.is_diagonal());
            prev = Some(e);
        }
    }

    // The q(q-1) factor can be cancelled before or after powering.
    #[test]
    fn factor_cancellation_routes_agree() {
        let m = reduced_genus_matrix();
        for g in 1..=5u32 {
            let pre = m.pow(g)[(0, 0)].clone();
            let post = affc_datum().epoly_rep_variety(&SurfaceSpec::closed(g)).unwrap();
            assert_eq!(pre, post);
        }
    }
}
