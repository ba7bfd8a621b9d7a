//! Small named groups used in tests, examples and the bundled group files.

use super::{FiniteGroup, DEFAULT_MAX_ORDER};

fn from_table(table: Vec<Vec<usize>>) -> FiniteGroup {
    FiniteGroup::from_cayley_table(&table).expect("built-in table is a group")
}

fn from_perms(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_permutation_generators(degree, gens, DEFAULT_MAX_ORDER).expect("built-in generators close")
}

/// `Z/n`, element `k` is `k mod n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
}

/// `G × H`, element `(g, h)` is `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let table =
        (0..n * m).map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect()).collect();
    from_table(table)
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Dihedral group of order `2n`; element `r^i s^j` is `i + n*j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n > 0);
    // r^a s^b · r^c s^d = r^(a + (-1)^b c) s^(b + d)
    let table = (0..2 * n)
        .map(|x| {
            let (a, b) = (x % n, x / n);
            (0..2 * n)
                .map(|y| {
                    let (c, d) = (y % n, y / n);
                    let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                    rot + n * ((b + d) % 2)
                })
                .collect()
        })
        .collect();
    from_table(table)
}

/// Quaternion group `{±1, ±i, ±j, ±k}`; element `4*s + u` is `(-1)^s` times
/// unit `u` in `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    // unit products as (sign, unit)
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|x: usize| {
            (0..8)
                .map(|y: usize| {
                    let (s, u) = UNITS[x % 4][y % 4];
                    4 * ((s + x / 4 + y / 4) % 2) + u
                })
                .collect()
        })
        .collect();
    from_table(table)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n > 0);
    if n == 1 {
        return cyclic(1);
    }
    let swap: Vec<usize> = (0..n).map(|i| [1, 0].get(i).copied().unwrap_or(i)).collect();
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_perms(n, &[swap, cycle])
}

/// Generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n > 0);
    if n < 3 {
        return cyclic(1);
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            (0..n)
                .map(|i| match i {
                    0 => 1,
                    1 => k,
                    _ if i == k => 0,
                    _ => i,
                })
                .collect()
        })
        .collect();
    from_perms(n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = g.conjugacy_classes().members.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn orders_and_classes() {
        assert_eq!(cyclic(4).order(), 4);
        assert_eq!(class_sizes(&cyclic(4)), vec![1; 4]);
        assert_eq!(class_sizes(&klein_four()), vec![1; 4]);
        assert_eq!(class_sizes(&symmetric(3)), vec![1, 2, 3]);
        assert_eq!(class_sizes(&dihedral(4)), vec![1, 1, 2, 2, 2]);
        assert_eq!(class_sizes(&quaternion()), vec![1, 1, 2, 2, 2]);
        assert_eq!(class_sizes(&alternating(4)), vec![1, 3, 4, 4]);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(cyclic(1).order(), 1);
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        let q8 = quaternion();
        let d4 = dihedral(4);
        let involutions = |g: &FiniteGroup| (1..8).filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(involutions(&q8), 1);
        assert_eq!(involutions(&d4), 5);
        assert!(!q8.is_abelian());
    }
}
