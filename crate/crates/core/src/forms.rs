//! The symplectic form `B`, the quadratic form `Q`, and the orbit classes
//! they induce on configurations.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2::F2Vector;
use crate::graph::Graph;
use crate::matching::{alternating_set, Matching};
use crate::theta::{radical, theta_preimage};

fn check_len(g: &Graph, v: &F2Vector) -> Result<()> {
    if v.len() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            found: v.len(),
        })
    }
}

/// `B(α,β) = αᵀ A β`, where `A` is the adjacency matrix.
pub fn eval_b(g: &Graph, alpha: &F2Vector, beta: &F2Vector) -> Result<bool> {
    check_len(g, alpha)?;
    check_len(g, beta)?;
    let mut acc = false;
    for s in alpha.ones() {
        acc ^= g.neighbors(s).iter().filter(|&&t| beta.get(t)).count() % 2 == 1;
    }
    Ok(acc)
}

/// Number of edges with both endpoints in the support of `alpha`.
fn induced_edges(g: &Graph, alpha: &F2Vector) -> usize {
    alpha
        .ones()
        .map(|s| {
            g.neighbors(s)
                .iter()
                .filter(|&&t| t > s && alpha.get(t))
                .count()
        })
        .sum()
}

/// `Q(α) = |T| + e(T) mod 2` where `T` is the support of `α` and `e(T)` the
/// number of edges inside `T`. This is the unique form with `Q(α_s) = 1`
/// whose polarization is `B`.
pub fn eval_q(g: &Graph, alpha: &F2Vector) -> Result<bool> {
    check_len(g, alpha)?;
    Ok((alpha.weight() + induced_edges(g, alpha)) % 2 == 1)
}

/// Basis of `Ker Q = {α ∈ rad V : Q(α) = 0}`.
///
/// `Q` is additive on `rad V` (the cross term `B` vanishes there), so its
/// kernel is the null space of one linear functional on the radical.
pub fn q_kernel(g: &Graph) -> Vec<F2Vector> {
    let mut rad = radical(g).kernel;
    let q: Vec<bool> = rad
        .iter()
        .map(|v| eval_q(g, v).expect("radical vectors have the right length"))
        .collect();
    let Some(pivot) = q.iter().position(|&x| x) else {
        reduce_basis(&mut rad);
        return rad;
    };
    let mut basis: Vec<F2Vector> = rad
        .iter()
        .zip(&q)
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .map(|(_, (v, &qv))| if qv { v.xor(&rad[pivot]) } else { v.clone() })
        .collect();
    reduce_basis(&mut basis);
    basis
}

/// Rewrites a linearly independent list into reduced echelon form, pivoting
/// on the lowest set coordinate.
fn reduce_basis(basis: &mut Vec<F2Vector>) {
    let Some(n) = basis.first().map(F2Vector::len) else {
        return;
    };
    let mut rows = std::mem::take(basis);
    for col in 0..n {
        let Some(p) = rows.iter().position(|r| r.get(col)) else {
            continue;
        };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut().chain(basis.iter_mut()) {
            if r.get(col) {
                r.xor_assign(&pivot);
            }
        }
        basis.push(pivot);
        rows.retain(|r| !r.is_zero());
    }
}

/// `α_s^∨ = Σ_{t∈A_s} α_t` for a tree with perfect matching `m`.
pub fn alpha_check(g: &Graph, m: &Matching, s: usize) -> Result<F2Vector> {
    let set = alternating_set(g, m, s)?;
    Ok(F2Vector::from_indices(g.vertex_count(), set))
}

/// Invariant class of a configuration on a nondegenerate graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitClass {
    ZeroOrbit,
    QZeroClass,
    QOneClass,
}

impl OrbitClass {
    pub fn label(self) -> &'static str {
        match self {
            OrbitClass::ZeroOrbit => "zero",
            OrbitClass::QZeroClass => "q0",
            OrbitClass::QOneClass => "q1",
        }
    }

    /// Class of the configuration `θ(α)`, given whether `α` is zero and `Q(α)`.
    pub fn from_preimage(is_zero: bool, q: bool) -> Self {
        match (is_zero, q) {
            (true, _) => OrbitClass::ZeroOrbit,
            (false, false) => OrbitClass::QZeroClass,
            (false, true) => OrbitClass::QOneClass,
        }
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitClass::ZeroOrbit => "ZeroOrbit",
            OrbitClass::QZeroClass => "QZeroClass",
            OrbitClass::QOneClass => "QOneClass",
        })
    }
}

/// Class of `f` by `Q(θ⁻¹(f))`.
///
/// The class never changes under lit-only moves. It is the complete orbit
/// label only on trees that are not paths; on other nondegenerate graphs
/// orbits may be finer.
pub fn classify_config(g: &Graph, f: &F2Vector) -> Result<OrbitClass> {
    let alpha = theta_preimage(g, f)?;
    Ok(OrbitClass::from_preimage(
        alpha.is_zero(),
        eval_q(g, &alpha)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::matching::tree_perfect_matching;

    fn labels(n: usize, ls: &[usize]) -> F2Vector {
        F2Vector::from_indices(n, ls.iter().map(|l| l - 1))
    }

    #[test]
    fn b_values() {
        let p2 = catalog::path(2);
        assert!(eval_b(&p2, &F2Vector::unit(2, 0), &F2Vector::unit(2, 1)).unwrap());
        let e6 = catalog::dynkin_e6();
        assert!(!eval_b(&e6, &labels(6, &[1]), &labels(6, &[5])).unwrap());
        let a = labels(6, &[1, 2, 4]);
        assert!(!eval_b(&e6, &a, &a).unwrap());
    }

    #[test]
    fn q_values() {
        let g = catalog::ladder_8();
        for s in 0..8 {
            assert!(eval_q(&g, &F2Vector::unit(8, s)).unwrap());
        }
        assert!(!eval_q(&g, &F2Vector::zeros(8)).unwrap());
        assert!(!eval_q(&g, &labels(8, &[1, 4, 5, 8])).unwrap());
        assert!(eval_q(&g, &labels(8, &[2, 4, 5])).unwrap());
        assert!(eval_q(&g, &labels(8, &[1])).unwrap());
    }

    #[test]
    fn q_kernels() {
        assert!(q_kernel(&catalog::path(4)).is_empty());
        let star = q_kernel(&catalog::star(3));
        assert_eq!(star.len(), 2);
        assert_eq!(star[0].to_bitstring(), "0101");
        assert_eq!(star[1].to_bitstring(), "0011");
        // α1+α2 lies in the span
        assert_eq!(star[0].xor(&star[1]).to_bitstring(), "0110");
        // P3: rad V = {α0+α2}, Q = 2 + 0 = 0
        assert_eq!(q_kernel(&catalog::path(3)).len(), 1);
        // K1,2 plus isolated vertex: rad contains α3 with Q = 1
        let g = Graph::from_edges(4, [(0, 1), (0, 2)]).unwrap();
        let k = q_kernel(&g);
        assert_eq!(k.len(), 1);
        assert!(!eval_q(&g, &k[0]).unwrap());
    }

    #[test]
    fn alpha_checks_on_e6() {
        let g = catalog::dynkin_e6();
        let m = tree_perfect_matching(&g).unwrap().unwrap();
        let a6 = alpha_check(&g, &m, 5).unwrap();
        assert_eq!(a6, labels(6, &[1, 5]));
        assert!(!eval_q(&g, &a6).unwrap());
        let a5 = alpha_check(&g, &m, 4).unwrap();
        assert_eq!(a5, labels(6, &[6]));
        assert!(eval_q(&g, &a5).unwrap());
        let p2 = catalog::path(2);
        let m2 = tree_perfect_matching(&p2).unwrap().unwrap();
        assert_eq!(alpha_check(&p2, &m2, 0).unwrap(), F2Vector::unit(2, 1));
    }

    #[test]
    fn classify_ladder() {
        let g = catalog::ladder_8();
        assert_eq!(
            classify_config(&g, &labels(8, &[2, 3, 6, 7])).unwrap(),
            OrbitClass::QZeroClass
        );
        assert_eq!(
            classify_config(&g, &labels(8, &[1])).unwrap(),
            OrbitClass::QOneClass
        );
        assert_eq!(
            classify_config(&g, &labels(8, &[2])).unwrap(),
            OrbitClass::QOneClass
        );
        assert_eq!(
            classify_config(&g, &F2Vector::zeros(8)).unwrap(),
            OrbitClass::ZeroOrbit
        );
        assert!(matches!(
            classify_config(&catalog::star(3), &F2Vector::zeros(4)),
            Err(Error::Degenerate { .. })
        ));
    }
}
