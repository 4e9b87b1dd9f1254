//! The adjacency matrix over F₂ and the map `θ: V → V*` it represents.

use crate::error::{Error, Result};
use crate::f2::{rank_and_kernel, solve, F2Matrix, F2Vector, RankKernel};
use crate::graph::Graph;

pub fn adjacency_matrix(g: &Graph) -> F2Matrix {
    F2Matrix::from_rows(
        (0..g.vertex_count())
            .map(|v| g.neighbor_vector(v))
            .collect(),
    )
}

/// Rank of the adjacency matrix and a basis of `rad V`.
pub fn radical(g: &Graph) -> RankKernel {
    rank_and_kernel(&adjacency_matrix(g))
}

pub fn is_nondegenerate(g: &Graph) -> bool {
    radical(g).is_invertible()
}

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

/// `θ(α) = Σ_{s∈α} Σ_{st∈R} f_t`.
pub fn theta_apply(g: &Graph, alpha: &F2Vector) -> Result<F2Vector> {
    check_len(g, alpha)?;
    let mut out = F2Vector::zeros(g.vertex_count());
    for s in alpha.ones() {
        for &t in g.neighbors(s) {
            out.flip(t);
        }
    }
    Ok(out)
}

/// The unique `α` with `θ(α) = f`. Fails on degenerate graphs.
pub fn theta_preimage(g: &Graph, f: &F2Vector) -> Result<F2Vector> {
    check_len(g, f)?;
    let a = adjacency_matrix(g);
    let rk = rank_and_kernel(&a);
    if !rk.is_invertible() {
        return Err(Error::Degenerate {
            radical_dim: rk.kernel.len(),
        });
    }
    Ok(solve(&a, f).expect("invertible system has a solution"))
}

/// Some `α` with `θ(α) = f`, or `None` when `f` is not in the image. Works on
/// degenerate graphs; the answer is then one of `2^dim(rad V)` choices.
pub fn theta_solve(g: &Graph, f: &F2Vector) -> Result<Option<F2Vector>> {
    check_len(g, f)?;
    Ok(solve(&adjacency_matrix(g), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn v(s: &str) -> F2Vector {
        s.parse().unwrap()
    }

    // 1-based labels to a bitstring of length n
    fn labels(n: usize, ls: &[usize]) -> F2Vector {
        F2Vector::from_indices(n, ls.iter().map(|l| l - 1))
    }

    #[test]
    fn adjacency_small() {
        let p2 = adjacency_matrix(&catalog::path(2));
        assert_eq!(p2.row(0), &v("01"));
        assert_eq!(p2.row(1), &v("10"));
        let star = adjacency_matrix(&catalog::star(3));
        assert_eq!(star.row(0), &v("0111"));
        for i in 1..4 {
            assert_eq!(star.row(i), &v("1000"));
        }
        let p4 = adjacency_matrix(&catalog::path(4));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p4.get(i, j), i.abs_diff(j) == 1);
            }
        }
        assert!(p4.is_symmetric());
    }

    #[test]
    fn ranks() {
        let p4 = radical(&catalog::path(4));
        assert_eq!((p4.rank, p4.kernel.len()), (4, 0));
        let star = radical(&catalog::star(3));
        assert_eq!(star.rank, 2);
        // spans {α1+α2, α2+α3}
        let span: Vec<F2Vector> = (0u32..4)
            .map(|c| {
                let mut acc = F2Vector::zeros(4);
                for (i, k) in star.kernel.iter().enumerate() {
                    if c >> i & 1 == 1 {
                        acc.xor_assign(k);
                    }
                }
                acc
            })
            .collect();
        assert!(span.contains(&v("0110")));
        assert!(span.contains(&v("0011")));
        assert_eq!(radical(&catalog::ladder_8()).rank, 8);
    }

    #[test]
    fn theta_examples() {
        let p2 = catalog::path(2);
        assert_eq!(theta_apply(&p2, &v("10")).unwrap(), v("01"));
        let ladder = catalog::ladder_8();
        let alpha = labels(8, &[1, 4, 5, 8]);
        let f = labels(8, &[2, 3, 6, 7]);
        assert_eq!(theta_apply(&ladder, &alpha).unwrap(), f);
        assert!(theta_apply(&ladder, &F2Vector::zeros(8)).unwrap().is_zero());
        assert_eq!(theta_preimage(&ladder, &f).unwrap(), alpha);
        assert_eq!(
            theta_preimage(&ladder, &labels(8, &[1])).unwrap(),
            labels(8, &[2, 4, 5])
        );
    }

    #[test]
    fn degenerate_preimage() {
        let star = catalog::star(3);
        assert_eq!(
            theta_preimage(&star, &v("1000")),
            Err(Error::Degenerate { radical_dim: 2 })
        );
        // image of θ for the star: f0 and f1+f2+f3 span it
        assert!(theta_solve(&star, &v("0111")).unwrap().is_some());
        assert!(theta_solve(&star, &v("0100")).unwrap().is_none());
    }

    #[test]
    fn length_checks() {
        assert!(matches!(
            theta_apply(&catalog::path(3), &v("01")),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
    }
}
