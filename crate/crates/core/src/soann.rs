//! The subspace of Sym^d(14 variables) killed by all infinitesimal
//! rotations.
//!
//! An antisymmetric generator E_ij acts on a polynomial s by
//! x_i ds/dx_j - x_j ds/dx_i; the annihilated subspace is the kernel of the
//! stacked constraint matrix over all 91 pairs. Ranks run modulo two primes
//! with the final kernel basis confirmed exactly.

use crate::matrix::kernel_rational;
use crate::modp::{ModP, DEFAULT_PRIMES};
use crate::scalar::{Rat, Zero};
use std::collections::BTreeMap;

pub const NVARS: usize = 14;

/// Monomials of total degree d in `nv` variables, deterministic order.
pub fn monomials(nv: usize, d: u32) -> Vec<Vec<u16>> {
    let mut out = vec![];
    let mut cur = vec![0u16; nv];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(cur.clone());
            return;
        }
        for take in (0..=left).rev() {
            cur[i] = take as u16;
            rec(i + 1, left - take, cur, out);
        }
    }
    if nv == 0 {
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Rows of the constraint matrix for one pair (i,j) acting on Sym^d:
/// for each source monomial column, the image polynomial
/// x_i d/dx_j - x_j d/dx_i expanded over degree-d monomials.
fn pair_rows(
    basis: &[Vec<u16>],
    index: &BTreeMap<Vec<u16>, usize>,
    i: usize,
    j: usize,
) -> Vec<Vec<(usize, i64)>> {
    // image monomial -> sparse row over source columns
    let mut rows: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for (col, mono) in basis.iter().enumerate() {
        // x_i * d/dx_j
        if mono[j] > 0 {
            let mut m = mono.clone();
            m[j] -= 1;
            m[i] += 1;
            let r = index[&m];
            rows.entry(r).or_default().push((col, mono[j] as i64));
        }
        // -x_j * d/dx_i
        if mono[i] > 0 {
            let mut m = mono.clone();
            m[i] -= 1;
            m[j] += 1;
            let r = index[&m];
            rows.entry(r).or_default().push((col, -(mono[i] as i64)));
        }
    }
    rows.into_values().collect()
}

/// Stack all pair constraints as sparse rows over the Sym^d monomial basis.
pub fn constraint_rows(nv: usize, d: u32) -> (usize, Vec<Vec<(usize, i64)>>) {
    let basis = monomials(nv, d);
    let index: BTreeMap<Vec<u16>, usize> =
        basis.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut rows = vec![];
    for i in 0..nv {
        for j in (i + 1)..nv {
            rows.extend(pair_rows(&basis, &index, i, j));
        }
    }
    (basis.len(), rows)
}

/// Modular rank of a stack of sparse rows, eliminating into an echelon
/// accumulator of width `cols`.
fn sparse_rank_mod(ctx: ModP, cols: usize, rows: &[Vec<(usize, i64)>]) -> usize {
    // echelon[pivot_col] = normalized dense row
    let mut echelon: Vec<Option<Vec<u32>>> = vec![None; cols];
    let mut rank = 0usize;
    let mut dense = vec![0u32; cols];
    for row in rows {
        for v in dense.iter_mut() {
            *v = 0;
        }
        for &(c, val) in row {
            dense[c] = ctx.add(dense[c], ctx.from_i64(val));
        }
        let mut lead = None;
        for c in 0..cols {
            if dense[c] == 0 {
                continue;
            }
            if let Some(er) = &echelon[c] {
                let f = ctx.neg(dense[c]);
                for k in c..cols {
                    dense[k] = ctx.add(dense[k], ctx.mul(f, er[k]));
                }
            } else {
                lead = Some(c);
                break;
            }
        }
        if let Some(c) = lead {
            let inv = ctx.inv(dense[c]);
            let normalized: Vec<u32> = dense.iter().map(|&v| ctx.mul(v, inv)).collect();
            echelon[c] = Some(normalized);
            rank += 1;
        }
    }
    rank
}

pub struct AnnihilatorResult {
    pub dim: usize,
    pub primes: [u32; 2],
    /// exact kernel basis as rational vectors over the monomial basis
    pub kernel: Vec<Vec<Rat>>,
    pub monomial_basis: Vec<Vec<u16>>,
}

/// Dimension of { s in Sym^d : x_i ds/dx_j = x_j ds/dx_i for all i<j },
/// modular at two primes with the kernel confirmed exactly.
pub fn annihilated_dimension(nv: usize, d: u32) -> AnnihilatorResult {
    let (cols, rows) = constraint_rows(nv, d);
    let primes = DEFAULT_PRIMES;
    let r0 = sparse_rank_mod(ModP::new(primes[0]), cols, &rows);
    let r1 = sparse_rank_mod(ModP::new(primes[1]), cols, &rows);
    assert_eq!(r0, r1, "modular ranks disagree; exact recomputation required");
    let nullity = cols - r0;
    // exact confirmation of the kernel (cheap when the nullity is small)
    let kernel = if nullity > 0 {
        let dense: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| {
                let mut v = vec![Rat::zero(); cols];
                for &(c, val) in row {
                    v[c] += Rat::from_integer(val.into());
                }
                v
            })
            .collect();
        let k = kernel_rational(&dense, cols);
        assert_eq!(k.len(), nullity, "exact kernel must match the modular nullity");
        k
    } else {
        vec![]
    };
    AnnihilatorResult { dim: nullity, primes, kernel, monomial_basis: monomials(nv, d) }
}

/// General solution dimension of the single-pair constraint on polynomials
/// of degree <= dmax in two variables (the restricted system).
pub fn single_pair_dimension(dmax: u32) -> usize {
    // basis: monomials x^a y^b with a+b <= dmax
    let mut basis = vec![];
    for a in 0..=dmax as u16 {
        for b in 0..=(dmax as u16 - a) {
            basis.push((a, b));
        }
    }
    let index: BTreeMap<(u16, u16), usize> =
        basis.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    // constraint x dP/dy - y dP/dx = 0
    let mut rows_map: BTreeMap<(u16, u16), Vec<(usize, i64)>> = BTreeMap::new();
    for (col, &(a, b)) in basis.iter().enumerate() {
        if b > 0 {
            rows_map.entry((a + 1, b - 1)).or_default().push((col, b as i64));
        }
        if a > 0 {
            rows_map.entry((a - 1, b + 1)).or_default().push((col, -(a as i64)));
        }
    }
    let dense: Vec<Vec<Rat>> = rows_map
        .values()
        .map(|row| {
            let mut v = vec![Rat::zero(); basis.len()];
            for &(c, val) in row {
                v[c] += Rat::from_integer(val.into());
            }
            v
        })
        .collect();
    let _ = index;
    kernel_rational(&dense, basis.len()).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(14, 2).len(), 105);
        assert_eq!(monomials(14, 3).len(), 560);
        assert_eq!(monomials(14, 5).len(), 8568);
    }

    #[test]
    fn quadratic_annihilator_is_the_norm_form() {
        let res = annihilated_dimension(14, 2);
        assert_eq!(res.dim, 1);
        // the kernel vector must be proportional to sum of squares
        let v = &res.kernel[0];
        let mut scale = None;
        for (i, mono) in res.monomial_basis.iter().enumerate() {
            let is_square = mono.iter().any(|&e| e == 2);
            if is_square {
                match &scale {
                    None => scale = Some(v[i].clone()),
                    Some(s) => assert_eq!(&v[i], s),
                }
                assert_ne!(v[i], rat(0));
            } else {
                assert_eq!(v[i], rat(0));
            }
        }
    }

    #[test]
    fn two_variable_restricted_system() {
        // degree <= 3 polynomials in two variables: solutions a + c(x^2+y^2)
        assert_eq!(single_pair_dimension(3), 2);
    }
}
