//! Indexed monomial bases of Sym^d(k^nv) with variable-multiplication
//! transition tables, shared by the cubic and quintic constructions and the
//! syzygy rank check.

use crate::soann::monomials;
use std::collections::HashMap;

pub struct SymSpace {
    pub nv: usize,
    /// monos[d] lists the degree-d monomials in the fixed deterministic order
    pub monos: Vec<Vec<Vec<u16>>>,
    index: Vec<HashMap<Vec<u16>, u32>>,
    /// mul[d][idx * nv + var] = index of monomial * x_var in degree d+1
    mul: Vec<Vec<u32>>,
}

impl SymSpace {
    pub fn new(nv: usize, dmax: u32) -> Self {
        let mut monos = vec![];
        let mut index = vec![];
        for d in 0..=dmax {
            let ms = monomials(nv, d);
            let ix: HashMap<Vec<u16>, u32> =
                ms.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
            monos.push(ms);
            index.push(ix);
        }
        let mut mul = vec![];
        for d in 0..dmax as usize {
            let mut table = vec![0u32; monos[d].len() * nv];
            for (i, m) in monos[d].iter().enumerate() {
                for v in 0..nv {
                    let mut up = m.clone();
                    up[v] += 1;
                    table[i * nv + v] = index[d + 1][&up];
                }
            }
            mul.push(table);
        }
        SymSpace { nv, monos, index, mul }
    }

    pub fn dim(&self, d: u32) -> usize {
        self.monos[d as usize].len()
    }

    pub fn index_of(&self, d: u32, mono: &[u16]) -> u32 {
        self.index[d as usize][mono]
    }

    #[inline]
    pub fn mul_var(&self, d: u32, idx: u32, var: usize) -> u32 {
        self.mul[d as usize][idx as usize * self.nv + var]
    }

    /// Expand the d-th power of a sparse integer linear form into a dense
    /// degree-d coefficient vector.
    pub fn power_of_linear(&self, form: &[(usize, i64)], d: u32) -> Vec<i64> {
        let mut cur = vec![0i64; 1];
        cur[0] = 1;
        for k in 0..d {
            let mut next = vec![0i64; self.dim(k + 1)];
            for (idx, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &(v, f) in form {
                    let j = self.mul_var(k, idx as u32, v) as usize;
                    next[j] += c * f;
                }
            }
            cur = next;
        }
        cur
    }
}
