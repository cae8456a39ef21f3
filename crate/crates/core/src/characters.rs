//! Symmetric-group character theory.
//!
//! The character table comes from the Murnaghan–Nakayama rule. A
//! [`CharacterVector`] stores one integer per cycle type (classes indexed by
//! the fixed partition order); symmetric and exterior powers are computed by
//! the cycle-index formulas, and decomposition into irreducibles by the
//! class-size-weighted inner product.

use crate::partitions::{partitions, Partition};
use crate::scalar::{factorial, Int, Rat, Zero};
use num::ToPrimitive;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("class function is not a genuine character: multiplicity of {0} is {1}")]
    NonIntegralMultiplicity(String, String),
    #[error("character vectors belong to different groups")]
    GroupMismatch,
}

/// Murnaghan–Nakayama: chi_lambda(mu), memoized over (shape, class suffix).
/// Works for any shape; values can be large, so they are i128 (the largest
/// shape used is a 4x10 rectangle, whose dimension fits comfortably).
pub struct MnEvaluator {
    memo: HashMap<(Vec<u8>, Vec<u8>), i128>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        MnEvaluator { memo: HashMap::new() }
    }

    pub fn value(&mut self, shape: &[u8], class: &[u8]) -> i128 {
        if shape.is_empty() {
            return 1;
        }
        if class.is_empty() {
            // shape nonempty but no cycles left: inconsistent weights
            return 0;
        }
        let key = (shape.to_vec(), class.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let strip = class[0] as usize;
        let rest = &class[1..];
        let mut acc: i128 = 0;
        // remove every border strip of length `strip` from `shape`
        let rows = shape.len();
        for start in 0..rows {
            // a border strip occupying rows start..=end; determined by its
            // starting row: cells removed from row i are
            // (new_len[i] = shape[i+1] - 1 for i<end, computed top-down).
            // Standard formulation: try all end rows.
            for end in start..rows {
                // candidate: remove from rows start..=end so that
                //   row i (start<=i<end) shrinks to shape[i+1]-1
                //   row end shrinks to some length L >= (shape[end+1] or 0)
                // total removed = strip
                let mut removed = 0usize;
                let mut ok = true;
                for i in start..end {
                    let target = shape[i + 1] as usize;
                    if target == 0 {
                        ok = false;
                        break;
                    }
                    let newlen = target - 1;
                    if newlen > shape[i] as usize {
                        ok = false;
                        break;
                    }
                    removed += shape[i] as usize - newlen;
                }
                if !ok {
                    continue;
                }
                if removed >= strip {
                    continue;
                }
                let take_end = strip - removed;
                if take_end == 0 || take_end > shape[end] as usize {
                    continue;
                }
                let end_new = shape[end] as usize - take_end;
                let below = if end + 1 < rows { shape[end + 1] as usize } else { 0 };
                if end_new < below {
                    continue;
                }
                // connectivity: for start<i<=end the strip cells in row i-1 and
                // row i must overlap; the construction above guarantees it
                // when row i-1 shrinks exactly to shape[i]-1. For the pair
                // (end-1, end) we need end_new <= shape[end-1] new length... is
                // guaranteed since row end-1 shrinks to shape[end]-1 >= end_new
                // iff end_new <= shape[end]-1, i.e. take_end >= 1. ok.
                if end > start && end_new + 1 > shape[end] as usize {
                    continue;
                }
                let mut new_shape: Vec<u8> = Vec::with_capacity(rows);
                new_shape.extend_from_slice(&shape[..start]);
                for i in start..end {
                    new_shape.push((shape[i + 1] - 1) as u8);
                }
                new_shape.push(end_new as u8);
                new_shape.extend_from_slice(&shape[end + 1..]);
                while new_shape.last() == Some(&0) {
                    new_shape.pop();
                }
                // rows must stay weakly decreasing
                if new_shape.windows(2).any(|w| w[0] < w[1]) {
                    continue;
                }
                let height = end - start; // strip spans height+1 rows
                let sign = if height % 2 == 1 { -1i128 } else { 1 };
                acc += sign * self.value(&new_shape, rest);
            }
        }
        self.memo.insert(key, acc);
        acc
    }
}

/// A class function on S_n with integer values, indexed by the fixed
/// partition order of `partitions(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    pub n: u32,
    pub values: Vec<Int>,
}

/// The character table of S_n (rows are irreducibles, indexed like
/// `partitions(n)`).
pub struct CharacterTable {
    pub n: u32,
    pub classes: Vec<Partition>,
    pub rows: Vec<CharacterVector>,
}

pub fn character_table(n: u32) -> CharacterTable {
    assert!(n <= 12, "character tables are built at desk scale only");
    let classes = partitions(n);
    let mut mn = MnEvaluator::new();
    let rows = classes
        .iter()
        .map(|lam| CharacterVector {
            n,
            values: classes
                .iter()
                .map(|mu| Int::from(mn.value(&lam.0, &mu.0)))
                .collect(),
        })
        .collect();
    CharacterTable { n, classes, rows }
}

impl CharacterTable {
    pub fn class_index(&self, mu: &Partition) -> usize {
        self.classes.iter().position(|c| c == mu).expect("class present")
    }

    pub fn irreducible(&self, lam: &Partition) -> &CharacterVector {
        let i = self.classes.iter().position(|c| c == lam).expect("partition of n");
        &self.rows[i]
    }

    pub fn identity_index(&self) -> usize {
        self.class_index(&Partition(vec![1; self.n as usize]))
    }

    pub fn trivial(&self) -> CharacterVector {
        CharacterVector { n: self.n, values: vec![Int::from(1); self.classes.len()] }
    }

    pub fn sign(&self) -> CharacterVector {
        CharacterVector {
            n: self.n,
            values: self
                .classes
                .iter()
                .map(|mu| {
                    let transpositions: u32 =
                        mu.0.iter().map(|&p| (p - 1) as u32).sum();
                    Int::from(if transpositions % 2 == 0 { 1 } else { -1 })
                })
                .collect(),
        }
    }

    /// <a, b> = (1/n!) sum_mu |C_mu| a(mu) b(mu); integral for characters.
    pub fn inner_product(&self, a: &CharacterVector, b: &CharacterVector) -> Rat {
        assert_eq!(a.n, self.n);
        assert_eq!(b.n, self.n);
        let mut acc = Int::from(0);
        for (i, mu) in self.classes.iter().enumerate() {
            acc += mu.class_size() * &a.values[i] * &b.values[i];
        }
        Rat::new(acc, factorial(self.n as u64))
    }

    /// Multiplicity of the irreducible lambda in chi (must be integral).
    pub fn multiplicity(&self, chi: &CharacterVector, lam: &Partition) -> Result<i64, CharError> {
        let m = self.inner_product(chi, self.irreducible(lam));
        if !m.is_integer() {
            return Err(CharError::NonIntegralMultiplicity(lam.label(), m.to_string()));
        }
        Ok(m.to_integer().to_i64().expect("small multiplicity"))
    }

    /// Full decomposition; errors on non-integral or negative multiplicities,
    /// and checks exact reconstruction.
    pub fn decompose(&self, chi: &CharacterVector) -> Result<Vec<(Partition, u64)>, CharError> {
        let mut out = vec![];
        let mut recon = CharacterVector { n: self.n, values: vec![Int::from(0); self.classes.len()] };
        for lam in &self.classes {
            let m = self.multiplicity(chi, lam)?;
            if m < 0 {
                return Err(CharError::NonIntegralMultiplicity(lam.label(), m.to_string()));
            }
            if m > 0 {
                out.push((lam.clone(), m as u64));
                let row = self.irreducible(lam);
                for (i, v) in recon.values.iter_mut().enumerate() {
                    *v += Int::from(m) * &row.values[i];
                }
            }
        }
        assert_eq!(&recon, chi, "decomposition must reconstruct its input");
        Ok(out)
    }

    /// chi(g^k) as a vector over classes.
    fn power_values(&self, chi: &CharacterVector, k: u8) -> Vec<Int> {
        self.classes
            .iter()
            .map(|mu| {
                let idx = self.class_index(&mu.power(k));
                chi.values[idx].clone()
            })
            .collect()
    }

    /// Character of Sym^d(chi) by the cycle index of S_d:
    /// Sym^d chi (g) = sum over partitions lambda of d of
    /// (1/z_lambda) prod_i chi(g^{lambda_i}).
    pub fn symmetric_power(&self, chi: &CharacterVector, d: u32) -> CharacterVector {
        let nclasses = self.classes.len();
        let mut acc = vec![Rat::zero(); nclasses];
        for lam in partitions(d) {
            let z = Rat::from_integer(lam.z()).recip();
            // cache chi(g^k) per distinct k
            let mut prod = vec![Rat::from_integer(Int::from(1)); nclasses];
            for &part in &lam.0 {
                let pv = self.power_values(chi, part);
                for (i, p) in prod.iter_mut().enumerate() {
                    *p *= Rat::from_integer(pv[i].clone());
                }
            }
            for (i, a) in acc.iter_mut().enumerate() {
                *a += &prod[i] * &z;
            }
        }
        if d == 0 {
            return self.trivial();
        }
        CharacterVector {
            n: self.n,
            values: acc
                .into_iter()
                .map(|v| {
                    assert!(v.is_integer(), "symmetric power character must be integral");
                    v.to_integer()
                })
                .collect(),
        }
    }

    /// Character of the exterior square: (chi(g)^2 - chi(g^2)) / 2.
    pub fn exterior_square(&self, chi: &CharacterVector) -> CharacterVector {
        let sq = self.power_values(chi, 2);
        CharacterVector {
            n: self.n,
            values: chi
                .values
                .iter()
                .zip(sq)
                .map(|(v, v2)| {
                    let t = v * v - v2;
                    assert!((&t % Int::from(2)).is_zero());
                    t / Int::from(2)
                })
                .collect(),
        }
    }

    pub fn tensor(&self, a: &CharacterVector, b: &CharacterVector) -> CharacterVector {
        assert_eq!(a.n, b.n);
        CharacterVector {
            n: a.n,
            values: a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect(),
        }
    }
}

impl CharacterVector {
    pub fn dimension(&self, table: &CharacterTable) -> Int {
        self.values[table.identity_index()].clone()
    }

    pub fn add(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.n, other.n);
        CharacterVector {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.n, other.n);
        CharacterVector {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn trivial_and_sign_rows() {
        let t = character_table(8);
        let triv = t.irreducible(&Partition::new(vec![8]));
        assert!(triv.values.iter().all(|v| v == &int(1)));
        let sgn = t.irreducible(&Partition::new(vec![1; 8]));
        assert_eq!(sgn, &t.sign());
    }

    #[test]
    fn fourteen_dimensional_pair() {
        let t = character_table(8);
        let id = t.identity_index();
        assert_eq!(t.irreducible(&Partition::new(vec![4, 4])).values[id], int(14));
        assert_eq!(t.irreducible(&Partition::new(vec![2, 2, 2, 2])).values[id], int(14));
        // hook length oracle: dim V_{3,1,1,1,1,1} = 8!/1920 = 21
        assert_eq!(t.irreducible(&Partition::new(vec![3, 1, 1, 1, 1, 1])).values[id], int(21));
    }

    #[test]
    fn orthonormal_rows() {
        let t = character_table(8);
        for (i, a) in t.rows.iter().enumerate() {
            for (j, b) in t.rows.iter().enumerate() {
                let ip = t.inner_product(a, b);
                assert_eq!(ip, rat(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn sym_power_dimensions_are_stars_and_bars() {
        let t = character_table(8);
        let v44 = t.irreducible(&Partition::new(vec![4, 4])).clone();
        let id = t.identity_index();
        // d=1 returns chi itself
        assert_eq!(t.symmetric_power(&v44, 1), v44);
        let s2 = t.symmetric_power(&v44, 2);
        assert_eq!(s2.values[id], int(105)); // C(15,2)
        let e2 = t.exterior_square(&v44);
        assert_eq!(e2.values[id], int(91)); // C(14,2)
        let s3 = t.symmetric_power(&v44, 3);
        assert_eq!(s3.values[id], int(560)); // C(16,3)
    }

    #[test]
    fn skew_duality_of_the_fourteens() {
        let t = character_table(8);
        let v44 = t.irreducible(&Partition::new(vec![4, 4]));
        let twisted = t.tensor(v44, &t.sign());
        assert_eq!(&twisted, t.irreducible(&Partition::new(vec![2, 2, 2, 2])));
    }

    #[test]
    fn decompose_reconstructs() {
        let t = character_table(8);
        let v44 = t.irreducible(&Partition::new(vec![4, 4])).clone();
        let sq = t.tensor(&v44, &v44);
        let dec = t.decompose(&sq).unwrap();
        let total: Int = dec.iter().map(|(lam, m)| lam.dimension() * Int::from(*m)).sum();
        assert_eq!(total, int(196));
    }
}
