//! Invariant-ring characters through plethysm in the power-sum basis.
//!
//! The multiplicity of the irreducible `V_lambda` inside the degree-`d`
//! invariants of `n` points in P^(m-1) is the coefficient of the m-row
//! rectangular Schur function in `s_lambda[h_d]`. Everything is expanded
//! over power sums: `s_lambda = sum_mu chi_lambda(mu)/z_mu p_mu`, each
//! `p_k[h_d]` substitutes `p_j -> p_{jk}` in the power-sum expansion of
//! `h_d`, and pairing against the rectangle evaluates rectangle characters
//! `<p_nu, s_rect> = chi_rect(nu)` by Murnaghan–Nakayama.

use crate::characters::{CharacterTable, CharacterVector, MnEvaluator};
use crate::partitions::{partitions, Partition};
use crate::scalar::{Int, Rat, Zero};
use num::ToPrimitive;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlethysmError {
    #[error("m = {m} must divide d*n = {dn}")]
    Divisibility { m: u32, dn: u32 },
    #[error("negative or fractional multiplicity for {0}: {1}")]
    BadMultiplicity(String, String),
}

/// Decomposition of R_d for n points in P^(m-1): multiplicity per partition
/// of n, plus the assembled character vector.
#[derive(Debug)]
pub struct InvariantRingCharacter {
    pub multiplicities: Vec<(Partition, u64)>,
    pub character: CharacterVector,
}

/// p_k[h_d] in the power-sum basis: pairs (partition of k*d, coefficient).
fn pk_of_hd(k: u8, d: u32) -> Vec<(Vec<u8>, Rat)> {
    partitions(d)
        .into_iter()
        .map(|nu| {
            let scaled: Vec<u8> = nu.0.iter().map(|&p| p * k).collect();
            let mut sorted = scaled;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            (sorted, Rat::from_integer(nu.z()).recip())
        })
        .collect()
}

/// Union of two descending part lists, kept descending.
fn merge_parts(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// The character of R_d(n points in P^(m-1)) as an S_n representation.
pub fn invariant_ring_character(
    table: &CharacterTable,
    m: u32,
    d: u32,
) -> Result<InvariantRingCharacter, PlethysmError> {
    let n = table.n;
    let dn = d * n;
    if dn % m != 0 {
        return Err(PlethysmError::Divisibility { m, dn });
    }
    let cols = (dn / m) as u8;
    let rect: Vec<u8> = vec![cols; m as usize];

    // W_mu = < prod_{k in mu} p_k[h_d], s_rect >, one rational per class.
    let mut mn = MnEvaluator::new();
    let mut w = Vec::with_capacity(table.classes.len());
    for mu in &table.classes {
        if d == 0 {
            w.push(Rat::from_integer(Int::from(1)));
            continue;
        }
        let mut acc: BTreeMap<Vec<u8>, Rat> = BTreeMap::new();
        acc.insert(vec![], Rat::from_integer(Int::from(1)));
        for &k in &mu.0 {
            let factor = pk_of_hd(k, d);
            let mut next: BTreeMap<Vec<u8>, Rat> = BTreeMap::new();
            for (parts, c) in &acc {
                for (f_parts, f_c) in &factor {
                    let merged = merge_parts(parts, f_parts);
                    let contrib = c * f_c;
                    let e = next.entry(merged).or_insert_with(Rat::zero);
                    *e += contrib;
                }
            }
            acc = next;
        }
        let mut total = Rat::zero();
        for (rho, c) in &acc {
            let chi = mn.value(&rect, rho);
            if chi != 0 {
                total += c * Rat::from_integer(Int::from(chi));
            }
        }
        w.push(total);
    }

    // multiplicity(lambda) = sum_mu chi_lambda(mu)/z_mu * W_mu
    let mut multiplicities = vec![];
    let mut character = CharacterVector { n, values: vec![Int::from(0); table.classes.len()] };
    for lam in &table.classes {
        let row = table.irreducible(lam);
        let mut mult = Rat::zero();
        for (i, mu) in table.classes.iter().enumerate() {
            if w[i].is_zero() {
                continue;
            }
            mult += Rat::new(row.values[i].clone(), mu.z()) * &w[i];
        }
        if mult.is_zero() {
            continue;
        }
        if !mult.is_integer() || mult < Rat::zero() {
            return Err(PlethysmError::BadMultiplicity(lam.label(), mult.to_string()));
        }
        let m64 = mult.to_integer().to_u64().expect("small multiplicity");
        for (i, v) in character.values.iter_mut().enumerate() {
            *v += Int::from(m64) * &row.values[i];
        }
        multiplicities.push((lam.clone(), m64));
    }
    Ok(InvariantRingCharacter { multiplicities, character })
}

/// Multiplicity of one irreducible in R_d, when the full decomposition is
/// not needed.
pub fn invariant_multiplicity(
    table: &CharacterTable,
    m: u32,
    d: u32,
    lam: &Partition,
) -> Result<u64, PlethysmError> {
    let dec = invariant_ring_character(table, m, d)?;
    Ok(dec
        .multiplicities
        .iter()
        .find(|(l, _)| l == lam)
        .map(|&(_, mult)| mult)
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::scalar::int;

    #[test]
    fn degree_one_is_the_rectangle_representation() {
        let t = character_table(8);
        // m=2: V_{4,4}; m=4: V_{2,2,2,2}
        let r1m = invariant_ring_character(&t, 2, 1).unwrap();
        assert_eq!(r1m.multiplicities, vec![(Partition::new(vec![4, 4]), 1)]);
        let r1n = invariant_ring_character(&t, 4, 1).unwrap();
        assert_eq!(r1n.multiplicities, vec![(Partition::new(vec![2, 2, 2, 2]), 1)]);
    }

    #[test]
    fn degree_two_on_the_line_is_even_with_at_most_three_parts() {
        let t = character_table(8);
        let r2 = invariant_ring_character(&t, 2, 2).unwrap();
        let want: Vec<(Partition, u64)> = [vec![8], vec![6, 2], vec![4, 4], vec![4, 2, 2]]
            .into_iter()
            .map(|p| (Partition::new(p), 1))
            .collect::<std::collections::BTreeMap<_, _>>()
            .into_iter()
            .collect();
        let got: std::collections::BTreeMap<_, _> = r2.multiplicities.iter().cloned().collect();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), want);
        let id = t.identity_index();
        assert_eq!(r2.character.values[id], int(91));
    }

    #[test]
    fn divisibility_guard() {
        let t = character_table(8);
        assert!(invariant_ring_character(&t, 4, 0).is_ok());
        assert_eq!(
            invariant_ring_character(&t, 3, 1).unwrap_err(),
            PlethysmError::Divisibility { m: 3, dn: 8 }
        );
    }
}
