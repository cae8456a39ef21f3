//! Point configurations and their sampling.
//!
//! A configuration is an ordered n-tuple of points in P^(m-1) with exact
//! homogeneous coordinates. Generic samples draw small integer coordinates
//! and reject until every m points are linearly independent, which makes
//! every degree-1 tableau invariant nonzero.

use crate::scalar::{Int, Rat, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("rejection budget exhausted while sampling a generic configuration")]
    RejectionBudget,
    #[error("a point must not be the zero tuple")]
    ZeroPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub m: usize,
    /// coords[i] is the length-m coordinate tuple of point i+1
    pub coords: Vec<Vec<Rat>>,
}

impl Configuration {
    pub fn new(m: usize, coords: Vec<Vec<Rat>>) -> Result<Self, ConfigError> {
        for p in &coords {
            assert_eq!(p.len(), m);
            if p.iter().all(|c| c.is_zero()) {
                return Err(ConfigError::ZeroPoint);
            }
        }
        Ok(Configuration { m, coords })
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Determinant of the m coordinate rows of the named points (1-based).
    pub fn minor(&self, points: &[u8]) -> Rat {
        assert_eq!(points.len(), self.m);
        det_rat(&points.iter().map(|&p| self.coords[(p - 1) as usize].clone()).collect::<Vec<_>>())
    }

    /// Point coordinates reduced mod p (Montgomery form), for fast
    /// evaluation columns.
    pub fn reduced(&self, ctx: crate::modp::ModP) -> Vec<Vec<u32>> {
        self.coords.iter().map(|pt| pt.iter().map(|c| ctx.from_rat(c)).collect()).collect()
    }
}

/// Expansion by minors; m stays tiny (2 or 4) so this is fine.
pub fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    match n {
        0 => Rat::from_integer(Int::from(1)),
        1 => rows[0][0].clone(),
        2 => &rows[0][0] * &rows[1][1] - &rows[0][1] * &rows[1][0],
        _ => {
            let mut acc = Rat::zero();
            for k in 0..n {
                if rows[k][0].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rat>> = rows
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k)
                    .map(|(_, r)| r[1..].to_vec())
                    .collect();
                let term = &rows[k][0] * det_rat(&sub);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Determinant mod p of the named points' coordinate rows; `red` comes from
/// [`Configuration::reduced`]. Montgomery form in and out.
pub fn minor_mod(ctx: crate::modp::ModP, red: &[Vec<u32>], points: &[u8]) -> u32 {
    let m = points.len();
    let rows: Vec<&Vec<u32>> = points.iter().map(|&p| &red[(p - 1) as usize]).collect();
    det_mod(ctx, &rows, &(0..m).collect::<Vec<_>>())
}

fn det_mod(ctx: crate::modp::ModP, rows: &[&Vec<u32>], cols: &[usize]) -> u32 {
    match rows.len() {
        0 => ctx.one_m(),
        1 => rows[0][cols[0]],
        2 => ctx.sub(
            ctx.mul(rows[0][cols[0]], rows[1][cols[1]]),
            ctx.mul(rows[0][cols[1]], rows[1][cols[0]]),
        ),
        _ => {
            let mut acc = 0u32;
            for k in 0..rows.len() {
                let a = rows[k][cols[0]];
                if a == 0 {
                    continue;
                }
                let sub_rows: Vec<&Vec<u32>> =
                    rows.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, r)| *r).collect();
                let term = ctx.mul(a, det_mod(ctx, &sub_rows, &cols[1..]));
                acc = if k % 2 == 0 { ctx.add(acc, term) } else { ctx.sub(acc, term) };
            }
            acc
        }
    }
}

const COORD_RANGE: i64 = 20;
const REJECTION_BUDGET: usize = 2000;

/// Generic configuration: integer coordinates in [-20, 20], resampled until
/// every m-point minor is nonzero. Deterministic per generator state.
pub fn sample_generic(m: usize, n: usize, rng: &mut impl Rng) -> Result<Configuration, ConfigError> {
    'outer: for _ in 0..REJECTION_BUDGET {
        let coords: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..m)
                    .map(|_| Rat::from_integer(Int::from(rng.gen_range(-COORD_RANGE..=COORD_RANGE))))
                    .collect()
            })
            .collect();
        if coords.iter().any(|p| p.iter().all(|c| c.is_zero())) {
            continue 'outer;
        }
        let cfg = Configuration { m, coords };
        let idx: Vec<u8> = (1..=n as u8).collect();
        let mut subset = vec![0u8; m];
        if !all_minors_nonzero(&cfg, &idx, &mut subset, 0, 0) {
            continue 'outer;
        }
        return Ok(cfg);
    }
    Err(ConfigError::RejectionBudget)
}

fn all_minors_nonzero(
    cfg: &Configuration,
    idx: &[u8],
    subset: &mut Vec<u8>,
    pos: usize,
    start: usize,
) -> bool {
    if pos == cfg.m {
        return !cfg.minor(subset).is_zero();
    }
    for k in start..idx.len() {
        subset[pos] = idx[k];
        if !all_minors_nonzero(cfg, idx, subset, pos + 1, k + 1) {
            return false;
        }
    }
    true
}
