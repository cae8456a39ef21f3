//! Integer partitions, cycle types, and their combinatorics.

use crate::scalar::{factorial, Int};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(pub Vec<u8>);

impl Partition {
    pub fn new(mut parts: Vec<u8>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// Rendered as "4+4" / "2+2+2+2".
    pub fn label(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
    }

    /// The centralizer order z_lambda = prod k^{m_k} m_k!.
    pub fn z(&self) -> Int {
        let mut mult = std::collections::BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_insert(0u64) += 1;
        }
        let mut z = Int::from(1);
        for (k, m) in mult {
            for _ in 0..m {
                z *= Int::from(k);
            }
            z *= factorial(m);
        }
        z
    }

    /// Conjugacy class size in S_n.
    pub fn class_size(&self) -> Int {
        factorial(self.weight() as u64) / self.z()
    }

    /// Cycle type of g^k when g has this cycle type: a part of length l
    /// splits into gcd(l,k) cycles of length l/gcd(l,k).
    pub fn power(&self, k: u8) -> Partition {
        let mut parts = vec![];
        for &l in &self.0 {
            let g = gcd_u8(l, k);
            for _ in 0..g {
                parts.push(l / g);
            }
        }
        Partition::new(parts)
    }

    /// Dimension of the S_n irreducible indexed by this partition, by the
    /// hook length formula.
    pub fn dimension(&self) -> Int {
        let n = self.weight() as u64;
        let rows = &self.0;
        let mut hooks = Int::from(1);
        for (i, &len) in rows.iter().enumerate() {
            for j in 0..len as usize {
                let arm = len as usize - 1 - j;
                let leg = rows.iter().skip(i + 1).filter(|&&r| r as usize > j).count();
                hooks *= Int::from((arm + leg + 1) as u64);
            }
        }
        factorial(n) / hooks
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition(vec![]);
        }
        let cols = self.0[0];
        let parts = (1..=cols).map(|j| self.0.iter().filter(|&&r| r >= j).count() as u8).collect();
        Partition(parts)
    }
}

fn gcd_u8(a: u8, b: u8) -> u8 {
    if b == 0 {
        a
    } else {
        gcd_u8(b, a % b)
    }
}

/// All partitions of `n`, in a fixed deterministic (lexicographic on the
/// descending part lists) order. This order pins class and row indices
/// everywhere downstream.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(remaining: u32, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        let cap = max.min(remaining.min(255) as u8);
        for next in (1..=cap).rev() {
            cur.push(next);
            rec(remaining - next as u32, next, cur, out);
            cur.pop();
        }
    }
    rec(n, n.min(255) as u8, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn counts_and_z() {
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(partitions(5).len(), 7);
        let lam = Partition::new(vec![2, 2, 2, 2]);
        // z = 2^4 * 4! = 384
        assert_eq!(lam.z(), int(384));
        assert_eq!(lam.class_size(), int(105));
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(Partition::new(vec![4, 4]).dimension(), int(14));
        assert_eq!(Partition::new(vec![2, 2, 2, 2]).dimension(), int(14));
        // 8!/1920 = 21
        assert_eq!(Partition::new(vec![3, 1, 1, 1, 1, 1]).dimension(), int(21));
        assert_eq!(Partition::new(vec![8]).dimension(), int(1));
    }

    #[test]
    fn power_map() {
        let lam = Partition::new(vec![8]);
        assert_eq!(lam.power(2), Partition::new(vec![4, 4]));
        assert_eq!(lam.power(3), Partition::new(vec![8]));
        assert_eq!(lam.power(4), Partition::new(vec![2, 2, 2, 2]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::new(vec![4, 4]).conjugate(), Partition::new(vec![2, 2, 2, 2]));
    }
}
