//! Permutations of `{1..n}` in one-line notation.

/// `map[i]` is the image of `i+1`, stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { map: (1..=n as u8).collect() }
    }

    /// From a one-line image list, 1-based.
    pub fn from_images(images: &[u8]) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in images {
            assert!(v >= 1 && v as usize <= n && !seen[v as usize], "not a permutation");
            seen[v as usize] = true;
        }
        Perm { map: images.to_vec() }
    }

    pub fn transposition(n: usize, a: u8, b: u8) -> Self {
        let mut p = Self::identity(n);
        p.map[(a - 1) as usize] = b;
        p.map[(b - 1) as usize] = a;
        p
    }

    /// The full cycle (1 2 ... n).
    pub fn full_cycle(n: usize) -> Self {
        let mut map: Vec<u8> = (2..=n as u8).collect();
        map.push(1);
        Perm { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, v: u8) -> u8 {
        self.map[(v - 1) as usize]
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { map: (1..=self.n() as u8).map(|v| self.apply(other.apply(v))).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u8; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            map[(v - 1) as usize] = (i + 1) as u8;
        }
        Perm { map }
    }

    pub fn sign(&self) -> i32 {
        let mut visited = vec![false; self.n()];
        let mut sign = 1;
        for start in 0..self.n() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = (self.map[cur] - 1) as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Cycle type as a descending partition of n.
    pub fn cycle_type(&self) -> Vec<u8> {
        let mut visited = vec![false; self.n()];
        let mut out = vec![];
        for start in 0..self.n() {
            if visited[start] {
                continue;
            }
            let mut len = 0u8;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = (self.map[cur] - 1) as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// A deterministic representative with the given cycle type.
    pub fn from_cycle_type(n: usize, parts: &[u8]) -> Perm {
        let mut map = vec![0u8; n];
        let mut next = 1u8;
        for &len in parts {
            let first = next;
            for k in 0..len {
                let cur = next + k;
                let img = if k + 1 == len { first } else { cur + 1 };
                map[(cur - 1) as usize] = img;
            }
            next += len;
        }
        Perm { map }
    }

    /// All n! permutations, in a deterministic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm { map: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_and_cycles() {
        let t = Perm::transposition(8, 1, 2);
        assert_eq!(t.sign(), -1);
        assert_eq!(t.cycle_type(), vec![2, 1, 1, 1, 1, 1, 1]);
        let c = Perm::full_cycle(8);
        assert_eq!(c.sign(), -1);
        assert_eq!(c.cycle_type(), vec![8]);
        assert_eq!(c.compose(&c.inverse()), Perm::identity(8));
    }

    #[test]
    fn enumeration_and_signs_balance() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        let total: i32 = all.iter().map(|p| p.sign()).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn representative_has_requested_type() {
        let p = Perm::from_cycle_type(8, &[4, 2, 2]);
        assert_eq!(p.cycle_type(), vec![4, 2, 2]);
    }
}
