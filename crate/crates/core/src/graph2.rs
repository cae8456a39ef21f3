//! Degree-d invariants of points on the line as multigraphs.
//!
//! A 2-row tableau column is an upward edge i -> j (i < j); a degree-d
//! invariant is a multigraph with every vertex of degree d. Two edges
//! (a,b), (c,d) with a < c < b < d cross; resolving a crossing with the
//! three-term exchange
//!
//!   [ab][cd] = [ac][bd] + [ad][cb]
//!
//! strictly lowers the total crossing count (both replacement pairs cross
//! any third edge at most as often as the original pair, and the resolved
//! crossing disappears), so rewriting terminates on the non-crossing basis.
//! This is the hot path for the symmetric-group action matrices.

use crate::configs::Configuration;
use crate::perm::Perm;
use crate::scalar::{Int, One, Rat, Zero};
use crate::tableau::{Normalized, Tableau};
use std::collections::{BTreeMap, HashMap};

/// Multigraph on vertices 1..=n with upward edges, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph2 {
    pub n: u8,
    pub edges: Vec<(u8, u8)>,
}

impl Graph2 {
    pub fn new(n: u8, mut edges: Vec<(u8, u8)>) -> Self {
        for e in &edges {
            assert!(e.0 < e.1 && e.1 <= n, "edges must be upward within 1..=n");
        }
        edges.sort_unstable();
        Graph2 { n, edges }
    }

    /// From unordered endpoint pairs with orientation sign: a downward pair
    /// contributes a sign flip. Returns None when a pair is degenerate
    /// (equal endpoints), which is the zero invariant.
    pub fn orient(n: u8, pairs: &[(u8, u8)]) -> Option<(i8, Graph2)> {
        let mut sign = 1i8;
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return None;
            }
            if a < b {
                edges.push((a, b));
            } else {
                sign = -sign;
                edges.push((b, a));
            }
        }
        Some((sign, Graph2::new(n, edges)))
    }

    pub fn degree(&self) -> usize {
        self.edges.len() * 2 / self.n as usize
    }

    pub fn relabel(&self, g: &Perm) -> (i8, Graph2) {
        let pairs: Vec<(u8, u8)> =
            self.edges.iter().map(|&(a, b)| (g.apply(a), g.apply(b))).collect();
        Graph2::orient(self.n, &pairs).expect("relabeling keeps endpoints distinct")
    }

    pub fn crossing_count(&self) -> usize {
        let mut count = 0;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if crosses((a, b), (c, d)) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_count() == 0
    }

    pub fn as_tableau(&self) -> Tableau {
        let cols: Vec<Vec<u8>> = self.edges.iter().map(|&(a, b)| vec![a, b]).collect();
        match Tableau::normalize(2, self.n, &cols).expect("valid multigraph") {
            Normalized::Term { sign, tableau } => {
                debug_assert_eq!(sign, 1);
                tableau
            }
            Normalized::Zero => unreachable!("edges are non-degenerate"),
        }
    }

    pub fn from_tableau(t: &Tableau) -> Graph2 {
        assert_eq!(t.m, 2);
        Graph2::new(t.n, t.cols.iter().map(|c| (c[0], c[1])).collect())
    }

    pub fn evaluate(&self, cfg: &Configuration) -> Rat {
        let mut acc = Rat::one();
        for &(a, b) in &self.edges {
            acc *= cfg.minor(&[a, b]);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Edge list rendered `i-j i-j ...`, the report format for matchings.
    pub fn edge_text(&self) -> String {
        self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
    }

    pub fn from_edge_text(n: u8, text: &str) -> Option<Graph2> {
        let mut edges = vec![];
        for tok in text.split_whitespace() {
            let (a, b) = tok.split_once('-')?;
            edges.push((a.parse().ok()?, b.parse().ok()?));
        }
        Some(Graph2::new(n, edges))
    }
}

#[inline]
fn crosses(e: (u8, u8), f: (u8, u8)) -> bool {
    let ((a, b), (c, d)) = if e.0 <= f.0 { (e, f) } else { (f, e) };
    a < c && c < b && b < d
}

/// Integer expansion of a multigraph over non-crossing multigraphs. All
/// coefficients are nonnegative (the exchange has plus signs only).
pub fn resolve_crossings(
    g: &Graph2,
    memo: &mut HashMap<Graph2, BTreeMap<Graph2, Int>>,
) -> BTreeMap<Graph2, Int> {
    if let Some(hit) = memo.get(g) {
        return hit.clone();
    }
    let mut result = BTreeMap::new();
    let mut found = None;
    'search: for (i, &e) in g.edges.iter().enumerate() {
        for (j, &f) in g.edges.iter().enumerate().skip(i + 1) {
            if crosses(e, f) {
                found = Some((i, j));
                break 'search;
            }
        }
    }
    match found {
        None => {
            result.insert(g.clone(), Int::from(1));
        }
        Some((i, j)) => {
            let (e, f) = (g.edges[i], g.edges[j]);
            let ((a, b), (c, d)) = if e.0 <= f.0 { (e, f) } else { (f, e) };
            // [ab][cd] = [ac][bd] + [ad][cb] with a<c<b<d
            let rest: Vec<(u8, u8)> = g
                .edges
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, &x)| x)
                .collect();
            for replacement in [[(a, c), (b, d)], [(a, d), (c, b)]] {
                let mut edges = rest.clone();
                edges.extend_from_slice(&replacement);
                let h = Graph2::new(g.n, edges);
                debug_assert!(h.crossing_count() < g.crossing_count());
                for (nc, k) in resolve_crossings(&h, memo) {
                    *result.entry(nc).or_insert_with(|| Int::from(0)) += k;
                }
            }
        }
    }
    memo.insert(g.clone(), result.clone());
    result
}

/// The non-crossing perfect matchings on 1..=n (n even), in deterministic
/// (sorted) order; Catalan(n/2) of them.
pub fn noncrossing_matchings(n: u8) -> Vec<Graph2> {
    all_matchings(n).into_iter().filter(|m| m.is_noncrossing()).collect()
}

/// All perfect matchings on 1..=n (n even): (n-1)!! of them.
pub fn all_matchings(n: u8) -> Vec<Graph2> {
    let mut out = vec![];
    let mut edges = vec![];
    let mut used = vec![false; n as usize + 1];
    fn rec(n: u8, used: &mut Vec<bool>, edges: &mut Vec<(u8, u8)>, out: &mut Vec<Graph2>) {
        let Some(first) = (1..=n).find(|&v| !used[v as usize]) else {
            out.push(Graph2::new(n, edges.clone()));
            return;
        };
        used[first as usize] = true;
        for v in (first + 1)..=n {
            if used[v as usize] {
                continue;
            }
            used[v as usize] = true;
            edges.push((first, v));
            rec(n, used, edges, out);
            edges.pop();
            used[v as usize] = false;
        }
        used[first as usize] = false;
    }
    rec(n, &mut used, &mut edges, &mut out);
    out.sort();
    out
}

/// Expansion coefficients of a degree-1 sum over the 14 non-crossing
/// matchings (m = 2, n = 8). Input keyed by matching with rational weights;
/// output is the coefficient vector in basis order.
pub fn expand_in_matching_basis(
    terms: &BTreeMap<Graph2, Rat>,
    basis: &[Graph2],
    memo: &mut HashMap<Graph2, BTreeMap<Graph2, Int>>,
) -> Vec<Rat> {
    let index: BTreeMap<&Graph2, usize> = basis.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut out = vec![Rat::zero(); basis.len()];
    for (g, c) in terms {
        for (nc, k) in resolve_crossings(g, memo) {
            let i = *index.get(&nc).expect("resolution lands in the non-crossing basis");
            out[i] += c * Rat::from_integer(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::sample_generic;
    use crate::seeds::substream;

    #[test]
    fn crossing_resolution_three_term() {
        // {13,24} = {12,34} + {14,23} on four points
        let mut memo = HashMap::new();
        let g = Graph2::new(4, vec![(1, 3), (2, 4)]);
        let r = resolve_crossings(&g, &mut memo);
        let mut want = BTreeMap::new();
        want.insert(Graph2::new(4, vec![(1, 2), (3, 4)]), Int::from(1));
        want.insert(Graph2::new(4, vec![(1, 4), (2, 3)]), Int::from(1));
        assert_eq!(r, want);
        // evaluation oracle at 20 random configurations
        let mut rng = substream(5, "resolve-oracle");
        for _ in 0..20 {
            let cfg = sample_generic(2, 4, &mut rng).unwrap();
            let lhs = g.evaluate(&cfg);
            let rhs: Rat =
                r.iter().map(|(h, k)| h.evaluate(&cfg) * Rat::from_integer(k.clone())).sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fourteen_noncrossing_matchings() {
        let ms = noncrossing_matchings(8);
        assert_eq!(ms.len(), 14); // Catalan(4)
        assert!(ms.iter().all(|m| m.is_noncrossing()));
        assert_eq!(all_matchings(8).len(), 105);
        assert_eq!(all_matchings(4).len(), 3);
    }

    #[test]
    fn fully_crossing_matching_expands_integrally() {
        let basis = noncrossing_matchings(8);
        let mut memo = HashMap::new();
        let g = Graph2::new(8, vec![(1, 5), (2, 6), (3, 7), (4, 8)]);
        let mut terms = BTreeMap::new();
        terms.insert(g.clone(), Rat::one());
        let coeffs = expand_in_matching_basis(&terms, &basis, &mut memo);
        assert!(coeffs.iter().all(|c| c.is_integer()));
        assert!(coeffs.iter().any(|c| !c.is_zero()));
        // evaluation oracle at 20 random configurations
        let mut rng = substream(6, "expand-oracle");
        for _ in 0..20 {
            let cfg = sample_generic(2, 8, &mut rng).unwrap();
            let lhs = g.evaluate(&cfg);
            let rhs: Rat = coeffs.iter().zip(&basis).map(|(c, b)| c * b.evaluate(&cfg)).sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn basis_elements_expand_to_unit_vectors() {
        let basis = noncrossing_matchings(8);
        let mut memo = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            let mut terms = BTreeMap::new();
            terms.insert(b.clone(), Rat::one());
            let coeffs = expand_in_matching_basis(&terms, &basis, &mut memo);
            for (j, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }

    #[test]
    fn basis_is_linearly_independent_by_evaluation() {
        let basis = noncrossing_matchings(8);
        let mut rng = substream(8, "independence");
        let cfgs: Vec<_> = (0..20).map(|_| sample_generic(2, 8, &mut rng).unwrap()).collect();
        let rows: Vec<Vec<Rat>> =
            basis.iter().map(|b| cfgs.iter().map(|c| b.evaluate(c)).collect()).collect();
        assert_eq!(crate::matrix::rank_rational(&rows), 14);
    }

    #[test]
    fn relabel_signs() {
        let g = Graph2::new(8, vec![(1, 2), (3, 4), (5, 6), (7, 8)]);
        let rot = Perm::full_cycle(8);
        let (sign, h) = g.relabel(&rot);
        // exactly one edge (7,8)->(8,1) flips
        assert_eq!(sign, -1);
        assert_eq!(h, Graph2::new(8, vec![(1, 8), (2, 3), (4, 5), (6, 7)]));
    }
}
