//! Maximum independent sets of visibility intersection graphs.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::region_graph::Vig;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSolution {
    pub chosen: Vec<Point>,
    /// Indices into the point list the solution was drawn from, ascending.
    pub indices: Vec<usize>,
    pub size: usize,
    /// Every pair of chosen indices, each checked non-adjacent.
    pub certificate: Vec<(usize, usize)>,
}

impl WitnessSolution {
    pub fn empty() -> Self {
        WitnessSolution { chosen: Vec::new(), indices: Vec::new(), size: 0, certificate: Vec::new() }
    }

    /// Checks pairwise independence in `vig` and records the certificate.
    pub fn certify(vig: &Vig, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        let mut certificate = Vec::new();
        for (k, &i) in indices.iter().enumerate() {
            for &j in &indices[k + 1..] {
                if vig.adjacent(i, j) {
                    return Err(Error::Invariant(format!("chosen points {i} and {j} see a common point")));
                }
                certificate.push((i, j));
            }
        }
        Ok(WitnessSolution {
            chosen: indices.iter().map(|&i| vig.points[i].clone()).collect(),
            size: indices.len(),
            indices,
            certificate,
        })
    }
}

/// Longest chain of pairwise disjoint points in x order.
pub fn mis_chain(vig: &Vig) -> Result<WitnessSolution> {
    if !vig.monotone_mode {
        return Err(Error::NotMonotoneVig);
    }
    let n = vig.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vig.points[i].x().cmp(vig.points[j].x()).then(i.cmp(&j)));
    let mut best = vec![1usize; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for (k, &j) in order.iter().enumerate() {
        for &i in &order[..k] {
            if vig.points[i].x() == vig.points[j].x() || vig.adjacent(i, j) {
                continue;
            }
            let better = best[i] + 1 > best[j] || (best[i] + 1 == best[j] && pred[j].is_some_and(|q| i < q));
            if better {
                best[j] = best[i] + 1;
                pred[j] = Some(i);
            }
        }
    }
    let Some(mut cur) = (0..n).max_by(|&i, &j| best[i].cmp(&best[j]).then(j.cmp(&i))) else {
        return Ok(WitnessSolution::empty());
    };
    let mut chain = vec![cur];
    while let Some(q) = pred[cur] {
        chain.push(q);
        cur = q;
    }
    WitnessSolution::certify(vig, chain)
}

struct Search<'a> {
    vig: &'a Vig,
    best: Vec<usize>,
}

impl Search<'_> {
    /// Greedy clique cover of `cand`: its size bounds any independent set inside it.
    fn cover_bound(&self, cand: &[u64]) -> usize {
        let mut left = cand.to_vec();
        let mut cliques = 0;
        while let Some(v) = first(&left) {
            cliques += 1;
            // grow a clique from v among remaining candidates
            let mut common: Vec<u64> = left.iter().zip(self.vig.row(v)).map(|(a, b)| a & b).collect();
            clear(&mut left, v);
            clear(&mut common, v);
            while let Some(u) = first(&common) {
                clear(&mut left, u);
                for (c, r) in common.iter_mut().zip(self.vig.row(u)) {
                    *c &= r;
                }
                clear(&mut common, u);
            }
        }
        cliques
    }

    fn run(&mut self, cur: &mut Vec<usize>, cand: &[u64]) {
        let Some(v) = first(cand) else {
            if cur.len() > self.best.len() {
                self.best = cur.clone();
            }
            return;
        };
        if cur.len() + self.cover_bound(cand) <= self.best.len() {
            return;
        }
        // take the lowest candidate first so the first maximum found is lexicographically smallest
        let take: Vec<u64> = cand.iter().zip(self.vig.row(v)).map(|(c, r)| c & !r).collect();
        cur.push(v);
        self.run(cur, &take);
        cur.pop();
        let mut skip = cand.to_vec();
        clear(&mut skip, v);
        self.run(cur, &skip);
    }
}

fn first(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

/// Exact maximum independent set by branch and bound; among maximum sets the
/// lexicographically smallest index sequence is returned.
pub fn mis_exact(vig: &Vig) -> Result<WitnessSolution> {
    let n = vig.len();
    let words = n.div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for i in 0..n {
        all[i / 64] |= 1 << (i % 64);
    }
    let mut s = Search { vig, best: Vec::new() };
    s.run(&mut Vec::new(), &all);
    WitnessSolution::certify(vig, s.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vig {
        let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Vig::from_edges(n, &e)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(mis_exact(&cycle(3)).unwrap().size, 1);
        let c5 = mis_exact(&cycle(5)).unwrap();
        assert_eq!(c5.indices, vec![0, 2]);
        assert_eq!(c5.certificate, vec![(0, 2)]);
        assert_eq!(mis_exact(&Vig::from_edges(7, &[])).unwrap().size, 7);
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        assert_eq!(mis_exact(&Vig::from_edges(5, &k5)).unwrap().size, 1);
        assert_eq!(mis_exact(&Vig::from_edges(0, &[])).unwrap().size, 0);
        // star: leaves beat the centre
        let star = Vig::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(mis_exact(&star).unwrap().indices, vec![1, 2, 3, 4]);
    }

    #[test]
    fn chain_needs_monotone_graph() {
        assert!(matches!(mis_chain(&cycle(4)), Err(Error::NotMonotoneVig)));
    }

    #[test]
    fn certify_rejects_adjacent() {
        assert!(WitnessSolution::certify(&cycle(4), vec![0, 1]).is_err());
    }
}
