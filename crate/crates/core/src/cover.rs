//! Guard covers. A set of points whose visibility regions cover the polygon bounds the
//! witness number from above, since every witness is seen by some guard and no guard is
//! seen by two witnesses.

use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::{segments_intersect, Point, Polygon, Rational, Segment, SegmentIntersection};
use crate::visibility::{visibility_region, VisibilityRegion};

fn crossings(poly: &Polygon, x: &Rational) -> Vec<Rational> {
    let mut ys: Vec<Rational> = poly
        .edges()
        .filter_map(|(a, b)| {
            let (lo, hi) = if a.x() < b.x() { (a, b) } else { (b, a) };
            if lo.x() < x && x < hi.x() {
                let t = (x - lo.x()) / (hi.x() - lo.x());
                Some(lo.y() + (hi.y() - lo.y()) * t)
            } else {
                None
            }
        })
        .collect();
    ys.sort();
    ys
}

fn intervals(poly: &Polygon, x: &Rational) -> Vec<(Rational, Rational)> {
    let ys = crossings(poly, x);
    ys.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

/// Exact check that the closed regions cover the polygon. Returns an uncovered point
/// otherwise.
pub fn uncovered_point(p: &Polygon, regions: &[VisibilityRegion]) -> Option<Point> {
    let mut xs: Vec<Rational> = p.vertices().iter().map(|v| v.x().clone()).collect();
    for r in regions {
        xs.extend(r.region.vertices().iter().map(|v| v.x().clone()));
    }
    for (i, ri) in regions.iter().enumerate() {
        for rj in &regions[i + 1..] {
            for s in ri.region.edges() {
                for t in rj.region.edges() {
                    let (s, t) = (Segment::new(s.0.clone(), s.1.clone()), Segment::new(t.0.clone(), t.1.clone()));
                    match segments_intersect(&s, &t) {
                        SegmentIntersection::Point(q) => xs.push(q.x().clone()),
                        SegmentIntersection::Overlap(o) => {
                            xs.push(o.a.x().clone());
                            xs.push(o.b.x().clone());
                        }
                        SegmentIntersection::Disjoint => {}
                    }
                }
            }
        }
    }
    xs.sort();
    xs.dedup();
    let two = Rational::from_integer(2.into());
    for w in xs.windows(2) {
        let m = (&w[0] + &w[1]) / &two;
        let mut cover: Vec<(Rational, Rational)> = regions.iter().flat_map(|r| intervals(&r.region, &m)).collect();
        cover.sort();
        for (lo, hi) in intervals(p, &m) {
            let mut reach = lo.clone();
            for (a, b) in &cover {
                if a > &reach {
                    break;
                }
                if b > &reach {
                    reach = b.clone();
                }
            }
            if reach < hi {
                let next = cover.iter().map(|(a, _)| a).find(|a| *a > &reach).cloned().unwrap_or(hi.clone());
                let gap_end = if next < hi { next } else { hi };
                return Some(Point::new(m, (&reach + &gap_end) / &two));
            }
        }
    }
    None
}

/// Does every point of the polygon see some guard?
pub fn verify_cover(p: &Polygon, guards: &[Point]) -> Result<Option<Point>> {
    let regions: Vec<VisibilityRegion> = guards.par_iter().map(|g| visibility_region(p, g)).collect::<Result<_>>()?;
    Ok(uncovered_point(p, &regions))
}

struct CoverSearch<'a> {
    /// Per sample, the pool indices seeing it.
    seen_by: &'a [Vec<usize>],
    /// Per pool index, the samples it sees as a bitset.
    sees: &'a [Vec<u64>],
    nodes: usize,
    node_cap: usize,
}

impl CoverSearch<'_> {
    fn run(&mut self, uncovered: &[u64], left: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return None;
        }
        // most constrained uncovered sample
        let mut pick: Option<usize> = None;
        for (w, word) in uncovered.iter().enumerate() {
            let mut bits = *word;
            while bits != 0 {
                let s = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if pick.is_none_or(|q| self.seen_by[s].len() < self.seen_by[q].len()) {
                    pick = Some(s);
                }
            }
        }
        let Some(s) = pick else {
            return Some(chosen.clone());
        };
        if left == 0 {
            return None;
        }
        for &g in &self.seen_by[s] {
            let rest: Vec<u64> = uncovered.iter().zip(&self.sees[g]).map(|(u, c)| u & !c).collect();
            chosen.push(g);
            if let Some(found) = self.run(&rest, left - 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
}

/// Looks for at most `target` pool points covering the polygon, refining a sample set
/// with uncovered points until the exact check passes.
pub fn find_guard_cover(p: &Polygon, pool: &[Point], target: usize, rounds: usize) -> Result<Option<Vec<Point>>> {
    if target == 0 {
        return Ok(None);
    }
    let regions: Vec<VisibilityRegion> = pool.par_iter().map(|g| visibility_region(p, g)).collect::<Result<_>>()?;
    let mut samples: Vec<Point> = p.vertices().to_vec();
    samples.extend(p.edges().map(|(a, b)| a.midpoint(b)));
    for _ in 0..rounds {
        let n = samples.len();
        let words = n.div_ceil(64);
        let sees: Vec<Vec<u64>> = regions
            .par_iter()
            .map(|r| {
                let mut row = vec![0u64; words];
                for (k, s) in samples.iter().enumerate() {
                    if r.contains(s) {
                        row[k / 64] |= 1 << (k % 64);
                    }
                }
                row
            })
            .collect();
        // keep one representative of each maximal coverage pattern
        let mut keep: Vec<usize> = Vec::new();
        let mut order: Vec<usize> = (0..pool.len()).collect();
        order.sort_by_key(|&g| std::cmp::Reverse(sees[g].iter().map(|w| w.count_ones()).sum::<u32>()));
        for g in order {
            let dominated = keep.iter().any(|&h| sees[g].iter().zip(&sees[h]).all(|(a, b)| a & !b == 0));
            if !dominated {
                keep.push(g);
            }
        }
        let mut seen_by = vec![Vec::new(); n];
        for &g in &keep {
            for (k, list) in seen_by.iter_mut().enumerate() {
                if sees[g][k / 64] >> (k % 64) & 1 == 1 {
                    list.push(g);
                }
            }
        }
        if seen_by.iter().any(Vec::is_empty) {
            return Ok(None);
        }
        let mut all = vec![0u64; words];
        for k in 0..n {
            all[k / 64] |= 1 << (k % 64);
        }
        let mut search = CoverSearch { seen_by: &seen_by, sees: &sees, nodes: 0, node_cap: 200_000 };
        let Some(chosen) = search.run(&all, target, &mut Vec::new()) else {
            return Ok(None);
        };
        let chosen_regions: Vec<VisibilityRegion> = chosen.iter().map(|&g| regions[g].clone()).collect();
        match uncovered_point(p, &chosen_regions) {
            None => return Ok(Some(chosen.iter().map(|&g| pool[g].clone()).collect())),
            Some(q) => samples.push(q),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};
    use crate::oracle::comb_generator;

    #[test]
    fn single_kernel_guard() {
        let l = Polygon::from_ints(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]).unwrap();
        assert_eq!(verify_cover(&l, &[Point::from_ints(1, 1)]).unwrap(), None);
        let miss = verify_cover(&l, &[Point::from_ints(3, 1)]).unwrap().unwrap();
        assert!(miss.x() < &int(2) && miss.y() > &int(2));
    }

    #[test]
    fn comb_needs_g_plus_one() {
        for g in 1..=3 {
            let c = comb_generator(g, 0);
            let pool: Vec<Point> = (1..=2 * g as i64).map(|j| Point::from_ints(4 * j, 0)).collect();
            let cover = find_guard_cover(&c, &pool, g + 1, 20).unwrap().unwrap();
            assert_eq!(cover.len(), g + 1);
            assert!(find_guard_cover(&c, &pool, g, 20).unwrap().is_none());
        }
        let p2 = comb_generator(1, 0);
        let tip = Point::new(int(4), ratio(1, 2));
        assert!(verify_cover(&p2, &[tip]).unwrap().is_some());
    }
}
