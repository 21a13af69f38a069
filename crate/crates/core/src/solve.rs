//! Witness set solvers: the discrete problem over a given candidate list, the exact
//! monotone solver, and the approximation schemes.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::cover::find_guard_cover;
use crate::discretizer::{add_r_mid, q_approx, vertical_decomposition, witgen_capped, CandidateSet};
use crate::error::{Error, Result};
use crate::geometry::{contains_closed, is_x_monotone, reflex_vertices, Point, Polygon, Rational};
use crate::mis::{mis_chain, mis_exact, WitnessSolution};
use crate::region_graph::{build_vig, regions_intersect_general};
use crate::visibility::{visibility_region, VisibilityRegion};

/// Re-checks a witness set with the general region predicate.
pub fn verify_witnesses(p: &Polygon, pts: &[Point]) -> Result<()> {
    let regions: Vec<VisibilityRegion> = pts.iter().map(|q| visibility_region(p, q)).collect::<Result<_>>()?;
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            if regions_intersect_general(&regions[i], &regions[j]) {
                return Err(Error::Invariant(format!("witnesses {i} and {j} see a common point")));
            }
        }
    }
    Ok(())
}

/// Largest subset of `s` with pairwise disjoint visibility regions.
pub fn solve_disws(p: &Polygon, s: &[Point]) -> Result<WitnessSolution> {
    if let Some(q) = s.iter().find(|q| !contains_closed(p, q)) {
        return Err(Error::PointOutside(q.to_string()));
    }
    if s.is_empty() {
        return Ok(WitnessSolution::empty());
    }
    let vig = build_vig(p, s)?;
    let sol = if vig.monotone_mode { mis_chain(&vig)? } else { mis_exact(&vig)? };
    verify_witnesses(p, &sol.chosen)?;
    Ok(sol)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimality {
    /// No larger set exists over the next candidate level.
    StoppingRule { k: usize },
    /// These points see the whole polygon, and there are as many as witnesses found.
    GuardCover { guards: Vec<Point> },
}

#[derive(Clone, Debug)]
pub struct Round {
    pub k: usize,
    pub candidates: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct ExactSolution {
    pub solution: WitnessSolution,
    pub proof: Optimality,
    pub rounds: Vec<Round>,
}

#[derive(Clone, Debug)]
pub struct ExactOptions {
    /// Largest guessed size; defaults to `max(1, r)`.
    pub k_max: Option<usize>,
    /// Largest candidate set the loop may build.
    pub candidate_budget: usize,
    /// Try to close the loop early with a guard cover.
    pub guard_certificate: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { k_max: None, candidate_budget: 6000, guard_certificate: true }
    }
}

/// `V ∪ R_mid ∪ Q_{2k}`, or `None` past the budget.
pub fn exact_candidates(p: &Polygon, k: usize, budget: usize) -> Result<Option<CandidateSet>> {
    let Some(mut c) = witgen_capped(p, k, budget)? else {
        return Ok(None);
    };
    add_r_mid(p, &mut c);
    Ok(Some(c))
}

pub fn solve_ws_exact(p: &Polygon, k_max: Option<usize>) -> Result<ExactSolution> {
    solve_ws_exact_with(p, &ExactOptions { k_max, ..ExactOptions::default() })
}

pub fn solve_ws_exact_with(p: &Polygon, opts: &ExactOptions) -> Result<ExactSolution> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let r = reflex_vertices(p).len();
    let k_max = opts.k_max.unwrap_or(r.max(1));
    let mut rounds: Vec<Round> = Vec::new();
    let mut best = WitnessSolution::empty();
    let mut certified_for = 0usize;
    let mut pool: Vec<Point> = Vec::new();

    // solve over the level-k candidates, recording the round
    let level = |k: usize, rounds: &mut Vec<Round>| -> Result<Option<(WitnessSolution, Vec<Point>)>> {
        let Some(c) = exact_candidates(p, k, opts.candidate_budget)? else {
            return Ok(None);
        };
        let pts = c.points();
        let sol = solve_disws(p, &pts)?;
        rounds.push(Round { k, candidates: pts.len(), size: sol.size });
        Ok(Some((sol, pts)))
    };
    let exceeded = |best: &WitnessSolution, reason: String| Error::BudgetExceeded { best: Box::new(best.clone()), reason };

    let mut k = 1;
    loop {
        let Some((sol, pts)) = level(k, &mut rounds)? else {
            return Err(exceeded(&best, format!("candidate budget {} reached at k = {k}", opts.candidate_budget)));
        };
        if sol.size > best.size {
            best = sol;
        }
        if pool.is_empty() {
            pool = guard_pool(p, &pts)?;
        }
        if opts.guard_certificate && best.size > certified_for {
            certified_for = best.size;
            if let Some(guards) = find_guard_cover(p, &pool, best.size, 40)? {
                return Ok(ExactSolution { solution: best, proof: Optimality::GuardCover { guards }, rounds });
            }
        }
        if best.size > k {
            k = best.size;
        } else {
            if k + 1 > k_max + 1 {
                return Err(exceeded(&best, format!("k_max = {k_max} reached")));
            }
            let Some((next, _)) = level(k + 1, &mut rounds)? else {
                return Err(exceeded(&best, format!("candidate budget {} reached at k = {}", opts.candidate_budget, k + 1)));
            };
            if next.size <= k {
                return Ok(ExactSolution { solution: best, proof: Optimality::StoppingRule { k }, rounds });
            }
            best = next;
            k = best.size;
        }
        if k > k_max {
            return Err(exceeded(&best, format!("k_max = {k_max} reached")));
        }
    }
}

/// Guard positions tried by the certificate: vertices, vertical-chord ends, reflex
/// midpoints and the first-level candidates.
fn guard_pool(p: &Polygon, level_one: &[Point]) -> Result<Vec<Point>> {
    let mut pool: Vec<Point> = p.vertices().to_vec();
    pool.extend(vertical_decomposition(p)?);
    pool.extend(level_one.iter().cloned());
    pool.sort();
    pool.dedup();
    Ok(pool)
}

#[derive(Clone, Debug)]
pub struct ApproxSolution {
    pub solution: WitnessSolution,
    /// Guaranteed fraction of the optimum.
    pub guarantee: Rational,
    pub candidates: usize,
}

/// Rounds and guarantee for a given epsilon: `Q_1` with 1/2 when `eps >= 1`, otherwise
/// `Q_{2i}` with `i/(i+1)` where `i = ceil(1/eps)`.
pub fn approx_plan(eps: &Rational) -> Result<(usize, Rational)> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveEps);
    }
    if eps >= &Rational::one() {
        return Ok((1, Rational::new(1.into(), 2.into())));
    }
    let inv = eps.recip();
    let i = inv.numer().div_ceil(inv.denom());
    let i = i.to_usize().ok_or_else(|| Error::Invariant("epsilon too small".into()))?;
    Ok((2 * i, Rational::new(i.into(), (i + 1).into())))
}

pub fn solve_ws_approx(p: &Polygon, eps: &Rational) -> Result<ApproxSolution> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let (iterations, guarantee) = approx_plan(eps)?;
    let pts = q_approx(p, iterations)?.points();
    let solution = solve_disws(p, &pts)?;
    Ok(ApproxSolution { solution, guarantee, candidates: pts.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};
    use crate::oracle::{comb_generator, comb_witnesses};

    fn pent() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]).unwrap()
    }

    #[test]
    fn discrete_front_door() {
        assert_eq!(solve_disws(&pent(), &[]).unwrap().size, 0);
        let s: Vec<Point> = [(0, 0), (2, 2), (4, 0)].iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        assert_eq!(solve_disws(&pent(), &s).unwrap().size, 1);
        let p2 = comb_generator(1, 0);
        let mut f = comb_witnesses(1);
        f.push(Point::new(int(6), ratio(5, 2)));
        let sol = solve_disws(&p2, &f).unwrap();
        assert_eq!(sol.indices, vec![0, 1]);
        assert!(matches!(solve_disws(&pent(), &[Point::from_ints(9, 9)]), Err(Error::PointOutside(_))));
    }

    #[test]
    fn exact_small_cases() {
        let e = solve_ws_exact(&pent(), None).unwrap();
        assert_eq!(e.solution.size, 1);
        for g in 1..=2 {
            let e = solve_ws_exact(&comb_generator(g, 0), None).unwrap();
            assert_eq!(e.solution.size, g + 1, "g={g}");
        }
        let sq = Polygon::from_ints(&[(0, 0), (3, 0), (3, 3), (0, 3), (0, 2), (2, 2), (2, 1), (0, 1)]).unwrap();
        assert!(matches!(solve_ws_exact(&sq, None), Err(Error::NotMonotone)));
    }

    #[test]
    fn stopping_rule_without_certificate() {
        let opts = ExactOptions { guard_certificate: false, ..ExactOptions::default() };
        let e = solve_ws_exact_with(&pent(), &opts).unwrap();
        assert_eq!(e.solution.size, 1);
        assert_eq!(e.proof, Optimality::StoppingRule { k: 1 });
        let e = solve_ws_exact_with(&comb_generator(1, 0), &opts).unwrap();
        assert_eq!(e.solution.size, 2);
    }

    #[test]
    fn approximation_plans() {
        assert_eq!(approx_plan(&int(1)).unwrap(), (1, ratio(1, 2)));
        assert_eq!(approx_plan(&int(3)).unwrap(), (1, ratio(1, 2)));
        assert_eq!(approx_plan(&ratio(1, 2)).unwrap(), (4, ratio(2, 3)));
        assert_eq!(approx_plan(&ratio(2, 5)).unwrap(), (6, ratio(3, 4)));
        assert!(matches!(approx_plan(&int(0)), Err(Error::NonPositiveEps)));
        assert_eq!(solve_ws_approx(&pent(), &int(1)).unwrap().solution.size, 1);
        let a = solve_ws_approx(&comb_generator(1, 0), &int(1)).unwrap();
        assert!(a.solution.size >= 1);
    }
}
