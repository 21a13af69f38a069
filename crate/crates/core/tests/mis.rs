use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wskit::gen::{random_monotone_polygon, random_point_in};
use wskit::geometry::Point;
use wskit::mis::{mis_chain, mis_exact};
use wskit::oracle::exhaustive_mis;
use wskit::region_graph::{build_vig, Vig};

fn complement_orientation_is_transitive(g: &Vig) -> bool {
    let n = g.len();
    let arc = |i: usize, j: usize| !g.adjacent(i, j) && g.points[i].x() > g.points[j].x();
    for i in 0..n {
        for j in 0..n {
            if !g.adjacent(i, j) && g.points[i].x() == g.points[j].x() {
                return false;
            }
            if !arc(i, j) {
                continue;
            }
            if (0..n).any(|k| arc(j, k) && !arc(i, k)) {
                return false;
            }
        }
    }
    true
}

#[test]
fn chain_exact_and_exhaustive_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut nontrivial = 0;
    for _ in 0..120 {
        let n = rng.gen_range(6..=16);
        let p = random_monotone_polygon(&mut rng, n);
        let m = rng.gen_range(1..=18);
        let f: Vec<Point> = (0..m).map(|_| random_point_in(&mut rng, &p)).collect();
        let g = build_vig(&p, &f).unwrap();
        if m <= 12 {
            assert!(complement_orientation_is_transitive(&g), "{:?} {:?}", p, f);
        }
        let chain = mis_chain(&g).unwrap();
        let exact = mis_exact(&g).unwrap();
        let brute = exhaustive_mis(&g).unwrap();
        assert_eq!(chain.size, brute, "{:?} {:?}", p, f);
        assert_eq!(exact.size, brute);
        nontrivial += usize::from(brute >= 2);
    }
    assert!(nontrivial > 20);
}

#[test]
fn adding_points_never_shrinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..40 {
        let p = random_monotone_polygon(&mut rng, 12);
        let mut f: Vec<Point> = Vec::new();
        let mut last = 0;
        for _ in 0..15 {
            f.push(random_point_in(&mut rng, &p));
            let s = mis_chain(&build_vig(&p, &f).unwrap()).unwrap().size;
            assert!(s >= last);
            last = s;
        }
    }
}

#[test]
fn exact_returns_lexicographically_smallest() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..60 {
        let n = rng.gen_range(1..=12);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.3)).collect();
        let g = Vig::from_edges(n, &edges);
        let got = mis_exact(&g).unwrap();
        let best = (0u32..1 << n)
            .filter(|&m| (0..n).all(|i| (0..n).all(|j| i == j || m >> i & 1 == 0 || m >> j & 1 == 0 || !g.adjacent(i, j))))
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
            .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)))
            .unwrap();
        assert_eq!(got.indices, best);
    }
}
