use proptest::prelude::*;
use wicketlab::{max_cap_exact, CapSet, F3Vector};

fn all_points(n: usize) -> Vec<F3Vector> {
    (0..3u64.pow(n as u32))
        .map(|c| F3Vector::from_code(c, n))
        .collect()
}

fn sum_is_zero(x: &F3Vector, y: &F3Vector, z: &F3Vector) -> bool {
    x.add(y).unwrap().add(z).unwrap().is_zero()
}

/// Plain triple loop over distinct elements.
fn brute_has_line(points: &[F3Vector]) -> bool {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                if sum_is_zero(&points[i], &points[j], &points[k]) {
                    return true;
                }
            }
        }
    }
    false
}

fn max_by_subsets(n: usize) -> usize {
    let pts = all_points(n);
    (0u32..1 << pts.len())
        .filter_map(|mask| {
            let chosen: Vec<F3Vector> = (0..pts.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pts[i].clone())
                .collect();
            (!brute_has_line(&chosen)).then_some(chosen.len())
        })
        .max()
        .unwrap()
}

/// Extends `chosen` by every later point that keeps it a cap; no bound pruning.
fn backtrack(pts: &[F3Vector], start: usize, chosen: &mut Vec<F3Vector>, best: &mut usize) {
    *best = (*best).max(chosen.len());
    for i in start..pts.len() {
        let p = &pts[i];
        let ok = (0..chosen.len())
            .all(|a| (a + 1..chosen.len()).all(|b| !sum_is_zero(&chosen[a], &chosen[b], p)));
        if ok {
            chosen.push(p.clone());
            backtrack(pts, i + 1, chosen, best);
            chosen.pop();
        }
    }
}

#[test]
fn exact_maxima_match_subset_enumeration() {
    assert_eq!(max_by_subsets(0), 1);
    assert_eq!(max_by_subsets(1), 2);
    assert_eq!(max_by_subsets(2), 4);
    for n in 0..=2 {
        let (size, cap) = max_cap_exact(n).unwrap();
        assert_eq!(size, max_by_subsets(n));
        assert_eq!(cap.len(), size);
        assert!(cap.is_verified() && !brute_has_line(cap.elements()));
    }
}

#[test]
fn dimension_three_matches_unpruned_backtracking() {
    // Affine maps act transitively on ordered pairs of distinct points, so
    // every cap with at least two points is equivalent to one through 0 and e.
    let pts = all_points(3);
    let mut chosen = vec![pts[0].clone(), pts[1].clone()];
    let mut best = 0;
    backtrack(&pts, 2, &mut chosen, &mut best);
    assert_eq!(best, 9);
    let (size, cap) = max_cap_exact(3).unwrap();
    assert_eq!(size, best);
    assert!(!brute_has_line(cap.elements()));
    assert!(max_cap_exact(4).is_err());
}

#[test]
fn line_detection_examples() {
    let v = |s: &str| s.parse::<F3Vector>().unwrap();
    let line = CapSet::new(1, [v("0"), v("1"), v("2")]).unwrap();
    assert!(line.find_ap3().is_some());
    assert!(line.verify().is_err());
    let square = CapSet::verified(2, [v("00"), v("01"), v("10"), v("11")]).unwrap();
    assert_eq!(square.len(), 4);
    let power = CapSet::verified(1, [v("0"), v("1")])
        .unwrap()
        .power(3)
        .unwrap();
    assert_eq!(power.len(), 8);
    assert!(power.is_verified() && !brute_has_line(power.elements()));
}

fn arb_points(max_dim: usize) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1..=max_dim).prop_flat_map(|n| {
        let size = 3u64.pow(n as u32);
        (
            Just(n),
            proptest::collection::btree_set(0..size, 0..10).prop_map(|s| s.into_iter().collect()),
        )
    })
}

proptest! {
    #[test]
    fn encoding_round_trips(n in 0usize..8, seed in any::<u64>()) {
        let code = seed % 3u64.pow(n as u32);
        let v = F3Vector::from_code(code, n);
        prop_assert_eq!(v.code(), code);
        prop_assert_eq!(F3Vector::new(v.coords().to_vec()).unwrap(), v.clone());
        prop_assert_eq!(v.to_string().parse::<F3Vector>().unwrap(), v);
    }

    #[test]
    fn detector_matches_triple_loop((n, codes) in arb_points(4)) {
        let pts: Vec<F3Vector> = codes.iter().map(|&c| F3Vector::from_code(c, n)).collect();
        let cap = CapSet::new(n, pts.clone()).unwrap();
        prop_assert_eq!(cap.is_ap3_free(), !brute_has_line(&pts));
        if let Some([x, y, z]) = cap.find_ap3() {
            prop_assert!(sum_is_zero(&x, &y, &z));
        }
    }

    #[test]
    fn products_and_lifts_stay_caps((n, codes) in arb_points(3), (m, other) in arb_points(2)) {
        let a = CapSet::new(n, codes.iter().map(|&c| F3Vector::from_code(c, n))).unwrap();
        let b = CapSet::new(m, other.iter().map(|&c| F3Vector::from_code(c, m))).unwrap();
        if let (Ok(a), Ok(b)) = (a.verify(), b.verify()) {
            let p = a.product(&b).unwrap();
            prop_assert_eq!(p.len(), a.len() * b.len());
            prop_assert_eq!(p.dimension(), n + m);
            prop_assert!(!brute_has_line(p.elements()));
            let l = a.lift().unwrap();
            prop_assert_eq!(l.len(), a.len());
            prop_assert!(l.iter().all(|x| x.coords()[n] == 1));
            prop_assert!(!brute_has_line(l.elements()));
        }
    }

    #[test]
    fn addition_is_a_group(n in 1usize..6, a in any::<u64>(), b in any::<u64>()) {
        let size = 3u64.pow(n as u32);
        let (x, y) = (F3Vector::from_code(a % size, n), F3Vector::from_code(b % size, n));
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert!(x.add(&x.neg()).unwrap().is_zero());
        prop_assert_eq!(x.sub(&y).unwrap().add(&y).unwrap(), x.clone());
        prop_assert_eq!(x.scale(2).unwrap(), x.neg());
    }
}
