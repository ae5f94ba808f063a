use laplace_cycles::congruences::{build_asymptotic_pair, is_w_congruence};
use laplace_cycles::cycles::{diagonal_congruences, generate_cycle, verify_cycle};
use laplace_cycles::io::{from_json, to_json, Document};
use laplace_cycles::nets::{is_conjugate, laplace, laplace_sequence, Dir, NetWindow};
use laplace_cycles::plucker::{
    join_line_point, line_from_planes, line_from_points, lines_meet, meet_line_plane, project_between_lines, skew,
    transversal_through_point,
};
use laplace_cycles::projective::{collinear, cross_ratio, HomPoint};
use laplace_cycles::random::{random_conjugate_net, Sampler};
use laplace_cycles::scalar::{scalar_from_str, scalar_to_string, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coords() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-9i64..=9)
}

fn point() -> impl Strategy<Value = HomPoint> {
    coords().prop_filter_map("zero vector", |c| HomPoint::from_i64(c).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scaling_does_not_change_a_point(c in coords(), k in -7i64..=7) {
        prop_assume!(k != 0);
        let Ok(p) = HomPoint::from_i64(c) else { return Ok(()) };
        prop_assert_eq!(HomPoint::from_i64(c.map(|x| x * k)).unwrap(), p);
    }

    #[test]
    fn joined_lines_lie_on_the_klein_quadric(a in point(), b in point()) {
        prop_assume!(a != b);
        let l = line_from_points(&a, &b).unwrap();
        prop_assert!(l.klein_map().on_klein_quadric());
        prop_assert!(l.contains(&a) && l.contains(&b));
        prop_assert_eq!(line_from_points(&b, &a).unwrap(), l);
    }

    #[test]
    fn join_and_meet_describe_the_same_line(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b);
        let l = line_from_points(&a, &b).unwrap();
        prop_assume!(!l.contains(&c) && !l.contains(&d));
        let (p, q) = (join_line_point(&l, &c).unwrap(), join_line_point(&l, &d).unwrap());
        prop_assume!(p != q);
        prop_assert_eq!(line_from_planes(&p, &q).unwrap(), l);
    }

    #[test]
    fn lines_through_a_common_point_meet(x in point(), a in point(), b in point()) {
        prop_assume!(a != x && b != x);
        let l = line_from_points(&x, &a).unwrap();
        let m = line_from_points(&x, &b).unwrap();
        prop_assert!(lines_meet(&l, &m));
        prop_assert!(!skew(&l, &m));
    }

    #[test]
    fn projection_between_skew_lines_is_invertible(
        p in prop::array::uniform6(point()),
        t in -9i64..=9,
    ) {
        let (Ok(c), Ok(a), Ok(b)) = (
            line_from_points(&p[0], &p[1]),
            line_from_points(&p[2], &p[3]),
            line_from_points(&p[4], &p[5]),
        ) else { return Ok(()) };
        prop_assume!(skew(&c, &a) && skew(&c, &b) && skew(&a, &b));
        let (u, v) = a.span_points();
        let x = u.combine(&BigInt::from(1), &v, &BigInt::from(t)).unwrap();
        let y = project_between_lines(&c, &a, &b, &x).unwrap();
        prop_assert!(b.contains(&y));
        prop_assert_eq!(project_between_lines(&c, &b, &a, &y).unwrap(), x);
    }

    #[test]
    fn transversal_meets_both_lines(p in prop::array::uniform4(point()), x in point()) {
        let (Ok(a), Ok(b)) = (line_from_points(&p[0], &p[1]), line_from_points(&p[2], &p[3])) else {
            return Ok(())
        };
        prop_assume!(skew(&a, &b));
        let Ok(t) = transversal_through_point(&x, &a, &b) else { return Ok(()) };
        prop_assert!(t.contains(&x));
        prop_assert!(lines_meet(&t, &a) && lines_meet(&t, &b));
        let plane = join_line_point(&a, &x).unwrap();
        prop_assert!(plane.contains(&meet_line_plane(&b, &plane).unwrap()));
    }

    #[test]
    fn cross_ratio_is_invariant_under_double_swap(a in point(), b in point(), s in -9i64..=9, t in -9i64..=9) {
        prop_assume!(a != b && s != t);
        let one = BigInt::from(1);
        let c = a.combine(&one, &b, &BigInt::from(s)).unwrap();
        let d = a.combine(&one, &b, &BigInt::from(t)).unwrap();
        prop_assert!(collinear(&a, &b, &c) && collinear(&a, &b, &d));
        prop_assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), cross_ratio(&b, &a, &d, &c).unwrap());
        prop_assert_eq!(cross_ratio(&a, &b, &c, &d).unwrap(), cross_ratio(&c, &d, &a, &b).unwrap());
    }

    #[test]
    fn rationals_round_trip_through_strings(p in -1000i64..1000, q in 1i64..1000) {
        let x = Scalar::new(p.into(), q.into());
        prop_assert_eq!(scalar_from_str(&scalar_to_string(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_nets_round_trip_through_json(seed in any::<u64>(), n in 2i64..5) {
        let mut s = Sampler::new(seed);
        let f = random_conjugate_net(&mut s, NetWindow::square(n), 5).unwrap();
        prop_assert!(is_conjugate(&f).unwrap().is_empty());
        let doc = Document::Net(f);
        let text = to_json(&doc);
        prop_assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }

    #[test]
    fn mixed_laplace_transforms_shift_the_net(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let f = random_conjugate_net(&mut s, NetWindow::square(3), 4).unwrap();
        let l12 = laplace(&f, Dir::Second).and_then(|x| laplace(&x, Dir::First));
        let l21 = laplace(&f, Dir::First).and_then(|x| laplace(&x, Dir::Second));
        let (Ok(l12), Ok(l21)) = (l12, l21) else { return Ok(()) };
        prop_assert!(l12.agrees_with(&f.shifted(-1, -1)));
        prop_assert!(l21.agrees_with(&f.shifted(-1, -1)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn generated_cycles_satisfy_their_invariants(seed in any::<u64>()) {
        let (c, _) = generate_cycle(seed, &NetWindow::square(5), 100).unwrap();
        prop_assert!(verify_cycle(&c).is_clean());
        let (k, l) = diagonal_congruences(&c).unwrap();
        prop_assert!(is_w_congruence(&k).unwrap().is_clean());
        prop_assert!(is_w_congruence(&l).unwrap().is_clean());
        for dir in [Dir::First, Dir::Second] {
            prop_assert!(laplace_sequence(&c.f, dir, 4).unwrap().agrees_with(&c.f.shifted(-2, -2)));
        }
        let seeds: Vec<_> = [(0, 0), (1, 0), (0, 1), (1, 1)].map(|v| (v, c.f.at(v).unwrap().clone())).into();
        let (f, g) = build_asymptotic_pair(&k, &seeds).unwrap();
        prop_assert_eq!(f, c.f);
        prop_assert_eq!(g, c.g);
    }
}
