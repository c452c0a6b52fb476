//! Worked values, each checked against a computation done here by hand
//! rather than through the crate.

mod common;

use ks_rational::density::{
    approximate_triad, approximate_vector, certified_angle_leq, orbit, rot_x_35, ApproxConfig, ApproxTarget, Generator,
    GeneratorSet,
};
use ks_rational::exact::{gcd3, integer_sqrt_exact, quad_dot3, Quad};
use ks_rational::ks::{build_graph, bundled, count_colorings, nullify, parse_vector_set, snap_vectors, Mode};
use ks_rational::sphere::{equator_point, make_triad, stereo, stereo_inv, triad_coloring};
use ks_rational::{BigInt, Color, Direction, Error, OrthoGraph, Rat, RationalTriad, SpherePoint};
use num_traits::Zero;

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn pt(x: i64, y: i64, z: i64) -> SpherePoint {
    SpherePoint::from_i64(x, y, z).unwrap()
}

fn q2(a: i64, b: i64) -> Quad<Rat> {
    Quad::new(r(a, 1), r(b, 1), 2).unwrap()
}

#[test]
fn gcd_and_square_roots() {
    let g = |x, y, z| gcd3(&BigInt::from(x), &BigInt::from(y), &BigInt::from(z)).unwrap();
    assert_eq!(g(2, 4, 6), BigInt::from(2));
    assert_eq!(g(0, 0, -5), BigInt::from(5));
    assert_eq!(g(1, 2, 2), BigInt::from(1));
    let s = |n: i64| integer_sqrt_exact(&BigInt::from(n)).unwrap();
    assert_eq!(s(49), Some(BigInt::from(7)));
    assert_eq!(s(50), None);
    assert_eq!(s(0), Some(BigInt::zero()));
}

#[test]
fn sqrt2_orthogonality() {
    // 1*sqrt2 + sqrt2*(-1) + 0 = 0
    let u = [q2(1, 0), q2(0, 1), q2(0, 0)];
    let v = [q2(0, 1), q2(-1, 0), q2(0, 0)];
    assert!(quad_dot3(&u, &v).unwrap().is_zero());
    assert_eq!(q2(0, 1).try_mul(&q2(0, 1)).unwrap(), q2(2, 0));
}

#[test]
fn directions_and_points() {
    let d = |x, y, z| Direction::from_i64(x, y, z);
    assert_eq!(d(2, 4, 6).unwrap().components(), &[1, 2, 3].map(BigInt::from));
    assert_eq!(d(0, -8, 6).unwrap().components(), &[0, -4, 3].map(BigInt::from));
    assert!(matches!(d(0, 0, 0), Err(Error::DegenerateInput(_))));
    // 1 + 4 + 4 = 9
    assert_eq!(pt(1, 2, 2).n(), &BigInt::from(3));
    assert!(matches!(SpherePoint::from_i64(1, 1, 1), Err(Error::NotOnRationalSphere { .. })));
    assert_eq!(pt(0, 0, 1).n(), &BigInt::from(1));
    // 4 + 36 + 9 = 49, z = 3 odd
    assert_eq!(pt(2, 6, 3).n(), &BigInt::from(7));
    assert_eq!(pt(2, 6, 3).color(), Color::Yes);
    assert_eq!(pt(0, 0, 1).color(), Color::Yes);
    assert_eq!(pt(1, 0, 0).color(), Color::No);
}

#[test]
fn dot_cross_and_triads() {
    let (u, v) = (pt(1, 2, 2), pt(2, 1, -2));
    assert!(u.direction().dot(v.direction()).is_zero());
    // raw cross (-6, 6, -3), gcd 3
    assert_eq!(u.direction().cross(v.direction()).unwrap(), Direction::from_i64(-2, 2, -1).unwrap());
    let t = make_triad(u, v).unwrap();
    assert_eq!(t.w(), &pt(-2, 2, -1));
    assert!(t.members().iter().all(|p| p.n() == &BigInt::from(3)));
    assert_eq!(make_triad(pt(1, 0, 0), pt(0, 1, 0)).unwrap().w(), &pt(0, 0, 1));
    assert!(make_triad(pt(1, 0, 0), pt(3, 4, 0)).is_err());

    assert_eq!(triad_coloring(&RationalTriad::canonical()), [Color::No, Color::No, Color::Yes]);
    let t = RationalTriad::new(pt(1, 2, 2), pt(2, 1, -2), pt(2, -2, 1)).unwrap();
    assert_eq!(triad_coloring(&t), [Color::No, Color::No, Color::Yes]);
    let t = make_triad(pt(0, -4, 3), pt(0, 3, 4)).unwrap();
    assert_eq!(triad_coloring(&t).iter().filter(|c| **c == Color::Yes).count(), 1);
}

#[test]
fn parametrizations() {
    assert_eq!(equator_point(&r(0, 1)), pt(1, 0, 0));
    assert_eq!(equator_point(&r(1, 1)), pt(0, 1, 0));
    // (4 - 1, 4, 0) / 5
    assert_eq!(equator_point(&r(1, 2)), pt(3, 4, 0));
    assert_eq!(stereo_inv(&r(0, 1), &r(0, 1)), pt(0, 0, -1));
    assert_eq!(stereo_inv(&r(1, 1), &r(0, 1)), pt(1, 0, 0));
    let (a, b) = (r(-7, 3), r(5, 11));
    assert_eq!(stereo(&stereo_inv(&a, &b)).unwrap(), (a, b));
}

#[test]
fn generator_images() {
    let x = rot_x_35();
    let p1 = x.apply(&SpherePoint::north());
    assert_eq!(p1, pt(0, -4, 3));
    assert_eq!(p1.n(), &BigInt::from(5));
    let p2 = x.compose(&x).apply(&SpherePoint::north());
    assert_eq!(p2, pt(0, -24, -7));
    assert_eq!(p2.n(), &BigInt::from(25));
    assert_eq!(p2.color(), Color::Yes);

    let o = orbit(2, &GeneratorSet::new(&[Generator::X]));
    let pts: Vec<_> = o.iter().map(|(_, p)| p.clone()).collect();
    assert_eq!(pts, vec![pt(0, 0, 1), pt(0, -4, 3), pt(0, -24, -7)]);
    assert!(pts.iter().all(|p| p.color() == Color::Yes));
    assert_eq!(orbit(0, &"xz".parse().unwrap()).len(), 1);
}

#[test]
fn certified_angles() {
    let pole = ApproxTarget::exact(&SpherePoint::north(), r(3, 10)).unwrap();
    // cos = 24/25, angle ~0.2838
    assert!(certified_angle_leq(&pt(0, -7, 24), &pole, &r(3, 10)));
    // cos = 4/5, angle ~0.6435
    assert!(!certified_angle_leq(&pt(0, 3, 4), &pole, &r(3, 10)));
    assert!(certified_angle_leq(&SpherePoint::north(), &pole, &r(1, 1_000_000)));
}

#[test]
fn approximations_of_the_pole() {
    let cfg = ApproxConfig::default();
    let t = ApproxTarget::exact(&SpherePoint::north(), r(1, 10)).unwrap();
    let w = approximate_vector(&t, Color::Yes, &cfg).unwrap();
    assert_eq!(w.result, SpherePoint::north());
    assert!(w.word.steps().is_empty());

    let t = ApproxTarget::exact(&SpherePoint::north(), r(3, 10)).unwrap();
    let w = approximate_vector(&t, Color::No, &cfg).unwrap();
    assert!(!common::z_is_odd(&w.result));
    assert!(w.verify(&t));
}

#[test]
fn body_diagonal() {
    let s = 1.0 / 3f64.sqrt();
    let t = ApproxTarget::from_f64([s, s, s], r(1, 1 << 30), r(1, 20)).unwrap();
    let w = approximate_vector(&t, Color::Yes, &ApproxConfig::default()).unwrap();
    assert!(common::z_is_odd(&w.result));
    assert!(certified_angle_leq(&w.result, &t, &r(1, 20)));
    assert!(common::float_angle(&w.result, [1.0, 1.0, 1.0]) < 0.05);
}

#[test]
fn rational_triads_come_back_unchanged() {
    let cfg = ApproxConfig::default();
    let exact = |t: &RationalTriad, eps: Rat| t.members().map(|p| ApproxTarget::exact(p, eps.clone()).unwrap());
    let c = RationalTriad::canonical();
    assert_eq!(approximate_triad(&exact(&c, r(1, 3)), &cfg).unwrap().triad, c);
    let t = RationalTriad::new(pt(1, 2, 2), pt(2, 1, -2), pt(-2, 2, -1)).unwrap();
    assert_eq!(approximate_triad(&exact(&t, r(1, 100)), &cfg).unwrap().triad, t);
}

#[test]
fn sqrt2_triad() {
    // (1, sqrt2, 0)/sqrt3, (sqrt2, -1, 0)/sqrt3, (0, 0, 1)
    let vs = parse_vector_set("field 2\nv 1:0 0:1 0:0\nv 0:1 -1:0 0:0\nv 0:0 0:0 1:0\nT 1 2 3\n").unwrap();
    let targets = [0, 1, 2].map(|i| ApproxTarget::from_quad(&vs.vectors()[i], r(1, 100)).unwrap());
    let a = approximate_triad(&targets, &ApproxConfig::default()).unwrap();
    assert!(a.verify(&targets));
    let [u, v, w] = a.triad.members();
    assert!(common::int_dot(u, v).is_zero() && common::int_dot(u, w).is_zero() && common::int_dot(v, w).is_zero());
    let s2 = 2f64.sqrt();
    for (p, dir) in [u, v, w].iter().zip([[1.0, s2, 0.0], [s2, -1.0, 0.0], [0.0, 0.0, 1.0]]) {
        assert!(common::float_angle(p, dir) < 0.01);
    }
    assert_eq!(triad_coloring(&a.triad).iter().filter(|c| **c == Color::Yes).count(), 1);
}

#[test]
fn vector_set_files() {
    let vs = parse_vector_set("field 2\nv 1:0 0:0 0:0\nv 0:0 1:0 0:0\nv 0:0 0:0 1:0\nT 1 2 3\n").unwrap();
    assert_eq!((vs.len(), vs.triads().len()), (3, 1));
    let one = parse_vector_set("field 2\nv 1:0 0:1 0:0\n").unwrap();
    assert_eq!(one.vectors()[0], [q2(1, 0), q2(0, 1), q2(0, 0)]);
    let t = parse_vector_set("field 2\nv 1:0 0:1 0:0\nv 0:1 -1:0 0:0\nv 0:0 0:0 1:0\nT 1 2 3\n").unwrap();
    assert_eq!(t.triads(), &[[0, 1, 2]]);
}

#[test]
fn graphs() {
    let axes = bundled::AXES.parse();
    let g = build_graph(&axes).unwrap();
    assert_eq!((g.edges().len(), g.triads().len()), (3, 1));

    let four = parse_vector_set("field 1\nv 1:0 0:0 0:0\nv 0:0 1:0 0:0\nv 0:0 0:0 1:0\nv 1:0 1:0 0:0\n").unwrap();
    let g = build_graph(&four).unwrap();
    assert!(g.edges().contains(&(2, 3)));
    assert_eq!(g.triads(), &[[0, 1, 2]]);
    let five =
        parse_vector_set("field 1\nv 1:0 0:0 0:0\nv 0:0 1:0 0:0\nv 0:0 0:0 1:0\nv 1:0 1:0 0:0\nv 1:0 -1:0 0:0\n")
            .unwrap();
    assert_eq!(build_graph(&five).unwrap().triads(), &[[0, 1, 2], [2, 3, 4]]);
    assert!(build_graph(&parse_vector_set("field 1\n").unwrap()).unwrap().edges().is_empty());
}

#[test]
fn colorings_by_count() {
    // Of the 8 assignments to a triad, exactly the 3 with one Yes pass.
    let triad = OrthoGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
    assert_eq!(count_colorings(&triad, Mode::Triads, u64::MAX).unwrap(), 3);
    assert_eq!(count_colorings(&triad, Mode::TriadsAndPairs, u64::MAX).unwrap(), 3);
    let loose = OrthoGraph::from_edges(2, &[]);
    assert_eq!(count_colorings(&loose, Mode::Triads, u64::MAX).unwrap(), 4);
}

#[test]
fn nullify_small_sets() {
    let cfg = ApproxConfig::default();
    let rep = nullify(&bundled::AXES.parse(), &r(1, 10), &cfg).unwrap();
    assert_eq!(rep.outcomes.len(), 1);
    assert_eq!(rep.outcomes[0].coloring, Some([Color::No, Color::No, Color::Yes]));
    assert!(rep.is_clean());

    let rep = nullify(&bundled::TWO_TRIADS.parse(), &r(1, 100), &cfg).unwrap();
    assert_eq!(rep.outcomes.len(), 2);
    for o in &rep.outcomes {
        let c = o.coloring.unwrap();
        assert_eq!(c.iter().filter(|c| **c == Color::Yes).count(), 1);
    }
    assert!(rep.is_clean());
}

#[test]
fn snapping() {
    let cfg = ApproxConfig::default();
    let axes = bundled::AXES.parse();
    assert_eq!(snap_vectors(&axes, &r(1, 10), &cfg).unwrap(), axes);
    let diag = parse_vector_set("field 2\nv 1:0 0:1 0:0\n").unwrap();
    let s = snap_vectors(&diag, &r(1, 100), &cfg).unwrap();
    let p = &s.sphere_points().unwrap()[0];
    assert!(common::float_angle(p, [1.0, 2f64.sqrt(), 0.0]) < 0.01);
}
