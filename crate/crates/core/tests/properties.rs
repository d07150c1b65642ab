use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::Index;

use afp_core::andre::{enumerate_phi, AndreSpec};
use afp_core::collineation::{
    classify, is_translation, maps_lines_to_lines, translation_candidate, translation_candidate_via, QuasiFieldPlane,
};
use afp_core::formats;
use afp_core::gf::{FiniteField, GaloisGroup};
use afp_core::perm;
use afp_core::plane::{AffinePlane, CoordinateFrame};
use afp_core::quasifield::QuasiField;
use afp_core::ternary::{find_isomorphism, is_isomorphism, is_isotopism, Isotopism, TernaryRing};

const FIELDS: [(usize, usize); 10] =
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)];

fn field_params() -> impl Strategy<Value = (usize, usize)> {
    proptest::sample::select(FIELDS.to_vec())
}

fn andre_spec() -> impl Strategy<Value = AndreSpec> {
    let all: Vec<AndreSpec> = [(3, 2, 1), (2, 4, 2), (5, 2, 1), (3, 3, 1), (2, 2, 1)]
        .into_iter()
        .flat_map(|(p, n, d)| {
            let k = Arc::new(FiniteField::new(p, n).unwrap());
            let g = Arc::new(GaloisGroup::new(&k, d).unwrap());
            enumerate_phi(k, g).unwrap()
        })
        .collect();
    proptest::sample::select(all)
}

/// A permutation of `0..q` fixing 0 and 1.
fn relabeling(q: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((2..q).collect::<Vec<_>>()).prop_shuffle().prop_map(|rest| {
        let mut p = vec![0, 1];
        p.extend(rest);
        p
    })
}

fn transport_ring(t: &TernaryRing, s: &[usize]) -> TernaryRing {
    let inv = perm::inverse(s);
    TernaryRing::validated(t.order(), {
        let q = t.order();
        (0..q * q * q)
            .map(|i| s[t.get(inv[i / (q * q)], inv[(i / q) % q], inv[i % q])] as u16)
            .collect()
    })
    .unwrap()
}

fn transport_qf(k: &QuasiField, s: &[usize]) -> QuasiField {
    let inv = perm::inverse(s);
    QuasiField::from_fns(k.order(), |a, b| s[k.add(inv[a], inv[b])], |a, b| s[k.mul(inv[a], inv[b])]).unwrap()
}

fn andre9_left() -> QuasiField {
    AndreSpec::from_parameters(3, 2, 1, vec![0, 1]).unwrap().build_left().unwrap()
}

fn field_qf(p: usize, n: usize) -> QuasiField {
    QuasiField::from_field(&FiniteField::new(p, n).unwrap()).unwrap()
}

/// A valid frame chosen from three indices.
fn frame_from(plane: &AffinePlane, l: Index, m: Index, z: Index) -> CoordinateFrame {
    let lines = plane.line_count();
    let l = l.index(lines);
    let candidates: Vec<usize> = (0..lines).filter(|&j| !plane.are_parallel(l, j)).collect();
    let m = candidates[m.index(candidates.len())];
    let off: Vec<usize> = (0..plane.point_count()).filter(|&p| !plane.contains(l, p) && !plane.contains(m, p)).collect();
    CoordinateFrame { l, m, z: off[z.index(off.len())] }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative_and_galois_invariant((p, n) in field_params(), x: Index, y: Index, d: Index) {
        let k = FiniteField::new(p, n).unwrap();
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        let g = GaloisGroup::new(&k, divisors[d.index(divisors.len())]).unwrap();
        let (x, y) = (x.index(k.order()), y.index(k.order()));
        let norm = |v| g.norm(&k, v).unwrap();
        prop_assert_eq!(norm(k.mul(x, y)), k.mul(norm(x), norm(y)));
        for j in 0..g.order() {
            prop_assert_eq!(norm(g.apply(j, x)), norm(x));
            prop_assert_eq!(g.apply(j, k.add(x, y)), k.add(g.apply(j, x), g.apply(j, y)));
            prop_assert_eq!(g.apply(j, k.mul(x, y)), k.mul(g.apply(j, x), g.apply(j, y)));
        }
    }

    #[test]
    fn field_tables_rederive_from_modulus((p, n) in proptest::sample::select(FIELDS[..7].to_vec())) {
        prop_assert!(FiniteField::new(p, n).unwrap().tables_match_modulus());
    }

    #[test]
    fn relabeled_rings_are_found_isomorphic(
        ((p, n), s) in proptest::sample::select(vec![(3usize, 1usize), (2, 2), (5, 1), (2, 3), (3, 2)])
            .prop_flat_map(|(p, n)| (Just((p, n)), relabeling(p.pow(n as u32))))
    ) {
        let t = field_qf(p, n).to_ternary().unwrap();
        let u = transport_ring(&t, &s);
        let map = find_isomorphism(&t, &u).unwrap().expect("relabeled copy is isomorphic");
        prop_assert!(is_isomorphism(&t, &u, &map).unwrap());
        prop_assert!(is_isotopism(&t, &u, &Isotopism::from_isomorphism(&map)).unwrap());
    }

    #[test]
    fn isotopisms_compose(z1: Index, z2: Index, z3: Index) {
        let plane = AffinePlane::from_ternary(&andre9_left().to_ternary().unwrap()).unwrap();
        let base = plane.canonical_frame().unwrap();
        let off: Vec<usize> = (0..81).filter(|&p| !plane.contains(base.l, p) && !plane.contains(base.m, p)).collect();
        let frames: Vec<CoordinateFrame> =
            [z1, z2, z3].iter().map(|z| CoordinateFrame { z: off[z.index(off.len())], ..base }).collect();
        let rings: Vec<TernaryRing> = frames.iter().map(|&f| plane.coordinatize(f).unwrap().0).collect();
        let a = plane.isotopism_from_frames(frames[0], frames[1]).unwrap();
        let b = plane.isotopism_from_frames(frames[1], frames[2]).unwrap();
        prop_assert!(is_isotopism(&rings[0], &rings[1], &a).unwrap());
        prop_assert!(is_isotopism(&rings[1], &rings[2], &b).unwrap());
        prop_assert!(is_isotopism(&rings[0], &rings[2], &a.then(&b)).unwrap());
    }

    #[test]
    fn single_entry_mutants_keep_t3_t4_implying_t5(a: Index, x: Index, b: Index, shift in 1usize..9) {
        let t = andre9_left().to_ternary().unwrap();
        let (a, x, b) = (a.index(9), x.index(9), b.index(9));
        let mut m = t.clone();
        m.set(a, x, b, (t.get(a, x, b) + shift) % 9).unwrap();
        let r = m.check_axioms();
        prop_assert!(r.consistent_with_finite_t5());
        prop_assert!(!r.all_pass());
    }

    #[test]
    fn opposite_swaps_flags_and_vw1_to_vw4_imply_vw5(i: Index, v: Index, mutate: bool) {
        let mut k = andre9_left();
        if mutate {
            let i = i.index(81);
            k.set_mul(i / 9, i % 9, v.index(9));
        }
        let r = k.check_vw();
        let o = k.opposite().check_vw();
        prop_assert_eq!(o.flags(), r.swapped_flags());
        let f = r.flags();
        prop_assert!(!(f[..4].iter().all(|&x| x) && !f[4]));
        prop_assert!(!(f[..3].iter().all(|&x| x) && f[5] && !f[6]));
    }

    #[test]
    fn quasifield_rings_satisfy_the_ternary_axioms(spec in andre_spec(), right: bool) {
        let k = if right { spec.build_right().unwrap() } else { spec.build_left().unwrap() };
        let t = k.to_ternary().unwrap();
        prop_assert!(t.check_axioms().all_pass());
        let q = k.order();
        for a in 1..q {
            for b in 1..q {
                prop_assert_ne!(k.mul(a, b), 0);
            }
        }
    }

    #[test]
    fn andre_norm_compatibility(spec in andre_spec(), x: Index, y: Index) {
        let q = spec.field().order();
        let (x, y) = (x.index(q), y.index(q));
        let k = spec.field();
        prop_assert_eq!(spec.norm(spec.odot(x, y)), k.mul(spec.norm(x), spec.norm(y)));
        for &a in spec.fixed_field() {
            prop_assert_eq!(spec.odot(x, a), k.mul(x, a));
        }
    }

    #[test]
    fn frames_give_rings_and_isomorphic_planes(use_andre: bool, l: Index, m: Index, z: Index) {
        let k = if use_andre { andre9_left() } else { field_qf(5, 1) };
        let plane = AffinePlane::from_ternary(&k.to_ternary().unwrap()).unwrap();
        let q = k.order();
        let total: usize = plane.lines().iter().map(Vec::len).sum();
        prop_assert_eq!(total, q * q * (q + 1));
        let frame = frame_from(&plane, l, m, z);
        let (ring, coords) = plane.coordinatize(frame).unwrap();
        prop_assert!(ring.check_axioms().all_pass());
        for a in 0..plane.line_count() {
            for b in 0..plane.line_count() {
                prop_assert_eq!(coords.slope(a) == coords.slope(b), plane.are_parallel(a, b));
            }
        }
        let rebuilt = AffinePlane::from_ternary(&ring).unwrap();
        let induced: Vec<usize> = (0..q * q).map(|p| { let (x, y) = coords.coords(p); x * q + y }).collect();
        prop_assert!(maps_lines_to_lines(&plane, &rebuilt, &induced).is_some());
    }

    #[test]
    fn translations_are_unique_and_fix_their_line(target in 1usize..81, aux: Index, other in 1usize..81) {
        let qp = QuasiFieldPlane::new(andre9_left()).unwrap();
        let plane = &qp.plane;
        let line = plane.line_through(0, target).unwrap();
        let off: Vec<usize> = (0..81).filter(|&p| !plane.contains(line, p)).collect();
        let t1 = translation_candidate(plane, 0, target).unwrap().unwrap();
        let t2 = translation_candidate_via(plane, 0, target, off[aux.index(off.len())]).unwrap().unwrap();
        prop_assert_eq!(t1.perm(), t2.perm());
        prop_assert_eq!(t1.collineation.apply_line(line), line);

        let s = translation_candidate(plane, 0, other).unwrap().unwrap();
        let composed = perm::compose(s.perm(), t1.perm());
        if plane.class_of(plane.line_through(0, other).unwrap()).unwrap() == plane.class_of(line).unwrap() {
            prop_assert!(is_translation(plane, &composed).unwrap().is_some());
        }
    }

    #[test]
    fn format_round_trips(q in 2usize..6, seed in any::<u64>()) {
        let mut r = seed;
        let mut next = move || {
            r = r.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (r >> 33) as usize % q
        };
        let t = TernaryRing::from_table(q, (0..q * q * q).map(|_| next() as u16).collect()).unwrap();
        let text = formats::write_trs(&t);
        prop_assert_eq!(formats::write_trs(&formats::read_trs(&text).unwrap()), text);
        let k = QuasiField::from_tables(q, (0..q * q).map(|_| next() as u16).collect(), (0..q * q).map(|_| next() as u16).collect()).unwrap();
        let text = formats::write_qf(&k);
        prop_assert_eq!(formats::read_qf(&text).unwrap(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classify_verdict_is_stable_under_relabeling(use_andre: bool, s in relabeling(9)) {
        let k = if use_andre { andre9_left() } else { field_qf(3, 2) };
        let relabeled = transport_qf(&k, &s);
        prop_assert_eq!(classify(&relabeled).unwrap().verdict, classify(&k).unwrap().verdict);
    }
}
