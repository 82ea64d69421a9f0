use locoh_core::exact::{self, LatticeReducer};
use locoh_core::polyhedra::{dual_description, face_lattice, transverse_section};
use locoh_core::semigroup::AffineSemigroup;
use proptest::prelude::*;

/// Generators with positive first coordinate, so the cone is pointed.
fn pointed_generators(dim: usize, max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let gen = (1i64..=3, prop::collection::vec(-3i64..=3, dim - 1)).prop_map(|(h, rest)| {
        let mut v = vec![h];
        v.extend(rest);
        v
    });
    prop::collection::vec(gen, 1..=max_n)
}

fn lattice_case() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>, Vec<i64>)> {
    (2usize..=3).prop_flat_map(|d| {
        (
            prop::collection::vec(prop::collection::vec(-4i64..=4, d), 0..=3),
            prop::collection::vec(-9i64..=9, d),
            prop::collection::vec(-3i64..=3, 3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_a_canonical_coset_representative((gens, x, coeffs) in lattice_case()) {
        let red = LatticeReducer::new(x.len(), &gens).unwrap();
        let r = red.reduce(&x);
        prop_assert!(red.contains(&exact::sub(&x, &r)));
        prop_assert_eq!(red.reduce(&r), r.clone());
        let mut y = x.clone();
        for (g, c) in gens.iter().zip(&coeffs) {
            y = exact::add(&y, &g.iter().map(|v| v * c).collect::<Vec<_>>());
        }
        prop_assert_eq!(red.reduce(&y), r);
    }

    #[test]
    fn coset_box_points_are_exactly_the_congruent_box_points((gens, x, _) in lattice_case(), b in 1i64..=3) {
        let d = x.len();
        let red = LatticeReducer::new(d, &gens).unwrap();
        let mut got = red.coset_points_in_box(&x, b);
        got.sort();
        let mut want = Vec::new();
        let mut p = vec![-b; d];
        loop {
            if red.contains(&exact::sub(&p, &x)) {
                want.push(p.clone());
            }
            let mut i = 0;
            while i < d && p[i] == b {
                p[i] = -b;
                i += 1;
            }
            if i == d {
                break;
            }
            p[i] += 1;
        }
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn coboundary_squares_to_zero(gens in (2usize..=4).prop_flat_map(|d| pointed_generators(d, 6))) {
        let d = gens[0].len();
        let cone = dual_description(d, &gens).unwrap();
        let lattice = face_lattice(&cone);
        let section = transverse_section(&cone, &lattice).unwrap();
        for k in 0..section.top().saturating_sub(1) {
            let (a, b) = (section.coboundary(k), section.coboundary(k + 1));
            for row in &b {
                for j in 0..a.first().map_or(0, Vec::len) {
                    let s: i64 = row.iter().zip(&a).map(|(&x, r)| i64::from(x) * i64::from(r[j])).sum();
                    prop_assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn facet_normals_support_the_generators(gens in (2usize..=4).prop_flat_map(|d| pointed_generators(d, 6))) {
        let d = gens[0].len();
        let cone = dual_description(d, &gens).unwrap();
        for n in &cone.facet_normals {
            prop_assert!(gens.iter().all(|g| exact::dot(n, g) >= 0));
            // each facet is spanned by the generators it contains
            let on: Vec<Vec<i64>> = gens.iter().filter(|g| exact::dot(n, g) == 0).cloned().collect();
            prop_assert_eq!(exact::rank_of(&on, d), cone.dim - 1);
        }
    }

    #[test]
    fn semigroup_sits_inside_its_saturation(gens in (1usize..=3).prop_flat_map(|d| pointed_generators(d, 4)), picks in prop::collection::vec(0usize..4, 0..5)) {
        let d = gens[0].len();
        let q = AffineSemigroup::new(d, gens.clone()).unwrap();
        let mut x = vec![0; d];
        for i in picks {
            x = exact::add(&x, &gens[i % gens.len()]);
        }
        prop_assert!(q.member(&x).unwrap());
        prop_assert!(q.cone.contains(&x) && q.lattice.contains(&x));
        for h in q.hilbert_basis().unwrap() {
            prop_assert!(q.cone.contains(&h) && q.lattice.contains(&h));
        }
    }
}
