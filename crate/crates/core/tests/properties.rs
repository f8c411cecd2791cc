use std::sync::{Arc, OnceLock};

use aspec_core::completion::{complete, default_order, EndoCompletion};
use aspec_core::fixtures;
use aspec_core::json::AlgebraJson;
use aspec_core::linalg::{kernel_basis, Matrix};
use aspec_core::module::simple_modules;
use aspec_core::pointed::{is_unit_pointed, mtower};
use aspec_core::topology::{dset, PointSet};
use aspec_core::verify::hull_dims_under_basis_change;
use aspec_core::{Algebra, Scalar, Vector};
use proptest::prelude::*;

fn completions() -> &'static Vec<(&'static str, EndoCompletion)> {
    static CELL: OnceLock<Vec<(&'static str, EndoCompletion)>> = OnceLock::new();
    CELL.get_or_init(|| {
        fixtures::catalog()
            .into_iter()
            .map(|(name, a)| {
                let a = Arc::new(a);
                let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
                (name, c)
            })
            .collect()
    })
}

fn coords(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec((-3i64..=3, 1i64..=2), n)
        .prop_map(|v| v.into_iter().map(|(p, q)| Scalar::new(p, q)).collect())
}

fn fixture_and_element() -> impl Strategy<Value = (usize, Vector)> {
    (0..completions().len()).prop_flat_map(|i| {
        let n = completions()[i].1.carrier().dim();
        (Just(i), coords(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn units_are_detected_by_augmentation_blocks((i, x) in fixture_and_element()) {
        let h = completions()[i].1.carrier();
        let a = &h.carrier;
        let blocks = (0..h.r()).all(|k| h.augmentation_block(&x, k).inverse().is_some());
        let inverse = is_unit_pointed(h, &x);
        prop_assert_eq!(blocks, a.is_unit(&x).is_some());
        prop_assert_eq!(blocks, inverse.is_some());
        if let Some(y) = inverse {
            prop_assert_eq!(&a.mul(&x, &y), a.unit());
            prop_assert_eq!(&a.mul(&y, &x), a.unit());
        }
    }

    #[test]
    fn rho_is_multiplicative((i, x) in fixture_and_element(), seed in any::<u64>()) {
        let c = &completions()[i].1;
        let a = &c.algebra;
        let y: Vector = {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..a.dim()).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()
        };
        let x = x[..a.dim().min(x.len())].to_vec();
        prop_assume!(x.len() == a.dim());
        let o = &c.carrier().carrier;
        prop_assert_eq!(c.rho.apply(&a.mul(&x, &y)), o.mul(&c.rho.apply(&x), &c.rho.apply(&y)));
    }

    #[test]
    fn d_sets_multiply_to_intersections(
        i in 0..fixtures::catalog().len(),
        f in coords(4),
        g in coords(4),
    ) {
        let a = Arc::new(fixtures::catalog()[i].1.clone());
        let n = a.dim();
        let (f, g) = (f[..n].to_vec(), g[..n].to_vec());
        let ps = PointSet::simples(&a).unwrap();
        prop_assert_eq!(dset(&a.mul(&f, &g), &ps), dset(&f, &ps) & dset(&g, &ps));
        prop_assert_eq!(dset(a.unit(), &ps), ps.full());
        prop_assert_eq!(dset(&a.zero(), &ps), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in prop::collection::vec(coords(4), 1..5)) {
        let m = Matrix::from_rows(rows.clone(), 4);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len() + m.rank(), 4);
        for v in k {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn scalars_round_trip_through_json(p in -1000i64..1000, q in 1i64..1000) {
        let s = Scalar::new(p, q);
        let text = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn hull_dimensions_ignore_the_cocycle_basis(i in 0..fixtures::catalog().len(), seed in any::<u64>()) {
        let a = Arc::new(fixtures::catalog()[i].1.clone());
        let family = simple_modules(&a).unwrap();
        let dims = hull_dims_under_basis_change(&a, &family, default_order(&a) + 1, 1, seed).unwrap();
        prop_assert_eq!(&dims[0], &dims[1]);
    }
}

#[test]
fn tower_levels_are_compatible() {
    for (name, c) in completions() {
        let h = c.carrier();
        let t = mtower(h, c.hull.order + 1).unwrap();
        let a = &h.carrier;
        for k in 1..t.levels.len() {
            let composed = t.connecting[k - 1].matrix.mul(&t.projections[k]);
            assert_eq!(composed, t.projections[k - 1], "{name} level {k}");
        }
        for (k, level) in t.levels.iter().enumerate() {
            let p = &t.projections[k];
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                    assert_eq!(p.mul_vec(&a.mul(&x, &y)), level.mul(&p.mul_vec(&x), &p.mul_vec(&y)), "{name}");
                }
            }
        }
        assert!(t.dims().windows(2).all(|w| w[0] <= w[1]), "{name}");
        assert!(t.is_complete(), "{name}");
    }
}

#[test]
fn algebra_json_round_trips_when_pretty_printed() {
    let base: Algebra = fixtures::ut2();
    let j = AlgebraJson::from(&base);
    let text = serde_json::to_string_pretty(&j).unwrap();
    let back: AlgebraJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, j);
}
