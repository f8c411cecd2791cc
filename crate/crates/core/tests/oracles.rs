//! Independent recomputations of structural values, and the frozen results
//! they produced.

use std::sync::Arc;

use aspec_core::algebra::{jacobson_radical, wedderburn};
use aspec_core::completion::{complete, default_order};
use aspec_core::fixtures;
use aspec_core::linalg::{kernel_basis, Matrix};
use aspec_core::module::{ext1, hom_space, is_simple, simple_modules};
use aspec_core::pointed::hausdorff_kernel_bounded;
use aspec_core::{Algebra, ModuleRep, Scalar};

fn character(m: &ModuleRep) -> Vec<Scalar> {
    m.action().iter().map(|x| x[(0, 0)].clone()).collect()
}

/// `dim Ext^1(M, N)` for one-dimensional modules from the defining
/// equations `d(b_i b_j) = d(b_i) χ_N(b_j) + χ_M(b_i) d(b_j)` and the inner
/// derivations `a -> (χ_M(a) - χ_N(a)) c`.
fn ext_by_hand(a: &Algebra, m: &ModuleRep, n: &ModuleRep) -> usize {
    let (cm, cn) = (character(m), character(n));
    let k = a.dim();
    let mut rows = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let mut row = vec![Scalar::zero(); k];
            for (l, c) in a.basis_product(i, j).iter().enumerate() {
                row[l] += c;
            }
            row[i] -= &cn[j];
            row[j] -= &cm[i];
            rows.push(row);
        }
    }
    let derivations = kernel_basis(&Matrix::from_rows(rows, k)).len();
    let inner = usize::from((0..k).any(|i| cm[i] != cn[i]));
    derivations - inner
}

#[test]
fn ext_matches_hand_derivations_on_one_dimensional_simples() {
    for (name, a) in fixtures::catalog() {
        let a = Arc::new(a);
        let simples = simple_modules(&a).unwrap();
        if simples.iter().any(|s| s.dim() != 1) {
            continue;
        }
        for m in &simples {
            for n in &simples {
                assert_eq!(ext1(m, n).unwrap().dim, ext_by_hand(&a, m, n), "{name} {} {}", m.label(), n.label());
            }
        }
    }
}

/// Non-split two-dimensional modules `[[χ_i, d], [0, χ_j]]` (rows act) over
/// UT2, found by brute force over `d` with entries in `{-1, 0, 1}`: only the
/// extension with quotient `S1` and submodule `S2` exists.
#[test]
fn ut2_extension_direction_by_brute_force() {
    let a = Arc::new(fixtures::ut2());
    let simples = simple_modules(&a).unwrap();
    let mut found = [[false; 2]; 2];
    for (i, top) in simples.iter().enumerate() {
        for (j, sub) in simples.iter().enumerate() {
            for code in 0..27 {
                let d: Vec<i64> = (0..3).map(|p| (code / 3i64.pow(p)) % 3 - 1).collect();
                let action: Vec<Matrix> = (0..3)
                    .map(|b| {
                        Matrix::from_rows(
                            vec![
                                vec![top.action()[b][(0, 0)].clone(), Scalar::from_int(d[b])],
                                vec![Scalar::zero(), sub.action()[b][(0, 0)].clone()],
                            ],
                            2,
                        )
                    })
                    .collect();
                let Ok(e) = ModuleRep::new(a.clone(), "E", 2, action) else { continue };
                if hom_space(&e, &e).unwrap().len() == 1 {
                    found[i][j] = true;
                }
            }
        }
    }
    assert_eq!(found, [[false, true], [false, false]]);
    let table: Vec<Vec<usize>> = simples
        .iter()
        .map(|m| simples.iter().map(|n| ext1(m, n).unwrap().dim).collect())
        .collect();
    assert_eq!(table, vec![vec![0, 1], vec![0, 0]]);
}

#[test]
fn frozen_radicals_and_blocks() {
    let expected: [(&str, usize, &[usize]); 6] = [
        ("FIX-DUAL", 1, &[1]),
        ("FIX-SPLIT", 0, &[1, 1]),
        ("FIX-UT2", 1, &[1, 1]),
        ("FIX-M2", 0, &[2]),
        ("FIX-FAT2", 1, &[1, 1]),
        ("FIX-A2", 1, &[1, 1]),
    ];
    for (name, rad, blocks) in expected {
        let a = fixtures::by_name(name).unwrap();
        assert_eq!(jacobson_radical(&a).dim(), rad, "{name}");
        let sizes: Vec<usize> = wedderburn(&a).unwrap().blocks.iter().map(|b| b.matrix_size).collect();
        assert_eq!(sizes, blocks, "{name}");
    }
}

#[test]
fn frozen_default_orders() {
    let orders: Vec<usize> = fixtures::catalog().iter().map(|(_, a)| default_order(a)).collect();
    assert_eq!(orders, vec![3, 2, 3, 2, 3, 3]);
}

#[test]
fn burnside_verdicts() {
    for (name, a) in fixtures::catalog() {
        let a = Arc::new(a);
        for s in simple_modules(&a).unwrap() {
            assert!(is_simple(&s), "{name}");
        }
        assert!(!is_simple(&ModuleRep::regular(a.clone())), "{name}");
    }
    let h = Arc::new(fixtures::rational_quaternions());
    let regular = ModuleRep::regular(h.clone());
    assert!(!is_simple(&regular));
    assert!(simple_modules(&h).is_err());
}

#[test]
fn fat2_ext_splits_into_a_fat_and_a_reduced_point() {
    let a = Arc::new(fixtures::fat2());
    let simples = simple_modules(&a).unwrap();
    let mut diag: Vec<usize> = simples.iter().map(|s| ext1(s, s).unwrap().dim).collect();
    diag.sort();
    assert_eq!(diag, vec![0, 1]);
    assert_eq!(ext1(&simples[0], &simples[1]).unwrap().dim, 0);
    assert_eq!(ext1(&simples[1], &simples[0]).unwrap().dim, 0);
}

#[test]
fn frozen_completion_dimensions() {
    for (name, a) in fixtures::catalog() {
        let a = Arc::new(a);
        let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
        assert_eq!(c.carrier().dim(), a.dim(), "{name}");
    }
}

#[test]
fn frozen_hausdorff_slices() {
    let zero = |n| vec![Scalar::zero(); n];
    // x^2 lies in the relation ideal, so nothing survives
    let dual = hausdorff_kernel_bounded(&fixtures::dual_presentation(), &zero(1), 2, 3).unwrap();
    assert_eq!(dual.dim(), 0);
    // x y^2 and y^3 land in p^5 although they are not in (y - x^2)
    let parabola = hausdorff_kernel_bounded(&fixtures::parabola(), &zero(2), 3, 5).unwrap();
    assert_eq!(parabola.dim(), 2);
    let deeper = hausdorff_kernel_bounded(&fixtures::parabola(), &zero(2), 3, 7).unwrap();
    assert_eq!(deeper.dim(), 0);
}

#[test]
fn frozen_local_function_rings() {
    use aspec_core::completion::local_function_ring;
    let ut2 = Arc::new(fixtures::ut2());
    let lf = local_function_ring(&complete(&ut2, &simple_modules(&ut2).unwrap(), 3).unwrap()).unwrap();
    assert_eq!((lf.carrier.dim(), lf.kernel.dim()), (3, 0));

    let fat2 = Arc::new(fixtures::fat2());
    let simples = simple_modules(&fat2).unwrap();
    let at_one: Vec<ModuleRep> = simples
        .iter()
        .filter(|s| s.act(&fat2.basis_vector(1))[(0, 0)] == Scalar::one())
        .cloned()
        .collect();
    let lf = local_function_ring(&complete(&fat2, &at_one, 3).unwrap()).unwrap();
    // A / ker ρ is Q: functions at the reduced point only see their value there
    assert_eq!((lf.carrier.dim(), lf.kernel.dim()), (1, 2));
}
