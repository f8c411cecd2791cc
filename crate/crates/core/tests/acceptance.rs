//! Acceptance criteria, all exact. Prints one PASS/FAIL line per criterion.
//!
//! Criterion 9 asks for a zero bounded Hausdorff kernel on the parabola at
//! truncation order 5; the exact kernel there contains `x y^2` and `y^3`,
//! which vanish modulo `p^5` but not on the curve. That sub-check is
//! reported as FAIL and the test pins the set of failing criteria to
//! exactly that one, so any regression elsewhere (or a change in it) fails.

use std::sync::Arc;

use aspec_core::algebra::{jacobson_radical, wedderburn};
use aspec_core::completion::{complete, default_order, point_decomposition, verify_family_props};
use aspec_core::fixtures;
use aspec_core::linalg::unit_vec;
use aspec_core::module::{is_simple, simple_modules};
use aspec_core::pointed::{hausdorff_kernel_bounded, truncated_local_quotient};
use aspec_core::sheaf::{compare_stalks, sections_isomorphic, sheafify, structure_presheaf, Variant};
use aspec_core::topology::{aspec_map, check_d_laws, generate_topology, PointSet};
use aspec_core::verify::{check_units, ext_table, hull_dims_under_basis_change, verify_paper};
use aspec_core::{Algebra, ModuleRep, Scalar};

const KNOWN_RED: [usize; 1] = [9];

type Verdict = (bool, String);
type Criterion = (usize, &'static str, fn() -> Verdict);

fn arc(a: Algebra) -> Arc<Algebra> {
    Arc::new(a)
}

fn criterion_1() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in ["FIX-DUAL", "FIX-SPLIT", "FIX-UT2", "FIX-M2", "FIX-FAT2"] {
        let a = arc(fixtures::by_name(name).unwrap());
        let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
        let good = c.carrier().dim() == a.dim() && c.rho.matrix.is_square() && c.rho.matrix.inverse().is_some();
        ok &= good;
        notes.push(format!("{name}:{}={}", a.dim(), c.carrier().dim()));
    }
    (ok, notes.join(" "))
}

fn criterion_2() -> Verdict {
    let a = arc(fixtures::fat2());
    let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
    let d = point_decomposition(&c, &fixtures::fat2_presentation(), &[unit_vec(3, 1)]).unwrap();
    let dims: Vec<usize> = d.factors.iter().map(Algebra::dim).collect();
    let mut sorted = dims.clone();
    sorted.sort();
    // the two-dimensional factor must be Q[t]/(t^2): its radical squares to zero
    let fat = d.factors.iter().find(|f| f.dim() == 2).unwrap();
    let rad = jacobson_radical(fat);
    let square_zero = rad.dim() == 1 && fat.mul(&rad.basis()[0], &rad.basis()[0]).iter().all(Scalar::is_zero);
    let independent: Vec<usize> = d
        .points
        .iter()
        .map(|p| truncated_local_quotient(&fixtures::fat2_presentation(), p, c.hull.order + 1).unwrap().carrier.dim())
        .collect();
    let ok = d.iso.is_bijective() && sorted == [1, 2] && square_zero && independent == dims;
    (ok, format!("factors {dims:?}, iso rows {}", d.iso.matrix.rows()))
}

fn criterion_3() -> Verdict {
    let mut ok = true;
    let mut checked = 0;
    for (name, a) in fixtures::catalog() {
        let a = arc(a);
        let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
        let u = check_units(&c, 100, 0xACC3);
        ok &= u.holds() && u.elements == c.carrier().dim() + 100;
        checked += u.elements;
        if !u.holds() {
            return (false, format!("{name}: {u:?}"));
        }
    }
    (ok, format!("{checked} elements"))
}

fn criterion_4() -> Verdict {
    let mut notes = Vec::new();
    for (i, (name, a)) in fixtures::catalog().into_iter().enumerate() {
        let a = arc(a);
        let family = simple_modules(&a).unwrap();
        let dims = hull_dims_under_basis_change(&a, &family, default_order(&a) + 1, 5, 0xACC4 + i as u64).unwrap();
        if dims.len() != 6 || dims.iter().any(|d| *d != dims[0]) {
            return (false, format!("{name}: {dims:?}"));
        }
        notes.push(format!("{name}:{:?}", dims[0]));
    }
    (true, notes.join(" "))
}

fn criterion_5() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in ["FIX-DUAL", "FIX-UT2", "FIX-M2"] {
        let a = arc(fixtures::by_name(name).unwrap());
        let c = complete(&a, &simple_modules(&a).unwrap(), default_order(&a)).unwrap();
        let f = verify_family_props(&c).unwrap();
        ok &= f.complete && f.simples_recovered && f.idempotent;
        notes.push(format!("{name}:{}{}{}", f.complete as u8, f.simples_recovered as u8, f.idempotent as u8));
    }
    (ok, notes.join(" "))
}

fn criterion_6() -> Verdict {
    let mut ok = true;
    let mut pairs = 0;
    for (i, (name, a)) in fixtures::catalog().into_iter().enumerate() {
        let a = arc(a);
        let ps = PointSet::simples(&a).unwrap();
        let d = check_d_laws(&ps, 100, 0xACC6 + i as u64);
        ok &= d.holds() && d.pairs_checked == a.dim() * a.dim() + 100;
        pairs += d.pairs_checked;
        if !d.holds() {
            return (false, format!("{name}: {d:?}"));
        }
    }
    let mut maps = 0;
    for (name, phi) in fixtures::morphisms() {
        let ps_b = PointSet::simples(&phi.target).unwrap();
        let ps_a = PointSet::simples(&phi.source).unwrap();
        let m = aspec_map(&phi, name, &ps_b, &ps_a, None).unwrap();
        ok &= m.is_continuous();
        maps += 1;
    }
    (ok, format!("{pairs} pairs, {maps} morphisms"))
}

fn criterion_7() -> Verdict {
    let mut ok = true;
    let mut singles = 0;
    let mut ut2 = String::new();
    for (name, a) in fixtures::catalog() {
        let a = arc(a);
        let t = generate_topology(&PointSet::simples(&a).unwrap(), None);
        let n = default_order(&a);
        let rows = compare_stalks(&t, n).unwrap();
        ok &= rows == compare_stalks(&t, n).unwrap();
        for r in rows.iter().filter(|r| r.points.len() == 1) {
            ok &= r.presheaf_agrees && r.presheaf_dim == r.direct_dim;
            singles += 1;
        }
        if name == "FIX-UT2" {
            let multi = rows.iter().find(|r| r.points.len() == 2).unwrap();
            ok &= multi.presheaf_dim == 3 && multi.standard_dim == 2 && multi.direct_dim == 3;
            ut2 = format!("UT2 multi-point presheaf {} vs standard {}", multi.presheaf_dim, multi.standard_dim);
        }
    }
    (ok, format!("{singles} singleton stalks, {ut2}"))
}

fn criterion_8() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, a) in fixtures::catalog() {
        let a = arc(a);
        let t = generate_topology(&PointSet::simples(&a).unwrap(), None);
        let p = structure_presheaf(&t, default_order(&a)).unwrap();
        let s = sheafify(&p, Variant::Standard).unwrap();
        let l = sheafify(&p, Variant::PaperLimit).unwrap();
        let axioms = s.data.check_axioms();
        ok &= axioms.holds() && axioms.covers_checked > 0;
        let disagree = (0..t.opens.len())
            .filter(|&i| !sections_isomorphic(&s.data.sections[i], &l.data.sections[i]))
            .count();
        notes.push(format!("{name}:{}covers/{}differ", axioms.covers_checked, disagree));
    }
    (ok, notes.join(" "))
}

fn criterion_9() -> Verdict {
    let zero = |n| vec![Scalar::zero(); n];
    let line = (1..=5).all(|d| hausdorff_kernel_bounded(&fixtures::affine_line(), &zero(1), d, 6).unwrap().dim() == 0);
    let parabola: Vec<usize> = (1..=3)
        .map(|d| hausdorff_kernel_bounded(&fixtures::parabola(), &zero(2), d, 5).unwrap().dim())
        .collect();
    let parabola_deep = (1..=3).all(|d| hausdorff_kernel_bounded(&fixtures::parabola(), &zero(2), d, 7).unwrap().dim() == 0);
    let point = [Scalar::one(), Scalar::zero()];
    let axes = hausdorff_kernel_bounded(&fixtures::axes(), &point, 2, 3).unwrap().dim();
    let ok = line && parabola.iter().all(|&d| d == 0) && axes > 0;
    (
        ok,
        format!("Q[x] zero: {line}; parabola N=5 dims {parabola:?}; parabola N=7 zero: {parabola_deep}; axes kernel {axes}"),
    )
}

fn criterion_10() -> Verdict {
    let ut2 = arc(fixtures::ut2());
    let m2 = arc(fixtures::m2());
    let rad = (jacobson_radical(&ut2).dim(), jacobson_radical(&m2).dim());
    let blocks = (wedderburn(&ut2).unwrap().blocks.len(), wedderburn(&m2).unwrap().blocks.len());
    let table = ext_table(&simple_modules(&ut2).unwrap()).unwrap();
    let directions = (table[0][1], table[1][0]);
    let mut burnside = true;
    for (_, a) in fixtures::catalog() {
        let a = arc(a);
        burnside &= simple_modules(&a).unwrap().iter().all(is_simple);
        burnside &= !is_simple(&ModuleRep::regular(a.clone()));
    }
    let ok = rad == (1, 0) && blocks == (2, 1) && directions == (1, 0) && table[0][0] == 0 && table[1][1] == 0 && burnside;
    (ok, format!("rad {rad:?}, blocks {blocks:?}, ext {directions:?}"))
}

fn criterion_11() -> Verdict {
    let first = serde_json::to_string_pretty(&verify_paper(None).to_json()).unwrap();
    let second = serde_json::to_string_pretty(&verify_paper(None).to_json()).unwrap();
    (first == second, format!("{} bytes", first.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        (1, "rho is an isomorphism onto the completion", criterion_1),
        (2, "FAT2 completion splits over its two points", criterion_2),
        (3, "units are detected blockwise", criterion_3),
        (4, "hull dimensions ignore the cocycle basis", criterion_4),
        (5, "completeness, simples, idempotence", criterion_5),
        (6, "D-laws and continuity", criterion_6),
        (7, "stalks at points, UT2 multi-point table", criterion_7),
        (8, "standard sheafification is a sheaf", criterion_8),
        (9, "bounded Hausdorff kernels", criterion_9),
        (10, "structural baselines", criterion_10),
        (11, "verify-paper is deterministic", criterion_11),
    ];
    let mut red = Vec::new();
    for (id, title, check) in criteria {
        let (ok, detail) = check();
        println!("{} criterion {id:>2}: {title} [{detail}]", if ok { "PASS" } else { "FAIL" });
        if !ok {
            red.push(id);
        }
    }
    assert_eq!(red, KNOWN_RED, "failing criteria changed");
}
