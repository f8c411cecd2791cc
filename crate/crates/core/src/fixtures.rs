//! Named algebras, morphisms and polynomial presentations used by the CLI,
//! the verification report and the test suites.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Presentation};
use crate::scalar::Scalar;

pub const CATALOG_VERSION: &str = "1";

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| s(x)).collect()
}

/// `Q[x]/(x^2)`.
pub fn dual() -> Algebra {
    Algebra::from_entries(
        "FIX-DUAL",
        &["1", "x"],
        &[(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1))],
        ints(&[1, 0]),
    )
    .expect("well-formed")
}

/// `Q x Q`.
pub fn split() -> Algebra {
    Algebra::from_entries(
        "FIX-SPLIT",
        &["e1", "e2"],
        &[(0, 0, 0, s(1)), (1, 1, 1, s(1))],
        ints(&[1, 1]),
    )
    .expect("well-formed")
}

fn ut2_with(name: &str, labels: &[&str]) -> Algebra {
    Algebra::from_entries(
        name,
        labels,
        &[
            (0, 0, 0, s(1)),
            (0, 1, 1, s(1)),
            (1, 2, 1, s(1)),
            (2, 2, 2, s(1)),
        ],
        ints(&[1, 0, 1]),
    )
    .expect("well-formed")
}

/// Upper-triangular 2x2 matrices on the basis `e11, e12, e22`.
pub fn ut2() -> Algebra {
    ut2_with("FIX-UT2", &["e11", "e12", "e22"])
}

/// Path algebra of the quiver `1 -> 2`; same structure constants as [`ut2`].
pub fn a2() -> Algebra {
    ut2_with("FIX-A2", &["v1", "a", "v2"])
}

/// Full 2x2 matrices on the matrix units `e11, e12, e21, e22`.
pub fn m2() -> Algebra {
    let labels = ["e11", "e12", "e21", "e22"];
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut entries = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                entries.push((idx(i, j), idx(j, l), idx(i, l), s(1)));
            }
        }
    }
    Algebra::from_entries("FIX-M2", &labels, &entries, ints(&[1, 0, 0, 1])).expect("well-formed")
}

/// `Q[x]/(x^3 - x^2)` on the basis `1, x, x^2`.
pub fn fat2() -> Algebra {
    Algebra::from_entries(
        "FIX-FAT2",
        &["1", "x", "x2"],
        &[
            (0, 0, 0, s(1)),
            (0, 1, 1, s(1)),
            (1, 0, 1, s(1)),
            (0, 2, 2, s(1)),
            (2, 0, 2, s(1)),
            (1, 1, 2, s(1)),
            (1, 2, 2, s(1)),
            (2, 1, 2, s(1)),
            (2, 2, 2, s(1)),
        ],
        ints(&[1, 0, 0]),
    )
    .expect("well-formed")
}

/// `Q[x]/(x^2 + 1)`, a field extension; not split.
pub fn gaussian() -> Algebra {
    Algebra::from_entries(
        "Q[i]",
        &["1", "i"],
        &[(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1)), (1, 1, 0, s(-1))],
        ints(&[1, 0]),
    )
    .expect("well-formed")
}

/// Hamilton quaternions over `Q`, a central division algebra; not split.
pub fn rational_quaternions() -> Algebra {
    // basis 1, i, j, k
    let mut e = Vec::new();
    for b in 0..4 {
        e.push((0, b, b, s(1)));
        if b != 0 {
            e.push((b, 0, b, s(1)));
            e.push((b, b, 0, s(-1)));
        }
    }
    e.extend([
        (1, 2, 3, s(1)),
        (2, 1, 3, s(-1)),
        (2, 3, 1, s(1)),
        (3, 2, 1, s(-1)),
        (3, 1, 2, s(1)),
        (1, 3, 2, s(-1)),
    ]);
    Algebra::from_entries("H(Q)", &["1", "i", "j", "k"], &e, ints(&[1, 0, 0, 0])).expect("well-formed")
}

pub const CATALOG_NAMES: [&str; 6] = [
    "FIX-DUAL",
    "FIX-SPLIT",
    "FIX-UT2",
    "FIX-M2",
    "FIX-FAT2",
    "FIX-A2",
];

pub fn catalog() -> Vec<(&'static str, Algebra)> {
    vec![
        ("FIX-DUAL", dual()),
        ("FIX-SPLIT", split()),
        ("FIX-UT2", ut2()),
        ("FIX-M2", m2()),
        ("FIX-FAT2", fat2()),
        ("FIX-A2", a2()),
    ]
}

pub fn by_name(name: &str) -> Option<Algebra> {
    match name {
        "FIX-DUAL" => Some(dual()),
        "FIX-SPLIT" => Some(split()),
        "FIX-UT2" => Some(ut2()),
        "FIX-M2" => Some(m2()),
        "FIX-FAT2" => Some(fat2()),
        "FIX-A2" => Some(a2()),
        "Q" => Some(Algebra::field()),
        _ => None,
    }
}

fn morphism(source: Algebra, target: Algebra, rows: &[&[i64]]) -> AlgebraMorphism {
    AlgebraMorphism::new(Arc::new(source), Arc::new(target), Matrix::from_ints(rows))
        .expect("catalog morphism is an algebra map")
}

/// Named morphisms `(name, phi)` used for continuity and induced-map checks.
pub fn morphisms() -> Vec<(&'static str, AlgebraMorphism)> {
    let mut out = vec![
        (
            "UT2->M2",
            morphism(ut2(), m2(), &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]),
        ),
        ("Q->SPLIT", morphism(Algebra::field(), split(), &[&[1], &[1]])),
        ("SPLIT->Q", morphism(split(), Algebra::field(), &[&[1, 0]])),
        (
            "FAT2->DUAL",
            morphism(fat2(), dual(), &[&[1, 0, 0], &[0, 1, 0]]),
        ),
    ];
    for (name, a) in catalog() {
        let label: &'static str = match name {
            "FIX-DUAL" => "id(FIX-DUAL)",
            "FIX-SPLIT" => "id(FIX-SPLIT)",
            "FIX-UT2" => "id(FIX-UT2)",
            "FIX-M2" => "id(FIX-M2)",
            "FIX-FAT2" => "id(FIX-FAT2)",
            _ => "id(FIX-A2)",
        };
        out.push((label, AlgebraMorphism::identity(Arc::new(a))));
    }
    out
}

/// The versioned catalog in one value.
#[derive(Clone, Debug)]
pub struct FixtureCatalog {
    pub version: &'static str,
    pub algebras: Vec<(&'static str, Algebra)>,
    pub morphisms: Vec<(&'static str, AlgebraMorphism)>,
    pub presentations: Vec<(&'static str, Presentation)>,
}

impl FixtureCatalog {
    pub fn standard() -> Self {
        FixtureCatalog {
            version: CATALOG_VERSION,
            algebras: catalog(),
            morphisms: morphisms(),
            presentations: vec![
                ("affine-line", affine_line()),
                ("dual", dual_presentation()),
                ("parabola", parabola()),
                ("axes", axes()),
                ("fat2", fat2_presentation()),
            ],
        }
    }

    pub fn algebra(&self, name: &str) -> Option<&Algebra> {
        self.algebras.iter().find(|(n, _)| *n == name).map(|(_, a)| a)
    }

    pub fn presentation(&self, name: &str) -> Option<&Presentation> {
        self.presentations.iter().find(|(n, _)| *n == name).map(|(_, p)| p)
    }
}

/// `Q[x]` with no relations.
pub fn affine_line() -> Presentation {
    Presentation::new(vec!["x".into()], vec![])
}

/// `Q[x]/(x^2)`.
pub fn dual_presentation() -> Presentation {
    Presentation::new(vec!["x".into()], vec![Polynomial::from_terms(&[(&[2], s(1))])])
}

/// `Q[x,y]/(y - x^2)`.
pub fn parabola() -> Presentation {
    Presentation::new(
        vec!["x".into(), "y".into()],
        vec![Polynomial::from_terms(&[(&[0, 1], s(1)), (&[2, 0], s(-1))])],
    )
}

/// `Q[x,y]/(xy)`, the union of the coordinate axes.
pub fn axes() -> Presentation {
    Presentation::new(
        vec!["x".into(), "y".into()],
        vec![Polynomial::from_terms(&[(&[1, 1], s(1))])],
    )
}

/// `Q[x]/(x^3 - x^2)`.
pub fn fat2_presentation() -> Presentation {
    Presentation::new(
        vec!["x".into()],
        vec![Polynomial::from_terms(&[(&[3], s(1)), (&[2], s(-1))])],
    )
}
