//! Commutative multivariate polynomials over `Q` and finite presentations
//! `Q[x_1..x_k] / (f_1..f_m)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exp: Exponent) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(exp, Scalar::one());
        p
    }

    pub fn from_terms(terms: &[(&[u32], Scalar)]) -> Self {
        let mut p = Polynomial::zero();
        for (e, c) in terms {
            p.add_term(e.to_vec(), c.clone());
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, p)| acc * p.pow(k))
            })
            .sum()
    }

    /// `f(x + p)`: re-expands around the point so that `p` becomes the origin.
    pub fn shift(&self, point: &[Scalar]) -> Polynomial {
        let nvars = point.len();
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(nvars, c.clone());
            for (v, &k) in e.iter().enumerate() {
                let mut lin = Polynomial::zero();
                let mut ev = vec![0; nvars];
                ev[v] = 1;
                lin.add_term(ev, Scalar::one());
                lin.add_term(vec![0; nvars], point[v].clone());
                for _ in 0..k {
                    term = term.mul(&lin);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Drops every term of total degree `>= n`.
    pub fn truncate(&self, n: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() < n)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Monomials of total degree `<= max_degree`, ordered by degree and then
/// lexicographically with earlier variables first.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut level = Vec::new();
        compositions(nvars, d, &mut vec![], &mut level);
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    out
}

fn compositions(nvars: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
    if prefix.len() + 1 == nvars {
        let mut e = prefix.clone();
        e.push(remaining);
        out.push(e);
        return;
    }
    if nvars == 0 {
        if remaining == 0 {
            out.push(vec![]);
        }
        return;
    }
    for k in 0..=remaining {
        prefix.push(k);
        compositions(nvars, remaining - k, prefix, out);
        prefix.pop();
    }
}

/// `Q[vars] / (relations)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    pub vars: Vec<String>,
    pub relations: Vec<Polynomial>,
}

impl Presentation {
    pub fn new(vars: Vec<String>, relations: Vec<Polynomial>) -> Self {
        Presentation { vars, relations }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(1)
    }

    /// `f` written in the variable names, highest degree first.
    pub fn render(&self, f: &Polynomial) -> String {
        let mut terms: Vec<(&Exponent, &Scalar)> = f.terms().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(p, _)| **p > 0)
                .map(|(p, v)| if *p == 1 { v.clone() } else { format!("{v}^{p}") })
                .collect();
            let negative = c.numer().sign() == num_bigint::Sign::Minus;
            let mag = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&mag.to_string()),
                (false, true) => out.push_str(&mono.join("*")),
                (false, false) => out.push_str(&format!("{mag}*{}", mono.join("*"))),
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    vars: Vec<String>,
    relations: Vec<Vec<(Vec<u32>, Scalar)>>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PresentationJson {
            vars: self.vars.clone(),
            relations: self
                .relations
                .iter()
                .map(|p| p.terms().map(|(e, c)| (e.clone(), c.clone())).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PresentationJson::deserialize(deserializer)?;
        let n = raw.vars.len();
        let mut relations = Vec::new();
        for rel in raw.relations {
            let mut p = Polynomial::zero();
            for (e, c) in rel {
                if e.len() != n {
                    return Err(serde::de::Error::custom(format!(
                        "exponent vector {e:?} does not match {n} variables"
                    )));
                }
                p.add_term(e, c);
            }
            relations.push(p);
        }
        Ok(Presentation {
            vars: raw.vars,
            relations,
        })
    }
}
