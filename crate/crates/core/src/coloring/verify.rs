use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::matrix::{coloring_matrix, crossing_matrix, knot_det};
use super::space::{coloring_space, is_heterogeneous, reconstruct, Coloring};
use crate::exactla::{is_prime, mod_u64};
use crate::knotio::{is_alternating, is_reduced, Diagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum KHStatus {
    Verified,
    NotPrimeDeterminant,
    NotAlternating,
    NotReduced,
    /// A theorem-level check failed. This signals a bug, never a property of the knot.
    Refuted,
}

/// Outcome of checking one diagram. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KHReport {
    pub name: Option<String>,
    pub n: usize,
    #[serde(serialize_with = "big_as_number")]
    pub determinant: Option<BigInt>,
    pub determinant_prime: bool,
    pub nullity_mod_p: Option<usize>,
    pub heterogeneous: bool,
    pub colors_used: usize,
    pub status: KHStatus,
    #[serde(serialize_with = "coloring_values")]
    pub witness: Option<Coloring>,
    /// Failed checks, present only for `Refuted`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

fn big_as_number<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(b) => match b.to_i64() {
            Some(small) => s.serialize_i64(small),
            None => s.serialize_str(&b.to_string()),
        },
    }
}

fn coloring_values<S: Serializer>(v: &Option<Coloring>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(c) => c.values.serialize(s),
    }
}

impl KHReport {
    fn new(d: &Diagram) -> Self {
        KHReport {
            name: d.name().map(str::to_owned),
            n: d.n(),
            determinant: None,
            determinant_prime: false,
            nullity_mod_p: None,
            heterogeneous: false,
            colors_used: 0,
            status: KHStatus::Refuted,
            witness: None,
            violations: Vec::new(),
        }
    }

    fn refute(&mut self, why: impl Into<String>) {
        self.violations.push(why.into());
    }
}

/// Checks that every nontrivial coloring of `d` by its prime determinant is
/// heterogeneous.
///
/// Diagrams that are not alternating, not reduced, or whose determinant is
/// not prime get the matching status, with as many fields filled in as can
/// be computed. Otherwise all `p(p-1)` nontrivial colorings `a*T + b*X` are
/// enumerated and tested one by one, and the coloring-matrix facts the
/// argument rests on are checked independently: nullity two, no column of
/// `L` vanishing mod `p`, and every zero-padded column of `L` (and row, for
/// the mirror) being a coloring.
pub fn verify_kh(d: &Diagram) -> KHReport {
    let mut report = KHReport::new(d);
    if d.n() >= 2 {
        if let Ok(det) = knot_det(d) {
            report.determinant_prime = is_prime(&det);
            report.determinant = Some(det);
        }
    }
    if !is_alternating(d) {
        report.status = KHStatus::NotAlternating;
        return report;
    }
    if !is_reduced(d) {
        report.status = KHStatus::NotReduced;
        return report;
    }
    if !report.determinant_prime {
        report.status = KHStatus::NotPrimeDeterminant;
        return report;
    }

    let space = match coloring_space(d) {
        Ok(s) => s,
        Err(e) => {
            report.refute(format!("coloring space unavailable: {e}"));
            return report;
        }
    };
    let p = space.p;
    report.nullity_mod_p = Some(space.dimension());
    if space.dimension() != 2 {
        report.refute(format!(
            "nullity mod {p} is {}, expected 2",
            space.dimension()
        ));
        return report;
    }
    let x = space
        .fundamental()
        .expect("two-dimensional kernel holds a nontrivial vector");

    let mut all_heterogeneous = true;
    'enumerate: for b in 1..p {
        for a in 0..p {
            let c = reconstruct(&x, a, b);
            if !c.satisfies(d) {
                report.refute(format!(
                    "a={a} b={b} does not satisfy the crossing relations"
                ));
                report.witness = Some(c);
                all_heterogeneous = false;
                break 'enumerate;
            }
            if !is_heterogeneous(&c) {
                report.refute(format!("nontrivial coloring a={a} b={b} repeats a color"));
                report.witness = Some(c);
                all_heterogeneous = false;
                break 'enumerate;
            }
        }
    }
    report.heterogeneous = all_heterogeneous;

    check_coloring_matrix(d, p, &mut report);

    if report.violations.is_empty() {
        report.status = KHStatus::Verified;
    } else if report.witness.is_none() {
        report.witness = Some(x);
    }
    if let Some(w) = &report.witness {
        report.colors_used = w.distinct_colors();
    }
    report
}

/// Columns of `L` padded with zero are colorings of `d`; rows padded with
/// zero are colorings for the transposed crossing matrix (the mirror).
/// Neither may vanish mod `p`. The first padded column becomes the witness.
fn check_coloring_matrix(d: &Diagram, p: u64, report: &mut KHReport) {
    let l = match coloring_matrix(d) {
        Ok(l) => l,
        Err(e) => {
            report.refute(format!("coloring matrix unavailable: {e}"));
            return;
        }
    };
    let n = d.n();
    let cm = crossing_matrix(d, 0).matrix;
    let cmt = cm.transpose();
    let padded = |v: Vec<BigInt>| {
        let mut v = v;
        v.push(BigInt::zero());
        v
    };
    let vanishes = |v: &[BigInt]| v.iter().all(|e| mod_u64(e, p) == 0);
    let kills = |m: &crate::exactla::IntMatrix, v: &[BigInt]| {
        m.mul_vec(v)
            .map(|img| img.iter().all(|e| mod_u64(e, p) == 0))
            .unwrap_or(false)
    };
    for k in 0..n - 1 {
        let col = l.column(k);
        if vanishes(&col) {
            report.refute(format!("column {k} of L vanishes mod {p}"));
        }
        let ext = padded(col);
        if !kills(&cm, &ext) {
            report.refute(format!("padded column {k} of L is not a coloring"));
        }
        let coloring = Coloring::from_integers(p, &ext);
        if !coloring.is_trivial() && !is_heterogeneous(&coloring) {
            report.refute(format!("padded column {k} of L repeats a color"));
            report.witness.get_or_insert(coloring.clone());
        }
        if k == 0 && report.witness.is_none() {
            report.witness = Some(coloring);
        }

        let row = padded(l.row(k).to_vec());
        if vanishes(&row) {
            report.refute(format!("row {k} of L vanishes mod {p}"));
        }
        if !kills(&cmt, &row) {
            report.refute(format!("padded row {k} of L is not a mirror coloring"));
        }
    }
}
