//! Twisted graded free modules F = ⊕ᵢ S(−aᵢ) and their elements.
//!
//! Generator `i` of `F` sits in degree `twists[i]`. Elements are stored as
//! one polynomial per generator position; the degree of a nonzero component
//! is shifted by the position's twist.

use super::monomial::Monomial;
use super::poly::GradedPoly;
use super::{FieldElem, Ring};
use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: Ring,
    pub twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Ring, twists: Vec<i64>) -> Self {
        FreeModule { ring, twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn zero_vec(&self) -> ModVec {
        ModVec {
            comps: vec![GradedPoly::zero(); self.rank()],
        }
    }

    pub fn basis_vec(&self, i: usize) -> ModVec {
        let mut v = self.zero_vec();
        v.comps[i] = self.ring.poly_one();
        v
    }

    pub fn add(&self, a: &ModVec, b: &ModVec) -> ModVec {
        ModVec {
            comps: a
                .comps
                .iter()
                .zip(&b.comps)
                .map(|(x, y)| self.ring.poly_add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &ModVec, b: &ModVec) -> ModVec {
        ModVec {
            comps: a
                .comps
                .iter()
                .zip(&b.comps)
                .map(|(x, y)| self.ring.poly_sub(x, y))
                .collect(),
        }
    }

    pub fn neg(&self, a: &ModVec) -> ModVec {
        ModVec {
            comps: a.comps.iter().map(|x| self.ring.poly_neg(x)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem, a: &ModVec) -> ModVec {
        ModVec {
            comps: a.comps.iter().map(|x| self.ring.poly_scale(c, x)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &GradedPoly, a: &ModVec) -> ModVec {
        ModVec {
            comps: a.comps.iter().map(|x| self.ring.poly_mul(p, x)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElem, a: &ModVec) -> ModVec {
        ModVec {
            comps: a
                .comps
                .iter()
                .map(|x| self.ring.poly_mul_term(m, c, x))
                .collect(),
        }
    }

    /// Twisted degree of a homogeneous element, `None` for zero.
    /// Errors when components disagree.
    pub fn degree_of(&self, v: &ModVec) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (i, p) in v.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!(
                    "component {i} is not homogeneous"
                )));
            }
            let d = p.degree().unwrap() + self.twists[i];
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::Inhomogeneous(format!(
                        "component degrees {prev} and {d} disagree"
                    )))
                }
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, v: &ModVec) -> bool {
        self.degree_of(v).is_ok()
    }
}

/// An element of a free module: one polynomial per generator position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVec {
    pub comps: Vec<GradedPoly>,
}

impl ModVec {
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn from_comps(comps: Vec<GradedPoly>) -> Self {
        ModVec { comps }
    }
}

/// A module term: monomial at a generator position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: FieldElem,
}

/// Module monomial orders used by the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModOrder {
    /// Term-over-position over grevlex: compare monomials first, ties broken
    /// by position (lower index wins).
    TopGrevlex,
    /// Schreyer order induced by the lead terms of a parent basis:
    /// `weights[i]` is the lead (monomial, position) of parent element `i`.
    Schreyer { weights: Vec<(Monomial, usize)> },
}

impl ModOrder {
    pub fn cmp(&self, a_mono: &Monomial, a_pos: usize, b_mono: &Monomial, b_pos: usize) -> Ordering {
        match self {
            ModOrder::TopGrevlex => match a_mono.cmp_grevlex(b_mono) {
                Ordering::Equal => b_pos.cmp(&a_pos),
                ord => ord,
            },
            ModOrder::Schreyer { weights } => {
                let wa = a_mono.mul(&weights[a_pos].0);
                let wb = b_mono.mul(&weights[b_pos].0);
                match wa.cmp_grevlex(&wb) {
                    Ordering::Equal => match weights[b_pos].1.cmp(&weights[a_pos].1) {
                        Ordering::Equal => b_pos.cmp(&a_pos),
                        ord => ord,
                    },
                    ord => ord,
                }
            }
        }
    }
}

/// Lead term of `v` under `order`, `None` for the zero vector.
pub fn lead_term(v: &ModVec, order: &ModOrder) -> Option<ModTerm> {
    let mut best: Option<ModTerm> = None;
    for (pos, p) in v.comps.iter().enumerate() {
        if let Some((m, c)) = p.lead() {
            let better = match &best {
                None => true,
                Some(b) => order.cmp(m, pos, &b.mono, b.pos) == Ordering::Greater,
            };
            if better {
                best = Some(ModTerm {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
    }
    best
}

/// Checks that a matrix of polynomials defines a degree-0 homogeneous map
/// `source → target`: entry (i, j) must be zero or homogeneous of degree
/// `source.twists[j] − target.twists[i]`. Columns are elements of `target`.
pub fn entry_degree_check(
    columns: &[ModVec],
    source: &FreeModule,
    target: &FreeModule,
) -> Result<bool> {
    if columns.len() != source.rank() {
        return Err(Error::ShapeMismatch(format!(
            "expected {} columns, found {}",
            source.rank(),
            columns.len()
        )));
    }
    for (j, col) in columns.iter().enumerate() {
        if col.comps.len() != target.rank() {
            return Err(Error::ShapeMismatch(format!(
                "column {j} has {} rows, expected {}",
                col.comps.len(),
                target.rank()
            )));
        }
        for (i, entry) in col.comps.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let want = source.twists[j] - target.twists[i];
            if !entry.is_homogeneous() || entry.degree().unwrap() != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
