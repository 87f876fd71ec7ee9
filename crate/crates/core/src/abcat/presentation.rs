//! Finitely presented graded modules: a module is the cokernel of a
//! homogeneous relation matrix inside a twisted free module.

use crate::error::{Error, Result};
use crate::groebner::SubmoduleBasis;
use crate::ring::{monomials_of_degree, FreeModule, GradedPoly, ModVec, Monomial, Ring};
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct PresData {
    target: FreeModule,
    relations: SubmoduleBasis,
}

/// A finitely presented graded module M = target / ⟨relations⟩, optionally
/// over a hypersurface quotient of the polynomial ring. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Presentation(Arc<PresData>);

impl Presentation {
    pub fn new(
        target: FreeModule,
        relation_gens: Vec<ModVec>,
        ring_relations: Vec<GradedPoly>,
    ) -> Result<Self> {
        let relations = SubmoduleBasis::new(relation_gens, target.clone(), ring_relations)?;
        Ok(Presentation(Arc::new(PresData { target, relations })))
    }

    /// The free module itself (no relations).
    pub fn free(target: FreeModule, ring_relations: Vec<GradedPoly>) -> Self {
        Self::new(target, Vec::new(), ring_relations).expect("free presentation is always valid")
    }

    /// The zero module.
    pub fn zero(ring: Ring, ring_relations: Vec<GradedPoly>) -> Self {
        Self::free(FreeModule::new(ring, vec![]), ring_relations)
    }

    pub fn target(&self) -> &FreeModule {
        &self.0.target
    }

    pub fn relations(&self) -> &SubmoduleBasis {
        &self.0.relations
    }

    pub fn ring(&self) -> &Ring {
        &self.0.target.ring
    }

    pub fn ring_relations(&self) -> &[GradedPoly] {
        &self.0.relations.ring_relations
    }

    pub fn rank(&self) -> usize {
        self.0.target.rank()
    }

    pub fn twists(&self) -> &[i64] {
        &self.0.target.twists
    }

    /// True when every generator lies in the relation submodule.
    pub fn is_zero(&self) -> bool {
        (0..self.rank()).all(|i| {
            self.0
                .relations
                .is_member(&self.0.target.basis_vec(i))
                .unwrap()
        })
    }

    /// dim_k M_d for d in [lo, hi], by counting monomials outside the
    /// lead-term module.
    pub fn hilbert_function(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|d| self.monomial_basis_at(d).len()).collect()
    }

    /// The standard monomials of degree `d`: pairs (position, monomial) whose
    /// classes form a k-basis of M_d. Sorted by position, then grevlex
    /// descending.
    pub fn monomial_basis_at(&self, d: i64) -> Vec<(usize, Monomial)> {
        let leads = self.0.relations.lead_module();
        let mut out = Vec::new();
        for pos in 0..self.rank() {
            let mut monos = monomials_of_degree(self.ring().nvars(), d - self.twists()[pos]);
            monos.sort_by(|a, b| b.cmp_grevlex(a));
            for m in monos {
                if !leads[pos].iter().any(|l| l.divides(&m)) {
                    out.push((pos, m));
                }
            }
        }
        out
    }

    /// Finite-length test on the lead-term module: every position must be
    /// either dead (its generator reduces away) or capped by a pure power of
    /// every variable.
    pub fn is_finite_length(&self) -> bool {
        let leads = self.0.relations.lead_module();
        let nvars = self.ring().nvars();
        for pos in 0..self.rank() {
            if leads[pos].iter().any(|m| m.is_one()) {
                continue;
            }
            for v in 0..nvars {
                let has_pure_power = leads[pos].iter().any(|m| {
                    m.exps
                        .iter()
                        .enumerate()
                        .all(|(w, &e)| if w == v { e > 0 } else { e == 0 })
                });
                if !has_pure_power {
                    return false;
                }
            }
        }
        true
    }

    /// For finite-length modules: an upper bound on the top nonzero degree.
    pub fn finite_support_bound(&self) -> i64 {
        debug_assert!(self.is_finite_length());
        let leads = self.0.relations.lead_module();
        let nvars = self.ring().nvars();
        let mut bound = i64::MIN;
        for pos in 0..self.rank() {
            if leads[pos].iter().any(|m| m.is_one()) {
                continue;
            }
            let mut slack = 0i64;
            for v in 0..nvars {
                let cap = leads[pos]
                    .iter()
                    .filter(|m| {
                        m.exps
                            .iter()
                            .enumerate()
                            .all(|(w, &e)| if w == v { e > 0 } else { e == 0 })
                    })
                    .map(|m| m.exps[v] as i64)
                    .min()
                    .expect("finite length requires pure powers");
                slack += cap - 1;
            }
            bound = bound.max(self.twists()[pos] + slack);
        }
        if bound == i64::MIN {
            // zero module: empty support
            self.twists().iter().copied().min().unwrap_or(0) - 1
        } else {
            bound
        }
    }

    /// Top nonzero degree of a finite-length module, `None` for zero.
    pub fn top_degree(&self) -> Option<i64> {
        debug_assert!(self.is_finite_length());
        let lo = self.twists().iter().copied().min().unwrap_or(0);
        let hi = self.finite_support_bound();
        (lo..=hi)
            .rev()
            .find(|&d| !self.monomial_basis_at(d).is_empty())
    }

    /// Structural equality: same ring, twists, reduced relation basis, and
    /// ring relations. Chains of morphisms must share endpoint presentations
    /// in this sense.
    pub fn same_presentation(&self, other: &Presentation) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.ring() == other.ring()
            && self.twists() == other.twists()
            && self.ring_relations() == other.ring_relations()
            && self
                .0
                .relations
                .gb_vecs()
                .eq(other.0.relations.gb_vecs())
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other)
    }
}

impl Eq for Presentation {}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coker({} relations in {}^{} twists {:?})",
            self.0.relations.gens.len(),
            self.ring(),
            self.rank(),
            self.twists()
        )
    }
}

/// Direct sum with its injections and projections (as raw column data;
/// morphism wrappers are built by the caller).
pub struct DirectSum {
    pub sum: Presentation,
    pub offsets: Vec<usize>,
}

impl DirectSum {
    /// Injection of `part` as block `block` of the sum.
    pub fn injection(&self, block: usize, part: &Presentation) -> super::GradedMorphism {
        let cols = (0..part.rank())
            .map(|i| self.sum.target().basis_vec(self.offsets[block] + i))
            .collect();
        super::GradedMorphism::new_unchecked(part.clone(), self.sum.clone(), cols)
    }

    /// Projection onto `part` at block `block` of the sum.
    pub fn projection(&self, block: usize, part: &Presentation) -> super::GradedMorphism {
        let mut cols = vec![part.target().zero_vec(); self.sum.rank()];
        for i in 0..part.rank() {
            cols[self.offsets[block] + i] = part.target().basis_vec(i);
        }
        super::GradedMorphism::new_unchecked(self.sum.clone(), part.clone(), cols)
    }
}

pub fn direct_sum(parts: &[&Presentation]) -> Result<DirectSum> {
    let ring = parts
        .first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::ShapeMismatch("empty direct sum".into()))?;
    let ring_rels = parts[0].ring_relations().to_vec();
    let mut twists = Vec::new();
    let mut offsets = Vec::new();
    for p in parts {
        if p.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if p.ring_relations() != ring_rels.as_slice() {
            return Err(Error::RingMismatch);
        }
        offsets.push(twists.len());
        twists.extend_from_slice(p.twists());
    }
    let total = twists.len();
    let target = FreeModule::new(ring.clone(), twists);
    let mut rels = Vec::new();
    for (block, p) in parts.iter().enumerate() {
        for r in &p.relations().gens {
            let mut v = target.zero_vec();
            for (i, c) in r.comps.iter().enumerate() {
                v.comps[offsets[block] + i] = c.clone();
            }
            rels.push(v);
        }
        let _ = total;
    }
    Ok(DirectSum {
        sum: Presentation::new(target, rels, ring_rels)?,
        offsets,
    })
}
