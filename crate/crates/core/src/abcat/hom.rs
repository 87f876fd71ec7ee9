//! Graded Hom modules: Hom(M, N) presented as the kernel of
//! Hom(F₀, N) → Hom(F₁, N), with extraction of degree-0 bases as explicit
//! morphisms.

use super::morphism::GradedMorphism;
use super::presentation::Presentation;
use crate::error::Result;
use crate::ring::{FreeModule, ModVec};

/// The twisted sum ⊕ⱼ N(shiftⱼ) with its block layout.
pub struct TwistedSum {
    pub sum: Presentation,
    pub offsets: Vec<usize>,
    pub shifts: Vec<i64>,
    pub block_rank: usize,
}

/// Builds ⊕ⱼ N(shiftⱼ): block j is a copy of N with twists lowered by
/// shiftⱼ. For shifts taken from a free module F this presents Hom(F, N).
pub fn twisted_sum(n: &Presentation, shifts: &[i64]) -> Result<TwistedSum> {
    let ring = n.ring().clone();
    let block_rank = n.rank();
    let mut twists = Vec::with_capacity(block_rank * shifts.len());
    let mut offsets = Vec::with_capacity(shifts.len());
    for &a in shifts {
        offsets.push(twists.len());
        twists.extend(n.twists().iter().map(|t| t - a));
    }
    let target = FreeModule::new(ring, twists);
    let mut rels = Vec::new();
    for (j, _) in shifts.iter().enumerate() {
        for r in &n.relations().gens {
            let mut v = target.zero_vec();
            for (i, c) in r.comps.iter().enumerate() {
                v.comps[offsets[j] + i] = c.clone();
            }
            rels.push(v);
        }
    }
    let sum = Presentation::new(target, rels, n.ring_relations().to_vec())?;
    Ok(TwistedSum {
        sum,
        offsets,
        shifts: shifts.to_vec(),
        block_rank,
    })
}

/// The map Hom(F, N) → Hom(F′, N) induced by a matrix d: F′ → F (given as
/// columns over F): precomposition, i.e. block (l ← r) acts by
/// multiplication with entry `d[r][l]`.
pub fn transpose_action(
    source: &TwistedSum,
    target: &TwistedSum,
    d_cols: &[ModVec],
) -> Result<GradedMorphism> {
    let f = target.sum.target();
    let ring = &f.ring;
    let mut cols = Vec::with_capacity(source.sum.rank());
    for r in 0..source.shifts.len() {
        for t in 0..source.block_rank {
            // image of source generator (block r, row t)
            let mut v = f.zero_vec();
            for (l, col) in d_cols.iter().enumerate() {
                let entry = &col.comps[r];
                if !entry.is_zero() {
                    let dst = target.offsets[l] + t;
                    v.comps[dst] = ring.poly_add(&v.comps[dst], entry);
                }
            }
            cols.push(v);
        }
    }
    GradedMorphism::new(source.sum.clone(), target.sum.clone(), cols)
}

/// The graded module Hom(M, N) together with the data needed to read its
/// elements back as morphisms M → N.
pub struct HomModule {
    pub module: Presentation,
    incl: GradedMorphism,
    sum: TwistedSum,
    m: Presentation,
    n: Presentation,
}

impl HomModule {
    pub fn inclusion(&self) -> &GradedMorphism {
        &self.incl
    }

    pub fn sum(&self) -> &TwistedSum {
        &self.sum
    }

    pub fn new(m: &Presentation, n: &Presentation) -> Result<Self> {
        let sum0 = twisted_sum(n, m.twists())?;
        // F1 is the free module on the relation generators of M
        let mut rel_twists = Vec::new();
        for r in &m.relations().gens {
            rel_twists.push(m.target().degree_of(r)?.expect("nonzero relation"));
        }
        let sum1 = twisted_sum(n, &rel_twists)?;
        let d1_cols: Vec<ModVec> = m.relations().gens.clone();
        let action = transpose_action(&sum0, &sum1, &d1_cols)?;
        let (module, incl) = action.kernel()?;
        Ok(HomModule {
            module,
            incl,
            sum: sum0,
            m: m.clone(),
            n: n.clone(),
        })
    }

    /// k-basis of the degree-0 part as explicit degree-0 morphisms M → N.
    pub fn degree_zero_basis(&self) -> Result<Vec<GradedMorphism>> {
        let ring = self.module.ring();
        let field = ring.field();
        let mut out = Vec::new();
        for (pos, mono) in self.module.monomial_basis_at(0) {
            let mut v = self.module.target().zero_vec();
            v.comps[pos] = ring.poly_monomial(mono, field.one());
            let w = self.incl.apply(&v);
            let cols = self.split_blocks(&w);
            out.push(GradedMorphism::new(self.m.clone(), self.n.clone(), cols)?);
        }
        Ok(out)
    }

    pub fn dim_at(&self, d: i64) -> usize {
        self.module.monomial_basis_at(d).len()
    }

    fn split_blocks(&self, w: &ModVec) -> Vec<ModVec> {
        (0..self.sum.shifts.len())
            .map(|j| {
                ModVec::from_comps(
                    w.comps[self.sum.offsets[j]..self.sum.offsets[j] + self.sum.block_rank]
                        .to_vec(),
                )
            })
            .collect()
    }
}

/// Convenience wrappers matching the operation names used throughout.
pub fn hom_module(m: &Presentation, n: &Presentation) -> Result<Presentation> {
    Ok(HomModule::new(m, n)?.module)
}

pub fn hom_group_basis(m: &Presentation, n: &Presentation) -> Result<Vec<GradedMorphism>> {
    HomModule::new(m, n)?.degree_zero_basis()
}
