//! Free resolutions, Betti tables, Castelnuovo–Mumford regularity, chain-map
//! lifting, and Ext modules computed contravariantly from a resolution of the
//! first argument.

use crate::abcat::{
    minimal_generators, transpose_action, twisted_sum, GradedMorphism, Presentation, TwistedSum,
};
use crate::error::{Error, Result};
use crate::groebner::SubmoduleBasis;
use crate::ring::{FieldElem, FreeModule, ModVec};
use std::collections::BTreeMap;

/// A complex of presentations with differentials running `objects[i+1] →
/// objects[i]`; validated so that consecutive differentials compose to zero.
pub struct Complex {
    pub objects: Vec<Presentation>,
    pub differentials: Vec<GradedMorphism>,
}

impl Complex {
    pub fn new(objects: Vec<Presentation>, differentials: Vec<GradedMorphism>) -> Result<Self> {
        if !objects.is_empty() && differentials.len() + 1 != objects.len() {
            return Err(Error::ShapeMismatch(
                "need one differential between consecutive objects".into(),
            ));
        }
        for (i, d) in differentials.iter().enumerate() {
            if !d.source().same_presentation(&objects[i + 1])
                || !d.target().same_presentation(&objects[i])
            {
                return Err(Error::ShapeMismatch(format!(
                    "differential {i} does not match its endpoints"
                )));
            }
        }
        for w in differentials.windows(2) {
            if !w[0].compose(&w[1])?.is_zero_morphism()? {
                return Err(Error::Precondition(
                    "consecutive differentials do not compose to zero".into(),
                ));
            }
        }
        Ok(Complex {
            objects,
            differentials,
        })
    }
}

/// Homology at the middle of `A → B → C` (with `g ∘ f = 0`): ker(g)/im(f).
pub fn homology_at(f: &GradedMorphism, g: &GradedMorphism) -> Result<Presentation> {
    if !g.compose(f)?.is_zero_morphism()? {
        return Err(Error::Precondition("composite is not zero".into()));
    }
    let (kernel, incl) = g.kernel()?;
    let lifted = f.lift_through(&incl)?;
    Ok(kernel.quotient_by(lifted.cols())?.0)
}

/// Exactness at the middle of `A → B → C`: every kernel generator of `g`
/// lies in the image of `f` (plus relations).
pub fn is_exact_at(f: &GradedMorphism, g: &GradedMorphism) -> Result<bool> {
    let (_, incl) = g.kernel()?;
    let b = f.target();
    let mut cols = f.cols().to_vec();
    cols.extend_from_slice(&b.relations().gens);
    let basis = SubmoduleBasis::new(cols, b.target().clone(), b.ring_relations().to_vec())?;
    for c in incl.cols() {
        if !basis.is_member(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A free resolution F_L → … → F_1 → F_0 ↠ M. `modules[0]` is the ambient
/// free module of the presentation; `diffs[i]` holds the columns of
/// d_{i+1}: F_{i+1} → F_i.
pub struct FreeResolution {
    pub presentation: Presentation,
    pub modules: Vec<FreeModule>,
    pub diffs: Vec<Vec<ModVec>>,
    pub minimal: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> &FreeModule {
        &self.modules[i]
    }

    /// F_i viewed as a (free) presentation over the same coefficient ring.
    pub fn free_presentation(&self, i: usize) -> Presentation {
        Presentation::free(
            self.modules[i].clone(),
            self.presentation.ring_relations().to_vec(),
        )
    }

    /// d_i: F_i → F_{i-1} as a morphism of free presentations (1 ≤ i ≤ L).
    pub fn differential(&self, i: usize) -> GradedMorphism {
        GradedMorphism::new_unchecked(
            self.free_presentation(i),
            self.free_presentation(i - 1),
            self.diffs[i - 1].clone(),
        )
    }

    /// Betti table: (homological index, generator degree) → multiplicity.
    pub fn betti(&self) -> BTreeMap<(usize, i64), usize> {
        let mut table = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &t in &f.twists {
                *table.entry((i, t)).or_insert(0) += 1;
            }
        }
        table
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.modules.iter().map(|f| f.rank()).collect()
    }

    /// d² = 0 in every position (decided via morphism equality).
    pub fn check_squares(&self) -> Result<bool> {
        for i in 1..self.length() {
            let a = self.differential(i);
            let b = self.differential(i + 1);
            if !a.compose(&b)?.is_zero_morphism()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No differential entry is a nonzero constant.
    pub fn has_unit_entries(&self) -> bool {
        self.diffs.iter().flatten().any(|col| {
            col.comps
                .iter()
                .any(|p| !p.is_zero() && p.degree() == Some(0))
        })
    }

    /// Alternating-sum exactness audit over a degree range.
    pub fn euler_check(&self, lo: i64, hi: i64) -> bool {
        let rels = self.presentation.ring_relations().to_vec();
        let m_h = self.presentation.hilbert_function(lo, hi);
        let mut acc: Vec<i64> = m_h.iter().map(|&x| x as i64).collect();
        for (i, f) in self.modules.iter().enumerate() {
            let h = Presentation::free(f.clone(), rels.clone()).hilbert_function(lo, hi);
            let sign = if i % 2 == 0 { -1i64 } else { 1 };
            for (a, &b) in acc.iter_mut().zip(&h) {
                *a += sign * b as i64;
            }
        }
        acc.iter().all(|&x| x == 0)
    }
}

/// Builds a free resolution of `M` to the requested length. With
/// `minimalize`, every syzygy step contributes a minimal generating set, so
/// the resolution is minimal whenever the input presentation is (its ambient
/// free module is always kept as F₀). Over the plain polynomial ring minimal
/// resolutions terminate by the number of variables; in quotient-ring mode
/// the resolution may be periodic and is simply truncated at `length`.
pub fn free_resolution(
    m: &Presentation,
    length: usize,
    minimalize: bool,
) -> Result<FreeResolution> {
    let ring_rels = m.ring_relations().to_vec();
    let mut modules = vec![m.target().clone()];
    let mut diffs: Vec<Vec<ModVec>> = Vec::new();
    let mut kernel_gens: Vec<ModVec> = m.relations().gens.clone();
    for _step in 1..=length {
        let ambient = modules.last().unwrap().clone();
        let gens: Vec<ModVec> = if minimalize {
            minimal_generators(&kernel_gens, &ambient, &[], &ring_rels)?
        } else {
            kernel_gens
                .iter()
                .filter(|v| !v.is_zero())
                .cloned()
                .collect()
        };
        if gens.is_empty() {
            while modules.len() <= length {
                diffs.push(Vec::new());
                modules.push(FreeModule::new(m.ring().clone(), vec![]));
            }
            break;
        }
        let mut twists = Vec::with_capacity(gens.len());
        for g in &gens {
            twists.push(ambient.degree_of(g)?.expect("nonzero generator"));
        }
        diffs.push(gens.clone());
        modules.push(FreeModule::new(m.ring().clone(), twists));
        let basis = SubmoduleBasis::new(gens, ambient, ring_rels.clone())?;
        kernel_gens = basis.syzygies_of_generators()?;
    }
    Ok(FreeResolution {
        presentation: m.clone(),
        modules,
        diffs,
        minimal: minimalize,
    })
}

/// Castelnuovo–Mumford regularity from the minimal resolution:
/// max over i of (max generator degree of F_i) − i. Refused in quotient-ring
/// mode, where resolutions need not terminate.
pub fn regularity(m: &Presentation) -> Result<i64> {
    if !m.ring_relations().is_empty() {
        return Err(Error::Precondition(
            "regularity is not defined in quotient-ring mode".into(),
        ));
    }
    if m.is_zero() {
        return Err(Error::Precondition(
            "regularity of the zero module is undefined".into(),
        ));
    }
    let res = free_resolution(m, m.ring().nvars(), true)?;
    let mut reg = i64::MIN;
    for (i, f) in res.modules.iter().enumerate() {
        if let Some(&t) = f.twists.iter().max() {
            reg = reg.max(t - i as i64);
        }
    }
    Ok(reg)
}

/// Lifts `f: M → N` to a chain map between resolutions, degree by degree.
/// The 0-th component is the matrix of `f` itself; lifts through free
/// modules always exist.
pub fn chain_lift(
    f: &GradedMorphism,
    rm: &FreeResolution,
    rn: &FreeResolution,
) -> Result<Vec<GradedMorphism>> {
    if !rm.presentation.same_presentation(f.source())
        || !rn.presentation.same_presentation(f.target())
    {
        return Err(Error::ShapeMismatch(
            "chain_lift resolutions do not resolve the morphism endpoints".into(),
        ));
    }
    let len = rm.length().min(rn.length());
    let mut out: Vec<GradedMorphism> = Vec::with_capacity(len + 1);
    out.push(GradedMorphism::new_unchecked(
        rm.free_presentation(0),
        rn.free_presentation(0),
        f.cols().to_vec(),
    ));
    for i in 1..=len {
        let beta = out[i - 1].compose(&rm.differential(i))?;
        let phi = if rn.modules[i].rank() == 0 {
            if !beta.is_zero_morphism()? {
                return Err(Error::NoLift);
            }
            GradedMorphism::zero(&rm.free_presentation(i), &rn.free_presentation(i))
        } else {
            beta.lift_through(&rn.differential(i))?
        };
        out.push(phi);
    }
    Ok(out)
}

/// Ext^c(M, N) as a graded module, with the plumbing needed to coordinatize
/// cocycles: the homology of Hom(F_{c−1}, N) → Hom(F_c, N) → Hom(F_{c+1}, N).
pub struct ExtCalculator {
    pub c: usize,
    pub m: Presentation,
    pub n: Presentation,
    pub resolution: FreeResolution,
    sum_c: TwistedSum,
    kernel_incl: GradedMorphism,
    pub homology: Presentation,
}

impl ExtCalculator {
    pub fn new(c: usize, m: &Presentation, n: &Presentation) -> Result<Self> {
        let resolution = free_resolution(m, c + 1, true)?;
        Self::with_resolution(c, resolution, n)
    }

    pub fn with_resolution(c: usize, resolution: FreeResolution, n: &Presentation) -> Result<Self> {
        let m = resolution.presentation.clone();
        if resolution.length() < c + 1 {
            return Err(Error::ShapeMismatch(
                "resolution too short for the requested Ext".into(),
            ));
        }
        let sum_c = twisted_sum(n, &resolution.modules[c].twists)?;
        let sum_next = twisted_sum(n, &resolution.modules[c + 1].twists)?;
        let out_map = transpose_action(&sum_c, &sum_next, &resolution.diffs[c])?;
        let (kernel, kernel_incl) = out_map.kernel()?;
        let homology = if c == 0 {
            kernel.clone()
        } else {
            let sum_prev = twisted_sum(n, &resolution.modules[c - 1].twists)?;
            let in_map = transpose_action(&sum_prev, &sum_c, &resolution.diffs[c - 1])?;
            let lifted = in_map.lift_through(&kernel_incl)?;
            kernel.quotient_by(lifted.cols())?.0
        };
        Ok(ExtCalculator {
            c,
            m,
            n: n.clone(),
            resolution,
            sum_c,
            kernel_incl,
            homology,
        })
    }

    /// dim_k Ext^c(M, N)_d.
    pub fn dim_at(&self, d: i64) -> usize {
        self.homology.monomial_basis_at(d).len()
    }

    pub fn dim_degree_zero(&self) -> usize {
        self.dim_at(0)
    }

    /// Degree-0 basis as cocycle representatives F_c → N, each killed by the
    /// next transpose differential.
    pub fn basis_cocycles(&self) -> Result<Vec<GradedMorphism>> {
        let ring = self.homology.ring();
        let field = ring.field();
        let free_c = self.resolution.free_presentation(self.c);
        let mut out = Vec::new();
        for (pos, mono) in self.homology.monomial_basis_at(0) {
            let mut v = self.homology.target().zero_vec();
            v.comps[pos] = ring.poly_monomial(mono, field.one());
            let w = self.kernel_incl.apply(&v);
            let cols = self.split_blocks(&w);
            out.push(GradedMorphism::new(free_c.clone(), self.n.clone(), cols)?);
        }
        Ok(out)
    }

    /// Coordinates of a degree-0 cocycle (a morphism F_c → N killed by the
    /// transpose of d_{c+1}) in the degree-0 basis.
    pub fn coordinates_of(&self, cocycle: &GradedMorphism) -> Result<Vec<FieldElem>> {
        let field = self.homology.ring().field();
        let w = self.assemble(cocycle)?;
        let mut cols = self.kernel_incl.cols().to_vec();
        let nk = cols.len();
        cols.extend_from_slice(&self.sum_c.sum.relations().gens);
        let basis = SubmoduleBasis::new(
            cols,
            self.sum_c.sum.target().clone(),
            self.sum_c.sum.ring_relations().to_vec(),
        )?;
        let coeffs = basis
            .express(&w)?
            .ok_or_else(|| Error::Precondition("not a cocycle for this calculator".into()))?;
        let u = ModVec::from_comps(coeffs[..nk].to_vec());
        let nf = self.homology.relations().normal_form(&u)?;
        let index = self.homology.monomial_basis_at(0);
        let mut coords = vec![field.zero(); index.len()];
        for (pos, p) in nf.comps.iter().enumerate() {
            for (mono, c) in &p.terms {
                let slot = index
                    .iter()
                    .position(|(ip, im)| *ip == pos && im == mono)
                    .ok_or_else(|| {
                        Error::Precondition("normal form has a non-degree-zero term".into())
                    })?;
                coords[slot] = field.add(&coords[slot], c);
            }
        }
        Ok(coords)
    }

    fn assemble(&self, cocycle: &GradedMorphism) -> Result<ModVec> {
        let fc = &self.resolution.modules[self.c];
        if cocycle.cols().len() != fc.rank() {
            return Err(Error::ShapeMismatch(
                "cocycle does not match F_c of this calculator".into(),
            ));
        }
        let mut w = self.sum_c.sum.target().zero_vec();
        for (j, col) in cocycle.cols().iter().enumerate() {
            for (i, p) in col.comps.iter().enumerate() {
                w.comps[self.sum_c.offsets[j] + i] = p.clone();
            }
        }
        Ok(w)
    }

    fn split_blocks(&self, w: &ModVec) -> Vec<ModVec> {
        (0..self.sum_c.shifts.len())
            .map(|j| {
                ModVec::from_comps(
                    w.comps[self.sum_c.offsets[j]..self.sum_c.offsets[j] + self.sum_c.block_rank]
                        .to_vec(),
                )
            })
            .collect()
    }
}

/// Ext^c(M, N) as a graded module presentation.
pub fn ext_module(c: usize, m: &Presentation, n: &Presentation) -> Result<Presentation> {
    Ok(ExtCalculator::new(c, m, n)?.homology)
}

/// Degree-0 part of Ext^c(M, N): dimension and cocycle representatives.
pub fn ext_group_basis(
    c: usize,
    m: &Presentation,
    n: &Presentation,
) -> Result<(usize, Vec<GradedMorphism>)> {
    let calc = ExtCalculator::new(c, m, n)?;
    let basis = calc.basis_cocycles()?;
    Ok((basis.len(), basis))
}

/// Binomial coefficient (zero outside the usual range).
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}
