//! Kernels, images, cokernels, lifts, pullbacks, pushouts, intersections,
//! truncation, and torsion — the constructive Abelian-category toolkit.

use super::morphism::GradedMorphism;
use super::presentation::{direct_sum, Presentation};
use crate::error::{Error, Result};
use crate::groebner::SubmoduleBasis;
use crate::ring::{lead_term, FreeModule, GradedPoly, ModOrder, ModVec};

/// Greedy minimal generating set: candidates are processed by ascending
/// degree; a candidate is kept iff it does not already lie in the submodule
/// generated by the kept ones together with `base`. Same-degree redundancy
/// is resolved k-linearly on normal forms.
pub(crate) fn minimal_generators(
    candidates: &[ModVec],
    ambient: &FreeModule,
    base: &[ModVec],
    ring_relations: &[GradedPoly],
) -> Result<Vec<ModVec>> {
    let field = ambient.ring.field();
    let mut graded: Vec<(i64, &ModVec)> = Vec::new();
    for c in candidates {
        if let Some(d) = ambient.degree_of(c)? {
            graded.push((d, c));
        }
    }
    graded.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<ModVec> = Vec::new();
    let mut i = 0;
    while i < graded.len() {
        let d = graded[i].0;
        let mut batch = Vec::new();
        while i < graded.len() && graded[i].0 == d {
            batch.push(graded[i].1);
            i += 1;
        }
        let mut gens = kept.clone();
        gens.extend_from_slice(base);
        let gb = SubmoduleBasis::new(gens, ambient.clone(), ring_relations.to_vec())?;
        let mut echelon: Vec<ModVec> = Vec::new();
        for c in batch {
            let mut nf = gb.normal_form(c)?;
            // k-linear reduction against the same-degree rows
            'reduce: while let Some(lt) = lead_term(&nf, &ModOrder::TopGrevlex) {
                for row in &echelon {
                    let rt = lead_term(row, &ModOrder::TopGrevlex).unwrap();
                    if rt.pos == lt.pos && rt.mono == lt.mono {
                        let factor = field.div(&lt.coeff, &rt.coeff);
                        nf = ambient.sub(&nf, &ambient.scale(&factor, row));
                        continue 'reduce;
                    }
                }
                break;
            }
            if !nf.is_zero() {
                kept.push(c.clone());
                echelon.push(nf);
            }
        }
    }
    Ok(kept)
}

impl Presentation {
    /// The subobject of `self` generated by the classes of `gens`
    /// (vectors in the ambient free module), as its own presentation with
    /// the inclusion morphism. Redundant generators are pruned.
    pub fn subobject(&self, gens: &[ModVec]) -> Result<(Presentation, GradedMorphism)> {
        let kept = minimal_generators(
            gens,
            self.target(),
            &self.relations().gens,
            self.ring_relations(),
        )?;
        let mut twists = Vec::with_capacity(kept.len());
        for g in &kept {
            twists.push(self.target().degree_of(g)?.expect("nonzero generator"));
        }
        // relations: syzygies of [kept | relations] projected onto kept
        let mut cols = kept.clone();
        cols.extend_from_slice(&self.relations().gens);
        let basis = SubmoduleBasis::new(cols, self.target().clone(), self.ring_relations().to_vec())?;
        let syz = basis.syzygies_of_generators()?;
        let sub_free = FreeModule::new(self.ring().clone(), twists);
        let rels: Vec<ModVec> = syz
            .into_iter()
            .map(|s| ModVec::from_comps(s.comps[..kept.len()].to_vec()))
            .filter(|v| !v.is_zero())
            .collect();
        let rels = minimal_generators(&rels, &sub_free, &[], self.ring_relations())?;
        let sub = Presentation::new(sub_free, rels, self.ring_relations().to_vec())?;
        let incl = GradedMorphism::new_unchecked(sub.clone(), self.clone(), kept);
        Ok((sub, incl))
    }

    /// The quotient of `self` by the submodule generated by the classes of
    /// `gens`, with the natural epimorphism.
    pub fn quotient_by(&self, gens: &[ModVec]) -> Result<(Presentation, GradedMorphism)> {
        let mut rels = self.relations().gens.clone();
        rels.extend_from_slice(gens);
        let rels = minimal_generators(&rels, self.target(), &[], self.ring_relations())?;
        let q = Presentation::new(self.target().clone(), rels, self.ring_relations().to_vec())?;
        let epi_cols = (0..self.rank()).map(|i| self.target().basis_vec(i)).collect();
        let epi = GradedMorphism::new_unchecked(self.clone(), q.clone(), epi_cols);
        Ok((q, epi))
    }
}

pub struct ImageCokernel {
    pub image: Presentation,
    pub image_incl: GradedMorphism,
    pub cokernel: Presentation,
    pub cokernel_epi: GradedMorphism,
}

impl GradedMorphism {
    /// Kernel with its inclusion: syzygies of the columns of `f` together
    /// with the target relations, projected back to the source.
    pub fn kernel(&self) -> Result<(Presentation, GradedMorphism)> {
        let n = self.source().rank();
        let mut cols = self.cols().to_vec();
        cols.extend_from_slice(&self.target().relations().gens);
        let basis = SubmoduleBasis::new(
            cols,
            self.target().target().clone(),
            self.ring_relations().to_vec(),
        )?;
        let syz = basis.syzygies_of_generators()?;
        let ker_gens: Vec<ModVec> = syz
            .into_iter()
            .map(|s| ModVec::from_comps(s.comps[..n].to_vec()))
            .filter(|v| !v.is_zero())
            .collect();
        self.source().subobject(&ker_gens)
    }

    /// Image (as a subobject of the target) and cokernel (as a quotient).
    pub fn image_cokernel(&self) -> Result<ImageCokernel> {
        let (image, image_incl) = self.target().subobject(self.cols())?;
        let (cokernel, cokernel_epi) = self.target().quotient_by(self.cols())?;
        Ok(ImageCokernel {
            image,
            image_incl,
            cokernel,
            cokernel_epi,
        })
    }

    pub fn is_mono(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_zero())
    }

    pub fn is_epi(&self) -> Result<bool> {
        Ok(self.target().quotient_by(self.cols())?.0.is_zero())
    }

    pub fn is_iso(&self) -> Result<bool> {
        Ok(self.is_mono()? && self.is_epi()?)
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Result<GradedMorphism> {
        GradedMorphism::identity(self.target()).lift_through(self)
    }

    /// Factors `self` through `g`: returns `h` with `g ∘ h = self`.
    /// Solves column-wise membership; errors with `NoLift` when a column of
    /// `self` is not in the image of `g` plus relations, or when the
    /// generator-wise solution fails to be well defined (which cannot happen
    /// when `g` is mono or the source of `self` is free).
    pub fn lift_through(&self, g: &GradedMorphism) -> Result<GradedMorphism> {
        if !self.target().same_presentation(g.target()) {
            return Err(Error::ShapeMismatch("lift targets differ".into()));
        }
        let mut cols = g.cols().to_vec();
        let n_g = cols.len();
        cols.extend_from_slice(&g.target().relations().gens);
        let basis = SubmoduleBasis::new(
            cols,
            g.target().target().clone(),
            self.ring_relations().to_vec(),
        )?;
        let mut h_cols = Vec::with_capacity(self.cols().len());
        for c in self.cols() {
            let coeffs = basis.express(c)?.ok_or(Error::NoLift)?;
            h_cols.push(ModVec::from_comps(coeffs[..n_g].to_vec()));
        }
        let h = GradedMorphism::new(self.source().clone(), g.source().clone(), h_cols)
            .map_err(|_| Error::NoLift)?;
        Ok(h)
    }

    fn ring_relations(&self) -> &[GradedPoly] {
        self.source().ring_relations()
    }
}

pub struct Pullback {
    pub object: Presentation,
    pub to_first: GradedMorphism,
    pub to_second: GradedMorphism,
    incl: GradedMorphism,
    sum_offsets: Vec<usize>,
}

/// Fiber product of `f: X → Z` and `g: Y → Z`, computed as the kernel of
/// `(f, −g): X ⊕ Y → Z`.
pub fn pullback(f: &GradedMorphism, g: &GradedMorphism) -> Result<Pullback> {
    if !f.target().same_presentation(g.target()) {
        return Err(Error::ShapeMismatch("pullback targets differ".into()));
    }
    let ds = direct_sum(&[f.source(), g.source()])?;
    let (pi_x, pi_y) = sum_projections(&ds.sum, &ds.offsets, f.source(), g.source());
    let diff = f.compose(&pi_x)?.sub(&g.compose(&pi_y)?)?;
    let (object, incl) = diff.kernel()?;
    let to_first = pi_x.compose(&incl)?;
    let to_second = pi_y.compose(&incl)?;
    Ok(Pullback {
        object,
        to_first,
        to_second,
        incl,
        sum_offsets: ds.offsets,
    })
}

impl Pullback {
    /// The universal factorization: given `alpha: W → X`, `beta: W → Y` with
    /// `f ∘ alpha = g ∘ beta`, produces the map `W → object` commuting with
    /// both projections.
    pub fn induce(&self, alpha: &GradedMorphism, beta: &GradedMorphism) -> Result<GradedMorphism> {
        let sum = self.incl.target();
        let mut cols = Vec::with_capacity(alpha.cols().len());
        for (a, b) in alpha.cols().iter().zip(beta.cols()) {
            let mut w = sum.target().zero_vec();
            for (i, p) in a.comps.iter().enumerate() {
                w.comps[self.sum_offsets[0] + i] = p.clone();
            }
            for (i, p) in b.comps.iter().enumerate() {
                w.comps[self.sum_offsets[1] + i] = p.clone();
            }
            cols.push(w);
        }
        let into_sum = GradedMorphism::new(alpha.source().clone(), sum.clone(), cols)?;
        into_sum.lift_through(&self.incl)
    }
}

pub struct Pushout {
    pub object: Presentation,
    pub from_first: GradedMorphism,
    pub from_second: GradedMorphism,
    sum_offsets: Vec<usize>,
}

/// Cofiber coproduct of `f: Z → X` and `g: Z → Y`, computed as the cokernel
/// of `(f, −g): Z → X ⊕ Y`.
pub fn pushout(f: &GradedMorphism, g: &GradedMorphism) -> Result<Pushout> {
    if !f.source().same_presentation(g.source()) {
        return Err(Error::ShapeMismatch("pushout sources differ".into()));
    }
    let ds = direct_sum(&[f.target(), g.target()])?;
    let (inj_x, inj_y) = sum_injections(&ds.sum, &ds.offsets, f.target(), g.target());
    let u = inj_x.compose(f)?.sub(&inj_y.compose(g)?)?;
    let (object, epi) = ds.sum.quotient_by(u.cols())?;
    let from_first = epi.compose(&inj_x)?;
    let from_second = epi.compose(&inj_y)?;
    Ok(Pushout {
        object,
        from_first,
        from_second,
        sum_offsets: ds.offsets,
    })
}

impl Pushout {
    /// The universal factorization: given `gamma: X → W`, `delta: Y → W`
    /// with `gamma ∘ f = delta ∘ g`, produces the map `object → W`.
    pub fn induce(&self, gamma: &GradedMorphism, delta: &GradedMorphism) -> Result<GradedMorphism> {
        let mut cols = vec![gamma.target().target().zero_vec(); self.object.rank()];
        for (i, c) in gamma.cols().iter().enumerate() {
            cols[self.sum_offsets[0] + i] = c.clone();
        }
        for (i, c) in delta.cols().iter().enumerate() {
            cols[self.sum_offsets[1] + i] = c.clone();
        }
        GradedMorphism::new(self.object.clone(), gamma.target().clone(), cols)
    }
}

/// Preimage of a subobject `U ↪ Q` under `q: M → Q`, as a subobject of M.
pub fn preimage(
    q: &GradedMorphism,
    u_incl: &GradedMorphism,
) -> Result<(Presentation, GradedMorphism)> {
    if !q.target().same_presentation(u_incl.target()) {
        return Err(Error::ShapeMismatch("preimage ambients differ".into()));
    }
    let (q2, _) = q.target().quotient_by(u_incl.cols())?;
    let to_q2 = GradedMorphism::new_unchecked(
        q.source().clone(),
        q2,
        q.cols().to_vec(),
    );
    to_q2.kernel()
}

pub(crate) fn sum_projections(
    sum: &Presentation,
    offsets: &[usize],
    a: &Presentation,
    b: &Presentation,
) -> (GradedMorphism, GradedMorphism) {
    let mut pa_cols = vec![a.target().zero_vec(); sum.rank()];
    for i in 0..a.rank() {
        pa_cols[offsets[0] + i] = a.target().basis_vec(i);
    }
    let mut pb_cols = vec![b.target().zero_vec(); sum.rank()];
    for i in 0..b.rank() {
        pb_cols[offsets[1] + i] = b.target().basis_vec(i);
    }
    (
        GradedMorphism::new_unchecked(sum.clone(), a.clone(), pa_cols),
        GradedMorphism::new_unchecked(sum.clone(), b.clone(), pb_cols),
    )
}

pub(crate) fn sum_injections(
    sum: &Presentation,
    offsets: &[usize],
    a: &Presentation,
    b: &Presentation,
) -> (GradedMorphism, GradedMorphism) {
    let ia_cols = (0..a.rank())
        .map(|i| sum.target().basis_vec(offsets[0] + i))
        .collect();
    let ib_cols = (0..b.rank())
        .map(|i| sum.target().basis_vec(offsets[1] + i))
        .collect();
    (
        GradedMorphism::new_unchecked(a.clone(), sum.clone(), ia_cols),
        GradedMorphism::new_unchecked(b.clone(), sum.clone(), ib_cols),
    )
}

/// Intersection of two subobjects given by monos into a common ambient
/// module, computed directly from syzygies of the combined generator lists.
/// Returns the intersection with its mono into the ambient.
pub fn intersect(
    i: &GradedMorphism,
    j: &GradedMorphism,
) -> Result<(Presentation, GradedMorphism)> {
    if !i.target().same_presentation(j.target()) {
        return Err(Error::ShapeMismatch("intersection ambients differ".into()));
    }
    if !i.is_mono()? || !j.is_mono()? {
        return Err(Error::Precondition("intersect requires monos".into()));
    }
    let w = i.target();
    let p = i.cols().len();
    let mut cols = i.cols().to_vec();
    cols.extend_from_slice(j.cols());
    cols.extend_from_slice(&w.relations().gens);
    let basis = SubmoduleBasis::new(cols, w.target().clone(), w.ring_relations().to_vec())?;
    let syz = basis.syzygies_of_generators()?;
    let f = w.target();
    let mut gens = Vec::new();
    for s in syz {
        let mut v = f.zero_vec();
        for (l, c) in s.comps[..p].iter().enumerate() {
            if !c.is_zero() {
                v = f.add(&v, &f.mul_poly(c, &i.cols()[l]));
            }
        }
        if !v.is_zero() {
            gens.push(v);
        }
    }
    w.subobject(&gens)
}

impl Presentation {
    /// The truncation M_{≥d}: the submodule generated by all degree-d
    /// elements together with the generators of degree > d, with inclusion.
    pub fn truncate(&self, d: i64) -> Result<(Presentation, GradedMorphism)> {
        let ring = self.ring();
        let field = ring.field();
        let mut gens: Vec<ModVec> = Vec::new();
        for (pos, m) in self.monomial_basis_at(d) {
            let mut v = self.target().zero_vec();
            v.comps[pos] = ring.poly_monomial(m, field.one());
            gens.push(v);
        }
        for (i, &t) in self.twists().iter().enumerate() {
            if t > d {
                gens.push(self.target().basis_vec(i));
            }
        }
        self.subobject(&gens)
    }

    /// Submodule quotient (A : x_v) inside the ambient free module, where A
    /// is given by generators. Returns generators of the quotient.
    fn colon_by_var(&self, a_gens: &[ModVec], var: usize) -> Result<Vec<ModVec>> {
        let ring = self.ring();
        let f = self.target();
        let x = ring.poly_var(var);
        let mut cols: Vec<ModVec> = (0..f.rank())
            .map(|i| {
                let mut v = f.zero_vec();
                v.comps[i] = x.clone();
                v
            })
            .collect();
        let r = cols.len();
        cols.extend_from_slice(a_gens);
        let basis = SubmoduleBasis::new(cols, f.clone(), self.ring_relations().to_vec())?;
        let syz = basis.syzygies_of_generators()?;
        let mut out = Vec::new();
        for s in syz {
            let v = ModVec::from_comps(s.comps[..r].to_vec());
            if !v.is_zero() {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Intersection of two submodules of the ambient free module given by
    /// generator lists.
    fn meet_in_ambient(&self, u: &[ModVec], v: &[ModVec]) -> Result<Vec<ModVec>> {
        let f = self.target();
        let mut cols = u.to_vec();
        cols.extend_from_slice(v);
        let basis = SubmoduleBasis::new(cols, f.clone(), self.ring_relations().to_vec())?;
        let syz = basis.syzygies_of_generators()?;
        let mut out = Vec::new();
        for s in syz {
            let mut w = f.zero_vec();
            for (l, c) in s.comps[..u.len()].iter().enumerate() {
                if !c.is_zero() {
                    w = f.add(&w, &f.mul_poly(c, &u[l]));
                }
            }
            if !w.is_zero() {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Maximal finite-length submodule H_C(M) = (0 :_M m^∞), with inclusion.
    /// Computed by iterating the ideal quotient by the irrelevant maximal
    /// ideal until it stabilizes.
    pub fn torsion_submodule(&self) -> Result<(Presentation, GradedMorphism)> {
        let nvars = self.ring().nvars();
        let mut current: Vec<ModVec> = self.relations().gens.clone();
        loop {
            let mut next: Option<Vec<ModVec>> = None;
            for v in 0..nvars {
                let q = self.colon_by_var(&current, v)?;
                next = Some(match next {
                    None => q,
                    Some(prev) => self.meet_in_ambient(&prev, &q)?,
                });
            }
            let next = next.unwrap_or_default();
            let cur_basis = SubmoduleBasis::new(
                current.clone(),
                self.target().clone(),
                self.ring_relations().to_vec(),
            )?;
            let next_basis = SubmoduleBasis::new(
                next.clone(),
                self.target().clone(),
                self.ring_relations().to_vec(),
            )?;
            let stable = cur_basis.gb_vecs().eq(next_basis.gb_vecs());
            if stable {
                return self.subobject(&current);
            }
            current = next;
        }
    }

    pub fn is_torsion_free(&self) -> Result<bool> {
        Ok(self.torsion_submodule()?.0.is_zero())
    }
}
