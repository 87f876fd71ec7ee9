//! Degree-0 homogeneous maps between presentations, the arrow type of the
//! category. A morphism is stored column-wise: column j is the image of
//! source generator j in the target's ambient free module.

use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::ring::{entry_degree_check, ModVec, Ring};

#[derive(Debug, Clone)]
pub struct GradedMorphism {
    source: Presentation,
    target: Presentation,
    cols: Vec<ModVec>,
}

impl GradedMorphism {
    /// Validated constructor: checks entry degrees and well-definedness
    /// (source relations must land in target relations).
    pub fn new(source: Presentation, target: Presentation, cols: Vec<ModVec>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if source.ring_relations() != target.ring_relations() {
            return Err(Error::RingMismatch);
        }
        if !entry_degree_check(&cols, source.target(), target.target())? {
            return Err(Error::NotWellDefined(
                "entries are not homogeneous of the required degrees".into(),
            ));
        }
        let m = GradedMorphism {
            source,
            target,
            cols,
        };
        for (j, r) in m.source.relations().gens.iter().enumerate() {
            let image = m.apply(r);
            if !m.target.relations().is_member(&image)? {
                return Err(Error::NotWellDefined(format!(
                    "relation {j} does not map into target relations"
                )));
            }
        }
        Ok(m)
    }

    /// Constructor for maps known to be well defined by construction; still
    /// checks entry degrees in debug builds.
    pub(crate) fn new_unchecked(
        source: Presentation,
        target: Presentation,
        cols: Vec<ModVec>,
    ) -> Self {
        debug_assert!(entry_degree_check(&cols, source.target(), target.target()).unwrap_or(false));
        GradedMorphism {
            source,
            target,
            cols,
        }
    }

    pub fn identity(p: &Presentation) -> Self {
        let cols = (0..p.rank()).map(|i| p.target().basis_vec(i)).collect();
        GradedMorphism {
            source: p.clone(),
            target: p.clone(),
            cols,
        }
    }

    pub fn zero(source: &Presentation, target: &Presentation) -> Self {
        let cols = vec![target.target().zero_vec(); source.rank()];
        GradedMorphism {
            source: source.clone(),
            target: target.clone(),
            cols,
        }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn cols(&self) -> &[ModVec] {
        &self.cols
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    /// Image of an ambient vector of the source.
    pub fn apply(&self, v: &ModVec) -> ModVec {
        let f = self.target.target();
        let mut acc = f.zero_vec();
        for (j, c) in v.comps.iter().enumerate() {
            if !c.is_zero() {
                acc = f.add(&acc, &f.mul_poly(c, &self.cols[j]));
            }
        }
        acc
    }

    /// self ∘ other (other first).
    pub fn compose(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        if !other.target.same_presentation(&self.source) {
            return Err(Error::ShapeMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(GradedMorphism::new_unchecked(
            other.source.clone(),
            self.target.clone(),
            cols,
        ))
    }

    pub fn add(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &GradedMorphism) -> Result<GradedMorphism> {
        self.combine(other, true)
    }

    fn combine(&self, other: &GradedMorphism, negate: bool) -> Result<GradedMorphism> {
        if !self.source.same_presentation(&other.source)
            || !self.target.same_presentation(&other.target)
        {
            return Err(Error::ShapeMismatch("morphism endpoints differ".into()));
        }
        let f = self.target.target();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| if negate { f.sub(a, b) } else { f.add(a, b) })
            .collect();
        Ok(GradedMorphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            cols,
        ))
    }

    pub fn negated(&self) -> GradedMorphism {
        let f = self.target.target();
        GradedMorphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.cols.iter().map(|c| f.neg(c)).collect(),
        )
    }

    pub fn scaled(&self, c: &crate::ring::FieldElem) -> GradedMorphism {
        let f = self.target.target();
        GradedMorphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.cols.iter().map(|col| f.scale(c, col)).collect(),
        )
    }

    /// Morphism equality: the difference maps every generator into the
    /// target relations.
    pub fn equals(&self, other: &GradedMorphism) -> Result<bool> {
        if !self.source.same_presentation(&other.source)
            || !self.target.same_presentation(&other.target)
        {
            return Ok(false);
        }
        let f = self.target.target();
        for (a, b) in self.cols.iter().zip(&other.cols) {
            if !self.target.relations().is_member(&f.sub(a, b))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_zero_morphism(&self) -> Result<bool> {
        for c in &self.cols {
            if !self.target.relations().is_member(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
