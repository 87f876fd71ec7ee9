//! Module Gröbner bases over S = k[x₀,…,x_n] (plain Buchberger with
//! degree-by-degree pair selection), normal forms with quotient tracking,
//! Schreyer syzygies, and submodule membership.
//!
//! Quotient-ring mode: computations over a hypersurface ring R = S/(f₁,…) are
//! realized by appending the columns fⱼ·eᵢ for every ambient position i; the
//! appended columns take part in reduction but are projected away from any
//! answer that refers to the original generators.

use crate::error::{Error, Result};
use crate::ring::{lead_term, FreeModule, GradedPoly, ModOrder, ModTerm, ModVec, Monomial};
use std::collections::BTreeSet;

/// A submodule of a twisted free module, with its reduced Gröbner basis
/// computed once at construction.
#[derive(Debug, Clone)]
pub struct SubmoduleBasis {
    pub ambient: FreeModule,
    /// The generators the caller handed in (without the ring-relation columns).
    pub gens: Vec<ModVec>,
    /// Hypersurface relations of the coefficient ring; empty for plain S.
    pub ring_relations: Vec<GradedPoly>,
    order: ModOrder,
    gb: Vec<Tracked>,
}

/// A basis element together with its expression in the tracked columns.
#[derive(Debug, Clone)]
struct Tracked {
    vec: ModVec,
    coords: Vec<GradedPoly>,
    lead: ModTerm,
}

impl SubmoduleBasis {
    /// Buchberger-complete basis of ⟨gens⟩ (plus ring-relation columns) in
    /// term-over-position grevlex.
    pub fn new(
        gens: Vec<ModVec>,
        ambient: FreeModule,
        ring_relations: Vec<GradedPoly>,
    ) -> Result<Self> {
        Self::new_with_order(gens, ambient, ring_relations, ModOrder::TopGrevlex)
    }

    pub fn new_with_order(
        gens: Vec<ModVec>,
        ambient: FreeModule,
        ring_relations: Vec<GradedPoly>,
        order: ModOrder,
    ) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.comps.len() != ambient.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "generator {i} has {} components, ambient rank is {}",
                    g.comps.len(),
                    ambient.rank()
                )));
            }
            ambient
                .degree_of(g)
                .map_err(|_| Error::Inhomogeneous(format!("generator {i}")))?;
        }
        for (j, f) in ring_relations.iter().enumerate() {
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("ring relation {j}")));
            }
        }
        let n_cols = gens.len() + ring_relations.len() * ambient.rank();
        let ring = ambient.ring.clone();

        // tracked columns: gens first, then f_j * e_i blocks
        let mut columns: Vec<ModVec> = gens.clone();
        for f in &ring_relations {
            for i in 0..ambient.rank() {
                let mut v = ambient.zero_vec();
                v.comps[i] = f.clone();
                columns.push(v);
            }
        }
        let mut basis: Vec<Tracked> = Vec::new();
        for (idx, v) in columns.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut coords = vec![ring.poly_zero(); n_cols];
            coords[idx] = ring.poly_one();
            basis.push(make_monic(&ambient, Tracked::new(&ambient, v, coords, &order)));
        }

        let gb = buchberger(basis, &ambient, &order);
        let gb = interreduce(gb, &ambient, &order);
        Ok(SubmoduleBasis {
            ambient,
            gens,
            ring_relations,
            order,
            gb,
        })
    }

    pub fn order(&self) -> &ModOrder {
        &self.order
    }

    /// The reduced Gröbner basis vectors (monic, auto-reduced, sorted).
    pub fn gb_vecs(&self) -> impl Iterator<Item = &ModVec> {
        self.gb.iter().map(|t| &t.vec)
    }

    pub fn gb_len(&self) -> usize {
        self.gb.len()
    }

    pub fn is_zero_submodule(&self) -> bool {
        self.gb.is_empty()
    }

    /// Lead terms of the basis grouped by ambient position; these generate
    /// the lead-term module.
    pub fn lead_module(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.ambient.rank()];
        for t in &self.gb {
            out[t.lead.pos].push(t.lead.mono.clone());
        }
        out
    }

    /// Fully reduced normal form: no term of the result is divisible by any
    /// basis lead term.
    pub fn normal_form(&self, v: &ModVec) -> Result<ModVec> {
        self.check_ambient(v)?;
        let (nf, _) = divide(v, &self.gb, &self.ambient, &self.order);
        Ok(nf)
    }

    pub fn is_member(&self, v: &ModVec) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Writes `v` as a combination of the original generators (mod the
    /// ring-relation columns); `None` when `v` is not a member.
    pub fn express(&self, v: &ModVec) -> Result<Option<Vec<GradedPoly>>> {
        self.check_ambient(v)?;
        let ring = &self.ambient.ring;
        let (nf, quots) = divide(v, &self.gb, &self.ambient, &self.order);
        if !nf.is_zero() {
            return Ok(None);
        }
        let mut coeffs = vec![ring.poly_zero(); self.gens.len()];
        for (q, t) in quots.iter().zip(&self.gb) {
            if q.is_zero() {
                continue;
            }
            for (l, coeff) in coeffs.iter_mut().enumerate() {
                if !t.coords[l].is_zero() {
                    *coeff = ring.poly_add(coeff, &ring.poly_mul(q, &t.coords[l]));
                }
            }
        }
        Ok(Some(coeffs))
    }

    /// Schreyer syzygies of the reduced Gröbner basis: generators of the
    /// kernel of (free module on the basis elements) → ambient, computed over
    /// the quotient ring when ring relations are present. The result is a
    /// Gröbner basis for the induced Schreyer order.
    pub fn syzygies(&self) -> Result<SubmoduleBasis> {
        let ring = self.ambient.ring.clone();
        // extended column set: gb elements, then ring-relation columns
        let mut cols: Vec<Tracked> = self.gb.clone();
        let n_gb = cols.len();
        for f in &self.ring_relations {
            for i in 0..self.ambient.rank() {
                let mut v = self.ambient.zero_vec();
                v.comps[i] = f.clone();
                if v.is_zero() {
                    continue;
                }
                let t = Tracked::new(&self.ambient, v, Vec::new(), &self.order);
                cols.push(make_monic(&self.ambient, t));
            }
        }
        let mut twists = Vec::with_capacity(cols.len());
        for t in &cols {
            twists.push(self.ambient.degree_of(&t.vec)?.unwrap());
        }
        let weights: Vec<(Monomial, usize)> = cols
            .iter()
            .map(|t| (t.lead.mono.clone(), t.lead.pos))
            .collect();
        let ext_free = FreeModule::new(ring.clone(), twists.clone());

        let mut syz: Vec<ModVec> = Vec::new();
        for i in 0..cols.len() {
            for j in (i + 1)..cols.len() {
                if cols[i].lead.pos != cols[j].lead.pos {
                    continue;
                }
                let lcm = cols[i].lead.mono.lcm(&cols[j].lead.mono);
                let ui = cols[i].lead.mono.quotient_into(&lcm);
                let uj = cols[j].lead.mono.quotient_into(&lcm);
                let one = ring.field().one();
                let sv = self.ambient.sub(
                    &self.ambient.mul_term(&ui, &one, &cols[i].vec),
                    &self.ambient.mul_term(&uj, &one, &cols[j].vec),
                );
                let (nf, quots) = divide(&sv, &cols, &self.ambient, &self.order);
                debug_assert!(nf.is_zero(), "S-vector must reduce to zero over a GB");
                if !nf.is_zero() {
                    continue;
                }
                let mut s = ext_free.zero_vec();
                s.comps[i] = ring.poly_monomial(ui, one.clone());
                s.comps[j] = ring.poly_sub(&s.comps[j], &ring.poly_monomial(uj, one.clone()));
                for (k, q) in quots.iter().enumerate() {
                    if !q.is_zero() {
                        s.comps[k] = ring.poly_sub(&s.comps[k], q);
                    }
                }
                if !s.is_zero() {
                    syz.push(s);
                }
            }
        }

        // project away the ring-relation columns; the genuine syzygy block
        // keeps the first n_gb coordinates
        let gb_free = FreeModule::new(ring.clone(), twists[..n_gb].to_vec());
        let projected: Vec<ModVec> = syz
            .into_iter()
            .map(|s| ModVec::from_comps(s.comps[..n_gb].to_vec()))
            .filter(|s| !s.is_zero())
            .collect();
        let order = ModOrder::Schreyer {
            weights: weights[..n_gb].to_vec(),
        };
        SubmoduleBasis::new_with_order(projected, gb_free, self.ring_relations.clone(), order)
    }

    /// Syzygies among the *original generators* (quotient-ring aware): the
    /// returned vectors live in the free module on `gens` with twists given
    /// by the generator degrees, and generate `ker(F(gens) → ambient)` over
    /// the (possibly quotient) coefficient ring.
    pub fn syzygies_of_generators(&self) -> Result<Vec<ModVec>> {
        let ring = self.ambient.ring.clone();
        let syz_gb = self.syzygies()?;
        let n = self.gens.len();
        let mut out: Vec<ModVec> = Vec::new();

        // image of GB syzygies under gb_k = Σ_l coords[k][l] · gens_l
        for z in syz_gb.gb_vecs() {
            let mut v = ModVec::from_comps(vec![ring.poly_zero(); n]);
            for (k, q) in z.comps.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let c = &self.gb[k].coords[l];
                    if !c.is_zero() {
                        v.comps[l] = ring.poly_add(&v.comps[l], &ring.poly_mul(q, c));
                    }
                }
            }
            if !v.is_zero() {
                out.push(v);
            }
        }

        // completion terms e_l − Σ_k D[l][k]·coords[k]: one per generator
        for (l, g) in self.gens.iter().enumerate() {
            let (nf, quots) = divide(g, &self.gb, &self.ambient, &self.order);
            debug_assert!(nf.is_zero(), "generator must reduce over its own GB");
            let mut v = ModVec::from_comps(vec![ring.poly_zero(); n]);
            v.comps[l] = ring.poly_one();
            for (k, q) in quots.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for (m, comp) in v.comps.iter_mut().enumerate() {
                    let c = &self.gb[k].coords[m];
                    if !c.is_zero() {
                        *comp = ring.poly_sub(comp, &ring.poly_mul(q, c));
                    }
                }
            }
            if !v.is_zero() {
                out.push(v);
            }
        }
        Ok(out)
    }

    fn check_ambient(&self, v: &ModVec) -> Result<()> {
        if v.comps.len() != self.ambient.rank() {
            return Err(Error::ShapeMismatch(format!(
                "vector has {} components, ambient rank is {}",
                v.comps.len(),
                self.ambient.rank()
            )));
        }
        Ok(())
    }
}

impl Tracked {
    fn new(ambient: &FreeModule, vec: ModVec, coords: Vec<GradedPoly>, order: &ModOrder) -> Self {
        let lead = lead_term(&vec, order).expect("tracked element must be nonzero");
        let _ = ambient;
        Tracked { vec, coords, lead }
    }
}

fn make_monic(ambient: &FreeModule, mut t: Tracked) -> Tracked {
    let field = ambient.ring.field();
    if !field.is_one(&t.lead.coeff) {
        let inv = field.inv(&t.lead.coeff);
        t.vec = ambient.scale(&inv, &t.vec);
        for c in &mut t.coords {
            *c = ambient.ring.poly_scale(&inv, c);
        }
        t.lead.coeff = field.one();
    }
    t
}

/// Full division with quotient tracking: returns `(nf, quots)` with
/// `v = Σ quots[k]·basis[k] + nf` and no term of `nf` divisible by any basis
/// lead term.
fn divide(
    v: &ModVec,
    basis: &[Tracked],
    ambient: &FreeModule,
    order: &ModOrder,
) -> (ModVec, Vec<GradedPoly>) {
    let ring = &ambient.ring;
    let field = ring.field();
    let mut work = v.clone();
    let mut nf = ambient.zero_vec();
    let mut quots = vec![ring.poly_zero(); basis.len()];
    while let Some(lt) = lead_term(&work, order) {
        let mut reduced = false;
        for (k, b) in basis.iter().enumerate() {
            if b.lead.pos == lt.pos && b.lead.mono.divides(&lt.mono) {
                let qm = b.lead.mono.quotient_into(&lt.mono);
                let qc = field.div(&lt.coeff, &b.lead.coeff);
                work = ambient.sub(&work, &ambient.mul_term(&qm, &qc, &b.vec));
                quots[k] = ring.poly_add(&quots[k], &ring.poly_monomial(qm, qc));
                reduced = true;
                break;
            }
        }
        if !reduced {
            // freeze the irreducible lead term
            let term = ring.poly_monomial(lt.mono.clone(), lt.coeff.clone());
            nf.comps[lt.pos] = ring.poly_add(&nf.comps[lt.pos], &term);
            work.comps[lt.pos] = ring.poly_sub(&work.comps[lt.pos], &term);
        }
    }
    (nf, quots)
}

/// Pair key ordered by twisted lcm degree, then indices (degree-by-degree
/// selection).
type PairKey = (i64, usize, usize);

fn buchberger(mut basis: Vec<Tracked>, ambient: &FreeModule, order: &ModOrder) -> Vec<Tracked> {
    let ring = ambient.ring.clone();
    let field = ring.field();
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();
    let pair_key = |basis: &[Tracked], i: usize, j: usize| -> Option<PairKey> {
        let (a, b) = (&basis[i].lead, &basis[j].lead);
        if a.pos != b.pos {
            return None;
        }
        let lcm = a.mono.lcm(&b.mono);
        Some((lcm.degree() + ambient.twists[a.pos], i, j))
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if let Some(k) = pair_key(&basis, i, j) {
                pairs.insert(k);
            }
        }
    }
    while let Some(&key) = pairs.iter().next() {
        pairs.remove(&key);
        let (_, i, j) = key;
        let (li, lj) = (&basis[i].lead, &basis[j].lead);
        // product criterion is only valid in the ideal case
        if ambient.rank() == 1 && li.mono.coprime(&lj.mono) {
            continue;
        }
        let lcm = li.mono.lcm(&lj.mono);
        let ui = li.mono.quotient_into(&lcm);
        let uj = lj.mono.quotient_into(&lcm);
        let one = field.one();
        let sv = ambient.sub(
            &ambient.mul_term(&ui, &one, &basis[i].vec),
            &ambient.mul_term(&uj, &one, &basis[j].vec),
        );
        if sv.is_zero() {
            continue;
        }
        let (nf, quots) = divide(&sv, &basis, ambient, order);
        if nf.is_zero() {
            continue;
        }
        // track: nf = u_i g_i − u_j g_j − Σ q_k g_k
        let n_cols = basis[i].coords.len();
        let mut coords = vec![ring.poly_zero(); n_cols];
        for (l, c) in coords.iter_mut().enumerate() {
            let mut acc = ring.poly_mul_term(&ui, &one, &basis[i].coords[l]);
            acc = ring.poly_sub(&acc, &ring.poly_mul_term(&uj, &one, &basis[j].coords[l]));
            for (k, q) in quots.iter().enumerate() {
                if !q.is_zero() && !basis[k].coords[l].is_zero() {
                    acc = ring.poly_sub(&acc, &ring.poly_mul(q, &basis[k].coords[l]));
                }
            }
            *c = acc;
        }
        let t = make_monic(ambient, Tracked::new(ambient, nf, coords, order));
        let new_idx = basis.len();
        basis.push(t);
        for i in 0..new_idx {
            if let Some(k) = pair_key(&basis, i, new_idx) {
                pairs.insert(k);
            }
        }
    }
    basis
}

/// Minimalize, tail-reduce, and sort: produces the unique reduced basis.
fn interreduce(basis: Vec<Tracked>, ambient: &FreeModule, order: &ModOrder) -> Vec<Tracked> {
    let mut elems = basis;
    // sort by lead term descending so duplicates resolve deterministically
    elems.sort_by(|a, b| order.cmp(&b.lead.mono, b.lead.pos, &a.lead.mono, a.lead.pos));
    let mut keep: Vec<Tracked> = Vec::new();
    'outer: for t in elems {
        for k in &keep {
            if k.lead.pos == t.lead.pos && k.lead.mono.divides(&t.lead.mono) {
                continue 'outer;
            }
        }
        keep.retain(|k| !(t.lead.pos == k.lead.pos && t.lead.mono.divides(&k.lead.mono)));
        keep.push(t);
    }
    // tail reduction: reduce each element against the others
    let ring = ambient.ring.clone();
    let n = keep.len();
    let mut reduced: Vec<Tracked> = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<Tracked> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.clone())
            .collect();
        let (nf, quots) = divide(&keep[i].vec, &others, ambient, order);
        debug_assert!(!nf.is_zero());
        let mut coords = keep[i].coords.clone();
        for (l, c) in coords.iter_mut().enumerate() {
            for (k, q) in quots.iter().enumerate() {
                if !q.is_zero() && !others[k].coords[l].is_zero() {
                    *c = ring.poly_sub(c, &ring.poly_mul(q, &others[k].coords[l]));
                }
            }
        }
        reduced.push(make_monic(ambient, Tracked::new(ambient, nf, coords, order)));
    }
    reduced.sort_by(|a, b| order.cmp(&b.lead.mono, b.lead.pos, &a.lead.mono, a.lead.pos));
    reduced
}

#[cfg(test)]
mod tests;
