//! The Serre quotient layer A/C ≃ Coh Pⁿ: the saturation monad S∘Q with its
//! unit, the saturation predicate, almost C-complements, quotient Hom both
//! through the adjunction formula and through the colimit, and quotient Ext
//! via the stabilizing direct limit over truncations.

use crate::abcat::{hom_group_basis, hom_module, GradedMorphism, HomModule, Presentation};
use crate::error::{Error, Result};
use crate::homres::{chain_lift, regularity, ExtCalculator};
use crate::ring::{FieldElem, FreeModule, ModVec, Ring};

/// Context for quotient-category computations: the ring of the Pⁿ instance,
/// the C-membership predicate (finite length ships; the field is a plug
/// point), and the colimit stabilization policy.
#[derive(Clone)]
pub struct SerreContext {
    pub ring: Ring,
    /// Dimension-stability window; stabilization is declared after this many
    /// consecutive equal dimensions.
    pub window: usize,
    /// Hard cap on the truncation degree sweep.
    pub max_degree: i64,
    /// Verify connecting-map isomorphy over the window instead of trusting
    /// dimension stability alone.
    pub strict: bool,
    /// Cap on saturation-step iterations.
    pub saturation_cap: usize,
    pub c_member: fn(&Presentation) -> bool,
}

impl SerreContext {
    pub fn standard(ring: Ring) -> Self {
        SerreContext {
            ring,
            window: 3,
            max_degree: 20,
            strict: false,
            saturation_cap: 32,
            c_member: |p| p.is_finite_length(),
        }
    }

    fn check_plain_ring(&self, p: &Presentation) -> Result<()> {
        if !p.ring_relations().is_empty() {
            return Err(Error::Precondition(
                "quotient-category operations require the plain polynomial ring".into(),
            ));
        }
        Ok(())
    }
}

/// k = S/m as a presentation.
pub fn point_module(ring: &Ring) -> Presentation {
    let f = FreeModule::new(ring.clone(), vec![0]);
    let gens = (0..ring.nvars())
        .map(|v| ModVec::from_comps(vec![ring.poly_var(v)]))
        .collect();
    Presentation::new(f, gens, vec![]).expect("point module")
}

/// The irrelevant ideal m = ⟨x₀,…,x_n⟩ as a subobject of S with inclusion.
pub fn irrelevant_ideal(ring: &Ring) -> (Presentation, GradedMorphism) {
    let s = Presentation::free(FreeModule::new(ring.clone(), vec![0]), vec![]);
    let gens: Vec<ModVec> = (0..ring.nvars())
        .map(|v| ModVec::from_comps(vec![ring.poly_var(v)]))
        .collect();
    s.subobject(&gens).expect("irrelevant ideal")
}

/// The A-side representative of O(d): S(d) for d ≤ 0, and the degree-0
/// truncation S(d)_{≥0} for d > 0 (so twists stay nonnegative).
pub fn twist_rep(ring: &Ring, d: i64) -> Presentation {
    let ambient = Presentation::free(FreeModule::new(ring.clone(), vec![-d]), vec![]);
    if d <= 0 {
        ambient
    } else {
        ambient.truncate(0).expect("truncation of a free module").0
    }
}

/// One saturation step X ↦ Hom(m, X)_{≥0} with the plumbing kept for
/// extending morphisms along the step.
pub(crate) struct SatStep {
    pub theta: GradedMorphism,      // X → X'
    pub hom: HomModule,             // Hom(m, X) with its kernel inclusion
    pub trunc_incl: GradedMorphism, // X' ↪ Hom(m, X)
}

/// The natural map X → Hom(m, X): a generator goes to the tuple of its
/// multiplications by the variables.
fn natural_into_hom(x: &Presentation, hom: &HomModule) -> Result<GradedMorphism> {
    let ring = x.ring();
    let sum = hom.sum();
    let mut cols = Vec::with_capacity(x.rank());
    for j in 0..x.rank() {
        let mut w = sum.sum.target().zero_vec();
        for (v, &off) in sum.offsets.iter().enumerate() {
            w.comps[off + j] = ring.poly_var(v);
        }
        cols.push(w);
    }
    let into_sum = GradedMorphism::new(x.clone(), sum.sum.clone(), cols)?;
    into_sum.lift_through(hom.inclusion())
}

fn saturation_step(x: &Presentation) -> Result<SatStep> {
    let (m_ideal, _) = irrelevant_ideal(x.ring());
    let hom = HomModule::new(&m_ideal, x)?;
    let (_, trunc_incl) = hom.module.truncate(0)?;
    let into_hom = natural_into_hom(x, &hom)?;
    let theta = into_hom.lift_through(&trunc_incl)?;
    Ok(SatStep {
        theta,
        hom,
        trunc_incl,
    })
}

/// Result of the saturation monad: the saturated module, the unit
/// η_M: M → sat(M), the torsion kernel of η, and the steps taken.
pub struct SaturationResult {
    pub module: Presentation,
    pub eta: GradedMorphism,
    pub torsion: (Presentation, GradedMorphism),
    pub steps: usize,
    pub(crate) strip_epi: GradedMorphism,
    pub(crate) chain: Vec<SatStep>,
}

/// The saturated-module predicate: Hom(k, M) = 0 and the degree-≥0 part of
/// Ext¹(k, M) vanishes (equivalently, M → Hom(m, M)_{≥0} is an isomorphism).
pub fn is_saturated(m: &Presentation) -> Result<bool> {
    let k = point_module(m.ring());
    let h = hom_module(&k, m)?;
    if !h.is_zero() {
        return Ok(false);
    }
    let e1 = crate::homres::ext_module(1, &k, m)?;
    Ok(e1.truncate(0)?.0.is_zero())
}

/// Strips torsion, then iterates X ↦ Hom(m, X)_{≥0} until the saturation
/// predicate holds. Errors with `CapExceeded` rather than guessing.
pub fn saturate(m: &Presentation, ctx: &SerreContext) -> Result<SaturationResult> {
    ctx.check_plain_ring(m)?;
    let (h, h_incl) = m.torsion_submodule()?;
    let (stripped, strip_epi) = m.quotient_by(h_incl.cols())?;
    let mut current = stripped;
    let mut eta = strip_epi.clone();
    let mut chain = Vec::new();
    let mut steps = 0usize;
    while !is_saturated(&current)? {
        if steps >= ctx.saturation_cap {
            return Err(Error::CapExceeded {
                cap: ctx.saturation_cap as i64,
                context: "iterating the saturation step".into(),
            });
        }
        let step = saturation_step(&current)?;
        current = step.theta.target().clone();
        eta = step.theta.compose(&eta)?;
        chain.push(step);
        steps += 1;
    }
    Ok(SaturationResult {
        module: current,
        eta,
        torsion: (h, h_incl),
        steps,
        strip_epi,
        chain,
    })
}

/// Extends `f: X → M` (M saturated) along the saturation unit of X:
/// returns the map sat(X) → M with `result ∘ η_X = f`.
pub fn factor_through_saturated(
    f: &GradedMorphism,
    sat_x: &SaturationResult,
) -> Result<GradedMorphism> {
    let m_target = f.target().clone();
    if !is_saturated(&m_target)? {
        return Err(Error::Precondition(
            "factor_through_saturated needs a saturated target".into(),
        ));
    }
    // step 0: X/H_C(X) → M (same columns; torsion maps to zero)
    let mut current = GradedMorphism::new(
        sat_x.strip_epi.target().clone(),
        m_target.clone(),
        f.cols().to_vec(),
    )?;
    if sat_x.chain.is_empty() {
        return Ok(current);
    }
    // target-side saturation-step data, shared by all steps
    let (m_ideal, _) = irrelevant_ideal(m_target.ring());
    let hom_m = HomModule::new(&m_ideal, &m_target)?;
    let (_, trunc_incl_m) = hom_m.module.truncate(0)?;
    let theta_m = natural_into_hom(&m_target, &hom_m)?.lift_through(&trunc_incl_m)?;
    let theta_m_inv = theta_m.inverse()?;
    for step in &sat_x.chain {
        // Hom(m, current): block-diagonal action on the twisted sums
        let src_sum = step.hom.sum();
        let dst_sum = hom_m.sum();
        let mut cols = Vec::with_capacity(src_sum.sum.rank());
        for v in 0..src_sum.shifts.len() {
            for t in 0..src_sum.block_rank {
                let mut w = dst_sum.sum.target().zero_vec();
                for (i, p) in current.cols()[t].comps.iter().enumerate() {
                    w.comps[dst_sum.offsets[v] + i] = p.clone();
                }
                cols.push(w);
            }
        }
        let big = GradedMorphism::new(src_sum.sum.clone(), dst_sum.sum.clone(), cols)?;
        let on_kernels = big
            .compose(step.hom.inclusion())?
            .lift_through(hom_m.inclusion())?;
        let restricted = on_kernels.compose(&step.trunc_incl)?;
        let into_trunc = restricted.lift_through(&trunc_incl_m)?;
        current = theta_m_inv.compose(&into_trunc)?;
    }
    Ok(current)
}

/// Almost C-complement: M_{≥d} with d = 1 + top degree of the torsion, or M
/// itself when torsion-free. The quotient M/M_{≥d} always lies in C.
pub fn almost_complement(
    m: &Presentation,
    ctx: &SerreContext,
) -> Result<(Presentation, GradedMorphism)> {
    let _ = ctx;
    let (h, _) = m.torsion_submodule()?;
    if h.is_zero() {
        return Ok((m.clone(), GradedMorphism::identity(m)));
    }
    let d = 1 + h.top_degree().expect("nonzero finite-length module");
    m.truncate(d)
}

/// Hom in the quotient category via the adjunction formula:
/// Hom_{A/C}(M, N) = Hom_A(M, sat(N))₀. Returns the dimension and the basis
/// of morphisms into the saturation.
pub fn hom_quotient(
    m: &Presentation,
    n: &Presentation,
    ctx: &SerreContext,
) -> Result<(usize, Vec<GradedMorphism>)> {
    ctx.check_plain_ring(m)?;
    let sat = saturate(n, ctx)?;
    let basis = hom_group_basis(m, &sat.module)?;
    Ok((basis.len(), basis))
}

/// Hom in the quotient category via the single direct limit
/// colim_d Hom_A(M_{≥d}, N/H_C(N))₀, evaluated with the stabilization
/// policy. Returns (dimension, degree where the stable window starts).
pub fn hom_quotient_colimit(
    m: &Presentation,
    n: &Presentation,
    ctx: &SerreContext,
) -> Result<(usize, i64)> {
    ctx.check_plain_ring(m)?;
    let (_, h_incl) = n.torsion_submodule()?;
    let (n_bar, _) = n.quotient_by(h_incl.cols())?;
    let d0 = start_degree(m, &n_bar)?;
    let mut trace: Vec<(i64, usize)> = Vec::new();
    for d in d0..=ctx.max_degree {
        let (t, _) = m.truncate(d)?;
        let dim = HomModule::new(&t, &n_bar)?.dim_at(0);
        trace.push((d, dim));
        if let Some((dim, at)) = stable_window(&trace, ctx.window) {
            return Ok((dim, at));
        }
    }
    Err(Error::NotStabilized {
        max_degree: ctx.max_degree,
        trace,
    })
}

/// Start of the truncation sweep: the colimit restriction maps are
/// governed by Castelnuovo-Mumford regularity, and both arguments matter
/// (a strongly negative twist in N delays stabilization past reg M).
fn start_degree(m: &Presentation, n: &Presentation) -> Result<i64> {
    let mut d = 0i64;
    if !m.is_zero() {
        d = d.max(regularity(m)?);
    }
    if !n.is_zero() {
        d = d.max(regularity(n)?);
    }
    Ok(d)
}

fn stable_window(trace: &[(i64, usize)], window: usize) -> Option<(usize, i64)> {
    if trace.len() < window {
        return None;
    }
    let tail = &trace[trace.len() - window..];
    let dim = tail[0].1;
    if tail.iter().all(|&(_, v)| v == dim) {
        Some((dim, tail[0].0))
    } else {
        None
    }
}

/// Quotient Ext, with everything needed to restrict further classes into the
/// stabilized slot.
pub struct QuotientExtResult {
    pub c: usize,
    pub dimension: usize,
    /// Truncation degree where the stable window starts.
    pub stabilized_at: i64,
    /// Witness cocycles: the degree-0 basis of Ext^c_A(M_{≥d*}, sat(N)).
    pub witnesses: Vec<GradedMorphism>,
    pub strict_verified: bool,
    pub torsion_stripped: bool,
    pub trace: Vec<(i64, usize)>,
    /// The truncation M_{≥d*} with its inclusion into (torsion-stripped) M.
    pub slot: (Presentation, GradedMorphism),
    /// Calculator at the slot: coordinatizes cocycles over the stable basis.
    pub calculator: ExtCalculator,
}

/// Ext^c_{A/C}(M, N) via the direct limit colim_d Ext^c_A(M_{≥d}, sat(N))₀.
/// N is saturated first; torsion of M is stripped (the colimit does not see
/// it). Stabilization is declared when the dimension is constant over the
/// window and, in strict mode, additionally verified by checking that the
/// connecting restriction maps are isomorphisms across the window.
pub fn ext_quotient(
    c: usize,
    m: &Presentation,
    n: &Presentation,
    ctx: &SerreContext,
) -> Result<QuotientExtResult> {
    ctx.check_plain_ring(m)?;
    let n_sat = if is_saturated(n)? {
        n.clone()
    } else {
        saturate(n, ctx)?.module
    };
    let (h, h_incl) = m.torsion_submodule()?;
    let torsion_stripped = !h.is_zero();
    let m_work = if torsion_stripped {
        m.quotient_by(h_incl.cols())?.0
    } else {
        m.clone()
    };
    let d0 = start_degree(&m_work, &n_sat)?;
    let mut trace: Vec<(i64, usize)> = Vec::new();
    let mut truncs: Vec<(Presentation, GradedMorphism)> = Vec::new();
    let mut calcs: Vec<ExtCalculator> = Vec::new();
    for d in d0..=ctx.max_degree {
        let (t, incl) = m_work.truncate(d)?;
        let calc = ExtCalculator::new(c, &t, &n_sat)?;
        trace.push((d, calc.dim_at(0)));
        truncs.push((t, incl));
        calcs.push(calc);
        if let Some((dim, at)) = stable_window(&trace, ctx.window) {
            let start = trace.len() - ctx.window;
            let strict_verified = if ctx.strict {
                verify_connecting_isos(&truncs[start..], &calcs[start..])?
            } else {
                false
            };
            if ctx.strict && !strict_verified {
                continue; // window slides forward until the maps are isos
            }
            let witnesses = calcs[start].basis_cocycles()?;
            let calculator = calcs.swap_remove(start);
            let slot = truncs.swap_remove(start);
            return Ok(QuotientExtResult {
                c,
                dimension: dim,
                stabilized_at: at,
                witnesses,
                strict_verified,
                torsion_stripped,
                trace,
                slot,
                calculator,
            });
        }
    }
    Err(Error::NotStabilized {
        max_degree: ctx.max_degree,
        trace,
    })
}

/// Checks that every consecutive connecting map
/// Ext^c(M_{≥d}, N) → Ext^c(M_{≥d+1}, N) in the window is an isomorphism.
fn verify_connecting_isos(
    truncs: &[(Presentation, GradedMorphism)],
    calcs: &[ExtCalculator],
) -> Result<bool> {
    for i in 0..calcs.len() - 1 {
        let dim = calcs[i].dim_at(0);
        if calcs[i + 1].dim_at(0) != dim {
            return Ok(false);
        }
        if dim == 0 {
            continue;
        }
        let matrix = connecting_matrix(&truncs[i], &truncs[i + 1], &calcs[i], &calcs[i + 1])?;
        let ring = truncs[i].0.ring().clone();
        if rank_over_field(&ring, matrix) != dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinate vectors (in the finer slot's basis) of the restrictions of the
/// coarser slot's basis cocycles along M_{≥d+1} ↪ M_{≥d}.
fn connecting_matrix(
    coarse: &(Presentation, GradedMorphism),
    fine: &(Presentation, GradedMorphism),
    calc_coarse: &ExtCalculator,
    calc_fine: &ExtCalculator,
) -> Result<Vec<Vec<FieldElem>>> {
    let iota = fine.1.lift_through(&coarse.1)?;
    let lifts = chain_lift(&iota, &calc_fine.resolution, &calc_coarse.resolution)?;
    let c = calc_coarse.c;
    if lifts.len() <= c {
        return Err(Error::ShapeMismatch("chain lift too short".into()));
    }
    let lam_c = &lifts[c];
    let mut rows = Vec::new();
    for b in calc_coarse.basis_cocycles()? {
        let restricted = b.compose(lam_c)?;
        rows.push(calc_fine.coordinates_of(&restricted)?);
    }
    Ok(rows)
}

/// Gaussian-elimination rank of a list of coordinate vectors.
pub(crate) fn rank_over_field(ring: &Ring, vectors: Vec<Vec<FieldElem>>) -> usize {
    let field = ring.field();
    let mut echelon: Vec<Vec<FieldElem>> = Vec::new();
    for mut v in vectors {
        for e in &echelon {
            let pivot = e.iter().position(|x| !field.is_zero(x)).unwrap();
            if !field.is_zero(&v[pivot]) {
                let factor = field.div(&v[pivot], &e[pivot]);
                for (a, b) in v.iter_mut().zip(e) {
                    *a = field.sub(a, &field.mul(&factor, b));
                }
            }
        }
        if v.iter().any(|x| !field.is_zero(x)) {
            echelon.push(v);
        }
    }
    echelon.len()
}

/// H^c(Pⁿ, O(d)) over the requested grid: ext_quotient(c, S, twist_rep(d)).
pub fn sheaf_cohomology_table(
    n: usize,
    d_lo: i64,
    d_hi: i64,
    c_lo: usize,
    c_hi: usize,
    ctx: &SerreContext,
) -> Result<Vec<Vec<usize>>> {
    if ctx.ring.nvars() != n + 1 {
        return Err(Error::ShapeMismatch(format!(
            "context ring has {} variables, expected {}",
            ctx.ring.nvars(),
            n + 1
        )));
    }
    let s = Presentation::free(FreeModule::new(ctx.ring.clone(), vec![0]), vec![]);
    let mut table = Vec::new();
    for d in d_lo..=d_hi {
        let rep = twist_rep(&ctx.ring, d);
        let mut row = Vec::new();
        for c in c_lo..=c_hi {
            row.push(ext_quotient(c, &s, &rep, ctx)?.dimension);
        }
        table.push(row);
    }
    Ok(table)
}

/// C-membership according to the context's predicate.
pub fn in_c(ctx: &SerreContext, p: &Presentation) -> bool {
    (ctx.c_member)(p)
}
