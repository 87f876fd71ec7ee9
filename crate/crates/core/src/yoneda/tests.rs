use super::*;
use crate::abcat::hom_module;
use crate::homres::ExtCalculator;
use crate::ring::{Field, FreeModule, ModVec, Ring};
use crate::serre::{irrelevant_ideal, point_module, twist_rep, SerreContext};

fn p1() -> SerreContext {
    SerreContext::standard(Ring::new(Field::Fp(32003), vec!["x0".into(), "x1".into()]))
}

fn s(r: &Ring) -> Presentation {
    Presentation::free(FreeModule::new(r.clone(), vec![0]), vec![])
}

fn quot_twisted(r: &Ring, twist: i64, rels: &[&str]) -> Presentation {
    let f = FreeModule::new(r.clone(), vec![twist]);
    let gens = rels
        .iter()
        .map(|p| ModVec::from_comps(vec![r.parse_poly(p).unwrap()]))
        .collect();
    Presentation::new(f, gens, vec![]).unwrap()
}

/// k(−t): the point module with its generator in degree t.
fn point_twisted(r: &Ring, t: i64) -> Presentation {
    quot_twisted(r, t, &["x0", "x1"])
}

/// The standard 1-extension 0 ← k ← S ← m ← 0 (with m presented on its two
/// generators).
fn point_by_ideal(r: &Ring) -> (ExtensionComplex, Presentation) {
    let k = point_module(r);
    let (m_ideal, incl) = irrelevant_ideal(r);
    let proj = GradedMorphism::new(s(r), k.clone(), vec![k.target().basis_vec(0)]).unwrap();
    let e = make_extension(vec![proj, incl]).unwrap();
    (e, m_ideal)
}

#[test]
fn point_by_ideal_is_valid() {
    let ctx = p1();
    let (e, _) = point_by_ideal(&ctx.ring);
    assert!(e.is_exact());
    assert_eq!(e.c(), 1);
}

#[test]
fn split_extension_is_valid_and_has_zero_class() {
    let ctx = p1();
    let k = point_module(&ctx.ring);
    let n = point_twisted(&ctx.ring, 1);
    let e = split_extension(&k, &n).unwrap();
    assert!(e.is_exact());
    let class = cocycle_class(&e).unwrap();
    assert!(class.is_zero(&ctx.ring));
    // Ext^1(k, k(-1))_0 is two-dimensional
    assert_eq!(class.coordinates.len(), 2);
}

#[test]
fn non_composable_chain_rejected() {
    let ctx = p1();
    let k = point_module(&ctx.ring);
    let sfree = s(&ctx.ring);
    let proj = GradedMorphism::new(sfree.clone(), k.clone(), vec![k.target().basis_vec(0)]).unwrap();
    // S → k followed by S → k does not chain
    assert!(ExtensionComplex::new(vec![proj.clone(), proj.clone()]).is_err());
}

#[test]
fn nonzero_composite_rejected() {
    let ctx = p1();
    let sfree = s(&ctx.ring);
    let id = GradedMorphism::identity(&sfree);
    assert!(matches!(
        ExtensionComplex::new(vec![id.clone(), id]),
        Err(Error::Precondition(_))
    ));
}

/// Extension 0 ← k ← S/(x_other, x_var^2) ← k(−1) ← 0 representing the
/// ξ_var class in Ext¹(k, k(−1)).
fn xi_extension(r: &Ring, var: usize, shift: i64) -> ExtensionComplex {
    let other = 1 - var;
    let names = ["x0", "x1"];
    let mid = quot_twisted(
        r,
        shift,
        &[
            names[other],
            &format!("{}^2", names[var]),
        ],
    );
    let head = point_twisted(r, shift);
    let tail = point_twisted(r, shift + 1);
    let pi = GradedMorphism::new(mid.clone(), head, vec![head_col(&mid)]).unwrap();
    let iota = GradedMorphism::new(
        tail,
        mid.clone(),
        vec![ModVec::from_comps(vec![r.parse_poly(names[var]).unwrap()])],
    )
    .unwrap();
    make_extension(vec![pi, iota]).unwrap()
}

fn head_col(mid: &Presentation) -> ModVec {
    mid.target().basis_vec(0)
}

#[test]
fn yoneda_composition_recovers_cup_products() {
    // the Ext algebra of k over k[x0,x1] is exterior: ξ0ξ0 = 0 and
    // ξ0ξ1 = −ξ1ξ0 ≠ 0
    let ctx = p1();
    let r = &ctx.ring;
    let e0 = xi_extension(r, 0, 0);
    let e1 = xi_extension(r, 1, 0);
    let e0s = xi_extension(r, 0, 1);
    let e1s = xi_extension(r, 1, 1);

    let square = yoneda_compose(&e0, &e0s).unwrap();
    assert_eq!(square.c(), 2);
    let sq_class = cocycle_class(&square).unwrap();
    assert!(sq_class.is_zero(r), "ξ0·ξ0 must vanish");

    let mixed01 = cocycle_class(&yoneda_compose(&e0, &e1s).unwrap()).unwrap();
    let mixed10 = cocycle_class(&yoneda_compose(&e1, &e0s).unwrap()).unwrap();
    assert!(!mixed01.is_zero(r), "ξ0·ξ1 must not vanish");
    assert_eq!(mixed01.coordinates.len(), 1);
    let field = r.field();
    let neg = mixed10
        .coordinates
        .iter()
        .map(|c| field.neg(c))
        .collect::<Vec<_>>();
    assert_eq!(mixed01.coordinates, neg, "ξ0ξ1 = −ξ1ξ0");
}

#[test]
fn composition_with_split_is_zero() {
    let ctx = p1();
    let r = &ctx.ring;
    let e0 = xi_extension(r, 0, 0);
    // split 1-extension of k(-1) by k(-2)
    let split = split_extension(&point_twisted(r, 1), &point_twisted(r, 2)).unwrap();
    let comp = yoneda_compose(&e0, &split).unwrap();
    let class = cocycle_class(&comp).unwrap();
    assert!(class.is_zero(r));
}

#[test]
fn pullback_ext_identity_and_zero() {
    let ctx = p1();
    let r = &ctx.ring;
    let e = xi_extension(r, 0, 0);
    let base = cocycle_class(&e).unwrap();
    assert!(!base.is_zero(r));

    let pulled = pullback_ext(&GradedMorphism::identity(e.head()), &e).unwrap();
    let same = cocycle_class(&pulled).unwrap();
    assert_eq!(same.coordinates, base.coordinates);

    let zero = GradedMorphism::zero(e.head(), e.head());
    let killed = pullback_ext(&zero, &e).unwrap();
    assert!(cocycle_class(&killed).unwrap().is_zero(r));
}

#[test]
fn pushout_ext_identity_and_zero() {
    let ctx = p1();
    let r = &ctx.ring;
    let e = xi_extension(r, 0, 0);
    let base = cocycle_class(&e).unwrap();

    let pushed = pushout_ext(&e, &GradedMorphism::identity(e.tail())).unwrap();
    assert_eq!(cocycle_class(&pushed).unwrap().coordinates, base.coordinates);

    let zero = GradedMorphism::zero(e.tail(), e.tail());
    let killed = pushout_ext(&e, &zero).unwrap();
    assert!(cocycle_class(&killed).unwrap().is_zero(r));
}

#[test]
fn pushout_of_point_by_ideal_to_cotangent_fiber() {
    // 0 ← k ← S ← m ← 0 pushed along m ↠ m/m² has nonzero class in
    // Ext¹(k, m/m²)
    let ctx = p1();
    let r = &ctx.ring;
    let (e, m_ideal) = point_by_ideal(r);
    let sq_gens: Vec<ModVec> = (0..m_ideal.rank())
        .flat_map(|i| {
            (0..2).map(move |v| (i, v))
        })
        .map(|(i, v)| {
            let mut w = m_ideal.target().zero_vec();
            w.comps[i] = r.poly_var(v);
            w
        })
        .collect();
    let (_, epi) = m_ideal.quotient_by(&sq_gens).unwrap();
    let pushed = pushout_ext(&e, &epi).unwrap();
    assert!(pushed.is_exact());
    let class = cocycle_class(&pushed).unwrap();
    assert!(!class.is_zero(r));
}

#[test]
fn baer_sum_with_split_is_identity() {
    let ctx = p1();
    let r = &ctx.ring;
    let e = xi_extension(r, 0, 0);
    let split = split_extension(e.head(), e.tail()).unwrap();
    let sum = baer_sum1(&e, &split).unwrap();
    assert_eq!(
        cocycle_class(&sum).unwrap().coordinates,
        cocycle_class(&e).unwrap().coordinates
    );
}

#[test]
fn baer_sum_doubles_in_characteristic_two() {
    let r = Ring::new(Field::Fp(2), vec!["x0".into(), "x1".into()]);
    let e = xi_extension(&r, 0, 0);
    let sum = baer_sum1(&e, &e).unwrap();
    assert!(cocycle_class(&sum).unwrap().is_zero(&r));
}

#[test]
fn baer_sum_adds_coordinates() {
    let ctx = p1();
    let r = &ctx.ring;
    let k = point_module(r);
    let n = point_twisted(r, 1);
    let calc = ExtCalculator::new(1, &k, &n).unwrap();
    let field = r.field();
    let a = extension_of_class1(&calc, &[field.from_i64(2), field.from_i64(5)]).unwrap();
    let b = extension_of_class1(&calc, &[field.from_i64(7), field.from_i64(-5)]).unwrap();
    let sum = baer_sum1(&a, &b).unwrap();
    let got = cocycle_class_with(&calc, &sum, None).unwrap();
    assert_eq!(
        got.coordinates,
        vec![field.from_i64(9), field.from_i64(0)]
    );
}

#[test]
fn extension_of_class_round_trips() {
    let ctx = p1();
    let r = &ctx.ring;
    let k = point_module(r);
    let n = point_twisted(r, 1);
    let calc = ExtCalculator::new(1, &k, &n).unwrap();
    let field = r.field();
    for coords in [
        vec![field.from_i64(1), field.from_i64(0)],
        vec![field.from_i64(0), field.from_i64(1)],
        vec![field.from_i64(3), field.from_i64(11)],
        vec![field.from_i64(0), field.from_i64(0)],
    ] {
        let e = extension_of_class1(&calc, &coords).unwrap();
        let back = cocycle_class_with(&calc, &e, None).unwrap();
        assert_eq!(back.coordinates, coords);
    }
}

#[test]
fn class_invariant_under_end_fixing_chain_morphisms() {
    // rewrite the middle of 0 ← k ← S/(x1, x0²) ← k(−1) ← 0 by an
    // automorphism; the class must not move
    let ctx = p1();
    let r = &ctx.ring;
    let e = xi_extension(r, 0, 0);
    let mid = e.maps()[0].source().clone();
    // automorphism of the middle: generator ↦ generator (only unit scalars
    // commute with both ends here, so conjugate by a scalar)
    let field = r.field();
    let u = GradedMorphism::identity(&mid).scaled(&field.from_i64(17));
    let u_inv = GradedMorphism::identity(&mid).scaled(&field.inv(&field.from_i64(17)));
    let e2 = make_extension(vec![
        e.maps()[0].compose(&u).unwrap(),
        u_inv.compose(&e.maps()[1]).unwrap(),
    ])
    .unwrap();
    assert_eq!(
        cocycle_class(&e2).unwrap().coordinates,
        cocycle_class(&e).unwrap().coordinates
    );
}

/// The Euler-type sequence on P¹: 0 ← m ← S(−1)² ← S(−2) ← 0.
fn euler_extension(r: &Ring) -> (ExtensionComplex, GradedMorphism) {
    let (m_ideal, incl) = irrelevant_ideal(r);
    let f1 = Presentation::free(FreeModule::new(r.clone(), vec![1, 1]), vec![]);
    let f2 = Presentation::free(FreeModule::new(r.clone(), vec![2]), vec![]);
    // S(−1)² → m: the generator map (identity on the chosen generators)
    let pi = GradedMorphism::new(
        f1.clone(),
        m_ideal.clone(),
        vec![m_ideal.target().basis_vec(0), m_ideal.target().basis_vec(1)],
    )
    .unwrap();
    let iota = GradedMorphism::new(
        f2,
        f1,
        vec![ModVec::from_comps(vec![
            r.parse_poly("x1").unwrap(),
            r.parse_poly("-x0").unwrap(),
        ])],
    )
    .unwrap();
    (make_extension(vec![pi, iota]).unwrap(), incl)
}

#[test]
fn euler_class_is_nonzero_in_ambient_ext() {
    let ctx = p1();
    let (e, _) = euler_extension(&ctx.ring);
    let class = cocycle_class(&e).unwrap();
    assert_eq!(class.coordinates.len(), 1);
    assert!(!class.is_zero(&ctx.ring));
}

#[test]
fn qext_image_of_euler_generates_h1() {
    let ctx = p1();
    let (e, incl) = euler_extension(&ctx.ring);
    let (class, qres) = qext_image(&e, &incl, &ctx).unwrap();
    assert_eq!(qres.dimension, 1, "h¹(P¹, O(−2)) = 1");
    assert!(!class.is_zero(&ctx.ring));
}

#[test]
fn qext_image_is_stable_under_further_restriction() {
    let ctx = p1();
    let (e, incl) = euler_extension(&ctx.ring);
    // restrict the head along m_{≥3} ↪ m before mapping to the colimit slot
    let m_amb = incl.target().clone();
    let (_, t_incl) = m_amb.truncate(3).unwrap();
    let factor = t_incl.lift_through(&incl).unwrap();
    let restricted = pullback_ext(&factor, &e).unwrap();
    assert!(colimit_class_equal(&e, &incl, &restricted, &t_incl, &ctx).unwrap());
}

#[test]
fn qext_image_of_split_is_zero() {
    let ctx = p1();
    let r = &ctx.ring;
    let n = twist_rep(r, -2);
    let sfree = s(r);
    let e = split_extension(&sfree, &n).unwrap();
    let (class, _) = qext_image(&e, &GradedMorphism::identity(&sfree), &ctx).unwrap();
    assert!(class.is_zero(r));
}

#[test]
fn preimage_of_sat_side_euler() {
    let ctx = p1();
    let r = &ctx.ring;
    // ê: 0 ← S ← S(−1)² ← S(−2) ← 0, left exact in A with cokernel k
    let sfree = s(r);
    let f1 = Presentation::free(FreeModule::new(r.clone(), vec![1, 1]), vec![]);
    let f2 = Presentation::free(FreeModule::new(r.clone(), vec![2]), vec![]);
    let pi = GradedMorphism::new(
        f1.clone(),
        sfree.clone(),
        vec![
            ModVec::from_comps(vec![r.parse_poly("x0").unwrap()]),
            ModVec::from_comps(vec![r.parse_poly("x1").unwrap()]),
        ],
    )
    .unwrap();
    let iota = GradedMorphism::new(
        f2,
        f1,
        vec![ModVec::from_comps(vec![
            r.parse_poly("x1").unwrap(),
            r.parse_poly("-x0").unwrap(),
        ])],
    )
    .unwrap();
    let e_hat = ExtensionComplex::new(vec![pi, iota]).unwrap();
    assert!(!e_hat.certificate().head_epi);
    assert!(e_hat.certificate().tail_mono);

    let (e, incl) = qext_preimage_ext1(&e_hat).unwrap();
    assert!(e.is_exact());
    // the image is the irrelevant ideal
    assert_eq!(incl.source().hilbert_function(0, 3), vec![0, 2, 3, 4]);
    let class = cocycle_class(&e).unwrap();
    assert!(!class.is_zero(r));

    // round trip: the class of the preimage at the stabilized slot equals
    // the class of ê restricted there directly
    let (k1, _) = qext_image(&e, &incl, &ctx).unwrap();
    let slot_deg = k1.slot_degree.unwrap();
    let (t, t_incl) = incl.target().truncate(slot_deg).unwrap();
    let calc = ExtCalculator::new(1, &t, e.tail()).unwrap();
    let restricted = pullback_ext(&t_incl, &e_hat).unwrap();
    let k2 = cocycle_class_with(&calc, &restricted, Some(slot_deg)).unwrap();
    assert_eq!(k1.coordinates, k2.coordinates);
    assert!(!k1.is_zero(r));
}

#[test]
fn preimage_of_split_is_split() {
    let ctx = p1();
    let r = &ctx.ring;
    let n = twist_rep(r, -2);
    let e_hat = split_extension(&s(r), &n).unwrap();
    let (e, incl) = qext_preimage_ext1(&e_hat).unwrap();
    assert!(incl.is_iso().unwrap());
    assert!(cocycle_class(&e).unwrap().is_zero(r));
}

#[test]
fn forward_then_preimage_round_trip() {
    let ctx = p1();
    let r = &ctx.ring;
    let (e, incl) = euler_extension(r);
    let e_hat = qext_forward_ext1(&e, &incl, &ctx).unwrap();
    // Sat side: head must now be all of S, and the complex stays left exact
    assert!(e_hat.certificate().tail_mono);
    assert!(e_hat.certificate().middle_exact[0]);
    let (e_back, incl_back) = qext_preimage_ext1(&e_hat).unwrap();
    assert!(colimit_class_equal(&e, &incl, &e_back, &incl_back, &ctx).unwrap());
}

#[test]
fn exact_subcomplex_leaves_exact_input_alone() {
    let ctx = p1();
    let (e, _) = euler_extension(&ctx.ring);
    let (sub, emb) = exact_subcomplex(&e, &ctx).unwrap();
    assert!(sub.is_exact());
    for mono in &emb.monos {
        assert!(mono.is_iso().unwrap(), "complement of exact input is full");
    }
}

#[test]
fn exact_subcomplex_repairs_c_defect() {
    let ctx = p1();
    let r = &ctx.ring;
    // start from Euler and shrink the middle to m·G + im(tail): the complex
    // becomes exact only up to a C-defect at the head-adjacent position
    let (e, _) = euler_extension(r);
    let g = e.maps()[0].source().clone();
    let mut gens: Vec<ModVec> = Vec::new();
    for i in 0..g.rank() {
        for v in 0..2 {
            let mut w = g.target().zero_vec();
            w.comps[i] = r.poly_var(v);
            gens.push(w);
        }
    }
    gens.extend(e.maps()[1].cols().iter().cloned());
    let (gsub, gsub_incl) = g.subobject(&gens).unwrap();
    let new_head = e.maps()[0].compose(&gsub_incl).unwrap();
    let new_tail = e.maps()[1].lift_through(&gsub_incl).unwrap();
    // head cokernel is now a C-defect: take the image as the head object
    let ic = new_head.image_cokernel().unwrap();
    assert!(!ic.cokernel.is_zero());
    let head_cores = new_head.lift_through(&ic.image_incl).unwrap();
    let defective = ExtensionComplex::new(vec![head_cores, new_tail]).unwrap();
    let _ = gsub;

    let (sub, emb) = exact_subcomplex(&defective, &ctx).unwrap();
    assert!(sub.is_exact());
    // quotients along the embedding are in C
    for (mono, obj) in emb.monos.iter().zip(
        std::iter::once(defective.head())
            .chain(defective.middles())
            .chain(std::iter::once(defective.tail())),
    ) {
        let (q, _) = obj.quotient_by(mono.cols()).unwrap();
        assert!(q.is_finite_length(), "quotient must lie in C");
    }
    // all output objects torsion-free
    assert!(sub.head().is_torsion_free().unwrap());
    for mid in sub.middles() {
        assert!(mid.is_torsion_free().unwrap());
    }
}

#[test]
fn ses_replace_strips_summand_torsion() {
    let ctx = p1();
    let r = &ctx.ring;
    // G = S ⊕ k, L = 0 ⊕ k, M = S: replacement yields torsion-free objects
    let sfree = s(r);
    let k = point_module(r);
    let ds = crate::abcat::direct_sum(&[&sfree, &k]).unwrap();
    let (proj_s, _) = crate::abcat::sum_projections(&ds.sum, &ds.offsets, &sfree, &k);
    let (_, inj_k) = crate::abcat::sum_injections(&ds.sum, &ds.offsets, &sfree, &k);
    let e = make_extension(vec![proj_s, inj_k]).unwrap();
    let (sub, emb) = ses_replace(&e, &ctx).unwrap();
    assert!(sub.is_exact());
    assert!(sub.head().is_torsion_free().unwrap());
    assert!(sub.maps()[0].source().is_torsion_free().unwrap());
    assert!(sub.tail().is_torsion_free().unwrap());
    // the tail came from 0 ⊕ k, so its replacement is zero
    assert!(sub.tail().is_zero());
    // quotients in C
    for (mono, obj) in emb.monos.iter().zip([
        e.head(),
        e.maps()[0].source(),
        e.tail(),
    ]) {
        let (q, _) = obj.quotient_by(mono.cols()).unwrap();
        assert!(q.is_finite_length());
    }
}

#[test]
fn exact_almost_complement_base_case() {
    let ctx = p1();
    let (e, _) = euler_extension(&ctx.ring);
    let (tilde, emb) = exact_almost_complement(&e, &ctx).unwrap();
    assert!(tilde.is_exact());
    assert_eq!(emb.monos.len(), 3);
}

#[test]
fn exact_almost_complement_two_step() {
    let ctx = p1();
    let r = &ctx.ring;
    // a 2-extension with torsion-free endpoints and torsion-polluted
    // middles: splice Euler with a split sequence, then inflate both middles
    // by an identity-linked finite-length block
    let (euler, _) = euler_extension(r);
    let split = split_extension(euler.tail(), &twist_rep(r, -3)).unwrap();
    let clean = yoneda_compose(&euler, &split).unwrap();
    assert_eq!(clean.c(), 2);
    let t = point_twisted(r, 1);
    let g2 = clean.maps()[0].source().clone();
    let g1 = clean.maps()[1].source().clone();
    let ds2 = crate::abcat::direct_sum(&[&g2, &t]).unwrap();
    let ds1 = crate::abcat::direct_sum(&[&g1, &t]).unwrap();
    let (p2g, p2t) = crate::abcat::sum_projections(&ds2.sum, &ds2.offsets, &g2, &t);
    let (i2g, i2t) = crate::abcat::sum_injections(&ds2.sum, &ds2.offsets, &g2, &t);
    let (p1g, p1t) = crate::abcat::sum_projections(&ds1.sum, &ds1.offsets, &g1, &t);
    let (i1g, _) = crate::abcat::sum_injections(&ds1.sum, &ds1.offsets, &g1, &t);
    let head = clean.maps()[0].compose(&p2g).unwrap();
    let mid = i2g
        .compose(&clean.maps()[1].compose(&p1g).unwrap())
        .unwrap()
        .add(&i2t.compose(&p1t).unwrap())
        .unwrap();
    let tail = i1g.compose(&clean.maps()[2]).unwrap();
    let two = make_extension(vec![head, mid, tail]).unwrap();
    assert!(!two.maps()[0].source().is_torsion_free().unwrap());
    let _ = p2t;
    let (tilde, emb) = exact_almost_complement(&two, &ctx).unwrap();
    assert!(tilde.is_exact());
    assert!(tilde.head().is_torsion_free().unwrap());
    for mid in tilde.middles() {
        assert!(mid.is_torsion_free().unwrap());
    }
    // quotients in C along the embedding
    for (mono, obj) in emb.monos.iter().zip(
        std::iter::once(two.head())
            .chain(two.middles())
            .chain(std::iter::once(two.tail())),
    ) {
        let (q, _) = obj.quotient_by(mono.cols()).unwrap();
        assert!(q.is_finite_length());
    }
}

#[test]
fn colimit_class_distinguishes_split_from_euler() {
    let ctx = p1();
    let r = &ctx.ring;
    let (e, incl) = euler_extension(r);
    let n = e.tail().clone();
    let sfree = s(r);
    let split = split_extension(&sfree, &n).unwrap();
    let eq = colimit_class_equal(
        &e,
        &incl,
        &split,
        &GradedMorphism::identity(&sfree),
        &ctx,
    )
    .unwrap();
    assert!(!eq);
}

#[test]
fn hom_module_of_euler_middle_sanity() {
    // spot check used by the production path: Hom(S(-1)^2, S(-2)) is
    // S(1-2)^2 = S(-1)^2, so its degree-0 part is empty
    let ctx = p1();
    let r = &ctx.ring;
    let f1 = Presentation::free(FreeModule::new(r.clone(), vec![1, 1]), vec![]);
    let n = Presentation::free(FreeModule::new(r.clone(), vec![2]), vec![]);
    let h = hom_module(&f1, &n).unwrap();
    assert_eq!(h.hilbert_function(0, 1), vec![0, 2]);
}

#[test]
fn exact_subcomplex_keeps_full_middle_for_sat_side_input() {
    // a left-exact complex coming from the quotient side is exact at the
    // tail-adjacent position, so the first complement is the whole middle
    // and the repaired head is the image
    let ctx = p1();
    let r = &ctx.ring;
    let sfree = s(r);
    let f1 = Presentation::free(FreeModule::new(r.clone(), vec![1, 1]), vec![]);
    let f2 = Presentation::free(FreeModule::new(r.clone(), vec![2]), vec![]);
    let pi = GradedMorphism::new(
        f1.clone(),
        sfree.clone(),
        vec![
            ModVec::from_comps(vec![r.parse_poly("x0").unwrap()]),
            ModVec::from_comps(vec![r.parse_poly("x1").unwrap()]),
        ],
    )
    .unwrap();
    let iota = GradedMorphism::new(
        f2,
        f1,
        vec![ModVec::from_comps(vec![
            r.parse_poly("x1").unwrap(),
            r.parse_poly("-x0").unwrap(),
        ])],
    )
    .unwrap();
    let e_hat = ExtensionComplex::new(vec![pi, iota]).unwrap();
    let (sub, emb) = exact_subcomplex(&e_hat, &ctx).unwrap();
    assert!(sub.is_exact());
    // middle untouched, head replaced by the irrelevant ideal
    assert!(emb.monos[1].is_iso().unwrap());
    assert_eq!(sub.head().hilbert_function(0, 3), vec![0, 2, 3, 4]);
}

#[test]
fn ses_replace_returns_torsion_free_input_unchanged() {
    let ctx = p1();
    let (e, _) = euler_extension(&ctx.ring);
    // view it as a short exact sequence: head m, middle free, tail S(-2)
    let (sub, emb) = ses_replace(&e, &ctx).unwrap();
    assert!(sub.is_exact());
    for mono in &emb.monos {
        assert!(mono.is_iso().unwrap());
    }
    assert_eq!(
        sub.maps()[0].source().hilbert_function(0, 3),
        e.maps()[0].source().hilbert_function(0, 3)
    );
}
