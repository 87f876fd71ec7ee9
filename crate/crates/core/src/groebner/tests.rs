use super::*;
use crate::ring::{monomials_of_degree, Field, FieldElem, Ring};

fn ring(vars: &[&str]) -> Ring {
    Ring::new(Field::Fp(32003), vars.iter().map(|s| s.to_string()).collect())
}

fn vec1(r: &Ring, p: &str) -> ModVec {
    ModVec::from_comps(vec![r.parse_poly(p).unwrap()])
}

fn basis1(r: &Ring, polys: &[&str]) -> SubmoduleBasis {
    let f = FreeModule::new(r.clone(), vec![0]);
    SubmoduleBasis::new(polys.iter().map(|p| vec1(r, p)).collect(), f, vec![]).unwrap()
}

/// Independent membership oracle: Macaulay-matrix linear algebra in the
/// single degree of `v`. Builds all monomial multiples of the generators
/// (and ring-relation columns) in that degree and solves over k by Gaussian
/// elimination written out here, independent of the division-based path.
fn macaulay_is_member(
    v: &ModVec,
    gens: &[ModVec],
    ambient: &FreeModule,
    ring_relations: &[GradedPoly],
) -> bool {
    let ring = &ambient.ring;
    let field = ring.field();
    let deg = match ambient.degree_of(v).unwrap() {
        Some(d) => d,
        None => return true,
    };
    // row index: all (pos, monomial) of twisted degree `deg`
    let mut rows: Vec<(usize, Monomial)> = Vec::new();
    for pos in 0..ambient.rank() {
        for m in monomials_of_degree(ring.nvars(), deg - ambient.twists[pos]) {
            rows.push((pos, m));
        }
    }
    let row_of = |pos: usize, m: &Monomial| rows.iter().position(|(p, rm)| *p == pos && rm == m);
    let to_col = |w: &ModVec| -> Vec<FieldElem> {
        let mut col = vec![field.zero(); rows.len()];
        for (pos, p) in w.comps.iter().enumerate() {
            for (m, c) in &p.terms {
                let r = row_of(pos, m).expect("degree mismatch in oracle");
                col[r] = field.add(&col[r], c);
            }
        }
        col
    };
    let mut columns: Vec<Vec<FieldElem>> = Vec::new();
    let mut all_gens: Vec<ModVec> = gens.to_vec();
    for f in ring_relations {
        for i in 0..ambient.rank() {
            let mut w = ambient.zero_vec();
            w.comps[i] = f.clone();
            all_gens.push(w);
        }
    }
    for g in &all_gens {
        if g.is_zero() {
            continue;
        }
        let d = ambient.degree_of(g).unwrap().unwrap();
        for m in monomials_of_degree(ring.nvars(), deg - d) {
            columns.push(to_col(&ambient.mul_term(&m, &field.one(), g)));
        }
    }
    let target = to_col(v);

    // Gaussian elimination: reduce target against the column space.
    let mut echelon: Vec<Vec<FieldElem>> = Vec::new();
    let reduce = |mut col: Vec<FieldElem>, echelon: &Vec<Vec<FieldElem>>| -> Vec<FieldElem> {
        for e in echelon {
            let pivot = e.iter().position(|x| !field.is_zero(x)).unwrap();
            if !field.is_zero(&col[pivot]) {
                let factor = field.div(&col[pivot], &e[pivot]);
                for (c, ev) in col.iter_mut().zip(e) {
                    *c = field.sub(c, &field.mul(&factor, ev));
                }
            }
        }
        col
    };
    for col in columns {
        let red = reduce(col, &echelon);
        if red.iter().any(|x| !field.is_zero(x)) {
            echelon.push(red);
        }
    }
    let red = reduce(target, &echelon);
    red.iter().all(|x| field.is_zero(x))
}

#[test]
fn monomial_ideal_already_gb() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2", "x0*x1"]);
    assert_eq!(b.gb_len(), 2);
    let leads: Vec<_> = b.lead_module().remove(0);
    assert!(leads.contains(&r.parse_poly("x0^2").unwrap().lead().unwrap().0));
    assert!(leads.contains(&r.parse_poly("x0*x1").unwrap().lead().unwrap().0));
}

#[test]
fn buchberger_gains_cube() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2 - x1^2", "x0*x1"]);
    assert_eq!(b.gb_len(), 3);
    let leads = b.lead_module().remove(0);
    let x1cubed = r.parse_poly("x1^3").unwrap().lead().unwrap().0.clone();
    assert!(leads.contains(&x1cubed), "expected lead x1^3 in {leads:?}");
    // cross-check against the Macaulay oracle in all degrees <= 4
    let f = FreeModule::new(r.clone(), vec![0]);
    let gens = vec![vec1(&r, "x0^2 - x1^2"), vec1(&r, "x0*x1")];
    for d in 0..=4 {
        for m in monomials_of_degree(2, d) {
            let v = ModVec::from_comps(vec![r.poly_monomial(m, r.field().one())]);
            assert_eq!(
                b.is_member(&v).unwrap(),
                macaulay_is_member(&v, &gens, &f, &[]),
                "membership mismatch at degree {d}"
            );
        }
    }
}

#[test]
fn empty_generators() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &[]);
    assert!(b.is_zero_submodule());
    assert!(!b.is_member(&vec1(&r, "x0")).unwrap());
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2"]);
    assert!(b.normal_form(&vec1(&r, "x0^2*x1")).unwrap().is_zero());
    let nf = b.normal_form(&vec1(&r, "x1^3")).unwrap();
    assert_eq!(nf, vec1(&r, "x1^3"));

    let b2 = basis1(&r, &["x0^2 - x1^2", "x0*x1"]);
    assert!(b2.normal_form(&vec1(&r, "x0^2 - x1^2")).unwrap().is_zero());
    // idempotence
    let w = vec1(&r, "x0^3 + x0^2*x1 + x1^3");
    let nf1 = b2.normal_form(&w).unwrap();
    let nf2 = b2.normal_form(&nf1).unwrap();
    assert_eq!(nf1, nf2);
}

#[test]
fn membership_examples() {
    let r = ring(&["x0", "x1"]);
    assert!(basis1(&r, &["x0^2"]).is_member(&vec1(&r, "x0^3")).unwrap());
    assert!(!basis1(&r, &["x0^2", "x0*x1"])
        .is_member(&vec1(&r, "x1"))
        .unwrap());
    assert!(basis1(&r, &["x0^2 - x1^2", "x0*x1"])
        .is_member(&vec1(&r, "x1^3"))
        .unwrap());
}

#[test]
fn express_recovers_combination() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2 - x1^2", "x0*x1"]);
    let v = vec1(&r, "x1^3");
    let coeffs = b.express(&v).unwrap().expect("member");
    // recombine and compare
    let f = FreeModule::new(r.clone(), vec![0]);
    let mut acc = f.zero_vec();
    for (c, g) in coeffs.iter().zip(&b.gens) {
        acc = f.add(&acc, &f.mul_poly(c, g));
    }
    assert_eq!(acc, v);
}

#[test]
fn koszul_syzygy() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0", "x1"]);
    let s = b.syzygies().unwrap();
    assert_eq!(s.gb_len(), 1);
    let syz = s.gb_vecs().next().unwrap().clone();
    let expected = ModVec::from_comps(vec![
        r.parse_poly("x1").unwrap(),
        r.parse_poly("-x0").unwrap(),
    ]);
    assert_eq!(syz, expected);
    // twisted degree bookkeeping: e_i sits in the degree of its generator
    assert_eq!(s.ambient.twists, vec![1, 1]);
}

#[test]
fn nonzerodivisor_has_no_syzygies() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2"]);
    assert!(b.syzygies().unwrap().is_zero_submodule());
}

#[test]
fn square_of_max_ideal_syzygies() {
    let r = ring(&["x0", "x1"]);
    let b = basis1(&r, &["x0^2", "x0*x1", "x1^2"]);
    let s = b.syzygies().unwrap();
    assert_eq!(s.gb_len(), 2);
    let got: Vec<ModVec> = s.gb_vecs().cloned().collect();
    let lin1 = ModVec::from_comps(vec![
        r.parse_poly("x1").unwrap(),
        r.parse_poly("-x0").unwrap(),
        r.poly_zero(),
    ]);
    let lin2 = ModVec::from_comps(vec![
        r.poly_zero(),
        r.parse_poly("x1").unwrap(),
        r.parse_poly("-x0").unwrap(),
    ]);
    assert!(got.contains(&lin1));
    assert!(got.contains(&lin2));
}

#[test]
fn syzygies_compose_to_zero() {
    let r = ring(&["x0", "x1", "x2"]);
    let f = FreeModule::new(r.clone(), vec![0]);
    let gens: Vec<ModVec> = ["x0^2 - x1*x2", "x0*x1", "x1^2 - x0*x2"]
        .iter()
        .map(|p| vec1(&r, p))
        .collect();
    let b = SubmoduleBasis::new(gens, f.clone(), vec![]).unwrap();
    let s = b.syzygies().unwrap();
    let gb: Vec<ModVec> = b.gb_vecs().cloned().collect();
    for syz in s.gb_vecs() {
        let mut acc = f.zero_vec();
        for (q, g) in syz.comps.iter().zip(&gb) {
            acc = f.add(&acc, &f.mul_poly(q, g));
        }
        assert!(acc.is_zero(), "syzygy does not annihilate the basis");
    }
}

#[test]
fn quotient_ring_hypersurface_syzygies() {
    // R = k[a,b,c]/(b^2 - a*c); expect Koszul (b,-a) and hypersurface (c,-b)
    let r = ring(&["a", "b", "c"]);
    let f = FreeModule::new(r.clone(), vec![0]);
    let rel = r.parse_poly("b^2 - a*c").unwrap();
    let b = SubmoduleBasis::new(
        vec![vec1(&r, "a"), vec1(&r, "b")],
        f,
        vec![rel.clone()],
    )
    .unwrap();
    let s = b.syzygies().unwrap();
    let koszul = ModVec::from_comps(vec![r.parse_poly("b").unwrap(), r.parse_poly("-a").unwrap()]);
    let hyper = ModVec::from_comps(vec![r.parse_poly("c").unwrap(), r.parse_poly("-b").unwrap()]);
    assert!(s.is_member(&koszul).unwrap());
    assert!(s.is_member(&hyper).unwrap());
    // the two expected vectors generate everything the engine found
    let expected =
        SubmoduleBasis::new(vec![koszul, hyper], s.ambient.clone(), vec![rel]).unwrap();
    for g in s.gb_vecs() {
        assert!(expected.is_member(g).unwrap());
    }
}

#[test]
fn quotient_ring_membership() {
    let r = ring(&["a", "b", "c"]);
    let f = FreeModule::new(r.clone(), vec![0]);
    let rel = r.parse_poly("b^2 - a*c").unwrap();
    let b = SubmoduleBasis::new(vec![vec1(&r, "a*c")], f, vec![rel]).unwrap();
    assert!(b.is_member(&vec1(&r, "b^2")).unwrap());
    assert!(!b.is_member(&vec1(&r, "a*b")).unwrap());
}

#[test]
fn empty_ring_relations_match_plain() {
    let r = ring(&["x0", "x1"]);
    let f = FreeModule::new(r.clone(), vec![0]);
    let plain = basis1(&r, &["x0^2 - x1^2", "x0*x1"]);
    let quot = SubmoduleBasis::new(
        vec![vec1(&r, "x0^2 - x1^2"), vec1(&r, "x0*x1")],
        f,
        vec![],
    )
    .unwrap();
    let a: Vec<_> = plain.gb_vecs().cloned().collect();
    let b: Vec<_> = quot.gb_vecs().cloned().collect();
    assert_eq!(a, b);
}

#[test]
fn inhomogeneous_rejected() {
    let r = ring(&["x0", "x1"]);
    let f = FreeModule::new(r.clone(), vec![0]);
    let err = SubmoduleBasis::new(vec![vec1(&r, "x0 + x1^2")], f, vec![]);
    assert!(matches!(err, Err(Error::Inhomogeneous(_))));
}

#[test]
fn s_vectors_reduce_post_hoc() {
    let r = ring(&["x0", "x1", "x2"]);
    let b = basis1(&r, &["x0^2 - x1^2", "x0*x1 - x2^2", "x1^3"]);
    let gb: Vec<ModVec> = b.gb_vecs().cloned().collect();
    let f = &b.ambient;
    let one = r.field().one();
    for i in 0..gb.len() {
        for j in (i + 1)..gb.len() {
            let li = lead_term(&gb[i], b.order()).unwrap();
            let lj = lead_term(&gb[j], b.order()).unwrap();
            if li.pos != lj.pos {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let sv = f.sub(
                &f.mul_term(&li.mono.quotient_into(&lcm), &one, &gb[i]),
                &f.mul_term(&lj.mono.quotient_into(&lcm), &one, &gb[j]),
            );
            assert!(b.normal_form(&sv).unwrap().is_zero());
        }
    }
}

#[test]
fn randomized_membership_matches_macaulay_oracle() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    let r = ring(&["x0", "x1", "x2"]);
    let mut checked = 0;
    for _ in 0..6 {
        let rank = rng.random_range(1..=2);
        let twists: Vec<i64> = (0..rank).map(|_| rng.random_range(0..=1)).collect();
        let f = FreeModule::new(r.clone(), twists);
        let ngens = rng.random_range(1..=3);
        let gens: Vec<ModVec> = (0..ngens)
            .map(|_| {
                let d = rng.random_range(1..=3);
                random_homogeneous(&mut rng, &f, d)
            })
            .collect();
        let gens: Vec<ModVec> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let b = SubmoduleBasis::new(gens.clone(), f.clone(), vec![]).unwrap();
        for _ in 0..8 {
            let d = rng.random_range(1..=5);
            let v = random_homogeneous(&mut rng, &f, d);
            assert_eq!(
                b.is_member(&v).unwrap(),
                macaulay_is_member(&v, &gens, &f, &[]),
                "oracle disagreement"
            );
            checked += 1;
        }
    }
    assert!(checked >= 40);
}

/// Random homogeneous vector of the given twisted degree (may be zero).
pub(crate) fn random_homogeneous(
    rng: &mut impl rand::Rng,
    f: &FreeModule,
    degree: i64,
) -> ModVec {
    let ring = &f.ring;
    let field = ring.field();
    let mut v = f.zero_vec();
    for (pos, comp) in v.comps.iter_mut().enumerate() {
        let d = degree - f.twists[pos];
        if d < 0 {
            continue;
        }
        let monos = monomials_of_degree(ring.nvars(), d);
        let mut terms = Vec::new();
        for m in monos {
            if rng.random_range(0..3) == 0 {
                let c = field.from_i64(rng.random_range(1..7));
                terms.push((m, c));
            }
        }
        *comp = ring.poly_from_terms(terms);
    }
    v
}
