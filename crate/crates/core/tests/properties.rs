//! Randomized invariants for every layer, from field arithmetic to assembled codes.

use std::collections::HashSet;
use std::sync::LazyLock;

use metacyclic::code::{CodeSpace, GroupAlgebraElem};
use metacyclic::field::{FElem, FieldCtx};
use metacyclic::linalg::{self, PrimeField};
use metacyclic::poly::PolyRing;
use metacyclic::skew::{self, IdealTag, SkewRing};
use metacyclic::structure::{ComponentCtx, Condition, System};
use proptest::prelude::*;

static SYSTEMS: LazyLock<Vec<System>> = LazyLock::new(|| {
    [(14, 3, 9), (7, 2, 2), (7, 2, 4), (9, 2, 4), (7, 3, 2), (9, 7, 4), (13, 3, 3)]
        .into_iter()
        .map(|(m, q, r)| System::new(m, q, r).expect("valid parameters"))
        .collect()
});

fn sys(seed: u64) -> &'static System {
    &SYSTEMS[(seed % SYSTEMS.len() as u64) as usize]
}

fn comp(seed: u64, pick: u64) -> &'static ComponentCtx {
    let s = sys(seed);
    s.component((pick % s.len() as u64) as usize)
}

/// A Condition II component, or `None` if the system has none.
fn skew_comp(seed: u64, pick: u64) -> Option<&'static ComponentCtx> {
    let s = sys(seed);
    let skew: Vec<&ComponentCtx> = s.components.iter().filter(|c| c.cond == Condition::II).collect();
    (!skew.is_empty()).then(|| skew[(pick % skew.len() as u64) as usize])
}

fn element(k: &FieldCtx, seed: u64) -> FElem {
    k.from_index(seed % k.cardinality())
}

fn nonzero(k: &FieldCtx, seed: u64) -> FElem {
    k.from_index(1 + seed % (k.cardinality() - 1))
}

fn residues(q: u32, seeds: &[u64]) -> Vec<u64> {
    seeds.iter().map(|s| s % q as u64).collect()
}

fn random_code_index(space: &CodeSpace<'_>, seed: u64) -> Vec<usize> {
    let mut s = seed;
    space
        .catalogs()
        .iter()
        .map(|cat| {
            let k = (s % cat.len() as u64) as usize;
            s = (s / cat.len() as u64) ^ s.rotate_left(17);
            k
        })
        .collect()
}

proptest! {
    #[test]
    fn inverse_is_two_sided(s in any::<u64>(), c in any::<u64>(), a in any::<u64>()) {
        let k = &comp(s, c).field;
        let a = nonzero(k, a);
        let inv = k.inv(&a).unwrap();
        prop_assert_eq!(k.mul(&a, &inv), k.one());
        prop_assert_eq!(k.mul(&inv, &a), k.one());
    }

    #[test]
    fn frobenius_is_a_homomorphism_of_order_degree(
        s in any::<u64>(), c in any::<u64>(), a in any::<u64>(), b in any::<u64>(), e in 0usize..12,
    ) {
        let k = &comp(s, c).field;
        let (a, b) = (element(k, a), element(k, b));
        prop_assert_eq!(k.frob_power(&a, k.degree()), a.clone());
        prop_assert_eq!(k.frob_power(&k.mul(&a, &b), e), k.mul(&k.frob_power(&a, e), &k.frob_power(&b, e)));
        prop_assert_eq!(k.frob_power(&k.add(&a, &b), e), k.add(&k.frob_power(&a, e), &k.frob_power(&b, e)));
        prop_assert_eq!(k.frob_power(&a, e), k.pow(&a, (k.q() as u64).pow(e as u32 % k.degree() as u32)));
    }

    #[test]
    fn order_divides_group_order(s in any::<u64>(), c in any::<u64>(), a in any::<u64>()) {
        let k = &comp(s, c).field;
        let a = nonzero(k, a);
        let n = k.mult_order(&a).unwrap();
        prop_assert_eq!((k.cardinality() - 1) % n, 0);
        prop_assert_eq!(k.pow(&a, n), k.one());
    }

    #[test]
    fn division_round_trip(q_pick in 0usize..4, a in prop::collection::vec(any::<u64>(), 0..20), b in prop::collection::vec(any::<u64>(), 1..10)) {
        let q = [2, 3, 5, 7][q_pick];
        let f = FieldCtx::prime(q).unwrap();
        let ring = PolyRing::new(&f);
        let a = ring.from_residues(&residues(q, &a));
        let b = ring.from_residues(&residues(q, &b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = ring.divmod(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&quo, &b), &rem), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn bezout_identity(s in any::<u64>(), c in any::<u64>(), a in prop::collection::vec(any::<u64>(), 1..8), b in prop::collection::vec(any::<u64>(), 1..8)) {
        // over an extension field, so coefficients are nontrivial field elements
        let k = &comp(s, c).field;
        let ring = PolyRing::new(k);
        let a = ring.from_coeffs(a.iter().map(|&x| element(k, x)).collect());
        let b = ring.from_coeffs(b.iter().map(|&x| element(k, x)).collect());
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let (g, u, v) = ring.ext_gcd(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&u, &a), &ring.mul(&v, &b)), g.clone());
        prop_assert!(ring.rem(&a, &g).unwrap().is_zero() && ring.rem(&b, &g).unwrap().is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(s in any::<u64>(), c in any::<u64>(), a in prop::collection::vec(any::<u64>(), 0..10), b in prop::collection::vec(any::<u64>(), 0..10), pt in any::<u64>()) {
        let component = comp(s, c);
        let q = component.field.q();
        let base = FieldCtx::prime(q).unwrap();
        let ring = PolyRing::new(&base);
        let a = ring.from_residues(&residues(q, &a));
        let b = ring.from_residues(&residues(q, &b));
        let k = &component.field;
        let pt = element(k, pt);
        let ab = ring.eval(&ring.mul(&a, &b), k, &pt).unwrap();
        prop_assert_eq!(ab, k.mul(&ring.eval(&a, k, &pt).unwrap(), &ring.eval(&b, k, &pt).unwrap()));
    }

    #[test]
    fn factorization_vanishes_both_ways(s in any::<u64>(), c in any::<u64>(), e in any::<u64>()) {
        let Some(comp) = skew_comp(s, c) else { return Ok(()) };
        let k = &comp.field;
        let ring = SkewRing::new(comp);
        let a = comp.norm_element(e);
        let lin = ring.from_poly(&[k.neg(&a), k.one()]);
        let quad = ring.from_poly(&[k.inv(&a).unwrap(), comp.theta_pow(&a, 2), k.one()]);
        prop_assert!(ring.is_zero(&ring.mul(&lin, &quad).unwrap()));
        prop_assert!(ring.is_zero(&ring.mul(&quad, &lin).unwrap()));
    }

    #[test]
    fn skew_product_is_associative_and_twisted(s in any::<u64>(), c in any::<u64>(), xs in prop::collection::vec(any::<u64>(), 9)) {
        let comp = comp(s, c);
        let k = &comp.field;
        let ring = SkewRing::new(comp);
        let el = |i: usize| ring.elem(element(k, xs[i]), element(k, xs[i + 1]), element(k, xs[i + 2]));
        let (u, v, w) = (el(0), el(3), el(6));
        let left = ring.mul(&ring.mul(&u, &v).unwrap(), &w).unwrap();
        let right = ring.mul(&u, &ring.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let a = element(k, xs[0]);
        let ya = ring.mul(&ring.y(), &ring.scalar(a.clone())).unwrap();
        prop_assert_eq!(ya, ring.mul(&ring.scalar(comp.theta(&a)), &ring.y()).unwrap());
    }

    #[test]
    fn containment_routes_agree(s in any::<u64>(), c in any::<u64>(), ea in any::<u64>(), eb in any::<u64>()) {
        let Some(comp) = skew_comp(s, c) else { return Ok(()) };
        let (a, b) = (comp.norm_element(ea), comp.norm_element(eb));
        let outer = skew::skew_descriptor(comp, &a, 2).unwrap();
        let inner = skew::skew_descriptor(comp, &b, 1).unwrap();
        let closed = skew::contains(comp, &outer, &inner).unwrap();
        prop_assert_eq!(closed, skew::division_remainder_vanishes(comp, &a, &b));
        prop_assert_eq!(closed, skew::ideal_contains(comp, &outer, &inner));
    }

    #[test]
    fn component_dual_is_an_involution(s in any::<u64>(), c in any::<u64>(), d in any::<u64>()) {
        let system = sys(s);
        let comp = comp(s, c);
        let cat = skew::enumerate_ideals(comp);
        let desc = &cat[(d % cat.len() as u64) as usize];
        let dual = skew::component_dual(system, desc);
        prop_assert_eq!(dual.component, system.mu(comp.index));
        prop_assert_eq!(desc.dim() + dual.dim(), 3);
        prop_assert_eq!(&skew::component_dual(system, &dual), desc);
    }

    #[test]
    fn descriptor_terms_round_trip(s in any::<u64>(), c in any::<u64>(), d in any::<u64>()) {
        let comp = comp(s, c);
        let cat = skew::enumerate_ideals(comp);
        let desc = &cat[(d % cat.len() as u64) as usize];
        let term = desc.term();
        let (_, rest) = term.split_once(':').unwrap();
        let (tag, n) = match rest.split_once('@') {
            Some((t, n)) => (t, Some(n.parse().unwrap())),
            None => (rest, None),
        };
        prop_assert_eq!(&skew::parse_term(comp, tag, n).unwrap(), desc);
    }

    #[test]
    fn assembled_dimension_is_additive(s in any::<u64>(), seed in any::<u64>()) {
        let system = sys(s);
        let space = CodeSpace::new(system);
        let choices = space.choices_at(&random_code_index(&space, seed));
        let code = space.assemble(&choices).unwrap();
        let expected: usize = choices.iter().map(|d| system.component(d.component).d * d.dim()).sum();
        prop_assert_eq!(code.dimension, expected);
        prop_assert_eq!(linalg::rank(&PrimeField::new(system.params.q), &code.generator), expected);
    }

    #[test]
    fn conjugation_reverses_products(s in any::<u64>(), xs in prop::collection::vec((any::<usize>(), 0usize..3, 1u32..7), 1..6), ys in prop::collection::vec((any::<usize>(), 0usize..3, 1u32..7), 1..6)) {
        let p = sys(s).params;
        let build = |terms: &[(usize, usize, u32)]| {
            terms.iter().fold(GroupAlgebraElem::zero(p.m, p.r, p.q), |acc, &(i, j, c)| {
                let mut e = GroupAlgebraElem::monomial(p.m, p.r, p.q, i % p.m, j);
                e.blocks[j][i % p.m] = c % p.q;
                acc.add(&e)
            })
        };
        let (u, v) = (build(&xs), build(&ys));
        prop_assert_eq!(u.mul(&v).conjugate(), v.conjugate().mul(&u.conjugate()));
        prop_assert_eq!(u.conjugate().conjugate(), u.clone());
        let row = u.psi_embed();
        prop_assert_eq!(GroupAlgebraElem::psi_extract(&row, p.m, p.r, p.q).unwrap(), u);
    }

    #[test]
    fn group_relation_holds(s in any::<u64>(), i in any::<usize>(), j in 0usize..3) {
        let p = sys(s).params;
        let mono = |i, j| GroupAlgebraElem::monomial(p.m, p.r, p.q, i, j);
        let u = mono(i % p.m, j);
        // y x = x^r y, applied to an arbitrary monomial
        prop_assert_eq!(u.left_mul_x().left_mul_y(), (0..p.r).fold(u.left_mul_y(), |acc, _| acc.left_mul_x()));
        prop_assert_eq!(mono(1, 0).mul(&u), u.left_mul_x());
        prop_assert_eq!(mono(0, 1).mul(&u), u.left_mul_y());
    }

    #[test]
    fn weight_enumerator_counts_every_codeword(seed in any::<u64>()) {
        let system = &SYSTEMS[1];
        let space = CodeSpace::new(system);
        let code = space.assemble(&space.choices_at(&random_code_index(&space, seed))).unwrap();
        let w = code.weight_enumerator(1 << 22).unwrap();
        prop_assert_eq!(w.total(), (system.params.q as u64).pow(code.dimension as u32));
        prop_assert_eq!(w.counts.get(&0).copied(), Some(1));
    }
}

#[test]
fn primitive_elements_generate() {
    for s in SYSTEMS.iter() {
        for c in &s.components {
            let k = &c.field;
            assert_eq!(k.mult_order(&k.primitive_element()).unwrap(), k.cardinality() - 1);
        }
    }
}

#[test]
fn factors_multiply_to_xm1_and_idempotents_sum_to_one() {
    for s in SYSTEMS.iter() {
        let ring = PolyRing::new(&s.base);
        let m = s.params.m;
        let prod = s.components.iter().fold(ring.one(), |acc, c| ring.mul(&acc, &c.f));
        assert_eq!(prod, ring.xm1(m));
        let mut sum = vec![0u64; m];
        for c in &s.components {
            for (l, &e) in c.eps.iter().enumerate() {
                sum[l] = (sum[l] + e as u64) % s.params.q as u64;
            }
        }
        assert_eq!(ring.from_residues(&sum), ring.one());
    }
}

#[test]
fn idempotents_are_fixed_by_the_multiplier() {
    for s in SYSTEMS.iter() {
        let (m, r) = (s.params.m, s.params.r);
        for c in &s.components {
            // ε(x^r) carries the coefficient ε_l at x^(rl)
            let mut direct = vec![0; m];
            for (l, &e) in c.eps.iter().enumerate() {
                direct[l * r % m] = e;
            }
            assert_eq!(direct, c.eps, "component {} of {:?}", c.index, s.params);
        }
    }
}

#[test]
fn idempotents_match_the_fourier_form() {
    for s in SYSTEMS.iter() {
        let k = &s.splitting;
        let m = s.params.m;
        let m_inv = k.inv(&k.constant(m as u64)).unwrap();
        for c in &s.components {
            for l in 0..m {
                let sum = c.coset.iter().fold(k.zero(), |acc, &j| {
                    let e = (m - j * l % m) % m;
                    k.add(&acc, &k.pow(&s.zeta, e as u64))
                });
                let coeff = k.mul(&m_inv, &sum);
                assert_eq!(coeff, k.constant(c.eps[l] as u64), "ε_{} coefficient {l}", c.index);
            }
        }
    }
}

#[test]
fn norm_group_is_the_norm_one_subgroup() {
    for s in SYSTEMS.iter() {
        for c in s.components.iter().filter(|c| c.cond == Condition::II) {
            let k = &c.field;
            let brute: HashSet<FElem> = k.elements().filter(|a| !a.is_zero() && c.norm(a) == k.one()).collect();
            let listed: HashSet<FElem> = c.norm_group.iter().cloned().collect();
            assert_eq!(listed.len(), c.norm_group.len());
            assert_eq!(brute, listed, "component {} of {:?}", c.index, s.params);
        }
    }
}

#[test]
fn catalogues_are_distinct_and_shift_stable() {
    for s in SYSTEMS.iter() {
        for c in &s.components {
            let k = &c.field;
            let cat = skew::enumerate_ideals(c);
            assert_eq!(cat.len() as u64, skew::ideal_count(c));
            let mut spaces = HashSet::new();
            for d in &cat {
                let rows = linalg::row_space(k, &skew::generator_matrix(c, d).unwrap_or_default());
                assert_eq!(rows.len(), d.dim());
                let shifted: Vec<Vec<FElem>> =
                    rows.iter().map(|v| vec![c.theta(&v[2]), c.theta(&v[0]), c.theta(&v[1])]).collect();
                assert!(rows.is_empty() || linalg::contains_rows(k, &rows, &shifted), "{}", d.term());
                assert!(spaces.insert(rows), "duplicate {}", d.term());
            }
            let dims = |n| {
                cat.iter()
                    .filter(|d| matches!(d.tag, IdealTag::Dim1 { .. } | IdealTag::Dim2 { .. }) && d.dim() == n)
                    .count()
            };
            if c.cond == Condition::II {
                assert_eq!(dims(1), c.norm_group.len());
                assert_eq!(dims(2), c.norm_group.len());
            }
        }
    }
}

/// Minimum weight of the minimal cyclic code `A_i = {ε_i a}` by listing it.
fn inner_distance(s: &System, i: usize) -> usize {
    let c = s.component(i);
    let (m, q) = (s.params.m, s.params.q as u64);
    let ring = PolyRing::new(&s.base);
    let eps = ring.from_residues(&c.eps.iter().map(|&e| e as u64).collect::<Vec<_>>());
    (1..q.pow(c.d as u32))
        .map(|mut n| {
            let a: Vec<u64> = (0..c.d)
                .map(|_| {
                    let digit = n % q;
                    n /= q;
                    digit
                })
                .collect();
            let w = ring.mod_xm1(&ring.mul(&eps, &ring.from_residues(&a)), m).unwrap();
            w.residues().iter().filter(|&&x| x != 0).count()
        })
        .min()
        .expect("nonzero code")
}

#[test]
fn concatenation_distance_bound() {
    for s in SYSTEMS.iter() {
        let space = CodeSpace::new(s);
        for c in &s.components {
            let d_inner = inner_distance(s, c.index);
            for desc in &space.catalogs()[c.index] {
                let size = (s.params.q as u64).checked_pow((c.d * desc.dim()) as u32);
                if matches!(desc.tag, IdealTag::Zero) || size.is_none_or(|n| n > 100_000) {
                    continue;
                }
                let mut choices = space.choices_at(&vec![0; s.len()]);
                choices[c.index] = desc.clone();
                let code = space.assemble(&choices).unwrap();
                let d = code.weight_enumerator(1 << 22).unwrap().min_distance().unwrap();
                let d_outer = skew::min_weight(c, desc).unwrap();
                assert!(d >= d_inner * d_outer, "{} on {:?}: {d} < {d_inner}·{d_outer}", desc.term(), s.params);
            }
        }
    }
}
