use std::sync::Arc;

use proptest::prelude::*;

use bisetkit::bisets::{compose, decompose_concrete, mackey_compose, realize_concrete, BisetElement};
use bisetkit::burnside::{burnside_basis, marks, mult, BurnsideElement};
use bisetkit::center::{commutes, is_center_element, iota, CenterCandidate, GroupFamily};
use bisetkit::decomp::{apply_block, IdempotentFamily};
use bisetkit::green::{
    module_action, upsilon, Block, Burnside, DynGreen, GreenFunctor, Module, PAMorphism, Shifted,
};
use bisetkit::groups::{cyclic, klein_four, subgroup_lattice, symmetric, Caps, FiniteGroup, Subgroup};
use bisetkit::rational::{frac, Q};

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::trivial(),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        klein_four(),
        symmetric(3).unwrap(),
    ]
}

fn caps() -> Caps {
    Caps::default()
}

/// A random rational combination of the basis of QB(g), from raw picks.
fn element(g: &FiniteGroup, picks: &[(usize, i64, i64)]) -> BurnsideElement {
    let basis = burnside_basis(g, &caps()).unwrap();
    let mut x = BurnsideElement::zero(g);
    for &(i, n, d) in picks {
        x = x.add(&basis[i % basis.len()].scale(&frac(n, d))).unwrap();
    }
    x
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..64, -5i64..=5, 1i64..=4), 1..4)
}

fn biset(h: &FiniteGroup, g: &FiniteGroup, p: &[(usize, i64, i64)]) -> BisetElement {
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    BisetElement::from_burnside(h, g, element(&hg, p)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_invariants(gi in 0usize..6) {
        let g = &groups()[gi];
        let lat = subgroup_lattice(g, &caps()).unwrap();
        let mut seen = vec![false; lat.subgroups().len()];
        for c in lat.classes() {
            prop_assert_eq!(c.representative.members(), lat.subgroups()[c.members[0]].members());
            for &m in &c.members {
                prop_assert!(!seen[m]);
                seen[m] = true;
                let s = &lat.subgroups()[m];
                prop_assert_eq!(s.order() * s.index(), g.order());
                prop_assert_eq!(g.order() / c.normalizer.order(), c.members.len());
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        for k in 0..lat.subgroups().len() {
            prop_assert_eq!(lat.mobius_by_index(k, k).unwrap(), 1);
            for &l in lat.below(k) {
                if l == k {
                    continue;
                }
                // sum of mu(l, m) over l <= m <= k vanishes
                let sum: i64 = lat
                    .below(k)
                    .iter()
                    .filter(|&&m| lat.contains(l, m))
                    .map(|&m| lat.mobius_by_index(l, m).unwrap())
                    .sum();
                prop_assert_eq!(sum, 0);
            }
        }
    }

    #[test]
    fn marks_are_a_ring_homomorphism(gi in 0usize..6, a in picks(), b in picks()) {
        let g = &groups()[gi];
        let (x, y) = (element(g, &a), element(g, &b));
        let mx = marks(&x, &caps()).unwrap().values;
        let my = marks(&y, &caps()).unwrap().values;
        let mxy = marks(&mult(&x, &y, &caps()).unwrap(), &caps()).unwrap().values;
        let expected: Vec<Q> = mx.iter().zip(&my).map(|(p, q)| p * q).collect();
        prop_assert_eq!(mxy, expected);
    }

    #[test]
    fn cross_is_bilinear(gi in 0usize..5, hi in 0usize..5, a in picks(), b in picks(), c in picks(), n in -3i64..=3) {
        let (g, h) = (&groups()[gi], &groups()[hi]);
        let a_ = Burnside::new(caps());
        let (x, x2, y) = (element(g, &a), element(g, &c), element(h, &b));
        let s = frac(n, 2);
        let lhs = a_.cross(g, &x.scale(&s).add(&x2).unwrap(), h, &y).unwrap();
        let rhs = a_.cross(g, &x, h, &y).unwrap().scale(&s).add(&a_.cross(g, &x2, h, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_for_subgroups(gi in 0usize..6, si in 0usize..16, a in picks(), b in picks()) {
        let g = &groups()[gi];
        let lat = subgroup_lattice(g, &caps()).unwrap();
        let s: &Subgroup = &lat.subgroups()[si % lat.subgroups().len()];
        let (sg, incl) = s.as_group();
        let u = element(&sg, &a);
        let x = element(g, &b);
        let lhs = mult(&u, &x.pull(&incl).unwrap(), &caps()).unwrap().push(&incl).unwrap();
        let rhs = mult(&u.push(&incl).unwrap(), &x, &caps()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative_and_engines_agree(
        hi in 0usize..4, gi in 0usize..4, ki in 0usize..4, li in 0usize..3,
        a in picks(), b in picks(), c in picks(),
    ) {
        let gs = [FiniteGroup::trivial(), cyclic(2), cyclic(3), klein_four()];
        let (h, g, k, l) = (&gs[hi], &gs[gi], &gs[ki], &gs[li]);
        let (x, y, z) = (biset(h, g, &a), biset(g, k, &b), biset(k, l, &c));
        let xy = compose(&x, &y, &caps()).unwrap();
        prop_assert_eq!(&xy, &mackey_compose(&x, &y, &caps()).unwrap());
        let left = compose(&xy, &z, &caps()).unwrap();
        let right = compose(&x, &compose(&y, &z, &caps()).unwrap(), &caps()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn realize_then_decompose_is_identity(hi in 0usize..5, gi in 0usize..5, i in 0usize..64) {
        let (h, g) = (&groups()[hi], &groups()[gi]);
        let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
        let lat = subgroup_lattice(&hg, &caps()).unwrap();
        let stab = &lat.classes()[i % lat.classes().len()].representative;
        let x = realize_concrete(h, g, stab, &caps()).unwrap();
        let t = BisetElement::from_burnside(h, g, BurnsideElement::transitive(stab)).unwrap();
        prop_assert_eq!(decompose_concrete(&x), t);
    }

    #[test]
    fn json_round_trip(hi in 0usize..5, gi in 0usize..5, a in picks()) {
        let (h, g) = (&groups()[hi], &groups()[gi]);
        let x = biset(h, g, &a);
        let back = BisetElement::from_json(h, g, &x.to_json()).unwrap();
        prop_assert_eq!(&back, &x);
        let text = serde_json::to_string(&x.as_burnside().to_json()).unwrap();
        let parsed = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&BurnsideElement::from_json(x.ambient(), &parsed).unwrap(), x.as_burnside());
    }

    #[test]
    fn commutation_is_symmetric(gi in 0usize..5, hi in 0usize..5, a in picks(), b in picks()) {
        let (g, h) = (&groups()[gi], &groups()[hi]);
        let a_ = Burnside::new(caps());
        let (x, y) = (element(g, &a), element(h, &b));
        prop_assert_eq!(commutes(&a_, g, &x, h, &y).unwrap(), commutes(&a_, h, &y, g, &x).unwrap());
    }
}

#[test]
fn enlarging_the_family_never_rescues_a_candidate() {
    let a = Burnside::new(caps());
    let c2 = cyclic(2);
    let small = GroupFamily::new(vec![FiniteGroup::trivial(), c2.clone()], caps()).unwrap();
    let large = GroupFamily::new(vec![FiniteGroup::trivial(), c2.clone(), cyclic(3)], caps()).unwrap();
    let x = a.basis(&c2).unwrap()[0].clone();
    let good = iota(&a, &c2, &x, &large).unwrap();
    // scale one component: natural for neither family
    let mut broken: CenterCandidate = good.clone();
    broken.components[1].1 = broken.components[1].1.scale(&frac(2, 1));
    let restricted = CenterCandidate {
        shift: broken.shift.clone(),
        components: broken.components[..2].to_vec(),
    };
    assert!(!is_center_element(&a, &restricted, &small).unwrap().verdict);
    assert!(!is_center_element(&a, &broken, &large).unwrap().verdict);
    assert!(is_center_element(&a, &good, &large).unwrap().verdict);
}

#[test]
fn block_projection_is_natural() {
    let base: DynGreen = Arc::new(Burnside::new(caps()));
    let c2 = cyclic(2);
    let a: DynGreen = Arc::new(Shifted::new(base, c2.clone()));
    let fam = IdempotentFamily::burnside(a.clone(), &c2, &caps()).unwrap();
    let m = Module::regular(&*a);
    let gs = [FiniteGroup::trivial(), c2.clone()];
    for e in &fam.elements {
        for g in &gs {
            for h in &gs {
                for alpha in PAMorphism::basis(&*a, g, h).unwrap() {
                    for x in m.spanning(g).unwrap() {
                        let gx = a.unit_action(g, e, &x).unwrap();
                        let lhs = module_action(&m, &alpha, &gx).unwrap();
                        let rhs = a.unit_action(h, e, &module_action(&m, &alpha, &x).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            let image = apply_block(e, &m, g).unwrap();
            for v in &image {
                assert_eq!(a.unit_action(g, e, v).unwrap(), *v);
            }
        }
    }
}

#[test]
fn upsilon_into_blocks_hits_the_block_unit() {
    let base: DynGreen = Arc::new(Burnside::new(caps()));
    let c2 = cyclic(2);
    let a: DynGreen = Arc::new(Shifted::new(base, c2.clone()));
    let fam = IdempotentFamily::burnside(a.clone(), &c2, &caps()).unwrap();
    for (e, label) in fam.elements.iter().zip(&fam.labels) {
        let block = Block::new(a.clone(), e.clone(), label.clone()).unwrap();
        for g in [FiniteGroup::trivial(), c2.clone(), cyclic(3)] {
            let image = upsilon(&block, &g, &BurnsideElement::unit(&g)).unwrap();
            assert_eq!(image, block.unit_of(&g).unwrap());
            assert!(block.contains(&g, &image).unwrap());
        }
    }
}
