use std::sync::Arc;

use bisetkit::bisets::{compose, BisetElement};
use bisetkit::burnside::{idempotents, BurnsideElement};
use bisetkit::green::{
    adj_hat, adj_tilde, lambda, module_action, pa_compose, pa_identity, psi, rho, theta, upsilon, Burnside, DynGreen,
    GreenFunctor, Module, PAMorphism, Shifted,
};
use bisetkit::groups::{cyclic, klein_four, Caps, FiniteGroup};
use bisetkit::rational::q;

fn burnside() -> DynGreen {
    Arc::new(Burnside::new(Caps::default()))
}

fn small() -> Vec<FiniteGroup> {
    vec![FiniteGroup::trivial(), cyclic(2), cyclic(3)]
}

#[test]
fn pa_composition_is_biset_composition() {
    let a = burnside();
    let caps = Caps::default();
    for h in small() {
        for g in small() {
            for k in small() {
                for beta in PAMorphism::basis(&*a, &g, &h).unwrap() {
                    for alpha in PAMorphism::basis(&*a, &k, &g).unwrap() {
                        let pa = pa_compose(&*a, &beta, &alpha).unwrap();
                        let b = BisetElement::from_burnside(&h, &g, beta.value.clone()).unwrap();
                        let al = BisetElement::from_burnside(&g, &k, alpha.value.clone()).unwrap();
                        let c = compose(&b, &al, &caps).unwrap();
                        assert_eq!(&pa.value, c.as_burnside(), "{h} {g} {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn identities_are_neutral() {
    let a = burnside();
    for g in small() {
        let id = pa_identity(&*a, &g).unwrap();
        assert_eq!(id.value, bisetkit::bisets::identity(&g).into_burnside());
        for h in small() {
            for alpha in PAMorphism::basis(&*a, &g, &h).unwrap() {
                assert_eq!(pa_compose(&*a, &alpha, &id).unwrap(), alpha);
                let idh = pa_identity(&*a, &h).unwrap();
                assert_eq!(pa_compose(&*a, &idh, &alpha).unwrap(), alpha);
            }
        }
    }
}

#[test]
fn shifted_unit_action_matches_generic_cross() {
    let a = burnside();
    let c2 = cyclic(2);
    let s = Shifted::new(a.clone(), c2.clone());
    for (_, e) in idempotents(&c2, &Caps::default()).unwrap() {
        for g in [FiniteGroup::trivial(), c2.clone(), cyclic(3)] {
            for m in s.basis(&g).unwrap() {
                let fast = s.unit_action(&g, &e, &m).unwrap();
                let generic = s.cross(&FiniteGroup::trivial(), &e, &g, &m).unwrap();
                assert_eq!(fast, generic);
            }
        }
    }
}

#[test]
fn shift_identities() {
    let a = burnside();
    let groups = [FiniteGroup::trivial(), cyclic(2)];
    for l in [cyclic(2), cyclic(3)] {
        let al: DynGreen = Arc::new(Shifted::new(a.clone(), l.clone()));
        for g in &groups {
            for h in &groups {
                for alpha in PAMorphism::basis(&*a, g, h).unwrap() {
                    let r = rho(&*a, &l, &alpha).unwrap();
                    let tp = theta(&*a, &l, &psi(&*a, &l, &alpha).unwrap()).unwrap();
                    assert_eq!(r, tp);
                }
                // naturality of the tilde bijection
                for k in &groups {
                    for alpha in PAMorphism::basis(&*al, g, h).unwrap() {
                        for u in PAMorphism::basis(&*al, k, g).unwrap() {
                            let lhs = adj_tilde(&l, &pa_compose(&*al, &alpha, &u).unwrap());
                            let rhs = pa_compose(&*a, &adj_tilde(&l, &alpha), &theta(&*a, &l, &u).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                        for v in PAMorphism::basis(&*a, h, k).unwrap() {
                            let lhs = pa_compose(&*al, &psi(&*a, &l, &v).unwrap(), &alpha).unwrap();
                            let rhs = pa_compose(&*a, &v, &adj_tilde(&l, &alpha)).unwrap();
                            assert_eq!(adj_tilde(&l, &lhs), rhs);
                        }
                    }
                }
            }
        }
        let _ = adj_hat(&*a, &l, &PAMorphism::basis(&*al, &groups[1], &groups[1]).unwrap()[0]).unwrap();
        for g in &groups {
            let id = pa_identity(&*a, g).unwrap();
            assert_eq!(rho(&*a, &l, &id).unwrap(), pa_identity(&*a, &FiniteGroup::product_of(&[g.clone(), l.clone()])).unwrap());
            assert_eq!(lambda(&*a, &l, &id).unwrap(), pa_identity(&*a, &FiniteGroup::product_of(&[l.clone(), g.clone()])).unwrap());
        }
    }
}

#[test]
fn module_action_matches_composition() {
    let a = burnside();
    let m = Module::regular(&*a);
    for g in small() {
        for h in small() {
            for alpha in PAMorphism::basis(&*a, &g, &h).unwrap() {
                for x in a.basis(&g).unwrap() {
                    let acted = module_action(&m, &alpha, &x).unwrap();
                    let as_morphism = PAMorphism {
                        source: FiniteGroup::trivial(),
                        target: g.clone(),
                        value: x.clone(),
                    };
                    assert_eq!(acted, pa_compose(&*a, &alpha, &as_morphism).unwrap().value);
                }
            }
        }
    }
}

#[test]
fn upsilon_on_burnside_is_identity() {
    let a = burnside();
    let v4 = klein_four();
    for x in a.basis(&v4).unwrap() {
        assert_eq!(upsilon(&*a, &v4, &x).unwrap(), x);
    }
    let c2 = cyclic(2);
    let s = Shifted::new(a.clone(), c2.clone());
    assert_eq!(upsilon(&s, &c2, &BurnsideElement::unit(&c2)).unwrap(), s.unit_of(&c2).unwrap());
    let _ = q(0);
}

#[test]
fn nested_shift_matches_product_shift() {
    let a = burnside();
    let (k, l) = (cyclic(2), cyclic(3));
    let nested: DynGreen = Arc::new(Shifted::new(Arc::new(Shifted::new(a.clone(), l.clone())), k.clone()));
    let flat: DynGreen = Arc::new(Shifted::new(a.clone(), FiniteGroup::product_of(&[k.clone(), l.clone()])));
    for g in small() {
        let (bn, bf) = (nested.basis(&g).unwrap(), flat.basis(&g).unwrap());
        assert_eq!(bn, bf);
        for x in &bn {
            for y in &bn {
                assert_eq!(nested.dot(&g, x, y).unwrap(), flat.dot(&g, x, y).unwrap());
            }
        }
    }
}

#[test]
fn shifted_ring_at_one_is_burnside_ring() {
    let a = burnside();
    for l in [cyclic(2), cyclic(3), klein_four()] {
        let s = Shifted::new(a.clone(), l.clone());
        let one = FiniteGroup::trivial();
        let basis = s.basis(&one).unwrap();
        assert_eq!(s.unit(), BurnsideElement::unit(&l));
        for x in &basis {
            for y in &basis {
                assert_eq!(s.dot(&one, x, y).unwrap(), bisetkit::burnside::mult(x, y, &Caps::default()).unwrap());
            }
        }
    }
}

#[test]
fn trivial_shift_is_identity() {
    let a = burnside();
    let one = FiniteGroup::trivial();
    for g in small() {
        for h in small() {
            for alpha in PAMorphism::basis(&*a, &g, &h).unwrap() {
                assert_eq!(psi(&*a, &one, &alpha).unwrap(), alpha);
                assert_eq!(theta(&*a, &one, &alpha).unwrap(), alpha);
                assert_eq!(rho(&*a, &one, &alpha).unwrap(), alpha);
                assert_eq!(lambda(&*a, &one, &alpha).unwrap(), alpha);
            }
        }
    }
}

#[test]
fn ring_and_cross_determine_each_other() {
    let a = burnside();
    let groups = [cyclic(2), cyclic(3), klein_four(), bisetkit::groups::symmetric(3).unwrap()];
    for g in &groups {
        for h in &groups {
            let gh = FiniteGroup::product_of(&[g.clone(), h.clone()]);
            let p1 = bisetkit::groups::factor_map(&[g.clone(), h.clone()], &[0]);
            let p2 = bisetkit::groups::factor_map(&[g.clone(), h.clone()], &[1]);
            for x in a.basis(g).unwrap() {
                for y in a.basis(h).unwrap() {
                    let via_ring = a.dot(&gh, &a.pull(&p1, &x).unwrap(), &a.pull(&p2, &y).unwrap()).unwrap();
                    assert_eq!(a.cross(g, &x, h, &y).unwrap(), via_ring);
                }
            }
        }
    }
}
