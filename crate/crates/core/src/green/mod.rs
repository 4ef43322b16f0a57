//! Green biset functors with values in rational Burnside rings: the Burnside
//! functor itself, its shifts `A_L` and idempotent blocks `eA`, together
//! with the category of A-morphisms and the shift functors between them.

mod block;
mod pa;
mod shift;

use std::fmt;
use std::sync::Arc;

pub use block::Block;
pub use pa::{
    adj_hat, adj_tilde, lambda, module_action, pa_compose, pa_identity, psi, rho, theta, upsilon, Module,
    PAMorphism,
};
pub use shift::Shifted;

use crate::bisets::{butterfly, BisetElement, BisetOp};
use crate::burnside::{burnside_basis, cross_burnside, idempotents, BurnsideElement};
use crate::error::{Error, Result};
use crate::groups::{builtin, factor_map, Caps, FiniteGroup, GroupMap};

/// A Green biset functor whose evaluation at `G` is a subspace of the
/// rational Burnside ring of `carrier(G)`.
pub trait GreenFunctor: Send + Sync {
    fn name(&self) -> String;

    fn caps(&self) -> &Caps;

    /// The group whose Burnside ring houses `A(G)`.
    fn carrier(&self, g: &FiniteGroup) -> FiniteGroup;

    /// Published basis of `A(G)`.
    fn basis(&self, g: &FiniteGroup) -> Result<Vec<BurnsideElement>>;

    /// `A(Res/Inf along f)`, from `A(target)` to `A(source)`.
    fn pull(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement>;

    /// `A(Ind/Def along f)`, from `A(source)` to `A(target)`.
    fn push(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement>;

    /// `a x b` in `A(G x H)`.
    fn cross(&self, g: &FiniteGroup, a: &BurnsideElement, h: &FiniteGroup, b: &BurnsideElement) -> Result<BurnsideElement>;

    /// `epsilon` in `A(1)`.
    fn unit(&self) -> BurnsideElement;

    fn contains(&self, g: &FiniteGroup, v: &BurnsideElement) -> Result<bool> {
        Ok(v.group() == &self.carrier(g))
    }

    /// `e x m` for `e` in `A(1)` and `m` in `A(G)`, landing in `A(1 x G) = A(G)`.
    fn unit_action(&self, g: &FiniteGroup, e: &BurnsideElement, m: &BurnsideElement) -> Result<BurnsideElement> {
        self.cross(&FiniteGroup::trivial(), e, g, m)
    }

    fn zero(&self, g: &FiniteGroup) -> BurnsideElement {
        BurnsideElement::zero(&self.carrier(g))
    }

    fn act(&self, op: &BisetOp, v: &BurnsideElement) -> Result<BurnsideElement> {
        match op {
            BisetOp::Pull(f) => self.pull(f, v),
            BisetOp::Push(f) => self.push(f, v),
            BisetOp::Element(b) => self.act_element(b, v),
        }
    }

    /// Action of a rational biset combination through the butterfly
    /// factorization of each transitive term.
    fn act_element(&self, b: &BisetElement, v: &BurnsideElement) -> Result<BurnsideElement> {
        if v.group() != &self.carrier(b.right()) {
            return Err(Error::mismatch(format!(
                "biset from {} applied to a value over {}",
                b.right(),
                v.group()
            )));
        }
        let mut out = self.zero(b.left());
        for (t, c) in b.terms() {
            let mut x = v.clone();
            for op in butterfly(&t.left, &t.right, t.stab.key())? {
                x = self.act(&op, &x)?;
            }
            out.axpy(c, &x)?;
        }
        Ok(out)
    }

    /// Ring product of `A(G)`: restriction of `a x b` to the diagonal.
    fn dot(&self, g: &FiniteGroup, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        let ab = self.cross(g, a, g, b)?;
        self.pull(&factor_map(std::slice::from_ref(g), &[0, 0]), &ab)
    }

    /// `A(Inf_1^G)(epsilon)`.
    fn unit_of(&self, g: &FiniteGroup) -> Result<BurnsideElement> {
        self.pull(&GroupMap::to_trivial(g), &self.unit())
    }
}

pub type DynGreen = Arc<dyn GreenFunctor>;

impl fmt::Debug for dyn GreenFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The rational Burnside functor `G -> QB(G)`.
#[derive(Debug, Clone)]
pub struct Burnside {
    caps: Caps,
}

impl Burnside {
    pub fn new(caps: Caps) -> Self {
        Burnside { caps }
    }
}

impl GreenFunctor for Burnside {
    fn name(&self) -> String {
        "burnside".into()
    }

    fn caps(&self) -> &Caps {
        &self.caps
    }

    fn carrier(&self, g: &FiniteGroup) -> FiniteGroup {
        g.clone()
    }

    fn basis(&self, g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
        burnside_basis(g, &self.caps)
    }

    fn pull(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.caps.check_ambient(f.source().order())?;
        v.pull(f)
    }

    fn push(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.caps.check_ambient(f.target().order())?;
        v.push(f)
    }

    fn cross(&self, g: &FiniteGroup, a: &BurnsideElement, h: &FiniteGroup, b: &BurnsideElement) -> Result<BurnsideElement> {
        if a.group() != g || b.group() != h {
            return Err(Error::mismatch(format!(
                "cross of values over {} and {} as QB({g}) x QB({h})",
                a.group(),
                b.group()
            )));
        }
        self.caps.check_ambient(g.order() * h.order())?;
        Ok(cross_burnside(a, b))
    }

    fn unit(&self) -> BurnsideElement {
        BurnsideElement::unit(&FiniteGroup::trivial())
    }
}

/// Resolves `burnside`, `burnside_shift:<group>` and `block:<group>:<i>`, the
/// block of `burnside_shift:<group>` cut out by the `i`-th primitive
/// idempotent of `QB(group)`; `resolve` looks up group names (built-ins are
/// tried first).
pub fn instance(name: &str, caps: Caps, resolve: &dyn Fn(&str) -> Option<FiniteGroup>) -> Result<DynGreen> {
    let base: DynGreen = Arc::new(Burnside::new(caps));
    if name == "burnside" {
        return Ok(base);
    }
    if let Some(g) = name.strip_prefix("burnside_shift:") {
        let l = builtin(g).or_else(|| resolve(g)).ok_or_else(|| Error::UnknownGroup(g.to_string()))?;
        return Ok(Arc::new(Shifted::new(base, l)));
    }
    if let Some(rest) = name.strip_prefix("block:") {
        let (g, i) = rest
            .rsplit_once(':')
            .and_then(|(g, i)| Some((g, i.parse::<usize>().ok()?)))
            .ok_or_else(|| Error::Invalid(format!("expected `block:<group>:<index>`, got `{name}`")))?;
        let l = builtin(g).or_else(|| resolve(g)).ok_or_else(|| Error::UnknownGroup(g.to_string()))?;
        let fam = idempotents(&l, &caps)?;
        let (_, e) = fam
            .into_iter()
            .nth(i)
            .ok_or_else(|| Error::Invalid(format!("{g} has no idempotent {i}")))?;
        let shifted: DynGreen = Arc::new(Shifted::new(base, l));
        return Ok(Arc::new(Block::new(shifted, e, rest)?));
    }
    Err(Error::Invalid(format!("unknown functor `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisets::{compose, ind, res, transitive};
    use crate::burnside::mult;
    use crate::groups::{cyclic, subgroup_lattice, symmetric, Subgroup};
    use crate::rational::q;

    #[test]
    fn dot_matches_burnside_mult() {
        let a = Burnside::new(Caps::default());
        let s3 = symmetric(3).unwrap();
        let basis = a.basis(&s3).unwrap();
        for x in &basis {
            for y in &basis {
                assert_eq!(a.dot(&s3, x, y).unwrap(), mult(x, y, a.caps()).unwrap());
            }
            assert_eq!(a.dot(&s3, &a.unit_of(&s3).unwrap(), x).unwrap(), *x);
        }
    }

    #[test]
    fn element_action_is_functorial() {
        let a = Burnside::new(Caps::default());
        let caps = Caps::default();
        let (c2, s3) = (cyclic(2), symmetric(3).unwrap());
        let hg = FiniteGroup::product_of(&[s3.clone(), c2.clone()]);
        let lat = subgroup_lattice(&hg, &caps).unwrap();
        let res_c2 = res(&Subgroup::trivial(&c2), &c2).unwrap();
        for class in lat.classes() {
            let beta = transitive(&s3, &c2, &class.representative).unwrap();
            let composite = compose(&beta, &ind(&c2, &Subgroup::trivial(&c2)).unwrap(), &caps).unwrap();
            let one = a.unit();
            let lhs = a.act_element(&composite, &one).unwrap();
            let rhs = a
                .act_element(&beta, &a.act_element(&ind(&c2, &Subgroup::trivial(&c2)).unwrap(), &one).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            // acting on G-sets agrees with composing bisets, read in QB(H x 1)
            assert_eq!(lhs, composite.as_burnside().clone());
            let back = a.act_element(&res_c2, &a.unit_of(&c2).unwrap()).unwrap();
            assert_eq!(back, a.unit().scale(&q(1)));
        }
    }

    #[test]
    fn registry() {
        let none = |_: &str| None;
        assert_eq!(instance("burnside", Caps::default(), &none).unwrap().name(), "burnside");
        assert_eq!(
            instance("burnside_shift:C2", Caps::default(), &none).unwrap().name(),
            "burnside_shift:C2"
        );
        assert!(instance("burnside_shift:Q8", Caps::default(), &none).is_err());
        let block = instance("block:C2:1", Caps::default(), &none).unwrap();
        assert_eq!(block.name(), "block:C2:1");
        assert!(instance("block:C2:2", Caps::default(), &none).is_err());
        assert!(instance("block:C2", Caps::default(), &none).is_err());
        assert!(instance("linear", Caps::default(), &none).is_err());
    }
}
