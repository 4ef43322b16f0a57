use super::{DynGreen, GreenFunctor};
use crate::burnside::BurnsideElement;
use crate::error::Result;
use crate::groups::{factor_map, Caps, FiniteGroup, GroupMap};

/// The shifted functor `A_L : K -> A(K x L)` with the diagonal product
/// `a x^d b = A(Res^{HLKL}_{HK Delta(L)})(a x b)`.
#[derive(Clone)]
pub struct Shifted {
    base: DynGreen,
    shift: FiniteGroup,
}

impl Shifted {
    pub fn new(base: DynGreen, shift: FiniteGroup) -> Self {
        Shifted { base, shift }
    }

    pub fn base(&self) -> &DynGreen {
        &self.base
    }

    pub fn shift_group(&self) -> &FiniteGroup {
        &self.shift
    }

    fn with_shift(&self, g: &FiniteGroup) -> FiniteGroup {
        FiniteGroup::product_of(&[g.clone(), self.shift.clone()])
    }
}

impl GreenFunctor for Shifted {
    fn name(&self) -> String {
        format!("{}_shift:{}", self.base.name(), self.shift)
    }

    fn caps(&self) -> &Caps {
        self.base.caps()
    }

    fn carrier(&self, g: &FiniteGroup) -> FiniteGroup {
        self.base.carrier(&self.with_shift(g))
    }

    fn basis(&self, g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
        self.base.basis(&self.with_shift(g))
    }

    fn contains(&self, g: &FiniteGroup, v: &BurnsideElement) -> Result<bool> {
        self.base.contains(&self.with_shift(g), v)
    }

    fn pull(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.pull(&f.times(&GroupMap::identity(&self.shift)), v)
    }

    fn push(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.push(&f.times(&GroupMap::identity(&self.shift)), v)
    }

    fn cross(&self, h: &FiniteGroup, a: &BurnsideElement, k: &FiniteGroup, b: &BurnsideElement) -> Result<BurnsideElement> {
        let l = &self.shift;
        let ab = self.base.cross(&self.with_shift(h), a, &self.with_shift(k), b)?;
        // (h, k, l) -> (h, l, k, l)
        let diag = factor_map(&[h.clone(), k.clone(), l.clone()], &[0, 2, 1, 2]);
        self.base.pull(&diag, &ab)
    }

    fn unit(&self) -> BurnsideElement {
        self.base.unit_of(&self.shift).expect("unit of the shift group within caps")
    }

    /// `e x^d m = A(Inf_L^{G x L})(e) . m`, avoiding the `L x G x L` ambient.
    fn unit_action(&self, g: &FiniteGroup, e: &BurnsideElement, m: &BurnsideElement) -> Result<BurnsideElement> {
        let gl = self.with_shift(g);
        let inflated = self.base.pull(&factor_map(&[g.clone(), self.shift.clone()], &[1]), e)?;
        self.base.dot(&gl, &inflated, m)
    }
}
