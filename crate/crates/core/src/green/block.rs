use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{DynGreen, GreenFunctor};
use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::groups::{Caps, FiniteGroup, GroupMap, SubKey};
use crate::linalg::Echelon;

/// The block `eA` cut out by an idempotent `e` of `A(1)`: `eA(G)` is the
/// image of `m -> e x m`.
pub struct Block {
    base: DynGreen,
    idempotent: BurnsideElement,
    label: String,
    spans: Mutex<HashMap<FiniteGroup, Arc<Echelon<SubKey>>>>,
}

impl Block {
    /// Requires `e` to be an idempotent of `A(1)`.
    pub fn new(base: DynGreen, idempotent: BurnsideElement, label: impl Into<String>) -> Result<Self> {
        let one = FiniteGroup::trivial();
        if !base.contains(&one, &idempotent)? {
            return Err(Error::FamilyInvalid("block idempotent is not in A(1)".into()));
        }
        if base.dot(&one, &idempotent, &idempotent)? != idempotent {
            return Err(Error::FamilyInvalid(format!("{idempotent} is not idempotent")));
        }
        Ok(Block {
            base,
            idempotent,
            label: label.into(),
            spans: Mutex::new(HashMap::new()),
        })
    }

    pub fn idempotent(&self) -> &BurnsideElement {
        &self.idempotent
    }

    pub fn base(&self) -> &DynGreen {
        &self.base
    }

    /// Reduced echelon basis of `eA(G)`, cached per group.
    pub fn span(&self, g: &FiniteGroup) -> Result<Arc<Echelon<SubKey>>> {
        if let Some(s) = self.spans.lock().expect("block cache poisoned").get(g) {
            return Ok(s.clone());
        }
        let mut e = Echelon::new();
        for b in self.base.basis(g)? {
            e.insert(self.base.unit_action(g, &self.idempotent, &b)?.vector().clone());
        }
        let e = Arc::new(e);
        self.spans
            .lock()
            .expect("block cache poisoned")
            .entry(g.clone())
            .or_insert_with(|| e.clone());
        Ok(e)
    }
}

impl GreenFunctor for Block {
    fn name(&self) -> String {
        format!("block:{}", self.label)
    }

    fn caps(&self) -> &Caps {
        self.base.caps()
    }

    fn carrier(&self, g: &FiniteGroup) -> FiniteGroup {
        self.base.carrier(g)
    }

    fn basis(&self, g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
        let carrier = self.carrier(g);
        Ok(self
            .span(g)?
            .rows()
            .map(|r| BurnsideElement::from_vector(&carrier, r.clone()))
            .collect())
    }

    fn contains(&self, g: &FiniteGroup, v: &BurnsideElement) -> Result<bool> {
        Ok(self.base.contains(g, v)? && self.span(g)?.contains(v.vector()))
    }

    fn pull(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.pull(f, v)
    }

    fn push(&self, f: &GroupMap, v: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.push(f, v)
    }

    fn cross(&self, g: &FiniteGroup, a: &BurnsideElement, h: &FiniteGroup, b: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.cross(g, a, h, b)
    }

    fn unit(&self) -> BurnsideElement {
        self.idempotent.clone()
    }

    fn unit_action(&self, g: &FiniteGroup, e: &BurnsideElement, m: &BurnsideElement) -> Result<BurnsideElement> {
        self.base.unit_action(g, e, m)
    }
}
