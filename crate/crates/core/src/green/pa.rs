use super::GreenFunctor;
use crate::bisets::{cross, identity, oviz};
use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::groups::{factor_map, FiniteGroup, Subgroup};

/// A morphism `source -> target` of the category of A-morphisms, with value
/// in `A(target x source)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAMorphism {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    pub value: BurnsideElement,
}

impl PAMorphism {
    pub fn new(a: &dyn GreenFunctor, source: &FiniteGroup, target: &FiniteGroup, value: BurnsideElement) -> Result<Self> {
        let hg = FiniteGroup::product_of(&[target.clone(), source.clone()]);
        if !a.contains(&hg, &value)? {
            return Err(Error::mismatch(format!(
                "value over {} is not in {}({target} x {source})",
                value.group(),
                a.name()
            )));
        }
        Ok(PAMorphism {
            source: source.clone(),
            target: target.clone(),
            value,
        })
    }

    /// Every basis element of `A(target x source)` as a morphism.
    pub fn basis(a: &dyn GreenFunctor, source: &FiniteGroup, target: &FiniteGroup) -> Result<Vec<PAMorphism>> {
        let hg = FiniteGroup::product_of(&[target.clone(), source.clone()]);
        Ok(a.basis(&hg)?
            .into_iter()
            .map(|value| PAMorphism {
                source: source.clone(),
                target: target.clone(),
                value,
            })
            .collect())
    }
}

/// `beta o alpha = A(Def^{HGK}_{HK} Res^{HGGK}_{HGK})(beta x alpha)` for
/// `beta : G -> H` and `alpha : K -> G`.
pub fn pa_compose(a: &dyn GreenFunctor, beta: &PAMorphism, alpha: &PAMorphism) -> Result<PAMorphism> {
    if beta.source != alpha.target {
        return Err(Error::mismatch(format!(
            "composing {} -> {} after {} -> {}",
            beta.source, beta.target, alpha.source, alpha.target
        )));
    }
    let (h, g, k) = (&beta.target, &beta.source, &alpha.source);
    let hggk = FiniteGroup::product_of(&[h.clone(), g.clone(), g.clone(), k.clone()]);
    a.caps().check_ambient(a.carrier(&hggk).order())?;
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    let gk = FiniteGroup::product_of(&[g.clone(), k.clone()]);
    let both = a.cross(&hg, &beta.value, &gk, &alpha.value)?;
    let factors = [h.clone(), g.clone(), k.clone()];
    let restricted = a.pull(&factor_map(&factors, &[0, 1, 1, 2]), &both)?;
    let value = a.push(&factor_map(&factors, &[0, 2]), &restricted)?;
    Ok(PAMorphism {
        source: k.clone(),
        target: h.clone(),
        value,
    })
}

/// `A(Ind_{Delta(G)}^{G x G} Inf_1^{Delta(G)})(epsilon)`.
pub fn pa_identity(a: &dyn GreenFunctor, g: &FiniteGroup) -> Result<PAMorphism> {
    let value = a.push(&factor_map(std::slice::from_ref(g), &[0, 0]), &a.unit_of(g)?)?;
    Ok(PAMorphism {
        source: g.clone(),
        target: g.clone(),
        value,
    })
}

/// The canonical morphism `QB -> A` at `G`: `[G/T] -> A(Ind_T^G Inf_1^T)(epsilon)`.
pub fn upsilon(a: &dyn GreenFunctor, g: &FiniteGroup, x: &BurnsideElement) -> Result<BurnsideElement> {
    if x.group() != g {
        return Err(Error::mismatch(format!("element of QB({}) given for {g}", x.group())));
    }
    let mut out = a.zero(g);
    for (key, c) in x.terms() {
        let t = Subgroup::new(g.clone(), key.members().to_vec())?;
        let (tg, incl) = t.as_group();
        out.axpy(c, &a.push(&incl, &a.unit_of(&tg)?)?)?;
    }
    Ok(out)
}

/// Inflation into the shifted category: `A(Inf^{HGL}_{HG})(alpha)`, a
/// morphism `G -> H` for `A_L`.
pub fn psi(a: &dyn GreenFunctor, l: &FiniteGroup, alpha: &PAMorphism) -> Result<PAMorphism> {
    let (h, g) = (&alpha.target, &alpha.source);
    let value = a.pull(&factor_map(&[h.clone(), g.clone(), l.clone()], &[0, 1]), &alpha.value)?;
    Ok(PAMorphism {
        value,
        ..alpha.clone()
    })
}

/// From `A_L` back to `A`: `A(Ind^{HLGL}_{HG Delta(L)})(alpha)`, a morphism
/// `G x L -> H x L`.
pub fn theta(a: &dyn GreenFunctor, l: &FiniteGroup, alpha: &PAMorphism) -> Result<PAMorphism> {
    let (h, g) = (&alpha.target, &alpha.source);
    let value = a.push(&factor_map(&[h.clone(), g.clone(), l.clone()], &[0, 2, 1, 2]), &alpha.value)?;
    Ok(PAMorphism {
        source: FiniteGroup::product_of(&[g.clone(), l.clone()]),
        target: FiniteGroup::product_of(&[h.clone(), l.clone()]),
        value,
    })
}

/// Right shift `alpha -> alpha x L`, computed as the cross product of
/// `alpha` with the identity of `L`, coordinates moved to `H x L x G x L`.
pub fn rho(a: &dyn GreenFunctor, l: &FiniteGroup, alpha: &PAMorphism) -> Result<PAMorphism> {
    let (h, g) = (&alpha.target, &alpha.source);
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    let ll = FiniteGroup::product_of(&[l.clone(), l.clone()]);
    let id = pa_identity(a, l)?;
    let both = a.cross(&hg, &alpha.value, &ll, &id.value)?;
    let value = a.push(
        &factor_map(&[h.clone(), g.clone(), l.clone(), l.clone()], &[0, 2, 1, 3]),
        &both,
    )?;
    Ok(PAMorphism {
        source: FiniteGroup::product_of(&[g.clone(), l.clone()]),
        target: FiniteGroup::product_of(&[h.clone(), l.clone()]),
        value,
    })
}

/// Left shift `alpha -> L x alpha`: `A(Ind^{LHLG}_{Delta(L)HG} Inf^{LHG}_{HG})(alpha)`.
pub fn lambda(a: &dyn GreenFunctor, l: &FiniteGroup, alpha: &PAMorphism) -> Result<PAMorphism> {
    let (h, g) = (&alpha.target, &alpha.source);
    let factors = [l.clone(), h.clone(), g.clone()];
    let inflated = a.pull(&factor_map(&factors, &[1, 2]), &alpha.value)?;
    let value = a.push(&factor_map(&factors, &[0, 1, 0, 2]), &inflated)?;
    Ok(PAMorphism {
        source: FiniteGroup::product_of(&[l.clone(), g.clone()]),
        target: FiniteGroup::product_of(&[l.clone(), h.clone()]),
        value,
    })
}

/// `Hom_{A_L}(G, H) -> Hom_A(G x L, H)`: the same element of `A(HGL)`.
pub fn adj_tilde(l: &FiniteGroup, alpha: &PAMorphism) -> PAMorphism {
    PAMorphism {
        source: FiniteGroup::product_of(&[alpha.source.clone(), l.clone()]),
        target: alpha.target.clone(),
        value: alpha.value.clone(),
    }
}

/// `Hom_{A_L}(G, H) -> Hom_A(G, H x L)`: `A(Iso^{HLG}_{HGL})(alpha)`.
pub fn adj_hat(a: &dyn GreenFunctor, l: &FiniteGroup, alpha: &PAMorphism) -> Result<PAMorphism> {
    let (h, g) = (&alpha.target, &alpha.source);
    let value = a.push(&factor_map(&[h.clone(), g.clone(), l.clone()], &[0, 2, 1]), &alpha.value)?;
    Ok(PAMorphism {
        source: g.clone(),
        target: FiniteGroup::product_of(&[h.clone(), l.clone()]),
        value,
    })
}

/// An A-module presented as a functor: `M(G) = A(G x X)`, optionally cut
/// down by an idempotent `e` of `A(1)` to `e A(G x X)`.
pub struct Module<'a> {
    pub functor: &'a dyn GreenFunctor,
    pub x: FiniteGroup,
    pub idempotent: Option<BurnsideElement>,
}

impl<'a> Module<'a> {
    pub fn regular(functor: &'a dyn GreenFunctor) -> Self {
        Module {
            functor,
            x: FiniteGroup::trivial(),
            idempotent: None,
        }
    }

    pub fn representable(functor: &'a dyn GreenFunctor, x: &FiniteGroup) -> Self {
        Module {
            functor,
            x: x.clone(),
            idempotent: None,
        }
    }

    pub fn block(functor: &'a dyn GreenFunctor, e: BurnsideElement) -> Self {
        Module {
            functor,
            x: FiniteGroup::trivial(),
            idempotent: Some(e),
        }
    }

    fn with_x(&self, g: &FiniteGroup) -> FiniteGroup {
        FiniteGroup::product_of(&[g.clone(), self.x.clone()])
    }

    /// Spanning set of `M(G)` (a basis when no idempotent is present).
    pub fn spanning(&self, g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
        let gx = self.with_x(g);
        let basis = self.functor.basis(&gx)?;
        match &self.idempotent {
            None => Ok(basis),
            Some(e) => basis.iter().map(|b| self.functor.unit_action(&gx, e, b)).collect(),
        }
    }

    pub fn contains(&self, g: &FiniteGroup, m: &BurnsideElement) -> Result<bool> {
        let gx = self.with_x(g);
        if !self.functor.contains(&gx, m)? {
            return Ok(false);
        }
        match &self.idempotent {
            None => Ok(true),
            Some(e) => Ok(self.functor.unit_action(&gx, e, m)? == *m),
        }
    }
}

/// `M(H x oviz(G) x X)(alpha x m)` for `alpha : G -> H` and `m` in `M(G)`.
pub fn module_action(module: &Module<'_>, alpha: &PAMorphism, m: &BurnsideElement) -> Result<BurnsideElement> {
    let a = module.functor;
    let (h, g, x) = (&alpha.target, &alpha.source, &module.x);
    if !module.contains(g, m)? {
        return Err(Error::mismatch(format!("module element is not in M({g})")));
    }
    let caps = a.caps();
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    let gx = FiniteGroup::product_of(&[g.clone(), x.clone()]);
    let am = a.cross(&hg, &alpha.value, &gx, m)?;
    let contraction = cross(&cross(&identity(h), &oviz(g, caps)?, caps)?, &identity(x), caps)?;
    a.act_element(&contraction, &am)
}
