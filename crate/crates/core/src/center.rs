//! Commutants and centers relative to a finite family of groups: commutation
//! tests, commutant subspaces, center candidates and their naturality check,
//! the center product and the maps iota and pi.

use serde::Serialize;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::green::{lambda, pa_compose, pa_identity, rho, GreenFunctor, PAMorphism};
use crate::groups::{cyclic, factor_map, klein_four, Caps, FiniteGroup, SubKey};
use crate::linalg::{kernel, SparseVec};

/// The finite family of groups that stands in for the class of all groups
/// in commutant and center checks.
#[derive(Debug, Clone)]
pub struct GroupFamily {
    groups: Vec<FiniteGroup>,
    pub caps: Caps,
}

impl GroupFamily {
    /// Rejects families without the trivial group and entries that share
    /// order and element-order census (treated as isomorphic).
    pub fn new(groups: Vec<FiniteGroup>, caps: Caps) -> Result<Self> {
        if !groups.iter().any(|g| g.is_trivial()) {
            return Err(Error::Invalid("group family must contain the trivial group".into()));
        }
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[..i] {
                if a.order() == b.order() && a.order_census() == b.order_census() {
                    return Err(Error::Invalid(format!("{a} and {b} look isomorphic")));
                }
            }
        }
        Ok(GroupFamily { groups, caps })
    }

    /// `{1, C2, C3, V4}`.
    pub fn standard(caps: Caps) -> Self {
        Self::new(vec![FiniteGroup::trivial(), cyclic(2), cyclic(3), klein_four()], caps).expect("standard family")
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn names(&self) -> Vec<String> {
        self.groups.iter().map(|g| g.name().to_string()).collect()
    }
}

/// A family `t_G` in `A(G x L x G)`, one component per family group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCandidate {
    pub shift: FiniteGroup,
    pub components: Vec<(FiniteGroup, BurnsideElement)>,
}

impl CenterCandidate {
    pub fn component(&self, g: &FiniteGroup) -> Result<&BurnsideElement> {
        self.components
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, t)| t)
            .ok_or_else(|| Error::Invalid(format!("candidate has no component at {g}")))
    }

    /// `t_G` as the morphism `L x G -> G`.
    fn as_right_factor(&self, g: &FiniteGroup) -> Result<PAMorphism> {
        Ok(PAMorphism {
            source: FiniteGroup::product_of(&[self.shift.clone(), g.clone()]),
            target: g.clone(),
            value: self.component(g)?.clone(),
        })
    }

    /// `t_G` as the morphism `G -> G x L`.
    fn as_left_factor(&self, g: &FiniteGroup) -> Result<PAMorphism> {
        Ok(PAMorphism {
            source: g.clone(),
            target: FiniteGroup::product_of(&[g.clone(), self.shift.clone()]),
            value: self.component(g)?.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "G")]
    pub g: String,
    pub basis_index: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutantReport {
    pub subject: String,
    pub family: Vec<String>,
    pub checks: Vec<Check>,
    pub verdict: bool,
}

impl CommutantReport {
    fn new(subject: String, family: &GroupFamily, checks: Vec<Check>) -> Self {
        let verdict = checks.iter().all(|c| c.ok);
        CommutantReport {
            subject,
            family: family.names(),
            checks,
            verdict,
        }
    }
}

/// `a x b = A(Iso^{G x H}_{H x G})(b x a)`.
pub fn commutes(
    a: &dyn GreenFunctor,
    g: &FiniteGroup,
    x: &BurnsideElement,
    h: &FiniteGroup,
    y: &BurnsideElement,
) -> Result<bool> {
    Ok(a.cross(g, x, h, y)? == swapped(a, h, y, g, x)?)
}

/// `A(Iso^{G x H}_{H x G})(y x x)` for `y` in `A(H)`, `x` in `A(G)`.
fn swapped(a: &dyn GreenFunctor, h: &FiniteGroup, y: &BurnsideElement, g: &FiniteGroup, x: &BurnsideElement) -> Result<BurnsideElement> {
    a.push(&factor_map(&[h.clone(), g.clone()], &[1, 0]), &a.cross(h, y, g, x)?)
}

/// Commutation of `x` with every basis element of `A(H)`, `H` in the family.
pub fn commutant_report(a: &dyn GreenFunctor, g: &FiniteGroup, x: &BurnsideElement, family: &GroupFamily) -> Result<CommutantReport> {
    let mut checks = Vec::new();
    for h in family.groups() {
        for (i, y) in a.basis(h)?.iter().enumerate() {
            checks.push(Check {
                h: h.name().to_string(),
                g: g.name().to_string(),
                basis_index: i,
                ok: commutes(a, g, x, h, y)?,
            });
        }
    }
    Ok(CommutantReport::new(format!("{x}"), family, checks))
}

/// Basis of `{x in A(G) : x commutes with A(H) for all H in the family}`.
pub fn commutant_subspace(a: &dyn GreenFunctor, g: &FiniteGroup, family: &GroupFamily) -> Result<Vec<BurnsideElement>> {
    let basis = a.basis(g)?;
    let mut defects: Vec<SparseVec<(usize, usize, SubKey)>> = vec![SparseVec::new(); basis.len()];
    for (hi, h) in family.groups().iter().enumerate() {
        for (j, y) in a.basis(h)?.iter().enumerate() {
            for (i, x) in basis.iter().enumerate() {
                let d = a.cross(g, x, h, y)?.sub(&swapped(a, h, y, g, x)?)?;
                for (k, c) in d.terms() {
                    defects[i].insert((hi, j, k.clone()), c.clone());
                }
            }
        }
    }
    let carrier = a.carrier(g);
    let mut out = Vec::new();
    for relation in kernel(&defects) {
        let mut v = BurnsideElement::zero(&carrier);
        for (c, x) in relation.iter().zip(&basis) {
            v.axpy(c, x)?;
        }
        out.push(v);
    }
    Ok(out)
}

/// The candidate `t_G = identity of G`, with trivial shift.
pub fn identity_candidate(a: &dyn GreenFunctor, family: &GroupFamily) -> Result<CenterCandidate> {
    let components = family
        .groups()
        .iter()
        .map(|g| Ok((g.clone(), pa_identity(a, g)?.value)))
        .collect::<Result<_>>()?;
    Ok(CenterCandidate {
        shift: FiniteGroup::trivial(),
        components,
    })
}

/// Naturality `alpha o_G t_G = t_H o_H alpha` against every basis morphism
/// `alpha : G -> H`, for all `G`, `H` in the family.
pub fn is_center_element(a: &dyn GreenFunctor, cand: &CenterCandidate, family: &GroupFamily) -> Result<CommutantReport> {
    let mut checks = Vec::new();
    for g in family.groups() {
        let tg = cand.as_right_factor(g)?;
        for h in family.groups() {
            let th = cand.as_left_factor(h)?;
            for (i, alpha) in PAMorphism::basis(a, g, h)?.iter().enumerate() {
                let lhs = pa_compose(a, alpha, &tg)?;
                let rhs = pa_compose(a, &th, alpha)?;
                checks.push(Check {
                    h: h.name().to_string(),
                    g: g.name().to_string(),
                    basis_index: i,
                    ok: lhs.value == rhs.value,
                });
            }
        }
    }
    Ok(CommutantReport::new(
        format!("center candidate with shift {}", cand.shift),
        family,
        checks,
    ))
}

/// `(t x s)_G = t_G o s_G` in `A(G x L x K x G)`.
pub fn center_product(a: &dyn GreenFunctor, t: &CenterCandidate, s: &CenterCandidate, family: &GroupFamily) -> Result<CenterCandidate> {
    let components = family
        .groups()
        .iter()
        .map(|g| {
            let composite = pa_compose(a, &t.as_left_factor(g)?, &s.as_right_factor(g)?)?;
            Ok((g.clone(), composite.value))
        })
        .collect::<Result<_>>()?;
    Ok(CenterCandidate {
        shift: FiniteGroup::product_of(&[t.shift.clone(), s.shift.clone()]),
        components,
    })
}

/// `t_G = A(Ind_{KG}^{GKG} Inf_K^{KG})(alpha)` for `alpha` in the commutant of `A(K)`.
pub fn iota(a: &dyn GreenFunctor, k: &FiniteGroup, alpha: &BurnsideElement, family: &GroupFamily) -> Result<CenterCandidate> {
    if !commutant_report(a, k, alpha, family)?.verdict {
        return Err(Error::NotInCommutant);
    }
    let components = family
        .groups()
        .iter()
        .map(|g| {
            let factors = [k.clone(), g.clone()];
            let inflated = a.pull(&factor_map(&factors, &[0]), alpha)?;
            Ok((g.clone(), a.push(&factor_map(&factors, &[1, 0, 1]), &inflated)?))
        })
        .collect::<Result<_>>()?;
    Ok(CenterCandidate {
        shift: k.clone(),
        components,
    })
}

/// The component at the trivial group.
pub fn pi(cand: &CenterCandidate) -> Result<BurnsideElement> {
    cand.component(&FiniteGroup::trivial()).cloned()
}

/// Both sides of the square `(alpha x L) o (G x beta)` and
/// `(H x beta) o (alpha x K)` for `alpha : G -> H` and `beta : K -> L`.
pub fn square_sides(a: &dyn GreenFunctor, alpha: &PAMorphism, beta: &PAMorphism) -> Result<(PAMorphism, PAMorphism)> {
    let (g, h) = (&alpha.source, &alpha.target);
    let (k, l) = (&beta.source, &beta.target);
    let lhs = pa_compose(a, &rho(a, l, alpha)?, &lambda(a, g, beta)?)?;
    let rhs = pa_compose(a, &lambda(a, h, beta)?, &rho(a, k, alpha)?)?;
    Ok((lhs, rhs))
}

pub fn square_commutes(a: &dyn GreenFunctor, alpha: &PAMorphism, beta: &PAMorphism) -> Result<bool> {
    let (lhs, rhs) = square_sides(a, alpha, beta)?;
    Ok(lhs.value == rhs.value)
}

/// The two reorderings `A(Iso^{HLGK}_{HGLK})(alpha x beta)` and
/// `A(Iso^{HLGK}_{LKHG})(beta x alpha)` that the square sides equal.
pub fn square_targets(a: &dyn GreenFunctor, alpha: &PAMorphism, beta: &PAMorphism) -> Result<(BurnsideElement, BurnsideElement)> {
    let (g, h) = (&alpha.source, &alpha.target);
    let (k, l) = (&beta.source, &beta.target);
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    let lk = FiniteGroup::product_of(&[l.clone(), k.clone()]);
    let ab = a.cross(&hg, &alpha.value, &lk, &beta.value)?;
    let first = a.push(&factor_map(&[h.clone(), g.clone(), l.clone(), k.clone()], &[0, 2, 1, 3]), &ab)?;
    let ba = a.cross(&lk, &beta.value, &hg, &alpha.value)?;
    let second = a.push(&factor_map(&[l.clone(), k.clone(), h.clone(), g.clone()], &[2, 0, 3, 1]), &ba)?;
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::Burnside;

    #[test]
    fn family_validation() {
        let caps = Caps::default();
        assert!(GroupFamily::new(vec![cyclic(2)], caps).is_err());
        let c2c2 = FiniteGroup::product_of(&[cyclic(2), cyclic(2)]);
        assert!(GroupFamily::new(vec![FiniteGroup::trivial(), klein_four(), c2c2], caps).is_err());
        assert!(GroupFamily::new(vec![FiniteGroup::trivial(), klein_four(), cyclic(4)], caps).is_ok());
    }

    #[test]
    fn burnside_is_commutative() {
        let a = Burnside::new(Caps::default());
        let fam = GroupFamily::standard(Caps::default());
        for g in fam.groups() {
            assert_eq!(commutant_subspace(&a, g, &fam).unwrap().len(), a.basis(g).unwrap().len());
        }
    }

    #[test]
    fn zeroed_component_breaks_naturality() {
        let a = Burnside::new(Caps::default());
        let caps = Caps::default();
        let fam = GroupFamily::new(vec![FiniteGroup::trivial(), cyclic(2)], caps).unwrap();
        let c2 = cyclic(2);
        let x = a.basis(&c2).unwrap()[0].clone();
        let mut t = iota(&a, &c2, &x, &fam).unwrap();
        assert!(is_center_element(&a, &t, &fam).unwrap().verdict);
        let carrier = t.components[1].1.group().clone();
        t.components[1].1 = BurnsideElement::zero(&carrier);
        assert!(!is_center_element(&a, &t, &fam).unwrap().verdict);
    }
}
