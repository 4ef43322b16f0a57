//! Idempotent block decompositions at evaluation level: validation of
//! orthogonal idempotent families of `A(1)`, block images `e M(G)`, the
//! direct-sum check, and the predicted blocks of the shifted Burnside functor.

use serde::Serialize;

use crate::burnside::{idempotents, BurnsideElement};
use crate::error::{Error, Result};
use crate::green::{Block, DynGreen, Module};
use crate::groups::{second_projection, Caps, FiniteGroup, Subgroup, SubKey};
use crate::linalg::{intersection_dim, kernel, rank, Echelon, SparseVec};
use crate::rational::{format_q, Q};

/// Idempotents of `A(1)` meant to be pairwise orthogonal and to sum to the unit.
#[derive(Clone)]
pub struct IdempotentFamily {
    pub functor: DynGreen,
    pub elements: Vec<BurnsideElement>,
    pub labels: Vec<String>,
}

impl IdempotentFamily {
    pub fn new(functor: DynGreen, elements: Vec<BurnsideElement>, labels: Vec<String>) -> Result<Self> {
        if elements.len() != labels.len() {
            return Err(Error::Invalid("one label per idempotent".into()));
        }
        Ok(IdempotentFamily {
            functor,
            elements,
            labels,
        })
    }

    /// `{unit}`.
    pub fn unit(functor: DynGreen) -> Self {
        let e = functor.unit();
        IdempotentFamily {
            functor,
            elements: vec![e],
            labels: vec!["unit".into()],
        }
    }

    /// The primitive idempotents `e_K^H` of `QB(H)` lying in `A(1)`, for a
    /// functor whose value at the trivial group sits in `QB(H)`: the Burnside
    /// functor for `H = 1`, its shift by `H`, or a block of that shift.
    pub fn burnside(functor: DynGreen, h: &FiniteGroup, caps: &Caps) -> Result<Self> {
        if functor.carrier(&FiniteGroup::trivial()) != *h {
            return Err(Error::mismatch(format!("{} does not take the value QB({h}) at 1", functor.name())));
        }
        let one = FiniteGroup::trivial();
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        for (k, e) in idempotents(h, caps)? {
            if functor.contains(&one, &e)? {
                labels.push(idempotent_label(&k));
                elements.push(e);
            }
        }
        Ok(IdempotentFamily {
            functor,
            elements,
            labels,
        })
    }
}

pub fn idempotent_label(k: &Subgroup) -> String {
    format!("e{:?}", k.members())
}

/// Outcome of the exact family checks; the failures name the condition and
/// the indices involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyValidation {
    pub ok: bool,
    pub failures: Vec<String>,
}

pub fn validate_family(fam: &IdempotentFamily) -> Result<FamilyValidation> {
    let a = &fam.functor;
    let one = FiniteGroup::trivial();
    let mut failures = Vec::new();
    for (i, e) in fam.elements.iter().enumerate() {
        if !a.contains(&one, e)? {
            failures.push(format!("{} does not lie in A(1)", fam.labels[i]));
        }
    }
    if !failures.is_empty() {
        return Ok(FamilyValidation { ok: false, failures });
    }
    for (i, e) in fam.elements.iter().enumerate() {
        for (j, f) in fam.elements.iter().enumerate().skip(i) {
            let p = a.dot(&one, e, f)?;
            if i == j && p != *e {
                failures.push(format!("{} is not idempotent", fam.labels[i]));
            } else if i != j && !p.is_zero() {
                failures.push(format!("{} and {} are not orthogonal", fam.labels[i], fam.labels[j]));
            }
        }
    }
    let mut sum = a.zero(&one);
    for e in &fam.elements {
        sum = sum.add(e)?;
    }
    if sum != a.unit() {
        failures.push("the idempotents do not sum to the unit".into());
    }
    Ok(FamilyValidation {
        ok: failures.is_empty(),
        failures,
    })
}

fn require_valid(fam: &IdempotentFamily) -> Result<()> {
    let v = validate_family(fam)?;
    match v.failures.first() {
        None => Ok(()),
        Some(f) => Err(Error::FamilyInvalid(f.clone())),
    }
}

/// Echelon basis of the image of `m -> e x m` on `M(G)`.
pub fn apply_block(e: &BurnsideElement, module: &Module<'_>, g: &FiniteGroup) -> Result<Vec<BurnsideElement>> {
    let a = module.functor;
    let gx = FiniteGroup::product_of(&[g.clone(), module.x.clone()]);
    let mut ech = Echelon::new();
    for m in module.spanning(g)? {
        ech.insert(a.unit_action(&gx, e, &m)?.vector().clone());
    }
    let carrier = a.carrier(&gx);
    Ok(ech
        .into_rows()
        .into_iter()
        .map(|r| BurnsideElement::from_vector(&carrier, r))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub label: String,
    pub dim: usize,
    /// Coordinates over the published basis of `A(G x X)`.
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDecomposition {
    pub group: String,
    pub dim: usize,
    pub blocks: Vec<BlockReport>,
    pub sum_ok: bool,
    pub independent_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub functor: String,
    pub module: String,
    pub groups: Vec<GroupDecomposition>,
    pub verdict: bool,
}

impl DecompositionReport {
    pub fn dims(&self, group: &str) -> Option<Vec<usize>> {
        self.groups
            .iter()
            .find(|g| g.group == group)
            .map(|g| g.blocks.iter().map(|b| b.dim).collect())
    }
}

/// Coordinates of `v` over `basis`, which must be linearly independent.
fn coordinates(basis: &[BurnsideElement], v: &BurnsideElement) -> Result<Vec<Q>> {
    let mut vecs: Vec<SparseVec<SubKey>> = basis.iter().map(|b| b.vector().clone()).collect();
    vecs.push(v.vector().clone());
    let n = basis.len();
    let rel = kernel(&vecs)
        .into_iter()
        .find(|r| r[n] != Q::from_integer(0.into()))
        .ok_or_else(|| Error::Invalid("vector outside the published span".into()))?;
    let scale = -rel[n].clone();
    Ok(rel[..n].iter().map(|c| c / &scale).collect())
}

/// Checks `M(G) = sum_i e_i M(G)` as an internal direct sum at every group.
pub fn decompose(module: &Module<'_>, fam: &IdempotentFamily, groups: &[FiniteGroup]) -> Result<DecompositionReport> {
    let a = module.functor;
    if a.name() != fam.functor.name() {
        return Err(Error::mismatch(format!(
            "family for {} applied to a module over {}",
            fam.functor.name(),
            a.name()
        )));
    }
    require_valid(fam)?;
    let mut out = Vec::new();
    for g in groups {
        let gx = FiniteGroup::product_of(&[g.clone(), module.x.clone()]);
        let published = a.basis(&gx)?;
        let whole: Vec<_> = module.spanning(g)?.iter().map(|m| m.vector().clone()).collect();
        let dim = rank(&whole);
        let mut blocks = Vec::new();
        let mut spans: Vec<Vec<SparseVec<SubKey>>> = Vec::new();
        for (e, label) in fam.elements.iter().zip(&fam.labels) {
            let basis = apply_block(e, module, g)?;
            let coords = basis
                .iter()
                .map(|b| Ok(coordinates(&published, b)?.iter().map(format_q).collect()))
                .collect::<Result<Vec<Vec<String>>>>()?;
            spans.push(basis.iter().map(|b| b.vector().clone()).collect());
            blocks.push(BlockReport {
                label: label.clone(),
                dim: basis.len(),
                basis: coords,
            });
        }
        let all: Vec<_> = spans.iter().flatten().cloned().collect();
        let sum_ok = blocks.iter().map(|b| b.dim).sum::<usize>() == dim && rank(&all) == dim;
        let mut independent_ok = true;
        for i in 0..spans.len() {
            for j in i + 1..spans.len() {
                independent_ok &= intersection_dim(&spans[i], &spans[j]) == 0;
            }
        }
        out.push(GroupDecomposition {
            group: g.name().to_string(),
            dim,
            blocks,
            sum_ok,
            independent_ok,
        });
    }
    let verdict = out.iter().all(|g| g.sum_ok && g.independent_ok);
    Ok(DecompositionReport {
        functor: a.name(),
        module: module_name(module),
        groups: out,
        verdict,
    })
}

fn module_name(module: &Module<'_>) -> String {
    let base = if module.x.is_trivial() {
        "regular".to_string()
    } else {
        format!("representable:{}", module.x)
    };
    match &module.idempotent {
        None => base,
        Some(e) => format!("{base} cut by {e}"),
    }
}

/// The predicted block `{e_L^{G x H} : p_2(L) conjugate to K in H}` of
/// `e_K^H` acting on the Burnside functor shifted by `H`, evaluated at `G`.
pub fn shifted_burnside_block_basis(h: &FiniteGroup, k: &Subgroup, g: &FiniteGroup, caps: &Caps) -> Result<Vec<BurnsideElement>> {
    if k.ambient() != h {
        return Err(Error::mismatch(format!("subgroup of {} given for {h}", k.ambient())));
    }
    let gh = FiniteGroup::product_of(&[g.clone(), h.clone()]);
    let target = k.canonical();
    let mut out = Vec::new();
    for (l, e) in idempotents(&gh, caps)? {
        if second_projection(&l, g, h)?.canonical() == target {
            out.push(e);
        }
    }
    Ok(out)
}

/// The block `e A` for the `index`-th member of a validated family.
pub fn block_green_functor(fam: &IdempotentFamily, index: usize) -> Result<Block> {
    require_valid(fam)?;
    let e = fam
        .elements
        .get(index)
        .ok_or_else(|| Error::FamilyInvalid(format!("no idempotent at index {index}")))?;
    Block::new(fam.functor.clone(), e.clone(), fam.labels[index].clone())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::green::{Block, Burnside, GreenFunctor, Shifted};
    use crate::groups::cyclic;
    use crate::linalg::same_span;

    fn shifted(h: &FiniteGroup) -> DynGreen {
        Arc::new(Shifted::new(Arc::new(Burnside::new(Caps::default())), h.clone()))
    }

    #[test]
    fn family_checks() {
        let c2 = cyclic(2);
        let a = shifted(&c2);
        let fam = IdempotentFamily::burnside(a.clone(), &c2, &Caps::default()).unwrap();
        assert!(validate_family(&fam).unwrap().ok);
        assert!(validate_family(&IdempotentFamily::unit(a.clone())).unwrap().ok);
        let e1 = fam.elements[0].clone();
        let dup = IdempotentFamily::new(a, vec![e1.clone(), e1], vec!["a".into(), "b".into()]).unwrap();
        let v = validate_family(&dup).unwrap();
        assert!(!v.ok);
        assert!(v.failures.iter().any(|f| f.contains("orthogonal")));
        assert!(v.failures.iter().any(|f| f.contains("sum")));
    }

    #[test]
    fn shifted_c2_dims() {
        let c2 = cyclic(2);
        let a = shifted(&c2);
        let fam = IdempotentFamily::burnside(a.clone(), &c2, &Caps::default()).unwrap();
        let m = Module::regular(&*a);
        let r = decompose(&m, &fam, &[FiniteGroup::trivial(), c2.clone()]).unwrap();
        assert!(r.verdict);
        assert_eq!(r.dims("1").unwrap(), vec![1, 1]);
        assert_eq!(r.dims(c2.name()).unwrap(), vec![2, 3]);
    }

    #[test]
    fn a_block_keeps_only_its_own_idempotent() {
        let c2 = cyclic(2);
        let a = shifted(&c2);
        let full = IdempotentFamily::burnside(a.clone(), &c2, &Caps::default()).unwrap();
        let gs = [FiniteGroup::trivial(), c2.clone()];
        let whole = decompose(&Module::regular(&*a), &full, &gs).unwrap();
        for (i, e) in full.elements.iter().enumerate() {
            let block: DynGreen = Arc::new(Block::new(a.clone(), e.clone(), i.to_string()).unwrap());
            let fam = IdempotentFamily::burnside(block.clone(), &c2, &Caps::default()).unwrap();
            assert_eq!(fam.labels, vec![full.labels[i].clone()]);
            let r = decompose(&Module::regular(&*block), &fam, &gs).unwrap();
            assert!(r.verdict);
            for g in &gs {
                assert_eq!(r.dims(g.name()).unwrap(), vec![whole.dims(g.name()).unwrap()[i]]);
            }
        }
    }

    #[test]
    fn prediction_matches_for_c2() {
        let c2 = cyclic(2);
        let caps = Caps::default();
        let a = shifted(&c2);
        let m = Module::regular(&*a);
        for (k, e) in idempotents(&c2, &caps).unwrap() {
            let computed: Vec<_> = apply_block(&e, &m, &c2).unwrap().iter().map(|b| b.vector().clone()).collect();
            let predicted: Vec<_> = shifted_burnside_block_basis(&c2, &k, &c2, &caps)
                .unwrap()
                .iter()
                .map(|b| b.vector().clone())
                .collect();
            assert_eq!(predicted.len(), if k.order() == 1 { 2 } else { 3 });
            assert!(same_span(&computed, &predicted));
        }
    }

    #[test]
    fn blocks_have_expected_dims() {
        let c2 = cyclic(2);
        let a = shifted(&c2);
        let fam = IdempotentFamily::burnside(a, &c2, &Caps::default()).unwrap();
        let b = block_green_functor(&fam, 0).unwrap();
        assert_eq!(b.basis(&c2).unwrap().len(), 2);
        assert_eq!(b.unit(), fam.elements[0]);
    }
}
