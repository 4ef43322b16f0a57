//! Rational combinations of finite bisets: elementary bisets, composition by
//! two independent engines, cross products and the butterfly factorization
//! used to act on biset functors.

mod butterfly;
mod concrete;
mod mackey;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

pub use butterfly::{butterfly, BisetOp};
pub use concrete::{compose, decompose_concrete, realize_concrete, tensor, ConcreteBiset};
pub use mackey::mackey_compose;

use crate::burnside::{BurnsideElement, TermJson};
use crate::error::{Error, Result};
use crate::groups::{factor_map, product_subgroup, quotient, Caps, FiniteGroup, GroupMap, SubKey, Subgroup};
use crate::rational::{format_q, parse_q, Q};

/// An element of QB(H,G), stored as an element of QB(H x G) for the action
/// `(h,g).x = h x g^-1`. The transitive biset with stabilizer `L` satisfies
/// `h.x = x.g` exactly for `(h,g)` in `L`.
#[derive(Clone, PartialEq, Eq)]
pub struct BisetElement {
    left: FiniteGroup,
    right: FiniteGroup,
    inner: BurnsideElement,
}

/// One basis biset `[(H x G)/L]` with `L` canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitiveBiset {
    pub left: FiniteGroup,
    pub right: FiniteGroup,
    pub stab: Subgroup,
}

impl BisetElement {
    pub fn zero(left: &FiniteGroup, right: &FiniteGroup) -> Self {
        let hg = FiniteGroup::product_of(&[left.clone(), right.clone()]);
        BisetElement {
            left: left.clone(),
            right: right.clone(),
            inner: BurnsideElement::zero(&hg),
        }
    }

    /// Reinterprets an element of QB(H x G) as an (H,G)-biset combination.
    pub fn from_burnside(left: &FiniteGroup, right: &FiniteGroup, x: BurnsideElement) -> Result<Self> {
        let hg = FiniteGroup::product_of(&[left.clone(), right.clone()]);
        if x.group() != &hg {
            return Err(Error::mismatch(format!("QB({}) is not QB({left} x {right})", x.group())));
        }
        Ok(BisetElement {
            left: left.clone(),
            right: right.clone(),
            inner: x,
        })
    }

    pub fn left(&self) -> &FiniteGroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteGroup {
        &self.right
    }

    pub fn ambient(&self) -> &FiniteGroup {
        self.inner.group()
    }

    pub fn as_burnside(&self) -> &BurnsideElement {
        &self.inner
    }

    pub fn into_burnside(self) -> BurnsideElement {
        self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (TransitiveBiset, &Q)> + '_ {
        self.inner.terms().iter().map(move |(k, c)| {
            (
                TransitiveBiset {
                    left: self.left.clone(),
                    right: self.right.clone(),
                    stab: Subgroup::from_key(self.ambient().clone(), k.clone()),
                },
                c,
            )
        })
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = (&SubKey, &Q)> {
        self.inner.terms().iter()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::mismatch(format!(
                "B({}, {}) and B({}, {})",
                self.left, self.right, other.left, other.right
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(BisetElement {
            inner: self.inner.add(&other.inner)?,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(BisetElement {
            inner: self.inner.sub(&other.inner)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Q) -> Self {
        BisetElement {
            inner: self.inner.scale(c),
            ..self.clone()
        }
    }
}

/// `[(H x G)/L]` with coefficient 1.
pub fn transitive(h: &FiniteGroup, g: &FiniteGroup, l: &Subgroup) -> Result<BisetElement> {
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    if l.ambient() != &hg {
        return Err(Error::NotASubgroup(format!("subgroup of {} is not in {h} x {g}", l.ambient())));
    }
    BisetElement::from_burnside(h, g, BurnsideElement::transitive(l))
}

/// The (K,G)-biset G for `f : K -> G`; stabilizer `{(k, f(k))}`.
pub fn pull_biset(f: &GroupMap) -> BisetElement {
    let (k, g) = (f.source(), f.target());
    let n = g.order() as u32;
    let mut m: Vec<u32> = k.elements().map(|x| x * n + f.apply(x)).collect();
    m.sort_unstable();
    let l = Subgroup::from_sorted_unchecked(FiniteGroup::product_of(&[k.clone(), g.clone()]), m);
    transitive(k, g, &l).expect("graph lies in the product")
}

/// The (G,K)-biset G for `f : K -> G`; stabilizer `{(f(k), k)}`.
pub fn push_biset(f: &GroupMap) -> BisetElement {
    let (k, g) = (f.source(), f.target());
    let n = k.order() as u32;
    let mut m: Vec<u32> = k.elements().map(|x| f.apply(x) * n + x).collect();
    m.sort_unstable();
    let l = Subgroup::from_sorted_unchecked(FiniteGroup::product_of(&[g.clone(), k.clone()]), m);
    transitive(g, k, &l).expect("graph lies in the product")
}

/// `Ind_S^G` in B(G, S), with `S` realized as a group of its own.
pub fn ind(g: &FiniteGroup, s: &Subgroup) -> Result<BisetElement> {
    if s.ambient() != g {
        return Err(Error::NotASubgroup(format!("subgroup of {} given for {g}", s.ambient())));
    }
    Ok(push_biset(&s.as_group().1))
}

/// `Res^G_S` in B(S, G).
pub fn res(s: &Subgroup, g: &FiniteGroup) -> Result<BisetElement> {
    if s.ambient() != g {
        return Err(Error::NotASubgroup(format!("subgroup of {} given for {g}", s.ambient())));
    }
    Ok(pull_biset(&s.as_group().1))
}

/// `Inf_{G/N}^G` in B(G, G/N).
pub fn inf(g: &FiniteGroup, n: &Subgroup) -> Result<BisetElement> {
    let (_, proj) = quotient(g, n)?;
    Ok(pull_biset(&proj))
}

/// `Def^G_{G/N}` in B(G/N, G).
pub fn def(g: &FiniteGroup, n: &Subgroup) -> Result<BisetElement> {
    let (_, proj) = quotient(g, n)?;
    Ok(push_biset(&proj))
}

/// `Iso(f)` in B(target, source), stabilizer the graph of `f`.
pub fn iso(f: &GroupMap) -> Result<BisetElement> {
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    Ok(push_biset(f))
}

/// The identity biset `[(G x G)/Delta(G)]`.
pub fn identity(g: &FiniteGroup) -> BisetElement {
    push_biset(&GroupMap::identity(g))
}

/// `beta x delta` in B(H x H', G x G').
pub fn cross(beta: &BisetElement, delta: &BisetElement, caps: &Caps) -> Result<BisetElement> {
    let (h, g, h2, g2) = (&beta.left, &beta.right, &delta.left, &delta.right);
    caps.check_ambient(beta.ambient().order() * delta.ambient().order())?;
    let reorder = factor_map(&[h.clone(), g.clone(), h2.clone(), g2.clone()], &[0, 2, 1, 3]);
    let left = FiniteGroup::product_of(&[h.clone(), h2.clone()]);
    let right = FiniteGroup::product_of(&[g.clone(), g2.clone()]);
    let mut out = BisetElement::zero(&left, &right);
    for (kb, cb) in beta.keys() {
        let sb = Subgroup::from_key(beta.ambient().clone(), kb.clone());
        for (kd, cd) in delta.keys() {
            let sd = Subgroup::from_key(delta.ambient().clone(), kd.clone());
            let l = reorder.image_of(&product_subgroup(&sb, &sd));
            out.inner.add_term(l.canonical().key().clone(), cb * cd);
        }
    }
    Ok(out)
}

/// `Def^{Delta(G)}_1 o Res^{G x G}_{Delta(G)}` in B(1, G x G).
pub fn oviz(g: &FiniteGroup, caps: &Caps) -> Result<BisetElement> {
    let gg = FiniteGroup::product_of(&[g.clone(), g.clone()]);
    caps.check_ambient(gg.order())?;
    let diag = factor_map(std::slice::from_ref(g), &[0, 0]);
    let restrict = pull_biset(&diag);
    let deflate = push_biset(&GroupMap::to_trivial(g));
    compose(&deflate, &restrict, caps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisetJson {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermJson>,
}

impl BisetElement {
    pub fn to_json(&self) -> BisetJson {
        BisetJson {
            left: self.left.name().to_string(),
            right: self.right.name().to_string(),
            terms: self
                .keys()
                .map(|(k, c)| TermJson {
                    stab_members: k.members().to_vec(),
                    coeff: format_q(c),
                })
                .collect(),
        }
    }

    pub fn from_json(left: &FiniteGroup, right: &FiniteGroup, json: &BisetJson) -> Result<Self> {
        let mut out = BisetElement::zero(left, right);
        for t in &json.terms {
            let s = Subgroup::new(out.ambient().clone(), t.stab_members.clone())?;
            out.inner.add_term(s.canonical().key().clone(), parse_q(&t.coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for BisetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, {}): ", self.left, self.right)?;
        let parts: Vec<String> = self
            .keys()
            .map(|(k, c)| {
                if c.is_one() {
                    format!("{k:?}")
                } else {
                    format!("{}*{k:?}", format_q(c))
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
