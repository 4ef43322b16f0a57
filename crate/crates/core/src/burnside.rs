//! Rational Burnside rings: elements, pull-back and push-forward along group
//! maps, cross products, marks and the primitive idempotents.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{factor_map, product_subgroup, subgroup_lattice, Caps, FiniteGroup, GroupMap, SubKey, Subgroup};
use crate::linalg::SparseVec;
use crate::rational::{format_q, parse_q, q, Q};

/// An element of QB(G), keyed by canonical subgroup representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    group: FiniteGroup,
    terms: BTreeMap<SubKey, Q>,
}

impl BurnsideElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        BurnsideElement {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `[G/S]`.
    pub fn transitive(s: &Subgroup) -> Self {
        let c = s.canonical();
        Self::from_canonical(c.ambient(), c.key().clone(), Q::one())
    }

    /// `[G/G]`.
    pub fn unit(group: &FiniteGroup) -> Self {
        Self::transitive(&Subgroup::whole(group))
    }

    pub(crate) fn from_canonical(group: &FiniteGroup, key: SubKey, coeff: Q) -> Self {
        let mut e = Self::zero(group);
        e.add_term(key, coeff);
        e
    }

    /// Sum of `coeff * [G/S]` over arbitrary (not necessarily canonical) subgroups.
    pub fn from_terms<'a>(group: &FiniteGroup, terms: impl IntoIterator<Item = (&'a Subgroup, Q)>) -> Result<Self> {
        let mut e = Self::zero(group);
        for (s, c) in terms {
            if s.ambient() != group {
                return Err(Error::mismatch(format!("subgroup of {} in QB({group})", s.ambient())));
            }
            e.add_term(s.canonical().key().clone(), c);
        }
        Ok(e)
    }

    /// Builds from a coordinate vector whose keys are canonical already.
    pub fn from_vector(group: &FiniteGroup, v: SparseVec<SubKey>) -> Self {
        BurnsideElement {
            group: group.clone(),
            terms: v.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, key: SubKey, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<SubKey, Q> {
        &self.terms
    }

    pub fn vector(&self) -> &SparseVec<SubKey> {
        &self.terms
    }

    pub fn coeff(&self, s: &Subgroup) -> Q {
        self.terms.get(s.canonical().key()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::mismatch(format!("QB({}) and QB({})", self.group, other.group)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.axpy(&Q::one(), other)?;
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut r = self.clone();
        r.axpy(&-Q::one(), other)?;
        Ok(r)
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &Self) -> Result<()> {
        self.same_group(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), c * x);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        BurnsideElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// Pull-back along `f : K -> G`: the action of the (K,G)-biset G.
    /// Res, Inf and inverse Iso are special cases.
    pub fn pull(&self, f: &GroupMap) -> Result<Self> {
        if f.target() != &self.group {
            return Err(Error::mismatch(format!(
                "pull along a map into {} applied to QB({})",
                f.target(),
                self.group
            )));
        }
        let mut out = Self::zero(f.source());
        for (key, c) in &self.terms {
            for (s, mult) in pull_transitive(f, key) {
                out.add_term(s, c * q(mult as i64));
            }
        }
        Ok(out)
    }

    /// Push-forward along `f : K -> G`: the action of the (G,K)-biset G.
    /// Ind, Def and Iso are special cases.
    pub fn push(&self, f: &GroupMap) -> Result<Self> {
        if f.source() != &self.group {
            return Err(Error::mismatch(format!(
                "push along a map from {} applied to QB({})",
                f.source(),
                self.group
            )));
        }
        let mut out = Self::zero(f.target());
        for (key, c) in &self.terms {
            let s = Subgroup::from_key(self.group.clone(), key.clone());
            out.add_term(f.image_of(&s).canonical().key().clone(), c.clone());
        }
        Ok(out)
    }
}

/// Decomposes the K-set `Res_f(G/T)` into transitive pieces, returning
/// canonical stabilizers with multiplicities.
fn pull_transitive(f: &GroupMap, t: &SubKey) -> Vec<(SubKey, usize)> {
    let g = f.target();
    let k = f.source();
    let tbits = crate::groups::Bits::new(g.order(), t.members());
    if g.is_abelian() {
        // single stabilizer f^-1(T), normal in K; the number of orbits is |G : f(K)T|
        let s: Vec<u32> = k.elements().filter(|&x| tbits.contains(f.apply(x))).collect();
        let count = g.order() * s.len() / (k.order() * t.order());
        return vec![(SubKey(s.into()), count)];
    }
    let image = f.image();
    let mut visited = FixedBitSet::with_capacity(g.order());
    let mut counts: BTreeMap<SubKey, usize> = BTreeMap::new();
    for x in g.elements() {
        if visited.contains(x as usize) {
            continue;
        }
        for &a in image.members() {
            let ax = g.mul(a, x);
            for &y in t.members() {
                visited.insert(g.mul(ax, y) as usize);
            }
        }
        let mut conj: Vec<u32> = t.members().iter().map(|&y| g.conj(x, y)).collect();
        conj.sort_unstable();
        let cbits = crate::groups::Bits::new(g.order(), &conj);
        let s: Vec<u32> = k.elements().filter(|&z| cbits.contains(f.apply(z))).collect();
        let s = Subgroup::from_sorted_unchecked(k.clone(), s).canonical();
        *counts.entry(s.key().clone()).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// `a x b` in QB(G x H): `[G/K] x [H/L] = [(G x H)/(K x L)]`.
pub fn cross_burnside(a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
    let gh = FiniteGroup::product_of(&[a.group.clone(), b.group.clone()]);
    let mut out = BurnsideElement::zero(&gh);
    for (ka, ca) in &a.terms {
        let sa = Subgroup::from_key(a.group.clone(), ka.clone());
        for (kb, cb) in &b.terms {
            let sb = Subgroup::from_key(b.group.clone(), kb.clone());
            out.add_term(product_subgroup(&sa, &sb).key().clone(), ca * cb);
        }
    }
    out
}

/// Ring product, computed as the restriction of `a x b` to the diagonal.
pub fn mult(a: &BurnsideElement, b: &BurnsideElement, caps: &Caps) -> Result<BurnsideElement> {
    a.same_group(b)?;
    let g = &a.group;
    caps.check_ambient(g.order() * g.order())?;
    cross_burnside(a, b).pull(&factor_map(std::slice::from_ref(g), &[0, 0]))
}

/// Inflation along the projection `G -> G/N`.
pub fn inflate(a: &BurnsideElement, projection: &GroupMap) -> Result<BurnsideElement> {
    if !projection.is_surjective() {
        return Err(Error::Invalid("inflation needs a surjective map".into()));
    }
    a.pull(projection)
}

/// Marks `m_J` for every class `J`, in lattice class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkVector {
    pub group: FiniteGroup,
    pub values: Vec<Q>,
}

/// `|{gK in G/K : J <= gKg^-1}|`.
fn fixed_points(g: &FiniteGroup, j: &Subgroup, k: &[u32]) -> usize {
    let kb = crate::groups::Bits::new(g.order(), k);
    let fixing = g
        .elements()
        .filter(|&x| {
            let xi = g.inv(x);
            j.members().iter().all(|&y| kb.contains(g.conj(xi, y)))
        })
        .count();
    fixing / k.len()
}

/// Square table `t[J][K] = m_J([G/K])` over the lattice classes.
pub fn table_of_marks(g: &FiniteGroup, caps: &Caps) -> Result<Vec<Vec<Q>>> {
    let lat = subgroup_lattice(g, caps)?;
    let reps: Vec<&Subgroup> = lat.classes().iter().map(|c| &c.representative).collect();
    Ok(reps
        .iter()
        .map(|j| reps.iter().map(|k| q(fixed_points(g, j, k.members()) as i64)).collect())
        .collect())
}

pub fn marks(a: &BurnsideElement, caps: &Caps) -> Result<MarkVector> {
    let lat = subgroup_lattice(&a.group, caps)?;
    let values = lat
        .classes()
        .iter()
        .map(|c| {
            a.terms
                .iter()
                .map(|(k, x)| x * q(fixed_points(&a.group, &c.representative, k.members()) as i64))
                .sum()
        })
        .collect();
    Ok(MarkVector {
        group: a.group.clone(),
        values,
    })
}

/// Primitive idempotents `e_K = 1/|N(K)| sum_{L <= K} |L| mu(L,K) [G/L]`,
/// one per conjugacy class, in lattice class order.
pub fn idempotents(g: &FiniteGroup, caps: &Caps) -> Result<Vec<(Subgroup, BurnsideElement)>> {
    let lat = subgroup_lattice(g, caps)?;
    let mut out = Vec::with_capacity(lat.classes().len());
    for class in lat.classes() {
        let k = lat.index_of(&class.representative)?;
        let mut e = BurnsideElement::zero(g);
        for &l in lat.below(k) {
            let mu = lat.mobius_by_index(l, k)?;
            let sub = &lat.subgroups()[l];
            e.add_term(sub.canonical().key().clone(), q(sub.order() as i64 * mu));
        }
        let e = e.scale(&Q::new(1.into(), (class.normalizer.order() as i64).into()));
        out.push((class.representative.clone(), e));
    }
    Ok(out)
}

/// The lattice-ordered basis `[G/K]` of QB(G).
pub fn burnside_basis(g: &FiniteGroup, caps: &Caps) -> Result<Vec<BurnsideElement>> {
    let lat = subgroup_lattice(g, caps)?;
    Ok(lat
        .classes()
        .iter()
        .map(|c| BurnsideElement::transitive(&c.representative))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub stab_members: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideJson {
    pub group: String,
    pub terms: Vec<TermJson>,
}

impl BurnsideElement {
    pub fn to_json(&self) -> BurnsideJson {
        BurnsideJson {
            group: self.group.name().to_string(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson {
                    stab_members: k.members().to_vec(),
                    coeff: format_q(c),
                })
                .collect(),
        }
    }

    /// Parses terms against a known group; stabilizers are validated and canonicalized.
    pub fn from_json(group: &FiniteGroup, json: &BurnsideJson) -> Result<Self> {
        let mut e = Self::zero(group);
        for t in &json.terms {
            let s = Subgroup::new(group.clone(), t.stab_members.clone())?;
            e.add_term(s.canonical().key().clone(), parse_q(&t.coeff)?);
        }
        Ok(e)
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 in QB({})", self.group);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{}[{}/{:?}]", format_q(c), self.group, k))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
