use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::group::FiniteGroup;
use super::map::GroupMap;
use crate::error::{Error, Result};

/// Sorted member list of a subgroup, ordered by size first and then
/// lexicographically. This is the total order used for canonical forms and
/// for listing conjugacy classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubKey(pub Arc<[u32]>);

impl SubKey {
    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl Ord for SubKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SubKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

/// Membership bitset over the ambient group's elements.
pub struct Bits(FixedBitSet);

impl Bits {
    pub fn new(n: usize, members: &[u32]) -> Self {
        let mut b = FixedBitSet::with_capacity(n);
        for &x in members {
            b.insert(x as usize);
        }
        Bits(b)
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.0.contains(x as usize)
    }
}

#[derive(Clone)]
pub struct Subgroup {
    ambient: FiniteGroup,
    key: SubKey,
}

impl Subgroup {
    /// Validates closure of an arbitrary member list.
    pub fn new(ambient: FiniteGroup, mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x as usize >= ambient.order()) {
            return Err(Error::NotASubgroup("member outside the ambient group".into()));
        }
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let bits = Bits::new(ambient.order(), &members);
        for &a in &members {
            if !bits.contains(ambient.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !bits.contains(ambient.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(ambient, members))
    }

    pub(crate) fn from_sorted_unchecked(ambient: FiniteGroup, members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            ambient,
            key: SubKey(members.into()),
        }
    }

    pub(crate) fn from_key(ambient: FiniteGroup, key: SubKey) -> Self {
        Subgroup { ambient, key }
    }

    pub fn from_generators(ambient: &FiniteGroup, gens: &[u32]) -> Self {
        Self::closure(ambient, &[0], gens)
    }

    /// Subgroup generated by `seed` (assumed closed) together with `gens`.
    pub(crate) fn closure(ambient: &FiniteGroup, seed: &[u32], gens: &[u32]) -> Self {
        let mut seen = FixedBitSet::with_capacity(ambient.order());
        let mut elems: Vec<u32> = Vec::with_capacity(seed.len() * 2);
        for &x in seed.iter().chain(std::iter::once(&0)) {
            if !seen.put(x as usize) {
                elems.push(x);
            }
        }
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = ambient.mul(x, g);
                if !seen.put(y as usize) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Self::from_sorted_unchecked(ambient.clone(), elems)
    }

    pub fn trivial(ambient: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(ambient.clone(), vec![0])
    }

    pub fn whole(ambient: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(ambient.clone(), ambient.elements().collect())
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn members(&self) -> &[u32] {
        &self.key.0
    }

    pub fn key(&self) -> &SubKey {
        &self.key
    }

    pub fn order(&self) -> usize {
        self.key.0.len()
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.key.0.binary_search(&x).is_ok()
    }

    pub fn bitset(&self) -> Bits {
        Bits::new(self.ambient.order(), &self.key.0)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient
            && other.order().is_multiple_of(self.order())
            && self.members().iter().all(|&x| other.contains(x))
    }

    /// `g S g^-1`.
    pub fn conjugate(&self, g: u32) -> Subgroup {
        let mut m: Vec<u32> = self.members().iter().map(|&x| self.ambient.conj(g, x)).collect();
        m.sort_unstable();
        Self::from_sorted_unchecked(self.ambient.clone(), m)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let bits = other.bitset();
        let m = self.members().iter().copied().filter(|&x| bits.contains(x)).collect();
        Self::from_sorted_unchecked(self.ambient.clone(), m)
    }

    pub fn is_normal(&self) -> bool {
        if self.ambient.is_abelian() {
            return true;
        }
        let bits = self.bitset();
        self.ambient
            .elements()
            .all(|g| self.members().iter().all(|&x| bits.contains(self.ambient.conj(g, x))))
    }

    pub fn normalizer(&self) -> Subgroup {
        if self.ambient.is_abelian() {
            return Subgroup::whole(&self.ambient);
        }
        let bits = self.bitset();
        let m = self
            .ambient
            .elements()
            .filter(|&g| self.members().iter().all(|&x| bits.contains(self.ambient.conj(g, x))))
            .collect();
        Self::from_sorted_unchecked(self.ambient.clone(), m)
    }

    /// The conjugate whose sorted member list is lexicographically least.
    pub fn canonical(&self) -> Subgroup {
        if self.ambient.is_abelian() || self.is_trivial() || self.is_whole() {
            return self.clone();
        }
        let g = &self.ambient;
        let mut visited = FixedBitSet::with_capacity(g.order());
        let mut best: Option<Vec<u32>> = None;
        let mut buf: Vec<u32> = Vec::with_capacity(self.order());
        for x in g.elements() {
            if visited.contains(x as usize) {
                continue;
            }
            // x S x^-1 only depends on the coset xS.
            for &s in self.members() {
                visited.insert(g.mul(x, s) as usize);
            }
            buf.clear();
            buf.extend(self.members().iter().map(|&s| g.conj(x, s)));
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        Self::from_sorted_unchecked(g.clone(), best.expect("nonempty group"))
    }

    /// The subgroup as a group in its own right, with its inclusion map.
    pub fn as_group(&self) -> (FiniteGroup, GroupMap) {
        if self.is_whole() {
            return (self.ambient.clone(), GroupMap::identity(&self.ambient));
        }
        if self.is_trivial() {
            return (FiniteGroup::trivial(), GroupMap::from_trivial(&self.ambient));
        }
        let n = self.order();
        let m = self.members();
        let mut pos = vec![u32::MAX; self.ambient.order()];
        for (i, &x) in m.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in m {
            for &b in m {
                table.push(pos[self.ambient.mul(a, b) as usize]);
            }
        }
        let labels = m.iter().map(|&x| self.ambient.label(x)).collect();
        let name = format!("{}<{}>", self.ambient.name(), n);
        let group = FiniteGroup::from_table_with_labels(n, table, name, Some(labels), None)
            .expect("subgroup table is a group table");
        let incl = GroupMap::new_unchecked(group.clone(), self.ambient.clone(), m.to_vec());
        (group, incl)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.ambient == other.ambient
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}<= {:?}", self.key, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::{cyclic, symmetric};

    #[test]
    fn validation() {
        let s3 = symmetric(3).unwrap();
        assert!(Subgroup::new(s3.clone(), vec![0, 1, 2]).is_err());
        assert!(Subgroup::new(s3.clone(), vec![1]).is_err());
        let t = Subgroup::new(s3.clone(), vec![0]).unwrap();
        assert!(t.is_trivial() && t.is_normal());
    }

    #[test]
    fn canonical_forms_in_s3() {
        let s3 = symmetric(3).unwrap();
        let involutions: Vec<u32> = s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        assert_eq!(involutions.len(), 3);
        let subs: Vec<Subgroup> = involutions.iter().map(|&x| Subgroup::from_generators(&s3, &[x])).collect();
        let least = subs.iter().min().unwrap().clone();
        for s in &subs {
            assert_eq!(s.canonical(), least);
            assert_eq!(s.canonical().canonical(), least);
            assert_eq!(s.normalizer(), *s);
            assert!(!s.is_normal());
        }
        assert_eq!(Subgroup::whole(&s3).canonical(), Subgroup::whole(&s3));
    }

    #[test]
    fn as_group_round_trip() {
        let s3 = symmetric(3).unwrap();
        let rot = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let c3 = Subgroup::from_generators(&s3, &[rot]);
        let (g, incl) = c3.as_group();
        assert_eq!(g, cyclic(3));
        assert_eq!(incl.image(), c3);
    }
}
