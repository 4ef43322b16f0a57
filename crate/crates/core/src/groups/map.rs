use std::fmt;
use std::sync::Arc;

use super::group::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// A group homomorphism given by its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Arc<[u32]>,
}

impl GroupMap {
    /// Checks that `images` respects products.
    pub fn new(source: FiniteGroup, target: FiniteGroup, images: Vec<u32>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if images.iter().any(|&x| x as usize >= target.order()) {
            return Err(Error::NotAHomomorphism("image outside the target".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                let lhs = images[source.mul(a, b) as usize];
                let rhs = target.mul(images[a as usize], images[b as usize]);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!("fails on ({a}, {b})")));
                }
            }
        }
        Ok(Self::new_unchecked(source, target, images))
    }

    pub(crate) fn new_unchecked(source: FiniteGroup, target: FiniteGroup, images: Vec<u32>) -> Self {
        debug_assert_eq!(images.len(), source.order());
        GroupMap {
            source,
            target,
            images: images.into(),
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), g.elements().collect())
    }

    /// The map to the trivial group.
    pub fn to_trivial(g: &FiniteGroup) -> Self {
        Self::new_unchecked(g.clone(), FiniteGroup::trivial(), vec![0; g.order()])
    }

    /// The map from the trivial group.
    pub fn from_trivial(g: &FiniteGroup) -> Self {
        Self::new_unchecked(FiniteGroup::trivial(), g.clone(), vec![0])
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `other` after `self`.
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if self.target != other.source {
            return Err(Error::mismatch(format!(
                "cannot compose maps {} -> {} and {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let images = self.images.iter().map(|&x| other.apply(x)).collect();
        Ok(Self::new_unchecked(self.source.clone(), other.target.clone(), images))
    }

    /// `self x other : S x S' -> T x T'`.
    pub fn times(&self, other: &GroupMap) -> GroupMap {
        let source = FiniteGroup::product_of(&[self.source.clone(), other.source.clone()]);
        let target = FiniteGroup::product_of(&[self.target.clone(), other.target.clone()]);
        let m = other.source.order();
        let tm = other.target.order() as u32;
        let mut images = Vec::with_capacity(source.order());
        for a in 0..self.source.order() {
            let ia = self.images[a] * tm;
            for b in 0..m {
                images.push(ia + other.images[b]);
            }
        }
        Self::new_unchecked(source, target, images)
    }

    pub fn kernel(&self) -> Subgroup {
        let members = self.source.elements().filter(|&x| self.apply(x) == 0).collect();
        Subgroup::from_sorted_unchecked(self.source.clone(), members)
    }

    pub fn image(&self) -> Subgroup {
        let mut seen = vec![false; self.target.order()];
        for &x in self.images.iter() {
            seen[x as usize] = true;
        }
        let members = (0..self.target.order() as u32).filter(|&x| seen[x as usize]).collect();
        Subgroup::from_sorted_unchecked(self.target.clone(), members)
    }

    pub fn image_of(&self, s: &Subgroup) -> Subgroup {
        let mut m: Vec<u32> = s.members().iter().map(|&x| self.apply(x)).collect();
        m.sort_unstable();
        m.dedup();
        Subgroup::from_sorted_unchecked(self.target.clone(), m)
    }

    pub fn preimage_of(&self, t: &Subgroup) -> Subgroup {
        let bits = t.bitset();
        let members = self.source.elements().filter(|&x| bits.contains(self.apply(x))).collect();
        Subgroup::from_sorted_unchecked(self.source.clone(), members)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<GroupMap> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let mut images = vec![0u32; self.target.order()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Ok(Self::new_unchecked(self.target.clone(), self.source.clone(), images))
    }
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupMap({:?} -> {:?})", self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::{cyclic, symmetric};

    #[test]
    fn rejects_non_homomorphisms() {
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        assert!(GroupMap::new(c3.clone(), c2.clone(), vec![0, 1, 1]).is_err());
        assert!(GroupMap::new(c2.clone(), c3.clone(), vec![0, 1]).is_err());
        assert!(GroupMap::new(c2.clone(), c2.clone(), vec![0, 1]).is_ok());
    }

    #[test]
    fn sign_map_kernel() {
        let s3 = symmetric(3).unwrap();
        let c2 = cyclic(2);
        let images = s3.elements().map(|x| if s3.element_order(x) == 2 { 1 } else { 0 }).collect();
        let sign = GroupMap::new(s3, c2, images).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert!(sign.kernel().is_normal());
        assert!(sign.is_surjective());
        assert!(!sign.is_injective());
        assert_eq!(sign.inverse(), Err(Error::NotBijective));
    }

    #[test]
    fn products_of_maps() {
        let c2 = cyclic(2);
        let id = GroupMap::identity(&c2);
        let sq = id.times(&GroupMap::to_trivial(&c2));
        assert_eq!(sq.source().order(), 4);
        assert_eq!(sq.target(), &c2);
        assert_eq!(sq.images(), &[0, 0, 1, 1]);
    }
}
