use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::group::FiniteGroup;
use super::map::GroupMap;
use super::subgroup::{SubKey, Subgroup};
use super::Caps;
use crate::error::{Error, Result};

/// All subgroups of a group, sorted by (order, member list), with
/// containment, conjugacy classes and Möbius values.
#[derive(Debug)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    index: HashMap<SubKey, usize>,
    /// `below[j]`: indices `i` with `subgroups[i] <= subgroups[j]`.
    below: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    mobius_columns: Vec<OnceLock<HashMap<usize, i64>>>,
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: Subgroup,
    pub members: Vec<usize>,
    pub normalizer: Subgroup,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn memo() -> &'static Mutex<HashMap<FiniteGroup, Arc<SubgroupLattice>>> {
    static MEMO: OnceLock<Mutex<HashMap<FiniteGroup, Arc<SubgroupLattice>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized lattice of `g`.
pub fn subgroup_lattice(g: &FiniteGroup, caps: &Caps) -> Result<Arc<SubgroupLattice>> {
    if g.order() > caps.lattice {
        return Err(Error::LatticeCapExceeded {
            order: g.order(),
            cap: caps.lattice,
        });
    }
    if let Some(l) = memo().lock().expect("lattice memo poisoned").get(g) {
        return Ok(l.clone());
    }
    // Built outside the lock; a racing thread computes the same value.
    let lattice = Arc::new(SubgroupLattice::build(g));
    let mut m = memo().lock().expect("lattice memo poisoned");
    Ok(m.entry(g.clone()).or_insert(lattice).clone())
}

impl SubgroupLattice {
    fn build(g: &FiniteGroup) -> Self {
        // cyclic subgroups with a generator each
        let mut cyclic: Vec<(u32, Subgroup)> = Vec::new();
        let mut seen: HashSet<SubKey> = HashSet::new();
        for x in g.elements() {
            let c = Subgroup::from_generators(g, &[x]);
            if seen.insert(c.key().clone()) {
                cyclic.push((x, c));
            }
        }
        let mut found: Vec<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
        let mut frontier: Vec<(Vec<u32>, Subgroup)> = cyclic.iter().map(|(x, c)| (vec![*x], c.clone())).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (gens, s) in &frontier {
                let bits = s.bitset();
                for (x, _) in &cyclic {
                    if bits.contains(*x) {
                        continue;
                    }
                    let mut more = gens.clone();
                    more.push(*x);
                    let j = Subgroup::closure(g, s.members(), &more);
                    if seen.insert(j.key().clone()) {
                        found.push(j.clone());
                        next.push((more, j));
                    }
                }
            }
            frontier = next;
        }
        found.sort();
        let index: HashMap<SubKey, usize> = found.iter().enumerate().map(|(i, s)| (s.key().clone(), i)).collect();

        let bitsets: Vec<_> = found.iter().map(Subgroup::bitset).collect();
        let below: Vec<Vec<usize>> = (0..found.len())
            .map(|j| {
                (0..=j)
                    .filter(|&i| {
                        found[j].order().is_multiple_of(found[i].order())
                            && found[i].members().iter().all(|&x| bitsets[j].contains(x))
                    })
                    .collect()
            })
            .collect();

        let mut class_of = vec![usize::MAX; found.len()];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        for i in 0..found.len() {
            let rep = found[i].canonical();
            let r = index[rep.key()];
            if class_of[r] == usize::MAX {
                class_of[r] = classes.len();
                classes.push(ConjugacyClass {
                    normalizer: rep.normalizer(),
                    representative: rep,
                    members: Vec::new(),
                });
            }
            class_of[i] = class_of[r];
        }
        // canonical reps are the least members, so classes come out in
        // lattice order already
        for (i, &c) in class_of.iter().enumerate() {
            classes[c].members.push(i);
        }
        let mobius_columns = (0..found.len()).map(|_| OnceLock::new()).collect();
        SubgroupLattice {
            group: g.clone(),
            subgroups: found,
            index,
            below,
            class_of,
            classes,
            mobius_columns,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn index_of(&self, s: &Subgroup) -> Result<usize> {
        if s.ambient() != &self.group {
            return Err(Error::mismatch(format!("subgroup of {} in lattice of {}", s.ambient(), self.group)));
        }
        self.index
            .get(s.key())
            .copied()
            .ok_or_else(|| Error::NotASubgroup(format!("{:?}", s.key())))
    }

    /// Index of the conjugacy class containing `s`.
    pub fn class_index(&self, s: &Subgroup) -> Result<usize> {
        Ok(self.class_of[self.index_of(s)?])
    }

    pub fn class_of_key(&self, key: &SubKey) -> Option<usize> {
        self.index.get(key).map(|&i| self.class_of[i])
    }

    pub fn contains(&self, lower: usize, upper: usize) -> bool {
        self.below[upper].binary_search(&lower).is_ok()
    }

    /// Indices of the subgroups of `subgroups[upper]`.
    pub fn below(&self, upper: usize) -> &[usize] {
        &self.below[upper]
    }

    fn mobius_column(&self, k: usize) -> &HashMap<usize, i64> {
        self.mobius_columns[k].get_or_init(|| {
            let mut col: HashMap<usize, i64> = HashMap::new();
            col.insert(k, 1);
            // below[k] is sorted by lattice order, which refines inclusion
            for &l in self.below[k].iter().rev().skip(1) {
                let s: i64 = self.below[k]
                    .iter()
                    .filter(|&&m| m != l && self.contains(l, m))
                    .map(|m| col[m])
                    .sum();
                col.insert(l, -s);
            }
            col
        })
    }

    pub fn mobius_by_index(&self, l: usize, k: usize) -> Result<i64> {
        if !self.contains(l, k) {
            return Err(Error::NotInInterval);
        }
        Ok(self.mobius_column(k)[&l])
    }

    pub fn mobius(&self, l: &Subgroup, k: &Subgroup) -> Result<i64> {
        self.mobius_by_index(self.index_of(l)?, self.index_of(k)?)
    }
}

pub fn mobius(lattice: &SubgroupLattice, l: &Subgroup, k: &Subgroup) -> Result<i64> {
    lattice.mobius(l, k)
}

pub fn canonical_subgroup_rep(g: &FiniteGroup, s: &Subgroup) -> Result<Subgroup> {
    if s.ambient() != g {
        return Err(Error::NotASubgroup(format!("subgroup of {} given for {g}", s.ambient())));
    }
    Ok(s.canonical())
}

/// `G/N` with the canonical projection. Cosets are numbered by their least
/// element, so the identity coset is 0.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupMap)> {
    if n.ambient() != g {
        return Err(Error::mismatch("normal subgroup of another group"));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    if n.is_trivial() {
        return Ok((g.clone(), GroupMap::identity(g)));
    }
    let mut coset = vec![u32::MAX; g.order()];
    let mut reps: Vec<u32> = Vec::new();
    for x in g.elements() {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        for &m in n.members() {
            coset[g.mul(x, m) as usize] = id;
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b) as usize]);
        }
    }
    let labels = reps.iter().map(|&r| format!("{}N", g.label(r))).collect();
    let name = format!("{}/{}", g.name(), n.order());
    let q = FiniteGroup::from_table_with_labels(k, table, name, Some(labels), None)?;
    let proj = GroupMap::new_unchecked(g.clone(), q.clone(), coset);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::{cyclic, klein_four, symmetric};
    use crate::groups::product::diagonal;

    #[test]
    fn lattice_sizes() {
        let caps = Caps::default();
        let s3 = subgroup_lattice(&symmetric(3).unwrap(), &caps).unwrap();
        assert_eq!(s3.subgroups().len(), 6);
        let orders: Vec<usize> = s3.classes().iter().map(|c| c.representative.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let v4 = subgroup_lattice(&klein_four(), &caps).unwrap();
        assert_eq!((v4.subgroups().len(), v4.classes().len()), (5, 5));
        let c2 = subgroup_lattice(&cyclic(2), &caps).unwrap();
        assert_eq!((c2.subgroups().len(), c2.classes().len()), (2, 2));
        let s4 = subgroup_lattice(&symmetric(4).unwrap(), &caps).unwrap();
        assert_eq!((s4.subgroups().len(), s4.classes().len()), (30, 11));
    }

    #[test]
    fn lattice_cap() {
        let caps = Caps {
            lattice: 5,
            ..Caps::default()
        };
        assert_eq!(
            subgroup_lattice(&symmetric(3).unwrap(), &caps).unwrap_err(),
            Error::LatticeCapExceeded { order: 6, cap: 5 }
        );
    }

    #[test]
    fn mobius_values() {
        let caps = Caps::default();
        let v4 = klein_four();
        let lat = subgroup_lattice(&v4, &caps).unwrap();
        let one = Subgroup::trivial(&v4);
        let all = Subgroup::whole(&v4);
        assert_eq!(lat.mobius(&all, &all).unwrap(), 1);
        assert_eq!(lat.mobius(&one, &all).unwrap(), 2);
        assert_eq!(lat.mobius(&all, &one), Err(Error::NotInInterval));
        let c2 = cyclic(2);
        let l2 = subgroup_lattice(&c2, &caps).unwrap();
        assert_eq!(l2.mobius(&Subgroup::trivial(&c2), &Subgroup::whole(&c2)).unwrap(), -1);
        // mu(1, S3) = 3
        let s3 = symmetric(3).unwrap();
        let l3 = subgroup_lattice(&s3, &caps).unwrap();
        assert_eq!(l3.mobius(&Subgroup::trivial(&s3), &Subgroup::whole(&s3)).unwrap(), 3);
    }

    #[test]
    fn quotients() {
        let c4 = cyclic(4);
        let n = Subgroup::from_generators(&c4, &[2]);
        let (q, p) = quotient(&c4, &n).unwrap();
        assert_eq!(q, cyclic(2));
        assert!(p.is_surjective());
        assert_eq!(p.kernel(), n);
        let (same, id) = quotient(&c4, &Subgroup::trivial(&c4)).unwrap();
        assert_eq!(same, c4);
        assert_eq!(id, GroupMap::identity(&c4));
        let c2 = cyclic(2);
        let d = diagonal(&c2, &Caps::default()).unwrap();
        let (q, _) = quotient(d.ambient(), &d).unwrap();
        assert_eq!(q, c2);
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(quotient(&s3, &Subgroup::from_generators(&s3, &[t])).unwrap_err(), Error::NotNormal);
    }
}
