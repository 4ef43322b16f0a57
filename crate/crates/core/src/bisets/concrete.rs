use fixedbitset::FixedBitSet;
use num_traits::One;

use super::BisetElement;
use crate::error::{Error, Result};
use crate::groups::{Caps, FiniteGroup, SubKey, Subgroup};
use crate::rational::Q;

/// A finite (H,G)-biset given by explicit action tables:
/// `left[h * n + x] = h.x` and `right[g * n + x] = x.g`.
#[derive(Debug, Clone)]
pub struct ConcreteBiset {
    pub left_group: FiniteGroup,
    pub right_group: FiniteGroup,
    pub points: usize,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl ConcreteBiset {
    pub fn empty(h: &FiniteGroup, g: &FiniteGroup) -> Self {
        ConcreteBiset {
            left_group: h.clone(),
            right_group: g.clone(),
            points: 0,
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    #[inline]
    pub fn act_left(&self, h: u32, x: u32) -> u32 {
        self.left[h as usize * self.points + x as usize]
    }

    #[inline]
    pub fn act_right(&self, x: u32, g: u32) -> u32 {
        self.right[g as usize * self.points + x as usize]
    }

    /// Checks both actions and that they commute.
    pub fn validate(&self) -> Result<()> {
        let (h, g, n) = (&self.left_group, &self.right_group, self.points as u32);
        let bad = |m: &str| Err(Error::Invalid(format!("concrete biset: {m}")));
        if self.left.len() != h.order() * self.points || self.right.len() != g.order() * self.points {
            return bad("action table sizes");
        }
        for x in 0..n {
            if self.act_left(0, x) != x || self.act_right(x, 0) != x {
                return bad("identity does not act trivially");
            }
            for a in h.elements() {
                for b in h.elements() {
                    if self.act_left(h.mul(a, b), x) != self.act_left(a, self.act_left(b, x)) {
                        return bad("left action is not an action");
                    }
                }
                for c in g.elements() {
                    if self.act_right(self.act_left(a, x), c) != self.act_left(a, self.act_right(x, c)) {
                        return bad("actions do not commute");
                    }
                }
            }
            for a in g.elements() {
                for b in g.elements() {
                    if self.act_right(x, g.mul(a, b)) != self.act_right(self.act_right(x, a), b) {
                        return bad("right action is not an action");
                    }
                }
            }
        }
        Ok(())
    }

    /// Disjoint union.
    pub fn union(&self, other: &ConcreteBiset) -> Result<ConcreteBiset> {
        if self.left_group != other.left_group || self.right_group != other.right_group {
            return Err(Error::mismatch("union of bisets over different groups"));
        }
        let (n, m) = (self.points, other.points);
        let mut left = Vec::with_capacity(self.left.len() + other.left.len());
        for h in 0..self.left_group.order() {
            left.extend_from_slice(&self.left[h * n..(h + 1) * n]);
            left.extend(other.left[h * m..(h + 1) * m].iter().map(|&x| x + n as u32));
        }
        let mut right = Vec::with_capacity(self.right.len() + other.right.len());
        for g in 0..self.right_group.order() {
            right.extend_from_slice(&self.right[g * n..(g + 1) * n]);
            right.extend(other.right[g * m..(g + 1) * m].iter().map(|&x| x + n as u32));
        }
        Ok(ConcreteBiset {
            left_group: self.left_group.clone(),
            right_group: self.right_group.clone(),
            points: n + m,
            left,
            right,
        })
    }
}

/// The coset space `(H x G)/L` with `h.(a,b)L.g = (ha, g^-1 b)L`.
pub fn realize_concrete(h: &FiniteGroup, g: &FiniteGroup, stab: &Subgroup, caps: &Caps) -> Result<ConcreteBiset> {
    let hg = FiniteGroup::product_of(&[h.clone(), g.clone()]);
    caps.check_ambient(hg.order())?;
    if stab.ambient() != &hg {
        return Err(Error::NotASubgroup(format!("subgroup of {} is not in {h} x {g}", stab.ambient())));
    }
    let mut coset = vec![u32::MAX; hg.order()];
    let mut reps = Vec::new();
    for z in hg.elements() {
        if coset[z as usize] != u32::MAX {
            continue;
        }
        for &l in stab.members() {
            coset[hg.mul(z, l) as usize] = reps.len() as u32;
        }
        reps.push(z);
    }
    let n = reps.len();
    let gn = g.order() as u32;
    let mut left = Vec::with_capacity(h.order() * n);
    for a in h.elements() {
        left.extend(reps.iter().map(|&z| coset[hg.mul(a * gn, z) as usize]));
    }
    let mut right = Vec::with_capacity(g.order() * n);
    for b in g.elements() {
        let bi = g.inv(b);
        right.extend(reps.iter().map(|&z| coset[hg.mul(bi, z) as usize]));
    }
    Ok(ConcreteBiset {
        left_group: h.clone(),
        right_group: g.clone(),
        points: n,
        left,
        right,
    })
}

/// Orbit decomposition under `(h,g).x = h.x.g^-1`.
pub fn decompose_concrete(x: &ConcreteBiset) -> BisetElement {
    let (h, g) = (&x.left_group, &x.right_group);
    let mut out = BisetElement::zero(h, g);
    let hg = out.ambient().clone();
    let gn = g.order() as u32;
    let mut seen = FixedBitSet::with_capacity(x.points);
    for p in 0..x.points as u32 {
        if seen.contains(p as usize) {
            continue;
        }
        let mut stack = vec![p];
        seen.insert(p as usize);
        while let Some(y) = stack.pop() {
            for a in h.elements() {
                let z = x.act_left(a, y);
                if !seen.put(z as usize) {
                    stack.push(z);
                }
            }
            for b in g.elements() {
                let z = x.act_right(y, b);
                if !seen.put(z as usize) {
                    stack.push(z);
                }
            }
        }
        let mut stab = Vec::new();
        for a in h.elements() {
            let ap = x.act_left(a, p);
            for b in g.elements() {
                if x.act_right(p, b) == ap {
                    stab.push(a * gn + b);
                }
            }
        }
        let s = Subgroup::from_sorted_unchecked(hg.clone(), stab).canonical();
        out.inner.add_term(s.key().clone(), Q::one());
    }
    out
}

/// `U x_G V` for an (H,G)-biset U and a (G,K)-biset V, as an (H,K)-biset.
pub fn tensor(u: &ConcreteBiset, v: &ConcreteBiset, caps: &Caps) -> Result<ConcreteBiset> {
    if u.right_group != v.left_group {
        return Err(Error::mismatch(format!(
            "cannot tensor over {} and {}",
            u.right_group, v.left_group
        )));
    }
    let g = &u.right_group;
    let (nu, nv) = (u.points, v.points);
    caps.check_ambient(nu * nv)?;
    let mut parent: Vec<u32> = (0..(nu * nv) as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    for a in g.elements() {
        for x in 0..nu as u32 {
            let xa = u.act_right(x, a) as usize * nv;
            for y in 0..nv as u32 {
                let p = find(&mut parent, (xa + y as usize) as u32);
                let q = find(&mut parent, x * nv as u32 + v.act_left(a, y));
                if p != q {
                    parent[p.max(q) as usize] = p.min(q);
                }
            }
        }
    }
    let mut class = vec![u32::MAX; nu * nv];
    let mut reps = Vec::new();
    for i in 0..(nu * nv) as u32 {
        let r = find(&mut parent, i);
        if class[r as usize] == u32::MAX {
            class[r as usize] = reps.len() as u32;
            reps.push(i);
        }
        class[i as usize] = class[r as usize];
    }
    let n = reps.len();
    let (h, k) = (&u.left_group, &v.right_group);
    let mut left = Vec::with_capacity(h.order() * n);
    for a in h.elements() {
        left.extend(reps.iter().map(|&i| {
            let (x, y) = (i as usize / nv, i as usize % nv);
            class[u.act_left(a, x as u32) as usize * nv + y]
        }));
    }
    let mut right = Vec::with_capacity(k.order() * n);
    for b in k.elements() {
        right.extend(reps.iter().map(|&i| {
            let (x, y) = (i as usize / nv, i as usize % nv);
            class[x * nv + v.act_right(y as u32, b) as usize]
        }));
    }
    Ok(ConcreteBiset {
        left_group: h.clone(),
        right_group: k.clone(),
        points: n,
        left,
        right,
    })
}

fn realize_key(h: &FiniteGroup, g: &FiniteGroup, ambient: &FiniteGroup, key: &SubKey, caps: &Caps) -> Result<ConcreteBiset> {
    realize_concrete(h, g, &Subgroup::from_key(ambient.clone(), key.clone()), caps)
}

/// `beta o alpha` for beta in B(H,G), alpha in B(G,K), computed on sets:
/// realize, tensor over G, decompose into orbits.
pub fn compose(beta: &BisetElement, alpha: &BisetElement, caps: &Caps) -> Result<BisetElement> {
    if beta.right() != alpha.left() {
        return Err(Error::mismatch(format!(
            "B({}, {}) o B({}, {})",
            beta.left(),
            beta.right(),
            alpha.left(),
            alpha.right()
        )));
    }
    let (h, g, k) = (beta.left(), beta.right(), alpha.right());
    caps.check_ambient(h.order() * k.order())?;
    let mut out = BisetElement::zero(h, k);
    for (kb, cb) in beta.keys() {
        let u = realize_key(h, g, beta.ambient(), kb, caps)?;
        for (ka, ca) in alpha.keys() {
            let v = realize_key(g, k, alpha.ambient(), ka, caps)?;
            let w = decompose_concrete(&tensor(&u, &v, caps)?);
            out.inner.axpy(&(cb * ca), &w.inner)?;
        }
    }
    Ok(out)
}
