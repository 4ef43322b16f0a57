use super::group::FiniteGroup;
use super::map::GroupMap;
use super::subgroup::Subgroup;
use super::Caps;
use crate::error::{Error, Result};

/// `G_1 x ... x G_n` with its coordinate projections and injections.
/// Element `(g_1, ..., g_n)` has index `sum_i g_i * stride_i`, the last
/// coordinate varying fastest.
#[derive(Debug, Clone)]
pub struct ProductGroup {
    pub group: FiniteGroup,
    pub factors: Vec<FiniteGroup>,
    pub projections: Vec<GroupMap>,
    pub injections: Vec<GroupMap>,
}

impl ProductGroup {
    pub fn new(factors: &[FiniteGroup], caps: &Caps) -> Result<Self> {
        let order: usize = factors.iter().map(|f| f.order()).product();
        caps.check_ambient(order)?;
        let group = FiniteGroup::product_of(factors);
        let projections = (0..factors.len()).map(|i| factor_map(factors, &[i])).collect();
        let injections = (0..factors.len())
            .map(|i| {
                let stride: usize = factors[i + 1..].iter().map(|f| f.order()).product();
                let images = factors[i].elements().map(|x| x * stride as u32).collect();
                GroupMap::new_unchecked(factors[i].clone(), group.clone(), images)
            })
            .collect();
        Ok(ProductGroup {
            group,
            factors: factors.to_vec(),
            projections,
            injections,
        })
    }

    pub fn encode(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0u32, |acc, (&c, f)| acc * f.order() as u32 + c)
    }

    pub fn decode(&self, mut x: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            let n = f.order() as u32;
            *slot = x % n;
            x /= n;
        }
        out
    }
}

/// `G x H`, subject to the ambient cap.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<ProductGroup> {
    ProductGroup::new(&[g.clone(), h.clone()], caps)
}

/// The homomorphism `prod_i F_i -> prod_j F_{sel[j]}` copying coordinates,
/// `(x_0, ..., x_n) -> (x_sel[0], x_sel[1], ...)`. Projections, diagonals and
/// coordinate permutations are all of this shape.
pub fn factor_map(factors: &[FiniteGroup], sel: &[usize]) -> GroupMap {
    let source = FiniteGroup::product_of(factors);
    let chosen: Vec<FiniteGroup> = sel.iter().map(|&i| factors[i].clone()).collect();
    let target = FiniteGroup::product_of(&chosen);
    let orders: Vec<u32> = factors.iter().map(|f| f.order() as u32).collect();
    let mut tstride = vec![0u32; sel.len()];
    let mut s = 1u32;
    for j in (0..sel.len()).rev() {
        tstride[j] = s;
        s *= orders[sel[j]];
    }
    // weight[i]: contribution to the target index of one step in source coordinate i
    let mut weight = vec![0u32; factors.len()];
    for (j, &i) in sel.iter().enumerate() {
        weight[i] += tstride[j];
    }
    let n = source.order();
    let mut images = Vec::with_capacity(n);
    let mut digits = vec![0u32; factors.len()];
    let mut cur = 0u32;
    for _ in 0..n {
        images.push(cur);
        for i in (0..factors.len()).rev() {
            digits[i] += 1;
            cur += weight[i];
            if digits[i] < orders[i] {
                break;
            }
            cur -= weight[i] * orders[i];
            digits[i] = 0;
        }
    }
    GroupMap::new_unchecked(source, target, images)
}

/// `Delta(G) <= G x G`.
pub fn diagonal(g: &FiniteGroup, caps: &Caps) -> Result<Subgroup> {
    caps.check_ambient(g.order() * g.order())?;
    let gg = FiniteGroup::product_of(&[g.clone(), g.clone()]);
    let n = g.order() as u32;
    Ok(Subgroup::from_sorted_unchecked(gg, g.elements().map(|x| x * n + x).collect()))
}

fn check_product(l: &Subgroup, left: &FiniteGroup, right: &FiniteGroup) -> Result<()> {
    let expected = FiniteGroup::product_of(&[left.clone(), right.clone()]);
    if *l.ambient() != expected {
        return Err(Error::mismatch(format!(
            "subgroup of {} is not a subgroup of {left} x {right}",
            l.ambient()
        )));
    }
    Ok(())
}

/// Image of `L <= G x H` in `G`.
pub fn first_projection(l: &Subgroup, left: &FiniteGroup, right: &FiniteGroup) -> Result<Subgroup> {
    check_product(l, left, right)?;
    let n = right.order() as u32;
    let mut m: Vec<u32> = l.members().iter().map(|&x| x / n).collect();
    m.dedup();
    Ok(Subgroup::from_sorted_unchecked(left.clone(), m))
}

/// Image of `L <= G x H` in `H`.
pub fn second_projection(l: &Subgroup, left: &FiniteGroup, right: &FiniteGroup) -> Result<Subgroup> {
    check_product(l, left, right)?;
    let n = right.order() as u32;
    let mut m: Vec<u32> = l.members().iter().map(|&x| x % n).collect();
    m.sort_unstable();
    m.dedup();
    Ok(Subgroup::from_sorted_unchecked(right.clone(), m))
}

/// `K x L <= G x H` (both canonical implies the product is canonical).
pub fn product_subgroup(k: &Subgroup, l: &Subgroup) -> Subgroup {
    let ambient = FiniteGroup::product_of(&[k.ambient().clone(), l.ambient().clone()]);
    let n = l.ambient().order() as u32;
    let mut m = Vec::with_capacity(k.order() * l.order());
    for &a in k.members() {
        for &b in l.members() {
            m.push(a * n + b);
        }
    }
    Subgroup::from_sorted_unchecked(ambient, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::{cyclic, symmetric};

    #[test]
    fn klein_from_two_involutions() {
        let c2 = cyclic(2);
        let p = direct_product(&c2, &c2, &Caps::default()).unwrap();
        assert_eq!(p.group.order(), 4);
        let involutions = p.group.elements().filter(|&x| p.group.element_order(x) == 2).count();
        assert_eq!(involutions, 3);
    }

    #[test]
    fn c2_times_c3_is_cyclic() {
        let p = direct_product(&cyclic(2), &cyclic(3), &Caps::default()).unwrap();
        assert!(p.group.elements().any(|x| p.group.element_order(x) == 6));
    }

    #[test]
    fn projections_split_injections() {
        let p = direct_product(&symmetric(3).unwrap(), &cyclic(4), &Caps::default()).unwrap();
        for i in 0..2 {
            let round = p.injections[i].then(&p.projections[i]).unwrap();
            assert_eq!(round, GroupMap::identity(&p.factors[i]));
        }
        for x in p.group.elements() {
            assert_eq!(p.encode(&p.decode(x)), x);
        }
        let one = direct_product(&FiniteGroup::trivial(), &cyclic(4), &Caps::default()).unwrap();
        assert_eq!(one.group, cyclic(4));
    }

    #[test]
    fn ambient_cap() {
        let caps = Caps {
            ambient: 10,
            ..Caps::default()
        };
        let c4 = cyclic(4);
        assert_eq!(
            direct_product(&c4, &c4, &caps).unwrap_err(),
            Error::AmbientCapExceeded { order: 16, cap: 10 }
        );
    }

    #[test]
    fn factor_maps_are_homomorphisms() {
        let f = [cyclic(2), symmetric(3).unwrap(), cyclic(3)];
        for sel in [vec![2, 0], vec![1, 1], vec![0, 2, 1, 2], vec![]] {
            let m = factor_map(&f, &sel);
            GroupMap::new(m.source().clone(), m.target().clone(), m.images().to_vec()).unwrap();
        }
        let swap = factor_map(&f[..2], &[1, 0]);
        assert_eq!(swap.apply(6 + 4), 4 * 2 + 1);
    }

    #[test]
    fn diagonal_and_projections() {
        let s3 = symmetric(3).unwrap();
        let d = diagonal(&s3, &Caps::default()).unwrap();
        assert_eq!(d.order(), 6);
        assert!(second_projection(&d, &s3, &s3).unwrap().is_whole());
        let d1 = diagonal(&FiniteGroup::trivial(), &Caps::default()).unwrap();
        assert!(d1.is_trivial());
        let c3 = cyclic(3);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let sc = FiniteGroup::product_of(&[s3.clone(), c3.clone()]);
        let l = Subgroup::from_generators(&sc, &[t * 3]);
        assert!(second_projection(&l, &s3, &c3).unwrap().is_trivial());
        assert_eq!(first_projection(&l, &s3, &c3).unwrap().order(), 2);
    }
}
