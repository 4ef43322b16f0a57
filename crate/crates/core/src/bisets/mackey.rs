use fixedbitset::FixedBitSet;

use super::BisetElement;
use crate::error::{Error, Result};
use crate::groups::{Caps, FiniteGroup, SubKey, Subgroup};

/// `beta o alpha` by the double coset formula
/// `[(HxG)/L] o [(GxK)/M] = sum_{x in p2(L)\G/p1(M)} [(HxK)/(L * (x,1)M)]`
/// with `L * M = {(h,k) : (h,g) in L, (g,k) in M for some g}`.
pub fn mackey_compose(beta: &BisetElement, alpha: &BisetElement, caps: &Caps) -> Result<BisetElement> {
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
    caps.check_ambient(beta.ambient().order())?;
    caps.check_ambient(alpha.ambient().order())?;
    let mut out = BisetElement::zero(h, k);
    let hk = out.ambient().clone();
    for (kl, cl) in beta.keys() {
        for (km, cm) in alpha.keys() {
            for key in star_terms(g, k, kl, km) {
                let s = Subgroup::from_sorted_unchecked(hk.clone(), key).canonical();
                out.inner.add_term(s.key().clone(), cl * cm);
            }
        }
    }
    Ok(out)
}

fn star_terms(g: &FiniteGroup, k: &FiniteGroup, l: &SubKey, m: &SubKey) -> Vec<Vec<u32>> {
    let (gn, kn) = (g.order() as u32, k.order() as u32);
    // fibres: l_over[x] = {h : (h,x) in L}, m_over[x] = {k : (x,k) in M}
    let mut l_over: Vec<Vec<u32>> = vec![Vec::new(); g.order()];
    for &z in l.members() {
        l_over[(z % gn) as usize].push(z / gn);
    }
    let mut m_over: Vec<Vec<u32>> = vec![Vec::new(); g.order()];
    for &z in m.members() {
        m_over[(z / kn) as usize].push(z % kn);
    }
    let p2l: Vec<u32> = (0..gn).filter(|&x| !l_over[x as usize].is_empty()).collect();
    let p1m: Vec<u32> = (0..gn).filter(|&x| !m_over[x as usize].is_empty()).collect();
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        for &a in &p2l {
            let ax = g.mul(a, x);
            for &b in &p1m {
                seen.insert(g.mul(ax, b) as usize);
            }
        }
        // (x,1)M = {(x y x^-1, k) : (y,k) in M}
        let mut star = Vec::new();
        for &y in &p1m {
            let c = g.conj(x, y) as usize;
            for &hh in &l_over[c] {
                for &kk in &m_over[y as usize] {
                    star.push(hh * kn + kk);
                }
            }
        }
        star.sort_unstable();
        star.dedup();
        out.push(star);
    }
    out
}
