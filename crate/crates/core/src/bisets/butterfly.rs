use super::{pull_biset, push_biset, BisetElement};
use crate::error::Result;
use crate::groups::{quotient, FiniteGroup, GroupMap, SubKey, Subgroup};

/// A biset acting on biset functors, from the right-hand group to the
/// left-hand group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BisetOp {
    /// `f : K -> G` acting from G to K (Res, Inf, inverse Iso).
    Pull(GroupMap),
    /// `f : K -> G` acting from K to G (Ind, Def, Iso).
    Push(GroupMap),
    Element(BisetElement),
}

impl BisetOp {
    /// The group the operation consumes.
    pub fn input(&self) -> &FiniteGroup {
        match self {
            BisetOp::Pull(f) => f.target(),
            BisetOp::Push(f) => f.source(),
            BisetOp::Element(b) => b.right(),
        }
    }

    /// The group the operation produces.
    pub fn output(&self) -> &FiniteGroup {
        match self {
            BisetOp::Pull(f) => f.source(),
            BisetOp::Push(f) => f.target(),
            BisetOp::Element(b) => b.left(),
        }
    }

    pub fn to_element(&self) -> BisetElement {
        match self {
            BisetOp::Pull(f) => pull_biset(f),
            BisetOp::Push(f) => push_biset(f),
            BisetOp::Element(b) => b.clone(),
        }
    }
}

/// Factors `[(H x G)/L]` as `Ind_P^H Inf_{P/K1}^P Iso Def^Q_{Q/K2} Res^G_Q`,
/// where `P`, `Q` are the projections of `L` and `K1`, `K2` its kernels.
/// Returned in order of application, Def and Iso fused into one push.
pub fn butterfly(h: &FiniteGroup, g: &FiniteGroup, stab: &SubKey) -> Result<Vec<BisetOp>> {
    let gn = g.order() as u32;
    let mut p: Vec<u32> = stab.members().iter().map(|&z| z / gn).collect();
    p.dedup();
    let mut qm: Vec<u32> = stab.members().iter().map(|&z| z % gn).collect();
    qm.sort_unstable();
    qm.dedup();
    let (pg, incl_p) = Subgroup::from_sorted_unchecked(h.clone(), p).as_group();
    let (qg, incl_q) = Subgroup::from_sorted_unchecked(g.clone(), qm).as_group();
    let position = |incl: &GroupMap, n: usize| {
        let mut pos = vec![u32::MAX; n];
        for (i, &x) in incl.images().iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        pos
    };
    let pos_p = position(&incl_p, h.order());
    let pos_q = position(&incl_q, g.order());
    let k1: Vec<u32> = stab
        .members()
        .iter()
        .filter(|&&z| z % gn == 0)
        .map(|&z| pos_p[(z / gn) as usize])
        .collect();
    let k1 = Subgroup::new(pg.clone(), k1)?;
    let (r, pi_p) = quotient(&pg, &k1)?;
    let mut phi = vec![0u32; qg.order()];
    for &z in stab.members() {
        phi[pos_q[(z % gn) as usize] as usize] = pi_p.apply(pos_p[(z / gn) as usize]);
    }
    let phi = GroupMap::new_unchecked(qg, r, phi);
    Ok(vec![
        BisetOp::Pull(incl_q),
        BisetOp::Push(phi),
        BisetOp::Pull(pi_p),
        BisetOp::Push(incl_p),
    ])
}
