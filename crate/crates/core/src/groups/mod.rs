//! Finite groups as Cayley tables, their subgroups, lattices and maps.

mod group;
mod lattice;
mod map;
mod perm;
mod product;
mod subgroup;

pub use group::FiniteGroup;
pub use lattice::{canonical_subgroup_rep, mobius, quotient, subgroup_lattice, ConjugacyClass, SubgroupLattice};
pub use map::GroupMap;
pub use perm::{builtin, cyclic, group_from_generators, klein_four, symmetric, Perm};
pub use product::{
    diagonal, direct_product, factor_map, first_projection, product_subgroup, second_projection, ProductGroup,
};
pub use subgroup::{Bits, SubKey, Subgroup};

use crate::error::{Error, Result};

/// Size limits. Ambient: largest product group an operation may form;
/// lattice: largest group whose full subgroup lattice is enumerated;
/// closure: largest permutation group generated from a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub ambient: usize,
    pub lattice: usize,
    pub closure: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ambient: 5000,
            lattice: 200,
            closure: 2000,
        }
    }
}

impl Caps {
    pub fn unbounded() -> Self {
        Caps {
            ambient: usize::MAX,
            lattice: usize::MAX,
            closure: usize::MAX,
        }
    }

    pub fn check_ambient(&self, order: usize) -> Result<()> {
        if order > self.ambient {
            return Err(Error::AmbientCapExceeded { order, cap: self.ambient });
        }
        Ok(())
    }
}
