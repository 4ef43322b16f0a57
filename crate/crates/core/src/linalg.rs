//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sparse maps from an ordered key type to nonzero rationals.
//! Echelon forms are fully reduced, the pivot of a row is its smallest key,
//! and rows come out sorted by pivot, so every result is reproducible.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

pub type SparseVec<K> = BTreeMap<K, Q>;

/// Adds `c * row` into `v`, dropping entries that cancel.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Q, row: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in row {
        let entry = v.entry(k.clone()).or_insert_with(Q::zero);
        *entry += c * x;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

/// Incrementally maintained reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I>(vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<K>>,
        K: 'a,
    {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the current rows.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v
                    .range(c.clone()..)
                    .map(|(k, _)| k)
                    .find(|k| *k > c && self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(pivot) = next else { break };
            let c = -v[&pivot].clone();
            axpy(&mut v, &c, &self.rows[&pivot]);
            cursor = Some(pivot);
        }
        v
    }

    /// Inserts `v`; returns true when it increased the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut v = self.reduce(v);
        let Some((pivot, lead)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for x in v.values_mut() {
                *x *= &inv;
            }
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &(-c), &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseVec<K>> {
        self.rows.into_values().collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    Echelon::from_vectors(vectors).rank()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Main(K),
    Tag(usize),
}

/// Basis of the relation space `{c : sum_i c_i v_i = 0}`, as dense
/// coefficient vectors of length `vectors.len()`.
pub fn kernel<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> Vec<Vec<Q>> {
    let mut e: Echelon<Aug<K>> = Echelon::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut row: SparseVec<Aug<K>> = v.iter().map(|(k, x)| (Aug::Main(k.clone()), x.clone())).collect();
        row.insert(Aug::Tag(i), Q::one());
        e.insert(row);
    }
    e.rows()
        .filter(|row| matches!(row.keys().next(), Some(Aug::Tag(_))))
        .map(|row| {
            let mut dense = vec![Q::zero(); vectors.len()];
            for (k, x) in row {
                if let Aug::Tag(i) = k {
                    dense[*i] = x.clone();
                }
            }
            dense
        })
        .collect()
}

/// Dimension of the intersection of two spans.
pub fn intersection_dim<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> usize {
    let ra = rank(a);
    let rb = rank(b);
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    ra + rb - rank(&all)
}

pub fn same_span<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> bool {
    let ea = Echelon::from_vectors(a);
    let eb = Echelon::from_vectors(b);
    ea.rank() == eb.rank() && ea.rows().eq(eb.rows())
}
