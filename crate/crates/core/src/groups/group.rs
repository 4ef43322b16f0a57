use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A finite group with elements `0..order`, element `0` being the identity.
///
/// Groups built from explicit tables ("atoms") keep a dense Cayley table and
/// are interned by table content, so two atoms are equal exactly when their
/// tables coincide. Direct products are stored as the ordered list of their
/// nontrivial atomic factors and multiply coordinatewise; elements of a
/// product are indexed lexicographically, so `(G x H) x K`, `G x (H x K)`
/// and `G x 1` collapse to the same group value with the same indexing.
#[derive(Clone)]
pub struct FiniteGroup(pub(crate) Arc<Inner>);

pub(crate) struct Inner {
    pub(crate) id: u64,
    pub(crate) name: String,
    pub(crate) order: usize,
    pub(crate) repr: Repr,
    pub(crate) inverses: Vec<u32>,
    pub(crate) abelian: bool,
}

pub(crate) enum Repr {
    Atom {
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        provenance: Option<String>,
    },
    Product {
        factors: Vec<FiniteGroup>,
        strides: Vec<usize>,
    },
}

type InternTable = HashMap<u64, Vec<FiniteGroup>>;

fn interner() -> &'static Mutex<InternTable> {
    static INTERNER: OnceLock<Mutex<InternTable>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(HashMap::new()))
}

fn product_cache() -> &'static Mutex<HashMap<Vec<u64>, FiniteGroup>> {
    static PRODUCTS: OnceLock<Mutex<HashMap<Vec<u64>, FiniteGroup>>> = OnceLock::new();
    PRODUCTS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn next_id() -> u64 {
    use std::sync::atomic::{AtomicU64, Ordering};
    static NEXT: AtomicU64 = AtomicU64::new(1);
    NEXT.fetch_add(1, Ordering::Relaxed)
}

fn table_fingerprint(order: usize, table: &[u32]) -> u64 {
    // FNV-1a; only used to bucket the interner.
    let mut h: u64 = 0xcbf29ce484222325 ^ order as u64;
    for &x in table {
        h ^= x as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

impl FiniteGroup {
    /// Builds (or retrieves) the atom with the given Cayley table.
    ///
    /// `table[a * order + b]` is the index of `a * b`. The identity is moved to
    /// index 0 if needed.
    pub fn from_table(order: usize, table: Vec<u32>, name: impl Into<String>) -> Result<Self> {
        Self::from_table_with_labels(order, table, name, None, None)
    }

    pub fn from_table_with_labels(
        order: usize,
        mut table: Vec<u32>,
        name: impl Into<String>,
        mut labels: Option<Vec<String>>,
        provenance: Option<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for a in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for b in 0..order {
                let r = table[a * order + b] as usize;
                let c = table[b * order + a] as usize;
                if seen_row[r] || seen_col[c] {
                    return Err(Error::InvalidTable("not a latin square".into()));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        if identity != 0 {
            table = relabel_swap(order, &table, 0, identity);
            if let Some(l) = labels.as_mut() {
                l.swap(0, identity);
            }
        }
        check_associative(order, &table)?;
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidTable("label count differs from order".into()));
            }
        }
        Ok(Self::intern(order, table, name.into(), labels, provenance))
    }

    fn intern(order: usize, table: Vec<u32>, name: String, labels: Option<Vec<String>>, provenance: Option<String>) -> Self {
        let fp = table_fingerprint(order, &table);
        let mut map = interner().lock().expect("group interner poisoned");
        let bucket = map.entry(fp).or_default();
        for g in bucket.iter() {
            if let Repr::Atom { table: t, .. } = &g.0.repr {
                if g.0.order == order && *t == table {
                    return g.clone();
                }
            }
        }
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let abelian = (0..order).all(|a| (0..a).all(|b| table[a * order + b] == table[b * order + a]));
        let g = FiniteGroup(Arc::new(Inner {
            id: next_id(),
            name,
            order,
            repr: Repr::Atom {
                table,
                labels,
                provenance,
            },
            inverses,
            abelian,
        }));
        bucket.push(g.clone());
        g
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        static TRIVIAL: OnceLock<FiniteGroup> = OnceLock::new();
        TRIVIAL
            .get_or_init(|| FiniteGroup::intern(1, vec![0], "1".into(), Some(vec!["e".into()]), None))
            .clone()
    }

    /// Direct product of the given groups, without any size check. Trivial
    /// factors vanish and nested products are flattened.
    pub fn product_of(groups: &[FiniteGroup]) -> Self {
        let mut atoms: Vec<FiniteGroup> = Vec::new();
        for g in groups {
            atoms.extend(g.atoms());
        }
        match atoms.len() {
            0 => FiniteGroup::trivial(),
            1 => atoms.pop().unwrap(),
            _ => {
                let ids: Vec<u64> = atoms.iter().map(|a| a.0.id).collect();
                if let Some(g) = product_cache().lock().expect("product cache poisoned").get(&ids) {
                    return g.clone();
                }
                let order: usize = atoms.iter().map(|a| a.order()).product();
                let mut strides = vec![1usize; atoms.len()];
                for i in (0..atoms.len() - 1).rev() {
                    strides[i] = strides[i + 1] * atoms[i + 1].order();
                }
                let name = atoms.iter().map(|a| a.name().to_string()).collect::<Vec<_>>().join("x");
                let abelian = atoms.iter().all(|a| a.is_abelian());
                let mut inverses = vec![0u32; order];
                for (x, slot) in inverses.iter_mut().enumerate() {
                    let mut r = 0usize;
                    for (a, &s) in atoms.iter().zip(&strides) {
                        let d = (x / s) % a.order();
                        r += a.0.inverses[d] as usize * s;
                    }
                    *slot = r as u32;
                }
                let g = FiniteGroup(Arc::new(Inner {
                    id: 0,
                    name,
                    order,
                    repr: Repr::Product { factors: atoms, strides },
                    inverses,
                    abelian,
                }));
                product_cache()
                    .lock()
                    .expect("product cache poisoned")
                    .entry(ids)
                    .or_insert(g)
                    .clone()
            }
        }
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.0.abelian
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.repr {
            Repr::Atom { table, .. } => table[a as usize * self.0.order + b as usize],
            Repr::Product { factors, strides } => {
                let (a, b) = (a as usize, b as usize);
                let mut r = 0usize;
                for (f, &s) in factors.iter().zip(strides) {
                    let n = f.0.order;
                    r += f.mul(((a / s) % n) as u32, ((b / s) % n) as u32) as usize * s;
                }
                r as u32
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inverses[a as usize]
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_census(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        c.sort_unstable();
        c
    }

    /// The nontrivial atomic factors (a single atom yields itself).
    pub fn atoms(&self) -> Vec<FiniteGroup> {
        match &self.0.repr {
            Repr::Atom { .. } if self.is_trivial() => Vec::new(),
            Repr::Atom { .. } => vec![self.clone()],
            Repr::Product { factors, .. } => factors.clone(),
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self.0.repr, Repr::Atom { .. })
    }

    pub fn provenance(&self) -> Option<&str> {
        match &self.0.repr {
            Repr::Atom { provenance, .. } => provenance.as_deref(),
            Repr::Product { .. } => None,
        }
    }

    pub fn label(&self, a: u32) -> String {
        match &self.0.repr {
            Repr::Atom { labels: Some(l), .. } => l[a as usize].clone(),
            Repr::Atom { labels: None, .. } => format!("g{a}"),
            Repr::Product { factors, strides } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(strides)
                    .map(|(f, &s)| f.label(((a as usize / s) % f.order()) as u32))
                    .collect();
                format!("({})", parts.join(", "))
            }
        }
    }

    /// Dense Cayley table (materialized for products).
    pub fn table(&self) -> Vec<u32> {
        match &self.0.repr {
            Repr::Atom { table, .. } => table.clone(),
            Repr::Product { .. } => {
                let n = self.order() as u32;
                let mut t = Vec::with_capacity((n * n) as usize);
                for a in 0..n {
                    for b in 0..n {
                        t.push(self.mul(a, b));
                    }
                }
                t
            }
        }
    }

    pub fn same(&self, other: &FiniteGroup) -> bool {
        self == other
    }
}

fn relabel_swap(order: usize, table: &[u32], i: usize, j: usize) -> Vec<u32> {
    let sw = |x: usize| -> usize {
        if x == i {
            j
        } else if x == j {
            i
        } else {
            x
        }
    };
    let mut t = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            t[a * order + b] = sw(table[sw(a) * order + sw(b)] as usize) as u32;
        }
    }
    t
}

/// Exhaustive for small orders, 1000 seeded random triples above 64.
fn check_associative(order: usize, table: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| table[a * order + b] as usize;
    let fail = |a, b, c| Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
    if order <= 64 {
        for a in 0..order {
            for b in 0..order {
                let ab = m(a, b);
                for c in 0..order {
                    if m(ab, c) != m(a, m(b, c)) {
                        return fail(a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
            if m(m(a, b), c) != m(a, m(b, c)) {
                return fail(a, b, c);
            }
        }
    }
    Ok(())
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.repr, &other.0.repr) {
            (Repr::Product { factors: a, .. }, Repr::Product { factors: b, .. }) => a == b,
            _ => false,
        }
    }
}

impl Eq for FiniteGroup {}

impl Hash for FiniteGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0.repr {
            Repr::Atom { .. } => self.0.id.hash(state),
            Repr::Product { factors, .. } => {
                for f in factors {
                    f.0.id.hash(state);
                }
            }
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name(), self.order())
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
