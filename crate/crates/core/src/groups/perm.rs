use std::collections::HashMap;

use super::group::FiniteGroup;
use super::Caps;
use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm(images))
    }

    /// Parses cycle notation such as `(0 1)(2 3)`; `()` and `e` denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidPermutation(m);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let t = text.trim();
        if t == "e" || t.is_empty() {
            return Ok(Perm(images));
        }
        let mut moved = vec![false; degree];
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad(format!("expected `(` in `{t}`")))?;
            let close = open.find(')').ok_or_else(|| bad(format!("unclosed cycle in `{t}`")))?;
            let body = &open[..close];
            let points: Vec<u32> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>().map_err(|_| bad(format!("bad point `{s}`"))))
                .collect::<Result<_>>()?;
            for &p in &points {
                if p as usize >= degree {
                    return Err(bad(format!("point {p} outside degree {degree}")));
                }
                if moved[p as usize] {
                    return Err(bad(format!("point {p} repeated in `{t}`")));
                }
                moved[p as usize] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p as usize] = points[(i + 1) % points.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn cycles(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x.to_string());
                x = self.0[x] as usize;
            }
            out.push('(');
            out.push_str(&cyc.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Closes the generators under composition and returns the Cayley table.
/// Elements are ordered lexicographically by image list, so the identity
/// comes first.
pub fn group_from_generators(degree: usize, generators: &[Perm], name: &str, caps: &Caps) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Perm::new(g.0.clone())?;
    }
    let id = Perm::identity(degree);
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in generators {
            let y = elems[i].compose(g);
            if !index.contains_key(&y) {
                if elems.len() >= caps.closure {
                    return Err(Error::ClosureCapExceeded { cap: caps.closure });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort();
    let index: HashMap<&Perm, u32> = elems.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&a.compose(b)]);
        }
    }
    let labels = elems.iter().map(Perm::cycles).collect();
    let gens: Vec<String> = generators.iter().map(Perm::cycles).collect();
    let provenance = format!("perm_group({degree}; {})", gens.join("; "));
    FiniteGroup::from_table_with_labels(n, table, name, Some(labels), Some(provenance))
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0, "cyclic group of order 0");
    if n == 1 {
        return FiniteGroup::trivial();
    }
    let rot = Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect());
    group_from_generators(n, &[rot], &format!("C{n}"), &Caps::unbounded()).expect("cyclic group")
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=5).contains(&n) {
        return Err(Error::UnknownGroup(format!("S{n} (built-in symmetric groups stop at S5)")));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial());
    }
    let mut gens = vec![Perm::parse_cycles(n, "(0 1)")?];
    if n > 2 {
        let long = (0..n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        gens.push(Perm::parse_cycles(n, &format!("({long})"))?);
    }
    group_from_generators(n, &gens, &format!("S{n}"), &Caps::unbounded())
}

pub fn klein_four() -> FiniteGroup {
    let gens = [
        Perm::parse_cycles(4, "(0 1)(2 3)").unwrap(),
        Perm::parse_cycles(4, "(0 2)(1 3)").unwrap(),
    ];
    group_from_generators(4, &gens, "V4", &Caps::unbounded()).expect("Klein four-group")
}

/// Resolves the built-in names `1`/`trivial`, `Cn`, `Sn` (n <= 5), `V4`.
pub fn builtin(name: &str) -> Option<FiniteGroup> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "1" | "trivial" => return Some(FiniteGroup::trivial()),
        "V4" => return Some(klein_four()),
        _ => {}
    }
    let (head, tail) = compact.split_at(1.min(compact.len()));
    let n: usize = tail.parse().ok()?;
    match head {
        "C" if (1..=2000).contains(&n) => Some(cyclic(n)),
        "S" => symmetric(n).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_orders() {
        let caps = Caps::default();
        let s3 = group_from_generators(
            3,
            &[Perm::parse_cycles(3, "(0 1)").unwrap(), Perm::parse_cycles(3, "(0 1 2)").unwrap()],
            "S3",
            &caps,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(group_from_generators(1, &[], "1", &caps).unwrap().order(), 1);
        let c2 = group_from_generators(2, &[Perm::parse_cycles(2, "(0 1)").unwrap()], "C2", &caps).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2, cyclic(2));
    }

    #[test]
    fn closure_cap_is_enforced() {
        let caps = Caps {
            closure: 10,
            ..Caps::default()
        };
        let gens = [Perm::parse_cycles(4, "(0 1)").unwrap(), Perm::parse_cycles(4, "(0 1 2 3)").unwrap()];
        assert_eq!(
            group_from_generators(4, &gens, "S4", &caps),
            Err(Error::ClosureCapExceeded { cap: 10 })
        );
    }

    #[test]
    fn malformed_permutations() {
        assert!(Perm::parse_cycles(3, "(0 3)").is_err());
        assert!(Perm::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Perm::parse_cycles(3, "0 1").is_err());
        assert!(Perm::new(vec![0, 0]).is_err());
        assert_eq!(Perm::parse_cycles(4, "(0 1)(2 3)").unwrap().cycles(), "(0 1)(2 3)");
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin("S4").unwrap().order(), 24);
        assert_eq!(builtin("C 6").unwrap().order(), 6);
        assert_eq!(builtin("V4").unwrap().order(), 4);
        assert_eq!(builtin("trivial").unwrap().order(), 1);
        assert!(builtin("S6").is_none());
        assert!(builtin("Q8").is_none());
        assert_eq!(symmetric(5).unwrap().order(), 120);
    }
}
