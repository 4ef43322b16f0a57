//! Group-spec files and group-name resolution.
//!
//! A spec file holds one definition per line:
//!
//! ```text
//! # dihedral group of order 8
//! D8 = perm_group(4; (0 1 2 3); (0 2))
//! Z4 = C 4
//! ```
//!
//! The right-hand side is either `perm_group(degree; gen; gen; ...)` with
//! generators in cycle notation, or a built-in name (`trivial`, `1`, `C n`,
//! `S n` for n <= 5, `V4`). Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::groups::{builtin, group_from_generators, Caps, FiniteGroup, Perm};

#[derive(Debug, Clone, Default)]
pub struct GroupRegistry {
    entries: Vec<(String, FiniteGroup)>,
}

impl GroupRegistry {
    pub fn parse(text: &str, caps: &Caps) -> Result<Self> {
        let mut reg = GroupRegistry::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let eq = content
                .find('=')
                .ok_or_else(|| Error::parse(line, first_non_space(content), "expected `name = definition`"))?;
            let name = content[..eq].trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::parse(line, first_non_space(content), format!("bad group name `{name}`")));
            }
            if builtin(name).is_some() || reg.lookup(name).is_some() {
                return Err(Error::parse(line, first_non_space(content), format!("`{name}` is already defined")));
            }
            let rhs_start = eq + 1 + first_non_space(&content[eq + 1..]) - 1;
            let rhs = content[rhs_start..].trim_end();
            let group = parse_definition(name, rhs, line, rhs_start + 1, caps)?;
            reg.entries.push((name.to_string(), group));
        }
        Ok(reg)
    }

    /// Reads the file named by `BISETKIT_GROUPS`, if set.
    pub fn from_env(caps: &Caps) -> Result<Self> {
        match std::env::var("BISETKIT_GROUPS") {
            Ok(path) if !path.is_empty() => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Invalid(format!("cannot read group file {path}: {e}")))?;
                Self::parse(&text, caps)
            }
            _ => Ok(GroupRegistry::default()),
        }
    }

    fn lookup(&self, name: &str) -> Option<FiniteGroup> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, g)| g.clone())
    }

    /// Built-ins, then file entries, then `x`-separated products of either.
    pub fn resolve(&self, name: &str) -> Result<FiniteGroup> {
        let name = name.trim();
        if let Some(g) = builtin(name).or_else(|| self.lookup(name)) {
            return Ok(g);
        }
        if name.contains('x') {
            let parts = name
                .split('x')
                .map(|p| builtin(p.trim()).or_else(|| self.lookup(p.trim())))
                .collect::<Option<Vec<_>>>();
            if let Some(parts) = parts {
                return Ok(FiniteGroup::product_of(&parts));
            }
        }
        Err(Error::UnknownGroup(name.to_string()))
    }

    pub fn entries(&self) -> &[(String, FiniteGroup)] {
        &self.entries
    }
}

fn first_non_space(s: &str) -> usize {
    s.char_indices().find(|(_, c)| !c.is_whitespace()).map_or(s.len(), |(i, _)| i) + 1
}

/// `column` is the 1-based column where `rhs` starts.
fn parse_definition(name: &str, rhs: &str, line: usize, column: usize, caps: &Caps) -> Result<FiniteGroup> {
    let Some(inner) = rhs.strip_prefix("perm_group") else {
        return builtin(rhs).ok_or_else(|| Error::parse(line, column, format!("unknown definition `{rhs}`")));
    };
    let open_col = column + "perm_group".len() + (inner.len() - inner.trim_start().len());
    let inner = inner.trim_start();
    let body = inner
        .strip_prefix('(')
        .ok_or_else(|| Error::parse(line, open_col, "expected `(` after perm_group"))?;
    let body = body
        .strip_suffix(')')
        .ok_or_else(|| Error::parse(line, column + rhs.len() - 1, "expected `)` closing perm_group"))?;
    let mut fields = Vec::new();
    let mut offset = open_col + 1;
    for part in body.split(';') {
        fields.push((offset + first_non_space(part) - 1, part.trim()));
        offset += part.len() + 1;
    }
    let (deg_col, deg_text) = fields[0];
    let degree: usize = deg_text
        .parse()
        .map_err(|_| Error::parse(line, deg_col, format!("bad degree `{deg_text}`")))?;
    if degree == 0 {
        return Err(Error::parse(line, deg_col, "degree must be positive"));
    }
    let mut gens = Vec::new();
    for &(col, text) in &fields[1..] {
        if text.is_empty() {
            return Err(Error::parse(line, col, "empty generator"));
        }
        gens.push(Perm::parse_cycles(degree, text).map_err(|e| Error::parse(line, col, e.to_string()))?);
    }
    group_from_generators(degree, &gens, name, caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_definitions() {
        let text = "# comment\n\nD8 = perm_group(4; (0 1 2 3); (0 2))\nZ = C 4\n";
        let reg = GroupRegistry::parse(text, &Caps::default()).unwrap();
        let d8 = reg.resolve("D8").unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(reg.resolve("Z").unwrap().order(), 4);
        assert_eq!(reg.resolve("D8xC2").unwrap().order(), 16);
        assert!(reg.resolve("Q8").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let caps = Caps::default();
        let err = GroupRegistry::parse("G = perm_group(3; (0 5))", &caps).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 19, .. }), "{err:?}");
        let err = GroupRegistry::parse("\nG perm_group(3)", &caps).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 1, .. }), "{err:?}");
        let err = GroupRegistry::parse("G = perm_group(x; (0 1))", &caps).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 16, .. }), "{err:?}");
        let err = GroupRegistry::parse("C2 = C 2", &caps).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
