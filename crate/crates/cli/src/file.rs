//! The line-oriented algebra file format.
//!
//! ```text
//! # two-cycle with one relation
//! name: two-cycle
//! vertices: 1 2
//! arrow a 1 2
//! arrow b 2 1
//! relation a b
//! ```
//!
//! Relations list arrows in traversal order, so `relation a b` is "a then b".

use std::collections::HashSet;
use std::fmt::Write as _;

use taumap::{MonomialAlgebra, Path, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<String>>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut file = AlgebraFile::default();
    let mut vertex_ids = HashSet::new();
    let mut arrow_ids = HashSet::new();
    let mut seen_vertices = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            if seen_vertices {
                return Err(err(line, "second `vertices:` line"));
            }
            seen_vertices = true;
            for id in rest.split_whitespace() {
                if !vertex_ids.insert(id.to_string()) {
                    return Err(err(line, format!("duplicate vertex id `{id}`")));
                }
                file.vertices.push(id.to_string());
            }
            if file.vertices.is_empty() {
                return Err(err(line, "`vertices:` needs at least one id"));
            }
            continue;
        }
        if let Some(rest) = content.strip_prefix("name:") {
            let name = rest.trim();
            if name.is_empty() || file.name.is_some() {
                return Err(err(line, "`name:` must appear once with a value"));
            }
            file.name = Some(name.to_string());
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("arrow") => {
                let parts: Vec<&str> = words.collect();
                let [id, s, t] = parts[..] else {
                    return Err(err(line, "expected `arrow <id> <source> <target>`"));
                };
                if !seen_vertices {
                    return Err(err(line, "`arrow` before `vertices:`"));
                }
                for v in [s, t] {
                    if !vertex_ids.contains(v) {
                        return Err(err(line, format!("unknown vertex `{v}`")));
                    }
                }
                if !arrow_ids.insert(id.to_string()) {
                    return Err(err(line, format!("duplicate arrow id `{id}`")));
                }
                file.arrows.push((id.into(), s.into(), t.into()));
            }
            Some("relation") => {
                let ids: Vec<String> = words.map(str::to_string).collect();
                if let Some(bad) = ids.iter().find(|a| !arrow_ids.contains(*a)) {
                    return Err(err(
                        line,
                        format!("relation references unknown arrow `{bad}`"),
                    ));
                }
                if ids.len() < 2 {
                    return Err(err(line, "relation length < 2"));
                }
                file.relations.push(ids);
            }
            Some(other) => return Err(err(line, format!("unknown directive `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    if !seen_vertices {
        return Err(err(text.lines().count().max(1), "missing `vertices:` line"));
    }
    Ok(file)
}

impl AlgebraFile {
    /// Validates the file as a finite-dimensional monomial algebra.
    pub fn build(&self) -> taumap::Result<MonomialAlgebra> {
        let quiver = Quiver::new(self.vertices.iter().cloned(), self.arrows.iter().cloned())?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let ids: Vec<&str> = r.iter().map(String::as_str).collect();
                Path::from_ids(&quiver, &ids)
            })
            .collect::<taumap::Result<Vec<_>>>()?;
        let a = MonomialAlgebra::new(quiver, relations)?;
        Ok(match &self.name {
            Some(n) => a.with_name(n.clone()),
            None => a,
        })
    }

    pub fn from_algebra(a: &MonomialAlgebra) -> Self {
        let q = a.quiver();
        let label = |v: usize| q.vertex_label(v).to_string();
        Self {
            name: a.name().map(str::to_string),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|x| (x.id.clone(), label(x.source), label(x.target)))
                .collect(),
            relations: a
                .relations()
                .iter()
                .map(|p| p.arrows.iter().map(|&x| q.arrow(x).id.clone()).collect())
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(out, "name: {n}");
        }
        let _ = writeln!(out, "vertices: {}", self.vertices.join(" "));
        for (id, s, t) in &self.arrows {
            let _ = writeln!(out, "arrow {id} {s} {t}");
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", r.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle() {
        let f =
            parse_algebra_file("vertices: 1 2\narrow a 1 2\narrow b 2 1\nrelation a b").unwrap();
        let a = f.build().unwrap();
        assert_eq!(a.dim(), 5);
        assert!(a.is_nakayama());
    }

    #[test]
    fn semisimple() {
        let a = parse_algebra_file("vertices: 1").unwrap().build().unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn short_relation() {
        let e = parse_algebra_file("vertices: 1\narrow a 1 1\nrelation a").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("length < 2"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("vertices: 1 1", 1, "duplicate vertex"),
            ("vertices: 1\n# c\narrow a 1 2", 3, "unknown vertex"),
            (
                "vertices: 1\narrow a 1 1\narrow a 1 1",
                3,
                "duplicate arrow",
            ),
            ("vertices: 1\nrelation x y", 2, "unknown arrow"),
            ("vertices: 1\nloop a 1", 2, "unknown directive"),
            ("arrow a 1 2", 1, "before"),
            ("# nothing", 1, "missing"),
        ];
        for (text, line, needle) in cases {
            let e = parse_algebra_file(text).unwrap_err();
            assert_eq!(e.line, line, "{text}");
            assert!(e.message.contains(needle), "{text}: {e}");
        }
    }

    #[test]
    fn comments_and_render() {
        let text = "name: x # trailing\nvertices: 1 2 # two\n\narrow a 1 2\n";
        let f = parse_algebra_file(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("x"));
        assert_eq!(parse_algebra_file(&f.render()).unwrap(), f);
        assert_eq!(AlgebraFile::from_algebra(&f.build().unwrap()), f);
    }
}
