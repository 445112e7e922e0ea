//! Finite quivers and their combinatorics.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// Orders ids numerically when both parse as integers, numbers before words,
/// words lexicographically.
pub fn id_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are stored in ascending id order and
/// addressed internally by position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(id, source id, target id)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut vs: Vec<String> = vertices.into_iter().map(Into::into).collect();
        vs.sort_by(|a, b| id_cmp(a, b));
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId {
                kind: "vertex",
                id: w[0].clone(),
            });
        }
        let lookup = |id: &str| {
            vs.iter()
                .position(|v| v == id)
                .ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        let mut arr = Vec::new();
        for (id, s, t) in arrows {
            arr.push(Arrow {
                source: lookup(&s)?,
                target: lookup(&t)?,
                id,
            });
        }
        arr.sort_by(|a, b| id_cmp(&a.id, &b.id));
        if let Some(w) = arr.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateId {
                kind: "arrow",
                id: w[0].id.clone(),
            });
        }
        Ok(Self {
            vertices: vs,
            arrows: arr,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    /// The oriented cycle on `n` vertices `1..=n` with arrows `a{i}: i -> i+1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1);
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..=n).map(|i| (format!("a{i}"), i.to_string(), (i % n + 1).to_string()));
        Self::new(vs, arrows).expect("cycle quiver is well formed")
    }

    /// The linearly oriented `A_n` quiver `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Self {
        assert!(n >= 1);
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()));
        Self::new(vs, arrows).expect("linear quiver is well formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_arrows(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_arrows(v).count()
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_block[r]].push(v);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff there is no oriented cycle; a loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.out_arrows(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    /// Sources have no incoming arrows, sinks no outgoing ones.
    pub fn sources_and_sinks(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let n = self.vertex_count();
        let sources = (0..n).filter(|&v| self.in_degree(v) == 0).collect();
        let sinks = (0..n).filter(|&v| self.out_degree(v) == 0).collect();
        (sources, sinks)
    }

    /// `Some(n)` iff the quiver is isomorphic to the oriented cycle `C_n`.
    pub fn oriented_cycle_type(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 || self.arrows.len() != n || !self.is_connected() {
            return None;
        }
        (0..n)
            .all(|v| self.in_degree(v) == 1 && self.out_degree(v) == 1)
            .then_some(n)
    }

    /// The full subquiver on `kept` (vertex positions). Ids are preserved;
    /// the second component maps new vertex positions to old ones.
    pub fn full_subquiver(&self, kept: &[usize]) -> Result<(Quiver, Vec<usize>)> {
        let n = self.vertex_count();
        if let Some(&bad) = kept.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        let keep: HashSet<usize> = kept.iter().copied().collect();
        let vs: Vec<String> = (0..n)
            .filter(|v| keep.contains(v))
            .map(|v| self.vertices[v].clone())
            .collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|a| keep.contains(&a.source) && keep.contains(&a.target))
            .map(|a| {
                (
                    a.id.clone(),
                    self.vertices[a.source].clone(),
                    self.vertices[a.target].clone(),
                )
            });
        let q = Quiver::new(vs, arrows)?;
        let map = (0..n).filter(|v| keep.contains(v)).collect();
        Ok((q, map))
    }

    /// Same vertices, every arrow reversed, ids preserved.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// The set of `(source, target)` pairs joined by at least one arrow.
    pub fn arrow_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.arrows.iter().map(|a| (a.source, a.target)).collect()
    }

    /// Identifies parallel arrows; surviving arrows are named `s->t`.
    pub fn identify_parallel(&self) -> Quiver {
        Self::from_pairs(self.vertices.clone(), &self.arrow_pairs())
    }

    pub(crate) fn from_pairs(vertices: Vec<String>, pairs: &BTreeSet<(usize, usize)>) -> Quiver {
        let arrows = pairs
            .iter()
            .map(|&(s, t)| {
                (
                    format!("{}->{}", vertices[s], vertices[t]),
                    vertices[s].clone(),
                    vertices[t].clone(),
                )
            })
            .collect::<Vec<_>>();
        Quiver::new(vertices.clone(), arrows).expect("pair quiver is well formed")
    }
}
