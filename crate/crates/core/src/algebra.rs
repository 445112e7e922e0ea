//! Monomial bound quiver algebras `kQ/I` with `I` generated by paths.
//!
//! Paths are written left to right in traversal order: `p·q` means "first `p`,
//! then `q`" and is defined when `p` ends where `q` starts. Modules are right
//! modules, so the indecomposable projective `P_i = e_i A` is spanned by the
//! basis paths starting at `i`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    /// Arrow positions in traversal order; empty for the constant path.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn constant(v: usize) -> Self {
        Self {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// Validates composability of `arrows` in `quiver`.
    pub fn new(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::Shape("non-constant path needs an arrow".into()))?;
        for &a in &arrows {
            if a >= quiver.arrow_count() {
                return Err(Error::UnknownArrow(a.to_string()));
            }
        }
        for w in arrows.windows(2) {
            if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                return Err(Error::NotComposable {
                    first: quiver.arrow(w[0]).id.clone(),
                    second: quiver.arrow(w[1]).id.clone(),
                });
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Self {
            source: quiver.arrow(first).source,
            target: quiver.arrow(last).target,
            arrows,
        })
    }

    pub fn from_ids(quiver: &Quiver, ids: &[&str]) -> Result<Self> {
        let arrows = ids
            .iter()
            .map(|id| {
                quiver
                    .arrow_index(id)
                    .ok_or_else(|| Error::UnknownArrow(id.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, arrows)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_constant(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `true` if `other` occurs as a contiguous subpath.
    pub fn contains(&self, other: &Path) -> bool {
        if other.is_constant() {
            return false;
        }
        self.arrows
            .windows(other.len())
            .any(|w| w == other.arrows.as_slice())
    }

    /// The same arrows traversed backwards, read in the reversed quiver.
    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }

    fn sort_key(&self) -> (usize, &[usize], usize) {
        (self.len(), &self.arrows, self.source)
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_constant() {
            return write!(f, "e{}", self.quiver.vertex_label(self.path.source));
        }
        let ids: Vec<&str> = self
            .path
            .arrows
            .iter()
            .map(|&a| self.quiver.arrow(a).id.as_str())
            .collect();
        write!(f, "{}", ids.join(" "))
    }
}

/// A finite-dimensional monomial algebra together with its path basis.
#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    name: Option<String>,
    quiver: Quiver,
    relations: Vec<Path>,
    basis: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    /// `groups[i][j]`: basis paths from `i` to `j`, in basis order.
    groups: Vec<Vec<Vec<usize>>>,
    /// Position of each basis path inside its group.
    position: Vec<usize>,
    /// Longest proper prefix and last arrow of each non-constant basis path.
    parent: Vec<Option<(usize, usize)>>,
    opposite: OnceLock<Arc<MonomialAlgebra>>,
}

impl PartialEq for MonomialAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for MonomialAlgebra {}

impl MonomialAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Path>) -> Result<Self> {
        for r in &relations {
            if r.len() < 2 {
                let shown = if r.is_constant() {
                    format!("e{}", quiver.vertex_label(r.source))
                } else {
                    r.display(&quiver).to_string()
                };
                return Err(Error::NotAdmissible(shown));
            }
            // re-validate composability for hand-built paths
            let checked = Path::new(&quiver, r.arrows.clone())?;
            if checked != *r {
                return Err(Error::Shape(
                    "relation endpoints disagree with its arrows".into(),
                ));
            }
        }
        let relations = normalize_relations(relations);
        if !is_finite(&quiver, &relations) {
            return Err(Error::InfiniteDimensional);
        }
        let basis = enumerate_basis(&quiver, &relations);
        let n = quiver.vertex_count();
        let mut groups = vec![vec![Vec::new(); n]; n];
        let mut position = Vec::with_capacity(basis.len());
        let mut index = HashMap::with_capacity(basis.len());
        for (k, p) in basis.iter().enumerate() {
            let g = &mut groups[p.source][p.target];
            position.push(g.len());
            g.push(k);
            index.insert((p.source, p.arrows.clone()), k);
        }
        let parent = basis
            .iter()
            .map(|p| {
                let (&last, prefix) = p.arrows.split_last()?;
                Some((index[&(p.source, prefix.to_vec())], last))
            })
            .collect();
        Ok(Self {
            name: None,
            quiver,
            relations,
            basis,
            index,
            groups,
            position,
            parent,
            opposite: OnceLock::new(),
        })
    }

    /// Builds an algebra from arrow-id sequences for the relations.
    pub fn from_ids(quiver: Quiver, relations: &[&[&str]]) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|ids| Path::from_ids(&quiver, ids))
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, rels)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, k: usize) -> &Path {
        &self.basis[k]
    }

    /// Basis paths from `i` to `j` (spanning `e_i A e_j`).
    pub fn group(&self, i: usize, j: usize) -> &[usize] {
        &self.groups[i][j]
    }

    /// Position of basis path `k` inside `group(source, target)`.
    pub fn position(&self, k: usize) -> usize {
        self.position[k]
    }

    pub fn parent(&self, k: usize) -> Option<(usize, usize)> {
        self.parent[k]
    }

    pub fn lookup(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    pub fn constant(&self, v: usize) -> usize {
        self.index[&(v, Vec::new())]
    }

    /// Basis index of `p·q`, or `None` if the product is zero.
    pub fn product(&self, p: usize, q: usize) -> Option<usize> {
        let (pp, qq) = (&self.basis[p], &self.basis[q]);
        if pp.target != qq.source {
            return None;
        }
        if pp.is_constant() {
            return Some(q);
        }
        if qq.is_constant() {
            return Some(p);
        }
        let mut arrows = pp.arrows.clone();
        arrows.extend_from_slice(&qq.arrows);
        self.lookup(pp.source, &arrows)
    }

    /// Paths with source `v`, i.e. the basis of `P_v`.
    pub fn paths_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).flat_map(move |w| self.groups[v][w].iter().copied())
    }

    /// Paths with target `v`, i.e. the basis of `I_v`.
    pub fn paths_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).flat_map(move |w| self.groups[w][v].iter().copied())
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    /// Column `i` is the dimension vector of `P_i`: entry `(j, i)` counts
    /// basis paths from `i` to `j`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut c = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                c[(j, i)] = self.groups[i][j].len() as i64;
            }
        }
        c
    }

    /// Every vertex has at most one incoming and one outgoing arrow.
    pub fn is_nakayama(&self) -> bool {
        (0..self.vertex_count())
            .all(|v| self.quiver.in_degree(v) <= 1 && self.quiver.out_degree(v) <= 1)
    }

    pub fn opposite(&self) -> MonomialAlgebra {
        let rels = self.relations.iter().map(Path::reversed).collect();
        let op = MonomialAlgebra::new(self.quiver.reversed(), rels)
            .expect("opposite of a finite monomial algebra is finite");
        match &self.name {
            Some(n) => op.with_name(format!("{n}^op")),
            None => op,
        }
    }

    /// Cached opposite algebra.
    pub fn opposite_arc(&self) -> Arc<MonomialAlgebra> {
        self.opposite
            .get_or_init(|| Arc::new(self.opposite()))
            .clone()
    }

    /// The algebra on the full subquiver spanned by `kept`, keeping exactly the
    /// relations supported on surviving arrows. Returns the new-to-old vertex map.
    pub fn restrict(&self, kept: &[usize]) -> Result<(MonomialAlgebra, Vec<usize>)> {
        let (sub, map) = self.quiver.full_subquiver(kept)?;
        let arrow_map: HashMap<&str, usize> = sub
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| (a.id.as_str(), k))
            .collect();
        let rels = self
            .relations
            .iter()
            .filter_map(|r| {
                let arrows = r
                    .arrows
                    .iter()
                    .map(|&a| arrow_map.get(self.quiver.arrow(a).id.as_str()).copied())
                    .collect::<Option<Vec<_>>>()?;
                Some(Path::new(&sub, arrows).expect("restricted relation composes"))
            })
            .collect();
        let alg = MonomialAlgebra::new(sub, rels)?;
        Ok((
            match &self.name {
                Some(n) => alg.with_name(n.clone()),
                None => alg,
            },
            map,
        ))
    }

    /// `Γ_e` for the idempotent of a source vertex `v`: since nothing arrives
    /// at `v`, no path through a surviving vertex can visit it, so `Γ_e` is the
    /// algebra of the full subquiver without `v`.
    pub fn delete_source_vertex(&self, v: usize) -> Result<(MonomialAlgebra, Vec<usize>)> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if self.quiver.in_degree(v) != 0 {
            return Err(Error::NotASource(self.quiver.vertex_label(v).to_string()));
        }
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        self.restrict(&kept)
    }

    /// Length of the longest basis path.
    pub fn loewy_bound(&self) -> usize {
        self.basis.last().map_or(0, Path::len)
    }
}

/// Deduplicates and drops every relation containing another one.
fn normalize_relations(mut rels: Vec<Path>) -> Vec<Path> {
    rels.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    rels.dedup();
    let mut kept: Vec<Path> = Vec::new();
    for r in rels {
        if !kept.iter().any(|k| r.contains(k)) {
            kept.push(r);
        }
    }
    kept
}

fn ends_with_relation(arrows: &[usize], rels: &[Path]) -> bool {
    rels.iter().any(|r| arrows.ends_with(&r.arrows))
}

/// Walks the automaton whose states are the last `w` arrows of a
/// relation-free path (`w` = longest relation length minus one, at least one)
/// and reports whether a reachable cycle exists.
fn is_finite(quiver: &Quiver, rels: &[Path]) -> bool {
    let window = rels
        .iter()
        .map(Path::len)
        .max()
        .unwrap_or(0)
        .saturating_sub(1)
        .max(1);
    let successors = |state: &[usize]| -> Vec<Vec<usize>> {
        let end = quiver.arrow(*state.last().unwrap()).target;
        quiver
            .out_arrows(end)
            .filter_map(|a| {
                let mut cand = state.to_vec();
                cand.push(a);
                if ends_with_relation(&cand, rels) {
                    return None;
                }
                let cut = cand.len().saturating_sub(window);
                Some(cand[cut..].to_vec())
            })
            .collect()
    };
    // iterative three-colour DFS
    let mut colour: HashMap<Vec<usize>, u8> = HashMap::new();
    for a in 0..quiver.arrow_count() {
        let start = vec![a];
        if colour.contains_key(&start) {
            continue;
        }
        let mut stack: Vec<(Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
        colour.insert(start.clone(), 1);
        let succ = successors(&start);
        stack.push((start, succ));
        while let Some((_, pending)) = stack.last_mut() {
            match pending.pop() {
                Some(next) => match colour.get(&next) {
                    Some(1) => return false,
                    Some(_) => {}
                    None => {
                        colour.insert(next.clone(), 1);
                        let succ = successors(&next);
                        stack.push((next, succ));
                    }
                },
                None => {
                    let (done, _) = stack.pop().unwrap();
                    colour.insert(done, 2);
                }
            }
        }
    }
    true
}

fn enumerate_basis(quiver: &Quiver, rels: &[Path]) -> Vec<Path> {
    let mut basis: Vec<Path> = (0..quiver.vertex_count()).map(Path::constant).collect();
    let mut frontier: Vec<Path> = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for a in quiver.out_arrows(p.target) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                if ends_with_relation(&arrows, rels) {
                    continue;
                }
                next.push(Path {
                    source: p.source,
                    target: quiver.arrow(a).target,
                    arrows,
                });
            }
        }
        next.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    basis
}

/// All arrow sequences of length `len` in `quiver` (composable), for tests and
/// brute-force oracles.
pub fn all_paths_of_length(quiver: &Quiver, len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..quiver.vertex_count()).map(Path::constant).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &out {
            for a in quiver.out_arrows(p.target) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path {
                    source: p.source,
                    target: quiver.arrow(a).target,
                    arrows,
                });
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_cycle_ab() -> MonomialAlgebra {
        let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        MonomialAlgebra::from_ids(q, &[&["a", "b"]]).unwrap()
    }

    fn shown(alg: &MonomialAlgebra, ks: &[usize]) -> Vec<String> {
        ks.iter()
            .map(|&k| alg.basis_path(k).display(alg.quiver()).to_string())
            .collect()
    }

    /// Brute force: every composable arrow word up to `bound` that avoids all
    /// relations as contiguous subwords.
    fn brute_force_dim(alg: &MonomialAlgebra, bound: usize) -> usize {
        (0..=bound)
            .flat_map(|l| all_paths_of_length(alg.quiver(), l))
            .filter(|p| !alg.relations().iter().any(|r| p.contains(r)))
            .count()
    }

    #[test]
    fn two_cycle_basis() {
        let a = two_cycle_ab();
        assert_eq!(a.dim(), 5);
        assert_eq!(brute_force_dim(&a, 10), 5);
        let all: Vec<usize> = (0..a.dim()).collect();
        assert_eq!(shown(&a, &all), ["e1", "e2", "a", "b", "b a"]);
        assert_eq!(shown(&a, a.group(0, 1)), ["a"]);
        assert_eq!(shown(&a, a.group(1, 1)), ["e2", "b a"]);
    }

    #[test]
    fn hereditary_line() {
        let q = Quiver::linear(2);
        let a = MonomialAlgebra::new(q, vec![]).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(shown(&a, a.group(0, 0)), ["e1"]);
        assert_eq!(
            a.cartan_matrix(),
            IntMatrix::from_nested(&[vec![1, 0], vec![1, 1]])
        );
    }

    #[test]
    fn infinite_and_inadmissible() {
        let q = Quiver::cycle(2);
        assert_eq!(
            MonomialAlgebra::new(q.clone(), vec![]),
            Err(Error::InfiniteDimensional)
        );
        assert!(matches!(
            MonomialAlgebra::from_ids(q.clone(), &[&["a1"]]),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            MonomialAlgebra::new(q, vec![Path::constant(0)]),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn relations_are_normalized() {
        let q = Quiver::cycle(2);
        let a = MonomialAlgebra::from_ids(q, &[&["a1", "a2", "a1"], &["a1", "a2"], &["a1", "a2"]])
            .unwrap();
        assert_eq!(a.relations().len(), 1);
        assert_eq!(a.relations()[0].len(), 2);
    }

    #[test]
    fn cartan_examples() {
        let a = two_cycle_ab();
        let c = a.cartan_matrix();
        assert_eq!(c, IntMatrix::from_nested(&[vec![1, 1], vec![1, 2]]));
        assert_eq!(c, c.transpose());
        let ss = MonomialAlgebra::new(Quiver::from_strs(&["1", "2", "3"], &[]).unwrap(), vec![])
            .unwrap();
        assert_eq!(ss.cartan_matrix(), IntMatrix::identity(3));
    }

    #[test]
    fn nakayama_detection() {
        assert!(two_cycle_ab().is_nakayama());
        let q = Quiver::from_strs(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "1"), ("c", "3", "2")],
        )
        .unwrap();
        let a = MonomialAlgebra::from_ids(q, &[&["a", "b"], &["b", "a"]]).unwrap();
        assert!(!a.is_nakayama());
        let one = MonomialAlgebra::new(Quiver::from_strs(&["1"], &[]).unwrap(), vec![]).unwrap();
        assert!(one.is_nakayama());
    }

    #[test]
    fn opposite_examples() {
        let a = two_cycle_ab();
        let op = a.opposite();
        assert_eq!(op.dim(), 5);
        assert_eq!(op.opposite(), a);
        assert_eq!(op.cartan_matrix(), a.cartan_matrix().transpose());
        let line = MonomialAlgebra::new(Quiver::linear(2), vec![]).unwrap();
        let lop = line.opposite();
        assert_eq!(lop.quiver().arrow(0).source, 1);
        assert_eq!(lop.quiver().arrow(0).target, 0);
    }

    #[test]
    fn source_deletion() {
        let q = Quiver::from_strs(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "1"), ("c", "3", "2")],
        )
        .unwrap();
        let a = MonomialAlgebra::from_ids(q, &[&["a", "b"], &["b", "a"]]).unwrap();
        let (g, map) = a.delete_source_vertex(2).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.relations().len(), 2);
        assert_eq!(map, vec![0, 1]);
        let avoiding = a
            .basis()
            .iter()
            .filter(|p| p.source != 2 && p.target != 2)
            .count();
        assert_eq!(g.dim(), avoiding);

        let line = MonomialAlgebra::new(Quiver::linear(2), vec![]).unwrap();
        let (g, _) = line.delete_source_vertex(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.dim(), 1);

        assert_eq!(
            two_cycle_ab().delete_source_vertex(0).unwrap_err(),
            Error::NotASource("1".into())
        );
    }

    #[test]
    fn loop_algebra() {
        let q = Quiver::from_strs(&["1"], &[("x", "1", "1")]).unwrap();
        let a = MonomialAlgebra::from_ids(q, &[&["x", "x", "x"]]).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.loewy_bound(), 2);
    }
}
