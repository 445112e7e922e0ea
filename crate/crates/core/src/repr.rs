//! Finite-dimensional right modules as quiver representations over `Q`.
//!
//! A module `M` is stored as the spaces `M e_v` together with one matrix per
//! arrow `a: u -> w`, of shape `dim M_w x dim M_u`, acting on column vectors
//! (right multiplication by `a`). Bases of standard modules follow the
//! algebra's path-basis order.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::quiver::Quiver;

fn same_algebra(a: &Arc<MonomialAlgebra>, b: &Arc<MonomialAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    algebra: Arc<MonomialAlgebra>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

impl Representation {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(
        algebra: Arc<MonomialAlgebra>,
        dims: Vec<usize>,
        arrows: Vec<Matrix>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || arrows.len() != q.arrow_count() {
            return Err(Error::MalformedRepresentation(
                "dimension or arrow count does not match the quiver".into(),
            ));
        }
        for (k, a) in q.arrows().iter().enumerate() {
            if arrows[k].shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::MalformedRepresentation(format!(
                    "arrow {} has shape {:?}, expected {:?}",
                    a.id,
                    arrows[k].shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        let rep = Self {
            algebra,
            dims,
            arrows,
        };
        for r in rep.algebra.relations() {
            if !rep.path_action(&r.arrows, r.source).is_zero() {
                return Err(Error::MalformedRepresentation(format!(
                    "relation {} does not act as zero",
                    r.display(rep.algebra.quiver())
                )));
            }
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(
        algebra: Arc<MonomialAlgebra>,
        dims: Vec<usize>,
        arrows: Vec<Matrix>,
    ) -> Self {
        let rep = Self {
            algebra,
            dims,
            arrows,
        };
        debug_assert!(
            Self::new(rep.algebra.clone(), rep.dims.clone(), rep.arrows.clone()).is_ok(),
            "internally built representation is malformed"
        );
        rep
    }

    pub fn zero(algebra: &Arc<MonomialAlgebra>) -> Self {
        let q = algebra.quiver();
        Self {
            algebra: algebra.clone(),
            dims: vec![0; q.vertex_count()],
            arrows: vec![Matrix::zeros(0, 0); q.arrow_count()],
        }
    }

    pub fn standard(algebra: &Arc<MonomialAlgebra>, kind: StandardKind, v: usize) -> Result<Self> {
        if v >= algebra.vertex_count() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(match kind {
            StandardKind::Simple => Self::simple(algebra, v),
            StandardKind::Projective => Self::projective(algebra, v),
            StandardKind::Injective => Self::injective(algebra, v),
        })
    }

    pub fn simple(algebra: &Arc<MonomialAlgebra>, v: usize) -> Self {
        let q = algebra.quiver();
        let mut dims = vec![0; q.vertex_count()];
        dims[v] = 1;
        let arrows = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Self::from_parts(algebra.clone(), dims, arrows)
    }

    /// `P_v = e_v A`: basis paths starting at `v`, arrows act by appending.
    pub fn projective(algebra: &Arc<MonomialAlgebra>, v: usize) -> Self {
        Self::truncated_projective(algebra, v, usize::MAX)
    }

    /// `P_v / rad^l P_v`: the basis paths from `v` of length `< l`.
    pub fn truncated_projective(algebra: &Arc<MonomialAlgebra>, v: usize, l: usize) -> Self {
        let alg = algebra.as_ref();
        let q = alg.quiver();
        let n = q.vertex_count();
        let keep = |k: usize| alg.basis_path(k).len() < l;
        let mut local: Vec<Vec<usize>> = vec![Vec::new(); n];
        for w in 0..n {
            local[w] = alg
                .group(v, w)
                .iter()
                .copied()
                .filter(|&k| keep(k))
                .collect();
        }
        let dims: Vec<usize> = local.iter().map(Vec::len).collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (col, &p) in local[a.source].iter().enumerate() {
                    let mut arrows = alg.basis_path(p).arrows.clone();
                    arrows.push(ai);
                    if let Some(k) = alg.lookup(v, &arrows) {
                        if let Some(row) = local[a.target].iter().position(|&x| x == k) {
                            m[(row, col)] = Q::one();
                        }
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra.clone(), dims, arrows)
    }

    /// `I_v = D(A e_v)`: the dual basis of paths ending at `v`. The dual basis
    /// vector of a path `q: k -> v` sits at vertex `k`, and an arrow `a` sends
    /// it to the dual of `q'` when `q = a·q'`, and to zero otherwise.
    pub fn injective(algebra: &Arc<MonomialAlgebra>, v: usize) -> Self {
        let alg = algebra.as_ref();
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|k| alg.group(k, v).len()).collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (col, &p) in alg.group(a.source, v).iter().enumerate() {
                    let path = alg.basis_path(p);
                    if path.arrows.first() == Some(&ai) {
                        let rest = alg
                            .lookup(a.target, &path.arrows[1..])
                            .expect("suffix of a basis path is a basis path");
                        m[(alg.position(rest), col)] = Q::one();
                    }
                }
                m
            })
            .collect();
        Self::from_parts(algebra.clone(), dims, arrows)
    }

    pub fn direct_sum(parts: &[&Representation]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::MalformedRepresentation("empty direct sum".into()))?;
        let alg = first.algebra.clone();
        if parts.iter().any(|p| !same_algebra(&p.algebra, &alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let n = alg.vertex_count();
        let dims = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let arrows = (0..alg.quiver().arrow_count())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.arrows[a]).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Ok(Self::from_parts(alg, dims, arrows))
    }

    pub fn algebra(&self) -> &Arc<MonomialAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    /// Matrix of right multiplication by the path `arrows` starting at `source`.
    pub fn path_action(&self, arrows: &[usize], source: usize) -> Matrix {
        let mut m = Matrix::identity(self.dims[source]);
        for &a in arrows {
            m = &self.arrows[a] * &m;
        }
        m
    }

    /// Action matrices of every basis path, indexed like the basis.
    pub fn path_matrices(&self) -> Vec<Matrix> {
        let alg = self.algebra.as_ref();
        let mut out: Vec<Matrix> = Vec::with_capacity(alg.dim());
        for k in 0..alg.dim() {
            let m = match alg.parent(k) {
                None => Matrix::identity(self.dims[alg.basis_path(k).source]),
                Some((prefix, last)) => &self.arrows[last] * &out[prefix],
            };
            out.push(m);
        }
        out
    }

    /// The dual `D M`, a module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        let op = self.algebra.opposite_arc();
        Self {
            algebra: op,
            dims: self.dims.clone(),
            arrows: self.arrows.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Reinterprets the module over a structurally equal algebra.
    pub fn rebase(self, algebra: &Arc<MonomialAlgebra>) -> Result<Self> {
        if !same_algebra(&self.algebra, algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self {
            algebra: algebra.clone(),
            ..self
        })
    }

    /// Restriction to a full-subquiver algebra (`F_e`); `map` sends new vertex
    /// positions to old ones.
    pub fn restrict_to(&self, sub: &Arc<MonomialAlgebra>, map: &[usize]) -> Result<Self> {
        let q = self.algebra.quiver();
        let dims = map.iter().map(|&v| self.dims[v]).collect();
        let arrows = sub
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                q.arrow_index(&a.id)
                    .map(|k| self.arrows[k].clone())
                    .ok_or_else(|| Error::UnknownArrow(a.id.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(sub.clone(), dims, arrows)
    }

    /// Extension by zero from a full-subquiver algebra (`G_e` when the deleted
    /// vertices form a source set).
    pub fn extend_by_zero(&self, big: &Arc<MonomialAlgebra>, map: &[usize]) -> Result<Self> {
        let q = big.quiver();
        let mut dims = vec![0; q.vertex_count()];
        for (k, &v) in map.iter().enumerate() {
            dims[v] = self.dims[k];
        }
        let sub_q = self.algebra.quiver();
        let arrows = q
            .arrows()
            .iter()
            .map(|a| match sub_q.arrow_index(&a.id) {
                Some(k) => self.arrows[k].clone(),
                None => Matrix::zeros(dims[a.target], dims[a.source]),
            })
            .collect();
        Representation::new(big.clone(), dims, arrows)
    }
}

/// A morphism of representations: one matrix per vertex, commuting with arrows.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMap {
    domain: Representation,
    codomain: Representation,
    maps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(
        domain: Representation,
        codomain: Representation,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if !same_algebra(&domain.algebra, &codomain.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let n = domain.dims.len();
        if maps.len() != n {
            return Err(Error::MalformedMap("one matrix per vertex expected".into()));
        }
        for v in 0..n {
            if maps[v].shape() != (codomain.dims[v], domain.dims[v]) {
                return Err(Error::MalformedMap(format!(
                    "vertex {v} has the wrong shape"
                )));
            }
        }
        for (k, a) in domain.algebra.quiver().arrows().iter().enumerate() {
            let left = &codomain.arrows[k] * &maps[a.source];
            let right = &maps[a.target] * &domain.arrows[k];
            if left != right {
                return Err(Error::MalformedMap(format!(
                    "does not commute with arrow {}",
                    a.id
                )));
            }
        }
        Ok(Self {
            domain,
            codomain,
            maps,
        })
    }

    pub(crate) fn from_parts(
        domain: Representation,
        codomain: Representation,
        maps: Vec<Matrix>,
    ) -> Self {
        let f = Self {
            domain,
            codomain,
            maps,
        };
        debug_assert!(
            Self::new(f.domain.clone(), f.codomain.clone(), f.maps.clone()).is_ok(),
            "internally built module map is malformed"
        );
        f
    }

    pub fn identity(m: &Representation) -> Self {
        let maps = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        Self::from_parts(m.clone(), m.clone(), maps)
    }

    pub fn zero(domain: &Representation, codomain: &Representation) -> Self {
        let maps = (0..domain.dims.len())
            .map(|v| Matrix::zeros(codomain.dims[v], domain.dims[v]))
            .collect();
        Self::from_parts(domain.clone(), codomain.clone(), maps)
    }

    pub fn domain(&self) -> &Representation {
        &self.domain
    }

    pub fn codomain(&self) -> &Representation {
        &self.codomain
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.maps
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.codomain.dims != self.domain.dims {
            return Err(Error::MalformedMap(
                "composition of incompatible maps".into(),
            ));
        }
        let maps = self
            .maps
            .iter()
            .zip(&first.maps)
            .map(|(g, f)| g * f)
            .collect();
        Ok(Self::from_parts(
            first.domain.clone(),
            self.codomain.clone(),
            maps,
        ))
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::from_parts(self.domain.clone(), self.codomain.clone(), maps)
    }

    pub fn scale(&self, c: Q) -> ModuleMap {
        let maps = self.maps.iter().map(|m| m.scale(c)).collect();
        Self::from_parts(self.domain.clone(), self.codomain.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.ranks()
            .iter()
            .zip(&self.domain.dims)
            .all(|(r, d)| r == d)
    }

    pub fn is_surjective(&self) -> bool {
        self.ranks()
            .iter()
            .zip(&self.codomain.dims)
            .all(|(r, d)| r == d)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `D f: D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// Submodule spanned vertexwise by the (independent) columns of `bases`,
/// with its inclusion.
pub fn submodule(m: &Representation, bases: Vec<Matrix>) -> Result<(Representation, ModuleMap)> {
    let q = m.algebra.quiver();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut arrows = Vec::with_capacity(q.arrow_count());
    for (k, a) in q.arrows().iter().enumerate() {
        let image = &m.arrows[k] * &bases[a.source];
        let restricted = bases[a.target].solve(&image).ok_or_else(|| {
            Error::MalformedRepresentation("subspace not closed under arrows".into())
        })?;
        arrows.push(restricted);
    }
    let sub = Representation::from_parts(m.algebra.clone(), dims, arrows);
    let incl = ModuleMap::from_parts(sub.clone(), m.clone(), bases);
    Ok((sub, incl))
}

/// Quotient by the submodule spanned by `bases`, with its projection.
pub fn quotient(m: &Representation, bases: &[Matrix]) -> Result<(Representation, ModuleMap)> {
    let q = m.algebra.quiver();
    // rows of each projection span the annihilator of the subspace
    let projections: Vec<Matrix> = bases.iter().map(Matrix::left_nullspace).collect();
    let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
    let mut arrows = Vec::with_capacity(q.arrow_count());
    for (k, a) in q.arrows().iter().enumerate() {
        // find X with X * pi_source = pi_target * M_a
        let target = &projections[a.target] * &m.arrows[k];
        let x = projections[a.source]
            .transpose()
            .solve(&target.transpose())
            .ok_or_else(|| {
                Error::MalformedRepresentation("subspace not closed under arrows".into())
            })?
            .transpose();
        arrows.push(x);
    }
    let quo = Representation::from_parts(m.algebra.clone(), dims, arrows);
    let proj = ModuleMap::from_parts(m.clone(), quo.clone(), projections);
    Ok((quo, proj))
}

pub fn kernel(f: &ModuleMap) -> (Representation, ModuleMap) {
    let bases = f.maps.iter().map(Matrix::nullspace).collect();
    submodule(&f.domain, bases).expect("kernels are submodules")
}

pub fn image(f: &ModuleMap) -> (Representation, ModuleMap) {
    let bases = f.maps.iter().map(Matrix::column_basis).collect();
    submodule(&f.codomain, bases).expect("images are submodules")
}

pub fn cokernel(f: &ModuleMap) -> (Representation, ModuleMap) {
    let bases: Vec<Matrix> = f.maps.iter().map(Matrix::column_basis).collect();
    quotient(&f.codomain, &bases).expect("images are submodules")
}

/// Kernel and cokernel of `f` with the canonical maps.
pub struct KernelCokernel {
    pub kernel: Representation,
    pub inclusion: ModuleMap,
    pub cokernel: Representation,
    pub projection: ModuleMap,
}

pub fn kernel_cokernel(f: &ModuleMap) -> KernelCokernel {
    let (kernel, inclusion) = self::kernel(f);
    let (cokernel, projection) = self::cokernel(f);
    KernelCokernel {
        kernel,
        inclusion,
        cokernel,
        projection,
    }
}

/// The unique `h` with `mono ∘ h = g`, if it exists.
pub fn factor_through_mono(g: &ModuleMap, mono: &ModuleMap) -> Option<ModuleMap> {
    let maps = (0..g.maps.len())
        .map(|v| mono.maps[v].solve(&g.maps[v]))
        .collect::<Option<Vec<_>>>()?;
    ModuleMap::new(g.domain.clone(), mono.domain.clone(), maps).ok()
}

/// The unique `h` with `h ∘ epi = g`, if it exists.
pub fn factor_through_epi(g: &ModuleMap, epi: &ModuleMap) -> Option<ModuleMap> {
    let maps = (0..g.maps.len())
        .map(|v| {
            epi.maps[v]
                .transpose()
                .solve(&g.maps[v].transpose())
                .map(|x| x.transpose())
        })
        .collect::<Option<Vec<_>>>()?;
    let h = ModuleMap::new(epi.codomain.clone(), g.codomain.clone(), maps).ok()?;
    (h.after(epi).ok()?.maps == g.maps).then_some(h)
}

fn radical_bases(m: &Representation) -> Vec<Matrix> {
    let q = m.algebra.quiver();
    (0..q.vertex_count())
        .map(|v| {
            let incoming: Vec<&Matrix> = q.in_arrows(v).map(|a| &m.arrows[a]).collect();
            Matrix::hstack(m.dims[v], &incoming).column_basis()
        })
        .collect()
}

fn socle_bases(m: &Representation) -> Vec<Matrix> {
    let q = m.algebra.quiver();
    (0..q.vertex_count())
        .map(|v| {
            let outgoing: Vec<&Matrix> = q.out_arrows(v).map(|a| &m.arrows[a]).collect();
            Matrix::vstack(m.dims[v], &outgoing).nullspace()
        })
        .collect()
}

pub fn radical(m: &Representation) -> (Representation, ModuleMap) {
    submodule(m, radical_bases(m)).expect("the radical is a submodule")
}

pub fn socle(m: &Representation) -> (Representation, ModuleMap) {
    submodule(m, socle_bases(m)).expect("the socle is a submodule")
}

pub fn top(m: &Representation) -> (Representation, ModuleMap) {
    quotient(m, &radical_bases(m)).expect("the radical is a submodule")
}

pub struct StructuralSeries {
    pub top: Representation,
    pub top_projection: ModuleMap,
    pub radical: Representation,
    pub radical_inclusion: ModuleMap,
    pub socle: Representation,
    pub socle_inclusion: ModuleMap,
}

pub fn structural_series(m: &Representation) -> StructuralSeries {
    let (top, top_projection) = top(m);
    let (radical, radical_inclusion) = radical(m);
    let (socle, socle_inclusion) = socle(m);
    StructuralSeries {
        top,
        top_projection,
        radical,
        radical_inclusion,
        socle,
        socle_inclusion,
    }
}

/// Each radical layer `rad^k M / rad^{k+1} M` is zero or simple.
pub fn is_uniserial(m: &Representation) -> bool {
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (rad, _) = radical(&cur);
        if cur.total_dim() - rad.total_dim() > 1 {
            return false;
        }
        cur = rad;
    }
    true
}

/// A rational combination of basis paths.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PathCombination {
    pub terms: Vec<(usize, Q)>,
}

impl PathCombination {
    pub fn single(path: usize) -> Self {
        Self {
            terms: vec![(path, Q::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, path: usize, c: Q) {
        if !c.is_zero() {
            self.terms.push((path, c));
        }
    }

    pub fn display(&self, alg: &MonomialAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| {
                let path = alg.basis_path(*p).display(alg.quiver()).to_string();
                if c.is_one() {
                    path
                } else {
                    format!("{c}*({path})")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A direct sum of indecomposable projectives or injectives, with the offset
/// of every summand's block at every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardSum {
    pub kind: StandardKind,
    pub summands: Vec<usize>,
    pub module: Representation,
    offsets: Vec<Vec<usize>>,
}

impl StandardSum {
    pub fn new(algebra: &Arc<MonomialAlgebra>, kind: StandardKind, summands: &[usize]) -> Self {
        assert!(
            kind != StandardKind::Simple,
            "sums of simples carry no path entries"
        );
        let n = algebra.vertex_count();
        let block = |s: usize, w: usize| match kind {
            StandardKind::Projective => algebra.group(s, w).len(),
            _ => algebra.group(w, s).len(),
        };
        let mut offsets = vec![Vec::with_capacity(summands.len()); n];
        for (w, off) in offsets.iter_mut().enumerate() {
            let mut acc = 0;
            for &s in summands {
                off.push(acc);
                acc += block(s, w);
            }
        }
        let module = if summands.is_empty() {
            Representation::zero(algebra)
        } else {
            let parts: Vec<Representation> = summands
                .iter()
                .map(|&s| Representation::standard(algebra, kind, s).expect("vertex in range"))
                .collect();
            let refs: Vec<&Representation> = parts.iter().collect();
            Representation::direct_sum(&refs).expect("same algebra")
        };
        Self {
            kind,
            summands: summands.to_vec(),
            module,
            offsets,
        }
    }

    pub fn offset(&self, vertex: usize, summand: usize) -> usize {
        self.offsets[vertex][summand]
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.module.dims.len()];
        for &s in &self.summands {
            m[s] += 1;
        }
        m
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// The sub-sum on the given summand positions.
    pub fn select(&self, positions: &[usize]) -> StandardSum {
        let s: Vec<usize> = positions.iter().map(|&p| self.summands[p]).collect();
        StandardSum::new(self.module.algebra(), self.kind, &s)
    }
}

/// Path-entry matrix: `entries[s][r]` is a combination of paths from the
/// `s`-th target summand vertex to the `r`-th source summand vertex.
pub type PathEntries = Vec<Vec<PathCombination>>;

/// The map between two projective (or two injective) sums described by a
/// path-entry matrix. For projectives a path `p: j -> i` sends `P_i -> P_j`,
/// `x ↦ p·x`; for injectives it gives `ν` of that map, `I_i -> I_j`, which
/// sends the dual of `q` to the dual of `y` whenever `q = y·p`.
pub fn sum_map(src: &StandardSum, tgt: &StandardSum, entries: &PathEntries) -> Result<ModuleMap> {
    if src.kind != tgt.kind {
        return Err(Error::MalformedMap("sum kinds differ".into()));
    }
    if entries.len() != tgt.summands.len()
        || entries.iter().any(|row| row.len() != src.summands.len())
    {
        return Err(Error::MalformedMap(
            "entry matrix does not match the block structure".into(),
        ));
    }
    let alg = src.module.algebra().clone();
    for (s, row) in entries.iter().enumerate() {
        for (r, comb) in row.iter().enumerate() {
            for (p, _) in &comb.terms {
                let path = alg.basis_path(*p);
                if path.source != tgt.summands[s] || path.target != src.summands[r] {
                    return Err(Error::MalformedMap(format!(
                        "entry ({s},{r}) is not a path from the target to the source summand vertex"
                    )));
                }
            }
        }
    }
    let n = alg.vertex_count();
    let mut maps: Vec<Matrix> = (0..n)
        .map(|w| Matrix::zeros(tgt.module.dims[w], src.module.dims[w]))
        .collect();
    for (r, &i) in src.summands.iter().enumerate() {
        for (w, map) in maps.iter_mut().enumerate() {
            match src.kind {
                StandardKind::Projective => {
                    for &qk in alg.group(i, w) {
                        let col = src.offset(w, r) + alg.position(qk);
                        for (s, row) in entries.iter().enumerate() {
                            for &(p, c) in &row[r].terms {
                                if let Some(pq) = alg.product(p, qk) {
                                    map[(tgt.offset(w, s) + alg.position(pq), col)] += c;
                                }
                            }
                        }
                    }
                }
                _ => {
                    for &qk in alg.group(w, i) {
                        let col = src.offset(w, r) + alg.position(qk);
                        let qa = &alg.basis_path(qk).arrows;
                        for (s, row) in entries.iter().enumerate() {
                            for &(p, c) in &row[r].terms {
                                let pa = &alg.basis_path(p).arrows;
                                if !qa.ends_with(pa) {
                                    continue;
                                }
                                let y = alg
                                    .lookup(w, &qa[..qa.len() - pa.len()])
                                    .expect("prefix of a basis path is a basis path");
                                map[(tgt.offset(w, s) + alg.position(y), col)] += c;
                            }
                        }
                    }
                }
            }
        }
    }
    ModuleMap::new(src.module.clone(), tgt.module.clone(), maps)
}

/// Reads off the path-entry matrix of a map between two sums of the same kind.
pub fn extract_entries(f: &ModuleMap, src: &StandardSum, tgt: &StandardSum) -> PathEntries {
    let alg = src.module.algebra().clone();
    let mut entries =
        vec![vec![PathCombination::default(); src.summands.len()]; tgt.summands.len()];
    for (r, &i) in src.summands.iter().enumerate() {
        for (s, &j) in tgt.summands.iter().enumerate() {
            let comb = &mut entries[s][r];
            match src.kind {
                StandardKind::Projective => {
                    // image of the generator e_i, read in the block of P_j at i
                    let col = src.offset(i, r) + alg.position(alg.constant(i));
                    for &p in alg.group(j, i) {
                        comb.push(p, f.maps[i][(tgt.offset(i, s) + alg.position(p), col)]);
                    }
                }
                _ => {
                    // coefficient of p: j -> i is the e_j-coordinate of f(p*)
                    let row = tgt.offset(j, s) + alg.position(alg.constant(j));
                    for &p in alg.group(j, i) {
                        comb.push(p, f.maps[j][(row, src.offset(j, r) + alg.position(p))]);
                    }
                }
            }
        }
    }
    entries
}

/// `P → M` with `P` a direct sum of indecomposable projectives, one copy of
/// `P_v` for each copy of `S_v` in the top of `M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub sum: StandardSum,
    pub map: ModuleMap,
}

pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    if m.is_zero() {
        return Err(Error::ZeroModule("projective cover"));
    }
    let alg = m.algebra.clone();
    let mut summands = Vec::new();
    let mut generators: Vec<Vec<Q>> = Vec::new();
    for (v, rad) in radical_bases(m).iter().enumerate() {
        let comp = rad.complement_columns();
        for j in 0..comp.cols() {
            summands.push(v);
            generators.push(comp.column(j));
        }
    }
    let sum = StandardSum::new(&alg, StandardKind::Projective, &summands);
    let pm = m.path_matrices();
    let mut maps: Vec<Matrix> = (0..alg.vertex_count())
        .map(|w| Matrix::zeros(m.dims[w], sum.module.dims[w]))
        .collect();
    for (s, &v) in summands.iter().enumerate() {
        for (w, map) in maps.iter_mut().enumerate() {
            for &qk in alg.group(v, w) {
                let col = sum.offset(w, s) + alg.position(qk);
                for (i, x) in pm[qk].mul_vec(&generators[s]).into_iter().enumerate() {
                    map[(i, col)] = x;
                }
            }
        }
    }
    let map = ModuleMap::from_parts(sum.module.clone(), m.clone(), maps);
    Ok(ProjectiveCover { sum, map })
}

/// `M → I` with `I` a direct sum of indecomposable injectives, one copy of
/// `I_v` for each copy of `S_v` in the socle of `M`.
#[derive(Debug, Clone)]
pub struct InjectiveEnvelope {
    pub sum: StandardSum,
    pub map: ModuleMap,
}

pub fn injective_envelope(m: &Representation) -> Result<InjectiveEnvelope> {
    if m.is_zero() {
        return Err(Error::ZeroModule("injective envelope"));
    }
    let alg = m.algebra.clone();
    let mut summands = Vec::new();
    let mut functionals: Vec<Vec<Q>> = Vec::new();
    for (v, soc) in socle_bases(m).iter().enumerate() {
        if soc.cols() == 0 {
            continue;
        }
        // dual basis functionals of the socle, vanishing on a complement
        let full = Matrix::hstack(m.dims[v], &[soc, &soc.complement_columns()]);
        let inv = full.inverse().expect("socle plus complement is a basis");
        for k in 0..soc.cols() {
            summands.push(v);
            functionals.push(inv.row(k).to_vec());
        }
    }
    let sum = StandardSum::new(&alg, StandardKind::Injective, &summands);
    let pm = m.path_matrices();
    let mut maps: Vec<Matrix> = (0..alg.vertex_count())
        .map(|w| Matrix::zeros(sum.module.dims[w], m.dims[w]))
        .collect();
    for (s, &v) in summands.iter().enumerate() {
        let phi = Matrix::from_rows(1, m.dims[v], functionals[s].clone());
        for (w, map) in maps.iter_mut().enumerate() {
            for &qk in alg.group(w, v) {
                let row = sum.offset(w, s) + alg.position(qk);
                let values = &phi * &pm[qk];
                for j in 0..m.dims[w] {
                    map[(row, j)] = values[(0, j)];
                }
            }
        }
    }
    let map = ModuleMap::from_parts(m.clone(), sum.module.clone(), maps);
    Ok(InjectiveEnvelope { sum, map })
}

/// `P_1 → P_0 → M → 0` with both maps projective covers onto their images.
#[derive(Debug, Clone)]
pub struct ProjectivePresentation {
    pub p1: StandardSum,
    pub p0: StandardSum,
    pub entries: PathEntries,
    pub differential: ModuleMap,
    pub cover: ModuleMap,
}

pub fn minimal_projective_presentation(m: &Representation) -> Result<ProjectivePresentation> {
    let top_cover = projective_cover(m)?;
    let (k, incl) = kernel(&top_cover.map);
    let alg = m.algebra.clone();
    let p1 = if k.is_zero() {
        StandardSum::new(&alg, StandardKind::Projective, &[])
    } else {
        projective_cover(&k)?.sum
    };
    let differential = if k.is_zero() {
        ModuleMap::zero(&p1.module, &top_cover.sum.module)
    } else {
        let second = projective_cover(&k)?;
        incl.after(&second.map)?
    };
    let entries = extract_entries(&differential, &p1, &top_cover.sum);
    debug_assert_eq!(
        sum_map(&p1, &top_cover.sum, &entries).map(|f| f.maps),
        Ok(differential.maps.clone()),
        "path entries do not reproduce the differential"
    );
    Ok(ProjectivePresentation {
        p1,
        p0: top_cover.sum,
        entries,
        differential,
        cover: top_cover.map,
    })
}

/// `0 → M → I_0 → I_1` with both maps injective envelopes of their sources'
/// images.
#[derive(Debug, Clone)]
pub struct InjectiveCopresentation {
    pub i0: StandardSum,
    pub i1: StandardSum,
    pub entries: PathEntries,
    pub envelope: ModuleMap,
    pub differential: ModuleMap,
}

pub fn minimal_injective_copresentation(m: &Representation) -> Result<InjectiveCopresentation> {
    let env = injective_envelope(m)?;
    let (c, proj) = cokernel(&env.map);
    let alg = m.algebra.clone();
    let (i1, differential) = if c.is_zero() {
        let i1 = StandardSum::new(&alg, StandardKind::Injective, &[]);
        let d = ModuleMap::zero(&env.sum.module, &i1.module);
        (i1, d)
    } else {
        let second = injective_envelope(&c)?;
        let d = second.map.after(&proj)?;
        (second.sum, d)
    };
    let entries = extract_entries(&differential, &env.sum, &i1);
    debug_assert_eq!(
        sum_map(&env.sum, &i1, &entries).map(|f| f.maps),
        Ok(differential.maps.clone()),
        "path entries do not reproduce the differential"
    );
    Ok(InjectiveCopresentation {
        i0: env.sum,
        i1,
        entries,
        envelope: env.map,
        differential,
    })
}

/// A basis of `Hom(M, N)`: the solution space of the commuting squares, in
/// the echelon order of the linear system.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let q = m.algebra.quiver();
    let nv = q.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offset[nv];
    // f_v[r][c] lives at offset[v] + r * dim M_v + c
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (u, w) = (a.source, a.target);
        let (na, ma) = (&n.arrows[k], &m.arrows[k]);
        for i in 0..n.dims[w] {
            for j in 0..m.dims[u] {
                let mut row = vec![Q::zero(); unknowns];
                for t in 0..n.dims[u] {
                    row[var(u, t, j)] += na[(i, t)];
                }
                for t in 0..m.dims[w] {
                    row[var(w, i, t)] -= ma[(t, j)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows.len(), unknowns, rows.concat());
    let kernel = system.nullspace();
    let mut out = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let maps = (0..nv)
            .map(|v| {
                let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
                for r in 0..n.dims[v] {
                    for c in 0..m.dims[v] {
                        f[(r, c)] = kernel[(var(v, r, c), j)];
                    }
                }
                f
            })
            .collect();
        out.push(ModuleMap::from_parts(m.clone(), n.clone(), maps));
    }
    Ok(out)
}

const PRIME: u64 = 2_147_483_647;

fn mod_inverse(x: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (x % PRIME, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % PRIME;
        }
        base = base * base % PRIME;
        exp >>= 1;
    }
    acc
}

fn reduce(x: &Q) -> Option<u64> {
    let p = PRIME as i64;
    let den = x.denom().rem_euclid(p) as u64;
    if den == 0 {
        return None;
    }
    let num = x.numer().rem_euclid(p) as u64;
    Some(num * mod_inverse(den) % PRIME)
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = mod_inverse(m[rank][c]);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % PRIME;
                for j in c..cols {
                    let sub = f * m[rank][j] % PRIME;
                    m[i][j] = (m[i][j] + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Decides `M ≅ N` by testing random elements of `Hom(M, N)` for
/// invertibility modulo a large prime. A positive answer is exact: a unit
/// determinant modulo the prime forces a nonzero rational determinant. A
/// negative answer is wrong with probability at most `(dim M / p)^trials`
/// by Schwartz-Zippel.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a75_5f69_736f);
    const TRIALS: usize = 4;
    for _ in 0..TRIALS {
        let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(1..PRIME)).collect();
        let mut all_full = true;
        for v in 0..m.dims.len() {
            let d = m.dims[v];
            if d == 0 {
                continue;
            }
            let mut block = vec![vec![0u64; d]; d];
            for (f, &c) in basis.iter().zip(&coeffs) {
                for (i, row) in block.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        let Some(x) = reduce(&f.maps[v][(i, j)]) else {
                            all_full = false;
                            continue;
                        };
                        *slot = (*slot + x * c) % PRIME;
                    }
                }
            }
            if rank_mod_p(block, d) < d {
                all_full = false;
                break;
            }
        }
        if all_full {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `dim Ext^1(S_s, S_t)`, read as `dim Hom(P_1, S_t)` for the second term of
/// a minimal projective presentation of `S_s`.
pub fn ext1_dim(algebra: &Arc<MonomialAlgebra>, s: usize, t: usize) -> Result<usize> {
    let pres = minimal_projective_presentation(&Representation::standard(
        algebra,
        StandardKind::Simple,
        s,
    )?)?;
    if pres.p1.is_empty() {
        return Ok(0);
    }
    let st = Representation::standard(algebra, StandardKind::Simple, t)?;
    Ok(hom_basis(&pres.p1.module, &st)?.len())
}

/// The quiver with one arrow `s -> t` whenever `Ext^1(S_s, S_t) ≠ 0`.
pub fn ext_quiver(algebra: &Arc<MonomialAlgebra>) -> Quiver {
    let n = algebra.vertex_count();
    let mut pairs = std::collections::BTreeSet::new();
    for s in 0..n {
        let pres = minimal_projective_presentation(&Representation::simple(algebra, s))
            .expect("simples are nonzero");
        for t in 0..n {
            if pres.p1.is_empty() {
                continue;
            }
            let st = Representation::simple(algebra, t);
            if !hom_basis(&pres.p1.module, &st)
                .expect("same algebra")
                .is_empty()
            {
                pairs.insert((s, t));
            }
        }
    }
    Quiver::from_pairs(algebra.quiver().vertices().to_vec(), &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MonomialAlgebra;
    use crate::quiver::Quiver;

    fn two_cycle_ab() -> Arc<MonomialAlgebra> {
        let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        Arc::new(MonomialAlgebra::from_ids(q, &[&["a", "b"]]).unwrap())
    }

    fn line() -> Arc<MonomialAlgebra> {
        Arc::new(MonomialAlgebra::new(Quiver::linear(2), vec![]).unwrap())
    }

    fn star() -> Arc<MonomialAlgebra> {
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "1")]).unwrap();
        Arc::new(MonomialAlgebra::new(q, vec![]).unwrap())
    }

    #[test]
    fn standard_dims() {
        let a = two_cycle_ab();
        assert_eq!(Representation::projective(&a, 0).dims(), &[1, 1]);
        assert_eq!(Representation::projective(&a, 1).dims(), &[1, 2]);
        assert_eq!(Representation::simple(&a, 0).dims(), &[1, 0]);
        let l = line();
        assert_eq!(
            Representation::injective(&l, 0),
            Representation::simple(&l, 0)
        );
        assert_eq!(Representation::injective(&l, 1).dims(), &[1, 1]);
        assert!(Representation::standard(&l, StandardKind::Simple, 7).is_err());
    }

    #[test]
    fn relations_checked() {
        let a = two_cycle_ab();
        let one = Matrix::identity(1);
        // a then b acts as 1 on this module, violating the relation
        let bad = Representation::new(a.clone(), vec![1, 1], vec![one.clone(), one]);
        assert!(matches!(bad, Err(Error::MalformedRepresentation(_))));
    }

    #[test]
    fn hom_examples() {
        let a = two_cycle_ab();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(hom_basis(&s1, &s1).unwrap().len(), 1);
        assert_eq!(
            hom_basis(&Representation::projective(&a, 1), &s2)
                .unwrap()
                .len(),
            1
        );
        assert!(hom_basis(&s1, &s2).unwrap().is_empty());
        assert_eq!(
            hom_basis(&s1, &Representation::simple(&line(), 0)).unwrap_err(),
            Error::AlgebraMismatch
        );
    }

    #[test]
    fn kernel_cokernel_examples() {
        let a = two_cycle_ab();
        let p1 = Representation::projective(&a, 0);
        let id = ModuleMap::identity(&p1);
        let kc = kernel_cokernel(&id);
        assert!(kc.kernel.is_zero() && kc.cokernel.is_zero());
        let z = ModuleMap::zero(&p1, &p1);
        let kc = kernel_cokernel(&z);
        assert_eq!(kc.kernel.dims(), p1.dims());
        assert_eq!(kc.cokernel.dims(), p1.dims());
        let (_, incl) = radical(&p1);
        let kc = kernel_cokernel(&incl);
        assert_eq!(kc.cokernel.dims(), &[1, 0]);
        assert!(kc.projection.after(&incl).unwrap().is_zero());
    }

    #[test]
    fn series_examples() {
        let a = two_cycle_ab();
        let s = Representation::simple(&a, 0);
        let ser = structural_series(&s);
        assert_eq!(ser.top.dims(), s.dims());
        assert!(ser.radical.is_zero());
        assert_eq!(ser.socle.dims(), s.dims());
        let ser = structural_series(&Representation::projective(&a, 1));
        assert_eq!(ser.top.dims(), &[0, 1]);
        assert_eq!(ser.radical.dims(), &[1, 1]);
    }

    #[test]
    fn covers() {
        let a = two_cycle_ab();
        for v in 0..2 {
            let p = Representation::projective(&a, v);
            assert!(projective_cover(&p).unwrap().map.is_isomorphism());
        }
        let c = projective_cover(&Representation::simple(&a, 0)).unwrap();
        assert_eq!(c.sum.summands, vec![0]);
        let s2 = Representation::simple(&a, 1);
        let ss = Representation::direct_sum(&[&s2, &s2]).unwrap();
        assert_eq!(projective_cover(&ss).unwrap().sum.summands, vec![1, 1]);
        assert_eq!(
            projective_cover(&Representation::zero(&a)).unwrap_err(),
            Error::ZeroModule("projective cover")
        );
    }

    #[test]
    fn presentations() {
        let a = two_cycle_ab();
        let pres = minimal_projective_presentation(&Representation::projective(&a, 0)).unwrap();
        assert!(pres.p1.is_empty());
        let pres = minimal_projective_presentation(&Representation::simple(&a, 0)).unwrap();
        assert_eq!(pres.p1.summands, vec![1]);
        let l = line();
        let pres = minimal_projective_presentation(&Representation::simple(&l, 0)).unwrap();
        assert_eq!(
            (pres.p1.summands.clone(), pres.p0.summands.clone()),
            (vec![1], vec![0])
        );
        assert_eq!(pres.entries[0][0].display(&l), "a1");
    }

    #[test]
    fn copresentations() {
        let s = star();
        let cop = minimal_injective_copresentation(&Representation::simple(&s, 0)).unwrap();
        assert_eq!(cop.i0.summands, vec![0]);
        assert_eq!(cop.i0.module.dims(), &[1, 1, 1]);
        assert_eq!(cop.i1.summands, vec![1, 2]);
        let l = line();
        let cop = minimal_injective_copresentation(&Representation::simple(&l, 1)).unwrap();
        assert_eq!(cop.i0.summands, vec![1]);
        assert_eq!(cop.i0.module.dims(), &[1, 1]);
        let inj = minimal_injective_copresentation(&Representation::injective(&s, 0)).unwrap();
        assert!(inj.i1.is_empty());
    }

    #[test]
    fn ext_examples() {
        let a = two_cycle_ab();
        assert_eq!(ext1_dim(&a, 0, 1).unwrap(), 1);
        assert_eq!(ext1_dim(&a, 0, 0).unwrap(), 0);
        assert_eq!(ext_quiver(&a).oriented_cycle_type(), Some(2));
        assert_eq!(ext1_dim(&line(), 0, 1).unwrap(), 1);
        let ss = Arc::new(
            MonomialAlgebra::new(Quiver::from_strs(&["1", "2"], &[]).unwrap(), vec![]).unwrap(),
        );
        assert_eq!(ext1_dim(&ss, 0, 1).unwrap(), 0);
        assert_eq!(ext_quiver(&ss).arrow_count(), 0);
    }

    #[test]
    fn injective_matches_dual_of_opposite_projective() {
        for alg in [two_cycle_ab(), line(), star()] {
            let op = alg.opposite_arc();
            for v in 0..alg.vertex_count() {
                let via_dual = Representation::projective(&op, v)
                    .dual()
                    .rebase(&alg)
                    .unwrap();
                let direct = Representation::injective(&alg, v);
                assert!(is_isomorphic(&via_dual, &direct).unwrap());
            }
        }
    }

    #[test]
    fn isomorphism_detection() {
        let a = two_cycle_ab();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert!(is_isomorphic(&s1, &s1).unwrap());
        assert!(!is_isomorphic(&s1, &s2).unwrap());
        // P_1 and I_1 both have dimension vector (1,1) but differ
        let p1 = Representation::projective(&a, 0);
        let i1 = Representation::injective(&a, 0);
        assert_eq!(p1.dims(), i1.dims());
        assert!(!is_isomorphic(&p1, &i1).unwrap());
    }

    #[test]
    fn uniserial_checks() {
        let a = two_cycle_ab();
        assert!(is_uniserial(&Representation::projective(&a, 1)));
        let s = star();
        assert!(!is_uniserial(&Representation::injective(&s, 0)));
    }
}
