//! Closed-form theory of connected Nakayama algebras: Kupisch series,
//! the indecomposables `M(i,l) = P_i / rad^l P_i`, and their translates.

use std::sync::Arc;

use crate::algebra::{MonomialAlgebra, Path};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::repr::Representation;

#[derive(Debug, Clone, PartialEq)]
pub struct KupischSeries {
    algebra: Arc<MonomialAlgebra>,
    /// Vertices along the unique walk, starting at the source when linear.
    order: Vec<usize>,
    lengths: Vec<usize>,
    successor: Vec<Option<usize>>,
    predecessor: Vec<Option<usize>>,
    cyclic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NakayamaIndec {
    pub vertex: usize,
    pub length: usize,
}

impl NakayamaIndec {
    pub fn new(vertex: usize, length: usize) -> Self {
        Self { vertex, length }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndecInfo {
    pub module: NakayamaIndec,
    pub projective: bool,
    pub injective: bool,
    pub simple: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Tau,
    TauInverse,
}

impl KupischSeries {
    /// Reads the series off the path basis of a connected Nakayama algebra.
    pub fn of(algebra: &Arc<MonomialAlgebra>) -> Result<Self> {
        if !algebra.is_nakayama() {
            return Err(Error::NotNakayama);
        }
        let q = algebra.quiver();
        if !q.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = q.vertex_count();
        let successor: Vec<Option<usize>> = (0..n)
            .map(|v| q.out_arrows(v).next().map(|a| q.arrow(a).target))
            .collect();
        let predecessor: Vec<Option<usize>> = (0..n)
            .map(|v| q.in_arrows(v).next().map(|a| q.arrow(a).source))
            .collect();
        let lengths: Vec<usize> = (0..n).map(|v| algebra.paths_from(v).count()).collect();
        let cyclic = successor.iter().all(Option::is_some);
        let start = if cyclic {
            0
        } else {
            (0..n)
                .find(|&v| predecessor[v].is_none())
                .expect("a connected line has a source")
        };
        let mut order = vec![start];
        while order.len() < n {
            let next = successor[*order.last().unwrap()].expect("walk covers the connected quiver");
            order.push(next);
        }
        let k = Self {
            algebra: algebra.clone(),
            order,
            lengths,
            successor,
            predecessor,
            cyclic,
        };
        k.validate()?;
        Ok(k)
    }

    /// The Nakayama algebra on `C_n` with `P_i` of length `c[i-1]`.
    pub fn cyclic(c: &[usize]) -> Result<Self> {
        Self::from_lengths(c, true)
    }

    /// The Nakayama algebra on `1 -> 2 -> ... -> n` with `P_i` of length
    /// `c[i-1]`.
    pub fn linear(c: &[usize]) -> Result<Self> {
        Self::from_lengths(c, false)
    }

    fn from_lengths(c: &[usize], cyclic: bool) -> Result<Self> {
        let n = c.len();
        if n == 0 {
            return Err(Error::InvalidKupisch("empty series".into()));
        }
        check_series(c, cyclic)?;
        let quiver = if cyclic {
            Quiver::cycle(n)
        } else {
            Quiver::linear(n)
        };
        // arrow i leaves vertex i; the path of length c_i from i is the relation
        let relations = (0..n)
            .filter(|&i| cyclic || i + c[i] < n)
            .map(|i| {
                let arrows = (0..c[i]).map(|t| (i + t) % n).collect();
                Path::new(&quiver, arrows)
            })
            .collect::<Result<Vec<_>>>()?;
        let algebra = Arc::new(MonomialAlgebra::new(quiver, relations)?);
        let k = Self::of(&algebra)?;
        if k.lengths != c {
            return Err(Error::InvalidKupisch(format!(
                "series {:?} is realized with lengths {:?}",
                c, k.lengths
            )));
        }
        Ok(k)
    }

    fn validate(&self) -> Result<()> {
        let walk: Vec<usize> = self.order.iter().map(|&v| self.lengths[v]).collect();
        check_series(&walk, self.cyclic)
    }

    pub fn algebra(&self) -> &Arc<MonomialAlgebra> {
        &self.algebra
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `c_v`, the length of `P_v`.
    pub fn length(&self, v: usize) -> usize {
        self.lengths[v]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// The series read along the walk.
    pub fn walk_lengths(&self) -> Vec<usize> {
        self.order.iter().map(|&v| self.lengths[v]).collect()
    }

    pub fn successor(&self, v: usize) -> Option<usize> {
        self.successor[v]
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.predecessor[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.len()
    }

    fn check(&self, m: NakayamaIndec) -> Result<()> {
        if m.vertex >= self.vertex_count() {
            return Err(Error::UnknownVertex(m.vertex.to_string()));
        }
        let max = self.lengths[m.vertex];
        if m.length == 0 || m.length > max {
            return Err(Error::InvalidIndecomposable {
                vertex: self.algebra.quiver().vertex_label(m.vertex).to_string(),
                length: m.length,
                max,
            });
        }
        Ok(())
    }

    pub fn is_projective(&self, m: NakayamaIndec) -> bool {
        m.length == self.lengths[m.vertex]
    }

    /// `M(i,l)` is injective iff no `M(j,l+1)` with `σ(j) = i` exists.
    pub fn is_injective(&self, m: NakayamaIndec) -> bool {
        match self.predecessor[m.vertex] {
            None => true,
            Some(j) => self.lengths[j] <= m.length,
        }
    }

    pub fn enumerate_indecomposables(&self) -> Vec<IndecInfo> {
        let mut out = Vec::with_capacity(self.lengths.iter().sum());
        for v in 0..self.vertex_count() {
            for l in 1..=self.lengths[v] {
                let module = NakayamaIndec::new(v, l);
                out.push(IndecInfo {
                    module,
                    projective: self.is_projective(module),
                    injective: self.is_injective(module),
                    simple: l == 1,
                });
            }
        }
        out
    }

    /// Entry `j` counts the `0 <= t < l` with `σ^t(i) = j`.
    pub fn dim_vector(&self, m: NakayamaIndec) -> Result<Vec<i64>> {
        self.check(m)?;
        let mut d = vec![0; self.vertex_count()];
        let mut v = m.vertex;
        for t in 0..m.length {
            d[v] += 1;
            if t + 1 < m.length {
                v = self.successor[v].expect("a module of length > 1 continues along an arrow");
            }
        }
        Ok(d)
    }

    pub fn translate(
        &self,
        m: NakayamaIndec,
        direction: Direction,
    ) -> Result<Option<NakayamaIndec>> {
        self.check(m)?;
        Ok(match direction {
            Direction::Tau if self.is_projective(m) => None,
            Direction::Tau => Some(NakayamaIndec::new(
                self.successor[m.vertex].expect("non-projective modules have a successor"),
                m.length,
            )),
            Direction::TauInverse if self.is_injective(m) => None,
            Direction::TauInverse => Some(NakayamaIndec::new(
                self.predecessor[m.vertex].expect("non-injective modules have a predecessor"),
                m.length,
            )),
        })
    }

    /// The explicit representation of `M(i,l)`.
    pub fn module(&self, m: NakayamaIndec) -> Result<Representation> {
        self.check(m)?;
        Ok(Representation::truncated_projective(
            &self.algebra,
            m.vertex,
            m.length,
        ))
    }

    /// Identifies a module with `M(i,l)` when its top is simple, which over a
    /// Nakayama algebra forces it to be the quotient of `P_i` of that length.
    pub fn identify(&self, m: &Representation) -> Option<NakayamaIndec> {
        let top = crate::repr::top(m).0;
        if top.total_dim() != 1 {
            return None;
        }
        let vertex = top.dims().iter().position(|&d| d == 1)?;
        let ind = NakayamaIndec::new(vertex, m.total_dim());
        self.check(ind).ok()?;
        Some(ind)
    }
}

fn check_series(walk: &[usize], cyclic: bool) -> Result<()> {
    let n = walk.len();
    let last = if cyclic { n } else { n - 1 };
    for t in 0..last {
        let (c, next) = (walk[t], walk[(t + 1) % n]);
        if c < 2 {
            return Err(Error::InvalidKupisch(format!(
                "position {} has length {c} < 2",
                t + 1
            )));
        }
        if next + 1 < c {
            return Err(Error::InvalidKupisch(format!(
                "position {} has length {c} but its successor only {next}",
                t + 1
            )));
        }
    }
    if !cyclic {
        if walk[n - 1] != 1 {
            return Err(Error::InvalidKupisch(
                "the last vertex of a line must have length 1".into(),
            ));
        }
        if let Some(t) = (0..n).find(|&t| walk[t] > n - t) {
            return Err(Error::InvalidKupisch(format!(
                "position {} runs off the line",
                t + 1
            )));
        }
    }
    Ok(())
}

impl NakayamaIndec {
    pub fn display(&self, k: &KupischSeries) -> String {
        format!(
            "M({},{})",
            k.algebra.quiver().vertex_label(self.vertex),
            self.length
        )
    }
}
