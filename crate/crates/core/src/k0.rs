//! The Grothendieck group `K₀` in the basis of simples: Coxeter matrices,
//! permutation certificates, τ-map construction and the existence decision.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::MonomialAlgebra;
use crate::artranslation::{tau, tau_inverse};
use crate::error::{Error, Result};
use crate::hnf::solve_integral;
use crate::linalg::{IntMatrix, Matrix};
use crate::nakayama::{Direction, KupischSeries, NakayamaIndec};
use crate::repr::{ext_quiver, Representation};

/// A class in `K₀`, as a vector of composition multiplicities.
pub type K0Class = Vec<i64>;

/// An endomorphism of `K₀` acting on column classes.
pub type K0Map = IntMatrix;

pub fn dim_vector(m: &Representation) -> K0Class {
    m.dim_vector()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Coxeter {
    pub sign: Sign,
    pub matrix: Matrix,
    pub integral: bool,
}

impl Coxeter {
    pub fn to_int(&self) -> Option<IntMatrix> {
        self.matrix.to_int()
    }
}

/// `± Cᵀ C⁻¹` for the Cartan matrix `C`.
pub fn coxeter_matrix(a: &MonomialAlgebra, sign: Sign) -> Result<Coxeter> {
    let c = a.cartan_matrix().to_rational();
    let inv = c.inverse().ok_or(Error::SingularCartan)?;
    let mut matrix = &c.transpose() * &inv;
    if sign == Sign::Minus {
        matrix = matrix.scale(-crate::linalg::Q::one());
    }
    let integral = matrix.is_integral();
    Ok(Coxeter {
        sign,
        matrix,
        integral,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutationVerdict {
    /// Both are permutation matrices; `perm[j]` is the row of the `1` in
    /// column `j` of the first matrix.
    Permutation { perm: Vec<usize> },
    /// The product differs from the identity at this entry.
    NotInverse { row: usize, col: usize, value: i64 },
}

/// If `m·m'` is the identity for non-negative integer matrices, both are
/// permutation matrices; this certifies it entry by entry.
pub fn permutation_check(m: &IntMatrix, mp: &IntMatrix) -> Result<PermutationVerdict> {
    let n = m.rows();
    if m.cols() != n || mp.rows() != n || mp.cols() != n {
        return Err(Error::Shape(
            "permutation check needs two square matrices of equal size".into(),
        ));
    }
    for x in [m, mp] {
        for i in 0..n {
            for j in 0..n {
                if x[(i, j)] < 0 {
                    return Err(Error::NegativeEntry { row: i, col: j });
                }
            }
        }
    }
    let prod = m * mp;
    for i in 0..n {
        for j in 0..n {
            let want = (i == j) as i64;
            if prod[(i, j)] != want {
                return Ok(PermutationVerdict::NotInverse {
                    row: i,
                    col: j,
                    value: prod[(i, j)],
                });
            }
        }
    }
    let perm = permutation_of(m).ok_or_else(|| {
        Error::Inconsistent(
            "a non-negative matrix with a non-negative inverse is not a permutation".into(),
        )
    })?;
    if permutation_of(mp).is_none() {
        return Err(Error::Inconsistent(
            "the inverse is not a permutation matrix".into(),
        ));
    }
    Ok(PermutationVerdict::Permutation { perm })
}

fn permutation_of(m: &IntMatrix) -> Option<Vec<usize>> {
    let n = m.rows();
    let mut perm = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for j in 0..n {
        let col = m.column(j);
        if col.iter().sum::<i64>() != 1 || col.iter().any(|&x| x != 0 && x != 1) {
            return None;
        }
        let i = col.iter().position(|&x| x == 1)?;
        if std::mem::replace(&mut seen[i], true) {
            return None;
        }
        perm.push(i);
    }
    Some(perm)
}

/// Column `i` is `[τS_i]` for non-projective simples and the assigned class
/// for projective simples.
pub fn build_nakayama_tau_map(k: &KupischSeries, x: &BTreeMap<usize, K0Class>) -> Result<K0Map> {
    let n = k.vertex_count();
    let label = |v: usize| k.algebra().quiver().vertex_label(v).to_string();
    for (&v, class) in x {
        if v >= n {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if k.length(v) != 1 {
            return Err(Error::Assignment(format!(
                "S_{} is not projective",
                label(v)
            )));
        }
        if class.len() != n {
            return Err(Error::Assignment(format!(
                "class for S_{} has length {}",
                label(v),
                class.len()
            )));
        }
    }
    let mut columns = Vec::with_capacity(n);
    for v in 0..n {
        let simple = NakayamaIndec::new(v, 1);
        match k.translate(simple, Direction::Tau)? {
            Some(t) => columns.push(k.dim_vector(t)?),
            None => columns.push(x.get(&v).cloned().ok_or_else(|| {
                Error::Assignment(format!("missing class for projective S_{}", label(v)))
            })?),
        }
    }
    Ok(IntMatrix::from_columns(n, &columns))
}

/// The Nakayama τ-map with every projective simple sent to zero.
pub fn nakayama_tau_map(k: &KupischSeries) -> K0Map {
    let n = k.vertex_count();
    let x = (0..n)
        .filter(|&v| k.length(v) == 1)
        .map(|v| (v, vec![0; n]))
        .collect();
    build_nakayama_tau_map(k, &x)
        .expect("the zero assignment covers exactly the projective simples")
}

/// An integer `X` with `X d = t` for all pairs, free Hermite coordinates set
/// to zero, or `None` if no integral solution exists.
pub fn tau_map_feasible(n: usize, constraints: &[(K0Class, K0Class)]) -> Option<K0Map> {
    let a: Vec<Vec<i64>> = constraints.iter().map(|(d, _)| d.clone()).collect();
    let mut rows = Vec::with_capacity(n * n);
    for r in 0..n {
        let b: Vec<i64> = constraints.iter().map(|(_, t)| t[r]).collect();
        rows.extend(solve_integral(&a, n, &b)?);
    }
    Some(IntMatrix::from_rows(n, n, rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Exists,
    NotExists,
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exists => "exists",
            Status::NotExists => "not-exists",
            Status::Undecided => "undecided",
        })
    }
}

/// Which case of the decision a component fell into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Branch {
    /// Oriented cycles present and the component is Nakayama.
    CyclicNakayama,
    /// Oriented cycles present and some vertex has two arrows in or out.
    NotNakayama,
    /// No oriented cycles, no relations: the Coxeter matrix with this sign.
    Hereditary(Sign),
    /// No oriented cycles, relations present, Nakayama.
    LinearNakayama,
    /// No oriented cycles, relations present, not Nakayama.
    AcyclicWithRelations,
    /// No sign of the Coxeter matrix reproduced τ on the simples.
    CoxeterMismatch,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::CyclicNakayama => f.write_str("non-acyclic Nakayama component"),
            Branch::NotNakayama => f.write_str("non-acyclic component that is not Nakayama"),
            Branch::Hereditary(s) => {
                write!(f, "hereditary component, Coxeter matrix with sign {s}")
            }
            Branch::LinearNakayama => f.write_str("acyclic Nakayama component with relations"),
            Branch::AcyclicWithRelations => {
                f.write_str("acyclic non-Nakayama component with relations")
            }
            Branch::CoxeterMismatch => {
                f.write_str("Coxeter matrix does not reproduce τ on simples")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentVerdict {
    /// Vertex positions of the component in the full algebra.
    pub vertices: Vec<usize>,
    pub status: Status,
    pub branch: Branch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauMapVerdict {
    pub status: Status,
    pub witness: Option<K0Map>,
    pub components: Vec<ComponentVerdict>,
}

/// Picks the sign of `±Cᵀ C⁻¹` that sends each non-projective simple to
/// `[τS]`, preferring minus when both do.
fn validated_coxeter(a: &Arc<MonomialAlgebra>) -> Result<Option<(Sign, K0Map)>> {
    let n = a.vertex_count();
    let mut targets = Vec::new();
    for v in 0..n {
        let t = tau(&Representation::simple(a, v))?;
        if !t.is_zero() {
            let mut e = vec![0; n];
            e[v] = 1;
            targets.push((e, t.dim_vector()));
        }
    }
    for sign in [Sign::Minus, Sign::Plus] {
        let Some(m) = coxeter_matrix(a, sign)?.to_int() else {
            continue;
        };
        if targets.iter().all(|(d, t)| &m.mul_vec(d) == t) {
            return Ok(Some((sign, m)));
        }
    }
    Ok(None)
}

fn decide_component(a: &Arc<MonomialAlgebra>) -> Result<(Status, Branch, Option<K0Map>)> {
    let q = a.quiver();
    let nakayama = a.is_nakayama();
    Ok(if !q.is_acyclic() {
        if nakayama {
            let k = KupischSeries::of(a)?;
            (
                Status::Exists,
                Branch::CyclicNakayama,
                Some(nakayama_tau_map(&k)),
            )
        } else {
            (Status::NotExists, Branch::NotNakayama, None)
        }
    } else if !a.has_relations() {
        match validated_coxeter(a)? {
            Some((sign, m)) => (Status::Exists, Branch::Hereditary(sign), Some(m)),
            None => (Status::Undecided, Branch::CoxeterMismatch, None),
        }
    } else if nakayama {
        let k = KupischSeries::of(a)?;
        (
            Status::Exists,
            Branch::LinearNakayama,
            Some(nakayama_tau_map(&k)),
        )
    } else {
        (Status::Undecided, Branch::AcyclicWithRelations, None)
    })
}

/// Decides whether a τ-map exists, component by component.
pub fn decide_tau_map(a: &Arc<MonomialAlgebra>) -> Result<TauMapVerdict> {
    let n = a.vertex_count();
    let mut witness = IntMatrix::zeros(n, n);
    let mut components = Vec::new();
    for comp in a.quiver().components() {
        let (sub, map) = a.restrict(&comp)?;
        let (status, branch, w) = decide_component(&Arc::new(sub))?;
        if let Some(w) = w {
            for r in 0..map.len() {
                for c in 0..map.len() {
                    witness[(map[r], map[c])] = w[(r, c)];
                }
            }
        }
        components.push(ComponentVerdict {
            vertices: map,
            status,
            branch,
        });
    }
    let status = if components.iter().any(|c| c.status == Status::NotExists) {
        Status::NotExists
    } else if components.iter().any(|c| c.status == Status::Undecided) {
        Status::Undecided
    } else {
        Status::Exists
    };
    Ok(TauMapVerdict {
        status,
        witness: (status == Status::Exists).then_some(witness),
        components,
    })
}

/// The matrix with columns `[τ⁻¹S_i]`, checked to be a two-sided inverse of
/// `phi`. Requires that no simple module is injective.
pub fn invert_to_tau_inverse_map(phi: &K0Map, a: &Arc<MonomialAlgebra>) -> Result<K0Map> {
    let n = a.vertex_count();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
    }
    let (sources, _) = ext_quiver(a).sources_and_sinks();
    if let Some(&v) = sources.iter().next() {
        return Err(Error::InjectiveSimple(
            a.quiver().vertex_label(v).to_string(),
        ));
    }
    let columns = (0..n)
        .map(|v| tau_inverse(&Representation::simple(a, v)).map(|m| m.dim_vector()))
        .collect::<Result<Vec<_>>>()?;
    let inv = IntMatrix::from_columns(n, &columns);
    let id = IntMatrix::identity(n);
    if phi * &inv != id || &inv * phi != id {
        return Err(Error::Inconsistent(
            "the τ-map and the τ⁻¹ classes of the simples are not mutually inverse".into(),
        ));
    }
    Ok(inv)
}

/// True when `phi` sends the class of every listed module to the class of
/// its translate.
pub fn is_tau_map_on(phi: &K0Map, modules: &[Representation]) -> Result<bool> {
    for m in modules {
        let t = tau(m)?;
        // τM = 0 exactly for projective M, which impose no condition
        if t.is_zero() {
            continue;
        }
        if phi.mul_vec(&m.dim_vector()) != t.dim_vector() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::quiver::Quiver;

    fn alg(vs: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[&str]]) -> Arc<MonomialAlgebra> {
        let q = Quiver::from_strs(vs, arrows).unwrap();
        Arc::new(MonomialAlgebra::from_ids(q, rels).unwrap())
    }

    fn two_cycle() -> Arc<MonomialAlgebra> {
        alg(
            &["1", "2"],
            &[("a", "1", "2"), ("b", "2", "1")],
            &[&["a", "b"]],
        )
    }

    fn line() -> Arc<MonomialAlgebra> {
        alg(&["1", "2"], &[("a", "1", "2")], &[])
    }

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_nested(rows)
    }

    #[test]
    fn coxeter_examples() {
        let c = coxeter_matrix(&two_cycle(), Sign::Plus).unwrap();
        assert_eq!(c.matrix, Matrix::identity(2));
        assert!(c.integral);
        let h = coxeter_matrix(&line(), Sign::Minus)
            .unwrap()
            .to_int()
            .unwrap();
        assert_eq!(h.mul_vec(&[1, 0]), vec![0, 1]);
        let one = alg(&["1"], &[], &[]);
        assert_eq!(
            coxeter_matrix(&one, Sign::Plus).unwrap().matrix,
            Matrix::identity(1)
        );
        assert_eq!(
            coxeter_matrix(&one, Sign::Minus).unwrap().matrix[(0, 0)],
            q(-1)
        );
    }

    #[test]
    fn permutation_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(
            permutation_check(&id, &id).unwrap(),
            PermutationVerdict::Permutation { perm: vec![0, 1] }
        );
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            permutation_check(&swap, &swap).unwrap(),
            PermutationVerdict::Permutation { perm: vec![1, 0] }
        );
        let shear = m(&[vec![1, 1], vec![0, 1]]);
        assert!(matches!(
            permutation_check(&shear, &id).unwrap(),
            PermutationVerdict::NotInverse { .. }
        ));
        let neg = m(&[vec![1, -1], vec![0, 1]]);
        assert_eq!(
            permutation_check(&shear, &neg).unwrap_err(),
            Error::NegativeEntry { row: 0, col: 1 }
        );
    }

    #[test]
    fn nakayama_maps() {
        let k = KupischSeries::of(&two_cycle()).unwrap();
        assert_eq!(nakayama_tau_map(&k), m(&[vec![0, 1], vec![1, 0]]));
        let h = KupischSeries::linear(&[2, 1]).unwrap();
        let phi = nakayama_tau_map(&h);
        assert_eq!(phi, m(&[vec![0, 0], vec![1, 0]]));
        let one = KupischSeries::linear(&[1]).unwrap();
        let x = BTreeMap::from([(0, vec![7])]);
        assert_eq!(build_nakayama_tau_map(&one, &x).unwrap(), m(&[vec![7]]));
        assert!(matches!(
            build_nakayama_tau_map(&one, &BTreeMap::new()),
            Err(Error::Assignment(_))
        ));
        let bad = BTreeMap::from([(0, vec![0, 0])]);
        assert!(matches!(
            build_nakayama_tau_map(&h, &bad),
            Err(Error::Assignment(_))
        ));
    }

    #[test]
    fn feasibility_examples() {
        let swap = vec![(vec![1, 0], vec![0, 1]), (vec![0, 1], vec![1, 0])];
        assert_eq!(
            tau_map_feasible(2, &swap),
            Some(m(&[vec![0, 1], vec![1, 0]]))
        );
        assert_eq!(tau_map_feasible(2, &[]), Some(IntMatrix::zeros(2, 2)));
        let clash = vec![(vec![1, 0], vec![0, 1]), (vec![1, 0], vec![1, 1])];
        assert_eq!(tau_map_feasible(2, &clash), None);
        // 2x = 1 has a rational but no integral solution
        assert_eq!(tau_map_feasible(1, &[(vec![2], vec![1])]), None);
    }

    #[test]
    fn decisions() {
        let v = decide_tau_map(&two_cycle()).unwrap();
        assert_eq!(v.status, Status::Exists);
        assert_eq!(v.witness, Some(m(&[vec![0, 1], vec![1, 0]])));
        let bad = alg(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "1"), ("c", "3", "2")],
            &[&["a", "b"], &["b", "a"]],
        );
        let v = decide_tau_map(&bad).unwrap();
        assert_eq!((v.status, v.witness), (Status::NotExists, None));
        let v = decide_tau_map(&line()).unwrap();
        assert_eq!(v.status, Status::Exists);
        assert_eq!(v.components[0].branch, Branch::Hereditary(Sign::Minus));
        let rel = alg(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "4", "2")],
            &[&["a", "b"]],
        );
        assert_eq!(decide_tau_map(&rel).unwrap().status, Status::Undecided);
    }

    #[test]
    fn decision_combines_components() {
        let a = alg(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "1"), ("c", "3", "4")],
            &[&["a", "b"]],
        );
        let v = decide_tau_map(&a).unwrap();
        assert_eq!(v.status, Status::Exists);
        let w = v.witness.unwrap();
        assert_eq!(w.mul_vec(&[1, 0, 0, 0]), vec![0, 1, 0, 0]);
        assert_eq!(w.mul_vec(&[0, 0, 1, 0]), vec![0, 0, 0, 1]);
    }

    #[test]
    fn inverse_maps() {
        let a = two_cycle();
        let phi = decide_tau_map(&a).unwrap().witness.unwrap();
        assert_eq!(invert_to_tau_inverse_map(&phi, &a).unwrap(), phi);
        let l = line();
        let phi = decide_tau_map(&l).unwrap().witness.unwrap();
        assert_eq!(
            invert_to_tau_inverse_map(&phi, &l).unwrap_err(),
            Error::InjectiveSimple("1".into())
        );
        let c3 = KupischSeries::cyclic(&[2, 2, 2]).unwrap();
        let phi = nakayama_tau_map(&c3);
        let inv = invert_to_tau_inverse_map(&phi, c3.algebra()).unwrap();
        assert_eq!(inv, phi.transpose());
        assert_ne!(inv, phi);
    }
}
