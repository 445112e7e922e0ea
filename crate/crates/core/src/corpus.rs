//! Deterministic families of algebras used for exhaustive checks and
//! benchmarks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{MonomialAlgebra, Path};
use crate::error::Result;
use crate::nakayama::KupischSeries;
use crate::quiver::Quiver;

/// All admissible cyclic Kupisch series with `n <= max_n` and entries
/// `<= max_c`. Rotations are kept: they label the same algebra differently.
pub fn cyclic_series(max_n: usize, max_c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut c = vec![2; n];
        loop {
            if (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i]) {
                out.push(c.clone());
            }
            // odometer over 2..=max_c
            let Some(pos) = (0..n).rev().find(|&i| c[i] < max_c) else {
                break;
            };
            c[pos] += 1;
            for x in &mut c[pos + 1..] {
                *x = 2;
            }
        }
    }
    out
}

/// All admissible linear Kupisch series with `n <= max_n` and entries
/// `<= max_c`.
pub fn linear_series(max_n: usize, max_c: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, max_c: usize, out: &mut Vec<Vec<usize>>) {
        let t = prefix.len();
        if t == n - 1 {
            prefix.push(1);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // position t may reach at most the end of the line
        for c in 2..=max_c.min(n - t) {
            if let Some(&prev) = prefix.last() {
                if c + 1 < prev {
                    continue;
                }
            }
            prefix.push(c);
            extend(prefix, n, max_c, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        extend(&mut Vec::new(), n, max_c, &mut out);
    }
    out.retain(|c| c.windows(2).all(|w| w[1] + 1 >= w[0]));
    out
}

/// Connected Nakayama algebras: cyclic with `n <= 5`, `c_i <= 6` and linear
/// with `n <= 5`, `c_i <= 5`.
pub fn nakayama_corpus() -> Result<Vec<KupischSeries>> {
    nakayama_family(5, 6, 5, 5)
}

pub fn nakayama_family(
    cyc_n: usize,
    cyc_c: usize,
    lin_n: usize,
    lin_c: usize,
) -> Result<Vec<KupischSeries>> {
    let mut out = Vec::new();
    for c in cyclic_series(cyc_n, cyc_c) {
        out.push(KupischSeries::cyclic(&c)?);
    }
    for c in linear_series(lin_n, lin_c) {
        out.push(KupischSeries::linear(&c)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct RandomShape {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relations: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        Self {
            max_vertices: 4,
            max_arrows: 6,
            max_relations: 4,
        }
    }
}

/// `count` random finite-dimensional monomial algebras, drawn by rejection
/// from a seeded generator.
pub fn random_monomial_algebras(
    count: usize,
    seed: u64,
    shape: RandomShape,
) -> Vec<Arc<MonomialAlgebra>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(a) = random_algebra(&mut rng, shape) {
            out.push(Arc::new(a));
        }
    }
    out
}

fn random_algebra(rng: &mut ChaCha8Rng, shape: RandomShape) -> Option<MonomialAlgebra> {
    let n = rng.gen_range(1..=shape.max_vertices);
    let m = rng.gen_range(0..=shape.max_arrows);
    let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..=m)
        .map(|k| {
            let s = rng.gen_range(1..=n);
            let t = rng.gen_range(1..=n);
            (format!("a{k}"), s.to_string(), t.to_string())
        })
        .collect();
    let quiver = Quiver::new(vertices, arrows).ok()?;
    let mut relations = Vec::new();
    if m > 0 {
        for _ in 0..rng.gen_range(0..=shape.max_relations) {
            let len = rng.gen_range(2..=3);
            let mut walk = vec![rng.gen_range(0..m)];
            while walk.len() < len {
                let end = quiver.arrow(*walk.last().unwrap()).target;
                let next: Vec<usize> = quiver.out_arrows(end).collect();
                if next.is_empty() {
                    break;
                }
                walk.push(next[rng.gen_range(0..next.len())]);
            }
            if walk.len() >= 2 {
                relations.push(Path::new(&quiver, walk).ok()?);
            }
        }
    }
    MonomialAlgebra::new(quiver, relations).ok()
}

/// `C_m` with one extra source vertex mapping into the cycle, all paths of
/// length 2 set to zero.
pub fn cycle_with_source(m: usize) -> Result<Arc<MonomialAlgebra>> {
    let mut vertices: Vec<String> = (1..=m).map(|v| v.to_string()).collect();
    vertices.push((m + 1).to_string());
    let mut arrows: Vec<(String, String, String)> = (1..=m)
        .map(|i| (format!("a{i}"), i.to_string(), (i % m + 1).to_string()))
        .collect();
    arrows.push(("c".into(), (m + 1).to_string(), "1".into()));
    let quiver = Quiver::new(vertices, arrows)?;
    let mut relations = Vec::new();
    for a in 0..quiver.arrow_count() {
        let end = quiver.arrow(a).target;
        for b in quiver.out_arrows(end) {
            relations.push(Path::new(&quiver, vec![a, b])?);
        }
    }
    Ok(Arc::new(
        MonomialAlgebra::new(quiver, relations)?.with_name(format!("C{m}+source")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_small_counts() {
        assert_eq!(cyclic_series(1, 4), vec![vec![2], vec![3], vec![4]]);
        let two: Vec<Vec<usize>> = cyclic_series(2, 4)
            .into_iter()
            .filter(|c| c.len() == 2)
            .collect();
        assert_eq!(
            two,
            vec![
                vec![2, 2],
                vec![2, 3],
                vec![3, 2],
                vec![3, 3],
                vec![3, 4],
                vec![4, 3],
                vec![4, 4]
            ]
        );
    }

    #[test]
    fn linear_small() {
        assert_eq!(
            linear_series(3, 5),
            vec![vec![1], vec![2, 1], vec![2, 2, 1], vec![3, 2, 1]]
        );
    }

    #[test]
    fn every_member_builds() {
        let corpus = nakayama_family(3, 4, 3, 3).unwrap();
        assert!(corpus.iter().all(|k| k.algebra().is_nakayama()));
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_monomial_algebras(10, 7, RandomShape::default());
        let b = random_monomial_algebras(10, 7, RandomShape::default());
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|x| x.vertex_count() <= 4 && x.quiver().arrow_count() <= 6));
    }

    #[test]
    fn source_family() {
        for m in 1..=4 {
            let a = cycle_with_source(m).unwrap();
            assert!(!a.is_nakayama());
            assert!(!a.quiver().is_acyclic());
            assert!(a.basis().iter().all(|p| p.len() <= 1));
        }
    }
}
