//! Integer projection matrices from ω-coordinates of an algebra to
//! ω-coordinates of a maximal subalgebra, their composition along chains,
//! and the exact inverse of the G2 → A2 map.

use std::fmt;

use serde::Serialize;

use crate::algebra::{weyl_orbit, AlgebraId, WeightOrbit, WeightVector};
use crate::error::{Error, Result};
use crate::exact::{self, rat, RatMatrix, Rational};

use AlgebraId::{A2, A3, B3, C3, G2};

/// Pairs with a stored projection matrix.
pub const SUPPORTED_PAIRS: [(AlgebraId, AlgebraId); 6] = [(G2, A2), (A3, A2), (B3, G2), (B3, A3), (B3, A2), (C3, A2)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionMatrix {
    pub source: AlgebraId,
    pub target: AlgebraId,
    /// `rank(target) × rank(source)`, acting on column vectors.
    pub entries: Vec<Vec<i64>>,
}

impl fmt::Display for ProjectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Pr({} -> {})", self.source, self.target)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "  [{} ]", cells.join(""))?;
        }
        Ok(())
    }
}

fn supported_list() -> String {
    SUPPORTED_PAIRS.iter().map(|(s, t)| format!("{s}->{t}")).collect::<Vec<_>>().join(", ")
}

pub fn projection_matrix(source: AlgebraId, target: AlgebraId) -> Result<ProjectionMatrix> {
    let entries: Vec<Vec<i64>> = match (source, target) {
        (G2, A2) => vec![vec![1, 1], vec![1, 0]],
        (A3, A2) => vec![vec![1, 1, 0], vec![0, 0, 1]],
        (B3, G2) => vec![vec![0, 1, 0], vec![1, 0, 1]],
        (B3, A3) => vec![vec![0, 1, 1], vec![1, 0, 0], vec![0, 1, 0]],
        (B3, A2) => vec![vec![1, 1, 1], vec![0, 1, 0]],
        (C3, A2) => vec![vec![1, 1, 2], vec![0, 1, 0]],
        _ => return Err(Error::UnsupportedProjection { from: source, to: target, supported: supported_list() }),
    };
    Ok(ProjectionMatrix { source, target, entries })
}

pub fn apply(pr: &ProjectionMatrix, w: &WeightVector) -> Result<WeightVector> {
    if w.algebra != pr.source {
        return Err(Error::AlgebraMismatch { expected: pr.source, found: w.algebra });
    }
    if w.coords.len() != pr.source.rank() {
        return Err(Error::DimensionMismatch { algebra: w.algebra, rank: pr.source.rank(), found: w.coords.len() });
    }
    let coords = pr
        .entries
        .iter()
        .map(|row| row.iter().zip(&w.coords).fold(Rational::from_integer(0), |acc, (&m, c)| acc + c * m))
        .collect();
    WeightVector::new(pr.target, coords)
}

/// Projection hops listed in application order (first hop acts first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionChain {
    pub hops: Vec<ProjectionMatrix>,
}

impl ProjectionChain {
    pub fn new(hops: Vec<ProjectionMatrix>) -> Self {
        Self { hops }
    }

    /// Chain through the listed algebras, e.g. `[B3, G2, A2]`.
    pub fn through(path: &[AlgebraId]) -> Result<Self> {
        let hops = path.windows(2).map(|w| projection_matrix(w[0], w[1])).collect::<Result<Vec<_>>>()?;
        Ok(Self { hops })
    }
}

pub fn compose_chain(chain: &ProjectionChain) -> Result<ProjectionMatrix> {
    let (first, rest) = chain.hops.split_first().ok_or(Error::EmptyChain)?;
    let mut acc = first.clone();
    for hop in rest {
        if hop.source != acc.target {
            return Err(Error::JunctionMismatch { left: acc.target, right: hop.source });
        }
        let entries = hop
            .entries
            .iter()
            .map(|row| {
                (0..acc.source.rank()).map(|j| row.iter().zip(&acc.entries).map(|(&h, a)| h * a[j]).sum()).collect()
            })
            .collect();
        acc = ProjectionMatrix { source: acc.source, target: hop.target, entries };
    }
    Ok(acc)
}

/// Image of every orbit element, multiplicity preserved, in orbit order.
pub fn project_orbit(pr: &ProjectionMatrix, orbit: &WeightOrbit) -> Result<Vec<WeightVector>> {
    if orbit.algebra != pr.source {
        return Err(Error::AlgebraMismatch { expected: pr.source, found: orbit.algebra });
    }
    orbit.elements.iter().map(|w| apply(pr, w)).collect()
}

/// Dominant weight of the hexagonal orbit projected for each source algebra.
pub fn lowest_dominant(algebra: AlgebraId) -> Option<WeightVector> {
    let coords: &[i64] = match algebra {
        G2 => &[0, 1],
        A3 => &[0, 1, 0],
        B3 | C3 => &[1, 0, 0],
        _ => return None,
    };
    WeightVector::from_ints(algebra, coords).ok()
}

pub fn lowest_orbit(algebra: AlgebraId) -> Option<WeightOrbit> {
    lowest_dominant(algebra).and_then(|d| weyl_orbit(&d).ok())
}

/// Weight system of the lowest nontrivial representation: the hexagonal
/// orbit, plus the zero weight for the 7-dimensional G2 and B3 modules.
pub fn lowest_weight_system(algebra: AlgebraId) -> Option<Vec<WeightVector>> {
    let mut weights = lowest_orbit(algebra)?.elements;
    if matches!(algebra, G2 | B3) {
        weights.push(WeightVector::zero(algebra));
    }
    Some(weights)
}

/// Exact inverse of `Pr(G2 → A2)`, mapping A2 ω-coordinates back to G2.
pub fn inverse_g2_a2() -> RatMatrix {
    let pr = projection_matrix(G2, A2).expect("stored pair");
    let m: RatMatrix = pr.entries.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    exact::inverse(&m).expect("Pr(G2->A2) has determinant -1")
}

/// Applies [`inverse_g2_a2`] to an A2 weight.
pub fn lift_a2_to_g2(w: &WeightVector) -> Result<WeightVector> {
    if w.algebra != A2 {
        return Err(Error::AlgebraMismatch { expected: A2, found: w.algebra });
    }
    WeightVector::new(G2, exact::mat_vec(&inverse_g2_a2(), &w.coords))
}
