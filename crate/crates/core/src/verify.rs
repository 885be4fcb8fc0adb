//! End-to-end self check: every construction identity the library relies on,
//! run at one radius and collected into a report instead of failing fast.

use std::collections::BTreeSet;

use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{weyl_group_order_a2, weyl_orbit, AlgebraId, WeightVector};
use crate::colouring::transition_group;
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::graphene::{build, build_by_congruence, patches_equal, Method};
use crate::lattice::{Disk, LatticePoint};
use crate::projection::{compose_chain, lift_a2_to_g2, project_orbit, projection_matrix, ProjectionChain};
use crate::refinement::basic_tile_points;

use AlgebraId::{A2, A3, B3, C3, G2};

/// Margin trimmed from the disk before comparing constructions.
pub const TRIM_MARGIN: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub radius: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn weights(alg: AlgebraId, pts: &[&[i64]]) -> BTreeSet<WeightVector> {
    pts.iter().map(|c| WeightVector::from_ints(alg, c).expect("rank matches")).collect()
}

fn a2_hexagon() -> BTreeSet<WeightVector> {
    weights(A2, &[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]])
}

fn g2_orbit_set() -> BTreeSet<WeightVector> {
    weights(G2, &[&[0, 1], &[1, -1], &[-1, 2], &[1, -2], &[-1, 1], &[0, -1]])
}

fn orbits() -> Result<(bool, String)> {
    let cases: [(AlgebraId, &[i64], BTreeSet<WeightVector>); 4] = [
        (G2, &[0, 1], g2_orbit_set()),
        (A3, &[0, 1, 0], weights(A3, &[&[0, 1, 0], &[1, -1, 1], &[1, 0, -1], &[0, -1, 0], &[-1, 1, -1], &[-1, 0, 1]])),
        (B3, &[1, 0, 0], weights(B3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 2], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -2]])),
        (C3, &[1, 0, 0], weights(C3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 1], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -1]])),
    ];
    let mut ok = true;
    let mut sizes = Vec::new();
    for (alg, dom, expected) in cases {
        let orbit = weyl_orbit(&WeightVector::from_ints(alg, dom)?)?;
        ok &= orbit.len() == 6 && orbit.as_set() == expected;
        sizes.push(format!("{alg}:{}", orbit.len()));
    }
    Ok((ok, sizes.join(" ")))
}

fn g2_projection_split() -> Result<(bool, String)> {
    let pr = projection_matrix(G2, A2)?;
    let orbit = weyl_orbit(&WeightVector::from_ints(G2, &[0, 1])?)?;
    let image: BTreeSet<_> = project_orbit(&pr, &orbit)?.into_iter().collect();
    let t1 = weyl_orbit(&WeightVector::from_ints(A2, &[1, 0])?)?.as_set();
    let t2 = weyl_orbit(&WeightVector::from_ints(A2, &[0, 1])?)?.as_set();
    let split: BTreeSet<_> = t1.union(&t2).cloned().collect();
    let ok = image == a2_hexagon() && split == image && t1.is_disjoint(&t2);
    Ok((ok, format!("{} image weights", image.len())))
}

fn b3_chains() -> Result<(bool, String)> {
    let via_g2 = compose_chain(&ProjectionChain::through(&[B3, G2, A2])?)?;
    let via_a3 = compose_chain(&ProjectionChain::through(&[B3, A3, A2])?)?;
    let direct = projection_matrix(B3, A2)?;
    let expected = vec![vec![1, 1, 1], vec![0, 1, 0]];
    let ok = via_g2.entries == expected && via_a3.entries == expected && direct.entries == expected;
    Ok((ok, format!("{:?}", via_g2.entries)))
}

fn inverse_projection() -> Result<(bool, String)> {
    let lifted: BTreeSet<_> = a2_hexagon().iter().map(lift_a2_to_g2).collect::<Result<_>>()?;
    Ok((lifted == g2_orbit_set(), format!("{} lifted weights", lifted.len())))
}

fn six_way(radius: Rational) -> Result<(bool, String)> {
    let reference = build_by_congruence(radius, 0)?;
    let margin = rat(TRIM_MARGIN);
    let mut ok = true;
    let mut failed = Vec::new();
    for method in Method::ALL {
        if !patches_equal(&reference, &build(method, radius)?, margin)? {
            ok = false;
            failed.push(method.label());
        }
    }
    let n = reference.interior_vertices(margin).len();
    let detail = if ok {
        format!("{n} interior vertices agree across {} routes", Method::ALL.len())
    } else {
        format!("mismatch: {}", failed.join(", "))
    };
    Ok((ok && n > 0, detail))
}

fn class_alternation(radius: Rational) -> Result<(bool, String)> {
    let patch = build_by_congruence(radius, 0)?;
    let ok = patch.hexagons.iter().all(|h| h.vertex_classes() == [1, 2, 1, 2, 1, 2]);
    Ok((ok, format!("{} hexagons", patch.hexagons.len())))
}

fn vertex_classes(radius: Rational) -> Result<(bool, String)> {
    let patch = build_by_congruence(radius, 0)?;
    let disk = Disk::new(radius)?;
    let expected: BTreeSet<LatticePoint> =
        crate::lattice::p_patch(&disk).into_iter().filter(|p| p.numerator_class() != 0).collect();
    let inner = Disk::interior(radius, rat(TRIM_MARGIN));
    let got: BTreeSet<_> = patch.vertices.iter().filter(|v| inner.contains(v)).copied().collect();
    let want: BTreeSet<_> = expected.into_iter().filter(|v| inner.contains(v)).collect();
    Ok((got == want, format!("{} K1∪K2 points", want.len())))
}

fn groups() -> Result<(bool, String)> {
    let mut ok = true;
    let mut orders = Vec::new();
    for m in [2, 3] {
        let g = transition_group(m)?;
        ok &= g.is_group() && g.abelian && g.order == (m * m) as usize;
        orders.push(format!("m={m}:{}", g.order));
    }
    Ok((ok, orders.join(" ")))
}

fn tile_counts() -> Result<(bool, String)> {
    let mut ok = true;
    for m in 1..=6 {
        ok &= basic_tile_points(m)?.len() as i64 == (m + 1) * (m + 2) / 2;
    }
    Ok((ok, "M=1..6".into()))
}

/// Runs every check at `radius` (at least 4 so the trimmed interior is non-trivial).
pub fn verify_all(radius: Rational) -> Result<VerifyReport> {
    if radius.is_negative() || radius < rat(4) {
        return Err(Error::RadiusTooSmall(radius.to_string()));
    }
    let runs: Vec<(&str, Result<(bool, String)>)> = vec![
        ("orbit_sizes", orbits()),
        ("g2_to_a2_split", g2_projection_split()),
        ("b3_chains_commute", b3_chains()),
        ("inverse_projection", inverse_projection()),
        ("weyl_group_order", Ok((weyl_group_order_a2() == 6, format!("{}", weyl_group_order_a2())))),
        ("six_way_equality", six_way(radius)),
        ("hexagon_class_alternation", class_alternation(radius)),
        ("vertices_are_k1_k2", vertex_classes(radius)),
        ("transition_group_axioms", groups()),
        ("basic_tile_counts", tile_counts()),
    ];
    let checks: Vec<Check> = runs
        .into_iter()
        .map(|(name, r)| {
            let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
            Check { name: name.into(), passed, detail }
        })
        .collect();
    Ok(VerifyReport { radius: radius.to_string(), passed: checks.iter().all(|c| c.passed), checks })
}
