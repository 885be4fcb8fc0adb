//! Lattice refinement by the basic-tile scheme `F_M`, and the exact analysis
//! of proximity cells of honeycomb vertices.
//!
//! `F_M` is the set of points `(s1/M)ω1 + (s2/M)ω2` with `s0 + s1 + s2 = M`
//! in the triangle `0, ω1, ω2`. That triangle is the fundamental alcove of the
//! affine Weyl group of A2, so its images under the group spread `F_M` over
//! the plane as `(1/M)·P`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::affine::{depth_for_radius, elements_up_to_length};
use crate::error::{Error, Result};
use crate::exact::{frac, rat, Rational};
use crate::graphene::{congruence_from_points, GraphenePatch, Method};
use crate::lattice::{p_patch, q_patch, voronoi_corners, Disk, LatticePoint, Point2, VoronoiCell, HEX_OFFSETS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TilePointFM {
    pub s0: i64,
    pub s1: i64,
    pub s2: i64,
    #[serde(rename = "M")]
    pub m: i64,
}

impl TilePointFM {
    pub fn point(&self) -> LatticePoint {
        LatticePoint::scaled(self.s1, self.s2, self.m)
    }
}

fn check_level(m: i64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidRefinement(m));
    }
    Ok(())
}

/// All `(M+2 choose 2)` points of `F_M`, ordered by `(s1, s2)`.
pub fn basic_tile_points(m: i64) -> Result<Vec<TilePointFM>> {
    check_level(m)?;
    Ok((0..=m).flat_map(|s1| (0..=m - s1).map(move |s2| TilePointFM { s0: m - s1 - s2, s1, s2, m })).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedLattice {
    pub m: i64,
    pub radius: Rational,
    /// Points with `scale_den = M`, sorted.
    pub points: Vec<LatticePoint>,
}

/// Images of `F_M` under every alcove reachable from the fundamental one,
/// restricted to the disk.
pub fn refine_lattice(m: i64, radius: Rational) -> Result<RefinedLattice> {
    let tile = basic_tile_points(m)?;
    let disk = Disk::new(radius)?;
    let points: BTreeSet<LatticePoint> = elements_up_to_length(depth_for_radius(radius))
        .iter()
        .flat_map(|g| tile.iter().map(move |t| g.apply(&t.point())))
        .filter(|p| disk.contains(p))
        .collect();
    Ok(RefinedLattice { m, radius, points: points.into_iter().collect() })
}

/// Congruence-class construction on the refined lattice: class of a point
/// `p` is the class of the integer vector `M·p`; class 0 is deleted.
pub fn refined_graphene(m: i64, radius: Rational) -> Result<GraphenePatch> {
    let lattice = refine_lattice(m, radius)?;
    Ok(congruence_from_points(
        Method::Congruence,
        radius,
        m,
        &lattice.points,
        0,
        vec![
            format!("refined lattice (1/{m})P from F_{m} spread by affine reflections"),
            "class of M*p, K0 deleted".into(),
        ],
    ))
}

/// Exact Voronoi cells of the honeycomb vertices that have all three
/// nearest neighbours inside the patch.
pub fn proximity_cells(patch: &GraphenePatch) -> Result<Vec<VoronoiCell>> {
    if patch.scale_den != 1 {
        return Err(Error::ScaleMismatch(patch.scale_den, 1));
    }
    let set = patch.vertex_set();
    let mut cells = Vec::new();
    for v in &patch.vertices {
        let nearest: Vec<LatticePoint> =
            HEX_OFFSETS.iter().map(|&(dx, dy)| v.offset(dx, dy)).filter(|n| set.contains(n)).collect();
        if nearest.len() < 3 {
            continue;
        }
        // Second shell: the six same-class vertices at squared distance 2.
        let second = crate::lattice::ROOTS.iter().map(|&(dx, dy)| v.offset(dx, dy)).filter(|n| set.contains(n));
        let neighbours: Vec<Point2> = nearest.iter().copied().chain(second).map(|p| p.to_point()).collect();
        cells.push(VoronoiCell { site: *v, corners: voronoi_corners(&v.to_point(), &neighbours) });
    }
    Ok(cells)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProximityReport {
    pub radius: String,
    pub interior_radius: String,
    pub interior_cells: usize,
    pub all_triangles: bool,
    pub all_equilateral: bool,
    pub corners_in_k0: bool,
    pub corner_set_equals_q: bool,
    pub corners_and_sites_equal_p: bool,
    pub cell_squared_edge: String,
    pub p_triangle_squared_edge: String,
    pub squared_edge_ratio: String,
    /// Squared Euclidean area of one cell.
    pub cell_area_sq: String,
    pub finer_than_p: bool,
    pub note: String,
}

/// Exact facts about the proximity cells of an unrefined patch, measured on
/// the disk of radius `patch.radius − 2`.
pub fn proximity_refinement_report(patch: &GraphenePatch) -> Result<ProximityReport> {
    let margin = rat(2);
    let inner = Disk::interior(patch.radius, margin);
    let cells: Vec<VoronoiCell> = proximity_cells(patch)?.into_iter().filter(|c| inner.contains(&c.site)).collect();

    let all_triangles = !cells.is_empty() && cells.iter().all(|c| c.corners.len() == 3);
    let edges: BTreeSet<Rational> = cells.iter().flat_map(VoronoiCell::edge_norms_sq).collect();
    let all_equilateral = cells.iter().all(|c| c.edge_norms_sq().windows(2).all(|w| w[0] == w[1]));
    let corners: BTreeSet<Point2> = cells.iter().flat_map(|c| c.corners.iter().copied()).collect();
    let corners_in_k0 = corners.iter().all(|c| c.class() == Some(0));

    // The corner set reaches √(2/3) beyond the sites, so compare one unit
    // further in.
    let deep = Disk::interior(patch.radius, margin + rat(1));
    let deep_corners: BTreeSet<Point2> = corners.iter().filter(|c| deep.contains_point(c)).copied().collect();
    let q: BTreeSet<Point2> = q_patch(&deep).iter().map(LatticePoint::to_point).collect();
    let corner_set_equals_q = deep_corners == q;
    let sites: BTreeSet<Point2> = cells.iter().map(|c| c.site.to_point()).filter(|p| deep.contains_point(p)).collect();
    let union: BTreeSet<Point2> = deep_corners.union(&sites).copied().collect();
    let p: BTreeSet<Point2> = p_patch(&deep).iter().map(LatticePoint::to_point).collect();
    let corners_and_sites_equal_p = union == p;

    let cell_edge = if edges.len() == 1 { edges.iter().next().copied() } else { None };
    let p_edge = frac(2, 3);
    let ratio = cell_edge.map(|e| e / p_edge);
    let area_sq = cells.first().map(|c| {
        let a = c.omega_area();
        a * a / rat(3)
    });
    let finer_than_p = ratio.is_some_and(|r| r < rat(1));
    let show = |v: Option<Rational>| v.map_or_else(|| "undefined".to_string(), |r| r.to_string());
    let note = match ratio {
        Some(r) if r < rat(1) => format!("cells are smaller than the P triangles (squared edge ratio {r})"),
        Some(r) => format!(
            "cells are {} than the P triangles (squared edge ratio {r}); corners reproduce Q and corners plus sites reproduce P, so this construction does not yield a finer lattice",
            if r == rat(1) { "the same size" } else { "larger" }
        ),
        None => "no uniform interior cell edge".to_string(),
    };
    Ok(ProximityReport {
        radius: patch.radius.to_string(),
        interior_radius: (patch.radius - margin).to_string(),
        interior_cells: cells.len(),
        all_triangles,
        all_equilateral,
        corners_in_k0,
        corner_set_equals_q,
        corners_and_sites_equal_p,
        cell_squared_edge: show(cell_edge),
        p_triangle_squared_edge: p_edge.to_string(),
        squared_edge_ratio: show(ratio),
        cell_area_sq: show(area_sq),
        finer_than_p,
        note,
    })
}
