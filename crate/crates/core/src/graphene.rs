//! Finite honeycomb patches built by every route: Brillouin zones of Q,
//! deletion of a congruence class from P, and projection of a Weyl orbit of
//! G2, A3, B3 or C3 followed by affine-reflection tiling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::affine::{depth_for_radius, generators};
use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lattice::{
    brillouin_zone, p_patch, q_patch, scaled_weight_points, sort_ccw, Disk, LatticePoint, Point2, HEX_OFFSETS,
};
use crate::projection::{apply, compose_chain, lowest_weight_system, ProjectionChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Brillouin,
    Congruence,
    ProjG2,
    ProjA3,
    ProjB3ViaG2,
    ProjB3ViaA3,
    ProjC3,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Brillouin,
        Method::Congruence,
        Method::ProjG2,
        Method::ProjA3,
        Method::ProjB3ViaG2,
        Method::ProjB3ViaA3,
        Method::ProjC3,
    ];

    pub const PROJECTIONS: [Method; 5] =
        [Method::ProjG2, Method::ProjA3, Method::ProjB3ViaG2, Method::ProjB3ViaA3, Method::ProjC3];

    pub const fn label(self) -> &'static str {
        match self {
            Method::Brillouin => "BRILLOUIN",
            Method::Congruence => "CONGRUENCE",
            Method::ProjG2 => "PROJ_G2",
            Method::ProjA3 => "PROJ_A3",
            Method::ProjB3ViaG2 => "PROJ_B3_VIA_G2",
            Method::ProjB3ViaA3 => "PROJ_B3_VIA_A3",
            Method::ProjC3 => "PROJ_C3",
        }
    }

    /// Algebras visited by a projection route, source first.
    pub fn chain(self) -> Option<&'static [AlgebraId]> {
        use AlgebraId::*;
        match self {
            Method::ProjG2 => Some(&[G2, A2]),
            Method::ProjA3 => Some(&[A3, A2]),
            Method::ProjB3ViaG2 => Some(&[B3, G2, A2]),
            Method::ProjB3ViaA3 => Some(&[B3, A3, A2]),
            Method::ProjC3 => Some(&[C3, A2]),
            Method::Brillouin | Method::Congruence => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.label() == norm)
            .ok_or_else(|| Error::Malformed(format!("unknown method {s:?}")))
    }
}

/// One hexagon: its centre and six vertices, counterclockwise from the
/// lexicographically largest vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexCell {
    pub center: LatticePoint,
    pub vertices: [LatticePoint; 6],
}

impl HexCell {
    pub fn around(center: LatticePoint) -> Self {
        let vertices = HEX_OFFSETS.map(|(dx, dy)| center.offset(dx, dy));
        Self { center, vertices }
    }

    /// Rebuilds a hexagon from six vertices in any order. Returns `None` if
    /// they are not the vertex set of a honeycomb hexagon.
    pub fn from_vertices(vertices: &[LatticePoint]) -> Option<Self> {
        let den = vertices.first()?.scale_den;
        if vertices.len() != 6 || vertices.iter().any(|v| v.scale_den != den) {
            return None;
        }
        let (sx, sy) = vertices.iter().fold((0, 0), |(a, b), v| (a + v.x, b + v.y));
        if sx % 6 != 0 || sy % 6 != 0 {
            return None;
        }
        let cell = HexCell::around(LatticePoint::scaled(sx / 6, sy / 6, den));
        let given: BTreeSet<_> = vertices.iter().copied().collect();
        (given == cell.vertices.iter().copied().collect()).then_some(cell)
    }

    pub fn vertex_classes(&self) -> [u8; 6] {
        self.vertices.map(|v| v.numerator_class())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphenePatch {
    pub method: Method,
    pub radius: Rational,
    pub scale_den: i64,
    pub deleted_class: u8,
    /// Sorted by ω-coordinates.
    pub vertices: Vec<LatticePoint>,
    /// Sorted by centre.
    pub hexagons: Vec<HexCell>,
    pub provenance: Vec<String>,
}

impl GraphenePatch {
    fn assemble(
        method: Method,
        radius: Rational,
        scale_den: i64,
        deleted_class: u8,
        extra_vertices: impl IntoIterator<Item = LatticePoint>,
        hexagons: impl IntoIterator<Item = HexCell>,
        provenance: Vec<String>,
    ) -> Self {
        let hexagons: BTreeSet<HexCell> = hexagons.into_iter().collect();
        let vertices: BTreeSet<LatticePoint> =
            extra_vertices.into_iter().chain(hexagons.iter().flat_map(|h| h.vertices)).collect();
        Self {
            method,
            radius,
            scale_den,
            deleted_class,
            vertices: vertices.into_iter().collect(),
            hexagons: hexagons.into_iter().collect(),
            provenance,
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<LatticePoint> {
        self.vertices.iter().copied().collect()
    }

    /// Vertices inside the disk of radius `radius − margin`.
    pub fn interior_vertices(&self, margin: Rational) -> BTreeSet<LatticePoint> {
        let disk = Disk::interior(self.radius, margin);
        self.vertices.iter().filter(|v| disk.contains(v)).copied().collect()
    }

    pub fn vertex_index(&self) -> BTreeMap<LatticePoint, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect()
    }

    pub fn classes(&self) -> Vec<u8> {
        self.vertices.iter().map(LatticePoint::numerator_class).collect()
    }

    /// Number of hexagons containing each vertex.
    pub fn incidence(&self) -> BTreeMap<LatticePoint, usize> {
        let mut counts = BTreeMap::new();
        for h in &self.hexagons {
            for v in h.vertices {
                *counts.entry(v).or_insert(0) += 1;
            }
        }
        counts
    }
}

fn check_radius(radius: Rational) -> Result<Disk> {
    if radius.is_negative() {
        return Err(Error::NegativeRadius(radius.to_string()));
    }
    Disk::new(radius)
}

pub fn build_by_brillouin(radius: Rational) -> Result<GraphenePatch> {
    let disk = check_radius(radius)?;
    let hexagons = q_patch(&disk)
        .iter()
        .map(|q| {
            let cell = brillouin_zone(q)?;
            let vertices: Vec<LatticePoint> =
                cell.corners.iter().map(|c| c.to_lattice().expect("Q cells have integral corners")).collect();
            HexCell::from_vertices(&vertices).ok_or_else(|| Error::Malformed(format!("cell at {q} is not a hexagon")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GraphenePatch::assemble(
        Method::Brillouin,
        radius,
        1,
        0,
        [],
        hexagons,
        vec!["Brillouin zones of Q; centres kept as metadata only".into()],
    ))
}

/// Removes one congruence class from a set of points of `(1/den)·P` and
/// centres a hexagon on every removed point.
pub(crate) fn congruence_from_points(
    method: Method,
    radius: Rational,
    den: i64,
    points: &[LatticePoint],
    deleted_class: u8,
    provenance: Vec<String>,
) -> GraphenePatch {
    let (centres, kept): (Vec<LatticePoint>, Vec<LatticePoint>) =
        points.iter().partition(|p| p.numerator_class() == deleted_class);
    GraphenePatch::assemble(
        method,
        radius,
        den,
        deleted_class,
        kept,
        centres.into_iter().map(HexCell::around),
        provenance,
    )
}

pub fn build_by_congruence(radius: Rational, deleted_class: u8) -> Result<GraphenePatch> {
    if deleted_class > 2 {
        return Err(Error::InvalidClass(deleted_class.into()));
    }
    let disk = check_radius(radius)?;
    Ok(congruence_from_points(
        Method::Congruence,
        radius,
        1,
        &p_patch(&disk),
        deleted_class,
        vec![format!("weight lattice minus congruence class K{deleted_class}")],
    ))
}

/// The A2 hexagon obtained from a projection route before tiling, with a
/// log of what was dropped on the way.
pub fn projected_hexagon(route: Method) -> Result<(HexCell, Vec<String>)> {
    let path = route.chain().ok_or_else(|| Error::Malformed(format!("{route} is not a projection route")))?;
    let source = path[0];
    let pr = compose_chain(&ProjectionChain::through(path)?)?;
    let weights =
        lowest_weight_system(source).ok_or_else(|| Error::Malformed(format!("no stored orbit for {source}")))?;
    let mut log =
        vec![format!("{} weights of the lowest {source} representation projected by {:?}", weights.len(), pr.entries)];
    let mut image = Vec::new();
    let mut dropped = 0;
    for w in &weights {
        let p = apply(&pr, w)?;
        if p.is_zero() {
            dropped += 1;
            continue;
        }
        let v = p.to_ints().ok_or_else(|| Error::Malformed(format!("non-integral image {p}")))?;
        image.push(LatticePoint::new(v[0], v[1]));
    }
    if dropped > 0 {
        log.push(format!("dropped the origin (multiplicity {dropped}) to leave a hexagon"));
    }
    let hex =
        HexCell::from_vertices(&image).ok_or_else(|| Error::Malformed(format!("{route} image is not a hexagon")))?;
    Ok((hex, log))
}

/// Spreads the origin hexagon over the plane by breadth-first closure under
/// `r0, r1, r2`, keeping hexagons whose centre lies in the disk.
pub fn tile_hexagon(hex: &HexCell, radius: Rational, method: Method) -> Result<GraphenePatch> {
    if hex.center != LatticePoint::ORIGIN || *hex != HexCell::around(LatticePoint::ORIGIN) {
        return Err(Error::Malformed(format!("tiling must start from the origin hexagon, got centre {}", hex.center)));
    }
    let disk = check_radius(radius)?;
    let depth = depth_for_radius(radius);
    let gens = generators();
    let mut seen = BTreeSet::from([*hex]);
    let mut queue = VecDeque::from([(*hex, 0usize)]);
    while let Some((h, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for g in &gens {
            let image: Vec<LatticePoint> = h.vertices.iter().map(|v| g.apply(v)).collect();
            let next = HexCell::from_vertices(&image).expect("reflections map hexagons to hexagons");
            if seen.insert(next) {
                queue.push_back((next, d + 1));
            }
        }
    }
    let kept: Vec<HexCell> = seen.into_iter().filter(|h| disk.contains(&h.center)).collect();
    Ok(GraphenePatch::assemble(
        method,
        radius,
        1,
        0,
        [],
        kept,
        vec![format!("affine reflection closure to depth {depth}, centres within radius {radius}")],
    ))
}

pub fn build_by_projection(route: Method, radius: Rational) -> Result<GraphenePatch> {
    let (hex, mut log) = projected_hexagon(route)?;
    let mut patch = tile_hexagon(&hex, radius, route)?;
    log.append(&mut patch.provenance);
    patch.provenance = log;
    Ok(patch)
}

pub fn build(method: Method, radius: Rational) -> Result<GraphenePatch> {
    match method {
        Method::Brillouin => build_by_brillouin(radius),
        Method::Congruence => build_by_congruence(radius, 0),
        route => build_by_projection(route, radius),
    }
}

/// Whether the vertex sets agree inside radius `min(a.radius, b.radius) − margin`.
pub fn patches_equal(a: &GraphenePatch, b: &GraphenePatch, trim_margin: Rational) -> Result<bool> {
    if a.scale_den != b.scale_den {
        return Err(Error::ScaleMismatch(a.scale_den, b.scale_den));
    }
    let disk = Disk::interior(a.radius.min(b.radius), trim_margin);
    let pick = |p: &GraphenePatch| -> BTreeSet<LatticePoint> {
        p.vertices.iter().filter(|v| disk.contains(v)).copied().collect()
    };
    Ok(pick(a) == pick(b))
}

/// Nearest neighbours of a vertex within a patch.
pub fn neighbours(patch: &GraphenePatch, v: &LatticePoint) -> Vec<LatticePoint> {
    let set = patch.vertex_set();
    HEX_OFFSETS.iter().map(|&(dx, dy)| v.offset(dx, dy)).filter(|n| set.contains(n)).collect()
}

/// Counterclockwise corner list of a hexagon as exact points.
pub fn hex_corners(h: &HexCell) -> Vec<Point2> {
    let mut pts: Vec<Point2> = h.vertices.iter().map(LatticePoint::to_point).collect();
    sort_ccw(&h.center.to_point(), &mut pts);
    pts
}

/// `(1/den)·P ∩ disk` grouped by numerator class.
pub fn class_counts(den: i64, disk: &Disk) -> [usize; 3] {
    let mut counts = [0; 3];
    for p in scaled_weight_points(den, disk) {
        counts[p.numerator_class() as usize] += 1;
    }
    counts
}
