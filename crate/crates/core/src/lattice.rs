//! Finite patches of the A2 root lattice Q and weight lattice P, congruence
//! classes, and exact Voronoi (Brillouin-zone) cells.
//!
//! Points are stored by their integer ω-coordinates together with a
//! patch-wide scale denominator, so `(x, y, M)` stands for `(x/M)ω1 + (y/M)ω2`.
//! The metric is the A2 Gram matrix `(1/3)[[2,1],[1,2]]`, which gives the
//! simple roots squared length 2.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ceil_sqrt, frac, rat, Rational};

/// The six weights of norm² 2/3 around the origin, counterclockwise from ω1.
pub const HEX_OFFSETS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// The six roots of A2 in ω-coordinates.
pub const ROOTS: [(i64, i64); 6] = [(2, -1), (-1, 2), (1, 1), (-2, 1), (1, -2), (-1, -1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub scale_den: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0, scale_den: 1 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y, scale_den: 1 }
    }

    pub const fn scaled(x: i64, y: i64, scale_den: i64) -> Self {
        Self { x, y, scale_den }
    }

    pub fn offset(&self, dx: i64, dy: i64) -> Self {
        Self { x: self.x + dx, y: self.y + dy, scale_den: self.scale_den }
    }

    pub fn to_point(&self) -> Point2 {
        Point2::new(frac(self.x, self.scale_den), frac(self.y, self.scale_den))
    }

    pub fn norm_sq(&self) -> Rational {
        int_norm_sq(self.x, self.y) / rat(self.scale_den * self.scale_den)
    }

    /// Exact α-coordinates `(a, b)` with `p = aα1 + bα2`.
    pub fn alpha_coords(&self) -> (Rational, Rational) {
        let d = 3 * self.scale_den;
        (frac(2 * self.x + self.y, d), frac(self.x + 2 * self.y, d))
    }

    /// Class `x + 2y mod 3` of the integer numerators, ignoring the scale.
    pub fn numerator_class(&self) -> u8 {
        (self.x + 2 * self.y).rem_euclid(3) as u8
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale_den == 1 {
            write!(f, "({},{})", self.x, self.y)
        } else {
            write!(f, "({},{})/{}", self.x, self.y, self.scale_den)
        }
    }
}

/// `(2x² + 2xy + 2y²)/3`, the squared length of `xω1 + yω2`.
pub fn int_norm_sq(x: i64, y: i64) -> Rational {
    frac(2 * (x * x + x * y + y * y), 3)
}

/// A point of the plane with exact rational ω-coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(&self, k: Rational) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }

    pub fn dot(&self, o: &Point2) -> Rational {
        (rat(2) * self.x * o.x + self.x * o.y + self.y * o.x + rat(2) * self.y * o.y) / rat(3)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// Integral version, if both coordinates are integers.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        (self.x.is_integer() && self.y.is_integer())
            .then(|| LatticePoint::new(self.x.to_integer(), self.y.to_integer()))
    }

    /// `x + 2y mod 3` when the point is integral.
    pub fn class(&self) -> Option<u8> {
        self.to_lattice().map(|p| p.numerator_class())
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Orientation of `a × b` in ω-coordinates. The ω-frame is positively
/// oriented, so signs agree with the Euclidean picture.
fn cross(a: &Point2, b: &Point2) -> Rational {
    a.x * b.y - a.y * b.x
}

/// Sorts points counterclockwise around `center`, starting from the
/// lexicographically largest point.
pub fn sort_ccw(center: &Point2, pts: &mut [Point2]) {
    let half = |v: &Point2| -> u8 {
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|a, b| {
        let (va, vb) = (a.sub(center), b.sub(center));
        half(&va).cmp(&half(&vb)).then_with(|| match cross(&va, &vb) {
            c if c.is_positive() => Ordering::Less,
            c if c.is_negative() => Ordering::Greater,
            _ => va.norm_sq().cmp(&vb.norm_sq()),
        })
    });
    if let Some(start) = pts.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).map(|(i, _)| i) {
        pts.rotate_left(start);
    }
}

/// Shoelace area in ω-coordinates of a counterclockwise polygon. Multiply the
/// square by `det G = 1/3` for the squared Euclidean area.
pub fn omega_area(corners: &[Point2]) -> Rational {
    let n = corners.len();
    let twice = (0..n).fold(Rational::zero(), |acc, i| acc + cross(&corners[i], &corners[(i + 1) % n]));
    twice / rat(2)
}

/// Closed disk `|p|² ≤ radius_sq` in the A2 metric. A negative `radius_sq`
/// encodes the empty disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Disk {
    pub radius_sq: Rational,
}

impl Disk {
    pub fn new(radius: Rational) -> Result<Self> {
        if radius.is_negative() {
            return Err(Error::NegativeRadius(radius.to_string()));
        }
        Ok(Self { radius_sq: radius * radius })
    }

    pub fn from_radius_sq(radius_sq: Rational) -> Result<Self> {
        if radius_sq.is_negative() {
            return Err(Error::NegativeRadius(format!("sqrt({radius_sq})")));
        }
        Ok(Self { radius_sq })
    }

    /// Disk of radius `radius − margin`, empty when the margin exceeds it.
    pub fn interior(radius: Rational, margin: Rational) -> Self {
        let r = radius - margin;
        Self { radius_sq: if r.is_negative() { rat(-1) } else { r * r } }
    }

    pub fn contains_norm_sq(&self, norm_sq: Rational) -> bool {
        norm_sq <= self.radius_sq
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.contains_norm_sq(p.norm_sq())
    }

    pub fn contains_point(&self, p: &Point2) -> bool {
        self.contains_norm_sq(p.norm_sq())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CongruenceClass(pub u8);

/// `x + 2y mod 3` for an unscaled weight `xω1 + yω2`; class 0 is exactly Q.
pub fn congruence_class(p: &LatticePoint) -> Result<CongruenceClass> {
    if p.scale_den != 1 {
        return Err(Error::RefinedPoint(p.to_string(), p.scale_den));
    }
    Ok(CongruenceClass(p.numerator_class()))
}

/// All points of `(1/den)·P` in the disk, sorted by ω-coordinates.
pub fn scaled_weight_points(den: i64, disk: &Disk) -> Vec<LatticePoint> {
    if disk.radius_sq.is_negative() {
        return Vec::new();
    }
    // The smallest eigenvalue of the Gram matrix is 1/3, so x² + y² ≤ 3|p|².
    let bound = ceil_sqrt(rat(3 * den * den) * disk.radius_sq);
    let limit = disk.radius_sq * rat(den * den);
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if int_norm_sq(x, y) <= limit {
                out.push(LatticePoint::scaled(x, y, den));
            }
        }
    }
    out
}

/// Weight-lattice points in the disk, sorted by ω-coordinates.
pub fn p_patch(disk: &Disk) -> Vec<LatticePoint> {
    scaled_weight_points(1, disk)
}

/// Root-lattice points in the disk, sorted lexicographically by α-coordinates.
pub fn q_patch(disk: &Disk) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = p_patch(disk).into_iter().filter(|p| p.numerator_class() == 0).collect();
    pts.sort_by_key(|p| p.alpha_coords());
    pts
}

/// A convex cell with corners listed counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoronoiCell {
    pub site: LatticePoint,
    pub corners: Vec<Point2>,
}

impl VoronoiCell {
    pub fn omega_area(&self) -> Rational {
        omega_area(&self.corners)
    }

    pub fn edge_norms_sq(&self) -> Vec<Rational> {
        let n = self.corners.len();
        (0..n).map(|i| self.corners[(i + 1) % n].sub(&self.corners[i]).norm_sq()).collect()
    }
}

/// Exact intersection of the half-planes `{x : |x − site| ≤ |x − n|}`.
///
/// The caller supplies enough neighbours to bound the cell; the result is
/// deduplicated and sorted counterclockwise from the lexicographically
/// largest corner.
pub fn voronoi_corners(site: &Point2, neighbours: &[Point2]) -> Vec<Point2> {
    // Half-plane n·x ≤ c with the covector n = G(nb − site) written out.
    let planes: Vec<(Rational, Rational, Rational)> = neighbours
        .iter()
        .map(|nb| {
            let d = nb.sub(site);
            let a = (rat(2) * d.x + d.y) / rat(3);
            let b = (d.x + rat(2) * d.y) / rat(3);
            let mid = site.add(nb).scale(frac(1, 2));
            (a, b, a * mid.x + b * mid.y)
        })
        .collect();
    let feasible = |p: &Point2| planes.iter().all(|(a, b, c)| *a * p.x + *b * p.y <= *c);
    let mut corners = BTreeSet::new();
    for (i, (a1, b1, c1)) in planes.iter().enumerate() {
        for (a2, b2, c2) in &planes[i + 1..] {
            let det = *a1 * *b2 - *a2 * *b1;
            if det.is_zero() {
                continue;
            }
            let p = Point2::new((*c1 * *b2 - *c2 * *b1) / det, (*a1 * *c2 - *a2 * *c1) / det);
            if feasible(&p) {
                corners.insert(p);
            }
        }
    }
    let mut corners: Vec<Point2> = corners.into_iter().collect();
    sort_ccw(site, &mut corners);
    corners
}

/// Brillouin zone of a root-lattice site, bounded by the bisectors toward
/// its six nearest Q-neighbours.
pub fn brillouin_zone(site: &LatticePoint) -> Result<VoronoiCell> {
    if congruence_class(site)?.0 != 0 {
        return Err(Error::NotInRootLattice(site.to_string()));
    }
    let s = site.to_point();
    let neighbours: Vec<Point2> = ROOTS.iter().map(|&(dx, dy)| site.offset(dx, dy).to_point()).collect();
    Ok(VoronoiCell { site: *site, corners: voronoi_corners(&s, &neighbours) })
}

/// Union of the Brillouin-zone corners of every Q point in the disk.
pub fn voronoi_vertex_set(disk: &Disk) -> Vec<Point2> {
    let set: BTreeSet<Point2> =
        q_patch(disk).iter().flat_map(|q| brillouin_zone(q).expect("q_patch yields class-0 points").corners).collect();
    set.into_iter().collect()
}
