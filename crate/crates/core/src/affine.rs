//! The affine Weyl group of A2 acting on ω-coordinates.
//!
//! Every element is an integer affine map `x ↦ Lx + t`. The three generators
//! are read off the exact reflections in [`crate::algebra`], so this module
//! only adds integer bookkeeping and breadth-first enumeration.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{affine_reflect, reflect, AlgebraId, WeightVector};
use crate::exact::{rat, Rational};
use crate::lattice::{LatticePoint, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    pub linear: [[i64; 2]; 2],
    pub shift: [i64; 2],
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap { linear: [[1, 0], [0, 1]], shift: [0, 0] };

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let l = &self.linear;
        let m = &other.linear;
        let linear = [
            [l[0][0] * m[0][0] + l[0][1] * m[1][0], l[0][0] * m[0][1] + l[0][1] * m[1][1]],
            [l[1][0] * m[0][0] + l[1][1] * m[1][0], l[1][0] * m[0][1] + l[1][1] * m[1][1]],
        ];
        let t = other.shift;
        let shift = [l[0][0] * t[0] + l[0][1] * t[1] + self.shift[0], l[1][0] * t[0] + l[1][1] * t[1] + self.shift[1]];
        AffineMap { linear, shift }
    }

    /// Acts on a point of `(1/den)·P`, keeping the denominator.
    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        let l = &self.linear;
        let d = p.scale_den;
        LatticePoint::scaled(
            l[0][0] * p.x + l[0][1] * p.y + d * self.shift[0],
            l[1][0] * p.x + l[1][1] * p.y + d * self.shift[1],
            d,
        )
    }

    pub fn apply_point(&self, p: &Point2) -> Point2 {
        let l = &self.linear;
        Point2::new(
            rat(l[0][0]) * p.x + rat(l[0][1]) * p.y + rat(self.shift[0]),
            rat(l[1][0]) * p.x + rat(l[1][1]) * p.y + rat(self.shift[1]),
        )
    }
}

fn integral(w: &WeightVector) -> [i64; 2] {
    let v = w.to_ints().expect("A2 reflections preserve the weight lattice");
    [v[0], v[1]]
}

fn from_weight_fn(f: impl Fn(&WeightVector) -> WeightVector) -> AffineMap {
    let at = |x: i64, y: i64| integral(&f(&WeightVector::from_ints(AlgebraId::A2, &[x, y]).expect("rank 2")));
    let shift = at(0, 0);
    let c1 = at(1, 0);
    let c2 = at(0, 1);
    AffineMap { linear: [[c1[0] - shift[0], c2[0] - shift[0]], [c1[1] - shift[1], c2[1] - shift[1]]], shift }
}

/// `[r0, r1, r2]` as integer affine maps.
pub fn generators() -> [AffineMap; 3] {
    [
        from_weight_fn(|w| affine_reflect(w).expect("A2 input")),
        from_weight_fn(|w| reflect(1, w).expect("rank 2")),
        from_weight_fn(|w| reflect(2, w).expect("rank 2")),
    ]
}

/// Generator words are written in application order: `word(&[0, 1])` is
/// `r1 ∘ r0`, i.e. apply `r0` first.
pub fn word(indices: &[usize]) -> AffineMap {
    let gens = generators();
    indices.iter().fold(AffineMap::IDENTITY, |acc, &i| gens[i].compose(&acc))
}

/// Breadth-first search depth that reaches every alcove meeting the disk of
/// the given radius.
///
/// An alcove around a point `aω1 + bω2` (dominant, real `a, b ≥ 0`) is cut
/// off from the fundamental alcove by at most `2(a + b) + 3` walls, and
/// `a + b ≤ √2·|p|`, so `3·⌈r⌉ + 4` walls always suffice.
pub fn depth_for_radius(radius: Rational) -> usize {
    let r = radius.ceil().to_integer().max(0) as usize;
    3 * r + 4
}

/// All group elements of length at most `depth`, closed from the identity
/// under left multiplication by the generators.
pub fn elements_up_to_length(depth: usize) -> Vec<AffineMap> {
    let gens = generators();
    let mut seen = HashSet::from([AffineMap::IDENTITY]);
    let mut out = vec![AffineMap::IDENTITY];
    let mut frontier = VecDeque::from([(AffineMap::IDENTITY, 0usize)]);
    while let Some((g, d)) = frontier.pop_front() {
        if d == depth {
            continue;
        }
        for s in &gens {
            let h = s.compose(&g);
            if seen.insert(h) {
                out.push(h);
                frontier.push_back((h, d + 1));
            }
        }
    }
    out
}
