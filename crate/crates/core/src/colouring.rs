//! Colourings of the honeycomb mod `m` and the phase-transition group acting
//! on them.
//!
//! The hexagon centred at `aα1 + bα2` gets colour `k1·a + k2·b mod m`. A
//! transition `(l1, l2)` shifts the type `(k1, k2)` componentwise; it stands
//! for the unitriangular matrix `[[1,0,l1],[0,1,l2],[0,0,1]]` acting on
//! `(k1, k2, 1)ᵀ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphene::GraphenePatch;
use crate::lattice::{congruence_class, LatticePoint};

fn modulus(m: i64) -> Result<u32> {
    if m < 1 || m > u32::MAX as i64 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(m as u32)
}

fn reduce(v: i64, m: u32) -> u32 {
    v.rem_euclid(m as i64) as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColourScheme {
    pub m: u32,
    pub k1: u32,
    pub k2: u32,
}

impl ColourScheme {
    /// Reduces `k1, k2` into `[0, m)`.
    pub fn new(m: i64, k1: i64, k2: i64) -> Result<Self> {
        let m = modulus(m)?;
        Ok(Self { m, k1: reduce(k1, m), k2: reduce(k2, m) })
    }

    pub fn is_trivial(&self) -> bool {
        self.k1 == 0 && self.k2 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TransitionElement {
    pub m: u32,
    pub l1: u32,
    pub l2: u32,
}

impl TransitionElement {
    pub fn new(m: i64, l1: i64, l2: i64) -> Result<Self> {
        let m = modulus(m)?;
        Ok(Self { m, l1: reduce(l1, m), l2: reduce(l2, m) })
    }

    pub fn identity(m: i64) -> Result<Self> {
        Self::new(m, 0, 0)
    }

    /// The 3×3 matrix form, entries reduced mod `m`.
    pub fn matrix(&self) -> [[u32; 3]; 3] {
        [[1, 0, self.l1], [0, 1, self.l2], [0, 0, 1]]
    }
}

/// Colour of the hexagon centred at a root-lattice point.
pub fn colour_of(center: &LatticePoint, scheme: &ColourScheme) -> Result<u32> {
    if congruence_class(center)?.0 != 0 {
        return Err(Error::NotInRootLattice(center.to_string()));
    }
    let (a, b) = center.alpha_coords();
    let (a, b) = (a.to_integer(), b.to_integer());
    let m = scheme.m as i64;
    Ok(reduce((scheme.k1 as i64 * a.rem_euclid(m)) + (scheme.k2 as i64 * b.rem_euclid(m)), scheme.m))
}

pub fn apply_transition(scheme: &ColourScheme, t: &TransitionElement) -> Result<ColourScheme> {
    if scheme.m != t.m {
        return Err(Error::ModulusMismatch(scheme.m, t.m));
    }
    let m = scheme.m;
    Ok(ColourScheme { m, k1: (scheme.k1 + t.l1) % m, k2: (scheme.k2 + t.l2) % m })
}

pub fn compose_transitions(t1: &TransitionElement, t2: &TransitionElement) -> Result<TransitionElement> {
    if t1.m != t2.m {
        return Err(Error::ModulusMismatch(t1.m, t2.m));
    }
    let m = t1.m;
    Ok(TransitionElement { m, l1: (t1.l1 + t2.l1) % m, l2: (t1.l2 + t2.l2) % m })
}

pub fn inverse_transition(t: &TransitionElement) -> TransitionElement {
    let m = t.m;
    TransitionElement { m, l1: (m - t.l1) % m, l2: (m - t.l2) % m }
}

/// The unique transition taking `from` to `to`.
pub fn transition_between(from: &ColourScheme, to: &ColourScheme) -> Result<TransitionElement> {
    if from.m != to.m {
        return Err(Error::ModulusMismatch(from.m, to.m));
    }
    TransitionElement::new(from.m as i64, to.k1 as i64 - from.k1 as i64, to.k2 as i64 - from.k2 as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionGroup {
    pub m: u32,
    pub elements: Vec<TransitionElement>,
    pub order: usize,
    pub closed: bool,
    pub has_identity: bool,
    pub has_inverses: bool,
    pub associative: bool,
    pub abelian: bool,
}

impl TransitionGroup {
    pub fn is_group(&self) -> bool {
        self.closed && self.has_identity && self.has_inverses && self.associative
    }

    /// Cayley table as indices into `elements`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| {
                        let c = compose_transitions(a, b).expect("same modulus");
                        self.elements.iter().position(|e| *e == c).expect("closed")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Enumerates all `m²` transitions and checks the group axioms exhaustively.
/// Associativity is checked over all triples only for `m ≤ 5`; above that it
/// holds by construction (addition in `(Z/m)²`).
pub fn transition_group(m: i64) -> Result<TransitionGroup> {
    let mu = modulus(m)?;
    let elements: Vec<TransitionElement> =
        (0..mu).flat_map(|l1| (0..mu).map(move |l2| TransitionElement { m: mu, l1, l2 })).collect();
    let member = |t: &TransitionElement| t.m == mu && t.l1 < mu && t.l2 < mu;
    let op = |a: &TransitionElement, b: &TransitionElement| compose_transitions(a, b).expect("same modulus");
    let id = TransitionElement { m: mu, l1: 0, l2: 0 };

    let closed = elements.iter().all(|a| elements.iter().all(|b| member(&op(a, b))));
    let has_identity = elements.iter().all(|a| op(a, &id) == *a && op(&id, a) == *a);
    let has_inverses = elements.iter().all(|a| {
        let inv = inverse_transition(a);
        member(&inv) && op(a, &inv) == id && op(&inv, a) == id
    });
    let abelian = elements.iter().all(|a| elements.iter().all(|b| op(a, b) == op(b, a)));
    let associative = mu > 5
        || elements
            .iter()
            .all(|a| elements.iter().all(|b| elements.iter().all(|c| op(&op(a, b), c) == op(a, &op(b, c)))));
    Ok(TransitionGroup {
        m: mu,
        order: elements.len(),
        elements,
        closed,
        has_identity,
        has_inverses,
        associative,
        abelian,
    })
}

/// All nontrivial types `(k1, k2)` mod `m`, lexicographically.
pub fn enumerate_colourings(m: i64) -> Result<Vec<ColourScheme>> {
    let mu = modulus(m)?;
    Ok((0..mu)
        .flat_map(|k1| (0..mu).map(move |k2| ColourScheme { m: mu, k1, k2 }))
        .filter(|s| !s.is_trivial())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredPatch {
    pub patch: GraphenePatch,
    pub scheme: ColourScheme,
    /// One colour per entry of `patch.hexagons`.
    pub colours: Vec<u32>,
}

pub fn colour_patch(patch: &GraphenePatch, scheme: &ColourScheme) -> Result<ColouredPatch> {
    if patch.deleted_class != 0 || patch.scale_den != 1 {
        return Err(Error::CentersNotInQ(patch.deleted_class, patch.scale_den));
    }
    let colours = patch.hexagons.iter().map(|h| colour_of(&h.center, scheme)).collect::<Result<Vec<_>>>()?;
    Ok(ColouredPatch { patch: patch.clone(), scheme: *scheme, colours })
}
