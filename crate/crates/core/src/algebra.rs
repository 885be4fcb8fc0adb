//! Static data for the rank-2 and rank-3 algebras used to build the honeycomb,
//! plus reflections and Weyl-orbit closure.
//!
//! Weights are written in the ω-basis of fundamental weights and roots in the
//! α-basis of simple roots. Row `i` of the Cartan matrix holds the
//! ω-coordinates of the simple root `α_i`, so for A2 `α1 = 2ω1 − ω2`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, frac, rat, RatMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraId {
    #[serde(rename = "A1xA1")]
    A1xA1,
    A2,
    G2,
    A3,
    B3,
    C3,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 6] =
        [AlgebraId::A1xA1, AlgebraId::A2, AlgebraId::G2, AlgebraId::A3, AlgebraId::B3, AlgebraId::C3];

    pub const fn rank(self) -> usize {
        match self {
            AlgebraId::A1xA1 | AlgebraId::A2 | AlgebraId::G2 => 2,
            AlgebraId::A3 | AlgebraId::B3 | AlgebraId::C3 => 3,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            AlgebraId::A1xA1 => "A1xA1",
            AlgebraId::A2 => "A2",
            AlgebraId::G2 => "G2",
            AlgebraId::A3 => "A3",
            AlgebraId::B3 => "B3",
            AlgebraId::C3 => "C3",
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['×', '*'], "X");
        AlgebraId::ALL.into_iter().find(|id| id.name().to_ascii_uppercase() == norm).ok_or_else(|| {
            Error::Malformed(format!("unknown algebra {s:?} (expected one of A1xA1, A2, G2, A3, B3, C3)"))
        })
    }
}

/// Rank, Cartan matrix and ω-basis scalar products of one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTable {
    pub id: AlgebraId,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inverse: RatMatrix,
    /// Scalar products `⟨ω_i|ω_j⟩` compatible with `cartan`: every simple
    /// reflection is an isometry of this form.
    pub gram: RatMatrix,
    /// The scalar-product matrix as printed in the published ω-basis table.
    /// Identical to `gram` except for B3, where the printed matrix is twice
    /// the C3 one and is not preserved by the B3 reflections.
    pub published_gram: RatMatrix,
}

impl AlgebraTable {
    pub fn cartan_rational(&self) -> RatMatrix {
        self.cartan.iter().map(|row| row.iter().map(|&v| rat(v)).collect()).collect()
    }

    /// ω-coordinates of the simple root `α_i` (1-based).
    pub fn simple_root(&self, i: usize) -> Result<WeightVector> {
        if i == 0 || i > self.rank {
            return Err(Error::RootIndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(WeightVector { algebra: self.id, coords: self.cartan[i - 1].iter().map(|&v| rat(v)).collect() })
    }
}

/// Returns the static table for `id`.
pub fn table(id: AlgebraId) -> AlgebraTable {
    let (cartan, gram, published_gram): (Vec<Vec<i64>>, RatMatrix, RatMatrix) = match id {
        AlgebraId::A1xA1 => {
            let g = exact::scaled_matrix(frac(1, 2), &[&[1, 0], &[0, 1]]);
            (vec![vec![2, 0], vec![0, 2]], g.clone(), g)
        }
        AlgebraId::A2 => {
            let g = exact::scaled_matrix(frac(1, 3), &[&[2, 1], &[1, 2]]);
            (vec![vec![2, -1], vec![-1, 2]], g.clone(), g)
        }
        AlgebraId::G2 => {
            let g = exact::scaled_matrix(frac(1, 3), &[&[6, 3], &[3, 2]]);
            (vec![vec![2, -3], vec![-1, 2]], g.clone(), g)
        }
        AlgebraId::A3 => {
            let g = exact::scaled_matrix(frac(1, 4), &[&[3, 2, 1], &[2, 4, 2], &[1, 2, 3]]);
            (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], g.clone(), g)
        }
        AlgebraId::B3 => (
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            exact::scaled_matrix(frac(1, 4), &[&[4, 4, 2], &[4, 8, 4], &[2, 4, 3]]),
            exact::int_matrix(&[&[1, 1, 1], &[1, 2, 2], &[1, 2, 3]]),
        ),
        AlgebraId::C3 => {
            let g = exact::scaled_matrix(frac(1, 2), &[&[1, 1, 1], &[1, 2, 2], &[1, 2, 3]]);
            (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]], g.clone(), g)
        }
    };
    let rational: RatMatrix = cartan.iter().map(|row| row.iter().map(|&v| rat(v)).collect()).collect();
    let cartan_inverse = exact::inverse(&rational).expect("Cartan matrices are nonsingular");
    AlgebraTable { id, rank: id.rank(), cartan, cartan_inverse, gram, published_gram }
}

/// A weight in the ω-basis of `algebra`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub algebra: AlgebraId,
    pub coords: Vec<Rational>,
}

/// A vector in the α-basis (simple roots) of `algebra`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub algebra: AlgebraId,
    pub coords: Vec<Rational>,
}

fn check_len(algebra: AlgebraId, len: usize) -> Result<()> {
    if len != algebra.rank() {
        return Err(Error::DimensionMismatch { algebra, rank: algebra.rank(), found: len });
    }
    Ok(())
}

impl WeightVector {
    pub fn new(algebra: AlgebraId, coords: Vec<Rational>) -> Result<Self> {
        check_len(algebra, coords.len())?;
        Ok(Self { algebra, coords })
    }

    pub fn from_ints(algebra: AlgebraId, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero(algebra: AlgebraId) -> Self {
        Self { algebra, coords: vec![Rational::zero(); algebra.rank()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.algebra, exact::fmt_coords(&self.coords))
    }
}

impl RootVector {
    pub fn new(algebra: AlgebraId, coords: Vec<Rational>) -> Result<Self> {
        check_len(algebra, coords.len())?;
        Ok(Self { algebra, coords })
    }

    pub fn from_ints(algebra: AlgebraId, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|&v| rat(v)).collect())
    }
}

// Arithmetic between weights of different algebras is a programming error,
// like adding matrices of different shapes.
impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.algebra, rhs.algebra, "adding weights of different algebras");
        WeightVector {
            algebra: self.algebra,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;

    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.algebra, rhs.algebra, "subtracting weights of different algebras");
        WeightVector {
            algebra: self.algebra,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<Rational> for &WeightVector {
    type Output = WeightVector;

    fn mul(self, k: Rational) -> WeightVector {
        WeightVector { algebra: self.algebra, coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        WeightVector { algebra: self.algebra, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// `coords_ω = coords_α · C`.
pub fn omega_from_alpha(v: &RootVector) -> WeightVector {
    let t = table(v.algebra);
    let c = t.cartan_rational();
    let coords =
        (0..t.rank).map(|j| v.coords.iter().zip(&c).fold(Rational::zero(), |acc, (a, row)| acc + a * row[j])).collect();
    WeightVector { algebra: v.algebra, coords }
}

/// `coords_α = coords_ω · C⁻¹`.
pub fn alpha_from_omega(v: &WeightVector) -> RootVector {
    let t = table(v.algebra);
    let coords = (0..t.rank)
        .map(|j| v.coords.iter().zip(&t.cartan_inverse).fold(Rational::zero(), |acc, (w, row)| acc + w * row[j]))
        .collect();
    RootVector { algebra: v.algebra, coords }
}

/// Exact scalar product `xᵀ G y` in the ω-basis.
pub fn inner_product(x: &WeightVector, y: &WeightVector) -> Result<Rational> {
    if x.algebra != y.algebra {
        return Err(Error::AlgebraMismatch { expected: x.algebra, found: y.algebra });
    }
    check_len(x.algebra, x.coords.len())?;
    check_len(y.algebra, y.coords.len())?;
    Ok(exact::bilinear(&table(x.algebra).gram, &x.coords, &y.coords))
}

/// Simple reflection `r_i` (1-based): `x − x_i · α_i` in ω-coordinates.
pub fn reflect(i: usize, x: &WeightVector) -> Result<WeightVector> {
    let root = table(x.algebra).simple_root(i)?;
    check_len(x.algebra, x.coords.len())?;
    Ok(x - &(&root * x.coords[i - 1]))
}

/// Highest root `α0 = α1 + α2` of A2, in ω-coordinates `(1,1)`.
pub fn a2_highest_root() -> WeightVector {
    let t = table(AlgebraId::A2);
    &t.simple_root(1).expect("rank 2") + &t.simple_root(2).expect("rank 2")
}

/// The affine reflection `r0(x) = α0 + x − 2(x,α0)/(α0,α0) · α0` of A2.
pub fn affine_reflect(x: &WeightVector) -> Result<WeightVector> {
    if x.algebra != AlgebraId::A2 {
        return Err(Error::NotA2(x.algebra));
    }
    let a0 = a2_highest_root();
    let k = rat(2) * inner_product(x, &a0)? / inner_product(&a0, &a0)?;
    Ok(&(&a0 + x) - &(&a0 * k))
}

/// Reflects `x` into the dominant chamber by repeatedly applying `r_i` to the
/// first negative coordinate.
pub fn to_dominant(x: &WeightVector) -> WeightVector {
    let mut cur = x.clone();
    while let Some(i) = cur.coords.iter().position(Signed::is_negative) {
        cur = reflect(i + 1, &cur).expect("index within rank");
    }
    cur
}

/// A Weyl orbit stored in breadth-first discovery order, starting at the
/// dominant weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrbit {
    pub algebra: AlgebraId,
    pub elements: Vec<WeightVector>,
    pub dominant: WeightVector,
}

impl WeightOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.elements.contains(w)
    }

    pub fn as_set(&self) -> BTreeSet<WeightVector> {
        self.elements.iter().cloned().collect()
    }

    /// Whether every simple reflection maps the orbit into itself.
    pub fn is_closed(&self) -> bool {
        let set = self.as_set();
        self.elements.iter().all(|w| (1..=self.algebra.rank()).all(|i| reflect(i, w).is_ok_and(|r| set.contains(&r))))
    }
}

/// Closure of `{dominant}` under the simple reflections.
pub fn weyl_orbit(dominant: &WeightVector) -> Result<WeightOrbit> {
    check_len(dominant.algebra, dominant.coords.len())?;
    if !dominant.is_dominant() {
        return Err(Error::NotDominant(dominant.to_string()));
    }
    let rank = dominant.algebra.rank();
    let mut seen = BTreeSet::from([dominant.clone()]);
    let mut elements = vec![dominant.clone()];
    let mut queue = VecDeque::from([dominant.clone()]);
    while let Some(w) = queue.pop_front() {
        for i in 1..=rank {
            let r = reflect(i, &w)?;
            if seen.insert(r.clone()) {
                elements.push(r.clone());
                queue.push_back(r);
            }
        }
    }
    Ok(WeightOrbit { algebra: dominant.algebra, elements, dominant: dominant.clone() })
}

/// Matrix of `r_i` acting on ω-coordinate column vectors.
pub fn reflection_matrix(algebra: AlgebraId, i: usize) -> Result<RatMatrix> {
    let rank = algebra.rank();
    let columns = (0..rank)
        .map(|j| {
            let mut e = vec![Rational::zero(); rank];
            e[j] = rat(1);
            reflect(i, &WeightVector { algebra, coords: e }).map(|w| w.coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(exact::transpose(&columns))
}

/// All elements of the A2 Weyl group as ω-coordinate matrices, obtained by
/// closing `{identity}` under left multiplication by `r1` and `r2`.
pub fn weyl_group_a2() -> Vec<RatMatrix> {
    let gens =
        [reflection_matrix(AlgebraId::A2, 1).expect("rank 2"), reflection_matrix(AlgebraId::A2, 2).expect("rank 2")];
    let id = exact::identity(2);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = exact::mat_mul(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn weyl_group_order_a2() -> usize {
    weyl_group_a2().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(alg: AlgebraId, c: &[i64]) -> WeightVector {
        WeightVector::from_ints(alg, c).unwrap()
    }

    fn set(alg: AlgebraId, pts: &[&[i64]]) -> BTreeSet<WeightVector> {
        pts.iter().map(|c| w(alg, c)).collect()
    }

    #[test]
    fn ranks() {
        for id in AlgebraId::ALL {
            assert_eq!(table(id).rank, id.rank());
        }
        assert_eq!(AlgebraId::A1xA1.rank(), 2);
        assert_eq!(AlgebraId::C3.rank(), 3);
    }

    #[test]
    fn published_gram_values() {
        let a2 = table(AlgebraId::A2);
        assert_eq!(a2.gram, exact::scaled_matrix(frac(1, 3), &[&[2, 1], &[1, 2]]));
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        let b3 = table(AlgebraId::B3);
        assert_eq!(b3.published_gram, exact::int_matrix(&[&[1, 1, 1], &[1, 2, 2], &[1, 2, 3]]));
        assert_eq!(table(AlgebraId::G2).cartan, vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(
            table(AlgebraId::A3).published_gram,
            exact::scaled_matrix(frac(1, 4), &[&[3, 2, 1], &[2, 4, 2], &[1, 2, 3]])
        );
        assert_eq!(
            table(AlgebraId::C3).published_gram,
            exact::scaled_matrix(frac(1, 2), &[&[1, 1, 1], &[1, 2, 2], &[1, 2, 3]])
        );
        assert_eq!(table(AlgebraId::G2).published_gram, exact::scaled_matrix(frac(1, 3), &[&[6, 3], &[3, 2]]));
        assert_eq!(table(AlgebraId::A1xA1).published_gram, exact::scaled_matrix(frac(1, 2), &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn printed_b3_matrix_is_twice_c3() {
        let b3 = table(AlgebraId::B3).published_gram;
        let c3 = table(AlgebraId::C3).gram;
        let doubled: RatMatrix = c3.iter().map(|r| r.iter().map(|v| v * rat(2)).collect()).collect();
        assert_eq!(b3, doubled);
        assert_ne!(table(AlgebraId::B3).gram, b3);
        for id in AlgebraId::ALL.into_iter().filter(|&id| id != AlgebraId::B3) {
            let t = table(id);
            assert_eq!(t.gram, t.published_gram, "{id}");
        }
    }

    #[test]
    fn cartan_times_inverse_is_identity() {
        for id in AlgebraId::ALL {
            let t = table(id);
            assert_eq!(exact::mat_mul(&t.cartan_rational(), &t.cartan_inverse), exact::identity(t.rank), "{id}");
        }
    }

    #[test]
    fn gram_symmetric_positive_definite() {
        for id in AlgebraId::ALL {
            let t = table(id);
            assert!(exact::is_symmetric(&t.gram), "{id}");
            assert!(exact::is_positive_definite(&t.gram), "{id}");
            assert!(exact::is_positive_definite(&t.published_gram), "{id}");
        }
    }

    #[test]
    fn gram_is_dual_to_coroots() {
        // (ω_j, α_i) = δ_ij (α_i, α_i)/2, i.e. G·Cᵀ is diagonal.
        for id in AlgebraId::ALL {
            let t = table(id);
            let prod = exact::mat_mul(&t.gram, &exact::transpose(&t.cartan_rational()));
            for (i, row) in prod.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if i != j {
                        assert!(v.is_zero(), "{id} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn basis_conversion_examples() {
        let a = |c: &[i64]| RootVector::from_ints(AlgebraId::A2, c).unwrap();
        assert_eq!(omega_from_alpha(&a(&[1, 0])), w(AlgebraId::A2, &[2, -1]));
        assert_eq!(omega_from_alpha(&a(&[0, 1])), w(AlgebraId::A2, &[-1, 2]));
        assert_eq!(omega_from_alpha(&a(&[0, 0])), w(AlgebraId::A2, &[0, 0]));
        let third = RootVector::new(AlgebraId::A2, vec![frac(2, 3), frac(1, 3)]).unwrap();
        assert_eq!(omega_from_alpha(&third), w(AlgebraId::A2, &[1, 0]));
        let second = RootVector::new(AlgebraId::A2, vec![frac(1, 3), frac(2, 3)]).unwrap();
        assert_eq!(omega_from_alpha(&second), w(AlgebraId::A2, &[0, 1]));

        assert_eq!(alpha_from_omega(&w(AlgebraId::A2, &[2, -1])), a(&[1, 0]));
        assert_eq!(alpha_from_omega(&w(AlgebraId::A2, &[1, 1])), a(&[1, 1]));
        assert_eq!(alpha_from_omega(&w(AlgebraId::A2, &[3, 0])), a(&[2, 1]));
    }

    #[test]
    fn inner_product_examples() {
        let w1 = w(AlgebraId::A2, &[1, 0]);
        let w2 = w(AlgebraId::A2, &[0, 1]);
        assert_eq!(inner_product(&w1, &w1).unwrap(), frac(2, 3));
        assert_eq!(inner_product(&w1, &w2).unwrap(), frac(1, 3));
        assert_eq!(inner_product(&w1, &WeightVector::zero(AlgebraId::A2)).unwrap(), rat(0));
        let g = w(AlgebraId::G2, &[1, 0]);
        assert!(matches!(inner_product(&w1, &g), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(2, &w(AlgebraId::G2, &[0, 1])).unwrap(), w(AlgebraId::G2, &[1, -1]));
        assert_eq!(reflect(1, &w(AlgebraId::B3, &[1, 0, 0])).unwrap(), w(AlgebraId::B3, &[-1, 1, 0]));
        for id in AlgebraId::ALL {
            let z = WeightVector::zero(id);
            for i in 1..=id.rank() {
                assert_eq!(reflect(i, &z).unwrap(), z);
            }
        }
        assert!(matches!(reflect(0, &w(AlgebraId::A2, &[1, 0])), Err(Error::RootIndexOutOfRange { .. })));
        assert!(matches!(reflect(3, &w(AlgebraId::A2, &[1, 0])), Err(Error::RootIndexOutOfRange { .. })));
    }

    #[test]
    fn affine_reflect_examples() {
        let a2 = |c: &[i64]| w(AlgebraId::A2, c);
        assert_eq!(affine_reflect(&a2(&[0, 0])).unwrap(), a2(&[1, 1]));
        assert_eq!(affine_reflect(&a2(&[1, 1])).unwrap(), a2(&[0, 0]));
        assert_eq!(affine_reflect(&a2(&[1, 0])).unwrap(), a2(&[1, 0]));
        assert_eq!(affine_reflect(&a2(&[0, 1])).unwrap(), a2(&[0, 1]));
        assert!(matches!(affine_reflect(&w(AlgebraId::G2, &[0, 0])), Err(Error::NotA2(AlgebraId::G2))));
    }

    #[test]
    fn orbit_examples() {
        let g2 = weyl_orbit(&w(AlgebraId::G2, &[0, 1])).unwrap();
        assert_eq!(g2.as_set(), set(AlgebraId::G2, &[&[0, 1], &[1, -1], &[-1, 2], &[1, -2], &[-1, 1], &[0, -1]]));
        let a3 = weyl_orbit(&w(AlgebraId::A3, &[0, 1, 0])).unwrap();
        assert_eq!(
            a3.as_set(),
            set(AlgebraId::A3, &[&[0, 1, 0], &[1, -1, 1], &[1, 0, -1], &[0, -1, 0], &[-1, 1, -1], &[-1, 0, 1]])
        );
        let b3 = weyl_orbit(&w(AlgebraId::B3, &[1, 0, 0])).unwrap();
        assert_eq!(
            b3.as_set(),
            set(AlgebraId::B3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 2], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -2]])
        );
        let c3 = weyl_orbit(&w(AlgebraId::C3, &[1, 0, 0])).unwrap();
        assert_eq!(
            c3.as_set(),
            set(AlgebraId::C3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 1], &[-1, 0, 0], &[1, -1, 0], &[0, 1, -1]])
        );
        let a2 = weyl_orbit(&w(AlgebraId::A2, &[1, 0])).unwrap();
        assert_eq!(a2.as_set(), set(AlgebraId::A2, &[&[1, 0], &[-1, 1], &[0, -1]]));
        assert_eq!(a2.elements[0], a2.dominant);
    }

    #[test]
    fn orbit_sizes_and_closure() {
        let cases: [(AlgebraId, &[i64], usize); 7] = [
            (AlgebraId::G2, &[0, 1], 6),
            (AlgebraId::A3, &[0, 1, 0], 6),
            (AlgebraId::B3, &[1, 0, 0], 6),
            (AlgebraId::C3, &[1, 0, 0], 6),
            (AlgebraId::A2, &[1, 1], 6),
            (AlgebraId::A2, &[1, 0], 3),
            (AlgebraId::A2, &[0, 1], 3),
        ];
        for (id, c, n) in cases {
            let orbit = weyl_orbit(&w(id, c)).unwrap();
            assert_eq!(orbit.len(), n, "{id} {c:?}");
            assert!(orbit.is_closed());
            assert_eq!(orbit.elements.iter().filter(|e| e.is_dominant()).count(), 1);
        }
    }

    #[test]
    fn orbit_rejects_non_dominant() {
        assert!(matches!(weyl_orbit(&w(AlgebraId::G2, &[1, -1])), Err(Error::NotDominant(_))));
        assert_eq!(to_dominant(&w(AlgebraId::G2, &[1, -2])), w(AlgebraId::G2, &[0, 1]));
        assert_eq!(to_dominant(&w(AlgebraId::B3, &[0, 1, -2])), w(AlgebraId::B3, &[1, 0, 0]));
    }

    #[test]
    fn weyl_group_a2_order() {
        assert_eq!(weyl_group_order_a2(), 6);
        let group = weyl_group_a2();
        let orbit_of = |c: [i64; 2]| -> BTreeSet<Vec<Rational>> {
            group.iter().map(|g| exact::mat_vec(g, &[rat(c[0]), rat(c[1])])).collect()
        };
        assert_eq!(orbit_of([1, 1]).len(), 6);
        assert_eq!(orbit_of([1, 0]).len(), 3);
        assert_eq!(orbit_of([0, 0]).len(), 1);
    }

    #[test]
    fn algebra_names_parse() {
        for id in AlgebraId::ALL {
            assert_eq!(id.name().parse::<AlgebraId>().unwrap(), id);
        }
        assert_eq!("b3".parse::<AlgebraId>().unwrap(), AlgebraId::B3);
        assert!("E8".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn dimension_checked() {
        assert!(matches!(WeightVector::from_ints(AlgebraId::A3, &[1, 0]), Err(Error::DimensionMismatch { .. })));
    }
}
