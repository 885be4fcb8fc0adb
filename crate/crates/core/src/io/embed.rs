//! Cartesian coordinates for ω-coordinates. This is the only place floating
//! point is used.

use crate::lattice::{LatticePoint, Point2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanEmbedding {
    /// Symmetric `E` with `EᵀE = G`; columns are the images of ω1 and ω2.
    pub basis: [[f64; 2]; 2],
    pub tolerance: f64,
}

impl EuclideanEmbedding {
    /// The positive square root of the A2 Gram matrix `(1/3)[[2,1],[1,2]]`.
    pub fn a2() -> Self {
        let g: [[f64; 2]; 2] = [[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]];
        // √G = (G + √det·I) / √(tr + 2√det) for a 2×2 positive definite G.
        let sdet = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).sqrt();
        let t = (g[0][0] + g[1][1] + 2.0 * sdet).sqrt();
        let basis = [[(g[0][0] + sdet) / t, g[0][1] / t], [g[1][0] / t, (g[1][1] + sdet) / t]];
        Self { basis, tolerance: 1e-12 }
    }

    pub fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let e = &self.basis;
        (e[0][0] * x + e[0][1] * y, e[1][0] * x + e[1][1] * y)
    }

    pub fn embed(&self, p: &LatticePoint) -> (f64, f64) {
        let d = p.scale_den as f64;
        self.map(p.x as f64 / d, p.y as f64 / d)
    }

    pub fn embed_point(&self, p: &Point2) -> (f64, f64) {
        let f = |r: num_rational::Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
        self.map(f(p.x), f(p.y))
    }
}

impl Default for EuclideanEmbedding {
    fn default() -> Self {
        Self::a2()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_reproduced() {
        let e = EuclideanEmbedding::a2();
        let b = e.basis;
        let gram = |i: usize, j: usize| b[0][i] * b[0][j] + b[1][i] * b[1][j];
        assert!((gram(0, 0) - 2.0 / 3.0).abs() < e.tolerance);
        assert!((gram(0, 1) - 1.0 / 3.0).abs() < e.tolerance);
        assert!((gram(1, 1) - 2.0 / 3.0).abs() < e.tolerance);
        assert!(b[0][0] * b[1][1] - b[0][1] * b[1][0] > 0.0);
    }

    #[test]
    fn examples() {
        let e = EuclideanEmbedding::a2();
        assert_eq!(e.embed(&LatticePoint::ORIGIN), (0.0, 0.0));
        let (x, y) = e.embed(&LatticePoint::new(1, 0));
        assert!((x * x + y * y - 2.0 / 3.0).abs() < 1e-9);
        let (x, y) = e.embed(&LatticePoint::new(2, -1));
        assert!(((x * x + y * y).sqrt() - 2f64.sqrt()).abs() < 1e-9);
    }
}
