//! Deterministic SVG drawings of patches and point sets.
//!
//! Coordinates go through the Euclidean embedding of the A2 metric with the y
//! axis flipped to point up on screen, and every number is printed with six
//! decimals so that repeated renders are byte-identical.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_traits::ToPrimitive;

use super::embed::EuclideanEmbedding;
use super::json::{Document, PointSet};
use crate::colouring::ColouredPatch;
use crate::error::{Error, Result};
use crate::graphene::GraphenePatch;
use crate::lattice::{LatticePoint, HEX_OFFSETS};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub palette: Vec<String>,
    /// Draw class markers on the vertices.
    pub show_classes: bool,
    /// Pixels per unit length.
    pub unit: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        let palette = [
            "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
            "#008080", "#e6beff", "#9a6324",
        ];
        Self {
            stroke_width: 0.04,
            vertex_radius: 0.08,
            palette: palette.iter().map(|s| s.to_string()).collect(),
            show_classes: true,
            unit: 60.0,
        }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

struct Canvas {
    body: String,
    embedding: EuclideanEmbedding,
    spec: RenderSpec,
}

impl Canvas {
    fn xy(&self, p: &LatticePoint) -> (String, String) {
        let (x, y) = self.embedding.embed(p);
        (num(x), num(-y))
    }

    fn polygon(&mut self, pts: &[LatticePoint], fill: &str) {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let (x, y) = self.xy(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" fill="{}" stroke="none"/>"#, coords.join(" "), fill);
    }

    fn edges(&mut self, vertices: &[LatticePoint]) {
        let set: BTreeSet<_> = vertices.iter().copied().collect();
        for v in vertices {
            for &(dx, dy) in &[HEX_OFFSETS[0], HEX_OFFSETS[1], HEX_OFFSETS[5]] {
                let w = v.offset(dx, dy);
                if set.contains(&w) {
                    let ((x1, y1), (x2, y2)) = (self.xy(v), self.xy(&w));
                    let _ = writeln!(
                        self.body,
                        r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{}"/>"#,
                        num(self.spec.stroke_width)
                    );
                }
            }
        }
    }

    /// K1 hollow circle, K2 filled dot, K0 square; points off P get a small grey dot.
    fn marker(&mut self, p: &LatticePoint) {
        let (x, y) = self.xy(p);
        let r = self.spec.vertex_radius;
        let class = (p.x % p.scale_den == 0 && p.y % p.scale_den == 0)
            .then(|| LatticePoint::new(p.x / p.scale_den, p.y / p.scale_den).numerator_class());
        let line = match class {
            Some(1) => format!(
                r#"<circle cx="{x}" cy="{y}" r="{}" fill="white" stroke="black" stroke-width="{}"/>"#,
                num(r),
                num(self.spec.stroke_width)
            ),
            Some(2) => format!(r#"<circle cx="{x}" cy="{y}" r="{}" fill="black"/>"#, num(r)),
            Some(_) => {
                let (cx, cy) = self.embedding.embed(p);
                format!(
                    r#"<rect x="{}" y="{}" width="{}" height="{}" fill="black"/>"#,
                    num(cx - r),
                    num(-cy - r),
                    num(2.0 * r),
                    num(2.0 * r)
                )
            }
            None => format!(r#"<circle cx="{x}" cy="{y}" r="{}" fill="grey"/>"#, num(r / 2.0)),
        };
        self.body.push_str(&line);
        self.body.push('\n');
    }

    fn finish(self, half: f64) -> String {
        let size = 2.0 * half * self.spec.unit;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
            num(size),
            num(size),
            num(-half),
            num(-half),
            num(2.0 * half),
            num(2.0 * half)
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn half_extent(radius: Option<f64>, points: &[LatticePoint]) -> f64 {
    let far = points.iter().map(|p| p.norm_sq().to_f64().unwrap_or(0.0).sqrt()).fold(0.0, f64::max);
    radius.unwrap_or(0.0).max(far) + 1.0
}

fn render_patch(patch: &GraphenePatch, colours: Option<(&[u32], u32)>, spec: &RenderSpec) -> Result<String> {
    if let Some((_, m)) = colours {
        if spec.palette.len() < m as usize {
            return Err(Error::PaletteTooSmall { have: spec.palette.len(), need: m as usize });
        }
    }
    let mut canvas = Canvas { body: String::new(), embedding: EuclideanEmbedding::a2(), spec: spec.clone() };
    for (i, h) in patch.hexagons.iter().enumerate() {
        let fill = match colours {
            Some((cs, _)) => spec.palette[cs[i] as usize].clone(),
            None => "#dddddd".to_string(),
        };
        canvas.polygon(&h.vertices, &fill);
    }
    canvas.edges(&patch.vertices);
    if spec.show_classes {
        for v in &patch.vertices {
            canvas.marker(v);
        }
    }
    Ok(canvas.finish(half_extent(patch.radius.to_f64(), &patch.vertices)))
}

fn render_points(points: &PointSet, spec: &RenderSpec) -> String {
    let mut canvas = Canvas { body: String::new(), embedding: EuclideanEmbedding::a2(), spec: spec.clone() };
    for p in &points.points {
        canvas.marker(p);
    }
    canvas.finish(half_extent(points.radius.and_then(|r| r.to_f64()), &points.points))
}

pub fn render_coloured(c: &ColouredPatch, spec: &RenderSpec) -> Result<String> {
    render_patch(&c.patch, Some((&c.colours, c.scheme.m)), spec)
}

pub fn render_document(doc: &Document, spec: &RenderSpec) -> Result<String> {
    match doc {
        Document::Patch(p) => render_patch(p, None, spec),
        Document::Coloured(c) => render_coloured(c, spec),
        Document::Points(p) => Ok(render_points(p, spec)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{colour_patch, ColourScheme};
    use crate::exact::rat;
    use crate::graphene::build_by_congruence;

    #[test]
    fn numbers_are_fixed_width_and_unsigned_zero() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-0.0000001), "0.000000");
        assert_eq!(num(1.5), "1.500000");
        assert_eq!(num(-2.25), "-2.250000");
    }

    #[test]
    fn single_hexagon_has_six_edges() {
        let patch = build_by_congruence(rat(0), 0).unwrap();
        let svg = render_document(&Document::Patch(patch), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<line").count(), 6);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches(r#"fill="white""#).count(), 3);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn render_is_deterministic_and_checks_palette() {
        let patch = build_by_congruence(rat(3), 0).unwrap();
        let cp = colour_patch(&patch, &ColourScheme::new(5, 1, 3).unwrap()).unwrap();
        let doc = Document::Coloured(cp);
        let spec = RenderSpec::default();
        assert_eq!(render_document(&doc, &spec).unwrap(), render_document(&doc, &spec).unwrap());
        let tiny = RenderSpec { palette: vec!["red".into()], ..spec };
        assert!(matches!(render_document(&doc, &tiny), Err(Error::PaletteTooSmall { have: 1, need: 5 })));
    }
}
