//! JSON schemas for tables, point sets, patches and coloured patches.
//!
//! Exact rationals are written as `"p/q"` strings (integers as `"p"`).
//! Serialization is deterministic: field order is fixed by the structs below
//! and every collection is already sorted by the producer.

use serde::{Deserialize, Serialize};

use crate::algebra::{table, AlgebraId, WeightOrbit};
use crate::colouring::{ColourScheme, ColouredPatch};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::graphene::{GraphenePatch, HexCell, Method};
use crate::lattice::LatticePoint;
use crate::refinement::RefinedLattice;

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document types always serialize");
    s.push('\n');
    s
}

fn rat_strings(m: &[Vec<Rational>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraTableJson {
    pub id: AlgebraId,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inverse: Vec<Vec<String>>,
    pub gram: Vec<Vec<String>>,
    pub published_gram: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesJson {
    pub algebras: Vec<AlgebraTableJson>,
}

pub fn tables_json() -> TablesJson {
    TablesJson {
        algebras: AlgebraId::ALL
            .iter()
            .map(|&id| {
                let t = table(id);
                AlgebraTableJson {
                    id,
                    rank: t.rank,
                    cartan: t.cartan.clone(),
                    cartan_inverse: rat_strings(&t.cartan_inverse),
                    gram: rat_strings(&t.gram),
                    published_gram: rat_strings(&t.published_gram),
                }
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub algebra: AlgebraId,
    pub dominant: Vec<String>,
    pub size: usize,
    pub elements: Vec<Vec<String>>,
}

pub fn orbit_json(orbit: &WeightOrbit) -> OrbitJson {
    let strs = |c: &[Rational]| c.iter().map(ToString::to_string).collect();
    OrbitJson {
        algebra: orbit.algebra,
        dominant: strs(&orbit.dominant.coords),
        size: orbit.len(),
        elements: orbit.elements.iter().map(|w| strs(&w.coords)).collect(),
    }
}

/// A bare set of points of `(1/scaleDen)·P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub scale_den: i64,
    pub radius: Option<Rational>,
    pub points: Vec<LatticePoint>,
}

impl PointSet {
    pub fn new(scale_den: i64, radius: Option<Rational>, points: Vec<LatticePoint>) -> Self {
        Self { scale_den, radius, points }
    }
}

impl From<&RefinedLattice> for PointSet {
    fn from(l: &RefinedLattice) -> Self {
        Self { scale_den: l.m, radius: Some(l.radius), points: l.points.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PointSetJson {
    pub basis: String,
    pub scale_den: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<String>,
    pub points: Vec<[i64; 2]>,
    pub classes: Vec<u8>,
}

impl From<&PointSet> for PointSetJson {
    fn from(p: &PointSet) -> Self {
        Self {
            basis: "omega".into(),
            scale_den: p.scale_den,
            radius: p.radius.map(|r| r.to_string()),
            points: p.points.iter().map(|q| [q.x, q.y]).collect(),
            classes: p.points.iter().map(LatticePoint::numerator_class).collect(),
        }
    }
}

impl TryFrom<PointSetJson> for PointSet {
    type Error = Error;

    fn try_from(j: PointSetJson) -> Result<Self> {
        if j.basis != "omega" {
            return Err(Error::Malformed(format!("unsupported basis {:?}", j.basis)));
        }
        check_den(j.scale_den)?;
        let points: Vec<LatticePoint> =
            j.points.iter().map(|&[x, y]| LatticePoint::scaled(x, y, j.scale_den)).collect();
        check_classes(&points, &j.classes)?;
        Ok(Self { scale_den: j.scale_den, radius: j.radius.as_deref().map(parse_rational).transpose()?, points })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HexagonJson {
    pub center: [i64; 2],
    pub vertices: [usize; 6],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colour: Option<u32>,
}

/// Patch document; the colour fields are present only for coloured patches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PatchJson {
    pub method: Method,
    pub radius: String,
    pub scale_den: i64,
    pub deleted_class: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<u32>,
    pub vertices: Vec<[i64; 2]>,
    pub classes: Vec<u8>,
    pub hexagons: Vec<HexagonJson>,
    pub provenance: Vec<String>,
}

impl From<&GraphenePatch> for PatchJson {
    fn from(p: &GraphenePatch) -> Self {
        let index = p.vertex_index();
        Self {
            method: p.method,
            radius: p.radius.to_string(),
            scale_den: p.scale_den,
            deleted_class: p.deleted_class,
            m: None,
            k1: None,
            k2: None,
            vertices: p.vertices.iter().map(|v| [v.x, v.y]).collect(),
            classes: p.classes(),
            hexagons: p
                .hexagons
                .iter()
                .map(|h| HexagonJson {
                    center: [h.center.x, h.center.y],
                    vertices: h.vertices.map(|v| index[&v]),
                    colour: None,
                })
                .collect(),
            provenance: p.provenance.clone(),
        }
    }
}

impl From<&ColouredPatch> for PatchJson {
    fn from(c: &ColouredPatch) -> Self {
        let mut j = PatchJson::from(&c.patch);
        j.m = Some(c.scheme.m);
        j.k1 = Some(c.scheme.k1);
        j.k2 = Some(c.scheme.k2);
        for (h, colour) in j.hexagons.iter_mut().zip(&c.colours) {
            h.colour = Some(*colour);
        }
        j
    }
}

fn check_den(den: i64) -> Result<()> {
    if den < 1 {
        return Err(Error::Malformed(format!("scaleDen must be >= 1, got {den}")));
    }
    Ok(())
}

fn check_classes(points: &[LatticePoint], classes: &[u8]) -> Result<()> {
    if classes.len() != points.len() {
        return Err(Error::Malformed(format!("{} classes for {} points", classes.len(), points.len())));
    }
    if let Some((p, c)) = points.iter().zip(classes).find(|(p, c)| p.numerator_class() != **c) {
        return Err(Error::Malformed(format!("point {p} listed with class {c}")));
    }
    Ok(())
}

type Colouring = (ColourScheme, Vec<u32>);

impl PatchJson {
    fn into_patch(self) -> Result<(GraphenePatch, Option<Colouring>)> {
        check_den(self.scale_den)?;
        if self.deleted_class > 2 {
            return Err(Error::InvalidClass(self.deleted_class.into()));
        }
        let den = self.scale_den;
        let vertices: Vec<LatticePoint> = self.vertices.iter().map(|&[x, y]| LatticePoint::scaled(x, y, den)).collect();
        check_classes(&vertices, &self.classes)?;
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Malformed("vertices must be strictly sorted".into()));
        }
        let mut colours = Vec::new();
        let mut hexagons = Vec::new();
        for h in &self.hexagons {
            let vs = h
                .vertices
                .iter()
                .map(|&i| {
                    vertices.get(i).copied().ok_or_else(|| Error::Malformed(format!("vertex index {i} out of range")))
                })
                .collect::<Result<Vec<_>>>()?;
            let cell = HexCell::from_vertices(&vs)
                .ok_or_else(|| Error::Malformed(format!("hexagon at {:?} is malformed", h.center)))?;
            if [cell.center.x, cell.center.y] != h.center || cell.vertices.to_vec() != vs {
                return Err(Error::Malformed(format!("hexagon at {:?} has wrong centre or vertex order", h.center)));
            }
            hexagons.push(cell);
            colours.extend(h.colour);
        }
        let colouring = match (self.m, self.k1, self.k2) {
            (None, None, None) if colours.is_empty() => None,
            (Some(m), Some(k1), Some(k2)) if colours.len() == hexagons.len() => {
                let scheme = ColourScheme::new(m.into(), k1.into(), k2.into())?;
                if scheme.k1 != k1 || scheme.k2 != k2 || colours.iter().any(|&c| c >= m) {
                    return Err(Error::Malformed("colour values out of range".into()));
                }
                Some((scheme, colours))
            }
            _ => return Err(Error::Malformed("colour fields must be all present or all absent".into())),
        };
        let patch = GraphenePatch {
            method: self.method,
            radius: parse_rational(&self.radius)?,
            scale_den: den,
            deleted_class: self.deleted_class,
            vertices,
            hexagons,
            provenance: self.provenance,
        };
        Ok((patch, colouring))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Patch(GraphenePatch),
    Coloured(ColouredPatch),
    Points(PointSet),
}

impl Document {
    pub fn to_json(&self) -> String {
        match self {
            Document::Patch(p) => to_json(&PatchJson::from(p)),
            Document::Coloured(c) => to_json(&PatchJson::from(c)),
            Document::Points(p) => to_json(&PointSetJson::from(p)),
        }
    }
}

/// Parses any of the three document kinds, validating its structure.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if value.get("hexagons").is_some() {
        let j: PatchJson = serde_json::from_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
        Ok(match j.into_patch()? {
            (patch, None) => Document::Patch(patch),
            (patch, Some((scheme, colours))) => Document::Coloured(ColouredPatch { patch, scheme, colours }),
        })
    } else {
        let j: PointSetJson = serde_json::from_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
        Ok(Document::Points(PointSet::try_from(j)?))
    }
}
