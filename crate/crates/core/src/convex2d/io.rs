//! JSON interchange: `{"vertices": [[x, y], ...]}`.

use serde::{Deserialize, Serialize};

use super::{Point2, Polygon};
use crate::error::{GeomError, Result};

#[derive(Serialize, Deserialize)]
struct Raw {
    vertices: Vec<[f64; 2]>,
}

/// Parsed polygon and whether the input list was already canonical.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub polygon: Polygon,
    pub was_canonical: bool,
}

pub fn from_json(s: &str) -> Result<Parsed> {
    let raw: Raw = serde_json::from_str(s).map_err(|e| GeomError::Parse(e.to_string()))?;
    let pts: Vec<Point2> = raw.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect();
    let polygon = Polygon::from_points(&pts)?;
    let was_canonical = polygon.vertices() == pts.as_slice();
    Ok(Parsed {
        polygon,
        was_canonical,
    })
}

impl Serialize for Polygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Raw {
            vertices: self.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
        .serialize(s)
    }
}

pub fn to_json(p: &Polygon) -> String {
    let raw = Raw {
        vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serialises")
}
