//! Canonical JSON documents for shapes, scenes and certificates.
//!
//! A document always carries the full piece list. Scene documents add the
//! translate offsets, and certificate documents add the pairwise verdicts.
//! Serialization is compact with keys in a fixed order and a single
//! trailing newline, so equal documents always produce identical bytes.
//!
//! ```json
//! {"schema_version":"tk-1","m":2,"n":1,
//!  "pieces":[{"role":"bar","index":1,"x0":0,"x1":2,"y0":0,"y1":1},...],
//!  "offsets":[],"certificate":null}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::disk::{Piece, PieceRole, Shape};
use crate::geom::{ContactComponent, Rect, Vec2};
use crate::placement::Scene;
use crate::verify::{Certificate, PairVerdict};

pub const SCHEMA_VERSION: &str = "tk-1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("unsupported schema version {found:?} (expected {SCHEMA_VERSION:?})")]
    SchemaVersion { found: String },
    #[error("document violates an invariant: {0}")]
    Invariant(String),
}

fn invariant(msg: impl Into<String>) -> DocumentError {
    DocumentError::Invariant(msg.into())
}

/// A shape, optionally placed as a scene, optionally with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneDocument {
    pub shape: Shape,
    /// Empty for shape-only documents.
    pub offsets: Vec<Vec2>,
    pub certificate: Option<Certificate>,
}

impl SceneDocument {
    pub fn from_shape(shape: Shape) -> Self {
        Self {
            shape,
            offsets: Vec::new(),
            certificate: None,
        }
    }

    pub fn from_scene(scene: &Scene) -> Self {
        Self {
            shape: scene.shape().clone(),
            offsets: scene.offsets().to_vec(),
            certificate: None,
        }
    }

    pub fn with_certificate(scene: &Scene, cert: Certificate) -> Self {
        Self {
            certificate: Some(cert),
            ..Self::from_scene(scene)
        }
    }

    pub fn m(&self) -> i64 {
        self.shape.m()
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    /// The placed scene, if this document carries offsets.
    pub fn scene(&self) -> Option<Scene> {
        if self.offsets.is_empty() {
            return None;
        }
        Scene::new(self.shape.clone(), self.offsets.clone()).ok()
    }

    pub fn serialize(&self) -> Vec<u8> {
        let raw = RawDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            m: self.m(),
            n: self.n(),
            pieces: self.shape.pieces().iter().map(RawPiece::from).collect(),
            offsets: self.offsets.clone(),
            certificate: self.certificate.as_ref().map(RawCertificate::from),
        };
        let mut bytes = serde_json::to_vec(&raw).expect("documents always serialize");
        bytes.push(b'\n');
        bytes
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_slice(bytes)?;
        if raw.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion {
                found: raw.schema_version,
            });
        }
        let pieces = raw
            .pieces
            .iter()
            .map(RawPiece::to_piece)
            .collect::<Result<Vec<_>, _>>()?;
        let shape =
            Shape::from_pieces(raw.m, raw.n, pieces).map_err(|e| invariant(e.to_string()))?;
        if !raw.offsets.is_empty() {
            Scene::new(shape.clone(), raw.offsets.clone()).map_err(|e| invariant(e.to_string()))?;
        }
        let certificate = match raw.certificate {
            None => None,
            Some(c) => {
                if raw.offsets.is_empty() {
                    return Err(invariant("a certificate needs scene offsets"));
                }
                Some(c.into_certificate(raw.m, raw.n, &raw.offsets)?)
            }
        };
        Ok(Self {
            shape,
            offsets: raw.offsets,
            certificate,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: String,
    m: i64,
    n: u32,
    pieces: Vec<RawPiece>,
    offsets: Vec<Vec2>,
    certificate: Option<RawCertificate>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiece {
    role: PieceRole,
    index: u64,
    x0: i64,
    x1: i64,
    y0: i64,
    y1: i64,
}

impl From<&Piece> for RawPiece {
    fn from(p: &Piece) -> Self {
        RawPiece {
            role: p.role,
            index: p.index,
            x0: p.rect.x0(),
            x1: p.rect.x1(),
            y0: p.rect.y0(),
            y1: p.rect.y1(),
        }
    }
}

impl RawPiece {
    fn to_piece(&self) -> Result<Piece, DocumentError> {
        let rect =
            Rect::new(self.x0, self.x1, self.y0, self.y1).map_err(|e| invariant(e.to_string()))?;
        Ok(Piece {
            role: self.role,
            index: self.index,
            rect,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    pairs: Vec<RawPair>,
    touching_count: usize,
    ok: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    i: usize,
    j: usize,
    interiors_disjoint: bool,
    segment_length_total: i64,
    contacts: Vec<ContactComponent>,
}

impl From<&Certificate> for RawCertificate {
    fn from(c: &Certificate) -> Self {
        RawCertificate {
            pairs: c
                .pair_verdicts
                .iter()
                .map(|v| RawPair {
                    i: v.i,
                    j: v.j,
                    interiors_disjoint: v.interiors_disjoint,
                    segment_length_total: v.segment_length_total,
                    contacts: v.contacts.clone(),
                })
                .collect(),
            touching_count: c.touching_count,
            ok: c.ok,
        }
    }
}

impl RawCertificate {
    /// Structural checks only; [`Certificate::recheck`] redoes the geometry.
    fn into_certificate(
        self,
        m: i64,
        n: u32,
        offsets: &[Vec2],
    ) -> Result<Certificate, DocumentError> {
        let k = offsets.len();
        let expected: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        let got: Vec<(usize, usize)> = self.pairs.iter().map(|p| (p.i, p.j)).collect();
        if got != expected {
            return Err(invariant(
                "certificate pairs must list every (i, j), i < j, in lexicographic order",
            ));
        }
        let mut pair_verdicts = Vec::with_capacity(self.pairs.len());
        for p in self.pairs {
            for c in &p.contacts {
                c.validate().map_err(|e| invariant(e.to_string()))?;
            }
            if !p.interiors_disjoint && !p.contacts.is_empty() {
                return Err(invariant(format!(
                    "pair ({}, {}) overlaps but lists contacts",
                    p.i, p.j
                )));
            }
            let total: i64 = p.contacts.iter().map(|c| c.length).sum();
            if total != p.segment_length_total {
                return Err(invariant(format!(
                    "pair ({}, {}) segment_length_total {} != sum of contact lengths {total}",
                    p.i, p.j, p.segment_length_total
                )));
            }
            pair_verdicts.push(PairVerdict {
                i: p.i,
                j: p.j,
                interiors_disjoint: p.interiors_disjoint,
                contacts: p.contacts,
                segment_length_total: p.segment_length_total,
            });
        }
        let touching = pair_verdicts
            .iter()
            .filter(|v| v.i == 0 && v.touches())
            .count();
        if touching != self.touching_count {
            return Err(invariant(format!(
                "touching_count {} disagrees with the listed pairs ({touching})",
                self.touching_count
            )));
        }
        let ok = pair_verdicts.iter().all(|v| v.interiors_disjoint) && touching + 1 == k;
        if ok != self.ok {
            return Err(invariant("ok flag disagrees with the listed pairs"));
        }
        Ok(Certificate {
            m,
            n,
            offsets: offsets.to_vec(),
            pair_verdicts,
            touching_count: self.touching_count,
            ok: self.ok,
        })
    }
}
