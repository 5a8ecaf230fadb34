//! Verification of the translate construction.
//!
//! [`verify_construction`] checks every pair of translates for interior
//! disjointness and records the contacts between them. A translate counts
//! as touching `A_0` only through a contact segment of positive length;
//! point contacts are reported but do not qualify.

use rayon::prelude::*;

use crate::disk::{extract_sub_copy, sub_copy_offset, Shape, SubCopyRef};
use crate::error::{param, Result};
use crate::geom::{
    contact_components, total_segment_length, union_interiors_disjoint, ContactComponent, Rect,
    Vec2,
};
use crate::placement::{place_translates, Scene};

/// Verdict for one unordered pair `i < j` of translates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub interiors_disjoint: bool,
    /// Empty when the interiors overlap.
    pub contacts: Vec<ContactComponent>,
    pub segment_length_total: i64,
}

impl PairVerdict {
    /// Whether the pair touches along a segment of positive length.
    pub fn touches(&self) -> bool {
        self.interiors_disjoint && self.segment_length_total > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub m: i64,
    pub n: u32,
    pub offsets: Vec<Vec2>,
    /// All pairs in lexicographic `(i, j)` order.
    pub pair_verdicts: Vec<PairVerdict>,
    /// Number of `i ≥ 1` with a positive-length contact against `A_0`.
    pub touching_count: usize,
    pub ok: bool,
}

impl Certificate {
    pub fn pair(&self, i: usize, j: usize) -> Option<&PairVerdict> {
        self.pair_verdicts.iter().find(|v| v.i == i && v.j == j)
    }

    pub fn all_disjoint(&self) -> bool {
        self.pair_verdicts.iter().all(|v| v.interiors_disjoint)
    }

    /// Recomputes every verdict from the recorded offsets and the given piece
    /// rectangles, using only the geometry primitives. Returns whether the
    /// recomputation matches what the certificate claims.
    pub fn recheck(&self, rects: &[Rect]) -> Result<bool> {
        let expected = pair_count(self.offsets.len());
        if self.pair_verdicts.len() != expected {
            return Ok(false);
        }
        let recomputed = verdicts_for(rects, &self.offsets)?;
        let (touching_count, ok) = summarize(&recomputed, self.offsets.len());
        Ok(recomputed == self.pair_verdicts
            && touching_count == self.touching_count
            && ok == self.ok)
    }
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn pair_verdict(rects: &[Rect], offsets: &[Vec2], i: usize, j: usize) -> Result<PairVerdict> {
    let a: Vec<Rect> = rects.iter().map(|r| r.translate(offsets[i])).collect();
    let b: Vec<Rect> = rects.iter().map(|r| r.translate(offsets[j])).collect();
    let interiors_disjoint = union_interiors_disjoint(&a, &b);
    let contacts = if interiors_disjoint {
        contact_components(&a, &b)?
    } else {
        Vec::new()
    };
    let segment_length_total = total_segment_length(&contacts);
    Ok(PairVerdict {
        i,
        j,
        interiors_disjoint,
        contacts,
        segment_length_total,
    })
}

fn verdicts_for(rects: &[Rect], offsets: &[Vec2]) -> Result<Vec<PairVerdict>> {
    let k = offsets.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    // collect() keeps the input order, so the result is independent of scheduling.
    pairs
        .par_iter()
        .map(|&(i, j)| pair_verdict(rects, offsets, i, j))
        .collect()
}

fn summarize(verdicts: &[PairVerdict], translates: usize) -> (usize, bool) {
    let touching_count = verdicts.iter().filter(|v| v.i == 0 && v.touches()).count();
    let ok = verdicts.iter().all(|v| v.interiors_disjoint) && touching_count + 1 == translates;
    (touching_count, ok)
}

/// Certificate for the scene of `(m, n)`; `ok` is false only if the
/// construction is broken.
pub fn verify_construction(m: i64, n: u32) -> Result<Certificate> {
    let scene = place_translates(m, n)?;
    certify_scene(&scene)
}

/// Certificate for an arbitrary scene.
pub fn certify_scene(scene: &Scene) -> Result<Certificate> {
    let rects = scene.shape().rects();
    let pair_verdicts = verdicts_for(&rects, scene.offsets())?;
    let (touching_count, ok) = summarize(&pair_verdicts, scene.offsets().len());
    Ok(Certificate {
        m: scene.m(),
        n: scene.n(),
        offsets: scene.offsets().to_vec(),
        pair_verdicts,
        touching_count,
        ok,
    })
}

/// Maximal vertical extent of a shape within one unit-wide column
/// `[x, x + 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct VerticalRun {
    pub x: i64,
    pub y0: i64,
    pub y1: i64,
}

impl VerticalRun {
    pub fn height(&self) -> i64 {
        self.y1 - self.y0
    }

    pub fn translate(&self, v: Vec2) -> Self {
        Self {
            x: self.x + v.dx,
            y0: self.y0 + v.dy,
            y1: self.y1 + v.dy,
        }
    }
}

/// All vertical runs of a rectangle union, sorted by `(x, y0)`.
///
/// Within each unit column the y-extents of the covering rectangles are
/// merged whenever they share a point.
pub fn vertical_runs(rects: &[Rect]) -> Vec<VerticalRun> {
    let mut columns: std::collections::BTreeMap<i64, Vec<(i64, i64)>> = Default::default();
    for r in rects {
        for x in r.x0()..r.x1() {
            columns.entry(x).or_default().push((r.y0(), r.y1()));
        }
    }
    let mut runs = Vec::new();
    for (x, mut spans) in columns {
        spans.sort_unstable();
        let mut cur: Option<(i64, i64)> = None;
        for (lo, hi) in spans {
            cur = match cur {
                Some((a, b)) if lo <= b => Some((a, b.max(hi))),
                Some((a, b)) => {
                    runs.push(VerticalRun { x, y0: a, y1: b });
                    Some((lo, hi))
                }
                None => Some((lo, hi)),
            };
        }
        if let Some((a, b)) = cur {
            runs.push(VerticalRun { x, y0: a, y1: b });
        }
    }
    runs
}

/// Evidence that `A_i` touches `A_0` through the sub-copies `D` (last copy of
/// `D_{n+1−i}^m` in `A_0`) and `D'` (first copy in `A_i`). Coordinates are
/// absolute scene coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TouchingReport {
    pub m: i64,
    pub n: u32,
    pub i: u32,
    pub level: u32,
    /// Index of `D` among the level-`level` copies of `A_0`.
    pub copy_in_a0: u64,
    /// Placement of `D'` minus placement of `D`.
    pub offset: Vec2,
    /// `(i − 1, n + 2 − i)`.
    pub expected_offset: Vec2,
    /// Run on the column of `D`'s middle connector.
    pub middle_run: VerticalRun,
    /// Every run of `D` attaining the maximal height.
    pub tallest_runs: Vec<VerticalRun>,
    pub contacts: Vec<ContactComponent>,
}

impl TouchingReport {
    pub fn offset_ok(&self) -> bool {
        self.offset == self.expected_offset
    }

    /// The middle run is the only tallest run and has height `n + 2 − i`.
    pub fn tallest_unique(&self) -> bool {
        self.tallest_runs == [self.middle_run]
            && self.middle_run.height() == self.expected_offset.dy
    }

    pub fn has_segment_contact(&self) -> bool {
        self.contacts.iter().any(ContactComponent::is_segment)
    }

    pub fn ok(&self) -> bool {
        self.offset_ok() && self.tallest_unique() && self.has_segment_contact()
    }
}

pub fn verify_touching_heights(m: i64, n: u32, i: u32) -> Result<TouchingReport> {
    if i < 1 || i > n {
        return Err(param(format!(
            "translate index i = {i} out of range 1..={n}"
        )));
    }
    let scene = place_translates(m, n)?;
    let level = n + 1 - i;
    let copy_in_a0 = 1u64 << (i - 1);
    let last = SubCopyRef::new(level, copy_in_a0);
    let first = SubCopyRef::new(level, 1);

    let d_at = scene.offsets()[0] + sub_copy_offset(m, n, last)?;
    let d_prime_at = scene.offsets()[i as usize] + sub_copy_offset(m, n, first)?;
    let local = extract_sub_copy(scene.shape(), last)?;
    debug_assert_eq!(local, extract_sub_copy(scene.shape(), first)?);

    let runs = vertical_runs(&local.rects());
    let tallest = runs.iter().map(VerticalRun::height).max().unwrap_or(0);
    let tallest_runs: Vec<VerticalRun> = runs
        .iter()
        .filter(|r| r.height() == tallest)
        .map(|r| r.translate(d_at))
        .collect();

    // Middle connector of D_level^m is V_{2^{level-1}}; level >= 1 here.
    let middle_col = (1i64 << (level - 1)) * m - 1;
    let middle_run = runs
        .iter()
        .filter(|r| r.x == middle_col)
        .max_by_key(|r| r.height())
        .copied()
        .expect("middle column is covered")
        .translate(d_at);

    let d = local.translated_rects(d_at);
    let d_prime = local.translated_rects(d_prime_at);
    let contacts = contact_components(&d, &d_prime)?;

    Ok(TouchingReport {
        m,
        n,
        i,
        level,
        copy_in_a0,
        offset: d_prime_at - d_at,
        expected_offset: Vec2::new(i64::from(i) - 1, i64::from(n) + 2 - i64::from(i)),
        middle_run,
        tallest_runs,
        contacts,
    })
}

/// The shape's own piece rectangles, for re-checking a certificate.
pub fn recheck_with_shape(cert: &Certificate, shape: &Shape) -> Result<bool> {
    if shape.m() != cert.m || shape.n() != cert.n {
        return Ok(false);
    }
    cert.recheck(&shape.rects())
}
