//! Closed axis-aligned rectangles with integer corners.
//!
//! Two rectangles *touch* when their closed sets meet while their interiors
//! are disjoint. The meet is then a point or an axis-parallel segment, which
//! is what [`closed_contact`] returns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer translation vector.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Vec2 {
    pub dx: i64,
    pub dy: i64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { dx: 0, dy: 0 };

    pub const fn new(dx: i64, dy: i64) -> Self {
        Self { dx, dy }
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.dx + o.dx, self.dy + o.dy)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.dx - o.dx, self.dy - o.dy)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }
}

impl From<[i64; 2]> for Vec2 {
    fn from([dx, dy]: [i64; 2]) -> Self {
        Vec2::new(dx, dy)
    }
}

impl From<Vec2> for [i64; 2] {
    fn from(v: Vec2) -> Self {
        [v.dx, v.dy]
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Lattice point, ordered lexicographically by `(x, y)`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, v: Vec2) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Closed rectangle `[x0, x1] × [y0, y1]` of positive area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    x0: i64,
    x1: i64,
    y0: i64,
    y1: i64,
}

impl Rect {
    /// `[x0, x1] × [y0, y1]`; degenerate rectangles are rejected.
    pub fn new(x0: i64, x1: i64, y0: i64, y1: i64) -> Result<Self> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::Parameter(format!(
                "degenerate rectangle [{x0},{x1}]x[{y0},{y1}]"
            )));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn x0(&self) -> i64 {
        self.x0
    }
    pub fn x1(&self) -> i64 {
        self.x1
    }
    pub fn y0(&self) -> i64 {
        self.y0
    }
    pub fn y1(&self) -> i64 {
        self.y1
    }
    pub fn width(&self) -> i64 {
        self.x1 - self.x0
    }
    pub fn height(&self) -> i64 {
        self.y1 - self.y0
    }

    /// Overflow panics; coordinates are never allowed to wrap.
    pub fn translate(&self, v: Vec2) -> Rect {
        let add = |a: i64, d: i64| {
            a.checked_add(d)
                .expect("rectangle translation overflowed i64")
        };
        Rect {
            x0: add(self.x0, v.dx),
            x1: add(self.x1, v.dx),
            y0: add(self.y0, v.dy),
            y1: add(self.y1, v.dy),
        }
    }

    /// Smallest rectangle containing both.
    pub fn hull(&self, o: &Rect) -> Rect {
        Rect {
            x0: self.x0.min(o.x0),
            x1: self.x1.max(o.x1),
            y0: self.y0.min(o.y0),
            y1: self.y1.max(o.y1),
        }
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]x[{},{}]", self.x0, self.x1, self.y0, self.y1)
    }
}

/// Bounding box of a nonempty rectangle list.
pub fn bounding_box(rects: &[Rect]) -> Option<Rect> {
    let (first, rest) = rects.split_first()?;
    Some(rest.iter().fold(*first, |acc, r| acc.hull(r)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactKind {
    Point,
    HorizontalSegment,
    VerticalSegment,
}

/// A connected piece of shared boundary: a point or a maximal axis-parallel
/// segment, with `a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ContactComponent {
    pub kind: ContactKind,
    pub a: Point,
    pub b: Point,
    pub length: i64,
}

impl ContactComponent {
    pub fn point(p: Point) -> Self {
        Self {
            kind: ContactKind::Point,
            a: p,
            b: p,
            length: 0,
        }
    }

    /// Horizontal segment on `y` between `xa < xb`.
    pub fn horizontal(y: i64, xa: i64, xb: i64) -> Self {
        debug_assert!(xa < xb);
        Self {
            kind: ContactKind::HorizontalSegment,
            a: Point::new(xa, y),
            b: Point::new(xb, y),
            length: xb - xa,
        }
    }

    /// Vertical segment on `x` between `ya < yb`.
    pub fn vertical(x: i64, ya: i64, yb: i64) -> Self {
        debug_assert!(ya < yb);
        Self {
            kind: ContactKind::VerticalSegment,
            a: Point::new(x, ya),
            b: Point::new(x, yb),
            length: yb - ya,
        }
    }

    pub fn is_segment(&self) -> bool {
        self.kind != ContactKind::Point
    }

    /// Checks the point/segment invariants.
    pub fn validate(&self) -> Result<()> {
        let ok = match self.kind {
            ContactKind::Point => self.a == self.b && self.length == 0,
            ContactKind::HorizontalSegment => {
                self.a.y == self.b.y && self.a.x < self.b.x && self.length == self.b.x - self.a.x
            }
            ContactKind::VerticalSegment => {
                self.a.x == self.b.x && self.a.y < self.b.y && self.length == self.b.y - self.a.y
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Contract(format!(
                "malformed contact component {self:?}"
            )))
        }
    }

    pub fn translate(&self, v: Vec2) -> Self {
        Self {
            a: self.a + v,
            b: self.b + v,
            ..*self
        }
    }

    /// Whether `other` lies entirely on this component.
    pub fn covers(&self, other: &ContactComponent) -> bool {
        self.contains(other.a) && self.contains(other.b)
    }

    /// Whether `p` lies on this component (closed).
    pub fn contains(&self, p: Point) -> bool {
        match self.kind {
            ContactKind::Point => self.a == p,
            ContactKind::HorizontalSegment => p.y == self.a.y && self.a.x <= p.x && p.x <= self.b.x,
            ContactKind::VerticalSegment => p.x == self.a.x && self.a.y <= p.y && p.y <= self.b.y,
        }
    }
}

impl fmt::Display for ContactComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ContactKind::Point => write!(f, "point {}", self.a),
            ContactKind::HorizontalSegment => write!(
                f,
                "horizontal {}-{} (length {})",
                self.a, self.b, self.length
            ),
            ContactKind::VerticalSegment => {
                write!(f, "vertical {}-{} (length {})", self.a, self.b, self.length)
            }
        }
    }
}

/// Open-rectangle intersection test.
pub fn interiors_overlap(a: &Rect, b: &Rect) -> bool {
    a.x0.max(b.x0) < a.x1.min(b.x1) && a.y0.max(b.y0) < a.y1.min(b.y1)
}

/// Intersection of the closed rectangles, which must have disjoint interiors.
pub fn closed_contact(a: &Rect, b: &Rect) -> Result<Option<ContactComponent>> {
    if interiors_overlap(a, b) {
        return Err(Error::Contract(format!(
            "closed_contact on overlapping rectangles {a} and {b}"
        )));
    }
    let (xlo, xhi) = (a.x0.max(b.x0), a.x1.min(b.x1));
    let (ylo, yhi) = (a.y0.max(b.y0), a.y1.min(b.y1));
    if xlo > xhi || ylo > yhi {
        return Ok(None);
    }
    Ok(Some(match (xlo == xhi, ylo == yhi) {
        (true, true) => ContactComponent::point(Point::new(xlo, ylo)),
        (true, false) => ContactComponent::vertical(xlo, ylo, yhi),
        (false, true) => ContactComponent::horizontal(ylo, xlo, xhi),
        (false, false) => unreachable!("positive-area meet of rectangles with disjoint interiors"),
    }))
}

/// Rectangles sorted by left edge, for windowed candidate lookups.
///
/// A rectangle can only meet `[x0, x1]` if its own left edge lies in
/// `[x0 − max_width, x1]`, so each probe is a binary search plus a scan of
/// that window.
#[derive(Debug, Clone)]
pub struct RectIndex<'a> {
    sorted: Vec<(usize, &'a Rect)>,
    max_width: i64,
}

impl<'a> RectIndex<'a> {
    pub fn new(rects: &'a [Rect]) -> Self {
        let mut sorted: Vec<(usize, &Rect)> = rects.iter().enumerate().collect();
        sorted.sort_by_key(|(i, r)| (r.x0, *i));
        let max_width = rects.iter().map(Rect::width).max().unwrap_or(0);
        Self { sorted, max_width }
    }

    /// Rectangles whose closed x-extent meets `[probe.x0, probe.x1]` and whose
    /// closed y-extent meets `[probe.y0, probe.y1]`, with their input positions.
    pub fn candidates<'s>(
        &'s self,
        probe: &'s Rect,
    ) -> impl Iterator<Item = (usize, &'a Rect)> + 's {
        let lo = probe.x0.saturating_sub(self.max_width);
        let start = self.sorted.partition_point(|(_, r)| r.x0 < lo);
        self.sorted[start..]
            .iter()
            .take_while(move |(_, r)| r.x0 <= probe.x1)
            .filter(move |(_, r)| r.x1 >= probe.x0 && r.y0 <= probe.y1 && r.y1 >= probe.y0)
            .copied()
    }

    /// Whether any probe rectangle's interior meets an indexed interior.
    pub fn overlaps_any(&self, probes: &[Rect]) -> bool {
        probes
            .iter()
            .any(|p| self.candidates(p).any(|(_, r)| interiors_overlap(p, r)))
    }
}

/// True iff no rectangle of `a` has interior meeting a rectangle of `b`.
pub fn union_interiors_disjoint(a: &[Rect], b: &[Rect]) -> bool {
    // Index the longer list and probe with the shorter one.
    if a.len() >= b.len() {
        !RectIndex::new(a).overlaps_any(b)
    } else {
        !RectIndex::new(b).overlaps_any(a)
    }
}

/// Maximal contact components between two rectangle unions with disjoint
/// interiors, in canonical `(kind, a, b)` order.
///
/// Collinear segments sharing a point are merged; points lying on a segment
/// are absorbed into it.
pub fn contact_components(a: &[Rect], b: &[Rect]) -> Result<Vec<ContactComponent>> {
    let index = RectIndex::new(b);
    let mut raw = Vec::new();
    for ra in a {
        for (_, rb) in index.candidates(ra) {
            if let Some(c) = closed_contact(ra, rb)? {
                raw.push(c);
            }
        }
    }
    Ok(merge_contacts(raw))
}

/// Canonicalises raw pairwise contacts into maximal components.
pub fn merge_contacts(raw: impl IntoIterator<Item = ContactComponent>) -> Vec<ContactComponent> {
    // line coordinate -> intervals along the line
    let mut horizontal: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    let mut vertical: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    let mut points = BTreeSet::new();
    for c in raw {
        match c.kind {
            ContactKind::Point => {
                points.insert(c.a);
            }
            ContactKind::HorizontalSegment => {
                horizontal.entry(c.a.y).or_default().push((c.a.x, c.b.x))
            }
            ContactKind::VerticalSegment => vertical.entry(c.a.x).or_default().push((c.a.y, c.b.y)),
        }
    }
    for spans in horizontal.values_mut().chain(vertical.values_mut()) {
        *spans = merge_intervals(std::mem::take(spans));
    }

    let on_segment = |p: &Point| {
        let hit = |spans: Option<&Vec<(i64, i64)>>, t: i64| {
            spans.is_some_and(|s| {
                let k = s.partition_point(|&(_, hi)| hi < t);
                k < s.len() && s[k].0 <= t
            })
        };
        hit(horizontal.get(&p.y), p.x) || hit(vertical.get(&p.x), p.y)
    };

    let mut out: Vec<ContactComponent> = points
        .iter()
        .filter(|p| !on_segment(p))
        .map(|&p| ContactComponent::point(p))
        .collect();
    for (&y, spans) in &horizontal {
        out.extend(
            spans
                .iter()
                .map(|&(lo, hi)| ContactComponent::horizontal(y, lo, hi)),
        );
    }
    for (&x, spans) in &vertical {
        out.extend(
            spans
                .iter()
                .map(|&(lo, hi)| ContactComponent::vertical(x, lo, hi)),
        );
    }
    out.sort();
    out
}

fn merge_intervals(mut spans: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    spans.sort_unstable();
    let mut merged: Vec<(i64, i64)> = Vec::with_capacity(spans.len());
    for (lo, hi) in spans {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => merged.push((lo, hi)),
        }
    }
    merged
}

/// Total length of the segment components; points contribute nothing.
pub fn total_segment_length(components: &[ContactComponent]) -> i64 {
    components.iter().map(|c| c.length).sum()
}

pub fn translate_all(rects: &[Rect], v: Vec2) -> Vec<Rect> {
    rects.iter().map(|r| r.translate(v)).collect()
}
