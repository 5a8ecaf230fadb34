//! The disk `D_n^m`: `2^n` horizontal bars of size `m × 1` joined in a
//! staircase by `2^n − 1` unit-width connectors whose heights follow the
//! ruler sequence.
//!
//! Bar `B_i` is `[(i−1)m, im] × [y_i, y_i + 1]` and connector `V_i` is
//! `[im − 1, im] × [y_i + 1, y_{i+1} + 1]`, where `y_i = s_1 + ... + s_{i−1}`.
//!
//! Bars `B_{(j−1)2^k+1} ..= B_{j·2^k}` together with the connectors between
//! them form a translate of `D_k^m`, the `j`-th sub-copy at level `k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::geom::{self, Rect, Vec2};
use crate::ruler::{self, PrefixTable};

/// Largest supported `n`; a disk has `2^{n+1} − 1` pieces.
pub const MAX_N: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceRole {
    Bar,
    Connector,
}

/// One bar `B_i` or connector `V_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    pub role: PieceRole,
    pub index: u64,
    pub rect: Rect,
}

impl Piece {
    pub fn translate(&self, v: Vec2) -> Piece {
        Piece {
            rect: self.rect.translate(v),
            ..*self
        }
    }

    /// `B3`, `V4`, ...
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.role {
            PieceRole::Bar => 'B',
            PieceRole::Connector => 'V',
        };
        write!(f, "{tag}{}", self.index)
    }
}

/// A disk `D_n^m` at the origin, pieces in order `B_1, V_1, B_2, ..., B_{2^n}`.
///
/// Level-0 shapes (a single bar) only arise as extracted sub-copies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    m: i64,
    n: u32,
    pieces: Vec<Piece>,
}

impl Shape {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn bar_count(&self) -> u64 {
        1 << self.n
    }

    pub fn rects(&self) -> Vec<Rect> {
        self.pieces.iter().map(|p| p.rect).collect()
    }

    pub fn translated_rects(&self, v: Vec2) -> Vec<Rect> {
        self.pieces.iter().map(|p| p.rect.translate(v)).collect()
    }

    /// Bar `B_i`, 1-based.
    pub fn bar(&self, i: u64) -> Option<&Piece> {
        let pos = i.checked_sub(1)?.checked_mul(2)?;
        self.pieces.get(usize::try_from(pos).ok()?)
    }

    /// Connector `V_i`, 1-based.
    pub fn connector(&self, i: u64) -> Option<&Piece> {
        if i == 0 || i >= self.bar_count() {
            return None;
        }
        self.pieces.get(usize::try_from(2 * i - 1).ok()?)
    }

    pub fn bounding_box(&self) -> Rect {
        geom::bounding_box(&self.rects()).expect("a shape has at least one piece")
    }

    /// `2^{n+1} − n − 1`.
    pub fn height(&self) -> i64 {
        self.bounding_box().height()
    }

    /// Accepts an externally supplied piece list only if it is exactly `D_n^m`.
    pub fn from_pieces(m: i64, n: u32, pieces: Vec<Piece>) -> Result<Shape> {
        let expected = build_pieces(m, n)?;
        if pieces.len() != expected.len() {
            return Err(Error::ConstructionBroken(format!(
                "D_{n}^{m} has {} pieces, got {}",
                expected.len(),
                pieces.len()
            )));
        }
        for (got, want) in pieces.iter().zip(&expected) {
            if got != want {
                return Err(Error::ConstructionBroken(format!(
                    "piece {got} {} does not match {want} {} of D_{n}^{m}",
                    got.rect, want.rect
                )));
            }
        }
        Ok(Shape { m, n, pieces })
    }
}

/// Selects the `copy`-th (1-based, left to right) translate of `D_level^m`
/// inside a larger disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubCopyRef {
    pub level: u32,
    pub copy: u64,
}

impl SubCopyRef {
    pub const fn new(level: u32, copy: u64) -> Self {
        Self { level, copy }
    }

    fn validate(&self, n: u32) -> Result<()> {
        if self.level > n {
            return Err(param(format!(
                "sub-copy level {} exceeds n = {n}",
                self.level
            )));
        }
        let copies = 1u64 << (n - self.level);
        if self.copy == 0 || self.copy > copies {
            return Err(param(format!(
                "sub-copy {} out of range 1..={copies} at level {}",
                self.copy, self.level
            )));
        }
        Ok(())
    }

    /// 1-based index of the first bar of this copy.
    pub fn first_bar(&self) -> u64 {
        ((self.copy - 1) << self.level) + 1
    }
}

impl fmt::Display for SubCopyRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "copy {} at level {}", self.copy, self.level)
    }
}

fn check_m(m: i64) -> Result<()> {
    if m < 2 {
        return Err(param(format!("m must be at least 2, got {m}")));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<()> {
    if n > MAX_N {
        return Err(param(format!(
            "n = {n} exceeds the supported maximum {MAX_N}"
        )));
    }
    Ok(())
}

/// Pieces of `D_n^m` for `n ≥ 0` straight from the coordinate formulas.
fn build_pieces(m: i64, n: u32) -> Result<Vec<Piece>> {
    check_m(m)?;
    check_n(n)?;
    let bars = 1u64 << n;
    // The overall width bounds every x-coordinate below.
    (bars as i64)
        .checked_mul(m)
        .ok_or(Error::Overflow("disk width"))?;
    let table = PrefixTable::new(bars)?;
    let mut pieces = Vec::with_capacity((2 * bars - 1) as usize);
    for i in 1..=bars {
        let y = table.bar_y(i)?;
        let right = i as i64 * m;
        pieces.push(Piece {
            role: PieceRole::Bar,
            index: i,
            rect: Rect::new(right - m, right, y, y + 1)?,
        });
        if i < bars {
            let y_next = table.bar_y(i + 1)?;
            pieces.push(Piece {
                role: PieceRole::Connector,
                index: i,
                rect: Rect::new(right - 1, right, y + 1, y_next + 1)?,
            });
        }
    }
    Ok(pieces)
}

/// Builds `D_n^m` for `m ≥ 2`, `n ≥ 1`.
pub fn build_disk(m: i64, n: u32) -> Result<Shape> {
    if n < 1 {
        return Err(param("n must be at least 1"));
    }
    Ok(Shape {
        m,
        n,
        pieces: build_pieces(m, n)?,
    })
}

/// Translation taking `D_level^m` at the origin onto the referenced copy
/// inside `D_n^m`: `((j−1)·2^k·m, y_{(j−1)·2^k+1})`.
pub fn sub_copy_offset(m: i64, n: u32, r: SubCopyRef) -> Result<Vec2> {
    check_m(m)?;
    check_n(n)?;
    r.validate(n)?;
    let bars_before = (r.copy - 1) << r.level;
    let dx = (bars_before as i64)
        .checked_mul(m)
        .ok_or(Error::Overflow("sub-copy offset"))?;
    let dy = ruler::partial_sum(bars_before)?;
    Ok(Vec2::new(dx, dy))
}

/// The referenced sub-copy, moved back to the origin and re-indexed from 1.
pub fn extract_sub_copy(shape: &Shape, r: SubCopyRef) -> Result<Shape> {
    let offset = sub_copy_offset(shape.m, shape.n, r)?;
    let bars_before = (r.copy - 1) << r.level;
    let start = (2 * bars_before) as usize;
    let len = (2u64 << r.level) as usize - 1;
    let pieces = shape.pieces[start..start + len]
        .iter()
        .map(|p| Piece {
            index: p.index - bars_before,
            ..p.translate(-offset)
        })
        .collect();
    Ok(Shape {
        m: shape.m,
        n: r.level,
        pieces,
    })
}
