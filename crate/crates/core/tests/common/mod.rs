//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through the library's prefilter, merge or closed-form code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use translate_kiss::{ContactComponent, Point, Rect, Shape};

/// Ruler sequence `s_1..=s_len` rebuilt by doubling: every prefix `S` of
/// length `L` extends to length `2L` as `1, S_1 + 1, 1, S_2 + 1, ...`.
pub fn ruler_by_reconstruction(len: usize) -> Vec<u32> {
    let mut seq = vec![1u32];
    while seq.len() < len {
        seq = seq.iter().flat_map(|&s| [1, s + 1]).collect();
    }
    seq.truncate(len);
    seq
}

/// `s_i` by counting bits of the binary representation from the right.
pub fn ruler_by_bits(i: u64) -> u32 {
    let bits = format!("{i:b}");
    bits.chars().rev().position(|c| c == '1').unwrap() as u32 + 1
}

pub fn brute_prefix_sum(i: u64) -> i64 {
    (1..=i).map(|j| i64::from(ruler_by_bits(j))).sum()
}

fn open_overlap(a: &Rect, b: &Rect) -> bool {
    a.x0() < b.x1() && b.x0() < a.x1() && a.y0() < b.y1() && b.y0() < a.y1()
}

/// All-pairs interior disjointness.
pub fn naive_disjoint(a: &[Rect], b: &[Rect]) -> bool {
    a.iter().all(|ra| b.iter().all(|rb| !open_overlap(ra, rb)))
}

/// Raw closed meet of two rectangles as `(lo, hi)` corners, if nonempty.
fn closed_meet(a: &Rect, b: &Rect) -> Option<((i64, i64), (i64, i64))> {
    let xlo = a.x0().max(b.x0());
    let xhi = a.x1().min(b.x1());
    let ylo = a.y0().max(b.y0());
    let yhi = a.y1().min(b.y1());
    (xlo <= xhi && ylo <= yhi).then_some(((xlo, ylo), (xhi, yhi)))
}

/// All-pairs contacts, decomposed into unit edges and re-chained.
pub fn naive_contacts(a: &[Rect], b: &[Rect]) -> Vec<ContactComponent> {
    // Unit edges keyed by their lower-left endpoint.
    let mut horiz = BTreeSet::new();
    let mut vert = BTreeSet::new();
    let mut points = BTreeSet::new();
    for ra in a {
        for rb in b {
            let Some(((x0, y0), (x1, y1))) = closed_meet(ra, rb) else {
                continue;
            };
            assert!(
                x0 == x1 || y0 == y1,
                "oracle called on overlapping interiors"
            );
            if x0 == x1 && y0 == y1 {
                points.insert((x0, y0));
            } else if y0 == y1 {
                horiz.extend((x0..x1).map(|x| (y0, x)));
            } else {
                vert.extend((y0..y1).map(|y| (x0, y)));
            }
        }
    }
    let on_edge = |&(x, y): &(i64, i64)| {
        horiz.contains(&(y, x))
            || horiz.contains(&(y, x - 1))
            || vert.contains(&(x, y))
            || vert.contains(&(x, y - 1))
    };
    let mut out: Vec<ContactComponent> = points
        .iter()
        .filter(|p| !on_edge(p))
        .map(|&(x, y)| ContactComponent::point(Point::new(x, y)))
        .collect();
    out.extend(
        chain(&horiz)
            .into_iter()
            .map(|(y, lo, hi)| ContactComponent::horizontal(y, lo, hi)),
    );
    out.extend(
        chain(&vert)
            .into_iter()
            .map(|(x, lo, hi)| ContactComponent::vertical(x, lo, hi)),
    );
    out.sort();
    out
}

fn chain(units: &BTreeSet<(i64, i64)>) -> Vec<(i64, i64, i64)> {
    let mut runs: Vec<(i64, i64, i64)> = Vec::new();
    for &(line, t) in units {
        match runs.last_mut() {
            Some(last) if last.0 == line && last.2 == t => last.2 = t + 1,
            _ => runs.push((line, t, t + 1)),
        }
    }
    runs
}

/// Length of the shared boundary of two rectangles with disjoint interiors.
fn shared_length(a: &Rect, b: &Rect) -> i64 {
    match closed_meet(a, b) {
        Some(((x0, y0), (x1, y1))) => (x1 - x0) + (y1 - y0),
        None => 0,
    }
}

/// Checks every structural property of `D_n^m` against brute force:
/// piece count, dimensions, pairwise disjointness, bounding box and the
/// exact path of positive-length adjacencies.
pub fn check_shape_invariants(shape: &Shape) -> Result<(), String> {
    let (m, n) = (shape.m(), shape.n());
    let pieces = shape.pieces();
    let expected_count = (1usize << (n + 1)) - 1;
    if pieces.len() != expected_count {
        return Err(format!("piece count {} != {expected_count}", pieces.len()));
    }
    for (k, p) in pieces.iter().enumerate() {
        let (w, h) = (p.rect.width(), p.rect.height());
        let dims_ok = if k % 2 == 0 {
            w == m && h == 1
        } else {
            w == 1 && h == i64::from(ruler_by_bits(p.index))
        };
        if !dims_ok {
            return Err(format!("{p} has size {w}x{h}"));
        }
    }
    let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for p in pieces {
        x0 = x0.min(p.rect.x0());
        x1 = x1.max(p.rect.x1());
        y0 = y0.min(p.rect.y0());
        y1 = y1.max(p.rect.y1());
    }
    let want = (0, (1i64 << n) * m, 0, (1i64 << (n + 1)) - i64::from(n) - 1);
    if (x0, x1, y0, y1) != want {
        return Err(format!("bounding box {:?} != {want:?}", (x0, x1, y0, y1)));
    }
    for a in 0..pieces.len() {
        for b in a + 1..pieces.len() {
            let (ra, rb) = (&pieces[a].rect, &pieces[b].rect);
            // Cheap reject: pieces sorted left to right never meet far apart.
            if ra.x1() < rb.x0() || rb.x1() < ra.x0() {
                continue;
            }
            if open_overlap(ra, rb) {
                return Err(format!("{} and {} overlap", pieces[a], pieces[b]));
            }
            let len = shared_length(ra, rb);
            let consecutive = b == a + 1;
            if consecutive && len != 1 {
                return Err(format!(
                    "{} and {} share length {len}",
                    pieces[a], pieces[b]
                ));
            }
            if !consecutive && len > 0 {
                return Err(format!(
                    "non-consecutive {} and {} share an edge",
                    pieces[a], pieces[b]
                ));
            }
        }
    }
    Ok(())
}

/// `C(k, 2)`.
pub fn pairs(k: usize) -> usize {
    k * (k - 1) / 2
}
