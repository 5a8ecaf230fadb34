//! SVG figures of a disk or of the translate scene.
//!
//! Every coordinate written is `unit_px` times an exact integer coordinate.
//! The y axis is flipped by negation, so a rectangle `[x0, x1] × [y0, y1]`
//! becomes `x = x0·u, y = −y1·u`, and the view box is the bounding box
//! grown by one unit on every side.

use std::fmt::Write;

use crate::disk::Shape;
use crate::geom::{Rect, Vec2};
use crate::placement::Scene;

pub const DEFAULT_UNIT_PX: u32 = 10;

/// Fill for `A_0`.
const BASE_FILL: &str = "#3b3b3b";

/// Fills for `A_1, A_2, ...`, cycled.
const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

/// Fill used for translate `i`.
pub fn fill_for(i: usize) -> &'static str {
    if i == 0 {
        BASE_FILL
    } else {
        PALETTE[(i - 1) % PALETTE.len()]
    }
}

struct Group<'a> {
    id: String,
    fill: &'static str,
    shape: &'a Shape,
    offset: Vec2,
}

fn render_groups(groups: &[Group<'_>], bbox: Rect, unit_px: u32) -> Vec<u8> {
    let u = i64::from(unit_px.max(1));
    let vx = (bbox.x0() - 1) * u;
    let vy = -(bbox.y1() + 1) * u;
    let vw = (bbox.width() + 2) * u;
    let vh = (bbox.height() + 2) * u;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{vw}\" height=\"{vh}\" viewBox=\"{vx} {vy} {vw} {vh}\">"
    );
    for g in groups {
        let _ = writeln!(
            s,
            "  <g id=\"{}\" fill=\"{}\" stroke=\"#000000\" stroke-width=\"1\">",
            g.id, g.fill
        );
        for p in g.shape.pieces() {
            let r = p.rect.translate(g.offset);
            let _ = writeln!(
                s,
                "    <rect id=\"{}-{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
                g.id,
                p,
                r.x0() * u,
                -r.y1() * u,
                r.width() * u,
                r.height() * u
            );
        }
        s.push_str("  </g>\n");
    }
    s.push_str("</svg>\n");
    s.into_bytes()
}

/// One group per translate, `A_0` first.
pub fn render_scene(scene: &Scene, unit_px: u32) -> Vec<u8> {
    let groups: Vec<Group<'_>> = scene
        .offsets()
        .iter()
        .enumerate()
        .map(|(i, &offset)| Group {
            id: format!("A{i}"),
            fill: fill_for(i),
            shape: scene.shape(),
            offset,
        })
        .collect();
    render_groups(&groups, scene.bounding_box(), unit_px)
}

/// A single disk at the origin.
pub fn render_shape(shape: &Shape, unit_px: u32) -> Vec<u8> {
    let group = Group {
        id: "D".to_owned(),
        fill: fill_for(1),
        shape,
        offset: Vec2::ZERO,
    };
    render_groups(&[group], shape.bounding_box(), unit_px)
}
