//! Exact integer construction of the rectilinear disks `D_n^m` and of
//! `n + 1` translates of one disk whose interiors are pairwise disjoint
//! while the first translate touches all the others.
//!
//! All geometry is integral; nothing here touches floating point.
//!
//! * [`ruler`] — the ruler sequence, its prefix sums and the minimal-prefix
//!   window inequality.
//! * [`geom`] — closed axis-aligned rectangles, interior overlap and contact
//!   extraction between rectangle unions.
//! * [`disk`] — the bar/connector disk and its recursive sub-copies.
//! * [`placement`] — the translate scene and the shifted-pair instances.
//! * [`verify`] — certificates for the whole construction.
//! * [`io`] and [`render`] — canonical JSON documents and SVG figures.

pub mod disk;
pub mod error;
pub mod geom;
pub mod io;
pub mod placement;
pub mod render;
pub mod ruler;
pub mod verify;

pub use disk::{
    build_disk, extract_sub_copy, sub_copy_offset, Piece, PieceRole, Shape, SubCopyRef,
};
pub use error::{Error, Result};
pub use geom::{
    closed_contact, contact_components, interiors_overlap, union_interiors_disjoint,
    ContactComponent, ContactKind, Point, Rect, Vec2,
};
pub use placement::{
    lemma2_instance, place_translates, theorem_pair_witness, Lemma2Case, PairWitness, Scene,
};
pub use ruler::{ruler, PrefixTable};
pub use verify::{
    verify_construction, verify_touching_heights, Certificate, PairVerdict, TouchingReport,
};
