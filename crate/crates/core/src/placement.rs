//! Placement of the translates `A_0, ..., A_n` of one disk, and the
//! shifted-pair instances whose disjointness the construction rests on.

use crate::disk::{build_disk, sub_copy_offset, Shape, SubCopyRef};
use crate::error::{param, Error, Result};
use crate::geom::{Rect, RectIndex, Vec2};

/// `n + 1` translates of a single shared disk; `offsets[i]` places `A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    shape: Shape,
    offsets: Vec<Vec2>,
}

impl Scene {
    /// Wraps externally supplied offsets after checking the scene invariants.
    pub fn new(shape: Shape, offsets: Vec<Vec2>) -> Result<Scene> {
        let n = shape.n() as usize;
        if n < 2 {
            return Err(param(format!("a scene needs n >= 2, got {n}")));
        }
        if offsets.len() != n + 1 {
            return Err(param(format!(
                "expected {} offsets, got {}",
                n + 1,
                offsets.len()
            )));
        }
        if offsets[1] != Vec2::ZERO {
            return Err(param(format!(
                "A_1 must sit at the origin, got {}",
                offsets[1]
            )));
        }
        if offsets[0] != Vec2::new(0, -(n as i64 + 1)) {
            return Err(param(format!(
                "A_0 must sit at (0, -{}), got {}",
                n + 1,
                offsets[0]
            )));
        }
        if offsets[1..].windows(2).any(|w| w[0].dx >= w[1].dx) {
            return Err(param("offsets of A_1..A_n must move strictly right"));
        }
        Ok(Scene { shape, offsets })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn m(&self) -> i64 {
        self.shape.m()
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    pub fn offsets(&self) -> &[Vec2] {
        &self.offsets
    }

    /// Rectangles of `A_i` in scene coordinates.
    pub fn translate_rects(&self, i: usize) -> Vec<Rect> {
        self.shape.translated_rects(self.offsets[i])
    }

    pub fn bounding_box(&self) -> Rect {
        let bb = self.shape.bounding_box();
        self.offsets
            .iter()
            .map(|&v| bb.translate(v))
            .reduce(|a, b| a.hull(&b))
            .expect("a scene has at least one translate")
    }
}

fn check_theorem_params(m: i64, n: u32) -> Result<()> {
    if n < 2 {
        return Err(param(format!("the construction needs n >= 2, got {n}")));
    }
    if m < i64::from(n) {
        return Err(param(format!(
            "the construction needs m >= n, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// `A_1 = D_n^m`; the first copy of `D_{n+1−i}^m` in `A_i` is the second
/// copy of `D_{n+1−i}^m` in `A_{i−1}` moved right one and down one;
/// `A_0` is `A_1` moved down `n + 1`.
pub fn place_translates(m: i64, n: u32) -> Result<Scene> {
    check_theorem_params(m, n)?;
    let shape = build_disk(m, n)?;
    let mut offsets = Vec::with_capacity(n as usize + 1);
    offsets.push(Vec2::new(0, -(i64::from(n) + 1)));
    offsets.push(Vec2::ZERO);
    for i in 2..=n {
        let prev = *offsets.last().unwrap();
        let second = sub_copy_offset(m, n, SubCopyRef::new(n + 1 - i, 2))?;
        let dx = prev
            .dx
            .checked_add(second.dx)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow("translate placement"))?;
        offsets.push(Vec2::new(dx, prev.dy + second.dy - 1));
    }
    Scene::new(shape, offsets)
}

/// Two translates of `D_n^m` where the first bar of the second sits
/// `xstar` right of and `ystar` below bar `B_r` of the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lemma2Case {
    pub m: i64,
    pub n: u32,
    pub r: u64,
    pub xstar: i64,
    pub ystar: i64,
}

impl Lemma2Case {
    pub fn validate(&self) -> Result<()> {
        if self.m < 2 || self.n < 2 {
            return Err(param(format!(
                "shifted pairs need m, n >= 2, got m = {}, n = {}",
                self.m, self.n
            )));
        }
        if self.n > crate::disk::MAX_N {
            return Err(param(format!(
                "n = {} exceeds the supported maximum",
                self.n
            )));
        }
        if self.r == 0 || self.r > 1 << self.n {
            return Err(param(format!(
                "bar index r = {} out of range 1..={}",
                self.r,
                1u64 << self.n
            )));
        }
        if self.xstar < 1 || self.xstar > self.m - 1 {
            return Err(param(format!(
                "xstar = {} out of range 1..={}",
                self.xstar,
                self.m - 1
            )));
        }
        if self.ystar < 1 {
            return Err(param(format!("ystar = {} must be at least 1", self.ystar)));
        }
        Ok(())
    }

    /// Placement of the second translate relative to the first:
    /// `((r−1)m + xstar, y_r − ystar)`.
    pub fn offset(&self) -> Result<Vec2> {
        self.validate()?;
        let bar = sub_copy_offset(self.m, self.n, SubCopyRef::new(0, self.r))?;
        Ok(Vec2::new(bar.dx + self.xstar, bar.dy - self.ystar))
    }
}

impl std::fmt::Display for Lemma2Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "m={} n={} r={} xstar={} ystar={}",
            self.m, self.n, self.r, self.xstar, self.ystar
        )
    }
}

/// Both rectangle lists of a shifted pair: the disk at the origin and its translate.
pub fn lemma2_instance(case: &Lemma2Case) -> Result<(Vec<Rect>, Vec<Rect>)> {
    let offset = case.offset()?;
    let shape = build_disk(case.m, case.n)?;
    Ok((shape.rects(), shape.translated_rects(offset)))
}

/// Outcome of sweeping shifted pairs for one `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Report {
    pub m: i64,
    pub n: u32,
    pub cases_checked: u64,
    pub first_failure: Option<Lemma2Case>,
}

/// Checks every `r ∈ 1..=2^n`, `xstar ∈ 1..=m−1` and `ystar ∈ 1..=ystar_max`.
/// Past `ystar = height + 1` the bounding boxes separate, so that is the
/// natural exhaustive bound.
pub fn check_lemma2(m: i64, n: u32, ystar_max: i64) -> Result<Lemma2Report> {
    Lemma2Case {
        m,
        n,
        r: 1,
        xstar: 1,
        ystar: 1,
    }
    .validate()?;
    let shape = build_disk(m, n)?;
    let base = shape.rects();
    let index = RectIndex::new(&base);
    let mut cases_checked = 0;
    for r in 1..=(1u64 << n) {
        for xstar in 1..m {
            for ystar in 1..=ystar_max {
                let case = Lemma2Case {
                    m,
                    n,
                    r,
                    xstar,
                    ystar,
                };
                let moved = shape.translated_rects(case.offset()?);
                cases_checked += 1;
                if index.overlaps_any(&moved) {
                    return Ok(Lemma2Report {
                        m,
                        n,
                        cases_checked,
                        first_failure: Some(case),
                    });
                }
            }
        }
    }
    Ok(Lemma2Report {
        m,
        n,
        cases_checked,
        first_failure: None,
    })
}

/// `ystar` beyond which a shifted pair is trivially separated.
pub fn lemma2_ystar_bound(m: i64, n: u32) -> Result<i64> {
    Ok(build_disk(m, n)?.height() + 1)
}

/// Why `A_i` and `A_j` (`1 ≤ i < j ≤ n`) form a shifted pair: the first bar
/// of `A_j` is bar `B_r` of `A_i` moved `(j−i, −(j−i))`, and that bar starts
/// copy `copy` of `D_{level}^m` in `A_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub i: u32,
    pub j: u32,
    pub level: u32,
    pub copy: u64,
    pub r: u64,
    pub xstar: i64,
    pub ystar: i64,
}

impl PairWitness {
    pub fn as_lemma2_case(&self, m: i64, n: u32) -> Lemma2Case {
        Lemma2Case {
            m,
            n,
            r: self.r,
            xstar: self.xstar,
            ystar: self.ystar,
        }
    }
}

pub fn theorem_pair_witness(m: i64, n: u32, i: u32, j: u32) -> Result<PairWitness> {
    check_theorem_params(m, n)?;
    if !(1 <= i && i < j && j <= n) {
        return Err(param(format!(
            "need 1 <= i < j <= n, got i = {i}, j = {j}, n = {n}"
        )));
    }
    let scene = place_translates(m, n)?;
    let shift = i64::from(j - i);
    let level = n + 1 - j;
    let target = scene.offsets[j as usize] - scene.offsets[i as usize] - Vec2::new(shift, -shift);

    let copy_width = (1i64 << level) * m;
    let broken = || {
        Error::ConstructionBroken(format!(
            "A_{j} is not a shifted copy of a level-{level} sub-copy of A_{i} (residual {target})"
        ))
    };
    if target.dx < 0 || target.dx % copy_width != 0 {
        return Err(broken());
    }
    let copy = (target.dx / copy_width) as u64 + 1;
    let sub = SubCopyRef::new(level, copy);
    if sub_copy_offset(m, n, sub).map_err(|_| broken())? != target {
        return Err(broken());
    }
    let r = sub.first_bar();

    // Bar-level restatement: B'_1 of A_j equals B_r of A_i under the shift.
    let shape = scene.shape();
    let first_of_j = shape
        .bar(1)
        .unwrap()
        .rect
        .translate(scene.offsets[j as usize]);
    let bar_of_i = shape
        .bar(r)
        .ok_or_else(broken)?
        .rect
        .translate(scene.offsets[i as usize]);
    if bar_of_i.translate(Vec2::new(shift, -shift)) != first_of_j {
        return Err(broken());
    }
    Ok(PairWitness {
        i,
        j,
        level,
        copy,
        r,
        xstar: shift,
        ystar: shift,
    })
}
