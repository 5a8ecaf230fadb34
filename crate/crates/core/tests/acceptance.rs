//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! All checks are exact integer comparisons; the only thresholds are the
//! wall-clock budgets pinned below.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use translate_kiss::io::SceneDocument;
use translate_kiss::render::{render_scene, render_shape};
use translate_kiss::ruler::ruler_recursive;
use translate_kiss::*;

use common::*;

const LEMMA1_BUDGET: Duration = Duration::from_secs(1);
const SHAPE_SWEEP_BUDGET: Duration = Duration::from_secs(30);
const LEMMA2_BUDGET: Duration = Duration::from_secs(60);
const THEOREM_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < budget, || {
        format!("took {took:?}, budget {budget:?}")
    })?;
    Ok(took)
}

fn lemma1_exhaustive() -> Outcome {
    let start = Instant::now();
    let table = PrefixTable::new(4096).map_err(|e| e.to_string())?;
    let mut windows = 0u64;
    for k in 1..=512u64 {
        for r in 1..=(4096 - k + 1) {
            windows += 1;
            let ok = table.check_lemma1(k, r).map_err(|e| e.to_string())?;
            ensure(ok, || {
                format!("window k={k} r={r} is lighter than the prefix")
            })?;
        }
    }
    let took = within(LEMMA1_BUDGET, start)?;
    Ok(format!(
        "{windows} windows, k <= 512, r+k-1 <= 4096, {took:?}"
    ))
}

fn ruler_cross_check() -> Outcome {
    let n = 1usize << 20;
    let oracle = ruler_by_reconstruction(n);
    for (idx, &s) in oracle.iter().enumerate() {
        let i = idx as u64 + 1;
        let bits = ruler(i).map_err(|e| e.to_string())?;
        ensure(bits == s, || {
            format!("ruler({i}) = {bits}, reconstruction gives {s}")
        })?;
        let rec = ruler_recursive(i).map_err(|e| e.to_string())?;
        ensure(rec == s, || {
            format!("recursive ruler({i}) = {rec}, reconstruction gives {s}")
        })?;
    }
    let table = PrefixTable::new(1 << 16).map_err(|e| e.to_string())?;
    for k in 0..=16u32 {
        let got = table.prefix_sum(1 << k).map_err(|e| e.to_string())?;
        let want = (1i64 << (k + 1)) - 1;
        ensure(got == want, || {
            format!("prefix_sum(2^{k}) = {got}, want {want}")
        })?;
        ensure(got == brute_prefix_sum(1 << k), || {
            format!("prefix_sum(2^{k}) disagrees with direct summation")
        })?;
    }
    Ok("i <= 2^20 agree, prefix_sum(2^k) = 2^(k+1)-1 for k <= 16".to_owned())
}

fn shape_invariants() -> Outcome {
    let start = Instant::now();
    let mut shapes = 0;
    let mut extractions = 0;
    for n in 2..=10u32 {
        for m in i64::from(n)..=i64::from(n) + 3 {
            let shape = build_disk(m, n).map_err(|e| e.to_string())?;
            check_shape_invariants(&shape).map_err(|e| format!("m={m} n={n}: {e}"))?;
            shapes += 1;
            for level in 0..=n {
                let expected = if level == 0 {
                    vec![Rect::new(0, m, 0, 1).unwrap()]
                } else {
                    build_disk(m, level).map_err(|e| e.to_string())?.rects()
                };
                for copy in 1..=(1u64 << (n - level)) {
                    let sub = extract_sub_copy(&shape, SubCopyRef::new(level, copy))
                        .map_err(|e| e.to_string())?;
                    ensure(sub.rects() == expected, || {
                        format!("m={m} n={n}: copy {copy} at level {level} is not D_{level}^{m}")
                    })?;
                    extractions += 1;
                }
            }
        }
    }
    let took = within(SHAPE_SWEEP_BUDGET, start)?;
    Ok(format!(
        "{shapes} shapes, {extractions} sub-copy identities, {took:?}"
    ))
}

fn lemma2_exhaustive() -> Outcome {
    let start = Instant::now();
    let mut cases = 0u64;
    for n in 2..=4u32 {
        for m in 2..=4i64 {
            let height = build_disk(m, n).map_err(|e| e.to_string())?.height();
            for r in 1..=(1u64 << n) {
                for xstar in 1..m {
                    for ystar in 1..=height + 1 {
                        let case = placement::Lemma2Case {
                            m,
                            n,
                            r,
                            xstar,
                            ystar,
                        };
                        let (a, b) = lemma2_instance(&case).map_err(|e| e.to_string())?;
                        ensure(union_interiors_disjoint(&a, &b), || {
                            format!("overlap for {case}")
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    let took = within(LEMMA2_BUDGET, start)?;
    Ok(format!(
        "{cases} shifted pairs disjoint, m,n in {{2,3,4}}, {took:?}"
    ))
}

fn theorem() -> Outcome {
    let start = Instant::now();
    let mut certs = 0;
    for n in 2..=10u32 {
        for m in [i64::from(n), i64::from(n) + 2] {
            let cert = verify_construction(m, n).map_err(|e| e.to_string())?;
            ensure(cert.ok, || format!("m={m} n={n}: certificate not ok"))?;
            ensure(cert.touching_count == n as usize, || {
                format!("m={m} n={n}: touching {}", cert.touching_count)
            })?;
            ensure(cert.pair_verdicts.len() == pairs(n as usize + 1), || {
                format!("m={m} n={n}: pair count")
            })?;
            for v in &cert.pair_verdicts {
                ensure(v.interiors_disjoint, || {
                    format!("m={m} n={n}: A_{} and A_{} overlap", v.i, v.j)
                })?;
                if v.i == 0 {
                    ensure(v.segment_length_total >= 1, || {
                        format!(
                            "m={m} n={n}: A_0-A_{} contact length {}",
                            v.j, v.segment_length_total
                        )
                    })?;
                }
            }
            certs += 1;
        }
    }
    let took = within(THEOREM_BUDGET, start)?;

    let cert = verify_construction(4, 3).map_err(|e| e.to_string())?;
    let want = [
        Vec2::new(0, -4),
        Vec2::new(0, 0),
        Vec2::new(17, 6),
        Vec2::new(26, 8),
    ];
    ensure(cert.offsets == want, || {
        format!("(4,3) placements {:?}", cert.offsets)
    })?;
    let covered = |i: usize, j: usize, seg: ContactComponent| {
        cert.pair(i, j)
            .is_some_and(|v| v.contacts.iter().any(|c| c.covers(&seg)))
    };
    ensure(
        covered(0, 1, ContactComponent::horizontal(4, 15, 16)),
        || "(4,3): no (15,4)-(16,4) contact for (0,1)".into(),
    )?;
    ensure(
        covered(0, 2, ContactComponent::horizontal(7, 23, 24)),
        || "(4,3): no (23,7)-(24,7) contact for (0,2)".into(),
    )?;
    Ok(format!("{certs} certificates ok for n in 2..=10, m in {{n, n+2}}; (4,3) placements and contacts match; {took:?}"))
}

fn touching_heights() -> Outcome {
    let mut reports = 0;
    for n in 2..=10u32 {
        let m = i64::from(n);
        for i in 1..=n {
            let r = verify_touching_heights(m, n, i).map_err(|e| e.to_string())?;
            let want = Vec2::new(i64::from(i) - 1, i64::from(n) + 2 - i64::from(i));
            ensure(r.offset == want, || {
                format!("n={n} i={i}: offset {} != {want}", r.offset)
            })?;
            ensure(r.tallest_unique(), || {
                format!(
                    "n={n} i={i}: tallest runs {:?}, middle {:?}",
                    r.tallest_runs, r.middle_run
                )
            })?;
            ensure(r.middle_run.height() == want.dy, || {
                format!("n={n} i={i}: middle run height")
            })?;
            ensure(r.has_segment_contact(), || {
                format!("n={n} i={i}: D and D' do not touch along a segment")
            })?;
            reports += 1;
        }
    }
    Ok(format!(
        "{reports} (n, i) pairs: offset (i-1, n+2-i), unique tallest run n+2-i, segment contact"
    ))
}

fn determinism() -> Outcome {
    for (m, n) in [(4i64, 3u32), (5, 5), (7, 6)] {
        let scene = place_translates(m, n).map_err(|e| e.to_string())?;
        let json = |_: ()| -> Result<Vec<u8>, String> {
            let cert = verify_construction(m, n).map_err(|e| e.to_string())?;
            Ok(SceneDocument::with_certificate(&scene, cert).serialize())
        };
        ensure(json(())? == json(())?, || {
            format!("({m},{n}) certificate bytes differ between runs")
        })?;
        ensure(render_scene(&scene, 10) == render_scene(&scene, 10), || {
            format!("({m},{n}) scene SVG differs")
        })?;
        ensure(
            render_shape(scene.shape(), 7) == render_shape(scene.shape(), 7),
            || format!("({m},{n}) shape SVG differs"),
        )?;
    }
    let mut pairs_checked = 0;
    for n in 2..=4u32 {
        for m in i64::from(n)..=i64::from(n) + 3 {
            let scene = place_translates(m, n).map_err(|e| e.to_string())?;
            let cert = verify_construction(m, n).map_err(|e| e.to_string())?;
            for v in &cert.pair_verdicts {
                let a = scene.translate_rects(v.i);
                let b = scene.translate_rects(v.j);
                ensure(v.interiors_disjoint == naive_disjoint(&a, &b), || {
                    format!(
                        "m={m} n={n} ({},{}): prefilter disagrees with all-pairs",
                        v.i, v.j
                    )
                })?;
                ensure(v.contacts == naive_contacts(&a, &b), || {
                    format!(
                        "m={m} n={n} ({},{}): contacts disagree with all-pairs",
                        v.i, v.j
                    )
                })?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!(
        "byte-identical JSON/SVG across runs; {pairs_checked} pairs agree with all-pairs oracle"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 lemma1 exhaustive", lemma1_exhaustive),
        ("2 ruler cross-check", ruler_cross_check),
        ("3 shape invariants", shape_invariants),
        ("4 lemma2 exhaustive", lemma2_exhaustive),
        ("5 theorem", theorem),
        ("6 touching heights", touching_heights),
        ("7 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}
