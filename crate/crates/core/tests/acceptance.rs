//! One PASS/FAIL line per acceptance criterion, all with exact tolerance.
//! Run with `cargo test -p sliceburn --test acceptance -- --nocapture`.

use sliceburn::spectrum::{ComponentLabel, Localization};
use sliceburn::verify::{self, corpus_context, rng_for, BisetCase, Outcome, CORPUS, ODD_EXTRAS};
use sliceburn::{Context, RingKind};
use std::time::{Duration, Instant};

const SEED: u64 = 20_240_601;
const RINGS: [RingKind; 2] = [RingKind::Slice, RingKind::Section];

struct Criterion {
    number: usize,
    title: &'static str,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Criterion { number, title, failures: Vec::new(), notes: Vec::new() }
    }

    fn record(&mut self, group: &str, what: &str, outcome: Outcome) {
        if let Err(e) = outcome {
            self.failures.push(format!("{group} {what}: {e}"));
        }
    }

    fn expect(&mut self, group: &str, cond: bool, msg: String) {
        if !cond {
            self.failures.push(format!("{group}: {msg}"));
        }
    }

    fn line(&self) -> String {
        let tag = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} {tag} [exact] {}", self.number, self.title);
        if !self.notes.is_empty() {
            s.push_str(&format!(" ({})", self.notes.join("; ")));
        }
        for f in &self.failures {
            s.push_str(&format!("\n    {f}"));
        }
        s
    }
}

fn corpus() -> Vec<(&'static str, Context)> {
    CORPUS.iter().map(|&(name, desc)| (name, corpus_context(desc).expect("corpus group builds"))).collect()
}

fn c1_structure_constants(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(1, "C2 structure constants a² = 2a, b² = ab = ba = 2b");
    let (name, ctx) = groups.iter().find(|(n, _)| *n == "C2").expect("C2 in corpus");
    c.record(name, "multiply", verify::c2_structure_constants(ctx));
    c
}

fn c2_unit_dimensions(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(2, "unit dimensions: Ξ(C2) 3, Ξ(C2²) 7, abelian 2r+1 with ordinary r+1");
    for (name, ctx) in groups {
        if !ctx.group().is_abelian() {
            continue;
        }
        let lat = ctx.lattice();
        let r = (0..lat.len()).filter(|&s| 2 * lat.order(s) == ctx.group().order()).count();
        let dim = match ctx.unit_group(RingKind::Slice) {
            Ok(u) => u.dimension,
            Err(e) => {
                c.expect(name, false, e.to_string());
                continue;
            }
        };
        let ordinary = ctx.ordinary_unit_subgroup().map(|u| u.dimension);
        c.expect(name, dim == 2 * r + 1, format!("dim Ξ^× = {dim}, r = {r}"));
        c.expect(name, ordinary == Ok(r + 1), format!("ordinary dimension {ordinary:?}, r = {r}"));
        match *name {
            "C2" => c.expect(name, dim == 3, format!("dim Ξ(C2)^× = {dim}")),
            "C2^2" => c.expect(name, dim == 7, format!("dim Ξ(C2²)^× = {dim}")),
            _ => {}
        }
        c.notes.push(format!("{name}: r={r} dim={dim}"));
    }
    c
}

fn c3_odd_order() -> Criterion {
    let mut c = Criterion::new(3, "odd order: dim Ξ^× = dim Γ^× = 1");
    let wanted = ["C3", "C5", "C7", "C9"];
    let list = CORPUS.iter().filter(|(n, _)| wanted.contains(n)).chain(ODD_EXTRAS.iter());
    for &(name, desc) in list {
        let ctx = corpus_context(desc).expect("group builds");
        for kind in RINGS {
            match ctx.unit_group(kind) {
                Ok(u) => c.expect(name, u.dimension == 1, format!("{} unit dimension {}", kind.name(), u.dimension)),
                Err(e) => c.expect(name, false, e.to_string()),
            }
        }
        c.notes.push(name.to_string());
    }
    c
}

fn c4_connectivity(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(4, "connected iff solvable; A5 has ≥2 Ξ and exactly 2 Γ components labelled {1, A5}");
    for (name, ctx) in groups {
        let solvable = ctx.lattice().is_solvable();
        for kind in RINGS {
            let comps = match ctx.components(kind, Localization::Integers) {
                Ok(v) => v,
                Err(e) => {
                    c.expect(name, false, e.to_string());
                    continue;
                }
            };
            if solvable {
                c.expect(name, comps.len() == 1, format!("{} ring has {} components", kind.name(), comps.len()));
            }
            if *name == "A5" {
                let lat = ctx.lattice();
                match kind {
                    RingKind::Slice => {
                        c.expect(name, comps.len() >= 2, format!("Ξ has {} components", comps.len()));
                        c.notes.push(format!("A5: {} Ξ components", comps.len()));
                    }
                    _ => {
                        let mut orders: Vec<usize> = comps
                            .iter()
                            .filter_map(|k| match k.label {
                                ComponentLabel::Perfect(cl) => Some(lat.order(lat.class_rep(cl))),
                                _ => None,
                            })
                            .collect();
                        orders.sort_unstable();
                        c.expect(name, comps.len() == 2 && orders == [1, 60], format!("Γ components labelled {orders:?}"));
                        c.notes.push(format!("A5: Γ labels of orders {orders:?}"));
                    }
                }
            }
        }
    }
    c
}

fn c5_idempotents(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(5, "idempotents: sum 1, ξ² = ξ, orthogonal, indicator ghosts");
    for (name, ctx) in groups {
        for kind in RINGS {
            c.record(name, kind.name(), verify::idempotent_suite(ctx, kind));
        }
    }
    c
}

fn c6_oracles(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(6, "oracles: products (|G| ≤ 24), marks vs squares (200 morphisms), bisets (|G| ≤ 12)");
    let mut bisets = 0;
    for (name, ctx) in groups {
        let n = ctx.group().order();
        if n <= 24 {
            c.record(name, "product oracle", verify::product_oracle(ctx));
        }
        c.record(name, "marks vs hom counts", verify::marks_vs_hom_count(ctx, &mut rng_for(SEED, ctx, 6), 200, 12));
        if n <= 12 {
            match verify::elemental_bisets(ctx) {
                Ok(cases) => {
                    for case in &cases {
                        c.record(name, &case.name, verify::biset_apply_vs_times(case));
                    }
                    bisets += cases.len();
                }
                Err(e) => c.expect(name, false, e.to_string()),
            }
        }
    }
    c.notes.push(format!("{bisets} elemental bisets"));
    c
}

fn c7_ghost_round_trip(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(7, "ghost image: 200 elements pass, 200 passing vectors pull back, failing vector per nonabelian group");
    let mut exhibited = 0;
    for (name, ctx) in groups {
        for (k, kind) in RINGS.into_iter().enumerate() {
            let out = verify::ghost_round_trip(ctx, kind, &mut rng_for(SEED, ctx, 70 + k as u64), 200);
            if out.as_ref().is_ok_and(|d| d.contains("failing vector")) {
                exhibited += 1;
            }
            c.record(name, kind.name(), out);
        }
    }
    c.notes.push(format!("{exhibited} failing vectors exhibited"));
    c
}

fn c8_galois(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(8, "Galois: six closure lemmas, universal property (≤ 12 points), projection closure");
    for (name, ctx) in groups {
        c.record(name, "closure lemmas", verify::galois_closure_lemmas(ctx, &mut rng_for(SEED, ctx, 80), 50));
        c.record(name, "universal property", verify::galois_universal_property(ctx, &mut rng_for(SEED, ctx, 81), 20, 12));
        c.record(name, "projection closure", verify::projection_closure(ctx));
    }
    c
}

fn c9_tensor_induction(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(9, "tensor induction: multiplicative and unital (50 pairs), identity, counterexample");
    let mut inert = 0;
    for (name, ctx) in groups {
        let cases: Vec<BisetCase> = match verify::elemental_bisets(ctx) {
            Ok(v) => v,
            Err(e) => {
                c.expect(name, false, e.to_string());
                continue;
            }
        };
        let mut rng = rng_for(SEED, ctx, 90);
        for case in cases.iter().filter(|k| k.biset.is_left_inert()) {
            c.record(name, &case.name, verify::tensor_multiplicative(case, &mut rng, 50));
            inert += 1;
        }
        c.record(name, "identity", verify::tensor_identity(ctx, &mut rng, 10));
    }
    c.record("C2", "counterexample", verify::tensor_counterexample());
    c.notes.push(format!("{inert} left-inert bisets"));
    c
}

fn c10_mod_p(groups: &[(&str, Context)]) -> Criterion {
    let mut c = Criterion::new(10, "φ_{T,S} ≡ φ_{PT,PS} mod p on 50 random elements");
    for (name, ctx) in groups {
        for (k, kind) in RINGS.into_iter().enumerate() {
            c.record(name, kind.name(), verify::mod_p_congruences(ctx, kind, &mut rng_for(SEED, ctx, 100 + k as u64), 50));
        }
    }
    c
}

#[test]
fn acceptance_criteria() {
    let start = Instant::now();
    let groups = corpus();
    let criteria = [
        c1_structure_constants(&groups),
        c2_unit_dimensions(&groups),
        c3_odd_order(),
        c4_connectivity(&groups),
        c5_idempotents(&groups),
        c6_oracles(&groups),
        c7_ghost_round_trip(&groups),
        c8_galois(&groups),
        c9_tensor_induction(&groups),
        c10_mod_p(&groups),
    ];
    for c in &criteria {
        println!("{}", c.line());
    }

    // A5 on its own: lattice, spectrum and the full verify run.
    let a5_start = Instant::now();
    let a5 = corpus_context("family alternating 5").expect("A5 builds");
    let _ = a5.components(RingKind::Section, Localization::Integers);
    let a5_checks = verify::run(&a5, verify::Suite::All, &verify::Options { seed: SEED, ..Default::default() });
    let a5_time = a5_start.elapsed();
    let total = start.elapsed();
    let timing_ok = a5_time < Duration::from_secs(30) && total < Duration::from_secs(300);
    println!(
        "timing {} A5 full run {:.2}s (limit 30s), total {:.2}s (limit 300s)",
        if timing_ok { "PASS" } else { "FAIL" },
        a5_time.as_secs_f64(),
        total.as_secs_f64()
    );

    let failed: Vec<usize> = criteria.iter().filter(|c| !c.failures.is_empty()).map(|c| c.number).collect();
    let a5_failed: Vec<&str> = a5_checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
    assert!(a5_failed.is_empty(), "A5 checks failed: {a5_failed:?}");
    assert!(timing_ok, "time limits exceeded");
}
