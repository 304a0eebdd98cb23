//! One pass/fail line per acceptance criterion.
//!
//! A criterion whose expected value disagrees with the library is printed
//! as FAIL with the observed value. The test asserts that the set of
//! failing checks is exactly `KNOWN_FAILURES`, so any new failure, or a
//! known one starting to pass, breaks the build.

mod common;

use std::time::Instant;

use common::{brute_denominator_sets, brute_maximal, manifest, members};
use orelab::analysis::Analysis;
use orelab::corpus::{corpus_run, entry_report, structural_diff};
use orelab::criteria::{cross_validate, first_criterion, ll_quotient_criterion, product_maxden_check, run_criterion, CriterionId};
use orelab::ore::{all_denominator_sets, core_analysis, is_localization_maximal, localize};
use orelab::ring::{quotient_ring, ring_isomorphic};
use orelab::{build_ring, Bounds, ElementSet, FiniteRing};

/// Checks that disagree with the stated expectation; see the README.
const KNOWN_FAILURES: &[&str] = &["z6 non-localizable = {0,2,3,4}"];

#[derive(Default)]
struct Criterion {
    failed: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn check(&mut self, name: &str, ok: bool, observed: impl std::fmt::Display) {
        if !ok {
            self.failed.push(format!("{name} (observed {observed})"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn set(r: &FiniteRing, xs: &[usize]) -> ElementSet {
    r.set_of(xs.iter().copied()).unwrap()
}

fn corpus_rings() -> Vec<(String, FiniteRing)> {
    let m = manifest();
    m.rings.iter().map(|e| (e.name.clone(), build_ring(&e.spec, &m.config).unwrap())).collect()
}

fn criterion_agreement() -> Criterion {
    let mut c = Criterion::default();
    let m = manifest();
    let start = Instant::now();
    let summary = corpus_run(&m, 0).unwrap();
    let secs = start.elapsed().as_secs_f64();
    c.check("corpus run passes", summary.all_pass(), format!("{} failed", summary.failed));
    c.check("corpus run under 60 s", secs < 60.0, format!("{secs:.1} s"));
    for (name, r) in corpus_rings() {
        let a = Analysis::new(r, m.config);
        let semiprime = a.class().unwrap().semiprime;
        for id in [CriterionId::Goldie, CriterionId::First, CriterionId::Second, CriterionId::Third, CriterionId::Fourth] {
            let v = run_criterion(&a, id).unwrap().unwrap();
            c.check(&format!("{name} {} = semiprime", id.name()), v.verdict == semiprime, v.verdict);
        }
        let x = cross_validate(&a).unwrap();
        c.check(&format!("{name} cross validation"), x.all_agree, x.all_agree);
    }
    c.note(format!("corpus {:.2} s", secs));
    c
}

fn oracle_equivalence() -> Criterion {
    let mut c = Criterion::default();
    let mut n = 0;
    for (name, r) in corpus_rings().into_iter().filter(|(_, r)| r.order() <= 12) {
        n += 1;
        let a = Analysis::new(r.clone(), Bounds::default());
        let got = a.profile().unwrap().max_den_members();
        let lib: Vec<ElementSet> = {
            let all: Vec<ElementSet> = all_denominator_sets(&r, 12).unwrap().iter().map(|d| *d.members()).collect();
            orelab::ore::maximal_sets(&all)
        };
        let brute: Vec<ElementSet> = brute_maximal(&brute_denominator_sets(&r))
            .iter()
            .map(|s| set(&r, &members(s.mask)))
            .collect();
        c.check(&format!("{name} candidates = enumeration"), got == lib, format!("{got:?} vs {lib:?}"));
        c.check(&format!("{name} candidates = brute force"), got == brute, format!("{got:?} vs {brute:?}"));
    }
    c.note(format!("{n} rings"));
    c
}

fn z6_facts() -> Criterion {
    let mut c = Criterion::default();
    let a = Analysis::from_spec("Z/6", Bounds::default()).unwrap();
    let r = a.ring();
    let p = a.profile().unwrap();
    let max = p.max_den_members();
    c.check("z6 maxDen = {1,3,5},{1,2,4,5}", max == vec![set(r, &[1, 3, 5]), set(r, &[1, 2, 4, 5])], format!("{max:?}"));
    c.check("z6 ll = 0", p.ll.members == r.zero_set(), p.ll.members);
    let cores: Vec<ElementSet> = p.max_den_sets.iter().map(|s| s.core).collect();
    c.check("z6 cores {3},{2,4}", cores == vec![set(r, &[3]), set(r, &[2, 4])], format!("{cores:?}"));
    let units = set(r, &[1, 5]);
    c.check("z6 C = {1,5} = units", p.completely_localizable == units && r.units() == units, p.completely_localizable);
    let v = first_criterion(&a).unwrap();
    let core_sum = v.consequent("core_sum_is_regular_denominator_set").map(|q| q.holds).unwrap_or(false);
    c.check("z6 core sum is the unit group", core_sum, core_sum);
    c.check(
        "z6 non-localizable = {0,2,3,4}",
        p.non_localizable == set(r, &[0, 2, 3, 4]),
        p.non_localizable,
    );
    let failing: Vec<&str> = v.consequents.iter().filter(|q| !q.holds).map(|q| q.name.as_str()).collect();
    c.check("z6 first criterion true", v.verdict, v.verdict);
    c.check("z6 at least nine consequents", v.consequents.len() >= 9, v.consequents.len());
    c.check("z6 consequents hold", failing.is_empty(), format!("{failing:?}"));
    c.note(format!("{} consequents", v.consequents.len()));
    c
}

fn tri_facts() -> Criterion {
    let mut c = Criterion::default();
    let a = Analysis::from_spec("tri(2,F2)", Bounds::default()).unwrap();
    let r = a.ring();
    let p = a.profile().unwrap();
    let i2 = set(r, &[0, 2, 4, 6]);
    let asses: Vec<ElementSet> = p.max_den_sets.iter().map(|s| s.ass).collect();
    c.check("tri maxDen singleton with ass I2", asses == vec![i2], format!("{asses:?}"));
    c.check("tri ll = I2", p.ll.members == i2, p.ll.members);
    let q = quotient_ring(r, &p.ll.members).unwrap();
    let f2 = build_ring("F2", &Bounds::default()).unwrap();
    let iso = ring_isomorphic(&q.ring, &f2, 64).unwrap().is_isomorphic();
    c.check("tri R/ll = F2", iso, iso);
    let v = ll_quotient_criterion(&a).unwrap();
    let conds: Vec<bool> = v.conditions.iter().map(|x| x.holds).collect();
    c.check("tri four ll statements true", conds.len() == 4 && conds.iter().all(|&h| h), format!("{conds:?}"));
    c.check("tri ll consequents", v.consequents_hold(), v.consequents_hold());
    let o = Analysis::from_spec("opp(tri(2,F2))", Bounds::default()).unwrap();
    let oa: Vec<ElementSet> = o.profile().unwrap().max_den_sets.iter().map(|s| s.ass).collect();
    c.check("opposite ass I3", oa == vec![set(o.ring(), &[0, 1, 2, 3])], format!("{oa:?}"));
    c
}

fn product_theorem() -> Criterion {
    let mut c = Criterion::default();
    let r = build_ring("prod(F2,Z/6)", &Bounds::default()).unwrap();
    let a = Analysis::new(r.clone(), Bounds::default());
    let n = a.profile().unwrap().max_den_sets.len();
    c.check("F2 x Z/6 has 3 maximal sets", n == 3, n);
    let v = product_maxden_check(r.factors().unwrap(), &Bounds::default()).unwrap();
    for name in ["max_den_bijection", "localizations_match", "ass_formula", "core_formula"] {
        let h = v.condition(name).map(|x| x.holds).unwrap_or(false);
        c.check(&format!("F2 x Z/6 {name}"), h, h);
    }
    let mut products = 0;
    for (name, r) in corpus_rings() {
        if let Some(fs) = r.factors() {
            products += 1;
            let v = product_maxden_check(fs, &Bounds::default()).unwrap();
            let h = v.condition("one_idempotent_per_set").map(|x| x.holds).unwrap_or(false);
            c.check(&format!("{name} one idempotent per set"), h, h);
        }
    }
    c.note(format!("{products} product rings"));
    c
}

fn core_isomorphism() -> Criterion {
    let mut c = Criterion::default();
    let mut checked = 0;
    for (name, r) in corpus_rings() {
        for rec in all_denominator_sets(&r, r.order()).unwrap() {
            if rec.core.is_empty() {
                continue;
            }
            checked += 1;
            let rep = core_analysis(&r, &rec).unwrap();
            let direct = {
                let core = orelab::ore::classify_mult_set(&r, &rec.core.union(&r.set_of([r.one()]).unwrap())).unwrap();
                localize(&r, &core).unwrap().target.tables_equal(&localize(&r, &rec).unwrap().target)
            };
            let ok = rep.localization_table_identical && direct;
            c.check(&format!("{name} {:?}", rec.members()), ok, ok);
        }
    }
    c.note(format!("{checked} sets"));
    c
}

fn localization_maximal() -> Criterion {
    let mut c = Criterion::default();
    for (spec, want) in [("F4", true), ("mat(2,F2)", true), ("Z/6", false)] {
        let r = build_ring(spec, &Bounds::default()).unwrap();
        let got = is_localization_maximal(&r, &Bounds::default()).unwrap().verdict;
        c.check(&format!("{spec} maximal = {want}"), got == want, got);
    }
    c
}

fn determinism() -> Criterion {
    let mut c = Criterion::default();
    let m = manifest();
    for e in &m.rings {
        let a = entry_report(e, &m.config).unwrap();
        let b = entry_report(e, &m.config).unwrap();
        let d = structural_diff(&a, &b);
        c.check(&format!("{} identical", e.name), d.is_empty(), format!("{d:?}"));
    }
    c
}

#[test]
fn acceptance() {
    let runs: [(&str, fn() -> Criterion); 8] = [
        ("criterion agreement", criterion_agreement),
        ("oracle equivalence", oracle_equivalence),
        ("Z/6 facts", z6_facts),
        ("tri(2,F2) facts", tri_facts),
        ("product theorem", product_theorem),
        ("core isomorphism", core_isomorphism),
        ("localization-maximal classification", localization_maximal),
        ("determinism", determinism),
    ];
    let mut all_failed = Vec::new();
    for (i, (title, f)) in runs.iter().enumerate() {
        let c = f();
        let status = if c.failed.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {}: {status} {title}", i + 1);
        if !c.notes.is_empty() {
            line += &format!(" [{}]", c.notes.join("; "));
        }
        if !c.failed.is_empty() {
            line += &format!(" failing: {}", c.failed.join("; "));
        }
        println!("{line}");
        all_failed.extend(c.failed);
    }
    let names: Vec<&str> = all_failed.iter().map(|s| s.split(" (observed").next().unwrap()).collect();
    assert_eq!(names, KNOWN_FAILURES, "unexpected acceptance results: {all_failed:?}");
}
