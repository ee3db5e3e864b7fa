//! The acceptance gate: one test per shipped claim, each printing a
//! single PASS line with its measured scope and wall time. Budgets are
//! asserted, so a pathological slowdown fails loudly rather than rotting.

mod common;

use std::time::{Duration, Instant};

use genpos::audit::{
    audit_wheel_structure, run_audit, write_jsonl, AuditOptions, AuditRecord, TheoremId, Verdict,
};
use genpos::cactus::{cactus_profile, cycle_gp, tree_gp, wheel_gp};
use genpos::families::{gen_b0, gen_cycle, gen_random_cactus, gen_random_tree, gen_wheel};
use genpos::solver::{gp_number_exact, gp_number_naive, NAIVE_LIMIT_DEFAULT};
use rand::Rng;

fn pass(name: &str, detail: String, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name}: took {elapsed:?}, budget {budget:?}"
    );
    println!("PASS {name}: {detail} in {elapsed:.2?} (budget {budget:?})");
}

fn no_failures(records: &[AuditRecord]) {
    for rec in records {
        assert_ne!(
            rec.verdict,
            Verdict::Counterexample,
            "counterexample: {}",
            serde_json::to_string(rec).unwrap()
        );
        assert!(
            !matches!(rec.verdict, Verdict::Skipped(_)),
            "skipped: {}",
            serde_json::to_string(rec).unwrap()
        );
    }
}

#[test]
fn criterion_01_cycle_values() {
    let started = Instant::now();
    for n in 3..=13 {
        let expected = match n {
            3 => 3,
            4 => 2,
            _ => 3,
        };
        assert_eq!(cycle_gp(n).unwrap(), expected, "closed form, n={n}");
        let g = gen_cycle(n).unwrap();
        assert_eq!(gp_number_exact(&g).value, expected, "solver, n={n}");
        let naive = gp_number_naive(&g, NAIVE_LIMIT_DEFAULT).unwrap();
        assert_eq!(naive.value, expected, "oracle, n={n}");
    }
    pass(
        "cycle-values",
        "gp(C_n) exact for n=3..=13".into(),
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_tree_formula() {
    let started = Instant::now();
    let mut rng = common::seeded_rng(0x7265_6573);
    for i in 0..200 {
        let n = rng.gen_range(2..=14);
        let seed: u64 = rng.gen();
        let t = gen_random_tree(n, seed).unwrap();
        let cert = gp_number_naive(&t, NAIVE_LIMIT_DEFAULT).unwrap();
        assert_eq!(
            cert.value,
            common::leaf_count(&t),
            "tree {i}: n={n} seed={seed}"
        );
        assert_eq!(
            tree_gp(&t).unwrap().value,
            cert.value,
            "closed form vs oracle, tree {i}"
        );
    }
    pass(
        "tree-formula",
        "gp equals leaf count on 200 random trees, n<=14".into(),
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_03_wheel_formula() {
    let started = Instant::now();
    for n in 3..=13 {
        let w = gen_wheel(n).unwrap();
        let cert = gp_number_naive(&w, NAIVE_LIMIT_DEFAULT).unwrap();
        assert_eq!(cert.value, wheel_gp(n).unwrap(), "rim size {n}");
    }
    pass(
        "wheel-formula",
        "gp(W_n) matches closed form for n=3..=13".into(),
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_04_wheel_structure() {
    let started = Instant::now();
    for n in 6..=10 {
        let rec = audit_wheel_structure(n);
        assert_eq!(
            rec.verdict,
            Verdict::Confirmed,
            "rim size {n}: {}",
            serde_json::to_string(&rec).unwrap()
        );
    }
    pass(
        "wheel-structure",
        "all maximum sets of W_6..W_10 avoid the center and respect rim run arithmetic".into(),
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_05_bound_sandwich() {
    let started = Instant::now();
    let mut rng = common::seeded_rng(0x6361_6374);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(3..=14usize);
        let k = rng.gen_range(0..=(n - 1) / 2);
        let t = if k == 0 {
            rng.gen_range(2..=n - 1)
        } else {
            rng.gen_range(0..=n - 2 * k - 1)
        };
        let seed: u64 = rng.gen();
        let g = gen_random_cactus(n, k, t, seed).unwrap();
        let profile = cactus_profile(&g).unwrap();
        let gp = gp_number_exact(&g).value;
        let upper = 3.max(2 * profile.k + profile.t);
        assert!(
            profile.t <= gp && gp <= upper,
            "n={n} k={k} t={t} seed={seed}: t={} gp={gp} upper={upper}",
            profile.t
        );
        checked += 1;
    }
    pass(
        "bound-sandwich",
        "t <= gp <= max(3, 2k+t) on 300 random cacti, n<=14".into(),
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_06_b0_extremal() {
    let started = Instant::now();
    for (k, p) in [(2, 0), (2, 2), (3, 0), (3, 2)] {
        let g = gen_b0(k, p).unwrap();
        let cert = gp_number_exact(&g);
        assert_eq!(
            cert.value,
            g.vertex_count() - 1,
            "hub family k={k} p={p}"
        );
    }
    pass(
        "b0-extremal",
        "hub-of-triangles family meets gp = n-1 on four shapes".into(),
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_07_cycle_contribution() {
    let started = Instant::now();
    let records = run_audit(
        TheoremId::CycleContribLe2,
        0xC0FFEE,
        100,
        10,
        &AuditOptions::default(),
    );
    assert_eq!(records.len(), 100);
    no_failures(&records);
    assert!(records.iter().all(|r| r.verdict == Verdict::Confirmed));
    pass(
        "cycle-contribution",
        "every maximum set meets each cycle <= 2 times and gp >= 4 on 100 cacti with k >= 2"
            .into(),
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_08_good_cycle_equality_outcome_open() {
    let started = Instant::now();
    let mut report = Vec::new();
    for strict in [false, true] {
        let opts = AuditOptions {
            strict_good: strict,
            ..AuditOptions::default()
        };
        let records = run_audit(TheoremId::GoodCyclesEquality, 0xD1CE, 100, 13, &opts);
        assert_eq!(records.len(), 100);
        let mut confirmed = 0;
        let mut counterexamples = 0;
        for rec in &records {
            match rec.verdict {
                Verdict::Confirmed => confirmed += 1,
                Verdict::Counterexample => {
                    counterexamples += 1;
                    assert!(
                        rec.edges.is_some(),
                        "counterexample without replay payload: {}",
                        serde_json::to_string(rec).unwrap()
                    );
                }
                _ => panic!(
                    "unexpected verdict: {}",
                    serde_json::to_string(rec).unwrap()
                ),
            }
        }
        write_jsonl(&records, &mut report).unwrap();
        println!(
            "good-cycle equality [{} flag]: confirmed {confirmed}, counterexamples {counterexamples}",
            if strict { "strict" } else { "inclusive" }
        );
    }
    assert!(!report.is_empty());
    pass(
        "good-cycle-equality",
        "both flag readings terminate with a structured verdict for all 100 instances".into(),
        started,
        Duration::from_secs(900),
    );
}

#[test]
fn criterion_09_odd_chain_lower_bound() {
    let started = Instant::now();
    let records = run_audit(
        TheoremId::LowerBoundOddChain,
        0,
        40,
        15,
        &AuditOptions::default(),
    );
    assert!(!records.is_empty());
    no_failures(&records);
    assert!(records.iter().all(|r| r.verdict == Verdict::Confirmed));
    // All three chain sizes must actually appear in the sweep.
    for cycles in [3usize, 4, 5] {
        assert!(
            records.iter().any(|r| match &r.instance {
                genpos::audit::Instance::Family(spec) =>
                    spec.params.len() == 2 * cycles - 2,
                _ => false,
            }),
            "no chain with {cycles} cycles in the sweep"
        );
    }
    pass(
        "odd-chain-lower-bound",
        format!(
            "gp = k1+2 exact on {} odd chains of 3..=5 cycles, n<=15",
            records.len()
        ),
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = common::seeded_rng(0x6772_6170);
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = common::random_connected_graph(n, &mut rng);
        let naive = gp_number_naive(&g, NAIVE_LIMIT_DEFAULT).unwrap();
        let exact = gp_number_exact(&g);
        assert_eq!(exact.value, naive.value, "graph {i}: n={n}");
    }
    pass(
        "oracle-equivalence",
        "branch-and-bound matches the subset oracle on 200 random connected graphs, n<=10"
            .into(),
        started,
        Duration::from_secs(300),
    );
}
