//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criterion 1 checks the tabulated small-order sigma1 maxima and is
//! expected to fail at order 5: exhaustive search (confirmed by an
//! independent labeled brute force) gives a maximum of 13 there, attained
//! by K3 ∪ K2, while the table says 12. The check is kept as stated rather
//! than weakened; see the doc on `SMALL_ORDER_SIGMA1_MAXIMA`.

use nivs::invariants::{sigma0, sigma1, sigma_k_oracle, sigma_profile, Count};
use nivs::search::SMALL_ORDER_SIGMA1_MAXIMA;
use nivs::{
    canonical_form, closed_form_ng, extremal_scan, gen_graphs, gen_trees, ng_sum, verify_theorem,
    Family, FamilySpec, Graph, GraphClass, Objective, ScanSource, TheoremId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Shared generator cache: order 9 takes most of a minute and several
/// criteria need it.
fn graphs(n: usize) -> Arc<Vec<Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(gen_graphs(n).unwrap()))
        .clone()
}

struct Criterion {
    number: u32,
    label: &'static str,
}

impl Criterion {
    fn new(number: u32, label: &'static str) -> Self {
        Criterion { number, label }
    }

    fn finish(self, failures: Vec<String>) {
        if failures.is_empty() {
            println!("criterion {}: PASS — {}", self.number, self.label);
        } else {
            println!("criterion {}: FAIL — {}", self.number, self.label);
            for f in &failures {
                println!("  {f}");
            }
            panic!("criterion {} failed: {:?}", self.number, failures);
        }
    }
}

fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(0.5) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

#[test]
fn criterion_01_small_order_sigma1_maxima() {
    let c = Criterion::new(1, "exhaustive sigma1 maxima at n=1..5 equal 0,1,3,6,12");
    let mut failures = Vec::new();
    for n in 1..=5usize {
        let r = extremal_scan(n, Objective::Sigma1Max, GraphClass::All, ScanSource::Builtin)
            .unwrap();
        let expected = SMALL_ORDER_SIGMA1_MAXIMA[n - 1];
        if r.value != expected {
            failures.push(format!(
                "n={n}: expected max {expected}, exhaustive scan found {} (attainers {:?})",
                r.value,
                r.attainers.iter().map(|a| a.as_str()).collect::<Vec<_>>()
            ));
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_02_ng_max_exhaustive_values() {
    let c = Criterion::new(2, "NG-sum maxima at n=6..9 are 39,72,133,249 with the 3K2 family pair");
    let mut failures = Vec::new();
    let expected_values = [(6, 39u128), (7, 72), (8, 133), (9, 249)];
    for (n, expected) in expected_values {
        let r = extremal_scan(
            n,
            Objective::NgMax,
            GraphClass::All,
            ScanSource::External(graphs(n).as_ref().clone()),
        )
        .unwrap();
        if r.value != expected {
            failures.push(format!("n={n}: max NG sum {} != {expected}", r.value));
        }
        let fam = nivs::build(&FamilySpec::new(Family::MK2PlusIsolated { m: 3 }, n)).unwrap();
        let mut want = vec![
            canonical_form(&fam).unwrap(),
            canonical_form(&fam.complement()).unwrap(),
        ];
        want.sort();
        if r.attainers != want {
            failures.push(format!("n={n}: attainers {:?} != expected family pair", r.attainers));
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_03_ng_lower_bound_all_graphs() {
    let c = Criterion::new(3, "NG sum >= n(n-1)/2 for all n<=8, equality only at K_n and its complement");
    let mut failures = Vec::new();
    for n in 1..=8usize {
        let bound = (n * (n - 1) / 2) as Count;
        let level = graphs(n);
        let complete = Graph::complete(n).unwrap();
        let mut expected = vec![
            canonical_form(&complete).unwrap(),
            canonical_form(&complete.complement()).unwrap(),
        ];
        expected.sort();
        expected.dedup();
        let mut attainers = Vec::new();
        for g in level.iter() {
            let value = ng_sum(g);
            if value < bound {
                failures.push(format!(
                    "n={n}: {} has NG sum {value} below {bound}",
                    canonical_form(g).unwrap()
                ));
            } else if value == bound {
                attainers.push(canonical_form(g).unwrap());
            }
        }
        attainers.sort();
        if attainers != expected {
            failures.push(format!("n={n}: equality set {attainers:?} != {expected:?}"));
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_04_ng_lower_bound_trees() {
    let c = Criterion::new(4, "NG sum >= (n-1)^2 for trees 2<=n<=12, equality only at the star");
    let mut failures = Vec::new();
    for n in 2..=12usize {
        let bound = ((n - 1) * (n - 1)) as Count;
        let star = nivs::build(&FamilySpec::new(Family::Star, n)).unwrap();
        let expected = vec![canonical_form(&star).unwrap()];
        let mut attainers = Vec::new();
        for t in gen_trees(n).unwrap() {
            let value = ng_sum(&t);
            if value < bound {
                failures.push(format!(
                    "n={n}: tree {} has NG sum {value} below {bound}",
                    canonical_form(&t).unwrap()
                ));
            } else if value == bound {
                attainers.push(canonical_form(&t).unwrap());
            }
        }
        attainers.sort();
        if attainers != expected {
            failures.push(format!("n={n}: equality set {attainers:?} != {expected:?}"));
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_05_sigma1_max_attainers() {
    let c = Criterion::new(5, "max sigma1 = 27/64*2^n at n=6..9 with the exact mK2 attainment sets");
    let mut failures = Vec::new();
    for n in 6..=9usize {
        let r = extremal_scan(
            n,
            Objective::Sigma1Max,
            GraphClass::All,
            ScanSource::External(graphs(n).as_ref().clone()),
        )
        .unwrap();
        let expected_value = (27u128) << (n - 6);
        if r.value != expected_value {
            failures.push(format!("n={n}: max sigma1 {} != {expected_value}", r.value));
        }
        let mut want = vec![canonical_form(
            &nivs::build(&FamilySpec::new(Family::MK2PlusIsolated { m: 3 }, n)).unwrap(),
        )
        .unwrap()];
        if n >= 8 {
            want.push(
                canonical_form(
                    &nivs::build(&FamilySpec::new(Family::MK2PlusIsolated { m: 4 }, n)).unwrap(),
                )
                .unwrap(),
            );
        }
        want.sort();
        if r.attainers != want {
            failures.push(format!("n={n}: attainers {:?} != {want:?}", r.attainers));
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let c = Criterion::new(
        6,
        "sigma1 recursion = subset oracle and sigma0 recursion = enumeration, exhaustive n<=7 plus 10^3 random graphs per order 8..14",
    );
    let mut failures = Vec::new();
    for n in 1..=7usize {
        for g in graphs(n).iter() {
            if sigma1(g) != sigma_k_oracle(g, 1).unwrap() {
                failures.push(format!("sigma1 mismatch on {}", canonical_form(g).unwrap()));
            }
            if sigma0(g) != sigma_k_oracle(g, 0).unwrap() {
                failures.push(format!("sigma0 mismatch on {}", canonical_form(g).unwrap()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    for n in 8..=14usize {
        for _ in 0..1000 {
            let g = random_graph(&mut rng, n);
            if sigma1(&g) != sigma_k_oracle(&g, 1).unwrap()
                || sigma0(&g) != sigma_k_oracle(&g, 0).unwrap()
            {
                failures.push(format!("mismatch on random graph of order {n}"));
            }
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_07_partition_identity() {
    let c = Criterion::new(7, "sum over k of sigma_k(G) = 2^n on all classes n<=7");
    let mut failures = Vec::new();
    for n in 1..=7usize {
        for g in graphs(n).iter() {
            let total: Count = sigma_profile(g).unwrap().iter().sum();
            if total != 1 << n {
                failures.push(format!(
                    "{}: profile sums to {total}, not 2^{n}",
                    canonical_form(g).unwrap()
                ));
            }
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_08_closed_form_identities() {
    let c = Criterion::new(8, "ng_sum(build(spec)) = closed_form_ng(spec) for the named families at 6<=n<=12");
    let mut failures = Vec::new();
    for n in 6..=12usize {
        for family in [
            Family::Complete,
            Family::Edgeless,
            Family::Star,
            Family::MK2PlusIsolated { m: 3 },
        ] {
            let spec = FamilySpec::new(family, n);
            let computed = ng_sum(&nivs::build(&spec).unwrap());
            let closed = closed_form_ng(&spec).unwrap();
            if computed != closed {
                failures.push(format!(
                    "{} at n={n}: computed {computed}, closed form {closed}",
                    family.name()
                ));
            }
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_09_complement_union_join_identity() {
    let c = Criterion::new(
        9,
        "complement of a union is the join of complements, for all class pairs with n1+n2 <= 7",
    );
    let mut failures = Vec::new();
    for n1 in 1..=6usize {
        for n2 in 1..=7 - n1 {
            for g1 in graphs(n1).iter() {
                for g2 in graphs(n2).iter() {
                    let lhs = canonical_form(&g1.union(g2).unwrap().complement()).unwrap();
                    let rhs =
                        canonical_form(&g1.complement().join(&g2.complement()).unwrap()).unwrap();
                    if lhs != rhs {
                        failures.push(format!(
                            "pair ({}, {}): {lhs} != {rhs}",
                            canonical_form(g1).unwrap(),
                            canonical_form(g2).unwrap()
                        ));
                    }
                }
            }
        }
    }
    c.finish(failures);
}

#[test]
fn criterion_10_parallel_serial_determinism() {
    let c = Criterion::new(10, "serial and parallel verify runs emit byte-identical JSON");
    let mut failures = Vec::new();
    let run = |threads: &str| {
        std::process::Command::new(env!("CARGO_BIN_EXE_nivs"))
            .args([
                "verify",
                "--theorem",
                "ng-max",
                "--orders",
                "6..8",
                "--format",
                "json",
                "--threads",
                threads,
            ])
            .output()
            .expect("binary runs")
    };
    let serial = run("1");
    let parallel = run("4");
    if !serial.status.success() || !parallel.status.success() {
        failures.push(format!(
            "nonzero exit: serial {:?}, parallel {:?}",
            serial.status, parallel.status
        ));
    }
    if serial.stdout != parallel.stdout {
        failures.push("stdout differs between thread counts".into());
    }
    if serial.stdout.is_empty() {
        failures.push("empty verification output".into());
    }
    c.finish(failures);
}

/// Not a numbered criterion: the verify wrapper runs the same exhaustive
/// computation end to end and must agree with criterion 2.
#[test]
fn verify_ng_max_6_to_9_passes() {
    let report = verify_theorem(TheoremId::NgMax, 6..=9).unwrap();
    assert!(report.pass, "{}", report.to_json());
}
