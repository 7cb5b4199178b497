use krullstar_harness::{run_suite, suites, GenConfig, DEFAULT_CASES};

fn run(name: &str) {
    let report = run_suite(name, DEFAULT_CASES, &GenConfig::default()).unwrap();
    assert!(report.ok(), "{report}");
}

macro_rules! suite_tests {
    ($($test:ident => $name:literal),* $(,)?) => {
        $(
            #[test]
            fn $test() {
                run($name);
            }
        )*

        #[test]
        fn every_registered_suite_has_a_test() {
            let covered = [$($name),*];
            for s in suites() {
                assert!(covered.contains(&s.name), "suite {} is not exercised", s.name);
            }
        }
    };
}

suite_tests! {
    ring_axioms => "ring-axioms",
    ideal_laws => "ideal-laws",
    star_axioms => "star-axioms",
    star_laws => "star-laws",
    closure_chain => "closure-chain",
    stability => "stability",
    umax_primes => "umax-primes",
    factor_roundtrip => "factor-roundtrip",
    u_divisors => "u-divisors",
    kaplansky => "kaplansky",
    dm_bound => "dm-bound",
    nagata_sets => "nagata-sets",
    classify => "classify",
    json_roundtrip => "json-roundtrip",
}

#[test]
fn seeded_runs_replay() {
    let cfg = GenConfig { seed: 77, ..GenConfig::default() };
    let a = run_suite("factor-roundtrip", 20, &cfg).unwrap();
    let b = run_suite("factor-roundtrip", 20, &cfg).unwrap();
    assert_eq!(a, b);
}
