//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gtbracket::sweep::{
    all_words, identities_exhaustive, identities_random, invariance_random, oracle_exhaustive,
    oracle_random, Exec, Report,
};
use gtbracket::{bracket_words, cobracket, lk_self, CyclicWord, Diagram, Letter, LinComb, Word};

const SEED: u64 = 20_211_215;
const LK_BUDGET: Duration = Duration::from_millis(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_EXHAUSTIVE_LEN: usize = 8;
const ORACLE_RANDOM: u64 = 10_000;
const ORACLE_RANDOM_LEN: usize = 12;
const ORACLE_RANDOM_GENUS: u32 = 3;
const INVARIANCE_SAMPLES: u64 = 10_000;
const INVARIANCE_LEN: usize = 8;
const INVARIANCE_GENUS: u32 = 3;
const IDENTITY_EXHAUSTIVE_LEN: usize = 3;
const IDENTITY_RANDOM: u64 = 1_000;
const IDENTITY_RANDOM_LEN: usize = 5;
const IDENTITY_GENUS: u32 = 2;
const DETERMINISM_RUNS: usize = 3;

type Check = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn w(s: &str, g: u32) -> Word {
    Word::parse(s, g).unwrap()
}

fn report_line(r: &Report) -> String {
    match &r.first_failure {
        None => format!("n={}", r.checked),
        Some((i, m)) => format!(
            "n={} failures={} first=case {i}: {m}",
            r.checked, r.failures
        ),
    }
}

fn worked_example() -> Outcome {
    let word = w("a1 B1 a2 a1", 2);
    let start = Instant::now();
    let l13 = lk_self(&word, 1, 3);
    let l34 = lk_self(&word, 3, 4);
    let elapsed = start.elapsed();
    let ok = l13 == Ok(0) && l34 == Ok(-1) && elapsed < LK_BUDGET;
    outcome(
        ok,
        format!("lk(1,3)={l13:?} lk(3,4)={l34:?} in {elapsed:?} (budget {LK_BUDGET:?})"),
    )
}

fn labels(d: &Diagram) -> Vec<String> {
    d.gates().iter().map(|g| g.label.to_string()).collect()
}

fn reference_gate_order() -> Outcome {
    // reference label sequences along the boundary: one word, then a pair
    let left = ["a1", "a1", "b1", "a1^-1", "a1^-1", "b1^-1", "a2", "a2^-1"];
    let right = [
        "a1", "a1", "a1^-1", "a1^-1", "b1", "b1^-1", "a2", "a2", "a2^-1", "a2^-1",
    ];
    let single = labels(&Diagram::single(&w("a1 B1 a2 a1", 2)));
    let pair = labels(&Diagram::pair(&w("a1 A2", 2), &w("a1 B1 a2", 2)).unwrap());
    let ok_left = single == left;
    let ok_right = pair == right;
    outcome(
        ok_left && ok_right,
        format!(
            "single {} [{}]; pair {} [{}] vs reference [{}]",
            if ok_left { "match" } else { "MISMATCH" },
            single.join(" "),
            if ok_right { "match" } else { "MISMATCH" },
            pair.join(" "),
            right.join(" "),
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let alphabet: Vec<Letter> = [Letter::a(1), Letter::b(1), Letter::a(2)]
        .into_iter()
        .flat_map(|x| [x, x.inverse()])
        .collect();
    let start = Instant::now();
    let exhaustive = oracle_exhaustive(&alphabet, 2, ORACLE_EXHAUSTIVE_LEN, Exec::Parallel);
    let random = oracle_random(
        SEED,
        ORACLE_RANDOM,
        ORACLE_RANDOM_LEN,
        ORACLE_RANDOM_GENUS,
        Exec::Parallel,
    );
    let elapsed = start.elapsed();
    let ok = exhaustive.passed() && random.passed() && elapsed < ORACLE_BUDGET;
    outcome(
        ok,
        format!(
            "exhaustive {}; random {}; {elapsed:.1?} (budget {ORACLE_BUDGET:?})",
            report_line(&exhaustive),
            report_line(&random)
        ),
    )
}

fn well_definedness() -> Outcome {
    let r = invariance_random(
        SEED,
        INVARIANCE_SAMPLES,
        INVARIANCE_LEN,
        INVARIANCE_GENUS,
        Exec::Parallel,
    );
    outcome(
        r.passed(),
        format!("{INVARIANCE_SAMPLES} cases, {}", report_line(&r)),
    )
}

fn bialgebra_identities() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for g in 1..=IDENTITY_GENUS {
        let r = identities_exhaustive(g, IDENTITY_EXHAUSTIVE_LEN, Exec::Parallel);
        ok &= r.passed();
        parts.push(format!("exhaustive g={g} {}", report_line(&r)));
    }
    let r = identities_random(
        SEED,
        IDENTITY_RANDOM,
        IDENTITY_RANDOM_LEN,
        IDENTITY_GENUS,
        Exec::Parallel,
    );
    ok &= r.passed();
    parts.push(format!("random {}", report_line(&r)));
    outcome(ok, parts.join("; "))
}

fn spot_values() -> Outcome {
    let mut bad = Vec::new();
    if !cobracket(&LinComb::from_word(&w("a1", 1))).is_zero() {
        bad.push("delta(a1)".to_string());
    }
    for n in 1..=4 {
        let power = Word::new(vec![Letter::a(1); n], 1).unwrap();
        if !cobracket(&LinComb::from_word(&power)).is_zero() {
            bad.push(format!("delta(a1^{n})"));
        }
    }
    let mut expected = LinComb::zero(1);
    expected.add_term(CyclicWord::parse("a1 b1", 1).unwrap(), 1);
    if bracket_words(&w("a1", 1), &w("b1", 1)).as_ref() != Ok(&expected) {
        bad.push("<a1,b1>".to_string());
    }
    let mut self_brackets = 0;
    for g in 1..=2 {
        for v in all_words(&Letter::alphabet(g), 4, g) {
            self_brackets += 1;
            if !bracket_words(&v, &v).unwrap().is_zero() {
                bad.push(format!("<{v},{v}>"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{self_brackets} self-brackets; wrong: [{}]", bad.join(", ")),
    )
}

fn cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_gtbracket"))
        .args(args)
        .output()
        .unwrap();
    let mut bytes = out.stdout;
    bytes.extend(out.status.code().unwrap_or(-1).to_string().bytes());
    bytes
}

fn determinism() -> Outcome {
    let seed = SEED.to_string();
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "check",
            "oracle",
            "--seed",
            &seed,
            "--max-len",
            "8",
            "-g",
            "3",
        ],
        vec!["check", "invariance", "--seed", &seed, "--json"],
        vec!["check", "bialgebra", "--seed", &seed],
        vec!["check", "bialgebra", "--seed", &seed, "--sequential"],
        vec!["cobracket", "-g", "2", "a1 B1 a2 a1 b2 A1 a1", "--json"],
        vec!["bracket", "-g", "2", "a1 B1 a2", "b1 a1 A2"],
        vec!["diagram", "-g", "2", "--pair", "a1 A2", "a1 B1 a2", "--svg"],
    ];
    let mut differing = Vec::new();
    for args in &commands {
        let first = cli(args);
        if (1..DETERMINISM_RUNS).any(|_| cli(args) != first) {
            differing.push(args.join(" "));
        }
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} commands x {DETERMINISM_RUNS} runs; differing: [{}]",
            commands.len(),
            differing.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Check; 7] = [
        ("1 worked example lk values", worked_example),
        ("2 reference gate orders", reference_gate_order),
        ("3 oracle equivalence", oracle_equivalence),
        ("4 well-definedness", well_definedness),
        ("5 Lie bialgebra identities", bialgebra_identities),
        ("6 spot values", spot_values),
        ("7 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        failed += usize::from(!o.passed);
        println!(
            "{} criterion {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} of 7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
