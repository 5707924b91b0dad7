//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; any failure makes the process exit 1.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use permgate::circuit::{builtin_gate, Circuit, GateInstance, BUILTIN_GATES};
use permgate::classify::{classify_all, is_hermitian, list_gates, GateFilter};
use permgate::combinatorics::{involution_count, non_hermitian_fraction, render_percent, BigCount};
use permgate::optimizer::{optimize, DEFAULT_BUDGET};
use permgate::templates::{
    expand_template, generate_templates, multiplication_table, two_gate_templates, GateLibrary,
    TemplateStore,
};
use permgate::{Permutation, SizeCap};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Check {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn p(text: &str) -> Permutation {
    text.parse().expect("valid notation")
}

fn sorted(gates: impl IntoIterator<Item = Permutation>) -> Vec<Permutation> {
    let mut v: Vec<Permutation> = gates.into_iter().collect();
    v.sort();
    v
}

fn involution_sequence() -> Check {
    let listed: [u64; 17] = [
        1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152, 568504, 2390480, 10349536,
        46206736, 211799312,
    ];
    for (m, &expected) in (1..=17).zip(&listed) {
        let got = involution_count(m);
        ensure(got == BigCount::from(expected), || {
            format!("a[{m}] = {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn percentages() -> Check {
    for (n, decimals, expected) in [(2, 2, "58.33%"), (3, 4, "98.1052%"), (4, 4, "99.9998%")] {
        let ratio = non_hermitian_fraction(n).map_err(|e| e.to_string())?;
        let got = render_percent(&ratio, decimals);
        ensure(got == expected, || {
            format!("r({n}) rendered {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn s4_census() -> Check {
    let report = classify_all(2, SizeCap::Default).map_err(|e| e.to_string())?;
    let counts = [
        ("total", &report.total, 24u32),
        ("hermitian", &report.hermitian_count, 10),
        ("non_hermitian", &report.non_hermitian_count, 14),
        ("separable", &report.separable_count, 4),
        ("entangled", &report.entangled_count, 20),
    ];
    for (name, got, expected) in counts {
        ensure(*got == BigCount::from(expected), || {
            format!("{name} = {got}, expected {expected}")
        })?;
    }

    let listed_hermitian = sorted(
        [
            "(1,2,3,4)",
            "(2,1,3,4)",
            "(3,2,1,4)",
            "(4,2,3,1)",
            "(1,3,2,4)",
            "(1,4,3,2)",
            "(1,2,4,3)",
            "(2,1,4,3)",
            "(3,4,1,2)",
            "(4,3,2,1)",
        ]
        .map(p),
    );
    let listed_non_hermitian = sorted(
        [
            "(2,3,1,4)",
            "(2,3,4,1)",
            "(1,3,4,2)",
            "(1,4,2,3)",
            "(2,4,1,3)",
            "(2,4,3,1)",
            "(3,1,2,4)",
            "(3,1,4,2)",
            "(3,2,4,1)",
            "(3,4,2,1)",
            "(4,1,2,3)",
            "(4,1,3,2)",
            "(4,2,1,3)",
            "(4,3,1,2)",
        ]
        .map(p),
    );
    let hermitian =
        sorted(list_gates(2, GateFilter::Hermitian, SizeCap::Default).map_err(|e| e.to_string())?);
    let non_hermitian = sorted(
        list_gates(2, GateFilter::NonHermitian, SizeCap::Default).map_err(|e| e.to_string())?,
    );
    ensure(hermitian == listed_hermitian, || {
        "hermitian list differs".into()
    })?;
    ensure(non_hermitian == listed_non_hermitian, || {
        "non-hermitian list differs".into()
    })?;

    let entangled = render_percent(&report.entangled_fraction, 2);
    ensure(entangled == "83.33%", || {
        format!("entangled fraction {entangled}")
    })
}

fn enumeration_oracle() -> Check {
    for m in 1..=8 {
        let mut total = 0u64;
        let mut involutions = 0u64;
        for q in Permutation::enumerate(m, SizeCap::Default).map_err(|e| e.to_string())? {
            total += 1;
            involutions += u64::from(q.is_involution());
        }
        let expected = involution_count(m);
        ensure(BigCount::from(involutions) == expected, || {
            format!("M = {m}: enumeration found {involutions}, recurrence gives {expected}")
        })?;
        if m == 8 {
            ensure(total == 40320 && involutions == 764, || {
                format!("S8: {involutions} of {total}")
            })?;
        }
    }
    Ok(())
}

fn matrix_hermiticity() -> Check {
    let check = |q: &Permutation| -> Check {
        let m = q.to_matrix();
        let symmetric = m.is_symmetric();
        let squares_to_identity = m.multiply(&m).map_err(|e| e.to_string())?.is_identity();
        ensure(
            q.is_involution() == symmetric && symmetric == squares_to_identity && m.is_unitary(),
            || format!("{q}: involution/symmetric/square disagree"),
        )
    };
    for q in Permutation::enumerate(4, SizeCap::Default).map_err(|e| e.to_string())? {
        check(&q)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut images: Vec<usize> = (0..8).collect();
    for _ in 0..1000 {
        images.shuffle(&mut rng);
        check(&Permutation::from_images(images.clone()).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn rearrangement_and_templates() -> Check {
    let library = GateLibrary::symmetric_group(4, SizeCap::Default).map_err(|e| e.to_string())?;
    let table = multiplication_table(&library, SizeCap::Default).map_err(|e| e.to_string())?;
    let everything: Vec<usize> = (0..24).collect();
    for g in 0..24 {
        let mut row = table.row(g).to_vec();
        row.sort_unstable();
        let mut column: Vec<usize> = table.column(g).collect();
        column.sort_unstable();
        ensure(row == everything && column == everything, || {
            format!("row/column {g} is not a rearrangement")
        })?;
    }

    let pairs = two_gate_templates(&library).map_err(|e| e.to_string())?;
    ensure(pairs.len() == 24, || {
        format!("{} two-gate templates", pairs.len())
    })?;
    let mut produced = pairs.clone();
    for t in &pairs {
        for position in 0..2 {
            let expansions = expand_template(t, position, &library).map_err(|e| e.to_string())?;
            ensure(expansions.len() == 24, || {
                format!("{} expansions at position {position}", expansions.len())
            })?;
            produced.extend(expansions);
        }
    }
    let generated = generate_templates(&library, 3).map_err(|e| e.to_string())?;
    produced.extend(generated.store.iter().cloned());
    let failures = produced.iter().filter(|t| !t.verify()).count();
    ensure(failures == 0, || {
        format!("{failures} of {} templates fail to verify", produced.len())
    })
}

fn random_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let n = rng.gen_range(1..=3);
    let mut c = Circuit::new(n).expect("small circuit");
    let fitting: Vec<&str> = BUILTIN_GATES
        .iter()
        .map(|(name, _)| *name)
        .filter(|name| builtin_gate(name).expect("builtin").size() <= 1 << n)
        .collect();
    for _ in 0..rng.gen_range(0..=20) {
        let mut wires: Vec<usize> = (0..n).collect();
        wires.shuffle(rng);
        if rng.gen_bool(0.5) {
            let name = *fitting.choose(rng).expect("nonempty");
            let k = builtin_gate(name).expect("builtin").size().trailing_zeros() as usize;
            c.add(name, &wires[..k]).expect("valid wiring");
        } else {
            let k = rng.gen_range(1..=n.min(2));
            let mut images: Vec<usize> = (0..1 << k).collect();
            images.shuffle(rng);
            let gate = Permutation::from_images(images).expect("shuffled identity");
            c.push(GateInstance::inline(gate, &wires[..k]).expect("valid wiring"))
                .expect("in range");
        }
    }
    c
}

fn optimizer_soundness() -> Check {
    let store_for = |m: usize, max: usize| -> Result<TemplateStore, String> {
        let library =
            GateLibrary::symmetric_group(m, SizeCap::Default).map_err(|e| e.to_string())?;
        Ok(generate_templates(&library, max)
            .map_err(|e| e.to_string())?
            .store)
    };
    let one_wire = store_for(2, 2)?;
    let multi_wire = store_for(4, 3)?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut removed = 0;
    for i in 0..250 {
        let c = random_circuit(&mut rng);
        let store = if c.n_wires() == 1 {
            &one_wire
        } else {
            &multi_wire
        };
        let (out, report) = optimize(&c, store, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(out.permutation() == c.permutation(), || {
            format!("circuit {i} changed semantics:\n{c}")
        })?;
        ensure(out.len() <= c.len(), || format!("circuit {i} grew"))?;
        removed += report.removed();
    }
    ensure(removed > 0, || "no gate was ever removed".into())?;

    let mut xx = Circuit::new(1).map_err(|e| e.to_string())?;
    xx.add("X", &[0])
        .and_then(|c| c.add("X", &[0]))
        .map_err(|e| e.to_string())?;
    let mut cc = Circuit::new(2).map_err(|e| e.to_string())?;
    cc.add("CNOT", &[0, 1])
        .and_then(|c| c.add("CNOT", &[0, 1]))
        .map_err(|e| e.to_string())?;
    for (c, store) in [(xx, &one_wire), (cc, &multi_wire)] {
        let (out, _) = optimize(&c, store, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(out.is_empty(), || format!("{c} did not reduce to empty"))?;
    }
    Ok(())
}

fn b_gate() -> Check {
    let b = Permutation::from_images(vec![1, 3, 2, 0]).map_err(|e| e.to_string())?;
    let bb = b.compose(&b).map_err(|e| e.to_string())?;
    ensure(bb.apply(0) == 3, || {
        format!("BB|00> went to index {}", bb.apply(0))
    })?;
    ensure(!is_hermitian(&b), || "B reported Hermitian".into())?;
    let m = b.to_matrix();
    ensure(m.is_unitary() && m.is_permutation_matrix(), || {
        "B matrix is not unitary".into()
    })?;
    ensure(!m.is_symmetric(), || "B matrix is symmetric".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 involution sequence a[1..17]",
            Duration::from_secs(1),
            involution_sequence,
        ),
        (
            "2 non-Hermitian percentages",
            Duration::from_secs(1),
            percentages,
        ),
        (
            "3 S4 census and explicit gate lists",
            Duration::from_secs(1),
            s4_census,
        ),
        (
            "4 enumeration vs recurrence, M = 1..8",
            Duration::from_secs(10),
            enumeration_oracle,
        ),
        (
            "5 matrix-level Hermiticity",
            Duration::from_secs(5),
            matrix_hermiticity,
        ),
        (
            "6 rearrangement theorem and templates",
            Duration::from_secs(5),
            rearrangement_and_templates,
        ),
        (
            "7 optimizer soundness on random circuits",
            Duration::from_secs(30),
            optimizer_soundness,
        ),
        ("8 non-self-inverse B gate", Duration::from_secs(1), b_gate),
    ];

    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })
        });
        match outcome {
            Ok(()) => println!("PASS  criterion {name} ({elapsed:.2?})"),
            Err(reason) => {
                failed += 1;
                println!("FAIL  criterion {name} ({elapsed:.2?}): {reason}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
