//! End-to-end acceptance checks. Each test exercises one advertised
//! guarantee across its full parameter range, prints a single summary
//! line, and enforces the time budget it is expected to meet.

use std::time::{Duration, Instant};

use spinal::{
    check_ode_residual, count_c1_classes, count_c2_classes, count_nlsctc, count_nlstc,
    count_nlstc_via_marked, count_stc, count_stc_naive, count_stc_via_lemma,
    count_stc_via_marked, decode_nlsctc, decode_nlstc, encode_nlsctc, encode_nlstc,
    expected_series_coeff, oracle_nlstc, oracle_stc, samples, series_expand_s,
    EnumerationBudget, LrqWord,
};

macro_rules! check {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn report(number: u32, description: &str, run: impl FnOnce() -> Result<(), String>) {
    match run() {
        Ok(()) => println!("criterion {number} ({description}): pass"),
        Err(msg) => {
            println!("criterion {number} ({description}): fail [{msg}]");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

fn big(value: u64) -> num_bigint::BigUint {
    num_bigint::BigUint::from(value)
}

#[test]
fn criterion_1_closed_forms_match_the_oracle() {
    report(1, "closed forms match the brute-force oracle", || {
        let start = Instant::now();
        let budget = EnumerationBudget::default();
        for n in 2..=5u32 {
            for k in 0..=3.min(n - 1) {
                let unlabeled = oracle_nlstc(n, k, &budget)
                    .map_err(|e| format!("oracle_nlstc({n},{k}): {e}"))?;
                check!(
                    big(unlabeled.len() as u64) == count_nlstc(n, k).value,
                    "unlabeled ({n},{k}): oracle {} vs formula {}",
                    unlabeled.len(),
                    count_nlstc(n, k).value
                );
                let labeled = oracle_stc(n, k, &budget)
                    .map_err(|e| format!("oracle_stc({n},{k}): {e}"))?;
                check!(
                    big(labeled.len() as u64) == count_stc(n, k).value,
                    "labeled ({n},{k}): oracle {} vs formula {}",
                    labeled.len(),
                    count_stc(n, k).value
                );
            }
        }
        check!(
            start.elapsed() < Duration::from_secs(60),
            "took {:?}, budget 60s",
            start.elapsed()
        );
        Ok(())
    });
}

#[test]
fn criterion_2_codecs_roundtrip_every_word() {
    report(2, "decode then encode is the identity on both classes", || {
        let start = Instant::now();
        let budget = EnumerationBudget::default();
        for n in 0..=6u32 {
            for k in 0..=n.min(3) {
                for word in spinal::enumerate_c1_classes(n, k, &budget)
                    .map_err(|e| e.to_string())?
                {
                    let net = decode_nlstc(&word).map_err(|e| format!("{word}: {e}"))?;
                    let back = encode_nlstc(&net).map_err(|e| format!("{word}: {e}"))?;
                    check!(back == word, "spinal roundtrip changed {word} into {back}");
                }
            }
        }
        for n in 0..=5u32 {
            for k in 0..=n.min(2) {
                for word in spinal::enumerate_c2_classes(n, k, &budget)
                    .map_err(|e| e.to_string())?
                {
                    let net = decode_nlsctc(&word).map_err(|e| format!("{word}: {e}"))?;
                    let back = encode_nlsctc(&net).map_err(|e| format!("{word}: {e}"))?;
                    check!(back == word, "caterpillar roundtrip changed {word} into {back}");
                }
            }
        }
        check!(
            start.elapsed() < Duration::from_secs(30),
            "took {:?}, budget 30s",
            start.elapsed()
        );
        Ok(())
    });
}

#[test]
fn criterion_3_reference_word_and_token_run() {
    report(3, "reference network and token sequence give the known word", || {
        let net = samples::five_leaf_two_ret();
        let word = encode_nlstc(&net).map_err(|e| e.to_string())?;
        check!(
            word.letters_csv() == "3,1,2,1,1,2,2,4,3,4",
            "encoded word is {}",
            word.letters_csv()
        );
        let tokens: LrqWord =
            "L R1 L R2 L Q1 Q2 L".parse().map_err(|e: spinal::Error| e.to_string())?;
        let (transformed, steps) =
            tokens.transform_with_steps().map_err(|e| e.to_string())?;
        check!(
            steps.assigned_display() == "4,2,2,1,1,2,1,3",
            "intermediate assignment is {}",
            steps.assigned_display()
        );
        check!(
            transformed.letters_csv() == "3,1,2,1,1,2,2,4,3,4",
            "transformed word is {}",
            transformed.letters_csv()
        );
        check!(transformed == word, "token word differs from encoded word");
        Ok(())
    });
}

#[test]
fn criterion_4_counting_identities_hold() {
    report(4, "all counting relations agree with the closed forms", || {
        let start = Instant::now();
        for n in 2..=8u32 {
            for k in 0..n {
                let direct = count_stc(n, k).value;
                check!(
                    direct == count_stc_naive(n, k).value,
                    "naive form differs at ({n},{k})"
                );
                check!(
                    direct == count_stc_via_lemma(n, k).value,
                    "lemma path differs at ({n},{k})"
                );
                check!(
                    direct == count_stc_via_marked(n, k).value,
                    "marked-tree path differs at ({n},{k})"
                );
                check!(
                    count_nlstc(n, k).value == count_nlstc_via_marked(n, k).value,
                    "unlabeled marked-tree path differs at ({n},{k})"
                );
                check!(
                    count_nlsctc(n, k).value == count_c2_classes(n - 1, k).value,
                    "caterpillar count differs from word classes at ({n},{k})"
                );
                check!(
                    count_nlstc(n, k).value == count_c1_classes(n - 1, k).value,
                    "unlabeled count differs from word classes at ({n},{k})"
                );
            }
        }
        check!(
            start.elapsed() < Duration::from_secs(5),
            "took {:?}, budget 5s",
            start.elapsed()
        );
        Ok(())
    });
}

#[test]
fn criterion_5_series_expansion_is_exact() {
    report(5, "generating-function expansion matches the closed form", || {
        let start = Instant::now();
        let table = series_expand_s(8, 8).map_err(|e| e.to_string())?;
        for n in 0..=8u32 {
            for k in 0..=8u32 {
                check!(
                    table.coeff(n as usize, k as usize) == &expected_series_coeff(n, k),
                    "coefficient of x^{n} z^{k} differs"
                );
            }
        }
        check!(
            check_ode_residual(&table).is_none(),
            "differential equation residual does not vanish"
        );
        for n in 1..=8usize {
            let coeff = table.coeff(n, 1);
            check!(
                *coeff == expected_series_coeff(n as u32, 1),
                "single-mark row differs at x^{n}"
            );
            check!(
                coeff.to_string() == "1",
                "single-mark row is not geometric at x^{n}"
            );
        }
        check!(
            start.elapsed() < Duration::from_secs(5),
            "took {:?}, budget 5s",
            start.elapsed()
        );
        Ok(())
    });
}

#[test]
fn criterion_6_word_enumeration_matches_the_formulas() {
    report(6, "word-class enumeration sizes match the closed forms", || {
        let start = Instant::now();
        let budget = EnumerationBudget::default();
        for n in 0..=7u32 {
            for k in 0..=n.min(4) {
                let words = spinal::enumerate_c1_classes(n, k, &budget)
                    .map_err(|e| e.to_string())?;
                check!(
                    big(words.len() as u64) == count_c1_classes(n, k).value,
                    "adjacent class ({n},{k}): {} vs {}",
                    words.len(),
                    count_c1_classes(n, k).value
                );
            }
        }
        let separated = spinal::enumerate_c2_classes(4, 2, &budget)
            .map_err(|e| e.to_string())?;
        check!(
            separated.len() == 84,
            "separated class (4,2): {} vs 84",
            separated.len()
        );
        check!(
            start.elapsed() < Duration::from_secs(30),
            "took {:?}, budget 30s",
            start.elapsed()
        );
        Ok(())
    });
}

#[test]
fn criterion_7_oracle_networks_have_the_right_shape() {
    report(7, "every oracle network satisfies the size identities", || {
        let budget = EnumerationBudget::default();
        for n in 1..=5u32 {
            for k in 0..=3.min(n.saturating_sub(1)) {
                if k >= n {
                    continue;
                }
                for net in oracle_nlstc(n, k, &budget).map_err(|e| e.to_string())? {
                    net.require_valid().map_err(|e| e.to_string())?;
                    let spines = net.find_spines().map_err(|e| e.to_string())?;
                    check!(!spines.is_empty(), "({n},{k}): no spine found");
                    let metrics =
                        net.spine_metrics(&spines[0]).map_err(|e| e.to_string())?;
                    check!(
                        metrics.tree_vertex_count == (n + k - 1) as usize,
                        "({n},{k}): {} tree vertices instead of {}",
                        metrics.tree_vertex_count,
                        n + k - 1
                    );
                    check!(
                        metrics.spine_length == (n + 2 * k) as usize,
                        "({n},{k}): spine length {} instead of {}",
                        metrics.spine_length,
                        n + 2 * k
                    );
                }
            }
        }
        Ok(())
    });
}
