//! Runs the twelve acceptance criteria and prints one line per criterion.
//!
//! Criteria 3 and 4 do not hold for the published tables; they print FAIL
//! and the run checks that the failures are exactly the known ones. The
//! process exits non-zero only when an outcome differs from that.
//!
//! `KTHUE_ACCEPTANCE_TIER=ci` runs criterion 2 at length 20 instead of 40.

use std::process::ExitCode;
use std::time::Instant;

use kthue::constructions::{k_thue_word, phi4, phi6};
use kthue::exponent::{max_exponent, Exponent};
use kthue::morphisms::{builtin_mu, dejean_word, kappa_iterate, lambda_iterate, mu_self_check, project, MU_WIDTHS};
use kthue::search::{canonicalize, check_candidate, search_morphisms, SearchConfig, SearchResult};
use kthue::text::render;
use kthue::verify::{
    verify_bounded_images, verify_bounded_images_with, verify_kappa_properties, verify_lambda_properties,
    verify_tightness, verify_window_determinism, verify_window_determinism_with, Certificate, KappaProperty,
    LambdaProperty, VerifyOptions, WindowScope, Witness,
};
use kthue::{find_square, is_k_thue, RepetitionWitness, SquareWitness, Word};

struct Outcome {
    pass: bool,
    /// Whether the outcome is the one the analysis predicts.
    as_predicted: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        as_predicted: pass,
        detail: detail.into(),
    }
}

fn jobs(n: usize) -> VerifyOptions {
    VerifyOptions::default().with_jobs(n)
}

fn criterion_1() -> Outcome {
    let mut good = mu_self_check().is_ok();
    let mut widths = Vec::new();
    for k in 2..=8 {
        let m = builtin_mu(k).unwrap();
        let w = m.uniform_width().unwrap_or(0);
        widths.push(w.to_string());
        good &= w == MU_WIDTHS[k - 2] && m.codomain_size() == k + 2 && m.domain_size() == 3;
    }
    good &= MU_WIDTHS == [7, 14, 12, 27, 23, 36, 30];
    ok(good, format!("widths {} over k+2 symbols", widths.join(" ")))
}

fn criterion_2(max_len: usize, opts: &VerifyOptions) -> (Outcome, Vec<Certificate>) {
    let mut certs = Vec::new();
    let mut times = Vec::new();
    for k in 2..=8 {
        let c = verify_bounded_images(k, max_len, opts).unwrap();
        times.push(format!("k={k} {:.1}s", c.elapsed_ms as f64 / 1000.0));
        certs.push(c);
    }
    let good = certs.iter().all(|c| c.is_verified());
    let words = certs[0].counts["words_enumerated"];
    let out = ok(
        good,
        format!(
            "max_len={max_len}, {words} square-free sources per k; {}",
            times.join(", ")
        ),
    );
    (out, certs)
}

fn criterion_3() -> Outcome {
    let mut failing = Vec::new();
    let mut as_predicted = true;
    for k in 2..=8 {
        let c = verify_window_determinism(k, WindowScope::All).unwrap();
        if c.is_verified() {
            as_predicted &= k <= 6;
            continue;
        }
        as_predicted &= k >= 7 && c.witness.as_ref().unwrap().recheck().unwrap();
        if let Some(Witness::KeyCollision {
            d,
            offset,
            first,
            second,
            ..
        }) = &c.witness
        {
            failing.push(format!(
                "k={k}: d={d} offset {offset} cannot tell {first} from {second}"
            ));
        }
    }
    Outcome {
        pass: failing.is_empty(),
        as_predicted,
        detail: if failing.is_empty() {
            "k=2..8 determined".into()
        } else {
            format!("k=2..6 determined; {}", failing.join("; "))
        },
    }
}

/// Every k+1 consecutive terms of such a word are distinct, so it has
/// period k+1, and the longest one has length 2(k+1) - p with p the
/// largest proper divisor of k+1.
fn periodic_max(k: usize) -> u64 {
    let n = k + 1;
    let p = (1..n).rev().find(|p| n.is_multiple_of(*p)).unwrap_or(1);
    (2 * n - p) as u64
}

fn criterion_4(opts: &VerifyOptions) -> (Outcome, Vec<Certificate>) {
    let certs: Vec<Certificate> = (1..=8).map(|k| verify_tightness(k, opts).unwrap()).collect();
    let maxima: Vec<u64> = certs.iter().map(|c| c.counts["max_length"]).collect();
    let matches_divisor_rule = maxima.iter().enumerate().all(|(i, &m)| m == periodic_max(i + 1));
    let pass = certs.iter().all(|c| c.is_verified());
    let shown: Vec<String> = maxima
        .iter()
        .enumerate()
        .map(|(i, m)| format!("k={}:{m}", i + 1))
        .collect();
    let out = Outcome {
        pass,
        as_predicted: !pass && matches_divisor_rule,
        detail: format!(
            "longest k-Thue words over k+1 letters {}; 2k+1 only when k+1 is prime",
            shown.join(" ")
        ),
    };
    (out, certs)
}

fn criterion_5() -> Outcome {
    let printed = "12345678214367851243785621348567";
    let got = render(&phi6(2).unwrap(), 1);
    ok(got == printed, format!("phi6(2) = {got}"))
}

fn criterion_6() -> Outcome {
    let a = (1..=7).all(|t| is_k_thue(&phi4(t).unwrap(), 4).is_none());
    let b = (1..=6).all(|t| is_k_thue(&phi6(t).unwrap(), 6).is_none());
    let (n4, n6) = (phi4(7).unwrap().len(), phi6(6).unwrap().len());
    ok(
        a && b,
        format!("phi4 up to t=7 ({n4} terms), phi6 up to t=6 ({n6} terms)"),
    )
}

fn criterion_7() -> Outcome {
    let a = (1..=8).all(|t| find_square(&project(&kappa_iterate(t).unwrap())).is_none());
    let b = (1..=7).all(|t| find_square(&lambda_iterate(t).unwrap()).is_none());
    ok(
        a && b,
        "projected kappa iterates t<=8 and lambda iterates t<=7 are square-free",
    )
}

fn criterion_8() -> Outcome {
    let (kt, kf): (Vec<_>, Vec<_>) = KappaProperty::ALL.into_iter().partition(|p| p.is_table_based());
    let (lt, lf): (Vec<_>, Vec<_>) = LambdaProperty::ALL.into_iter().partition(|p| p.is_table_based());
    let certs = [
        verify_kappa_properties(6, &kf).unwrap(),
        verify_kappa_properties(5, &kt).unwrap(),
        verify_lambda_properties(6, &lf).unwrap(),
        verify_lambda_properties(5, &lt).unwrap(),
    ];
    let names = |ps: &[_]| {
        ps.iter()
            .map(|p: &KappaProperty| p.name())
            .collect::<Vec<_>>()
            .join(",")
    };
    let lnames = |ps: &[_]| {
        ps.iter()
            .map(|p: &LambdaProperty| p.name())
            .collect::<Vec<_>>()
            .join(",")
    };
    ok(
        certs.iter().all(|c| c.is_verified()),
        format!(
            "{} and {} at t=6; {} and {} at t=5",
            names(&kf),
            lnames(&lf),
            names(&kt),
            lnames(&lt)
        ),
    )
}

fn criterion_9() -> Outcome {
    let m = max_exponent(&dejean_word(1000)).unwrap();
    let free = m.exponent() <= Exponent::new(7, 4);
    let thue = (2..=8).all(|k| is_k_thue(&k_thue_word(k, 1000).unwrap(), k).is_none());
    ok(
        free && thue,
        format!(
            "max exponent of the ternary source {}/{}; k=2..8 words of length 1000 are k-Thue",
            m.exponent().numer(),
            m.exponent().denom()
        ),
    )
}

/// Tries every (d, start, half) triple.
fn oracle_k(w: &[u8], k: usize) -> Option<RepetitionWitness> {
    let n = w.len();
    for d in 1..=k {
        for start in 1..=n {
            for h in 1..=n {
                if start - 1 + (2 * h - 1) * d >= n {
                    break;
                }
                if (0..h).all(|j| w[start - 1 + j * d] == w[start - 1 + (h + j) * d]) {
                    return Some(RepetitionWitness {
                        d,
                        start,
                        half_length: h,
                    });
                }
            }
        }
    }
    None
}

fn all_words(alpha: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alpha).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn criterion_10() -> Outcome {
    let mut checked = 0u64;
    let mut good = true;
    for (alpha, max) in [(2u8, 12usize), (3, 9)] {
        for len in 0..=max {
            for v in all_words(alpha, len) {
                let w = Word::new(v.clone(), alpha as usize).unwrap();
                let sq = oracle_k(&v, 1).map(|r| SquareWitness {
                    start: r.start,
                    half_length: r.half_length,
                });
                good &= find_square(&w) == sq;
                for k in 1..=3 {
                    good &= is_k_thue(&w, k) == oracle_k(&v, k);
                }
                checked += 1;
            }
        }
    }
    ok(good, format!("{checked} words, k=1..3"))
}

fn search_config(jobs: usize) -> SearchConfig {
    SearchConfig {
        prefixes: [vec![0], vec![0], vec![0]],
        // Survivors are re-verified at length 40 below.
        recheck_len: None,
        jobs,
        ..SearchConfig::new(2, 7)
    }
}

fn criterion_11() -> (Outcome, SearchResult) {
    let cfg = search_config(1);
    let r = search_morphisms(&cfg).unwrap();
    let serial = jobs(1);
    let reverified = r.morphisms.iter().all(|m| {
        verify_bounded_images_with(m, 2, 40, &serial).is_verified()
            && verify_window_determinism_with(m, 2, WindowScope::All).is_verified()
    });
    let mu2 = builtin_mu(2).unwrap();
    let injected = check_candidate(&cfg, &mu2).unwrap().is_ok();
    let rediscovered = r.morphisms.contains(&canonicalize(&mu2));
    let out = ok(
        r.is_complete() && !r.morphisms.is_empty() && reverified && injected,
        format!(
            "{} morphisms from {} nodes, all re-verified at length 40; built-in table passes{}",
            r.morphisms.len(),
            r.nodes,
            if rediscovered { " and is among them" } else { "" }
        ),
    );
    (out, r)
}

fn same(a: &[Certificate], b: &[Certificate]) -> bool {
    let strip = |cs: &[Certificate]| cs.iter().map(|c| c.without_timing().to_json()).collect::<Vec<_>>();
    strip(a) == strip(b)
}

fn main() -> ExitCode {
    let ci = std::env::var("KTHUE_ACCEPTANCE_TIER").is_ok_and(|t| t == "ci");
    let max_len = if ci { 20 } else { 40 };
    let mut unexpected = 0;
    let mut report = |n: usize, name: &str, started: Instant, o: Outcome| {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2} {verdict}  {name}: {}  ({:.1} s)",
            o.detail,
            started.elapsed().as_secs_f64()
        );
        if !o.as_predicted {
            println!("             outcome differs from the predicted one");
            unexpected += 1;
        }
    };

    let s = Instant::now();
    report(1, "table fidelity", s, criterion_1());
    let s = Instant::now();
    let (o, bounded_1) = criterion_2(max_len, &jobs(1));
    report(2, "bounded images", s, o);
    let s = Instant::now();
    report(3, "window determinism", s, criterion_3());
    let s = Instant::now();
    let (o, tight_1) = criterion_4(&jobs(1));
    report(4, "tightness", s, o);
    let s = Instant::now();
    report(5, "printed wreath sequence", s, criterion_5());
    let s = Instant::now();
    report(6, "wreath constructions are k-Thue", s, criterion_6());
    let s = Instant::now();
    report(7, "generators are square-free", s, criterion_7());
    let s = Instant::now();
    report(8, "block property suites", s, criterion_8());
    let s = Instant::now();
    report(9, "ternary source and k-Thue words", s, criterion_9());
    let s = Instant::now();
    report(10, "oracle equivalence", s, criterion_10());
    let s = Instant::now();
    let (o, search_1) = criterion_11();
    report(11, "search soundness", s, o);

    let s = Instant::now();
    let (_, bounded_8) = criterion_2(max_len, &jobs(8));
    let (_, tight_8) = criterion_4(&jobs(8));
    let search_8 = search_morphisms(&search_config(8)).unwrap();
    let parts = [
        ("bounded images", same(&bounded_1, &bounded_8)),
        ("tightness", same(&tight_1, &tight_8)),
        ("search", search_1 == search_8),
    ];
    let detail = parts
        .iter()
        .map(|(n, eq)| format!("{n} {}", if *eq { "identical" } else { "DIFFERENT" }))
        .collect::<Vec<_>>()
        .join(", ");
    report(12, "1 vs 8 workers", s, ok(parts.iter().all(|p| p.1), detail));

    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
