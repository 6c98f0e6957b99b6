//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.
//!
//! Independent routes are computed here in test code: binomial sums, hash
//! sets of enumerated codewords, direct weight scans and explicit error
//! pattern bookkeeping.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rm_groebner::decoder::{Decoder, DecodeStatus};
use rm_groebner::division::{divide, remainder};
use rm_groebner::groebner::{buchberger_complete, is_groebner, is_reduced, reduce_basis, s_polynomial};
use rm_groebner::rmcode::{
    berman_check, build_g, build_h, codewords, jennings_basis, jennings_matrix, min_weight_bruteforce,
    IndexMap,
};
use rm_groebner::{CodeParams, Monomial, MonomialOrder, Poly, SubsetIndex, Word};
use rmgb_cli::selftest::{error_patterns, sample_codewords};
use rmgb_cli::{cmd_simulate, SimMode};

const GRLEX: MonomialOrder = MonomialOrder::Grlex;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(m: usize, l: usize) -> CodeParams {
    CodeParams::new(m, l).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    let num: u64 = (n - k + 1..=n).product();
    let den: u64 = (1..=k).product();
    num / den
}

// 1. Golden example, bit-exact, under 1 ms.
fn golden_example() -> Outcome {
    let c = params(3, 2);
    let v = Word::parse(3, "10100010").unwrap();
    let dec = Decoder::new(c).unwrap();
    let res = dec.decode(&v).unwrap();
    ensure(res.syndrome.rem == Poly::parse(3, "x2 + x3 + 1").unwrap(), || {
        format!("syndrome {}", res.syndrome.rem)
    })?;
    ensure(res.error == Some(Poly::parse(3, "x2*x3").unwrap()), || format!("error {:?}", res.error))?;
    let cw = res.codeword.as_ref().map(Word::to_string);
    ensure(cw.as_deref() == Some("10101010"), || format!("codeword {cw:?}"))?;

    // Timed from scratch (basis construction included); best of 5 runs.
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let res = rm_groebner::decoder::decode(&v, &c).unwrap();
        best = best.min(start.elapsed());
        assert_eq!(res.status, DecodeStatus::CorrectedOmega);
    }
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;
    Ok(format!("syndrome x2 + x3 + 1, error x2*x3, codeword 10101010 in {best:?}"))
}

// 2. Buchberger criterion for G, H and G u H, reducedness of G, m <= 5.
fn buchberger_criterion() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    for m in 1..=5 {
        for l in 1..=m {
            let c = params(m, l);
            let g = build_g(&c).unwrap();
            let h = build_h(&c).unwrap();
            let union: Vec<Poly> = g.iter().chain(&h).cloned().collect();
            for (name, basis) in [("G", &g), ("H", &h), ("G+H", &union)] {
                // Explicit pairwise scan alongside the library verdict.
                for i in 0..basis.len() {
                    for j in i + 1..basis.len() {
                        let s = s_polynomial(&basis[i], &basis[j], GRLEX).unwrap();
                        let r = remainder(&s, basis, GRLEX).unwrap();
                        ensure(r.is_zero(), || format!("{name}({m},{l}) pair ({i},{j}) -> {r}"))?;
                        pairs += 1;
                    }
                }
                ensure(is_groebner(basis, GRLEX).unwrap().is_groebner, || format!("{name}({m},{l})"))?;
            }
            ensure(is_reduced(&g, GRLEX).unwrap(), || format!("G({m},{l}) not reduced"))?;
        }
    }
    Ok(format!("{pairs} zero S-remainders in {:?}", start.elapsed()))
}

// 3. Berman: M^l = C_{m-l}(m, 2), m <= 4.
fn berman() -> Outcome {
    let mut count = 0;
    for c in CodeParams::all_up_to(4) {
        ensure(berman_check(&c).unwrap(), || format!("rref mismatch at m={} l={}", c.m, c.l))?;
        // Second route: every Jennings word lies in the enumerated code and
        // both sides have the same size.
        let code: HashSet<Word> = codewords(&c).unwrap().collect();
        let map = IndexMap::for_words(c.m).unwrap();
        for b in jennings_basis(&c).unwrap() {
            let w = map.poly_to_word(&b).unwrap();
            ensure(code.contains(&w), || format!("Jennings word {w} outside code m={} l={}", c.m, c.l))?;
        }
        let rank = jennings_matrix(&c).unwrap().rank();
        ensure(code.len() == 1usize << rank, || format!("|C| = {} vs 2^{rank}", code.len()))?;
        count += 1;
    }
    Ok(format!("{count} parameter pairs"))
}

// 4. rank(B_l) = sum_{j >= l} C(m, j), m <= 5.
fn dimension_formula() -> Outcome {
    let mut count = 0;
    for c in CodeParams::all_up_to(5) {
        let expected: u64 = (c.l as u64..=c.m as u64).map(|j| binomial(c.m as u64, j)).sum();
        let rank = jennings_matrix(&c).unwrap().rank() as u64;
        ensure(rank == expected, || format!("m={} l={}: rank {rank}, expected {expected}", c.m, c.l))?;
        count += 1;
    }
    Ok(format!("{count} parameter pairs"))
}

// 5. Minimum distance 2^l, m <= 4, under 10 s.
fn minimum_distance() -> Outcome {
    let start = Instant::now();
    for c in CodeParams::all_up_to(4) {
        let scanned = codewords(&c).unwrap().map(|w| w.weight()).filter(|&w| w > 0).min();
        ensure(scanned == Some(1 << c.l), || format!("m={} l={}: {scanned:?}", c.m, c.l))?;
        ensure(min_weight_bruteforce(&c).unwrap() == scanned, || "library disagrees".into())?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("d = 2^l for all m <= 4 in {elapsed:?}"))
}

// 6. Exact decoding of every error of weight <= t, agreeing with ML.
fn full_decoding() -> Outcome {
    let mut trials = 0usize;
    for c in CodeParams::all_up_to(4).filter(|c| c.t >= 1) {
        let dec = Decoder::new(c).unwrap();
        let map = dec.index_map().clone();
        let sample = sample_codewords(&c).unwrap();
        let expected_sample = if (1usize << c.dim) <= 64 { 1usize << c.dim } else { 32 };
        ensure(sample.len() == expected_sample, || format!("sample size {}", sample.len()))?;
        let errors: Vec<Word> = error_patterns(c.m, c.t).collect();
        let expected_errors: u64 = (0..=c.t as u64).map(|w| binomial(c.n as u64, w)).sum();
        ensure(errors.len() as u64 == expected_errors, || "error sweep incomplete".into())?;
        for sent in &sample {
            for e in &errors {
                let v = sent.add(e).unwrap();
                let res = dec.decode(&v).unwrap();
                ensure(res.codeword.as_ref() == Some(sent), || {
                    format!("m={} l={} e={e}: got {:?}", c.m, c.l, res.codeword)
                })?;
                let err_word = map.poly_to_word(res.error.as_ref().unwrap()).unwrap();
                ensure(&err_word == e, || format!("error {err_word} vs {e}"))?;
                let ml = dec.ml_decode_bruteforce(&v).unwrap();
                ensure(&ml.codeword == sent && !ml.tie && ml.distance == e.weight(), || {
                    format!("ML disagrees at m={} l={} e={e}", c.m, c.l)
                })?;
                trials += 1;
            }
        }
    }
    Ok(format!("{trials} decodes exact and ML-consistent"))
}

// 7. Weight dichotomy over the sweep; heavy remainders for |I| >= l, m <= 5.
fn weight_dichotomy() -> Outcome {
    let mut patterns = 0usize;
    for c in CodeParams::all_up_to(4).filter(|c| c.t >= 1 && c.l >= 2) {
        let dec = Decoder::new(c).unwrap();
        let map = dec.index_map().clone();
        for e in error_patterns(c.m, c.t) {
            let all_low = e.bits().ones().all(|p| (map.mask_at(p).count_ones() as usize) < c.l);
            let w = dec.syndrome(&e).unwrap().weight;
            ensure((w <= c.t) == all_low, || format!("m={} l={} e={e}: weight {w}", c.m, c.l))?;
            patterns += 1;
        }
    }
    let mut subsets = 0usize;
    // l = 0 is the whole space (t = 0, G = {1}): every remainder vanishes.
    for c in CodeParams::all_up_to(5).filter(|c| c.l >= 1) {
        let dec = Decoder::new(c).unwrap();
        for mask in 0..1u32 << c.m {
            let s = SubsetIndex(mask);
            if s.len() < c.l {
                continue;
            }
            let w = dec.remainder_of(s).unwrap().weight();
            ensure(w > c.t, || format!("m={} l={} I={s}: weight {w} <= t", c.m, c.l))?;
            subsets += 1;
        }
    }
    Ok(format!("{patterns} error patterns, {subsets} subsets"))
}

fn random_poly(rng: &mut ChaCha8Rng, m: usize, max_exp: u32, max_terms: usize) -> Poly {
    let terms = rng.gen_range(0..=max_terms);
    let monos = (0..terms)
        .map(|_| Monomial::new(&(0..m).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>()).unwrap());
    Poly::from_monomials(m, monos).unwrap()
}

// 8. Remainder laws, 1000 random cases each.
fn remainder_laws() -> Outcome {
    const CASES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let bases: Vec<(usize, Vec<Poly>)> = (2..=4)
        .flat_map(|m| (1..=m).map(move |l| (m, build_g(&params(m, l)).unwrap())))
        .collect();
    let pick = |rng: &mut ChaCha8Rng| bases[rng.gen_range(0..bases.len())].clone();

    // Linearity.
    for _ in 0..CASES {
        let (m, g) = pick(&mut rng);
        let (f1, f2) = (random_poly(&mut rng, m, 1, 12), random_poly(&mut rng, m, 1, 12));
        let lhs = remainder(&f1.add(&f2).unwrap(), &g, GRLEX).unwrap();
        let rhs = remainder(&f1, &g, GRLEX).unwrap().add(&remainder(&f2, &g, GRLEX).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("linearity: {f1} | {f2}"))?;
    }
    // Reconstruction and irreducibility, arbitrary divisors.
    for _ in 0..CASES {
        let m = rng.gen_range(2..=4);
        // Square-free dividends keep grlex reduction within the exponent cap.
        let f = random_poly(&mut rng, m, if m == 2 { 2 } else { 1 }, 8);
        let count = rng.gen_range(1..=4);
        let divisors: Vec<Poly> = (0..count)
            .map(|_| random_poly(&mut rng, m, 1, 4))
            .filter(|d| !d.is_zero())
            .collect();
        if divisors.is_empty() {
            continue;
        }
        let res = divide(&f, &divisors, GRLEX).unwrap();
        let mut acc = res.remainder.clone();
        for (q, d) in res.quotients.iter().zip(&divisors) {
            acc = acc.add(&q.mul(d).unwrap()).unwrap();
        }
        ensure(acc == f, || format!("reconstruction: {f}"))?;
        for r in res.remainder.monomials() {
            for d in &divisors {
                ensure(!d.leading(GRLEX).unwrap().divides(r), || format!("reducible remainder term {r}"))?;
            }
        }
    }
    // Permutation invariance against Groebner bases (G, and G u H).
    for _ in 0..CASES {
        let (m, mut g) = pick(&mut rng);
        if rng.gen_bool(0.5) {
            g.extend(build_h(&params(m, 1)).unwrap());
        }
        let f = random_poly(&mut rng, m, 2, 10);
        let base = remainder(&f, &g, GRLEX).unwrap();
        let mut shuffled = g.clone();
        for k in (1..shuffled.len()).rev() {
            shuffled.swap(k, rng.gen_range(0..=k));
        }
        ensure(remainder(&f, &shuffled, GRLEX).unwrap() == base, || format!("permutation: {f}"))?;
    }
    // Remark 3.4: (i) equal remainders iff difference in ideal, (ii)
    // additivity, (iii) multiplicativity.
    for _ in 0..CASES {
        let (m, g) = pick(&mut rng);
        let f = random_poly(&mut rng, m, 1, 8);
        let h = if rng.gen_bool(0.5) {
            // Force an ideal-equivalent pair half the time.
            let k = rng.gen_range(0..g.len());
            f.add(&g[k].mul(&random_poly(&mut rng, m, 1, 3)).unwrap()).unwrap()
        } else {
            random_poly(&mut rng, m, 1, 8)
        };
        let (rf, rh) = (remainder(&f, &g, GRLEX).unwrap(), remainder(&h, &g, GRLEX).unwrap());
        let diff_in_ideal = remainder(&f.add(&h).unwrap(), &g, GRLEX).unwrap().is_zero();
        ensure((rf == rh) == diff_in_ideal, || format!("identity (i): {f} | {h}"))?;
        ensure(
            remainder(&f.add(&h).unwrap(), &g, GRLEX).unwrap() == rf.add(&rh).unwrap(),
            || format!("identity (ii): {f} | {h}"),
        )?;
        let lhs = remainder(&f.mul(&h).unwrap(), &g, GRLEX).unwrap();
        let rhs = remainder(&rf.mul(&rh).unwrap(), &g, GRLEX).unwrap();
        ensure(lhs == rhs, || format!("identity (iii): {f} | {h}"))?;
    }
    Ok(format!("4 x {CASES} cases"))
}

// 9. Completion then reduction of two presentations of <G(3,2)>.
fn reduced_uniqueness() -> Outcome {
    let g = build_g(&params(3, 2)).unwrap();
    // Same ideal, but no leading term x1*x3: not a Groebner basis as given.
    let x3 = Poly::parse(3, "x3").unwrap();
    let other = vec![g[0].mul(&x3).unwrap().add(&g[1]).unwrap(), g[0].clone(), g[2].clone()];
    ensure(!is_groebner(&other, GRLEX).unwrap().is_groebner, || "second presentation is already a GB".into())?;
    let first = reduce_basis(&buchberger_complete(&g, GRLEX).unwrap(), GRLEX).unwrap();
    let second = reduce_basis(&buchberger_complete(&other, GRLEX).unwrap(), GRLEX).unwrap();
    ensure(first == second, || format!("{first:?} vs {second:?}"))?;
    ensure(first == g, || format!("reduced basis {first:?} differs from G(3,2)"))?;
    Ok("both presentations reduce to G(3,2)".into())
}

// 10. Byte-identical CSV per seed; fixed weight <= t always decodes.
fn simulation_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (p1, p2) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let mode: SimMode = "bsc:0.08".parse().unwrap();
    cmd_simulate(4, 2, 500, mode, 42, Some(&p1)).map_err(|e| e.to_string())?;
    cmd_simulate(4, 2, 500, mode, 42, Some(&p2)).map_err(|e| e.to_string())?;
    let (b1, b2) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    ensure(b1 == b2 && !b1.is_empty(), || "CSV bytes differ between runs".into())?;

    let mut runs = 0;
    for c in CodeParams::all_up_to(4).filter(|c| c.t >= 1) {
        for w in 0..=c.t {
            let trials = if (c.m, c.l, w) == (4, 2, 1) { 1000 } else { 200 };
            let mode: SimMode = format!("fixed_weight:{w}").parse().unwrap();
            let (report, _) = rmgb_cli::simulate(c, trials, mode, 7).map_err(|e| e.to_string())?;
            ensure(
                report.decoded_ok == trials && report.failures == 0 && report.miscorrections == 0,
                || format!("m={} l={} w={w}: {report:?}", c.m, c.l),
            )?;
            runs += 1;
        }
    }
    Ok(format!("identical CSV ({} bytes); {runs} fixed-weight runs all decoded", b1.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 golden example", golden_example),
        ("AC2 Buchberger criterion", buchberger_criterion),
        ("AC3 Berman span equality", berman),
        ("AC4 dimension formula", dimension_formula),
        ("AC5 minimum distance", minimum_distance),
        ("AC6 full decoding correctness", full_decoding),
        ("AC7 weight dichotomy", weight_dichotomy),
        ("AC8 remainder laws", remainder_laws),
        ("AC9 reduced-basis uniqueness", reduced_uniqueness),
        ("AC10 simulation determinism", simulation_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
