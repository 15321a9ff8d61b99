//! Acceptance run: one PASS/FAIL line per criterion, all exact.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use specrec::complex::{Face, Family, SimplicialComplex};
use specrec::laplacian::{laplacian, laplacian_up, spectrum_poly};
use specrec::linalg::char_poly;
use specrec::matroid::{spectrum_poly_direct, spectrum_poly_krs, spectrum_poly_recursive, Matroid};
use specrec::poly::{BiPoly, IntPoly};
use specrec::random::{random_complex, random_family_pair};
use specrec::recursion::{check_all_vertices, check_recursion, check_specializations, identity_battery};
use specrec::shifted::{
    check_sdt, enumerate_shifted, enumerate_shifted_families, grone_merris_scan, FamilyPair, GmVerdict, Partition,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cli(args: &[&str]) -> specrec_cli::Output {
    let mut full = vec!["specrec"];
    full.extend_from_slice(args);
    specrec_cli::run(full, &mut std::io::empty())
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lin(r: i64) -> IntPoly {
    IntPoly::from_i64(&[-r, 1])
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let out = cli(&["--json", "check", "--all", "path3"]);
    let elapsed = start.elapsed();
    ensure(out.code == 1, || format!("exit code {}", out.code))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let reports = v["reports"].as_array().ok_or("no reports")?;
    ensure(reports.len() == 4, || format!("{} reports", reports.len()))?;
    ensure(reports.iter().all(|r| r["holds"] == false), || "some vertex holds".into())?;

    let path = specrec_cli::load("path3", &mut std::io::empty())?.complex().ok_or("not a complex")?;
    let p = path.as_relative();
    let quad = IntPoly::from_i64(&[2, -4, 1]);
    let up = &(&lin(0) * &lin(2)) * &quad;
    ensure(char_poly(&laplacian_up(&p, 0)) == up, || "L'_0 is not x(x-2)(x^2-4x+2)".into())?;
    let reduced = &(&lin(4) * &lin(2)) * &quad;
    ensure(char_poly(&laplacian(&p, 0)) == reduced, || "L_0 is not (x-4)(x-2)(x^2-4x+2)".into())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("4/4 vertices fail; L'_0 = x(x-2)(x^2-4x+2), L_0 = (x-4)(x-2)(x^2-4x+2); {elapsed:?}"))
}

fn matroid_ok(m: &Matroid) -> Result<(), String> {
    let cx = m.independence_complex();
    let reports = check_all_vertices(&cx, jobs());
    if let Some(r) = reports.iter().find(|r| !r.holds) {
        return Err(format!("{} fails at {}", m.label_bases(), r.name));
    }
    let direct = spectrum_poly_direct(m);
    ensure(direct.is_integral(), || format!("{} has a non-integral spectrum", m.label_bases()))?;
    let (krs, rec) = (spectrum_poly_krs(m), spectrum_poly_recursive(m));
    ensure(krs == direct.poly && rec == direct.poly, || {
        format!("{}: krs {krs}, recursive {rec}, direct {direct}", m.label_bases())
    })
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=6 {
        for r in 0..=n {
            matroid_ok(&Matroid::uniform(r, n).map_err(|e| e.to_string())?)?;
            count += 1;
        }
    }
    let k4: Vec<(String, String)> =
        (1..=4).flat_map(|i| (i + 1..=4).map(move |j| (i.to_string(), j.to_string()))).collect();
    for mask in 0u32..1 << k4.len() {
        let edges: Vec<_> = k4.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
        matroid_ok(&Matroid::graphic(&edges).map_err(|e| e.to_string())?)?;
        count += 1;
    }
    let k5_minus: Vec<(String, String)> = (1..=5)
        .flat_map(|i| (i + 1..=5).map(move |j| (i.to_string(), j.to_string())))
        .filter(|(a, b)| !(a == "4" && b == "5"))
        .collect();
    matroid_ok(&Matroid::graphic(&k5_minus).map_err(|e| e.to_string())?)?;
    count += 1;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} matroids hold at every element, integral, three-way equal; {elapsed:?}"))
}

fn criterion_3() -> Verdict {
    let expected = &(&BiPoly::monomial(1, 0, 2) + &BiPoly::monomial(1, 1, 2)) + &BiPoly::t();
    let u = Matroid::uniform(1, 2).map_err(|e| e.to_string())?;
    let krs = spectrum_poly_krs(&u);
    let rec = spectrum_poly_recursive(&u);
    let direct = spectrum_poly_direct(&u);
    ensure(krs == expected, || format!("krs gives {krs}"))?;
    ensure(rec == expected, || format!("recursive gives {rec}"))?;
    ensure(direct.is_integral() && direct.poly == expected, || format!("direct gives {direct}"))?;

    // Two points: S = S_a + S_b + (1 + t)(q^2 - q - q) + t, with S_a = S_b from a lone vertex.
    let a = SimplicialComplex::from_named_facets(&["1"], &[&["1"]]).map_err(|e| e.to_string())?;
    let b = SimplicialComplex::from_named_facets(&["2"], &[&["2"]]).map_err(|e| e.to_string())?;
    let two = a.disjoint_union(&b).map_err(|e| e.to_string())?;
    ensure(two == u.independence_complex(), || "IN(U_{1,2}) is not two points".into())?;
    let (sa, sb) = (spectrum_poly(&a.as_relative()).poly, spectrum_poly(&b.as_relative()).poly);
    let one_t = &BiPoly::one() + &BiPoly::t();
    let qs = &(&BiPoly::monomial(1, 0, 2) - &BiPoly::monomial(1, 0, 1)) - &BiPoly::monomial(1, 0, 1);
    let union = &(&(&sa + &sb) + &(&one_t * &qs)) + &BiPoly::t();
    ensure(union == expected, || format!("union formula gives {union}"))?;
    let printed = cli(&["matroid", "spoly", "u-1-2"]).stdout;
    ensure(printed == "q^2 + q^2*t + t\n", || format!("cli prints {printed:?}"))?;
    Ok(format!("{expected} by KRS, recursion, Laplacian and the union formula"))
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=5 {
        for cx in enumerate_shifted(n, None) {
            for e in 0..n {
                let r = check_recursion(&cx, e).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("{} fails at {}", specrec::recursion::describe(&cx), r.name))?;
            }
            ensure(spectrum_poly(&cx.as_relative()).is_integral(), || {
                format!("{} is not integral", specrec::recursion::describe(&cx))
            })?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} shifted complexes hold at every vertex, integral; {elapsed:?}"))
}

fn shifted_pairs(n: usize, k: usize) -> Vec<FamilyPair> {
    let mut seen = HashSet::new();
    for kf in enumerate_shifted_families(n, k) {
        for kpf in enumerate_shifted_families(n, k - 1) {
            let p = FamilyPair::new(kf.clone(), kpf).expect("same ambient");
            if p.is_shifted() {
                seen.insert(p);
            }
        }
    }
    seen.into_iter().collect()
}

fn sdt_of(v: &[&str], k: usize, members: &[&[&str]], sub: &[&[&str]]) -> Result<Option<Partition>, String> {
    let kf = Family::from_named(v, k, members).map_err(|e| e.to_string())?;
    let kpf = Family::from_named(v, k - 1, sub).map_err(|e| e.to_string())?;
    let r = check_sdt(&FamilyPair::new(kf, kpf).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(r.ok, || r.to_string())?;
    Ok(r.s)
}

fn criterion_5() -> Verdict {
    let mut count = 0;
    for n in 1..=5 {
        for k in 1..=3.min(n) {
            for p in shifted_pairs(n, k) {
                let r = check_sdt(&p).map_err(|e| e.to_string())?;
                ensure(r.ok, || format!("n={n} k={k}: {r}"))?;
                count += 1;
            }
        }
    }
    let v = ["1", "2", "3", "4"];
    let star = sdt_of(&v, 2, &[&["1", "2"], &["1", "3"], &["1", "4"]], &[])?;
    ensure(star == Some(Partition::new(vec![4, 1, 1])), || format!("star gives {star:?}"))?;
    let small = sdt_of(&["1", "2", "3"], 2, &[&["1", "2"], &["1", "3"]], &[&["1"]])?;
    ensure(small == Some(Partition::new(vec![1, 1])), || format!("({{12,13}},{{1}}) gives {small:?}"))?;
    let four = sdt_of(&v, 2, &[&["1", "2"], &["1", "3"], &["1", "4"], &["2", "3"]], &[])?;
    ensure(four == Some(Partition::new(vec![4, 3, 1])), || format!("{{12,13,14,23}} gives {four:?}"))?;
    let printed = cli(&["shifted", "sdt", "star-k13"]).stdout;
    ensure(printed == "s=(4,1,1) dT=(4,1,1) OK\n", || format!("cli prints {printed:?}"))?;
    Ok(format!("{count} shifted pairs; star (4,1,1), ({{12,13}},{{1}}) (1,1), {{12,13,14,23}} (4,3,1)"))
}

fn all_fail(name: &str, vertices: usize) -> Result<(), String> {
    let out = cli(&["--json", "check", "--all", name]);
    ensure(out.code == 1, || format!("{name}: exit code {}", out.code))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let reports = v["reports"].as_array().ok_or("no reports")?;
    ensure(reports.len() == vertices, || format!("{name}: {} reports", reports.len()))?;
    let holding: Vec<&Value> = reports.iter().filter(|r| r["holds"] != false).map(|r| &r["vertex"]).collect();
    ensure(holding.is_empty(), || format!("{name} holds at {holding:?}"))
}

fn criterion_6() -> Verdict {
    all_fail("matching-k5", 10)?;
    all_fail("chessboard-2x3", 6)?;
    let out = cli(&["check", "--vertex", "d", "example-6.2"]);
    ensure(out.code == 1 && out.stdout.contains("FAILS"), || format!("example-6.2 at d: exit {}", out.code))?;
    Ok("matching-k5 10/10 FAIL, chessboard-2x3 6/6 FAIL, example-6.2 FAILS at d".into())
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut checks = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let cx = random_complex(&mut rng, n, "");
        for e in 0..n {
            let r = check_specializations(&cx, e).map_err(|e| e.to_string())?;
            ensure(r.holds(), || format!("{}: {r}", specrec::recursion::describe(&cx)))?;
            checks += 1;
        }
    }
    Ok(format!("500 complexes, {checks} vertex checks at q=0, q=1, t=0, t=-1"))
}

fn criterion_8() -> Verdict {
    let report = identity_battery(0x5eed_0008, 200);
    let failed: Vec<&str> = report.results.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    ensure(failed.is_empty(), || format!("failed: {}\n{report}", failed.join(", ")))?;
    Ok(format!("{} identities x 200 instances", report.results.len()))
}

/// Every 2-family on `n` vertices; for `n ≤ 5` paired with every 1-family, for `n = 6` alone.
fn two_family_pairs(n: usize) -> Vec<FamilyPair> {
    let ambient: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<Face> = (0..n).flat_map(|i| (i + 1..n).map(move |j| Face::from_vertices([i, j]))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..1 << edges.len() {
        let members = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let kf = Family::new(ambient.clone(), 2, members).expect("2-subsets");
        let subs: u64 = if n <= 5 { 1 << n } else { 1 };
        for sub in 0..subs {
            let kpf =
                Family::new(ambient.clone(), 1, (0..n).filter(|v| sub >> v & 1 == 1).map(|v| Face::from_vertices([v])))
                    .expect("1-subsets");
            seen.insert(FamilyPair::new(kf.clone(), kpf).expect("same ambient"));
        }
    }
    seen.into_iter().collect()
}

/// Counts of (VIOLATED, UNDECIDED), with the first offending report.
fn scan_all(pairs: &[FamilyPair]) -> (usize, usize, Option<String>) {
    let chunk = pairs.len().div_ceil(jobs()).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = pairs
            .chunks(chunk)
            .map(|c| {
                s.spawn(move || {
                    let (mut v, mut u, mut first) = (0, 0, None);
                    for p in c {
                        let r = grone_merris_scan(p);
                        match r.verdict {
                            GmVerdict::Holds => continue,
                            GmVerdict::Violated { .. } => v += 1,
                            GmVerdict::Undecided { .. } => u += 1,
                        }
                        first.get_or_insert_with(|| format!("{:?}: {r}", p.family().members()));
                    }
                    (v, u, first)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan thread"))
            .fold((0, 0, None), |acc, x| (acc.0 + x.0, acc.1 + x.1, acc.2.or(x.2)))
    })
}

fn criterion_9() -> Verdict {
    let start = Instant::now();
    let mut pairs = vec![];
    for n in 2..=6 {
        pairs.extend(two_family_pairs(n));
    }
    let exhaustive = pairs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(1..=n.min(4));
        pairs.push(random_family_pair(&mut rng, n, k));
    }
    let (violated, undecided, first) = scan_all(&pairs);
    ensure(violated == 0 && undecided == 0, || {
        format!("{violated} VIOLATED, {undecided} UNDECIDED; first: {}", first.unwrap_or_default())
    })?;
    Ok(format!(
        "{exhaustive} exhaustive 2-family pairs + 10000 random pairs: 0 VIOLATED, 0 UNDECIDED; {:?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("counterexample fidelity", criterion_1),
        ("matroid theorem", criterion_2),
        ("worked value U_{1,2}", criterion_3),
        ("shifted theorem", criterion_4),
        ("s = d^T", criterion_5),
        ("known failures", criterion_6),
        ("specializations", criterion_7),
        ("identity battery", criterion_8),
        ("Grone-Merris scan", criterion_9),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({why})", k + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
