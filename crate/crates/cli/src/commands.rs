use std::io::Read;

use serde_json::{json, Value};
use specrec::complex::{RelativeFaceSet, SimplicialComplex, Vertex};
use specrec::laplacian::{spectra, spectrum_poly, SpectrumPoly};
use specrec::linalg::SpectrumMultiset;
use specrec::matroid::{krs_step_identity, spectrum_poly_direct, spectrum_poly_krs, spectrum_poly_recursive, Matroid};
use specrec::poly::{BiPoly, IntPoly};
use specrec::recursion::{
    check_all_vertices, check_all_vertices_filter, check_recursion, check_recursion_filter, identity_battery,
    RecursionReport,
};
use specrec::shifted::{check_sdt, grone_merris_scan, shifted_pair_spectrum, FamilyPair, GmVerdict, Partition};

use crate::{catalog, load, Cli, Command, Input, MatroidCommand, Method, Output, ShiftedCommand, EXIT_FAILS, EXIT_OK};

type CmdResult = Result<Output, String>;

fn finish(cli: &Cli, text: String, value: Value, ok: bool) -> CmdResult {
    let stdout = if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
    } else if text.is_empty() {
        text
    } else {
        format!("{text}\n")
    };
    Ok(Output { code: if ok { EXIT_OK } else { EXIT_FAILS }, stdout, stderr: String::new() })
}

pub(crate) fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> CmdResult {
    match &cli.command {
        Command::Spectrum { input, dim, pair } => spectrum(cli, load(input, stdin)?, *dim, pair.as_deref(), stdin),
        Command::Spoly { input } => spoly(cli, load(input, stdin)?),
        Command::Check { input, vertex, all: _, filter, jobs } => {
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            check(cli, load(input, stdin)?, vertex.as_deref(), *filter, jobs)
        }
        Command::Matroid { command } => matroid(cli, command, stdin),
        Command::Shifted { command } => shifted(cli, command, stdin),
        Command::Catalog { name } => catalog_cmd(name.as_deref()),
        Command::Battery { seed, instances } => {
            let report = identity_battery(*seed, *instances);
            let results: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({"name": r.name, "instances": r.instances, "failures": r.failures, "first_failure": r.first_failure})
                })
                .collect();
            let value = json!({"seed": seed, "passed": report.passed(), "results": results});
            finish(cli, report.to_string().trim_end().to_string(), value, report.passed())
        }
    }
}

fn poly_json(p: &IntPoly) -> Value {
    p.coeffs().iter().map(|c| i64::try_from(c).map_or_else(|_| json!(c.to_string()), |v| json!(v))).collect()
}

fn multiset_json(s: &SpectrumMultiset) -> Value {
    let eig: Vec<Value> = s.roots.iter().map(|(l, m)| json!({"value": l, "multiplicity": m})).collect();
    let residual = if s.residual.is_constant() { Value::Null } else { poly_json(&s.residual) };
    json!({"eigenvalues": eig, "residual": residual})
}

fn bipoly_json(p: &BiPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|((t, q), c)| json!({"t": t, "q": q, "coeff": c})).collect();
    json!({"text": p.to_string(), "terms": terms})
}

fn spoly_json(s: &SpectrumPoly) -> Value {
    let residuals: serde_json::Map<String, Value> =
        s.residuals.iter().map(|(i, r)| (i.to_string(), poly_json(r))).collect();
    json!({"text": s.to_string(), "poly": bipoly_json(&s.poly), "residuals": residuals, "integral": s.is_integral()})
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn complex_of(input: &Input) -> Result<SimplicialComplex, String> {
    input.complex().ok_or_else(|| format!("expected a complex or matroid, got a {}", input.kind()))
}

fn relative(input: &Input) -> Option<RelativeFaceSet> {
    match input {
        Input::Filter(f) => Some(f.as_relative()),
        Input::Pair(_) => None,
        other => other.complex().map(|c| c.as_relative()),
    }
}

fn spectrum(cli: &Cli, input: Input, dim: Option<isize>, pair: Option<&str>, stdin: &mut dyn Read) -> CmdResult {
    let items: Vec<(isize, SpectrumMultiset)> = match (&input, pair) {
        (Input::Pair(p), None) => vec![(p.family().k() as isize - 1, p.spectrum())],
        (_, None) => spectra(&relative(&input).expect("not a pair")),
        (_, Some(sub)) => {
            let cx = complex_of(&input)?;
            let sub = complex_of(&load(sub, stdin)?)?;
            spectra(&cx.relative_to(&sub).map_err(|e| e.to_string())?)
        }
    };
    let items: Vec<_> = items.into_iter().filter(|(d, _)| dim.is_none_or(|want| want == *d)).collect();
    let text = items
        .iter()
        .map(|(d, s)| if s.is_empty() { format!("dim {d}:") } else { format!("dim {d}: {s}") })
        .collect::<Vec<_>>()
        .join("\n");
    let value: Vec<Value> = items
        .iter()
        .map(|(d, s)| {
            let mut v = multiset_json(s);
            v["dim"] = json!(d);
            v
        })
        .collect();
    finish(cli, text, json!(value), true)
}

fn spoly(cli: &Cli, input: Input) -> CmdResult {
    let s = match &input {
        Input::Pair(p) => SpectrumPoly::from_spectra([(p.family().k(), &p.spectrum())], false),
        _ => spectrum_poly(&relative(&input).expect("not a pair")),
    };
    finish(cli, s.to_string(), spoly_json(&s), true)
}

fn report_json(r: &RecursionReport) -> Value {
    let dims: Vec<Value> = r
        .per_dimension
        .iter()
        .map(|d| json!({"dim": d.i, "lhs": poly_json(&d.lhs), "rhs": poly_json(&d.rhs), "holds": d.equal}))
        .collect();
    json!({"vertex": r.name, "holds": r.holds, "per_dimension": dims, "note": r.note, "direct": r.direct})
}

fn find_vertex(ambient: &[String], name: &str) -> Result<Vertex, String> {
    ambient.iter().position(|v| v == name).ok_or_else(|| format!("unknown vertex `{name}`"))
}

fn check(cli: &Cli, input: Input, vertex: Option<&str>, as_filter: bool, jobs: usize) -> CmdResult {
    let filter = match &input {
        Input::Filter(f) => Some(f.clone()),
        Input::Pair(_) => return Err("check needs a complex, matroid or filter".into()),
        other if as_filter => Some(complex_of(other)?.dual()),
        _ => None,
    };
    let reports = match (&filter, vertex) {
        (Some(f), Some(v)) => {
            vec![check_recursion_filter(f, find_vertex(f.ambient(), v)?).map_err(|e| e.to_string())?]
        }
        (Some(f), None) => check_all_vertices_filter(f, jobs),
        (None, v) => {
            let cx = complex_of(&input)?;
            match v {
                Some(v) => vec![check_recursion(&cx, find_vertex(cx.ambient(), v)?).map_err(|e| e.to_string())?],
                None => check_all_vertices(&cx, jobs),
            }
        }
    };
    let holds = reports.iter().all(|r| r.holds);
    let text = reports.iter().map(|r| r.to_string()).filter(|s| !s.is_empty()).collect::<Vec<_>>().join("\n");
    let value = json!({"holds": holds, "reports": reports.iter().map(report_json).collect::<Vec<_>>()});
    finish(cli, text, value, holds)
}

fn matroid_input(arg: &str, stdin: &mut dyn Read) -> Result<Matroid, String> {
    match load(arg, stdin)? {
        Input::Matroid(m) => Ok(m),
        other => Err(format!("expected a matroid, got a {}", other.kind())),
    }
}

fn matroid(cli: &Cli, command: &MatroidCommand, stdin: &mut dyn Read) -> CmdResult {
    match command {
        MatroidCommand::Spoly { input, method } => {
            let m = matroid_input(input, stdin)?;
            let direct = || spectrum_poly_direct(&m);
            match method {
                Method::Krs => {
                    let s = spectrum_poly_krs(&m);
                    finish(cli, s.to_string(), bipoly_json(&s), true)
                }
                Method::Recursive => {
                    let s = spectrum_poly_recursive(&m);
                    finish(cli, s.to_string(), bipoly_json(&s), true)
                }
                Method::Direct => {
                    let s = direct();
                    finish(cli, s.to_string(), spoly_json(&s), true)
                }
                Method::All => {
                    let (k, r, d) = (spectrum_poly_krs(&m), spectrum_poly_recursive(&m), direct());
                    let agree = d.is_integral() && k == r && r == d.poly;
                    let text =
                        format!("krs: {k}\nrecursive: {r}\ndirect: {d}\n{}", if agree { "AGREE" } else { "DISAGREE" });
                    let value = json!({"krs": bipoly_json(&k), "recursive": bipoly_json(&r), "direct": spoly_json(&d), "agree": agree});
                    finish(cli, text, value, agree)
                }
            }
        }
        MatroidCommand::Krs { input } => {
            let m = matroid_input(input, stdin)?;
            let mut lines = vec![];
            let mut rows = vec![];
            for &b in m.bases() {
                let d = m.krs_decompose(b).map_err(|e| e.to_string())?;
                let pb = m.pi_bar(b).map_err(|e| e.to_string())?;
                let (l, l1, l2, lp) = (m.label(b), m.label(d.b1), m.label(d.b2), m.label(pb));
                lines.push(format!("B={{{l}}} B1={{{l1}}} B2={{{l2}}} pibar={{{lp}}}"));
                rows.push(json!({"basis": l, "b1": l1, "b2": l2, "pibar": lp}));
            }
            let (lhs, rhs) = krs_step_identity(&m);
            let ok = lhs == rhs;
            lines.push(format!("bases {lhs:?} flats {rhs:?} {}", if ok { "OK" } else { "MISMATCH" }));
            finish(cli, lines.join("\n"), json!({"bases": rows, "basis_side": lhs, "flat_side": rhs, "ok": ok}), ok)
        }
        MatroidCommand::Pair { input, element } => {
            let m = matroid_input(input, stdin)?;
            let e = m.element(element).map_err(|e| e.to_string())?;
            let cx = m.independence_complex();
            let del = cx.delete(e).map_err(|e| e.to_string())?;
            let con = cx.contract(e).map_err(|e| e.to_string())?;
            let direct = spectrum_poly(&del.relative_to(&con).map_err(|e| e.to_string())?);
            let (sum_text, sum_json, agree) = match m.pair_spectrum_poly(e) {
                Ok(s) => (s.to_string(), bipoly_json(&s), direct.is_integral() && direct.poly == s),
                Err(_) => ("n/a (loop)".to_string(), Value::Null, true),
            };
            let text =
                format!("circuit-sum: {sum_text}\ndirect: {direct}\n{}", if agree { "AGREE" } else { "DISAGREE" });
            finish(cli, text, json!({"circuit_sum": sum_json, "direct": spoly_json(&direct), "agree": agree}), agree)
        }
    }
}

fn pair_input(arg: &str, stdin: &mut dyn Read) -> Result<FamilyPair, String> {
    match load(arg, stdin)? {
        Input::Pair(p) => Ok(p),
        other => Err(format!("expected a family pair, got a {}", other.kind())),
    }
}

fn shifted(cli: &Cli, command: &ShiftedCommand, stdin: &mut dyn Read) -> CmdResult {
    match command {
        ShiftedCommand::Sdt { input } => {
            let r = check_sdt(&pair_input(input, stdin)?).map_err(|e| e.to_string())?;
            let value = json!({
                "s": r.s.as_ref().map(partition_json),
                "spectrum": multiset_json(&r.spectrum),
                "dT": partition_json(&r.dt),
                "ok": r.ok,
            });
            finish(cli, r.to_string(), value, r.ok)
        }
        ShiftedCommand::Degree { input } => {
            let p = pair_input(input, stdin)?;
            let d = p.degree_sequence();
            let ambient = p.family().ambient();
            let per: Vec<String> = d.degrees.iter().enumerate().map(|(v, k)| format!("{}:{k}", ambient[v])).collect();
            let dt = d.partition.conjugate();
            let text = format!("degrees {}\npartition {}\nconjugate {}", per.join(" "), d.partition, dt);
            let value = json!({"degrees": d.degrees, "partition": partition_json(&d.partition), "conjugate": partition_json(&dt)});
            finish(cli, text, value, true)
        }
        ShiftedCommand::Gm { input } => {
            let r = grone_merris_scan(&pair_input(input, stdin)?);
            let verdict = match &r.verdict {
                GmVerdict::Holds => json!({"verdict": "HOLDS"}),
                GmVerdict::Violated { k, lower, bound } => {
                    json!({"verdict": "VIOLATED", "k": k, "lower": lower.to_string(), "bound": bound})
                }
                GmVerdict::Undecided { k, note } => json!({"verdict": "UNDECIDED", "k": k, "note": note}),
            };
            let value = json!({"spectrum": multiset_json(&r.spectrum), "dT": partition_json(&r.dt), "result": verdict});
            finish(cli, r.to_string(), value, !matches!(r.verdict, GmVerdict::Violated { .. }))
        }
        ShiftedCommand::FastSpectrum { input, sub } => {
            let cx = complex_of(&load(input, stdin)?)?;
            let sub = match sub {
                Some(s) => complex_of(&load(s, stdin)?)?,
                None => SimplicialComplex::void(cx.ambient().to_vec()).map_err(|e| e.to_string())?,
            };
            let s = shifted_pair_spectrum(&cx, &sub).map_err(|e| e.to_string())?;
            finish(cli, s.to_string(), spoly_json(&s), true)
        }
    }
}

fn catalog_cmd(name: Option<&str>) -> CmdResult {
    let stdout = match name {
        None => catalog::NAMES.iter().map(|n| format!("{n}\n")).collect(),
        Some(n) => format!("{}\n", catalog::lookup(n).ok_or_else(|| format!("unknown catalog name `{n}`"))?.to_json()),
    };
    Ok(Output { code: EXIT_OK, stdout, stderr: String::new() })
}
