use rankweight::codes::{CodeParams, LinearCode, Metric, WeightEnumerator};
use rankweight::hadamard::{check_dual_vector_hat, check_hamming_hat, check_rank_hat, HADAMARD_GUARD};
use rankweight::linalg;
use rankweight::macwilliams::{
    hamming_macwilliams, mrd_rank_distribution, rank_macwilliams, rank_macwilliams_by_kernel, rank_moment_sides,
    MomentSides,
};
use rankweight::{FieldTower, Gf, HomPoly};
use serde_json::{json, Map, Value};

use crate::job::{Command, Job, MetricChoice};
use crate::CliError;

pub struct Report {
    pub json: Value,
    pub text: Vec<String>,
    /// False only when a `verify` check failed.
    pub ok: bool,
}

fn poly_json(p: &HomPoly) -> Value {
    serde_json::to_value(p).expect("HomPoly serializes")
}

fn code_json(c: &LinearCode) -> Value {
    let spec = c.to_spec();
    json!({"n": c.n(), "k": c.k(), "generator": spec.generator})
}

fn field_text(t: &FieldTower) -> String {
    format!(
        "field: GF({}^{}) over GF({}), modulus_q {:?}, modulus_qm {:?}, primitive {:?}",
        t.q(),
        t.m(),
        t.p(),
        t.modulus_q(),
        t.modulus_qm(),
        t.expand(t.primitive())
    )
}

fn params_json(p: &CodeParams) -> Value {
    json!({"q": p.q, "m": p.m, "n": p.n, "k": p.k})
}

fn generator_text(c: &LinearCode) -> Vec<String> {
    c.to_spec()
        .generator
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|e| serde_json::to_string(e).expect("entry serializes")).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect()
}

struct Base {
    json: Map<String, Value>,
    text: Vec<String>,
}

fn base(job: &Job, name: &str) -> Base {
    let mut json = Map::new();
    let mut text = vec![format!("command: {name}")];
    json.insert("command".into(), json!(name));
    if let Some(t) = &job.tower {
        json.insert("field".into(), serde_json::to_value(t.spec()).expect("FieldSpec serializes"));
        text.push(field_text(t));
    }
    if let Some(c) = &job.code {
        json.insert("code".into(), code_json(c));
        text.push(format!("code: ({}, {}) generator", c.n(), c.k()));
        text.extend(generator_text(c));
    }
    Base { json, text }
}

impl Base {
    fn poly(&mut self, key: &str, p: &HomPoly) {
        self.json.insert(key.into(), poly_json(p));
        self.text.push(format!("{key}: {p}"));
    }

    fn finish(self, ok: bool) -> Report {
        Report { json: Value::Object(self.json), text: self.text, ok }
    }
}

pub fn run(job: &Job) -> Result<Report, CliError> {
    match job.command {
        Command::Enumerate => enumerate(job),
        Command::Dual => dual(job),
        Command::Macwilliams => macwilliams(job),
        Command::Moments => moments(job),
        Command::Mrd => mrd(job),
        Command::Verify => verify(job),
    }
}

fn enumerators(job: &Job, code: &LinearCode) -> Result<(WeightEnumerator, WeightEnumerator), CliError> {
    Ok(code.enumerators(job.guard, job.workers)?)
}

fn add_enumerators(b: &mut Base, metric: MetricChoice, rank: &WeightEnumerator, hamming: &WeightEnumerator) {
    if metric.rank() {
        b.poly("rank", &rank.poly);
    }
    if metric.hamming() {
        b.poly("hamming", &hamming.poly);
    }
}

fn enumerate(job: &Job) -> Result<Report, CliError> {
    let code = job.require_code()?;
    let (rank, hamming) = enumerators(job, code)?;
    let mut b = base(job, "enumerate");
    add_enumerators(&mut b, job.metric.unwrap_or_default(), &rank, &hamming);
    Ok(b.finish(true))
}

fn dual(job: &Job) -> Result<Report, CliError> {
    let code = job.require_code()?;
    let d = code.dual();
    let (rank, hamming) = enumerators(job, &d)?;
    let mut b = base(job, "dual");
    b.json.insert("dual".into(), code_json(&d));
    b.text.push(format!("dual: ({}, {}) generator", d.n(), d.k()));
    b.text.extend(generator_text(&d));
    add_enumerators(&mut b, job.metric.unwrap_or_default(), &rank, &hamming);
    Ok(b.finish(true))
}

fn macwilliams(job: &Job) -> Result<Report, CliError> {
    let code = job.require_code()?;
    let params = code.params();
    let metric = job.metric.unwrap_or(MetricChoice::Rank);
    let (rank, hamming) = enumerators(job, code)?;
    let mut b = base(job, "macwilliams");
    b.json.insert("params".into(), params_json(&params));
    if metric.rank() {
        let out = rank_macwilliams(&rank, &params)?;
        let kernel = rank_macwilliams_by_kernel(&rank, &params)?;
        let agrees = kernel == out;
        b.json.insert(
            "rank".into(),
            json!({"input": poly_json(&rank.poly), "output": poly_json(&out.poly), "kernel_agrees": agrees}),
        );
        b.text.push(format!("rank input: {}", rank.poly));
        b.text.push(format!("rank output: {}", out.poly));
        b.text.push(format!("rank kernel form agrees: {agrees}"));
    }
    if metric.hamming() {
        let out = hamming_macwilliams(&hamming, &params)?;
        b.json.insert("hamming".into(), json!({"input": poly_json(&hamming.poly), "output": poly_json(&out.poly)}));
        b.text.push(format!("hamming input: {}", hamming.poly));
        b.text.push(format!("hamming output: {}", out.poly));
    }
    Ok(b.finish(true))
}

fn moment_rows(
    a: &WeightEnumerator,
    bd: &WeightEnumerator,
    params: &CodeParams,
    nus: impl Iterator<Item = u64>,
) -> Result<Vec<MomentSides>, CliError> {
    nus.map(|nu| rank_moment_sides(a, bd, params, nu).map_err(CliError::from)).collect()
}

fn moments(job: &Job) -> Result<Report, CliError> {
    let code = job.require_code()?;
    let params = code.params();
    let a = code.weight_enumerator_parallel(Metric::Rank, job.guard, job.workers)?;
    let bd = code.dual().weight_enumerator_parallel(Metric::Rank, job.guard, job.workers)?;
    let nus: Vec<u64> = match job.nu {
        Some(nu) => vec![nu],
        None => (0..=params.n).collect(),
    };
    let rows = moment_rows(&a, &bd, &params, nus.into_iter())?;
    let mut b = base(job, "moments");
    b.json.insert("params".into(), params_json(&params));
    b.json.insert(
        "moments".into(),
        Value::Array(
            rows.iter()
                .map(|s| json!({"nu": s.nu, "lhs": s.lhs.to_string(), "rhs": s.rhs.to_string(), "equal": s.holds()}))
                .collect(),
        ),
    );
    b.text.push("nu lhs rhs equal".into());
    b.text.extend(rows.iter().map(|s| format!("{} {} {} {}", s.nu, s.lhs, s.rhs, s.holds())));
    Ok(b.finish(true))
}

fn mrd(job: &Job) -> Result<Report, CliError> {
    let params = job.code_params()?;
    let dist = mrd_rank_distribution(&params)?;
    let mut b = base(job, "mrd");
    b.json.insert("params".into(), params_json(&params));
    b.json.insert("d".into(), json!(params.n - params.k + 1));
    b.text.push(format!("params: q={} m={} n={} k={} d={}", params.q, params.m, params.n, params.k, params.n - params.k + 1));
    b.poly("rank", &dist.poly);
    Ok(b.finish(true))
}

struct Checks {
    passed: Vec<(String, bool, String)>,
    skipped: Vec<(String, String)>,
}

impl Checks {
    fn add(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.passed.push((name.into(), pass, detail.into()));
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.skipped.push((name.into(), reason.into()));
    }
}

fn verify(job: &Job) -> Result<Report, CliError> {
    let code = job.require_code()?;
    let tower = code.tower();
    let params = code.params();
    let d = code.dual();
    let (ar, ah) = enumerators(job, code)?;
    let (br, bh) = enumerators(job, &d)?;
    let mut checks = Checks { passed: Vec::new(), skipped: Vec::new() };

    checks.add("dual_dimension", code.k() + d.k() == code.n(), format!("k = {}, k_dual = {}", code.k(), d.k()));
    let orth = linalg::matmul(tower, code.generator(), &d.generator().transpose())?.is_zero();
    checks.add("dual_orthogonal", orth, "G H^T = 0");

    let rank = rank_macwilliams(&ar, &params)?;
    checks.add("rank_transform", rank == br, format!("analytic {}, enumerated {}", rank.poly, br.poly));
    let kernel = rank_macwilliams_by_kernel(&ar, &params)?;
    checks.add("rank_kernel_form", kernel == rank, format!("kernel {}", kernel.poly));
    let back = rank_macwilliams(&br, &params.dual())?;
    checks.add("rank_round_trip", back == ar, format!("{}", back.poly));
    let ham = hamming_macwilliams(&ah, &params)?;
    checks.add("hamming_transform", ham == bh, format!("analytic {}, enumerated {}", ham.poly, bh.poly));
    let hback = hamming_macwilliams(&bh, &params.dual())?;
    checks.add("hamming_round_trip", hback == ah, format!("{}", hback.poly));

    let rows = moment_rows(&ar, &br, &params, 0..=params.n)?;
    let bad: Vec<String> = rows.iter().filter(|s| !s.holds()).map(|s| s.nu.to_string()).collect();
    checks.add(
        "moments",
        bad.is_empty(),
        if bad.is_empty() { format!("nu = 0..={}", params.n) } else { format!("failing nu: {}", bad.join(",")) },
    );

    if params.n <= params.m && params.k >= 1 {
        let is_mrd = ar.min_weight() == Some(code.n() - code.k() + 1);
        if is_mrd {
            let dist = mrd_rank_distribution(&params)?;
            checks.add("mrd_distribution", dist == ar, format!("{}", dist.poly));
        } else {
            checks.skip("mrd_distribution", "code is not MRD");
        }
    } else {
        checks.skip("mrd_distribution", "needs n <= m and k >= 1");
    }

    let space = (tower.size() as u128).checked_pow(code.n() as u32).unwrap_or(u128::MAX);
    if tower.s() != 1 {
        for name in ["rank_hat", "hamming_hat", "dual_vector_hat"] {
            checks.skip(name, "needs prime q");
        }
    } else if space > HADAMARD_GUARD {
        for name in ["rank_hat", "hamming_hat", "dual_vector_hat"] {
            checks.skip(name, format!("q^(mn) = {space} exceeds {HADAMARD_GUARD}"));
        }
    } else {
        let vectors: Vec<Vec<Gf>> =
            code.generator().row_vecs().into_iter().chain(d.generator().row_vecs()).collect();
        let (mut rh, mut hh, mut dv) = (true, true, true);
        for v in &vectors {
            rh &= check_rank_hat(tower, v, HADAMARD_GUARD)?;
            hh &= check_hamming_hat(tower, v, HADAMARD_GUARD)?;
            dv &= check_dual_vector_hat(tower, v, HADAMARD_GUARD)?;
        }
        let detail = format!("{} generator rows of C and its dual", vectors.len());
        checks.add("rank_hat", rh, detail.clone());
        checks.add("hamming_hat", hh, detail.clone());
        checks.add("dual_vector_hat", dv, detail);
    }

    let ok = checks.passed.iter().all(|(_, pass, _)| *pass);
    let mut b = base(job, "verify");
    b.json.insert("params".into(), params_json(&params));
    b.json.insert(
        "checks".into(),
        Value::Array(
            checks.passed.iter().map(|(n, p, d)| json!({"name": n, "pass": p, "detail": d})).collect(),
        ),
    );
    b.json.insert(
        "skipped".into(),
        Value::Array(checks.skipped.iter().map(|(n, r)| json!({"name": n, "reason": r})).collect()),
    );
    b.json.insert("passed".into(), json!(ok));
    for (n, p, d) in &checks.passed {
        b.text.push(format!("{} {n}: {d}", if *p { "PASS" } else { "FAIL" }));
    }
    for (n, r) in &checks.skipped {
        b.text.push(format!("SKIP {n}: {r}"));
    }
    b.text.push(format!("verify: {}", if ok { "all checks passed" } else { "FAILED" }));
    Ok(b.finish(ok))
}
