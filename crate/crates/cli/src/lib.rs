//! The `euler` command: resolves a group from the catalog or from
//! generators, runs one computation and renders it as TSV or JSON.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, ValueEnum};
use conjectures::{
    artin_hasse_counts, awc_assemble, gaussian_identities, krc_check, AwcOutcome, DegreeLibrary, MAX_GAUSSIAN_M,
};
use equivariant::{
    artin_decomposition, centralizer_euler_characteristics, chi_r, euler_class_function, BrownVariant, SubgroupAPoset,
};
use num_bigint::BigInt;
use orbitstructs::{
    centralized_orbit_category_euler, global_identity, orbit_category_euler, theorem1_verify, OrbitVariant,
    SkeletonKind,
};
use permcore::{group_by_name, is_prime, parse_generators, PermGroup, DEFAULT_ELEMENT_CAP};
use pisubgroups::{hio_divisibility, pi_global_identity, PiContext};
use posetcat::{fmt_q, qi, solve, EulerCharacteristic, Solution, Q};
use serde_json::{json, Value};
use subgroups::{radical_p_subgroups, GroupPair, TableMode, DEFAULT_FAMILY_CAP};

/// Groups larger than this need `--slow-ok` for the orbit category.
pub const SLOW_ORDER: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Brown,
    Weighting,
    ChiR,
    ClassFunction,
    Artin,
    Orbitcat,
    Theorem1,
    Krc,
    Pi,
    Series,
    Identities,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Parser, Clone, Debug)]
#[command(name = "euler", version, about = "Euler characteristics of p-subgroup posets and orbit categories")]
pub struct RunSpec {
    #[arg(value_enum)]
    pub command: Command,
    /// catalog name: M11, GL(3,2), SL(3,3), S7, A6, C12, ...
    #[arg(long, conflicts_with = "gens")]
    pub group: Option<String>,
    /// generators in cycle notation, separated by `;`
    #[arg(long, requires = "degree")]
    pub gens: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, conflicts_with = "pi")]
    pub prime: Option<u64>,
    /// comma-separated set of primes
    #[arg(long, value_delimiter = ',')]
    pub pi: Option<Vec<u64>>,
    #[arg(long)]
    pub r: Option<usize>,
    /// generators of the acting group A, as permutations of the same points
    #[arg(long)]
    pub action: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[arg(long)]
    pub slow_ok: bool,
    #[arg(long)]
    pub force_full_poset: bool,
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, env = "EULER_ELEMENT_CAP", default_value_t = DEFAULT_ELEMENT_CAP)]
    pub element_cap: usize,
    #[arg(long, env = "EULER_FAMILY_CAP", default_value_t = DEFAULT_FAMILY_CAP)]
    pub family_cap: usize,
}

/// Rendered output and the exit status: 0, or 2 when a conjecture fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

pub fn resolve_group(spec: &RunSpec) -> Result<PermGroup> {
    match (&spec.group, &spec.gens) {
        (Some(name), None) => Ok(group_by_name(name)?),
        (None, Some(gens)) => {
            let degree = spec.degree.ok_or_else(|| anyhow!("--gens needs --degree"))?;
            let gens = parse_generators(degree, gens)?;
            Ok(PermGroup::with_cap(degree, gens, spec.element_cap)?)
        }
        (None, None) => bail!("give a group with --group or --gens"),
        (Some(_), Some(_)) => bail!("--group and --gens are exclusive"),
    }
}

/// The pair (G, A): A from `--action`, else G acting on itself.
pub fn resolve_pair<'g>(spec: &RunSpec, g: &'g PermGroup) -> Result<GroupPair<'g>> {
    match &spec.action {
        None => Ok(GroupPair::inner(g)),
        Some(a) => {
            let gens = parse_generators(g.degree(), a).context("parsing --action")?;
            Ok(GroupPair::new(g, gens)?)
        }
    }
}

fn prime(spec: &RunSpec) -> Result<u64> {
    let p = spec.prime.ok_or_else(|| anyhow!("this command needs --prime"))?;
    if !is_prime(p) {
        bail!("{p} is not prime");
    }
    Ok(p)
}

fn row<T: ToString>(name: &str, xs: impl IntoIterator<Item = T>) -> String {
    let cells: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("{name}\t{}\n", cells.join("\t"))
}

fn strs(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(BigInt::to_string).collect()
}

fn render(spec: &RunSpec, tsv: String, value: Value) -> String {
    match spec.format {
        Format::Tsv => tsv,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("JSON values serialize")),
    }
}

pub fn run(spec: &RunSpec) -> Result<Outcome> {
    match spec.command {
        Command::Series => return series(spec),
        Command::Identities => return identities(spec),
        _ => {}
    }
    let g = resolve_group(spec)?;
    match spec.command {
        Command::Brown => brown(spec, &g),
        Command::Weighting => weighting(spec, &g),
        Command::ChiR => chi(spec, &g),
        Command::ClassFunction => class_function(spec, &g),
        Command::Artin => artin(spec, &g),
        Command::Orbitcat => orbitcat(spec, &g),
        Command::Theorem1 => theorem1(spec, &g),
        Command::Krc => krc(spec, &g),
        Command::Pi => pi(spec, &g),
        Command::Series | Command::Identities => unreachable!("handled above"),
    }
}

fn brown(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let fam = radical_p_subgroups(g, p, spec.family_cap)?;
    let table = fam.class_table(TableMode::Successors)?;
    let a: Vec<Vec<Q>> = table.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let Solution::Unique(w) = solve(&a, &vec![qi(1); a.len()]) else {
        bail!("the class table is singular");
    };
    let trivial = fam.trivial_class().ok_or_else(|| anyhow!("no trivial class"))?;
    let neg_reduced = w[trivial].clone();
    if spec.force_full_poset {
        let pair = GroupPair::inner(g);
        let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Full, spec.family_cap)?;
        let full = qi(1) - qi(ap.euler(&ap.all())?);
        if full != neg_reduced {
            bail!("full poset gives {} but the radical weighting gives {}", fmt_q(&full), fmt_q(&neg_reduced));
        }
    }
    let mut tsv = row("|H|", fam.class_orders());
    for (c, r) in table.iter().enumerate() {
        tsv += &row(&format!("S({})", fam.class_orders()[c]), r);
    }
    tsv += &row("weight", w.iter().map(fmt_q));
    tsv += &format!("-chi~\t{}\n", fmt_q(&neg_reduced));
    let value = json!({
        "p": p,
        "orders": fam.class_orders(),
        "table": table,
        "weights": w.iter().map(fmt_q).collect::<Vec<_>>(),
        "neg_reduced_euler": fmt_q(&neg_reduced),
        "full_poset": spec.force_full_poset,
    });
    Ok(Outcome::ok(render(spec, tsv, value)))
}

fn weighting(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let r = global_identity(g, p, spec.family_cap)?;
    let tsv = format!("{}|G_p|\t{}\n", r.to_tsv(), r.p_singular);
    Ok(Outcome::ok(render(spec, tsv, r.to_json())))
}

fn chi(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let r = spec.r.unwrap_or(2);
    let pair = resolve_pair(spec, g)?;
    let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, spec.family_cap)?;
    let c = chi_r(&ap, r)?;
    let tsv = format!("r\t{r}\nchi_r\t{}\nchi~_r\t{}\n", fmt_q(&c.chi), fmt_q(&c.reduced));
    let value = json!({ "p": p, "r": r, "chi": fmt_q(&c.chi), "reduced": fmt_q(&c.reduced) });
    Ok(Outcome::ok(render(spec, tsv, value)))
}

fn class_function(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let r = spec.r.unwrap_or(2);
    if r == 0 {
        bail!("--r must be at least 1");
    }
    let pair = resolve_pair(spec, g)?;
    let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, spec.family_cap)?;
    let cent = centralizer_euler_characteristics(&ap, true)?;
    let alpha = euler_class_function(&ap, r, true)?;
    let webb: Q = cent.values.iter().zip(&cent.class_sizes).map(|(v, &s)| v * qi(s)).sum();
    let alpha_sum: Q = alpha.values.iter().sum();
    let mut tsv = row("|x|", cent.element_orders.iter().map(u64::to_string).chain(["sum".into()]));
    tsv += &row("|x^A|", &cent.class_sizes);
    tsv += &row("chi~(C_S(x))", cent.values.iter().map(fmt_q).chain([fmt_q(&webb)]));
    tsv += &row(&format!("alpha~_{r}"), alpha.values.iter().map(fmt_q).chain([fmt_q(&alpha_sum)]));
    let value = json!({
        "p": p,
        "r": r,
        "element_orders": cent.element_orders,
        "class_sizes": cent.class_sizes,
        "centralizer_reduced_euler": cent.values.iter().map(fmt_q).collect::<Vec<_>>(),
        "weighted_sum": fmt_q(&webb),
        "alpha": alpha.values.iter().map(fmt_q).collect::<Vec<_>>(),
        "alpha_sum": fmt_q(&alpha_sum),
    });
    Ok(Outcome::ok(render(spec, tsv, value)))
}

fn artin(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let r = spec.r.unwrap_or(2);
    if r < 2 {
        bail!("Artin coefficients need --r at least 2");
    }
    let pair = GroupPair::inner(g);
    let ap = SubgroupAPoset::brown(&pair, p, BrownVariant::Radical, spec.family_cap)?;
    let f = euler_class_function(&ap, r, true)?;
    let a = artin_decomposition(&f, g, Some(p))?;
    let value = json!({
        "p": p,
        "r": r,
        "cyclic_orders": a.cyclic_orders,
        "weights": strs(&a.weights_nonidentity),
        "coefficients": strs(&a.coefficients),
        "normalizer_indices": a.normalizer_indices,
        "inner_product": a.inner_product.to_string(),
    });
    Ok(Outcome::ok(render(spec, a.to_tsv(), value)))
}

fn euler_str(e: &EulerCharacteristic) -> String {
    match e {
        EulerCharacteristic::Defined(q) => fmt_q(q),
        EulerCharacteristic::Undefined => "undefined".into(),
    }
}

fn orbitcat(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    if g.order() > SLOW_ORDER && !spec.slow_ok {
        bail!("|G| = {} is large; pass --slow-ok to run the orbit category anyway", g.order());
    }
    if spec.action.is_none() {
        let e = orbit_category_euler(g, p, spec.family_cap)?;
        let skeleton = match e.kind {
            SkeletonKind::AllPSubgroups => "all",
            SkeletonKind::Radical => "radical",
        };
        let tsv = format!(
            "chi\t{}\ndensity\t{}\ncoweighting\t{}\nweighting\t{}\nzeta\t{}\nskeleton\t{skeleton}\n",
            fmt_q(&e.density),
            fmt_q(&e.density),
            fmt_q(&e.coweighting),
            fmt_q(&e.weighting),
            fmt_q(&e.zeta)
        );
        return Ok(Outcome::ok(render(spec, tsv, e.to_json())));
    }
    let pair = resolve_pair(spec, g)?;
    let c = centralized_orbit_category_euler(&pair, p, OrbitVariant::Centralized, spec.family_cap)?;
    let t = centralized_orbit_category_euler(&pair, p, OrbitVariant::Transporter, spec.family_cap)?;
    let tsv = format!(
        "objects\t{}\nclasses\t{}\ncentralized\t{}\ntransporter\t{}\ndensity\t{}\n",
        c.objects,
        c.classes,
        euler_str(&c.euler),
        euler_str(&t.euler),
        fmt_q(&t.density)
    );
    Ok(Outcome::ok(render(spec, tsv, json!({ "centralized": c.to_json(), "transporter": t.to_json() }))))
}

fn theorem1(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let pair = match spec.action {
        Some(_) => resolve_pair(spec, g)?,
        None => GroupPair::from_elements(g, &[]),
    };
    let r = theorem1_verify(&pair, p, spec.family_cap)?;
    let tsv = format!(
        "{}|C_G(A)_p|\t{}\nchi~(C_S(A))\t{}\n|C_G(A)|_p\t{}\n",
        r.to_tsv(),
        r.p_singular,
        r.reduced,
        r.centralizer_p_part
    );
    Ok(Outcome::ok(render(spec, tsv, r.to_json())))
}

fn krc(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let p = prime(spec)?;
    let lib = DegreeLibrary::builtin();
    let data = spec.group.as_deref().and_then(|n| lib.get(n)).cloned().or_else(|| lib.identify(g));
    let k = krc_check(g, p, data.as_ref(), spec.family_cap)?;
    let w = awc_assemble(g, p, &lib, spec.family_cap)?;
    let awc_verdict = match w.outcome {
        AwcOutcome::Holds => "PASS",
        AwcOutcome::Fails => "FAIL",
        AwcOutcome::InsufficientData => "insufficient data",
    };
    let tsv = format!("{}value\t{}\n\n{}verdict\t{awc_verdict}\n", k.to_tsv(), k.sum01, w.to_tsv());
    let value = json!({ "krc": k.to_json(), "awc": w.to_json() });
    let failed = k.holds == Some(false) || w.outcome == AwcOutcome::Fails;
    Ok(Outcome { output: render(spec, tsv, value), status: if failed { 2 } else { 0 } })
}

fn pi(spec: &RunSpec, g: &PermGroup) -> Result<Outcome> {
    let pi = spec.pi.clone().ok_or_else(|| anyhow!("this command needs --pi"))?;
    let ctx = PiContext::new(g, &pi, spec.family_cap)?;
    let r = pi_global_identity(&ctx)?;
    let h = hio_divisibility(&ctx)?;
    let trivial = r.weighting.orders.iter().position(|&o| o == 1).ok_or_else(|| anyhow!("no trivial class"))?;
    let chi = BigInt::from(1) - &r.weighting.weights[trivial];
    let mut tsv = r.weighting.to_tsv();
    tsv += &row("|N:H|_pi", &h.index_pi_parts);
    tsv += &format!("chi(S)\t{chi}\nchi(O)\t{}\n", fmt_q(&r.orbit_euler));
    tsv += &format!("sum w(H)|H| = {}\n|G_π| = {}\n", r.total, r.pi_singular);
    let value = json!({ "pi": ctx.pi, "global": r.to_json(), "hio": h.to_json(), "chi": chi.to_string() });
    Ok(Outcome::ok(render(spec, tsv, value)))
}

fn series(spec: &RunSpec) -> Result<Outcome> {
    let p = prime(spec)?;
    let n = spec.nmax.ok_or_else(|| anyhow!("this command needs --nmax"))?;
    let s = artin_hasse_counts(p, n)?;
    let tsv: String = s.iter().map(|x| format!("{x}\n")).collect();
    Ok(Outcome::ok(render(spec, tsv, json!({ "p": p, "counts": strs(&s) }))))
}

fn identities(spec: &RunSpec) -> Result<Outcome> {
    let ms: Vec<usize> = match spec.m {
        Some(m) => vec![m],
        None => (1..=MAX_GAUSSIAN_M).collect(),
    };
    let reports = ms.into_iter().map(gaussian_identities).collect::<Result<Vec<_>, _>>()?;
    let tsv = reports.iter().map(|r| r.to_tsv()).collect::<Vec<_>>().join("\n");
    let value = Value::Array(reports.iter().map(|r| r.to_json()).collect());
    Ok(Outcome::ok(render(spec, tsv, value)))
}

/// Parses the arguments and runs; usage errors exit 1, help and version 0.
pub fn main_with_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let spec = match RunSpec::try_parse_from(args) {
        Ok(s) => s,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, 1) };
        }
    };
    match run(&spec) {
        Ok(o) => (o.output, String::new(), o.status),
        Err(e) => (String::new(), format!("error: {e:#}\n"), 1),
    }
}
