use std::fmt;
use std::sync::OnceLock;

use lie_bvduality::{bv_type_d, orth_centralizer_dim, Partition};
use lie_grading::{check_count_formula, two_rho_e, Cocharacter, GradedRootSets};
use lie_losev::{
    condition_a, condition_c, integral_root_system, joseph_dimension, lo2_dimension,
    special_half_check, LosevError, Pinning,
};
use lie_rootsys::{Root, RootSystem, Series, Weight};
use lie_weyl::{dominant_representative, Coxeter, WeylWord};

use crate::model::{
    Candidate, CaseRecord, DerivedSubalgebra, Route, SetMode, StarRow, WeightExpr, WeylIdentity,
    WordExpr,
};

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Established outside this engine; carried as a recorded fact.
    Recorded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Recorded => "RECORDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Stable name such as `two_rho_e` or `candidate.2.condition_c`.
    pub name: String,
    pub status: Status,
    /// Exact values, or the witness of a failure.
    pub detail: String,
}

/// Every check run for one case, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub case_id: String,
    pub system: Series,
    pub label: String,
    pub component_group: String,
    /// `(|Φ⁺(0)|, |Φ⁺(1)|)` computed from `τ`.
    pub counts: (usize, usize),
    /// `2ρ_e` computed from `τ`.
    pub two_rho_e: Vec<i64>,
    pub checks: Vec<Check>,
    /// Differences between stored values and the printed source table, and
    /// free-text notes.
    pub typo_flags: Vec<String>,
}

impl CheckReport {
    /// True when no check failed; recorded facts do not count against it.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Shared root system data, built once per type.
pub fn root_system(series: Series) -> &'static RootSystem {
    static E6: OnceLock<RootSystem> = OnceLock::new();
    static E7: OnceLock<RootSystem> = OnceLock::new();
    static E8: OnceLock<RootSystem> = OnceLock::new();
    static F4: OnceLock<RootSystem> = OnceLock::new();
    static G2: OnceLock<RootSystem> = OnceLock::new();
    let cell = match series {
        Series::E6 => &E6,
        Series::E7 => &E7,
        Series::E8 => &E8,
        Series::F4 => &F4,
        Series::G2 => &G2,
        Series::D(_) => panic!("case records only use exceptional types"),
    };
    cell.get_or_init(|| RootSystem::build(series).expect("exceptional root systems build"))
}

struct Run<'a> {
    rs: &'static RootSystem,
    record: &'a CaseRecord,
    checks: Vec<Check>,
}

impl Run<'_> {
    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    fn outcome(&mut self, name: impl Into<String>, result: Result<String, String>) {
        match result {
            Ok(d) => self.push(name, Status::Pass, d),
            Err(d) => self.push(name, Status::Fail, d),
        }
    }

    fn basis(&self, name: &str) -> Result<&[Root], String> {
        self.record
            .bases
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| format!("unknown basis `{name}`"))
    }

    fn coxeter(&self, basis: Option<&str>) -> Result<Coxeter<'static>, String> {
        match basis {
            None => Ok(Coxeter::simple(self.rs)),
            Some(b) => {
                Coxeter::subsystem(self.rs, self.basis(b)?).map_err(|e| format!("basis {b}: {e}"))
            }
        }
    }

    fn weight(&self, expr: &WeightExpr) -> Result<Weight, String> {
        match expr {
            WeightExpr::Fundamental(v) => Ok(Weight(v.clone())),
            WeightExpr::Basis(b, v) => self
                .rs
                .weight_from_pairings(self.basis(b)?, v)
                .map_err(|e| format!("{expr}: {e}")),
            WeightExpr::HalfHvee => self
                .record
                .half_hvee
                .clone()
                .ok_or_else(|| "case has no half_hvee".to_string()),
            WeightExpr::Candidate(k) => self
                .record
                .candidates
                .get(k.wrapping_sub(1))
                .map(|c| c.weight.clone())
                .ok_or_else(|| format!("no candidate {k}")),
            WeightExpr::Rho => Ok(self.rs.rho()),
        }
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn set_string(s: &std::collections::BTreeSet<usize>) -> String {
    format!("{{{}}}", join(s))
}

/// Replays every stored claim of one case.
///
/// Order: count formula and counts, `2ρ_e`, the special flag, then per
/// candidate Condition (C), Condition (A), the integral type, the
/// dimension by route and the orthogonal partition replays, then the
/// relations between candidates and annotations, the Weyl identities and
/// the descent and star tables. Failures never abort the run.
pub fn verify_case(record: &CaseRecord) -> CheckReport {
    let rs = root_system(record.system);
    let mut run = Run {
        rs,
        record,
        checks: Vec::new(),
    };
    let mut typo_flags = Vec::new();

    let tau = Cocharacter::new(rs, record.tau.clone()).expect("parser checks the rank");
    let sets = GradedRootSets::new(rs, &tau);
    let counts = sets.counts();
    let computed_two_rho = two_rho_e(rs, &tau);

    let n = rs.rank();
    let formula = format!(
        "2({} + {}) + {} = {}, dim g_e = {}",
        counts.0,
        counts.1,
        n,
        2 * sets.total() + n,
        record.dim_centralizer
    );
    run.push(
        "count_formula",
        if check_count_formula(rs, &tau, record.dim_centralizer) {
            Status::Pass
        } else {
            Status::Fail
        },
        formula,
    );
    run.outcome("counts", compare_counts("claimed", record.counts, counts));
    run.outcome(
        "two_rho_e",
        compare_vectors("claimed", &record.two_rho_e, &computed_two_rho),
    );

    if let Some(p) = record.printed_counts {
        if let Err(d) = compare_counts("printed", p, counts) {
            typo_flags.push(format!("printed counts differ from the computation: {d}"));
        }
    }
    if let Some(p) = &record.printed_two_rho_e {
        if let Err(d) = compare_vectors("printed", p, &computed_two_rho) {
            typo_flags.push(format!("printed 2ρ_e differs from the computation: {d}"));
        }
    }

    if let Some(h) = &record.half_hvee {
        let ok = special_half_check(h);
        run.push(
            "special",
            if ok { Status::Pass } else { Status::Fail },
            if ok {
                format!("½h∨ = {h} has simple pairings in {{0, 1}}")
            } else {
                format!("½h∨ = {h} has a simple pairing outside {{0, 1}}")
            },
        );
    }

    let pinning = Pinning::new(rs, &record.pinning).expect("parser checks the range");
    for cand in &record.candidates {
        candidate_checks(&mut run, cand, &pinning, &tau);
    }

    if record.candidates.len() >= 2 {
        run.outcome(
            "candidates_distinct",
            candidates_distinct(rs, &record.candidates),
        );
    }
    if let Some(r) = annotations(record) {
        run.outcome("annotations", r);
    }

    for (k, id) in &record.identities {
        let r = identity(&run, id);
        run.outcome(format!("weyl_identity.{k}"), r);
    }
    for (k, row) in &record.star_rows {
        let r = star_row(&run, row);
        run.outcome(format!("star_table.{k}"), r);
    }

    typo_flags.extend(record.notes.iter().cloned());
    CheckReport {
        case_id: record.id(),
        system: record.system,
        label: record.label.clone(),
        component_group: record.component_group.clone(),
        counts,
        two_rho_e: computed_two_rho,
        checks: run.checks,
        typo_flags,
    }
}

fn compare_counts(
    source: &str,
    claimed: (usize, usize),
    computed: (usize, usize),
) -> Result<String, String> {
    let mut bad = Vec::new();
    if claimed.0 != computed.0 {
        bad.push(format!(
            "|Φ⁺(0)|: {source} {}, computed {}",
            claimed.0, computed.0
        ));
    }
    if claimed.1 != computed.1 {
        bad.push(format!(
            "|Φ⁺(1)|: {source} {}, computed {}",
            claimed.1, computed.1
        ));
    }
    if bad.is_empty() {
        Ok(format!("({}, {})", computed.0, computed.1))
    } else {
        Err(bad.join("; "))
    }
}

fn compare_vectors(source: &str, claimed: &[i64], computed: &[i64]) -> Result<String, String> {
    let bad: Vec<String> = claimed
        .iter()
        .zip(computed)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| format!("α{}: {source} {a}, computed {b}", i + 1))
        .collect();
    if bad.is_empty() {
        Ok(lie_rootsys::format_vec(computed))
    } else {
        Err(bad.join("; "))
    }
}

fn candidate_checks(run: &mut Run<'_>, cand: &Candidate, pinning: &Pinning, tau: &Cocharacter) {
    let rs = run.rs;
    let record = run.record;
    let prefix = format!("candidate.{}", cand.index);
    let w = &cand.weight;

    let c = condition_c(rs, pinning, tau, w);
    let detail = if c.holds {
        format!("λ+ρ = {w} agrees with ρ_e off the pinning")
    } else {
        let alpha = rs.to_alpha_basis(w);
        let expected = lie_grading::rho_e(rs, tau);
        join(c.mismatches.iter().map(|&i| {
            format!(
                "α{i}: λ+ρ has {}, ρ_e has {}",
                alpha[i - 1],
                expected[i - 1]
            )
        }))
    };
    run.push(
        format!("{prefix}.condition_c"),
        if c.holds { Status::Pass } else { Status::Fail },
        detail,
    );

    match condition_a(rs, pinning, w, record.standard_levi) {
        Ok(a) if a.holds => run.push(
            format!("{prefix}.condition_a"),
            Status::Pass,
            "no root of Φ₀⁺ pairs to a positive integer",
        ),
        Ok(a) => {
            let b = a.witness.expect("a failure has a witness");
            let p = rs.pairing(w, &b);
            run.push(
                format!("{prefix}.condition_a"),
                Status::Fail,
                format!("⟨λ+ρ, β∨⟩ = {p} for β = {b}"),
            );
        }
        Err(LosevError::UnsupportedRoute(_)) => run.push(
            format!("{prefix}.condition_a"),
            Status::Recorded,
            "pinning is not of standard Levi type; established by a separate argument",
        ),
        Err(e) => run.push(format!("{prefix}.condition_a"), Status::Fail, e.to_string()),
    }

    let sub = integral_root_system(rs, w);
    if let Some(claimed) = &cand.integral_type {
        let ok = *claimed == sub.cartan_type;
        run.push(
            format!("{prefix}.integral_type"),
            if ok { Status::Pass } else { Status::Fail },
            if ok {
                format!("{} ({} roots)", sub.cartan_type, sub.root_count())
            } else {
                format!("claimed {claimed}, computed {}", sub.cartan_type)
            },
        );
    }

    let dim_g = rs.dim_algebra();
    let target = dim_g - record.dim_centralizer;
    let name = format!("{prefix}.dimension");
    match cand.route {
        Route::Joseph => match joseph_dimension(rs, w) {
            Ok(d) if d == target => run.push(
                name,
                Status::Pass,
                format!("2(|Φ⁺| − |Φ_λ⁺|) = {d} = dim g − dim g_e"),
            ),
            Ok(d) => run.push(
                name,
                Status::Fail,
                format!("2(|Φ⁺| − |Φ_λ⁺|) = {d}, dim g − dim g_e = {target}"),
            ),
            Err(e) => run.push(name, Status::Fail, e.to_string()),
        },
        Route::BvSpecial => {
            let r = match &record.half_hvee {
                None => Err("route BV_SPECIAL on a case without ½h∨".to_string()),
                Some(h) => {
                    let (dom, word) = dominant_representative(rs, w);
                    if dom == *h {
                        Ok(format!(
                            "{word}(λ+ρ) = ½h∨ = {h}; dim VA = dim 𝒪 = {target}"
                        ))
                    } else {
                        Err(format!(
                            "dominant representative {dom} of λ+ρ differs from ½h∨ = {h}"
                        ))
                    }
                }
            };
            run.outcome(name, r);
        }
        Route::Lo2 => {
            let (gl, orbit) = cand.lo2.expect("parser requires lo2 data for LO2");
            let computed_gl = sub.dim_algebra(rs);
            let d = lo2_dimension(dim_g, gl, orbit);
            let r = if gl != computed_gl {
                Err(format!("dim g(λ): recorded {gl}, computed {computed_gl}"))
            } else if d != target as i64 {
                Err(format!(
                    "{dim_g} − {gl} + {orbit} = {d}, dim g − dim g_e = {target}"
                ))
            } else {
                Ok(format!(
                    "{dim_g} − {gl} + {orbit} = {d} = dim g − dim g_e (dim 𝒪_λ = {orbit})"
                ))
            };
            run.outcome(name, r);
        }
        Route::Recorded => run.push(name, Status::Recorded, "dimension taken as recorded"),
    }

    if let Some(b) = &cand.bv_basis {
        let r = bv_check(run, cand, b);
        run.outcome(format!("{prefix}.bv"), r);
    }
    if let Some(p) = &cand.orbit_partition {
        let r = orthogonal_orbit(p).and_then(|(dim, cent)| match cand.lo2 {
            Some((_, orbit)) if orbit != dim => Err(format!(
                "partition {p} gives dim 𝒪 = {dim}, recorded {orbit}"
            )),
            _ => Ok(format!(
                "partition {p}: dim centraliser {cent}, dim 𝒪 = {dim}"
            )),
        });
        run.outcome(format!("{prefix}.orbit_partition"), r);
    }
}

/// `(dim 𝒪_p, dim so(N)_e)` for an orthogonal partition of `N`.
fn orthogonal_orbit(p: &Partition) -> Result<(usize, usize), String> {
    let n2 = p.size();
    let cent = orth_centralizer_dim(p).map_err(|e| e.to_string())?;
    let dim_so = n2 * n2.saturating_sub(1) / 2;
    Ok((dim_so - cent, cent))
}

fn bv_check(run: &Run<'_>, cand: &Candidate, basis: &str) -> Result<String, String> {
    let roots = run.basis(basis)?;
    let eps = run
        .rs
        .subsystem_epsilon_coords(&cand.weight, roots)
        .map_err(|e| e.to_string())?;
    if let Some(expected) = &cand.bv_epsilon {
        if *expected != eps {
            return Err(format!(
                "ε-coordinates: recorded ({}), computed ({})",
                join(expected),
                join(&eps)
            ));
        }
    }
    let trace = bv_type_d(&eps).map_err(|e| e.to_string())?;
    if let Some(p) = &cand.bv_partition {
        if *p != trace.output {
            return Err(format!(
                "partition: recorded {p}, computed {}",
                trace.output
            ));
        }
    }
    let (dim, cent) = orthogonal_orbit(&trace.output)?;
    if let Some((_, orbit)) = cand.lo2 {
        if orbit != dim {
            return Err(format!(
                "BV output {} gives dim 𝒪 = {dim}, recorded {orbit}",
                trace.output
            ));
        }
    }
    Ok(format!(
        "ε = ({}) ↦ {}; dim centraliser {cent}, dim 𝒪 = {dim}",
        join(&eps),
        trace.output
    ))
}

fn candidates_distinct(rs: &RootSystem, cands: &[Candidate]) -> Result<String, String> {
    let reps: Vec<Weight> = cands
        .iter()
        .map(|c| dominant_representative(rs, &c.weight).0)
        .collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if reps[i] == reps[j] {
                return Err(format!(
                    "candidates {} and {} are W-conjugate (dominant representative {})",
                    i + 1,
                    j + 1,
                    reps[i]
                ));
            }
        }
    }
    Ok(format!(
        "dominant representatives {}",
        reps.iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" ≠ ")
    ))
}

fn annotations(record: &CaseRecord) -> Option<Result<String, String>> {
    if record.derived_subalgebra.is_none() && record.e_count.is_none() {
        return None;
    }
    let k = record.candidates.len();
    let mut bad = Vec::new();
    if let Some(d) = record.derived_subalgebra {
        let expects_two = d == DerivedSubalgebra::Proper;
        if expects_two != (k >= 2) {
            bad.push(format!("{d} but {k} candidate(s)"));
        }
    }
    if let Some(e) = &record.e_count {
        let ok = match e.trim() {
            ">=2" | "≥2" => k >= 2,
            other => other.parse::<usize>().map(|m| m == k).unwrap_or(false),
        };
        if !ok {
            bad.push(format!("|ℰ| annotated {e} but {k} candidate(s)"));
        }
    }
    Some(if bad.is_empty() {
        Ok(format!(
            "{k} candidate(s); {}",
            record
                .derived_subalgebra
                .map(|d| d.to_string())
                .unwrap_or_else(|| "no derived-subalgebra annotation".into())
        ))
    } else {
        Err(bad.join("; "))
    })
}

fn same_basis<'b>(a: &'b WordExpr, b: &WordExpr) -> Result<Option<&'b str>, String> {
    if a.basis != b.basis {
        return Err(format!("{a} and {b} are words over different generators"));
    }
    Ok(a.basis.as_deref())
}

fn identity(run: &Run<'_>, id: &WeylIdentity) -> Result<String, String> {
    match id {
        WeylIdentity::Apply { word, from, to } => {
            let cox = run.coxeter(word.basis.as_deref())?;
            let mu = run.weight(from)?;
            let nu = run.weight(to)?;
            let got = cox.apply(&word.word, &mu).map_err(|e| e.to_string())?;
            if got == nu {
                Ok(format!("{word}({from}) = {to} = {nu}"))
            } else {
                Err(format!("{word}({from}) = {got}, expected {to} = {nu}"))
            }
        }
        WeylIdentity::Equal { a, b } => {
            let cox = run.coxeter(same_basis(a, b)?)?;
            match cox.equal(&a.word, &b.word).map_err(|e| e.to_string())? {
                true => Ok(format!("{a} = {b}")),
                false => Err(format!("{a} ≠ {b}")),
            }
        }
        WeylIdentity::Inverse { a, b } => {
            let cox = run.coxeter(same_basis(a, b)?)?;
            match cox
                .equal(&a.word, &b.word.inverse())
                .map_err(|e| e.to_string())?
            {
                true => Ok(format!("{a} = ({b})⁻¹")),
                false => Err(format!("{a} ≠ ({b})⁻¹")),
            }
        }
        WeylIdentity::NegativeSet {
            word,
            basis,
            mode,
            set,
        } => {
            let cox = run.coxeter(word.basis.as_deref())?;
            let roots = run.basis(basis)?;
            let mut got = std::collections::BTreeSet::new();
            for (k, b) in roots.iter().enumerate() {
                if cox
                    .apply_root(&word.word, b)
                    .map_err(|e| e.to_string())?
                    .is_negative()
                {
                    got.insert(k + 1);
                }
            }
            let ok = match mode {
                SetMode::Equal => got == *set,
                SetMode::Contains => set.is_subset(&got),
            };
            let rel = match mode {
                SetMode::Equal => "=",
                SetMode::Contains => "⊇",
            };
            let msg = format!(
                "{{k : {word}(β_k) < 0}} over {basis} = {}; claimed {rel} {}",
                set_string(&got),
                set_string(set)
            );
            if ok {
                Ok(msg)
            } else {
                Err(msg)
            }
        }
        WeylIdentity::Pairings {
            weight,
            basis,
            values,
        } => {
            let mu = run.weight(weight)?;
            let roots = run.basis(basis)?;
            if roots.len() != values.len() {
                return Err(format!("{} values for {} roots", values.len(), roots.len()));
            }
            let got: Vec<_> = roots.iter().map(|b| run.rs.pairing(&mu, b)).collect();
            if got == *values {
                Ok(format!("⟨{weight}, β∨⟩ over {basis} = ({})", join(&got)))
            } else {
                let bad: Vec<String> = got
                    .iter()
                    .zip(values)
                    .enumerate()
                    .filter(|(_, (g, v))| g != v)
                    .map(|(k, (g, v))| format!("β{}: claimed {v}, computed {g}", k + 1))
                    .collect();
                Err(format!("⟨{weight}, β∨⟩ over {basis}: {}", bad.join("; ")))
            }
        }
        WeylIdentity::Epsilon {
            weight,
            basis,
            values,
        } => {
            let mu = run.weight(weight)?;
            let roots = run.basis(basis)?;
            let got = run
                .rs
                .subsystem_epsilon_coords(&mu, roots)
                .map_err(|e| e.to_string())?;
            if got == *values {
                Ok(format!("ε({weight}) over {basis} = ({})", join(&got)))
            } else {
                Err(format!(
                    "ε({weight}) over {basis} = ({}), claimed ({})",
                    join(&got),
                    join(values)
                ))
            }
        }
    }
}

fn star_row(run: &Run<'_>, row: &StarRow) -> Result<String, String> {
    let err = |e: lie_weyl::WeylError| e.to_string();
    match row {
        StarRow::Descent { word, set } | StarRow::RightDescent { word, set } => {
            let cox = run.coxeter(word.basis.as_deref())?;
            let (got, name) = match row {
                StarRow::Descent { .. } => (cox.left_descents(&word.word).map_err(err)?, "𝓛"),
                _ => (cox.right_descents(&word.word).map_err(err)?, "𝓡"),
            };
            let msg = format!("{name}({word}) = {}", set_string(&got));
            if got == *set {
                Ok(msg)
            } else {
                Err(format!("{msg}, claimed {}", set_string(set)))
            }
        }
        StarRow::LeftStar { s, t, x, y } | StarRow::RightStar { s, t, x, y } => {
            let cox = run.coxeter(same_basis(x, y)?)?;
            let left = matches!(row, StarRow::LeftStar { .. });
            let got: WeylWord = if left {
                cox.left_star(&x.word, *s, *t)
            } else {
                cox.right_star(&x.word, *s, *t)
            }
            .map_err(err)?;
            let (pre, post) = if left { ("*", "") } else { ("", "*") };
            if cox.equal(&got, &y.word).map_err(err)? {
                Ok(format!("{pre}{x}{post} = {y} on D(s{s},s{t})"))
            } else {
                Err(format!(
                    "{pre}{x}{post} = {got} on D(s{s},s{t}), claimed {y}"
                ))
            }
        }
    }
}

/// Verifies every record in order, one task per case when the `parallel`
/// feature is on.
pub fn verify_all(records: &[CaseRecord]) -> Vec<CheckReport> {
    #[cfg(feature = "parallel")]
    {
        verify_all_parallel(records)
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_all_sequential(records)
    }
}

/// Single-threaded fallback.
pub fn verify_all_sequential(records: &[CaseRecord]) -> Vec<CheckReport> {
    records.iter().map(verify_case).collect()
}

/// Fans the cases out over the rayon pool; the output keeps input order.
#[cfg(feature = "parallel")]
pub fn verify_all_parallel(records: &[CaseRecord]) -> Vec<CheckReport> {
    use rayon::prelude::*;
    records.par_iter().map(verify_case).collect()
}
