use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use lie_bvduality::Partition;
use lie_losev::CartanType;
use lie_rootsys::{parse_rational_list, Root, Series, Weight, Q};
use lie_weyl::WeylWord;

use crate::model::{
    Candidate, CaseRecord, DerivedSubalgebra, Route, SetMode, StarRow, WeightExpr, WeylIdentity,
    WordExpr,
};
use crate::LedgerError;

const REQUIRED: [&str; 7] = [
    "pinning",
    "tau",
    "dim_centralizer",
    "component_group",
    "counts",
    "two_rho_e",
    "standard_levi",
];

const CANDIDATE_FIELDS: [&str; 8] = [
    "weight",
    "route",
    "integral_type",
    "lo2",
    "bv_basis",
    "bv_epsilon",
    "bv_partition",
    "orbit_partition",
];

/// One `key = value` line.
#[derive(Debug, Clone)]
struct Entry {
    line: usize,
    key: String,
    value: String,
}

#[derive(Debug)]
struct RawCase {
    line: usize,
    system: String,
    label: String,
    entries: Vec<Entry>,
}

/// Reads every record of a case file.
///
/// Syntax errors carry the line number. Structural invariants (vector
/// lengths, index ranges, the parity of the orbit dimension, candidate
/// numbering and the references between fields) are checked here and
/// reported against the case and field.
pub fn parse_cases(text: &str) -> Result<Vec<CaseRecord>, LedgerError> {
    split_records(text)?.into_iter().map(build_record).collect()
}

fn syntax(line: usize, message: impl Into<String>) -> LedgerError {
    LedgerError::Syntax {
        line,
        message: message.into(),
    }
}

fn split_records(text: &str) -> Result<Vec<RawCase>, LedgerError> {
    let mut out: Vec<RawCase> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(head) = content.strip_prefix('[') {
            let inner = head
                .strip_suffix(']')
                .ok_or_else(|| syntax(line, "unterminated case header"))?;
            let id = inner
                .trim()
                .strip_prefix("case")
                .ok_or_else(|| syntax(line, "expected `[case SYSTEM/LABEL]`"))?
                .trim();
            let (system, label) = id
                .split_once('/')
                .ok_or_else(|| syntax(line, "expected `SYSTEM/LABEL` in case header"))?;
            if label.trim().is_empty() {
                return Err(syntax(line, "empty case label"));
            }
            out.push(RawCase {
                line,
                system: system.trim().to_string(),
                label: label.trim().to_string(),
                entries: Vec::new(),
            });
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("expected `key = value`, found `{content}`")))?;
        let key = key.trim();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(syntax(line, format!("malformed key `{key}`")));
        }
        let case = out
            .last_mut()
            .ok_or_else(|| syntax(line, "field outside of a `[case …]` record"))?;
        case.entries.push(Entry {
            line,
            key: key.to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

/// Field lookup with duplicate detection.
struct Fields<'a> {
    case: String,
    map: BTreeMap<&'a str, &'a Entry>,
}

impl<'a> Fields<'a> {
    fn new(raw: &'a RawCase, case: String) -> Result<Self, LedgerError> {
        let mut map = BTreeMap::new();
        for e in &raw.entries {
            if e.key == "notes" {
                continue;
            }
            if map.insert(e.key.as_str(), e).is_some() {
                return Err(syntax(e.line, format!("duplicate key `{}`", e.key)));
            }
        }
        Ok(Fields { case, map })
    }

    fn required(&self, key: &str) -> Result<&'a Entry, LedgerError> {
        self.map
            .get(key)
            .copied()
            .ok_or_else(|| LedgerError::Validation {
                case: self.case.clone(),
                field: key.to_string(),
                message: "missing required field".into(),
            })
    }

    fn optional(&self, key: &str) -> Option<&'a Entry> {
        self.map.get(key).copied()
    }

    fn invalid(&self, field: &str, message: impl Into<String>) -> LedgerError {
        LedgerError::Validation {
            case: self.case.clone(),
            field: field.to_string(),
            message: message.into(),
        }
    }
}

fn parse_with<T, E: std::fmt::Display>(
    e: &Entry,
    f: impl FnOnce(&str) -> Result<T, E>,
) -> Result<T, LedgerError> {
    f(&e.value).map_err(|err| syntax(e.line, format!("`{}`: {err}", e.key)))
}

fn int_list<T: FromStr>(s: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    let t = s
        .trim()
        .trim_start_matches(['(', '[', '{'])
        .trim_end_matches([')', ']', '}']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|e| format!("`{}`: {e}", x.trim()))
        })
        .collect()
}

fn pair(s: &str) -> Result<(usize, usize), String> {
    match int_list::<usize>(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        other => Err(format!("expected two entries, found {}", other.len())),
    }
}

fn boolean(s: &str) -> Result<bool, String> {
    match s.trim() {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        other => Err(format!("expected true or false, got `{other}`")),
    }
}

fn index_set(s: &str) -> Result<BTreeSet<usize>, String> {
    let t = s.trim();
    if !(t.starts_with('{') && t.ends_with('}')) {
        return Err(format!("expected a set `{{…}}`, got `{t}`"));
    }
    int_list::<usize>(t).map(|v| v.into_iter().collect())
}

/// Replaces word macros such as `x2` by their definitions.
fn expand(s: &str, macros: &[(String, String)]) -> String {
    let mut out = s.to_string();
    for (name, body) in macros {
        out = out.replace(name.as_str(), body);
    }
    out
}

fn word_expr(s: &str, macros: &[(String, String)]) -> Result<WordExpr, String> {
    let t = s.trim();
    let (basis, body) = match t.split_once(':') {
        Some((b, w)) => (Some(b.trim().to_string()), w),
        None => (None, t),
    };
    let word = WeylWord::from_str(&expand(body, macros)).map_err(|e| e.to_string())?;
    Ok(WordExpr { basis, word })
}

fn weight_expr(s: &str) -> Result<WeightExpr, String> {
    let t = s.trim();
    match t {
        "half_hvee" => return Ok(WeightExpr::HalfHvee),
        "rho" => return Ok(WeightExpr::Rho),
        _ => {}
    }
    if let Some(k) = t.strip_prefix("cand.") {
        return k
            .parse()
            .map(WeightExpr::Candidate)
            .map_err(|_| format!("bad candidate reference `{t}`"));
    }
    let open = t.find('[').ok_or_else(|| {
        format!("expected `[..]`, `NAME[..]`, `half_hvee`, `rho` or `cand.N`, got `{t}`")
    })?;
    if !t.ends_with(']') {
        return Err(format!("unterminated coordinate list `{t}`"));
    }
    let coords = parse_rational_list(&t[open..]).map_err(|e| e.to_string())?;
    let name = t[..open].trim();
    if name.is_empty() {
        Ok(WeightExpr::Fundamental(coords))
    } else {
        Ok(WeightExpr::Basis(name.to_string(), coords))
    }
}

fn fields(s: &str, n: usize) -> Result<Vec<&str>, String> {
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    if parts.len() != n {
        return Err(format!(
            "expected {n} `;`-separated fields, found {}",
            parts.len()
        ));
    }
    Ok(parts)
}

fn weyl_identity(s: &str, macros: &[(String, String)]) -> Result<WeylIdentity, String> {
    let kind = s.split(';').next().unwrap_or("").trim();
    match kind {
        "apply" => {
            let f = fields(s, 4)?;
            Ok(WeylIdentity::Apply {
                word: word_expr(f[1], macros)?,
                from: weight_expr(f[2])?,
                to: weight_expr(f[3])?,
            })
        }
        "eq" | "inv" => {
            let f = fields(s, 3)?;
            let a = word_expr(f[1], macros)?;
            let b = word_expr(f[2], macros)?;
            Ok(if kind == "eq" {
                WeylIdentity::Equal { a, b }
            } else {
                WeylIdentity::Inverse { a, b }
            })
        }
        "negset" => {
            let f = fields(s, 5)?;
            let mode = match f[3] {
                "eq" => SetMode::Equal,
                "contains" => SetMode::Contains,
                other => return Err(format!("expected `eq` or `contains`, got `{other}`")),
            };
            Ok(WeylIdentity::NegativeSet {
                word: word_expr(f[1], macros)?,
                basis: f[2].to_string(),
                mode,
                set: index_set(f[4])?,
            })
        }
        "pairing" | "epsilon" => {
            let f = fields(s, 4)?;
            let weight = weight_expr(f[1])?;
            let basis = f[2].to_string();
            let values = parse_rational_list(f[3]).map_err(|e| e.to_string())?;
            Ok(if kind == "pairing" {
                WeylIdentity::Pairings {
                    weight,
                    basis,
                    values,
                }
            } else {
                WeylIdentity::Epsilon {
                    weight,
                    basis,
                    values,
                }
            })
        }
        other => Err(format!("unknown identity kind `{other}`")),
    }
}

fn generator_pair(s: &str) -> Result<(usize, usize), String> {
    match int_list::<usize>(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(format!("expected `s,t`, got `{s}`")),
    }
}

fn star_row(s: &str, macros: &[(String, String)]) -> Result<StarRow, String> {
    let kind = s.split(';').next().unwrap_or("").trim();
    match kind {
        "descent" | "rdescent" => {
            let f = fields(s, 3)?;
            let word = word_expr(f[1], macros)?;
            let set = index_set(f[2])?;
            Ok(if kind == "descent" {
                StarRow::Descent { word, set }
            } else {
                StarRow::RightDescent { word, set }
            })
        }
        "lstar" | "rstar" => {
            let f = fields(s, 4)?;
            let (st, t) = generator_pair(f[1])?;
            let x = word_expr(f[2], macros)?;
            let y = word_expr(f[3], macros)?;
            Ok(if kind == "lstar" {
                StarRow::LeftStar { s: st, t, x, y }
            } else {
                StarRow::RightStar { s: st, t, x, y }
            })
        }
        other => Err(format!("unknown table row kind `{other}`")),
    }
}

fn root_list(s: &str) -> Result<Vec<Root>, String> {
    s.split(';').map(|r| int_list::<i64>(r).map(Root)).collect()
}

/// Splits `prefix.N.rest` into `(N, rest)`.
fn numbered<'k>(key: &'k str, prefix: &str) -> Option<(usize, &'k str)> {
    let rest = key.strip_prefix(prefix)?.strip_prefix('.')?;
    let (n, tail) = match rest.split_once('.') {
        Some((n, t)) => (n, t),
        None => (rest, ""),
    };
    Some((n.parse().ok()?, tail))
}

fn build_record(raw: RawCase) -> Result<CaseRecord, LedgerError> {
    let id = format!("{}/{}", raw.system, raw.label);
    let system = Series::from_str(&raw.system)
        .ok()
        .filter(|s| !matches!(s, Series::D(_)))
        .ok_or_else(|| syntax(raw.line, format!("unsupported system `{}`", raw.system)))?;
    let rank = system.rank();
    let f = Fields::new(&raw, id.clone())?;

    let known = |k: &str| {
        REQUIRED.contains(&k)
            || matches!(
                k,
                "half_hvee"
                    | "printed_counts"
                    | "printed_two_rho_e"
                    | "e_count"
                    | "derived_subalgebra"
                    | "notes"
            )
            || k.starts_with("basis.")
            || k.starts_with("word.")
            || numbered(k, "weyl_identity").is_some_and(|(_, t)| t.is_empty())
            || numbered(k, "star_table").is_some_and(|(_, t)| t.is_empty())
            || numbered(k, "candidate").is_some_and(|(_, t)| CANDIDATE_FIELDS.contains(&t))
    };
    if let Some(e) = raw.entries.iter().find(|e| !known(&e.key)) {
        return Err(syntax(e.line, format!("unknown key `{}`", e.key)));
    }

    let e = f.required("pinning")?;
    let pinning: Vec<usize> = parse_with(e, int_list::<usize>)?;
    if pinning.is_empty() {
        return Err(f.invalid("pinning", "empty pinning"));
    }
    if let Some(i) = pinning.iter().find(|&&i| i == 0 || i > rank) {
        return Err(f.invalid("pinning", format!("index {i} outside 1..={rank}")));
    }

    let tau: Vec<i64> = parse_with(f.required("tau")?, int_list::<i64>)?;
    if tau.len() != rank {
        return Err(f.invalid(
            "tau",
            format!("expected {rank} values, found {}", tau.len()),
        ));
    }

    let dim_centralizer: usize =
        parse_with(f.required("dim_centralizer")?, |s| s.parse::<usize>())?;
    let dim_g = lie_dim(system);
    if dim_centralizer > dim_g || (dim_g - dim_centralizer) % 2 != 0 {
        return Err(f.invalid(
            "dim_centralizer",
            format!("dim g − dim g_e = {dim_g} − {dim_centralizer} is not an even non-negative orbit dimension"),
        ));
    }

    let component_group = f.required("component_group")?.value.clone();
    let counts = parse_with(f.required("counts")?, pair)?;

    let two_rho_e: Vec<i64> = parse_with(f.required("two_rho_e")?, int_list::<i64>)?;
    if two_rho_e.len() != rank {
        return Err(f.invalid(
            "two_rho_e",
            format!("expected {rank} values, found {}", two_rho_e.len()),
        ));
    }
    let standard_levi = parse_with(f.required("standard_levi")?, boolean)?;

    let printed_counts = f
        .optional("printed_counts")
        .map(|e| parse_with(e, pair))
        .transpose()?;
    let printed_two_rho_e = match f.optional("printed_two_rho_e") {
        Some(e) => {
            let v: Vec<i64> = parse_with(e, int_list::<i64>)?;
            if v.len() != rank {
                return Err(f.invalid("printed_two_rho_e", format!("expected {rank} values")));
            }
            Some(v)
        }
        None => None,
    };
    let half_hvee = match f.optional("half_hvee") {
        Some(e) => {
            let v = parse_with(e, parse_rational_list)?;
            if v.len() != rank {
                return Err(f.invalid("half_hvee", format!("expected {rank} values")));
            }
            Some(Weight(v))
        }
        None => None,
    };
    let e_count = f.optional("e_count").map(|e| e.value.clone());
    let derived_subalgebra = f
        .optional("derived_subalgebra")
        .map(|e| parse_with(e, DerivedSubalgebra::from_str))
        .transpose()?;

    let mut macros: Vec<(String, String)> = Vec::new();
    let mut bases = BTreeMap::new();
    for e in &raw.entries {
        if let Some(name) = e.key.strip_prefix("word.") {
            parse_with(e, |s| WeylWord::from_str(s).map(|_| ()))?;
            macros.push((name.to_string(), e.value.clone()));
        }
        if let Some(name) = e.key.strip_prefix("basis.") {
            let roots = parse_with(e, root_list)?;
            if let Some(r) = roots.iter().find(|r| r.len() != rank) {
                return Err(f.invalid(&e.key, format!("root {r} does not have {rank} coordinates")));
            }
            bases.insert(name.to_string(), roots);
        }
    }
    macros.sort_by_key(|(name, _)| std::cmp::Reverse(name.len()));

    let candidates = build_candidates(&raw, &f, rank, &bases)?;

    let mut identities = Vec::new();
    let mut star_rows = Vec::new();
    for e in &raw.entries {
        if let Some((n, _)) = numbered(&e.key, "weyl_identity") {
            let id = parse_with(e, |s| weyl_identity(s, &macros))?;
            check_references_identity(&f, &e.key, &id, rank, &bases, &candidates, &half_hvee)?;
            identities.push((n, id));
        }
        if let Some((n, _)) = numbered(&e.key, "star_table") {
            let row = parse_with(e, |s| star_row(s, &macros))?;
            let words: Vec<&WordExpr> = match &row {
                StarRow::Descent { word, .. } | StarRow::RightDescent { word, .. } => vec![word],
                StarRow::LeftStar { x, y, .. } | StarRow::RightStar { x, y, .. } => vec![x, y],
            };
            for w in words {
                check_word_basis(&f, &e.key, w, &bases)?;
            }
            star_rows.push((n, row));
        }
    }
    identities.sort_by_key(|(n, _)| *n);
    star_rows.sort_by_key(|(n, _)| *n);

    let notes = raw
        .entries
        .iter()
        .filter(|e| e.key == "notes")
        .map(|e| e.value.clone())
        .collect();

    Ok(CaseRecord {
        system,
        label: raw.label,
        line: raw.line,
        pinning,
        tau,
        dim_centralizer,
        component_group,
        counts,
        two_rho_e,
        printed_counts,
        printed_two_rho_e,
        half_hvee,
        standard_levi,
        e_count,
        derived_subalgebra,
        bases,
        candidates,
        identities,
        star_rows,
        notes,
    })
}

fn lie_dim(system: Series) -> usize {
    match system {
        Series::E6 => 78,
        Series::E7 => 133,
        Series::E8 => 248,
        Series::F4 => 52,
        Series::G2 => 14,
        Series::D(n) => n * (2 * n - 1),
    }
}

fn build_candidates(
    raw: &RawCase,
    f: &Fields<'_>,
    rank: usize,
    bases: &BTreeMap<String, Vec<Root>>,
) -> Result<Vec<Candidate>, LedgerError> {
    let mut by_index: BTreeMap<usize, Vec<&Entry>> = BTreeMap::new();
    for e in &raw.entries {
        if let Some((n, _)) = numbered(&e.key, "candidate") {
            by_index.entry(n).or_default().push(e);
        }
    }
    let mut out = Vec::new();
    for (pos, (&n, _)) in by_index.iter().enumerate() {
        if n != pos + 1 {
            return Err(f.invalid(
                &format!("candidate.{n}"),
                format!(
                    "candidates must be numbered 1, 2, …; expected candidate.{}",
                    pos + 1
                ),
            ));
        }
        let key = |field: &str| format!("candidate.{n}.{field}");
        let get = |field: &str| f.optional(&key(field));

        let e = get("weight").ok_or_else(|| f.invalid(&key("weight"), "missing required field"))?;
        let weight: Vec<Q> = parse_with(e, parse_rational_list)?;
        if weight.len() != rank {
            return Err(f.invalid(
                &key("weight"),
                format!("expected {rank} values, found {}", weight.len()),
            ));
        }
        let e = get("route").ok_or_else(|| f.invalid(&key("route"), "missing required field"))?;
        let route = parse_with(e, Route::from_str)?;
        let integral_type = get("integral_type")
            .map(|e| parse_with(e, CartanType::from_str))
            .transpose()?;
        let lo2 = get("lo2").map(|e| parse_with(e, pair)).transpose()?;
        if route == Route::Lo2 && lo2.is_none() {
            return Err(f.invalid(&key("lo2"), "route LO2 needs `lo2 = dim g(λ), dim 𝒪_λ`"));
        }
        let bv_basis = get("bv_basis").map(|e| e.value.clone());
        if let Some(b) = &bv_basis {
            if !bases.contains_key(b) {
                return Err(f.invalid(&key("bv_basis"), format!("unknown basis `{b}`")));
            }
        }
        let bv_epsilon = get("bv_epsilon")
            .map(|e| parse_with(e, parse_rational_list))
            .transpose()?;
        let bv_partition = get("bv_partition")
            .map(|e| parse_with(e, Partition::from_str))
            .transpose()?;
        let orbit_partition = get("orbit_partition")
            .map(|e| parse_with(e, Partition::from_str))
            .transpose()?;
        out.push(Candidate {
            index: n,
            weight: Weight(weight),
            route,
            integral_type,
            lo2,
            bv_basis,
            bv_epsilon,
            bv_partition,
            orbit_partition,
        });
    }
    Ok(out)
}

fn check_word_basis(
    f: &Fields<'_>,
    field: &str,
    w: &WordExpr,
    bases: &BTreeMap<String, Vec<Root>>,
) -> Result<(), LedgerError> {
    match &w.basis {
        Some(b) if !bases.contains_key(b) => Err(f.invalid(field, format!("unknown basis `{b}`"))),
        _ => Ok(()),
    }
}

fn check_references_identity(
    f: &Fields<'_>,
    field: &str,
    id: &WeylIdentity,
    rank: usize,
    bases: &BTreeMap<String, Vec<Root>>,
    candidates: &[Candidate],
    half_hvee: &Option<Weight>,
) -> Result<(), LedgerError> {
    let basis = |name: &str| -> Result<(), LedgerError> {
        if bases.contains_key(name) {
            Ok(())
        } else {
            Err(f.invalid(field, format!("unknown basis `{name}`")))
        }
    };
    let weight = |w: &WeightExpr| -> Result<(), LedgerError> {
        match w {
            WeightExpr::Fundamental(v) if v.len() != rank => Err(f.invalid(
                field,
                format!("weight {w} does not have {rank} coordinates"),
            )),
            WeightExpr::Basis(name, _) => basis(name),
            WeightExpr::Candidate(k) if *k == 0 || *k > candidates.len() => {
                Err(f.invalid(field, format!("no candidate {k}")))
            }
            WeightExpr::HalfHvee if half_hvee.is_none() => {
                Err(f.invalid(field, "refers to half_hvee, which the case does not set"))
            }
            _ => Ok(()),
        }
    };
    match id {
        WeylIdentity::Apply { word, from, to } => {
            check_word_basis(f, field, word, bases)?;
            weight(from)?;
            weight(to)
        }
        WeylIdentity::Equal { a, b } | WeylIdentity::Inverse { a, b } => {
            check_word_basis(f, field, a, bases)?;
            check_word_basis(f, field, b, bases)
        }
        WeylIdentity::NegativeSet { word, basis: b, .. } => {
            check_word_basis(f, field, word, bases)?;
            basis(b)
        }
        WeylIdentity::Pairings {
            weight: w,
            basis: b,
            ..
        }
        | WeylIdentity::Epsilon {
            weight: w,
            basis: b,
            ..
        } => {
            weight(w)?;
            basis(b)
        }
    }
}

/// Parses a single weight expression, for callers outside the case file.
pub fn parse_weight_expr(s: &str) -> Result<WeightExpr, String> {
    weight_expr(s)
}
