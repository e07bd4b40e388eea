use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use lie_bvduality::Partition;
use lie_losev::CartanType;
use lie_rootsys::{Root, Series, Weight, Q};
use lie_weyl::WeylWord;

/// How the dimension of the associated variety is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Strong dominance: `dim VA = 2(|Φ⁺| − |Φ_λ⁺|)`.
    Joseph,
    /// `λ+ρ` is `W`-conjugate to `½h∨` of a special orbit.
    BvSpecial,
    /// `dim g − dim g(λ) + dim 𝒪_λ` with recorded orbit data.
    Lo2,
    /// Taken as given; no dimension is replayed.
    Recorded,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Joseph => "JOSEPH",
            Route::BvSpecial => "BV_SPECIAL",
            Route::Lo2 => "LO2",
            Route::Recorded => "RECORDED",
        })
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "JOSEPH" => Ok(Route::Joseph),
            "BV_SPECIAL" => Ok(Route::BvSpecial),
            "LO2" => Ok(Route::Lo2),
            "RECORDED" => Ok(Route::Recorded),
            other => Err(format!("unknown route `{other}`")),
        }
    }
}

/// Whether `g_e` equals its derived subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedSubalgebra {
    /// `g_e = [g_e, g_e]`.
    Perfect,
    /// `g_e = ℂe ⊕ [g_e, g_e]`.
    Proper,
}

impl fmt::Display for DerivedSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivedSubalgebra::Perfect => "g_e = [g_e,g_e]",
            DerivedSubalgebra::Proper => "g_e != [g_e,g_e]",
        })
    }
}

impl FromStr for DerivedSubalgebra {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "g_e=[g_e,g_e]" => Ok(DerivedSubalgebra::Perfect),
            "g_e!=[g_e,g_e]" | "g_e≠[g_e,g_e]" => Ok(DerivedSubalgebra::Proper),
            _ => Err(format!(
                "expected `g_e = [g_e,g_e]` or `g_e != [g_e,g_e]`, got `{s}`"
            )),
        }
    }
}

/// A highest weight `λ+ρ` proposed for a case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub index: usize,
    /// `λ+ρ` in fundamental-weight coordinates.
    pub weight: Weight,
    pub route: Route,
    pub integral_type: Option<CartanType>,
    /// `(dim g(λ), dim 𝒪_λ)`.
    pub lo2: Option<(usize, usize)>,
    /// Name of a type `D` basis used for the Barbasch–Vogan replay.
    pub bv_basis: Option<String>,
    pub bv_epsilon: Option<Vec<Q>>,
    pub bv_partition: Option<Partition>,
    /// Partition of `𝒪_λ` inside an orthogonal factor of `g(λ)`.
    pub orbit_partition: Option<Partition>,
}

/// A Weyl word, optionally written in the reflections of a named basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordExpr {
    pub basis: Option<String>,
    pub word: WeylWord,
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.basis {
            Some(b) => write!(f, "{b}:{}", self.word),
            None => write!(f, "{}", self.word),
        }
    }
}

/// A weight written in one of the forms the case file accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightExpr {
    /// `[a_1, …, a_n]` over the fundamental weights.
    Fundamental(Vec<Q>),
    /// `NAME[b_1, …, b_n]`: pairings with the coroots of a named basis.
    Basis(String, Vec<Q>),
    /// `half_hvee`.
    HalfHvee,
    /// `cand.N`.
    Candidate(usize),
    /// `rho`.
    Rho,
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Q]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            WeightExpr::Fundamental(v) => write!(f, "[{}]", list(v)),
            WeightExpr::Basis(b, v) => write!(f, "{b}[{}]", list(v)),
            WeightExpr::HalfHvee => f.write_str("half_hvee"),
            WeightExpr::Candidate(k) => write!(f, "cand.{k}"),
            WeightExpr::Rho => f.write_str("rho"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetMode {
    Equal,
    Contains,
}

/// A relation between Weyl group elements and weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylIdentity {
    /// `w(μ) = ν`.
    Apply {
        word: WordExpr,
        from: WeightExpr,
        to: WeightExpr,
    },
    /// `a = b` as group elements.
    Equal { a: WordExpr, b: WordExpr },
    /// `a = b⁻¹`.
    Inverse { a: WordExpr, b: WordExpr },
    /// `{k : w(β_k) < 0}` for the roots of a named basis.
    NegativeSet {
        word: WordExpr,
        basis: String,
        mode: SetMode,
        set: BTreeSet<usize>,
    },
    /// `⟨μ, β_k∨⟩` for every root of a named basis.
    Pairings {
        weight: WeightExpr,
        basis: String,
        values: Vec<Q>,
    },
    /// ε-coordinates of `μ` on a named type `D` basis.
    Epsilon {
        weight: WeightExpr,
        basis: String,
        values: Vec<Q>,
    },
}

/// A row of a descent or star-operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarRow {
    /// Left descent set `𝓛(w)`.
    Descent {
        word: WordExpr,
        set: BTreeSet<usize>,
    },
    /// Right descent set.
    RightDescent {
        word: WordExpr,
        set: BTreeSet<usize>,
    },
    /// `*x = y` for the left star operation on `𝒟_L(s,t)`.
    LeftStar {
        s: usize,
        t: usize,
        x: WordExpr,
        y: WordExpr,
    },
    /// `x* = y` for the right star operation on `𝒟_R(s,t)`.
    RightStar {
        s: usize,
        t: usize,
        x: WordExpr,
        y: WordExpr,
    },
}

/// One rigid orbit with every claim attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRecord {
    pub system: Series,
    pub label: String,
    /// Line of the `[case …]` header.
    pub line: usize,
    pub pinning: Vec<usize>,
    pub tau: Vec<i64>,
    pub dim_centralizer: usize,
    pub component_group: String,
    /// `(|Φ⁺(0)|, |Φ⁺(1)|)`.
    pub counts: (usize, usize),
    /// `2ρ_e` over the simple roots.
    pub two_rho_e: Vec<i64>,
    /// Values as printed in the source table, where they differ.
    pub printed_counts: Option<(usize, usize)>,
    pub printed_two_rho_e: Option<Vec<i64>>,
    pub half_hvee: Option<Weight>,
    pub standard_levi: bool,
    /// The `|ℰ|` annotation, e.g. `1`, `2`, `>=2`.
    pub e_count: Option<String>,
    pub derived_subalgebra: Option<DerivedSubalgebra>,
    pub bases: BTreeMap<String, Vec<Root>>,
    pub candidates: Vec<Candidate>,
    pub identities: Vec<(usize, WeylIdentity)>,
    pub star_rows: Vec<(usize, StarRow)>,
    pub notes: Vec<String>,
}

impl CaseRecord {
    /// `SYSTEM/LABEL`.
    pub fn id(&self) -> String {
        format!("{}/{}", self.system, self.label)
    }

    pub fn is_special(&self) -> bool {
        self.half_hvee.is_some()
    }

    /// The values the source table prints for the counts.
    pub fn table_counts(&self) -> (usize, usize) {
        self.printed_counts.unwrap_or(self.counts)
    }

    /// The values the source table prints for `2ρ_e`.
    pub fn table_two_rho_e(&self) -> &[i64] {
        self.printed_two_rho_e.as_deref().unwrap_or(&self.two_rho_e)
    }
}
