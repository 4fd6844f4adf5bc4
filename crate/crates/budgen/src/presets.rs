//! The example systems: pluriassociative words, Motzkin paths, Schröder
//! trees, unary-binary trees, perfect trees, balanced binary trees, Tamari
//! intervals, and hook systems.

use operad_core::{BudElem, ColorSet, Operad};
use operad_zoo::{AnyElem, AnyOperad, Dias, FreeOperad, Signature};

use crate::{BudError, BudSystem};

/// Parameters of the parametrized presets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresetParams {
    /// `γ` for `bdias` (default 1).
    pub gamma: Option<u8>,
    /// The arity set `B` for `btree` (default `{2, 3}`).
    pub arities: Option<Vec<usize>>,
}

/// Preset names with a one-line description, as listed by the CLI.
pub const PRESETS: &[(&str, &str)] = &[
    ("bdias", "words of Dias_γ from the rules 0a and a0 (--gamma)"),
    ("bp", "Motzkin paths without two consecutive horizontal steps (alias motz-nohh)"),
    ("bs", "Schröder trees over alternating Schröder trees"),
    ("bu", "unary-binary trees, two kinds of unary nodes"),
    ("btree", "B-perfect trees over corollas of arities in B (--arities)"),
    ("bbt", "balanced binary trees"),
    ("b1", "Tamari intervals, first system"),
    ("b2", "Tamari intervals, second system"),
    ("b3", "maximal Tamari intervals (alias tamari-max-intervals)"),
    ("hs-mag", "hook system of Mag generated by its binary corolla"),
    ("hs-motz", "hook system of Motz generated by H and UD"),
];

type Table<'a> = &'a [(usize, &'a str, &'a [usize])];

/// Builds a system whose colors are `1..=k`, from rules written with
/// 1-based colors and ground elements in the ground's text syntax.
fn tabulated(
    ground: AnyOperad,
    k: usize,
    rules: Table<'_>,
    initial: &[usize],
    terminal: &[usize],
) -> Result<BudSystem<AnyOperad>, BudError> {
    let mut parsed = Vec::with_capacity(rules.len());
    for &(out, elem, ins) in rules {
        let g = ground.parse(elem)?;
        parsed.push(BudElem::new(out - 1, g, ins.iter().map(|c| c - 1).collect()));
    }
    let zero_based = |v: &[usize]| v.iter().map(|c| c - 1).collect();
    BudSystem::new(
        ground,
        ColorSet::numbered(k),
        parsed,
        zero_based(initial),
        zero_based(terminal),
    )
}

fn free(gens: &[(&str, usize)]) -> Result<AnyOperad, BudError> {
    Ok(AnyOperad::Free(FreeOperad::new(Signature::monochrome(gens)?)))
}

fn hook(ground: AnyOperad, gens: &[&str]) -> Result<BudSystem<AnyOperad>, BudError> {
    let gens = gens.iter().map(|g| ground.parse(g)).collect::<Result<Vec<AnyElem>, _>>()?;
    BudSystem::hook_system(ground, gens)
}

/// `BDias_γ`: monochrome, rules `0a` and `a0` for `1 ≤ a ≤ γ`.
pub fn bdias(gamma: u8) -> Result<BudSystem<AnyOperad>, BudError> {
    let dias = Dias::new(gamma);
    let mut gens = Vec::new();
    for a in 1..=gamma {
        gens.push(AnyElem::Dias(dias.word(&[0, a])?));
        gens.push(AnyElem::Dias(dias.word(&[a, 0])?));
    }
    BudSystem::hook_system(AnyOperad::Dias(dias), gens)
}

/// `BBTree_B`: monochrome over the free operad on one generator `a<n>` of
/// each arity `n ∈ B`, the rules being these corollas.
pub fn btree(arities: &[usize]) -> Result<BudSystem<AnyOperad>, BudError> {
    let mut arities = arities.to_vec();
    arities.sort_unstable();
    arities.dedup();
    if arities.is_empty() || arities.contains(&0) {
        return Err(BudError::Invalid("btree needs a nonempty set of positive arities".into()));
    }
    let names: Vec<(String, usize)> = arities.iter().map(|&n| (format!("a{n}"), n)).collect();
    let op = FreeOperad::new(Signature::monochrome(&names)?);
    let gens = (0..names.len()).map(|i| AnyElem::Free(op.corolla_of(i))).collect();
    BudSystem::hook_system(AnyOperad::Free(op), gens)
}

/// A preset by name.
pub fn builtin(name: &str, params: &PresetParams) -> Result<BudSystem<AnyOperad>, BudError> {
    match name {
        "bdias" => bdias(params.gamma.unwrap_or(1)),
        "bp" | "motz-nohh" => tabulated(AnyOperad::Motz, 2, &[(1, "H", &[2, 2]), (1, "UD", &[1, 1, 1])], &[1], &[1, 2]),
        "bs" => tabulated(
            AnyOperad::ASchr,
            2,
            &[(1, "a(*,*)", &[1, 2]), (2, "b(*,*)", &[1, 2])],
            &[1],
            &[1, 2],
        ),
        "bu" => tabulated(
            free(&[("a", 1), ("b", 1), ("c", 2)])?,
            2,
            &[(1, "a(*)", &[2]), (1, "b(*)", &[2]), (2, "c(*,*)", &[1, 1])],
            &[1],
            &[2],
        ),
        "btree" => btree(params.arities.as_deref().unwrap_or(&[2, 3])),
        "bbt" => tabulated(
            AnyOperad::Mag,
            2,
            &[(1, "a(*,*)", &[1, 1]), (1, "a(*,*)", &[1, 2]), (1, "a(*,*)", &[2, 1]), (2, "*", &[1])],
            &[1],
            &[1],
        ),
        "b1" => tabulated(
            AnyOperad::Mag,
            3,
            &[
                (1, "a(*,*)", &[1, 1]),
                (1, "a(*,*)", &[2, 1]),
                (1, "a(*,*)", &[3, 2]),
                (2, "*", &[1]),
                (3, "a(*,*)", &[2, 1]),
            ],
            &[1],
            &[1],
        ),
        "b2" => tabulated(
            free(&[("a", 2), ("b", 2)])?,
            3,
            &[
                (1, "a(*,*)", &[1, 1]),
                (1, "a(*,*)", &[1, 2]),
                (1, "a(*,*)", &[2, 1]),
                (1, "b(*,*)", &[3, 2]),
                (2, "*", &[1]),
                (3, "a(*,*)", &[1, 1]),
                (3, "a(*,*)", &[1, 2]),
            ],
            &[1],
            &[1],
        ),
        "b3" | "tamari-max-intervals" => tabulated(
            free(&[("a", 2), ("b", 2)])?,
            5,
            &[
                (1, "a(*,*)", &[1, 1]),
                (1, "a(*,*)", &[2, 4]),
                (1, "a(*,*)", &[5, 2]),
                (1, "b(*,*)", &[3, 2]),
                (2, "*", &[1]),
                (3, "a(*,*)", &[1, 1]),
                (3, "a(*,*)", &[1, 2]),
                (4, "b(*,*)", &[3, 2]),
                (4, "a(*,*)", &[5, 2]),
                (5, "a(*,*)", &[2, 4]),
                (5, "b(*,*)", &[3, 2]),
            ],
            &[1],
            &[1],
        ),
        "hs-mag" => hook(AnyOperad::Mag, &["a(*,*)"]),
        "hs-motz" => hook(AnyOperad::Motz, &["H", "UD"]),
        _ => Err(BudError::UnknownPreset(name.to_string())),
    }
}
