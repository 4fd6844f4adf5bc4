//! Reading and writing systems as JSON.
//!
//! ```json
//! {"ground": {"kind": "free", "params": {"generators": [{"name": "a", "arity": 2}]}},
//!  "colors": ["1", "2"],
//!  "rules": [{"out": "1", "elem": "a(*,*)", "ins": ["1", "2"]}],
//!  "initial": ["1"], "terminal": ["1", "2"]}
//! ```
//!
//! Ground kinds are `as`, `mag`, `dias` (`{"gamma": k}`), `motz`, `aschr`,
//! `free` (`{"generators": [{"name", "arity"}]}`) and `tree`
//! (`{"cap": m}`, saved back as the equivalent `free` signature). Colors may
//! be given as strings or numbers.

use operad_core::{BudElem, ColorSet, Operad};
use operad_zoo::{AnyOperad, Dias, FreeOperad, Signature};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::{BudError, BudSystem};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
enum Token {
    Text(String),
    Number(u64),
}

impl Token {
    fn text(&self) -> String {
        match self {
            Token::Text(s) => s.clone(),
            Token::Number(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Ground {
    kind: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    params: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleSpec {
    out: Token,
    elem: String,
    ins: Vec<Token>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    ground: Ground,
    colors: Vec<Token>,
    rules: Vec<RuleSpec>,
    initial: Vec<Token>,
    terminal: Vec<Token>,
}

#[derive(Deserialize)]
struct GenSpec {
    name: String,
    arity: usize,
}

fn param<'a>(g: &'a Ground, key: &str) -> Result<&'a Value, BudError> {
    g.params
        .get(key)
        .ok_or_else(|| BudError::Format(format!("ground kind {} needs the parameter {key:?}", g.kind)))
}

fn ground_of(g: &Ground) -> Result<AnyOperad, BudError> {
    Ok(match g.kind.as_str() {
        "as" => AnyOperad::As,
        "mag" => AnyOperad::Mag,
        "motz" => AnyOperad::Motz,
        "aschr" => AnyOperad::ASchr,
        "dias" => {
            let gamma = param(g, "gamma")?
                .as_u64()
                .and_then(|v| u8::try_from(v).ok())
                .ok_or_else(|| BudError::Format("gamma must be an integer in 0..=255".into()))?;
            AnyOperad::Dias(Dias::new(gamma))
        }
        "free" => {
            let gens: Vec<GenSpec> = serde_json::from_value(param(g, "generators")?.clone())
                .map_err(|e| BudError::Format(format!("generators: {e}")))?;
            let pairs: Vec<(String, usize)> = gens.into_iter().map(|s| (s.name, s.arity)).collect();
            AnyOperad::Free(FreeOperad::new(Signature::monochrome(&pairs)?))
        }
        "tree" => {
            let cap = param(g, "cap")?
                .as_u64()
                .filter(|&c| c >= 1)
                .ok_or_else(|| BudError::Format("cap must be a positive integer".into()))?;
            AnyOperad::Free(FreeOperad::new(Signature::tree(cap as usize)?))
        }
        other => return Err(BudError::Format(format!("unknown ground kind {other:?}"))),
    })
}

fn ground_spec(op: &AnyOperad) -> Ground {
    let params = match op {
        AnyOperad::Dias(d) => json!({ "gamma": d.gamma() }),
        AnyOperad::Free(f) => {
            let gens: Vec<Value> = f
                .signature()
                .generators()
                .iter()
                .map(|g| json!({ "name": g.name, "arity": g.arity() }))
                .collect();
            json!({ "generators": gens })
        }
        _ => Value::Null,
    };
    Ground {
        kind: op.kind().to_string(),
        params,
    }
}

/// Parses a system from its JSON text.
pub fn from_json(text: &str) -> Result<BudSystem<AnyOperad>, BudError> {
    let file: SystemFile = serde_json::from_str(text).map_err(|e| BudError::Format(e.to_string()))?;
    let ground = ground_of(&file.ground)?;
    let colors = ColorSet::new(file.colors.iter().map(Token::text))?;
    let lookup = |t: &Token| colors.lookup(&t.text()).map_err(BudError::from);
    let mut rules = Vec::with_capacity(file.rules.len());
    for r in &file.rules {
        let elem = ground.parse(&r.elem)?;
        let ins = r.ins.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        rules.push(BudElem::new(lookup(&r.out)?, elem, ins));
    }
    let initial = file.initial.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
    let terminal = file.terminal.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
    BudSystem::new(ground, colors, rules, initial, terminal)
}

/// Canonical JSON text of a system (pretty-printed, rules in canonical
/// order), which [`from_json`] reads back to the same system.
pub fn to_json(sys: &BudSystem<AnyOperad>) -> String {
    let colors = sys.colors();
    let tok = |c: usize| Token::Text(colors.token(c).to_string());
    let file = SystemFile {
        ground: ground_spec(sys.ground()),
        colors: colors.iter().map(tok).collect(),
        rules: sys
            .rules()
            .iter()
            .map(|r| RuleSpec {
                out: tok(r.out),
                elem: sys.ground().render(&r.ground),
                ins: r.ins.iter().map(|&c| tok(c)).collect(),
            })
            .collect(),
        initial: sys.initial().iter().map(|&c| tok(c)).collect(),
        terminal: sys.terminal().iter().map(|&c| tok(c)).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serializable");
    text.push('\n');
    text
}
