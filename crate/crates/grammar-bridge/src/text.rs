//! The line format shared by the three grammar kinds: `#` starts a comment,
//! `keyword args…` lines are directives, and `LHS -> RHS` lines are
//! productions.

use crate::GrammarError;

pub(crate) enum Line<'a> {
    Directive { line: usize, keyword: &'a str, args: Vec<&'a str> },
    Production { line: usize, lhs: &'a str, rhs: &'a str },
}

pub(crate) fn lines(text: &str) -> Result<Vec<Line<'_>>, GrammarError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = content.split_once("->") {
            let lhs = lhs.trim();
            check_symbol(lhs, line)?;
            out.push(Line::Production {
                line,
                lhs,
                rhs: rhs.trim(),
            });
        } else {
            let mut words = content.split_whitespace();
            let keyword = words.next().expect("nonempty line");
            let args: Vec<&str> = words.collect();
            for a in &args {
                check_symbol(a, line)?;
            }
            out.push(Line::Directive { line, keyword, args });
        }
    }
    Ok(out)
}

/// Symbols become color tokens, so they may not contain the characters
/// that delimit elements of bud operads.
pub(crate) fn check_symbol(s: &str, line: usize) -> Result<(), GrammarError> {
    if s.is_empty() || s.chars().any(|c| c.is_whitespace() || "(),[]*!#".contains(c)) {
        return Err(GrammarError::Syntax {
            line,
            message: format!("invalid symbol {s:?}"),
        });
    }
    Ok(())
}

pub(crate) fn single_arg<'a>(line: usize, keyword: &str, args: &[&'a str]) -> Result<&'a str, GrammarError> {
    match args {
        [a] => Ok(a),
        _ => Err(GrammarError::Syntax {
            line,
            message: format!("{keyword} takes exactly one symbol"),
        }),
    }
}

pub(crate) fn unknown_directive(line: usize, keyword: &str) -> GrammarError {
    GrammarError::Syntax {
        line,
        message: format!("unknown directive {keyword:?}"),
    }
}
