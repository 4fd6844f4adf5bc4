//! The term syntax shared by tree-shaped operads and the JSON files:
//! `name(child, …)` for an internal node, `*` for a leaf and `!c` for a
//! unit leaf of color `c`. A bare identifier is an atom, used by operads
//! whose elements are words (As, Dias, Motz) and by grammar files.

use operad_core::OperadError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Leaf,
    Unit(String),
    Atom(String),
    Node(String, Vec<Term>),
}

impl Term {
    pub fn parse(input: &str) -> Result<Term, OperadError> {
        let mut p = Parser {
            src: input,
            bytes: input.as_bytes(),
            pos: 0,
        };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing characters"));
        }
        Ok(t)
    }

    /// Number of `*`, `!c` and atom leaves.
    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Node(_, cs) => cs.iter().map(Term::leaf_count).sum(),
            _ => 1,
        }
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Term::Leaf => f.write_str("*"),
            Term::Unit(c) => write!(f, "!{c}"),
            Term::Atom(a) => f.write_str(a),
            Term::Node(name, cs) => {
                write!(f, "{name}(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'-' || b == b'.' || b == b'\''
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> OperadError {
        OperadError::parse(self.src, format!("{reason} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> Result<String, OperadError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && is_ident_byte(self.bytes[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn term(&mut self) -> Result<Term, OperadError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            None => Err(self.error("unexpected end of input")),
            Some(b'*') => {
                self.pos += 1;
                Ok(Term::Leaf)
            }
            Some(b'!') => {
                self.pos += 1;
                Ok(Term::Unit(self.ident()?))
            }
            Some(_) => {
                let name = self.ident()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b'(') {
                    return Ok(Term::Atom(name));
                }
                self.pos += 1;
                let mut children = vec![self.term()?];
                loop {
                    self.skip_ws();
                    match self.bytes.get(self.pos) {
                        Some(b',') => {
                            self.pos += 1;
                            children.push(self.term()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected ',' or ')'")),
                    }
                }
                Ok(Term::Node(name, children))
            }
        }
    }
}
