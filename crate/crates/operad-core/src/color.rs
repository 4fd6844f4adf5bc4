use std::collections::HashMap;
use std::fmt;

use crate::OperadError;

/// A color, stored as its position in a [`ColorSet`] (0-based).
pub type Color = usize;

/// A finite, ordered set of colors named by string tokens.
///
/// The order is the declaration order, not the lexicographic order of the
/// tokens, so `c_1 < c_2 < …` is whatever the caller listed first.
#[derive(Clone, PartialEq, Eq)]
pub struct ColorSet {
    tokens: Vec<String>,
    index: HashMap<String, Color>,
}

impl ColorSet {
    pub fn new<I, S>(tokens: I) -> Result<Self, OperadError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = ColorSet {
            tokens: Vec::new(),
            index: HashMap::new(),
        };
        for token in tokens {
            let token = token.into();
            if token.is_empty() {
                return Err(OperadError::UnknownColor("<empty token>".into()));
            }
            if set.index.contains_key(&token) {
                return Err(OperadError::Signature(format!("duplicate color {token}")));
            }
            set.index.insert(token.clone(), set.tokens.len());
            set.tokens.push(token);
        }
        if set.tokens.is_empty() {
            return Err(OperadError::Signature("a color set cannot be empty".into()));
        }
        Ok(set)
    }

    /// The single-color set used by monochrome operads.
    pub fn monochrome() -> Self {
        ColorSet::new(["1"]).expect("a singleton color set is valid")
    }

    /// Colors named `1`, `2`, …, `k`.
    pub fn numbered(k: usize) -> Self {
        ColorSet::new((1..=k).map(|i| i.to_string())).expect("numbered colors are distinct")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn is_monochrome(&self) -> bool {
        self.tokens.len() == 1
    }

    pub fn token(&self, c: Color) -> &str {
        &self.tokens[c]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn lookup(&self, token: &str) -> Result<Color, OperadError> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| OperadError::UnknownColor(token.to_string()))
    }

    pub fn contains(&self, c: Color) -> bool {
        c < self.tokens.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> {
        0..self.tokens.len()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.tokens).finish()
    }
}
