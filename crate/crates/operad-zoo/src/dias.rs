use operad_core::{Color, Operad, OperadError};

/// A word on `{0} ∪ [γ]` with exactly one occurrence of `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiasWord(Vec<u8>);

impl DiasWord {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The γ-pluriassociative operad `Dias_γ`.
///
/// `u ∘_i v` replaces the `i`-th letter of `u` by `v`, in which every letter
/// `a` has first been raised to `max(a, u_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dias {
    gamma: u8,
}

impl Dias {
    pub fn new(gamma: u8) -> Self {
        Dias { gamma }
    }

    pub fn gamma(&self) -> u8 {
        self.gamma
    }

    pub fn word(&self, letters: &[u8]) -> Result<DiasWord, OperadError> {
        let shown = || letters.iter().map(|a| a.to_string()).collect::<String>();
        if letters.iter().filter(|&&a| a == 0).count() != 1 {
            return Err(OperadError::parse(&shown(), "a Dias word has exactly one 0"));
        }
        if let Some(&a) = letters.iter().find(|&&a| a > self.gamma) {
            return Err(OperadError::parse(
                &shown(),
                format!("letter {a} exceeds γ = {}", self.gamma),
            ));
        }
        Ok(DiasWord(letters.to_vec()))
    }

    /// Composition of two words, checking positions and letters.
    pub fn compose(&self, u: &DiasWord, i: usize, v: &DiasWord) -> Result<DiasWord, OperadError> {
        for w in [u, v] {
            if w.0.iter().any(|&a| a > self.gamma) {
                return Err(OperadError::Incompatible(format!(
                    "word with letters above γ = {}",
                    self.gamma
                )));
            }
        }
        self.partial_compose(u, i, v)
    }
}

impl Operad for Dias {
    type Elem = DiasWord;

    fn color_count(&self) -> usize {
        1
    }

    fn arity(&self, x: &DiasWord) -> usize {
        x.0.len()
    }

    fn out_color(&self, _x: &DiasWord) -> Color {
        0
    }

    fn in_color(&self, _x: &DiasWord, _i: usize) -> Color {
        0
    }

    fn unit(&self, c: Color) -> Result<DiasWord, OperadError> {
        if c == 0 {
            Ok(DiasWord(vec![0]))
        } else {
            Err(OperadError::UnknownColor(self.color_name(c)))
        }
    }

    fn compose_unchecked(&self, u: &DiasWord, i: usize, v: &DiasWord) -> DiasWord {
        let ui = u.0[i - 1];
        let mut w = Vec::with_capacity(u.0.len() + v.0.len() - 1);
        w.extend_from_slice(&u.0[..i - 1]);
        w.extend(v.0.iter().map(|&a| a.max(ui)));
        w.extend_from_slice(&u.0[i..]);
        DiasWord(w)
    }

    fn full_compose_unchecked(&self, u: &DiasWord, vs: &[&DiasWord]) -> DiasWord {
        let mut w = Vec::new();
        for (&ui, v) in u.0.iter().zip(vs) {
            w.extend(v.0.iter().map(|&a| a.max(ui)));
        }
        DiasWord(w)
    }

    fn render(&self, x: &DiasWord) -> String {
        if self.gamma <= 9 {
            x.0.iter().map(|&a| char::from(b'0' + a)).collect()
        } else {
            x.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    fn parse(&self, s: &str) -> Result<DiasWord, OperadError> {
        let s = s.trim();
        let letters: Vec<u8> = if s.contains('.') {
            s.split('.')
                .map(|p| p.parse::<u8>().map_err(|e| OperadError::parse(s, e.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.bytes()
                .map(|b| {
                    if b.is_ascii_digit() {
                        Ok(b - b'0')
                    } else {
                        Err(OperadError::parse(s, "expected digits"))
                    }
                })
                .collect::<Result<_, _>>()?
        };
        self.word(&letters)
    }

    fn elements(&self, n: usize) -> Option<Vec<DiasWord>> {
        let mut out = Vec::new();
        if n == 0 {
            return Some(out);
        }
        let base = self.gamma as usize;
        let others = n - 1;
        let total = base.checked_pow(others as u32)?;
        for zero in 0..n {
            for mut code in 0..total {
                let mut w = vec![0u8; n];
                for (p, slot) in w.iter_mut().enumerate() {
                    if p == zero {
                        continue;
                    }
                    *slot = (code % base) as u8 + 1;
                    code /= base;
                }
                out.push(DiasWord(w));
            }
        }
        out.sort();
        Some(out)
    }
}
