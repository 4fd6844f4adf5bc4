use operad_core::{Color, Operad, OperadError};

/// A Motzkin path given by its steps `U` (up), `H` (horizontal) and `D`
/// (down). A path with `n − 1` steps has arity `n`; the empty path is the
/// unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzPath(Vec<u8>);

impl MotzPath {
    pub fn new(steps: &str) -> Result<Self, OperadError> {
        let mut height: i64 = 0;
        for b in steps.bytes() {
            match b {
                b'U' => height += 1,
                b'D' => height -= 1,
                b'H' => {}
                _ => return Err(OperadError::parse(steps, "steps are U, H or D")),
            }
            if height < 0 {
                return Err(OperadError::parse(steps, "path goes below the axis"));
            }
        }
        if height != 0 {
            return Err(OperadError::parse(steps, "path does not end on the axis"));
        }
        Ok(MotzPath(steps.as_bytes().to_vec()))
    }

    pub fn steps(&self) -> &str {
        std::str::from_utf8(&self.0).expect("steps are ASCII")
    }

    /// Ordinate of the `i`-th point (1-based).
    pub fn height_at(&self, i: usize) -> i64 {
        self.0[..i - 1]
            .iter()
            .map(|b| match b {
                b'U' => 1,
                b'D' => -1,
                _ => 0,
            })
            .sum()
    }

    pub fn all(n: usize) -> Vec<MotzPath> {
        fn rec(left: usize, h: usize, cur: &mut Vec<u8>, out: &mut Vec<MotzPath>) {
            if left == 0 {
                if h == 0 {
                    out.push(MotzPath(cur.clone()));
                }
                return;
            }
            if h > left {
                return;
            }
            for (b, nh) in [(b'D', h.wrapping_sub(1)), (b'H', h), (b'U', h + 1)] {
                if b == b'D' && h == 0 {
                    continue;
                }
                cur.push(b);
                rec(left - 1, nh, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 1 {
            rec(n - 1, 0, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }
}

/// The operad of Motzkin paths: `a ∘_i b` inserts the path `b` at the
/// `i`-th point of `a`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Motz;

impl Operad for Motz {
    type Elem = MotzPath;

    fn color_count(&self) -> usize {
        1
    }

    fn arity(&self, x: &MotzPath) -> usize {
        x.0.len() + 1
    }

    fn out_color(&self, _x: &MotzPath) -> Color {
        0
    }

    fn in_color(&self, _x: &MotzPath, _i: usize) -> Color {
        0
    }

    fn unit(&self, c: Color) -> Result<MotzPath, OperadError> {
        if c == 0 {
            Ok(MotzPath(Vec::new()))
        } else {
            Err(OperadError::UnknownColor(self.color_name(c)))
        }
    }

    fn compose_unchecked(&self, a: &MotzPath, i: usize, b: &MotzPath) -> MotzPath {
        let mut steps = Vec::with_capacity(a.0.len() + b.0.len());
        steps.extend_from_slice(&a.0[..i - 1]);
        steps.extend_from_slice(&b.0);
        steps.extend_from_slice(&a.0[i - 1..]);
        MotzPath(steps)
    }

    fn full_compose_unchecked(&self, a: &MotzPath, bs: &[&MotzPath]) -> MotzPath {
        let mut steps = Vec::new();
        for (i, b) in bs.iter().enumerate() {
            steps.extend_from_slice(&b.0);
            if i < a.0.len() {
                steps.push(a.0[i]);
            }
        }
        MotzPath(steps)
    }

    /// The steps of the path, or `e` for the empty path.
    fn render(&self, x: &MotzPath) -> String {
        if x.0.is_empty() {
            "e".to_string()
        } else {
            x.steps().to_string()
        }
    }

    fn parse(&self, s: &str) -> Result<MotzPath, OperadError> {
        match s.trim() {
            "e" => Ok(MotzPath(Vec::new())),
            t => MotzPath::new(t),
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<MotzPath>> {
        Some(MotzPath::all(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MotzPath {
        MotzPath::new(s).unwrap()
    }

    #[test]
    fn splicing() {
        assert_eq!(Motz.partial_compose(&p(""), 1, &p("H")).unwrap(), p("H"));
        assert_eq!(Motz.partial_compose(&p("UD"), 2, &p("H")).unwrap(), p("UHD"));
        assert_eq!(Motz.partial_compose(&p("H"), 1, &p("H")).unwrap(), p("HH"));
        assert!(Motz.partial_compose(&p("H"), 3, &p("H")).is_err());
    }

    #[test]
    fn invalid_paths() {
        assert!(MotzPath::new("D").is_err());
        assert!(MotzPath::new("U").is_err());
        assert!(MotzPath::new("UX").is_err());
    }

    #[test]
    fn motzkin_numbers() {
        let counts: Vec<usize> = (1..=7).map(|n| MotzPath::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 21, 51]);
    }
}
