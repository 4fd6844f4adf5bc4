use crate::{As, Color, ColorSet, Operad, OperadError};

/// An element `(a, x, u)` of `Bud_𝒞(O)`: an output color `a`, an element `x`
/// of the ground operad and a word `u` of input colors with `|u| = |x|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BudElem<E> {
    pub out: Color,
    pub ground: E,
    pub ins: Vec<Color>,
}

impl<E> BudElem<E> {
    pub fn new(out: Color, ground: E, ins: Vec<Color>) -> Self {
        BudElem { out, ground, ins }
    }
}

/// The bud operad `Bud_𝒞(O)` over a monochrome ground operad `O`.
///
/// Composition acts on the ground component and splices the color words:
/// `(a, x, u) ∘_i (b, y, v) = (a, x ∘_i y, u[i ← v])`, defined iff `b = u_i`.
/// Over a single color, elements are rendered as their ground element.
#[derive(Clone, Debug)]
pub struct Bud<O> {
    ground: O,
    colors: ColorSet,
}

impl<O: Operad> Bud<O> {
    pub fn new(ground: O, colors: ColorSet) -> Result<Self, OperadError> {
        if ground.color_count() != 1 {
            return Err(OperadError::Incompatible(
                "the Bud construction needs a monochrome ground operad".into(),
            ));
        }
        Ok(Bud { ground, colors })
    }

    pub fn ground(&self) -> &O {
        &self.ground
    }

    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    /// Builds `(out, x, ins)` after checking colors and arity.
    pub fn element(
        &self,
        out: Color,
        ground: O::Elem,
        ins: Vec<Color>,
    ) -> Result<BudElem<O::Elem>, OperadError> {
        for &c in std::iter::once(&out).chain(&ins) {
            if !self.colors.contains(c) {
                return Err(OperadError::UnknownColor(c.to_string()));
            }
        }
        let n = self.ground.arity(&ground);
        if n != ins.len() {
            return Err(OperadError::ArityMismatch {
                expected: n,
                found: ins.len(),
            });
        }
        Ok(BudElem { out, ground, ins })
    }

    /// Builds an element from color tokens.
    pub fn element_from_tokens(
        &self,
        out: &str,
        ground: O::Elem,
        ins: &[&str],
    ) -> Result<BudElem<O::Elem>, OperadError> {
        let out = self.colors.lookup(out)?;
        let ins = ins
            .iter()
            .map(|t| self.colors.lookup(t))
            .collect::<Result<Vec<_>, _>>()?;
        self.element(out, ground, ins)
    }

    fn render_colors(&self, ins: &[Color]) -> String {
        ins.iter()
            .map(|&c| self.colors.token(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<O: Operad> Operad for Bud<O> {
    type Elem = BudElem<O::Elem>;

    fn color_count(&self) -> usize {
        self.colors.len()
    }

    fn color_name(&self, c: Color) -> String {
        if self.colors.contains(c) {
            self.colors.token(c).to_string()
        } else {
            format!("#{c}")
        }
    }

    fn arity(&self, x: &Self::Elem) -> usize {
        x.ins.len()
    }

    fn out_color(&self, x: &Self::Elem) -> Color {
        x.out
    }

    fn in_color(&self, x: &Self::Elem, i: usize) -> Color {
        x.ins[i - 1]
    }

    fn in_colors(&self, x: &Self::Elem) -> Vec<Color> {
        x.ins.clone()
    }

    fn unit(&self, c: Color) -> Result<Self::Elem, OperadError> {
        if !self.colors.contains(c) {
            return Err(OperadError::UnknownColor(c.to_string()));
        }
        Ok(BudElem {
            out: c,
            ground: self.ground.unit(0)?,
            ins: vec![c],
        })
    }

    fn compose_unchecked(&self, x: &Self::Elem, i: usize, y: &Self::Elem) -> Self::Elem {
        let mut ins = Vec::with_capacity(x.ins.len() + y.ins.len() - 1);
        ins.extend_from_slice(&x.ins[..i - 1]);
        ins.extend_from_slice(&y.ins);
        ins.extend_from_slice(&x.ins[i..]);
        BudElem {
            out: x.out,
            ground: self.ground.compose_unchecked(&x.ground, i, &y.ground),
            ins,
        }
    }

    fn full_compose_unchecked(&self, x: &Self::Elem, ys: &[&Self::Elem]) -> Self::Elem {
        let grounds: Vec<&O::Elem> = ys.iter().map(|y| &y.ground).collect();
        let ins = ys.iter().flat_map(|y| y.ins.iter().copied()).collect();
        BudElem {
            out: x.out,
            ground: self.ground.full_compose_unchecked(&x.ground, &grounds),
            ins,
        }
    }

    fn render(&self, x: &Self::Elem) -> String {
        let g = self.ground.render(&x.ground);
        if self.colors.is_monochrome() {
            g
        } else {
            format!(
                "({}, {}, [{}])",
                self.colors.token(x.out),
                g,
                self.render_colors(&x.ins)
            )
        }
    }

    fn parse(&self, s: &str) -> Result<Self::Elem, OperadError> {
        let t = s.trim();
        if self.colors.is_monochrome() && !(t.starts_with('(') && t.ends_with("])")) {
            let ground = self.ground.parse(t)?;
            let n = self.ground.arity(&ground);
            return Ok(BudElem {
                out: 0,
                ground,
                ins: vec![0; n],
            });
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| OperadError::parse(s, "expected (out, element, [colors])"))?;
        let (out, rest) = inner
            .split_once(',')
            .ok_or_else(|| OperadError::parse(s, "missing output color"))?;
        let (ground, ins) = rest
            .rsplit_once(", [")
            .or_else(|| rest.rsplit_once(",["))
            .ok_or_else(|| OperadError::parse(s, "missing input colors"))?;
        let ins = ins
            .strip_suffix(']')
            .ok_or_else(|| OperadError::parse(s, "unterminated input colors"))?;
        let ins: Vec<&str> = ins.split(',').map(str::trim).collect();
        let ground = self.ground.parse(ground.trim())?;
        self.element_from_tokens(out.trim(), ground, &ins)
    }

    fn elements(&self, n: usize) -> Option<Vec<Self::Elem>> {
        let grounds = self.ground.elements(n)?;
        let k = self.colors.len();
        let mut words: Vec<Vec<Color>> = vec![vec![]];
        for _ in 0..n {
            words = words
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for g in &grounds {
            for a in 0..k {
                for w in &words {
                    out.push(BudElem::new(a, g.clone(), w.clone()));
                }
            }
        }
        Some(out)
    }
}

/// The pruning map `(a, x, u) ↦ x`.
pub fn prune<E: Clone>(x: &BudElem<E>) -> E {
    x.ground.clone()
}

/// The colorization map `(a, x, u) ↦ (a, ⋆_{|x|}, u)` into `Bud_𝒞(As)`.
pub fn colorize<E>(x: &BudElem<E>) -> BudElem<<As as Operad>::Elem> {
    BudElem {
        out: x.out,
        ground: x.ins.len(),
        ins: x.ins.clone(),
    }
}
