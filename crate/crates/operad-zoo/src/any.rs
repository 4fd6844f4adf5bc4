use operad_core::{As, Color, Operad, OperadError};

use crate::{ASchr, ASchrTree, Dias, DiasWord, FreeOperad, FreeTree, Mag, MagTree, Motz, MotzPath};

/// Any of the concrete operads of this crate, chosen at run time (for
/// instance from a system file).
#[derive(Clone, Debug)]
pub enum AnyOperad {
    As,
    Mag,
    Dias(Dias),
    Motz,
    ASchr,
    Free(FreeOperad),
}

/// An element of an [`AnyOperad`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnyElem {
    As(usize),
    Mag(MagTree),
    Dias(DiasWord),
    Motz(MotzPath),
    ASchr(ASchrTree),
    Free(FreeTree),
}

impl AnyOperad {
    /// Short name of the operad kind, as used in system files.
    pub fn kind(&self) -> &'static str {
        match self {
            AnyOperad::As => "as",
            AnyOperad::Mag => "mag",
            AnyOperad::Dias(_) => "dias",
            AnyOperad::Motz => "motz",
            AnyOperad::ASchr => "aschr",
            AnyOperad::Free(_) => "free",
        }
    }
}

macro_rules! dispatch {
    ($self:ident, $x:ident, |$op:ident, $e:ident| $body:expr) => {
        match ($self, $x) {
            (AnyOperad::As, AnyElem::As($e)) => {
                let $op = &As;
                $body
            }
            (AnyOperad::Mag, AnyElem::Mag($e)) => {
                let $op = &Mag;
                $body
            }
            (AnyOperad::Dias($op), AnyElem::Dias($e)) => $body,
            (AnyOperad::Motz, AnyElem::Motz($e)) => {
                let $op = &Motz;
                $body
            }
            (AnyOperad::ASchr, AnyElem::ASchr($e)) => {
                let $op = &ASchr;
                $body
            }
            (AnyOperad::Free($op), AnyElem::Free($e)) => $body,
            _ => panic!("element of another operad kind"),
        }
    };
}

macro_rules! wrap {
    ($self:ident, |$op:ident| $body:expr) => {
        match $self {
            AnyOperad::As => {
                let $op = &As;
                ($body).map(AnyElem::As)
            }
            AnyOperad::Mag => {
                let $op = &Mag;
                ($body).map(AnyElem::Mag)
            }
            AnyOperad::Dias($op) => ($body).map(AnyElem::Dias),
            AnyOperad::Motz => {
                let $op = &Motz;
                ($body).map(AnyElem::Motz)
            }
            AnyOperad::ASchr => {
                let $op = &ASchr;
                ($body).map(AnyElem::ASchr)
            }
            AnyOperad::Free($op) => ($body).map(AnyElem::Free),
        }
    };
}

fn unwrap_vec<T>(v: Option<Vec<T>>, f: impl Fn(T) -> AnyElem) -> Option<Vec<AnyElem>> {
    v.map(|v| v.into_iter().map(f).collect())
}

impl Operad for AnyOperad {
    type Elem = AnyElem;

    fn color_count(&self) -> usize {
        match self {
            AnyOperad::Free(f) => f.color_count(),
            _ => 1,
        }
    }

    fn color_name(&self, c: Color) -> String {
        match self {
            AnyOperad::Free(f) => f.color_name(c),
            _ => (c + 1).to_string(),
        }
    }

    fn arity(&self, x: &AnyElem) -> usize {
        dispatch!(self, x, |op, e| op.arity(e))
    }

    fn out_color(&self, x: &AnyElem) -> Color {
        dispatch!(self, x, |op, e| op.out_color(e))
    }

    fn in_color(&self, x: &AnyElem, i: usize) -> Color {
        dispatch!(self, x, |op, e| op.in_color(e, i))
    }

    fn in_colors(&self, x: &AnyElem) -> Vec<Color> {
        dispatch!(self, x, |op, e| op.in_colors(e))
    }

    fn unit(&self, c: Color) -> Result<AnyElem, OperadError> {
        wrap!(self, |op| op.unit(c))
    }

    fn compose_unchecked(&self, x: &AnyElem, i: usize, y: &AnyElem) -> AnyElem {
        match (self, x, y) {
            (AnyOperad::As, AnyElem::As(a), AnyElem::As(b)) => AnyElem::As(a + b - 1),
            (AnyOperad::Mag, AnyElem::Mag(a), AnyElem::Mag(b)) => AnyElem::Mag(Mag.compose_unchecked(a, i, b)),
            (AnyOperad::Dias(d), AnyElem::Dias(a), AnyElem::Dias(b)) => AnyElem::Dias(d.compose_unchecked(a, i, b)),
            (AnyOperad::Motz, AnyElem::Motz(a), AnyElem::Motz(b)) => AnyElem::Motz(Motz.compose_unchecked(a, i, b)),
            (AnyOperad::ASchr, AnyElem::ASchr(a), AnyElem::ASchr(b)) => {
                AnyElem::ASchr(ASchr.compose_unchecked(a, i, b))
            }
            (AnyOperad::Free(f), AnyElem::Free(a), AnyElem::Free(b)) => AnyElem::Free(f.compose_unchecked(a, i, b)),
            _ => panic!("element of another operad kind"),
        }
    }

    fn full_compose_unchecked(&self, x: &AnyElem, ys: &[&AnyElem]) -> AnyElem {
        macro_rules! inner {
            ($variant:ident, $op:expr, $a:expr) => {{
                let ys: Vec<_> = ys
                    .iter()
                    .map(|y| match y {
                        AnyElem::$variant(b) => b,
                        _ => panic!("element of another operad kind"),
                    })
                    .collect();
                AnyElem::$variant($op.full_compose_unchecked($a, &ys))
            }};
        }
        match (self, x) {
            (AnyOperad::As, AnyElem::As(a)) => inner!(As, As, a),
            (AnyOperad::Mag, AnyElem::Mag(a)) => inner!(Mag, Mag, a),
            (AnyOperad::Dias(d), AnyElem::Dias(a)) => inner!(Dias, d, a),
            (AnyOperad::Motz, AnyElem::Motz(a)) => inner!(Motz, Motz, a),
            (AnyOperad::ASchr, AnyElem::ASchr(a)) => inner!(ASchr, ASchr, a),
            (AnyOperad::Free(f), AnyElem::Free(a)) => inner!(Free, f, a),
            _ => panic!("element of another operad kind"),
        }
    }

    fn render(&self, x: &AnyElem) -> String {
        dispatch!(self, x, |op, e| op.render(e))
    }

    fn parse(&self, s: &str) -> Result<AnyElem, OperadError> {
        wrap!(self, |op| op.parse(s))
    }

    fn elements(&self, n: usize) -> Option<Vec<AnyElem>> {
        match self {
            AnyOperad::As => unwrap_vec(As.elements(n), AnyElem::As),
            AnyOperad::Mag => unwrap_vec(Mag.elements(n), AnyElem::Mag),
            AnyOperad::Dias(d) => unwrap_vec(d.elements(n), AnyElem::Dias),
            AnyOperad::Motz => unwrap_vec(Motz.elements(n), AnyElem::Motz),
            AnyOperad::ASchr => unwrap_vec(ASchr.elements(n), AnyElem::ASchr),
            AnyOperad::Free(f) => unwrap_vec(f.elements(n), AnyElem::Free),
        }
    }
}
