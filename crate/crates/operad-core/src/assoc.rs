use crate::{Color, Operad, OperadError};

/// The associative operad: one element `⋆_n` per arity `n ≥ 1`, with
/// `⋆_n ∘_i ⋆_m = ⋆_{n+m−1}`. Elements are represented by their arity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct As;

impl Operad for As {
    type Elem = usize;

    fn color_count(&self) -> usize {
        1
    }

    fn arity(&self, x: &usize) -> usize {
        *x
    }

    fn out_color(&self, _x: &usize) -> Color {
        0
    }

    fn in_color(&self, _x: &usize, _i: usize) -> Color {
        0
    }

    fn unit(&self, c: Color) -> Result<usize, OperadError> {
        if c == 0 {
            Ok(1)
        } else {
            Err(OperadError::UnknownColor(self.color_name(c)))
        }
    }

    fn compose_unchecked(&self, x: &usize, _i: usize, y: &usize) -> usize {
        x + y - 1
    }

    fn full_compose_unchecked(&self, x: &usize, ys: &[&usize]) -> usize {
        x + ys.iter().map(|y| **y).sum::<usize>() - ys.len()
    }

    fn render(&self, x: &usize) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<usize, OperadError> {
        match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            Ok(_) => Err(OperadError::parse(s, "arity must be positive")),
            Err(e) => Err(OperadError::parse(s, e.to_string())),
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<usize>> {
        Some(if n == 0 { vec![] } else { vec![n] })
    }
}
