use num_traits::Zero;

use super::poly::{Context, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `c_0 + sum_j c_j t_j` over a target context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub linear: Vec<Rational>,
    pub constant: Rational,
}

/// Each source variable is sent to an affine form in the target variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubstitution {
    pub source: Context,
    pub target: Context,
    pub images: Vec<AffineForm>,
}

impl AffineSubstitution {
    pub fn new(source: Context, target: Context, images: Vec<AffineForm>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::LengthMismatch { expected: source.len(), got: images.len() });
        }
        for f in &images {
            if f.linear.len() != target.len() {
                return Err(Error::LengthMismatch { expected: target.len(), got: f.linear.len() });
            }
        }
        Ok(AffineSubstitution { source, target, images })
    }

    pub fn image_poly(&self, i: usize) -> MultiPoly {
        let f = &self.images[i];
        let mut p = MultiPoly::constant(&self.target, f.constant.clone());
        for (j, c) in f.linear.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &MultiPoly::var(&self.target, j).scale(c);
            }
        }
        p
    }

    /// Value of the map at a point of the target space, as a point of the
    /// source space.
    pub fn apply_point(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        if point.len() != self.target.len() {
            return Err(Error::LengthMismatch { expected: self.target.len(), got: point.len() });
        }
        Ok(self
            .images
            .iter()
            .map(|f| {
                f.linear
                    .iter()
                    .zip(point)
                    .fold(f.constant.clone(), |acc, (c, x)| acc + c * x)
            })
            .collect())
    }

    /// `p ∘ s`.
    pub fn compose(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.context() != &self.source {
            return Err(Error::ContextMismatch(format!(
                "polynomial over {:?}, substitution from {:?}",
                p.context().names(),
                self.source.names()
            )));
        }
        let images: Vec<MultiPoly> = (0..self.images.len()).map(|i| self.image_poly(i)).collect();
        p.substitute(&self.target, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;

    #[test]
    fn compose_examples() {
        let src = Context::new(["x"]);
        let tgt = Context::new(["t"]);
        let x = MultiPoly::var(&src, 0);
        let t = MultiPoly::var(&tgt, 0);
        let s = AffineSubstitution::new(
            src.clone(),
            tgt.clone(),
            vec![AffineForm { linear: vec![rint(2)], constant: rint(1) }],
        )
        .unwrap();
        assert_eq!(s.compose(&x).unwrap(), &t.scale(&rint(2)) + &MultiPoly::one(&tgt));
        let s = AffineSubstitution::new(
            src.clone(),
            tgt.clone(),
            vec![AffineForm { linear: vec![rint(1)], constant: rint(-1) }],
        )
        .unwrap();
        let expect = &(&(&t * &t) - &t.scale(&rint(2))) + &MultiPoly::one(&tgt);
        assert_eq!(s.compose(&(&x * &x)).unwrap(), expect);
        assert!(s.compose(&t).is_err());
    }
}
