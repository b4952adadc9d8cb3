//! The constructive Capelli theorem and the polynomials it produces:
//! central preimages of invariant operators, eigenvalue polynomials by two
//! routes, and the interpolation bases they are compared against.

mod eigen;
mod jack;
mod normalize;
mod preimage;

use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactmath::{lin_solve, Context, Monomial, MultiPoly, Rational, RationalMatrix, SparseEchelon, SparseVec};
use crate::hooks::Weight;

pub use eigen::{ia_star_basis, CapelliSolver, MainReport};
pub use jack::{
    deformed_power_sum, lambda_natural_basis, lambda_natural_check, sp_star, theta_one_family, verify_sv, SvReport,
    ThetaOneFamily,
};
pub use normalize::{sigma_normalize, CycleDecomposition};
pub use preimage::{block_preimage, symbol_preimage, PreimageSolver};

/// An eigenvalue polynomial on `𝔞*` together with its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPoly {
    pub lambda: Weight,
    pub d: usize,
    pub poly: MultiPoly,
}

impl EigenPoly {
    pub fn eval(&self, mu: &Weight) -> Result<Rational> {
        mu.expect_frame(self.lambda.frame)?;
        self.poly.eval(&mu.coords)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lambda": self.lambda.to_json(),
            "d": self.d,
            "poly": self.poly.to_json(),
        })
    }
}

/// Linearly independent products of generators, filtered by degree.
/// `generators[i]` lists the generator degrees multiplied to get `polys[i]`.
#[derive(Clone, Debug)]
pub struct InterpolationBasis {
    pub context: Context,
    pub polys: Vec<MultiPoly>,
    pub generators: Vec<Vec<u32>>,
}

impl InterpolationBasis {
    /// Keeps the products that enlarge the span, in the given order.
    pub(crate) fn from_products(context: &Context, products: Vec<(Vec<u32>, MultiPoly)>) -> Self {
        let mut ech: SparseEchelon<Monomial> = SparseEchelon::new();
        let mut polys = Vec::new();
        let mut generators = Vec::new();
        for (g, p) in products {
            if ech.insert(&sparse(&p)) {
                polys.push(p);
                generators.push(g);
            }
        }
        InterpolationBasis { context: context.clone(), polys, generators }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Whether `p` lies in the span.
    pub fn contains(&self, p: &MultiPoly) -> bool {
        let mut ech: SparseEchelon<Monomial> = SparseEchelon::new();
        for q in &self.polys {
            ech.insert(&sparse(q));
        }
        ech.contains(&sparse(p))
    }

    /// Evaluation matrix, one row per point.
    pub fn evaluation_matrix(&self, points: &[Vec<Rational>]) -> Result<RationalMatrix> {
        let mut mat = RationalMatrix::zeros(points.len(), self.polys.len());
        for (i, x) in points.iter().enumerate() {
            for (j, p) in self.polys.iter().enumerate() {
                mat.set(i, j, p.eval(x)?);
            }
        }
        Ok(mat)
    }

    /// The unique element of the span taking `values` at `points`.
    pub fn interpolate(&self, points: &[Vec<Rational>], values: &[Rational]) -> Result<MultiPoly> {
        let mat = self.evaluation_matrix(points)?;
        if mat.rows() != mat.cols() || mat.rank() != mat.cols() {
            return Err(Error::Singular(format!(
                "{} points against {} basis polynomials, rank {}",
                mat.rows(),
                mat.cols(),
                mat.rank()
            )));
        }
        let sol = lin_solve(&mat, values).map_err(|_| Error::Singular("interpolation system".into()))?;
        let mut out = MultiPoly::zero(&self.context);
        for (c, p) in sol.particular.iter().zip(&self.polys) {
            if !c.is_zero() {
                out = &out + &p.scale(c);
            }
        }
        Ok(out)
    }
}

pub(crate) fn sparse(p: &MultiPoly) -> SparseVec<Monomial> {
    p.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
}

pub(crate) fn factorial(d: usize) -> Rational {
    (1..=d as i64).map(crate::exactmath::rint).fold(crate::exactmath::rint(1), |a, b| a * b)
}
