use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::uea::{bracket, Gen, UEAElement, Word};
use super::SuperDims;
use crate::exactmath::{rat, Rational};

/// Which triangular block comes first in a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwOrder {
    /// Lowering letters, then diagonal, then raising letters.
    LowerFirst,
    /// Raising letters, then diagonal, then lowering letters.
    RaisingFirst,
}

type Normal = Arc<BTreeMap<Word, Rational>>;

/// Rewrites words into PBW order by repeatedly fixing the leftmost
/// out-of-order adjacent pair. Results of individual words are memoized for
/// the lifetime of the normalizer.
pub struct PbwNormalizer {
    dims: SuperDims,
    order: PbwOrder,
    memo: HashMap<Word, Normal>,
}

impl PbwNormalizer {
    pub fn new(dims: SuperDims, order: PbwOrder) -> Self {
        PbwNormalizer { dims, order, memo: HashMap::new() }
    }

    fn key(&self, (i, j): Gen) -> (u8, u8, u8) {
        let block = match (i.cmp(&j), self.order) {
            (std::cmp::Ordering::Equal, _) => 1,
            (std::cmp::Ordering::Greater, PbwOrder::LowerFirst) => 0,
            (std::cmp::Ordering::Less, PbwOrder::LowerFirst) => 2,
            (std::cmp::Ordering::Less, PbwOrder::RaisingFirst) => 0,
            (std::cmp::Ordering::Greater, PbwOrder::RaisingFirst) => 2,
        };
        (block, i, j)
    }

    fn out_of_order(&self, a: Gen, b: Gen) -> bool {
        if a == b {
            return self.dims.gen_parity(a) == 1;
        }
        self.key(a) > self.key(b)
    }

    pub fn is_normal(&self, w: &[Gen]) -> bool {
        w.windows(2).all(|p| !self.out_of_order(p[0], p[1]))
    }

    fn word(&mut self, w: &[Gen]) -> Normal {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let pos = w.windows(2).position(|p| self.out_of_order(p[0], p[1]));
        let result = match pos {
            None => Arc::new(BTreeMap::from([(w.to_vec(), Rational::one())])),
            Some(p) => {
                let (a, b) = (w[p], w[p + 1]);
                let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
                let splice = |g: Gen| -> Word {
                    let mut v = Vec::with_capacity(w.len() - 1);
                    v.extend_from_slice(&w[..p]);
                    v.push(g);
                    v.extend_from_slice(&w[p + 2..]);
                    v
                };
                if a == b {
                    // x x = [x, x] / 2 for odd x
                    for (g, c) in bracket(self.dims, a, a) {
                        let sub = self.word(&splice(g));
                        accumulate(&mut acc, &sub, &(c * rat(1, 2)));
                    }
                } else {
                    let mut swapped = w.to_vec();
                    swapped.swap(p, p + 1);
                    let sign = if self.dims.gen_parity(a) * self.dims.gen_parity(b) == 1 {
                        -Rational::one()
                    } else {
                        Rational::one()
                    };
                    let sub = self.word(&swapped);
                    accumulate(&mut acc, &sub, &sign);
                    for (g, c) in bracket(self.dims, a, b) {
                        let sub = self.word(&splice(g));
                        accumulate(&mut acc, &sub, &c);
                    }
                }
                Arc::new(acc)
            }
        };
        self.memo.insert(w.to_vec(), result.clone());
        result
    }

    pub fn normalize(&mut self, a: &UEAElement) -> UEAElement {
        assert_eq!(a.dims(), self.dims, "normalizer ambient");
        let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in a.terms() {
            let sub = self.word(w);
            accumulate(&mut acc, &sub, c);
        }
        UEAElement::from_terms(self.dims, acc).expect("indices stay in range")
    }
}

fn accumulate(acc: &mut BTreeMap<Word, Rational>, sub: &BTreeMap<Word, Rational>, c: &Rational) {
    for (w, v) in sub {
        let e = acc.entry(w.clone()).or_insert_with(Rational::zero);
        *e += v * c;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

/// Normal form with the lowering block first.
pub fn pbw_normalize(a: &UEAElement) -> UEAElement {
    PbwNormalizer::new(a.dims(), PbwOrder::LowerFirst).normalize(a)
}

impl UEAElement {
    pub fn pbw_normalize(&self) -> UEAElement {
        pbw_normalize(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rint;

    #[test]
    fn examples() {
        let d = SuperDims::new(2, 0);
        let w = UEAElement::generator(d, (0, 1)).mul(&UEAElement::generator(d, (1, 0))).unwrap();
        assert_eq!(pbw_normalize(&w).to_string(), "E(1,1) + E(2,1)E(1,2) - E(2,2)");
        let ordered = UEAElement::generator(d, (1, 0)).mul(&UEAElement::generator(d, (0, 1))).unwrap();
        assert_eq!(pbw_normalize(&ordered), ordered);
        let d = SuperDims::new(1, 1);
        let x = UEAElement::generator(d, (0, 1));
        assert!(pbw_normalize(&x.mul(&x).unwrap()).is_zero());
    }

    #[test]
    fn odd_swap_sign() {
        let d = SuperDims::new(1, 1);
        let w = UEAElement::generator(d, (0, 1)).mul(&UEAElement::generator(d, (1, 0))).unwrap();
        let n = pbw_normalize(&w);
        let expect = UEAElement::from_terms(
            d,
            [
                (vec![(1, 0), (0, 1)], rint(-1)),
                (vec![(0, 0)], rint(1)),
                (vec![(1, 1)], rint(1)),
            ],
        )
        .unwrap();
        assert_eq!(n, expect);
    }
}
