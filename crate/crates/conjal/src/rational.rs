//! The algebra of rational mappings: expression trees over polynomials
//! closed under the inversion `(p(x))^{-1} = (p(x))* (p(x)(p(x))*)^{-1}`,
//! which is defined at every point that is not a root of `p`. No normal
//! form is attempted; expressions evaluate structurally.

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::fractions::{invert, lift_algebra};
use crate::polynomial::{root_test, Polynomial};
use crate::sample::Sampler;
use std::fmt;

#[derive(Debug, Clone)]
pub enum RationalExpr {
    Const(Element),
    Var,
    Sum(Box<RationalExpr>, Box<RationalExpr>),
    Prod(Box<RationalExpr>, Box<RationalExpr>),
    InvPoly {
        poly: Polynomial,
        /// Set when sampling found no point where the polynomial escapes the
        /// zero set. Construction is still allowed; evaluation will fail at
        /// every such point anyway.
        degenerate: bool,
    },
}

const DEGENERACY_SAMPLES: usize = 32;
const DEGENERACY_SEED: u64 = 0xD15EA5E;

impl RationalExpr {
    pub fn constant(e: Element) -> RationalExpr {
        RationalExpr::Const(e)
    }

    pub fn var() -> RationalExpr {
        RationalExpr::Var
    }

    pub fn sum(l: RationalExpr, r: RationalExpr) -> RationalExpr {
        RationalExpr::Sum(Box::new(l), Box::new(r))
    }

    pub fn prod(l: RationalExpr, r: RationalExpr) -> RationalExpr {
        RationalExpr::Prod(Box::new(l), Box::new(r))
    }

    /// Wraps a polynomial as a denominator. Probes a fixed set of sample
    /// points to flag generators that never leave the zero set.
    pub fn inv_poly(poly: Polynomial) -> Result<RationalExpr> {
        let alg = poly.algebra().clone();
        let mut sampler = Sampler::new(DEGENERACY_SEED);
        let mut degenerate = true;
        for _ in 0..DEGENERACY_SAMPLES {
            let v = sampler.element(&alg);
            if !root_test(&poly, &v)? {
                degenerate = false;
                break;
            }
        }
        Ok(RationalExpr::InvPoly { poly, degenerate })
    }

    /// True when any inverted denominator was flagged degenerate.
    pub fn degenerate_warning(&self) -> bool {
        match self {
            RationalExpr::Const(_) | RationalExpr::Var => false,
            RationalExpr::Sum(l, r) | RationalExpr::Prod(l, r) => {
                l.degenerate_warning() || r.degenerate_warning()
            }
            RationalExpr::InvPoly { degenerate, .. } => *degenerate,
        }
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalExpr::Const(c) => write!(f, "({c})"),
            RationalExpr::Var => write!(f, "x"),
            RationalExpr::Sum(l, r) => write!(f, "{l} + {r}"),
            RationalExpr::Prod(l, r) => {
                let wrap = |e: &RationalExpr| matches!(e, RationalExpr::Sum(..));
                if wrap(l) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                write!(f, "*")?;
                if wrap(r) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            RationalExpr::InvPoly { poly, .. } => write!(f, "inv({poly})"),
        }
    }
}

/// Evaluates in the lifted algebra, so an entire-ring ambient lands in its
/// fraction field where the inversions are exact. `InvPoly(p)` fails with
/// `RootOfDenominator` exactly at the roots of `p`.
pub fn reval(expr: &RationalExpr, v: &Element) -> Result<Element> {
    let lift = lift_algebra(v.algebra())?;
    let lifted_v = lift.lift_element(v)?;
    eval_inner(expr, v, &lifted_v)
}

fn eval_inner(expr: &RationalExpr, v: &Element, lifted_v: &Element) -> Result<Element> {
    match expr {
        RationalExpr::Const(c) => {
            c.check_same_algebra(v)?;
            lift_algebra(v.algebra())?.lift_element(c)
        }
        RationalExpr::Var => Ok(lifted_v.clone()),
        RationalExpr::Sum(l, r) => eval_inner(l, v, lifted_v)?.add(&eval_inner(r, v, lifted_v)?),
        RationalExpr::Prod(l, r) => eval_inner(l, v, lifted_v)?.mul(&eval_inner(r, v, lifted_v)?),
        RationalExpr::InvPoly { poly, .. } => {
            if root_test(poly, v)? {
                return Err(Error::RootOfDenominator {
                    poly: poly.to_string(),
                    point: v.to_string(),
                });
            }
            invert(&poly.eval(v)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, AlgebraSpec, Element};
    use crate::fractions::{classify, ClassTag};
    use crate::scalar::ScalarRing as SR;
    use std::sync::Arc;

    fn quat() -> Arc<AlgebraSpec> {
        catalog("quaternion", SR::Rationals).unwrap()
    }

    fn elem(alg: &Arc<AlgebraSpec>, coords: &[i64]) -> Element {
        Element::from_i64_coords(alg, coords).unwrap()
    }

    #[test]
    fn inv_poly_construction() {
        let q = quat();
        let x = Polynomial::var(&q);
        let e = RationalExpr::inv_poly(x).unwrap();
        assert!(!e.degenerate_warning());

        let two = Polynomial::constant(elem(&q, &[2, 0, 0, 0]));
        let e = RationalExpr::inv_poly(two).unwrap();
        assert!(!e.degenerate_warning());
        // a constant denominator inverts to the same value everywhere
        let mut s = Sampler::new(1);
        for _ in 0..10 {
            let v = s.element(&q);
            assert_eq!(reval(&e, &v).unwrap().to_string(), "1/2");
        }
    }

    #[test]
    fn degenerate_generator_is_flagged_but_constructible() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let p = Polynomial::constant(elem(&s, &[1, 1]));
        let e = RationalExpr::inv_poly(p).unwrap();
        assert!(e.degenerate_warning());
        // and every evaluation is a root-of-denominator error
        assert!(matches!(
            reval(&e, &Element::one(&s)),
            Err(Error::RootOfDenominator { .. })
        ));
    }

    #[test]
    fn reval_examples() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();

        let inv_x = RationalExpr::inv_poly(Polynomial::var(&q)).unwrap();
        assert_eq!(reval(&inv_x, &i).unwrap(), i.neg());

        let x_minus_i =
            Polynomial::var(&q).sub(&Polynomial::constant(i.clone())).unwrap();
        let e = RationalExpr::inv_poly(x_minus_i).unwrap();
        assert!(matches!(reval(&e, &i), Err(Error::RootOfDenominator { .. })));

        let v_vinv = RationalExpr::prod(
            RationalExpr::var(),
            RationalExpr::inv_poly(Polynomial::var(&q)).unwrap(),
        );
        let mut s = Sampler::new(4);
        for _ in 0..20 {
            let v = s.invertible(&q);
            assert!(reval(&v_vinv, &v).unwrap().is_one());
        }
    }

    #[test]
    fn inverse_is_two_sided_at_every_good_point() {
        let q = quat();
        let p = Polynomial::var(&q)
            .mul(&Polynomial::var(&q))
            .unwrap()
            .add(&Polynomial::constant(elem(&q, &[0, 1, 2, 0])))
            .unwrap();
        let inv = RationalExpr::inv_poly(p.clone()).unwrap();
        let mut s = Sampler::new(6);
        let mut checked = 0;
        while checked < 25 {
            let v = s.element(&q);
            if root_test(&p, &v).unwrap() {
                continue;
            }
            let w = reval(&inv, &v).unwrap();
            let value = p.eval(&v).unwrap();
            assert!(value.mul(&w).unwrap().is_one());
            assert!(w.mul(&value).unwrap().is_one());
            checked += 1;
        }
    }

    #[test]
    fn products_with_constants_match_direct_inversion() {
        let q = quat();
        let p = Polynomial::var(&q).add(&Polynomial::constant(elem(&q, &[1, 0, 0, 0]))).unwrap();
        let c = elem(&q, &[0, 1, 0, 2]);
        let e = RationalExpr::prod(
            RationalExpr::inv_poly(p.clone()).unwrap(),
            RationalExpr::constant(c.clone()),
        );
        let mut s = Sampler::new(8);
        let mut checked = 0;
        while checked < 25 {
            let v = s.element(&q);
            if root_test(&p, &v).unwrap() {
                continue;
            }
            let lhs = reval(&e, &v).unwrap();
            let rhs = invert(&p.eval(&v).unwrap()).unwrap().mul(&c).unwrap();
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }

    #[test]
    fn degree_zero_inversion_agrees_with_element_inversion() {
        let q = quat();
        let mut s = Sampler::new(10);
        for _ in 0..20 {
            let a = s.invertible(&q);
            let e = RationalExpr::inv_poly(Polynomial::constant(a.clone())).unwrap();
            let v = s.element(&q);
            assert_eq!(reval(&e, &v).unwrap(), invert(&a).unwrap());
        }
    }

    #[test]
    fn closure_under_sum_and_product() {
        let q = quat();
        let e1 = RationalExpr::inv_poly(Polynomial::var(&q)).unwrap();
        let e2 = RationalExpr::sum(RationalExpr::var(), RationalExpr::constant(Element::one(&q)));
        let sum = RationalExpr::sum(e1.clone(), e2.clone());
        let prod = RationalExpr::prod(e1.clone(), e2.clone());
        let mut s = Sampler::new(12);
        let mut checked = 0;
        while checked < 25 {
            let v = s.element(&q);
            let (Ok(a), Ok(b)) = (reval(&e1, &v), reval(&e2, &v)) else {
                continue;
            };
            assert_eq!(reval(&sum, &v).unwrap(), a.add(&b).unwrap());
            assert_eq!(reval(&prod, &v).unwrap(), a.mul(&b).unwrap());
            checked += 1;
        }
    }

    #[test]
    fn integer_ambient_lifts_to_rationals() {
        let q = catalog("quaternion", SR::Integers).unwrap();
        let e = RationalExpr::inv_poly(Polynomial::var(&q)).unwrap();
        let v = elem(&q, &[1, 1, 0, 0]);
        let w = reval(&e, &v).unwrap();
        assert_eq!(w.algebra().scalar(), SR::Rationals);
        assert_eq!(w.to_string(), "1/2 - 1/2*i");
        assert_eq!(classify(&w).tag, ClassTag::Invertible);
    }
}
