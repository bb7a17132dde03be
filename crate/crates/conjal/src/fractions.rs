//! Zeros, zero divisors and invertible elements, inversion via conjugation,
//! and the lift of an algebra over an entire ring to the algebra over its
//! field of fractions, where every element with nonzero norm becomes
//! invertible.

use crate::algebra::{AlgebraSpec, Element};
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassTag {
    Zero,
    ZeroDivisor,
    Invertible,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Zero => write!(f, "Zero"),
            ClassTag::ZeroDivisor => write!(f, "ZeroDivisor"),
            ClassTag::Invertible => write!(f, "Invertible"),
        }
    }
}

/// Where an element sits: the zero set (zero and zero divisors, norm 0) or
/// the invertible set (norm nonzero). A zero divisor carries an annihilating
/// partner.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub tag: ClassTag,
    /// For a zero divisor `a`, a nonzero `b` with `a b = 0`; the conjugate
    /// always works since `a a* = 0` and conjugation is injective.
    pub witness: Option<Element>,
}

impl Classification {
    pub fn describe(&self) -> String {
        match (&self.tag, &self.witness) {
            (ClassTag::ZeroDivisor, Some(w)) => format!("ZeroDivisor with witness {w}"),
            (tag, _) => tag.to_string(),
        }
    }

    pub fn in_zero_set(&self) -> bool {
        matches!(self.tag, ClassTag::Zero | ClassTag::ZeroDivisor)
    }
}

/// Classifies by the norm form. Assumes a validated algebra over an entire
/// ring, where `a` is invertible in the lifted algebra iff `a a* != 0`.
pub fn classify(a: &Element) -> Classification {
    if a.is_zero() {
        return Classification { tag: ClassTag::Zero, witness: None };
    }
    let norm = a.norm_form().expect("validated algebra keeps a a* scalar");
    if norm.is_zero() {
        Classification { tag: ClassTag::ZeroDivisor, witness: Some(a.conj()) }
    } else {
        Classification { tag: ClassTag::Invertible, witness: None }
    }
}

/// The lift of an algebra over an entire ring to the algebra over its field
/// of fractions. Structure constants coincide entrywise under the embedding,
/// so the target is the same multiplication table read over the larger ring.
#[derive(Debug, Clone)]
pub struct LiftedAlgebra {
    source: Arc<AlgebraSpec>,
    target: Arc<AlgebraSpec>,
}

impl LiftedAlgebra {
    pub fn source(&self) -> &Arc<AlgebraSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AlgebraSpec> {
        &self.target
    }

    /// Coordinatewise embedding of the scalars; maps basis to basis
    /// index-for-index.
    pub fn lift_element(&self, a: &Element) -> Result<Element> {
        if a.algebra() != &self.source {
            return Err(Error::AlgebraMismatch {
                left: self.source.name().to_string(),
                right: a.algebra().name().to_string(),
            });
        }
        let ring = self.source.scalar();
        let coords = a.coords().iter().map(|c| ring.embed(c)).collect::<Result<Vec<_>>>()?;
        Element::from_coords(&self.target, coords)
    }
}

pub fn lift_algebra(spec: &Arc<AlgebraSpec>) -> Result<LiftedAlgebra> {
    let ring = spec.scalar();
    let field = ring.fraction_field()?;
    if field == ring {
        // already a field: the identity wrapper
        return Ok(LiftedAlgebra { source: Arc::clone(spec), target: Arc::clone(spec) });
    }
    let consts = spec
        .struct_consts()
        .iter()
        .map(|c| ring.embed(c))
        .collect::<Result<Vec<_>>>()?;
    let names = (0..spec.dim()).map(|i| spec.basis_name(i).to_string()).collect();
    let signs = (0..spec.dim()).map(|i| spec.conj_sign(i)).collect();
    let target =
        AlgebraSpec::new(spec.name(), field, spec.dim(), consts, Some(signs), Some(names))?;
    Ok(LiftedAlgebra { source: Arc::clone(spec), target })
}

/// `a^{-1} = N(a)^{-1} a*`, computed in the lifted algebra. Errors with the
/// classification when the norm vanishes.
pub fn invert(a: &Element) -> Result<Element> {
    let class = classify(a);
    if class.tag != ClassTag::Invertible {
        return Err(Error::NotInvertible(Box::new(class)));
    }
    let lift = lift_algebra(a.algebra())?;
    let lifted = lift.lift_element(a)?;
    let norm = lifted.norm_form()?;
    lifted.conj().scalar_mul(&norm.inv()?)
}

/// Left fraction `a^{-1} b` in the lifted algebra.
pub fn left_fraction(a: &Element, b: &Element) -> Result<Element> {
    a.check_same_algebra(b)?;
    let inv = invert(a)?;
    let lift = lift_algebra(a.algebra())?;
    inv.mul(&lift.lift_element(b)?)
}

/// Right fraction `b a^{-1}` in the lifted algebra.
pub fn right_fraction(b: &Element, a: &Element) -> Result<Element> {
    a.check_same_algebra(b)?;
    let inv = invert(a)?;
    let lift = lift_algebra(a.algebra())?;
    lift.lift_element(b)?.mul(&inv)
}

/// Scaling a fraction by a nonzero scalar `d` does not change it:
/// `(da)^{-1}(db) = a^{-1}b`. Exposed as a checkable predicate.
pub fn fraction_equiv_scale(d: &Element, a: &Element, b: &Element) -> Result<bool> {
    if !d.im_part().is_zero() || d.is_zero() {
        return Err(Error::Precondition(
            "d must be a nonzero element of the scalar part".into(),
        ));
    }
    d.check_same_algebra(a)?;
    let scaled = left_fraction(&d.mul(a)?, &d.mul(b)?)?;
    let plain = left_fraction(a, b)?;
    Ok(scaled == plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::scalar::ScalarRing as SR;

    fn elem(alg: &Arc<AlgebraSpec>, coords: &[i64]) -> Element {
        Element::from_i64_coords(alg, coords).unwrap()
    }

    #[test]
    fn classify_examples() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        assert_eq!(classify(&Element::zero(&q)).tag, ClassTag::Zero);
        assert_eq!(classify(&elem(&q, &[1, 1, 0, 0])).tag, ClassTag::Invertible);

        let s = catalog("split_complex", SR::Rationals).unwrap();
        let z = elem(&s, &[1, 1]);
        let class = classify(&z);
        assert_eq!(class.tag, ClassTag::ZeroDivisor);
        let w = class.witness.unwrap();
        assert_eq!(w, elem(&s, &[1, -1]));
        assert!(!w.is_zero());
        assert!(z.mul(&w).unwrap().is_zero());
    }

    #[test]
    fn zero_set_closed_under_conjugation() {
        let s = catalog("split_quaternion", SR::Rationals).unwrap();
        for coords in [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [2, 1, 2, 1]] {
            let a = elem(&s, &coords);
            if classify(&a).in_zero_set() {
                assert!(classify(&a.conj()).in_zero_set());
            }
        }
    }

    #[test]
    fn invert_examples() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        let two = elem(&q, &[2, 0, 0, 0]);
        let inv = invert(&two).unwrap();
        assert_eq!(inv.to_string(), "1/2");

        let i = Element::basis(&q, 1).unwrap();
        assert_eq!(invert(&i).unwrap(), i.neg());

        let a = elem(&q, &[1, 1, 1, 1]);
        let inv = invert(&a).unwrap();
        assert_eq!(inv.to_string(), "1/4 - 1/4*i - 1/4*j - 1/4*k");
        assert!(a.mul(&inv).unwrap().is_one());
        assert!(inv.mul(&a).unwrap().is_one());
    }

    #[test]
    fn invert_from_integers_lands_in_rationals() {
        let q = catalog("quaternion", SR::Integers).unwrap();
        let a = elem(&q, &[1, 1, 0, 0]);
        let inv = invert(&a).unwrap();
        assert_eq!(inv.algebra().scalar(), SR::Rationals);
        let lifted = lift_algebra(&q).unwrap().lift_element(&a).unwrap();
        assert!(lifted.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn invert_rejects_zero_divisors_with_classification() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let z = elem(&s, &[1, 1]);
        match invert(&z) {
            Err(Error::NotInvertible(class)) => {
                assert_eq!(class.tag, ClassTag::ZeroDivisor);
                assert!(class.witness.is_some());
            }
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn double_inversion_is_the_lift() {
        let q = catalog("quaternion", SR::Integers).unwrap();
        let a = elem(&q, &[2, -1, 0, 3]);
        let lift = lift_algebra(&q).unwrap();
        assert_eq!(invert(&invert(&a).unwrap()).unwrap(), lift.lift_element(&a).unwrap());
    }

    #[test]
    fn lift_preserves_structure_constants() {
        let q = catalog("quaternion", SR::Integers).unwrap();
        let lift = lift_algebra(&q).unwrap();
        assert_eq!(lift.target().scalar(), SR::Rationals);
        let ring = SR::Integers;
        for (a, b) in q.struct_consts().iter().zip(lift.target().struct_consts()) {
            assert_eq!(&ring.embed(a).unwrap(), b);
        }
        // index-for-index basis mapping and homomorphism spot check: i*j = k
        let i = Element::basis(&q, 1).unwrap();
        let j = Element::basis(&q, 2).unwrap();
        let k = Element::basis(&q, 3).unwrap();
        let li = lift.lift_element(&i).unwrap();
        let lj = lift.lift_element(&j).unwrap();
        assert_eq!(li.mul(&lj).unwrap(), lift.lift_element(&k).unwrap());
        assert_eq!(li, Element::basis(lift.target(), 1).unwrap());
    }

    #[test]
    fn lift_over_non_entire_ring_fails() {
        let q = catalog("quaternion", SR::ModN(6)).unwrap();
        assert_eq!(lift_algebra(&q).err(), Some(Error::NotEntire(SR::ModN(6))));
    }

    #[test]
    fn lift_on_field_is_identity_wrapper() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        let lift = lift_algebra(&q).unwrap();
        assert!(Arc::ptr_eq(lift.source(), lift.target()));
    }

    #[test]
    fn fraction_examples() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        let two = elem(&q, &[2, 0, 0, 0]);
        let i = Element::basis(&q, 1).unwrap();
        assert_eq!(left_fraction(&two, &i).unwrap().to_string(), "1/2*i");
        assert!(left_fraction(&i, &i).unwrap().is_one());

        // noncommutativity witness: left and right fractions differ
        let j = Element::basis(&q, 2).unwrap();
        let k = Element::basis(&q, 3).unwrap();
        assert_eq!(left_fraction(&j, &i).unwrap(), k);
        assert_eq!(right_fraction(&i, &j).unwrap(), k.neg());
    }

    #[test]
    fn fraction_scaling_equivalence() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        let d3 = elem(&q, &[3, 0, 0, 0]);
        let i = Element::basis(&q, 1).unwrap();
        let b = elem(&q, &[1, 0, 1, 0]);
        assert!(fraction_equiv_scale(&d3, &i, &b).unwrap());
        assert!(fraction_equiv_scale(&Element::one(&q), &i, &b).unwrap());
        let dneg = elem(&q, &[-2, 0, 0, 0]);
        let a = elem(&q, &[1, 1, 0, 0]);
        let k = Element::basis(&q, 3).unwrap();
        assert!(fraction_equiv_scale(&dneg, &a, &k).unwrap());
    }

    #[test]
    fn fraction_scaling_preconditions() {
        let q = catalog("quaternion", SR::Rationals).unwrap();
        let i = Element::basis(&q, 1).unwrap();
        let b = Element::one(&q);
        assert!(matches!(fraction_equiv_scale(&i, &i, &b), Err(Error::Precondition(_))));
        assert!(matches!(
            fraction_equiv_scale(&Element::zero(&q), &i, &b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classification_survives_the_lift() {
        let algs = ["quaternion", "split_complex", "dual", "split_quaternion"];
        for name in algs {
            let alg = catalog(name, SR::Integers).unwrap();
            let lift = lift_algebra(&alg).unwrap();
            let n = alg.dim();
            for seed in 0..40i64 {
                let coords: Vec<i64> = (0..n).map(|i| (seed * 7 + i as i64 * 3) % 5 - 2).collect();
                let a = elem(&alg, &coords);
                let lifted = lift.lift_element(&a).unwrap();
                assert_eq!(classify(&a).tag, classify(&lifted).tag, "{name} {coords:?}");
            }
        }
    }
}
