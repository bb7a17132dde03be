//! Noncommutative one-variable polynomials over an algebra with conjugation.
//!
//! A degree-k monomial is the interleaved word `a_0 x a_1 x ... x a_k`;
//! multiplication splices at the boundary coefficient, so the product of
//! degree-k and degree-m monomials has degree k+m. In a nonassociative
//! ambient the parenthesization of a product matters, so only monomial
//! trees are evaluated there and every canonicalizing operation refuses
//! with `NonAssociative` instead of picking a parenthesization.
//!
//! Polynomial equality is decided by the degree-graded coefficient tensor,
//! not by the monomial list: the tensor is the canonical form under which
//! addition collapses like terms.

use crate::algebra::{AlgebraSpec, Element};
use crate::error::{Error, Result};
use crate::fractions::{classify, lift_algebra};
use crate::linalg;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

fn require_assoc(alg: &Arc<AlgebraSpec>) -> Result<()> {
    if alg.is_associative() {
        Ok(())
    } else {
        Err(Error::NonAssociative(alg.name().to_string()))
    }
}

// ---------------------------------------------------------------------------
// Monomial trees
// ---------------------------------------------------------------------------

/// A fully parenthesized monomial. The order and grouping of the factors is
/// essential in a nonassociative algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum MonomialTree {
    Leaf(Element),
    Var,
    Prod(Box<MonomialTree>, Box<MonomialTree>),
}

impl MonomialTree {
    pub fn prod(left: MonomialTree, right: MonomialTree) -> MonomialTree {
        MonomialTree::Prod(Box::new(left), Box::new(right))
    }

    /// Number of variable leaves.
    pub fn degree(&self) -> usize {
        match self {
            MonomialTree::Leaf(_) => 0,
            MonomialTree::Var => 1,
            MonomialTree::Prod(l, r) => l.degree() + r.degree(),
        }
    }

    /// Evaluation respecting the tree's parenthesization; safe in any
    /// ambient.
    pub fn eval(&self, v: &Element) -> Result<Element> {
        match self {
            MonomialTree::Leaf(c) => {
                c.check_same_algebra(v)?;
                Ok(c.clone())
            }
            MonomialTree::Var => Ok(v.clone()),
            MonomialTree::Prod(l, r) => l.eval(v)?.mul(&r.eval(v)?),
        }
    }

    /// Rewrites the tree into interleaved form `a_0 x a_1 x ... x a_k`.
    /// Adjacent constants multiply; bare variable runs pick up unit
    /// coefficients. Only meaningful when the ambient is associative.
    pub fn flatten(&self, alg: &Arc<AlgebraSpec>) -> Result<Monomial> {
        require_assoc(alg)?;
        match self {
            MonomialTree::Leaf(c) => {
                if c.algebra() != alg {
                    return Err(Error::AlgebraMismatch {
                        left: alg.name().to_string(),
                        right: c.algebra().name().to_string(),
                    });
                }
                Ok(Monomial { coeffs: vec![c.clone()] })
            }
            MonomialTree::Var => {
                Ok(Monomial { coeffs: vec![Element::one(alg), Element::one(alg)] })
            }
            MonomialTree::Prod(l, r) => l.flatten(alg)?.mul(&r.flatten(alg)?),
        }
    }
}

// ---------------------------------------------------------------------------
// Interleaved monomials and polynomials
// ---------------------------------------------------------------------------

/// `a_0 x a_1 x ... x a_k`, stored as the coefficient list `[a_0, ..., a_k]`.
/// Degree 0 is the constant `a_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    coeffs: Vec<Element>,
}

impl Monomial {
    pub fn new(coeffs: Vec<Element>) -> Result<Monomial> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::InvalidSpec("monomial needs at least one coefficient".into()))?;
        for c in &coeffs[1..] {
            first.check_same_algebra(c)?;
        }
        Ok(Monomial { coeffs })
    }

    pub fn constant(c: Element) -> Monomial {
        Monomial { coeffs: vec![c] }
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        self.coeffs[0].algebra()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Boundary-product splice:
    /// `[a_0..a_k] * [b_0..b_m] = [a_0, ..., a_{k-1}, a_k b_0, b_1, ..., b_m]`.
    pub fn mul(&self, rhs: &Monomial) -> Result<Monomial> {
        self.coeffs[0].check_same_algebra(&rhs.coeffs[0])?;
        require_assoc(self.algebra())?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + rhs.coeffs.len() - 1);
        coeffs.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        coeffs.push(self.coeffs[self.coeffs.len() - 1].mul(&rhs.coeffs[0])?);
        coeffs.extend_from_slice(&rhs.coeffs[1..]);
        Ok(Monomial { coeffs })
    }

    /// Left-to-right evaluation `(((a_0 v) a_1) v) ...`; guarded because the
    /// interleaved form denotes a single function only in associative
    /// ambients.
    pub fn eval(&self, v: &Element) -> Result<Element> {
        require_assoc(self.algebra())?;
        self.coeffs[0].check_same_algebra(v)?;
        let mut acc = self.coeffs[0].clone();
        for c in &self.coeffs[1..] {
            acc = acc.mul(v)?.mul(c)?;
        }
        Ok(acc)
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Result<Monomial> {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = coeffs[0].scalar_mul(s)?;
        Ok(Monomial { coeffs })
    }

    pub fn conj_coeff_elements(&self) -> Vec<Element> {
        self.coeffs.iter().rev().map(Element::conj).collect()
    }

    /// `p(x) p(x)*` as a polynomial `r(y) = c y^k` in `y = x x*`:
    /// `c` is the product of the coefficient norms and `k` the degree.
    pub fn norm_poly(&self) -> Result<(Scalar, usize)> {
        require_assoc(self.algebra())?;
        let mut c = self.algebra().scalar().one();
        for a in &self.coeffs {
            c = c.mul(&a.norm_form()?)?;
        }
        Ok((c, self.degree()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_interleaved(f, &self.coeffs, |_| "x")
    }
}

fn write_interleaved<F>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[Element],
    var_at: F,
) -> fmt::Result
where
    F: Fn(usize) -> &'static str,
{
    let mut wrote = false;
    for (t, c) in coeffs.iter().enumerate() {
        if t > 0 {
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "{}", var_at(t - 1))?;
            wrote = true;
        }
        if !c.is_one() || coeffs.len() == 1 {
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "({c})")?;
            wrote = true;
        }
    }
    Ok(())
}

/// A finite sum of monomials over one algebra. The list is not canonical;
/// equality is decided through `to_tensor`.
#[derive(Debug, Clone)]
pub struct Polynomial {
    algebra: Arc<AlgebraSpec>,
    monomials: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero(alg: &Arc<AlgebraSpec>) -> Polynomial {
        Polynomial { algebra: Arc::clone(alg), monomials: Vec::new() }
    }

    pub fn constant(c: Element) -> Polynomial {
        let algebra = Arc::clone(c.algebra());
        Polynomial { algebra, monomials: vec![Monomial::constant(c)] }
    }

    /// The variable `x`, i.e. the monomial `1 x 1`.
    pub fn var(alg: &Arc<AlgebraSpec>) -> Polynomial {
        Polynomial {
            algebra: Arc::clone(alg),
            monomials: vec![Monomial { coeffs: vec![Element::one(alg), Element::one(alg)] }],
        }
    }

    pub fn from_monomials(alg: &Arc<AlgebraSpec>, monomials: Vec<Monomial>) -> Result<Polynomial> {
        for m in &monomials {
            if m.algebra() != alg {
                return Err(Error::AlgebraMismatch {
                    left: alg.name().to_string(),
                    right: m.algebra().name().to_string(),
                });
            }
        }
        Ok(Polynomial { algebra: Arc::clone(alg), monomials })
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn degree(&self) -> usize {
        self.monomials.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_same(&self, rhs: &Polynomial) -> Result<()> {
        if self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: rhs.algebra.name().to_string(),
            })
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.check_same(rhs)?;
        let mut monomials = self.monomials.clone();
        monomials.extend(rhs.monomials.iter().cloned());
        Ok(Polynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    pub fn neg(&self) -> Polynomial {
        let minus_one = self.algebra.scalar().from_i64(-1);
        let monomials = self
            .monomials
            .iter()
            .map(|m| m.scalar_mul(&minus_one).expect("same ring"))
            .collect();
        Polynomial { algebra: Arc::clone(&self.algebra), monomials }
    }

    pub fn sub(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.add(&rhs.neg())
    }

    /// Distributes over the monomial lists; degree adds.
    pub fn mul(&self, rhs: &Polynomial) -> Result<Polynomial> {
        self.check_same(rhs)?;
        require_assoc(&self.algebra)?;
        let mut monomials = Vec::with_capacity(self.monomials.len() * rhs.monomials.len());
        for a in &self.monomials {
            for b in &rhs.monomials {
                monomials.push(a.mul(b)?);
            }
        }
        Ok(Polynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Result<Polynomial> {
        let monomials =
            self.monomials.iter().map(|m| m.scalar_mul(s)).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    pub fn eval(&self, v: &Element) -> Result<Element> {
        require_assoc(&self.algebra)?;
        let mut acc = Element::zero(v.algebra());
        for m in &self.monomials {
            acc = acc.add(&m.eval(v)?)?;
        }
        Ok(acc)
    }

    /// The degree-graded multilinear coefficient tensor; the canonical form
    /// that decides polynomial equality.
    pub fn to_tensor(&self) -> Result<DegreeTensor> {
        require_assoc(&self.algebra)?;
        let n = self.algebra.dim();
        let mut by_degree: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for m in &self.monomials {
            let k = m.degree();
            let len = n.pow(k as u32 + 1);
            let slot = by_degree
                .entry(k)
                .or_insert_with(|| (0..len).map(|_| self.algebra.scalar().zero()).collect());
            // nonzero coordinate choices per coefficient slot
            let choices: Vec<Vec<(usize, &Scalar)>> = m
                .coeffs
                .iter()
                .map(|c| {
                    c.coords()
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .collect()
                })
                .collect();
            if choices.iter().any(Vec::is_empty) {
                continue; // a zero coefficient kills the monomial
            }
            let mut pick = vec![0usize; choices.len()];
            loop {
                let mut idx = 0usize;
                let mut val = self.algebra.scalar().one();
                for (t, ps) in pick.iter().enumerate() {
                    let (basis_idx, s) = choices[t][*ps];
                    idx = idx * n + basis_idx;
                    val = val.mul_raw(s);
                }
                slot[idx] = slot[idx].add_raw(&val);
                // odometer
                let mut t = choices.len();
                loop {
                    if t == 0 {
                        break;
                    }
                    t -= 1;
                    pick[t] += 1;
                    if pick[t] < choices[t].len() {
                        break;
                    }
                    pick[t] = 0;
                    if t == 0 {
                        t = usize::MAX;
                        break;
                    }
                }
                if t == usize::MAX {
                    break;
                }
            }
        }
        by_degree.retain(|_, v| v.iter().any(|s| !s.is_zero()));
        Ok(DegreeTensor { algebra: Arc::clone(&self.algebra), by_degree })
    }

    /// Canonical equality through the degree tensor.
    pub fn tensor_eq(&self, rhs: &Polynomial) -> Result<bool> {
        self.check_same(rhs)?;
        Ok(self.to_tensor()? == rhs.to_tensor()?)
    }

    /// Extends conjugation to polynomials: the image is a polynomial in the
    /// conjugated variable, `(a_0 x a_1 ... x a_k)* = a_k* x' ... x' a_0*`.
    pub fn conj(&self) -> Result<MixedPolynomial> {
        require_assoc(&self.algebra)?;
        let monomials = self
            .monomials
            .iter()
            .map(|m| MixedMonomial {
                coeffs: m.conj_coeff_elements(),
                vars: vec![VarSym::ConjX; m.degree()],
            })
            .collect();
        Ok(MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    pub fn to_mixed(&self) -> MixedPolynomial {
        let monomials = self
            .monomials
            .iter()
            .map(|m| MixedMonomial {
                coeffs: m.coeffs.clone(),
                vars: vec![VarSym::X; m.degree()],
            })
            .collect();
        MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials }
    }

    pub fn is_zero_tensor(&self) -> Result<bool> {
        Ok(self.to_tensor()?.by_degree.is_empty())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (t, m) in self.monomials.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `a` is a root of `p` when `p(a)` lands in the zero set (zero or a zero
/// divisor), i.e. when `p(a)` has vanishing norm.
pub fn root_test(p: &Polynomial, a: &Element) -> Result<bool> {
    let value = p.eval(a)?;
    Ok(classify(&value).in_zero_set())
}

// ---------------------------------------------------------------------------
// Degree tensors
// ---------------------------------------------------------------------------

/// Per degree k, the `n^(k+1)` coefficients of the multilinear expansion of
/// the degree-k part in basis coordinates; index `(i_0, ..., i_k)` is
/// flattened most-significant-first. All-zero degrees are dropped, making
/// derived equality canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeTensor {
    algebra: Arc<AlgebraSpec>,
    by_degree: BTreeMap<usize, Vec<Scalar>>,
}

impl DegreeTensor {
    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn entries(&self, degree: usize) -> Option<&[Scalar]> {
        self.by_degree.get(&degree).map(Vec::as_slice)
    }

    /// Flat coordinate vector over all degrees up to `max_degree`; the
    /// membership solvers use this as the ambient vector space.
    pub fn flat_coords(&self, max_degree: usize) -> Vec<Scalar> {
        let n = self.algebra.dim();
        let ring = self.algebra.scalar();
        let mut out = Vec::new();
        for k in 0..=max_degree {
            let len = n.pow(k as u32 + 1);
            match self.by_degree.get(&k) {
                Some(v) => out.extend(v.iter().cloned()),
                None => out.extend((0..len).map(|_| ring.zero())),
            }
        }
        out
    }

    /// Rebuilds a polynomial with basis-element monomials, one per nonzero
    /// tensor entry.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let n = self.algebra.dim();
        let mut monomials = Vec::new();
        for (k, entries) in &self.by_degree {
            for (flat, s) in entries.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let mut idx = vec![0usize; k + 1];
                let mut rem = flat;
                for t in (0..=*k).rev() {
                    idx[t] = rem % n;
                    rem /= n;
                }
                let mut coeffs = Vec::with_capacity(k + 1);
                for (t, i) in idx.iter().enumerate() {
                    let e = Element::basis(&self.algebra, *i)?;
                    coeffs.push(if t == 0 { e.scalar_mul(s)? } else { e });
                }
                monomials.push(Monomial { coeffs });
            }
        }
        Ok(Polynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    /// Evaluation by tensor contraction; agrees with `Polynomial::eval`.
    pub fn eval(&self, v: &Element) -> Result<Element> {
        self.to_polynomial()?.eval(v)
    }
}

// ---------------------------------------------------------------------------
// Mixed polynomials: x together with the conjugated variable
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSym {
    X,
    ConjX,
}

/// Interleaved monomial whose variable slots may independently carry `x` or
/// the conjugated variable.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedMonomial {
    coeffs: Vec<Element>,
    vars: Vec<VarSym>,
}

impl MixedMonomial {
    pub fn new(coeffs: Vec<Element>, vars: Vec<VarSym>) -> Result<MixedMonomial> {
        if coeffs.len() != vars.len() + 1 {
            return Err(Error::InvalidSpec("mixed monomial needs one more coefficient than variables".into()));
        }
        let first = &coeffs[0];
        for c in &coeffs[1..] {
            first.check_same_algebra(c)?;
        }
        Ok(MixedMonomial { coeffs, vars })
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn vars(&self) -> &[VarSym] {
        &self.vars
    }

    fn eval(&self, v: &Element, vc: &Element) -> Result<Element> {
        let mut acc = self.coeffs[0].clone();
        for (t, c) in self.coeffs[1..].iter().enumerate() {
            let var = match self.vars[t] {
                VarSym::X => v,
                VarSym::ConjX => vc,
            };
            acc = acc.mul(var)?.mul(c)?;
        }
        Ok(acc)
    }

    fn mul(&self, rhs: &MixedMonomial) -> Result<MixedMonomial> {
        let k = self.coeffs.len() - 1;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + rhs.coeffs.len() - 1);
        coeffs.extend_from_slice(&self.coeffs[..k]);
        coeffs.push(self.coeffs[k].mul(&rhs.coeffs[0])?);
        coeffs.extend_from_slice(&rhs.coeffs[1..]);
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&rhs.vars);
        Ok(MixedMonomial { coeffs, vars })
    }
}

/// Polynomial in `x` and the conjugated variable. Substituting the
/// conjugation image of `x` for the second symbol recovers a pointwise
/// equal function; whether that substitution yields a pure polynomial
/// depends on the algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedPolynomial {
    algebra: Arc<AlgebraSpec>,
    monomials: Vec<MixedMonomial>,
}

impl MixedPolynomial {
    pub fn zero(alg: &Arc<AlgebraSpec>) -> MixedPolynomial {
        MixedPolynomial { algebra: Arc::clone(alg), monomials: Vec::new() }
    }

    /// The conjugated variable on its own.
    pub fn conj_var(alg: &Arc<AlgebraSpec>) -> MixedPolynomial {
        MixedPolynomial {
            algebra: Arc::clone(alg),
            monomials: vec![MixedMonomial {
                coeffs: vec![Element::one(alg), Element::one(alg)],
                vars: vec![VarSym::ConjX],
            }],
        }
    }

    pub fn from_monomials(
        alg: &Arc<AlgebraSpec>,
        monomials: Vec<MixedMonomial>,
    ) -> Result<MixedPolynomial> {
        for m in &monomials {
            if m.coeffs[0].algebra() != alg {
                return Err(Error::AlgebraMismatch {
                    left: alg.name().to_string(),
                    right: m.coeffs[0].algebra().name().to_string(),
                });
            }
        }
        Ok(MixedPolynomial { algebra: Arc::clone(alg), monomials })
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn monomials(&self) -> &[MixedMonomial] {
        &self.monomials
    }

    pub fn has_conj_var(&self) -> bool {
        self.monomials.iter().any(|m| m.vars.contains(&VarSym::ConjX))
    }

    fn check_same(&self, rhs: &MixedPolynomial) -> Result<()> {
        if self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: rhs.algebra.name().to_string(),
            })
        }
    }

    pub fn add(&self, rhs: &MixedPolynomial) -> Result<MixedPolynomial> {
        self.check_same(rhs)?;
        let mut monomials = self.monomials.clone();
        monomials.extend(rhs.monomials.iter().cloned());
        Ok(MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    pub fn neg(&self) -> MixedPolynomial {
        let minus_one = self.algebra.scalar().from_i64(-1);
        let monomials = self
            .monomials
            .iter()
            .map(|m| {
                let mut coeffs = m.coeffs.clone();
                coeffs[0] = coeffs[0].scalar_mul(&minus_one).expect("same ring");
                MixedMonomial { coeffs, vars: m.vars.clone() }
            })
            .collect();
        MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials }
    }

    pub fn sub(&self, rhs: &MixedPolynomial) -> Result<MixedPolynomial> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MixedPolynomial) -> Result<MixedPolynomial> {
        self.check_same(rhs)?;
        require_assoc(&self.algebra)?;
        let mut monomials = Vec::with_capacity(self.monomials.len() * rhs.monomials.len());
        for a in &self.monomials {
            for b in &rhs.monomials {
                monomials.push(a.mul(b)?);
            }
        }
        Ok(MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    /// Conjugation on mixed polynomials: coefficients conjugate and reverse,
    /// variable symbols swap.
    pub fn conj(&self) -> Result<MixedPolynomial> {
        require_assoc(&self.algebra)?;
        let monomials = self
            .monomials
            .iter()
            .map(|m| MixedMonomial {
                coeffs: m.coeffs.iter().rev().map(Element::conj).collect(),
                vars: m
                    .vars
                    .iter()
                    .rev()
                    .map(|v| match v {
                        VarSym::X => VarSym::ConjX,
                        VarSym::ConjX => VarSym::X,
                    })
                    .collect(),
            })
            .collect();
        Ok(MixedPolynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    /// Substitutes the conjugated variable by the point's conjugate.
    pub fn eval(&self, v: &Element) -> Result<Element> {
        require_assoc(&self.algebra)?;
        let vc = v.conj();
        let mut acc = Element::zero(v.algebra());
        for m in &self.monomials {
            acc = acc.add(&m.eval(v, &vc)?)?;
        }
        Ok(acc)
    }

    /// When this polynomial mentions no conjugated variable, views it as a
    /// pure polynomial.
    pub fn try_into_pure(&self) -> Option<Polynomial> {
        if self.has_conj_var() {
            return None;
        }
        let monomials =
            self.monomials.iter().map(|m| Monomial { coeffs: m.coeffs.clone() }).collect();
        Some(Polynomial { algebra: Arc::clone(&self.algebra), monomials })
    }

    /// Replaces every conjugated-variable slot by `sum_t u_t x v_t` and
    /// renormalizes into a pure polynomial. The representation must live in
    /// this polynomial's algebra.
    pub fn substitute_conj(&self, rep: &[(Element, Element)]) -> Result<Polynomial> {
        require_assoc(&self.algebra)?;
        for (u, v) in rep {
            if u.algebra() != &self.algebra || v.algebra() != &self.algebra {
                return Err(Error::AlgebraMismatch {
                    left: self.algebra.name().to_string(),
                    right: u.algebra().name().to_string(),
                });
            }
        }
        let mut out: Vec<Monomial> = Vec::new();
        for m in &self.monomials {
            expand_conj_slots(m, rep, &mut out)?;
        }
        Ok(Polynomial { algebra: Arc::clone(&self.algebra), monomials: out })
    }
}

/// Expands the first conjugated slot of `m` over the representation and
/// recurses; monomials free of conjugated slots collect intoature `out`.
fn expand_conj_slots(
    m: &MixedMonomial,
    rep: &[(Element, Element)],
    out: &mut Vec<Monomial>,
) -> Result<()> {
    match m.vars.iter().position(|v| *v == VarSym::ConjX) {
        None => {
            out.push(Monomial { coeffs: m.coeffs.clone() });
            Ok(())
        }
        Some(slot) => {
            for (u, v) in rep {
                // ... a_slot (x') a_{slot+1} ... -> ... (a_slot u) x (v a_{slot+1}) ...
                let mut coeffs = m.coeffs.clone();
                let mut vars = m.vars.clone();
                coeffs[slot] = m.coeffs[slot].mul(u)?;
                coeffs[slot + 1] = v.mul(&m.coeffs[slot + 1])?;
                vars[slot] = VarSym::X;
                expand_conj_slots(&MixedMonomial { coeffs, vars }, rep, out)?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (t, m) in self.monomials.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            struct D<'a>(&'a MixedMonomial);
            impl fmt::Display for D<'_> {
                fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                    let vars = &self.0.vars;
                    write_interleaved(f, &self.0.coeffs, |t| match vars[t] {
                        VarSym::X => "x",
                        VarSym::ConjX => "~x",
                    })
                }
            }
            write!(f, "{}", D(m))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Representing conjugation as a degree-1 polynomial
// ---------------------------------------------------------------------------

/// Searches for coefficients with `sum_t u_t e_i v_t = e_i*` for every basis
/// vector, i.e. a degree-1 polynomial representing conjugation. Solves the
/// full n^2-unknown system for the combined tensor `lambda_{pq}` on
/// `e_p x e_q` over the fraction field (products parenthesized
/// `(e_p x) e_q`). Returns `None` when the system is inconsistent, which is
/// how algebras whose conjugation does not depend linearly on the identity
/// mapping answer.
#[allow(clippy::needless_range_loop)]
pub fn conj_as_polynomial(spec: &Arc<AlgebraSpec>) -> Result<Option<Vec<(Element, Element)>>> {
    let lift = lift_algebra(spec)?;
    let alg = lift.target();
    let n = alg.dim();
    let ring = alg.scalar();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(alg, i).expect("in range")).collect();

    // rows indexed by (i, k), columns by (p, q)
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
    let mut rhs: Vec<Scalar> = Vec::with_capacity(n * n);
    for i in 0..n {
        let target = basis[i].conj();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
        for p in 0..n {
            let pi = basis[p].mul(&basis[i])?;
            for q in 0..n {
                cols.push(pi.mul(&basis[q])?.coords().to_vec());
            }
        }
        for k in 0..n {
            rows.push(cols.iter().map(|c| c[k].clone()).collect());
            rhs.push(target.coord(k).clone());
        }
    }

    let Some(lambda) = linalg::solve(ring, &rows, &rhs)? else {
        return Ok(None);
    };

    let mut rep = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let l = &lambda[p * n + q];
            if !l.is_zero() {
                rep.push((basis[p].scalar_mul(l)?, basis[q].clone()));
            }
        }
    }
    Ok(Some(rep))
}

/// Applies a conjugation representation to a basis vector:
/// `sum_t (u_t e) v_t` with the solver's parenthesization.
pub fn apply_conj_rep(rep: &[(Element, Element)], e: &Element) -> Result<Element> {
    let mut acc = Element::zero(e.algebra());
    for (u, v) in rep {
        acc = acc.add(&u.mul(e)?.mul(v)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, AlgebraSpec};
    use crate::sample::Sampler;
    use crate::scalar::ScalarRing as SR;

    fn quat() -> Arc<AlgebraSpec> {
        catalog("quaternion", SR::Rationals).unwrap()
    }

    fn elem(alg: &Arc<AlgebraSpec>, coords: &[i64]) -> Element {
        Element::from_i64_coords(alg, coords).unwrap()
    }

    fn mono(alg: &Arc<AlgebraSpec>, coords: &[&[i64]]) -> Monomial {
        Monomial::new(coords.iter().map(|c| elem(alg, c)).collect()).unwrap()
    }

    #[test]
    fn flatten_examples() {
        let q = quat();
        let a = elem(&q, &[2, 1, 0, 0]);
        let tree = MonomialTree::prod(
            MonomialTree::Leaf(a.clone()),
            MonomialTree::prod(MonomialTree::Var, MonomialTree::Var),
        );
        let flat = tree.flatten(&q).unwrap();
        assert_eq!(flat.degree(), 2);
        assert_eq!(flat.coeffs()[0], a);
        assert!(flat.coeffs()[1].is_one());
        assert!(flat.coeffs()[2].is_one());

        let constant = MonomialTree::Leaf(a.clone()).flatten(&q).unwrap();
        assert_eq!(constant.degree(), 0);
        assert_eq!(constant.coeffs()[0], a);

        let oct = catalog("octonion", SR::Rationals).unwrap();
        assert!(matches!(
            MonomialTree::Var.flatten(&oct),
            Err(Error::NonAssociative(_))
        ));
    }

    #[test]
    fn monomial_mul_splices_at_the_boundary() {
        let q = quat();
        let a0 = elem(&q, &[1, 1, 0, 0]);
        let a1 = elem(&q, &[0, 0, 2, 0]);
        let b0 = elem(&q, &[3, 0, 0, 0]);
        let lhs = mono(&q, &[&[1, 1, 0, 0], &[0, 0, 2, 0]]);
        let rhs = Monomial::constant(b0.clone());
        let prod = lhs.mul(&rhs).unwrap();
        assert_eq!(prod.degree(), 1);
        assert_eq!(prod.coeffs()[0], a0);
        assert_eq!(prod.coeffs()[1], a1.mul(&b0).unwrap());

        // x * x = x^2
        let x = Polynomial::var(&q);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.monomials()[0].degree(), 2);
        assert!(x2.monomials()[0].coeffs().iter().all(Element::is_one));

        // [i] * [j, k] = [i*j, k] = [k, k]
        let i = Element::basis(&q, 1).unwrap();
        let j = Element::basis(&q, 2).unwrap();
        let k = Element::basis(&q, 3).unwrap();
        let prod = Monomial::constant(i).mul(&Monomial::new(vec![j, k.clone()]).unwrap()).unwrap();
        assert_eq!(prod.coeffs()[0], k);
        assert_eq!(prod.coeffs()[1], k);
    }

    #[test]
    fn eval_examples() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();
        let j = Element::basis(&q, 2).unwrap();
        let k = Element::basis(&q, 3).unwrap();

        // (i x j) at k: i*k*j = 1
        let m = Monomial::new(vec![i.clone(), j.clone()]).unwrap();
        assert!(m.eval(&k).unwrap().is_one());

        // x^2 at i -> -1
        let x = Polynomial::var(&q);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.eval(&i).unwrap(), elem(&q, &[-1, 0, 0, 0]));

        // constants ignore the point
        let c = elem(&q, &[5, 0, 1, 0]);
        let p = Polynomial::constant(c.clone());
        assert_eq!(p.eval(&k).unwrap(), c);
    }

    #[test]
    fn tensor_examples() {
        let q = quat();
        // basis monomial e1 x e2 -> unit entry at (1, 2)
        let p = Polynomial::from_monomials(
            &q,
            vec![mono(&q, &[&[0, 1, 0, 0], &[0, 0, 1, 0]])],
        )
        .unwrap();
        let t = p.to_tensor().unwrap();
        let entries = t.entries(1).unwrap();
        for (flat, s) in entries.iter().enumerate() {
            if flat == 4 + 2 {
                assert!(s.is_one());
            } else {
                assert!(s.is_zero(), "unexpected entry at {flat}");
            }
        }

        // sum order does not matter
        let i = mono(&q, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let jswap = mono(&q, &[&[0, 0, 1, 0], &[0, 1, 0, 0]]);
        let p1 = Polynomial::from_monomials(&q, vec![i.clone(), jswap.clone()]).unwrap();
        let p2 = Polynomial::from_monomials(&q, vec![jswap, i]).unwrap();
        assert!(p1.tensor_eq(&p2).unwrap());

        // x*i and i*x are distinct formal polynomials even over the
        // commutative complex ambient, where they agree as functions:
        // tensor equality is finer than functional equality.
        let c = catalog("complex", SR::Rationals).unwrap();
        let x = Polynomial::var(&c);
        let i = Polynomial::constant(Element::basis(&c, 1).unwrap());
        let xi = x.mul(&i).unwrap();
        let ix = i.mul(&x).unwrap();
        assert!(!xi.tensor_eq(&ix).unwrap());
        let mut s = Sampler::new(2);
        for _ in 0..20 {
            let v = s.element(&c);
            assert_eq!(xi.eval(&v).unwrap(), ix.eval(&v).unwrap());
        }
        // over quaternions they differ both ways
        let x = Polynomial::var(&q);
        let iq = Polynomial::constant(Element::basis(&q, 1).unwrap());
        assert!(!x.mul(&iq).unwrap().tensor_eq(&iq.mul(&x).unwrap()).unwrap());
    }

    #[test]
    fn tensor_round_trip_and_contraction() {
        let q = quat();
        let mut s = Sampler::new(11);
        for _ in 0..20 {
            let m1 = Monomial::new(vec![s.element(&q), s.element(&q)]).unwrap();
            let m2 = Monomial::new(vec![s.element(&q), s.element(&q), s.element(&q)]).unwrap();
            let m3 = Monomial::constant(s.element(&q));
            let p = Polynomial::from_monomials(&q, vec![m1, m2, m3]).unwrap();
            let t = p.to_tensor().unwrap();
            let back = t.to_polynomial().unwrap();
            assert!(back.tensor_eq(&p).unwrap());
            for _ in 0..5 {
                let v = s.element(&q);
                assert_eq!(t.eval(&v).unwrap(), p.eval(&v).unwrap());
            }
        }
    }

    #[test]
    fn poly_conj_examples() {
        let q = quat();
        let a0 = elem(&q, &[1, 2, 0, 0]);
        let a1 = elem(&q, &[0, 0, 3, 1]);
        let p = Polynomial::from_monomials(&q, vec![Monomial::new(vec![a0.clone(), a1.clone()]).unwrap()])
            .unwrap();
        let pc = p.conj().unwrap();
        assert_eq!(pc.monomials()[0].coeffs()[0], a1.conj());
        assert_eq!(pc.monomials()[0].coeffs()[1], a0.conj());
        assert_eq!(pc.monomials()[0].vars(), &[VarSym::ConjX]);

        // constants conjugate directly
        let c = Polynomial::constant(a0.clone()).conj().unwrap();
        assert_eq!(c.monomials()[0].coeffs()[0], a0.conj());

        // eval matches conj of eval: p = x at i
        let x = Polynomial::var(&q);
        let xc = x.conj().unwrap();
        let i = Element::basis(&q, 1).unwrap();
        assert_eq!(xc.eval(&i).unwrap(), i.neg());

        let mut s = Sampler::new(3);
        for _ in 0..40 {
            let v = s.element(&q);
            assert_eq!(pc.eval(&v).unwrap(), p.eval(&v).unwrap().conj());
        }
    }

    #[test]
    fn conj_is_anti_homomorphism_at_evaluation() {
        let q = quat();
        let mut s = Sampler::new(5);
        for _ in 0..25 {
            let p = Polynomial::from_monomials(
                &q,
                vec![Monomial::new(vec![s.element(&q), s.element(&q)]).unwrap()],
            )
            .unwrap();
            let r = Polynomial::from_monomials(
                &q,
                vec![
                    Monomial::new(vec![s.element(&q), s.element(&q)]).unwrap(),
                    Monomial::constant(s.element(&q)),
                ],
            )
            .unwrap();
            let prod_conj = p.mul(&r).unwrap().conj().unwrap();
            let v = s.element(&q);
            let lhs = prod_conj.eval(&v).unwrap();
            let rhs = r.conj().unwrap().eval(&v).unwrap().mul(&p.conj().unwrap().eval(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mono_norm_poly_examples() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();
        let j = Element::basis(&q, 2).unwrap();
        let m = Monomial::new(vec![i, j]).unwrap();
        let (c, k) = m.norm_poly().unwrap();
        assert!(c.is_one());
        assert_eq!(k, 1);

        let m = mono(&q, &[&[2, 0, 0, 0], &[1, 0, 0, 0]]);
        let (c, k) = m.norm_poly().unwrap();
        assert_eq!(c, SR::Rationals.from_i64(4));
        assert_eq!(k, 1);

        let c0 = elem(&q, &[1, 2, 0, 2]);
        let (c, k) = Monomial::constant(c0.clone()).norm_poly().unwrap();
        assert_eq!(c, c0.norm_form().unwrap());
        assert_eq!(k, 0);
    }

    #[test]
    fn mono_norm_poly_contract_on_samples() {
        let q = quat();
        let mut s = Sampler::new(9);
        for _ in 0..60 {
            let len = s.usize_in(1, 3);
            let m = Monomial::new((0..len).map(|_| s.element(&q)).collect()).unwrap();
            let (c, k) = m.norm_poly().unwrap();
            let v = s.element(&q);
            let value = m.eval(&v).unwrap();
            let lhs = value.mul(&value.conj()).unwrap();
            let mut scalar = c.clone();
            let vnorm = v.norm_form().unwrap();
            for _ in 0..k {
                scalar = scalar.mul(&vnorm).unwrap();
            }
            assert_eq!(lhs, Element::from_scalar(&q, scalar).unwrap());
        }
    }

    #[test]
    fn root_test_examples() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();
        let p = Polynomial::var(&q).sub(&Polynomial::constant(i.clone())).unwrap();
        assert!(root_test(&p, &i).unwrap());

        let s = catalog("split_complex", SR::Rationals).unwrap();
        let gen = Polynomial::var(&s)
            .mul(&Polynomial::constant(elem(&s, &[1, 1])))
            .unwrap();
        assert!(root_test(&gen, &Element::one(&s)).unwrap());

        let x = Polynomial::var(&q);
        let v = elem(&q, &[1, 0, 1, 0]);
        assert!(!root_test(&x, &v).unwrap());
    }

    #[test]
    fn conj_representation_for_quaternions_is_the_known_form() {
        let q = quat();
        let rep = conj_as_polynomial(&q).unwrap().expect("quaternions are representable");
        // unique solution: -(1/2)(x + i x i + j x j + k x k)
        assert_eq!(rep.len(), 4);
        let minus_half = SR::Rationals.parse_literal("-1/2").unwrap();
        for (t, (u, v)) in rep.iter().enumerate() {
            let e = Element::basis(&q, t).unwrap();
            assert_eq!(u, &e.scalar_mul(&minus_half).unwrap());
            assert_eq!(v, &e);
        }
        for idx in 0..4 {
            let e = Element::basis(&q, idx).unwrap();
            assert_eq!(apply_conj_rep(&rep, &e).unwrap(), e.conj());
        }
    }

    #[test]
    fn conj_representation_rejects_commutative_conjugation() {
        // over a commutative ambient every candidate collapses to a left
        // multiplication, which cannot be the conjugation
        for name in ["complex", "split_complex", "dual"] {
            let alg = catalog(name, SR::Rationals).unwrap();
            assert_eq!(conj_as_polynomial(&alg).unwrap(), None, "{name}");
        }
    }

    #[test]
    fn conj_representation_for_split_quaternions_respects_the_signature() {
        let alg = catalog("split_quaternion", SR::Rationals).unwrap();
        let rep = conj_as_polynomial(&alg).unwrap().expect("representable");
        // -(1/2)(x + i x i) + (1/2)(j x j + k x k): the sign of each term
        // follows the square of its basis vector
        assert_eq!(rep.len(), 4);
        let half = SR::Rationals.parse_literal("1/2").unwrap();
        let minus_half = half.neg();
        for (t, (u, v)) in rep.iter().enumerate() {
            let e = Element::basis(&alg, t).unwrap();
            let expected = if t < 2 { &minus_half } else { &half };
            assert_eq!(u, &e.scalar_mul(expected).unwrap(), "term {t}");
            assert_eq!(v, &e);
        }
        for i in 0..alg.dim() {
            let e = Element::basis(&alg, i).unwrap();
            assert_eq!(apply_conj_rep(&rep, &e).unwrap(), e.conj());
        }
    }

    #[test]
    fn conj_representation_for_octonions_is_the_sixth_form() {
        // the fixed (e_p x) e_q parenthesization is unambiguous here since
        // octonions are flexible, and the solve lands on
        // -(1/6)(x + sum_t e_t x e_t)
        let alg = catalog("octonion", SR::Rationals).unwrap();
        let rep = conj_as_polynomial(&alg).unwrap().expect("representable");
        assert_eq!(rep.len(), 8);
        let minus_sixth = SR::Rationals.parse_literal("-1/6").unwrap();
        for (t, (u, v)) in rep.iter().enumerate() {
            let e = Element::basis(&alg, t).unwrap();
            assert_eq!(u, &e.scalar_mul(&minus_sixth).unwrap(), "term {t}");
            assert_eq!(v, &e);
        }
        for i in 0..alg.dim() {
            let e = Element::basis(&alg, i).unwrap();
            assert_eq!(apply_conj_rep(&rep, &e).unwrap(), e.conj());
        }
    }

    #[test]
    fn conj_representation_on_one_dimensional_algebra_is_identity() {
        let ring = SR::Rationals;
        let tiny = AlgebraSpec::new("reals", ring, 1, vec![ring.one()], None, None).unwrap();
        let rep = conj_as_polynomial(&tiny).unwrap().expect("x* = x");
        assert_eq!(rep.len(), 1);
        assert!(rep[0].0.is_one());
        assert!(rep[0].1.is_one());
    }

    #[test]
    fn substitute_conj_examples() {
        let q = quat();
        let rep = conj_as_polynomial(&q).unwrap().unwrap();

        // the lone conjugated variable becomes the representation itself
        let xbar = MixedPolynomial::conj_var(&q);
        let subst = xbar.substitute_conj(&rep).unwrap();
        let mut s = Sampler::new(21);
        for _ in 0..50 {
            let v = s.element(&q);
            assert_eq!(subst.eval(&v).unwrap(), v.conj());
        }

        // a mixed polynomial without conjugated slots is unchanged
        let x = Polynomial::var(&q);
        let plain = x.to_mixed().substitute_conj(&rep).unwrap();
        assert!(plain.tensor_eq(&x).unwrap());

        // p p* for p = x: substitution produces a pure polynomial whose
        // values are v v*
        let pp = x.to_mixed().mul(&x.conj().unwrap()).unwrap();
        let pure = pp.substitute_conj(&rep).unwrap();
        for _ in 0..50 {
            let v = s.element(&q);
            assert_eq!(pure.eval(&v).unwrap(), v.mul(&v.conj()).unwrap());
            assert_eq!(pp.eval(&v).unwrap(), v.mul(&v.conj()).unwrap());
        }
    }

    #[test]
    fn flatten_agrees_with_tree_eval_on_samples() {
        let q = quat();
        let mut s = Sampler::new(17);
        for _ in 0..50 {
            let tree = random_tree(&mut s, &q, 3);
            let flat = tree.flatten(&q).unwrap();
            for _ in 0..10 {
                let v = s.element(&q);
                assert_eq!(flat.eval(&v).unwrap(), tree.eval(&v).unwrap());
            }
        }
    }

    fn random_tree(s: &mut Sampler, alg: &Arc<AlgebraSpec>, depth: usize) -> MonomialTree {
        if depth == 0 || s.usize_in(0, 3) == 0 {
            if s.usize_in(0, 1) == 0 {
                MonomialTree::Var
            } else {
                MonomialTree::Leaf(s.element(alg))
            }
        } else {
            MonomialTree::prod(random_tree(s, alg, depth - 1), random_tree(s, alg, depth - 1))
        }
    }

    #[test]
    fn poly_ring_laws_under_tensor_equality() {
        let q = quat();
        let mut s = Sampler::new(23);
        for _ in 0..15 {
            let p1 = random_poly(&mut s, &q);
            let p2 = random_poly(&mut s, &q);
            let p3 = random_poly(&mut s, &q);
            let assoc_l = p1.mul(&p2).unwrap().mul(&p3).unwrap();
            let assoc_r = p1.mul(&p2.mul(&p3).unwrap()).unwrap();
            assert!(assoc_l.tensor_eq(&assoc_r).unwrap());
            let dist_l = p1.mul(&p2.add(&p3).unwrap()).unwrap();
            let dist_r = p1.mul(&p2).unwrap().add(&p1.mul(&p3).unwrap()).unwrap();
            assert!(dist_l.tensor_eq(&dist_r).unwrap());
        }
    }

    fn random_poly(s: &mut Sampler, alg: &Arc<AlgebraSpec>) -> Polynomial {
        let terms = s.usize_in(1, 3);
        let monomials = (0..terms)
            .map(|_| {
                let len = s.usize_in(1, 3);
                Monomial::new((0..len).map(|_| s.element(alg)).collect()).unwrap()
            })
            .collect();
        Polynomial::from_monomials(alg, monomials).unwrap()
    }

    #[test]
    fn nonassociative_guards() {
        let oct = catalog("octonion", SR::Rationals).unwrap();
        let x = Polynomial::var(&oct);
        let v = Element::basis(&oct, 1).unwrap();
        assert!(matches!(x.mul(&x), Err(Error::NonAssociative(_))));
        assert!(matches!(x.eval(&v), Err(Error::NonAssociative(_))));
        assert!(matches!(x.to_tensor(), Err(Error::NonAssociative(_))));
        assert!(matches!(x.conj(), Err(Error::NonAssociative(_))));
        // trees still evaluate, respecting parenthesization
        let tree = MonomialTree::prod(
            MonomialTree::prod(
                MonomialTree::Leaf(Element::basis(&oct, 1).unwrap()),
                MonomialTree::Leaf(Element::basis(&oct, 2).unwrap()),
            ),
            MonomialTree::Leaf(Element::basis(&oct, 4).unwrap()),
        );
        let other = MonomialTree::prod(
            MonomialTree::Leaf(Element::basis(&oct, 1).unwrap()),
            MonomialTree::prod(
                MonomialTree::Leaf(Element::basis(&oct, 2).unwrap()),
                MonomialTree::Leaf(Element::basis(&oct, 4).unwrap()),
            ),
        );
        let v0 = Element::one(&oct);
        assert_ne!(tree.eval(&v0).unwrap(), other.eval(&v0).unwrap());
    }

    #[test]
    fn polynomial_display() {
        let q = quat();
        assert_eq!(Polynomial::zero(&q).to_string(), "0");
        assert_eq!(Polynomial::var(&q).to_string(), "x");
        let i = Element::basis(&q, 1).unwrap();
        let p = Polynomial::from_monomials(
            &q,
            vec![
                Monomial::new(vec![i.clone(), Element::one(&q), i.clone()]).unwrap(),
                Monomial::constant(elem(&q, &[2, 0, 0, 0])),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "(i)*x*x*(i) + (2)");
        let mixed = MixedPolynomial::conj_var(&q);
        assert_eq!(mixed.to_string(), "~x");
    }
}
