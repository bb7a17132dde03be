//! Left, right and two-sided ideals: principal membership in the algebra
//! decided by exact linear algebra, bounded-degree membership in the
//! polynomial algebra decided on degree-tensor coordinates, inclusion of
//! principal ideals of zero-set elements in the zero set, and report-style
//! closure checks (including an evaluation-level reading for rational
//! ambients).

use crate::algebra::{AlgebraSpec, Element};
use crate::error::{Error, Result};
use crate::fractions::classify;
use crate::linalg;
use crate::polynomial::{Monomial, Polynomial};
use crate::rational::{reval, RationalExpr};
use crate::sample::Sampler;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for IdealSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSide::Left => write!(f, "left"),
            IdealSide::Right => write!(f, "right"),
            IdealSide::TwoSided => write!(f, "two-sided"),
        }
    }
}

fn require_assoc(alg: &Arc<AlgebraSpec>) -> Result<()> {
    if alg.is_associative() {
        Ok(())
    } else {
        Err(Error::NonAssociative(alg.name().to_string()))
    }
}

fn require_field(alg: &Arc<AlgebraSpec>) -> Result<()> {
    if alg.scalar().is_field() {
        Ok(())
    } else {
        Err(Error::NotAField(alg.scalar()))
    }
}

// ---------------------------------------------------------------------------
// Principal ideals in the algebra
// ---------------------------------------------------------------------------

/// Solver certificate for principal membership: the combination that
/// reconstructs the candidate from the generator.
#[derive(Debug, Clone, PartialEq)]
pub enum PrincipalCertificate {
    /// `x` with `x a = b`.
    Left(Element),
    /// `x` with `a x = b`.
    Right(Element),
    /// Coefficients `c` with `b = sum c_{ij} e_i a e_j`.
    TwoSided(Vec<(usize, usize, Scalar)>),
}

impl PrincipalCertificate {
    /// Renders the combination with `g` standing for the generator.
    pub fn render(&self, alg: &Arc<AlgebraSpec>) -> String {
        match self {
            PrincipalCertificate::Left(x) => format!("({x})*g"),
            PrincipalCertificate::Right(x) => format!("g*({x})"),
            PrincipalCertificate::TwoSided(terms) => {
                if terms.is_empty() {
                    return "0".into();
                }
                terms
                    .iter()
                    .map(|(i, j, c)| {
                        format!("({c}*{})*g*({})", alg.basis_name(*i), alg.basis_name(*j))
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        }
    }
}

/// Decides `b in Aa`, `b in aA` or `b in AaA` by solving the corresponding
/// linear system in the coordinates of the unknown combination. Requires an
/// associative ambient over field scalars (lift first otherwise).
pub fn principal_membership(
    side: IdealSide,
    a: &Element,
    b: &Element,
) -> Result<Option<PrincipalCertificate>> {
    a.check_same_algebra(b)?;
    let alg = a.algebra();
    require_assoc(alg)?;
    require_field(alg)?;
    let n = alg.dim();
    let ring = alg.scalar();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(alg, i).expect("in range")).collect();

    let columns: Vec<Element> = match side {
        IdealSide::Left => basis.iter().map(|e| e.mul(a)).collect::<Result<_>>()?,
        IdealSide::Right => basis.iter().map(|e| a.mul(e)).collect::<Result<_>>()?,
        IdealSide::TwoSided => {
            let mut cols = Vec::with_capacity(n * n);
            for ei in &basis {
                let eia = ei.mul(a)?;
                for ej in &basis {
                    cols.push(eia.mul(ej)?);
                }
            }
            cols
        }
    };

    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|k| columns.iter().map(|c| c.coord(k).clone()).collect())
        .collect();
    let rhs: Vec<Scalar> = b.coords().to_vec();
    let Some(solution) = linalg::solve(ring, &rows, &rhs)? else {
        return Ok(None);
    };

    let cert = match side {
        IdealSide::Left => {
            PrincipalCertificate::Left(Element::from_coords(alg, solution)?)
        }
        IdealSide::Right => {
            PrincipalCertificate::Right(Element::from_coords(alg, solution)?)
        }
        IdealSide::TwoSided => PrincipalCertificate::TwoSided(
            solution
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| (idx / n, idx % n, c))
                .collect(),
        ),
    };
    Ok(Some(cert))
}

/// Re-multiplies a certificate and compares with the candidate exactly.
pub fn verify_principal_certificate(
    a: &Element,
    b: &Element,
    cert: &PrincipalCertificate,
) -> Result<bool> {
    let alg = a.algebra();
    let rebuilt = match cert {
        PrincipalCertificate::Left(x) => x.mul(a)?,
        PrincipalCertificate::Right(x) => a.mul(x)?,
        PrincipalCertificate::TwoSided(terms) => {
            let mut acc = Element::zero(alg);
            for (i, j, c) in terms {
                let ei = Element::basis(alg, *i)?;
                let ej = Element::basis(alg, *j)?;
                acc = acc.add(&ei.mul(a)?.mul(&ej)?.scalar_mul(c)?)?;
            }
            acc
        }
    };
    Ok(&rebuilt == b)
}

// ---------------------------------------------------------------------------
// Zero-set inclusion of principal ideals
// ---------------------------------------------------------------------------

/// Report for `Aa` and `aA` sitting inside the zero set when `a` does.
#[derive(Debug, Clone, PartialEq)]
pub struct InclusionReport {
    pub generator: String,
    pub checked: usize,
    pub all_in_zero_set: bool,
    /// Why this must hold in an associative algebra with conjugation.
    pub justification: String,
    pub failures: Vec<String>,
}

/// Verifies `N(b a) = 0` and `N(a b) = 0` for every basis vector and for
/// seeded random samples `b`. The basis is a spanning set, and the random
/// samples guard the quadratic nature of the norm.
pub fn zeros_inclusion_check(a: &Element, samples: usize, seed: u64) -> Result<InclusionReport> {
    let alg = a.algebra();
    require_assoc(alg)?;
    if !classify(a).in_zero_set() {
        return Err(Error::Precondition(format!(
            "{a} has nonzero norm; it generates the whole algebra"
        )));
    }
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut probe = |b: &Element| -> Result<()> {
        for (label, prod) in [("b*a", b.mul(a)?), ("a*b", a.mul(b)?)] {
            checked += 1;
            if !prod.norm_form()?.is_zero() {
                failures.push(format!("N({label}) != 0 for b = {b}"));
            }
        }
        Ok(())
    };
    for i in 0..alg.dim() {
        probe(&Element::basis(alg, i)?)?;
    }
    let mut sampler = Sampler::new(seed);
    for _ in 0..samples {
        probe(&sampler.element(alg))?;
    }
    Ok(InclusionReport {
        generator: a.to_string(),
        checked,
        all_in_zero_set: failures.is_empty(),
        justification: "N(ba) = N(b)N(a) = 0 and N(ab) = N(a)N(b) = 0 by norm multiplicativity"
            .into(),
        failures,
    })
}

// ---------------------------------------------------------------------------
// Bounded-degree ideals in the polynomial algebra
// ---------------------------------------------------------------------------

/// Certificate for bounded-degree polynomial ideal membership: the scalar
/// combination of monomial multiples of the generator.
#[derive(Debug, Clone)]
pub enum PolyCertificate {
    /// `p = sum c (m g)`.
    Left(Vec<(Scalar, Monomial)>),
    /// `p = sum c (g m)`.
    Right(Vec<(Scalar, Monomial)>),
    /// `p = sum c (m g m')`.
    TwoSided(Vec<(Scalar, Monomial, Monomial)>),
}

impl PolyCertificate {
    pub fn render(&self) -> String {
        let term = |c: &Scalar, m: &Monomial, side: IdealSide, m2: Option<&Monomial>| match side {
            IdealSide::Left => format!("({c})*[{m}]*g"),
            IdealSide::Right => format!("({c})*g*[{m}]"),
            IdealSide::TwoSided => {
                format!("({c})*[{m}]*g*[{}]", m2.expect("two-sided term"))
            }
        };
        let parts: Vec<String> = match self {
            PolyCertificate::Left(v) => {
                v.iter().map(|(c, m)| term(c, m, IdealSide::Left, None)).collect()
            }
            PolyCertificate::Right(v) => {
                v.iter().map(|(c, m)| term(c, m, IdealSide::Right, None)).collect()
            }
            PolyCertificate::TwoSided(v) => v
                .iter()
                .map(|(c, m, m2)| term(c, m, IdealSide::TwoSided, Some(m2)))
                .collect(),
        };
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// All degree-d monomials with basis-element coefficients, in lexicographic
/// index order.
fn basis_monomials(alg: &Arc<AlgebraSpec>, degree: usize) -> Vec<Monomial> {
    let n = alg.dim();
    let count = n.pow(degree as u32 + 1);
    let mut out = Vec::with_capacity(count);
    for flat in 0..count {
        let mut idx = vec![0usize; degree + 1];
        let mut rem = flat;
        for t in (0..=degree).rev() {
            idx[t] = rem % n;
            rem /= n;
        }
        let coeffs: Vec<Element> =
            idx.iter().map(|i| Element::basis(alg, *i).expect("in range")).collect();
        out.push(Monomial::new(coeffs).expect("nonempty"));
    }
    out
}

/// Decides `p in span{ m g : deg(m g) <= k }` (and the right/two-sided
/// variants) by exact linear algebra on degree-tensor coordinates. Complete
/// up to the bound: monotone in `k`.
pub fn poly_ideal_membership(
    side: IdealSide,
    g: &Polynomial,
    p: &Polynomial,
    degree_bound: usize,
) -> Result<Option<PolyCertificate>> {
    let alg = g.algebra().clone();
    require_assoc(&alg)?;
    require_field(&alg)?;
    if p.degree() > degree_bound {
        return Err(Error::DegreeBoundExceeded { degree: p.degree(), bound: degree_bound });
    }

    // zero generator: only the zero polynomial is a member
    if g.is_zero_tensor()? {
        return Ok(if p.is_zero_tensor()? {
            Some(match side {
                IdealSide::Left => PolyCertificate::Left(Vec::new()),
                IdealSide::Right => PolyCertificate::Right(Vec::new()),
                IdealSide::TwoSided => PolyCertificate::TwoSided(Vec::new()),
            })
        } else {
            None
        });
    }

    let deg_g = g.degree();
    let rhs = p.to_tensor()?.flat_coords(degree_bound);

    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut left_tags: Vec<Monomial> = Vec::new();
    let mut pair_tags: Vec<(Monomial, Monomial)> = Vec::new();
    match side {
        IdealSide::Left | IdealSide::Right => {
            for d in 0..=degree_bound.saturating_sub(deg_g) {
                for m in basis_monomials(&alg, d) {
                    let prod = match side {
                        IdealSide::Left => Polynomial::from_monomials(&alg, vec![m.clone()])?
                            .mul(g)?,
                        _ => g.mul(&Polynomial::from_monomials(&alg, vec![m.clone()])?)?,
                    };
                    columns.push(prod.to_tensor()?.flat_coords(degree_bound));
                    left_tags.push(m);
                }
            }
        }
        IdealSide::TwoSided => {
            let budget = degree_bound.saturating_sub(deg_g);
            for d1 in 0..=budget {
                for d2 in 0..=(budget - d1) {
                    for m1 in basis_monomials(&alg, d1) {
                        let m1g = Polynomial::from_monomials(&alg, vec![m1.clone()])?.mul(g)?;
                        for m2 in basis_monomials(&alg, d2) {
                            let prod =
                                m1g.mul(&Polynomial::from_monomials(&alg, vec![m2.clone()])?)?;
                            columns.push(prod.to_tensor()?.flat_coords(degree_bound));
                            pair_tags.push((m1.clone(), m2.clone()));
                        }
                    }
                }
            }
        }
    }

    let dim = rhs.len();
    let rows: Vec<Vec<Scalar>> =
        (0..dim).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let Some(solution) = linalg::solve(alg.scalar(), &rows, &rhs)? else {
        return Ok(None);
    };

    let cert = match side {
        IdealSide::Left => PolyCertificate::Left(
            solution
                .into_iter()
                .zip(left_tags)
                .filter(|(c, _)| !c.is_zero())
                .collect(),
        ),
        IdealSide::Right => PolyCertificate::Right(
            solution
                .into_iter()
                .zip(left_tags)
                .filter(|(c, _)| !c.is_zero())
                .collect(),
        ),
        IdealSide::TwoSided => PolyCertificate::TwoSided(
            solution
                .into_iter()
                .zip(pair_tags)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, (m1, m2))| (c, m1, m2))
                .collect(),
        ),
    };
    Ok(Some(cert))
}

/// Rebuilds the combination named by a certificate and compares tensors.
pub fn verify_poly_certificate(
    g: &Polynomial,
    p: &Polynomial,
    cert: &PolyCertificate,
) -> Result<bool> {
    let alg = g.algebra();
    let mut acc = Polynomial::zero(alg);
    match cert {
        PolyCertificate::Left(terms) => {
            for (c, m) in terms {
                let mg = Polynomial::from_monomials(alg, vec![m.clone()])?.mul(g)?;
                acc = acc.add(&mg.scalar_mul(c)?)?;
            }
        }
        PolyCertificate::Right(terms) => {
            for (c, m) in terms {
                let gm = g.mul(&Polynomial::from_monomials(alg, vec![m.clone()])?)?;
                acc = acc.add(&gm.scalar_mul(c)?)?;
            }
        }
        PolyCertificate::TwoSided(terms) => {
            for (c, m1, m2) in terms {
                let prod = Polynomial::from_monomials(alg, vec![m1.clone()])?
                    .mul(g)?
                    .mul(&Polynomial::from_monomials(alg, vec![m2.clone()])?)?;
                acc = acc.add(&prod.scalar_mul(c)?)?;
            }
        }
    }
    acc.tensor_eq(p)
}

// ---------------------------------------------------------------------------
// Ideal specifications and the closure axiom check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum Generator {
    Elem(Element),
    Poly(Polynomial),
}

#[derive(Debug, Clone)]
pub enum IdealAmbient {
    Algebra,
    PolyAlgebra { degree_bound: usize },
    RationalAlgebra { sample_points: Vec<Element> },
}

#[derive(Debug, Clone)]
pub struct IdealSpec {
    pub side: IdealSide,
    pub generators: Vec<Generator>,
    pub ambient: IdealAmbient,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub samples: usize,
    pub additive_closure_ok: bool,
    pub side_closure_ok: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.additive_closure_ok && self.side_closure_ok
    }
}

/// Samples members from the generators, then asserts additive closure and
/// the side-appropriate multiplicative closure of membership. For rational
/// ambients both are checked at evaluation level on the stored sample
/// points.
pub fn ideal_axiom_check(ideal: &IdealSpec, samples: usize, seed: u64) -> Result<AxiomReport> {
    match &ideal.ambient {
        IdealAmbient::Algebra => axiom_check_algebra(ideal, samples, seed),
        IdealAmbient::PolyAlgebra { degree_bound } => {
            axiom_check_poly(ideal, *degree_bound, samples, seed)
        }
        IdealAmbient::RationalAlgebra { sample_points } => {
            axiom_check_rational(ideal, sample_points, samples, seed)
        }
    }
}

fn elem_generators(ideal: &IdealSpec) -> Result<Vec<Element>> {
    ideal
        .generators
        .iter()
        .map(|g| match g {
            Generator::Elem(e) => Ok(e.clone()),
            Generator::Poly(_) => Err(Error::Precondition(
                "algebra-ambient ideals take element generators".into(),
            )),
        })
        .collect()
}

fn poly_generators(ideal: &IdealSpec, alg: &Arc<AlgebraSpec>) -> Result<Vec<Polynomial>> {
    ideal
        .generators
        .iter()
        .map(|g| match g {
            Generator::Elem(e) => {
                e.check_same_algebra(&Element::zero(alg))?;
                Ok(Polynomial::constant(e.clone()))
            }
            Generator::Poly(p) => Ok(p.clone()),
        })
        .collect()
}

/// Membership in the ideal generated by several elements: the span of the
/// side-appropriate basis multiples.
fn element_in_span(side: IdealSide, gens: &[Element], b: &Element) -> Result<bool> {
    let alg = gens[0].algebra();
    let n = alg.dim();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(alg, i).expect("in range")).collect();
    let mut columns: Vec<Element> = Vec::new();
    for g in gens {
        match side {
            IdealSide::Left => {
                for e in &basis {
                    columns.push(e.mul(g)?);
                }
            }
            IdealSide::Right => {
                for e in &basis {
                    columns.push(g.mul(e)?);
                }
            }
            IdealSide::TwoSided => {
                for ei in &basis {
                    let eig = ei.mul(g)?;
                    for ej in &basis {
                        columns.push(eig.mul(ej)?);
                    }
                }
            }
        }
    }
    let rows: Vec<Vec<Scalar>> =
        (0..n).map(|k| columns.iter().map(|c| c.coord(k).clone()).collect()).collect();
    Ok(linalg::solve(alg.scalar(), &rows, b.coords())?.is_some())
}

fn axiom_check_algebra(ideal: &IdealSpec, samples: usize, seed: u64) -> Result<AxiomReport> {
    let gens = elem_generators(ideal)?;
    let alg = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator required".into()))?
        .algebra()
        .clone();
    require_assoc(&alg)?;
    require_field(&alg)?;
    let mut sampler = Sampler::new(seed);
    let mut failures = Vec::new();
    let mut additive_ok = true;
    let mut side_ok = true;

    let random_member = |sampler: &mut Sampler| -> Result<Element> {
        let mut acc = Element::zero(&alg);
        for g in &gens {
            let term = match ideal.side {
                IdealSide::Left => sampler.element(&alg).mul(g)?,
                IdealSide::Right => g.mul(&sampler.element(&alg))?,
                IdealSide::TwoSided => {
                    sampler.element(&alg).mul(g)?.mul(&sampler.element(&alg))?
                }
            };
            acc = acc.add(&term)?;
        }
        Ok(acc)
    };

    for _ in 0..samples {
        let m1 = random_member(&mut sampler)?;
        let m2 = random_member(&mut sampler)?;
        let sum = m1.add(&m2)?;
        if !element_in_span(ideal.side, &gens, &sum)? {
            additive_ok = false;
            failures.push(format!("additive closure failed at {sum}"));
        }
        let r = sampler.element(&alg);
        let acted: Vec<Element> = match ideal.side {
            IdealSide::Left => vec![r.mul(&m1)?],
            IdealSide::Right => vec![m1.mul(&r)?],
            IdealSide::TwoSided => vec![r.mul(&m1)?, m1.mul(&r)?],
        };
        for v in acted {
            if !element_in_span(ideal.side, &gens, &v)? {
                side_ok = false;
                failures.push(format!("side closure failed at {v}"));
            }
        }
    }
    Ok(AxiomReport { samples, additive_closure_ok: additive_ok, side_closure_ok: side_ok, failures })
}

fn axiom_check_poly(
    ideal: &IdealSpec,
    degree_bound: usize,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    let first = ideal
        .generators
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator required".into()))?;
    let alg = match first {
        Generator::Elem(e) => e.algebra().clone(),
        Generator::Poly(p) => p.algebra().clone(),
    };
    let gens = poly_generators(ideal, &alg)?;
    require_assoc(&alg)?;
    require_field(&alg)?;
    let mut sampler = Sampler::new(seed);
    let mut failures = Vec::new();
    let mut additive_ok = true;
    let mut side_ok = true;

    let random_monomial = |sampler: &mut Sampler, max_deg: usize| -> Result<Polynomial> {
        let d = sampler.usize_in(0, max_deg);
        let coeffs: Vec<Element> = (0..=d).map(|_| sampler.element(&alg)).collect();
        Polynomial::from_monomials(&alg, vec![Monomial::new(coeffs)?])
    };

    // membership of p in the multi-generator ideal at a bound: any single
    // generator certificate suffices generator-by-generator because the
    // sampled members are built from one generator at a time
    let member_at = |p: &Polynomial, bound: usize| -> Result<bool> {
        for g in &gens {
            if poly_ideal_membership(ideal.side, g, p, bound)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    };

    for _ in 0..samples {
        let g = &gens[sampler.usize_in(0, gens.len() - 1)];
        let headroom = degree_bound.saturating_sub(g.degree());
        let m1 = match ideal.side {
            IdealSide::Left => random_monomial(&mut sampler, headroom)?.mul(g)?,
            IdealSide::Right => g.mul(&random_monomial(&mut sampler, headroom)?)?,
            IdealSide::TwoSided => {
                let d1 = sampler.usize_in(0, headroom);
                random_monomial(&mut sampler, d1)?
                    .mul(g)?
                    .mul(&random_monomial(&mut sampler, headroom - d1)?)?
            }
        };
        let m2 = match ideal.side {
            IdealSide::Left => random_monomial(&mut sampler, headroom)?.mul(g)?,
            IdealSide::Right => g.mul(&random_monomial(&mut sampler, headroom)?)?,
            IdealSide::TwoSided => random_monomial(&mut sampler, 0)?.mul(g)?,
        };
        let sum = m1.add(&m2)?;
        if !member_at(&sum, degree_bound.max(sum.degree()))? {
            additive_ok = false;
            failures.push(format!("additive closure failed at {sum}"));
        }
        // act by a degree <= 1 ambient polynomial; the bound grows with the
        // product, which is the monotone reading of bounded membership
        let r = random_monomial(&mut sampler, 1)?;
        let acted: Vec<Polynomial> = match ideal.side {
            IdealSide::Left => vec![r.mul(&m1)?],
            IdealSide::Right => vec![m1.mul(&r)?],
            IdealSide::TwoSided => vec![r.mul(&m1)?, m1.mul(&r)?],
        };
        for p in acted {
            if !member_at(&p, degree_bound.max(p.degree()))? {
                side_ok = false;
                failures.push(format!("side closure failed at {p}"));
            }
        }
    }
    Ok(AxiomReport { samples, additive_closure_ok: additive_ok, side_closure_ok: side_ok, failures })
}

fn poly_to_rational(p: &Polynomial) -> RationalExpr {
    let alg = p.algebra();
    let mut terms: Vec<RationalExpr> = Vec::new();
    for m in p.monomials() {
        let mut acc = RationalExpr::constant(m.coeffs()[0].clone());
        for c in &m.coeffs()[1..] {
            acc = RationalExpr::prod(acc, RationalExpr::var());
            if !c.is_one() {
                acc = RationalExpr::prod(acc, RationalExpr::constant(c.clone()));
            }
        }
        terms.push(acc);
    }
    terms
        .into_iter()
        .reduce(RationalExpr::sum)
        .unwrap_or_else(|| RationalExpr::constant(Element::zero(alg)))
}

fn axiom_check_rational(
    ideal: &IdealSpec,
    sample_points: &[Element],
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    let first = ideal
        .generators
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator required".into()))?;
    let alg = match first {
        Generator::Elem(e) => e.algebra().clone(),
        Generator::Poly(p) => p.algebra().clone(),
    };
    let gens = poly_generators(ideal, &alg)?;
    require_assoc(&alg)?;
    let mut sampler = Sampler::new(seed);
    let mut failures = Vec::new();
    let mut additive_ok = true;
    let mut side_ok = true;

    // membership at evaluation level: at each sample point where the
    // generator evaluates, the value must sit in the pointwise principal
    // ideal of the generator's value
    let pointwise_member = |e: &RationalExpr, g: &Polynomial| -> Result<bool> {
        for v in sample_points {
            let Ok(val) = reval(e, v) else { continue };
            let gv = g.eval(v)?;
            let lifted_gv = crate::fractions::lift_algebra(&alg)?.lift_element(&gv)?;
            if principal_membership(ideal.side, &lifted_gv, &val)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    };

    for _ in 0..samples {
        let g = &gens[sampler.usize_in(0, gens.len() - 1)];
        let g_expr = poly_to_rational(g);
        let rand_expr = |sampler: &mut Sampler| -> RationalExpr {
            let c = RationalExpr::constant(sampler.element(&alg));
            if sampler.usize_in(0, 1) == 0 {
                RationalExpr::prod(c, RationalExpr::var())
            } else {
                c
            }
        };
        let member = |sampler: &mut Sampler| -> RationalExpr {
            match ideal.side {
                IdealSide::Left => RationalExpr::prod(rand_expr(sampler), g_expr.clone()),
                IdealSide::Right => RationalExpr::prod(g_expr.clone(), rand_expr(sampler)),
                IdealSide::TwoSided => RationalExpr::prod(
                    RationalExpr::prod(rand_expr(sampler), g_expr.clone()),
                    rand_expr(sampler),
                ),
            }
        };
        let m1 = member(&mut sampler);
        let m2 = member(&mut sampler);
        let sum = RationalExpr::sum(m1.clone(), m2);
        if !pointwise_member(&sum, g)? {
            additive_ok = false;
            failures.push(format!("additive closure failed at {sum}"));
        }
        let r = rand_expr(&mut sampler);
        let acted: Vec<RationalExpr> = match ideal.side {
            IdealSide::Left => vec![RationalExpr::prod(r, m1)],
            IdealSide::Right => vec![RationalExpr::prod(m1, r)],
            IdealSide::TwoSided => vec![
                RationalExpr::prod(r.clone(), m1.clone()),
                RationalExpr::prod(m1, r),
            ],
        };
        for e in acted {
            if !pointwise_member(&e, g)? {
                side_ok = false;
                failures.push(format!("side closure failed at {e}"));
            }
        }
    }
    Ok(AxiomReport { samples, additive_closure_ok: additive_ok, side_closure_ok: side_ok, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::fractions::invert;
    use crate::scalar::ScalarRing as SR;

    fn quat() -> Arc<AlgebraSpec> {
        catalog("quaternion", SR::Rationals).unwrap()
    }

    fn elem(alg: &Arc<AlgebraSpec>, coords: &[i64]) -> Element {
        Element::from_i64_coords(alg, coords).unwrap()
    }

    #[test]
    fn invertible_generator_reaches_everything() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();
        let mut s = Sampler::new(3);
        for _ in 0..20 {
            let b = s.element(&q);
            let cert = principal_membership(IdealSide::Left, &i, &b).unwrap().unwrap();
            assert!(verify_principal_certificate(&i, &b, &cert).unwrap());
            if let PrincipalCertificate::Left(x) = &cert {
                // the certificate is b * i^{-1}
                assert_eq!(x, &b.mul(&invert(&i).unwrap()).unwrap());
            } else {
                panic!("left certificate expected");
            }
        }
    }

    #[test]
    fn split_complex_zero_divisor_spans_a_line() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let a = elem(&s, &[1, 1]);
        assert!(principal_membership(IdealSide::Left, &a, &Element::one(&s)).unwrap().is_none());
        let b = elem(&s, &[2, 2]);
        let cert = principal_membership(IdealSide::Left, &a, &b).unwrap().unwrap();
        assert!(verify_principal_certificate(&a, &b, &cert).unwrap());
    }

    #[test]
    fn zero_generator_contains_only_zero() {
        let q = quat();
        let zero = Element::zero(&q);
        assert!(principal_membership(IdealSide::Left, &zero, &zero).unwrap().is_some());
        assert!(principal_membership(IdealSide::Left, &zero, &Element::one(&q))
            .unwrap()
            .is_none());
        for side in [IdealSide::Right, IdealSide::TwoSided] {
            assert!(principal_membership(side, &zero, &zero).unwrap().is_some());
            assert!(principal_membership(side, &zero, &Element::one(&q)).unwrap().is_none());
        }
    }

    #[test]
    fn two_sided_certificates_verify() {
        let s = catalog("split_quaternion", SR::Rationals).unwrap();
        let a = elem(&s, &[1, 0, 1, 0]); // zero divisor: N = 1 - 1 = 0
        assert!(classify(&a).in_zero_set());
        let mut sampler = Sampler::new(5);
        let mut hits = 0;
        for _ in 0..30 {
            let b = sampler.element(&s);
            if let Some(cert) = principal_membership(IdealSide::TwoSided, &a, &b).unwrap() {
                assert!(verify_principal_certificate(&a, &b, &cert).unwrap());
                hits += 1;
            }
        }
        assert!(hits > 0, "expected some members of the two-sided ideal");
    }

    #[test]
    fn left_ideal_of_zero_divisor_is_not_right_closed() {
        // negative control: Aa for a zero divisor in split-quaternions is
        // not closed under right multiplication
        let s = catalog("split_quaternion", SR::Rationals).unwrap();
        let a = elem(&s, &[1, 0, 1, 0]); // 1 + j
        assert!(principal_membership(IdealSide::Left, &a, &a).unwrap().is_some());
        let i = Element::basis(&s, 1).unwrap();
        let pushed = a.mul(&i).unwrap();
        assert!(principal_membership(IdealSide::Left, &a, &pushed).unwrap().is_none());
    }

    #[test]
    fn zeros_inclusion_examples() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let report = zeros_inclusion_check(&elem(&s, &[1, 1]), 50, 0).unwrap();
        assert!(report.all_in_zero_set, "{:?}", report.failures);
        assert!(report.justification.contains("N(ba) = N(b)N(a)"));

        let d = catalog("dual", SR::Rationals).unwrap();
        let report = zeros_inclusion_check(&Element::basis(&d, 1).unwrap(), 50, 0).unwrap();
        assert!(report.all_in_zero_set);

        let report = zeros_inclusion_check(&Element::zero(&s), 10, 0).unwrap();
        assert!(report.all_in_zero_set);

        let q = quat();
        assert!(matches!(
            zeros_inclusion_check(&Element::one(&q), 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn poly_membership_examples() {
        let q = quat();
        let x = Polynomial::var(&q);
        let i = Element::basis(&q, 1).unwrap();
        // p = x i x
        let p = x.mul(&Polynomial::constant(i.clone())).unwrap().mul(&x).unwrap();
        for bound in [2usize, 3] {
            let cert = poly_ideal_membership(IdealSide::Left, &x, &p, bound).unwrap().unwrap();
            assert!(verify_poly_certificate(&x, &p, &cert).unwrap());
        }

        // constants are never left multiples of x
        let one = Polynomial::constant(Element::one(&q));
        for bound in [1usize, 2, 3] {
            assert!(poly_ideal_membership(IdealSide::Left, &x, &one, bound).unwrap().is_none());
        }

        // zero generator
        let zero = Polynomial::zero(&q);
        assert!(poly_ideal_membership(IdealSide::Left, &zero, &zero, 2).unwrap().is_some());
        assert!(poly_ideal_membership(IdealSide::Left, &zero, &one, 2).unwrap().is_none());

        // right side: x*i = g*m for m = [i]
        let xi = x.mul(&Polynomial::constant(i.clone())).unwrap();
        let cert = poly_ideal_membership(IdealSide::Right, &x, &xi, 2).unwrap().unwrap();
        assert!(verify_poly_certificate(&x, &xi, &cert).unwrap());

        // degree bound enforcement
        assert!(matches!(
            poly_ideal_membership(IdealSide::Left, &x, &p, 1),
            Err(Error::DegreeBoundExceeded { degree: 2, bound: 1 })
        ));
    }

    #[test]
    fn poly_membership_is_monotone_in_the_bound() {
        let q = quat();
        let x = Polynomial::var(&q);
        let j = Polynomial::constant(Element::basis(&q, 2).unwrap());
        let p = j.mul(&x).unwrap(); // j*x = [j, 1]
        for bound in 1..=3 {
            assert!(
                poly_ideal_membership(IdealSide::Left, &x, &p, bound).unwrap().is_some(),
                "bound {bound}"
            );
        }
    }

    #[test]
    fn two_sided_poly_membership_on_a_small_algebra() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let x = Polynomial::var(&s);
        let e1 = Element::basis(&s, 1).unwrap();
        // p = e1 * x * e1 is in the two-sided ideal of x
        let p = Polynomial::constant(e1.clone())
            .mul(&x)
            .unwrap()
            .mul(&Polynomial::constant(e1.clone()))
            .unwrap();
        let cert = poly_ideal_membership(IdealSide::TwoSided, &x, &p, 3).unwrap().unwrap();
        assert!(verify_poly_certificate(&x, &p, &cert).unwrap());
        // but a constant is not
        let one = Polynomial::constant(Element::one(&s));
        assert!(poly_ideal_membership(IdealSide::TwoSided, &x, &one, 3).unwrap().is_none());
    }

    #[test]
    fn axiom_check_on_principal_element_ideals() {
        let s = catalog("split_complex", SR::Rationals).unwrap();
        let ideal = IdealSpec {
            side: IdealSide::Left,
            generators: vec![Generator::Elem(elem(&s, &[1, 1]))],
            ambient: IdealAmbient::Algebra,
        };
        let report = ideal_axiom_check(&ideal, 100, 0).unwrap();
        assert!(report.passed(), "{:?}", report.failures);

        // a two-sided ideal of an invertible element is the whole algebra
        let q = quat();
        let ideal = IdealSpec {
            side: IdealSide::TwoSided,
            generators: vec![Generator::Elem(elem(&q, &[1, 1, 0, 0]))],
            ambient: IdealAmbient::Algebra,
        };
        let report = ideal_axiom_check(&ideal, 25, 1).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        for b in 0..4 {
            assert!(element_in_span(
                IdealSide::TwoSided,
                &[elem(&q, &[1, 1, 0, 0])],
                &Element::basis(&q, b).unwrap()
            )
            .unwrap());
        }
    }

    #[test]
    fn axiom_check_on_poly_ideals() {
        let q = quat();
        let ideal = IdealSpec {
            side: IdealSide::Left,
            generators: vec![Generator::Poly(Polynomial::var(&q))],
            ambient: IdealAmbient::PolyAlgebra { degree_bound: 2 },
        };
        let report = ideal_axiom_check(&ideal, 6, 0).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn axiom_check_on_rational_ideals() {
        let q = quat();
        let mut s = Sampler::new(2);
        let points: Vec<Element> = (0..4).map(|_| s.element(&q)).collect();
        let ideal = IdealSpec {
            side: IdealSide::Left,
            generators: vec![Generator::Poly(Polynomial::var(&q))],
            ambient: IdealAmbient::RationalAlgebra { sample_points: points },
        };
        let report = ideal_axiom_check(&ideal, 5, 0).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn certificates_render_as_expressions() {
        let q = quat();
        let i = Element::basis(&q, 1).unwrap();
        let b = elem(&q, &[0, 0, 1, 0]);
        let cert = principal_membership(IdealSide::Left, &i, &b).unwrap().unwrap();
        let rendered = cert.render(&q);
        assert!(rendered.contains("*g"), "{rendered}");

        let x = Polynomial::var(&q);
        let p = x.mul(&Polynomial::constant(i)).unwrap().mul(&x).unwrap();
        let cert = poly_ideal_membership(IdealSide::Left, &x, &p, 2).unwrap().unwrap();
        assert!(cert.render().contains("]*g"), "{}", cert.render());
    }
}
