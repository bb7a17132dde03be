//! A short tour of the kernel: build algebras, classify and invert
//! elements, evaluate polynomials and rational mappings, decide ideal
//! membership.
//!
//! Run with: cargo run -p conjal --example tour

use conjal::algebra::{catalog, validate_algebra, Element};
use conjal::fractions::{classify, invert, left_fraction, lift_algebra};
use conjal::ideal::{poly_ideal_membership, IdealSide};
use conjal::polynomial::{conj_as_polynomial, Polynomial};
use conjal::rational::{reval, RationalExpr};
use conjal::scalar::ScalarRing;

fn main() -> conjal::Result<()> {
    // quaternions over the rationals
    let quat = catalog("quaternion", ScalarRing::Rationals)?;
    let report = validate_algebra(&quat);
    println!("quaternion axioms pass: {}, associative: {}", report.passed(), report.associative);

    let a = Element::from_i64_coords(&quat, &[1, 1, 1, 1])?;
    println!("a       = {a}");
    println!("a*      = {}", a.conj());
    println!("N(a)    = {}", a.norm_form()?);
    println!("a^-1    = {}", invert(&a)?);

    // zero divisors live in the split algebras
    let split = catalog("split_complex", ScalarRing::Rationals)?;
    let z = Element::from_i64_coords(&split, &[1, 1])?;
    println!("split-complex 1+e1 is {}", classify(&z).describe());

    // fractions of an algebra over the integers evaluate in the lift
    let zquat = catalog("quaternion", ScalarRing::Integers)?;
    let two = Element::from_i64_coords(&zquat, &[2, 0, 0, 0])?;
    let i = Element::basis(&zquat, 1)?;
    println!("2^-1 * i over Z lifts to {}", left_fraction(&two, &i)?);
    let lift = lift_algebra(&zquat)?;
    println!("lift target ring: {}", lift.target().scalar());

    // polynomials: x i x evaluated at k, and conjugation as a polynomial
    let x = Polynomial::var(&quat);
    let p = x.mul(&Polynomial::constant(Element::basis(&quat, 1)?))?.mul(&x)?;
    let k = Element::basis(&quat, 3)?;
    println!("(x i x)(k) = {}", p.eval(&k)?);
    if let Some(rep) = conj_as_polynomial(&quat)? {
        let terms: Vec<String> =
            rep.iter().map(|(u, v)| format!("({u})*x*({v})")).collect();
        println!("x* = {}", terms.join(" + "));
    }

    // rational mappings: (x - i)^-1 away from its roots
    let denom = Polynomial::var(&quat).sub(&Polynomial::constant(Element::basis(&quat, 1)?))?;
    let expr = RationalExpr::inv_poly(denom)?;
    let at = Element::from_i64_coords(&quat, &[0, 0, 1, 0])?;
    println!("inv(x - i) at j = {}", reval(&expr, &at)?);

    // ideal membership with a certificate
    let member = poly_ideal_membership(IdealSide::Left, &x, &p, 3)?;
    match member {
        Some(cert) => println!("x i x in A[x]*x, certificate {}", cert.render()),
        None => println!("x i x not reached at this bound"),
    }
    Ok(())
}
