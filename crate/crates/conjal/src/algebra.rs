//! Structure-constant algebras with conjugation.
//!
//! An algebra is described by its dimension, a coefficient ring, a structure
//! constant tensor `C` with `e_i e_j = sum_k C[k][i][j] e_k`, and a diagonal
//! involution. `e_0` is the unit and spans the scalar part; the remaining
//! basis vectors span the imaginary part.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarRing};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    name: String,
    dim: usize,
    scalar: ScalarRing,
    /// Flattened `C[k][i][j]` at `(k * dim + i) * dim + j`.
    struct_consts: Vec<Scalar>,
    /// Involution diagonal, `+1` on the unit and `-1` elsewhere in the
    /// standard conjugation. Arbitrary signs are representable so that
    /// broken specs can be constructed and then rejected by validation.
    conj_signs: Vec<i8>,
    basis_names: Vec<String>,
    /// Measured on basis triples at construction, never declared.
    assoc: bool,
}

impl AlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        scalar: ScalarRing,
        dim: usize,
        struct_consts: Vec<Scalar>,
        conj_signs: Option<Vec<i8>>,
        basis_names: Option<Vec<String>>,
    ) -> Result<Arc<AlgebraSpec>> {
        let name = name.into();
        if dim == 0 {
            return Err(Error::InvalidSpec("dimension must be >= 1".into()));
        }
        if struct_consts.len() != dim * dim * dim {
            return Err(Error::InvalidSpec(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                struct_consts.len()
            )));
        }
        for c in &struct_consts {
            if c.ring() != scalar {
                return Err(Error::RingMismatch { left: scalar, right: c.ring() });
            }
        }
        let conj_signs = conj_signs.unwrap_or_else(|| {
            let mut s = vec![-1i8; dim];
            s[0] = 1;
            s
        });
        if conj_signs.len() != dim || conj_signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidSpec("conj_signs must be +-1 with one entry per basis vector".into()));
        }
        let basis_names = basis_names.unwrap_or_else(|| default_basis_names(dim));
        if basis_names.len() != dim {
            return Err(Error::InvalidSpec("one basis name per dimension required".into()));
        }
        for (i, n) in basis_names.iter().enumerate() {
            if n.is_empty() || basis_names[..i].contains(n) {
                return Err(Error::InvalidSpec(format!("bad basis name {n:?}")));
            }
        }
        let mut spec = AlgebraSpec {
            name,
            dim,
            scalar,
            struct_consts,
            conj_signs,
            basis_names,
            assoc: false,
        };
        spec.assoc = spec.measure_associativity();
        Ok(Arc::new(spec))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scalar(&self) -> ScalarRing {
        self.scalar
    }

    pub fn is_associative(&self) -> bool {
        self.assoc
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    /// Resolves a basis name; `e<k>` aliases are accepted for every algebra,
    /// with `e0` naming the unit.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.basis_names.iter().position(|n| n == name) {
            return Some(i);
        }
        name.strip_prefix('e')
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|i| *i < self.dim)
    }

    pub fn c(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.struct_consts[(k * self.dim + i) * self.dim + j]
    }

    pub fn struct_consts(&self) -> &[Scalar] {
        &self.struct_consts
    }

    pub fn conj_sign(&self, i: usize) -> i8 {
        self.conj_signs[i]
    }

    fn measure_associativity(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let left = self.mul_coords(&ij, &unit_coords(self, k));
                    let right = self.mul_coords(&unit_coords(self, i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(k, i, j).clone()).collect()
    }

    /// Bilinear product on raw coordinate vectors.
    fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = (0..self.dim).map(|_| self.scalar.zero()).collect();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai.mul_raw(bj);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(k, i, j);
                    if !c.is_zero() {
                        *slot = slot.add_raw(&ab.mul_raw(c));
                    }
                }
            }
        }
        out
    }
}

fn unit_coords(spec: &AlgebraSpec, i: usize) -> Vec<Scalar> {
    let mut v: Vec<Scalar> = (0..spec.dim).map(|_| spec.scalar.zero()).collect();
    v[i] = spec.scalar.one();
    v
}

fn default_basis_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| if i == 0 { "1".into() } else { format!("e{i}") }).collect()
}

/// A member of an algebra, stored as its coordinate vector in the
/// distinguished basis. Immutable; all operations are pure.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    algebra: Arc<AlgebraSpec>,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn from_coords(algebra: &Arc<AlgebraSpec>, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != algebra.dim() {
            return Err(Error::InvalidSpec(format!(
                "expected {} coordinates, got {}",
                algebra.dim(),
                coords.len()
            )));
        }
        for c in &coords {
            if c.ring() != algebra.scalar() {
                return Err(Error::RingMismatch { left: algebra.scalar(), right: c.ring() });
            }
        }
        Ok(Element { algebra: Arc::clone(algebra), coords })
    }

    pub fn from_i64_coords(algebra: &Arc<AlgebraSpec>, coords: &[i64]) -> Result<Element> {
        let ring = algebra.scalar();
        Element::from_coords(algebra, coords.iter().map(|v| ring.from_i64(*v)).collect())
    }

    pub fn zero(algebra: &Arc<AlgebraSpec>) -> Element {
        Element {
            algebra: Arc::clone(algebra),
            coords: (0..algebra.dim()).map(|_| algebra.scalar().zero()).collect(),
        }
    }

    pub fn one(algebra: &Arc<AlgebraSpec>) -> Element {
        Element::basis(algebra, 0).expect("index 0 exists")
    }

    pub fn basis(algebra: &Arc<AlgebraSpec>, i: usize) -> Result<Element> {
        if i >= algebra.dim() {
            return Err(Error::InvalidSpec(format!("basis index {i} out of range")));
        }
        Ok(Element { algebra: Arc::clone(algebra), coords: unit_coords(algebra, i) })
    }

    pub fn from_scalar(algebra: &Arc<AlgebraSpec>, s: Scalar) -> Result<Element> {
        let mut e = Element::zero(algebra);
        if s.ring() != algebra.scalar() {
            return Err(Error::RingMismatch { left: algebra.scalar(), right: s.ring() });
        }
        e.coords[0] = s;
        Ok(e)
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Scalar::is_zero)
    }

    pub(crate) fn check_same_algebra(&self, rhs: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &rhs.algebra) || self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: format!("{} over {}", self.algebra.name(), self.algebra.scalar()),
                right: format!("{} over {}", rhs.algebra.name(), rhs.algebra.scalar()),
            })
        }
    }

    pub fn add(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs)?;
        let coords =
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.add_raw(b)).collect();
        Ok(Element { algebra: Arc::clone(&self.algebra), coords })
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs)?;
        let coords =
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.sub_raw(b)).collect();
        Ok(Element { algebra: Arc::clone(&self.algebra), coords })
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &Scalar) -> Result<Element> {
        if s.ring() != self.algebra.scalar() {
            return Err(Error::RingMismatch { left: self.algebra.scalar(), right: s.ring() });
        }
        Ok(Element {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(|c| c.mul_raw(s)).collect(),
        })
    }

    /// Bilinear product through the structure constants:
    /// `(ab)^k = sum_{i,j} a^i b^j C[k][i][j]`.
    pub fn mul(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs)?;
        Ok(Element {
            algebra: Arc::clone(&self.algebra),
            coords: self.algebra.mul_coords(&self.coords, &rhs.coords),
        })
    }

    /// The involution: applies the diagonal signs coordinatewise.
    pub fn conj(&self) -> Element {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| if self.algebra.conj_sign(i) < 0 { c.neg() } else { c.clone() })
            .collect();
        Element { algebra: Arc::clone(&self.algebra), coords }
    }

    /// Projection onto the scalar part (coordinate 0).
    pub fn re_part(&self) -> Element {
        let mut out = Element::zero(&self.algebra);
        out.coords[0] = self.coords[0].clone();
        out
    }

    /// Projection onto the imaginary part (coordinates 1..n-1).
    pub fn im_part(&self) -> Element {
        let mut out = self.clone();
        out.coords[0] = self.algebra.scalar().zero();
        out
    }

    /// The scalar `a a*`. Errors with `NotScalar` when the product leaks an
    /// imaginary coordinate, which signals a spec that never passed
    /// validation.
    pub fn norm_form(&self) -> Result<Scalar> {
        let p = self.mul(&self.conj())?;
        if p.coords[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotScalar(self.algebra.name().to_string()));
        }
        Ok(p.coords[0].clone())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Scalar)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (i, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if *i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", self.algebra.basis_name(*i))?;
            } else {
                write!(f, "{}*{}", mag, self.algebra.basis_name(*i))?;
            }
        }
        Ok(())
    }
}

/// Report-style outcome of the algebra axiom checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub unit_ok: bool,
    /// `(a*)* = a` on the basis.
    pub involution_ok: bool,
    /// `(e_i e_j)* = e_j* e_i*` on every basis pair.
    pub anti_homomorphism_ok: bool,
    /// Polarized identities equivalent to `a a*` lying in the scalar part.
    pub norm_scalar_ok: bool,
    /// Measured on basis triples; octonions flow through with `false`.
    pub associative: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    /// Whether the spec is an algebra with conjugation. Associativity is
    /// reported, not required.
    pub fn passed(&self) -> bool {
        self.unit_ok && self.involution_ok && self.anti_homomorphism_ok && self.norm_scalar_ok
    }
}

/// Checks the conjugation-algebra axioms on basis identities. Bilinearity
/// makes basis coverage sufficient; the polarized identities
/// `im(e_i e_j* + e_j e_i*) = 0` for `i < j` together with
/// `im(e_i e_i*) = 0` are exactly the coefficients of the quadratic form
/// `im(a a*)` in the coordinates of `a`.
pub fn validate_algebra(spec: &Arc<AlgebraSpec>) -> ValidationReport {
    let n = spec.dim();
    let mut failures = Vec::new();
    let basis: Vec<Element> =
        (0..n).map(|i| Element::basis(spec, i).expect("in range")).collect();

    let mut unit_ok = true;
    for (j, ej) in basis.iter().enumerate() {
        let left = basis[0].mul(ej).expect("same algebra");
        let right = ej.mul(&basis[0]).expect("same algebra");
        if &left != ej {
            unit_ok = false;
            failures.push(format!("unit: e0*{} != {}", spec.basis_name(j), spec.basis_name(j)));
        }
        if &right != ej {
            unit_ok = false;
            failures.push(format!("unit: {}*e0 != {}", spec.basis_name(j), spec.basis_name(j)));
        }
    }

    let mut involution_ok = true;
    for (i, ei) in basis.iter().enumerate() {
        if &ei.conj().conj() != ei {
            involution_ok = false;
            failures.push(format!("involution: conj(conj(e{i})) != e{i}"));
        }
    }

    let mut anti_homomorphism_ok = true;
    for (i, ei) in basis.iter().enumerate() {
        for (j, ej) in basis.iter().enumerate() {
            let lhs = ei.mul(ej).expect("same algebra").conj();
            let rhs = ej.conj().mul(&ei.conj()).expect("same algebra");
            if lhs != rhs {
                anti_homomorphism_ok = false;
                failures.push(format!(
                    "anti-homomorphism: conj(e{i}*e{j}) != conj(e{j})*conj(e{i})"
                ));
            }
        }
    }

    let mut norm_scalar_ok = true;
    for i in 0..n {
        for j in i..n {
            let p = basis[i].mul(&basis[j].conj()).expect("same algebra");
            let val = if i == j {
                p
            } else {
                let q = basis[j].mul(&basis[i].conj()).expect("same algebra");
                p.add(&q).expect("same algebra")
            };
            if !val.im_part().is_zero() {
                norm_scalar_ok = false;
                failures.push(format!("norm scalarity: im(e{i}*conj(e{j}) + e{j}*conj(e{i})) != 0"));
            }
        }
    }

    let associative = spec.is_associative();

    ValidationReport {
        unit_ok,
        involution_ok,
        anti_homomorphism_ok,
        norm_scalar_ok,
        associative,
        failures,
    }
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Basis product table with single-term products: `e_p e_q = sign * e_idx`.
type CayleyTable = Vec<Vec<(i8, usize)>>;

/// One Cayley-Dickson doubling step. Pairs `(a, b)` multiply as
/// `(a, b)(c, d) = (ac + gamma d* b, d a + b c*)` with `(a, b)* = (a*, -b)`.
/// `gamma = -1` doubles division algebras, `+1` the split family, `0` the
/// dual numbers.
fn cayley_dickson_double(base: &CayleyTable, gamma: i8) -> CayleyTable {
    let n = base.len();
    let conj_sign = |i: usize| if i == 0 { 1i8 } else { -1i8 };
    let mut table = vec![vec![(0i8, 0usize); 2 * n]; 2 * n];
    for p in 0..2 * n {
        for q in 0..2 * n {
            table[p][q] = match (p < n, q < n) {
                (true, true) => base[p][q],
                (true, false) => {
                    let (s, m) = base[q - n][p];
                    (s, m + n)
                }
                (false, true) => {
                    let (s, m) = base[p - n][q];
                    (conj_sign(q) * s, m + n)
                }
                (false, false) => {
                    let (s, m) = base[q - n][p - n];
                    (conj_sign(q - n) * gamma * s, m)
                }
            };
        }
    }
    table
}

fn reals_table() -> CayleyTable {
    vec![vec![(1, 0)]]
}

fn table_to_spec(
    name: &str,
    ring: ScalarRing,
    table: &CayleyTable,
    basis_names: Vec<String>,
) -> Result<Arc<AlgebraSpec>> {
    let n = table.len();
    let mut consts: Vec<Scalar> = (0..n * n * n).map(|_| ring.zero()).collect();
    for (i, row) in table.iter().enumerate() {
        for (j, (sign, k)) in row.iter().enumerate() {
            consts[(k * n + i) * n + j] = ring.from_i64(*sign as i64);
        }
    }
    AlgebraSpec::new(name, ring, n, consts, None, Some(basis_names))
}

pub const CATALOG_NAMES: [&str; 6] =
    ["complex", "split_complex", "dual", "quaternion", "split_quaternion", "octonion"];

/// Built-in algebras over a chosen coefficient ring. Every entry passes
/// `validate_algebra`.
pub fn catalog(name: &str, ring: ScalarRing) -> Result<Arc<AlgebraSpec>> {
    let canonical = name.replace('-', "_");
    let names = |list: &[&str]| list.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let complex = || cayley_dickson_double(&reals_table(), -1);
    let quaternion = || cayley_dickson_double(&complex(), -1);
    match canonical.as_str() {
        "complex" => table_to_spec("complex", ring, &complex(), names(&["1", "i"])),
        "split_complex" => table_to_spec(
            "split_complex",
            ring,
            &cayley_dickson_double(&reals_table(), 1),
            names(&["1", "e1"]),
        ),
        "dual" => table_to_spec(
            "dual",
            ring,
            &cayley_dickson_double(&reals_table(), 0),
            names(&["1", "e1"]),
        ),
        "quaternion" => {
            table_to_spec("quaternion", ring, &quaternion(), names(&["1", "i", "j", "k"]))
        }
        "split_quaternion" => table_to_spec(
            "split_quaternion",
            ring,
            &cayley_dickson_double(&complex(), 1),
            names(&["1", "i", "j", "k"]),
        ),
        "octonion" => table_to_spec(
            "octonion",
            ring,
            &cayley_dickson_double(&quaternion(), -1),
            names(&["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]),
        ),
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}

// ---------------------------------------------------------------------------
// Spec files
// ---------------------------------------------------------------------------

impl AlgebraSpec {
    /// Serializes to the text spec format: `name`, `dim`, `scalar`,
    /// `struct_consts` as n*n*n nested arrays of scalar literals, and
    /// `conj_signs`.
    pub fn to_json(&self) -> String {
        use serde_json::{json, Value};
        let n = self.dim;
        let consts: Vec<Value> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| Value::String(self.c(k, i, j).to_string()))
                            .collect::<Vec<_>>()
                            .into()
                    })
                    .collect::<Vec<Value>>()
                    .into()
            })
            .collect();
        let doc = json!({
            "name": self.name,
            "dim": self.dim,
            "scalar": self.scalar.to_string(),
            "struct_consts": consts,
            "conj_signs": self.conj_signs,
        });
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(src: &str) -> Result<Arc<AlgebraSpec>> {
        use serde_json::Value;
        let doc: Value =
            serde_json::from_str(src).map_err(|e| Error::InvalidSpec(format!("bad json: {e}")))?;
        let obj = doc.as_object().ok_or_else(|| Error::InvalidSpec("expected an object".into()))?;
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidSpec("missing string field name".into()))?;
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidSpec("missing integer field dim".into()))?
            as usize;
        let ring = ScalarRing::parse(
            obj.get("scalar")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidSpec("missing string field scalar".into()))?,
        )?;
        let consts_val = obj
            .get("struct_consts")
            .ok_or_else(|| Error::InvalidSpec("missing field struct_consts".into()))?;
        let mut consts = Vec::with_capacity(dim * dim * dim);
        let outer = consts_val
            .as_array()
            .filter(|a| a.len() == dim)
            .ok_or_else(|| Error::InvalidSpec("struct_consts must be an n-element array".into()))?;
        for row in outer {
            let mid = row
                .as_array()
                .filter(|a| a.len() == dim)
                .ok_or_else(|| Error::InvalidSpec("struct_consts rows must have n entries".into()))?;
            for cell_row in mid {
                let inner = cell_row.as_array().filter(|a| a.len() == dim).ok_or_else(|| {
                    Error::InvalidSpec("struct_consts cells must have n entries".into())
                })?;
                for cell in inner {
                    consts.push(json_scalar(&ring, cell)?);
                }
            }
        }
        let conj_signs = match obj.get("conj_signs") {
            None | Some(Value::Null) => None,
            Some(Value::Array(a)) => {
                let mut signs = Vec::with_capacity(a.len());
                for v in a {
                    let s = v
                        .as_i64()
                        .filter(|s| *s == 1 || *s == -1)
                        .ok_or_else(|| Error::InvalidSpec("conj_signs entries must be +-1".into()))?;
                    signs.push(s as i8);
                }
                Some(signs)
            }
            Some(_) => return Err(Error::InvalidSpec("conj_signs must be an array".into())),
        };
        AlgebraSpec::new(name, ring, dim, consts, conj_signs, None)
    }
}

fn json_scalar(ring: &ScalarRing, v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => ring.parse_literal(s),
        serde_json::Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::InvalidSpec(format!("non-integer scalar {n}")))?;
            Ok(ring.from_i64(i))
        }
        _ => Err(Error::InvalidSpec(format!("bad scalar entry {v}"))),
    }
}
