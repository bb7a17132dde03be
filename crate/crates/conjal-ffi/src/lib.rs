//! C ABI for the conjal kernel.
//!
//! Handles are opaque pointers owned by Rust: every constructor hands out a
//! pointer that must be released with the matching `*_free`, and every
//! returned string must be released with `conjal_string_free`. Functions
//! report a `ConjalStatus`; on failure a human-readable detail is available
//! from `conjal_last_error_message` until the next call on the same thread.

use conjal::algebra::{catalog, validate_algebra, AlgebraSpec, Element};
use conjal::error::Error;
use conjal::fractions::{classify, invert, ClassTag};
use conjal::parse::{compile_mixed, compile_rational, eval_at_point, eval_element, parse_expr};
use conjal::rational::reval;
use conjal::scalar::ScalarRing;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjalStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    RingMismatch = 3,
    NotEntire = 4,
    NotAField = 5,
    DivisionByZero = 6,
    AlgebraMismatch = 7,
    NotScalar = 8,
    NotInvertible = 9,
    UnknownAlgebra = 10,
    NonAssociative = 11,
    DegreeBound = 12,
    RootOfDenominator = 13,
    Precondition = 14,
    Syntax = 15,
    UnknownBasis = 16,
    InvalidSpec = 17,
    Usage = 18,
    Io = 19,
    Internal = 20,
}

/// Classification tags mirroring the kernel's zero set / invertible split.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjalClass {
    Zero = 0,
    ZeroDivisor = 1,
    Invertible = 2,
}

/// Outcome of the algebra axiom checks.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ConjalValidation {
    pub unit_ok: bool,
    pub involution_ok: bool,
    pub anti_homomorphism_ok: bool,
    pub norm_scalar_ok: bool,
    pub associative: bool,
    /// Unit, involution, anti-homomorphism and norm scalarity all hold.
    pub passed: bool,
}

/// Opaque algebra handle.
pub struct ConjalAlgebra(Arc<AlgebraSpec>);

/// Opaque element handle. Elements remember their algebra; results of
/// inversion may live in the lifted (fraction-field) algebra.
pub struct ConjalElement(Element);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let cleaned = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).ok();
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn status_of(e: &Error) -> ConjalStatus {
    match e {
        Error::RingMismatch { .. } => ConjalStatus::RingMismatch,
        Error::NotEntire(_) => ConjalStatus::NotEntire,
        Error::NotAField(_) => ConjalStatus::NotAField,
        Error::DivisionByZero(_) => ConjalStatus::DivisionByZero,
        Error::AlgebraMismatch { .. } => ConjalStatus::AlgebraMismatch,
        Error::NotScalar(_) => ConjalStatus::NotScalar,
        Error::NotInvertible(_) => ConjalStatus::NotInvertible,
        Error::UnknownAlgebra(_) => ConjalStatus::UnknownAlgebra,
        Error::NonAssociative(_) => ConjalStatus::NonAssociative,
        Error::DegreeBoundExceeded { .. } => ConjalStatus::DegreeBound,
        Error::RootOfDenominator { .. } => ConjalStatus::RootOfDenominator,
        Error::Precondition(_) => ConjalStatus::Precondition,
        Error::Syntax { .. } => ConjalStatus::Syntax,
        Error::UnknownBasisName { .. } => ConjalStatus::UnknownBasis,
        Error::InvalidSpec(_) => ConjalStatus::InvalidSpec,
        Error::Usage(_) => ConjalStatus::Usage,
        Error::Io(_) => ConjalStatus::Io,
    }
}

fn guarded(f: impl FnOnce() -> ConjalStatus) -> ConjalStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            ConjalStatus::Internal
        }
    }
}

fn fail(e: &Error) -> ConjalStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// # Safety
/// `ptr` must be null or a C string valid for the duration of the call.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ConjalStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(ConjalStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        ConjalStatus::InvalidUtf8
    })
}

fn export_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Returns the crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn conjal_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns the detail message of the most recent failure on this thread,
/// or null. The caller frees it with `conjal_string_free`.
#[no_mangle]
pub extern "C" fn conjal_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by a conjal function
/// that documents this deallocator, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conjal_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Algebra handles
// ---------------------------------------------------------------------------

/// Builds a catalog algebra. `name` is one of complex, split_complex, dual,
/// quaternion, split_quaternion, octonion; `ring` is "Z", "Q" or "Z/<n>".
///
/// # Safety
/// `name` and `ring` must be valid C strings; `out` must be a valid
/// location to store the new handle.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_catalog(
    name: *const c_char,
    ring: *const c_char,
    out: *mut *mut ConjalAlgebra,
) -> ConjalStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return ConjalStatus::NullPointer;
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let ring = match read_str(ring) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let ring = match ScalarRing::parse(ring) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        match catalog(name, ring) {
            Ok(alg) => {
                clear_error();
                *out = Box::into_raw(Box::new(ConjalAlgebra(alg)));
                ConjalStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Loads an algebra from its JSON spec text.
///
/// # Safety
/// `json` must be a valid C string; `out` must be a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_from_json(
    json: *const c_char,
    out: *mut *mut ConjalAlgebra,
) -> ConjalStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return ConjalStatus::NullPointer;
        }
        let text = match read_str(json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match AlgebraSpec::from_json(text) {
            Ok(alg) => {
                clear_error();
                *out = Box::into_raw(Box::new(ConjalAlgebra(alg)));
                ConjalStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Serializes an algebra to its JSON spec text; free with
/// `conjal_string_free`. Returns null on a null handle.
///
/// # Safety
/// `alg` must be null or a live algebra handle.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_to_json(alg: *const ConjalAlgebra) -> *mut c_char {
    if alg.is_null() {
        return std::ptr::null_mut();
    }
    export_string((*alg).0.to_json())
}

/// # Safety
/// `alg` must be null or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_free(alg: *mut ConjalAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be null or a live algebra handle.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_dim(alg: *const ConjalAlgebra) -> usize {
    if alg.is_null() {
        return 0;
    }
    (*alg).0.dim()
}

/// # Safety
/// `alg` must be null or a live algebra handle.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_is_associative(alg: *const ConjalAlgebra) -> bool {
    !alg.is_null() && (*alg).0.is_associative()
}

/// Runs the axiom checks and fills `report`.
///
/// # Safety
/// `alg` must be a live algebra handle and `report` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_algebra_validate(
    alg: *const ConjalAlgebra,
    report: *mut ConjalValidation,
) -> ConjalStatus {
    guarded(|| {
        if alg.is_null() || report.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        let r = validate_algebra(&(*alg).0);
        *report = ConjalValidation {
            unit_ok: r.unit_ok,
            involution_ok: r.involution_ok,
            anti_homomorphism_ok: r.anti_homomorphism_ok,
            norm_scalar_ok: r.norm_scalar_ok,
            associative: r.associative,
            passed: r.passed(),
        };
        clear_error();
        ConjalStatus::Ok
    })
}

// ---------------------------------------------------------------------------
// Element handles
// ---------------------------------------------------------------------------

unsafe fn element_out(out: *mut *mut ConjalElement, e: Element) -> ConjalStatus {
    clear_error();
    *out = Box::into_raw(Box::new(ConjalElement(e)));
    ConjalStatus::Ok
}

/// Parses an element expression (no variable) against the algebra.
///
/// # Safety
/// `alg` must be a live handle, `src` a valid C string, `out` a valid
/// location.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_parse(
    alg: *const ConjalAlgebra,
    src: *const c_char,
    out: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if alg.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        let src = match read_str(src) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let ambient = &(*alg).0;
        match parse_expr(src, ambient).and_then(|ast| eval_element(&ast, ambient)) {
            Ok(e) => element_out(out, e),
            Err(e) => fail(&e),
        }
    })
}

/// Renders an element in the expression grammar; free with
/// `conjal_string_free`.
///
/// # Safety
/// `e` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_format(e: *const ConjalElement) -> *mut c_char {
    if e.is_null() {
        return std::ptr::null_mut();
    }
    export_string((*e).0.to_string())
}

/// # Safety
/// `e` must be null or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_free(e: *mut ConjalElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

macro_rules! binary_op {
    ($name:ident, $method:ident, $doc:literal) => {
        #[doc = $doc]
        ///
        /// # Safety
        /// `a` and `b` must be live element handles and `out` a valid
        /// location.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            a: *const ConjalElement,
            b: *const ConjalElement,
            out: *mut *mut ConjalElement,
        ) -> ConjalStatus {
            guarded(|| {
                if a.is_null() || b.is_null() || out.is_null() {
                    set_error("null pointer");
                    return ConjalStatus::NullPointer;
                }
                match (*a).0.$method(&(*b).0) {
                    Ok(e) => element_out(out, e),
                    Err(e) => fail(&e),
                }
            })
        }
    };
}

binary_op!(conjal_element_add, add, "Sum of two elements of one algebra.");
binary_op!(conjal_element_sub, sub, "Difference of two elements of one algebra.");
binary_op!(conjal_element_mul, mul, "Structure-constant product of two elements.");

/// Conjugate of an element.
///
/// # Safety
/// `a` must be a live element handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_conj(
    a: *const ConjalElement,
    out: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        element_out(out, (*a).0.conj())
    })
}

/// Writes the norm `a a*` as a scalar literal; free with
/// `conjal_string_free`.
///
/// # Safety
/// `a` must be a live element handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_norm(
    a: *const ConjalElement,
    out: *mut *mut c_char,
) -> ConjalStatus {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        match (*a).0.norm_form() {
            Ok(n) => {
                clear_error();
                *out = export_string(n.to_string());
                ConjalStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Classifies an element. When it is a zero divisor and `witness` is
/// non-null, a nonzero annihilating partner is returned through it (free
/// with `conjal_element_free`); otherwise `witness` is set to null.
///
/// # Safety
/// `a` must be a live element handle, `tag` a valid location, `witness`
/// null or a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_classify(
    a: *const ConjalElement,
    tag: *mut ConjalClass,
    witness: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if a.is_null() || tag.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        let class = classify(&(*a).0);
        *tag = match class.tag {
            ClassTag::Zero => ConjalClass::Zero,
            ClassTag::ZeroDivisor => ConjalClass::ZeroDivisor,
            ClassTag::Invertible => ConjalClass::Invertible,
        };
        if !witness.is_null() {
            *witness = match class.witness {
                Some(w) => Box::into_raw(Box::new(ConjalElement(w))),
                None => std::ptr::null_mut(),
            };
        }
        clear_error();
        ConjalStatus::Ok
    })
}

/// Inverse through the conjugate, computed in the lifted algebra. Fails
/// with `NotInvertible` when the norm vanishes.
///
/// # Safety
/// `a` must be a live element handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_element_invert(
    a: *const ConjalElement,
    out: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if a.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        match invert(&(*a).0) {
            Ok(e) => element_out(out, e),
            Err(e) => fail(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// Expression evaluation
// ---------------------------------------------------------------------------

/// Evaluates a polynomial expression (in `x` and `~x`) at a point, both
/// given in the expression grammar. Nonassociative ambients evaluate the
/// parse tree as written.
///
/// # Safety
/// `alg` must be a live handle, `poly_src` and `point_src` valid C strings,
/// `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_poly_eval(
    alg: *const ConjalAlgebra,
    poly_src: *const c_char,
    point_src: *const c_char,
    out: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if alg.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        let poly_src = match read_str(poly_src) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let point_src = match read_str(point_src) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let ambient = &(*alg).0;
        let result = parse_expr(poly_src, ambient).and_then(|ast| {
            let v = eval_element(&parse_expr(point_src, ambient)?, ambient)?;
            if ambient.is_associative() {
                compile_mixed(&ast, ambient)?.eval(&v)
            } else {
                eval_at_point(&ast, &v)
            }
        });
        match result {
            Ok(e) => element_out(out, e),
            Err(e) => fail(&e),
        }
    })
}

/// Evaluates a rational expression (`inv(p)` allowed) at a point, in the
/// lifted algebra. Fails with `RootOfDenominator` at roots.
///
/// # Safety
/// `alg` must be a live handle, `expr_src` and `point_src` valid C strings,
/// `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn conjal_rational_eval(
    alg: *const ConjalAlgebra,
    expr_src: *const c_char,
    point_src: *const c_char,
    out: *mut *mut ConjalElement,
) -> ConjalStatus {
    guarded(|| {
        if alg.is_null() || out.is_null() {
            set_error("null pointer");
            return ConjalStatus::NullPointer;
        }
        let expr_src = match read_str(expr_src) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let point_src = match read_str(point_src) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let ambient = &(*alg).0;
        let result = parse_expr(expr_src, ambient)
            .and_then(|ast| compile_rational(&ast, ambient))
            .and_then(|expr| {
                let v = eval_element(&parse_expr(point_src, ambient)?, ambient)?;
                reval(&expr, &v)
            });
        match result {
            Ok(e) => element_out(out, e),
            Err(e) => fail(&e),
        }
    })
}
