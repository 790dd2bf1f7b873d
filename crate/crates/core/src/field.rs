//! Exact arithmetic in GF(p^α) and dense linear algebra over it.
//!
//! A field is a prime p, a degree α and a monic irreducible modulus of that
//! degree over GF(p); elements are residue polynomials stored as length-α
//! coefficient vectors (constant term first).  When no modulus is supplied,
//! the lexicographically smallest monic irreducible polynomial is chosen
//! (coefficients compared constant-term-first), which makes field
//! construction deterministic across runs.
//!
//! Elements carry a handle to their field; mixing fields in any operation is
//! a hard error, never a coercion.

use crate::arith;
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("p^degree = {0}^{1} does not fit 63-bit arithmetic")]
    TooLarge(u64, u32),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    ModulusDegree { expected: u32, got: usize },
    #[error("modulus coefficient {0} is not reduced mod {1}")]
    CoefficientRange(u64, u64),
    #[error("modulus is reducible over GF({0})")]
    Reducible(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element has {got} coefficients but the field has degree {expected}")]
    ElementLength { expected: u32, got: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("multiplicative order undefined: gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),
    #[error("modulus of a multiplicative order must be positive")]
    ZeroModulus,
}

/// A prime power q = p^α given by its parts; the arithmetic classification
/// paths work with this directly so no modulus has to be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    p: u64,
    alpha: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(p: u64, alpha: u32) -> Result<PrimePower, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if alpha == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = checked_pow(p, alpha).ok_or(FieldError::TooLarge(p, alpha))?;
        Ok(PrimePower { p, alpha, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.alpha)
        }
    }
}

fn checked_pow(p: u64, alpha: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..alpha {
        acc = acc.checked_mul(p)?;
    }
    if acc <= i64::MAX as u64 {
        Some(acc)
    } else {
        None
    }
}

struct FieldInner {
    p: u64,
    degree: u32,
    modulus: Vec<u64>, // length degree + 1, constant term first, monic
    q: u64,
    tables: OnceLock<Option<ScalarTables>>,
}

/// GF(p^α) as polynomial residues over the prime field.  Cheap to clone
/// (shared handle) and immutable after construction.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldInner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.degree)
        }
    }
}

impl FiniteField {
    /// Builds GF(p^degree).  With `modulus: None` the canonical (lex-smallest
    /// irreducible) modulus is selected; a supplied modulus must be monic,
    /// reduced, of the right degree and irreducible.
    pub fn new(p: u64, degree: u32, modulus: Option<Vec<u64>>) -> Result<FiniteField, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if degree == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = checked_pow(p, degree).ok_or(FieldError::TooLarge(p, degree))?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != degree as usize + 1 || *m.last().unwrap() != 1 {
                    return Err(FieldError::ModulusDegree {
                        expected: degree,
                        got: m.len().saturating_sub(1),
                    });
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(FieldError::CoefficientRange(c, p));
                }
                if !poly_is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(p));
                }
                m
            }
            None => canonical_modulus(p, degree),
        };
        Ok(FiniteField(Arc::new(FieldInner {
            p,
            degree,
            modulus,
            q,
            tables: OnceLock::new(),
        })))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FiniteField, FieldError> {
        FiniteField::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn prime_power(&self) -> PrimePower {
        PrimePower {
            p: self.0.p,
            alpha: self.0.degree,
            q: self.0.q,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.degree == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.degree as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, k: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.degree as usize];
        coeffs[0] = k % self.0.p;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Element from a coefficient vector (constant term first).  Shorter
    /// vectors are zero-padded; entries must already be reduced mod p.
    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.degree as usize {
            return Err(FieldError::ElementLength {
                expected: self.0.degree,
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.0.p) {
            return Err(FieldError::CoefficientRange(c, self.0.p));
        }
        let mut full = coeffs;
        full.resize(self.0.degree as usize, 0);
        Ok(FieldElement {
            field: self.clone(),
            coeffs: full,
        })
    }

    /// Elements are also addressable by their mixed-radix code
    /// Σ cᵢ·pⁱ ∈ [0, q); codes are the working representation of the dense
    /// kernels.
    pub fn from_code(&self, code: u64) -> FieldElement {
        debug_assert!(code < self.0.q);
        let mut coeffs = vec![0; self.0.degree as usize];
        let mut c = code;
        for slot in coeffs.iter_mut() {
            *slot = c % self.0.p;
            c /= self.0.p;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub(crate) fn code_of(&self, coeffs: &[u64]) -> u64 {
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.0.p + c;
        }
        code
    }

    /// Scalar context for dense kernels: table-backed for small q, direct
    /// polynomial arithmetic otherwise.  Tables are built once per field.
    pub(crate) fn scalar(&self) -> ScalarCtx<'_> {
        let tables = self
            .0
            .tables
            .get_or_init(|| ScalarTables::build(self))
            .as_ref();
        ScalarCtx {
            field: self,
            tables,
        }
    }
}

/// An element of a [`FiniteField`]: a length-α coefficient vector over GF(p),
/// constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn code(&self) -> u64 {
        self.field.code_of(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// True when the element lies in the prime subfield GF(p).
    pub fn prime_subfield_value(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, rhs: &FieldElement) -> Result<(), FieldError> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same_field(rhs)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| if a == 0 { 0 } else { p - a })
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same_field(rhs)?;
        let coeffs = poly_mulmod(
            &self.coeffs,
            &rhs.coeffs,
            &self.field.0.modulus,
            self.field.p(),
        );
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.field.q() - 2))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 if c == 1 => "g".to_string(),
                1 => format!("{c}g"),
                _ if c == 1 => format!("g^{i}"),
                _ => format!("{c}g^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over GF(p) (dense coefficient vectors, low degree
// first). Only what construction-time irreducibility testing and element
// multiplication need.

fn poly_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// (a * b) mod modulus where modulus is monic; result has modulus.len()-1
/// coefficients.
fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    if d == 1 {
        return vec![arith::mul_mod(a[0], b[0], p)];
    }
    // For degree >= 2 the size bound q = p^degree <= 2^63 forces p < 2^32,
    // so coefficient products fit u64 and row sums fit u128.
    let mut prod = vec![0u128; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] += (ai * bj) as u128;
        }
    }
    let mut red: Vec<u64> = prod.iter().map(|&x| (x % p as u128) as u64).collect();
    // Reduce by the monic modulus from the top down.
    for i in (d..red.len()).rev() {
        let c = red[i];
        if c == 0 {
            continue;
        }
        red[i] = 0;
        for j in 0..d {
            let sub = arith::mul_mod(c, modulus[j], p);
            let idx = i - d + j;
            red[idx] = (red[idx] + p - sub) % p;
        }
    }
    red.truncate(d);
    red.resize(d, 0);
    red
}

/// x^e mod modulus (modulus monic of degree >= 1).
fn poly_x_powmod(e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    let mut result = vec![0u64; d];
    result[0] = 1 % p;
    if d == 0 {
        return result;
    }
    let mut base = vec![0u64; d];
    if d == 1 {
        // x mod (x + c) = -c
        base[0] = (p - modulus[0]) % p;
    } else {
        base[1] = 1;
    }
    let mut e = e;
    let mut basep = base;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &basep, modulus, p);
        }
        basep = poly_mulmod(&basep, &basep, modulus, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    let db = bb.len() - 1;
    if db == 0 {
        // division by a nonzero constant leaves no remainder
        return vec![0];
    }
    let lead_inv = arith::mod_pow(bb[db], p - 2, p);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = arith::mul_mod(r[dr], lead_inv, p);
        if c != 0 {
            for j in 0..=db {
                let sub = arith::mul_mod(c, bb[j], p);
                let idx = dr - db + j;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Exact irreducibility test for a monic polynomial over GF(p):
/// f of degree d is irreducible iff x^(p^d) ≡ x (mod f) and
/// gcd(x^(p^(d/ℓ)) - x, f) = 1 for every prime ℓ dividing d.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let q = match checked_pow(p, d) {
        Some(q) => q,
        None => return false,
    };
    let xq = poly_x_powmod(q, f, p);
    let mut x = vec![0u64; d as usize];
    x[1] = 1;
    if xq != x {
        return false;
    }
    for (l, _) in arith::factorize(d as u64) {
        let e = checked_pow(p, d / l as u32).unwrap();
        let mut g = poly_x_powmod(e, f, p);
        // g := x^(p^(d/l)) - x
        g[1] = (g[1] + p - 1) % p;
        let gcd = poly_gcd(&g, f, p);
        if !(gcd.len() == 1 && gcd[0] != 0) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree, comparing coefficient tuples constant-term-first.
fn canonical_modulus(p: u64, degree: u32) -> Vec<u64> {
    if degree == 1 {
        return vec![0, 1]; // x itself
    }
    let d = degree as usize;
    let mut coeffs = vec![0u64; d]; // c_0 .. c_{d-1}, leading 1 implied
    loop {
        let mut f = coeffs.clone();
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return f;
        }
        // Odometer increment with the last coefficient fastest, which walks
        // tuples (c_0, ..., c_{d-1}) in increasing lexicographic order.
        let mut i = d;
        loop {
            debug_assert!(i > 0, "no irreducible polynomial found");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Packed scalar context

pub(crate) struct ScalarTables {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

const TABLE_LIMIT: u64 = 1024;

impl ScalarTables {
    fn build(field: &FiniteField) -> Option<ScalarTables> {
        let q = field.q();
        if q > TABLE_LIMIT {
            return None;
        }
        let q = q as usize;
        let elems: Vec<FieldElement> = (0..q as u64).map(|c| field.from_code(c)).collect();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                add[a * q + b] = ea.add(eb).unwrap().code() as u32;
                mul[a * q + b] = ea.mul(eb).unwrap().code() as u32;
            }
        }
        let neg = elems.iter().map(|e| e.neg().code() as u32).collect();
        let inv = elems
            .iter()
            .map(|e| {
                if e.is_zero() {
                    0
                } else {
                    e.inv().unwrap().code() as u32
                }
            })
            .collect();
        Some(ScalarTables { q, add, mul, neg, inv })
    }
}

/// Field arithmetic on element codes; table-backed when q is small enough,
/// direct polynomial arithmetic otherwise.  Used by every dense kernel
/// (convolution, rank, distance enumeration).
#[derive(Clone, Copy)]
pub(crate) struct ScalarCtx<'a> {
    field: &'a FiniteField,
    tables: Option<&'a ScalarTables>,
}

impl<'a> ScalarCtx<'a> {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self.tables {
            Some(t) => t.add[a as usize * t.q + b as usize] as u64,
            // digitwise, allocation-free: this is the inner operation of
            // the distance kernel when the field is too large for tables
            None => {
                let p = self.field.p();
                let d = self.field.degree();
                let (mut a, mut b) = (a, b);
                let mut out = 0u64;
                let mut stride = 1u64;
                for i in 0..d {
                    let mut s = a % p + b % p;
                    if s >= p {
                        s -= p;
                    }
                    out += s * stride;
                    if i + 1 < d {
                        stride *= p;
                    }
                    a /= p;
                    b /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self.tables {
            Some(t) => t.mul[a as usize * t.q + b as usize] as u64,
            None => self.direct(|x, y| x.mul(y).unwrap(), a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match self.tables {
            Some(t) => t.neg[a as usize] as u64,
            None => {
                let p = self.field.p();
                let d = self.field.degree();
                let mut a = a;
                let mut out = 0u64;
                let mut stride = 1u64;
                for i in 0..d {
                    let da = a % p;
                    let s = if da == 0 { 0 } else { p - da };
                    out += s * stride;
                    if i + 1 < d {
                        stride *= p;
                    }
                    a /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        match self.tables {
            Some(t) => t.inv[a as usize] as u64,
            None => self.field.from_code(a).inv().unwrap().code(),
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Raw addition table for hot loops, when available.
    pub fn add_table(&self) -> Option<(&'a [u32], usize)> {
        self.tables.map(|t| (t.add.as_slice(), t.q))
    }

    fn direct(&self, op: impl Fn(&FieldElement, &FieldElement) -> FieldElement, a: u64, b: u64) -> u64 {
        op(&self.field.from_code(a), &self.field.from_code(b)).code()
    }

    /// Row of multiples [0*a, 1*a, ..., (q-1)*a] for scaled-row precomputes;
    /// only sensible for table-backed fields but correct for all.
    pub fn scaled_row(&self, row: &[u64], c: u64) -> Vec<u64> {
        row.iter().map(|&x| self.mul(c, x)).collect()
    }
}

// ---------------------------------------------------------------------------
// Dense matrices over a finite field

/// A dense matrix over one [`FiniteField`], entries stored as element codes.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(16) {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl FMatrix {
    pub fn zero(field: &FiniteField, rows: usize, cols: usize) -> FMatrix {
        FMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> FMatrix {
        let mut m = FMatrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &FiniteField, rows: &[Vec<FieldElement>]) -> Result<FMatrix, FieldError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(FieldError::RaggedMatrix);
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            for e in row {
                if e.field() != field {
                    return Err(FieldError::FieldMismatch);
                }
                data.push(e.code());
            }
        }
        Ok(FMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.from_code(self.data[i * self.cols + j])
    }

    pub(crate) fn code_at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn set_code(&mut self, i: usize, j: usize, code: u64) {
        self.data[i * self.cols + j] = code;
    }

    pub(crate) fn row_codes(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Gaussian elimination; returns (echelon data, rank).  With
    /// `reduced` the result is the unique reduced row echelon form.
    fn eliminate(&self, reduced: bool) -> (Vec<u64>, usize) {
        let ctx = self.field.scalar();
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(src) = (pivot_row..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            for j in 0..cols {
                a.swap(pivot_row * cols + j, src * cols + j);
            }
            let inv = ctx.inv(a[pivot_row * cols + col]);
            if inv != 1 {
                for j in col..cols {
                    a[pivot_row * cols + j] = ctx.mul(inv, a[pivot_row * cols + j]);
                }
            }
            let range: Box<dyn Iterator<Item = usize>> = if reduced {
                Box::new((0..rows).filter(|&r| r != pivot_row))
            } else {
                Box::new(pivot_row + 1..rows)
            };
            for r in range {
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let s = ctx.mul(factor, a[pivot_row * cols + j]);
                    a[r * cols + j] = ctx.sub(a[r * cols + j], s);
                }
            }
            pivot_row += 1;
        }
        (a, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.eliminate(false).1
    }

    /// Nonzero rows of the (non-reduced) row echelon form: a deterministic
    /// basis of the row space.
    pub fn row_basis(&self) -> FMatrix {
        let (data, rank) = self.eliminate(false);
        FMatrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: data[..rank * self.cols].to_vec(),
        }
    }

    /// Nonzero rows of the reduced row echelon form (the canonical basis).
    pub fn rref_basis(&self) -> FMatrix {
        let (data, rank) = self.eliminate(true);
        FMatrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: data[..rank * self.cols].to_vec(),
        }
    }

    pub fn mat_mul(&self, rhs: &FMatrix) -> Result<FMatrix, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(FieldError::RaggedMatrix);
        }
        let ctx = self.field.scalar();
        let mut out = FMatrix::zero(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.data[i * self.cols + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = ctx.mul(aik, rhs.data[k * rhs.cols + j]);
                    let idx = i * rhs.cols + j;
                    out.data[idx] = ctx.add(out.data[idx], prod);
                }
            }
        }
        Ok(out)
    }
}

/// Rank of a rectangular matrix given as rows of field elements.
pub fn matrix_rank(rows: &[Vec<FieldElement>]) -> Result<usize, FieldError> {
    if rows.is_empty() || rows[0].is_empty() {
        return Ok(0);
    }
    let field = rows[0][0].field().clone();
    Ok(FMatrix::from_rows(&field, rows)?.rank())
}

// ---------------------------------------------------------------------------
// Modular order helpers

/// base^exp mod m with m = 1 mapping everything to 0.
pub fn modpow(base: u64, exp: u64, m: u64) -> u64 {
    arith::mod_pow(base, exp, m)
}

/// Least a > 0 with base^a ≡ 1 (mod modulus); returns 1 when modulus = 1.
/// Requires gcd(base, modulus) = 1.
pub fn multiplicative_order(base: u64, modulus: u64) -> Result<u64, FieldError> {
    if modulus == 0 {
        return Err(FieldError::ZeroModulus);
    }
    if modulus == 1 {
        return Ok(1);
    }
    let b = base % modulus;
    if arith::gcd(b, modulus) != 1 {
        return Err(FieldError::NotCoprime(base, modulus));
    }
    let mut order = arith::euler_phi(modulus);
    for (f, _) in arith::factorize(order) {
        while order % f == 0 && arith::mod_pow(b, order / f, modulus) == 1 {
            order /= f;
        }
    }
    Ok(order)
}
