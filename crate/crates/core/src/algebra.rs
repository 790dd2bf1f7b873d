//! Elements of the group algebra F_q G: coefficient vectors over the field
//! indexed by group elements, with convolution multiplication extending the
//! group operation.  Idempotents, the regular-representation matrix of an
//! element, exact ideal dimension through rank, and the dimension function
//! D(x) live here.

use crate::field::{FMatrix, FieldElement, FiniteField};
use crate::group::Group;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different group algebras")]
    AlgebraMismatch,
    #[error("coefficient vector has length {got}, group has order {expected}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("field error: {0}")]
    Field(#[from] crate::field::FieldError),
    #[error("digit strings are only defined over prime fields")]
    DigitsNeedPrimeField,
    #[error("digit {0} is not a residue mod {1}")]
    DigitOutOfRange(char, u64),
    #[error("index set is not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("subgroup order {0} is divisible by the characteristic {1}")]
    SubgroupOrderNotInvertible(u64, u64),
    #[error("|G|*lambda_1 of the element does not lie in the prime subfield")]
    ResidueNotInPrimeField,
}

/// An element of F_q G.  Coefficients are stored as field-element codes
/// indexed by group-element index; the element knows its field and group
/// and refuses to mix with others.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FiniteField,
    group: Group,
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn zero(field: &FiniteField, group: &Group) -> AlgebraElement {
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    /// The multiplicative identity: coefficient 1 at the group identity.
    pub fn one(field: &FiniteField, group: &Group) -> AlgebraElement {
        let mut coeffs = vec![0; group.order()];
        coeffs[group.identity()] = 1;
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        }
    }

    /// The basis element corresponding to one group element.
    pub fn group_element(field: &FiniteField, group: &Group, index: usize) -> AlgebraElement {
        let mut coeffs = vec![0; group.order()];
        coeffs[index] = 1;
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        }
    }

    pub fn from_elements(
        field: &FiniteField,
        group: &Group,
        coeffs: Vec<FieldElement>,
    ) -> Result<AlgebraElement, AlgebraError> {
        if coeffs.len() != group.order() {
            return Err(AlgebraError::CoefficientLength {
                expected: group.order(),
                got: coeffs.len(),
            });
        }
        let mut codes = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            if c.field() != field {
                return Err(AlgebraError::Field(crate::field::FieldError::FieldMismatch));
            }
            codes.push(c.code());
        }
        Ok(AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: codes,
        })
    }

    /// Coefficient vectors of prime-field algebras print naturally as digit
    /// strings ("112201020000"); this parses that form, position i mapping
    /// to the group's i-th element.
    pub fn from_digits(
        field: &FiniteField,
        group: &Group,
        digits: &str,
    ) -> Result<AlgebraElement, AlgebraError> {
        if !field.is_prime_field() {
            return Err(AlgebraError::DigitsNeedPrimeField);
        }
        let chars: Vec<char> = digits.trim().chars().collect();
        if chars.len() != group.order() {
            return Err(AlgebraError::CoefficientLength {
                expected: group.order(),
                got: chars.len(),
            });
        }
        let mut coeffs = Vec::with_capacity(chars.len());
        for &ch in &chars {
            let d = ch
                .to_digit(10)
                .ok_or(AlgebraError::DigitOutOfRange(ch, field.p()))? as u64;
            if d >= field.p() {
                return Err(AlgebraError::DigitOutOfRange(ch, field.p()));
            }
            coeffs.push(d);
        }
        Ok(AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        })
    }

    pub(crate) fn from_codes(field: &FiniteField, group: &Group, coeffs: Vec<u64>) -> AlgebraElement {
        debug_assert_eq!(coeffs.len(), group.order());
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.from_code(self.coeffs[i])
    }

    pub fn coeff_elements(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| self.field.from_code(c)).collect()
    }

    pub(crate) fn codes(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| if i == self.group.identity() { c == 1 } else { c == 0 })
    }

    /// Hamming weight of the coefficient vector.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_compatible(&self, rhs: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.field == rhs.field && self.group == rhs.group {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(rhs)?;
        let ctx = self.field.scalar();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| ctx.add(a, b))
            .collect();
        Ok(AlgebraElement {
            field: self.field.clone(),
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(rhs)?;
        let ctx = self.field.scalar();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| ctx.sub(a, b))
            .collect();
        Ok(AlgebraElement {
            field: self.field.clone(),
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> Result<AlgebraElement, AlgebraError> {
        if c.field() != &self.field {
            return Err(AlgebraError::Field(crate::field::FieldError::FieldMismatch));
        }
        let ctx = self.field.scalar();
        let code = c.code();
        let coeffs = self.coeffs.iter().map(|&a| ctx.mul(code, a)).collect();
        Ok(AlgebraElement {
            field: self.field.clone(),
            group: self.group.clone(),
            coeffs,
        })
    }

    /// Convolution product: (ab)_k = sum over i*j = k of a_i b_j, through
    /// the Cayley table.
    pub fn alg_mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(rhs)?;
        let ctx = self.field.scalar();
        let n = self.group.order();
        let mut out = vec![0u64; n];
        for i in 0..n {
            let ai = self.coeffs[i];
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                let bj = rhs.coeffs[j];
                if bj == 0 {
                    continue;
                }
                let k = self.group.mul(i, j);
                out[k] = ctx.add(out[k], ctx.mul(ai, bj));
            }
        }
        Ok(AlgebraElement {
            field: self.field.clone(),
            group: self.group.clone(),
            coeffs: out,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        match self.alg_mul(self) {
            Ok(sq) => sq == *self,
            Err(_) => false,
        }
    }

    /// The coefficient of the element at the group identity.
    pub fn lambda1(&self) -> FieldElement {
        self.coeff(self.group.identity())
    }

    /// Matrix of x -> x*e in the group basis: row g is the coefficient
    /// vector of g*e.  Its row space is the left ideal F_qG*e, and
    /// M(ab) = M(a) * M(b) under this (row vector) convention.
    pub fn right_mul_matrix(&self) -> FMatrix {
        let n = self.group.order();
        let ctx = self.field.scalar();
        let mut m = FMatrix::zero(&self.field, n, n);
        for g in 0..n {
            for j in 0..n {
                let ej = self.coeffs[j];
                if ej == 0 {
                    continue;
                }
                let k = self.group.mul(g, j);
                let cur = m.code_at(g, k);
                m.set_code(g, k, ctx.add(cur, ej));
            }
        }
        m
    }

    /// dim of the left ideal F_qG*e, exactly, as the rank of the
    /// regular-representation matrix.  Meaningful as a code dimension for
    /// idempotent e; computed for any element.
    pub fn ideal_dimension(&self) -> usize {
        self.right_mul_matrix().rank()
    }

    /// Least residue of |G| * lambda_1(e) mod p.  For an idempotent this is
    /// always an element of the prime subfield; anything else is reported
    /// as an error.
    pub fn identity_residue(&self) -> Result<u64, AlgebraError> {
        let scale = self.field.from_int(self.group.order() as u64);
        let x = self.lambda1().mul(&scale).unwrap();
        x.prime_subfield_value()
            .ok_or(AlgebraError::ResidueNotInPrimeField)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coeff = self.field.from_code(c);
            let label = self.group.label(i);
            let term = if i == self.group.identity() {
                format!("{coeff}")
            } else if coeff.is_one() {
                label.to_string()
            } else if self.field.is_prime_field() {
                format!("{coeff}*{label}")
            } else {
                format!("({coeff})*{label}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The dimension function D: for the residue class of x mod p with least
/// non-negative representative r, D = r when r != 0 and D = p when r = 0.
/// In an ECD context D(|G| * lambda_1(e)) is the dimension of the code
/// generated by the idempotent e.
pub fn dimension_formula_d(x: u64, p: u64) -> u64 {
    let r = x % p;
    if r == 0 {
        p
    } else {
        r
    }
}

/// The averaged subgroup sum (1/|S|) * sum of the elements of S: always an
/// idempotent when |S| is invertible in the field.
pub fn hat_idempotent(
    group: &Group,
    subgroup: &[usize],
    field: &FiniteField,
) -> Result<AlgebraElement, AlgebraError> {
    let mut members = subgroup.to_vec();
    members.sort_unstable();
    members.dedup();
    if !group.is_subgroup(&members) {
        return Err(AlgebraError::NotSubgroup);
    }
    let size = members.len() as u64;
    if size % field.p() == 0 {
        return Err(AlgebraError::SubgroupOrderNotInvertible(size, field.p()));
    }
    let inv_size = field.from_int(size).inv().expect("size is a unit");
    let mut coeffs = vec![0u64; group.order()];
    for &m in &members {
        coeffs[m] = inv_size.code();
    }
    Ok(AlgebraElement {
        field: field.clone(),
        group: group.clone(),
        coeffs,
    })
}

/// 1 - e, the complementary idempotent of an idempotent e.
pub fn complement(e: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::one(e.field(), e.group())
        .sub(e)
        .expect("same algebra")
}
