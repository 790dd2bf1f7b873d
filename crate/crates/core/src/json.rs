//! JSON input schemas: fields, groups, idempotents and Wedderburn data as
//! they appear on the command line and in data files.
//!
//! Field: `{"p":5,"degree":2,"modulus":[2,4,1]}` (modulus optional).
//! Group: one of `{"abelian":[2,16,9,3]}`,
//! `{"permutations":[[2,3,1],[2,1,4,3]]}` (one-line images of 1..=m), or
//! `{"cayley":[[...],...],"labels":[...]}` (0-based indices, labels
//! optional).
//! Idempotent: `{"coeffs":[[3,0],[1,1],...]}` (one coefficient list per
//! group element) or `{"digits":"112201020000"}` (prime fields only).
//! Wedderburn data: `{"r":3,"noncommutative":[[2,1],[2,1],[2,1],[3,1]]}`.

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::classify::WedderburnData;
use crate::field::{FieldError, FiniteField};
use crate::group::{Group, GroupError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("JSON parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FiniteField, SpecError> {
        Ok(FiniteField::new(self.p, self.degree, self.modulus.clone())?)
    }

    pub fn parse(json: &str) -> Result<FieldSpec, SpecError> {
        Ok(serde_json::from_str(json)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Abelian {
        abelian: Vec<u64>,
    },
    Permutations {
        permutations: Vec<Vec<usize>>,
    },
    Cayley {
        cayley: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, SpecError> {
        let group = match self {
            GroupSpec::Abelian { abelian } => Group::abelian(abelian)?,
            GroupSpec::Permutations { permutations } => Group::from_permutations(permutations)?,
            GroupSpec::Cayley { cayley, labels } => Group::from_cayley(cayley, labels.clone())?,
        };
        Ok(group)
    }

    pub fn parse(json: &str) -> Result<GroupSpec, SpecError> {
        Ok(serde_json::from_str(json)?)
    }

    /// The dense Cayley form of a group, suitable for pinning an element
    /// ordering in a data file.
    pub fn cayley_of(group: &Group) -> GroupSpec {
        let n = group.order();
        let cayley = (0..n)
            .map(|i| (0..n).map(|j| group.mul(i, j)).collect())
            .collect();
        GroupSpec::Cayley {
            cayley,
            labels: Some(group.labels().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdempotentSpec {
    Coeffs { coeffs: Vec<Vec<u64>> },
    Digits { digits: String },
}

impl IdempotentSpec {
    pub fn build(&self, field: &FiniteField, group: &Group) -> Result<AlgebraElement, SpecError> {
        match self {
            IdempotentSpec::Coeffs { coeffs } => {
                let elems = coeffs
                    .iter()
                    .map(|c| field.element(c.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AlgebraElement::from_elements(field, group, elems)?)
            }
            IdempotentSpec::Digits { digits } => {
                Ok(AlgebraElement::from_digits(field, group, digits)?)
            }
        }
    }

    pub fn parse(json: &str) -> Result<IdempotentSpec, SpecError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn coeffs_of(e: &AlgebraElement) -> IdempotentSpec {
        IdempotentSpec::Coeffs {
            coeffs: e
                .coeff_elements()
                .iter()
                .map(|c| c.coeffs().to_vec())
                .collect(),
        }
    }
}

pub fn parse_wedderburn(json: &str) -> Result<WedderburnData, SpecError> {
    Ok(serde_json::from_str(json)?)
}
