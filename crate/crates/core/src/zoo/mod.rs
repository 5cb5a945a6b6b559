//! Constructors for the standard families: matrix algebras, étale algebras,
//! Cayley–Dickson doublings (quaternions, split octonions), the split Albert
//! algebra and products, each with its explicit generating tuple.

mod albert;
mod cayley_dickson;
mod etale;
mod matrix;
mod product;

pub use albert::{albert, albert_generators};
pub use cayley_dickson::{cayley_dickson, octonion_generators, quaternion_algebra, split_octonion};
pub use etale::{
    ceil_log, distinct_entries_generator, etale_logq_generators, field_extension_etale, split_etale, zero_algebra,
};
pub use matrix::{canonical_matrix_generators, matrix_algebra, split_quaternion};
pub use product::product_algebra;

use crate::algebra::{Element, Multialgebra};
use crate::error::Result;
use crate::exactmath::{Field, Scalar};
use crate::search::SearchBudget;

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ZooRecipe {
    ZeroModule {
        field: Field,
        dim: usize,
    },
    Matrix {
        field: Field,
        n: usize,
    },
    SplitEtale {
        field: Field,
        n: usize,
    },
    /// `F_p[x]/(poly)`, coefficients from the constant term up.
    FieldExtensionEtale {
        p: u64,
        poly: Vec<u64>,
    },
    /// Repeated doubling of `F`, one parameter per doubling.
    CayleyDickson {
        field: Field,
        mus: Vec<Scalar>,
    },
    SplitQuaternion {
        field: Field,
    },
    SplitOctonion {
        field: Field,
    },
    Albert {
        field: Field,
    },
    Product(Box<ZooRecipe>, Box<ZooRecipe>),
}

impl ZooRecipe {
    pub fn build(&self) -> Result<Multialgebra> {
        match self {
            ZooRecipe::ZeroModule { field, dim } => zero_algebra(*field, *dim),
            ZooRecipe::Matrix { field, n } => matrix_algebra(*field, *n),
            ZooRecipe::SplitEtale { field, n } => split_etale(*field, *n),
            ZooRecipe::FieldExtensionEtale { p, poly } => field_extension_etale(*p, poly),
            ZooRecipe::CayleyDickson { field, mus } => {
                let mut alg = split_etale(*field, 1)?;
                for mu in mus {
                    alg = cayley_dickson(&alg, mu)?;
                }
                Ok(alg)
            }
            ZooRecipe::SplitQuaternion { field } => split_quaternion(*field),
            ZooRecipe::SplitOctonion { field } => split_octonion(*field),
            ZooRecipe::Albert { field } => albert(*field),
            ZooRecipe::Product(a, b) => product_algebra(&a.build()?, &b.build()?),
        }
    }

    /// The family's explicit generating tuple, where one is known in closed form
    /// (the Albert triple comes from a seeded search under `budget`).
    pub fn generators(&self, alg: &Multialgebra, budget: &SearchBudget) -> Result<Option<Vec<Element>>> {
        Ok(match self {
            ZooRecipe::ZeroModule { .. } => Some(alg.basis()),
            ZooRecipe::Matrix { field, n } => Some(canonical_matrix_generators(*field, *n)?.to_vec()),
            ZooRecipe::SplitEtale { field, n } => match field {
                Field::Prime(p) => Some(etale_logq_generators(*p, *n, false)?),
                Field::Rational => Some(vec![distinct_entries_generator(*field, *n)?]),
            },
            ZooRecipe::FieldExtensionEtale { poly, .. } if poly.len() > 2 => Some(vec![alg.basis_element(1)]),
            ZooRecipe::FieldExtensionEtale { .. } => Some(vec![alg.basis_element(0)]),
            ZooRecipe::SplitQuaternion { field } => Some(canonical_matrix_generators(*field, 2)?.to_vec()),
            ZooRecipe::SplitOctonion { field } => Some(octonion_generators(*field)?.to_vec()),
            ZooRecipe::Albert { .. } => Some(albert_generators(alg, budget)?.to_vec()),
            ZooRecipe::CayleyDickson { .. } | ZooRecipe::Product(..) => None,
        })
    }
}
