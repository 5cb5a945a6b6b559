//! Multialgebras over a field: structure tensors, evaluation, subalgebra
//! closure and generation tests.

mod closure;
pub mod identities;
mod multialgebra;
mod tensor;

pub use closure::{base_change_check, closure, is_generating, Closure, GenerationCertificate, Method};
pub use multialgebra::{Element, Multialgebra};
pub use tensor::{OpRole, OperationTensor, Term};

pub(crate) use closure::certify;
