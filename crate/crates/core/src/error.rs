use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("radicand mismatch: sqrt({left}) and sqrt({right}) live in different fields")]
    RadicandMismatch { left: u32, right: u32 },

    #[error("radicand {0} is not a squarefree integer greater than 1")]
    BadRadicand(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("irrational residue: value still has a nonzero sqrt({radicand}) component")]
    IrrationalResidue { radicand: u32 },

    #[error("{operation} does not support the {family} family")]
    UnsupportedFamily {
        family: String,
        operation: &'static str,
    },

    #[error("{0}")]
    Domain(String),
}
