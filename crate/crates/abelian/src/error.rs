use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("map is not well defined: image of relation {relation} does not lie in the target relation lattice")]
    NotWellDefined { relation: usize },
    #[error("maps are not composable: {0}")]
    NotComposable(String),
    #[error("denominator subgroup is not contained in the numerator lattice (generator {0})")]
    NotContained(usize),
    #[error("subgroup is not mapped into the target subgroup (generator {0})")]
    NotInduced(usize),
    #[error("boundary matrices do not compose to zero between degrees {0} and {1}")]
    NotAChainComplex(i64, i64),
    #[error("linear system has no integral solution")]
    NoSolution,
    #[error("map is not invertible")]
    NotInvertible,
}
