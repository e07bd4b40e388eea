use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("cannot parse Weyl word `{0}`")]
    Parse(String),

    #[error("letter s{letter} is out of range for {generators} generators")]
    LetterOutOfRange { letter: usize, generators: usize },

    #[error("invalid simple system: {0}")]
    InvalidBasis(String),

    #[error("s{s} and s{t} do not generate a group of order 6")]
    NotAdjacent { s: usize, t: usize },

    #[error("{word} is not in D(s{s}, s{t}): exactly one of s{s}, s{t} must be a descent")]
    NotInDomain { word: String, s: usize, t: usize },
}
