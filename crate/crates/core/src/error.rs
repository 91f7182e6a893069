use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("{0} is not a prime in the supported range 1 < p < 2^31")]
    InvalidModulus(u64),
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("expected {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("exponent overflow (max {})", u16::MAX)]
    ExponentOverflow,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid exponent {0}: must be at least 1")]
    InvalidExponent(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("forms have different degrees ({0} vs {1})")]
    DegreeMismatch(u32, u32),
    #[error("the zero ideal is not representable")]
    ZeroIdeal,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("ideal is not saturated; saturate it first (e.g. with `saturate`)")]
    NotSaturated,
    #[error("ideal does not define a 0-dimensional projective subscheme (quotient has Krull dimension {0})")]
    NotZeroDimensional(i64),
    #[error("the images do not form a regular sequence")]
    NotRegularSequence,
    #[error("substitution map has not been verified as a regular sequence")]
    UnverifiedMap,
    #[error("characteristic {found} not allowed here: {requirement}")]
    CharacteristicMismatch { found: u32, requirement: String },
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("parse error at offset {pos}: expected {}", expected.join(" or "))]
    Parse { pos: usize, expected: Vec<String> },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, expected: &[&str]) -> Self {
        Error::Parse { pos, expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    /// Annotates the error with a 1-based source line; an existing annotation
    /// is kept.
    pub fn at_line(self, line: usize) -> Self {
        if let Error::AtLine { .. } = self {
            return self;
        }
        Error::AtLine { line, source: Box::new(self) }
    }

    /// Stable variant name, as used in reports.
    pub fn kind(&self) -> &'static str {
        match self.root() {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::RingMismatch => "RingMismatch",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::ExponentOverflow => "ExponentOverflow",
            Error::InvalidRing(_) => "InvalidRing",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::DegreeMismatch(..) => "DegreeMismatch",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::UnitIdeal => "UnitIdeal",
            Error::NotSaturated => "NotSaturated",
            Error::NotZeroDimensional(_) => "NotZeroDimensional",
            Error::NotRegularSequence => "NotRegularSequence",
            Error::UnverifiedMap => "UnverifiedMap",
            Error::CharacteristicMismatch { .. } => "CharacteristicMismatch",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::Parse { .. } => "ParseError",
            Error::DuplicateName(_) => "DuplicateName",
            Error::UnknownName(_) => "UnknownName",
            Error::AtLine { .. } => unreachable!("root strips line annotations"),
        }
    }

    /// The line annotation, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }

    /// Strips any line annotation.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
