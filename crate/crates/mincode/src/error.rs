use std::fmt;

/// Errors produced by field construction, code construction, enumeration and
/// the CLI surface.
#[derive(Debug)]
pub enum Error {
    /// The requested field order is not a prime power.
    NotAPrimePower(u64),
    /// Prime-power order with no registered modulus (or order out of range).
    UnsupportedOrder(u64),
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// Matrix shapes do not line up.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Generator matrix rows are linearly dependent.
    RankDeficient {
        rank: usize,
        rows: usize,
    },
    /// q^k exceeds the enumeration cap.
    EnumerationTooLarge {
        messages: u128,
        cap: u64,
    },
    /// Operation needs dimension >= 2.
    DimensionTooSmall {
        k: usize,
    },
    /// Doubly-even test on a non-binary code.
    WrongCharacteristic {
        q: u64,
    },
    /// even_weight_code needs n >= 3.
    LengthTooSmall {
        n: usize,
    },
    /// Solomon-Stiffler dimension profile out of order or overlapping.
    InvalidProfile(String),
    /// Generator has a zero column or two projectively equal columns.
    NotProjective,
    /// A normalized column was not found among the simplex columns.
    ColumnNotFound,
    /// The Ashikhmin-Barg condition q*w_min > (q-1)*w_max does not hold.
    AbConditionFails {
        q: u64,
        w_min: u64,
        w_max: u64,
    },
    /// Extension values sequence has the wrong length.
    BadValuesLength {
        expected: usize,
        got: usize,
    },
    /// Extension values must be nonzero field elements.
    ZeroExtensionValue {
        index: usize,
    },
    /// Self-orthogonal extension requires a self-orthogonal input.
    NotSelfOrthogonal,
    /// No padding of <= q columns restores self-orthogonality.
    PaddingExhausted,
    /// dual_bch_trace degree without a registered GF(2^m) modulus.
    UnsupportedDegree {
        m: usize,
    },
    /// Subcode distribution exceeds the full distribution somewhere.
    InconsistentInputs(String),
    /// family_parameters got an unknown family name.
    UnknownFamily(String),
    /// family_parameters arguments violate the family's constraints.
    ConstraintViolated(String),
    /// Vector is not a codeword of the given code.
    NotACodeword,
    /// Minimality of the zero codeword is undefined.
    ZeroCodeword,
    /// Matrix file parse error with 1-based line number.
    Parse {
        line: usize,
        msg: String,
    },
    /// CLI usage error.
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::UnsupportedOrder(q) => {
                write!(f, "no canonical modulus registered for GF({q})")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::RankDeficient { rank, rows } => {
                write!(f, "generator is rank deficient: rank {rank} < {rows} rows")
            }
            Error::EnumerationTooLarge { messages, cap } => {
                write!(f, "enumeration of {messages} messages exceeds cap {cap}")
            }
            Error::DimensionTooSmall { k } => {
                write!(f, "operation needs dimension >= 2, got k = {k}")
            }
            Error::WrongCharacteristic { q } => {
                write!(
                    f,
                    "doubly-even is defined for binary codes only, got q = {q}"
                )
            }
            Error::LengthTooSmall { n } => {
                write!(f, "even-weight code needs n >= 3, got n = {n}")
            }
            Error::InvalidProfile(msg) => write!(f, "invalid dimension profile: {msg}"),
            Error::NotProjective => write!(f, "generator matrix is not projective"),
            Error::ColumnNotFound => {
                write!(f, "internal: embedded column missing from simplex columns")
            }
            Error::AbConditionFails { q, w_min, w_max } => {
                let g = gcd(*w_min, *w_max);
                write!(
                    f,
                    "Ashikhmin-Barg condition fails: w_min/w_max = {w_min}/{w_max} (= {}/{}) <= {}/{q}",
                    w_min / g,
                    w_max / g,
                    q - 1
                )
            }
            Error::BadValuesLength { expected, got } => {
                write!(
                    f,
                    "extension values: expected n' = {expected} entries, got {got}"
                )
            }
            Error::ZeroExtensionValue { index } => {
                write!(f, "extension value at index {index} is zero")
            }
            Error::NotSelfOrthogonal => write!(f, "input code is not self-orthogonal"),
            Error::PaddingExhausted => {
                write!(f, "no padding of <= q columns restores self-orthogonality")
            }
            Error::UnsupportedDegree { m } => {
                write!(
                    f,
                    "dual BCH trace code needs odd m in {{3,5,7,9}}, got m = {m}"
                )
            }
            Error::InconsistentInputs(msg) => write!(f, "inconsistent inputs: {msg}"),
            Error::UnknownFamily(name) => write!(f, "unknown family {name:?}"),
            Error::ConstraintViolated(msg) => write!(f, "constraint violated: {msg}"),
            Error::NotACodeword => write!(f, "vector is not a codeword of the code"),
            Error::ZeroCodeword => write!(f, "the zero codeword has no minimality status"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
