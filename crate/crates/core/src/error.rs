use thiserror::Error;

/// Errors raised by construction, validation and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),
    #[error("transformation closure exceeds {0} elements")]
    ClosureTooLarge(usize),
    #[error("monoid is not a group")]
    NotAGroup,
    #[error("subset is not a normal subgroup")]
    NotNormalSubgroup,
    #[error("invalid Rees matrix data: {0}")]
    InvalidReesSpec(String),
    #[error("invalid semilattice of groups: {0}")]
    InvalidSemilattice(String),
    #[error("link {0} -> {1} is not a group homomorphism")]
    LinkNotHomomorphism(usize, usize),
    #[error("links {0} -> {1} -> {2} do not compose to the direct link")]
    LinkCoherenceViolation(usize, usize, usize),
    #[error("more than {0} right ideals")]
    RightIdealEnumerationTooLarge(usize),

    #[error("identity does not fix act element {0}")]
    IdentityLawViolation(usize),
    #[error("act associativity fails: {0}*({1}{2}) != ({0}*{1})*{2}")]
    AssociativityViolation(usize, usize, usize),
    #[error("empty generating set")]
    EmptyGeneratorSet,
    #[error("element {0} out of range (size {1})")]
    OutOfRange(usize, usize),
    #[error("not a subact: {0} * {1} leaves the set")]
    NotASubact(usize, usize),
    #[error("acts are over different monoids")]
    MonoidMismatch,
    #[error("not an act homomorphism: ({0}*{1}) maps wrongly")]
    NotAHomomorphism(usize, usize),
    #[error("complement of the submonoid is not an ideal: {0}*{1} lands in the submonoid")]
    ComplementNotIdeal(usize, usize),
    #[error("image of the embedding is not a submonoid")]
    NotASubmonoid,
    #[error("not a retraction: {0}")]
    NotARetraction(String),

    #[error("partition is not a congruence: {0} ~ {1} but not after acting by {2}")]
    NotCompatible(usize, usize, usize),
    #[error("partition has {got} entries, act has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("congruences are on different acts")]
    ActMismatch,
    #[error("search space estimate {0} exceeds the configured cap")]
    SearchSpaceTooLarge(u128),

    #[error("element {0} is not a zero")]
    NotAZero(usize),
    #[error("monoid is not a Clifford monoid")]
    NotClifford,
    #[error("elements {0} and {1} are R-related")]
    RRelated(usize, usize),
    #[error("forbidden set meets the block of the separated element")]
    XMeetsBlock,
    #[error("sandwich matrix has no all-identity column")]
    NotNormalized,
    #[error("{0} is not below {1} in the act preorder")]
    NotComparable(usize, usize),
    #[error(
        "right congruence is not two-sided: {0} ~ {1} but not after left multiplication by {2}"
    )]
    NotTwoSidedCongruence(usize, usize, usize),
    #[error("separated element {0} lies in the forbidden set")]
    ElementInForbiddenSet(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("parameter {name} out of range: {detail}")]
    ParamOutOfRange { name: String, detail: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
