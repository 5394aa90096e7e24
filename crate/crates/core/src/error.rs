use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection")]
    NotBijective,
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group is not transitive on {degree} points")]
    Intransitive { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SggiError {
    #[error("generator {index} is not an involution")]
    NotInvolution { index: usize },
    #[error("generators {i} and {j} do not commute")]
    NotCommuting { i: usize, j: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("label {label} outside 0..{rank}")]
    LabelOutOfRange { label: usize, rank: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge {{{u},{v}}} with label {label}")]
    DuplicateEdge { u: usize, v: usize, label: usize },
    #[error("graph is not a valid sggi graph: {0}")]
    Invalid(String),
    #[error(transparent)]
    Sggi(#[from] SggiError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("(n={n}, r={r}) is outside theorem hypotheses: {reason}")]
    OutsideHypotheses { n: usize, r: usize, reason: String },
    #[error("rank reduction needs rank at least 4, got {rank}")]
    RankTooSmall { rank: usize },
    #[error("tau does not commute with generator {index}")]
    TauNotCentral { index: usize },
    #[error("tau is not an involution")]
    TauNotInvolution,
    #[error("tau already lies in the group")]
    TauInGroup,
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("group is not transitive")]
    Intransitive,
    #[error("tail needs degree at least 5, got {n}")]
    DegreeTooSmall { n: usize },
    #[error(transparent)]
    Sggi(#[from] SggiError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse config: {0}")]
    Parse(String),
}
