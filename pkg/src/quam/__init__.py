"""Quantitative argumentation engine for staged legal mediation.

Evaluates each party's weighted bipolar argument graph, maps goal
acceptability to values of the disputed variable, measures the residual
conflict between the parties, and tracks a mediator applying one persuasive
argument per stage until consensus.
"""

from .core import (
    Argument,
    ArgumentKind,
    CycleError,
    DomainError,
    InvalidFrameworkError,
    Polarity,
    Provenance,
    QuamError,
    QuamFramework,
    Relation,
    Violation,
    apply_influencer,
    topological_order,
    validate_framework,
)
from .evaluation import (
    ConstraintConflict,
    ConstraintConflictError,
    ConstraintFiring,
    EvaluationResult,
    InfluencePair,
    check_constraint_conflict,
    combine,
    evaluate,
    f_att,
    f_supp,
    fold_influence,
)
from .resolution import (
    DisputeConfig,
    InvalidConfigError,
    Role,
    VariableClass,
    consensus,
    distance,
    map_to_value,
    tau,
    validate_transforms,
)
from .session import (
    DuplicateMoveError,
    EmptyLedgerError,
    IllegalMoveError,
    MediationSession,
    MissingPriorityError,
    Move,
    PersuasiveArgument,
    SessionError,
    StageSequenceError,
    StageSnapshot,
    TrajectoryRow,
    UnknownPartyError,
    UnknownPersuasiveError,
    apply_move,
    create_session,
    replay,
    select_conflict_free,
    trajectory,
    undo,
    what_if,
)
from .io import (
    DocumentSyntaxError,
    SchemaViolationError,
    SessionDocument,
    parse_document,
    parse_session,
    serialize_document,
    serialize_session,
    session_to_document,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
