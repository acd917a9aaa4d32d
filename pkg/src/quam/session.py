"""Staged mediation over two argument frameworks.

A session holds both parties' frameworks, the dispute configuration, and the
mediator's catalogue of persuasive arguments per party. The mediator moves
one argument at a time into one party's framework; every committed move
appends to a ledger and produces a stage snapshot (scores, mapped values,
distance, consensus). The ledger is the source of truth: snapshots are
caches that any replay of the ledger must reproduce exactly.

Writers must be serialized per session (one mediator steers a session);
reads of committed snapshots are safe concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .core import (
    Argument,
    InvalidFrameworkError,
    QuamError,
    QuamFramework,
    Relation,
    Violation,
)
from .evaluation import EvaluationResult, evaluate
from .resolution import DisputeConfig, InvalidConfigError, consensus, distance, map_to_value, validate_transforms


class SessionError(QuamError):
    """Base for violations of the mediation protocol."""


class UnknownPartyError(SessionError):
    pass


class UnknownPersuasiveError(SessionError):
    pass


class DuplicateMoveError(SessionError):
    pass


class StageSequenceError(SessionError):
    pass


class EmptyLedgerError(SessionError):
    pass


class IllegalMoveError(SessionError):
    pass


class MissingPriorityError(SessionError):
    pass


@dataclass(frozen=True)
class PersuasiveArgument:
    """One item of the mediator's knowledge, ready to drop into a framework.

    ``known_relations`` are candidate influence edges the mediator has
    identified; the relation actually played may differ (the mediator
    assigns weight and target at move time). Mandatory arguments carry a
    norm priority used to resolve conflicts between norms.
    """

    argument: Argument
    known_relations: tuple[Relation, ...] = ()
    norm_priority: Optional[int] = None


@dataclass(frozen=True)
class Move:
    stage_index: int
    target_party: str
    persuasive_id: str
    relation: Relation


@dataclass(frozen=True)
class StageSnapshot:
    stage_index: int
    evaluations: dict[str, EvaluationResult]
    values: dict[str, float]
    distance: float
    consensus: bool

    def goal_scores(self, session: "MediationSession") -> dict[str, float]:
        return {
            party: self.evaluations[party].scores[fw.goal.id]
            for party, fw in session.initial_frameworks.items()
        }


class TrajectoryRow(NamedTuple):
    stage: int
    goal_scores: dict[str, float]
    values: dict[str, float]
    distance: float
    consensus: bool


@dataclass
class MediationSession:
    initial_frameworks: dict[str, QuamFramework]
    frameworks: dict[str, QuamFramework]
    config: DisputeConfig
    persuasive_sets: dict[str, tuple[PersuasiveArgument, ...]]
    ledger: list[Move] = field(default_factory=list)
    snapshots: list[StageSnapshot] = field(default_factory=list)

    @property
    def stage(self) -> int:
        return len(self.ledger)

    def persuasive(self, party: str, persuasive_id: str) -> PersuasiveArgument:
        for pa in self.persuasive_sets.get(party, ()):
            if pa.argument.id == persuasive_id:
                return pa
        raise UnknownPersuasiveError(
            f"no persuasive argument {persuasive_id!r} for party {party!r}"
        )


def _goal_score(fw: QuamFramework, result: EvaluationResult) -> float:
    return result.scores[fw.goal.id]


def _snapshot(
    stage_index: int,
    frameworks: dict[str, QuamFramework],
    config: DisputeConfig,
    evaluations: dict[str, EvaluationResult],
) -> StageSnapshot:
    values = {
        party: map_to_value(
            config, config.roles[party], _goal_score(frameworks[party], evaluations[party])
        )
        for party in frameworks
    }
    party1, party2 = config.party_order
    sf1 = _goal_score(frameworks[party1], evaluations[party1])
    sf2 = _goal_score(frameworks[party2], evaluations[party2])
    return StageSnapshot(
        stage_index=stage_index,
        evaluations=evaluations,
        values=values,
        distance=distance(config, sf1, sf2),
        consensus=consensus(config, sf1, sf2),
    )


def _check_persuasive_sets(
    frameworks: dict[str, QuamFramework],
    persuasive_sets: dict[str, Sequence[PersuasiveArgument]],
) -> list[Violation]:
    report: list[Violation] = []
    framework_ids = {aid for fw in frameworks.values() for aid in fw.argument_map}
    by_id: dict[str, PersuasiveArgument] = {}
    for party, items in persuasive_sets.items():
        if party not in frameworks:
            report.append(
                Violation("unknown-party", f"persuasive set for unknown party {party!r}")
            )
        for pa in items:
            arg = pa.argument
            if arg.provenance.value == "party":
                report.append(
                    Violation(
                        "provenance",
                        f"persuasive argument {arg.id!r} must have mediator provenance",
                        (arg.id,),
                    )
                )
            if arg.provenance.pinned and abs(arg.base_score - 1.0) > 1e-9:
                report.append(
                    Violation(
                        "pinned-base-score",
                        f"factual/mandatory persuasive argument {arg.id!r} must have base score 1",
                        (arg.id,),
                    )
                )
            if arg.id in framework_ids:
                report.append(
                    Violation(
                        "id-collision",
                        f"persuasive argument id {arg.id!r} already used in a framework",
                        (arg.id,),
                    )
                )
            seen = by_id.get(arg.id)
            if seen is None:
                by_id[arg.id] = pa
            elif seen.argument.provenance is not arg.provenance:
                report.append(
                    Violation(
                        "class-disjointness",
                        f"persuasive argument {arg.id!r} appears with two classes: "
                        f"{seen.argument.provenance.value} and {arg.provenance.value} "
                        "(classes must be pairwise disjoint)",
                        (arg.id,),
                    )
                )
            elif seen.argument != arg:
                report.append(
                    Violation(
                        "inconsistent-definition",
                        f"persuasive argument {arg.id!r} defined differently per party",
                        (arg.id,),
                    )
                )
    return report


def create_session(
    fw1: QuamFramework,
    fw2: QuamFramework,
    config: DisputeConfig,
    persuasive_sets: dict[str, Sequence[PersuasiveArgument]] | None = None,
) -> MediationSession:
    """Validate everything and open a session with its stage-0 snapshot."""
    from .core import validate_framework

    persuasive_sets = persuasive_sets or {}
    for fw in (fw1, fw2):
        report = validate_framework(fw)
        if report:
            raise InvalidFrameworkError(report, fw.party_label)
    if fw1.party_label == fw2.party_label:
        raise InvalidConfigError(
            [Violation("party-labels", f"both frameworks labeled {fw1.party_label!r}")]
        )
    frameworks = {fw.party_label: fw for fw in (fw1, fw2)}
    if set(config.roles) != set(frameworks):
        raise InvalidConfigError(
            [
                Violation(
                    "roles",
                    f"config roles assign {sorted(config.roles)} but parties are "
                    f"{sorted(frameworks)}",
                )
            ]
        )
    config_report = validate_transforms(config)
    if config_report:
        raise InvalidConfigError(config_report)
    shared = set(fw1.argument_map) & set(fw2.argument_map)
    if shared:
        raise InvalidFrameworkError(
            [
                Violation(
                    "id-collision",
                    f"the two frameworks share argument ids {sorted(shared)}",
                    tuple(sorted(shared)),
                )
            ]
        )
    set_report = _check_persuasive_sets(frameworks, persuasive_sets)
    if set_report:
        raise InvalidConfigError(set_report)

    session = MediationSession(
        initial_frameworks=dict(frameworks),
        frameworks=dict(frameworks),
        config=config,
        persuasive_sets={p: tuple(items) for p, items in persuasive_sets.items()},
    )
    evaluations = {party: evaluate(fw) for party, fw in frameworks.items()}
    session.snapshots.append(_snapshot(0, frameworks, config, evaluations))
    return session


def _move_result(
    session: MediationSession, move: Move
) -> tuple[QuamFramework, StageSnapshot]:
    """Validate a move against the session and compute its outcome without
    committing anything."""
    if move.stage_index != session.stage + 1:
        raise StageSequenceError(
            f"move carries stage {move.stage_index}, next stage is {session.stage + 1}"
        )
    if move.target_party not in session.frameworks:
        raise UnknownPartyError(f"unknown party {move.target_party!r}")
    pa = session.persuasive(move.target_party, move.persuasive_id)
    for past in session.ledger:
        if (
            past.target_party == move.target_party
            and past.persuasive_id == move.persuasive_id
        ):
            raise DuplicateMoveError(
                f"persuasive argument {move.persuasive_id!r} already applied to "
                f"{move.target_party!r} at stage {past.stage_index}"
            )
    if move.relation.source != move.persuasive_id:
        raise IllegalMoveError(
            f"move relation source {move.relation.source!r} must be the persuasive "
            f"argument {move.persuasive_id!r}"
        )
    from .core import apply_influencer

    grown = apply_influencer(session.frameworks[move.target_party], pa.argument, move.relation)
    evaluations = dict(session.snapshots[-1].evaluations)
    evaluations[move.target_party] = evaluate(grown)
    frameworks = dict(session.frameworks)
    frameworks[move.target_party] = grown
    return grown, _snapshot(move.stage_index, frameworks, session.config, evaluations)


def apply_move(session: MediationSession, move: Move) -> StageSnapshot:
    """Commit one mediator move; on any error the session is unchanged."""
    grown, snapshot = _move_result(session, move)
    session.frameworks[move.target_party] = grown
    session.ledger.append(move)
    session.snapshots.append(snapshot)
    return snapshot


def what_if(session: MediationSession, move: Move) -> StageSnapshot:
    """Compute the snapshot a move would produce, committing nothing."""
    _, snapshot = _move_result(session, move)
    return snapshot


def undo(session: MediationSession) -> MediationSession:
    """Drop the last move and snapshot, restoring the previous stage exactly."""
    if not session.ledger:
        raise EmptyLedgerError("no moves to undo")
    last = session.ledger.pop()
    session.snapshots.pop()
    from .core import apply_influencer

    # Rebuild the touched framework from the ledger; it is the source of truth.
    rebuilt = session.initial_frameworks[last.target_party]
    for move in session.ledger:
        if move.target_party == last.target_party:
            pa = session.persuasive(move.target_party, move.persuasive_id)
            rebuilt = apply_influencer(rebuilt, pa.argument, move.relation)
    session.frameworks[last.target_party] = rebuilt
    return session


def trajectory(session: MediationSession) -> list[TrajectoryRow]:
    """One row per stage 0..m, straight off the snapshots."""
    rows = []
    for snap in session.snapshots:
        rows.append(
            TrajectoryRow(
                stage=snap.stage_index,
                goal_scores=snap.goal_scores(session),
                values=dict(snap.values),
                distance=snap.distance,
                consensus=snap.consensus,
            )
        )
    return rows


def replay(
    initial_frameworks: Iterable[QuamFramework],
    config: DisputeConfig,
    persuasive_sets: dict[str, Sequence[PersuasiveArgument]],
    ledger: Iterable[Move],
) -> MediationSession:
    """Rebuild a session from scratch by re-applying its ledger in order."""
    fw1, fw2 = sorted(initial_frameworks, key=lambda fw: fw.party_label)
    session = create_session(fw1, fw2, config, persuasive_sets)
    for move in ledger:
        apply_move(session, move)
    return session


def select_conflict_free(
    mandatory: Iterable[PersuasiveArgument],
    conflicts: Iterable[tuple[str, str]],
) -> list[PersuasiveArgument]:
    """Pick a conflict-free subset of mandatory arguments by norm priority.

    Arguments are kept greedily in descending priority (ties by ascending
    id); an argument conflicting with one already kept is dropped.
    """
    items = list(mandatory)
    for pa in items:
        if pa.norm_priority is None:
            raise MissingPriorityError(
                f"mandatory argument {pa.argument.id!r} has no norm priority"
            )
    conflict_pairs = {frozenset(pair) for pair in conflicts}
    kept: list[PersuasiveArgument] = []
    for pa in sorted(items, key=lambda p: (-p.norm_priority, p.argument.id)):
        if any(
            frozenset((pa.argument.id, other.argument.id)) in conflict_pairs
            for other in kept
        ):
            continue
        kept.append(pa)
    return kept
