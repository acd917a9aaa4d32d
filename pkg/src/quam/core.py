"""Argument graph data model for one disputing party.

A framework bundles a single goal argument, the party's pro/con arguments,
and weighted acyclic influence relations between them. Frameworks are
immutable values: every operation returns a new framework and never touches
its input, so they are safe to share across threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping

SCORE_TOL = 1e-9


class QuamError(Exception):
    """Base class for all domain errors raised by this package."""


class CycleError(QuamError):
    def __init__(self, node_ids: Iterable[str]):
        self.node_ids = tuple(sorted(node_ids))
        super().__init__(f"cycle detected: {','.join(self.node_ids)}")


class InvalidFrameworkError(QuamError):
    """Raised when an operation would produce or consume an invalid framework."""

    def __init__(self, report: list[Violation], context: str = ""):
        self.report = list(report)
        lines = "; ".join(v.message for v in self.report)
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}{lines}")


class DomainError(QuamError):
    """A scalar input fell outside its declared [0, 1] domain."""


class ArgumentKind(str, Enum):
    GOAL = "goal"
    PRO = "pro"
    CON = "con"


class Provenance(str, Enum):
    PARTY = "party"
    MEDIATOR_OPINION = "mediator-opinion"
    MEDIATOR_FACTUAL = "mediator-factual"
    MEDIATOR_MANDATORY = "mediator-mandatory"
    MEDIATOR_DISPOSITIVE = "mediator-dispositive"

    @property
    def pinned(self) -> bool:
        """Factual and mandatory arguments carry a base score pinned at 1
        and accept no influencers."""
        return self in (Provenance.MEDIATOR_FACTUAL, Provenance.MEDIATOR_MANDATORY)


class Polarity(str, Enum):
    SUPPORT = "support"
    ATTACK = "attack"


# Which argument kind may act as the source of each relation polarity.
_SOURCE_KIND = {Polarity.SUPPORT: ArgumentKind.PRO, Polarity.ATTACK: ArgumentKind.CON}


@dataclass(frozen=True)
class Argument:
    id: str
    text: str
    kind: ArgumentKind
    provenance: Provenance = Provenance.PARTY
    base_score: float = 0.5


@dataclass(frozen=True)
class Relation:
    source: str
    target: str
    polarity: Polarity
    weight: float


@dataclass(frozen=True)
class Violation:
    """One breached invariant, with the ids it concerns. Violations are
    findings, not exceptions: collecting them all lets a caller report
    everything wrong with a framework at once."""

    code: str
    message: str
    ids: tuple[str, ...] = ()


@dataclass(frozen=True)
class QuamFramework:
    party_label: str
    arguments: tuple[Argument, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        # Canonical internal order makes equality, serialization and
        # evaluation independent of construction order.
        object.__setattr__(
            self, "arguments", tuple(sorted(self.arguments, key=lambda a: a.id))
        )
        object.__setattr__(
            self,
            "relations",
            tuple(sorted(self.relations, key=lambda r: (r.source, r.target))),
        )

    @cached_property
    def argument_map(self) -> Mapping[str, Argument]:
        return {a.id: a for a in self.arguments}

    @cached_property
    def incoming(self) -> Mapping[str, tuple[Relation, ...]]:
        by_target: dict[str, list[Relation]] = {a.id: [] for a in self.arguments}
        for rel in self.relations:
            by_target.setdefault(rel.target, []).append(rel)
        return {t: tuple(rels) for t, rels in by_target.items()}

    @property
    def goal(self) -> Argument:
        for a in self.arguments:
            if a.kind is ArgumentKind.GOAL:
                return a
        raise InvalidFrameworkError(
            [Violation("goal-count", "framework has no goal argument")],
            self.party_label,
        )


def _find_cycle(fw: QuamFramework) -> tuple[str, ...]:
    """Return the ids on some cycle, or () if the relation graph is acyclic."""
    indegree = {a.id: 0 for a in fw.arguments}
    outgoing: dict[str, list[str]] = {a.id: [] for a in fw.arguments}
    for rel in fw.relations:
        if rel.source in indegree and rel.target in indegree:
            outgoing[rel.source].append(rel.target)
            indegree[rel.target] += 1
    queue = [aid for aid, deg in indegree.items() if deg == 0]
    seen = 0
    while queue:
        aid = queue.pop()
        seen += 1
        for nxt in outgoing[aid]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    if seen == len(indegree):
        return ()
    return tuple(sorted(aid for aid, deg in indegree.items() if deg > 0))


def validate_framework(fw: QuamFramework) -> list[Violation]:
    """Check every structural invariant; an empty report means valid."""
    report: list[Violation] = []

    seen: set[str] = set()
    for arg in fw.arguments:
        if not arg.id:
            report.append(Violation("empty-id", "argument id must be non-empty"))
        if arg.id in seen:
            report.append(
                Violation("duplicate-id", f"duplicate argument id {arg.id!r}", (arg.id,))
            )
        seen.add(arg.id)

    goals = [a for a in fw.arguments if a.kind is ArgumentKind.GOAL]
    if len(goals) != 1:
        report.append(
            Violation(
                "goal-count",
                f"framework must have exactly one goal argument, found {len(goals)}",
                tuple(a.id for a in goals),
            )
        )
    for goal in goals:
        if abs(goal.base_score - 1.0) > SCORE_TOL:
            report.append(
                Violation(
                    "goal-base-score",
                    f"goal base score must be 1, got {goal.base_score} for {goal.id!r}",
                    (goal.id,),
                )
            )

    for arg in fw.arguments:
        if not 0.0 <= arg.base_score <= 1.0:
            report.append(
                Violation(
                    "base-score-range",
                    f"base score of {arg.id!r} outside [0,1]: {arg.base_score}",
                    (arg.id,),
                )
            )
        if arg.provenance.pinned and abs(arg.base_score - 1.0) > SCORE_TOL:
            report.append(
                Violation(
                    "pinned-base-score",
                    f"factual/mandatory argument {arg.id!r} must have base score 1",
                    (arg.id,),
                )
            )

    amap = {a.id: a for a in fw.arguments}
    seen_pairs: set[tuple[str, str]] = set()
    for rel in fw.relations:
        pair = (rel.source, rel.target)
        if pair in seen_pairs:
            report.append(
                Violation(
                    "duplicate-relation",
                    f"duplicate relation {rel.source!r} -> {rel.target!r}",
                    pair,
                )
            )
        seen_pairs.add(pair)
        if not 0.0 <= rel.weight <= 1.0:
            report.append(
                Violation(
                    "weight-range",
                    f"weight of {rel.source!r} -> {rel.target!r} outside [0,1]: {rel.weight}",
                    pair,
                )
            )
        if rel.source == rel.target:
            report.append(
                Violation("self-relation", f"relation {rel.source!r} -> itself", pair)
            )
        missing = [aid for aid in pair if aid not in amap]
        if missing:
            report.append(
                Violation(
                    "dangling-endpoint",
                    f"relation {rel.source!r} -> {rel.target!r} references unknown {missing}",
                    pair,
                )
            )
            continue
        source = amap[rel.source]
        if source.kind is ArgumentKind.GOAL:
            report.append(
                Violation(
                    "goal-as-source",
                    f"goal {source.id!r} cannot be a relation source",
                    pair,
                )
            )
        elif source.kind is not _SOURCE_KIND[rel.polarity]:
            report.append(
                Violation(
                    "polarity-mismatch",
                    f"{source.kind.value} argument {source.id!r} cannot be the source "
                    f"of a {rel.polarity.value} relation",
                    pair,
                )
            )
        if amap[rel.target].provenance.pinned:
            report.append(
                Violation(
                    "pinned-influencer",
                    "factual/mandatory arguments accept no influencers: "
                    f"{rel.source!r} -> {rel.target!r}",
                    pair,
                )
            )

    cycle = _find_cycle(fw)
    if cycle:
        report.append(
            Violation("cycle", f"cycle detected: {','.join(cycle)}", cycle)
        )
    return report


def topological_order(fw: QuamFramework) -> list[str]:
    """Order argument ids so every relation source precedes its target.

    Ties are broken by ascending id, so the order (and everything computed
    along it) is deterministic.
    """
    indegree = {a.id: 0 for a in fw.arguments}
    outgoing: dict[str, list[str]] = {a.id: [] for a in fw.arguments}
    for rel in fw.relations:
        outgoing[rel.source].append(rel.target)
        indegree[rel.target] += 1
    heap = [aid for aid, deg in indegree.items() if deg == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        aid = heapq.heappop(heap)
        order.append(aid)
        for nxt in sorted(outgoing[aid]):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(heap, nxt)
    if len(order) != len(indegree):
        raise CycleError(aid for aid, deg in indegree.items() if deg > 0)
    return order


def apply_influencer(fw: QuamFramework, arg: Argument, rel: Relation) -> QuamFramework:
    """Return a new framework with one added argument influencing an existing one.

    This is the single growth step available to a mediator; the input
    framework is left untouched.
    """
    if arg.id in fw.argument_map:
        raise InvalidFrameworkError(
            [Violation("duplicate-id", f"argument id {arg.id!r} already present", (arg.id,))],
            fw.party_label,
        )
    if rel.source != arg.id:
        raise InvalidFrameworkError(
            [
                Violation(
                    "relation-source",
                    f"relation source {rel.source!r} must be the new argument {arg.id!r}",
                    (rel.source, arg.id),
                )
            ],
            fw.party_label,
        )
    if rel.target not in fw.argument_map:
        raise InvalidFrameworkError(
            [
                Violation(
                    "dangling-target",
                    f"relation target {rel.target!r} not in framework",
                    (rel.target,),
                )
            ],
            fw.party_label,
        )
    grown = QuamFramework(
        party_label=fw.party_label,
        arguments=fw.arguments + (arg,),
        relations=fw.relations + (rel,),
    )
    report = validate_framework(grown)
    if report:
        raise InvalidFrameworkError(report, fw.party_label)
    return grown
