"""Acceptability scoring over a party's argument graph.

Each argument's final score aggregates its base score with the folded
influence of its attackers and supporters, where each influence is the
product of the relation weight and the influencer's own final score.
Sequences that contribute nothing (empty, or all weight*score products
zero) are *ineffective* and yield ``None`` instead of a number, which the
combiner treats as "no influence on this side".

Two overrides reflect that facts and mandatory legal norms are not up for
debate: a fully relevant factual/mandatory attacker forces the target's
score to 0, a fully relevant factual/mandatory supporter forces it to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple, Optional, Sequence

from .core import (
    DomainError,
    Polarity,
    QuamError,
    QuamFramework,
    topological_order,
)

FoldKind = Literal["att", "supp"]


class InfluencePair(NamedTuple):
    weight: float
    score: float


class ConstraintFiring(NamedTuple):
    constraint: str  # "C1" or "C2"
    target: str
    trigger: str


@dataclass(frozen=True)
class ConstraintConflict:
    """An argument with both a forcing attacker and a forcing supporter.

    Such input is malformed: the two overrides would demand score 0 and
    score 1 at once.
    """

    target: str
    attacker: str
    supporter: str


class ConstraintConflictError(QuamError):
    def __init__(self, conflict: ConstraintConflict):
        self.conflict = conflict
        super().__init__(
            f"argument {conflict.target!r} has both a forcing attacker "
            f"{conflict.attacker!r} and a forcing supporter {conflict.supporter!r}"
        )


@dataclass(frozen=True)
class EvaluationResult:
    scores: dict[str, float]
    constraint_trace: tuple[ConstraintFiring, ...] = ()


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} outside [0,1]: {value}")


def f_att(v0: float, pi: float, v: float) -> float:
    """One attack step: the previous score drops in proportion to both the
    relation weight and the attacker's score."""
    _check_unit("v0", v0)
    _check_unit("pi", pi)
    _check_unit("v", v)
    return v0 - v0 * (pi * v)


def f_supp(v0: float, pi: float, v: float) -> float:
    """One support step: the gap to 1 shrinks in proportion to the weighted
    supporter score."""
    _check_unit("v0", v0)
    _check_unit("pi", pi)
    _check_unit("v", v)
    return v0 + (1.0 - v0) * (pi * v)


def fold_influence(
    kind: FoldKind, v0: float, pairs: Sequence[tuple[float, float]]
) -> Optional[float]:
    """Fold a sequence of (weight, score) influences onto a base score.

    Returns ``None`` for an ineffective sequence: one that is empty or whose
    weight*score products are all zero. The fold commutes under paired
    permutation of the sequence, since it equals v0*prod(1 - w*s) for
    attacks and 1 - (1-v0)*prod(1 - w*s) for supports.
    """
    if kind not in ("att", "supp"):
        raise ValueError(f"unknown fold kind {kind!r}")
    _check_unit("v0", v0)
    pairs = list(pairs)
    if not pairs or all(w * s == 0.0 for w, s in pairs):
        return None
    step = f_att if kind == "att" else f_supp
    acc = v0
    for w, s in pairs:
        acc = step(acc, w, s)
    return acc


def combine(v0: float, va: Optional[float], vs: Optional[float]) -> float:
    """Merge the attack-side and support-side fold results with the base score.

    A ``None`` side contributed nothing; with both sides silent the base
    score stands, otherwise the effective sides decide (averaged when both
    are present).
    """
    _check_unit("v0", v0)
    if va is None and vs is None:
        return v0
    if vs is None:
        return va  # type: ignore[return-value]
    if va is None:
        return vs
    return (va + vs) / 2.0


def check_constraint_conflict(fw: QuamFramework) -> Optional[ConstraintConflict]:
    """Find an argument with both a forcing attacker and a forcing supporter.

    Returns the first conflict in deterministic (id-sorted) order, or None
    when the framework is free of them.
    """
    amap = fw.argument_map
    for target in sorted(fw.incoming):
        forcing_att = sorted(
            r.source
            for r in fw.incoming[target]
            if r.polarity is Polarity.ATTACK
            and r.weight == 1.0
            and amap[r.source].provenance.pinned
        )
        forcing_supp = sorted(
            r.source
            for r in fw.incoming[target]
            if r.polarity is Polarity.SUPPORT
            and r.weight == 1.0
            and amap[r.source].provenance.pinned
        )
        if forcing_att and forcing_supp:
            return ConstraintConflict(target, forcing_att[0], forcing_supp[0])
    return None


def evaluate(fw: QuamFramework) -> EvaluationResult:
    """Score every argument, walking the graph in topological order.

    Overrides fire after the fold at each node, so a forced score propagates
    to everything downstream. Raises ConstraintConflictError on input where
    an argument is forced both ways.
    """
    amap = fw.argument_map
    scores: dict[str, float] = {}
    trace: list[ConstraintFiring] = []
    for aid in topological_order(fw):
        arg = amap[aid]
        incoming = sorted(fw.incoming.get(aid, ()), key=lambda r: r.source)
        att_pairs = [
            (r.weight, scores[r.source])
            for r in incoming
            if r.polarity is Polarity.ATTACK
        ]
        supp_pairs = [
            (r.weight, scores[r.source])
            for r in incoming
            if r.polarity is Polarity.SUPPORT
        ]
        sf = combine(
            arg.base_score,
            fold_influence("att", arg.base_score, att_pairs),
            fold_influence("supp", arg.base_score, supp_pairs),
        )
        forcing = {
            Polarity.ATTACK: [],
            Polarity.SUPPORT: [],
        }  # type: dict[Polarity, list[str]]
        for rel in incoming:
            if (
                rel.weight == 1.0
                and amap[rel.source].provenance.pinned
                and scores[rel.source] == 1.0
            ):
                forcing[rel.polarity].append(rel.source)
        if forcing[Polarity.ATTACK] and forcing[Polarity.SUPPORT]:
            raise ConstraintConflictError(
                ConstraintConflict(
                    aid, forcing[Polarity.ATTACK][0], forcing[Polarity.SUPPORT][0]
                )
            )
        if forcing[Polarity.ATTACK]:
            sf = 0.0
            trace.extend(ConstraintFiring("C1", aid, b) for b in forcing[Polarity.ATTACK])
        elif forcing[Polarity.SUPPORT]:
            sf = 1.0
            trace.extend(ConstraintFiring("C2", aid, b) for b in forcing[Polarity.SUPPORT])
        scores[aid] = sf
    return EvaluationResult(scores=scores, constraint_trace=tuple(trace))
