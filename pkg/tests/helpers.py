"""Shared fixtures and independent oracles for the test suite.

The compensation case (customer vs supermarket) doubles as the golden
fixture: builders here return fresh copies so tests can mutate freely.
Oracles are deliberately written in a different style from the library
(closed forms and direct recursion instead of topological folding).
"""

from __future__ import annotations

import math
import random
from typing import Optional

from quam import (
    Argument,
    ArgumentKind,
    DisputeConfig,
    Move,
    PersuasiveArgument,
    Polarity,
    Provenance,
    QuamFramework,
    Relation,
    Role,
    VariableClass,
    create_session,
)

TOL = 1e-9


# ---------------------------------------------------------------------------
# Golden fixture: the compensation dispute


def zhang_framework() -> QuamFramework:
    return QuamFramework(
        party_label="zhang",
        arguments=(
            Argument("theta_z", "The supermarket assumes all responsibility for compensation.", ArgumentKind.GOAL, base_score=1.0),
            Argument("a1", "The main reason for the fall was the wet floor.", ArgumentKind.PRO, base_score=0.9),
            Argument("a2", "The supermarket didn't clean the floor in time.", ArgumentKind.PRO, base_score=0.7),
            Argument("a3", "The entrance has no handrails to grab if someone falls.", ArgumentKind.PRO, base_score=0.9),
        ),
        relations=(
            Relation("a1", "theta_z", Polarity.SUPPORT, 0.9),
            Relation("a3", "theta_z", Polarity.SUPPORT, 0.5),
            Relation("a2", "a1", Polarity.SUPPORT, 0.9),
        ),
    )


def supermarket_framework() -> QuamFramework:
    return QuamFramework(
        party_label="supermarket",
        arguments=(
            Argument("theta_s", "The supermarket assumes 20% responsibility for compensation.", ArgumentKind.GOAL, base_score=1.0),
            Argument("b1", "No need for a non-slip mat due to the good weather.", ArgumentKind.PRO, base_score=0.9),
            Argument("b2", "A slippery floor sign fulfilled the duty to warn.", ArgumentKind.PRO, base_score=0.9),
            Argument("b3", "Zhang's children neglected their duty of care.", ArgumentKind.PRO, base_score=0.7),
            Argument("b4", "Zhang did not fall inside the supermarket.", ArgumentKind.PRO, base_score=0.9),
            Argument("b5", "Zhang was not pushed by anyone in the supermarket.", ArgumentKind.PRO, base_score=0.7),
        ),
        relations=(
            Relation("b1", "theta_s", Polarity.SUPPORT, 0.5),
            Relation("b2", "theta_s", Polarity.SUPPORT, 0.7),
            Relation("b3", "theta_s", Polarity.SUPPORT, 0.7),
            Relation("b4", "theta_s", Polarity.SUPPORT, 0.9),
            Relation("b5", "theta_s", Polarity.SUPPORT, 0.4),
        ),
    )


def p6_argument() -> PersuasiveArgument:
    return PersuasiveArgument(
        argument=Argument(
            "p6",
            "Failure to ensure safety makes the supermarket partly liable.",
            ArgumentKind.CON,
            provenance=Provenance.MEDIATOR_MANDATORY,
            base_score=1.0,
        ),
        known_relations=(Relation("p6", "theta_s", Polarity.ATTACK, 0.5),),
        norm_priority=1,
    )


def compensation_config() -> DisputeConfig:
    # Supermarket pays; its target is 20%, the customer asks for 100%.
    return DisputeConfig(
        variable_class=VariableClass.CUV,
        roles={"supermarket": Role.PAYER, "zhang": Role.PAYEE},
        x=0.2,
        y=1.0,
        floors={Role.PAYER: 0.0, Role.PAYEE: 0.0},
    )


def compensation_session():
    return create_session(
        zhang_framework(),
        supermarket_framework(),
        compensation_config(),
        {"supermarket": [p6_argument()], "zhang": []},
    )


def p6_move(stage_index: int = 1) -> Move:
    return Move(
        stage_index=stage_index,
        target_party="supermarket",
        persuasive_id="p6",
        relation=Relation("p6", "theta_s", Polarity.ATTACK, 0.5),
    )


# ---------------------------------------------------------------------------
# Independent oracles


def closed_fold_att(v0: float, pairs) -> Optional[float]:
    pairs = list(pairs)
    if not pairs or all(w * s == 0.0 for w, s in pairs):
        return None
    return v0 * math.prod(1.0 - w * s for w, s in pairs)


def closed_fold_supp(v0: float, pairs) -> Optional[float]:
    pairs = list(pairs)
    if not pairs or all(w * s == 0.0 for w, s in pairs):
        return None
    return 1.0 - (1.0 - v0) * math.prod(1.0 - w * s for w, s in pairs)


def quad_scores(fw: QuamFramework) -> dict[str, float]:
    """Original unweighted semantics, computed by direct recursion.

    Only meaningful for frameworks whose relation weights are all 1; the
    ineffective-sequence rule then degenerates to "all influencer scores
    are zero".
    """
    memo: dict[str, float] = {}

    def fold(v0: float, scores: list[float], attack: bool) -> Optional[float]:
        if not scores or all(s == 0.0 for s in scores):
            return None
        acc = v0
        for s in scores:
            acc = acc - acc * s if attack else acc + (1.0 - acc) * s
        return acc

    def score(aid: str) -> float:
        if aid in memo:
            return memo[aid]
        arg = fw.argument_map[aid]
        attackers = sorted(
            r.source for r in fw.incoming.get(aid, ()) if r.polarity is Polarity.ATTACK
        )
        supporters = sorted(
            r.source for r in fw.incoming.get(aid, ()) if r.polarity is Polarity.SUPPORT
        )
        va = fold(arg.base_score, [score(b) for b in attackers], attack=True)
        vs = fold(arg.base_score, [score(b) for b in supporters], attack=False)
        if va is None and vs is None:
            sf = arg.base_score
        elif vs is None:
            sf = va
        elif va is None:
            sf = vs
        else:
            sf = (va + vs) / 2.0
        memo[aid] = sf
        return sf

    return {a.id: score(a.id) for a in fw.arguments}


# ---------------------------------------------------------------------------
# Random generators (plain seeded RNG; bulk acceptance loops use these)


def random_framework(
    rng: random.Random,
    party_label: str = "party",
    max_args: int = 12,
    unit_weights: bool = False,
    id_prefix: str = "n",
) -> QuamFramework:
    """A random valid framework: acyclic by construction (edges only point
    from later to earlier arguments in a random order, goal first)."""
    n = rng.randint(1, max_args)
    args = [
        Argument(f"{id_prefix}0", "goal", ArgumentKind.GOAL, base_score=1.0)
    ]
    for i in range(1, n):
        kind = ArgumentKind.PRO if rng.random() < 0.6 else ArgumentKind.CON
        args.append(
            Argument(
                f"{id_prefix}{i}",
                f"claim {i}",
                kind,
                base_score=round(rng.random(), 3),
            )
        )
    relations = []
    for i in range(1, n):
        targets = rng.sample(range(i), k=min(len(range(i)), rng.randint(1, 2)))
        for t in targets:
            polarity = (
                Polarity.SUPPORT if args[i].kind is ArgumentKind.PRO else Polarity.ATTACK
            )
            weight = 1.0 if unit_weights else round(rng.random(), 3)
            relations.append(Relation(args[i].id, args[t].id, polarity, weight))
    return QuamFramework(party_label=party_label, arguments=tuple(args), relations=tuple(relations))


def random_supported_framework(
    rng: random.Random,
    party_label: str,
    id_prefix: str,
    max_args: int = 8,
) -> QuamFramework:
    """Random framework with no con-arguments and a saturated goal."""
    fw = random_framework(rng, party_label, max_args=max_args, id_prefix=id_prefix)
    args = tuple(
        a if a.kind is not ArgumentKind.CON else Argument(a.id, a.text, ArgumentKind.PRO, a.provenance, a.base_score)
        for a in fw.arguments
    )
    relations = tuple(
        Relation(r.source, r.target, Polarity.SUPPORT, r.weight) for r in fw.relations
    )
    return QuamFramework(party_label=party_label, arguments=args, relations=relations)
