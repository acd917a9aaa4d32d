"""
Scoring a weighted argument graph
=================================

A compensation dispute: a customer slipped at a supermarket entrance and
claims full compensation; the supermarket offers 20%. Each party states a
goal argument plus the pro arguments backing it, scores how much it believes
each argument (base score), and weighs how relevant each influence relation
is. The engine aggregates all of that into one acceptability score per
argument.
"""

from quam import (
    Argument,
    ArgumentKind,
    Polarity,
    Provenance,
    QuamFramework,
    Relation,
    apply_influencer,
    evaluate,
    f_att,
    f_supp,
    fold_influence,
    validate_framework,
)

# ---------------------------------------------------------------------------
# The customer's framework: a goal supported by three pro arguments, one of
# which (a1) is itself backed by another (a2).

zhang = QuamFramework(
    party_label="zhang",
    arguments=(
        Argument("theta_z", "The supermarket assumes all responsibility.", ArgumentKind.GOAL, base_score=1.0),
        Argument("a1", "The main reason for the fall was the wet floor.", ArgumentKind.PRO, base_score=0.9),
        Argument("a2", "The supermarket didn't clean the floor in time.", ArgumentKind.PRO, base_score=0.7),
        Argument("a3", "The entrance has no handrails.", ArgumentKind.PRO, base_score=0.9),
    ),
    relations=(
        Relation("a1", "theta_z", Polarity.SUPPORT, 0.9),
        Relation("a3", "theta_z", Polarity.SUPPORT, 0.5),
        Relation("a2", "a1", Polarity.SUPPORT, 0.9),
    ),
)

print("violations:", validate_framework(zhang) or "none")

# One support step by hand: a2 (score 0.7) backs a1 (base 0.9) on a relation
# of weight 0.9. The gap to 1 shrinks by the weighted supporter score.
print("one support step:", f_supp(0.9, 0.9, 0.7))  # 0.963

# The full evaluation walks the graph bottom-up.
scores = evaluate(zhang).scores
for aid in ("a2", "a1", "a3", "theta_z"):
    print(f"  SF({aid}) = {scores[aid]:.6f}")

# ---------------------------------------------------------------------------
# The supermarket's framework: five supporters, goal saturated at 1.

supermarket = QuamFramework(
    party_label="supermarket",
    arguments=(
        Argument("theta_s", "The supermarket assumes 20% responsibility.", ArgumentKind.GOAL, base_score=1.0),
        Argument("b1", "No need for a non-slip mat in good weather.", ArgumentKind.PRO, base_score=0.9),
        Argument("b2", "A slippery-floor sign fulfilled the duty to warn.", ArgumentKind.PRO, base_score=0.9),
        Argument("b3", "The children neglected their duty of care.", ArgumentKind.PRO, base_score=0.7),
        Argument("b4", "Zhang did not fall inside the supermarket.", ArgumentKind.PRO, base_score=0.9),
        Argument("b5", "Zhang was not pushed by anyone.", ArgumentKind.PRO, base_score=0.7),
    ),
    relations=(
        Relation("b1", "theta_s", Polarity.SUPPORT, 0.5),
        Relation("b2", "theta_s", Polarity.SUPPORT, 0.7),
        Relation("b3", "theta_s", Polarity.SUPPORT, 0.7),
        Relation("b4", "theta_s", Polarity.SUPPORT, 0.9),
        Relation("b5", "theta_s", Polarity.SUPPORT, 0.4),
    ),
)

print("supermarket goal:", evaluate(supermarket).scores["theta_s"])  # 1.0

# ---------------------------------------------------------------------------
# The mediator drops in a mandatory norm argument: operators who fail their
# duty of safety protection are partly liable. Mandatory arguments carry a
# pinned base score of 1 and accept no influencers; the mediator assigns the
# relation weight (here 0.5: relevant, but not the whole story).

p6 = Argument(
    "p6",
    "Failure to ensure safety makes the supermarket partly liable.",
    ArgumentKind.CON,
    provenance=Provenance.MEDIATOR_MANDATORY,
    base_score=1.0,
)
grown = apply_influencer(supermarket, p6, Relation("p6", "theta_s", Polarity.ATTACK, 0.5))

result = evaluate(grown)
print("after the mandatory attack:")
print("  support fold:", fold_influence("supp", 1.0, [(0.5, 0.9), (0.7, 0.9), (0.7, 0.7), (0.9, 0.9), (0.4, 0.7)]))
print("  attack step:", f_att(1.0, 0.5, 1.0))
print(f"  SF(theta_s) = {result.scores['theta_s']:.6f}")  # (0.5 + 1) / 2 = 0.75

# A fully relevant factual or mandatory attacker is not up for debate: it
# forces the target's score to 0 outright (and a forcing supporter to 1).
decisive = Argument("f1", "CCTV shows the fall outside the premises.", ArgumentKind.CON,
                    provenance=Provenance.MEDIATOR_FACTUAL, base_score=1.0)
forced = apply_influencer(zhang, decisive, Relation("f1", "theta_z", Polarity.ATTACK, 1.0))
forced_result = evaluate(forced)
print("forcing attack:", forced_result.scores["theta_z"], forced_result.constraint_trace)
