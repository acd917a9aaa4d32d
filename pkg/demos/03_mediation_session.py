"""
Steering a mediation session
============================

A session wraps both parties' frameworks, the dispute configuration, and the
mediator's catalogue of persuasive arguments. The mediator plays exactly one
argument per stage; every committed move is appended to a ledger, and each
stage gets a snapshot of scores, mapped values, distance and consensus.
"""

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
    apply_move,
    create_session,
    select_conflict_free,
    trajectory,
    undo,
    what_if,
)

zhang = QuamFramework(
    party_label="zhang",
    arguments=(
        Argument("theta_z", "Full compensation.", ArgumentKind.GOAL, base_score=1.0),
        Argument("a1", "Wet floor caused the fall.", ArgumentKind.PRO, base_score=0.9),
        Argument("a2", "Floor not cleaned in time.", ArgumentKind.PRO, base_score=0.7),
        Argument("a3", "No handrails at the entrance.", ArgumentKind.PRO, base_score=0.9),
    ),
    relations=(
        Relation("a1", "theta_z", Polarity.SUPPORT, 0.9),
        Relation("a3", "theta_z", Polarity.SUPPORT, 0.5),
        Relation("a2", "a1", Polarity.SUPPORT, 0.9),
    ),
)

supermarket = QuamFramework(
    party_label="supermarket",
    arguments=(
        Argument("theta_s", "Only 20% responsibility.", ArgumentKind.GOAL, base_score=1.0),
        Argument("b1", "Good weather, no mat needed.", ArgumentKind.PRO, base_score=0.9),
        Argument("b2", "Warning sign was posted.", ArgumentKind.PRO, base_score=0.9),
        Argument("b3", "Family neglected duty of care.", ArgumentKind.PRO, base_score=0.7),
        Argument("b4", "Fall happened outside.", ArgumentKind.PRO, base_score=0.9),
        Argument("b5", "Nobody pushed him.", ArgumentKind.PRO, base_score=0.7),
    ),
    relations=(
        Relation("b1", "theta_s", Polarity.SUPPORT, 0.5),
        Relation("b2", "theta_s", Polarity.SUPPORT, 0.7),
        Relation("b3", "theta_s", Polarity.SUPPORT, 0.7),
        Relation("b4", "theta_s", Polarity.SUPPORT, 0.9),
        Relation("b5", "theta_s", Polarity.SUPPORT, 0.4),
    ),
)

config = DisputeConfig(
    variable_class=VariableClass.CUV,
    roles={"supermarket": Role.PAYER, "zhang": Role.PAYEE},
    x=0.2,
    y=1.0,
)

# The mediator's catalogue for the supermarket: a mandatory norm argument.
p6 = PersuasiveArgument(
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

session = create_session(zhang, supermarket, config, {"supermarket": [p6], "zhang": []})
stage0 = session.snapshots[0]
print(f"stage 0: payer offers {stage0.values['supermarket']:.2f}, "
      f"payee asks {stage0.values['zhang']:.2f}, distance {stage0.distance:.2f}")

# Preview the move before committing: what_if never touches the session.
move = Move(1, "supermarket", "p6", Relation("p6", "theta_s", Polarity.ATTACK, 0.5))
preview = what_if(session, move)
print(f"preview: distance would drop to {preview.distance:.2f}; "
      f"session still at stage {session.stage}")

# Commit it for real.
snap = apply_move(session, move)
print(f"stage 1: payer offers {snap.values['supermarket']:.2f}, distance {snap.distance:.2f}, "
      f"consensus: {snap.consensus}")

# The trajectory lists one row per stage.
for row in trajectory(session):
    print(f"  stage {row.stage}: distance {row.distance:.6f}, consensus {row.consensus}")

# Undo restores the previous stage exactly (the ledger is the source of truth).
undo(session)
print("after undo:", session.stage, "stage(s),", len(session.snapshots), "snapshot(s)")

# When mandatory norms collide, priority picks a conflict-free subset.
lex_specialis = PersuasiveArgument(
    argument=Argument("n1", "Specific statute applies.", ArgumentKind.CON,
                      Provenance.MEDIATOR_MANDATORY, 1.0),
    norm_priority=2,
)
lex_generalis = PersuasiveArgument(
    argument=Argument("n2", "General rule applies.", ArgumentKind.CON,
                      Provenance.MEDIATOR_MANDATORY, 1.0),
    norm_priority=1,
)
kept = select_conflict_free([lex_specialis, lex_generalis], [("n1", "n2")])
print("conflict-free mandatory set:", [pa.argument.id for pa in kept])
