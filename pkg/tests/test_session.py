import pytest

from quam import (
    Argument,
    ArgumentKind,
    DuplicateMoveError,
    EmptyLedgerError,
    IllegalMoveError,
    InvalidConfigError,
    InvalidFrameworkError,
    Move,
    PersuasiveArgument,
    Polarity,
    Provenance,
    QuamFramework,
    Relation,
    StageSequenceError,
    UnknownPersuasiveError,
    apply_move,
    create_session,
    replay,
    select_conflict_free,
    trajectory,
    undo,
    what_if,
)

from helpers import (
    TOL,
    compensation_config,
    compensation_session,
    p6_argument,
    p6_move,
    supermarket_framework,
    zhang_framework,
)


def test_stage_zero_snapshot_of_running_example():
    session = compensation_session()
    snap = session.snapshots[0]
    scores = snap.goal_scores(session)
    assert scores["zhang"] == pytest.approx(1.0, abs=TOL)
    assert scores["supermarket"] == pytest.approx(1.0, abs=TOL)
    assert snap.values["supermarket"] == pytest.approx(0.2, abs=TOL)
    assert snap.values["zhang"] == pytest.approx(1.0, abs=TOL)
    assert snap.distance == pytest.approx(0.8, abs=TOL)
    assert snap.consensus is False


def test_create_session_rejects_invalid_framework():
    bad = QuamFramework(
        "zhang",
        (Argument("theta_z", "goal", ArgumentKind.GOAL, base_score=0.8),),
    )
    with pytest.raises(InvalidFrameworkError, match="zhang"):
        create_session(bad, supermarket_framework(), compensation_config())


def test_create_session_rejects_class_overlap():
    p6 = p6_argument()
    as_opinion = PersuasiveArgument(
        argument=Argument("p6", "same id, different class", ArgumentKind.CON,
                          Provenance.MEDIATOR_OPINION, 0.8),
    )
    with pytest.raises(InvalidConfigError, match="pairwise disjoint"):
        create_session(
            zhang_framework(),
            supermarket_framework(),
            compensation_config(),
            {"supermarket": [p6], "zhang": [as_opinion]},
        )


def test_create_session_rejects_shared_argument_ids():
    clone = QuamFramework(
        "zhang",
        supermarket_framework().arguments,
        supermarket_framework().relations,
    )
    with pytest.raises(InvalidFrameworkError, match="share argument ids"):
        create_session(clone, supermarket_framework(), compensation_config())


def test_create_session_rejects_persuasive_id_collision():
    collider = PersuasiveArgument(
        argument=Argument("b1", "reused id", ArgumentKind.CON,
                          Provenance.MEDIATOR_OPINION, 0.5),
    )
    with pytest.raises(InvalidConfigError, match="already used"):
        create_session(
            zhang_framework(),
            supermarket_framework(),
            compensation_config(),
            {"supermarket": [collider]},
        )


def test_apply_move_running_example():
    session = compensation_session()
    snap = apply_move(session, p6_move())
    assert snap.stage_index == 1
    assert snap.goal_scores(session)["supermarket"] == pytest.approx(0.75, abs=TOL)
    assert snap.values["supermarket"] == pytest.approx(0.4, abs=TOL)
    assert snap.values["zhang"] == pytest.approx(1.0, abs=TOL)
    assert snap.distance == pytest.approx(0.6, abs=TOL)
    assert snap.consensus is False
    assert session.stage == 1
    assert "p6" in session.frameworks["supermarket"].argument_map


def test_support_move_on_saturated_goal_changes_nothing():
    helper = PersuasiveArgument(
        argument=Argument("p7", "supportive opinion", ArgumentKind.PRO,
                          Provenance.MEDIATOR_OPINION, 0.8),
    )
    session = create_session(
        zhang_framework(),
        supermarket_framework(),
        compensation_config(),
        {"supermarket": [helper]},
    )
    before = session.snapshots[0]
    snap = apply_move(
        session,
        Move(1, "supermarket", "p7", Relation("p7", "theta_s", Polarity.SUPPORT, 0.9)),
    )
    assert snap.goal_scores(session)["supermarket"] == pytest.approx(1.0, abs=TOL)
    assert snap.distance == before.distance
    assert snap.values == before.values


def test_full_weight_factual_attack_ends_dispute():
    killer = PersuasiveArgument(
        argument=Argument("f1", "decisive fact", ArgumentKind.CON,
                          Provenance.MEDIATOR_FACTUAL, 1.0),
    )
    session = create_session(
        zhang_framework(),
        supermarket_framework(),
        compensation_config(),
        {"zhang": [killer]},
    )
    snap = apply_move(
        session, Move(1, "zhang", "f1", Relation("f1", "theta_z", Polarity.ATTACK, 1.0))
    )
    assert snap.goal_scores(session)["zhang"] == 0.0
    assert snap.distance == 0.0
    assert snap.consensus is True


def test_move_precondition_errors():
    session = compensation_session()
    with pytest.raises(StageSequenceError):
        apply_move(session, p6_move(stage_index=2))
    with pytest.raises(UnknownPersuasiveError):
        apply_move(
            session, Move(1, "supermarket", "p9", Relation("p9", "theta_s", Polarity.ATTACK, 0.5))
        )
    with pytest.raises(IllegalMoveError):
        apply_move(
            session, Move(1, "supermarket", "p6", Relation("b1", "theta_s", Polarity.ATTACK, 0.5))
        )
    apply_move(session, p6_move())
    with pytest.raises(DuplicateMoveError):
        apply_move(session, p6_move(stage_index=2))


def test_failed_move_leaves_session_unchanged():
    session = compensation_session()
    bad = Move(1, "supermarket", "p6", Relation("p6", "nowhere", Polarity.ATTACK, 0.5))
    with pytest.raises(InvalidFrameworkError):
        apply_move(session, bad)
    assert session.stage == 0
    assert len(session.snapshots) == 1
    assert "p6" not in session.frameworks["supermarket"].argument_map


def test_what_if_matches_apply_and_does_not_commit():
    session = compensation_session()
    preview = what_if(session, p6_move())
    assert session.stage == 0
    assert len(session.snapshots) == 1
    committed = apply_move(session, p6_move())
    assert preview == committed


def test_two_previews_share_the_same_base_state():
    other = PersuasiveArgument(
        argument=Argument("p7", "another opinion", ArgumentKind.CON,
                          Provenance.MEDIATOR_OPINION, 0.6),
    )
    session = create_session(
        zhang_framework(),
        supermarket_framework(),
        compensation_config(),
        {"supermarket": [p6_argument(), other]},
    )
    first = what_if(session, p6_move())
    second = what_if(
        session, Move(1, "supermarket", "p7", Relation("p7", "theta_s", Polarity.ATTACK, 0.3))
    )
    assert first.stage_index == second.stage_index == 1
    assert session.stage == 0


def test_what_if_of_illegal_move_raises_and_preserves_session():
    session = compensation_session()
    with pytest.raises(UnknownPersuasiveError):
        what_if(session, Move(1, "supermarket", "zzz", Relation("zzz", "theta_s", Polarity.ATTACK, 0.5)))
    assert session.stage == 0


def test_undo_restores_previous_stage_exactly():
    session = compensation_session()
    stage0 = session.snapshots[0]
    fw0 = session.frameworks["supermarket"]
    apply_move(session, p6_move())
    undo(session)
    assert session.stage == 0
    assert session.snapshots == [stage0]
    assert session.frameworks["supermarket"] == fw0


def test_undo_on_fresh_session_fails():
    with pytest.raises(EmptyLedgerError):
        undo(compensation_session())


def test_undo_then_replay_matches_direct_sequence():
    second = PersuasiveArgument(
        argument=Argument("p7", "opinion", ArgumentKind.CON,
                          Provenance.MEDIATOR_OPINION, 0.6),
    )
    sets = {"supermarket": [p6_argument(), second]}

    def fresh():
        return create_session(
            zhang_framework(), supermarket_framework(), compensation_config(), sets
        )

    m2 = Move(2, "supermarket", "p7", Relation("p7", "theta_s", Polarity.ATTACK, 0.3))

    direct = fresh()
    apply_move(direct, p6_move())
    apply_move(direct, m2)

    detoured = fresh()
    apply_move(detoured, p6_move())
    apply_move(detoured, m2)
    undo(detoured)
    apply_move(detoured, m2)

    assert direct.snapshots == detoured.snapshots
    assert direct.frameworks == detoured.frameworks


def test_trajectory_rows_match_snapshots():
    session = compensation_session()
    apply_move(session, p6_move())
    rows = trajectory(session)
    assert [row.stage for row in rows] == [0, 1]
    assert rows[0].values["supermarket"] == pytest.approx(0.2, abs=TOL)
    assert rows[0].distance == pytest.approx(0.8, abs=TOL)
    assert rows[1].goal_scores["supermarket"] == pytest.approx(0.75, abs=TOL)
    assert rows[1].values["supermarket"] == pytest.approx(0.4, abs=TOL)
    assert rows[1].distance == pytest.approx(0.6, abs=TOL)
    assert all(row.distance >= 0.0 for row in rows)
    assert all(not row.consensus for row in rows)


def test_fresh_session_has_single_stage_zero_row():
    rows = trajectory(compensation_session())
    assert len(rows) == 1
    assert rows[0].stage == 0


def test_replay_reproduces_snapshots_bit_for_bit():
    session = compensation_session()
    apply_move(session, p6_move())
    rebuilt = replay(
        session.initial_frameworks.values(),
        session.config,
        session.persuasive_sets,
        session.ledger,
    )
    assert rebuilt.snapshots == session.snapshots
    assert rebuilt.frameworks == session.frameworks


def _norm(aid: str, priority: int) -> PersuasiveArgument:
    return PersuasiveArgument(
        argument=Argument(aid, f"norm {aid}", ArgumentKind.CON,
                          Provenance.MEDIATOR_MANDATORY, 1.0),
        norm_priority=priority,
    )


def test_select_conflict_free_singleton():
    kept = select_conflict_free([p6_argument()], [])
    assert [pa.argument.id for pa in kept] == ["p6"]


def test_select_conflict_free_prefers_priority():
    kept = select_conflict_free([_norm("n1", 2), _norm("n2", 1)], [("n1", "n2")])
    assert [pa.argument.id for pa in kept] == ["n1"]


def test_select_conflict_free_breaks_ties_by_id():
    kept = select_conflict_free([_norm("n2", 1), _norm("n1", 1)], [("n1", "n2")])
    assert [pa.argument.id for pa in kept] == ["n1"]


def test_select_conflict_free_requires_priorities():
    unprioritized = PersuasiveArgument(
        argument=Argument("n3", "norm", ArgumentKind.CON, Provenance.MEDIATOR_MANDATORY, 1.0)
    )
    from quam import MissingPriorityError

    with pytest.raises(MissingPriorityError):
        select_conflict_free([unprioritized], [])
