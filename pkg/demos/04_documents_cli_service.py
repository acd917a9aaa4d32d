"""
Session documents, the command line, and the HTTP service
=========================================================

Sessions persist as versioned JSON documents: frameworks, configuration,
persuasive catalogues, and the move ledger. Snapshots are never stored;
loading a document replays the ledger, so files cannot drift from what the
engine computes.
"""

import tempfile
from pathlib import Path

from quam import (
    Argument,
    ArgumentKind,
    DisputeConfig,
    PersuasiveArgument,
    Polarity,
    Provenance,
    QuamFramework,
    Relation,
    Role,
    VariableClass,
    create_session,
    parse_session,
    serialize_session,
)
from quam.cli import run_cli
from quam.service import create_app

# A compact two-party session: claimant vs operator over compensation.
claimant = QuamFramework(
    "claimant",
    (
        Argument("goal_c", "Full compensation.", ArgumentKind.GOAL, base_score=1.0),
        Argument("c1", "The hazard was theirs to fix.", ArgumentKind.PRO, base_score=0.9),
    ),
    (Relation("c1", "goal_c", Polarity.SUPPORT, 0.8),),
)
operator = QuamFramework(
    "operator",
    (
        Argument("goal_o", "Only token compensation.", ArgumentKind.GOAL, base_score=1.0),
        Argument("o1", "Warnings were posted.", ArgumentKind.PRO, base_score=0.8),
    ),
    (Relation("o1", "goal_o", Polarity.SUPPORT, 0.7),),
)
config = DisputeConfig(
    variable_class=VariableClass.CUV,
    roles={"operator": Role.PAYER, "claimant": Role.PAYEE},
    x=0.2,
    y=1.0,
)
norm = PersuasiveArgument(
    argument=Argument("norm1", "Operators are liable for safety lapses.", ArgumentKind.CON,
                      Provenance.MEDIATOR_MANDATORY, 1.0),
    known_relations=(Relation("norm1", "goal_o", Polarity.ATTACK, 0.5),),
    norm_priority=1,
)
session = create_session(claimant, operator, config, {"operator": [norm]})

# ---------------------------------------------------------------------------
# Round trip: serialize, parse, replay.

text = serialize_session(session)
print("document starts with:", text.splitlines()[0], "...")
restored = parse_session(text)
print("round trip preserves snapshots:", restored.snapshots == session.snapshots)

workdir = Path(tempfile.mkdtemp(prefix="quam-demo-"))
case_file = workdir / "case.json"
case_file.write_text(text)

# ---------------------------------------------------------------------------
# The CLI drives the same engine. Exit codes: 0 ok, 1 domain error, 2 usage.

print("\n$ quam validate case.json")
run_cli(["validate", str(case_file)])

print("\n$ quam move case.json --party operator --arg norm1 "
      "--target goal_o --polarity A --weight 0.5 --commit")
run_cli([
    "move", str(case_file),
    "--party", "operator",
    "--arg", "norm1",
    "--target", "goal_o",
    "--polarity", "A",
    "--weight", "0.5",
    "--commit",
])

print("\n$ quam trajectory case.json --format csv")
run_cli(["trajectory", str(case_file), "--format", "csv"])

# ---------------------------------------------------------------------------
# The HTTP service exposes the same operations for a cockpit frontend.
# (Serve it standalone with: quam-serve --port 8000 --storage-dir ./sessions)

from fastapi.testclient import TestClient

app = create_app(storage_dir=workdir / "store")
with TestClient(app) as client:
    created = client.post("/sessions", content=text)
    session_id = created.json()["session_id"]
    print("\ncreated session:", session_id)

    preview = client.post(
        f"/sessions/{session_id}/whatif",
        json={
            "stage_index": 1,
            "target_party": "operator",
            "persuasive_id": "norm1",
            "relation": {"source": "norm1", "target": "goal_o",
                         "polarity": "attack", "weight": 0.5},
        },
    )
    print("what-if distance:", preview.json()["distance"])

    rows = client.get(f"/sessions/{session_id}/trajectory").json()["rows"]
    print("trajectory length after preview (unchanged):", len(rows))
