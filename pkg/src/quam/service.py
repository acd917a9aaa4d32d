"""HTTP facade over mediation sessions for a mediator's cockpit.

Endpoints:
  POST /sessions                  create from a session document -> 201 + id
  GET  /sessions/{id}             document + snapshots
  POST /sessions/{id}/moves       commit one move -> snapshot
  POST /sessions/{id}/whatif      preview one move, no commit -> snapshot
  POST /sessions/{id}/undo        drop the last move
  GET  /sessions/{id}/trajectory  one row per stage

Errors: 400 invalid document/body, 404 unknown session, 409 illegal move;
the body always carries an ``error`` field naming the violated rule.
Committed state is persisted as a session document per session id in the
storage directory (written atomically), so a restarted server replays the
same ledgers. Writes are serialized per session; what-if never persists.
"""

from __future__ import annotations

import argparse
import os
import tempfile
import threading
import uuid
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .core import InvalidFrameworkError, QuamError
from .io import (
    DocumentSyntaxError,
    SchemaViolationError,
    _parse_move,
    parse_session,
    serialize_session,
)
from .resolution import InvalidConfigError
from .session import (
    MediationSession,
    SessionError,
    StageSnapshot,
    apply_move,
    trajectory,
    undo,
    what_if,
)


def snapshot_to_json(session: MediationSession, snapshot: StageSnapshot) -> dict[str, Any]:
    return {
        "stage_index": snapshot.stage_index,
        "evaluations": {
            party: {
                "scores": dict(sorted(result.scores.items())),
                "constraint_trace": [
                    {"constraint": f.constraint, "target": f.target, "trigger": f.trigger}
                    for f in result.constraint_trace
                ],
            }
            for party, result in sorted(snapshot.evaluations.items())
        },
        "goal_scores": snapshot.goal_scores(session),
        "values": dict(sorted(snapshot.values.items())),
        "distance": snapshot.distance,
        "consensus": snapshot.consensus,
    }


def trajectory_to_json(session: MediationSession) -> list[dict[str, Any]]:
    return [
        {
            "stage": row.stage,
            "goal_scores": row.goal_scores,
            "values": row.values,
            "distance": row.distance,
            "consensus": row.consensus,
        }
        for row in trajectory(session)
    ]


class SessionStore:
    """In-memory sessions backed by one document file per session id."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, MediationSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.json"

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def create(self, text: str) -> tuple[str, MediationSession]:
        session = parse_session(text)
        session_id = uuid.uuid4().hex
        with self._registry_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        self._persist(session_id, session)
        return session_id, session

    def get(self, session_id: str) -> MediationSession | None:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is not None:
            return session
        path = self._path(session_id)
        if not (session_id and path.is_file()):
            return None
        session = parse_session(path.read_text(encoding="utf-8"))
        with self._registry_lock:
            self._sessions.setdefault(session_id, session)
            self._locks.setdefault(session_id, threading.Lock())
            return self._sessions[session_id]

    def _persist(self, session_id: str, session: MediationSession) -> None:
        payload = serialize_session(session)
        fd, tmp_name = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
            os.replace(tmp_name, self._path(session_id))
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

    def persist(self, session_id: str, session: MediationSession) -> None:
        self._persist(session_id, session)


def _error(status: int, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": str(exc)})


def create_app(storage_dir: str | Path | None = None) -> FastAPI:
    store = SessionStore(Path(storage_dir or tempfile.mkdtemp(prefix="quam-sessions-")))
    app = FastAPI(title="quam mediation service")
    app.state.store = store

    @app.exception_handler(QuamError)
    async def _domain_error(request: Request, exc: QuamError):
        if isinstance(exc, SessionError):
            return _error(409, exc)
        return _error(400, exc)

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    async def create_session_endpoint(request: Request):
        text = (await request.body()).decode("utf-8")
        try:
            session_id, session = store.create(text)
        except (DocumentSyntaxError, SchemaViolationError, InvalidFrameworkError, InvalidConfigError, SessionError) as exc:
            return _error(400, exc)
        return {"session_id": session_id, "stage": session.stage}

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, QuamError(f"unknown session {session_id!r}"))
        import json as _json

        document = _json.loads(serialize_session(session))
        return {
            "session_id": session_id,
            "document": document,
            "snapshots": [snapshot_to_json(session, snap) for snap in session.snapshots],
        }

    def _parse_move_body(raw: bytes):
        import json as _json

        try:
            node = _json.loads(raw.decode("utf-8"))
        except _json.JSONDecodeError as exc:
            raise SchemaViolationError("$", f"invalid JSON body: {exc.msg}") from exc
        return _parse_move(node, "$")

    @app.post("/sessions/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        session = store.get(session_id)
        if session is None:
            return _error(404, QuamError(f"unknown session {session_id!r}"))
        try:
            move = _parse_move_body(await request.body())
        except SchemaViolationError as exc:
            return _error(400, exc)
        with store.lock(session_id):
            try:
                snapshot = apply_move(session, move)
            except SessionError as exc:
                return _error(409, exc)
            except InvalidFrameworkError as exc:
                return _error(409, exc)
            store.persist(session_id, session)
        return snapshot_to_json(session, snapshot)

    @app.post("/sessions/{session_id}/whatif")
    async def post_whatif(session_id: str, request: Request):
        session = store.get(session_id)
        if session is None:
            return _error(404, QuamError(f"unknown session {session_id!r}"))
        try:
            move = _parse_move_body(await request.body())
        except SchemaViolationError as exc:
            return _error(400, exc)
        try:
            snapshot = what_if(session, move)
        except SessionError as exc:
            return _error(409, exc)
        except InvalidFrameworkError as exc:
            return _error(409, exc)
        return snapshot_to_json(session, snapshot)

    @app.post("/sessions/{session_id}/undo")
    async def post_undo(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, QuamError(f"unknown session {session_id!r}"))
        with store.lock(session_id):
            try:
                undo(session)
            except SessionError as exc:
                return _error(409, exc)
            store.persist(session_id, session)
        return {
            "stage": session.stage,
            "snapshot": snapshot_to_json(session, session.snapshots[-1]),
        }

    @app.get("/sessions/{session_id}/trajectory")
    async def get_trajectory(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, QuamError(f"unknown session {session_id!r}"))
        return {"rows": trajectory_to_json(session)}

    return app


def main() -> None:
    parser = argparse.ArgumentParser(
        prog="quam-serve", description="Serve the mediation session API."
    )
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument(
        "--storage-dir",
        default=os.environ.get("QUAM_STORAGE", "./quam-sessions"),
        help="directory for persisted session documents",
    )
    args = parser.parse_args()

    import uvicorn

    uvicorn.run(create_app(args.storage_dir), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
