"""Command-line interface over session documents.

Subcommands: validate, evaluate, move, trajectory, replay. Exit codes:
0 success, 1 domain error (invalid document, illegal move, cycle, ...),
2 usage error. All numeric output uses 6 decimal places and identical
inputs produce byte-identical output. Set QUAM_LOG=debug for verbose logs.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .core import QuamError, validate_framework
from .evaluation import check_constraint_conflict
from .io import (
    SessionDocument,
    build_session,
    parse_document,
    serialize_session,
)
from .resolution import validate_transforms
from .session import Move, apply_move, trajectory, what_if
from .core import Relation, Polarity

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

log = logging.getLogger("quam")


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def _weight(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"weight out of [0,1]: {text}")
    return value


def _polarity(text: str) -> Polarity:
    table = {"A": Polarity.ATTACK, "S": Polarity.SUPPORT}
    if text.upper() not in table:
        raise argparse.ArgumentTypeError(f"polarity must be A or S, got {text!r}")
    return table[text.upper()]


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_document(path: str) -> SessionDocument:
    return parse_document(_read(path))


def _cmd_validate(args, out) -> int:
    document = _load_document(args.file)
    problems: list[str] = []
    for fw in document.frameworks:
        for violation in validate_framework(fw):
            problems.append(f"{fw.party_label}: {violation.message}")
    for violation in validate_transforms(document.config):
        problems.append(f"config: {violation.message}")
    if not problems:
        try:
            session = build_session(document)
        except QuamError as exc:
            problems.append(str(exc))
        else:
            for party in sorted(session.frameworks):
                conflict = check_constraint_conflict(session.frameworks[party])
                if conflict:
                    problems.append(
                        f"{party}: argument {conflict.target!r} forced both ways by "
                        f"{conflict.attacker!r} and {conflict.supporter!r}"
                    )
    if problems:
        for line in problems:
            print(line, file=out)
        return EXIT_DOMAIN
    print("valid", file=out)
    return EXIT_OK


def _cmd_evaluate(args, out) -> int:
    session = build_session(_load_document(args.file))
    parties = sorted(session.frameworks)
    if args.party is not None:
        if args.party not in session.frameworks:
            raise QuamError(f"unknown party {args.party!r}")
        parties = [args.party]
    snapshot = session.snapshots[-1]
    for party in parties:
        print(f"party {party} (stage {session.stage})", file=out)
        result = snapshot.evaluations[party]
        for aid in sorted(result.scores):
            print(f"  SF({aid}) = {_fmt(result.scores[aid])}", file=out)
        for firing in result.constraint_trace:
            print(
                f"  {firing.constraint} fired on {firing.target} by {firing.trigger}",
                file=out,
            )
    return EXIT_OK


def _print_snapshot(session, snapshot, out) -> None:
    print(f"stage {snapshot.stage_index}", file=out)
    goal_scores = snapshot.goal_scores(session)
    for party in sorted(goal_scores):
        print(
            f"  {party}: SF(goal) = {_fmt(goal_scores[party])}, "
            f"value = {_fmt(snapshot.values[party])}",
            file=out,
        )
    print(f"  distance = {_fmt(snapshot.distance)}", file=out)
    print(f"  consensus = {'yes' if snapshot.consensus else 'no'}", file=out)


def _cmd_move(args, out) -> int:
    session = build_session(_load_document(args.file))
    move = Move(
        stage_index=session.stage + 1,
        target_party=args.party,
        persuasive_id=args.arg,
        relation=Relation(
            source=args.arg, target=args.target, polarity=args.polarity, weight=args.weight
        ),
    )
    if args.commit:
        snapshot = apply_move(session, move)
        Path(args.file).write_text(serialize_session(session), encoding="utf-8")
        print(f"committed move {move.stage_index} to {args.file}", file=out)
    else:
        snapshot = what_if(session, move)
        print("preview (not committed)", file=out)
    _print_snapshot(session, snapshot, out)
    return EXIT_OK


def _cmd_trajectory(args, out) -> int:
    session = build_session(_load_document(args.file))
    rows = trajectory(session)
    parties = sorted(session.frameworks)
    if args.format == "json":
        lines = []
        for row in rows:
            goal = ", ".join(
                f'"{party}": {_fmt(row.goal_scores[party])}' for party in parties
            )
            values = ", ".join(f'"{party}": {_fmt(row.values[party])}' for party in parties)
            lines.append(
                f'  {{"stage": {row.stage}, "goal_scores": {{{goal}}}, '
                f'"values": {{{values}}}, "distance": {_fmt(row.distance)}, '
                f'"consensus": {"true" if row.consensus else "false"}}}'
            )
        print("[\n" + ",\n".join(lines) + "\n]", file=out)
        return EXIT_OK
    if args.format == "csv":
        header = ["stage"]
        for party in parties:
            header += [f"sf_{party}", f"value_{party}"]
        header += ["distance", "consensus"]
        print(",".join(header), file=out)
        for row in rows:
            cells = [str(row.stage)]
            for party in parties:
                cells += [_fmt(row.goal_scores[party]), _fmt(row.values[party])]
            cells += [_fmt(row.distance), "true" if row.consensus else "false"]
            print(",".join(cells), file=out)
        return EXIT_OK
    for row in rows:
        cells = [f"stage {row.stage}"]
        for party in parties:
            cells.append(
                f"{party} sf={_fmt(row.goal_scores[party])} value={_fmt(row.values[party])}"
            )
        cells.append(f"distance={_fmt(row.distance)}")
        cells.append(f"consensus={'yes' if row.consensus else 'no'}")
        print("  ".join(cells), file=out)
    return EXIT_OK


def _cmd_replay(args, out) -> int:
    session = build_session(_load_document(args.file))
    for snapshot in session.snapshots:
        _print_snapshot(session, snapshot, out)
    print(f"replayed {session.stage} move(s)", file=out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quam", description="Evaluate and steer mediation session documents."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a session document against all invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("evaluate", help="print every argument's final score")
    p.add_argument("file")
    p.add_argument("--party", default=None)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("move", help="preview or commit one mediator move")
    p.add_argument("file")
    p.add_argument("--party", required=True)
    p.add_argument("--arg", required=True, help="persuasive argument id")
    p.add_argument("--target", required=True, help="argument the relation points at")
    p.add_argument("--polarity", required=True, type=_polarity, help="A (attack) or S (support)")
    p.add_argument("--weight", required=True, type=_weight)
    p.add_argument("--commit", action="store_true", help="write the move back to the file")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("trajectory", help="distance and values per stage")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_trajectory)

    p = sub.add_parser("replay", help="recompute every stage from the ledger")
    p.add_argument("file")
    p.set_defaults(func=_cmd_replay)
    return parser


def run_cli(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    level = os.environ.get("QUAM_LOG", "").upper()
    if level:
        logging.basicConfig(level=getattr(logging, level, logging.INFO))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, out)
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=err)
        return EXIT_DOMAIN
    except QuamError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run_cli())
