"""Canonical on-disk format for mediation sessions.

A session document is a versioned JSON tree holding the two stage-0
frameworks, the dispute configuration, the persuasive catalogues, and the
move ledger. Snapshots are never stored: loading a document replays its
ledger, so the file cannot drift from what the engine would compute.

Parsing is strict (unknown fields are rejected, every range is checked) and
serialization is canonical: fixed key order, sorted collections, and all
scores/weights written as plain decimal numerals with at most 9 fractional
digits. Documents that honor that digit budget round-trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Any, Sequence

from .core import (
    Argument,
    ArgumentKind,
    Polarity,
    Provenance,
    QuamError,
    QuamFramework,
    Relation,
)
from .resolution import DisputeConfig, Role, VariableClass
from .session import (
    MediationSession,
    Move,
    PersuasiveArgument,
    create_session,
    apply_move,
)

FORMAT_VERSION = "1"


class DocumentSyntaxError(QuamError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"syntax error at line {line}, column {column}: {message}")


class SchemaViolationError(QuamError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class SerializationError(QuamError):
    pass


@dataclass(frozen=True)
class SessionDocument:
    version: str
    frameworks: tuple[QuamFramework, ...]
    config: DisputeConfig
    persuasive_sets: dict[str, tuple[PersuasiveArgument, ...]]
    ledger: tuple[Move, ...]


# ---------------------------------------------------------------------------
# Strict schema walking


def _require_object(node: Any, path: str, allowed: Sequence[str]) -> dict:
    if not isinstance(node, dict):
        raise SchemaViolationError(path, f"expected an object, got {type(node).__name__}")
    unknown = sorted(set(node) - set(allowed))
    if unknown:
        raise SchemaViolationError(path, f"unknown fields {unknown}")
    return node

def _require(node: dict, path: str, key: str) -> Any:
    if key not in node:
        raise SchemaViolationError(f"{path}.{key}", "missing required field")
    return node[key]


def _string(value: Any, path: str, non_empty: bool = True) -> str:
    if not isinstance(value, str):
        raise SchemaViolationError(path, f"expected a string, got {type(value).__name__}")
    if non_empty and not value:
        raise SchemaViolationError(path, "must be non-empty")
    return value


def _number(value: Any, path: str, lo: float = 0.0, hi: float = 1.0) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaViolationError(path, f"expected a number, got {type(value).__name__}")
    number = float(value)
    if not lo <= number <= hi:
        raise SchemaViolationError(path, f"out of [{lo:g},{hi:g}]: {value}")
    return number


def _integer(value: Any, path: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaViolationError(path, f"expected an integer, got {type(value).__name__}")
    if value < minimum:
        raise SchemaViolationError(path, f"must be >= {minimum}, got {value}")
    return value


def _enum(value: Any, path: str, enum_cls):
    text = _string(value, path)
    try:
        return enum_cls(text)
    except ValueError:
        options = sorted(member.value for member in enum_cls)
        raise SchemaViolationError(path, f"must be one of {options}, got {text!r}") from None


def _list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaViolationError(path, f"expected an array, got {type(value).__name__}")
    return value


def _parse_argument(node: Any, path: str) -> Argument:
    obj = _require_object(node, path, ("id", "text", "class", "provenance", "base_score"))
    return Argument(
        id=_string(_require(obj, path, "id"), f"{path}.id"),
        text=_string(_require(obj, path, "text"), f"{path}.text", non_empty=False),
        kind=_enum(_require(obj, path, "class"), f"{path}.class", ArgumentKind),
        provenance=_enum(obj.get("provenance", "party"), f"{path}.provenance", Provenance),
        base_score=_number(_require(obj, path, "base_score"), f"{path}.base_score"),
    )


def _parse_relation(node: Any, path: str) -> Relation:
    obj = _require_object(node, path, ("source", "target", "polarity", "weight"))
    return Relation(
        source=_string(_require(obj, path, "source"), f"{path}.source"),
        target=_string(_require(obj, path, "target"), f"{path}.target"),
        polarity=_enum(_require(obj, path, "polarity"), f"{path}.polarity", Polarity),
        weight=_number(_require(obj, path, "weight"), f"{path}.weight"),
    )


def _parse_framework(node: Any, path: str) -> QuamFramework:
    obj = _require_object(node, path, ("party_label", "arguments", "relations"))
    arguments = tuple(
        _parse_argument(item, f"{path}.arguments[{i}]")
        for i, item in enumerate(_list(_require(obj, path, "arguments"), f"{path}.arguments"))
    )
    relations = tuple(
        _parse_relation(item, f"{path}.relations[{i}]")
        for i, item in enumerate(_list(obj.get("relations", []), f"{path}.relations"))
    )
    return QuamFramework(
        party_label=_string(_require(obj, path, "party_label"), f"{path}.party_label"),
        arguments=arguments,
        relations=relations,
    )


def _parse_config(node: Any, path: str) -> DisputeConfig:
    obj = _require_object(
        node,
        path,
        ("variable_class", "roles", "k", "x", "y", "floors", "bjv_literal_distance"),
    )
    vclass = _enum(_require(obj, path, "variable_class"), f"{path}.variable_class", VariableClass)
    roles_node = _require(obj, path, "roles")
    if not isinstance(roles_node, dict):
        raise SchemaViolationError(f"{path}.roles", "expected an object")
    roles = {
        _string(party, f"{path}.roles"): _enum(role, f"{path}.roles.{party}", Role)
        for party, role in roles_node.items()
    }
    floors_node = obj.get("floors", {})
    if not isinstance(floors_node, dict):
        raise SchemaViolationError(f"{path}.floors", "expected an object")
    floors = {
        _enum(role, f"{path}.floors", Role): _number(value, f"{path}.floors.{role}")
        for role, value in floors_node.items()
    }
    literal = obj.get("bjv_literal_distance", False)
    if not isinstance(literal, bool):
        raise SchemaViolationError(f"{path}.bjv_literal_distance", "expected a boolean")
    x = obj.get("x")
    y = obj.get("y")
    return DisputeConfig(
        variable_class=vclass,
        roles=roles,
        k=_number(obj.get("k", 0.5), f"{path}.k"),
        x=None if x is None else _number(x, f"{path}.x"),
        y=None if y is None else _number(y, f"{path}.y"),
        floors=floors,
        bjv_literal_distance=literal,
    )


def _parse_persuasive(node: Any, path: str) -> PersuasiveArgument:
    obj = _require_object(node, path, ("argument", "known_relations", "norm_priority"))
    priority = obj.get("norm_priority")
    return PersuasiveArgument(
        argument=_parse_argument(_require(obj, path, "argument"), f"{path}.argument"),
        known_relations=tuple(
            _parse_relation(item, f"{path}.known_relations[{i}]")
            for i, item in enumerate(_list(obj.get("known_relations", []), f"{path}.known_relations"))
        ),
        norm_priority=None if priority is None else _integer(priority, f"{path}.norm_priority", 0),
    )


def _parse_move(node: Any, path: str) -> Move:
    obj = _require_object(node, path, ("stage_index", "target_party", "persuasive_id", "relation"))
    return Move(
        stage_index=_integer(_require(obj, path, "stage_index"), f"{path}.stage_index", 1),
        target_party=_string(_require(obj, path, "target_party"), f"{path}.target_party"),
        persuasive_id=_string(_require(obj, path, "persuasive_id"), f"{path}.persuasive_id"),
        relation=_parse_relation(_require(obj, path, "relation"), f"{path}.relation"),
    )


def parse_document(text: str) -> SessionDocument:
    """Parse and schema-check a session document, without replaying it."""
    def _reject_constant(token):
        raise ValueError(f"non-finite number {token}")

    try:
        root = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    except ValueError as exc:
        raise SchemaViolationError("$", str(exc)) from exc

    obj = _require_object(
        root, "$", ("version", "frameworks", "config", "persuasive_sets", "ledger")
    )
    version = _string(_require(obj, "$", "version"), "$.version")
    if version != FORMAT_VERSION:
        raise SchemaViolationError("$.version", f"unsupported version {version!r}")
    frameworks_node = _list(_require(obj, "$", "frameworks"), "$.frameworks")
    if len(frameworks_node) != 2:
        raise SchemaViolationError("$.frameworks", f"expected 2 frameworks, got {len(frameworks_node)}")
    frameworks = tuple(
        _parse_framework(item, f"$.frameworks[{i}]") for i, item in enumerate(frameworks_node)
    )
    sets_node = _require(obj, "$", "persuasive_sets")
    if not isinstance(sets_node, dict):
        raise SchemaViolationError("$.persuasive_sets", "expected an object")
    persuasive_sets = {
        _string(party, "$.persuasive_sets"): tuple(
            _parse_persuasive(item, f"$.persuasive_sets.{party}[{i}]")
            for i, item in enumerate(_list(items, f"$.persuasive_sets.{party}"))
        )
        for party, items in sets_node.items()
    }
    ledger = tuple(
        _parse_move(item, f"$.ledger[{i}]")
        for i, item in enumerate(_list(_require(obj, "$", "ledger"), "$.ledger"))
    )
    return SessionDocument(
        version=version,
        frameworks=frameworks,
        config=_parse_config(_require(obj, "$", "config"), "$.config"),
        persuasive_sets=persuasive_sets,
        ledger=ledger,
    )


def build_session(document: SessionDocument) -> MediationSession:
    """Replay a document into a live session; all invariants are re-checked."""
    fw1, fw2 = sorted(document.frameworks, key=lambda fw: fw.party_label)
    session = create_session(fw1, fw2, document.config, dict(document.persuasive_sets))
    for move in document.ledger:
        apply_move(session, move)
    return session


def parse_session(text: str) -> MediationSession:
    return build_session(parse_document(text))


def session_to_document(session: MediationSession) -> SessionDocument:
    return SessionDocument(
        version=FORMAT_VERSION,
        frameworks=tuple(
            session.initial_frameworks[party] for party in sorted(session.initial_frameworks)
        ),
        config=session.config,
        persuasive_sets=dict(session.persuasive_sets),
        ledger=tuple(session.ledger),
    )


# ---------------------------------------------------------------------------
# Canonical serialization


def format_number(value: float) -> str:
    """Render a float as a plain decimal numeral with at most 9 fractional digits."""
    quantized = Decimal(repr(float(value))).quantize(Decimal("1E-9"), rounding=ROUND_HALF_EVEN)
    return format(quantized.normalize(), "f")


def _dump(node: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(node, dict):
        if not node:
            return "{}"
        rows = ",\n".join(
            f"{inner}{json.dumps(key)}: {_dump(value, indent + 1)}" for key, value in node.items()
        )
        return "{\n" + rows + "\n" + pad + "}"
    if isinstance(node, list):
        if not node:
            return "[]"
        rows = ",\n".join(f"{inner}{_dump(item, indent + 1)}" for item in node)
        return "[\n" + rows + "\n" + pad + "]"
    if isinstance(node, bool):
        return "true" if node else "false"
    if isinstance(node, int):
        return str(node)
    if isinstance(node, float):
        return format_number(node)
    if isinstance(node, str):
        return json.dumps(node)
    if node is None:
        return "null"
    raise SerializationError(f"cannot serialize {type(node).__name__}")


def _argument_node(arg: Argument) -> dict:
    return {
        "id": arg.id,
        "text": arg.text,
        "class": arg.kind.value,
        "provenance": arg.provenance.value,
        "base_score": float(arg.base_score),
    }


def _relation_node(rel: Relation) -> dict:
    return {
        "source": rel.source,
        "target": rel.target,
        "polarity": rel.polarity.value,
        "weight": float(rel.weight),
    }


def _framework_node(fw: QuamFramework) -> dict:
    return {
        "party_label": fw.party_label,
        "arguments": [_argument_node(a) for a in fw.arguments],
        "relations": [_relation_node(r) for r in fw.relations],
    }


def _config_node(config: DisputeConfig) -> dict:
    if config.transforms:
        raise SerializationError(
            "configs with custom transformation callables cannot be serialized"
        )
    node: dict[str, Any] = {
        "variable_class": config.variable_class.value,
        "roles": {party: config.roles[party].value for party in sorted(config.roles)},
        "k": float(config.k),
    }
    if config.x is not None:
        node["x"] = float(config.x)
    if config.y is not None:
        node["y"] = float(config.y)
    if config.floors:
        node["floors"] = {
            role.value: float(config.floors[role])
            for role in sorted(config.floors, key=lambda r: r.value)
        }
    if config.bjv_literal_distance:
        node["bjv_literal_distance"] = True
    return node


def _persuasive_node(pa: PersuasiveArgument) -> dict:
    node: dict[str, Any] = {"argument": _argument_node(pa.argument)}
    if pa.known_relations:
        node["known_relations"] = [_relation_node(r) for r in pa.known_relations]
    if pa.norm_priority is not None:
        node["norm_priority"] = pa.norm_priority
    return node


def _move_node(move: Move) -> dict:
    return {
        "stage_index": move.stage_index,
        "target_party": move.target_party,
        "persuasive_id": move.persuasive_id,
        "relation": _relation_node(move.relation),
    }


def serialize_document(document: SessionDocument) -> str:
    root = {
        "version": document.version,
        "frameworks": [
            _framework_node(fw)
            for fw in sorted(document.frameworks, key=lambda f: f.party_label)
        ],
        "config": _config_node(document.config),
        "persuasive_sets": {
            party: [
                _persuasive_node(pa)
                for pa in sorted(document.persuasive_sets[party], key=lambda p: p.argument.id)
            ]
            for party in sorted(document.persuasive_sets)
        },
        "ledger": [_move_node(move) for move in document.ledger],
    }
    return _dump(root, 0) + "\n"


def serialize_session(session: MediationSession) -> str:
    return serialize_document(session_to_document(session))
