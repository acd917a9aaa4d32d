"""Mapping goal acceptability to concrete values of the disputed variable.

Binary variables resolve through a threshold: a party either holds its
target outcome or concedes the opposite one. Continuous variables resolve
through monotone transformation functions from acceptability to a share in
[0, 1]; the default family is linear through the endpoints fixed by each
role (a payer at full acceptability pays only its target x, at the floor it
pays 100%; payees and joint sharers scale from 0 up to their target).

Consensus and distance are two views of the same per-class condition:
distance is 0 exactly when the parties' mapped values are compatible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .core import DomainError, QuamError, Violation

INEQ_TOL = 1e-9
GRID_STEPS = 1000

# Roles whose carrier counts as "party 1" in consensus/distance formulas.
_PRIMARY_ROLES = frozenset({"goal-1", "payer", "p1"})


class InvalidConfigError(QuamError):
    def __init__(self, report: list[Violation]):
        self.report = list(report)
        super().__init__("; ".join(v.message for v in report))


class VariableClass(str, Enum):
    BUV = "BUV"  # binary, decided by one party
    BJV = "BJV"  # binary, indivisible right assigned to one of the two
    CUV = "CUV"  # continuous, one party pays the other
    CJV = "CJV"  # continuous, both share one resource


class Role(str, Enum):
    GOAL_1 = "goal-1"
    GOAL_0 = "goal-0"
    PAYER = "payer"
    PAYEE = "payee"
    P1 = "p1"
    P2 = "p2"

    @property
    def primary(self) -> bool:
        return self.value in _PRIMARY_ROLES


ROLE_PAIRS = {
    VariableClass.BUV: (Role.GOAL_1, Role.GOAL_0),
    VariableClass.BJV: (Role.GOAL_1, Role.GOAL_0),
    VariableClass.CUV: (Role.PAYER, Role.PAYEE),
    VariableClass.CJV: (Role.P1, Role.P2),
}

Transform = Callable[[float], float]


@dataclass(frozen=True)
class DisputeConfig:
    """Everything needed to turn two goal scores into a verdict on the dispute.

    ``roles`` assigns each party label its role tag; the pair must match the
    variable class. ``k`` is the binary indifference threshold. ``x`` and
    ``y`` are the two target values, and ``floors`` the acceptability floors
    at which a role hits maximal concession. ``transforms`` may override the
    default linear maps per role (callables, not serializable); overrides
    are still clamped to [floor, 1] and must pass validate_transforms.
    """

    variable_class: VariableClass
    roles: dict[str, Role]
    k: float = 0.5
    x: Optional[float] = None
    y: Optional[float] = None
    floors: dict[Role, float] = field(default_factory=dict)
    transforms: Optional[dict[Role, Transform]] = None
    bjv_literal_distance: bool = False

    def __post_init__(self):
        expected = set(ROLE_PAIRS[self.variable_class])
        got = set(self.roles.values())
        if len(self.roles) != 2 or got != expected:
            raise InvalidConfigError(
                [
                    Violation(
                        "roles",
                        f"{self.variable_class.value} needs two parties with roles "
                        f"{sorted(r.value for r in expected)}, got "
                        f"{sorted(r.value for r in got)}",
                    )
                ]
            )
        if self.continuous and (self.x is None or self.y is None):
            raise InvalidConfigError(
                [Violation("targets", "continuous classes require target values x and y")]
            )

    @property
    def continuous(self) -> bool:
        return self.variable_class in (VariableClass.CUV, VariableClass.CJV)

    @property
    def party_order(self) -> tuple[str, str]:
        """(party 1, party 2): party 1 carries the goal-1/payer/p1 role."""
        first = [p for p, r in self.roles.items() if r.primary]
        second = [p for p, r in self.roles.items() if not r.primary]
        return first[0], second[0]

    def floor(self, role: Role) -> float:
        return self.floors.get(role, 0.0)

    def transform(self, role: Role) -> Transform:
        if self.transforms and role in self.transforms:
            return self.transforms[role]
        return self._default_transform(role)

    def _default_transform(self, role: Role) -> Transform:
        kf = self.floor(role)
        x, y = self.x, self.y
        if role is Role.PAYER:
            return lambda a: 1.0 - (1.0 - x) * (a - kf) / (1.0 - kf)
        if role in (Role.PAYEE, Role.P2):
            return lambda a: y * (a - kf) / (1.0 - kf)
        if role is Role.P1:
            return lambda a: x * (a - kf) / (1.0 - kf)
        raise InvalidConfigError(
            [Violation("transform", f"role {role.value} has no transformation function")]
        )


def tau(polarity: Role, sf: float, k: float) -> int:
    """Threshold map from a goal score to the binary outcome the party's
    current stance implies.

    At exactly sf = k the goal counts as not accepted, keeping the map total.
    """
    if not 0.0 <= sf <= 1.0:
        raise DomainError(f"sf outside [0,1]: {sf}")
    if not 0.0 < k < 1.0:
        raise DomainError(f"threshold k outside (0,1): {k}")
    if polarity is Role.GOAL_1:
        return 0 if sf <= k else 1
    if polarity is Role.GOAL_0:
        return 1 if sf <= k else 0
    raise DomainError(f"tau takes goal-1 or goal-0, got {polarity.value}")


def map_to_value(config: DisputeConfig, role: Role, sf: float) -> float:
    """Map a goal score to the value of the disputed variable under a role.

    Binary roles go through the threshold map; continuous roles through the
    configured transformation with sf clamped to [floor, 1] (below the floor
    the party is at maximal concession already).
    """
    if not 0.0 <= sf <= 1.0:
        raise DomainError(f"sf outside [0,1]: {sf}")
    if role not in ROLE_PAIRS[config.variable_class]:
        raise InvalidConfigError(
            [
                Violation(
                    "role",
                    f"role {role.value} does not belong to {config.variable_class.value}",
                )
            ]
        )
    if not config.continuous:
        return float(tau(role, sf, config.k))
    clamped = min(1.0, max(config.floor(role), sf))
    return config.transform(role)(clamped)


def validate_transforms(config: DisputeConfig) -> list[Violation]:
    """Check thresholds, floors, targets, endpoints and monotonicity.

    Monotonicity is checked on a fixed grid over [floor, 1]: the payer map
    must be non-increasing, all other continuous maps non-decreasing. Target
    values must leave room for agreement (payer target below payee target;
    joint targets overlapping).
    """
    report: list[Violation] = []
    if not config.continuous:
        if not 0.0 < config.k < 1.0:
            report.append(
                Violation("threshold", f"binary threshold k must be in (0,1), got {config.k}")
            )
        return report

    for role in ROLE_PAIRS[config.variable_class]:
        kf = config.floor(role)
        if not 0.0 <= kf < 1.0:
            report.append(
                Violation("floor", f"floor for {role.value} must be in [0,1), got {kf}")
            )
    if report:
        return report

    x, y = config.x, config.y
    for name, value in (("x", x), ("y", y)):
        if not 0.0 <= value <= 1.0:
            report.append(Violation("target", f"target {name} outside [0,1]: {value}"))
    if report:
        return report

    if config.variable_class is VariableClass.CUV and not x < y:
        report.append(
            Violation("principle-2", f"payer/payee targets must satisfy x < y, got x={x}, y={y}")
        )
    if config.variable_class is VariableClass.CJV and not x + y > 1.0:
        report.append(
            Violation(
                "principle-2",
                f"joint targets must satisfy x + y > 1, got x={x}, y={y}",
            )
        )

    endpoints = {
        Role.PAYER: (1.0, x),
        Role.PAYEE: (0.0, y),
        Role.P1: (0.0, x),
        Role.P2: (0.0, y),
    }
    for role in ROLE_PAIRS[config.variable_class]:
        fn = config.transform(role)
        kf = config.floor(role)
        grid = [kf + i * (1.0 - kf) / GRID_STEPS for i in range(GRID_STEPS + 1)]
        values = [fn(a) for a in grid]
        non_increasing = all(b <= a + INEQ_TOL for a, b in zip(values, values[1:]))
        non_decreasing = all(b >= a - INEQ_TOL for a, b in zip(values, values[1:]))
        if role is Role.PAYER and not non_increasing:
            report.append(
                Violation("principle-1", "payer map must be non-increasing in acceptability")
            )
        if role is not Role.PAYER and not non_decreasing:
            report.append(
                Violation(
                    "principle-1",
                    f"{role.value} map must be non-decreasing in acceptability",
                )
            )
        at_floor, at_one = endpoints[role]
        if abs(values[0] - at_floor) > INEQ_TOL:
            report.append(
                Violation(
                    "endpoint",
                    f"{role.value} map must send the floor to {at_floor}, got {values[0]}",
                )
            )
        if abs(values[-1] - at_one) > INEQ_TOL:
            report.append(
                Violation(
                    "endpoint",
                    f"{role.value} map must send 1 to {at_one}, got {values[-1]}",
                )
            )
    return report


def _mapped_pair(config: DisputeConfig, sf1: float, sf2: float) -> tuple[float, float]:
    role1, role2 = ROLE_PAIRS[config.variable_class]
    return map_to_value(config, role1, sf1), map_to_value(config, role2, sf2)


def consensus(config: DisputeConfig, sf1: float, sf2: float) -> bool:
    """Whether the two goal scores resolve the dispute.

    sf1 belongs to the party carrying the goal-1/payer/p1 role, sf2 to the
    other party. Inequalities carry a small tolerance so consensus and
    distance agree at the boundary.
    """
    v1, v2 = _mapped_pair(config, sf1, sf2)
    vclass = config.variable_class
    if vclass is VariableClass.BUV:
        return v1 == v2
    if vclass is VariableClass.BJV:
        return v1 == 1.0 - v2
    if vclass is VariableClass.CUV:
        return v2 - v1 <= INEQ_TOL  # the payer offers at least what the payee asks
    return v1 + v2 - 1.0 <= INEQ_TOL  # joint claims fit into the whole


def distance(config: DisputeConfig, sf1: float, sf2: float) -> float:
    """Residual conflict between the parties, 0 exactly at consensus.

    For the binary joint class the thresholds are applied to each party's
    own goal; set ``bjv_literal_distance`` to cross-apply them instead
    (an alternative reading that is not guaranteed to vanish at consensus).
    """
    v1, v2 = _mapped_pair(config, sf1, sf2)
    vclass = config.variable_class
    if vclass is VariableClass.BUV:
        return abs(v1 - v2)
    if vclass is VariableClass.BJV:
        if config.bjv_literal_distance:
            role1, role2 = ROLE_PAIRS[vclass]
            crossed1 = float(tau(role1, sf2, config.k))
            crossed0 = float(tau(role2, sf1, config.k))
            return 1.0 - abs(crossed1 - crossed0)
        return 1.0 - abs(v1 - v2)
    if vclass is VariableClass.CUV:
        gap = v2 - v1
    else:
        gap = v1 + v2 - 1.0
    return gap if gap > INEQ_TOL else 0.0
