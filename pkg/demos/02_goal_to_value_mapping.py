"""
From goal acceptability to a verdict on the disputed variable
=============================================================

A goal score alone does not say what a party would actually settle for.
Transformation functions close that gap: they map acceptability to a value
of bearing on the disputed variable, per variable class:

  BUV  binary, one party decides        (remove the fence or not)
  BJV  binary, indivisible right        (who gets custody)
  CUV  continuous, one party pays       (how much compensation)
  CJV  continuous, shared resource      (how to split the profits)

Consensus and distance then compare the two parties' mapped values.
"""

from quam import (
    DisputeConfig,
    Role,
    VariableClass,
    consensus,
    distance,
    map_to_value,
    tau,
    validate_transforms,
)

# ---------------------------------------------------------------------------
# Binary classes go through a threshold: at acceptability k the party accepts
# neither outcome; above it the party holds its own target.

print("tau examples (k = 0.5):")
print("  claimant at 0.9 ->", tau(Role.GOAL_1, 0.9, 0.5))  # holds 'yes'
print("  claimant at 0.2 ->", tau(Role.GOAL_1, 0.2, 0.5))  # concedes 'no'
print("  resister at 0.9 ->", tau(Role.GOAL_0, 0.9, 0.5))  # holds 'no'

fence = DisputeConfig(
    variable_class=VariableClass.BUV,
    roles={"neighbor": Role.GOAL_1, "owner": Role.GOAL_0},
    k=0.5,
)
print("fence dispute, both stubborn:", consensus(fence, 0.9, 0.9), distance(fence, 0.9, 0.9))
print("fence dispute, owner yields:", consensus(fence, 0.9, 0.3), distance(fence, 0.9, 0.3))

# ---------------------------------------------------------------------------
# The compensation case is continuous unilateral: the supermarket pays, the
# customer receives. The payer's target is 20%; the customer asks for 100%.
# The default maps are linear: a payer at full acceptability pays only its
# target, at the floor it pays everything; a payee scales from 0 to its target.

compensation = DisputeConfig(
    variable_class=VariableClass.CUV,
    roles={"supermarket": Role.PAYER, "zhang": Role.PAYEE},
    x=0.2,  # payer target
    y=1.0,  # payee target
)
print("payer map is  1 - 0.8 * sf  here:")
for sf in (1.0, 0.75, 0.5, 0.0):
    print(f"  sf={sf:.2f} -> pays {map_to_value(compensation, Role.PAYER, sf):.2f}")

# After the mediator's mandatory argument the supermarket's goal sits at 0.75,
# i.e. it would pay 40%; the customer still wants 100%: no consensus yet, and
# the residual conflict is 0.6.
print("consensus:", consensus(compensation, 0.75, 1.0))
print("distance:", distance(compensation, 0.75, 1.0))

# ---------------------------------------------------------------------------
# Continuous joint: two heirs sharing estate proceeds, targets 60% and 70%.
# Their claims overlap by 30% until someone's goal weakens.

estate = DisputeConfig(
    variable_class=VariableClass.CJV,
    roles={"elder": Role.P1, "younger": Role.P2},
    x=0.6,
    y=0.7,
)
print("joint claims at full acceptability:", distance(estate, 1.0, 1.0))
print("joint claims after one side halves:", distance(estate, 0.5, 1.0), consensus(estate, 0.5, 1.0))

# ---------------------------------------------------------------------------
# Custom maps are pluggable, but they must honor the guiding principles:
# monotone in the right direction, correct endpoints, and targets that leave
# room for agreement. validate_transforms reports anything off.

greedy = DisputeConfig(
    variable_class=VariableClass.CUV,
    roles={"supermarket": Role.PAYER, "zhang": Role.PAYEE},
    x=0.9,
    y=0.5,  # payer wants to pay more than the payee asks: nonsensical targets
)
for violation in validate_transforms(greedy):
    print("rejected:", violation.message)
