"""Four routes to the same generator.

The ascending (right) process walks the index set from the minimum, one
coproduct per element, one right coaction per hole position.  The
descending (left) process mirrors it with the left coaction.  Mixed
processes split anywhere in between, and the hole-first (derived) order
opens all holes first and then widens everything with coproducts alone.
All of them land on the same normal form - that equality is the content
of the process-equivalence theorems, checked here on a nine-leg example.
"""

from awbi import uq_engine as uq
from awbi.extension import (IndexSet, build, plan_derived, plan_left,
                            plan_mixed, plan_right)

A = IndexSet(9, (2, 4, 5, 8))
print(f"target set {A} inside [1;9]\n")

plans = {
    "right  ": plan_right(A),
    "left   ": plan_left(A),
    "mixed:2": plan_mixed(A, 2),
    "derived": plan_derived(A),
}
for name, plan in plans.items():
    print(f"{name} plan: {plan.render()}")

print("\nbuilding all four...")
elems = {name: build(A, uq.AW, plan) for name, plan in plans.items()}
ref = elems["right  "]
for name, g in elems.items():
    print(f"  {name}: {g.term_count()} terms, equal to right-process result: "
          f"{g == ref}")

print("\nsplitting at every possible index agrees too:")
for j in range(1, 5):
    print(f"  mixed:{j} == right: {build(A, uq.AW, plan_mixed(A, j)) == ref}")
