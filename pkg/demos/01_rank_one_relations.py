"""The three-leg picture: six generators and their q-commutation relations.

Inside the threefold tensor power, the Casimir element spawns one generator
per index set.  Consecutive sets come from iterated coproducts; the set
{1,3} needs a coaction to open the hole.  The three q-commutator relations
between the two-element generators close on exactly these six elements.
"""

from awbi import uq_engine as uq
from awbi.extension import generator
from awbi.relations import check_star

n = 3
names = [(1,), (2,), (3,), (1, 2), (2, 3), (1, 3), (1, 2, 3)]
gens = {A: generator(uq.AW, n, A) for A in names}

print("generators in the threefold tensor power:")
for A, g in gens.items():
    print(f"  set {set(A)}: {g.term_count()} terms")

print("\nthe generator with a hole, {1,3}:")
print(gens[(1, 3)].pretty(max_terms=6))

print("\nq-commutation relations between the pair generators:")
for A, B in (((1, 2), (2, 3)), ((2, 3), (1, 3)), ((1, 3), (1, 2))):
    rep = check_star(A, B, n, uq.AW)
    print(f"  [G{set(A)}, G{set(B)}]_q relation: "
          f"{'holds' if rep.holds_star else 'FAILS'}")

rep = check_star((1, 2), (1, 3), n, uq.AW)
print(f"\nthe reversed ordering [G{{1,2}}, G{{1,3}}]_q does not close:")
print(f"  residual has {rep.residual_star.term_count()} terms "
      f"(the relation is genuinely directional)")
