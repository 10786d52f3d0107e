"""Components of the rewriting graph: trees, loops and DOT export."""

from pi2.chains import inertia_chain_generators
from pi2.graph import build_component, cycle_basis, cycle_rank, export_dot, is_tree
from pi2.presentation import load_corpus

p = load_corpus("threelines")
for root in ("123", "23123", "312", "12331", "1232", "1312"):
    g = build_component(p, p.word(root))
    print(f"component of {root:6s}: {len(g.vertices):2d} words, {len(g.edges):2d} edges, tree={is_tree(g)}")

# The commutation presentation closes a hexagon: one independent loop,
# whose chain is a nonzero cycle.
q = load_corpus("commutative3")
g = build_component(q, q.word("123"))
print("\ncommuting letters, component of 123: cycle rank", cycle_rank(g))
(loop,) = cycle_basis(g)
print("loop:", " ".join(str(s) for s in loop.steps))
print("loop chain:", inertia_chain_generators(q, g)[0].render())

print("\n" + export_dot(build_component(p, p.word("123"))))
