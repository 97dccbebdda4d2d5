"""Structural decompositions behind the winning strategies.

Each decomposer checks its forbidden-subgraph precondition, builds the
partition, and re-validates every structural claim before returning, so a
returned decomposition is a checked certificate.
"""

from indicated.game import chi_exact
from indicated.graphs import Graph, complete_expansion, join, make_named
from indicated.structure import (
    chi_formula_kc5,
    chi_p5k4kitebull,
    decompose_p5c4,
    decompose_p5k4kitebull,
    decompose_p6c5claw,
    recognize_expansion,
    sumner_classify,
)

c5 = make_named("C", 5)
c6 = make_named("C", 6)

# The wheel decomposes around its rim: five singleton cycle classes and the
# hub in the "sees the whole cycle" block B; chi jumps to 4 exactly when B
# is nonempty.
w5 = join(make_named("K", 1), c5)
dec = decompose_p5k4kitebull(w5)
print("W5 layers: A =", dec.A, "B =", dec.B)
print("chi from decomposition:", chi_p5k4kitebull(dec), "exact:", chi_exact(w5))

# An independent expansion is the degenerate case (B empty).
ic5 = make_named("C", 5)
dec = decompose_p5k4kitebull(ic5)
print("C5 is a unit expansion:", dec.is_unit)

# The C6 characterization: cliques A_0..A_5 around the cycle plus up to
# three cliques B_0..B_2 attached to the non-opposite A's.
x_edges = c6.edges() + [(6, 1), (6, 2), (6, 4), (6, 5)]
g = Graph(7, x_edges)
dec = decompose_p6c5claw(g)
print("C6 + one extra vertex: A =", dec.A, "B =", dec.B)

# Expansion recognition certifies module structure.
kc6 = complete_expansion(c6, (2, 1, 1, 2, 1, 1))
es = recognize_expansion(kc6, c6, allowed=("complete",))
print("K[C6] modules:", es.modules)
print("Petersen as a C5 expansion:",
      recognize_expansion(make_named("Petersen"), c5))

# Triangle-free P5-free graphs split into bipartite components and
# independent expansions of C5.
from indicated.graphs import union

tags = sumner_classify(union(make_named("P", 4), c5))
print("P4 u C5 components:", [(t.kind, t.vertices) for t in tags])

# {P5,C4}-free graphs: a chordal part plus expansion pods hanging off
# cliques.
g = join(make_named("K", 2), complete_expansion(c5, (2, 1, 1, 1, 1)))
dec = decompose_p5c4(g)
print("chordal part:", dec.chordal_part)
for pod in dec.pods:
    print("pod modules:", pod.modules, "clique neighborhood:", pod.clique_nbhd)

# The closed-form chromatic number of complete C5 expansions.
for m in ((1, 1, 1, 1, 1), (2, 2, 2, 2, 2), (3, 1, 1, 1, 1)):
    print("chi K[C5]", m, "=", chi_formula_kc5(m),
          "(exact:", chi_exact(complete_expansion(c5, m)), ")")
