"""Build graphs, expand cycles, and move them through graph6.

The package keeps vertices as dense 0-based ids with bit-row adjacency,
so everything downstream (solver, strategies, decompositions) is
deterministic and cheap to hash.
"""

from indicated.graphs import (
    complete_expansion,
    degeneracy,
    independent_expansion,
    join,
    make_named,
    parse_graph6,
    to_dot,
    write_graph6,
)

# Named graphs: families take a size, the small obstruction graphs don't.
c5 = make_named("C", 5)
kite = make_named("Kite")
bull = make_named("Bull")
print("C5:", c5, "degree sequence", c5.degree_sequence())
print("Kite:", kite.degree_sequence(), "Bull:", bull.degree_sequence())

# Expansions replace each cycle vertex by a clique (K[...]) or an
# independent set (I[...]), joining parts across cycle edges.
kc5 = complete_expansion(c5, (2, 2, 1, 1, 1))
ic5 = independent_expansion(c5, (2, 2, 1, 1, 1))
print("K[C5](2,2,1,1,1):", kc5)
print("I[C5](2,2,1,1,1):", ic5)

# The wheel is a join; its rim is an induced C5, which is why it shows up
# in every second example below.
w5 = join(make_named("K", 1), c5)
print("W5 = K1 + C5:", w5)

# Coloring number via minimum-degree elimination.
print("col(C5) =", degeneracy(c5).col)
print("col(Petersen) =", degeneracy(make_named("Petersen")).col)

# graph6 is the interchange format for corpora; the writer/parser round-trip
# exactly.
line = write_graph6(kc5)
print("graph6 of K[C5](2,2,1,1,1):", line)
assert parse_graph6(line) == kc5

# DOT export for a quick look in graphviz.
print(to_dot(w5, coloring={0: 1}))
