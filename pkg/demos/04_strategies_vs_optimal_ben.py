"""Every constructive strategy, certified by play against the exact
adversary.

A win against the optimal colorist is a proof that the strategy wins
against every colorist, so these playouts certify the catalog on each
instance.  The pacing strategies carry runtime assertions (the counter
ledger) that re-check their correctness argument at every ply.
"""

from indicated.game import chi_exact, play_match
from indicated.graphs import (
    complete_expansion,
    independent_expansion,
    join,
    make_named,
    union,
)
from indicated.strategies import (
    strat_cycle_expansion,
    strat_degeneracy,
    strat_kc5,
    strat_kc6,
    strat_p5c4,
    strat_p5k4kitebull,
    strat_split_c5_plus_clique,
    strat_union,
    strat_solver_backed,
)

c5 = make_named("C", 5)
c6 = make_named("C", 6)


def show(label, g, k, strat):
    match = play_match(g, k, strat, solve_limit=16)
    print(f"{label:34s} k={k}  {match.outcome}  moves={list(match.moves)}")


# Reverse elimination order wins whenever k reaches the coloring number.
pet = make_named("Petersen")
show("degeneracy on Petersen", pet, 4, strat_degeneracy(pet, 4))

# Independent expansions of a cycle: one representative around the cycle,
# then the rest in any order.
g = independent_expansion(c5, (2, 2, 1, 1, 1))
show("cycle expansion I[C5](2,2,1,1,1)", g, 3, strat_cycle_expansion(g, 3))

# Complete expansion of C6: maximum clique pair first, then pace the
# opposite pair.
g = complete_expansion(c6, (2, 2, 1, 1, 1, 1))
show("K[C6](2,2,1,1,1,1)", g, 4, strat_kc6(g, 4))

# Complete expansion of C5: the ledger branch paces the scan module by the
# stopping conditions; its counters are asserted at every ply.
g = complete_expansion(c5, (2, 2, 2, 2, 2))
strat = strat_kc5(g, 5)
show("K[C5](2,2,2,2,2) ledger branch", g, 5, strat)
print("  stopping case reached:", strat._case)

# Layered class around an induced C5: hub first, then the blocks over
# restricted palettes.
w5 = join(make_named("K", 1), c5)
show("wheel via layered strategy", w5, 4, strat_p5k4kitebull(w5, 4))

# Clique joined to an expansion: clique first, remainder on the leftover
# palette.
g = join(make_named("K", 2), c5)
show("K2 + C5", g, 5, strat_split_c5_plus_clique(g, 5))

# Chordal part + pods.
g = join(make_named("K", 2), complete_expansion(c5, (2, 1, 1, 1, 1)))
show("{P5,C4}-free with one pod", g, chi_exact(g), strat_p5c4(g, chi_exact(g)))

# Disjoint unions compose componentwise.
host = union(c5, make_named("P", 4))
strat = strat_union([(strat_cycle_expansion(c5, 3), c5),
                     (strat_solver_backed(make_named("P", 4), 3),
                      make_named("P", 4))], 3)
show("C5 u P4 by union composition", host, 3, strat)
