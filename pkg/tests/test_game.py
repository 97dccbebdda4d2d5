import pytest

from indicated.errors import (
    AlreadyColored,
    BadParam,
    NoLegalColor,
    NotWinnableWithinKmax,
    ResourceBudgetExceeded,
    ScriptError,
    StrategyIllegalMove,
    TooLarge,
)
from indicated.game import (
    GameState,
    alpha_exact,
    ann_wins,
    ann_wins_reference,
    ben_best_reply,
    blocked_vertex,
    chi_exact,
    chi_i,
    legal_colors,
    omega_exact,
    play_match,
    twin_classes,
)
from indicated.graphs import (
    Graph,
    complete_expansion,
    independent_expansion,
    join,
    make_named,
    union,
)
from indicated.strategies import Strategy

from builders import random_graph


def test_legal_colors_examples():
    s = GameState(Graph(2, [(0, 1)]), 3, [1, 0])
    assert legal_colors(s, 1) == {2, 3}
    assert legal_colors(GameState(Graph(1), 2), 0) == {1, 2}
    c4 = make_named("C", 4)
    s = GameState(c4, 2, [1, 0, 2, 0])
    assert legal_colors(s, 1) == set()
    with pytest.raises(AlreadyColored):
        legal_colors(s, 0)


def test_blocked_vertex_examples():
    assert blocked_vertex(GameState(Graph(2, [(0, 1)]), 3, [1, 0])) is None
    assert blocked_vertex(GameState(Graph(1), 2)) is None
    c4 = make_named("C", 4)
    assert blocked_vertex(GameState(c4, 2, [1, 0, 2, 0])) == 1


def test_state_validation():
    with pytest.raises(BadParam):
        GameState(Graph(2, [(0, 1)]), 2, [1, 1])
    with pytest.raises(BadParam):
        GameState(Graph(1), 0)
    with pytest.raises(BadParam):
        GameState(Graph(1), 2, [3])


def test_ann_wins_examples():
    assert ann_wins(make_named("K", 4), 4).ann_wins
    assert not ann_wins(make_named("C", 5), 2).ann_wins
    assert ann_wins(make_named("C", 5), 3).ann_wins
    assert ann_wins(make_named("P", 4), 2).ann_wins


def test_ann_wins_principal_line():
    res = ann_wins(make_named("C", 5), 3)
    assert len(res.principal_line) == 5
    g = make_named("C", 5)
    colors = {}
    for v, c in res.principal_line:
        assert v not in colors
        assert all(colors.get(u) != c for u in g.neighbors(v))
        colors[v] = c
    # losing line ends in a blocked position
    res = ann_wins(make_named("C", 5), 2)
    assert len(res.principal_line) < 5
    end = GameState(g, 2)
    for v, c in res.principal_line:
        end.colors[v] = c
    assert blocked_vertex(end) is not None


def test_ann_wins_limits():
    with pytest.raises(TooLarge):
        ann_wins(Graph(15), 2)
    with pytest.raises(ResourceBudgetExceeded):
        ann_wins(make_named("Petersen"), 3, node_budget=5)
    with pytest.raises(BadParam):
        ann_wins(Graph(1), 0)


def test_chi_i_examples():
    res = chi_i(make_named("C", 5), 5)
    assert res.chi_i == 3
    assert res.winnable == {1: False, 2: False, 3: True, 4: True, 5: True}
    res = chi_i(make_named("Petersen"), 4, canon="twins")
    assert res.chi_i == 3
    res = chi_i(complete_expansion(make_named("C", 5), (2, 2, 2, 2, 2)), 6,
                canon="twins")
    assert res.chi_i == 5
    assert res.winnable[5] and res.winnable[6]


def test_chi_i_errors_and_edges():
    with pytest.raises(NotWinnableWithinKmax):
        chi_i(make_named("C", 5), 2)
    assert chi_i(Graph(0)).chi_i == 0
    assert chi_i(Graph(1)).chi_i == 1


def test_ben_best_reply_examples():
    c4 = make_named("C", 4)
    st = GameState(c4, 2, [1, 0, 0, 0], pending=2)
    assert ben_best_reply(st) == 2
    st = GameState(Graph(2, [(0, 1)]), 2, [1, 0], pending=1)
    assert ben_best_reply(st) == 2
    # all replies lose for the adversary: least color
    st = GameState(make_named("K", 3), 3, [0, 0, 0], pending=0)
    assert ben_best_reply(st) == 1
    st = GameState(c4, 2, [1, 0, 2, 0], pending=1)
    with pytest.raises(NoLegalColor):
        ben_best_reply(st)


class _Scripted(Strategy):
    def __init__(self, order):
        self.order = list(order)

    def next_vertex(self, state):
        return self.order.pop(0)


def test_play_match_examples():
    c5 = make_named("C", 5)
    from indicated.strategies import strat_cycle_expansion

    res = play_match(c5, 3, strat_cycle_expansion(c5, 3))
    assert res.ann_won and len(res.moves) == 5
    # scripted bad selector on C4 with 2 colors loses at move 3
    c4 = make_named("C", 4)
    res = play_match(c4, 2, _Scripted([0, 2, 1, 3]))
    assert res.outcome == "BEN_WINS" and res.blocked in (1, 3)
    assert len(res.moves) == 2
    res = play_match(make_named("K", 3), 3, _Scripted([0, 1, 2]))
    assert res.ann_won


def test_play_match_illegal_moves():
    c4 = make_named("C", 4)
    with pytest.raises(StrategyIllegalMove):
        play_match(c4, 3, _Scripted([0, 0, 1, 2, 3]))
    with pytest.raises(StrategyIllegalMove):
        play_match(c4, 3, _Scripted([9]))


def test_play_match_scripted_ben():
    c4 = make_named("C", 4)
    res = play_match(c4, 2, _Scripted([0, 2, 1, 3]), ben=[1, 2])
    assert res.outcome == "BEN_WINS"
    res = play_match(c4, 2, _Scripted([0, 2, 1, 3]), ben=[1, 1, 2, 2])
    assert res.ann_won
    with pytest.raises(ScriptError):
        play_match(c4, 2, _Scripted([0, 2, 1, 3]), ben=[1])
    with pytest.raises(ScriptError):
        play_match(c4, 2, _Scripted([0, 1]), ben=[1, 1])


def test_exact_oracles():
    assert chi_exact(complete_expansion(make_named("C", 5), (2, 2, 2, 2, 2))) == 5
    assert alpha_exact(make_named("C", 5)) == 2
    assert omega_exact(make_named("Kite")) == 3
    assert chi_exact(make_named("Petersen")) == 3
    assert chi_exact(Graph(0)) == 0
    assert chi_exact(Graph(4)) == 1
    assert omega_exact(join(make_named("K", 3), make_named("C", 5))) == 5
    with pytest.raises(TooLarge):
        chi_exact(Graph(21))
    with pytest.raises(TooLarge):
        omega_exact(Graph(41))


def test_chi_exact_brute_oracle(rng):
    """Cross-check the branch-and-bound against naive k-colorability."""

    def brute_chi(g):
        if g.n == 0:
            return 0

        def colorable(k, colors, v):
            if v == g.n:
                return True
            for c in range(1, k + 1):
                if all(colors[u] != c for u in g.neighbors(v) if u < v):
                    colors[v] = c
                    if colorable(k, colors, v + 1):
                        return True
                    colors[v] = 0
            return False

        for k in range(1, g.n + 1):
            if colorable(k, [0] * g.n, 0):
                return k
        return g.n

    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 8))
        assert chi_exact(g) == brute_chi(g)


def test_twin_classes():
    g = complete_expansion(make_named("C", 5), (2, 2, 1, 1, 1))
    classes = twin_classes(g)
    assert sorted(m.bit_count() for m in classes) == [1, 1, 1, 2, 2]
    g = independent_expansion(make_named("C", 5), (3, 1, 1, 1, 1))
    classes = twin_classes(g)
    assert sorted(m.bit_count() for m in classes) == [1, 1, 1, 1, 3]


def test_solver_canonicalizations_agree(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        for k in range(1, 5):
            a = ann_wins(g, k, canon="classes", want_line=False).ann_wins
            b = ann_wins(g, k, canon="twins", want_line=False).ann_wins
            c = ann_wins_reference(g, k)
            assert a == b == c


def test_chi_i_label_invariance(rng):
    """Relabeling the vertices never changes the winnable table."""
    checked = 0
    graphs_used = 0
    while graphs_used < 20:
        n = rng.randint(3, 8)
        g = random_graph(rng, n, p=rng.choice((0.3, 0.5, 0.7)))
        base = chi_i(g, min(n, 5))
        graphs_used += 1
        for _ in range(5):
            perm = list(range(n))
            rng.shuffle(perm)
            edges = [(perm[u], perm[v]) for u, v in g.edges()]
            h = Graph(n, edges)
            assert chi_i(h, min(n, 5)).winnable == base.winnable
            checked += 1
    assert checked >= 100


def test_optimal_ben_is_deterministic():
    g = make_named("C", 5)
    from indicated.strategies import strat_cycle_expansion

    m1 = play_match(g, 3, strat_cycle_expansion(g, 3))
    m2 = play_match(g, 3, strat_cycle_expansion(g, 3))
    assert m1.moves == m2.moves


def test_strategy_win_implies_game_value(rng):
    """A strategy win against the optimal adversary certifies the game value."""
    from indicated.strategies import strat_degeneracy
    from indicated.graphs import degeneracy

    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        col = degeneracy(g).col
        res = play_match(g, col, strat_degeneracy(g, col))
        assert res.ann_won
        assert ann_wins(g, col, want_line=False).ann_wins


def test_union_and_join_solver_identities(rng):
    for _ in range(10):
        g1 = random_graph(rng, rng.randint(1, 4))
        g2 = random_graph(rng, rng.randint(1, 4))
        c1 = chi_i(g1).chi_i
        c2 = chi_i(g2).chi_i
        assert chi_i(union(g1, g2)).chi_i == max(c1, c2)
        assert chi_i(join(g1, g2)).chi_i == c1 + c2


def test_gamestate_turn_and_clone():
    g = make_named("C", 4)
    s = GameState(g, 2)
    assert s.turn == "ann"
    s.pending = 0
    assert s.turn == "ben"
    s.pending = None
    s.colors[0] = 1
    c = s.clone()
    c.colors[2] = 2
    assert s.colors[2] == 0 and c.colors[0] == 1


@pytest.mark.slow
def test_twin_canonicalization_agrees_on_larger_graphs(rng):
    """Beyond the reference-solver range, the twin-profile key must still
    agree with the plain class-multiset key."""
    for _ in range(120):
        g = random_graph(rng, rng.randint(7, 8), p=rng.choice((0.3, 0.5, 0.7)))
        for k in range(2, 6):
            a = ann_wins(g, k, canon="classes", want_line=False).ann_wins
            b = ann_wins(g, k, canon="twins", want_line=False).ann_wins
            assert a == b, (g.edges(), k)


def test_budget_propagates_through_match():
    g = make_named("Petersen")
    from indicated.strategies import strat_degeneracy

    with pytest.raises(ResourceBudgetExceeded):
        play_match(g, 4, strat_degeneracy(g, 4), node_budget=3)


def test_winnable_at_coloring_number(rng):
    """Solver-level check of the greedy bound: every graph is winnable for
    k >= col(G), independent of the strategy layer."""
    from indicated.graphs import degeneracy

    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 7))
        col = degeneracy(g).col
        assert ann_wins(g, col, want_line=False).ann_wins
        assert ann_wins(g, col + 1, want_line=False).ann_wins


def test_omega_exact_brute_oracle(rng):
    from itertools import combinations

    def brute_omega(g):
        for size in range(g.n, 0, -1):
            for cand in combinations(range(g.n), size):
                if all(g.has_edge(u, v) for i, u in enumerate(cand)
                       for v in cand[i + 1:]):
                    return size
        return 0

    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 8))
        assert omega_exact(g) == brute_omega(g)


def test_known_instances_corroborate_engine():
    pet = make_named("Petersen")
    assert [ann_wins(pet, k, want_line=False).ann_wins for k in (2, 3, 4, 5)] \
        == [False, True, True, True]
    g = complete_expansion(make_named("C", 6), (2,) * 6)
    res = chi_i(g, 6, canon="twins")
    assert res.chi_i == 4
    assert res.winnable == {1: False, 2: False, 3: False,
                            4: True, 5: True, 6: True}
